//! Argument parsing: exact rationals, index ranges, real ranges.

use rug::{Float, Integer, Rational};

use crate::error::{CliError, CliResult};

/// Parses `"p/q"`, an integer, or a decimal literal (`1.25`, `-3e-4`) into an
/// exact rational. Decimals are converted by their digits, never through binary.
pub fn parse_rational(s: &str) -> CliResult<Rational> {
    let t = s.trim();
    let bad = || CliError::usage(format!("not a rational or decimal literal: {s:?}"));
    if t.is_empty() {
        return Err(bad());
    }
    if let Some((num, den)) = t.split_once('/') {
        let num = parse_signed_integer(num).ok_or_else(bad)?;
        if den.is_empty() || !den.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let den: Integer = den.parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(CliError::usage(format!("zero denominator in {s:?}")));
        }
        return Ok(Rational::from((num, den)));
    }
    parse_decimal(t).ok_or_else(bad)
}

fn parse_signed_integer(s: &str) -> Option<Integer> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let v: Integer = digits.parse().ok()?;
    Some(if s.starts_with('-') { -v } else { v })
}

fn parse_decimal(s: &str) -> Option<Rational> {
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let negative = mantissa.starts_with('-');
    let body = mantissa.strip_prefix(['+', '-']).unwrap_or(mantissa);
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    let all_digits = |p: &str| p.bytes().all(|b| b.is_ascii_digit());
    if !all_digits(int_part) || !all_digits(frac_part) {
        return None;
    }
    let digits: Integer = format!("{int_part}{frac_part}").parse().ok()?;
    let scale = exp - frac_part.len() as i32;
    let mut r = Rational::from(digits);
    let power = Integer::from(Integer::u_pow_u(10, scale.unsigned_abs()));
    if scale >= 0 {
        r *= power;
    } else {
        r /= power;
    }
    Some(if negative { -r } else { r })
}

/// Comma-separated items, each `n`, `a..b` or `a..=b` (both inclusive).
pub fn parse_indices(s: &str) -> CliResult<Vec<usize>> {
    let bad = || CliError::usage(format!("bad index list {s:?}; use n, a..b or a,b,c"));
    let mut out = Vec::new();
    for item in s.split(',') {
        let item = item.trim();
        if let Some((a, b)) = item.split_once("..") {
            let b = b.strip_prefix('=').unwrap_or(b);
            let (a, b): (usize, usize) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
            if a > b {
                return Err(CliError::usage(format!("empty range {item:?}")));
            }
            out.extend(a..=b);
        } else {
            out.push(item.parse().map_err(|_| bad())?);
        }
    }
    Ok(out)
}

/// Comma-separated rationals.
pub fn parse_rational_list(s: &str) -> CliResult<Vec<Rational>> {
    s.split(',').map(parse_rational).collect()
}

/// `lo..hi` with `lo < hi`, both exact.
pub fn parse_real_range(s: &str) -> CliResult<(Rational, Rational)> {
    // skip a leading sign so "-8..8" splits at the right place
    let split = s
        .char_indices()
        .skip(1)
        .find(|&(i, _)| s[i..].starts_with(".."))
        .map(|(i, _)| i)
        .ok_or_else(|| CliError::usage(format!("bad range {s:?}; use lo..hi")))?;
    let lo = parse_rational(&s[..split])?;
    let hi = parse_rational(&s[split + 2..])?;
    if lo >= hi {
        return Err(CliError::usage(format!("empty range {s:?}")));
    }
    Ok((lo, hi))
}

/// A positive tolerance such as `1e-4` or `1/1000`.
pub fn parse_tolerance(s: &str, prec: u32) -> CliResult<Float> {
    let r = parse_rational(s)?;
    if r.cmp0() != std::cmp::Ordering::Greater {
        return Err(CliError::usage(format!("tolerance must be positive, got {s}")));
    }
    Ok(Float::with_val(prec, &r))
}
