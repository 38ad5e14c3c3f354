//! Working-precision reals and exact parameters.

use std::cmp::Ordering;
use std::fmt;

use rug::ops::Pow;
use rug::{Float, Rational};

use crate::error::{Error, Result};

pub const MIN_PRECISION: u32 = 53;
pub const DEFAULT_PRECISION: u32 = 128;
pub const HIGH_PRECISION: u32 = 256;

pub fn check_precision(bits: u32) -> Result<()> {
    if bits < MIN_PRECISION {
        Err(Error::PrecisionTooLow(bits))
    } else {
        Ok(())
    }
}

/// Escalates to 256 bits near the endpoint `|x| > 0.9` or for `n > 50`,
/// where cancellation in `Δ_n` is worst.
pub fn auto_precision(requested: u32, n: usize, x: &Float) -> u32 {
    if x.clone().abs() > 0.9 || n > 50 {
        requested.max(HIGH_PRECISION)
    } else {
        requested
    }
}

/// Shorthand for an exact rational `num/den`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::from((num, den))
}

pub fn float(prec: u32, v: impl Into<FloatSource>) -> Float {
    match v.into() {
        FloatSource::Rational(r) => Float::with_val(prec, &r),
        FloatSource::Float(f) => Float::with_val(prec, &f),
        FloatSource::I64(i) => Float::with_val(prec, i),
        FloatSource::F64(d) => Float::with_val(prec, d),
    }
}

/// Anything [`float`] can lift to a working-precision value.
pub enum FloatSource {
    Rational(Rational),
    Float(Float),
    I64(i64),
    F64(f64),
}

impl From<Rational> for FloatSource {
    fn from(v: Rational) -> Self {
        FloatSource::Rational(v)
    }
}
impl From<&Rational> for FloatSource {
    fn from(v: &Rational) -> Self {
        FloatSource::Rational(v.clone())
    }
}
impl From<Float> for FloatSource {
    fn from(v: Float) -> Self {
        FloatSource::Float(v)
    }
}
impl From<&Float> for FloatSource {
    fn from(v: &Float) -> Self {
        FloatSource::Float(v.clone())
    }
}
impl From<i64> for FloatSource {
    fn from(v: i64) -> Self {
        FloatSource::I64(v)
    }
}
impl From<f64> for FloatSource {
    fn from(v: f64) -> Self {
        FloatSource::F64(v)
    }
}

/// `2^exp` at the given precision.
pub fn pow2(exp: i32, prec: u32) -> Float {
    Float::with_val(prec, Float::i_exp(1, exp))
}

/// `|x|^θ` with the limit value 0 at `x = 0` for `θ > 0`.
pub fn abs_pow(x: &Float, theta: &Float) -> Float {
    let prec = x.prec().max(theta.prec());
    if theta.is_zero() {
        return Float::with_val(prec, 1);
    }
    if x.is_zero() {
        return Float::with_val(prec, 0);
    }
    let ax = Float::with_val(prec, x.abs_ref());
    ax.pow(theta)
}

/// Number of significant decimal digits carried by `prec` bits.
pub fn decimal_digits(prec: u32) -> usize {
    ((prec as f64) * std::f64::consts::LOG10_2).floor() as usize
}

/// Decimal rendering with a digit count derived from the value's precision.
pub fn to_decimal(v: &Float) -> String {
    to_decimal_digits(v, decimal_digits(v.prec()))
}

/// Decimal rendering with an explicit number of significant digits,
/// trailing zeros trimmed; positional for exponents −5..21.
pub fn to_decimal_digits(v: &Float, digits: usize) -> String {
    if v.is_zero() {
        return "0".into();
    }
    if !v.is_finite() {
        return if v.is_nan() {
            "nan".into()
        } else if v.is_sign_negative() {
            "-inf".into()
        } else {
            "inf".into()
        };
    }
    let raw = v.to_string_radix(10, Some(digits.max(1)));
    let (negative, body) = match raw.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, raw.as_str()),
    };
    let (mantissa, exp) = match body.split_once('e') {
        Some((m, e)) => (m, e.parse::<i64>().expect("rug writes integer exponents")),
        None => (body, 0),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    // value = 0.D × 10^point
    let mut d: String = format!("{int_part}{frac_part}");
    let mut point = exp + int_part.len() as i64;
    let lead = d.len() - d.trim_start_matches('0').len();
    d.drain(..lead);
    point -= lead as i64;
    let trimmed = d.trim_end_matches('0');
    let d = if trimmed.is_empty() { "0" } else { trimmed };
    let sign = if negative { "-" } else { "" };
    let n = d.len() as i64;
    if (-5..=21).contains(&point) {
        if point <= 0 {
            format!("{sign}0.{}{d}", "0".repeat((-point) as usize))
        } else if point >= n {
            format!("{sign}{d}{}", "0".repeat((point - n) as usize))
        } else {
            let (a, b) = d.split_at(point as usize);
            format!("{sign}{a}.{b}")
        }
    } else {
        let (a, b) = d.split_at(1);
        let sep = if b.is_empty() { "" } else { "." };
        format!("{sign}{a}{sep}{b}e{}", point - 1)
    }
}

/// A family or rule parameter: exact when the caller supplied a rational,
/// otherwise a real at its own precision.
#[derive(Clone, Debug, PartialEq)]
pub enum Param {
    Exact(Rational),
    Real(Float),
}

impl Param {
    pub fn ratio(num: i64, den: i64) -> Self {
        Param::Exact(rat(num, den))
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Param::Exact(r) => Some(r),
            Param::Real(_) => None,
        }
    }

    pub fn require_rational(&self) -> Result<&Rational> {
        self.as_rational()
            .ok_or_else(|| Error::NotRational(self.to_string()))
    }

    pub fn to_float(&self, prec: u32) -> Float {
        match self {
            Param::Exact(r) => Float::with_val(prec, r),
            Param::Real(f) => Float::with_val(prec, f),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Param::Exact(r) => r.to_f64(),
            Param::Real(f) => f.to_f64(),
        }
    }

    pub fn signum(&self) -> Ordering {
        match self {
            Param::Exact(r) => r.cmp0(),
            Param::Real(f) => f.cmp0().unwrap_or(Ordering::Equal),
        }
    }

    /// Compares against an exact rational threshold.
    pub fn cmp_rational(&self, other: &Rational) -> Ordering {
        match self {
            Param::Exact(r) => r.cmp(other),
            Param::Real(f) => f.partial_cmp(other).unwrap_or(Ordering::Equal),
        }
    }
}

impl From<Rational> for Param {
    fn from(r: Rational) -> Self {
        Param::Exact(r)
    }
}

impl From<i64> for Param {
    fn from(v: i64) -> Self {
        Param::Exact(Rational::from(v))
    }
}

impl From<Float> for Param {
    fn from(f: Float) -> Self {
        Param::Real(f)
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Exact(r) => write!(f, "{r}"),
            Param::Real(v) => write!(f, "{}", to_decimal(v)),
        }
    }
}

/// `count` equally spaced points covering `[lo, hi]` including both ends.
pub fn uniform_grid(lo: &Float, hi: &Float, count: usize, prec: u32) -> Vec<Float> {
    if count == 0 {
        return Vec::new();
    }
    if count == 1 {
        return vec![Float::with_val(prec, lo)];
    }
    let width = Float::with_val(prec, hi - lo);
    (0..count)
        .map(|i| {
            let frac = Float::with_val(prec, i as u64) / (count as u64 - 1);
            Float::with_val(prec, lo) + frac * &width
        })
        .collect()
}

/// Uniform grid on `[lo, hi]` densified toward `hi` by the points
/// `hi − (hi − lo)·2^(−k)`. Sorted ascending, duplicates removed.
pub fn clustered_grid(lo: &Float, hi: &Float, count: usize, prec: u32) -> Vec<Float> {
    let clustered = (count / 4).min(prec.saturating_sub(8) as usize);
    let mut pts = uniform_grid(lo, hi, count - clustered, prec);
    let width = Float::with_val(prec, hi - lo);
    for k in 1..=clustered {
        let step = Float::with_val(prec, &width * pow2(-(k as i32), prec));
        pts.push(Float::with_val(prec, hi - step));
    }
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal));
    pts.dedup();
    pts
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abs_pow_handles_zero_and_sign() {
        let th = Float::with_val(128, 1.5);
        assert!(abs_pow(&Float::with_val(128, 0), &th).is_zero());
        let v = abs_pow(&Float::with_val(128, -4), &th);
        assert_eq!(v, 8);
    }

    #[test]
    fn precision_floor() {
        assert!(check_precision(52).is_err());
        assert!(check_precision(53).is_ok());
    }

    #[test]
    fn escalation_near_endpoint() {
        assert_eq!(auto_precision(128, 3, &Float::with_val(64, 0.5)), 128);
        assert_eq!(auto_precision(128, 3, &Float::with_val(64, 0.95)), 256);
        assert_eq!(auto_precision(128, 51, &Float::with_val(64, 0.1)), 256);
    }

    #[test]
    fn clustered_grid_reaches_toward_endpoint() {
        let g = clustered_grid(&Float::with_val(256, 0), &Float::with_val(256, 1), 4096, 256);
        assert!(g.len() > 4000);
        assert_eq!(g[0], 0);
        assert_eq!(*g.last().unwrap(), 1);
        let near = Float::with_val(256, 1) - pow2(-100, 256);
        let close = g.iter().filter(|x| **x < 1 && **x > near).count();
        assert!(close > 0);
        assert!(g.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn param_display() {
        assert_eq!(Param::ratio(-1, 4).to_string(), "-1/4");
        assert_eq!(Param::ratio(2, 4).to_string(), "1/2");
    }
}
