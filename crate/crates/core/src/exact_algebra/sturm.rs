use std::cmp::Ordering;

use rug::{Integer, Rational};

use super::poly::{make_primitive, RationalPoly};
use crate::error::{Error, Result};

/// Sturm chain `p, p′, −rem(p, p′), …` kept as primitive integer polynomials.
///
/// Each element is a positive multiple of the classical negated remainder, so
/// sign variations are unchanged.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<Vec<Integer>>,
    degenerate: bool,
}

impl SturmChain {
    /// Builds the chain of the square-free part of `p`.
    pub fn new(p: &RationalPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial("Sturm chain"));
        }
        let chain = build_chain(p.primitive_integer());
        let last = chain.last().expect("chain has at least p");
        if last.len() > 1 {
            // gcd(p, p′) is non-constant: reduce to the square-free part.
            let g = RationalPoly::from_integers(last);
            let sf = p.div_exact(&g)?;
            let chain = build_chain(sf.primitive_integer());
            return Ok(SturmChain {
                chain,
                degenerate: true,
            });
        }
        Ok(SturmChain {
            chain,
            degenerate: false,
        })
    }

    /// Whether square-free reduction was needed.
    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    pub fn polys(&self) -> Vec<RationalPoly> {
        self.chain.iter().map(|c| RationalPoly::from_integers(c)).collect()
    }

    /// The square-free polynomial heading the chain.
    pub fn head(&self) -> RationalPoly {
        RationalPoly::from_integers(&self.chain[0])
    }

    /// Sign variations of the chain at `x`, zeros skipped.
    pub fn variations_at(&self, x: &Rational) -> usize {
        let max_deg = self.chain.iter().map(|c| c.len()).max().unwrap_or(1);
        let num = x.numer();
        let den = x.denom();
        let mut den_pows = Vec::with_capacity(max_deg);
        let mut acc = Integer::from(1);
        for _ in 0..max_deg {
            den_pows.push(acc.clone());
            acc *= den;
        }
        let mut count = 0;
        let mut last = Ordering::Equal;
        for p in &self.chain {
            let s = homogeneous_sign(p, num, &den_pows);
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct real roots in the half-open interval `(lo, hi]`.
    pub fn count_roots(&self, lo: &Rational, hi: &Rational) -> Result<usize> {
        if lo >= hi {
            return Err(Error::InvalidInterval(format!("({lo}, {hi}]")));
        }
        let a = self.variations_at(lo);
        let b = self.variations_at(hi);
        Ok(a.saturating_sub(b))
    }

    /// Sign of the head polynomial at `x`.
    pub fn sign_at(&self, x: &Rational) -> Ordering {
        let d = self.chain[0].len();
        let mut den_pows = Vec::with_capacity(d);
        let mut acc = Integer::from(1);
        for _ in 0..d {
            den_pows.push(acc.clone());
            acc *= x.denom();
        }
        homogeneous_sign(&self.chain[0], x.numer(), &den_pows)
    }

    /// Disjoint intervals `(lo_i, hi_i]` each holding exactly one root,
    /// refined by exact bisection to width below `tol`. Exact roots found on
    /// a bisection point come back as degenerate intervals `[r, r]`.
    pub fn isolate(&self, lo: &Rational, hi: &Rational, tol: &Rational) -> Result<Vec<(Rational, Rational)>> {
        let mut out = Vec::new();
        let mut stack = vec![(lo.clone(), hi.clone())];
        while let Some((a, b)) = stack.pop() {
            let k = self.count_roots(&a, &b)?;
            if k == 0 {
                continue;
            }
            if k == 1 {
                out.push(self.refine(a, b, tol));
                continue;
            }
            let mid = Rational::from(&a + &b) / 2u32;
            stack.push((mid.clone(), b));
            stack.push((a, mid));
        }
        out.sort_by(|x, y| x.0.cmp(&y.0));
        Ok(out)
    }

    fn refine(&self, mut a: Rational, mut b: Rational, tol: &Rational) -> (Rational, Rational) {
        // single root in (a, b]
        if self.sign_at(&b) == Ordering::Equal {
            return (b.clone(), b);
        }
        while Rational::from(&b - &a) >= *tol {
            let mid = Rational::from(&a + &b) / 2u32;
            let s_mid = self.sign_at(&mid);
            if s_mid == Ordering::Equal {
                return (mid.clone(), mid);
            }
            if self.count_roots(&a, &mid).unwrap_or(0) == 1 {
                b = mid;
            } else {
                a = mid;
            }
        }
        (a, b)
    }
}

/// Number of distinct real roots of `p` in `(lo, hi]`.
pub fn sturm_count_roots(p: &RationalPoly, lo: &Rational, hi: &Rational) -> Result<usize> {
    SturmChain::new(p)?.count_roots(lo, hi)
}

fn homogeneous_sign(p: &[Integer], num: &Integer, den_pows: &[Integer]) -> Ordering {
    // den^d · p(num/den) = Σ c_i num^i den^(d−i)
    let d = p.len() - 1;
    let mut acc = p[d].clone();
    for i in (0..d).rev() {
        acc *= num;
        if p[i] != 0 {
            acc += Integer::from(&p[i] * &den_pows[d - i]);
        }
    }
    acc.cmp0()
}

fn build_chain(p: Vec<Integer>) -> Vec<Vec<Integer>> {
    let mut dp: Vec<Integer> = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| Integer::from(c * i as u64))
        .collect();
    let mut chain = vec![p];
    if dp.is_empty() {
        return chain;
    }
    make_primitive(&mut dp);
    chain.push(dp);
    loop {
        let n = chain.len();
        let (sign_factor, mut r) = pseudo_remainder(&chain[n - 2], &chain[n - 1]);
        if r.is_empty() {
            break;
        }
        // next = −rem, rem = r / lc^k; only the sign of lc^k matters.
        if sign_factor == Ordering::Greater {
            for c in r.iter_mut() {
                *c = -std::mem::take(c);
            }
        }
        make_primitive(&mut r);
        let done = r.len() == 1;
        chain.push(r);
        if done {
            break;
        }
    }
    chain
}

/// Primitive gcd of two integer polynomials (empty for two zeros).
pub(crate) fn integer_gcd(a: &[Integer], b: &[Integer]) -> Vec<Integer> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let (_, mut r) = pseudo_remainder(&a, &b);
        make_primitive(&mut r);
        a = b;
        b = r;
    }
    make_primitive(&mut a);
    a
}

/// Returns `(sign(lc(b)^k), r)` with `lc(b)^k · a = q·b + r`.
fn pseudo_remainder(a: &[Integer], b: &[Integer]) -> (Ordering, Vec<Integer>) {
    let lc = b.last().expect("nonzero divisor");
    let lc_sign = lc.cmp0();
    let mut sign = Ordering::Greater;
    let mut r = a.to_vec();
    while r.len() >= b.len() {
        let top = r.last().unwrap();
        if *top == 0 {
            r.pop();
            continue;
        }
        let shift = r.len() - b.len();
        let coef = top.clone();
        for c in r.iter_mut() {
            *c *= lc;
        }
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= Integer::from(&coef * bj);
        }
        r.pop();
        if lc_sign == Ordering::Less {
            sign = sign.reverse();
        }
    }
    while r.last().is_some_and(|c| *c == 0) {
        r.pop();
    }
    (sign, r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    #[test]
    fn count_examples() {
        let p = RationalPoly::new(vec![rat(-1, 4), rat(0, 1), rat(1, 1)]);
        assert_eq!(sturm_count_roots(&p, &rat(0, 1), &rat(1, 1)).unwrap(), 1);
        let q = RationalPoly::from_i64s(&[1, 0, 1]);
        assert_eq!(sturm_count_roots(&q, &rat(-10, 1), &rat(10, 1)).unwrap(), 0);
    }

    #[test]
    fn half_open_convention() {
        // roots at 0 and 1
        let p = RationalPoly::from_i64s(&[0, -1, 1]);
        assert_eq!(sturm_count_roots(&p, &rat(0, 1), &rat(1, 1)).unwrap(), 1);
        assert_eq!(sturm_count_roots(&p, &rat(-1, 1), &rat(0, 1)).unwrap(), 1);
        assert_eq!(sturm_count_roots(&p, &rat(-1, 1), &rat(1, 1)).unwrap(), 2);
    }

    #[test]
    fn repeated_roots_counted_once() {
        // (x − 1/2)²(x + 3)
        let a = RationalPoly::new(vec![rat(-1, 2), rat(1, 1)]);
        let p = &(&a * &a) * &RationalPoly::from_i64s(&[3, 1]);
        let chain = SturmChain::new(&p).unwrap();
        assert!(chain.is_degenerate());
        assert_eq!(chain.count_roots(&rat(-5, 1), &rat(5, 1)).unwrap(), 2);
        assert_eq!(chain.count_roots(&rat(0, 1), &rat(1, 1)).unwrap(), 1);
    }

    #[test]
    fn chain_is_negated_remainder_sequence() {
        let p = RationalPoly::from_i64s(&[-3, 5, 2, -7, 1, 1]);
        let chain = SturmChain::new(&p).unwrap();
        let polys = chain.polys();
        assert!(!chain.is_degenerate());
        assert_eq!(polys.last().unwrap().degree(), Some(0));
        for w in polys.windows(3) {
            let (_, r) = w[0].div_rem(&w[1]).unwrap();
            // r = −c · w[2] with c > 0
            let ratio = Rational::from(r.leading().unwrap() / w[2].leading().unwrap());
            assert!(ratio < 0);
            assert_eq!(r, w[2].scale(&ratio));
        }
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert!(SturmChain::new(&RationalPoly::zero()).is_err());
    }

    #[test]
    fn isolation_brackets_each_root() {
        // (3x² − 1)(x − 1/5)
        let p = &RationalPoly::from_i64s(&[-1, 0, 3]) * &RationalPoly::new(vec![rat(-1, 5), rat(1, 1)]);
        let chain = SturmChain::new(&p).unwrap();
        let iv = chain.isolate(&rat(-1, 1), &rat(1, 1), &rat(1, 1 << 30)).unwrap();
        assert_eq!(iv.len(), 3);
        let r = 1.0 / 3f64.sqrt();
        let mids: Vec<f64> = iv.iter().map(|(a, b)| (a.to_f64() + b.to_f64()) / 2.0).collect();
        assert!((mids[0] + r).abs() < 1e-8);
        assert!((mids[1] - 0.2).abs() < 1e-8);
        assert!((mids[2] - r).abs() < 1e-8);
    }
}
