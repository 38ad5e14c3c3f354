use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::{Float, Integer, Rational};

use crate::error::{Error, Result};

/// Dense univariate polynomial over ℚ. `coeffs[i]` multiplies `x^i`; the
/// zero polynomial is the empty vector and the leading coefficient of any
/// other polynomial is nonzero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RationalPoly {
    coeffs: Vec<Rational>,
}

impl RationalPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| *c == 0) {
            coeffs.pop();
        }
        RationalPoly { coeffs }
    }

    pub fn zero() -> Self {
        RationalPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::from(1))
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::from(1), 1)
    }

    pub fn monomial(c: Rational, power: usize) -> Self {
        let mut coeffs = vec![Rational::new(); power + 1];
        coeffs[power] = c;
        Self::new(coeffs)
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::new();
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    pub fn eval_float(&self, x: &Float) -> Float {
        let prec = x.prec();
        let mut acc = Float::with_val(prec, 0);
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| Rational::from(c * i as u64))
                .collect(),
        )
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| Rational::from(c * k)).collect())
    }

    /// `p(α·x + β)`.
    pub fn compose_linear(&self, alpha: &Rational, beta: &Rational) -> Self {
        let lin = Self::new(vec![beta.clone(), alpha.clone()]);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Self::constant(c.clone());
        }
        acc
    }

    /// `p(s^v)`, degree multiplies by `v`.
    pub fn substitute_power(&self, v: usize) -> Self {
        assert!(v >= 1, "substitution power must be positive");
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::new(); (self.coeffs.len() - 1) * v + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * v] = c.clone();
        }
        Self::new(coeffs)
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::new(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    /// Euclidean division `self = q·d + r`, `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dl = d.leading().ok_or(Error::ZeroPolynomial("division"))?.clone();
        let dd = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![Rational::new(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let top = &r[k + dd];
            if *top == 0 {
                continue;
            }
            let f = Rational::from(top / &dl);
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] -= Rational::from(&f * dc);
            }
            q[k] = f;
        }
        r.truncate(dd);
        Ok((Self::new(q), Self::new(r)))
    }

    /// Exact quotient; errors when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return Err(Error::Hypothesis("inexact polynomial division".into()));
        }
        Ok(q)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => {
                let inv = Rational::from(l.recip_ref());
                self.scale(&inv)
            }
        }
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let g = super::sturm::integer_gcd(&a.primitive_integer(), &b.primitive_integer());
        Self::from_integers(&g).monic()
    }

    /// Yun's square-free decomposition: `(k, f_k)` with `self = c·∏ f_k^k`,
    /// each `f_k` monic, square-free and of positive degree.
    pub fn square_free_decomposition(&self) -> Result<Vec<(usize, Self)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("square-free decomposition"));
        }
        let mut out = Vec::new();
        let d = self.derivative();
        let a0 = Self::gcd(self, &d);
        let mut b = self.div_exact(&a0)?.monic();
        let mut c = d.div_exact(&a0)?.scale(&Rational::from(self.div_exact(&a0)?.leading().expect("nonzero").recip_ref()));
        let mut k = 1;
        while b.degree().unwrap_or(0) > 0 {
            let dd = &c - &b.derivative();
            let f = Self::gcd(&b, &dd);
            if f.degree().unwrap_or(0) > 0 {
                out.push((k, f.clone()));
            }
            b = b.div_exact(&f)?;
            c = dd.div_exact(&f)?;
            k += 1;
        }
        Ok(out)
    }

    /// Strips the factor `(1 − s)^m` with `m` maximal: returns `(m, q)` with
    /// `p = (1 − s)^m · q` and `q(1) ≠ 0`.
    pub fn deflate_at_one(&self) -> Result<(usize, Self)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("deflation at 1"));
        }
        let mut m = 0;
        let mut cur = self.clone();
        loop {
            // Synthetic division by (s − 1): q_{k−1} = c_k + q_k.
            let n = cur.coeffs.len();
            if n == 1 {
                break;
            }
            let mut q = vec![Rational::new(); n - 1];
            let mut carry = Rational::new();
            for k in (1..n).rev() {
                carry += &cur.coeffs[k];
                q[k - 1] = carry.clone();
            }
            let remainder = carry + &cur.coeffs[0];
            if remainder != 0 {
                break;
            }
            // p = (s − 1)·q = (1 − s)·(−q)
            cur = -Self::new(q);
            m += 1;
        }
        Ok((m, cur))
    }

    /// Clears denominators and removes the integer content, keeping the sign.
    pub fn primitive_integer(&self) -> Vec<Integer> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut lcm = Integer::from(1);
        for c in &self.coeffs {
            lcm.lcm_mut(c.denom());
        }
        let mut ints: Vec<Integer> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * Integer::from(&lcm / c.denom()) )
            .collect();
        make_primitive(&mut ints);
        ints
    }

    pub fn from_integers(coeffs: &[Integer]) -> Self {
        Self::new(coeffs.iter().map(|c| Rational::from(c.clone())).collect())
    }
}

/// Divides out the gcd of the coefficients (sign preserved).
pub(crate) fn make_primitive(p: &mut [Integer]) {
    let mut g = Integer::new();
    for c in p.iter() {
        g.gcd_mut(c);
        if g == 1 {
            return;
        }
    }
    if g > 1 {
        for c in p.iter_mut() {
            c.div_exact_mut(&g);
        }
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if *c == 0 {
                continue;
            }
            let neg = c.cmp0().is_lt();
            let mag = Rational::from(c.abs_ref());
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match (i, mag == 1) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a RationalPoly> for &'a RationalPoly {
    type Output = RationalPoly;
    fn add(self, rhs: &RationalPoly) -> RationalPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a RationalPoly> for &'a RationalPoly {
    type Output = RationalPoly;
    fn sub(self, rhs: &RationalPoly) -> RationalPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a RationalPoly> for &'a RationalPoly {
    type Output = RationalPoly;
    fn mul(self, rhs: &RationalPoly) -> RationalPoly {
        if self.is_zero() || rhs.is_zero() {
            return RationalPoly::zero();
        }
        let mut out = vec![Rational::new(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += Rational::from(a * b);
            }
        }
        RationalPoly::new(out)
    }
}

impl Neg for RationalPoly {
    type Output = RationalPoly;
    fn neg(self) -> RationalPoly {
        RationalPoly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RationalPoly> for RationalPoly {
            type Output = RationalPoly;
            fn $m(self, rhs: RationalPoly) -> RationalPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    fn p(c: &[i64]) -> RationalPoly {
        RationalPoly::from_i64s(c)
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&p(&[1, 1]) * &p(&[-1, 1]), p(&[-1, 0, 1]));
        assert_eq!(&p(&[0, 1, 1]) - &p(&[0, 1]), p(&[0, 0, 1]));
        assert_eq!(
            p(&[1, 0, 1]).scale(&rat(3, 2)),
            RationalPoly::new(vec![rat(3, 2), rat(0, 1), rat(3, 2)])
        );
    }

    #[test]
    fn square_free_parts() {
        // 3 (x − 1)(x + 2)² x³
        let f = &(&p(&[-1, 1]) * &(&p(&[2, 1]) * &p(&[2, 1]))) * &p(&[0, 0, 0, 3]);
        let parts = f.square_free_decomposition().unwrap();
        assert_eq!(parts, vec![(1, p(&[-1, 1])), (2, p(&[2, 1])), (3, p(&[0, 1]))]);
        assert!(p(&[5]).square_free_decomposition().unwrap().is_empty());
        assert_eq!(RationalPoly::gcd(&p(&[-1, 0, 1]), &p(&[1, 2, 1])), p(&[1, 1]));
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let z = p(&[0, 0, 0]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(p(&[1, 2, 0]).degree(), Some(1));
    }

    #[test]
    fn substitute_power_examples() {
        assert_eq!(p(&[-1, 1]).substitute_power(3), p(&[-1, 0, 0, 1]));
        let q = RationalPoly::new(vec![rat(-1, 2), rat(0, 1), rat(3, 2)]);
        assert_eq!(
            q.substitute_power(2),
            RationalPoly::new(vec![rat(-1, 2), rat(0, 1), rat(0, 1), rat(0, 1), rat(3, 2)])
        );
        assert_eq!(RationalPoly::one().substitute_power(7), RationalPoly::one());
    }

    #[test]
    fn deflate_examples() {
        // (1 − s)²(s + 2)
        let one_minus = p(&[1, -1]);
        let f = &(&one_minus * &one_minus) * &p(&[2, 1]);
        assert_eq!(f.deflate_at_one().unwrap(), (2, p(&[2, 1])));

        // s(1 − s⁴)/4
        let g = RationalPoly::new(vec![rat(0, 1), rat(1, 4), rat(0, 1), rat(0, 1), rat(0, 1), rat(-1, 4)]);
        let (m, q) = g.deflate_at_one().unwrap();
        assert_eq!(m, 1);
        assert_eq!(
            q,
            RationalPoly::new(vec![rat(0, 1), rat(1, 4), rat(1, 4), rat(1, 4), rat(1, 4)])
        );

        assert_eq!(p(&[2, 1]).deflate_at_one().unwrap(), (0, p(&[2, 1])));
        assert!(RationalPoly::zero().deflate_at_one().is_err());
    }

    #[test]
    fn division_and_gcd() {
        let a = &p(&[-1, 0, 1]) * &p(&[3, 1]);
        let (q, r) = a.div_rem(&p(&[-1, 1])).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, &p(&[1, 1]) * &p(&[3, 1]));
        let g = RationalPoly::gcd(&a, &p(&[-2, 0, 2]));
        assert_eq!(g, p(&[-1, 0, 1]));
    }

    #[test]
    fn compose_linear_shifts() {
        // (x² − 1)(2x + 1) -> (2x+1)² − 1 = 4x² + 4x
        let f = p(&[-1, 0, 1]).compose_linear(&rat(2, 1), &rat(1, 1));
        assert_eq!(f, p(&[0, 4, 4]));
    }

    #[test]
    fn display_is_readable() {
        let f = RationalPoly::new(vec![rat(-1, 2), rat(0, 1), rat(3, 2)]);
        assert_eq!(f.to_string(), "3/2*x^2 - 1/2");
    }
}
