use rug::{Float, Rational};

use super::poly::RationalPoly;
use crate::error::{Error, Result};

/// Minimal ring interface for the closed-form resultant.
pub trait RingElement: Clone {
    fn mul_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn is_zero_elem(&self) -> bool;
}

impl RingElement for Rational {
    fn mul_ref(&self, other: &Self) -> Self {
        Rational::from(self * other)
    }
    fn sub_ref(&self, other: &Self) -> Self {
        Rational::from(self - other)
    }
    fn is_zero_elem(&self) -> bool {
        *self == 0
    }
}

impl RingElement for Float {
    fn mul_ref(&self, other: &Self) -> Self {
        Float::with_val(self.prec().max(other.prec()), self * other)
    }
    fn sub_ref(&self, other: &Self) -> Self {
        Float::with_val(self.prec().max(other.prec()), self - other)
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
}

impl RingElement for RationalPoly {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
}

/// `a·τ² + b·τ + c`.
#[derive(Clone, Debug, PartialEq)]
pub struct Quadratic<T> {
    pub a: T,
    pub b: T,
    pub c: T,
}

impl<T> Quadratic<T> {
    pub fn new(a: T, b: T, c: T) -> Self {
        Quadratic { a, b, c }
    }
}

/// Resultant in τ of two quadratics:
/// `(a₁c₂ − a₂c₁)² − (a₁b₂ − a₂b₁)(b₁c₂ − b₂c₁)`.
pub fn resultant_quadratics<T: RingElement>(q1: &Quadratic<T>, q2: &Quadratic<T>) -> Result<T> {
    if q1.a.is_zero_elem() || q2.a.is_zero_elem() {
        return Err(Error::DegenerateLeading("quadratic in τ has zero τ² coefficient".into()));
    }
    let ac = q1.a.mul_ref(&q2.c).sub_ref(&q2.a.mul_ref(&q1.c));
    let ab = q1.a.mul_ref(&q2.b).sub_ref(&q2.a.mul_ref(&q1.b));
    let bc = q1.b.mul_ref(&q2.c).sub_ref(&q2.b.mul_ref(&q1.c));
    Ok(ac.mul_ref(&ac).sub_ref(&ab.mul_ref(&bc)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    fn q(a: i64, b: i64, c: i64) -> Quadratic<Rational> {
        Quadratic::new(Rational::from(a), Rational::from(b), Rational::from(c))
    }

    #[test]
    fn examples() {
        assert_eq!(resultant_quadratics(&q(1, 0, -1), &q(1, 0, -1)).unwrap(), 0);
        assert_eq!(resultant_quadratics(&q(1, -3, 2), &q(1, 0, -1)).unwrap(), 0);
        assert_eq!(resultant_quadratics(&q(1, 0, 1), &q(1, 0, 4)).unwrap(), 9);
    }

    #[test]
    fn product_of_root_differences() {
        // Res = a1² a2² Π (r_i − s_j); roots {1, 2} vs {3, 5}: (−2)(−4)(−1)(−3) = 24
        let r = resultant_quadratics(&q(1, -3, 2), &q(1, -8, 15)).unwrap();
        assert_eq!(r, 24);
        let scaled = resultant_quadratics(&q(2, -6, 4), &q(1, -8, 15)).unwrap();
        assert_eq!(scaled, rat(96, 1));
    }

    #[test]
    fn degenerate_leading_rejected() {
        assert!(resultant_quadratics(&q(0, 1, 1), &q(1, 0, 1)).is_err());
    }

    #[test]
    fn polynomial_coefficients() {
        // τ² − x and τ² − 1 share a root iff x = 1: Res = (1 − x)²
        let one = RationalPoly::one();
        let zero = RationalPoly::zero();
        let q1 = Quadratic::new(one.clone(), zero.clone(), RationalPoly::from_i64s(&[0, -1]));
        let q2 = Quadratic::new(one.clone(), zero, RationalPoly::from_i64s(&[-1]));
        let r = resultant_quadratics(&q1, &q2).unwrap();
        assert_eq!(r, RationalPoly::from_i64s(&[1, -2, 1]));
    }
}
