//! Quadratic curves in `(x, τ)` attached to consecutive indices, their
//! branches, vertices, resultants and nesting.

use std::cmp::Ordering;

use rug::{Float, Rational};

use crate::error::{Error, Result};
use crate::exact_algebra::{resultant_quadratics, Quadratic, RationalPoly};
use crate::numeric::{abs_pow, check_precision, pow2, Param};

/// A pair of consecutive curves.
#[derive(Clone, Debug, PartialEq)]
pub enum Scheme {
    /// `(n+2λ)τ² − 2(n+λ)xτ + n x^θ` and `(n+2λ+1)x^θτ² − 2(n+λ+1)xτ + (n+1)`.
    Ultraspherical { lambda: Param, n: usize, theta: Param },
    /// `(1−a_n)τ² − xτ + a_n x^θ` and `(1−a_{n+1})x^θτ² − xτ + a_{n+1}`.
    SymmetricUnit { a_n: Param, a_next: Param, theta: Param },
    /// With `X = x²`, `d_k = a_k − a_{k−1}`:
    /// `(X+d_n)τ² − (X+d_n)xτ + a_nX` and `Xτ² − (X+d_{n+1})xτ + a_{n+1}(X+d_{n+1})`.
    Hermite { a_prev: Param, a_cur: Param, a_next: Param },
}

/// Selects `𝒯_n` or `𝒯_{n+1}` within a scheme.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    Current,
    Next,
}

impl Scheme {
    fn theta(&self) -> Option<&Param> {
        match self {
            Scheme::Ultraspherical { theta, .. } | Scheme::SymmetricUnit { theta, .. } => Some(theta),
            Scheme::Hermite { .. } => None,
        }
    }

    /// `(λ, n)` when the scheme is ultraspherical.
    pub fn ultraspherical_params(&self) -> Option<(&Param, usize)> {
        match self {
            Scheme::Ultraspherical { lambda, n, .. } => Some((lambda, *n)),
            _ => None,
        }
    }
}

/// Coefficients of the selected curve at `x`, as a quadratic in `τ`.
pub fn curve_quadratic(scheme: &Scheme, which: Which, x: &Float, prec: u32) -> Quadratic<Float> {
    let x = Float::with_val(prec, x);
    let f = |v: Float| Float::with_val(prec, v);
    match scheme {
        Scheme::Ultraspherical { lambda, n, theta } => {
            let l = lambda.to_float(prec);
            let w = abs_pow(&x, &theta.to_float(prec));
            let n = *n as u64;
            match which {
                Which::Current => Quadratic::new(
                    f(Float::with_val(prec, &l * 2u32) + n),
                    -f(Float::with_val(prec, &l + n) * 2u32 * &x),
                    f(w * n),
                ),
                Which::Next => Quadratic::new(
                    f(Float::with_val(prec, &l * 2u32) + (n + 1)) * &w,
                    -f(Float::with_val(prec, &l + (n + 1)) * 2u32 * &x),
                    Float::with_val(prec, n + 1),
                ),
            }
        }
        Scheme::SymmetricUnit { a_n, a_next, theta } => {
            let w = abs_pow(&x, &theta.to_float(prec));
            match which {
                Which::Current => {
                    let a = a_n.to_float(prec);
                    Quadratic::new(f(1 - a.clone()), -x.clone(), a * w)
                }
                Which::Next => {
                    let a = a_next.to_float(prec);
                    Quadratic::new(f(1 - a.clone()) * w, -x.clone(), a)
                }
            }
        }
        Scheme::Hermite { a_prev, a_cur, a_next } => {
            let (ap, ac, an) = (a_prev.to_float(prec), a_cur.to_float(prec), a_next.to_float(prec));
            let xx = Float::with_val(prec, x.square_ref());
            match which {
                Which::Current => {
                    let s = f(Float::with_val(prec, &xx + &ac) - &ap);
                    Quadratic::new(s.clone(), -f(s * &x), ac * xx)
                }
                Which::Next => {
                    let s = f(Float::with_val(prec, &xx + &an) - &ac);
                    Quadratic::new(xx, -f(s.clone() * &x), an * s)
                }
            }
        }
    }
}

/// Real branches of a curve at one abscissa, `lower ≤ upper`.
#[derive(Clone, Debug, PartialEq)]
pub struct Branches {
    pub discriminant: Float,
    /// `None` when the discriminant is negative.
    pub roots: Option<(Float, Float)>,
}

/// Roots in `τ`. Since every scheme has `b ≤ 0 < a` on `x > 0`,
/// the `+` root of `(−b ± √disc)/2a` is the upper branch.
pub fn branches(scheme: &Scheme, which: Which, x: &Float, prec: u32) -> Result<Branches> {
    let q = curve_quadratic(scheme, which, x, prec);
    quadratic_roots(&q, prec)
}

pub(crate) fn quadratic_roots(q: &Quadratic<Float>, prec: u32) -> Result<Branches> {
    if q.a.is_zero() {
        return Err(Error::DegenerateLeading("leading coefficient vanishes".into()));
    }
    let disc = Float::with_val(prec, q.b.square_ref()) - Float::with_val(prec, &q.a * &q.c) * 4u32;
    if disc < 0 {
        return Ok(Branches { discriminant: disc, roots: None });
    }
    let sq = Float::with_val(prec, disc.sqrt_ref());
    let two_a = Float::with_val(prec, &q.a * 2u32);
    let minus_b = Float::with_val(prec, -&q.b);
    let r1 = Float::with_val(prec, &minus_b - &sq) / &two_a;
    let r2 = Float::with_val(prec, &minus_b + &sq) / &two_a;
    let roots = if r1 <= r2 { (r1, r2) } else { (r2, r1) };
    Ok(Branches {
        discriminant: disc,
        roots: Some(roots),
    })
}

/// A point where the discriminant of one curve vanishes.
#[derive(Clone, Debug)]
pub struct Vertex {
    pub x_vertex: Float,
    pub tau_vertex: Float,
}

/// `x̃` (current curve) or `x₀` (next curve) and the double root there.
pub fn vertex(scheme: &Scheme, which: Which, prec: u32) -> Result<Vertex> {
    check_precision(prec)?;
    match scheme {
        Scheme::Ultraspherical { lambda, n, theta } => {
            let (lam, nn) = (lambda.to_float(prec), *n as u64);
            let k = match which {
                Which::Current => nn,
                Which::Next => nn + 1,
            };
            if k == 0 {
                return Err(Error::InvalidParameter("the n = 0 curve has no vertex".into()));
            }
            let t = theta.to_float(prec);
            let base = match (lambda.as_rational(), which) {
                (Some(l), _) => {
                    let k = Rational::from(k);
                    let l2 = Rational::from(l * 2u32);
                    let num = &k * (Rational::from(&k + &l2));
                    let den = Rational::from(&k + l);
                    Float::with_val(prec, &(num / Rational::from(den.square_ref())))
                }
                (None, _) => {
                    let num = Float::with_val(prec, &lam * 2u32) + k;
                    let den = Float::with_val(prec, &lam + k);
                    num * k / den.square()
                }
            };
            let x = vertex_power(&base, &t, lambda.signum() == Ordering::Equal, prec)?;
            let w = abs_pow(&x, &t);
            let tau = match which {
                Which::Current => {
                    Float::with_val(prec, &lam + nn) * &x / (Float::with_val(prec, &lam * 2u32) + nn)
                }
                Which::Next => {
                    Float::with_val(prec, &lam + (nn + 1)) * &x
                        / ((Float::with_val(prec, &lam * 2u32) + (nn + 1)) * w)
                }
            };
            Ok(Vertex { x_vertex: x, tau_vertex: tau })
        }
        Scheme::SymmetricUnit { a_n, a_next, theta } => {
            let a = match which {
                Which::Current => a_n.to_float(prec),
                Which::Next => a_next.to_float(prec),
            };
            let base = Float::with_val(prec, 1 - &a) * &a * 4u32;
            let t = theta.to_float(prec);
            let x = vertex_power(&base, &t, false, prec)?;
            let w = abs_pow(&x, &t);
            let tau = match which {
                Which::Current => Float::with_val(prec, &x / 2u32) / (1 - a),
                Which::Next => Float::with_val(prec, &x / 2u32) / (Float::with_val(prec, 1 - a) * w),
            };
            Ok(Vertex { x_vertex: x, tau_vertex: tau })
        }
        Scheme::Hermite { a_prev, a_cur, a_next } => {
            let (ap, ac, an) = (a_prev.to_float(prec), a_cur.to_float(prec), a_next.to_float(prec));
            let xx = match which {
                Which::Current => Float::with_val(prec, &ac * 3u32) + &ap,
                Which::Next => Float::with_val(prec, &an * 3u32) + &ac,
            };
            if xx <= 0 {
                return Err(Error::InvalidParameter("vertex abscissa is not real".into()));
            }
            let x = xx.sqrt();
            let tau = match which {
                Which::Current => Float::with_val(prec, &x / 2u32),
                Which::Next => Float::with_val(prec, &an * 2u32) / &x,
            };
            Ok(Vertex { x_vertex: x, tau_vertex: tau })
        }
    }
}

fn vertex_power(base: &Float, theta: &Float, chebyshev: bool, prec: u32) -> Result<Float> {
    if *theta == 2 && chebyshev {
        return Ok(Float::with_val(prec, 1));
    }
    if *theta >= 2 {
        return Err(Error::InvalidParameter("vertex needs theta < 2".into()));
    }
    let e = Float::with_val(prec, 1) / Float::with_val(prec, 2 - theta);
    Ok(Float::with_val(prec, rug::ops::Pow::pow(base, &e)))
}

/// `1/(2−θ)` for the Theorem-1 exponent: `1/2 − 1/λ` (λ<0), `1/2 + 1/(4λ)` (λ>0).
pub fn theorem1_vertex_exponent(lambda: &Rational) -> Result<Rational> {
    match lambda.cmp0() {
        Ordering::Less => Ok(Rational::from((1, 2)) - Rational::from(lambda.recip_ref())),
        Ordering::Greater => Ok(Rational::from((1, 2)) + Rational::from(lambda.recip_ref()) / 4u32),
        Ordering::Equal => Err(Error::InvalidParameter("exponent is unbounded at lambda = 0".into())),
    }
}

/// `A, B, C` as polynomials in `w = x^θ`, so that the resultant of the two
/// ultraspherical curves is `A² − 4x²BC`.
pub fn ultraspherical_abc(lambda: &Rational, n: usize) -> (RationalPoly, RationalPoly, RationalPoly) {
    let nn = Rational::from(n);
    let n1 = Rational::from(n + 1);
    let l2 = Rational::from(lambda * 2u32);
    let n2l = Rational::from(&nn + &l2);
    let n2l1 = Rational::from(&n2l + 1u32);
    let nl = Rational::from(&nn + lambda);
    let nl1 = Rational::from(&nl + 1u32);
    let a = RationalPoly::new(vec![
        Rational::from(&n2l * &n1),
        Rational::new(),
        -Rational::from(&nn * &n2l1),
    ]);
    let b = RationalPoly::new(vec![Rational::from(&nl * &n1), -Rational::from(&nn * &nl1)]);
    let c = RationalPoly::new(vec![Rational::from(&n2l * &nl1), -Rational::from(&nl * &n2l1)]);
    (a, b, c)
}

/// `R_n(x, θ)`, the resultant in `τ` of the two curves of the scheme.
pub fn resultant_rn(scheme: &Scheme, x: &Float, prec: u32) -> Result<Float> {
    match scheme {
        Scheme::Ultraspherical { lambda, n, theta } => {
            let lam = lambda.to_float(prec);
            let w = abs_pow(x, &theta.to_float(prec));
            let nn = *n as u64;
            let n2l = Float::with_val(prec, &lam * 2u32) + nn;
            let nl = Float::with_val(prec, &lam + nn);
            let a = Float::with_val(prec, &n2l * (nn + 1))
                - Float::with_val(prec, &n2l + 1u32) * nn * Float::with_val(prec, w.square_ref());
            let b = Float::with_val(prec, &nl * (nn + 1)) - Float::with_val(prec, &nl + 1u32) * nn * &w;
            let c = Float::with_val(prec, &n2l * Float::with_val(prec, &nl + 1u32))
                - Float::with_val(prec, &nl * Float::with_val(prec, &n2l + 1u32)) * &w;
            let x2 = Float::with_val(prec, x.square_ref());
            Ok(Float::with_val(prec, a.square_ref()) - x2 * b * c * 4u32)
        }
        Scheme::SymmetricUnit { a_n, a_next, theta } => {
            let (p, q) = (a_n.to_float(prec), a_next.to_float(prec));
            let w = abs_pow(x, &theta.to_float(prec));
            let (op, oq) = (Float::with_val(prec, 1 - &p), Float::with_val(prec, 1 - &q));
            let a = Float::with_val(prec, &op * &q)
                - Float::with_val(prec, &p * &oq) * Float::with_val(prec, w.square_ref());
            let b = Float::with_val(prec, &q - Float::with_val(prec, &p * &w));
            let c = op - oq * &w;
            let x2 = Float::with_val(prec, x.square_ref());
            Ok(Float::with_val(prec, a.square_ref()) - x2 * b * c)
        }
        Scheme::Hermite { .. } => resultant_rn_via_curves(scheme, x, prec),
    }
}

/// The same resultant computed from the curve coefficients directly.
pub fn resultant_rn_via_curves(scheme: &Scheme, x: &Float, prec: u32) -> Result<Float> {
    let q1 = curve_quadratic(scheme, Which::Current, x, prec);
    let q2 = curve_quadratic(scheme, Which::Next, x, prec);
    resultant_quadratics(&q1, &q2)
}

/// `R_n` as an exact polynomial in `s`, where `x = s^v` and `x^θ = s^u`
/// for `θ = u/v` in lowest terms.
#[derive(Clone, Debug, PartialEq)]
pub struct SymbolicResultant {
    pub poly: RationalPoly,
    pub u: usize,
    pub v: usize,
}

impl SymbolicResultant {
    /// Value at `x ≥ 0` (through `s = x^{1/v}`).
    pub fn eval_at_x(&self, x: &Float) -> Float {
        let prec = x.prec();
        let s = if self.v == 1 {
            x.clone()
        } else {
            Float::with_val(prec, rug::ops::Pow::pow(x, &(Float::with_val(prec, 1) / self.v as u32)))
        };
        self.poly.eval_float(&s)
    }
}

/// Exact resultant for rational parameters; the curve-coefficient route
/// is run alongside the closed form and the two must agree.
pub fn resultant_rn_symbolic(scheme: &Scheme) -> Result<SymbolicResultant> {
    let theta = scheme
        .theta()
        .ok_or_else(|| Error::InvalidParameter("use hermite_resultant_cubic for the Hermite scheme".into()))?
        .require_rational()?
        .clone();
    if theta.cmp0() == Ordering::Less {
        return Err(Error::InvalidParameter("theta must be nonnegative".into()));
    }
    let to_usize = |v: &rug::Integer| {
        v.to_usize()
            .ok_or_else(|| Error::InvalidParameter("theta numerator or denominator too large".into()))
    };
    let (u, v) = (to_usize(theta.numer())?, to_usize(theta.denom())?);
    let x_pow = RationalPoly::monomial(Rational::from(1), v);
    let (closed, q1, q2) = match scheme {
        Scheme::Ultraspherical { lambda, n, .. } => {
            let l = lambda.require_rational()?;
            let (a, b, c) = ultraspherical_abc(l, *n);
            let (a, b, c) = (a.substitute_power(u), b.substitute_power(u), c.substitute_power(u));
            let x2 = RationalPoly::monomial(Rational::from(4), 2 * v);
            let closed = &(&a * &a) - &(&(&x2 * &b) * &c);
            let nn = Rational::from(*n);
            let n2l = &nn + Rational::from(l * 2u32);
            let nl = Rational::from(&nn + l);
            let w = RationalPoly::monomial(Rational::from(1), u);
            let q1 = Quadratic::new(
                RationalPoly::constant(n2l.clone()),
                x_pow.scale(&(-nl.clone() * 2u32)),
                w.scale(&nn),
            );
            let q2 = Quadratic::new(
                w.scale(&(n2l + 1u32)),
                x_pow.scale(&(-(nl + 1u32) * 2u32)),
                RationalPoly::constant(nn + 1u32),
            );
            (closed, q1, q2)
        }
        Scheme::SymmetricUnit { a_n, a_next, .. } => {
            let (p, q) = (a_n.require_rational()?, a_next.require_rational()?);
            let (op, oq) = (Rational::from(1) - p, Rational::from(1) - q);
            let w = RationalPoly::monomial(Rational::from(1), u);
            let w2 = RationalPoly::monomial(Rational::from(1), 2 * u);
            let a = &RationalPoly::constant(Rational::from(&op * q)) - &w2.scale(&Rational::from(p * &oq));
            let b = &RationalPoly::constant(q.clone()) - &w.scale(p);
            let c = &RationalPoly::constant(op.clone()) - &w.scale(&oq);
            let x2 = RationalPoly::monomial(Rational::from(1), 2 * v);
            let closed = &(&a * &a) - &(&(&x2 * &b) * &c);
            let minus_x = x_pow.scale(&Rational::from(-1));
            let q1 = Quadratic::new(RationalPoly::constant(op), minus_x.clone(), w.scale(p));
            let q2 = Quadratic::new(w.scale(&oq), minus_x, RationalPoly::constant(q.clone()));
            (closed, q1, q2)
        }
        Scheme::Hermite { .. } => unreachable!(),
    };
    let direct = resultant_quadratics(&q1, &q2)?;
    if direct != closed {
        return Err(Error::Inconclusive(
            "closed-form and direct resultants disagree".into(),
        ));
    }
    Ok(SymbolicResultant { poly: closed, u, v })
}

/// Which branch passes through `τ = 1` at `x = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PinnedBranch {
    Upper,
    Lower,
    /// Both roots equal 1 (`λ = 0`).
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    /// `𝒯_{n+1}` has real points where `𝒯_n` has none.
    NextRealCurrentComplex,
    /// A branch of `𝒯_{n+1}` leaves the interval between the branches of `𝒯_n`.
    NotContained,
}

#[derive(Clone, Debug)]
pub struct NestingViolation {
    pub x: Float,
    pub kind: ViolationKind,
    pub current: Option<(Float, Float)>,
    pub next: Option<(Float, Float)>,
}

#[derive(Clone, Debug)]
pub struct NestingReport {
    pub checked: usize,
    /// Points where `𝒯_{n+1}` has no real points (left of its vertex).
    pub not_real: usize,
    /// Points where `𝒯_{n+1}` is a double root: nothing to contain.
    pub degenerate: usize,
    pub violations: usize,
    pub first_violation: Option<NestingViolation>,
    pub pinned_at_one: Option<PinnedBranch>,
}

impl NestingReport {
    pub fn nested(&self) -> bool {
        self.violations == 0
    }
}

/// Checks `τ_n⁻ ≤ τ_{n+1}⁻ ≤ τ_{n+1}⁺ ≤ τ_n⁺` on each grid point where
/// `𝒯_{n+1}` has two distinct real branches.
pub fn nesting_check(scheme: &Scheme, grid: &[Float], prec: u32) -> Result<NestingReport> {
    check_precision(prec)?;
    let tol = pow2(-(prec as i32) / 2, prec);
    let mut report = NestingReport {
        checked: 0,
        not_real: 0,
        degenerate: 0,
        violations: 0,
        first_violation: None,
        pinned_at_one: None,
    };
    for x in grid {
        let next = branches(scheme, Which::Next, x, prec)?;
        let q = curve_quadratic(scheme, Which::Next, x, prec);
        let scale = Float::with_val(prec, q.b.square_ref()) + 1u32;
        if next.roots.is_none() {
            report.not_real += 1;
            continue;
        }
        if next.discriminant <= Float::with_val(prec, &tol * &scale) {
            report.degenerate += 1;
            continue;
        }
        report.checked += 1;
        let cur = branches(scheme, Which::Current, x, prec)?;
        let cq = curve_quadratic(scheme, Which::Current, x, prec);
        let cur_scale = Float::with_val(prec, cq.b.square_ref()) + 1u32;
        let (nl, nu) = next.roots.clone().expect("checked above");
        let kind = match &cur.roots {
            None if cur.discriminant < -Float::with_val(prec, &tol * &cur_scale) => {
                Some(ViolationKind::NextRealCurrentComplex)
            }
            None => None,
            Some((cl, cu)) => {
                let slack = Float::with_val(prec, &tol * (Float::with_val(prec, cu.abs_ref()) + 1u32));
                if nl < Float::with_val(prec, cl - &slack) || nu > Float::with_val(prec, cu + &slack) {
                    Some(ViolationKind::NotContained)
                } else {
                    None
                }
            }
        };
        if let Some(kind) = kind {
            report.violations += 1;
            if report.first_violation.is_none() {
                report.first_violation = Some(NestingViolation {
                    x: x.clone(),
                    kind,
                    current: cur.roots,
                    next: Some((nl, nu)),
                });
            }
        }
    }
    if let Scheme::Ultraspherical { lambda, .. } = scheme {
        report.pinned_at_one = Some(match lambda.signum() {
            Ordering::Greater => PinnedBranch::Upper,
            Ordering::Less => PinnedBranch::Lower,
            Ordering::Equal => PinnedBranch::Both,
        });
    }
    Ok(report)
}

/// Value of `𝒯_n` at the vertex of `𝒯_{n+1}` for the Hermite-type curves.
#[derive(Clone, Debug)]
pub struct HermiteVertexValue {
    /// `(X+d_n)(4a²_{n+1}/X − 2a_{n+1}) + a_nX` at `X = 3a_{n+1} + a_n`.
    pub closed_form: Rational,
    /// The curve evaluated in floating point at the vertex.
    pub direct: Float,
}

pub fn hermite_vertex_value(a_prev: &Rational, a_cur: &Rational, a_next: &Rational, prec: u32) -> Result<HermiteVertexValue> {
    let xx = Rational::from(a_next * 3u32) + a_cur;
    if xx.cmp0() != Ordering::Greater {
        return Err(Error::InvalidParameter("vertex abscissa is not real".into()));
    }
    let d_n = Rational::from(a_cur - a_prev);
    let four_a2 = Rational::from(a_next.square_ref()) * 4u32;
    let closed_form = Rational::from(&xx + &d_n) * (four_a2 / &xx - Rational::from(a_next * 2u32))
        + Rational::from(a_cur * &xx);
    let scheme = Scheme::Hermite {
        a_prev: Param::Exact(a_prev.clone()),
        a_cur: Param::Exact(a_cur.clone()),
        a_next: Param::Exact(a_next.clone()),
    };
    let v = vertex(&scheme, Which::Next, prec)?;
    let q = curve_quadratic(&scheme, Which::Current, &v.x_vertex, prec);
    let t = &v.tau_vertex;
    let direct = Float::with_val(prec, &q.a * Float::with_val(prec, t.square_ref()))
        + Float::with_val(prec, &q.b * t)
        + &q.c;
    Ok(HermiteVertexValue { closed_form, direct })
}

/// Coefficients `[c0, c1, c2, c3]` in `X = x²` of the Hermite-type
/// resultant; the `X⁴` terms cancel. Checked against the direct resultant.
pub fn hermite_resultant_cubic(a_prev: &Rational, a_cur: &Rational, a_next: &Rational) -> Result<[Rational; 4]> {
    let d_n = Rational::from(a_cur - a_prev);
    let d_1 = Rational::from(a_next - a_cur);
    let xx = RationalPoly::x();
    let lin = |d: &Rational| &xx + &RationalPoly::constant(d.clone());
    let (pn, p1) = (lin(&d_n), lin(&d_1));
    let first = &(&pn * &p1).scale(a_next) - &(&xx * &xx).scale(a_cur);
    let last = &xx.scale(&d_1) + &RationalPoly::constant(Rational::from(a_next * &d_n));
    let second = &(&(&xx.scale(&d_1) * &pn) * &p1) * &last;
    let closed = &(&first * &first) - &second;
    if closed.degree().unwrap_or(0) > 3 {
        return Err(Error::Inconclusive("quartic term did not cancel".into()));
    }
    // direct route in x, then read off even powers
    let x = RationalPoly::x();
    let x2 = &x * &x;
    let cx = |p: &RationalPoly| p.substitute_power(2);
    let (pnx, p1x) = (cx(&pn), cx(&p1));
    let q1 = Quadratic::new(pnx.clone(), -(&pnx * &x), x2.scale(a_cur));
    let q2 = Quadratic::new(x2.clone(), -(&p1x * &x), p1x.scale(a_next));
    let direct = resultant_quadratics(&q1, &q2)?;
    if direct != cx(&closed) {
        return Err(Error::Inconclusive("closed-form and direct resultants disagree".into()));
    }
    Ok([closed.coeff(0), closed.coeff(1), closed.coeff(2), closed.coeff(3)])
}

/// Branch gaps and resultant just to the right of `x₀`, with their
/// large-`n` leading terms.
#[derive(Clone, Debug)]
pub struct RemarkProbe {
    pub x0: Float,
    /// `(3x₀ + 1)/4`.
    pub x_hat: Float,
    /// Nesting margins at `x̂`, positive when `𝒯_{n+1}` sits inside `𝒯_n`.
    /// `τ_n⁺ − τ_{n+1}⁺`; `None` when a curve is complex there.
    pub gap_plus: Option<Float>,
    /// `τ_{n+1}⁻ − τ_n⁻`.
    pub gap_minus: Option<Float>,
    pub leading_gap_plus: Float,
    pub leading_gap_minus: Float,
    /// `R_n(x̂, θ)` for the supplied θ.
    pub resultant: Float,
    /// `R_n(x̂, 8/(4−λ))` with `x̂` recomputed for that exponent.
    pub resultant_sharp: Float,
    /// `(9/2)(8+λ²)λ⁴n⁻⁴`.
    pub leading_resultant_sharp: Float,
}

pub fn remark_asymptotics_probe(lambda: &Param, theta: &Param, n: usize, prec: u32) -> Result<RemarkProbe> {
    check_precision(prec)?;
    if n == 0 {
        return Err(Error::InvalidParameter("n must be >= 1".into()));
    }
    let lam = lambda.to_float(prec);
    let t = theta.to_float(prec);
    let scheme = Scheme::Ultraspherical {
        lambda: lambda.clone(),
        n,
        theta: theta.clone(),
    };
    let x_hat_for = |s: &Scheme| -> Result<(Float, Float)> {
        let x0 = vertex(s, Which::Next, prec)?.x_vertex;
        let xh = (Float::with_val(prec, &x0 * 3u32) + 1u32) / 4u32;
        Ok((x0, xh))
    };
    let (x0, x_hat) = x_hat_for(&scheme)?;
    let cur = branches(&scheme, Which::Current, &x_hat, prec)?.roots;
    let next = branches(&scheme, Which::Next, &x_hat, prec)?.roots;
    let (gap_plus, gap_minus) = match (&cur, &next) {
        (Some((cl, cu)), Some((nl, nu))) => (
            Some(Float::with_val(prec, cu - nu)),
            Some(Float::with_val(prec, nl - cl)),
        ),
        _ => (None, None),
    };
    let n2 = Float::with_val(prec, n as u64).square();
    let den = Float::with_val(prec, 2 - &t) * 4u32 * &n2;
    let leading_gap_plus = Float::with_val(prec, &lam * 3u32)
        * (Float::with_val(prec, 4 - &lam) * &t - 8u32)
        / &den;
    let leading_gap_minus =
        Float::with_val(prec, &lam * (Float::with_val(prec, &lam * 3u32) + 4u32) * &t - 8u32 * Float::with_val(prec, &lam))
            / &den;
    let resultant = resultant_rn(&scheme, &x_hat, prec)?;
    let sharp = match lambda {
        Param::Exact(l) => Param::Exact(Rational::from(8) / (Rational::from(4) - l)),
        Param::Real(_) => Param::Real(Float::with_val(prec, 8) / Float::with_val(prec, 4 - &lam)),
    };
    let sharp_scheme = Scheme::Ultraspherical {
        lambda: lambda.clone(),
        n,
        theta: sharp,
    };
    let (_, xh_sharp) = x_hat_for(&sharp_scheme)?;
    let resultant_sharp = resultant_rn(&sharp_scheme, &xh_sharp, prec)?;
    let l2 = Float::with_val(prec, lam.square_ref());
    let leading_resultant_sharp = Float::with_val(prec, &l2 + 8u32) * Float::with_val(prec, l2.square_ref()) * 9u32
        / (Float::with_val(prec, n2.square_ref()) * 2u32);
    Ok(RemarkProbe {
        x0,
        x_hat,
        gap_plus,
        gap_minus,
        leading_gap_plus,
        leading_gap_minus,
        resultant,
        resultant_sharp,
        leading_resultant_sharp,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    fn f(v: f64) -> Float {
        Float::with_val(128, v)
    }

    fn ultra(l: Rational, n: usize, t: Rational) -> Scheme {
        Scheme::Ultraspherical {
            lambda: Param::Exact(l),
            n,
            theta: Param::Exact(t),
        }
    }

    #[test]
    fn legendre_branches_at_one() {
        let s = ultra(rat(1, 2), 1, rat(1, 1));
        let b = branches(&s, Which::Current, &f(1.0), 128).unwrap().roots.unwrap();
        assert!((b.0.to_f64() - 0.5).abs() < 1e-30 && (b.1.to_f64() - 1.0).abs() < 1e-30);
    }

    #[test]
    fn branch_pinned_at_one() {
        for (l, pinned_upper) in [(rat(1, 3), true), (rat(-1, 3), false)] {
            let s = ultra(l.clone(), 3, rat(1, 1));
            let (lo, hi) = branches(&s, Which::Current, &f(1.0), 128).unwrap().roots.unwrap();
            let one = if pinned_upper { hi } else { lo };
            assert!((one.to_f64() - 1.0).abs() < 1e-30);
        }
    }

    #[test]
    fn vertex_examples() {
        let s = ultra(rat(1, 1), 4, rat(2, 3));
        let v = vertex(&s, Which::Current, 128).unwrap();
        assert!((v.x_vertex.to_f64() - (24.0f64 / 25.0).powf(0.75)).abs() < 1e-14);
        let c = ultra(rat(0, 1), 4, rat(2, 1));
        assert_eq!(vertex(&c, Which::Current, 128).unwrap().x_vertex, 1);
        let bad = ultra(rat(1, 2), 4, rat(2, 1));
        assert!(vertex(&bad, Which::Current, 128).is_err());
    }

    #[test]
    fn vertex_is_double_root() {
        let s = ultra(rat(-1, 4), 3, rat(16, 9));
        for which in [Which::Current, Which::Next] {
            let v = vertex(&s, which, 200).unwrap();
            let q = curve_quadratic(&s, which, &v.x_vertex, 200);
            let disc = Float::with_val(200, q.b.square_ref()) - Float::with_val(200, &q.a * &q.c) * 4u32;
            assert!(disc.abs() < 1e-40);
            let val = Float::with_val(200, &q.a * Float::with_val(200, v.tau_vertex.square_ref()))
                + Float::with_val(200, &q.b * &v.tau_vertex)
                + &q.c;
            assert!(val.abs() < 1e-40);
        }
    }

    #[test]
    fn theorem1_exponent_matches() {
        for l in [rat(-1, 4), rat(-2, 5), rat(1, 2), rat(3, 1)] {
            let t = crate::turan_core::theta_theorem1_exact(&l).unwrap();
            let e = theorem1_vertex_exponent(&l).unwrap();
            assert_eq!(e, Rational::from(1) / (Rational::from(2) - t));
        }
    }

    #[test]
    fn resultant_routes_agree() {
        let x = f(0.73);
        for s in [
            ultra(rat(-1, 4), 3, rat(16, 9)),
            ultra(rat(2, 1), 5, rat(2, 5)),
            Scheme::SymmetricUnit {
                a_n: Param::ratio(3, 4),
                a_next: Param::ratio(5, 7),
                theta: Param::ratio(3, 2),
            },
            Scheme::Hermite {
                a_prev: Param::ratio(1, 2),
                a_cur: Param::from(1),
                a_next: Param::ratio(3, 2),
            },
        ] {
            let r1 = resultant_rn(&s, &x, 128).unwrap();
            let r2 = resultant_rn_via_curves(&s, &x, 128).unwrap();
            assert!(Float::with_val(128, &r1 - &r2).abs() < 1e-25, "{s:?}");
        }
    }

    #[test]
    fn symbolic_resultant_matches_numeric() {
        let s = ultra(rat(-1, 4), 2, rat(16, 9));
        let sym = resultant_rn_symbolic(&s).unwrap();
        assert_eq!((sym.u, sym.v), (16, 9));
        let x = f(0.6);
        let a = sym.eval_at_x(&x);
        let b = resultant_rn(&s, &x, 128).unwrap();
        assert!(Float::with_val(128, &a - &b).abs() < 1e-25);
    }

    #[test]
    fn resultant_vanishes_at_one() {
        // both curves pass through (1, 1)
        let s = ultra(rat(1, 3), 4, rat(6, 5));
        assert!(resultant_rn(&s, &f(1.0), 128).unwrap().abs() < 1e-30);
    }

    #[test]
    fn nesting_holds_at_theorem_exponent() {
        let grid: Vec<Float> = (1..400).map(|i| f(i as f64 / 400.0)).collect();
        for l in [rat(-1, 4), rat(1, 2), rat(2, 1), rat(0, 1)] {
            let t = crate::turan_core::theta_theorem1_exact(&l).unwrap();
            for n in 1..6 {
                let r = nesting_check(&ultra(l.clone(), n, t.clone()), &grid, 128).unwrap();
                assert!(r.nested(), "lambda={l} n={n}: {:?}", r.first_violation);
            }
        }
    }

    #[test]
    fn hermite_vertex_value_example() {
        let v = hermite_vertex_value(&rat(0, 1), &rat(1, 2), &rat(1, 1), 128).unwrap();
        assert_eq!(v.closed_form, rat(-47, 28));
        assert!((v.direct.to_f64() + 47.0 / 28.0).abs() < 1e-30);
    }

    #[test]
    fn hermite_cubic_routes_agree() {
        let c = hermite_resultant_cubic(&rat(0, 1), &rat(1, 2), &rat(1, 1)).unwrap();
        let x = f(0.9);
        let xx = Float::with_val(128, x.square_ref());
        let val = c.iter().rev().fold(Float::with_val(128, 0), |acc, k| acc * &xx + Float::with_val(128, k));
        let s = Scheme::Hermite {
            a_prev: Param::from(0),
            a_cur: Param::ratio(1, 2),
            a_next: Param::from(1),
        };
        let r = resultant_rn_via_curves(&s, &x, 128).unwrap();
        assert!(Float::with_val(128, &val - &r).abs() < 1e-25);
    }

    #[test]
    fn remark_probe_leading_terms() {
        let p = remark_asymptotics_probe(&Param::ratio(-2, 5), &Param::ratio(19, 10), 1000, 256).unwrap();
        assert!((p.leading_gap_plus.to_f64() + 1.08e-6).abs() < 1e-9);
        assert!((p.leading_gap_minus.to_f64() - 2.68e-6).abs() < 1e-9);
        let gp = p.gap_plus.unwrap().to_f64();
        let gm = p.gap_minus.unwrap().to_f64();
        assert!((gp / p.leading_gap_plus.to_f64() - 1.0).abs() < 0.05, "{gp}");
        assert!((gm / p.leading_gap_minus.to_f64() - 1.0).abs() < 0.05, "{gm}");
        let r = p.resultant_sharp.to_f64() / p.leading_resultant_sharp.to_f64();
        assert!((r - 1.0).abs() < 0.05, "{r}");
    }
}
