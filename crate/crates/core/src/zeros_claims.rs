//! Zeros of the normalized ultraspherical polynomials, the vertex-vs-zeros
//! claim and the Christoffel–Darboux monotonicity of `t_n`.

use std::cmp::Ordering;

use rayon::prelude::*;
use rug::{Float, Rational};

use crate::curves::{vertex, Scheme, Which};
use crate::error::{Error, Result};
use crate::exact_algebra::SturmChain;
use crate::families::{exact_coefficients, FamilySpec, PreparedRecurrence};
use crate::numeric::{check_precision, pow2, Param};
use crate::turan_core::theta_theorem1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZeroMethod {
    Bisection,
    ExactSturm,
}

#[derive(Clone, Debug)]
pub struct ZeroSet {
    pub lambda: Param,
    pub degree: usize,
    /// Descending, all in `(−1, 1)`.
    pub zeros: Vec<Float>,
    pub method: ZeroMethod,
    pub tolerance: Float,
}

/// Default absolute tolerance, `10⁻²⁰`.
pub fn default_zero_tolerance(prec: u32) -> Float {
    Float::with_val(prec, rug::ops::Pow::pow(Float::with_val(prec, 10u32), -20i32))
}

fn bisect(rec: &PreparedRecurrence, k: usize, lo: &Float, hi: &Float, tol: &Float) -> Option<Float> {
    let prec = rec.precision();
    let eval = |x: &Float| rec.values(k - 1, x).2;
    let (mut lo, mut hi) = (Float::with_val(prec, lo), Float::with_val(prec, hi));
    let mut f_lo = eval(&lo);
    if f_lo.is_zero() {
        return Some(lo);
    }
    let f_hi = eval(&hi);
    if f_hi.is_zero() {
        return Some(hi);
    }
    if (f_lo < 0) == (f_hi < 0) {
        return None;
    }
    for _ in 0..(4 * prec) {
        let mid = Float::with_val(prec, &lo + &hi) / 2u32;
        if mid <= lo || mid >= hi {
            return None;
        }
        if Float::with_val(prec, &hi - &lo) <= *tol {
            return Some(mid);
        }
        let f_mid = eval(&mid);
        if f_mid.is_zero() {
            return Some(mid);
        }
        if (f_mid < 0) == (f_lo < 0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    None
}

fn zeros_by_interlacing(family: &FamilySpec, degree: usize, tol: &Float, prec: u32) -> Option<Vec<Float>> {
    let rec = PreparedRecurrence::new(family, degree, prec).ok()?;
    let lo_bound = Float::with_val(prec, -1);
    let hi_bound = Float::with_val(prec, 1);
    // ascending zeros of the previous polynomial
    let mut prev: Vec<Float> = Vec::new();
    for k in 1..=degree {
        let mut edges = Vec::with_capacity(prev.len() + 2);
        edges.push(lo_bound.clone());
        edges.extend(prev.iter().cloned());
        edges.push(hi_bound.clone());
        let next: Option<Vec<Float>> = edges
            .par_windows(2)
            .map(|w| bisect(&rec, k, &w[0], &w[1], tol))
            .collect();
        prev = next?;
    }
    prev.reverse();
    Some(prev)
}

/// Zeros of `G_degree` by sign-change bisection, bracketed by the zeros of
/// `G_{degree−1}`. Precision is doubled once before giving up.
pub fn isolate_zeros(lambda: &Param, degree: usize, tol: &Float, prec: u32) -> Result<ZeroSet> {
    check_precision(prec)?;
    if degree == 0 {
        return Err(Error::InvalidParameter("degree must be >= 1".into()));
    }
    let family = FamilySpec::ultraspherical(lambda.clone())?;
    for p in [prec, 2 * prec] {
        if let Some(zeros) = zeros_by_interlacing(&family, degree, tol, p) {
            return Ok(ZeroSet {
                lambda: lambda.clone(),
                degree,
                zeros,
                method: ZeroMethod::Bisection,
                tolerance: tol.clone(),
            });
        }
    }
    Err(Error::NoConvergence(format!(
        "zero bisection for degree {degree} did not reach tolerance at {} bits",
        2 * prec
    )))
}

/// Exact Sturm isolation on the rational coefficients; each zero is the
/// midpoint of an isolating interval of width at most `tol`.
pub fn isolate_zeros_exact(lambda: &Rational, degree: usize, tol: &Rational, prec: u32) -> Result<ZeroSet> {
    if degree == 0 {
        return Err(Error::InvalidParameter("degree must be >= 1".into()));
    }
    let family = FamilySpec::ultraspherical(lambda.clone())?;
    let poly = exact_coefficients(&family, degree)?;
    let chain = SturmChain::new(&poly)?;
    let intervals = chain.isolate(&Rational::from(-1), &Rational::from(1), tol)?;
    let mut zeros: Vec<Float> = intervals
        .iter()
        .map(|(a, b)| Float::with_val(prec, &(Rational::from(a + b) / 2u32)))
        .collect();
    zeros.sort_by(|a, b| b.partial_cmp(a).unwrap_or(Ordering::Equal));
    Ok(ZeroSet {
        lambda: Param::Exact(lambda.clone()),
        degree,
        zeros,
        method: ZeroMethod::ExactSturm,
        tolerance: Float::with_val(prec, tol),
    })
}

/// Where `x̃` falls among the two largest zeros.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexPosition {
    BelowSecond,
    BetweenSecondAndFirst,
    AboveFirst,
}

#[derive(Clone, Debug)]
pub struct ClaimReport {
    pub lambda: Param,
    pub n: usize,
    pub x_tilde: Float,
    /// Largest zero of `G_{n+1}`.
    pub x1: Float,
    /// Second largest zero; `None` when `n = 0`.
    pub x2: Option<Float>,
    pub position: VertexPosition,
    /// `x̃ > x₂` for `λ < 0`, `x̃ > x₁` for `λ ≥ 0`.
    pub holds: bool,
}

pub fn claim_vertex_vs_zeros(lambda: &Param, n: usize, prec: u32) -> Result<ClaimReport> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be >= 1".into()));
    }
    let theta = theta_theorem1(lambda, prec)?;
    let scheme = Scheme::Ultraspherical {
        lambda: lambda.clone(),
        n,
        theta,
    };
    let x_tilde = vertex(&scheme, Which::Current, prec)?.x_vertex;
    let zs = isolate_zeros(lambda, n + 1, &default_zero_tolerance(prec), prec)?;
    let x1 = zs.zeros[0].clone();
    let x2 = zs.zeros.get(1).cloned();
    let position = if x_tilde > x1 {
        VertexPosition::AboveFirst
    } else if x2.as_ref().is_some_and(|x2| x_tilde > *x2) {
        VertexPosition::BetweenSecondAndFirst
    } else {
        VertexPosition::BelowSecond
    };
    let holds = if lambda.signum() == Ordering::Less {
        position != VertexPosition::BelowSecond
    } else {
        position == VertexPosition::AboveFirst
    };
    Ok(ClaimReport {
        lambda: lambda.clone(),
        n,
        x_tilde,
        x1,
        x2,
        position,
        holds,
    })
}

#[derive(Clone, Debug)]
pub struct CdReport {
    pub checked: usize,
    /// Points next to a zero of `y_n`, where `t_n` itself is undefined.
    /// The kernel is still evaluated there.
    pub near_zero: usize,
    pub min_value: Option<Float>,
    pub argmin: Option<Float>,
    pub all_positive: bool,
}

/// `y′_{n+1} y_n − y′_n y_{n+1} > 0` on the grid.
pub fn cd_kernel_positivity(lambda: &Param, n: usize, grid: &[Float], prec: u32) -> Result<CdReport> {
    check_precision(prec)?;
    let family = FamilySpec::ultraspherical(lambda.clone())?;
    let rec = PreparedRecurrence::new(&family, n, prec)?;
    let guard = pow2(-(prec as i32) / 2, prec);
    let values: Vec<(Float, Float, bool)> = grid
        .par_iter()
        .map(|x| {
            let ([_, p, pn], [_, dp, dpn]) = rec.values_and_derivatives(n, x);
            let near = p.clone().abs() < guard;
            let k = Float::with_val(prec, &dpn * &p) - Float::with_val(prec, &dp * &pn);
            (k, Float::with_val(prec, x), near)
        })
        .collect();
    let mut report = CdReport {
        checked: 0,
        near_zero: 0,
        min_value: None,
        argmin: None,
        all_positive: true,
    };
    for (k, x, near) in values {
        report.checked += 1;
        if near {
            report.near_zero += 1;
        }
        if k <= 0 {
            report.all_positive = false;
        }
        if report.min_value.as_ref().is_none_or(|m| k < *m) {
            report.min_value = Some(k);
            report.argmin = Some(x);
        }
    }
    Ok(report)
}
