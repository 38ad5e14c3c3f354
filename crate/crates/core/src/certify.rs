//! Nonnegativity certificates for `Δ_n`: exact Sturm counting after the
//! substitution `x = s^v`, numeric scans with verified witnesses, sharp-θ
//! bisection and batch tables.

use std::cmp::Ordering;
use std::fmt;

use rayon::prelude::*;
use rug::{Float, Rational};

use crate::curves::{vertex, Scheme, Which};
use crate::error::{Error, Result};
use crate::exact_algebra::{RationalPoly, SturmChain};
use crate::families::{exact_triple_polys, FamilySpec, SequenceSpec};
use crate::numeric::{check_precision, clustered_grid, pow2, to_decimal, Param};
use crate::turan_core::{theta_theorem1, theta_theorem2, DeltaEvaluator, Horizon, ThetaRule, Weight};


#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertMode {
    ExactSturm,
    NumericScan,
}

impl fmt::Display for CertMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CertMode::ExactSturm => "exact-sturm",
            CertMode::NumericScan => "numeric-scan",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    CertifiedNonnegative,
    Counterexample { x_witness: Float, delta_value: Float },
    Inconclusive { reason: String },
}

impl Outcome {
    pub fn label(&self) -> &'static str {
        match self {
            Outcome::CertifiedNonnegative => "certified",
            Outcome::Counterexample { .. } => "counterexample",
            Outcome::Inconclusive { .. } => "inconclusive",
        }
    }

    pub fn is_certified(&self) -> bool {
        matches!(self, Outcome::CertifiedNonnegative)
    }

    pub fn is_counterexample(&self) -> bool {
        matches!(self, Outcome::Counterexample { .. })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Details {
    Exact {
        /// `x = s^v`, `x^θ = s^u`.
        u: usize,
        v: usize,
        /// Degree of `Δ̃(s)` before deflation.
        degree: usize,
        /// Multiplicity of the root at `s = 1`.
        multiplicity_at_one: usize,
        /// Distinct roots of odd multiplicity of the deflated quotient `q` in (0,1).
        interior_roots: usize,
        /// Distinct roots of even multiplicity in (0,1), where `q` touches zero.
        touching_roots: usize,
        /// First of 1/2, 1/3, 2/3, 1/4, … that is not a root of `q`.
        sample_point: Rational,
        interior_sample_positive: bool,
        value_at_zero: Rational,
    },
    Numeric {
        grid_size: usize,
        precision_bits: u32,
        min_value: Float,
        argmin: Float,
    },
}

#[derive(Clone, Debug)]
pub struct Certificate {
    pub mode: CertMode,
    pub family: String,
    pub n: usize,
    pub theta: Option<Param>,
    pub interval: (Float, Float),
    pub outcome: Outcome,
    pub details: Details,
}

impl Certificate {
    /// Minimum found by a scan, or `None` for exact certificates.
    pub fn min_value(&self) -> Option<&Float> {
        match &self.details {
            Details::Numeric { min_value, .. } => Some(min_value),
            Details::Exact { .. } => None,
        }
    }
}

/// Degree cap for the substituted polynomial in exact mode.
pub const MAX_EXACT_DEGREE: usize = 4000;

/// `Δ̃(s) = s^u G_n(s^v)² − G_{n−1}(s^v) G_{n+1}(s^v)` for `θ = u/v`.
pub fn substituted_delta(lambda: &Rational, n: usize, theta: &Rational) -> Result<(RationalPoly, usize, usize)> {
    if theta.cmp0() == Ordering::Less {
        return Err(Error::InvalidParameter("theta must be nonnegative".into()));
    }
    let to_usize = |v: &rug::Integer| {
        v.to_usize()
            .ok_or_else(|| Error::InvalidParameter("theta numerator or denominator too large".into()))
    };
    let (u, v) = (to_usize(theta.numer())?, to_usize(theta.denom())?);
    let degree = (2 * (n + 1)).saturating_mul(v).saturating_add(u);
    if degree > MAX_EXACT_DEGREE {
        return Err(Error::InvalidParameter(format!(
            "substituted polynomial degree {degree} exceeds {MAX_EXACT_DEGREE}; use numeric-scan mode"
        )));
    }
    let family = FamilySpec::ultraspherical(lambda.clone())?;
    let [pm, p, pp] = exact_triple_polys(&family, n)?;
    let (pm, p, pp) = (pm.substitute_power(v), p.substitute_power(v), pp.substitute_power(v));
    let delta = &(&p * &p).shift_up(u) - &(&pm * &pp);
    Ok((delta, u, v))
}

/// Exact certificate on `[0, 1]` for rational `λ` and `0 < θ ≤ 2`.
pub fn certify_exact(lambda: &Rational, n: usize, theta: &Rational) -> Result<Certificate> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be >= 1".into()));
    }
    if theta.cmp0() != Ordering::Greater || *theta > 2 {
        return Err(Error::InvalidParameter(format!("exact mode needs 0 < theta <= 2, got {theta}")));
    }
    let family = FamilySpec::ultraspherical(lambda.clone())?;
    let (delta, u, v) = substituted_delta(lambda, n, theta)?;
    let interval = (Float::with_val(64, 0), Float::with_val(64, 1));
    let make = |outcome, details| Certificate {
        mode: CertMode::ExactSturm,
        family: family.to_string(),
        n,
        theta: Some(Param::Exact(theta.clone())),
        interval: interval.clone(),
        outcome,
        details,
    };
    let degree = delta.degree().unwrap_or(0);
    let value_at_zero = delta.coeff(0);
    if delta.is_zero() {
        return Ok(make(
            Outcome::CertifiedNonnegative,
            Details::Exact {
                u,
                v,
                degree: 0,
                multiplicity_at_one: 0,
                interior_roots: 0,
                touching_roots: 0,
                sample_point: Rational::from((1, 2)),
                interior_sample_positive: false,
                value_at_zero,
            },
        ));
    }
    let (m, q) = delta.deflate_at_one()?;
    let (zero, one) = (Rational::new(), Rational::from(1));
    let mut chain = SturmChain::new(&q)?;
    let mut touching_roots = 0;
    if chain.is_degenerate() {
        // only odd-multiplicity roots can change the sign of q
        let mut odd = RationalPoly::one();
        let mut even = RationalPoly::one();
        for (k, f) in q.square_free_decomposition()? {
            if k % 2 == 1 {
                odd = &odd * &f;
            } else {
                even = &even * &f;
            }
        }
        if even.degree().unwrap_or(0) > 0 {
            touching_roots = SturmChain::new(&even)?.count_roots(&zero, &one)?;
        }
        chain = SturmChain::new(&odd)?;
    }
    let interior_roots = if chain.head().degree().unwrap_or(0) > 0 {
        chain.count_roots(&zero, &one)?
    } else {
        0
    };
    let sample_point = sample_points()
        .find(|s| q.eval(s).cmp0() != Ordering::Equal)
        .expect("a nonzero polynomial has finitely many roots");
    let sample = q.eval(&sample_point);
    let half = sample_point.clone();
    let details = Details::Exact {
        u,
        v,
        degree,
        multiplicity_at_one: m,
        interior_roots,
        touching_roots,
        sample_point,
        interior_sample_positive: sample.cmp0() == Ordering::Greater,
        value_at_zero: value_at_zero.clone(),
    };
    let s_to_x = |s: &Rational| Float::with_val(256, rug::ops::Pow::pow(Float::with_val(256, s), v as u32));
    if value_at_zero.cmp0() == Ordering::Less {
        return Ok(make(
            Outcome::Counterexample {
                x_witness: Float::with_val(256, 0),
                delta_value: Float::with_val(256, &value_at_zero),
            },
            details,
        ));
    }
    if interior_roots == 0 {
        let outcome = if sample.cmp0() == Ordering::Greater {
            Outcome::CertifiedNonnegative
        } else {
            // q keeps one sign on (0,1) and it is negative
            Outcome::Counterexample {
                x_witness: s_to_x(&half),
                delta_value: Float::with_val(256, &delta.eval(&half)),
            }
        };
        return Ok(make(outcome, details));
    }
    // a sign change of q inside (0,1) gives an exact rational witness
    let tol = Rational::from((1, 1u64 << 40));
    let roots = chain.isolate(&zero, &one, &tol)?;
    let mut probes = vec![half];
    let mut edges = vec![zero.clone()];
    for (a, b) in &roots {
        edges.push(a.clone());
        edges.push(b.clone());
    }
    edges.push(one.clone());
    for w in edges.chunks(2) {
        if w.len() == 2 && w[0] < w[1] {
            probes.push(Rational::from(&w[0] + &w[1]) / 2u32);
        }
    }
    for s in probes {
        let val = delta.eval(&s);
        if val.cmp0() == Ordering::Less {
            return Ok(make(
                Outcome::Counterexample {
                    x_witness: s_to_x(&s),
                    delta_value: Float::with_val(256, &val),
                },
                details,
            ));
        }
    }
    Ok(make(
        Outcome::Inconclusive {
            reason: format!("{interior_roots} interior roots without a negative sample"),
        },
        details,
    ))
}

/// 1/2, 1/3, 2/3, 1/4, 3/4, 1/5, …
fn sample_points() -> impl Iterator<Item = Rational> {
    (2u32..).flat_map(|d| (1..d).map(move |k| Rational::from((k, d)))).filter(|r| *r.denom() != 1)
}

/// Scan settings.
#[derive(Clone, Debug)]
pub struct ScanOptions {
    pub grid_size: usize,
    pub precision: u32,
    pub refine_iterations: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            grid_size: 4096,
            precision: crate::numeric::DEFAULT_PRECISION,
            refine_iterations: 60,
        }
    }
}

/// `−2^(−prec/3)` scaled by the magnitude of the two terms of `Δ`.
fn threshold(prec: u32, scale: &Float) -> Float {
    let s = Float::with_val(prec, scale).max(&Float::with_val(prec, 1));
    -(pow2(-(prec as i32) / 3, prec) * s)
}

fn golden_min(ev: &DeltaEvaluator, lo: &Float, hi: &Float, iters: usize) -> (Float, Float) {
    let prec = ev.precision();
    let g = (Float::with_val(prec, 5).sqrt() - 1u32) / 2u32;
    let (mut a, mut b) = (Float::with_val(prec, lo), Float::with_val(prec, hi));
    let mut c = Float::with_val(prec, &b - Float::with_val(prec, &b - &a) * &g);
    let mut d = Float::with_val(prec, &a + Float::with_val(prec, &b - &a) * &g);
    let (mut fc, mut fd) = (ev.eval(&c), ev.eval(&d));
    for _ in 0..iters {
        if fc < fd {
            b = d;
            d = c.clone();
            fd = fc;
            c = Float::with_val(prec, &b - Float::with_val(prec, &b - &a) * &g);
            fc = ev.eval(&c);
        } else {
            a = c;
            c = d.clone();
            fc = fd;
            d = Float::with_val(prec, &a + Float::with_val(prec, &b - &a) * &g);
            fd = ev.eval(&d);
        }
    }
    if fc < fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

/// Grid minimum of `Δ_n` on `[lo, hi]` followed by golden-section refinement
/// around the best grid point. Negative values below the roundoff
/// threshold are re-evaluated at doubled precision before being reported.
pub fn scan_min(
    family: &FamilySpec,
    n: usize,
    rule: &ThetaRule,
    interval: (&Float, &Float),
    opts: &ScanOptions,
) -> Result<Certificate> {
    let weight = rule.resolve(family, n, opts.precision)?;
    scan_min_weight(family, n, weight, theta_of(rule), interval, opts)
}

fn theta_of(rule: &ThetaRule) -> Option<Param> {
    match rule {
        ThetaRule::TheoremOne { lambda } => theta_theorem1(lambda, 64).ok(),
        ThetaRule::Custom { theta } => Some(theta.clone()),
        _ => None,
    }
}

pub fn scan_min_weight(
    family: &FamilySpec,
    n: usize,
    weight: Weight,
    theta: Option<Param>,
    interval: (&Float, &Float),
    opts: &ScanOptions,
) -> Result<Certificate> {
    if opts.grid_size < 64 {
        return Err(Error::InvalidParameter("grid_size must be at least 64".into()));
    }
    let prec = opts.precision;
    check_precision(prec)?;
    let (lo, hi) = (Float::with_val(prec, interval.0), Float::with_val(prec, interval.1));
    if lo >= hi {
        return Err(Error::InvalidInterval(format!("[{}, {}]", to_decimal(&lo), to_decimal(&hi))));
    }
    let theta = theta.or_else(|| weight.theta().map(|t| Param::Real(t.clone())));
    let ev = DeltaEvaluator::with_weight(family, n, weight.clone(), prec)?;
    let grid = clustered_grid(&lo, &hi, opts.grid_size, prec);
    let values: Vec<(Float, Float)> = grid.par_iter().map(|x| ev.eval_with_scale(x)).collect();
    let (best, _) = values
        .iter()
        .enumerate()
        .min_by(|a, b| a.1 .0.partial_cmp(&b.1 .0).unwrap_or(Ordering::Equal))
        .expect("nonempty grid");
    let left = &grid[best.saturating_sub(1)];
    let right = &grid[(best + 1).min(grid.len() - 1)];
    let (mut argmin, mut min_value) = (grid[best].clone(), values[best].0.clone());
    if left < right {
        let (x, v) = golden_min(&ev, left, right, opts.refine_iterations);
        if v < min_value {
            argmin = x;
            min_value = v;
        }
    }
    let scale = ev.eval_with_scale(&argmin).1;
    let outcome = if min_value >= 0 {
        Outcome::CertifiedNonnegative
    } else {
        // escalate: the sign must survive doubled precision
        let hi_ev = DeltaEvaluator::with_weight(family, n, weight_at(&weight, 2 * prec), 2 * prec)?;
        let (v2, scale2) = hi_ev.eval_with_scale(&argmin);
        if min_value < threshold(prec, &scale) && v2 < threshold(prec, &scale2) {
            Outcome::Counterexample {
                x_witness: argmin.clone(),
                delta_value: v2,
            }
        } else if v2 >= threshold(2 * prec, &scale2) {
            Outcome::CertifiedNonnegative
        } else {
            Outcome::Inconclusive {
                reason: format!("minimum {} sits at the roundoff threshold", to_decimal(&min_value)),
            }
        }
    };
    Ok(Certificate {
        mode: CertMode::NumericScan,
        family: family.to_string(),
        n,
        theta,
        interval: (lo, hi),
        outcome,
        details: Details::Numeric {
            grid_size: grid.len(),
            precision_bits: prec,
            min_value,
            argmin,
        },
    })
}

fn weight_at(w: &Weight, prec: u32) -> Weight {
    match w {
        Weight::Power { theta, exact } => Weight::Power {
            theta: match exact {
                Some(e) => Float::with_val(prec, e),
                None => Float::with_val(prec, theta),
            },
            exact: exact.clone(),
        },
        Weight::HermiteFactor { d, exact } => Weight::HermiteFactor {
            d: match exact {
                Some(e) => Float::with_val(prec, e),
                None => Float::with_val(prec, d),
            },
            exact: exact.clone(),
        },
    }
}

/// Bracket for `sup{θ : Δ_n^θ ≥ 0 on [0, 1]}`.
#[derive(Clone, Debug)]
pub struct ThetaEstimate {
    pub lambda: Param,
    pub n: usize,
    pub theta_lo: Float,
    pub theta_hi: Float,
    pub iterations: usize,
    pub backend: CertMode,
    /// Set for `λ < 0`, where no closed form is known.
    pub empirical: bool,
}

/// Bisection on θ with a clustered scan near `x = 1` as the predicate.
pub fn sharp_theta(lambda: &Param, n: usize, tol: &Float, opts: &ScanOptions) -> Result<ThetaEstimate> {
    if *tol < 1e-6 {
        return Err(Error::InvalidParameter("tolerance must be at least 1e-6".into()));
    }
    let family = FamilySpec::ultraspherical(lambda.clone())?;
    let prec = opts.precision;
    let holds = |theta: &Float| -> Result<bool> {
        let mut o = opts.clone();
        for _ in 0..2 {
            let t = Param::Real(Float::with_val(o.precision, theta));
            let lo = scan_lower_end(lambda, n, &t, o.precision);
            let cert = scan_min(
                &family,
                n,
                &ThetaRule::Custom { theta: t },
                (&lo, &Float::with_val(o.precision, 1)),
                &o,
            )?;
            match cert.outcome {
                Outcome::CertifiedNonnegative => return Ok(true),
                Outcome::Counterexample { .. } => return Ok(false),
                Outcome::Inconclusive { .. } => o.precision *= 2,
            }
        }
        Err(Error::Inconclusive(format!(
            "scan at theta = {} stayed inconclusive",
            to_decimal(theta)
        )))
    };
    let mut lo = Float::with_val(prec, 0);
    let mut hi = Float::with_val(prec, 2);
    let mut iterations = 0;
    while holds(&hi)? {
        lo = hi.clone();
        hi *= 2u32;
        iterations += 1;
        if hi > 64 {
            return Err(Error::NoConvergence("no failing theta found below 64".into()));
        }
    }
    while Float::with_val(prec, &hi - &lo) > *tol {
        let mid = Float::with_val(prec, &lo + &hi) / 2u32;
        if holds(&mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    Ok(ThetaEstimate {
        lambda: lambda.clone(),
        n,
        theta_lo: lo,
        theta_hi: hi,
        iterations,
        backend: CertMode::NumericScan,
        empirical: lambda.signum() == Ordering::Less,
    })
}

/// `max(0, x̃ − 1/10)`; `0` when the vertex is undefined.
fn scan_lower_end(lambda: &Param, n: usize, theta: &Param, prec: u32) -> Float {
    let scheme = Scheme::Ultraspherical {
        lambda: lambda.clone(),
        n,
        theta: theta.clone(),
    };
    match vertex(&scheme, Which::Current, prec) {
        Ok(v) => {
            let lo = Float::with_val(prec, &v.x_vertex - Float::with_val(prec, 0.1));
            lo.max(&Float::with_val(prec, 0))
        }
        Err(_) => Float::with_val(prec, 0),
    }
}

/// Taylor coefficients of `Δ_n(1 − t)` in `t`: finite differences against
/// closed forms.
#[derive(Clone, Debug)]
pub struct TaylorCheck {
    pub slope_fd: Float,
    /// `(2 − θ(1+2λ))/(1+2λ)`.
    pub slope_formula: Float,
    pub quad_fd: Float,
    /// `4(3n² + 6λn + 2λ² − λ)/((3+2λ)(2λ+1)²)`, valid at the sharp θ.
    pub quad_formula: Option<Float>,
}

pub fn taylor_slope_check(lambda: &Param, n: usize, theta: &Param, prec: u32) -> Result<TaylorCheck> {
    if prec < 192 {
        return Err(Error::PrecisionTooLow(prec));
    }
    let family = FamilySpec::ultraspherical(lambda.clone())?;
    let ev = DeltaEvaluator::new(&family, n, &ThetaRule::Custom { theta: theta.clone() }, prec)?;
    let one = Float::with_val(prec, 1);
    let f = |t: &Float| ev.eval(&Float::with_val(prec, &one - t));
    let h1 = pow2(-30, prec);
    let h2 = pow2(-31, prec);
    let f0 = f(&Float::with_val(prec, 0));
    let d1 = |h: &Float| Float::with_val(prec, f(h) - &f0) / h;
    let slope_fd = Float::with_val(prec, d1(&h2) * 2u32) - d1(&h1);
    let s = |h: &Float| {
        let two_h = Float::with_val(prec, h * 2u32);
        let num = Float::with_val(prec, f(&two_h) - Float::with_val(prec, f(h) * 2u32)) + &f0;
        num / (Float::with_val(prec, h.square_ref()) * 2u32)
    };
    let quad_fd = Float::with_val(prec, s(&h2) * 2u32) - s(&h1);
    let l = lambda.to_float(prec);
    let t = theta.to_float(prec);
    let one_2l = Float::with_val(prec, &l * 2u32) + 1u32;
    let slope_formula = (2 - Float::with_val(prec, &t * &one_2l)) / &one_2l;
    let quad_formula = if lambda.signum() == Ordering::Equal {
        None
    } else {
        let nn = Float::with_val(prec, n as u64);
        let num = Float::with_val(prec, nn.square_ref()) * 3u32
            + Float::with_val(prec, &l * &nn) * 6u32
            + Float::with_val(prec, l.square_ref()) * 2u32
            - &l;
        let den = (Float::with_val(prec, &l * 2u32) + 3u32) * Float::with_val(prec, one_2l.square_ref());
        Some(num * 4u32 / den)
    };
    Ok(TaylorCheck {
        slope_fd,
        slope_formula,
        quad_fd,
        quad_formula,
    })
}

/// Exponent used by `check` cells.
#[derive(Clone, Debug, PartialEq)]
pub enum ThetaChoice {
    TheoremOne,
    /// Theorem-2 infimum for `a_n = n/(2(n+λ))` over `n ≤ horizon`.
    TheoremTwo { horizon: usize },
    Value(Param),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BatchMode {
    Check,
    SharpTheta,
}

#[derive(Clone, Debug)]
pub struct BatchOptions {
    pub theta: ThetaChoice,
    pub scan: ScanOptions,
    /// Use `certify_exact` for rational cells instead of a scan.
    pub exact: bool,
    pub tol: Float,
}

impl Default for BatchOptions {
    fn default() -> Self {
        BatchOptions {
            theta: ThetaChoice::TheoremOne,
            scan: ScanOptions::default(),
            exact: false,
            tol: Float::with_val(64, 1e-4),
        }
    }
}

#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum CellResult {
    Certificate(Certificate),
    Theta(ThetaEstimate),
}

#[derive(Clone, Debug)]
pub struct BatchRow {
    pub lambda: Param,
    pub n: usize,
    pub result: std::result::Result<CellResult, Error>,
}

pub fn resolve_theta(choice: &ThetaChoice, lambda: &Param, prec: u32) -> Result<Param> {
    match choice {
        ThetaChoice::TheoremOne => theta_theorem1(lambda, prec),
        ThetaChoice::Value(t) => Ok(t.clone()),
        ThetaChoice::TheoremTwo { horizon } => {
            let a = SequenceSpec::ClosedFormUltraspherical { lambda: lambda.clone() };
            let r = theta_theorem2(&a, &Horizon::Finite(*horizon), prec)?;
            Ok(match (&r.argmin, r.analytic_limit) {
                (crate::turan_core::ArgMin::Limit, Some(l)) => l,
                _ => Param::Real(r.theta),
            })
        }
    }
}

/// One cell of a `check` table: exact when requested and possible, else a scan on `[0, 1]`.
pub fn check_cell(lambda: &Param, n: usize, opts: &BatchOptions) -> Result<Certificate> {
    let theta = resolve_theta(&opts.theta, lambda, opts.scan.precision)?;
    if opts.exact {
        if let (Param::Exact(l), Param::Exact(t)) = (lambda, &theta) {
            return certify_exact(l, n, t);
        }
    }
    let family = FamilySpec::ultraspherical(lambda.clone())?;
    let prec = opts.scan.precision;
    scan_min(
        &family,
        n,
        &ThetaRule::Custom { theta },
        (&Float::with_val(prec, 0), &Float::with_val(prec, 1)),
        &opts.scan,
    )
}

/// Runs every `(λ, n)` cell in parallel; rows come back λ-major, then n.
pub fn batch_table(lambdas: &[Param], ns: &[usize], mode: BatchMode, opts: &BatchOptions) -> Result<Vec<BatchRow>> {
    if lambdas.is_empty() || ns.is_empty() {
        return Err(Error::Empty("batch grids must be nonempty"));
    }
    let cells: Vec<(Param, usize)> = lambdas
        .iter()
        .flat_map(|l| ns.iter().map(move |&n| (l.clone(), n)))
        .collect();
    Ok(cells
        .into_par_iter()
        .map(|(lambda, n)| {
            let result = match mode {
                BatchMode::Check => check_cell(&lambda, n, opts).map(CellResult::Certificate),
                BatchMode::SharpTheta => sharp_theta(&lambda, n, &opts.tol, &opts.scan).map(CellResult::Theta),
            };
            BatchRow { lambda, n, result }
        })
        .collect())
}
