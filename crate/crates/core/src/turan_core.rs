//! Turán determinants, exponent rules and the audit quantities behind the
//! resultant-positivity argument.

use std::cmp::Ordering;

use rug::{Float, Rational};

use crate::curves::ultraspherical_abc;
use crate::error::{Error, Result};
use crate::exact_algebra::RationalPoly;
use crate::families::{eval_exact, FamilySpec, PreparedRecurrence, SequenceSpec};
use crate::numeric::{abs_pow, check_precision, pow2, rat, to_decimal, Param};

/// How far the Theorem-2 infimum is taken.
#[derive(Clone, Debug, PartialEq)]
pub enum Horizon {
    /// Minimum over `1..=n` (plus the analytic limit when known).
    Finite(usize),
    /// The closed-form limit only; needs a closed-form sequence.
    AnalyticLimit,
}

/// Rule producing the weight in front of `p_n²`.
#[derive(Clone, Debug, PartialEq)]
pub enum ThetaRule {
    /// `θ = 4/(2−λ)` on `(−1/2, 0]`, `θ = 2/(1+2λ)` on `[0, ∞)`.
    TheoremOne { lambda: Param },
    /// `θ = inf_n F(n)` for a decreasing sequence in `(1/2, 1)`.
    TheoremTwoInf { a: SequenceSpec, horizon: Horizon },
    /// `x²/(x² + a_n − a_{n−1})`, monic symmetric families.
    HermiteFactor,
    Custom { theta: Param },
}

/// A rule resolved against a concrete family and index.
#[derive(Clone, Debug, PartialEq)]
pub enum Weight {
    Power { theta: Float, exact: Option<Rational> },
    /// `x²/(x² + d)` with `d = a_n − a_{n−1}` in monic normalization.
    HermiteFactor { d: Float, exact: Option<Rational> },
}

impl Weight {
    pub fn at(&self, x: &Float) -> Float {
        let prec = x.prec();
        match self {
            Weight::Power { theta, .. } => abs_pow(x, &Float::with_val(prec, theta)),
            Weight::HermiteFactor { d, .. } => {
                let x2 = Float::with_val(prec, x.square_ref());
                let den = Float::with_val(prec, &x2 + d);
                x2 / den
            }
        }
    }

    pub fn theta(&self) -> Option<&Float> {
        match self {
            Weight::Power { theta, .. } => Some(theta),
            Weight::HermiteFactor { .. } => None,
        }
    }
}

/// Theorem-1 exponent, exact.
pub fn theta_theorem1_exact(lambda: &Rational) -> Result<Rational> {
    if *lambda <= rat(-1, 2) {
        return Err(Error::InvalidParameter(format!("lambda must exceed -1/2, got {lambda}")));
    }
    Ok(if lambda.cmp0() == Ordering::Greater {
        Rational::from(2) / (Rational::from(1) + Rational::from(lambda * 2u32))
    } else {
        Rational::from(4) / (Rational::from(2) - lambda)
    })
}

/// Theorem-1 exponent; exact when `λ` is rational.
pub fn theta_theorem1(lambda: &Param, prec: u32) -> Result<Param> {
    match lambda {
        Param::Exact(l) => Ok(Param::Exact(theta_theorem1_exact(l)?)),
        Param::Real(l) => {
            if *l <= -0.5 {
                return Err(Error::InvalidParameter(format!(
                    "lambda must exceed -1/2, got {}",
                    to_decimal(l)
                )));
            }
            let l = Float::with_val(prec, l);
            let v = if l > 0 {
                Float::with_val(prec, 2) / (Float::with_val(prec, &l * 2u32) + 1u32)
            } else {
                Float::with_val(prec, 4) / (2 - l)
            };
            Ok(Param::Real(v))
        }
    }
}

/// `F(n) = 2 ln[(1−a_n)a_{n+1} / ((1−a_{n+1})a_n)] / ln[4(1−a_n)a_{n+1}² / a_n]`.
pub fn theorem2_f(a: &SequenceSpec, n: usize, prec: u32) -> Result<Float> {
    let p = prec + 64;
    let (num, den) = if a.is_exact() {
        let an = a.term_exact(n)?;
        let an1 = a.term_exact(n + 1)?;
        let one_an = Rational::from(1) - &an;
        let one_an1 = Rational::from(1) - &an1;
        let r1 = Rational::from(&one_an * &an1) / (Rational::from(&one_an1 * &an));
        let r2 = Rational::from(&one_an * &an1) * &an1 * 4u32 / &an;
        // ln(1 + (r − 1)) keeps full relative accuracy when r ≈ 1
        let l1 = Float::with_val(p, &(r1 - 1u32)).ln_1p();
        let l2 = Float::with_val(p, &(r2 - 1u32)).ln_1p();
        (l1 * 2u32, l2)
    } else {
        let an = a.term_float(n, p)?;
        let an1 = a.term_float(n + 1, p)?;
        let one_an = Float::with_val(p, 1 - &an);
        let one_an1 = Float::with_val(p, 1 - &an1);
        let r1 = Float::with_val(p, &one_an * &an1) / Float::with_val(p, &one_an1 * &an);
        let r2 = Float::with_val(p, &one_an * &an1) * &an1 * 4u32 / &an;
        (r1.ln() * 2u32, r2.ln())
    };
    Ok(Float::with_val(prec, num / den))
}

/// Checks `1/2 < a_k < 1` for `k ≤ last` and strict decrease.
pub fn validate_theorem2_sequence(a: &SequenceSpec, last: usize, prec: u32) -> Result<()> {
    let mut prev: Option<Float> = None;
    for k in 1..=last {
        let v = a.term_float(k, prec)?;
        if v <= 0.5 || v >= 1 {
            return Err(Error::Hypothesis(format!(
                "a_{k} = {} is not in (1/2, 1)",
                to_decimal(&v)
            )));
        }
        if let Some(p) = &prev {
            if v >= *p {
                return Err(Error::Hypothesis(format!("a_n is not strictly decreasing at n = {k}")));
            }
        }
        prev = Some(v);
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq)]
pub enum ArgMin {
    Index(usize),
    Limit,
}

#[derive(Clone, Debug)]
pub struct TheoremTwoResult {
    pub theta: Float,
    pub argmin: ArgMin,
    /// `(n, F(n))` for `n = 1..=horizon`.
    pub f_values: Vec<(usize, Float)>,
    pub finite_min: Option<(usize, Float)>,
    pub analytic_limit: Option<Param>,
    /// Whether the finite minimum sits above the analytic limit.
    pub finite_min_exceeds_limit: Option<bool>,
    /// True when only a truncated minimum was available.
    pub truncated: bool,
}

/// Theorem-2 exponent over `n = 1..=horizon`, with the analytic limit
/// `4/(2−λ)` for the ultraspherical closed form.
pub fn theta_theorem2(a: &SequenceSpec, horizon: &Horizon, prec: u32) -> Result<TheoremTwoResult> {
    check_precision(prec)?;
    let limit = match a {
        SequenceSpec::ClosedFormUltraspherical { lambda } => {
            if lambda.signum() != Ordering::Less {
                return Err(Error::Hypothesis("need lambda < 0 so that a_n > 1/2".into()));
            }
            Some(theta_theorem1(lambda, prec)?)
        }
        _ => None,
    };
    let h = match horizon {
        Horizon::Finite(h) => *h,
        Horizon::AnalyticLimit => 0,
    };
    if h == 0 && limit.is_none() {
        return Err(Error::Hypothesis(
            "an analytic limit needs a closed-form sequence; give a finite horizon".into(),
        ));
    }
    validate_theorem2_sequence(a, h.max(1) + 1, prec)?;
    let f_values = (1..=h)
        .map(|n| Ok((n, theorem2_f(a, n, prec)?)))
        .collect::<Result<Vec<_>>>()?;
    let finite_min = f_values
        .iter()
        .min_by(|x, y| x.1.partial_cmp(&y.1).unwrap_or(Ordering::Equal))
        .cloned();
    let limit_f = limit.as_ref().map(|l| l.to_float(prec));
    let (theta, argmin) = match (&finite_min, &limit_f) {
        (Some((n, v)), Some(l)) => {
            if v < l {
                (v.clone(), ArgMin::Index(*n))
            } else {
                (l.clone(), ArgMin::Limit)
            }
        }
        (Some((n, v)), None) => (v.clone(), ArgMin::Index(*n)),
        (None, Some(l)) => (l.clone(), ArgMin::Limit),
        (None, None) => unreachable!(),
    };
    Ok(TheoremTwoResult {
        theta,
        argmin,
        finite_min_exceeds_limit: match (&finite_min, &limit_f) {
            (Some((_, v)), Some(l)) => Some(v > l),
            _ => None,
        },
        finite_min,
        analytic_limit: limit,
        truncated: limit_f.is_none(),
        f_values,
    })
}

impl ThetaRule {
    /// Fixes the weight for `family` at index `n`.
    pub fn resolve(&self, family: &FamilySpec, n: usize, prec: u32) -> Result<Weight> {
        match self {
            ThetaRule::TheoremOne { lambda } => {
                let t = theta_theorem1(lambda, prec)?;
                Ok(power_weight(&t, prec))
            }
            ThetaRule::Custom { theta } => {
                if theta.signum() == Ordering::Less {
                    return Err(Error::InvalidParameter("theta must be nonnegative".into()));
                }
                Ok(power_weight(theta, prec))
            }
            ThetaRule::TheoremTwoInf { a, horizon } => {
                let r = theta_theorem2(a, horizon, prec)?;
                let exact = match (&r.argmin, &r.analytic_limit) {
                    (ArgMin::Limit, Some(Param::Exact(l))) => Some(l.clone()),
                    _ => None,
                };
                Ok(Weight::Power { theta: r.theta, exact })
            }
            ThetaRule::HermiteFactor => hermite_weight(family, n, prec),
        }
    }
}

fn power_weight(theta: &Param, prec: u32) -> Weight {
    Weight::Power {
        theta: theta.to_float(prec),
        exact: theta.as_rational().cloned(),
    }
}

/// Monic-normalized `a_k` of a symmetric family with `b_k` constant.
fn monic_a(family: &FamilySpec, k: usize) -> Result<Option<Rational>> {
    if k == 0 {
        return Ok(Some(Rational::new()));
    }
    match family {
        FamilySpec::MonicSymmetric { a } if a.is_exact() => Ok(Some(a.term_exact(k)?)),
        FamilySpec::MonicSymmetric { .. } => Ok(None),
        FamilySpec::GeneralThreeTerm { .. } if family.is_symmetric() && family.is_exact() => {
            let s = family.step_exact(k)?;
            let s_prev = family.step_exact(k - 1)?;
            if s.b != s_prev.b {
                return Err(Error::InvalidPairing(
                    "Hermite factor needs a constant leading recurrence coefficient b_n".into(),
                ));
            }
            Ok(Some(s.a / (s.b.clone() * &s.b)))
        }
        _ => Err(Error::InvalidPairing(format!(
            "Hermite factor applies to monic symmetric families, not {family}"
        ))),
    }
}

fn hermite_weight(family: &FamilySpec, n: usize, prec: u32) -> Result<Weight> {
    match (monic_a(family, n)?, monic_a(family, n - 1)?) {
        (Some(an), Some(ap)) => {
            let d = an - ap;
            Ok(Weight::HermiteFactor {
                d: Float::with_val(prec, &d),
                exact: Some(d),
            })
        }
        _ => {
            let d = Float::with_val(prec, family.a_coefficient(n, prec)? - family.a_coefficient(n - 1, prec)?);
            Ok(Weight::HermiteFactor { d, exact: None })
        }
    }
}

/// Repeated evaluation of `Δ_n(x) = w(x) p_n² − p_{n−1} p_{n+1}`.
#[derive(Clone, Debug)]
pub struct DeltaEvaluator {
    rec: PreparedRecurrence,
    n: usize,
    weight: Weight,
}

impl DeltaEvaluator {
    pub fn new(family: &FamilySpec, n: usize, rule: &ThetaRule, prec: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("Turán determinant needs n >= 1".into()));
        }
        check_precision(prec)?;
        let weight = rule.resolve(family, n, prec)?;
        Self::with_weight(family, n, weight, prec)
    }

    pub fn with_weight(family: &FamilySpec, n: usize, weight: Weight, prec: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("Turán determinant needs n >= 1".into()));
        }
        Ok(DeltaEvaluator {
            rec: PreparedRecurrence::new(family, n, prec)?,
            n,
            weight,
        })
    }

    pub fn precision(&self) -> u32 {
        self.rec.precision()
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn eval(&self, x: &Float) -> Float {
        let prec = self.rec.precision();
        let x = Float::with_val(prec, x);
        let (pm, p, pp) = self.rec.values(self.n, &x);
        let w = self.weight.at(&x);
        let sq = Float::with_val(prec, p.square_ref());
        Float::with_val(prec, w * sq) - Float::with_val(prec, &pm * &pp)
    }

    /// `Δ` together with the magnitude of its two terms (roundoff scale).
    pub fn eval_with_scale(&self, x: &Float) -> (Float, Float) {
        let prec = self.rec.precision();
        let x = Float::with_val(prec, x);
        let (pm, p, pp) = self.rec.values(self.n, &x);
        let w = self.weight.at(&x);
        let first = Float::with_val(prec, w * Float::with_val(prec, p.square_ref()));
        let second = Float::with_val(prec, &pm * &pp);
        let scale = Float::with_val(prec, first.abs_ref()) + Float::with_val(prec, second.abs_ref());
        (first - second, scale)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Backend {
    Numeric,
    Exact,
}

#[derive(Clone, Debug)]
pub struct TuranSample {
    pub family: FamilySpec,
    pub n: usize,
    pub theta_rule: ThetaRule,
    pub x: Float,
    pub delta: Float,
    pub backend: Backend,
    pub precision_bits: u32,
}

/// `Δ_n(x)` for any family/rule pairing.
pub fn turan_delta(family: &FamilySpec, n: usize, rule: &ThetaRule, x: &Float, prec: u32) -> Result<TuranSample> {
    let ev = DeltaEvaluator::new(family, n, rule, prec)?;
    Ok(TuranSample {
        family: family.clone(),
        n,
        theta_rule: rule.clone(),
        x: Float::with_val(prec, x),
        delta: ev.eval(x),
        backend: Backend::Numeric,
        precision_bits: prec,
    })
}

/// Exact `Δ_n(x)` at rational `x`; the weight must be rational there
/// (integer θ or the Hermite factor).
pub fn turan_delta_exact(family: &FamilySpec, n: usize, rule: &ThetaRule, x: &Rational) -> Result<Rational> {
    if n == 0 {
        return Err(Error::InvalidParameter("Turán determinant needs n >= 1".into()));
    }
    let weight = match rule.resolve(family, n, 64)? {
        Weight::Power { exact: Some(t), .. } if t.denom() == &1u32 => {
            let e = t.numer().to_u32().ok_or_else(|| Error::InvalidParameter("theta too large".into()))?;
            let ax = Rational::from(x.abs_ref());
            if e == 0 {
                Rational::from(1)
            } else {
                rug::ops::Pow::pow(ax, e)
            }
        }
        Weight::HermiteFactor { exact: Some(d), .. } => {
            let x2 = Rational::from(x.square_ref());
            x2.clone() / (x2 + d)
        }
        _ => {
            return Err(Error::NotRational(
                "weight is irrational at this point; use the numeric backend".into(),
            ))
        }
    };
    let [pm, p, pp] = eval_exact(family, n, x)?;
    Ok(weight * Rational::from(p.square_ref()) - pm * pp)
}

/// `((xb_n+c_n)²/(4a_n)) p_n² − p_{n−1}p_{n+1} − (p_{n+1} − a_n p_{n−1})²/(4a_n)`,
/// identically zero for every three-term recurrence.
pub fn identity_residual(family: &FamilySpec, n: usize, x: &Rational) -> Result<Rational> {
    let s = family.step_exact(n)?;
    if s.a == 0 {
        return Err(Error::InvalidParameter(format!("a_{n} = 0 in the recurrence")));
    }
    let [pm, p, pp] = eval_exact(family, n, x)?;
    let four_a = Rational::from(&s.a * 4u32);
    let lin = Rational::from(x * &s.b) + &s.c;
    let lhs = Rational::from(lin.square_ref()) / &four_a * Rational::from(p.square_ref()) - Rational::from(&pm * &pp);
    let diff = pp - Rational::from(&s.a * &pm);
    let rhs = Rational::from(diff.square_ref()) / four_a;
    Ok(lhs - rhs)
}

#[derive(Clone, Debug)]
pub struct UniversalBound {
    /// `1 + λ²/(n(n+2λ))`.
    pub weight: Float,
    pub weight_exact: Option<Rational>,
    /// `weight·x²·y_n² − y_{n−1}y_{n+1}`.
    pub delta: Float,
}

/// The bound that every ultraspherical family satisfies on all of ℝ.
pub fn universal_bound_check(lambda: &Param, n: usize, x: &Float, prec: u32) -> Result<UniversalBound> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be >= 1".into()));
    }
    let family = FamilySpec::ultraspherical(lambda.clone())?;
    let weight_exact = lambda.as_rational().map(|l| {
        let den = Rational::from(n) * (Rational::from(n) + Rational::from(l * 2u32));
        Rational::from(1) + Rational::from(l.square_ref()) / den
    });
    let weight = match &weight_exact {
        Some(w) => Float::with_val(prec, w),
        None => {
            let l = lambda.to_float(prec);
            let den = Float::with_val(prec, &l * 2u32) + n as u64;
            Float::with_val(prec, l.square_ref()) / (den * n as u64) + 1u32
        }
    };
    let ev = DeltaEvaluator::with_weight(
        &family,
        n,
        Weight::Power {
            theta: Float::with_val(prec, 2),
            exact: Some(Rational::from(2)),
        },
        prec,
    )?;
    let x = Float::with_val(prec, x);
    let (pm, p, pp) = ev.rec.values(n, &x);
    let x2 = Float::with_val(prec, x.square_ref());
    let first = Float::with_val(prec, &weight * x2) * Float::with_val(prec, p.square_ref());
    let delta = first - Float::with_val(prec, &pm * &pp);
    Ok(UniversalBound {
        weight,
        weight_exact,
        delta,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonotoneHypothesis {
    StrictlyIncreasing,
    /// Non-decreasing with some equal neighbours: the boundary case.
    Edge,
}

#[derive(Clone, Debug)]
pub struct AskeyReport {
    pub hypothesis: MonotoneHypothesis,
    pub n_max: usize,
    pub points: usize,
    /// Smallest value of `p_n² − p_{n−1}p_{n+1}` and its `(n, x)`.
    pub min_value: Float,
    pub argmin: (usize, Float),
    pub all_nonnegative: bool,
}

/// Plain Turán nonnegativity for monic symmetric families with increasing `a_n`.
pub fn askey_turan_check(a: &SequenceSpec, n_max: usize, grid: &[Float], prec: u32) -> Result<AskeyReport> {
    if n_max == 0 || grid.is_empty() {
        return Err(Error::Empty("askey check needs n_max >= 1 and a nonempty grid"));
    }
    check_precision(prec)?;
    let mut hypothesis = MonotoneHypothesis::StrictlyIncreasing;
    let mut prev = a.term_float(1, prec)?;
    for k in 2..=n_max {
        let v = a.term_float(k, prec)?;
        match v.partial_cmp(&prev) {
            Some(Ordering::Less) | None => {
                return Err(Error::Hypothesis(format!("a_n decreases at n = {k}")));
            }
            Some(Ordering::Equal) => hypothesis = MonotoneHypothesis::Edge,
            Some(Ordering::Greater) => {}
        }
        prev = v;
    }
    let family = FamilySpec::MonicSymmetric { a: a.clone() };
    let one = Weight::Power {
        theta: Float::with_val(prec, 0),
        exact: Some(Rational::new()),
    };
    let tol = pow2(-(prec as i32) / 2, prec);
    let mut min_value: Option<(Float, usize, Float)> = None;
    let mut all_nonnegative = true;
    for n in 1..=n_max {
        let ev = DeltaEvaluator::with_weight(&family, n, one.clone(), prec)?;
        for x in grid {
            let (v, scale) = ev.eval_with_scale(x);
            if v < -Float::with_val(prec, &tol * &scale) {
                all_nonnegative = false;
            }
            if min_value.as_ref().is_none_or(|(m, _, _)| v < *m) {
                min_value = Some((v, n, x.clone()));
            }
        }
    }
    let (min_value, n_at, x_at) = min_value.expect("nonempty grid");
    Ok(AskeyReport {
        hypothesis,
        n_max,
        points: grid.len() * n_max,
        min_value,
        argmin: (n_at, x_at),
        all_nonnegative,
    })
}

// ---------------------------------------------------------------------------
// Audit of the resultant-positivity argument.

/// `ρ(x) = 1 − 2(1+λ)x² + (1+2λ)x^{2+θ}`.
pub fn rho(lambda: &Float, theta: &Float, x: &Float) -> Float {
    let prec = x.prec();
    let x2 = Float::with_val(prec, x.square_ref());
    let xt = abs_pow(x, theta);
    let a = Float::with_val(prec, lambda + 1u32) * 2u32 * &x2;
    let b = Float::with_val(prec, lambda * 2u32) + 1u32;
    Float::with_val(prec, 1) - a + b * x2 * xt
}

/// `η(x) = 1 − (3+λ)x² + (1 + x² + λx²)x^θ`.
pub fn eta(lambda: &Float, theta: &Float, x: &Float) -> Float {
    let prec = x.prec();
    let x2 = Float::with_val(prec, x.square_ref());
    let xt = abs_pow(x, theta);
    let a = Float::with_val(prec, lambda + 3u32) * &x2;
    let b = Float::with_val(prec, lambda + 1u32) * &x2 + 1u32;
    Float::with_val(prec, 1) - a + b * xt
}

/// `D_n(x,θ) = n(n+2λ+1)(1−x^θ)(1−2x+x^θ)(1+2x+x^θ) + 4λη(x)`.
pub fn d_n(lambda: &Float, n: usize, theta: &Float, x: &Float) -> Float {
    let prec = x.prec();
    let xt = abs_pow(x, theta);
    let k = Float::with_val(prec, lambda * 2u32) + (n as u64 + 1);
    let k = k * n as u64;
    let two_x = Float::with_val(prec, x * 2u32);
    let f1 = Float::with_val(prec, 1 - &xt);
    let f2 = Float::with_val(prec, 1 - &two_x) + &xt;
    let f3 = Float::with_val(prec, 1 + &two_x) + &xt;
    k * f1 * f2 * f3 + Float::with_val(prec, lambda * 4u32) * eta(lambda, theta, x)
}

/// `g(n,λ) = 2 ln[(n+1)(n+2λ+1)/(n+λ+1)²] − λ ln[n(n+2λ+1)/((n+1)(n+2λ))]`.
pub fn g_function(lambda: &Rational, n: usize, prec: u32) -> Float {
    let nn = Rational::from(n);
    let n1 = Rational::from(n + 1);
    let l2 = Rational::from(lambda * 2u32);
    let r1 = (&n1 * (Rational::from(&n1 + &l2)))
        / Rational::from((Rational::from(&n1 + lambda)).square_ref());
    let r2 = (&nn * Rational::from(&n1 + &l2)) / (&n1 * Rational::from(&nn + &l2));
    let p = prec + 64;
    let a = Float::with_val(p, &(r1 - 1u32)).ln_1p() * 2u32;
    let b = Float::with_val(p, &(r2 - 1u32)).ln_1p() * Float::with_val(p, lambda);
    Float::with_val(prec, a - b)
}

/// `A² − 4wBC − z(nz+2λ)((n+2λ+1)z−2λ)(n(n+2λ+1)z+2λ)` in `w = x^θ`, `z = 1−w`.
pub fn case2_factorization_residual(lambda: &Rational, n: usize) -> RationalPoly {
    let (a, b, c) = ultraspherical_abc(lambda, n);
    let w = RationalPoly::x();
    let lhs = &(&a * &a) - &(&(&w * &b) * &c).scale(&Rational::from(4));
    &lhs - &case2_product(lambda, n)
}

pub(crate) fn case2_product(lambda: &Rational, n: usize) -> RationalPoly {
    let z = RationalPoly::from_i64s(&[1, -1]);
    let nn = Rational::from(n);
    let l2 = Rational::from(lambda * 2u32);
    let k = Rational::from(&nn + &l2) + 1u32;
    let lin = |slope: Rational, shift: Rational| &z.scale(&slope) + &RationalPoly::constant(shift);
    let f1 = lin(nn.clone(), l2.clone());
    let f2 = lin(k.clone(), -l2.clone());
    let f3 = lin(Rational::from(&nn * &k), l2.clone());
    &(&(&z * &f1) * &f2) * &f3
}

/// `A² − wBC − (1−w)(1−a_n−a_n w)(a_{n+1}−(1−a_{n+1})w)(a_{n+1}(1−a_n)−a_n(1−a_{n+1})w)`
/// for the symmetric-unit curves.
pub fn theorem2_factorization_residual(a_n: &Rational, a_next: &Rational) -> RationalPoly {
    let one = Rational::from(1);
    let om_n = Rational::from(&one - a_n);
    let om_next = Rational::from(&one - a_next);
    let p = |c: &[Rational]| RationalPoly::new(c.to_vec());
    let a = p(&[
        -Rational::from(&om_n * a_next),
        Rational::new(),
        Rational::from(a_n * &om_next),
    ]);
    let b = p(&[a_next.clone(), -a_n.clone()]);
    let c = p(&[om_n.clone(), -om_next.clone()]);
    let w = RationalPoly::x();
    let lhs = &(&a * &a) - &(&(&w * &b) * &c);
    let rhs = &(&(&p(&[one.clone(), -one.clone()]) * &p(&[om_n.clone(), -a_n.clone()]))
        * &p(&[a_next.clone(), -om_next.clone()]))
        * &p(&[Rational::from(a_next * &om_n), -Rational::from(a_n * &om_next)]);
    &lhs - &rhs
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LemmaCase {
    /// `λ > 0`
    Positive,
    /// `−1/2 < λ < 0`
    Negative,
    /// `λ = 0`: the curves degenerate and nothing needs proof.
    Chebyshev,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AuditItem {
    pub name: String,
    pub value: String,
    pub claim: String,
    pub holds: bool,
}

#[derive(Clone, Debug)]
pub struct AuditReport {
    pub lambda: Rational,
    pub n: usize,
    pub theta: Rational,
    pub case: LemmaCase,
    pub items: Vec<AuditItem>,
    pub case2_residual: Option<RationalPoly>,
    pub theorem2_residual: Option<RationalPoly>,
}

impl AuditReport {
    pub fn all_hold(&self) -> bool {
        self.items.iter().all(|i| i.holds)
    }
}

/// Evaluates ρ, η, D_n and g and checks their sign claims on `x` (or a
/// 199-point interior grid when `x` is `None`), plus both factorization
/// identities as exact polynomials in `w`.
pub fn audit_lemma_quantities(
    lambda: &Rational,
    n: usize,
    theta: Option<&Rational>,
    x: Option<&Float>,
    prec: u32,
) -> Result<AuditReport> {
    check_precision(prec)?;
    if n == 0 {
        return Err(Error::InvalidParameter("audit needs n >= 1".into()));
    }
    let theta = match theta {
        Some(t) => t.clone(),
        None => theta_theorem1_exact(lambda)?,
    };
    let case = match lambda.cmp0() {
        Ordering::Greater => LemmaCase::Positive,
        Ordering::Less if *lambda > rat(-1, 2) => LemmaCase::Negative,
        Ordering::Less => {
            return Err(Error::InvalidParameter(format!("lambda must exceed -1/2, got {lambda}")));
        }
        Ordering::Equal => LemmaCase::Chebyshev,
    };
    let xs: Vec<Float> = match x {
        Some(x) => vec![Float::with_val(prec, x)],
        None => (1..200).map(|i| Float::with_val(prec, i) / 200u32).collect(),
    };
    let lf = Float::with_val(prec, lambda);
    let tf = Float::with_val(prec, &theta);
    let mut items = Vec::new();
    let mut case2_residual = None;
    let mut theorem2_residual = None;

    let min_over = |f: &dyn Fn(&Float) -> Float| -> (Float, Float) {
        xs.iter()
            .map(|x| (f(x), x.clone()))
            .min_by(|a, b| a.0.partial_cmp(&b.0).unwrap_or(Ordering::Equal))
            .expect("nonempty")
    };

    match case {
        LemmaCase::Positive => {
            let (v, at) = min_over(&|x| rho(&lf, &tf, x));
            items.push(sign_item("rho(x)", &v, &at, "> 0 on (0,1)", v > 0));
            let one = Float::with_val(prec, 1);
            let r1 = rho(&lf, &tf, &one);
            items.push(AuditItem {
                name: "rho(1)".into(),
                value: to_decimal(&r1),
                claim: "= 0".into(),
                holds: r1.clone().abs() < pow2(-(prec as i32) / 2, prec),
            });
            let (v, at) = min_over(&|x| eta(&lf, &tf, x));
            items.push(sign_item("eta(x)", &v, &at, "> 0 on (0,1)", v > 0));
            let (v, at) = min_over(&|x| d_n(&lf, n, &tf, x));
            items.push(sign_item("D_n(x,theta)", &v, &at, "> 0 on (0,1)", v > 0));
            // D_n = (R_n − R_0) / (n(n+2λ+1)(1 − x^θ))
            let scheme_n = crate::curves::Scheme::Ultraspherical {
                lambda: Param::Exact(lambda.clone()),
                n,
                theta: Param::Exact(theta.clone()),
            };
            let scheme_0 = crate::curves::Scheme::Ultraspherical {
                lambda: Param::Exact(lambda.clone()),
                n: 0,
                theta: Param::Exact(theta.clone()),
            };
            let mut worst = Float::with_val(prec, 0);
            for x in &xs {
                let rn = crate::curves::resultant_rn(&scheme_n, x, prec)?;
                let r0 = crate::curves::resultant_rn(&scheme_0, x, prec)?;
                let k = (Float::with_val(prec, &lf * 2u32) + (n as u64 + 1)) * n as u64;
                let den = k * (1 - abs_pow(x, &tf));
                let via = (rn - r0) / den;
                let d = d_n(&lf, n, &tf, x);
                let rel = Float::with_val(prec, &via - &d).abs() / (d.abs() + 1u32);
                if rel > worst {
                    worst = rel;
                }
            }
            items.push(AuditItem {
                name: "D_n vs (R_n-R_0)/(n(n+2l+1)(1-x^theta))".into(),
                value: to_decimal(&worst),
                claim: "relative gap ~ 0".into(),
                holds: worst < pow2(-(prec as i32) / 2, prec),
            });
        }
        LemmaCase::Negative => {
            let g = g_function(lambda, n, prec);
            items.push(AuditItem {
                name: "g(n,lambda)".into(),
                value: to_decimal(&g),
                claim: "> 0".into(),
                holds: g > 0,
            });
            let res = case2_factorization_residual(lambda, n);
            items.push(AuditItem {
                name: "A^2-4wBC - z(nz+2l)((n+2l+1)z-2l)(n(n+2l+1)z+2l)".into(),
                value: res.to_string(),
                claim: "= 0 identically".into(),
                holds: res.is_zero(),
            });
            case2_residual = Some(res);
            let seq = SequenceSpec::ClosedFormUltraspherical {
                lambda: Param::Exact(lambda.clone()),
            };
            let r2 = theorem2_factorization_residual(&seq.term_exact(n)?, &seq.term_exact(n + 1)?);
            items.push(AuditItem {
                name: "A^2-wBC factorization (symmetric-unit curves)".into(),
                value: r2.to_string(),
                claim: "= 0 identically".into(),
                holds: r2.is_zero(),
            });
            theorem2_residual = Some(r2);
            // x0^θ vs the positivity threshold of the factored bound
            let x0 = crate::curves::vertex(
                &crate::curves::Scheme::Ultraspherical {
                    lambda: Param::Exact(lambda.clone()),
                    n,
                    theta: Param::Exact(theta.clone()),
                },
                crate::curves::Which::Next,
                prec,
            )?;
            let x0t = abs_pow(&x0.x_vertex, &tf);
            let nn = Rational::from(n);
            let l2 = Rational::from(lambda * 2u32);
            let thr = (Rational::from(n + 1) * Rational::from(&nn + &l2))
                / (nn.clone() * (Rational::from(&nn + &l2) + 1u32));
            items.push(AuditItem {
                name: "x0^theta - (n+1)(n+2l)/(n(n+2l+1))".into(),
                value: to_decimal(&Float::with_val(prec, &x0t - &thr)),
                claim: "> 0".into(),
                holds: x0t > thr,
            });
        }
        LemmaCase::Chebyshev => {
            items.push(AuditItem {
                name: "lambda".into(),
                value: "0".into(),
                claim: "curves degenerate to double lines; nothing to audit".into(),
                holds: true,
            });
        }
    }
    Ok(AuditReport {
        lambda: lambda.clone(),
        n,
        theta,
        case,
        items,
        case2_residual,
        theorem2_residual,
    })
}

fn sign_item(name: &str, v: &Float, at: &Float, claim: &str, holds: bool) -> AuditItem {
    AuditItem {
        name: name.into(),
        value: format!("{} at x={}", to_decimal(v), to_decimal(at)),
        claim: claim.into(),
        holds,
    }
}
