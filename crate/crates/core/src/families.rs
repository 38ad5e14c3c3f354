//! Recurrence-defined polynomial families and their evaluation.
//!
//! Every family is reduced to the general form
//! `p_{k+1} = (b_k x + c_k) p_k − a_k p_{k−1}` with `p_{−1} = 0`, `p_0 = 1`.

use std::cmp::Ordering;
use std::fmt;

use rug::{Float, Rational};

use crate::error::{Error, Result};
use crate::exact_algebra::RationalPoly;
use crate::numeric::{check_precision, Param};

/// Coefficient sequence `a_n`.
#[derive(Clone, Debug, PartialEq)]
pub enum SequenceSpec {
    /// `a_n = n / (2(n + λ))`, the ultraspherical sequence in symmetric-unit form.
    ClosedFormUltraspherical { lambda: Param },
    /// `a_n = n / 2`, monic Hermite.
    ClosedFormHermiteMonic,
    /// `a_n = slope·n + intercept`.
    Linear { slope: Rational, intercept: Rational },
    /// Explicit values; `values[0]` is `a_start`. Out-of-range queries fail.
    ExplicitList { values: Vec<Rational>, start: usize },
}

impl SequenceSpec {
    /// Explicit list indexed from `n = 1`.
    pub fn list(values: Vec<Rational>) -> Self {
        SequenceSpec::ExplicitList { values, start: 1 }
    }

    pub fn constant(c: Rational) -> Self {
        SequenceSpec::Linear {
            slope: Rational::new(),
            intercept: c,
        }
    }

    pub fn term_exact(&self, n: usize) -> Result<Rational> {
        match self {
            SequenceSpec::ClosedFormUltraspherical { lambda } => {
                if n == 0 {
                    return Ok(Rational::new());
                }
                let l = lambda.require_rational()?;
                let den = Rational::from(n) + l;
                Ok(Rational::from(n) / (den * 2u32))
            }
            SequenceSpec::ClosedFormHermiteMonic => Ok(Rational::from((n as u64, 2u64))),
            SequenceSpec::Linear { slope, intercept } => {
                Ok(Rational::from(slope * n as u64) + intercept)
            }
            SequenceSpec::ExplicitList { values, start } => {
                let last = start + values.len().saturating_sub(1);
                if n < *start || n >= start + values.len() {
                    return Err(Error::IndexOutOfRange {
                        index: n,
                        first: *start,
                        last,
                    });
                }
                Ok(values[n - start].clone())
            }
        }
    }

    pub fn term_float(&self, n: usize, prec: u32) -> Result<Float> {
        match self {
            SequenceSpec::ClosedFormUltraspherical { lambda: Param::Real(l) } => {
                if n == 0 {
                    return Ok(Float::with_val(prec, 0));
                }
                let den = Float::with_val(prec, l + n as u64) * 2u32;
                Ok(Float::with_val(prec, n as u64) / den)
            }
            _ => Ok(Float::with_val(prec, &self.term_exact(n)?)),
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(
            self,
            SequenceSpec::ClosedFormUltraspherical {
                lambda: Param::Real(_)
            }
        )
    }

    /// Largest valid index, `None` when unbounded.
    pub fn last_index(&self) -> Option<usize> {
        match self {
            SequenceSpec::ExplicitList { values, start } => {
                Some((start + values.len()).saturating_sub(1))
            }
            _ => None,
        }
    }
}

impl fmt::Display for SequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceSpec::ClosedFormUltraspherical { lambda } => {
                write!(f, "n/(2(n+{lambda}))")
            }
            SequenceSpec::ClosedFormHermiteMonic => write!(f, "n/2"),
            SequenceSpec::Linear { slope, intercept } => write!(f, "{slope}*n+{intercept}"),
            SequenceSpec::ExplicitList { values, start } => {
                write!(f, "list[{start}..{}]", start + values.len())
            }
        }
    }
}

/// One step `p_{k+1} = (b x + c) p_k − a p_{k−1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Step<T> {
    pub a: T,
    pub b: T,
    pub c: T,
}

#[derive(Clone, Debug, PartialEq)]
pub enum FamilySpec {
    /// Normalized ultraspherical `G_n = C_n^(λ)/C_n^(λ)(1)`, `λ > −1/2`.
    /// `λ = 0` is the Chebyshev-T limit family.
    Ultraspherical { lambda: Param },
    /// `(1 − a_n) p_{n+1} = x p_n − a_n p_{n−1}`, `0 < a_n < 1`, `p_n(1) = 1`.
    SymmetricUnit { a: SequenceSpec },
    /// `p_{n+1} = x p_n − a_n p_{n−1}`, `a_n > 0`.
    MonicSymmetric { a: SequenceSpec },
    /// `p_{n+1} = (b_n x + c_n) p_n − a_n p_{n−1}`; `b`, `c` are queried from `n = 0`.
    GeneralThreeTerm {
        a: SequenceSpec,
        b: SequenceSpec,
        c: SequenceSpec,
    },
}

impl FamilySpec {
    pub fn ultraspherical(lambda: impl Into<Param>) -> Result<Self> {
        let f = FamilySpec::Ultraspherical {
            lambda: lambda.into(),
        };
        f.validate()?;
        Ok(f)
    }

    pub fn legendre() -> Self {
        FamilySpec::Ultraspherical {
            lambda: Param::ratio(1, 2),
        }
    }

    pub fn chebyshev_t() -> Self {
        FamilySpec::Ultraspherical {
            lambda: Param::from(0),
        }
    }

    pub fn hermite_monic() -> Self {
        FamilySpec::MonicSymmetric {
            a: SequenceSpec::ClosedFormHermiteMonic,
        }
    }

    /// Physicists' Hermite `H_{n+1} = 2x H_n − 2n H_{n−1}`.
    pub fn hermite_standard() -> Self {
        FamilySpec::GeneralThreeTerm {
            a: SequenceSpec::Linear {
                slope: Rational::from(2),
                intercept: Rational::new(),
            },
            b: SequenceSpec::constant(Rational::from(2)),
            c: SequenceSpec::constant(Rational::new()),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if let FamilySpec::Ultraspherical { lambda } = self {
            if lambda.cmp_rational(&Rational::from((-1, 2))) != Ordering::Greater {
                return Err(Error::InvalidParameter(format!(
                    "ultraspherical requires lambda > -1/2, got {lambda}"
                )));
            }
        }
        Ok(())
    }

    /// `p_n(−x) = (−1)^n p_n(x)`.
    pub fn is_symmetric(&self) -> bool {
        match self {
            FamilySpec::GeneralThreeTerm { c, .. } => match c {
                SequenceSpec::Linear { slope, intercept } => *slope == 0 && *intercept == 0,
                SequenceSpec::ExplicitList { values, .. } => values.iter().all(|v| *v == 0),
                _ => false,
            },
            _ => true,
        }
    }

    /// Families normalized by `p_n(1) = 1`.
    pub fn is_normalized_at_one(&self) -> bool {
        matches!(
            self,
            FamilySpec::Ultraspherical { .. } | FamilySpec::SymmetricUnit { .. }
        )
    }

    pub fn is_exact(&self) -> bool {
        match self {
            FamilySpec::Ultraspherical { lambda } => lambda.as_rational().is_some(),
            FamilySpec::SymmetricUnit { a } | FamilySpec::MonicSymmetric { a } => a.is_exact(),
            FamilySpec::GeneralThreeTerm { a, b, c } => a.is_exact() && b.is_exact() && c.is_exact(),
        }
    }

    /// Recurrence coefficients of step `k` in exact arithmetic.
    pub fn step_exact(&self, k: usize) -> Result<Step<Rational>> {
        self.validate()?;
        match self {
            FamilySpec::Ultraspherical { lambda } => {
                let l = lambda.require_rational()?;
                if k == 0 {
                    return Ok(unit_first_step());
                }
                let den = Rational::from(k) + Rational::from(l * 2u32);
                let b = (Rational::from(k) + l) * 2u32 / &den;
                let a = Rational::from(k) / den;
                Ok(Step {
                    a,
                    b,
                    c: Rational::new(),
                })
            }
            FamilySpec::SymmetricUnit { a } => {
                if k == 0 {
                    return Ok(unit_first_step());
                }
                let ak = a.term_exact(k)?;
                if ak <= 0 || ak >= 1 {
                    return Err(Error::SequenceConstraint {
                        index: k,
                        value: ak.to_string(),
                        constraint: "0 < a_n < 1",
                    });
                }
                let one_minus = Rational::from(1) - &ak;
                Ok(Step {
                    a: Rational::from(&ak / &one_minus),
                    b: one_minus.recip(),
                    c: Rational::new(),
                })
            }
            FamilySpec::MonicSymmetric { a } => {
                if k == 0 {
                    return Ok(unit_first_step());
                }
                let ak = a.term_exact(k)?;
                if ak <= 0 {
                    return Err(Error::SequenceConstraint {
                        index: k,
                        value: ak.to_string(),
                        constraint: "a_n > 0",
                    });
                }
                Ok(Step {
                    a: ak,
                    b: Rational::from(1),
                    c: Rational::new(),
                })
            }
            FamilySpec::GeneralThreeTerm { a, b, c } => Ok(Step {
                a: if k == 0 { Rational::new() } else { a.term_exact(k)? },
                b: b.term_exact(k)?,
                c: c.term_exact(k)?,
            }),
        }
    }

    /// Recurrence coefficients of step `k` at working precision.
    pub fn step_float(&self, k: usize, prec: u32) -> Result<Step<Float>> {
        match self {
            FamilySpec::Ultraspherical {
                lambda: Param::Real(l),
            } => {
                self.validate()?;
                if k == 0 {
                    return Ok(Step {
                        a: Float::with_val(prec, 0),
                        b: Float::with_val(prec, 1),
                        c: Float::with_val(prec, 0),
                    });
                }
                let l = Float::with_val(prec, l);
                let den = Float::with_val(prec, &l * 2u32) + k as u64;
                let b = Float::with_val(prec, &l + k as u64) * 2u32 / &den;
                let a = Float::with_val(prec, k as u64) / den;
                Ok(Step {
                    a,
                    b,
                    c: Float::with_val(prec, 0),
                })
            }
            FamilySpec::SymmetricUnit { a } if !a.is_exact() => {
                if k == 0 {
                    return Ok(Step {
                        a: Float::with_val(prec, 0),
                        b: Float::with_val(prec, 1),
                        c: Float::with_val(prec, 0),
                    });
                }
                let ak = a.term_float(k, prec)?;
                if ak <= 0 || ak >= 1 {
                    return Err(Error::SequenceConstraint {
                        index: k,
                        value: ak.to_string(),
                        constraint: "0 < a_n < 1",
                    });
                }
                let one_minus = Float::with_val(prec, 1 - &ak);
                Ok(Step {
                    a: Float::with_val(prec, &ak / &one_minus),
                    b: one_minus.recip(),
                    c: Float::with_val(prec, 0),
                })
            }
            FamilySpec::MonicSymmetric { a } if !a.is_exact() => {
                if k == 0 {
                    return Ok(Step {
                        a: Float::with_val(prec, 0),
                        b: Float::with_val(prec, 1),
                        c: Float::with_val(prec, 0),
                    });
                }
                let ak = a.term_float(k, prec)?;
                if ak <= 0 {
                    return Err(Error::SequenceConstraint {
                        index: k,
                        value: ak.to_string(),
                        constraint: "a_n > 0",
                    });
                }
                Ok(Step {
                    a: ak,
                    b: Float::with_val(prec, 1),
                    c: Float::with_val(prec, 0),
                })
            }
            _ => {
                let s = self.step_exact(k)?;
                Ok(Step {
                    a: Float::with_val(prec, &s.a),
                    b: Float::with_val(prec, &s.b),
                    c: Float::with_val(prec, &s.c),
                })
            }
        }
    }

    /// The `n`-th symmetric-unit or monic coefficient `a_n` (with `a_0 = 0`).
    pub fn a_coefficient(&self, n: usize, prec: u32) -> Result<Float> {
        if n == 0 {
            return Ok(Float::with_val(prec, 0));
        }
        match self {
            FamilySpec::SymmetricUnit { a } | FamilySpec::MonicSymmetric { a } => a.term_float(n, prec),
            FamilySpec::Ultraspherical { lambda } => SequenceSpec::ClosedFormUltraspherical {
                lambda: lambda.clone(),
            }
            .term_float(n, prec),
            FamilySpec::GeneralThreeTerm { .. } => Ok(self.step_float(n, prec)?.a),
        }
    }
}

fn unit_first_step() -> Step<Rational> {
    Step {
        a: Rational::new(),
        b: Rational::from(1),
        c: Rational::new(),
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Ultraspherical { lambda } => write!(f, "ultraspherical(lambda={lambda})"),
            FamilySpec::SymmetricUnit { a } => write!(f, "symmetric-unit(a={a})"),
            FamilySpec::MonicSymmetric { a } => write!(f, "monic-symmetric(a={a})"),
            FamilySpec::GeneralThreeTerm { a, b, c } => {
                write!(f, "general(a={a}, b={b}, c={c})")
            }
        }
    }
}

/// Recurrence coefficients precomputed up to step `n` at fixed precision;
/// cheap repeated evaluation for scans.
#[derive(Clone, Debug)]
pub struct PreparedRecurrence {
    steps: Vec<Step<Float>>,
    normalized: bool,
    prec: u32,
}

impl PreparedRecurrence {
    /// Prepares steps `0..=n`, enough for `p_{n+1}`.
    pub fn new(family: &FamilySpec, n: usize, prec: u32) -> Result<Self> {
        check_precision(prec)?;
        family.validate()?;
        let steps = (0..=n)
            .map(|k| family.step_float(k, prec))
            .collect::<Result<Vec<_>>>()?;
        Ok(PreparedRecurrence {
            steps,
            normalized: family.is_normalized_at_one(),
            prec,
        })
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn max_n(&self) -> usize {
        self.steps.len() - 1
    }

    /// `(p_{n−1}, p_n, p_{n+1})` at `x`.
    pub fn values(&self, n: usize, x: &Float) -> (Float, Float, Float) {
        assert!(n <= self.max_n(), "recurrence prepared for n <= {}", self.max_n());
        let prec = self.prec;
        let x = Float::with_val(prec, x);
        if self.normalized && (x == 1 || x == -1) {
            let s = |k: usize| {
                if x == -1 && k % 2 == 1 {
                    Float::with_val(prec, -1)
                } else {
                    Float::with_val(prec, 1)
                }
            };
            let prev = if n == 0 { Float::with_val(prec, 0) } else { s(n - 1) };
            return (prev, s(n), s(n + 1));
        }
        let mut before = Float::with_val(prec, 0);
        let mut prev = Float::with_val(prec, 0);
        let mut cur = Float::with_val(prec, 1);
        for step in &self.steps[..=n] {
            let lin = Float::with_val(prec, &step.b * &x) + &step.c;
            let next = lin * &cur - Float::with_val(prec, &step.a * &prev);
            before = std::mem::replace(&mut prev, std::mem::replace(&mut cur, next));
        }
        (before, prev, cur)
    }

    /// Values and first derivatives `(p, p′)` for indices `n−1, n, n+1`.
    pub fn values_and_derivatives(&self, n: usize, x: &Float) -> ([Float; 3], [Float; 3]) {
        assert!(n <= self.max_n(), "recurrence prepared for n <= {}", self.max_n());
        let prec = self.prec;
        let x = Float::with_val(prec, x);
        let zero = || Float::with_val(prec, 0);
        let (mut p_prev, mut p_cur) = (zero(), Float::with_val(prec, 1));
        let (mut d_prev, mut d_cur) = (zero(), zero());
        let mut hist_p = zero();
        let mut hist_d = zero();
        for step in &self.steps[..=n] {
            let lin = Float::with_val(prec, &step.b * &x) + &step.c;
            let p_next = Float::with_val(prec, &lin * &p_cur) - Float::with_val(prec, &step.a * &p_prev);
            let d_next = Float::with_val(prec, &step.b * &p_cur) + Float::with_val(prec, &lin * &d_cur)
                - Float::with_val(prec, &step.a * &d_prev);
            hist_p = std::mem::replace(&mut p_prev, std::mem::replace(&mut p_cur, p_next));
            hist_d = std::mem::replace(&mut d_prev, std::mem::replace(&mut d_cur, d_next));
        }
        let mut vals = [hist_p, p_prev, p_cur];
        if self.normalized && (x == 1 || x == -1) {
            for (i, v) in vals.iter_mut().enumerate() {
                let k = (n + i) as i64 - 1;
                if k < 0 {
                    continue;
                }
                let sign = if x == -1 && k % 2 == 1 { -1 } else { 1 };
                *v = Float::with_val(prec, sign);
            }
        }
        (vals, [hist_d, d_prev, d_cur])
    }
}

/// Values of `p_{n−1}, p_n, p_{n+1}` (and optionally derivatives) at `x`.
#[derive(Clone, Debug, PartialEq)]
pub struct EvalTriple {
    pub n: usize,
    pub x: Float,
    pub p_prev: Float,
    pub p_cur: Float,
    pub p_next: Float,
    pub dp_cur: Option<Float>,
    pub dp_next: Option<Float>,
    pub precision_bits: u32,
}

impl EvalTriple {
    /// `t_n = p_{n+1}/p_n`, `None` when `p_n = 0`.
    pub fn ratio(&self) -> Option<Float> {
        if self.p_cur.is_zero() {
            None
        } else {
            Some(Float::with_val(self.precision_bits, &self.p_next / &self.p_cur))
        }
    }
}

/// Forward-recurrence evaluation. Valid on all of ℝ; `n = 0` gives `p_{−1} = 0`.
pub fn eval_triple(
    family: &FamilySpec,
    n: usize,
    x: &Float,
    precision_bits: u32,
    with_derivatives: bool,
) -> Result<EvalTriple> {
    let rec = PreparedRecurrence::new(family, n, precision_bits)?;
    let xw = Float::with_val(precision_bits, x);
    if with_derivatives {
        let ([p_prev, p_cur, p_next], [_, dp_cur, dp_next]) = rec.values_and_derivatives(n, &xw);
        Ok(EvalTriple {
            n,
            x: xw,
            p_prev,
            p_cur,
            p_next,
            dp_cur: Some(dp_cur),
            dp_next: Some(dp_next),
            precision_bits,
        })
    } else {
        let (p_prev, p_cur, p_next) = rec.values(n, &xw);
        Ok(EvalTriple {
            n,
            x: xw,
            p_prev,
            p_cur,
            p_next,
            dp_cur: None,
            dp_next: None,
            precision_bits,
        })
    }
}

/// `t_n(x) = p_{n+1}(x)/p_n(x)`.
pub fn ratio_t(family: &FamilySpec, n: usize, x: &Float, precision_bits: u32) -> Result<Float> {
    let tr = eval_triple(family, n, x, precision_bits, false)?;
    let scale = tr
        .p_prev
        .clone()
        .abs()
        .max(&tr.p_next.clone().abs())
        .max(&Float::with_val(precision_bits, 1));
    let guard = crate::numeric::pow2(-(precision_bits as i32) + 16, precision_bits) * scale;
    if tr.p_cur.clone().abs() <= guard {
        return Err(Error::NearZeroDivisor {
            n,
            x: crate::numeric::to_decimal(&tr.x),
        });
    }
    Ok(Float::with_val(precision_bits, &tr.p_next / &tr.p_cur))
}

/// Exact polynomials `p_{n−1}, p_n, p_{n+1}` (`p_{−1} = 0`).
pub fn exact_triple_polys(family: &FamilySpec, n: usize) -> Result<[RationalPoly; 3]> {
    let mut prev = RationalPoly::zero();
    let mut cur = RationalPoly::one();
    for k in 0..=n {
        let s = family.step_exact(k)?;
        let lin = RationalPoly::new(vec![s.c, s.b]);
        let next = &(&lin * &cur) - &prev.scale(&s.a);
        prev = std::mem::replace(&mut cur, next);
    }
    // cur = p_{n+1}, prev = p_n
    let before = if n == 0 {
        RationalPoly::zero()
    } else {
        exact_coefficients(family, n - 1)?
    };
    Ok([before, prev, cur])
}

/// Exact coefficient vector of `p_n`.
pub fn exact_coefficients(family: &FamilySpec, n: usize) -> Result<RationalPoly> {
    let mut prev = RationalPoly::zero();
    let mut cur = RationalPoly::one();
    for k in 0..n {
        let s = family.step_exact(k)?;
        let lin = RationalPoly::new(vec![s.c, s.b]);
        let next = &(&lin * &cur) - &prev.scale(&s.a);
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// Exact values `p_{n−1}(x), p_n(x), p_{n+1}(x)` at rational `x`.
pub fn eval_exact(family: &FamilySpec, n: usize, x: &Rational) -> Result<[Rational; 3]> {
    let mut before = Rational::new();
    let mut prev = Rational::new();
    let mut cur = Rational::from(1);
    for k in 0..=n {
        let s = family.step_exact(k)?;
        let lin = Rational::from(&s.b * x) + &s.c;
        let next = lin * &cur - Rational::from(&s.a * &prev);
        before = std::mem::replace(&mut prev, std::mem::replace(&mut cur, next));
    }
    Ok([before, prev, cur])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HermiteDirection {
    MonicToStandard,
    StandardToMonic,
}

/// Rescales `p_k` by `2^{±k}` (`H_k = 2^k 𝓗_k`).
pub fn hermite_convert(values: &EvalTriple, direction: HermiteDirection) -> EvalTriple {
    let prec = values.precision_bits;
    let factor = |k: i64| -> Float {
        let e = match direction {
            HermiteDirection::MonicToStandard => k,
            HermiteDirection::StandardToMonic => -k,
        };
        crate::numeric::pow2(e as i32, prec)
    };
    let n = values.n as i64;
    let scale = |v: &Float, k: i64| Float::with_val(prec, v * factor(k));
    EvalTriple {
        n: values.n,
        x: values.x.clone(),
        p_prev: scale(&values.p_prev, n - 1),
        p_cur: scale(&values.p_cur, n),
        p_next: scale(&values.p_next, n + 1),
        dp_cur: values.dp_cur.as_ref().map(|d| scale(d, n)),
        dp_next: values.dp_next.as_ref().map(|d| scale(d, n + 1)),
        precision_bits: prec,
    }
}
