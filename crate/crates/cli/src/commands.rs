use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rug::{Float, Rational};
use turankit::certify::{
    batch_table, scan_min, BatchMode, BatchOptions, CellResult, Certificate, Details, Outcome, ScanOptions, ThetaChoice,
};
use turankit::curves::{hermite_vertex_value, remark_asymptotics_probe, resultant_rn_symbolic, Scheme};
use turankit::families::{eval_exact, eval_triple, FamilySpec, SequenceSpec};
use turankit::numeric::{check_precision, pow2, uniform_grid};
use turankit::turan_core::{
    askey_turan_check, audit_lemma_quantities, theta_theorem1, Horizon, LemmaCase, MonotoneHypothesis, ThetaRule,
};
use turankit::zeros_claims::{cd_kernel_positivity, claim_vertex_vs_zeros, VertexPosition};
use turankit::Param;

use crate::args::{
    AskeyArgs, AuditArgs, CheckArgs, ClaimsArgs, Common, EvalArgs, FamilyArgs, HermiteArgs, PlotArgs, RemarkArgs,
    SharpArgs,
};
use crate::error::{CliError, CliResult};
use crate::family_file::FamilyFile;
use crate::format::{Table, Value};
use crate::parse::{parse_indices, parse_rational, parse_rational_list, parse_real_range, parse_tolerance};
use crate::plot::{plot_svg, PlotConfig};

/// Horizon for `--theta thm2`.
pub const THM2_HORIZON: usize = 10_000;

pub enum Body {
    Table(Table),
    Svg(String),
}

/// Command output plus whether a counterexample or violated claim was found.
pub struct Report {
    pub body: Body,
    pub findings: bool,
}

impl Report {
    fn table(table: Table, findings: bool) -> Self {
        Report {
            body: Body::Table(table),
            findings,
        }
    }
}

pub fn precision(common: &Common) -> CliResult<u32> {
    check_precision(common.precision).map_err(|e| CliError::usage(e.to_string()))?;
    Ok(common.precision)
}

fn exact_params(s: &str) -> CliResult<Vec<Param>> {
    Ok(parse_rational_list(s)?.into_iter().map(Param::Exact).collect())
}

fn single_rational(s: &str, what: &str) -> CliResult<Rational> {
    let v = parse_rational_list(s)?;
    match <[Rational; 1]>::try_from(v) {
        Ok([r]) => Ok(r),
        Err(_) => Err(CliError::usage(format!("{what} takes a single value"))),
    }
}

fn nonempty_grid(size: usize, lo: &Rational, hi: &Rational, prec: u32) -> CliResult<Vec<Float>> {
    if size < 2 {
        return Err(CliError::usage("--grid must be at least 2"));
    }
    Ok(uniform_grid(&Float::with_val(prec, lo), &Float::with_val(prec, hi), size, prec))
}

fn named_family(name: &str) -> CliResult<Option<FamilySpec>> {
    Ok(Some(match name {
        "ultraspherical" | "gegenbauer" => return Ok(None),
        "legendre" => FamilySpec::legendre(),
        "chebyshev" => FamilySpec::chebyshev_t(),
        "hermite" | "hermite-monic" => FamilySpec::hermite_monic(),
        "hermite-standard" => FamilySpec::hermite_standard(),
        other => {
            return Err(CliError::usage(format!(
                "unknown family {other:?}; expected ultraspherical, legendre, chebyshev, hermite or hermite-standard"
            )))
        }
    }))
}

/// What a family-taking command runs over.
enum Target {
    /// Ultraspherical cells, one per λ.
    Lambdas(Vec<Param>),
    Family(FamilySpec),
}

impl FamilyArgs {
    fn target(&self) -> CliResult<Target> {
        if let Some(path) = &self.family_file {
            if self.lambda.is_some() {
                return Err(CliError::usage("--lambda cannot be combined with --family-file"));
            }
            return Ok(match FamilyFile::read(path)?.to_spec()? {
                FamilySpec::Ultraspherical { lambda } => Target::Lambdas(vec![lambda]),
                spec => Target::Family(spec),
            });
        }
        match self.family.as_deref().map(named_family).transpose()?.flatten() {
            Some(spec) => {
                if self.lambda.is_some() {
                    return Err(CliError::usage("--lambda only applies to the ultraspherical family"));
                }
                Ok(match spec {
                    FamilySpec::Ultraspherical { lambda } => Target::Lambdas(vec![lambda]),
                    spec => Target::Family(spec),
                })
            }
            None => {
                let lambda = self
                    .lambda
                    .as_deref()
                    .ok_or_else(|| CliError::usage("give --lambda, --family or --family-file"))?;
                let lambdas = exact_params(lambda)?;
                for l in &lambdas {
                    FamilySpec::ultraspherical(l.clone()).map_err(|e| CliError::usage(e.to_string()))?;
                }
                Ok(Target::Lambdas(lambdas))
            }
        }
    }

    fn single(&self) -> CliResult<FamilySpec> {
        match self.target()? {
            Target::Family(f) => Ok(f),
            Target::Lambdas(mut ls) if ls.len() == 1 => {
                FamilySpec::ultraspherical(ls.remove(0)).map_err(|e| CliError::usage(e.to_string()))
            }
            Target::Lambdas(_) => Err(CliError::usage("this command takes a single λ")),
        }
    }
}

pub fn cmd_eval(a: &EvalArgs) -> CliResult<Report> {
    let prec = precision(&a.common)?;
    let family = a.family.single()?;
    let ns = parse_indices(&a.n)?;
    let x = parse_rational(&a.x)?;
    let xf = Float::with_val(prec, &x);
    let mut t = Table::new(&["n", "x", "p_prev", "p_n", "p_next", "t_n"]);
    for n in ns {
        let row = if family.is_exact() {
            let [pm, p, pp] = eval_exact(&family, n, &x)?;
            let tn = if p.cmp0() == Ordering::Equal {
                Value::Empty
            } else {
                Value::Exact(Rational::from(&pp / &p), prec)
            };
            vec![
                Value::Int(n as u64),
                Value::Exact(x.clone(), prec),
                Value::Exact(pm, prec),
                Value::Exact(p, prec),
                Value::Exact(pp, prec),
                tn,
            ]
        } else {
            let tr = eval_triple(&family, n, &xf, prec, false)?;
            vec![
                Value::Int(n as u64),
                Value::Exact(x.clone(), prec),
                Value::Real(tr.p_prev.clone()),
                Value::Real(tr.p_cur.clone()),
                Value::Real(tr.p_next.clone()),
                Value::opt_real(tr.ratio().as_ref()),
            ]
        };
        t.push(row);
    }
    Ok(Report::table(t, false))
}

fn theta_choice(s: &str) -> CliResult<ThetaChoice> {
    Ok(match s {
        "auto" => ThetaChoice::TheoremOne,
        "thm2" => ThetaChoice::TheoremTwo { horizon: THM2_HORIZON },
        v => ThetaChoice::Value(Param::Exact(parse_rational(v)?)),
    })
}

fn family_rule(family: &FamilySpec, s: &str) -> CliResult<ThetaRule> {
    let ultraspherical_lambda = match family {
        FamilySpec::Ultraspherical { lambda } => Some(lambda.clone()),
        FamilySpec::SymmetricUnit {
            a: SequenceSpec::ClosedFormUltraspherical { lambda },
        } => Some(lambda.clone()),
        _ => None,
    };
    match s {
        "auto" => match (ultraspherical_lambda, family) {
            (Some(lambda), _) => Ok(ThetaRule::TheoremOne { lambda }),
            (None, FamilySpec::MonicSymmetric { .. }) => Ok(ThetaRule::HermiteFactor),
            (None, f) if f.is_symmetric() && !f.is_normalized_at_one() => Ok(ThetaRule::HermiteFactor),
            _ => Err(CliError::usage("--theta auto has no rule for this family; give a value")),
        },
        "thm2" => match family {
            FamilySpec::SymmetricUnit { a } => Ok(ThetaRule::TheoremTwoInf {
                a: a.clone(),
                horizon: Horizon::Finite(THM2_HORIZON),
            }),
            _ => Err(CliError::usage("--theta thm2 needs a symmetric-unit family")),
        },
        v => Ok(ThetaRule::Custom {
            theta: Param::Exact(parse_rational(v)?),
        }),
    }
}

const CHECK_COLUMNS: [&str; 9] = [
    "lambda",
    "n",
    "theta",
    "mode",
    "outcome",
    "min_delta",
    "argmin_x",
    "precision_bits",
    "notes",
];

fn certificate_row(lambda: Value, n: usize, cert: &turankit::Result<Certificate>, prec: u32) -> Vec<Value> {
    let cert = match cert {
        Ok(c) => c,
        Err(e) => {
            return vec![
                lambda,
                Value::Int(n as u64),
                Value::Empty,
                Value::Empty,
                Value::text("error"),
                Value::Empty,
                Value::Empty,
                Value::Empty,
                Value::text(e.to_string()),
            ]
        }
    };
    let theta = cert.theta.as_ref().map_or(Value::Empty, |t| Value::param(t, prec));
    let (mut min_delta, mut argmin, bits, mut notes) = match &cert.details {
        Details::Exact {
            u,
            v,
            degree,
            multiplicity_at_one,
            interior_roots,
            touching_roots,
            sample_point,
            ..
        } => (
            Value::Empty,
            Value::Empty,
            Value::Empty,
            format!(
                "u={u}; v={v}; degree={degree}; multiplicity_at_one={multiplicity_at_one}; \
                 interior_roots={interior_roots}; touching_roots={touching_roots}; sample={sample_point}"
            ),
        ),
        Details::Numeric {
            precision_bits,
            min_value,
            argmin,
            ..
        } => (
            Value::Real(min_value.clone()),
            Value::Real(argmin.clone()),
            Value::Int(*precision_bits as u64),
            String::new(),
        ),
    };
    match &cert.outcome {
        Outcome::Counterexample { x_witness, delta_value } => {
            min_delta = Value::Real(delta_value.clone());
            argmin = Value::Real(x_witness.clone());
        }
        Outcome::Inconclusive { reason } => {
            if !notes.is_empty() {
                notes.push_str("; ");
            }
            notes.push_str(reason);
        }
        Outcome::CertifiedNonnegative => {}
    }
    vec![
        lambda,
        Value::Int(n as u64),
        theta,
        Value::text(cert.mode.to_string()),
        Value::text(cert.outcome.label()),
        min_delta,
        argmin,
        bits,
        Value::text(notes),
    ]
}

pub fn cmd_check(a: &CheckArgs, exact: bool) -> CliResult<Report> {
    let prec = precision(&a.common)?;
    let ns = parse_indices(&a.n)?;
    let scan = ScanOptions {
        grid_size: a.grid.max(2),
        precision: prec,
        refine_iterations: 60,
    };
    let mut t = Table::new(&CHECK_COLUMNS);
    let mut findings = false;
    match a.family.target()? {
        Target::Lambdas(lambdas) => {
            if a.x != "0..1" {
                return Err(CliError::usage("ultraspherical cells are checked on 0..1"));
            }
            let opts = BatchOptions {
                theta: theta_choice(&a.theta)?,
                scan,
                exact: exact || a.exact,
                ..BatchOptions::default()
            };
            for row in batch_table(&lambdas, &ns, BatchMode::Check, &opts)? {
                let cert = match row.result {
                    Ok(CellResult::Certificate(c)) => Ok(c),
                    Ok(CellResult::Theta(_)) => unreachable!("check cells yield certificates"),
                    Err(e) => Err(e),
                };
                findings |= cert.as_ref().is_ok_and(|c| c.outcome.is_counterexample());
                t.push(certificate_row(Value::param(&row.lambda, prec), row.n, &cert, prec));
            }
        }
        Target::Family(family) => {
            let rule = family_rule(&family, &a.theta)?;
            let (lo, hi) = parse_real_range(&a.x)?;
            let (lo, hi) = (Float::with_val(prec, &lo), Float::with_val(prec, &hi));
            let certs: Vec<_> = ns
                .par_iter()
                .map(|&n| scan_min(&family, n, &rule, (&lo, &hi), &scan))
                .collect();
            for (n, cert) in ns.iter().zip(&certs) {
                findings |= cert.as_ref().is_ok_and(|c| c.outcome.is_counterexample());
                t.push(certificate_row(Value::Empty, *n, cert, prec));
            }
        }
    }
    Ok(Report::table(t, findings))
}

pub fn cmd_sharp_theta(a: &SharpArgs) -> CliResult<Report> {
    let prec = precision(&a.common)?;
    let lambdas = exact_params(&a.lambda)?;
    let ns = parse_indices(&a.n)?;
    let opts = BatchOptions {
        scan: ScanOptions {
            grid_size: a.grid.max(2),
            precision: prec,
            refine_iterations: 60,
        },
        tol: parse_tolerance(&a.tol, prec)?,
        ..BatchOptions::default()
    };
    let mut t = Table::new(&[
        "lambda",
        "n",
        "theta_lo",
        "theta_hi",
        "width",
        "iterations",
        "backend",
        "empirical",
        "theta_auto",
        "notes",
    ]);
    for row in batch_table(&lambdas, &ns, BatchMode::SharpTheta, &opts)? {
        let lambda = Value::param(&row.lambda, prec);
        let auto = theta_theorem1(&row.lambda, prec).map_or(Value::Empty, |p| Value::param(&p, prec));
        match row.result {
            Ok(CellResult::Theta(e)) => {
                let width = Float::with_val(prec, &e.theta_hi - &e.theta_lo);
                t.push(vec![
                    lambda,
                    Value::Int(row.n as u64),
                    Value::Real(e.theta_lo),
                    Value::Real(e.theta_hi),
                    Value::Real(width),
                    Value::Int(e.iterations as u64),
                    Value::text(e.backend.to_string()),
                    Value::Bool(e.empirical),
                    auto,
                    Value::text(if e.empirical { "empirical" } else { "" }),
                ]);
            }
            Ok(CellResult::Certificate(_)) => unreachable!("sharp-theta cells yield estimates"),
            Err(err) => t.push(vec![
                lambda,
                Value::Int(row.n as u64),
                Value::Empty,
                Value::Empty,
                Value::Empty,
                Value::Empty,
                Value::Empty,
                Value::Empty,
                auto,
                Value::text(err.to_string()),
            ]),
        }
    }
    Ok(Report::table(t, false))
}

fn position_label(p: VertexPosition) -> &'static str {
    match p {
        VertexPosition::BelowSecond => "below-second",
        VertexPosition::BetweenSecondAndFirst => "between-second-and-first",
        VertexPosition::AboveFirst => "above-first",
    }
}

pub fn cmd_claims(a: &ClaimsArgs) -> CliResult<Report> {
    let prec = precision(&a.common)?;
    let lambdas = exact_params(&a.lambda)?;
    let ns = parse_indices(&a.n)?;
    let grid = nonempty_grid(a.grid, &Rational::from(-1), &Rational::from(1), prec)?;
    let cells: Vec<(Param, usize)> = lambdas
        .iter()
        .flat_map(|l| ns.iter().map(move |&n| (l.clone(), n)))
        .collect();
    let results: Vec<_> = cells
        .par_iter()
        .map(|(l, n)| {
            let claim = claim_vertex_vs_zeros(l, *n, prec)?;
            let cd = cd_kernel_positivity(l, *n, &grid, prec)?;
            Ok::<_, turankit::Error>((claim, cd))
        })
        .collect();
    let mut t = Table::new(&[
        "lambda",
        "n",
        "x_tilde",
        "x1",
        "x2",
        "position",
        "claim_holds",
        "cd_checked",
        "cd_near_zero",
        "cd_min",
        "cd_argmin",
        "cd_all_positive",
        "notes",
    ]);
    let mut findings = false;
    for ((l, n), r) in cells.iter().zip(results) {
        let lambda = Value::param(l, prec);
        match r {
            Ok((claim, cd)) => {
                findings |= !claim.holds || !cd.all_positive;
                t.push(vec![
                    lambda,
                    Value::Int(*n as u64),
                    Value::Real(claim.x_tilde),
                    Value::Real(claim.x1),
                    Value::opt_real(claim.x2.as_ref()),
                    Value::text(position_label(claim.position)),
                    Value::Bool(claim.holds),
                    Value::Int(cd.checked as u64),
                    Value::Int(cd.near_zero as u64),
                    Value::opt_real(cd.min_value.as_ref()),
                    Value::opt_real(cd.argmin.as_ref()),
                    Value::Bool(cd.all_positive),
                    Value::text(""),
                ]);
            }
            Err(e) => {
                let mut row = vec![lambda, Value::Int(*n as u64)];
                row.extend(std::iter::repeat_with(|| Value::Empty).take(10));
                row.push(Value::text(e.to_string()));
                t.push(row);
            }
        }
    }
    Ok(Report::table(t, findings))
}

pub fn cmd_audit(a: &AuditArgs) -> CliResult<Report> {
    let prec = precision(&a.common)?;
    let lambdas = parse_rational_list(&a.lambda)?;
    let ns = parse_indices(&a.n)?;
    let theta = a.theta.as_deref().map(parse_rational).transpose()?;
    let x = a
        .x
        .as_deref()
        .map(|s| parse_rational(s).map(|r| Float::with_val(prec, &r)))
        .transpose()?;
    let mut t = Table::new(&["lambda", "n", "theta", "case", "item", "value", "claim", "holds"]);
    let mut findings = false;
    for l in &lambdas {
        for &n in &ns {
            let report = audit_lemma_quantities(l, n, theta.as_ref(), x.as_ref(), prec)?;
            let case = match report.case {
                LemmaCase::Positive => "positive",
                LemmaCase::Negative => "negative",
                LemmaCase::Chebyshev => "chebyshev",
            };
            let mut push = |item: String, value: String, claim: String, holds: bool| {
                findings |= !holds;
                t.push(vec![
                    Value::Exact(l.clone(), prec),
                    Value::Int(n as u64),
                    Value::Exact(report.theta.clone(), prec),
                    Value::text(case),
                    Value::text(item),
                    Value::text(value),
                    Value::text(claim),
                    Value::Bool(holds),
                ]);
            };
            for item in &report.items {
                push(item.name.clone(), item.value.clone(), item.claim.clone(), item.holds);
            }
            if a.symbolic {
                let scheme = Scheme::Ultraspherical {
                    lambda: Param::Exact(l.clone()),
                    n,
                    theta: Param::Exact(report.theta.clone()),
                };
                let sym = resultant_rn_symbolic(&scheme)?;
                push(
                    format!("R_n(s), x = s^{}, x^theta = s^{}", sym.v, sym.u),
                    sym.poly.to_string().replace('x', "s"),
                    "closed form = curve-coefficient route".into(),
                    true,
                );
                let at_one = sym.poly.eval(&Rational::from(1));
                push("R_n(1)".into(), at_one.to_string(), "= 0".into(), at_one == 0);
            }
        }
    }
    Ok(Report::table(t, findings))
}

pub fn cmd_remark(a: &RemarkArgs) -> CliResult<Report> {
    let prec = precision(&a.common)?;
    let lambdas = exact_params(&a.lambda)?;
    let ns = parse_indices(&a.n)?;
    let mut t = Table::new(&[
        "lambda",
        "theta",
        "n",
        "x0",
        "x_hat",
        "gap_plus",
        "gap_minus",
        "leading_gap_plus",
        "leading_gap_minus",
        "resultant",
        "resultant_sharp",
        "leading_resultant_sharp",
    ]);
    for l in &lambdas {
        let theta = match a.theta.as_str() {
            "auto" => theta_theorem1(l, prec)?,
            v => Param::Exact(parse_rational(v)?),
        };
        let probes: Vec<_> = ns
            .par_iter()
            .map(|&n| remark_asymptotics_probe(l, &theta, n, prec))
            .collect();
        for (&n, p) in ns.iter().zip(probes) {
            let p = p?;
            t.push(vec![
                Value::param(l, prec),
                Value::param(&theta, prec),
                Value::Int(n as u64),
                Value::Real(p.x0),
                Value::Real(p.x_hat),
                Value::opt_real(p.gap_plus.as_ref()),
                Value::opt_real(p.gap_minus.as_ref()),
                Value::Real(p.leading_gap_plus),
                Value::Real(p.leading_gap_minus),
                Value::Real(p.resultant),
                Value::Real(p.resultant_sharp),
                Value::Real(p.leading_resultant_sharp),
            ]);
        }
    }
    Ok(Report::table(t, false))
}

pub fn cmd_plot(a: &PlotArgs) -> CliResult<Report> {
    let prec = precision(&a.common)?;
    let lambda = Param::Exact(single_rational(&a.lambda, "--lambda")?);
    FamilySpec::ultraspherical(lambda.clone()).map_err(|e| CliError::usage(e.to_string()))?;
    if a.n == 0 {
        return Err(CliError::usage("--n must be at least 1"));
    }
    if a.grid < 2 {
        return Err(CliError::usage("--grid must be at least 2"));
    }
    let theta = match a.theta.as_str() {
        "auto" => theta_theorem1(&lambda, prec)?,
        v => Param::Exact(parse_rational(v)?),
    };
    let x_range = match a.x.as_str() {
        "auto" => None,
        r => Some(parse_real_range(r)?),
    };
    let svg = plot_svg(&PlotConfig {
        lambda,
        n: a.n,
        theta,
        x_range,
        samples: a.grid,
        precision: prec,
    })?;
    Ok(Report {
        body: Body::Svg(svg),
        findings: false,
    })
}

fn monic_sequence(path: Option<&std::path::Path>) -> CliResult<SequenceSpec> {
    match path {
        None => Ok(SequenceSpec::ClosedFormHermiteMonic),
        Some(p) => match FamilyFile::read(p)?.to_spec()? {
            FamilySpec::MonicSymmetric { a } => Ok(a),
            _ => Err(CliError::usage("this command needs a monic-symmetric family file")),
        },
    }
}

pub fn cmd_askey(a: &AskeyArgs) -> CliResult<Report> {
    let prec = precision(&a.common)?;
    let seq = monic_sequence(a.family_file.as_deref())?;
    let n_max = *parse_indices(&a.n)?.iter().max().expect("parse_indices is nonempty");
    let (lo, hi) = parse_real_range(&a.x)?;
    let grid = nonempty_grid(a.grid, &lo, &hi, prec)?;
    let r = askey_turan_check(&seq, n_max, &grid, prec)?;
    let hypothesis = match r.hypothesis {
        MonotoneHypothesis::StrictlyIncreasing => "strictly-increasing",
        MonotoneHypothesis::Edge => "edge",
    };
    let mut t = Table::new(&[
        "hypothesis",
        "n_max",
        "points",
        "min_value",
        "argmin_n",
        "argmin_x",
        "all_nonnegative",
    ]);
    t.push(vec![
        Value::text(hypothesis),
        Value::Int(r.n_max as u64),
        Value::Int(r.points as u64),
        Value::Real(r.min_value.clone()),
        Value::Int(r.argmin.0 as u64),
        Value::Real(r.argmin.1.clone()),
        Value::Bool(r.all_nonnegative),
    ]);
    Ok(Report::table(t, !r.all_nonnegative))
}

pub fn cmd_hermite(a: &HermiteArgs) -> CliResult<Report> {
    let prec = precision(&a.common)?;
    let seq = monic_sequence(a.family_file.as_deref())?;
    let family = match &a.family_file {
        None => FamilySpec::hermite_standard(),
        Some(_) => FamilySpec::MonicSymmetric { a: seq.clone() },
    };
    let ns = parse_indices(&a.n)?;
    if ns.contains(&0) {
        return Err(CliError::usage("hermite-check needs n >= 1"));
    }
    let (lo, hi) = parse_real_range(&a.x)?;
    let (lo, hi) = (Float::with_val(prec, &lo), Float::with_val(prec, &hi));
    let scan = ScanOptions {
        grid_size: a.grid.max(2),
        precision: prec,
        refine_iterations: 60,
    };
    let term = |k: usize| -> CliResult<Rational> {
        if k == 0 {
            Ok(Rational::new())
        } else {
            Ok(seq.term_exact(k)?)
        }
    };
    let certs: Vec<_> = ns
        .par_iter()
        .map(|&n| scan_min(&family, n, &ThetaRule::HermiteFactor, (&lo, &hi), &scan))
        .collect();
    let mut t = Table::new(&[
        "source",
        "n",
        "a_prev",
        "a_cur",
        "a_next",
        "outcome",
        "min_delta",
        "argmin_x",
        "vertex_value",
        "vertex_direct",
        "vertex_negative",
    ]);
    let mut findings = false;
    let tol = pow2(-(prec as i32) / 2, prec);
    let mut vertex_cells = |triple: [Rational; 3]| -> CliResult<[Value; 6]> {
        let v = hermite_vertex_value(&triple[0], &triple[1], &triple[2], prec)?;
        let agree = Float::with_val(prec, &v.direct - &v.closed_form).abs() <= tol;
        let negative = agree && v.closed_form.cmp0() == Ordering::Less;
        findings |= !negative;
        let [p, c, n] = triple;
        Ok([
            Value::Exact(p, prec),
            Value::Exact(c, prec),
            Value::Exact(n, prec),
            Value::Exact(v.closed_form, prec),
            Value::Real(v.direct),
            Value::Bool(negative),
        ])
    };
    let mut rows = Vec::new();
    for (&n, cert) in ns.iter().zip(&certs) {
        let [ap, ac, an, vv, vd, neg] = vertex_cells([term(n - 1)?, term(n)?, term(n + 1)?])?;
        let (outcome, min_delta, argmin) = match cert {
            Ok(c) => {
                let (m, x) = match (&c.outcome, &c.details) {
                    (Outcome::Counterexample { x_witness, delta_value }, _) => (delta_value.clone(), x_witness.clone()),
                    (_, Details::Numeric { min_value, argmin, .. }) => (min_value.clone(), argmin.clone()),
                    (_, Details::Exact { .. }) => unreachable!("scans give numeric details"),
                };
                (Value::text(c.outcome.label()), Value::Real(m), Value::Real(x))
            }
            Err(e) => (Value::text(format!("error: {e}")), Value::Empty, Value::Empty),
        };
        rows.push(vec![Value::text("family"), Value::Int(n as u64), ap, ac, an, outcome, min_delta, argmin, vv, vd, neg]);
    }
    if let Some(seed) = a.seed {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut draw = |lo: i64| Rational::from((rng.gen_range(lo..20i64), rng.gen_range(1..6i64)));
        let mut triples = Vec::new();
        for _ in 0..20 {
            let a0 = draw(0);
            let a1 = &a0 + draw(1) ;
            let a2 = &a1 + draw(1) ;
            triples.push([a0, a1, a2]);
        }
        for triple in triples {
            let [ap, ac, an, vv, vd, neg] = vertex_cells(triple)?;
            rows.push(vec![
                Value::text(format!("seed {seed}")),
                Value::Empty,
                ap,
                ac,
                an,
                Value::Empty,
                Value::Empty,
                Value::Empty,
                vv,
                vd,
                neg,
            ]);
        }
    }
    findings |= certs.iter().any(|c| c.as_ref().is_ok_and(|c| c.outcome.is_counterexample()));
    for r in rows {
        t.push(r);
    }
    Ok(Report::table(t, findings))
}

/// Renders a report body in the requested format.
pub fn render(report: &Report, format: Option<crate::args::Format>) -> CliResult<String> {
    use crate::args::Format;
    match (&report.body, format) {
        (Body::Table(t), None | Some(Format::Csv)) => t.to_csv(),
        (Body::Table(t), Some(Format::Json)) => Ok(t.to_json()),
        (Body::Table(_), Some(Format::Svg)) => Err(CliError::usage("svg output is only available for `plot`")),
        (Body::Svg(s), None | Some(Format::Svg)) => Ok(s.clone()),
        (Body::Svg(_), Some(_)) => Err(CliError::usage("`plot` writes svg only")),
    }
}
