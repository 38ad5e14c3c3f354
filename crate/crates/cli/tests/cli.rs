use std::process::{Command, Output};

use rug::Rational;
use turankit::families::{FamilySpec, SequenceSpec};
use turankit::Param;
use turankit_cli::family_file::FamilyFile;

fn turankit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_turankit"))
        .args(args)
        .env_remove("TURANKIT_PRECISION")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn csv_rows(text: &str) -> Vec<Vec<String>> {
    csv::Reader::from_reader(text.as_bytes())
        .records()
        .map(|r| r.unwrap().iter().map(str::to_string).collect())
        .collect()
}

fn q(p: i64, d: i64) -> Rational {
    Rational::from((p, d))
}

#[test]
fn family_files_round_trip() {
    let specs = [
        FamilySpec::Ultraspherical {
            lambda: Param::Exact(q(-1, 4)),
        },
        FamilySpec::SymmetricUnit {
            a: SequenceSpec::ClosedFormUltraspherical {
                lambda: Param::Exact(q(3, 2)),
            },
        },
        FamilySpec::SymmetricUnit {
            a: SequenceSpec::ExplicitList {
                values: vec![q(1, 2), q(3, 5), q(2, 3)],
                start: 1,
            },
        },
        FamilySpec::hermite_monic(),
        FamilySpec::MonicSymmetric {
            a: SequenceSpec::Linear {
                slope: q(1, 3),
                intercept: q(1, 7),
            },
        },
        FamilySpec::GeneralThreeTerm {
            a: SequenceSpec::Linear {
                slope: q(0, 1),
                intercept: q(2, 1),
            },
            b: SequenceSpec::ExplicitList {
                values: vec![q(0, 1); 4],
                start: 0,
            },
            c: SequenceSpec::Linear {
                slope: q(2, 1),
                intercept: q(0, 1),
            },
        },
    ];
    for spec in specs {
        let file = FamilyFile::from_spec(&spec);
        let json = file.to_json();
        let back = FamilyFile::parse(&json).unwrap();
        assert_eq!(back, file, "{json}");
        assert_eq!(back.to_spec().unwrap(), spec, "{json}");
    }
}

#[test]
fn eval_reports_exact_values() {
    let o = turankit(&["eval", "--family", "ultraspherical", "--lambda", "1/2", "--n", "2", "--x", "1/2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "n,x,p_prev,p_n,p_next,t_n\n2,0.5,0.5,-0.125,-0.4375,3.5\n");

    let o = turankit(&[
        "eval", "--family", "ultraspherical", "--lambda", "1/2", "--n", "2", "--x", "1/2", "--format", "json",
    ]);
    let rows: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rows[0]["p_next_exact"], "-7/16");
    assert_eq!(rows[0]["n"], 2);

    let o = turankit(&["eval", "--family", "legendre", "--n", "5", "--x", "1"]);
    let row = &csv_rows(&stdout(&o))[0];
    assert_eq!(&row[2..], ["1", "1", "1", "1"]);
}

#[test]
fn eval_reads_family_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("hermite.json");
    std::fs::write(
        &path,
        r#"{"type":"monic-symmetric","a":{"kind":"formula","name":"hermite-monic","params":{}}}"#,
    )
    .unwrap();
    let o = turankit(&["eval", "--family-file", path.to_str().unwrap(), "--n", "1", "--x", "1"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    // p0 = 1, p1 = x, p2 = x² − 1/2
    assert_eq!(&csv_rows(&stdout(&o))[0][2..5], ["1", "1", "0.5"]);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| turankit(args).status.code().unwrap();
    assert_eq!(code(&["check", "--lambda", "1/2", "--n", "3"]), 0);
    assert_eq!(code(&["check", "--lambda", "1/2", "--n", "3", "--theta", "1.01"]), 3);
    assert_eq!(code(&["eval", "--family", "ultraspherical", "--lambda", "-1/2", "--n", "2", "--x", "0"]), 2);
    assert_eq!(code(&["eval", "--family", "legendre", "--n", "2", "--x", "abc"]), 2);
    assert_eq!(code(&["check", "--lambda", "1/2", "--n", "3", "--precision", "8"]), 2);
    assert_eq!(code(&["check", "--nonsense"]), 2);
    assert_eq!(code(&["plot", "--lambda", "1", "--n", "4", "--format", "csv"]), 2);
    assert_eq!(code(&["eval", "--family-file", "/nonexistent/f.json", "--n", "1", "--x", "0"]), 2);
    assert_eq!(code(&["remark", "--lambda", "-0.4", "--theta", "2", "--n", "10"]), 1);
    assert_eq!(code(&["--help"]), 0);
}

#[test]
fn check_certifies_auto_theta() {
    let o = turankit(&["check", "--lambda", "1/2", "--n", "1..20", "--theta", "auto"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("lambda,n,theta,mode,outcome,min_delta,argmin_x,precision_bits,notes\n"));
    let rows = csv_rows(&text);
    assert_eq!(rows.len(), 20);
    for (i, row) in rows.iter().enumerate() {
        assert_eq!(row[1], (i + 1).to_string());
        assert_eq!(row[2], "1");
        assert_eq!(row[4], "certified");
    }
}

#[test]
fn certify_uses_sturm_chains() {
    let o = turankit(&["certify", "--lambda", "-1/4,1/2", "--n", "1..4"]);
    assert!(o.status.success());
    let rows = csv_rows(&stdout(&o));
    assert_eq!(rows.len(), 8);
    assert!(rows.iter().all(|r| r[3] == "exact-sturm" && r[4] == "certified"), "{rows:?}");
}

#[test]
fn precision_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_turankit"))
        .args(["check", "--lambda", "1/2", "--n", "3"])
        .env("TURANKIT_PRECISION", "200")
        .output()
        .unwrap();
    assert_eq!(csv_rows(&stdout(&o))[0][7], "200");
    let o = Command::new(env!("CARGO_BIN_EXE_turankit"))
        .args(["check", "--lambda", "1/2", "--n", "3", "--precision", "96"])
        .env("TURANKIT_PRECISION", "200")
        .output()
        .unwrap();
    assert_eq!(csv_rows(&stdout(&o))[0][7], "96");
}

#[test]
fn audit_residuals_vanish() {
    let o = turankit(&["audit", "--lambda", "-1/4", "--n", "2", "--symbolic"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let rows = csv_rows(&stdout(&o));
    let residuals: Vec<_> = rows.iter().filter(|r| r[6] == "= 0 identically").collect();
    assert!(!residuals.is_empty());
    assert!(residuals.iter().all(|r| r[5] == "0"), "{residuals:?}");
    assert!(rows.iter().any(|r| r[4] == "R_n(1)" && r[5] == "0"));
    assert!(rows.iter().all(|r| r[7] != "false"));
}

#[test]
fn outputs_are_deterministic() {
    for format in ["csv", "json"] {
        let args = ["sharp-theta", "--lambda", "-1/4", "--n", "3", "--grid", "512", "--format", format];
        assert_eq!(turankit(&args).stdout, turankit(&args).stdout);
        let args = ["hermite-check", "--n", "1..6", "--seed", "7", "--grid", "512", "--format", format];
        assert_eq!(turankit(&args).stdout, turankit(&args).stdout);
    }
    let args = ["plot", "--lambda", "-1/4", "--n", "4"];
    let strip = |o: Output| {
        stdout(&o)
            .lines()
            .filter(|l| !l.starts_with("<!-- turankit"))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(strip(turankit(&args)), strip(turankit(&args)));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("eval.csv");
    let o = turankit(&[
        "eval", "--family", "chebyshev", "--n", "2", "--x", "0", "--out", path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("n,x,"));
}

/// Horizontal position of the dashed marker with the given colour, or of
/// the zero tick labelled `x<sub>k</sub>`.
fn marker_x(svg: &str, colour: &str) -> f64 {
    let line = svg
        .lines()
        .find(|l| l.starts_with("<line") && l.contains(colour) && l.contains("stroke-dasharray"))
        .unwrap();
    attr(line, "x1")
}

fn zero_tick_x(svg: &str, k: usize) -> f64 {
    let needle = format!(r#"font-size="9">{k}</tspan></text>"#);
    let line = svg
        .lines()
        .find(|l| l.contains("fill=\"#666\"") && l.ends_with(&needle))
        .unwrap();
    attr(line, "x")
}

fn attr(line: &str, name: &str) -> f64 {
    let key = format!(" {name}=\"");
    let start = line.find(&key).unwrap() + key.len();
    let end = start + line[start..].find('"').unwrap();
    line[start..end].parse().unwrap()
}

#[test]
fn plot_marker_ordering() {
    const X_TILDE: &str = "#2ca02c";
    for (lambda, between) in [("-1/3", true), ("-1/4", false), ("1", false)] {
        let o = turankit(&["plot", "--lambda", lambda, "--n", "4"]);
        assert!(o.status.success());
        let svg = stdout(&o);
        assert!(svg.starts_with("<?xml") || svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
        let (xt, x1, x2) = (marker_x(&svg, X_TILDE), zero_tick_x(&svg, 1), zero_tick_x(&svg, 2));
        assert!(x2 < x1);
        if between {
            assert!(x2 < xt && xt < x1, "λ={lambda}: {x2} {xt} {x1}");
        } else {
            assert!(x1 < xt, "λ={lambda}: {xt} {x1}");
        }
    }
}
