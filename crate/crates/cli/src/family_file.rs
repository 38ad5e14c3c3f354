//! JSON family descriptions.
//!
//! ```json
//! {"type": "monic-symmetric", "a": {"kind": "formula", "name": "hermite-monic", "params": {}}}
//! {"type": "symmetric-unit", "a": {"kind": "list", "values": ["1/2", "0.6", "2/3"]}}
//! ```

use std::collections::BTreeMap;
use std::path::Path;

use rug::Rational;
use serde::{Deserialize, Serialize};
use turankit::families::{FamilySpec, SequenceSpec};
use turankit::Param;

use crate::error::{CliError, CliResult};
use crate::format::fmt_rational;
use crate::parse::parse_rational;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum FamilyFile {
    Ultraspherical {
        lambda: String,
    },
    SymmetricUnit {
        a: SequenceFile,
    },
    MonicSymmetric {
        a: SequenceFile,
    },
    General {
        a: SequenceFile,
        b: SequenceFile,
        c: SequenceFile,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SequenceFile {
    /// `values[0]` is the term at index `start` (1 unless given).
    List {
        values: Vec<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        start: Option<usize>,
    },
    /// `ultraspherical-a` (param `lambda`), `hermite-monic`, or `linear`
    /// (params `slope`, `intercept`).
    Formula {
        name: String,
        #[serde(default)]
        params: BTreeMap<String, String>,
    },
}

impl FamilyFile {
    pub fn read(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::usage(format!("cannot read family file {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> CliResult<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("family files always serialize") + "\n"
    }

    pub fn to_spec(&self) -> CliResult<FamilySpec> {
        let spec = match self {
            FamilyFile::Ultraspherical { lambda } => FamilySpec::Ultraspherical {
                lambda: Param::Exact(parse_rational(lambda)?),
            },
            FamilyFile::SymmetricUnit { a } => FamilySpec::SymmetricUnit { a: a.to_spec()? },
            FamilyFile::MonicSymmetric { a } => FamilySpec::MonicSymmetric { a: a.to_spec()? },
            FamilyFile::General { a, b, c } => FamilySpec::GeneralThreeTerm {
                a: a.to_spec()?,
                b: b.to_spec()?,
                c: c.to_spec()?,
            },
        };
        spec.validate().map_err(|e| CliError::usage(format!("invalid family: {e}")))?;
        Ok(spec)
    }

    /// Real-valued parameters are written as decimals and read back as exact
    /// rationals, so only exact families round-trip unchanged.
    pub fn from_spec(spec: &FamilySpec) -> Self {
        match spec {
            FamilySpec::Ultraspherical { lambda } => FamilyFile::Ultraspherical {
                lambda: param_string(lambda),
            },
            FamilySpec::SymmetricUnit { a } => FamilyFile::SymmetricUnit {
                a: SequenceFile::from_spec(a),
            },
            FamilySpec::MonicSymmetric { a } => FamilyFile::MonicSymmetric {
                a: SequenceFile::from_spec(a),
            },
            FamilySpec::GeneralThreeTerm { a, b, c } => FamilyFile::General {
                a: SequenceFile::from_spec(a),
                b: SequenceFile::from_spec(b),
                c: SequenceFile::from_spec(c),
            },
        }
    }
}

impl SequenceFile {
    pub fn to_spec(&self) -> CliResult<SequenceSpec> {
        match self {
            SequenceFile::List { values, start } => {
                if values.is_empty() {
                    return Err(CliError::usage("sequence list is empty"));
                }
                Ok(SequenceSpec::ExplicitList {
                    values: values.iter().map(|v| parse_rational(v)).collect::<CliResult<_>>()?,
                    start: start.unwrap_or(1),
                })
            }
            SequenceFile::Formula { name, params } => {
                let get = |key: &str| -> CliResult<Rational> {
                    let v = params
                        .get(key)
                        .ok_or_else(|| CliError::usage(format!("formula {name:?} needs param {key:?}")))?;
                    parse_rational(v)
                };
                let expect = |keys: &[&str]| -> CliResult<()> {
                    match params.keys().find(|k| !keys.contains(&k.as_str())) {
                        Some(k) => Err(CliError::usage(format!("formula {name:?} has unknown param {k:?}"))),
                        None => Ok(()),
                    }
                };
                match name.as_str() {
                    "ultraspherical-a" => {
                        expect(&["lambda"])?;
                        Ok(SequenceSpec::ClosedFormUltraspherical {
                            lambda: Param::Exact(get("lambda")?),
                        })
                    }
                    "hermite-monic" => {
                        expect(&[])?;
                        Ok(SequenceSpec::ClosedFormHermiteMonic)
                    }
                    "linear" => {
                        expect(&["slope", "intercept"])?;
                        Ok(SequenceSpec::Linear {
                            slope: get("slope")?,
                            intercept: get("intercept")?,
                        })
                    }
                    other => Err(CliError::usage(format!(
                        "unknown formula {other:?}; expected ultraspherical-a, hermite-monic or linear"
                    ))),
                }
            }
        }
    }

    pub fn from_spec(spec: &SequenceSpec) -> Self {
        let formula = |name: &str, params: &[(&str, String)]| SequenceFile::Formula {
            name: name.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
        };
        match spec {
            SequenceSpec::ClosedFormUltraspherical { lambda } => {
                formula("ultraspherical-a", &[("lambda", param_string(lambda))])
            }
            SequenceSpec::ClosedFormHermiteMonic => formula("hermite-monic", &[]),
            SequenceSpec::Linear { slope, intercept } => formula(
                "linear",
                &[("slope", fmt_rational(slope)), ("intercept", fmt_rational(intercept))],
            ),
            SequenceSpec::ExplicitList { values, start } => SequenceFile::List {
                values: values.iter().map(fmt_rational).collect(),
                start: (*start != 1).then_some(*start),
            },
        }
    }
}

fn param_string(p: &Param) -> String {
    match p {
        Param::Exact(r) => fmt_rational(r),
        Param::Real(f) => crate::format::fmt_float(f),
    }
}
