//! Deterministic CSV/JSON rendering.
//!
//! Reals are written as decimal strings with as many significant digits as
//! their precision carries. Exact rationals get the same decimal plus, in
//! JSON, a `<field>_exact` companion holding `p/q`.

use rug::{Float, Rational};
use serde_json::{Map, Value as Json};
use turankit::numeric::{to_decimal, to_decimal_digits};
use turankit::Param;

use crate::error::CliResult;

/// `p/q`, or `p` for integers.
pub fn fmt_rational(r: &Rational) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Decimal with the significant digits carried by the value's precision,
/// trailing zeros trimmed; positional for moderate exponents.
pub fn fmt_float(v: &Float) -> String {
    to_decimal(v)
}

pub fn fmt_float_digits(v: &Float, digits: usize) -> String {
    to_decimal_digits(v, digits)
}

/// One output cell.
#[derive(Clone, Debug)]
pub enum Value {
    Text(String),
    Int(u64),
    Bool(bool),
    Real(Float),
    /// Exact value, printed as a decimal at `prec` bits plus `p/q` in JSON.
    Exact(Rational, u32),
    Empty,
}

impl Value {
    pub fn text(s: impl Into<String>) -> Self {
        Value::Text(s.into())
    }

    pub fn param(p: &Param, prec: u32) -> Self {
        match p {
            Param::Exact(r) => Value::Exact(r.clone(), prec),
            Param::Real(f) => Value::Real(f.clone()),
        }
    }

    pub fn opt_real(v: Option<&Float>) -> Self {
        v.map_or(Value::Empty, |f| Value::Real(f.clone()))
    }

    fn decimal(&self) -> String {
        match self {
            Value::Text(s) => s.clone(),
            Value::Int(i) => i.to_string(),
            Value::Bool(b) => b.to_string(),
            Value::Real(f) => fmt_float(f),
            Value::Exact(r, prec) => fmt_float(&Float::with_val(*prec, r)),
            Value::Empty => String::new(),
        }
    }
}

/// Rows with a fixed header.
#[derive(Clone, Debug)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Table {
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        assert_eq!(row.len(), self.columns.len(), "row width");
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> CliResult<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Value::decimal))?;
        }
        let bytes = w.into_inner().map_err(|e| std::io::Error::other(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<Json> = self
            .rows
            .iter()
            .map(|row| {
                let mut obj = Map::new();
                for (name, v) in self.columns.iter().zip(row) {
                    let j = match v {
                        Value::Int(i) => Json::from(*i),
                        Value::Bool(b) => Json::from(*b),
                        Value::Empty => Json::Null,
                        other => Json::from(other.decimal()),
                    };
                    obj.insert(name.to_string(), j);
                    if let Value::Exact(r, _) = v {
                        obj.insert(format!("{name}_exact"), Json::from(fmt_rational(r)));
                    }
                }
                Json::Object(obj)
            })
            .collect();
        serde_json::to_string_pretty(&Json::Array(rows)).expect("json values serialize") + "\n"
    }
}
