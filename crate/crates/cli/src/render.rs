//! Output in text, CSV, or the JSON envelope.

use bicomm_core::{BasisMonomial, SuperPolynomial};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::args::Format;

/// Everything a subcommand produces, before formatting.
#[derive(Debug, Clone)]
pub struct Report {
    pub inputs: Value,
    pub result: Value,
    pub text: String,
    /// Header and rows for CSV; a single `value` column when absent.
    pub table: Option<(Vec<String>, Vec<Vec<String>>)>,
    pub seed: Option<u64>,
    /// Nonzero when the command ran but its verdict is negative (selftest).
    pub exit_code: i32,
}

impl Report {
    pub fn new(inputs: Value, result: Value, text: impl Into<String>) -> Self {
        Report { inputs, result, text: text.into(), table: None, seed: None, exit_code: 0 }
    }

    pub fn with_table(mut self, header: &[&str], rows: Vec<Vec<String>>) -> Self {
        self.table = Some((header.iter().map(|s| s.to_string()).collect(), rows));
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn render(&self, command: &str, format: Format) -> anyhow::Result<String> {
        Ok(match format {
            Format::Text => {
                let mut s = String::new();
                if let Some(seed) = self.seed {
                    s.push_str(&format!("seed: {seed}\n"));
                }
                s.push_str(&self.text);
                if !s.ends_with('\n') {
                    s.push('\n');
                }
                s
            }
            Format::Json => {
                let envelope = json!({
                    "command": command,
                    "inputs": self.inputs,
                    "result": self.result,
                    "seed": self.seed,
                });
                let mut s = serde_json::to_string_pretty(&envelope)?;
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                match &self.table {
                    Some((header, rows)) => {
                        w.write_record(header)?;
                        for r in rows {
                            w.write_record(r)?;
                        }
                    }
                    None => {
                        w.write_record(["value"])?;
                        for line in self.text.lines() {
                            w.write_record([line])?;
                        }
                    }
                }
                String::from_utf8(w.into_inner()?)?
            }
        })
    }
}

/// Integers as JSON numbers when they fit, otherwise as decimal strings.
pub fn big(n: &BigInt) -> Value {
    match i64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

pub fn monomial(m: &BasisMonomial, coeff: &str) -> Value {
    match m {
        BasisMonomial::Gen(g) => json!({ "coeff": coeff, "generator": g.to_string() }),
        BasisMonomial::Tensor(t) => json!({
            "coeff": coeff,
            "yu": t.left.y,
            "zu": t.left.z,
            "yv": t.right.y,
            "zv": t.right.z,
        }),
    }
}

pub fn polynomial(f: &SuperPolynomial) -> Value {
    let terms: Vec<Value> = f.terms().map(|(m, c)| monomial(m, &c.to_string())).collect();
    json!({ "text": f.to_string(), "terms": terms })
}
