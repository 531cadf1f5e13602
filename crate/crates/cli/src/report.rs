//! A computed result in all three output formats.

use std::fmt::Display;

use clap::ValueEnum;
use serde_json::{Number, Value};
use tabinv_core::{Content, QPolynomial, Shape};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub struct Report {
    pub text: String,
    pub json: Value,
    pub csv: Vec<Vec<String>>,
}

impl Report {
    pub fn render(&self, format: Format) -> Result<String, String> {
        match format {
            Format::Text => Ok(self.text.clone()),
            Format::Json => {
                let mut s = serde_json::to_string(&self.json).map_err(|e| e.to_string())?;
                s.push('\n');
                Ok(s)
            }
            Format::Csv => {
                let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
                for row in &self.csv {
                    w.write_record(row).map_err(|e| e.to_string())?;
                }
                let bytes = w.into_inner().map_err(|e| e.to_string())?;
                String::from_utf8(bytes).map_err(|e| e.to_string())
            }
        }
    }
}

/// Exact JSON number from any integer's decimal form.
pub fn num(x: impl Display) -> Value {
    Value::Number(x.to_string().parse::<Number>().expect("integer literal"))
}

pub fn shape_json(sh: &Shape) -> Value {
    Value::Array(sh.parts().iter().map(|&p| num(p)).collect())
}

pub fn content_json(mu: &Content) -> Value {
    Value::Array(mu.counts().iter().map(|&c| num(c)).collect())
}

pub fn poly_json(p: &QPolynomial) -> Value {
    serde_json::json!({ "coeffs": p.coeffs().iter().map(num).collect::<Vec<_>>() })
}

pub fn coeff_list(p: &QPolynomial) -> String {
    p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

/// `k,coeff` rows for a polynomial.
pub fn poly_csv(p: &QPolynomial, header: &str) -> Vec<Vec<String>> {
    let mut rows = vec![vec!["k".to_string(), header.to_string()]];
    rows.extend(p.coeffs().iter().enumerate().map(|(k, c)| vec![k.to_string(), c.to_string()]));
    rows
}

pub fn rows_json(rows: &[Vec<u32>]) -> Value {
    Value::Array(rows.iter().map(|r| Value::Array(r.iter().map(|&v| num(v)).collect())).collect())
}

/// Rows joined by `/`, as accepted by `--tableau`.
pub fn rows_inline(rows: &[Vec<u32>]) -> String {
    rows.iter()
        .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join("/")
}
