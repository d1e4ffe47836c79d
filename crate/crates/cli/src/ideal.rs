//! Ideal files: UTF-8, one polynomial per line, `#` comments.

use std::path::Path;

use anyhow::Context;
use bicomm_core::text::parse_polynomial;
use bicomm_core::{Signature, SuperPolynomial};

pub fn parse_ideal(source: &str, sig: &Signature) -> anyhow::Result<Vec<SuperPolynomial>> {
    let mut out = Vec::new();
    for (i, line) in source.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let f = parse_polynomial(body, sig).with_context(|| format!("line {}", i + 1))?;
        out.push(f);
    }
    Ok(out)
}

pub fn read_ideal(path: &Path, sig: &Signature) -> anyhow::Result<Vec<SuperPolynomial>> {
    let source = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_ideal(&source, sig).with_context(|| path.display().to_string())
}
