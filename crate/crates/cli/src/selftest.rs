//! Quick invariant checks over the whole library.

use anyhow::Result;
use bicomm_core::characters::{multiplicity, Partition};
use bicomm_core::groebner::{truncated_basis, Membership, MonomialOrder, OrderKind};
use bicomm_core::identity::{catalog, check_identity, CheckConfig};
use bicomm_core::monomial::enumerate_degree;
use bicomm_core::series::{codimension, gk_dimension_free, hilbert_free, Codimension, Grading};
use bicomm_core::text::parse_polynomial;
use bicomm_core::{normalize, parse_term, Signature};
use num_bigint::BigInt;
use serde_json::json;

use crate::render::Report;

type Check = (&'static str, fn(u64) -> Result<String, String>);

fn sig(p: usize, q: usize) -> Signature {
    Signature::new(p, q).expect("valid signature")
}

fn normal_form(_: u64) -> Result<String, String> {
    let s = sig(1, 2);
    let t = parse_term("(z2 (z1 y1))", &s).map_err(|e| e.to_string())?;
    let f = normalize(&t, &s).map_err(|e| e.to_string())?;
    match f.to_string().as_str() {
        "-1 * z1 z2 | y1" => Ok(f.to_string()),
        other => Err(format!("got {other}")),
    }
}

fn series_counts(_: u64) -> Result<String, String> {
    for (p, q) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
        let s = sig(p, q);
        let h = hilbert_free(&s, Grading::Total, 5);
        for n in 1..=5 {
            let want = BigInt::from(enumerate_degree(&s, n).len());
            let got = h.total_coefficient(n).expect("within bound");
            if got != want {
                return Err(format!("({p},{q}) degree {n}: series {got}, basis {want}"));
            }
        }
    }
    Ok("4 signatures, degrees 1..5".into())
}

fn gk(_: u64) -> Result<String, String> {
    for p in 0..=3 {
        for q in 0..=3 {
            if p + q == 0 {
                continue;
            }
            let d = gk_dimension_free(&sig(p, q));
            if d != 2 * p {
                return Err(format!("({p},{q}): {d}"));
            }
        }
    }
    Ok("2p for p, q <= 3".into())
}

fn codims(_: u64) -> Result<String, String> {
    for n in 1..=7 {
        let mut sum = BigInt::from(0);
        for p in 0..=n {
            let binom = (0..p).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1));
            sum += binom * codimension(Codimension::Super { p, q: n - p }).map_err(|e| e.to_string())?;
        }
        let c = codimension(Codimension::Ordinary(n)).map_err(|e| e.to_string())?;
        if c != sum {
            return Err(format!("n = {n}: {c} vs {sum}"));
        }
    }
    Ok("ordinary = binomial sum of super, n <= 7".into())
}

fn identities(seed: u64) -> Result<String, String> {
    let s = sig(2, 3);
    let cfg = CheckConfig { trials: 20, seed, ..CheckConfig::default() };
    let cat = catalog(4);
    for (name, id) in &cat {
        let out = check_identity(id, &s, &cfg).map_err(|e| e.to_string())?;
        if !out.passed() {
            return Err(format!("{name} failed"));
        }
    }
    Ok(format!("{} catalog identities", cat.len()))
}

fn groebner(_: u64) -> Result<String, String> {
    let s = sig(1, 1);
    let g = parse_polynomial("y1 | z1 - z1 | y1", &s).map_err(|e| e.to_string())?;
    let f = parse_polynomial("y1 y1 | z1 - y1 z1 | y1", &s).map_err(|e| e.to_string())?;
    for kind in [OrderKind::Deglex, OrderKind::Weight] {
        let b = truncated_basis(std::slice::from_ref(&g), &MonomialOrder::new(kind, &s), 3).map_err(|e| e.to_string())?;
        if b.member(&g).map_err(|e| e.to_string())? != Membership::Yes {
            return Err(format!("{kind:?}: generator not a member"));
        }
        let r = b.reduce(&f).map_err(|e| e.to_string())?;
        if b.reduce(&r).map_err(|e| e.to_string())? != r {
            return Err(format!("{kind:?}: reduction not idempotent"));
        }
    }
    Ok("membership and idempotent reduction".into())
}

fn cocharacters(_: u64) -> Result<String, String> {
    for p in 0..=3 {
        for q in 0..=3 {
            if p + q == 0 {
                continue;
            }
            let mut sum = BigInt::from(0);
            for l in Partition::all_of(p) {
                for m in Partition::all_of(q) {
                    sum += BigInt::from(multiplicity(&l, &m)) * l.standard_tableaux() * m.standard_tableaux();
                }
            }
            let c = codimension(Codimension::Super { p, q }).map_err(|e| e.to_string())?;
            if sum != c {
                return Err(format!("({p},{q}): {sum} vs {c}"));
            }
        }
    }
    Ok("sum m f f = codimension, p, q <= 3".into())
}

const CHECKS: &[Check] = &[
    ("normal form", normal_form),
    ("series counts", series_counts),
    ("gk dimension", gk),
    ("codimensions", codims),
    ("identities", identities),
    ("groebner", groebner),
    ("cocharacters", cocharacters),
];

pub fn run(seed: u64) -> Result<Report> {
    let mut rows = Vec::new();
    let mut checks = Vec::new();
    let mut failed = 0;
    for (name, f) in CHECKS {
        let (ok, detail) = match f(seed) {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        failed += usize::from(!ok);
        let status = if ok { "PASS" } else { "FAIL" };
        rows.push(vec![name.to_string(), status.to_string(), detail.clone()]);
        checks.push(json!({ "name": name, "passed": ok, "detail": detail }));
    }
    let text = rows.iter().map(|r| format!("{:<14} {}  {}", r[0], r[1], r[2])).collect::<Vec<_>>().join("\n");
    let mut report = Report::new(json!({}), json!({ "checks": checks, "failed": failed }), text)
        .with_table(&["check", "status", "detail"], rows)
        .with_seed(seed);
    report.exit_code = i32::from(failed > 0);
    Ok(report)
}
