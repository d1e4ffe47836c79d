use anyhow::{bail, Context, Result};
use bicomm_core::characters::{multiplicity, schur, Partition};
use bicomm_core::groebner::{truncated_basis, Membership, MonomialOrder, OrderKind};
use bicomm_core::identity::{self, check_identity, CheckConfig, Identity, Outcome};
use bicomm_core::series::{
    codimension, dim_component, gk_dimension_free, hilbert_free, pole_order_at_one, Codimension, Degree, Grading,
};
use bicomm_core::text::parse_polynomial;
use bicomm_core::{normalize, parse_term, Field, Multidegree, Parity, Signature};
use serde_json::{json, Value};

use crate::args::{Cli, Command, GradingArg, GsAction, IdealArgs, IdentityArgs, OrderArg, SigArgs};
use crate::ideal::read_ideal;
use crate::render::{big, polynomial, Report};
use crate::{selftest, Usage};

fn field_name(f: Field) -> String {
    match f {
        Field::Rationals => "rational".into(),
        Field::Prime(c) => format!("char-{c}"),
    }
}

fn signature(s: &SigArgs, field: Field) -> Result<Signature> {
    Ok(Signature::with_field(s.p, s.q, field)?)
}

fn sig_inputs(s: &SigArgs, field: Field) -> Value {
    json!({ "p": s.p, "q": s.q, "field": field_name(field) })
}

fn require_char_zero(field: Field) -> Result<()> {
    if field.characteristic() != 0 {
        bail!("characters need characteristic zero, got {}", field_name(field));
    }
    Ok(())
}

fn parse_partition(s: &str) -> Result<Partition> {
    s.parse::<Partition>().map_err(|e| Usage(format!("bad partition {s:?}: {e}")).into())
}

pub fn execute(cli: &Cli) -> Result<Report> {
    let field = cli.field;
    match &cli.command {
        Command::Normalize { sig, term } => {
            let s = signature(sig, field)?;
            let t = parse_term(term, &s)?;
            let f = normalize(&t, &s)?;
            let mut inputs = sig_inputs(sig, field);
            inputs["term"] = json!(term);
            Ok(Report::new(inputs, polynomial(&f), f.to_string()))
        }
        Command::IdentityCheck(args) => identity_check(args, field, cli.seed.unwrap_or(0)),
        Command::Hilbert { sig, grading, trunc } => hilbert(sig, *grading, *trunc, field),
        Command::Dim { sig, total, bi, y, z } => {
            let s = signature(sig, field)?;
            let degree = match (total, bi, y, z) {
                (Some(n), _, _, _) => Degree::Total(*n),
                (_, Some(kl), _, _) => match kl[..] {
                    [k, l] => Degree::Bi(k, l),
                    _ => return Err(Usage("--bi takes two values, K,L".into()).into()),
                },
                (_, _, y, z) if y.is_some() || z.is_some() => {
                    let y = y.clone().unwrap_or_else(|| vec![0; s.p]);
                    let z = z.clone().unwrap_or_else(|| vec![0; s.q]);
                    Degree::Multi(Multidegree::new(y, z))
                }
                _ => return Err(Usage("dim needs --total, --bi or --y/--z".into()).into()),
            };
            let d = dim_component(&s, &degree)?;
            let mut inputs = sig_inputs(sig, field);
            inputs["degree"] = match &degree {
                Degree::Total(n) => json!({ "total": n }),
                Degree::Bi(k, l) => json!({ "bi": [k, l] }),
                Degree::Multi(md) => json!({ "y": md.y, "z": md.z }),
            };
            Ok(Report::new(inputs, json!({ "dimension": big(&d) }), d.to_string()))
        }
        Command::Codim { n, p, q } => {
            let (mode, inputs) = match (n, p, q) {
                (Some(n), _, _) => (Codimension::Ordinary(*n), json!({ "n": n })),
                (None, Some(p), Some(q)) => (Codimension::Super { p: *p, q: *q }, json!({ "p": p, "q": q })),
                _ => return Err(Usage("codim needs --n, or --p and --q".into()).into()),
            };
            let c = codimension(mode)?;
            Ok(Report::new(inputs, json!({ "codimension": big(&c) }), c.to_string()))
        }
        Command::Gk { sig } => {
            let s = signature(sig, field)?;
            let gk = gk_dimension_free(&s);
            let series = hilbert_free(&s, Grading::Total, 0);
            let pole = pole_order_at_one(&series)?;
            let result = json!({ "gk_dimension": gk, "pole_order": pole, "series": series.to_string() });
            Ok(Report::new(sig_inputs(sig, field), result, gk.to_string()))
        }
        Command::Gs { action } => gs(action, field),
        Command::Cochar { lambda, mu, table, max } => {
            require_char_zero(field)?;
            if *table {
                let mut rows = Vec::new();
                let mut entries = Vec::new();
                for n in 1..=*max {
                    for k in 0..=n {
                        for l in Partition::all_of(k) {
                            for m in Partition::all_of(n - k) {
                                let c = multiplicity(&l, &m);
                                rows.push(vec![l.to_string(), m.to_string(), c.to_string()]);
                                entries.push(json!({ "lambda": l.parts(), "mu": m.parts(), "multiplicity": c }));
                            }
                        }
                    }
                }
                let text = rows.iter().map(|r| format!("{} {} {}", r[0], r[1], r[2])).collect::<Vec<_>>().join("\n");
                return Ok(Report::new(json!({ "table": true, "max": max }), json!({ "entries": entries }), text)
                    .with_table(&["lambda", "mu", "multiplicity"], rows));
            }
            let l = parse_partition(lambda.as_deref().unwrap_or(""))?;
            let m = parse_partition(mu)?;
            let c = multiplicity(&l, &m);
            let inputs = json!({ "lambda": l.parts(), "mu": m.parts() });
            Ok(Report::new(inputs, json!({ "multiplicity": c }), c.to_string()))
        }
        Command::Schur { shape, vars } => {
            require_char_zero(field)?;
            let l = parse_partition(shape)?;
            let poly = schur(&l, *vars);
            let names: Vec<String> = (1..=*vars).map(|i| format!("x{i}")).collect();
            let text = poly.fmt_with(&names);
            let terms: Vec<Value> = poly.terms().map(|(e, c)| json!({ "exponents": e, "coeff": big(c) })).collect();
            let inputs = json!({ "shape": l.parts(), "vars": vars });
            Ok(Report::new(inputs, json!({ "text": text, "terms": terms }), text))
        }
        Command::Selftest => selftest::run(cli.seed.unwrap_or(0)),
    }
}

fn identity_check(args: &IdentityArgs, field: Field, seed: u64) -> Result<Report> {
    let sig = Signature::with_field(args.p, args.q, field)?;
    let catalog = identity::catalog(args.k);
    if args.list {
        let text = catalog.iter().map(|(n, id)| format!("{n}: {id}")).collect::<Vec<_>>().join("\n");
        let entries: Vec<Value> = catalog.iter().map(|(n, id)| json!({ "name": n, "identity": id.to_string() })).collect();
        return Ok(Report::new(json!({ "list": true, "k": args.k }), json!({ "identities": entries }), text));
    }
    let selected: Vec<(String, Identity)> = if args.all {
        catalog.into_iter().map(|(n, id)| (n.to_string(), id)).collect()
    } else if let Some(name) = &args.name {
        let id = identity::named(name, args.k)
            .ok_or_else(|| Usage(format!("unknown identity {name:?}; known: {}", identity::catalog_names().join(", "))))?;
        vec![(name.clone(), id)]
    } else if let (Some(lhs), Some(rhs)) = (&args.lhs, &args.rhs) {
        let mut id = Identity::parse(lhs, rhs, &args.sign)?;
        for v in &args.odd {
            id = id.with_parity(v, Parity::Odd)?;
        }
        for v in &args.even {
            id = id.with_parity(v, Parity::Even)?;
        }
        vec![("custom".into(), id)]
    } else {
        return Err(Usage("identity-check needs --name, --all, --list or --lhs/--rhs".into()).into());
    };

    let cfg = CheckConfig { trials: args.trials, seed, ..CheckConfig::default() };
    let mut results = Vec::new();
    let mut lines = Vec::new();
    let mut rows = Vec::new();
    for (name, id) in &selected {
        let outcome = check_identity(id, &sig, &cfg)?;
        let (passed, trials, cases, witness) = match &outcome {
            Outcome::Pass { random_trials, exhaustive_cases } => (true, *random_trials, *exhaustive_cases, Value::Null),
            Outcome::Fail(w) => {
                let values: Vec<Value> = id.vars.iter().zip(&w.values).map(|(v, f)| json!({ "variable": v.name, "value": f.to_string() })).collect();
                (false, 0, 0, json!({ "trial": w.trial, "values": values, "lhs": w.lhs.to_string(), "rhs": w.rhs.to_string() }))
            }
        };
        lines.push(match &outcome {
            Outcome::Pass { .. } => format!("{name}: PASS ({trials} random trials, {cases} exhaustive cases)"),
            Outcome::Fail(w) => {
                let at = w.trial.map_or_else(|| "an exhaustive case".to_string(), |t| format!("trial {t}"));
                let vals: Vec<String> = id.vars.iter().zip(&w.values).map(|(v, f)| format!("{} = {f}", v.name)).collect();
                format!("{name}: FAIL at {at}: {}; lhs = {}, rhs = {}", vals.join(", "), w.lhs, w.rhs)
            }
        });
        rows.push(vec![name.clone(), id.to_string(), passed.to_string(), trials.to_string(), cases.to_string()]);
        results.push(json!({
            "name": name,
            "identity": id.to_string(),
            "passed": passed,
            "random_trials": trials,
            "exhaustive_cases": cases,
            "witness": witness,
        }));
    }
    let inputs = json!({ "p": args.p, "q": args.q, "field": field_name(field), "k": args.k, "trials": args.trials });
    Ok(Report::new(inputs, json!({ "checks": results }), lines.join("\n"))
        .with_table(&["name", "identity", "passed", "random_trials", "exhaustive_cases"], rows)
        .with_seed(seed))
}

fn hilbert(sig: &SigArgs, grading: GradingArg, trunc: usize, field: Field) -> Result<Report> {
    let s = signature(sig, field)?;
    let g = match grading {
        GradingArg::Total => Grading::Total,
        GradingArg::Bi => Grading::Bi,
        GradingArg::Multi => Grading::Multi,
    };
    let series = hilbert_free(&s, g, trunc);
    let vars = series.variables().to_vec();
    let entries: Vec<(Vec<u32>, num_bigint::BigInt)> = if g == Grading::Total {
        (1..=trunc).map(|n| (vec![n as u32], series.total_coefficient(n).expect("within bound"))).collect()
    } else {
        series.coefficients().map(|(e, c)| (e.clone(), c.clone())).collect()
    };
    let mut text = format!("H = {series}\n");
    for (e, c) in &entries {
        let key = if g == Grading::Total {
            e[0].to_string()
        } else {
            vars.iter().zip(e).filter(|(_, &x)| x > 0).map(|(v, &x)| if x == 1 { v.clone() } else { format!("{v}^{x}") }).collect::<Vec<_>>().join(" ")
        };
        text.push_str(&format!("{key}: {c}\n"));
    }
    let mut header: Vec<&str> = vars.iter().map(String::as_str).collect();
    if g == Grading::Total {
        header = vec!["degree"];
    }
    header.push("dimension");
    let rows: Vec<Vec<String>> = entries
        .iter()
        .map(|(e, c)| e.iter().map(|x| x.to_string()).chain(std::iter::once(c.to_string())).collect())
        .collect();
    let coefficients: Vec<Value> = entries.iter().map(|(e, c)| json!({ "exponents": e, "value": big(c) })).collect();
    let denominator: Vec<Value> = series.denominator().iter().map(|(m, e)| json!({ "exponents": m, "power": e })).collect();
    let result = json!({
        "variables": vars,
        "rational": series.to_string(),
        "numerator": series.numerator().fmt_with(series.variables()),
        "denominator": denominator,
        "coefficients": coefficients,
    });
    let mut inputs = sig_inputs(sig, field);
    inputs["grading"] = json!(format!("{grading:?}").to_lowercase());
    inputs["trunc"] = json!(trunc);
    Ok(Report::new(inputs, result, text).with_table(&header, rows))
}

fn gs(action: &GsAction, field: Field) -> Result<Report> {
    let (args, poly) = match action {
        GsAction::Basis { ideal } | GsAction::Dims { ideal } => (ideal, None),
        GsAction::Reduce { ideal, poly } | GsAction::Member { ideal, poly } => (ideal, Some(poly)),
    };
    let IdealArgs { sig: sig_args, ideal, order, max_degree } = args;
    let s = signature(sig_args, field)?;
    let gens = read_ideal(ideal, &s)?;
    let f = poly.map(|p| parse_polynomial(p, &s).context("--poly")).transpose()?;
    let needed = gens.iter().chain(&f).map(|g| g.degree()).max().unwrap_or(1).max(1);
    let d = max_degree.unwrap_or(needed);
    let kind = match order {
        OrderArg::Deglex => OrderKind::Deglex,
        OrderArg::Weight => OrderKind::Weight,
    };
    let b = truncated_basis(&gens, &MonomialOrder::new(kind, &s), d)?;
    let mut inputs = sig_inputs(sig_args, field);
    inputs["ideal"] = json!(gens.iter().map(|g| g.to_string()).collect::<Vec<_>>());
    inputs["order"] = json!(format!("{order:?}").to_lowercase());
    inputs["max_degree"] = json!(d);
    if let Some(p) = poly {
        inputs["poly"] = json!(p);
    }
    let summary = json!({
        "staircase": b.staircase().iter().map(|m| m.to_string()).collect::<Vec<_>>(),
        "stable_through": b.stable_through(),
    });
    Ok(match action {
        GsAction::Basis { .. } => {
            let mut text = String::from("staircase:\n");
            for m in b.staircase() {
                text.push_str(&format!("  {m}\n"));
            }
            text.push_str("generators:\n");
            for g in b.generators() {
                text.push_str(&format!("  {g}\n"));
            }
            text.push_str(&format!("last degree without new leads: {}\n", b.stable_through()));
            match b.last_new_degree() {
                Some(d) => text.push_str(&format!("last degree with new leads: {d}\n")),
                None => text.push_str("no leads\n"),
            }
            let mut result = summary;
            result["generators"] = json!(b.generators().iter().map(polynomial).collect::<Vec<_>>());
            result["last_new_degree"] = json!(b.last_new_degree());
            let rows = b.staircase().iter().zip(b.generators()).map(|(m, g)| vec![m.to_string(), g.to_string()]).collect();
            Report::new(inputs, result, text).with_table(&["lead", "generator"], rows)
        }
        GsAction::Reduce { .. } => {
            let r = b.reduce(f.as_ref().expect("poly given"))?;
            let mut result = summary;
            result["remainder"] = polynomial(&r);
            Report::new(inputs, result, r.to_string())
        }
        GsAction::Member { .. } => {
            let answer = match b.member(f.as_ref().expect("poly given"))? {
                Membership::Yes => "yes",
                Membership::No => "no",
                Membership::Unknown => "unknown",
            };
            let mut result = summary;
            result["member"] = json!(answer);
            Report::new(inputs, result, answer)
        }
        GsAction::Dims { .. } => {
            let dims = b.quotient_dims();
            let text = dims.iter().enumerate().map(|(i, n)| format!("{}: {n}", i + 1)).collect::<Vec<_>>().join("\n");
            let rows = dims.iter().enumerate().map(|(i, n)| vec![(i + 1).to_string(), n.to_string()]).collect();
            let mut result = summary;
            result["quotient_dims"] = json!(dims);
            result["ideal_dims"] = json!(b.ideal_dims());
            Report::new(inputs, result, text).with_table(&["degree", "dimension"], rows)
        }
    })
}
