use std::io::Write;
use std::path::PathBuf;

use serde_json::Value;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn run(args: &[&str]) -> Run {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("bicomm").chain(args.iter().copied());
    let code = bicomm::run(argv, &mut out, &mut err);
    Run { code, out: String::from_utf8(out).unwrap(), err: String::from_utf8(err).unwrap() }
}

fn ok(args: &[&str]) -> String {
    let r = run(args);
    assert_eq!(r.code, 0, "{args:?}: {}", r.err);
    r.out
}

fn schema(name: &str) -> jsonschema::JSONSchema {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("schemas").join(format!("{name}.schema.json"));
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    jsonschema::JSONSchema::compile(&doc).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn assert_valid(name: &str, instance: &Value) {
    let s = schema(name);
    let msgs: Vec<String> = match s.validate(instance) {
        Ok(()) => return,
        Err(errors) => errors.map(|e| format!("{} at {}", e, e.instance_path)).collect(),
    };
    panic!("{name}: {msgs:?}\n{instance:#}");
}

/// Run with `--format json`, check the schema and return the envelope.
fn json(schema_name: &str, args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let v: Value = serde_json::from_str(&ok(&full)).unwrap();
    assert_valid(schema_name, &v);
    v
}

fn ideal_file(lines: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(lines.as_bytes()).unwrap();
    f
}

#[test]
fn documented_examples() {
    assert_eq!(ok(&["codim", "--n", "2"]), "8\n");
    assert_eq!(ok(&["normalize", "--p", "1", "--q", "2", "(z2 (z1 y1))"]), "-1 * z1 z2 | y1\n");
    assert_eq!(ok(&["gk", "--p", "3", "--q", "5"]), "6\n");
}

#[test]
fn characteristic_two_and_composites_are_usage_errors() {
    for f in ["char-2", "char-9", "char-x", "reals"] {
        let r = run(&["--field", f, "gk"]);
        assert_eq!(r.code, 2, "{f}");
        assert!(r.out.is_empty());
    }
    assert_eq!(ok(&["--field", "char-5", "gk", "--p", "2"]), "4\n");
}

#[test]
fn usage_and_domain_errors() {
    let r = run(&["dim", "--p", "2"]);
    assert_eq!(r.code, 2);
    let v: Value = serde_json::from_str(r.err.trim()).unwrap();
    assert_valid("error", &v);
    assert_eq!(v["error"], "usage");

    let r = run(&["normalize", "(y1 y2)"]);
    assert_eq!(r.code, 1);
    let v: Value = serde_json::from_str(r.err.trim()).unwrap();
    assert_valid("error", &v);
    assert_eq!(v["error"], "domain");

    let r = run(&["--field", "char-3", "cochar", "--lambda", "1"]);
    assert_eq!(r.code, 1);
    assert_eq!(run(&["no-such-command"]).code, 2);
    assert_eq!(run(&["--help"]).code, 0);
}

#[test]
fn normal_forms_round_trip() {
    let v = json("normalize", &["normalize", "--p", "1", "--q", "2", "(z2 (z1 y1))"]);
    let text = v["result"]["text"].as_str().unwrap();
    let terms = v["result"]["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 1);
    assert_eq!(terms[0]["coeff"], "-1");
    assert_eq!(terms[0]["yu"], serde_json::json!([0]));
    assert_eq!(terms[0]["zu"], serde_json::json!([1, 2]));
    assert_eq!(terms[0]["yv"], serde_json::json!([1]));

    // The printed form is accepted back as a polynomial.
    let f = ideal_file(&format!("{text}\n"));
    let path = f.path().to_str().unwrap();
    let member = ok(&["gs", "member", "--p", "1", "--q", "2", "--ideal", path, "--poly", text]);
    assert_eq!(member, "yes\n");

    let v = json("normalize", &["normalize", "--p", "2", "--q", "0", "y2"]);
    assert_eq!(v["result"]["terms"][0]["generator"], "y2");
}

#[test]
fn outputs_are_deterministic() {
    let cases: &[&[&str]] = &[
        &["--format", "json", "identity-check", "--all", "--trials", "20", "--seed", "9"],
        &["hilbert", "--p", "2", "--q", "2", "--grading", "multi", "--trunc", "4"],
        &["selftest"],
    ];
    for args in cases {
        assert_eq!(ok(args), ok(args), "{args:?}");
    }
    let a = ok(&["identity-check", "--name", "superleft", "--seed", "1", "--trials", "10"]);
    assert!(a.starts_with("seed: 1\n"), "{a}");
}

#[test]
fn json_outputs_match_schemas() {
    json("codim", &["codim", "--n", "5"]);
    json("codim", &["codim", "--p", "2", "--q", "3"]);
    json("dim", &["dim", "--p", "2", "--q", "1", "--bi", "2,1"]);
    json("dim", &["dim", "--p", "2", "--q", "1", "--y", "1,1", "--z", "1"]);
    json("gk", &["gk", "--p", "2", "--q", "2"]);
    for g in ["total", "bi", "multi"] {
        json("hilbert", &["hilbert", "--p", "1", "--q", "2", "--grading", g, "--trunc", "4"]);
    }
    json("identity-check", &["identity-check", "--list"]);
    let v = json("identity-check", &["identity-check", "--all", "--trials", "10"]);
    assert!(v["result"]["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
    json("cochar", &["cochar", "--lambda", "2,1", "--mu", "1"]);
    json("cochar", &["cochar", "--table", "--max", "3"]);
    json("schur", &["schur", "--shape", "2,1", "--vars", "3"]);
    json("selftest", &["selftest"]);

    let f = ideal_file("# commutator\ny1 | z1 - z1 | y1\n");
    let path = f.path().to_str().unwrap();
    for order in ["deglex", "weight"] {
        let base = ["gs", "basis", "--p", "1", "--q", "1", "--ideal", path, "--order", order, "--max-degree", "3"];
        json("gs", &base);
        let mut dims = base;
        dims[1] = "dims";
        json("gs", &dims);
        json("gs", &["gs", "reduce", "--p", "1", "--q", "1", "--ideal", path, "--order", order, "--poly", "z1 | y1"]);
        json("gs", &["gs", "member", "--p", "1", "--q", "1", "--ideal", path, "--order", order, "--poly", "z1 | y1"]);
    }
}

#[test]
fn failing_identity_reports_a_witness() {
    let v = json(
        "identity-check",
        &["identity-check", "--p", "2", "--q", "2", "--lhs", "((x1 x2) x3)", "--rhs", "(x1 (x2 x3))"],
    );
    let check = &v["result"]["checks"][0];
    assert_eq!(check["passed"], false);
    assert!(check["witness"]["lhs"] != check["witness"]["rhs"]);
}

#[test]
fn custom_identity_with_parities() {
    let out = ok(&[
        "identity-check", "--p", "1", "--q", "2", "--lhs", "(z1 (z1 x1))", "--rhs", "0", "--odd", "z1",
    ]);
    assert!(out.contains("PASS"), "{out}");
}

#[test]
fn groebner_commands_on_ideal_files() {
    let f = ideal_file("y1 | z1 - z1 | y1   # commutator\n\nz1 | z1\n");
    let path = f.path().to_str().unwrap();
    let dims = ok(&["gs", "dims", "--p", "1", "--q", "1", "--ideal", path, "--max-degree", "4", "--format", "csv"]);
    let mut lines = dims.lines();
    assert_eq!(lines.next(), Some("degree,dimension"));
    assert_eq!(lines.count(), 4);
    assert_eq!(ok(&["gs", "member", "--p", "1", "--q", "1", "--ideal", path, "--poly", "z1 | z1"]), "yes\n");
    assert_eq!(ok(&["gs", "member", "--p", "1", "--q", "1", "--ideal", path, "--poly", "y1 | y1"]), "unknown\n");
    assert_eq!(ok(&["gs", "member", "--p", "1", "--q", "1", "--ideal", path, "--poly", "y1"]), "no\n");
    assert_eq!(ok(&["gs", "reduce", "--p", "1", "--q", "1", "--ideal", path, "--poly", "z1 | y1"]), ok(&[
        "gs", "reduce", "--p", "1", "--q", "1", "--ideal", path, "--poly", "y1 | z1"
    ]));

    let bad = ideal_file("y1 | z1\ny7\n");
    let r = run(&["gs", "basis", "--p", "1", "--q", "1", "--ideal", bad.path().to_str().unwrap()]);
    assert_eq!(r.code, 1);
    assert!(r.err.contains("line 2"), "{}", r.err);
}

#[test]
fn csv_tables() {
    let out = ok(&["--format", "csv", "hilbert", "--p", "1", "--q", "1", "--trunc", "4"]);
    assert_eq!(out, "degree,dimension\n1,2\n2,4\n3,8\n4,12\n");
    let out = ok(&["--format", "csv", "codim", "--n", "3"]);
    assert_eq!(out.lines().next(), Some("value"));
    let out = ok(&["--format", "csv", "cochar", "--table", "--max", "2"]);
    let mut rdr = csv::Reader::from_reader(out.as_bytes());
    let total: u64 = rdr.records().map(|r| r.unwrap()[2].parse::<u64>().unwrap()).sum();
    assert_eq!(total, 8);
}

#[test]
fn hilbert_text_agrees_with_dim() {
    let out = ok(&["hilbert", "--p", "2", "--q", "1", "--trunc", "6"]);
    for line in out.lines().skip(1) {
        let (n, c) = line.split_once(": ").unwrap();
        assert_eq!(ok(&["dim", "--p", "2", "--q", "1", "--total", n]).trim(), c, "degree {n}");
    }
}
