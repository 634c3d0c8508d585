use serde_json::Value;
use std::io::Write;
use std::process::{Command, Output};

fn seedcert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_seedcert")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--json", "--no-timestamp"]);
    let o = seedcert(&all);
    (o.status.code().unwrap(), serde_json::from_slice(&o.stdout).expect("valid JSON"))
}

fn check<'a>(report: &'a Value, name: &str) -> &'a Value {
    report["checks"].as_array().unwrap().iter().find(|c| c["name"] == name).unwrap_or_else(|| panic!("no check {name}"))
}

fn witness(check: &Value, key: &str) -> String {
    check["witness"]
        .as_array()
        .unwrap()
        .iter()
        .find(|w| w[0] == key)
        .map(|w| w[1].as_str().unwrap().to_string())
        .unwrap_or_else(|| panic!("no witness {key}"))
}

fn candidates(report: &Value) -> Vec<&Value> {
    report["checks"].as_array().unwrap().iter().filter(|c| c["name"].as_str().unwrap().starts_with("candidate ")).collect()
}

#[test]
fn certify_grassmannian_fixture() {
    let (code, r) = json(&["certify", "--fixture", "grassmannian_k2_m4"]);
    assert_eq!(code, 0);
    assert_eq!(r["overall"], "PASS");
    let a0 = check(&r, "ȧ₀ exists");
    assert_eq!(witness(a0, "α"), "e1-e4");
    assert_eq!(witness(a0, "ȧ₀"), "ε-values (1/8, 0, 0, -1/8)");
    let c0 = check(&r, "ċ₀ exists");
    assert_eq!(witness(c0, "ċ₀"), "ε-values (2/3, 0, -1/3, -1/3)");
    assert_eq!(witness(c0, "strategy"), "Projection");
}

#[test]
fn certify_scaling_weight_fails_with_reason() {
    let o = seedcert(&["certify", "--fixture", "borel_pgl4_neg", "--no-timestamp"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).ends_with("overall: FAIL (weight is scaling element)\n"));
}

#[test]
fn certify_path_uses_fallback_c0() {
    let (code, r) = json(&["certify", "--fixture", "path_m5"]);
    assert_eq!(code, 0);
    let c0 = check(&r, "ċ₀ exists");
    assert_eq!(witness(c0, "strategy"), "Feasibility");
    assert_eq!(witness(c0, "projection accepted"), "false");
    assert_eq!(witness(c0, "projection violated by"), "e2-e3");
}

#[test]
fn enumerate_contains_known_seeds() {
    let (code, r) = json(&["enumerate", "--algebra", "sl:4", "--cross", "2"]);
    assert_eq!(code, 0);
    let found = candidates(&r).iter().any(|c| witness(c, "descriptor") == "beta=0,1,-1,0;gamma=0,1,0,-1;zeta=-1,1,0,0;terms=1@0.0.0");
    assert!(found);

    let (_, r) = json(&["enumerate", "--algebra", "sl:4", "--cross", "1,2,3"]);
    let weights: Vec<String> = candidates(&r).iter().map(|c| witness(c, "weight")).collect();
    assert!(weights.contains(&"e1-2e2+2e3-e4".to_string()), "{weights:?}");
    assert!(weights.contains(&"-e1+3e2-e3-e4".to_string()), "{weights:?}");

    let (_, r) = json(&["enumerate", "--algebra", "sl:4", "--cross", "1"]);
    let found = candidates(&r).iter().any(|c| witness(c, "descriptor").starts_with("beta=1,-1,0,0;gamma=1,0,-1,0;zeta=0,-1,0,1;"));
    assert!(found);
}

#[test]
fn enumerated_descriptors_certify_consistently() {
    let (_, r) = json(&["enumerate", "--algebra", "sl:5", "--cross", "1,2"]);
    let cands = candidates(&r);
    assert!(!cands.is_empty());
    for c in cands {
        let desc = witness(c, "descriptor");
        let (code, cert) = json(&["certify", "--algebra", "sl:5", "--cross", "1,2", "--seed", &desc]);
        let expected = witness(c, "construction");
        assert_eq!(code == 0, expected == "PASS", "{desc}");
        assert_eq!(cert["overall"] == "PASS", expected == "PASS");
    }
}

#[test]
fn reports_are_deterministic_and_parallel_invariant() {
    let base = ["enumerate", "--algebra", "sl:5", "--cross", "1", "--json", "--no-timestamp"];
    let a = seedcert(&base);
    let b = seedcert(&base);
    let mut par = base.to_vec();
    par.extend(["--parallel", "3"]);
    let c = seedcert(&par);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    let stamped = stdout(&seedcert(&["certify", "--fixture", "grassmannian_k1_m5"]));
    assert!(stamped.contains("timestamp: "));
}

fn no_floats(v: &Value) -> bool {
    match v {
        Value::Number(n) => n.is_u64() || n.is_i64(),
        Value::Array(a) => a.iter().all(no_floats),
        Value::Object(o) => o.values().all(no_floats),
        _ => true,
    }
}

#[test]
fn rationals_are_strings() {
    let (_, r) = json(&["certify", "--fixture", "grassmannian_k1_m5"]);
    assert!(no_floats(&r));
    assert!(witness(check(&r, "ċ₀ exists"), "ċ₀").contains('/'));
    assert!(r["checks"].as_array().unwrap().iter().all(|c| c["witness"].as_array().unwrap().iter().all(|w| w[1].is_string())));
}

#[test]
fn audits_pass() {
    let o = seedcert(&["audit", "--algebra", "sl:4", "--cross", "1,2,3", "--no-timestamp"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("[FAIL]"));
    let o = seedcert(&["audit", "--algebra", "qc:2,2", "--no-timestamp"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn broken_structure_constants_surface_a_jacobi_witness() {
    let mut f = tempfile::Builder::new().suffix(".sc").tempfile().unwrap();
    writeln!(f, "dim 3\n1 2 3 1\n2 3 3 1\n1 3 2 1").unwrap();
    let path = format!("file:{}", f.path().display());
    let o = seedcert(&["audit", "--algebra", &path, "--no-timestamp"]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.contains("[FAIL] Jacobi identity"));
    assert!(out.contains("witness: (e"));
}

#[test]
fn fixture_files_load_from_paths() {
    let mut f = tempfile::Builder::new().suffix(".toml").tempfile().unwrap();
    write!(
        f,
        "name = \"local\"\nalgebra = \"sl:4\"\ncross = [2]\nbeta = [0, 1, -1, 0]\ngamma = [0, 1, 0, -1]\nzeta = [-1, 1, 0, 0]\n"
    )
    .unwrap();
    let o = seedcert(&["certify", "--fixture", f.path().to_str().unwrap(), "--no-timestamp"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("seed: fixture:local"));
}

#[test]
fn input_errors_exit_with_two() {
    for args in [
        vec!["certify", "--seed", "beta=1", "--algebra", "sl:4", "--cross", "2"],
        vec!["certify", "--fixture", "no_such_fixture"],
        vec!["enumerate", "--algebra", "so:5", "--cross", "1"],
        vec!["enumerate", "--algebra", "sl:4", "--cross", "9"],
        vec!["audit", "--algebra", "file:/nonexistent/x.sc"],
        vec!["certify", "--seed", "beta=0,0,1,-1;gamma=0,1,0,-1;zeta=1,-1,0,0", "--algebra", "sl:4", "--cross", "2"],
    ] {
        let o = seedcert(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stdout(&o));
    }
    let mut f = tempfile::Builder::new().suffix(".sc").tempfile().unwrap();
    writeln!(f, "dim 2\n1 2 x 1").unwrap();
    let o = seedcert(&["audit", "--algebra", &format!("file:{}", f.path().display())]);
    assert_eq!(o.status.code(), Some(2));
}
