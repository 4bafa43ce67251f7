use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn cda(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cda"))
        .args(args)
        .env("CDA_THREADS", "2")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn report(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn check<'a>(r: &'a Value, name: &str) -> &'a Value {
    r["checks"].as_array().unwrap().iter().find(|c| c["name"] == name).unwrap()
}

#[test]
fn symbol_real_complex() {
    let o = cda(&["symbol"], r#"{"epsilon": 1, "arms": [{"p": 2, "e": 1, "f": 2}]}"#);
    assert_eq!(o.status.code(), Some(0));
    let r = report(&o);
    let inv = &check(&r, "symbol.invariants")["details"];
    assert_eq!(inv["delta"], -2);
    assert_eq!(inv["rep_type"], "domestic");
    assert!(r["matrices"]["coxeter"].is_object());
    assert!(r["matrices"]["gram_canonical_basis"].is_object());
}

#[test]
fn symbol_from_dimension_data() {
    let input = r#"{"epsilon": "1", "weights": [2], "points": [{"dim_du": 1, "dim_uf": 2, "dim_dv": 1, "dim_vg": 2}]}"#;
    let o = cda(&["symbol"], input);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(check(&report(&o), "symbol.invariants")["details"]["delta"], -2);
}

#[test]
fn symbol_tubular_signature() {
    let arms: Vec<String> = [2, 3, 6].iter().map(|p| format!(r#"{{"p": {p}, "e": 1, "f": 1}}"#)).collect();
    let o = cda(&["symbol"], &format!(r#"{{"epsilon": 1, "arms": [{}]}}"#, arms.join(",")));
    assert_eq!(o.status.code(), Some(0));
    let r = report(&o);
    let inv = &check(&r, "symbol.invariants")["details"];
    assert_eq!(inv["delta"], 0);
    assert_eq!(inv["signature"], serde_json::json!([8, 2, 0]));
}

#[test]
fn malformed_json_is_an_input_error() {
    let o = cda(&["symbol"], "{\"epsilon\": 1,\n \"arms\": [");
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn invalid_symbol_and_field_are_input_errors() {
    assert_eq!(cda(&["symbol"], r#"{"epsilon": 3, "arms": []}"#).status.code(), Some(2));
    let o = cda(&["--field", "Fp:4", "tilt"], r#"{"weights": [2, 2], "lambdas": ["0", "1"]}"#);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(cda(&["tilt", "--target", "x"], r#"{"weights": [2, 2], "lambdas": ["0", "1"]}"#).status.code(), Some(2));
}

#[test]
fn tilt_two_points() {
    for target in ["cd", "canonical"] {
        let o = cda(&["tilt", "--target", target], r#"{"weights": [2, 2], "lambdas": ["0", "1"]}"#);
        assert_eq!(o.status.code(), Some(0), "{target}: {}", String::from_utf8_lossy(&o.stdout));
        let r = report(&o);
        assert_eq!(r["matrices"]["end_dims"], r["matrices"]["cartan"]);
    }
}

#[test]
fn tilt_over_prime_field() {
    let o = cda(&["--field", "Fp:101", "tilt"], r#"{"weights": [2, 3], "lambdas": ["0", "1"]}"#);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(report(&o)["inputs"]["instance"]["field"]["Fp"], 101);
}

#[test]
fn tilt_one_point_fails_conditions() {
    let o = cda(&["tilt"], r#"{"weights": [2], "lambdas": ["0"]}"#);
    assert_eq!(o.status.code(), Some(1));
    let r = report(&o);
    assert_eq!(check(&r, "conditions.all")["pass"], false);
}

#[test]
fn empty_sweep_is_vacuous() {
    let o = cda(&["sweep"], "{}");
    assert_eq!(o.status.code(), Some(0));
    let r = report(&o);
    let e = &check(&r, "sweep.enumeration")["details"];
    assert_eq!(e["symbols"], 0);
    assert_eq!(e["instances"], 0);
}

#[test]
fn sweep_finds_tubular_symbols_and_is_deterministic() {
    let input = r#"{"max_rank": 8, "max_d": 1, "max_t": 2, "max_weight": 3}"#;
    let a = cda(&["sweep"], input);
    let b = cda(&["sweep"], input);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
    let r = report(&a);
    let e = &check(&r, "sweep.enumeration")["details"];
    assert!(e["rep_types"]["tubular"].as_u64().unwrap() >= 1);
}

#[test]
fn sweep_rejects_excessive_bounds() {
    assert_eq!(cda(&["sweep"], r#"{"max_rank": 40}"#).status.code(), Some(2));
}

#[test]
fn lattice_verify_small() {
    let o = cda(&["lattice-verify"], r#"{"max_rank": 6, "max_d": 2}"#);
    assert_eq!(o.status.code(), Some(0));
    assert!(check(&report(&o), "lattice.symbols")["details"]["count"].as_u64().unwrap() > 0);
}

#[test]
fn congruence_command_writes_out_file() {
    let dir = std::env::temp_dir().join(format!("cda-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("report.json");
    let o = cda(
        &["congruence", "--out", out.to_str().unwrap()],
        r#"{"epsilon": 2, "arms": [{"p": 2, "e": 1, "f": 1}, {"p": 3, "e": 1, "f": 1}]}"#,
    );
    assert_eq!(o.status.code(), Some(0));
    let saved: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(saved, report(&o));
    assert_eq!(saved["checks"].as_array().unwrap().len(), 3);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn json_flag_reads_file() {
    let dir = std::env::temp_dir().join(format!("cda-cli-json-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("sym.json");
    std::fs::write(&path, r#"{"epsilon": 1, "arms": [{"p": 2, "e": 1, "f": 1}]}"#).unwrap();
    let o = cda(&["symbol", "--json", path.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(0));
    std::fs::remove_dir_all(dir).unwrap();
}
