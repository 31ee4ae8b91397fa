use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_primspace")).args(args).env_remove("PRIMSPACE_BUDGET").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("primspace-cli-{}-{name}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn gen_counts() {
    let count = |args: &[&str]| {
        let o = run(args);
        assert!(o.status.success());
        let text = stdout(&o);
        primspace::format::parse_table_stream(&text).unwrap().len()
    };
    assert_eq!(count(&["gen", "--order", "1"]), 1);
    assert_eq!(count(&["gen", "--order", "2"]), 8);
    assert_eq!(count(&["gen", "--order", "3", "--dedup"]), 18);
    let o = run(&["gen", "--order", "2"]);
    assert_eq!(String::from_utf8_lossy(&o.stderr).trim(), "8 tables");
}

#[test]
fn gen_rejects_large_orders() {
    assert_eq!(run(&["gen", "--order", "9"]).status.code(), Some(2));
}

#[test]
fn analyze_golden_examples() {
    let r = json(&["analyze", "@B2xB2", "--format", "json"]);
    assert_eq!(r["schema"], 1);
    assert_eq!(r["primes"].as_array().unwrap().len(), 3);
    assert_eq!(r["prim_report"]["points"].as_array().unwrap().len(), 3);
    assert_eq!(r["space"]["closed_sets"], 5);
    assert_eq!(r["space"]["components"].as_array().unwrap().len(), 2);
    assert_eq!(r["all_passed"], true);
    assert!(r.get("timings_ms").is_none());

    let lz2 = json(&["analyze", "@LZ2", "--format", "json"]);
    assert!(lz2["ideals"].as_array().unwrap().is_empty());
    assert!(lz2["prim_report"]["points"].as_array().unwrap().is_empty());

    let b2m = json(&["analyze", "@B2M", "--format", "json"]);
    assert_eq!(b2m["prim_report"]["points"][0]["ideal"], serde_json::json!([0]));
}

#[test]
fn analyze_text_output_and_files() {
    let dir = scratch("analyze");
    let table = dir.join("t3.txt");
    fs::write(&table, "# T3\n3\n0 1 2\n1 2 2\n2 2 2\n").unwrap();
    let o = run(&["analyze", table.to_str().unwrap()]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("primes (1): {1,2}"), "{text}");
    assert!(text.contains("check kuratowski: ok"));
    let out = dir.join("report.json");
    assert!(run(&["analyze", "@T3", "--format", "json", "--out", out.to_str().unwrap()]).status.success());
    let r: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(r["primes"], serde_json::json!([[1, 2]]));
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn usage_and_input_errors_exit_two() {
    assert_eq!(run(&["analyze", "/nonexistent/table.txt"]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "@NOPE"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    let dir = scratch("bad");
    let bad = dir.join("bad.txt");
    fs::write(&bad, "2\n1 1\n0 0\n").unwrap();
    let o = run(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not associative"));
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn budget_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_primspace"))
        .args(["analyze", "@C3", "--primes", "5"])
        .env("PRIMSPACE_BUDGET", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget"));
}

#[test]
fn pullback_reports() {
    let dir = scratch("pullback");
    let diag = dir.join("diag.json");
    fs::write(&diag, r#"{"source": "@B2M", "target": "@B2xB2", "map": [0, 3]}"#).unwrap();
    let r = json(&["pullback", diag.to_str().unwrap(), "--format", "json"]);
    assert_eq!(r["primitive_verified"], 3);
    assert_eq!(r["continuity"]["status"], "continuous");

    fs::write(dir.join("triv.txt"), "1\n0\n").unwrap();
    let triv = dir.join("triv.json");
    fs::write(&triv, r#"{"source": "triv.txt", "target": "@B2M", "map": [0]}"#).unwrap();
    let r = json(&["pullback", triv.to_str().unwrap(), "--format", "json"]);
    assert_eq!(r["continuity"]["status"], "partial");
    assert_eq!(r["improper"], 1);

    let ident = dir.join("id.json");
    fs::write(&ident, r#"{"source": "@B2M", "target": "@B2M", "map": [0, 1]}"#).unwrap();
    assert!(stdout(&run(&["pullback", ident.to_str().unwrap()])).contains("status: Continuous"));

    let broken = dir.join("swap.json");
    fs::write(&broken, r#"{"source": "@B2M", "target": "@B2M", "map": [1, 0]}"#).unwrap();
    assert_eq!(run(&["pullback", broken.to_str().unwrap()]).status.code(), Some(2));
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn check_small_orders() {
    let o = run(&["check", "--order", "1", "--no-named"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("result: pass"));
    let r = json(&["check", "--order", "2", "--format", "json"]);
    assert_eq!(r["all_passed"], true);
    assert_eq!(r["formula"]["r15"]["missing"], serde_json::json!(["sxs"]));
    assert!(r["formula"]["xsx_mismatches"].as_u64().unwrap() > 0);
}

#[test]
fn check_is_deterministic() {
    let a = stdout(&run(&["check", "--order", "3", "--dedup", "--format", "json"]));
    let b = stdout(&run(&["check", "--order", "3", "--dedup", "--format", "json"]));
    assert_eq!(a, b);
}

#[test]
fn dot_graphs() {
    let dot = stdout(&run(&["dot", "@B2xB2"]));
    assert_eq!(dot.matches("label").count(), 3);
    assert!(dot.contains("p0 -> p2;") && dot.contains("p1 -> p2;"));
    let b2m = stdout(&run(&["dot", "@B2M"]));
    assert_eq!(b2m.matches("label").count(), 1);
    assert!(!b2m.contains("->"));
    assert_eq!(stdout(&run(&["dot", "@LZ2"])), "digraph specialization {\n}\n");
    let lattice = stdout(&run(&["dot", "@B2xB2", "--what", "closed-lattice"]));
    assert_eq!(lattice.matches("label").count(), 5);
}

#[test]
fn serialized_witnesses_reverify() {
    use primspace::primitive::{verify_primitive_witness, PrimitiveWitness};
    for name in ["@B2xB2", "@T3", "@C3", "@R15"] {
        let r = json(&["analyze", name, "--format", "json"]);
        let s: primspace::FiniteSemigroup = serde_json::from_value(r["semigroup"].clone()).unwrap();
        let points: Vec<PrimitiveWitness> = serde_json::from_value(r["prim_report"]["points"].clone()).unwrap();
        for pw in &points {
            verify_primitive_witness(&s, pw).unwrap();
        }
        let ideals: Vec<primspace::ElemSet> = points.iter().map(|p| p.ideal).collect();
        let space = primspace::StructureSpace::new(s, ideals).unwrap();
        assert!(space.verify_axioms().unwrap().all_passed());
    }
}
