use std::process::{Command, Output};

use serde_json::Value;

fn extq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_extq")).args(args).output().unwrap()
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn assert_valid(doc: &Value) {
    let schema: Value = serde_json::from_str(include_str!("../schemas/report.schema.json")).unwrap();
    let compiled = jsonschema::JSONSchema::compile(&schema).unwrap();
    let msgs: Vec<String> = match compiled.validate(doc) {
        Ok(()) => Vec::new(),
        Err(errors) => errors.map(|e| format!("{} at {}", e, e.instance_path)).collect(),
    };
    assert!(msgs.is_empty(), "schema violations: {msgs:?}");
}

#[test]
fn sl2_extquot_has_three_components() {
    let out = extq(&["SL2", "--cmd", "extquot"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_of(&out);
    assert_valid(&doc);
    let comps = doc["results"]["extquot"]["components"].as_array().unwrap();
    assert_eq!(comps.len(), 3);
    let mut dims: Vec<u64> = comps.iter().map(|c| c["dim"].as_u64().unwrap()).collect();
    dims.sort_unstable();
    assert_eq!(dims, [0, 0, 1]);
}

#[test]
fn check_cc_reports_without_failing() {
    let out = extq(&["A2:sc", "--cmd", "check-cc", "--p", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_of(&out);
    assert_valid(&doc);
    assert_eq!(doc["results"]["check-cc"]["ok"], Value::Bool(false));
    let ok = json_of(&extq(&["A2:sc", "--cmd", "check-cc", "--p", "5"]));
    assert_eq!(ok["results"]["check-cc"]["ok"], Value::Bool(true));
}

#[test]
fn sl2_packets_are_singletons_over_both_central_points() {
    let out = extq(&["SL2", "--cmd", "lpackets", "--torsion-bound", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_of(&out);
    assert_valid(&doc);
    let fibers = doc["results"]["lpackets"]["fibers"].as_array().unwrap();
    let t0s: Vec<&str> = fibers.iter().map(|f| f["t0"].as_str().unwrap()).collect();
    assert_eq!(t0s, ["(0)", "(1/2)"]);
    for f in fibers {
        let packets = f["packets"].as_array().unwrap();
        assert_eq!(packets.len(), 2);
        assert!(packets.iter().all(|p| p["points"].as_array().unwrap().len() == 1));
    }
}

#[test]
fn every_command_validates_and_is_deterministic() {
    let args = [
        "Sp4",
        "--gens",
        "0,1/2",
        "--cmd",
        "extquot,unipotents,springer,bijection,lpackets,check-cc",
        "--p",
        "3",
        "--torsion-bound",
        "2",
    ];
    let a = extq(&args);
    let b = extq(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_valid(&json_of(&a));
    let t1 = extq(&["G2", "--cmd", "springer,extquot", "--format", "table"]);
    let t2 = extq(&["G2", "--cmd", "springer,extquot", "--format", "table"]);
    assert_eq!(t1.stdout, t2.stdout);
    assert!(String::from_utf8(t1.stdout).unwrap().contains("## Springer correspondence"));
}

#[test]
fn label_conflicts_exit_with_status_four() {
    let out = extq(&["SL3", "--cmd", "bijection", "--torsion-bound", "1"]);
    assert_eq!(out.status.code(), Some(4));
    let doc = json_of(&out);
    assert_valid(&doc);
    assert!(!doc["violations"].as_array().unwrap().is_empty());
}

#[test]
fn bad_input_exits_with_status_two() {
    for args in [
        vec!["XY7", "--cmd", "extquot"],
        vec!["E8", "--cmd", "extquot"],
        vec!["SL2", "--cmd", "nope"],
        vec!["SL2", "--cmd", "check-cc"],
        vec!["SL2", "--cmd", "extquot", "--gens", "1/0"],
        vec!["SL2", "--cmd", "extquot", "--torsion-bound", "0"],
        vec!["SL2"],
    ] {
        let out = extq(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn output_flag_writes_the_same_document() {
    let dir = std::env::temp_dir().join(format!("extq-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = extq(&["GL2", "--cmd", "extquot", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written = std::fs::read(&path).unwrap();
    assert_eq!(written, extq(&["GL2", "--cmd", "extquot"]).stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}
