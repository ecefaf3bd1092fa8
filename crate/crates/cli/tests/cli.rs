use std::process::Command;

use serde_json::Value;

const TIED_ANCHORS: &str = "1/2,1/3,1/5,1/7";
const TIED_PATTERN: &str = "0,1,2|3,3|3";
const SINGULAR: &str = "1/2,1/3,1/5|1/7,1/7|3/11";
const GENERIC: &str = "1/2,1/3,1/5|1/7,2/9|3/11";

fn run(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_gtmod"))
        .args(args)
        .output()
        .expect("binary runs");
    let text = String::from_utf8(out.stdout).unwrap();
    let value = serde_json::from_str(&text).unwrap_or(Value::Null);
    (out.status.code().unwrap(), value)
}

#[test]
fn finite_dimensions() {
    let (code, v) = run(&["finite", "--top-row", "1,-1"]);
    assert_eq!(code, 0);
    assert_eq!(v["dimension"], 2);
    let (_, v) = run(&["finite", "--top-row", "2,0,-2"]);
    assert_eq!(v["dimension"], 8);
    let (_, v) = run(&["finite", "--weight", "2,1,0", "--n", "3"]);
    assert_eq!(v["dimension"], 8);
    let (_, v) = run(&["finite", "--weight", "1,1,0"]);
    assert_eq!(v["dimension"], 3);
}

#[test]
fn finite_action_table() {
    let (code, v) = run(&["finite", "--top-row", "1,-1", "--actions"]);
    assert_eq!(code, 0);
    // two basis vectors, four generators
    assert_eq!(v["actions"].as_array().unwrap().len(), 8);
}

#[test]
fn tied_pattern_is_reducible() {
    let (code, v) = run(&["verdict", "--anchors", TIED_ANCHORS, "--pattern", TIED_PATTERN]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"]["status"], "Reducible");
    assert_eq!(v["verdict"]["witness_omega"], 2);
    assert_eq!(v["verdict"]["audit"]["consistent"], true);
}

#[test]
fn plain_singular_is_irreducible() {
    let (code, v) = run(&["verdict", "--rows", SINGULAR, "--radius", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"]["status"], "Irreducible");
    assert!(v["verdict"]["witness"].is_null());
}

#[test]
fn verify_exit_codes() {
    let (code, v) = run(&["verify", "--rows", GENERIC, "--radius", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["report"]["passed"], true);
    let (code, v) = run(&["verify", "--rows", SINGULAR, "--radius", "1", "--seed", "3"]);
    assert_eq!(code, 0);
    let names: Vec<&str> = v["report"]["properties"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p["name"].as_str().unwrap())
        .collect();
    assert!(names.contains(&"separation"));
    // drops tied to the smaller singular entry are reported against the pictures
    let (code, v) = run(&["verify", "--anchors", TIED_ANCHORS, "--pattern", TIED_PATTERN, "--radius", "1"]);
    assert_eq!(code, 1);
    let failing: Vec<&str> = v["report"]["properties"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|p| p["passed"] == false)
        .map(|p| p["name"].as_str().unwrap())
        .collect();
    assert_eq!(failing, vec!["omega_drop_pictures"]);
}

#[test]
fn verify_finite() {
    let (code, v) = run(&["verify", "--top-row", "2,0,-2"]);
    assert_eq!(code, 0);
    assert_eq!(v["report"]["keys"], 8);
}

#[test]
fn malformed_input_exits_2() {
    for args in [
        vec!["verdict", "--rows", "1/2,x|3"],
        vec!["finite", "--top-row", "0,1"],
        vec!["singular", "--rows", GENERIC],
        vec!["generic", "--rows", GENERIC, "--gen", "E14"],
        vec!["generic", "--rows", GENERIC, "--key", "DT:1,0|0"],
        vec!["singular", "--rows", SINGULAR, "--key", "DT:0,0|0"],
        vec!["verdict", "--rows", SINGULAR, "--radius", "0"],
        vec!["verdict", "--no-such-flag"],
        vec!["structure", "--base", "/nonexistent/base.json"],
    ] {
        let (code, v) = run(&args);
        assert_eq!(code, 2, "{args:?}");
        assert!(v["error"]["kind"].is_string(), "{args:?}");
        assert!(v["error"]["message"].is_string(), "{args:?}");
    }
}

#[test]
fn reports_are_deterministic() {
    let args = ["structure", "--rows", SINGULAR, "--radius", "1"];
    let (_, a) = run(&args);
    let (_, b) = run(&args);
    assert_eq!(a, b);
    let args = ["verify", "--rows", SINGULAR, "--radius", "1", "--seed", "11"];
    assert_eq!(run(&args).1, run(&args).1);
}

#[test]
fn base_json_round_trip() {
    let (_, v) = run(&["verdict", "--rows", SINGULAR, "--radius", "1"]);
    let base = serde_json::to_string(&v["module"]["base"]).unwrap();
    let (code, w) = run(&["verdict", "--base", &base, "--radius", "1"]);
    assert_eq!(code, 0);
    assert_eq!(w["module"]["base"], v["module"]["base"]);
    assert_eq!(w["verdict"], v["verdict"]);
}

#[test]
fn json_out_writes_file() {
    let dir = std::env::temp_dir().join(format!("gtmod-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = Command::new(env!("CARGO_BIN_EXE_gtmod"))
        .args(["finite", "--top-row", "1,-1,-2", "--json-out", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["dimension"], 3);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn structure_reports() {
    let (code, v) = run(&["structure", "--rows", GENERIC, "--radius", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["basis_n"].as_array().unwrap().len(), 27);
    assert_eq!(v["components"].as_array().unwrap().len(), 1);

    let (_, v) = run(&["structure", "--anchors", TIED_ANCHORS, "--pattern", TIED_PATTERN, "--radius", "2"]);
    assert_eq!(v["omega_plus"].as_array().unwrap().len(), 2);
    assert!(v["basis_ik"].is_array());
    assert!(v["components"].as_array().unwrap().len() > 1);

    let (code, v) = run(&["structure", "--rows", "1/7,1/3,1/5|1/7,1/7|3/11", "--radius", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["basis_ik"]["error"], "HypothesisViolated");
}

#[test]
fn singular_application() {
    let (code, v) = run(&["singular", "--rows", SINGULAR, "--gen", "C22@1,0|0", "--key", "DT:1,0|0"]);
    assert_eq!(code, 0);
    let result = v["applications"][0]["result"].as_array().unwrap();
    // C_22(z) sends DT(z) to a nonzero multiple of T(z)
    assert_eq!(result.len(), 1);
    assert_eq!(result[0]["key"]["kind"], "T");
    let (_, v) = run(&["generic", "--rows", GENERIC, "--gen", "E21", "--gen", "E32"]);
    let apps = v["applications"].as_array().unwrap();
    assert_eq!(apps[0]["result"].as_array().unwrap().len(), 1);
    assert_eq!(apps[1]["result"].as_array().unwrap().len(), 2);
}
