use serde_json::{json, Value};
use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn cylwalk(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cylwalk"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn ok_json(args: &[&str], stdin: &str) -> Value {
    let out = cylwalk(args, stdin);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn fixture(name: &str) -> Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures").join(name);
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn map_f_of_a_small_shape() {
    let out = cylwalk(&["map", "--f"], r#"{"d":3,"L":4,"rows":[5,5,3]}"#);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "{\"coords\":[2,0,2]}\n");
    assert_eq!(ok_json(&["map", "--h"], r#"{"d":3,"L":4,"rows":[5,5,3]}"#), json!({"bits": "1001001"}));
    assert_eq!(ok_json(&["map", "--g"], r#"{"coords":[2,0,2]}"#), json!({"bits": "0010011"}));
}

#[test]
fn count_from_the_corner() {
    let v = ok_json(&["count", "--model", "simplex", "--d", "3", "--L", "3", "--n", "0", "--from-corner"], "");
    assert_eq!(v, json!({"count": 1}));
    let brute = ok_json(&["count", "--model", "simplex", "--d", "4", "--L", "2", "--n", "6", "--from-corner"], "");
    let formula =
        ok_json(&["count", "--model", "simplex", "--d", "4", "--L", "2", "--n", "6", "--from-corner", "--formula"], "");
    assert_eq!(brute, formula);
    let shapes = ok_json(&["count", "--model", "shapes", "--d", "3", "--L", "3", "--n", "6", "--from-corner"], "");
    let motzkin =
        ok_json(&["count", "--model", "simplex", "--d", "3", "--L", "3", "--n", "6", "--from-corner", "--formula"], "");
    assert_eq!(shapes, motzkin);
}

#[test]
fn resource_cap_is_a_domain_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_cylwalk"))
        .args(["count", "--model", "simplex", "--d", "3", "--L", "3", "--n", "10", "--from-corner"])
        .env("CYLWALK_STATE_CAP", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "resource_cap");
}

#[test]
fn invalid_shape_is_a_domain_error() {
    let out = cylwalk(&["shape", "--validate"], r#"{"d":3,"L":2,"rows":[3,0,0]}"#);
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert!(err["error"]["kind"].is_string());
    assert!(err["error"]["message"].as_str().unwrap().contains("window"));
    assert!(out.stdout.is_empty());
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(cylwalk(&["count", "--bogus"], "").status.code(), Some(2));
    assert_eq!(cylwalk(&["frobnicate"], "").status.code(), Some(2));
    assert_eq!(cylwalk(&["verify", "12"], "").status.code(), Some(2));
    assert_eq!(cylwalk(&["map", "--f", "--g"], "{}").status.code(), Some(2));
}

#[test]
fn crs_round_trip_on_a_fixture_pair() {
    let input = fixture("growth_diagram.input.json");
    let expected = fixture("growth_diagram.expected.json");
    let pair = json!({"t": input["t"], "u": input["u"]}).to_string();
    let pq = ok_json(&["crs"], &pair);
    assert_eq!(pq["p"], expected["p"]);
    assert_eq!(pq["q"], expected["q"]);
    let tu = ok_json(&["crs-inv"], &pq.to_string());
    assert_eq!(tu, json!({"t": input["t"], "u": input["u"]}));
    let g = ok_json(&["grow"], &pair);
    assert_eq!(g, expected["diagram"]);
    assert_eq!(ok_json(&["grow", "--backward"], &pq.to_string()), g);
    assert_eq!(ok_json(&["validate-diagram"], &g.to_string()), json!({"ok": true}));
    assert_eq!(ok_json(&["complete"], &input["oct"].to_string()), g);
}

#[test]
fn broken_diagrams_are_reported() {
    let mut g = fixture("growth_diagram.expected.json")["diagram"].clone();
    g["labels"][2][2] = json!({"d":3,"L":2,"rows":[3,3,1]});
    let out = cylwalk(&["validate-diagram"], &g.to_string());
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert!(err["error"]["message"].is_string());
}

#[test]
fn phi_and_reverse_walk() {
    let t = fixture("symmetric_growth.input.json")["t"].to_string();
    let p = ok_json(&["phi"], &t);
    assert_eq!(p, fixture("symmetric_growth.expected.json")["phi"]);
    assert_eq!(ok_json(&["phi-inv"], &p.to_string()).to_string(), t);
    let walk = fixture("reverse_walk.input.json")["walk"].to_string();
    assert_eq!(ok_json(&["reverse-walk"], &walk), fixture("reverse_walk.expected.json")["reversed_walk"]);
}

#[test]
fn retype_from_the_start() {
    let input = fixture("retype.input.json");
    let out = ok_json(&["retype", "--to", "+++", "--from-start"], &input["oct"].to_string());
    assert_eq!(out, fixture("retype.expected.json")["retyped"]);
    let back = ok_json(&["retype", "--to", "+--", "--from-start"], &out.to_string());
    assert_eq!(back, input["oct"]);
    let fixed = cylwalk(&["retype", "--to", "+++"], &input["oct"].to_string());
    assert_eq!(fixed.status.code(), Some(1));
}

#[test]
fn walks_convert_between_models() {
    let p = fixture("walk_and_tasep.input.json")["tableau"].to_string();
    let walk = ok_json(&["walk", "of-tableau"], &p);
    assert_eq!(walk, fixture("walk_and_tasep.expected.json")["simplex_walk"]);
    let tasep = ok_json(&["walk", "tasep"], &walk.to_string());
    let states = ok_json(&["walk"], &tasep.to_string());
    let bits: Vec<&str> = states.as_array().unwrap().iter().map(|s| s["bits"].as_str().unwrap()).collect();
    let expected = fixture("walk_and_tasep.expected.json")["tasep_states"].clone();
    assert_eq!(json!(bits), expected);
    let necklace = ok_json(&["walk", "project", "--cover", "Q"], &tasep.to_string());
    assert_eq!(necklace["model"], "necklace");
    let start = r#"{"bits":"011001"}"#;
    let lifted = ok_json(&["walk", "lift", "--cover", "Q", "--start", start], &necklace.to_string());
    assert_eq!(lifted, tasep);
    let oct = ok_json(&["walk", "to-oct", "--alpha", r#"{"d":3,"L":3,"rows":[2,2,0]}"#], &walk.to_string());
    assert_eq!(oct["shapes"].as_array().unwrap().len(), 9);
}

#[test]
fn seeded_output_is_reproducible() {
    let args = ["sample", "--shape", r#"{"d":3,"L":3,"rows":[2,2,0]}"#, "--n", "6", "--seed", "42"];
    let a = cylwalk(&args, "");
    let b = cylwalk(&args, "");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let oct = ok_json(&["sample", "--shape", r#"{"d":3,"L":3,"rows":[2,2,0]}"#, "--type-word", "+-+-"], "");
    assert_eq!(oct["shapes"].as_array().unwrap().len(), 5);
}

#[test]
fn verify_is_independent_of_jobs() {
    let one = cylwalk(&["verify", "11", "--jobs", "1"], "");
    let many = cylwalk(&["verify", "11", "--jobs", "8"], "");
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, many.stdout);
    let text = String::from_utf8(one.stdout).unwrap();
    assert!(text.starts_with("[PASS] 11"), "{text}");
    let json: Value = serde_json::from_slice(&cylwalk(&["verify", "9", "--json"], "").stdout).unwrap();
    assert_eq!(json[0]["passed"], true);
}
