//! End-to-end checks of the command-line interface: subcommand output,
//! JSON file loading, the scalar encoding rules, exit codes, the seed
//! environment variable, and witness verification.

use serde_json::Value;
use std::io::Write;
use std::process::{Command, Output};

fn spearlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spearlab"))
        .args(args)
        .env_remove("SPEARLAB_SEED")
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn space_info_fixture() {
    let out = spearlab(&["space", "info", "--fixture", "l1:3"]);
    let doc = json_of(&out);
    assert_eq!(doc["schema"], "spearlab/1");
    assert_eq!(doc["dim"], 3);
    assert_eq!(doc["vertex_count"], 6);
    assert_eq!(doc["dual_vertex_count"], 8);
}

#[test]
fn vector_is_spear_with_witness_and_verify() {
    let out = spearlab(&[
        "vector",
        "is-spear",
        "--fixture",
        "example52_X1",
        "--vector",
        "1,1,-1,-1",
        "--verify",
    ]);
    let doc = json_of(&out);
    let cert = &doc["certificate"];
    assert_eq!(cert["decision"], false);
    assert_eq!(cert["witnesses"][0]["vector"], serde_json::json!(["1/2", "1/2", "1/2", "1/2"]));
    assert_eq!(cert["witnesses"][0]["value"], "0");
    assert_eq!(doc["verified"], true);
    // Decision false still exits 0.
    assert!(out.status.success());
}

#[test]
fn op_decide_block_fixture() {
    let out = spearlab(&["op", "decide", "--fixture", "example52_G"]);
    let doc = json_of(&out);
    assert_eq!(doc["lush"], true);
    assert_eq!(doc["spear"], true);
    assert_eq!(doc["adp"], true);

    let out = spearlab(&["op", "decide", "--fixture", "id:example52_X1", "--verify"]);
    let doc = json_of(&out);
    assert_eq!(doc["lush"], false);
    assert_eq!(doc["witnesses"].as_array().unwrap().len(), 2);
    assert_eq!(doc["verified"], true);
}

#[test]
fn index_and_norm_and_spear_eq() {
    let out = spearlab(&["index", "--space", "hexagon", "--unit", "1,0", "--verify"]);
    let doc = json_of(&out);
    assert_eq!(doc["value"], "1/2");

    let out = spearlab(&["vector", "norm", "--fixture", "l1:3", "--vector", "1,-2,3"]);
    assert_eq!(json_of(&out)["norm"], "6");

    let out = spearlab(&["op", "spear-eq", "--fixture", "id:l1:2", "--t-matrix", "0,0;1,0"]);
    let doc = json_of(&out);
    assert_eq!(doc["holds"], true);
    assert_eq!(doc["lhs"], "2");

    let out = spearlab(&["set", "is-spear", "--fixture", "linf:2", "--vector", "1,0"]);
    let doc = json_of(&out);
    assert_eq!(doc["certificate"]["decision"], false);
}

#[test]
fn json_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let space_path = dir.path().join("space.json");
    let mut f = std::fs::File::create(&space_path).unwrap();
    write!(
        f,
        r#"{{"label": "halves", "dim": 2, "ball_vertices": [["1/2", 0], [0, 1]]}}"#
    )
    .unwrap();
    let out = spearlab(&["space", "info", "--file", space_path.to_str().unwrap()]);
    let doc = json_of(&out);
    assert_eq!(doc["vertex_count"], 4);

    let op_path = dir.path().join("op.json");
    let mut f = std::fs::File::create(&op_path).unwrap();
    write!(
        f,
        r#"{{"label": "t", "domain": "l1:2", "codomain": "l1:2", "matrix": [[1, 0], [0, "1/2"]]}}"#
    )
    .unwrap();
    let out = spearlab(&["op", "norm", "--file", op_path.to_str().unwrap()]);
    assert_eq!(json_of(&out)["norm"], "1");

    // The dual of l1:3 written out and read back in.
    let out = spearlab(&["space", "dual", "--fixture", "l1:3"]);
    let doc = json_of(&out);
    let dual_path = dir.path().join("dual.json");
    std::fs::write(&dual_path, serde_json::to_string(&doc["space"]).unwrap()).unwrap();
    let out = spearlab(&["space", "info", "--file", dual_path.to_str().unwrap()]);
    assert_eq!(json_of(&out)["vertex_count"], 8);
}

#[test]
fn exit_codes_and_diagnostics() {
    // Unknown fixture: input error, code 2, diagnostic on stderr.
    let out = spearlab(&["op", "decide", "--fixture", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown fixture"));

    // Dimension mismatch: code 2 with its own diagnostic.
    let out = spearlab(&["vector", "norm", "--fixture", "l1:2", "--vector", "1,2,3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("dimension mismatch"));

    // Malformed JSON: code 2.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, "{not json").unwrap();
    let out = spearlab(&["space", "info", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("malformed JSON"));

    // Floats are rejected on the exact path.
    let path = dir.path().join("floaty.json");
    std::fs::write(
        &path,
        r#"{"label": "f", "dim": 2, "ball_vertices": [[1.5, 0], [0, 1]]}"#,
    )
    .unwrap();
    let out = spearlab(&["space", "info", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // Bad subcommand usage: clap exits 2.
    let out = spearlab(&["space", "info"]);
    assert_eq!(out.status.code(), Some(2));

    // Resource caps exit 3, distinct from input errors.
    let out = spearlab(&["space", "info", "--fixture", "linf:4", "--vertex-cap", "3"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("vertex cap"));
    let out = spearlab(&["index", "--space", "hexagon", "--unit", "1,0", "--pivot-cap", "1"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("pivot cap"));
}

#[test]
fn seed_env_and_flag() {
    let with_env = Command::new(env!("CARGO_BIN_EXE_spearlab"))
        .args(["op", "ng-bound", "--fixture", "id:hexagon", "--samples", "20"])
        .env("SPEARLAB_SEED", "99")
        .output()
        .unwrap();
    let doc: Value = serde_json::from_slice(&with_env.stdout).unwrap();
    assert_eq!(doc["seed"], 99);

    let with_flag = spearlab(&[
        "op", "ng-bound", "--fixture", "id:hexagon", "--samples", "20", "--seed", "99",
    ]);
    let doc2 = json_of(&with_flag);
    assert_eq!(doc["bound"], doc2["bound"], "same seed, same bound");

    let default = spearlab(&["op", "ng-bound", "--fixture", "id:hexagon", "--samples", "20"]);
    assert_eq!(json_of(&default)["seed"], 20170);
}

#[test]
fn fuzz_and_sum_and_fixtures_list() {
    let out = spearlab(&[
        "fuzz", "spear-vector", "--fixture", "l1:2", "--vector", "1,0", "--trials", "50",
    ]);
    let doc = json_of(&out);
    assert_eq!(doc["report"]["passed"], true);
    assert_eq!(doc["report"]["seed"], 20170);
    assert_eq!(doc["report"]["tolerance"], 1e-9);

    let out = spearlab(&["fuzz", "index", "--fixture", "hexagon", "--unit", "1,0", "--grid", "120"]);
    let doc = json_of(&out);
    assert_eq!(doc["exact"], "1/2");
    assert_eq!(doc["agrees"], true);

    let out = spearlab(&["space", "sum", "--kind", "inf", "--fixture", "l1:1", "--fixture", "l1:1"]);
    let doc = json_of(&out);
    assert_eq!(doc["space"]["dim"], 2);
    assert_eq!(doc["space"]["ball_vertices"].as_array().unwrap().len(), 4);

    let out = spearlab(&["fixtures", "list"]);
    let doc = json_of(&out);
    assert!(doc["spaces"].as_array().unwrap().iter().any(|v| v == "hexagon"));
    assert!(doc["operators"].as_array().unwrap().iter().any(|v| v == "example52_G"));
}

#[test]
fn jobs_flag_does_not_change_results() {
    let single = spearlab(&["--jobs", "1", "op", "decide", "--fixture", "id:example52_X1"]);
    let default = spearlab(&["op", "decide", "--fixture", "id:example52_X1"]);
    assert_eq!(json_of(&single), json_of(&default));
}

#[test]
fn adjoint_and_vg_subcommands() {
    let out = spearlab(&["op", "adjoint", "--fixture", "example52_G1"]);
    let doc = json_of(&out);
    assert_eq!(doc["operator"]["domain"]["dim"], 4);
    assert_eq!(doc["operator"]["matrix"][0][0], 1);

    let out = spearlab(&["op", "vg", "--fixture", "id:linf:2", "--t-matrix", "0,1;0,0"]);
    assert_eq!(json_of(&out)["vg_radius"], "1");
}
