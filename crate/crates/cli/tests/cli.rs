use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn iasgl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_iasgl")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn classify_json_and_table() {
    let o = iasgl(&["classify", "--ground-set", "{0,1,2,3}"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["counts"]["non_sumsets"], 8);
    assert_eq!(v["neither"], serde_json::json!([[0, 3], [0, 1, 3], [0, 2, 3]]));

    let o = iasgl(&["classify", "--ground-set", "0,1,2,3", "--format", "table"]);
    let out = String::from_utf8(o.stdout).unwrap();
    assert!(out.contains("neither") && out.contains("{0,1,3}"), "{out}");
}

#[test]
fn classify_rejects_and_warns() {
    let o = iasgl(&["classify", "--ground-set", "1,2"]);
    assert_eq!(code(&o), 64);
    let o = iasgl(&["classify", "--ground-set", "0,x"]);
    assert_eq!(code(&o), 64);
    let o = iasgl(&["classify", "--ground-set", "0,1,1,2"]);
    assert_eq!(code(&o), 0);
    assert!(stderr(&o).contains("duplicate"), "{}", stderr(&o));
    assert_eq!(code(&iasgl(&["classify"])), 64);
    assert_eq!(code(&iasgl(&["frobnicate"])), 64);
    assert_eq!(code(&iasgl(&["--help"])), 0);
}

#[test]
fn search_exit_codes() {
    let o = iasgl(&["search", "--graph", "star:6", "--ground-set", "0,1,2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["status"], "found");

    let o = iasgl(&["search", "--graph", "cycle:6", "--ground-set", "0,1,2"]);
    assert_eq!(code(&o), 1);
    assert_eq!(json(&o)["status"], "exhausted-none");

    let o = iasgl(&["search", "--graph", "cycle:5", "--ground-set", "0,1,2", "--gate"]);
    assert_eq!(code(&o), 3);
    assert_eq!(json(&o)["gate"]["passed"], false);

    let o = iasgl(&["search", "--graph", "star:14", "--ground-set", "0,1,2,3", "--no-prune", "--node-budget", "5"]);
    assert_eq!(code(&o), 2);
    assert_eq!(json(&o)["status"], "budget-exceeded");

    let o = iasgl(&["search", "--graph", "complete:4", "--ground-set", "0,1,2", "--no-prune"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn search_sweeps() {
    let o = iasgl(&["search", "--graph", "star:6", "--ground-set", "sweep:n=3,max=5", "--format", "table"]);
    assert_eq!(code(&o), 0);
    let out = String::from_utf8(o.stdout).unwrap();
    assert!(out.lines().count() > 3 && out.lines().all(|l| l.contains("found")), "{out}");

    let o = iasgl(&["search", "--graph", "cycle:6", "--ground-set", "sweep:n=3,max=6"]);
    assert_eq!(code(&o), 1);
    let o = iasgl(&["search", "--graph", "cycle:6", "--ground-set", "sweep:n=3,max=6", "--gate"]);
    assert_eq!(code(&o), 3);
    let o = iasgl(&["search", "--graph", "cycle:6", "--ground-set", "sweep:n=5,max=3"]);
    assert_eq!(code(&o), 64);
}

#[test]
fn search_output_feeds_verify() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("w.json");
    let o = iasgl(&["search", "--graph", "star:6", "--ground-set", "0,1,3", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc["ground_set"], serde_json::json!([0, 1, 3]));
    assert_eq!(doc["edge_labels"].as_object().unwrap().len(), 6);

    let o = iasgl(&["verify", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["rung"], "IASGL");
}

#[test]
fn search_file_graph() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write(
        dir.path(),
        "k4.json",
        r#"{"vertices":["a","b","c","d"],"edges":[["a","b"],["a","c"],["a","d"],["b","c"],["b","d"],["c","d"]]}"#,
    );
    let o = iasgl(&["search", "--graph", &format!("file:{k4}"), "--ground-set", "0,1,2"]);
    assert_eq!(code(&o), 1);
    let o = iasgl(&["search", "--graph", "file:/nonexistent.json", "--ground-set", "0,1,2"]);
    assert_eq!(code(&o), 64);
}

#[test]
fn verify_reports_the_failing_rung() {
    let dir = tempfile::tempdir().unwrap();
    // {0,1} + {1} = {0} + {1,2}: two edges collide, so IASL but not IASI
    let collide = write(
        dir.path(),
        "collide.json",
        r#"{"ground_set":[0,1,2,3],"vertices":[{"id":"a","label":[0,1]},{"id":"b","label":[1]},{"id":"c","label":[0]},{"id":"d","label":[1,2]}],
            "edges":[["a","b"],["c","d"]]}"#,
    );
    let o = iasgl(&["verify", &collide]);
    assert_eq!(code(&o), 1);
    let v = json(&o);
    assert_eq!(v["rung"], "IASL");
    assert!(v["violations"].as_array().unwrap().iter().any(|x| x["rule"] == "edge-collision"), "{v}");

    let escape = write(
        dir.path(),
        "escape.json",
        r#"{"ground_set":[0,1,2],"vertices":[{"id":"a","label":[2]},{"id":"b","label":[1,2]}],"edges":[["a","b"]]}"#,
    );
    let o = iasgl(&["verify", &escape, "--format", "table"]);
    assert_eq!(code(&o), 1);
    let out = String::from_utf8(o.stdout).unwrap();
    assert!(out.contains("NONE") && out.contains("edge-escapes"), "{out}");

    let unlabelled = write(dir.path(), "bare.json", r#"{"vertices":["a","b"],"edges":[["a","b"]]}"#);
    assert_eq!(code(&iasgl(&["verify", &unlabelled])), 64);
}

#[test]
fn construct_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let doc = dir.path().join("r.json");
    let dot = dir.path().join("r.dot");
    let o = iasgl(&[
        "construct",
        "--ground-set",
        "0,1,2,3",
        "--prefer-nonbipartite",
        "--out",
        doc.to_str().unwrap(),
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!((v["vertices"].as_u64(), v["edges"].as_u64()), (Some(9), Some(14)));
    assert_eq!(v["non_bipartite"], true);
    assert_eq!(v["assignment_trace"].as_array().unwrap().len(), 14);
    assert_eq!(code(&iasgl(&["verify", doc.to_str().unwrap()])), 0);
    let dot = std::fs::read_to_string(dot).unwrap();
    assert!(dot.starts_with("graph iasgl {"));
    assert_eq!(dot.matches(" -- ").count(), 14);

    let o = iasgl(&["construct", "--ground-set", "0,1,2"]);
    let v = json(&o);
    assert_eq!((v["vertices"].as_u64(), v["edges"].as_u64(), v["pendants"].as_u64()), (Some(7), Some(6), Some(6)));

    let o = iasgl(&["construct", "--ground-set", "0,1", "--prefer-nonbipartite"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["bipartite_forced"], true);
    assert!(!v["notes"].as_array().unwrap().is_empty());

    assert_eq!(code(&iasgl(&["construct", "--ground-set", "1,2"])), 64);
}

#[test]
fn construct_dot_on_the_smallest_ground_set() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("x.dot");
    let o = iasgl(&["construct", "--ground-set", "0,1", "--dot", dot.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let dot = std::fs::read_to_string(dot).unwrap();
    assert_eq!(dot.matches("[label=").count(), 3 + 2);
}

#[test]
fn theorems_small_bounds() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let args = ["theorems", "--n-max", "3", "--trees", "3,5", "--complete-max", "5", "--report", report.to_str().unwrap()];
    let o = iasgl(&args);
    // P_3 over {0,1} refutes the path check at every bound
    assert_eq!(code(&o), 1);
    let v = json(&o);
    assert_eq!(v, serde_json::from_str::<Value>(&std::fs::read_to_string(&report).unwrap()).unwrap());
    let status = |id: &str| {
        v["checks"].as_array().unwrap().iter().find(|c| c["id"] == id).unwrap()["status"].clone()
    };
    assert_eq!(status("star-forward"), "confirmed");
    assert_eq!(status("path-nonexistence"), "refuted");

    let o = iasgl(&["theorems", "--n-max", "3", "--trees", "3", "--format", "table"]);
    let out = String::from_utf8(o.stdout).unwrap();
    assert!(out.contains("REFUTED") && out.contains("confirmed"), "{out}");
}

#[test]
fn thread_count_does_not_change_output() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_iasgl"))
            .args(["search", "--graph", "star:6", "--ground-set", "sweep:n=3,max=6", "--time-budget-ms", "0"])
            .env("IASGL_THREADS", threads)
            .output()
            .unwrap()
    };
    let (a, b) = (run("1"), run("4"));
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(code(&run("many")), 64);
}
