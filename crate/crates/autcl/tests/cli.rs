use std::process::{Command, Output};

fn autcl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_autcl"))
        .args(args)
        .env_remove("AUTCL_MAX_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = autcl(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = autcl(&all);
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}"))
}

fn dot_counts(dot: &str) -> (usize, usize) {
    let edges = dot.lines().filter(|l| l.contains("->")).count();
    let nodes = dot.lines().filter(|l| l.trim_start().starts_with('"') && !l.contains("->")).count();
    (nodes, edges)
}

#[test]
fn info_examples() {
    let v = json(&["info", "D:6"]);
    assert_eq!(v["order"], 12);
    assert_eq!(v["exponent"], 6);
    assert_eq!(v["axioms"]["passed"], true);
    assert_eq!(json(&["info", "Q:3"])["exponent"], 12);
    assert_eq!(json(&["info", "Z:1"])["order"], 1);
    assert_eq!(json(&["info", "heis:3"])["exponent"], 3);
}

#[test]
fn bad_descriptor_is_an_error() {
    for bad in ["Z:0", "D:", "Q:1x", "EA:4,2", "heis:4", "prod(Z:2", "foo"] {
        let out = autcl(&["info", bad]);
        assert_eq!(out.status.code(), Some(2), "{bad}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn autcl_examples() {
    let v = json(&["autcl", "D:15", "--both"]);
    assert_eq!(v["classes"].as_array().unwrap().len(), 8);
    assert_eq!(v["models_agree"], true);
    assert_eq!(json(&["autcl", "heis:3"])["classes"].as_array().unwrap().len(), 5);
    assert_eq!(json(&["autcl", "Z:12"])["classes"].as_array().unwrap().len(), 6);

    let cf = json(&["autcl", "Q:6", "--closed-form"]);
    assert_eq!(cf["classes"].as_array().unwrap().len(), 4 + 6);

    let out = autcl(&["autcl", "Z:6", "--closed-form"]);
    assert_eq!(out.status.code(), Some(2));
    let out = autcl(&["autcl", "D:2", "--closed-form"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn mode_flags_conflict() {
    let out = autcl(&["autcl", "D:5", "--closed-form", "--brute-force"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn aut_and_subgroups_agree_when_compared() {
    let v = json(&["aut", "D:10", "--both"]);
    assert_eq!(v["count"], 40);
    assert_eq!(v["formula_agrees"], true);
    let v = json(&["subgroups", "Q:6", "--both"]);
    assert_eq!(v["count"], 6 + 12);
    assert_eq!(v["listings_agree"], true);
    assert_eq!(json(&["aut", "EA:2,3"])["count"], 168);
}

#[test]
fn check_examples() {
    assert_eq!(json(&["check", "D:12", "distributive"])["holds"], true);

    let out = autcl(&["--json", "check", "ZE:2,2", "complemented"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["holds"], false);
    assert!(v["witness"].is_array());

    let out = autcl(&["check", "ZE:2,2", "complemented", "--subgroup-lattice"]);
    assert!(out.status.success());

    let out = autcl(&["--json", "check", "Z:6", "chain"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["witness"].as_array().unwrap().len(), 2);

    let out = autcl(&["--json", "check", "EA:2,2", "n5", "--subgroup-lattice"]);
    assert!(out.status.success());
    let out = autcl(&["--json", "check", "EA:2,2", "m3", "--subgroup-lattice"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn export_examples() {
    for (spec, nodes, edges) in [("D:3", 4, 4), ("heis:3", 5, 5), ("Z:4", 3, 2), ("Z:1", 1, 0)] {
        let a = stdout(&["export", spec, "autcl"]);
        assert!(a.starts_with("digraph {\n  rankdir=BT;\n"), "{a}");
        assert_eq!(dot_counts(&a), (nodes, edges), "{spec}");
        assert_eq!(a, stdout(&["export", spec, "autcl"]));
    }
    let l = stdout(&["export", "EA:2,2", "lattice"]);
    assert_eq!(dot_counts(&l), (5, 6));
}

#[test]
fn export_writes_file_and_group_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q.json");
    let p = path.to_str().unwrap();
    let out = autcl(&["--out", p, "export", "Q:2", "group"]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let loaded = json(&["autcl", &format!("@{p}")]);
    assert_eq!(loaded["classes"].as_array().unwrap().len(), 4);

    let dot = dir.path().join("d.dot");
    let d = dot.to_str().unwrap();
    assert!(autcl(&["--out", d, "export", "D:4", "autcl"]).status.success());
    assert_eq!(std::fs::read_to_string(&dot).unwrap(), stdout(&["export", "D:4", "autcl"]));
}

#[test]
fn json_output_is_byte_stable() {
    for args in [["--json", "autcl", "heis:3"], ["--json", "subgroups", "D:12"], ["--json", "export", "Q:4"]] {
        let args: Vec<&str> = if args[1] == "export" { vec![args[0], args[1], args[2], "autcl"] } else { args.to_vec() };
        assert_eq!(stdout(&args), stdout(&args), "{args:?}");
    }
}

#[test]
fn verify_examples() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = autcl(&["--out", path.to_str().unwrap(), "verify", "conjecture", "3,5"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["passed"], 2);
    assert_eq!(report["failed"], 0);
    let cases = report["cases"].as_array().unwrap();
    assert_eq!(cases[1]["id"], "heisenberg-shape-p5");
    assert!(cases[1]["note"].as_str().unwrap().contains("new computation"));

    let out = autcl(&["verify"]);
    assert_eq!(out.status.code(), Some(2));
    let out = autcl(&["verify", "dihedral"]);
    assert_eq!(out.status.code(), Some(2));
    let out = autcl(&["verify", "everything"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_registry_passes_and_ids_are_unique() {
    let v = json(&["verify", "theorems"]);
    assert_eq!(v["failed"], 0);
    let ids: Vec<&str> = v["cases"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort_unstable();
    sorted.dedup();
    assert_eq!(ids, sorted);
}

#[test]
fn max_order_env_is_honoured() {
    let out = Command::new(env!("CARGO_BIN_EXE_autcl"))
        .args(["subgroups", "Z:64"])
        .env("AUTCL_MAX_ORDER", "32")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("64"));
    assert!(autcl(&["--max-order", "64", "subgroups", "Z:64"]).status.success());
}
