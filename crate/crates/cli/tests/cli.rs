use std::process::{Command, Output};

use serde_json::Value;

fn tpcode(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tpcode"))
        .args(args)
        .env_remove("TPC_RING_ORDER_CAP")
        .env_remove("TPC_SEARCH_BOUND")
        .env_remove("TPC_ENUM_BOUND")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let out = tpcode(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn ring_info_reports_structure() {
    let z12 = json(&["ring-info", "Z12"]);
    assert_eq!(z12["order"], 12);
    assert_eq!(z12["zero_divisors"], 7);
    assert_eq!(z12["local"], false);
    let z9 = json(&["ring-info", "Z9"]);
    assert_eq!((z9["order"].as_u64(), z9["zero_divisors"].as_u64()), (Some(9), Some(2)));
    assert_eq!(z9["local"], true);
    let v = json(&["ring-info", "Z2 x Z2"]);
    assert_eq!(v["reduced"], true);
    assert_eq!(v["factors"].as_array().unwrap().len(), 2);
}

#[test]
fn exports_are_deterministic() {
    let a = tpcode(&["zdg-export", "Z12"]);
    let b = tpcode(&["zdg-export", "Z12"]);
    assert_eq!(a.stdout, b.stdout);
    let dot = stdout(&a);
    assert_eq!(dot.matches("[label=").count(), 7);
    assert_eq!(dot.matches(" -- ").count(), 8);

    let z4 = stdout(&tpcode(&["zdg-export", "Z4"]));
    assert_eq!((z4.matches("[label=").count(), z4.matches(" -- ").count()), (1, 0));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z2z8.json");
    let out = tpcode(&["zdg-export", "Z2 x Z8", "--format", "json", "-o", path.to_str().unwrap()]);
    assert!(out.status.success());
    let g: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(g["n"], 11);
}

#[test]
fn exported_graphs_feed_back_into_decide() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z12.json");
    assert!(tpcode(&["zdg-export", "Z12", "--format", "json", "-o", path.to_str().unwrap()]).status.success());
    let target = format!("file:{}", path.display());
    let v = json(&["tpc-decide", &target]);
    assert_eq!(v["admits"], true);
    assert_eq!(v["consensus"], true);
}

#[test]
fn decide_graph_targets() {
    let p5 = json(&["tpc-decide", "path:5"]);
    assert_eq!((p5["admits"].as_bool(), p5["consensus"].as_bool()), (Some(false), Some(true)));
    let c8 = json(&["tpc-decide", "cycle:8"]);
    assert_eq!(c8["witness"], "{v1,v2,v5,v6}");
    for (target, admits) in [
        ("complete:2", true),
        ("complete:3", false),
        ("kmn:2,3", true),
        ("star:4", true),
        ("corona:path:5", false),
        ("fig1", true),
    ] {
        let v = json(&["tpc-decide", target]);
        assert_eq!(v["admits"], admits, "{target}");
        assert_eq!(v["consensus"], true, "{target}");
    }
}

#[test]
fn decide_rings() {
    let z12 = json(&["tpc-decide", "Z12"]);
    assert_eq!(z12["admits"], true);
    assert_eq!(z12["witness"], serde_json::json!(["4", "6"]));
    let z9z2 = json(&["tpc-decide", "Z9 x Z2"]);
    assert_eq!(z9z2["admits"], false);
    assert_eq!(z9z2["known_findings"], serde_json::json!(["local-times-field-two-zero-divisors"]));
    let fixture = json(&["tpc-decide", "@Z4X-X2"]);
    assert_eq!(fixture["admits"], false);
}

#[test]
fn exit_codes() {
    assert_eq!(tpcode(&["ring-info", "Z5 x"]).status.code(), Some(1));
    assert_eq!(tpcode(&["verify", "nope"]).status.code(), Some(1));
    assert_eq!(tpcode(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(tpcode(&["tpc-decide", "path:x"]).status.code(), Some(1));
    assert_eq!(tpcode(&["verify", "paths"]).status.code(), Some(0));
    assert_eq!(tpcode(&["--help"]).status.code(), Some(0));

    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("manifest.json");
    std::fs::write(&empty, r#"{"findings": [], "form_counts": []}"#).unwrap();
    let out = tpcode(&["verify", "fixtures", "--manifest", empty.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("UNEXPECTED"));
}

#[test]
fn caps_from_env_flags_and_config() {
    let out = Command::new(env!("CARGO_BIN_EXE_tpcode"))
        .args(["ring-info", "Z12"])
        .env("TPC_RING_ORDER_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap 10"));

    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("caps.toml");
    std::fs::write(&cfg, "ring_order_cap = 10\n").unwrap();
    let cfg = cfg.to_str().unwrap();
    assert_eq!(tpcode(&["--config", cfg, "ring-info", "Z12"]).status.code(), Some(1));
    // the flag overrides the file
    assert_eq!(tpcode(&["--config", cfg, "--ring-order-cap", "20", "ring-info", "Z12"]).status.code(), Some(0));
    std::fs::write(dir.path().join("bad.toml"), "ring_order_cap = \"x\"").unwrap();
    let bad = dir.path().join("bad.toml");
    assert_eq!(tpcode(&["--config", bad.to_str().unwrap(), "ring-info", "Z4"]).status.code(), Some(1));
}

#[test]
fn help_documents_grammar_and_environment() {
    let help = stdout(&tpcode(&["--help"]));
    for needle in ["expr  :=", "table:path", "TPC_RING_ORDER_CAP", "TPC_SEARCH_BOUND", "TPC_ENUM_BOUND", "kmn:m,n", "EXIT CODES"] {
        assert!(help.contains(needle), "{needle}");
    }
}

#[test]
fn tree_gen() {
    let dir = tempfile::tempdir().unwrap();
    let trace = dir.path().join("trace.json");
    std::fs::write(&trace, r#"{"initial": 4, "steps": [{"op": "A2", "at": 1}]}"#).unwrap();
    let v = json(&["tree-gen", trace.to_str().unwrap()]);
    assert_eq!((v["n"].as_u64(), v["admits"].as_bool()), (Some(5), Some(true)));

    std::fs::write(&trace, r#"{"initial": 5}"#).unwrap();
    let out = tpcode(&["tree-gen", trace.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("1 mod 4"));

    let a = json(&["tree-gen", "--random", "42", "40"]);
    let b = json(&["tree-gen", "--random", "42", "40"]);
    assert_eq!(a, b);
    assert!(a["n"].as_u64().unwrap() <= 40);

    let out_path = dir.path().join("tree.json");
    let out = tpcode(&["tree-gen", "--random", "7", "20", "-o", out_path.to_str().unwrap()]);
    assert!(out.status.success());
    let g: Value = serde_json::from_str(&std::fs::read_to_string(out_path).unwrap()).unwrap();
    assert_eq!(g["edges"].as_array().unwrap().len() + 1, g["n"].as_u64().unwrap() as usize);
}

#[test]
fn verify_reports() {
    let v = json(&["verify", "paths", "--max-n", "24"]);
    assert_eq!((v["instances"].as_u64(), v["agreements"].as_u64()), (Some(23), Some(23)));
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let out = tpcode(&["verify", "fixtures", "--report", report.to_str().unwrap()]);
    assert!(out.status.success());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(report).unwrap()).unwrap();
    assert_eq!(r["findings"], serde_json::json!(["bipartite-order2-converse"]));
}
