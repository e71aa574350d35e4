use tpcode::par::Exec;
use tpcode::treelab::{self, Reading};
use tpcode::verify::{self, Manifest, Suite, SuiteOptions};

fn strip(r: &verify::SuiteReport) -> String {
    let mut v = serde_json::to_value(r).unwrap();
    v.as_object_mut().unwrap().remove("wall_ms");
    v.to_string()
}

#[test]
fn reports_do_not_depend_on_scheduling() {
    for suite in [Suite::ZnSweep, Suite::Cycles, Suite::LocalCatalog] {
        let seq = SuiteOptions {
            max_n: Some(60),
            exec: Exec::Sequential,
            ..SuiteOptions::default()
        };
        let par = SuiteOptions {
            exec: Exec::Parallel,
            ..seq.clone()
        };
        let a = verify::run(suite, &seq).unwrap();
        let b = verify::run(suite, &par).unwrap();
        assert_eq!(strip(&a), strip(&b), "{suite}");
        assert_eq!(a.agreements + a.discrepancies.len(), a.instances);
    }
}

#[test]
fn zn_sweep_only_shows_the_documented_mixed_case() {
    let r = verify::run(Suite::ZnSweep, &SuiteOptions { max_n: Some(100), ..SuiteOptions::default() }).unwrap();
    assert!(r.ok());
    assert_eq!(r.findings, vec!["local-times-field-two-zero-divisors"]);
    let rings: Vec<&str> = r.discrepancies.iter().map(|d| d.instance.as_str()).collect();
    assert_eq!(rings, ["Z18", "Z45", "Z63", "Z99"]);
}

#[test]
fn the_shipped_manifest_is_complete() {
    let m = Manifest::builtin();
    let ids: Vec<&str> = m.findings.iter().map(|f| f.id.as_str()).collect();
    for id in [
        "bipartite-order2-converse",
        "local-times-field-two-zero-divisors",
        "tree-reduction-spider",
        "vertex-count-three-locals",
        "sum-formula-two-locals",
        "sum-formula-three-locals",
    ] {
        assert!(ids.contains(&id), "{id}");
    }
}

#[test]
fn family_traces_replay() {
    for seed in 0..50 {
        let trace = treelab::random_family(seed, 40, Reading::Corrected).unwrap();
        let text = serde_json::to_string(&trace).unwrap();
        let back = serde_json::from_str(&text).unwrap();
        let a = treelab::generate_family(&trace, Reading::Corrected).unwrap();
        let b = treelab::generate_family(&back, Reading::Corrected).unwrap();
        assert_eq!(a.tree.edges(), b.tree.edges());
        assert!(tpcode::tpc::is_total_perfect_code(&a.tree, &a.code));
    }
}
