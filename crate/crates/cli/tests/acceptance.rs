//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Run with `cargo test --release -p tpcode-cli --test acceptance`.
//!
//! Two criteria are red by construction: the oracle contradicts them (see the
//! README). The test fails if the set of red criteria changes in either
//! direction, so a regression and an unexplained fix both show up.

use std::collections::BTreeSet;
use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

use tpcode::graph::{self, CodeSet, Graph};
use tpcode::limits::Limits;
use tpcode::par::Exec;
use tpcode::ring::{catalog, FiniteRing, RingBuilder};
use tpcode::treelab::prufer;
use tpcode::verify::{self, Suite, SuiteOptions, SuiteReport};
use tpcode::zdg::{self, ZdGraph};
use tpcode::{parser, tpc};

const PATHS_BUDGET: Duration = Duration::from_secs(1);
const CYCLES_BUDGET: Duration = Duration::from_secs(1);
const TREES_BUDGET: Duration = Duration::from_secs(30);
const ZN_BUDGET: Duration = Duration::from_secs(120);

/// Criteria the oracle refutes: a vertex count and an extra finding.
const EXPECTED_RED: [u32; 2] = [10, 11];

/// Documented vertex counts for the six product shapes.
const FORM_COUNTS: [(&str, u128); 6] = [
    ("Z4 x Z2", 5),
    ("Z4 x Z4", 11),
    ("Z4 x Z2 x Z2", 13),
    ("Z4 x Z4 x Z2", 27),
    ("Z4 x Z2 x Z2 x Z2", 29),
    ("Z4 x Z4 x Z4", 59),
];

/// The only discrepancies that may appear.
const DOCUMENTED: [&str; 2] = ["bipartite-order2-converse", "local-times-field-two-zero-divisors"];

/// Sum-formula comparisons are flagged under their own criterion.
const FORMULA_FINDINGS: [&str; 2] = ["sum-formula-two-locals", "sum-formula-three-locals"];

struct Ledger {
    lines: Vec<(u32, bool, String)>,
}

impl Ledger {
    fn record(&mut self, id: u32, name: &str, pass: bool, detail: String) {
        let verdict = if pass { "PASS" } else { "FAIL" };
        self.lines.push((id, pass, format!("[{id:02}] {name:<34} {verdict}  {detail}")));
    }

    fn red(&self) -> Vec<u32> {
        self.lines.iter().filter(|l| !l.1).map(|l| l.0).collect()
    }
}

fn opts() -> SuiteOptions {
    SuiteOptions {
        exec: Exec::Parallel,
        ..SuiteOptions::default()
    }
}

fn timed(suite: Suite, o: &SuiteOptions) -> (SuiteReport, Duration) {
    let start = Instant::now();
    let r = verify::run(suite, o).expect("suite runs");
    (r, start.elapsed())
}

fn unexpected(r: &SuiteReport) -> String {
    let names: Vec<&str> = r.unexpected().map(|d| d.instance.as_str()).take(5).collect();
    if names.is_empty() {
        String::new()
    } else {
        format!(" unexpected: {}", names.join(", "))
    }
}

/// Induced subgraph is a perfect matching, size is even and, on a `t`-regular
/// graph, `t|C| = |V|`. Written against the adjacency test only.
fn matching_ok(g: &Graph, c: &CodeSet) -> bool {
    let members: Vec<usize> = c.iter().collect();
    let inner_degree_one = members
        .iter()
        .all(|&a| members.iter().filter(|&&b| b != a && g.has_edge(a, b)).count() == 1);
    let regular_ok = match g.is_regular() {
        Some(t) => t * c.len() == g.n(),
        None => true,
    };
    inner_degree_one && c.len() % 2 == 0 && regular_ok
}

#[test]
fn acceptance() {
    let mut ledger = Ledger { lines: Vec::new() };
    let base = opts();
    let mut reports: Vec<SuiteReport> = Vec::new();

    // 1
    let (r, t) = timed(Suite::Paths, &SuiteOptions { max_n: Some(24), ..base.clone() });
    let constructive_ok = (2..=24)
        .filter(|&n| tpc::path_decider(n))
        .all(|n| tpc::is_total_perfect_code(&graph::path(n).unwrap(), &tpc::path_code(n).unwrap()));
    ledger.record(
        1,
        "path characterization",
        r.ok() && r.instances == 23 && r.agreements == 23 && constructive_ok && t < PATHS_BUDGET,
        format!("{}/{} agree, {:.3} s (< {:?}){}", r.agreements, r.instances, t.as_secs_f64(), PATHS_BUDGET, unexpected(&r)),
    );
    reports.push(r);

    // 2
    let (r, t) = timed(Suite::Cycles, &SuiteOptions { max_n: Some(24), ..base.clone() });
    let constructive_ok = (3..=24)
        .filter(|&n| tpc::cycle_decider(n))
        .all(|n| tpc::is_total_perfect_code(&graph::cycle(n).unwrap(), &tpc::cycle_code(n).unwrap()));
    ledger.record(
        2,
        "cycle characterization",
        r.ok() && r.instances == 22 && r.agreements == 22 && constructive_ok && t < CYCLES_BUDGET,
        format!("{}/{} agree, {:.3} s (< {:?}){}", r.agreements, r.instances, t.as_secs_f64(), CYCLES_BUDGET, unexpected(&r)),
    );
    reports.push(r);

    // 3
    let g = graph::fig1();
    let code = CodeSet::one_based(&[1, 2, 7, 8]);
    let fig1_ok = tpc::is_total_perfect_code(&g, &code) && g.is_regular().is_none() && g.n() % 2 == 0;
    ledger.record(
        3,
        "fixture fig1",
        fig1_ok,
        format!("{{v1,v2,v7,v8}} on {} vertices, regular: {:?}", g.n(), g.is_regular()),
    );

    // 5 (run before 4, which aggregates every suite)
    let tree_opts = SuiteOptions { reduction_max_n: 0, ..base.clone() };
    let (r, t) = timed(Suite::Trees, &tree_opts);
    let random = r.discrepancies.iter().filter(|d| d.instance.starts_with("random-tree")).count();
    let family = r.discrepancies.iter().filter(|d| d.instance.starts_with("family")).count();
    let corona = r.discrepancies.iter().filter(|d| d.instance.starts_with("corona")).count();
    ledger.record(
        5,
        "tree suite",
        r.ok() && r.discrepancies.is_empty() && r.instances >= 1000 + 500 + 18 && t < TREES_BUDGET,
        format!(
            "{} instances, disagreements random/family/corona {random}/{family}/{corona}, {:.1} s (< {:?}){}",
            r.instances,
            t.as_secs_f64(),
            TREES_BUDGET,
            unexpected(&r)
        ),
    );

    // 6
    let (r, t) = timed(Suite::ZnSweep, &SuiteOptions { max_n: Some(200), ..base.clone() });
    let limits = Limits::default();
    let decide = |s: &str| zdg::decide_ring(&parser::ring(s).unwrap(), &limits).unwrap();
    let z12 = decide("Z12");
    let anchors = z12.admits
        && z12.witness == Some(vec!["4".into(), "6".into()])
        && !decide("Z2 x Z8").admits
        && decide("Z9").admits;
    ledger.record(
        6,
        "zero-divisor sweep Z4..Z200",
        r.ok() && r.instances == 197 && anchors && t < ZN_BUDGET,
        format!(
            "{} rings, {} codes checked, anchors Z12/Z2xZ8/Z9 {}, {:.1} s (< {:?}){}",
            r.instances,
            r.codes_checked,
            if anchors { "ok" } else { "WRONG" },
            t.as_secs_f64(),
            ZN_BUDGET,
            unexpected(&r)
        ),
    );
    reports.push(r);

    // 7
    let (r, _) = timed(Suite::LocalCatalog, &base);
    let fixtures_ok = catalog::exceptional().unwrap().iter().all(|ring| {
        let c = zdg::cut_vertex_report(ring).unwrap();
        !c.admits && !c.articulation_points.is_empty()
    });
    ledger.record(
        7,
        "local catalog",
        r.ok() && r.instances == 29 && fixtures_ok,
        format!("{} rings, seven fixtures no-code with cut vertices: {fixtures_ok}{}", r.instances, unexpected(&r)),
    );
    reports.push(r);

    // 8
    let (r, _) = timed(Suite::ReducedProducts, &base);
    let b = RingBuilder::new();
    let f2 = b.zn(2).unwrap();
    let boolean: Vec<bool> = (2..=4)
        .map(|k| zdg::reduced_decider(&vec![f2.clone(); k], &limits).unwrap().admits)
        .collect();
    ledger.record(
        8,
        "reduced products",
        r.ok() && boolean == [true, false, false],
        format!("{} products, Boolean k=2,3,4 admits {boolean:?}{}", r.instances, unexpected(&r)),
    );
    reports.push(r);

    // 9
    let (r, _) = timed(Suite::MixedProducts, &base);
    let expected = [
        ("Z4 x Z2", true),
        ("Z4 x Z3", true),
        ("Z9 x Z2", false),
        ("Z4 x Z4", false),
        ("Z2 x Z2 x Z2[x]/(x^2)", false),
        ("Z2 x @Z2XY-X2-XY-Y2", false),
    ];
    let wrong: Vec<&str> = expected.iter().filter(|(s, a)| decide(s).admits != *a).map(|(s, _)| *s).collect();
    ledger.record(
        9,
        "mixed products",
        r.ok() && wrong.is_empty(),
        format!("{} instances, anchors wrong: {wrong:?}{}", r.instances, unexpected(&r)),
    );
    reports.push(r);

    // 10
    let (r, _) = timed(Suite::Counting, &base);
    let catalog_ok = r
        .discrepancies
        .iter()
        .all(|d| d.instance.starts_with("form:"))
        && r.ok();
    let mut mismatched = Vec::new();
    for (text, documented) in FORM_COUNTS {
        let fs = parser::resolve_factors(&parser::parse_ring(text).unwrap(), &b).unwrap();
        let count = zdg::count_zero_divisors(&fs, &b).unwrap();
        let enumerated = FiniteRing::product(&fs).unwrap().zero_divisor_count() as u128;
        if count.closed_form != documented || enumerated != documented {
            mismatched.push(format!("{text}: {} != {documented}", count.closed_form));
        }
    }
    let flagged = FORMULA_FINDINGS.iter().all(|f| r.findings.iter().any(|x| x == f));
    ledger.record(
        10,
        "counting",
        catalog_ok && mismatched.is_empty() && flagged,
        format!(
            "{} instances, catalog agrees: {catalog_ok}, formula mismatches flagged: {flagged}, count mismatches: {mismatched:?}",
            r.instances
        ),
    );
    reports.push(r);

    // fixtures and full trees for 4 and 11
    let (r, _) = timed(Suite::Fixtures, &base);
    reports.push(r);
    let (r, _) = timed(Suite::Trees, &base);
    reports.push(r);

    // 4
    let mut independent = 0usize;
    let mut bad = Vec::new();
    let mut check = |name: String, g: &Graph, c: &CodeSet| {
        independent += 1;
        if !matching_ok(g, c) {
            bad.push(name);
        }
    };
    for n in 2..=24 {
        if let Ok(c) = tpc::path_code(n) {
            check(format!("path:{n}"), &graph::path(n).unwrap(), &c);
        }
    }
    for n in 3..=24 {
        if let Ok(c) = tpc::cycle_code(n) {
            check(format!("cycle:{n}"), &graph::cycle(n).unwrap(), &c);
        }
    }
    for m in 1..=6 {
        for n in m..=6 {
            let c = tpc::complete_bipartite_code(m, n).unwrap();
            check(format!("kmn:{m},{n}"), &graph::complete_bipartite(m, n).unwrap(), &c);
        }
    }
    for n in 4..=200 {
        let z = ZdGraph::new(&b.zn(n).unwrap());
        for c in zdg::pair_codes(z.graph()) {
            check(format!("Z{n}"), z.graph(), &c);
        }
    }
    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(7);
    for i in 0..500 {
        let t = prufer::random_tree(&mut rng, 2 + i % 11);
        if let Some(c) = tpc::tree_tpc(&t).unwrap() {
            check(format!("tree#{i}"), &t, &c);
        }
    }
    let suite_codes: usize = reports.iter().map(|r| r.codes_checked).sum();
    let structural: Vec<&str> = reports
        .iter()
        .flat_map(|r| r.unexpected())
        .filter(|d| {
            let text = d.detail.to_string();
            text.contains("matching") || text.contains("odd size") || text.contains("regular")
        })
        .map(|d| d.instance.as_str())
        .collect();
    ledger.record(
        4,
        "matching and evenness",
        bad.is_empty() && structural.is_empty() && suite_codes > 0,
        format!(
            "{suite_codes} suite codes, {independent} rechecked independently, exceptions {:?}",
            bad.iter().map(String::as_str).chain(structural.iter().copied()).collect::<Vec<_>>()
        ),
    );

    // 11
    let seen: BTreeSet<String> = reports
        .iter()
        .flat_map(|r| r.findings.iter().cloned())
        .filter(|f| !FORMULA_FINDINGS.contains(&f.as_str()))
        .collect();
    let documented: BTreeSet<String> = DOCUMENTED.iter().map(|s| s.to_string()).collect();
    let no_unexpected = reports.iter().all(SuiteReport::ok);
    let empty = std::env::temp_dir().join(format!("tpcode-empty-manifest-{}.json", std::process::id()));
    std::fs::write(&empty, r#"{"findings": [], "form_counts": []}"#).unwrap();
    let status = Command::new(env!("CARGO_BIN_EXE_tpcode"))
        .args(["verify", "fixtures", "--manifest"])
        .arg(&empty)
        .output()
        .unwrap()
        .status;
    let _ = std::fs::remove_file(&empty);
    let extra: Vec<&String> = seen.difference(&documented).collect();
    let missing: Vec<&String> = documented.difference(&seen).collect();
    ledger.record(
        11,
        "known-findings manifest",
        extra.is_empty() && missing.is_empty() && no_unexpected && status.code() == Some(2),
        format!(
            "extra {extra:?}, missing {missing:?}, unexpected-free: {no_unexpected}, undocumented finding exits {:?}",
            status.code()
        ),
    );

    // straight to stdout so the lines show without --nocapture
    ledger.lines.sort_by_key(|l| l.0);
    let mut out = std::io::stdout().lock();
    writeln!(out).unwrap();
    for (_, _, line) in &ledger.lines {
        writeln!(out, "{line}").unwrap();
    }
    let mut red = ledger.red();
    red.sort_unstable();
    writeln!(out, "red criteria: {red:?} (expected {EXPECTED_RED:?})").unwrap();
    assert_eq!(red, EXPECTED_RED, "the set of failing criteria changed");
}
