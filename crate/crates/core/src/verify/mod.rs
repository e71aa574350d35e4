//! Verification suites.
//!
//! Each suite runs a family of instances through every applicable decider and
//! the exact search, checks every code it sees, and reports where answers
//! disagree. Disagreements that match an entry of the known-findings manifest
//! are expected; anything else is a regression.

pub mod catalogs;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{self, algo, CodeSet, Graph};
use crate::limits::Limits;
use crate::par::{self, Exec};
use crate::parser;
use crate::ring::{catalog, Ring, RingBuilder};
use crate::tpc;
use crate::treelab::{self, prufer, reduction, CoronaKind, Reading};
use crate::zdg::{self, deciders, ProductForm, ZdGraph};

/// Seed for the random tree and family sweeps.
pub const DEFAULT_SEED: u64 = 20_240_601;

const MANIFEST: &str = include_str!("../../data/known_findings.json");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnownFinding {
    pub id: String,
    /// `decider`, `family`, `count` or `formula`.
    pub kind: String,
    pub suite: String,
    pub evidence: String,
    pub summary: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormCount {
    pub form: String,
    pub ring: String,
    pub vertices: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub findings: Vec<KnownFinding>,
    pub form_counts: Vec<FormCount>,
}

impl Manifest {
    pub fn builtin() -> Manifest {
        serde_json::from_str(MANIFEST).expect("shipped manifest parses")
    }

    pub fn from_json(text: &str) -> Result<Manifest> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn knows(&self, id: &str) -> bool {
        self.findings.iter().any(|f| f.id == id)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Paths,
    Cycles,
    Trees,
    ZnSweep,
    LocalCatalog,
    ReducedProducts,
    MixedProducts,
    Counting,
    Fixtures,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Paths,
        Suite::Cycles,
        Suite::Trees,
        Suite::ZnSweep,
        Suite::LocalCatalog,
        Suite::ReducedProducts,
        Suite::MixedProducts,
        Suite::Counting,
        Suite::Fixtures,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Paths => "paths",
            Suite::Cycles => "cycles",
            Suite::Trees => "trees",
            Suite::ZnSweep => "zn-sweep",
            Suite::LocalCatalog => "local-catalog",
            Suite::ReducedProducts => "reduced-products",
            Suite::MixedProducts => "mixed-products",
            Suite::Counting => "counting",
            Suite::Fixtures => "fixtures",
        }
    }

    fn default_max_n(self) -> usize {
        match self {
            Suite::Paths | Suite::Cycles => 24,
            Suite::ZnSweep => 200,
            _ => 0,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                let known: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
                Error::Precondition(format!("unknown suite '{s}'; known: {}", known.join(", ")))
            })
    }
}

#[derive(Debug, Clone)]
pub struct SuiteOptions {
    /// Upper bound for the paths, cycles and zn-sweep families.
    pub max_n: Option<usize>,
    pub seed: u64,
    pub limits: Limits,
    /// Exact search runs on graphs up to this many vertices.
    pub exact_bound: usize,
    pub exec: Exec,
    pub reading: Reading,
    pub random_trees: usize,
    pub random_tree_max: usize,
    pub family_traces: usize,
    pub family_budget: usize,
    /// Exhaustive tree reduction up to this order; 0 skips it.
    pub reduction_max_n: usize,
    pub manifest: Manifest,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            max_n: None,
            seed: DEFAULT_SEED,
            limits: Limits::default(),
            exact_bound: crate::limits::DEFAULT_RING_ORDER_CAP,
            exec: Exec::Parallel,
            reading: Reading::Corrected,
            random_trees: 1000,
            random_tree_max: 12,
            family_traces: 500,
            family_budget: 40,
            reduction_max_n: 9,
            manifest: Manifest::builtin(),
        }
    }
}

impl SuiteOptions {
    fn builder(&self) -> RingBuilder {
        RingBuilder::with_cap(self.limits.ring_order_cap)
    }

    /// Limits for ring deciders, with exact search allowed up to `exact_bound`.
    fn decider_limits(&self) -> Limits {
        Limits {
            search_vertex_bound: self.exact_bound,
            ..self.limits
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Discrepancy {
    pub instance: String,
    pub detail: Value,
    /// Manifest id when the disagreement is a documented one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub finding: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub instances: usize,
    pub agreements: usize,
    pub discrepancies: Vec<Discrepancy>,
    /// Manifest ids seen, sorted.
    pub findings: Vec<String>,
    /// Codes passed through the verifier and the matching checks.
    pub codes_checked: usize,
    pub wall_ms: f64,
}

impl SuiteReport {
    pub fn unexpected(&self) -> impl Iterator<Item = &Discrepancy> {
        self.discrepancies.iter().filter(|d| d.finding.is_none())
    }

    pub fn ok(&self) -> bool {
        self.unexpected().next().is_none()
    }
}

/// What one instance produced.
#[derive(Debug, Default)]
struct Outcome {
    instance: String,
    problems: Vec<String>,
    findings: Vec<String>,
    detail: Value,
    codes: usize,
}

impl Outcome {
    fn new(instance: impl Into<String>) -> Self {
        Outcome {
            instance: instance.into(),
            ..Default::default()
        }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.problems.push(msg());
        }
    }

    /// Verifier, induced matching, even size and, on regular graphs, `t|C| = |V|`.
    fn code(&mut self, g: &Graph, code: &CodeSet, what: &str) {
        self.codes += 1;
        if !tpc::is_total_perfect_code(g, code) {
            self.problems.push(format!("{what}: {code} is not a total perfect code"));
            return;
        }
        if !algo::is_matching(g, code) {
            self.problems.push(format!("{what}: {code} does not induce a matching"));
        }
        if code.len() % 2 == 1 {
            self.problems.push(format!("{what}: {code} has odd size"));
        }
        if let Some(t) = g.is_regular() {
            if g.n() > 0 && t * code.len() != g.n() {
                self.problems.push(format!("{what}: {t}-regular but t|C| = {} != {}", t * code.len(), g.n()));
            }
        }
    }

    fn agree(&mut self, what: &str, a: bool, b: bool) {
        self.check(a == b, || format!("{what}: {a} vs {b}"));
    }
}

/// Runs one suite.
pub fn run(suite: Suite, opts: &SuiteOptions) -> Result<SuiteReport> {
    let start = Instant::now();
    let outcomes = match suite {
        Suite::Paths => paths(opts),
        Suite::Cycles => cycles(opts),
        Suite::Trees => trees(opts)?,
        Suite::ZnSweep => zn_sweep(opts)?,
        Suite::LocalCatalog => local_catalog(opts)?,
        Suite::ReducedProducts => reduced_products(opts)?,
        Suite::MixedProducts => mixed_products(opts)?,
        Suite::Counting => counting(opts)?,
        Suite::Fixtures => fixtures(opts)?,
    };
    Ok(merge(suite, outcomes, &opts.manifest, start))
}

fn merge(suite: Suite, outcomes: Vec<Outcome>, manifest: &Manifest, start: Instant) -> SuiteReport {
    let mut discrepancies = Vec::new();
    let mut findings = BTreeSet::new();
    let mut codes_checked = 0;
    let instances = outcomes.len();
    for o in outcomes {
        codes_checked += o.codes;
        if o.problems.is_empty() && o.findings.is_empty() {
            continue;
        }
        let known: Vec<&String> = o.findings.iter().filter(|f| manifest.knows(f)).collect();
        findings.extend(known.iter().map(|s| s.to_string()));
        // documented only when every issue is a known finding
        let documented = o.problems.is_empty() && known.len() == o.findings.len();
        let mut detail = o.detail;
        if let Value::Object(map) = &mut detail {
            if !o.problems.is_empty() {
                map.insert("problems".into(), json!(o.problems));
            }
            if !o.findings.is_empty() {
                map.insert("findings".into(), json!(o.findings));
            }
        }
        discrepancies.push(Discrepancy {
            instance: o.instance,
            detail,
            finding: documented.then(|| o.findings.join(",")),
        });
    }
    SuiteReport {
        suite,
        instances,
        agreements: instances - discrepancies.len(),
        discrepancies,
        findings: findings.into_iter().collect(),
        codes_checked,
        wall_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

fn code_json(c: &Option<CodeSet>) -> Value {
    match c {
        Some(c) => json!(c.to_string()),
        None => Value::Null,
    }
}

fn paths(opts: &SuiteOptions) -> Vec<Outcome> {
    let max = opts.max_n.unwrap_or(Suite::Paths.default_max_n());
    par::map_range(opts.exec, 2..max.max(1) + 1, |n| {
        let mut o = Outcome::new(format!("path:{n}"));
        let g = graph::path(n).expect("n >= 2");
        let exact = tpc::find_tpc(&g);
        let dp = tpc::tree_tpc(&g).expect("paths are trees");
        let decider = tpc::path_decider(n);
        o.agree("closed form vs exact search", decider, exact.is_some());
        o.agree("tree DP vs exact search", dp.is_some(), exact.is_some());
        let constructive = tpc::path_code(n).ok();
        o.agree("constructive code exists", constructive.is_some(), decider);
        for (what, c) in [("exact", &exact), ("tree DP", &dp), ("constructive", &constructive)] {
            if let Some(c) = c {
                o.code(&g, c, what);
            }
        }
        o.detail = json!({"n": n, "decider": decider, "exact": code_json(&exact),
            "tree_dp": code_json(&dp), "constructive": code_json(&constructive)});
        o
    })
}

fn cycles(opts: &SuiteOptions) -> Vec<Outcome> {
    let max = opts.max_n.unwrap_or(Suite::Cycles.default_max_n());
    par::map_range(opts.exec, 3..max.max(2) + 1, |n| {
        let mut o = Outcome::new(format!("cycle:{n}"));
        let g = graph::cycle(n).expect("n >= 3");
        let exact = tpc::find_tpc(&g);
        let decider = tpc::cycle_decider(n);
        o.agree("closed form vs exact search", decider, exact.is_some());
        if tpc::regular_parity_check(&g) == Some(false) {
            o.check(exact.is_none(), || "odd regular graph has a code".into());
        }
        let constructive = tpc::cycle_code(n).ok();
        o.agree("constructive code exists", constructive.is_some(), decider);
        for (what, c) in [("exact", &exact), ("constructive", &constructive)] {
            if let Some(c) = c {
                o.code(&g, c, what);
            }
        }
        o.detail = json!({"n": n, "decider": decider, "exact": code_json(&exact),
            "constructive": code_json(&constructive)});
        o
    })
}

/// The 9-vertex spider with legs 2, 3, 3 in canonical form.
fn spider_form() -> String {
    let t = Graph::new(9, [(0, 1), (1, 2), (0, 3), (3, 4), (4, 5), (0, 6), (6, 7), (7, 8)])
        .expect("valid edges");
    prufer::canonical_form(&t)
}

fn trees(opts: &SuiteOptions) -> Result<Vec<Outcome>> {
    let mut out = Vec::new();

    // random labelled trees, drawn up front so the sample does not depend on scheduling
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let sample: Vec<Graph> = (0..opts.random_trees)
        .map(|_| {
            let n = rng.random_range(1..=opts.random_tree_max.max(1));
            prufer::random_tree(&mut rng, n)
        })
        .collect();
    out.extend(par::map(opts.exec, &sample, |t| {
        let mut o = Outcome::new(format!("random-tree:{:?}", t.edges()));
        let exact = tpc::find_tpc(t);
        let dp = tpc::tree_tpc(t).expect("Prüfer trees are trees");
        o.agree("tree DP vs exact search", dp.is_some(), exact.is_some());
        for (what, c) in [("exact", &exact), ("tree DP", &dp)] {
            if let Some(c) = c {
                o.code(t, c, what);
            }
        }
        o.detail = json!({"n": t.n(), "edges": t.edges(), "exact": code_json(&exact), "tree_dp": code_json(&dp)});
        o
    }));

    // seeded family traces: every grown tree must keep a code
    let seeds: Vec<u64> = (0..opts.family_traces as u64).map(|i| opts.seed.wrapping_add(i)).collect();
    out.extend(par::map(opts.exec, &seeds, |&seed| {
        let mut o = Outcome::new(format!("family:seed={seed}"));
        match treelab::random_family(seed, opts.family_budget, opts.reading)
            .and_then(|trace| treelab::generate_family(&trace, opts.reading))
        {
            Ok(built) => {
                let n = built.tree.n();
                o.check(n <= opts.family_budget, || format!("{n} vertices exceed the budget"));
                o.check(algo::is_tree(&built.tree), || "result is not a tree".into());
                let dp = tpc::tree_tpc(&built.tree).ok().flatten();
                o.check(dp.is_some(), || "tree DP finds no code".into());
                o.code(&built.tree, &built.code, "carried code");
                o.detail = json!({"trace": built.trace, "n": n});
            }
            Err(e) => {
                o.problems.push(e.to_string());
                o.detail = json!({"seed": seed});
            }
        }
        o
    }));

    // coronas of paths never admit; their base paths do unless n = 1 mod 4
    for len in 3..=20usize {
        let mut o = Outcome::new(format!("corona:path:{len}"));
        let base = graph::path(len)?;
        let g = match CoronaKind::of(len) {
            Some(kind) => treelab::corona_family(kind, len)?,
            None => graph::corona(&base, &graph::path(1)?),
        };
        let exact = tpc::find_tpc(&g);
        let dp = tpc::tree_tpc(&g)?;
        o.check(exact.is_none() && dp.is_none(), || "corona admits a code".into());
        let base_code = tpc::find_tpc(&base);
        o.agree("base path admits", base_code.is_some(), len % 4 != 1);
        if let Some(c) = &base_code {
            o.code(&base, c, "base path");
        }
        o.detail = json!({"len": len, "corona_n": g.n(), "base": code_json(&base_code)});
        out.push(o);
    }

    // pendant constructions whose code is the chosen vertex set W
    let mut pendant = Vec::new();
    for base in [2usize, 6, 10, 14] {
        for k in 0..4 {
            pendant.push((format!("pendant-spread:{base},{k}"), treelab::pendant_tree_spread(base, k)?));
        }
    }
    for n in 1..=5 {
        pendant.push((format!("pendant-pairs:{n}"), treelab::pendant_tree_on_path_pairs(n)?));
    }
    for (name, (g, w)) in pendant {
        let mut o = Outcome::new(name);
        o.code(&g, &w, "W");
        let exact = tpc::find_tpc(&g);
        o.check(exact.is_some(), || "exact search finds no code".into());
        o.detail = json!({"n": g.n(), "w": w.to_string()});
        out.push(o);
    }

    // exhaustive reduction back to an admissible path
    if opts.reduction_max_n > 0 {
        let report = reduction::reduction_check(opts.reduction_max_n, opts.reading, opts.exec);
        let spider = spider_form();
        for _ in 0..report.reducible {
            out.push(Outcome::new("reduction"));
        }
        for edges in &report.failures {
            let mut o = Outcome::new(format!("reduction:{edges}"));
            let t = parse_edge_list(edges)?;
            if prufer::canonical_form(&t) == spider {
                o.findings.push("tree-reduction-spider".into());
            } else {
                o.problems.push("admitting tree does not reduce to an admissible path".into());
            }
            o.detail = json!({"edges": edges, "max_n": report.max_n, "labelled": report.labelled});
            out.push(o);
        }
    }
    Ok(out)
}

fn parse_edge_list(text: &str) -> Result<Graph> {
    let nums: Vec<usize> = text
        .split(|c: char| !c.is_ascii_digit())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().expect("digits"))
        .collect();
    let edges: Vec<(usize, usize)> = nums.chunks(2).map(|p| (p[0], p[1])).collect();
    Graph::new(edges.len() + 1, edges)
}

/// Checks shared by every ring instance.
fn ring_checks(o: &mut Outcome, z: &ZdGraph, opts: &SuiteOptions) {
    let g = z.graph();
    if g.n() >= 2 {
        o.check(algo::is_connected(g), || "graph is disconnected".into());
        let d = algo::diameter(g);
        o.check(d.is_some_and(|d| d <= 3), || format!("diameter {d:?} exceeds 3"));
    }
    let pairs: Vec<CodeSet> = zdg::pair_codes(g).collect();
    for c in &pairs {
        o.code(g, c, "pair search");
    }
    if g.n() > 0 && g.n() <= opts.exact_bound {
        let exact = tpc::find_tpc(g);
        o.agree("pair search vs exact search", !pairs.is_empty(), exact.is_some());
        if let Some(c) = &exact {
            o.code(g, c, "exact search");
            o.check(c.len() == 2, || format!("exact search found a code of size {}", c.len()));
        }
    }
    if g.n() > 0 && g.n() <= opts.limits.enumeration_bound {
        match tpc::enumerate_tpcs_bounded(g, opts.limits.enumeration_bound) {
            Ok(all) => {
                o.check(all.iter().all(|c| c.len() == 2), || "an enumerated code has size other than 2".into());
                o.check(all == pairs, || "enumeration and pair search list different codes".into());
            }
            Err(e) => o.problems.push(e.to_string()),
        }
    }
}

fn verdict_checks(o: &mut Outcome, v: &deciders::RingVerdict) {
    for d in &v.discrepancies {
        o.problems.push(d.clone());
    }
    o.findings.extend(v.known_findings.iter().cloned());
}

fn zn_sweep(opts: &SuiteOptions) -> Result<Vec<Outcome>> {
    let max = opts.max_n.unwrap_or(Suite::ZnSweep.default_max_n()) as u64;
    let rings = catalogs::integer_rings(&opts.builder(), 4, max)?;
    let limits = opts.decider_limits();
    Ok(par::map(opts.exec, &rings, |r| {
        let mut o = Outcome::new(r.name());
        let z = ZdGraph::new(r);
        ring_checks(&mut o, &z, opts);
        match deciders::decide_ring(r, &limits) {
            Ok(v) => {
                verdict_checks(&mut o, &v);
                o.detail = json!({"vertices": z.n(), "verdict": v});
            }
            Err(e) => o.problems.push(e.to_string()),
        }
        o
    }))
}

fn local_catalog(opts: &SuiteOptions) -> Result<Vec<Outcome>> {
    let rings = catalogs::local_catalog(&opts.builder())?;
    let limits = opts.decider_limits();
    let exceptional: Vec<String> = catalog::EXCEPTIONAL
        .iter()
        .map(|s| catalog::load(s).map(|r| r.name().to_string()))
        .collect::<Result<_>>()?;
    Ok(par::map(opts.exec, &rings, |r| {
        let mut o = Outcome::new(r.name());
        let z = ZdGraph::new(r);
        ring_checks(&mut o, &z, opts);
        let verdict = deciders::local_decider(r, &limits);
        let cut = zdg::cut_vertex_report(r);
        match (&verdict, &cut) {
            (Ok(v), Ok(c)) => {
                verdict_checks(&mut o, v);
                o.agree("cut report vs verdict", c.admits, v.admits);
                o.check(c.large_ann_members_cut_qualified, || {
                    "a code member with |ann| > 2 and degree > 1 is not a cut vertex".into()
                });
                o.check(c.cut_rule_qualified, || {
                    "cut vertices do not match the annihilator / exceptional-shape rule".into()
                });
                if exceptional.iter().any(|n| n == r.name()) {
                    o.check(c.exceptional_shape, || "exceptional ring lacks the shape".into());
                    o.check(!v.admits, || "exceptional ring admits a code".into());
                    o.check(!c.articulation_points.is_empty(), || "exceptional ring has no cut vertex".into());
                }
                o.detail = json!({"verdict": v, "cut": c});
            }
            _ => {
                if let Err(e) = verdict {
                    o.problems.push(e.to_string());
                }
                if let Err(e) = cut {
                    o.problems.push(e.to_string());
                }
                o.detail = json!({});
            }
        }
        o
    }))
}

fn reduced_products(opts: &SuiteOptions) -> Result<Vec<Outcome>> {
    let products = catalogs::reduced_products(&opts.builder())?;
    let limits = opts.decider_limits();
    Ok(par::map(opts.exec, &products, |fs| {
        let name = fs.iter().map(|f| f.name()).collect::<Vec<_>>().join(" x ");
        let mut o = Outcome::new(name);
        match deciders::reduced_decider(fs, &limits) {
            Ok(v) => {
                verdict_checks(&mut o, &v);
                o.check(v.cross_checked, || "not cross-checked".into());
                o.agree("two factors iff a code", v.admits, fs.len() == 2);
                if let Some(c) = &v.code {
                    o.codes += 1;
                    o.check(c.len() == 2, || "code size is not 2".into());
                }
                o.detail = json!({"verdict": v});
            }
            Err(e) => o.problems.push(e.to_string()),
        }
        o
    }))
}

fn mixed_products(opts: &SuiteOptions) -> Result<Vec<Outcome>> {
    let builder = opts.builder();
    let limits = opts.decider_limits();
    let mut out = Vec::new();
    for (text, expected) in catalogs::mixed_anchors() {
        let mut o = Outcome::new(format!("anchor:{text}"));
        let r = parser::resolve(&parser::parse_ring(text)?, &builder)?;
        let v = deciders::decide_ring(&r, &limits)?;
        verdict_checks(&mut o, &v);
        o.agree("expected answer", v.admits, expected);
        o.detail = json!({"verdict": v});
        out.push(o);
    }
    let products = catalogs::mixed_products(&builder)?;
    out.extend(par::map(opts.exec, &products, |(ls, fs)| {
        let name = ls.iter().chain(fs).map(|f| f.name()).collect::<Vec<_>>().join(" x ");
        let mut o = Outcome::new(name);
        match deciders::mixed_decider(ls, fs, &limits) {
            Ok(v) => {
                verdict_checks(&mut o, &v);
                o.check(v.cross_checked, || "not cross-checked".into());
                if let Some(c) = &v.code {
                    o.codes += 1;
                    o.check(c.len() == 2, || "code size is not 2".into());
                }
                o.detail = json!({"verdict": v});
            }
            Err(e) => o.problems.push(e.to_string()),
        }
        o
    }));
    Ok(out)
}

/// Every ring the other ring suites touch, as factor lists.
fn counting_catalog(opts: &SuiteOptions) -> Result<Vec<Vec<Ring>>> {
    let b = opts.builder();
    let mut out: Vec<Vec<Ring>> = Vec::new();
    out.extend(catalogs::integer_rings(&b, 2, 200)?.into_iter().map(|r| vec![r]));
    out.extend(catalogs::mixed_locals(&b)?.into_iter().map(|r| vec![r]));
    out.extend(catalogs::small_fields(&b)?.into_iter().map(|r| vec![r]));
    out.extend(catalogs::reduced_products(&b)?);
    out.extend(catalogs::mixed_products(&b)?.into_iter().map(|(l, f)| l.into_iter().chain(f).collect()));
    Ok(out)
}

fn counting(opts: &SuiteOptions) -> Result<Vec<Outcome>> {
    let builder = opts.builder();
    let catalog = counting_catalog(opts)?;
    let mut out = par::map(opts.exec, &catalog, |fs| {
        let name = fs.iter().map(|f| f.name()).collect::<Vec<_>>().join(" x ");
        let mut o = Outcome::new(name);
        match zdg::count_zero_divisors(fs, &builder) {
            Ok(r) => {
                o.check(r.agrees(), || format!("closed form {} vs enumerated {:?}", r.closed_form, r.enumerated));
                o.check(r.enumerated.is_some(), || "not enumerated".into());
                o.detail = json!({"report": r});
            }
            Err(e) => o.problems.push(e.to_string()),
        }
        o
    });

    // the six named shapes, against documented counts and the sum formulas
    for fc in &opts.manifest.form_counts {
        let mut o = Outcome::new(format!("form:{}", fc.form));
        let fs = parser::resolve_factors(&parser::parse_ring(&fc.ring)?, &builder)?;
        let r = zdg::count_zero_divisors(&fs, &builder)?;
        o.check(r.agrees(), || "closed form disagrees with enumeration".into());
        o.check(r.form.is_some_and(|f| f.label() == fc.form), || {
            format!("{} is not of shape {}", fc.ring, fc.form)
        });
        if r.closed_form != fc.vertices {
            match count_finding(r.form) {
                Some(id) => o.findings.push(id.into()),
                None => o.problems.push(format!("count {} vs documented {}", r.closed_form, fc.vertices)),
            }
        }
        if r.matching_readings().is_empty() {
            match formula_finding(r.form) {
                Some(id) => o.findings.push(id.into()),
                None => o.problems.push("sum formula matches under neither reading".into()),
            }
        }
        o.detail = json!({"ring": fc.ring, "documented": fc.vertices, "report": r});
        out.push(o);
    }
    Ok(out)
}

fn count_finding(form: Option<ProductForm>) -> Option<&'static str> {
    (form == Some(ProductForm::LocalLocalLocal)).then_some("vertex-count-three-locals")
}

fn formula_finding(form: Option<ProductForm>) -> Option<&'static str> {
    match form {
        Some(ProductForm::LocalLocal) => Some("sum-formula-two-locals"),
        Some(ProductForm::LocalLocalLocal) => Some("sum-formula-three-locals"),
        _ => None,
    }
}

fn fixtures(opts: &SuiteOptions) -> Result<Vec<Outcome>> {
    let builder = opts.builder();
    let limits = opts.decider_limits();
    let mut out = Vec::new();

    for slug in catalog::EXCEPTIONAL {
        let mut o = Outcome::new(format!("@{slug}"));
        let r = catalog::load_with(&builder, slug)?;
        o.check(r.validate_axioms().is_ok(), || "axioms fail".into());
        o.check(r.order() == 16 && r.is_local() && !r.is_reduced(), || "not a local non-reduced ring of order 16".into());
        o.check(r.zero_divisor_count() + 1 > 2, || "|Z(R)| <= 2".into());
        let v = deciders::local_decider(&r, &limits)?;
        verdict_checks(&mut o, &v);
        o.check(!v.admits, || "admits a code".into());
        let c = zdg::cut_vertex_report(&r)?;
        o.check(!c.articulation_points.is_empty(), || "no cut vertex".into());
        o.detail = json!({"ring": r.name(), "cut_vertices": c.articulation_points});
        out.push(o);
    }

    let mut o = Outcome::new("fig1");
    let g = graph::fig1();
    let given = CodeSet::one_based(&[1, 2, 7, 8]);
    o.code(&g, &given, "given");
    o.check(g.is_regular().is_none() && g.n() % 2 == 0, || "not a non-regular graph of even order".into());
    o.agree("exact search", tpc::find_tpc(&g).is_some(), true);
    o.detail = json!({"code": given.to_string()});
    out.push(o);

    for n in 2..=9 {
        let mut o = Outcome::new(format!("complete:{n}"));
        let g = graph::complete(n)?;
        let exact = tpc::find_tpc(&g);
        o.agree("closed form vs exact search", tpc::complete_decider(n), exact.is_some());
        if let Some(c) = &exact {
            o.code(&g, c, "exact");
        }
        o.detail = json!({"n": n});
        out.push(o);
    }
    for m in 1..=6 {
        for n in m..=6 {
            let mut o = Outcome::new(format!("kmn:{m},{n}"));
            let g = graph::complete_bipartite(m, n)?;
            o.code(&g, &tpc::complete_bipartite_code(m, n)?, "constructive");
            o.detail = json!({"m": m, "n": n});
            out.push(o);
        }
    }

    // an order-two code on a bipartite graph that is not complete bipartite
    let mut o = Outcome::new("path:4");
    let p4 = graph::path(4)?;
    let code = tpc::find_tpc(&p4);
    if let Some(c) = &code {
        o.code(&p4, c, "exact");
        if c.len() == 2 && !is_complete_bipartite(&p4) {
            o.findings.push("bipartite-order2-converse".into());
        }
    }
    o.detail = json!({"code": code_json(&code)});
    out.push(o);
    Ok(out)
}

/// Connected, and the BFS 2-colouring joins every cross pair.
fn is_complete_bipartite(g: &Graph) -> bool {
    if g.n() < 2 || !algo::is_connected(g) {
        return false;
    }
    let d = algo::distances(g, 0);
    let side: Vec<bool> = d.iter().map(|x| x.expect("connected") % 2 == 1).collect();
    (0..g.n()).all(|a| {
        (a + 1..g.n()).all(|b| g.has_edge(a, b) == (side[a] != side[b]))
    })
}
