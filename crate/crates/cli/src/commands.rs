use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::Serialize;
use serde_json::json;
use tpcode::graph::{algo, io, CodeSet, Graph};
use tpcode::limits::Limits;
use tpcode::par::Exec;
use tpcode::ring::{decompose, Ring, RingBuilder};
use tpcode::treelab::{self, BuildTrace};
use tpcode::verify::{self, Manifest, SuiteOptions, SuiteReport};
use tpcode::zdg::{self, ZdGraph};
use tpcode::{parser, tpc};

use crate::target::GraphSpec;
use crate::{Cli, Command, Format};

pub const EXIT_OK: u8 = 0;
pub const EXIT_DISCREPANCY: u8 = 2;

pub fn run(cli: &Cli, limits: &Limits) -> Result<u8> {
    match &cli.command {
        Command::RingInfo { ring } => ring_info(cli, limits, ring),
        Command::ZdgExport { ring, format, output } => zdg_export(limits, ring, *format, output.as_deref()),
        Command::TpcDecide { target } => tpc_decide(cli, limits, target),
        Command::Verify {
            suite,
            max_n,
            seed,
            exact_bound,
            reduction_max_n,
            reading,
            sequential,
            manifest,
            report,
        } => {
            let mut opts = SuiteOptions {
                max_n: *max_n,
                seed: *seed,
                limits: *limits,
                reading: (*reading).into(),
                exec: if *sequential { Exec::Sequential } else { Exec::Parallel },
                ..SuiteOptions::default()
            };
            if let Some(b) = exact_bound {
                opts.exact_bound = *b;
            }
            if let Some(n) = reduction_max_n {
                opts.reduction_max_n = *n;
            }
            if let Some(path) = manifest {
                opts.manifest = Manifest::from_json(&read(path)?)?;
            }
            let r = verify::run(*suite, &opts)?;
            if let Some(path) = report {
                write(path, &serde_json::to_string_pretty(&r)?)?;
            }
            print_report(cli, &r)?;
            Ok(if r.ok() { EXIT_OK } else { EXIT_DISCREPANCY })
        }
        Command::TreeGen {
            trace,
            random,
            reading,
            output,
        } => tree_gen(cli, trace.as_deref(), random.as_deref(), (*reading).into(), output.as_deref()),
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn ring(limits: &Limits, text: &str) -> Result<Ring> {
    let builder = RingBuilder::with_cap(limits.ring_order_cap);
    Ok(parser::resolve(&parser::parse_ring(text)?, &builder)?)
}

fn ring_info(cli: &Cli, limits: &Limits, text: &str) -> Result<u8> {
    let r = ring(limits, text)?;
    let d = decompose::decompose(&r);
    let zstar = r.zero_divisors_nonzero();
    let mut ann_sizes: BTreeMap<usize, usize> = BTreeMap::new();
    for &x in &zstar {
        *ann_sizes.entry(r.annihilator_size(x)).or_default() += 1;
    }
    let factors: Vec<String> = r
        .factors()
        .map(|fs| fs.iter().map(|f| f.name().to_string()).collect())
        .unwrap_or_else(|| vec![r.name().to_string()]);
    let info = json!({
        "ring": r.name(),
        "order": r.order(),
        "units": r.unit_count(),
        "zero_divisors": zstar.len(),
        "local": r.is_local(),
        "reduced": r.is_reduced(),
        "field": r.is_field(),
        "factors": factors,
        "local_factors": d.locals.iter().map(|f| f.name()).collect::<Vec<_>>(),
        "field_factors": d.fields.iter().map(|f| f.name()).collect::<Vec<_>>(),
        "ann_sizes": ann_sizes,
    });
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&info)?);
        return Ok(EXIT_OK);
    }
    println!("ring           {}", r.name());
    println!("order          {}", r.order());
    println!("units          {}", r.unit_count());
    println!("|Z*|           {}", zstar.len());
    println!("local          {}", r.is_local());
    println!("reduced        {}", r.is_reduced());
    println!("field          {}", r.is_field());
    println!("factors        {} ({})", factors.len(), factors.join(" x "));
    println!(
        "decomposition  {} local, {} field",
        d.local_count(),
        d.field_count()
    );
    if ann_sizes.is_empty() {
        println!("|ann(x)|       (no nonzero zero-divisors)");
    } else {
        let parts: Vec<String> = ann_sizes.iter().map(|(s, c)| format!("{s}: {c}")).collect();
        println!("|ann(x)|       {}  (size: elements)", parts.join(", "));
    }
    Ok(EXIT_OK)
}

fn zdg_export(limits: &Limits, text: &str, format: Format, output: Option<&Path>) -> Result<u8> {
    let r = ring(limits, text)?;
    let z = ZdGraph::new(&r);
    let body = match format {
        Format::Dot => io::to_dot(z.graph()),
        Format::Json => io::to_json(z.graph()) + "\n",
    };
    match output {
        Some(path) => write(path, &body)?,
        None => print!("{body}"),
    }
    Ok(EXIT_OK)
}

#[derive(Debug, Serialize)]
struct GraphDecider {
    id: String,
    admits: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<String>,
}

#[derive(Debug, Serialize)]
struct GraphDecision {
    target: String,
    n: usize,
    edges: usize,
    admits: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<String>,
    consensus: bool,
    deciders: Vec<GraphDecider>,
    discrepancies: Vec<String>,
    notes: Vec<String>,
}

fn decide_graph(target: &str, spec: &GraphSpec, g: &Graph, limits: &Limits) -> Result<GraphDecision> {
    let mut deciders: Vec<(String, bool, Option<CodeSet>)> = Vec::new();
    let mut notes = Vec::new();
    if g.n() <= limits.search_vertex_bound {
        let c = tpc::find_tpc(g);
        deciders.push(("exact-search".into(), c.is_some(), c));
    } else {
        notes.push(format!(
            "exact search skipped: {} vertices above the bound {}",
            g.n(),
            limits.search_vertex_bound
        ));
    }
    match *spec {
        GraphSpec::Path(n) => deciders.push(("path-closed-form".into(), tpc::path_decider(n), tpc::path_code(n).ok())),
        GraphSpec::Cycle(n) => {
            deciders.push(("cycle-closed-form".into(), tpc::cycle_decider(n), tpc::cycle_code(n).ok()))
        }
        GraphSpec::Complete(n) => deciders.push(("complete-closed-form".into(), tpc::complete_decider(n), None)),
        GraphSpec::Kmn(m, n) => {
            let c = tpc::complete_bipartite_code(m, n)?;
            deciders.push(("complete-bipartite".into(), true, Some(c)));
        }
        GraphSpec::Star(n) => {
            let c = tpc::complete_bipartite_code(1, n)?;
            deciders.push(("complete-bipartite".into(), true, Some(c)));
        }
        GraphSpec::CoronaPath(n) if n >= 3 => deciders.push(("path-corona".into(), false, None)),
        _ => {}
    }
    if algo::is_tree(g) {
        let c = tpc::tree_tpc(g)?;
        deciders.push(("tree-dp".into(), c.is_some(), c));
    }
    if tpc::regular_parity_check(g) == Some(false) {
        deciders.push(("regular-parity".into(), false, None));
    }
    if deciders.is_empty() {
        bail!(
            "no decider applies to {target} with {} vertices; raise --search-bound",
            g.n()
        );
    }

    let mut discrepancies = Vec::new();
    for (id, _, c) in &deciders {
        if let Some(c) = c {
            if !tpc::is_total_perfect_code(g, c) {
                discrepancies.push(format!("{id}: witness {c} fails the verifier"));
            }
        }
    }
    let reference = deciders[0].1;
    for (id, admits, _) in &deciders[1..] {
        if *admits != reference {
            discrepancies.push(format!("{id} says {admits}, {} says {reference}", deciders[0].0));
        }
    }
    let witness = deciders.iter().find_map(|(_, _, c)| c.as_ref()).map(|c| c.to_string());
    Ok(GraphDecision {
        target: target.to_string(),
        n: g.n(),
        edges: g.edge_count(),
        admits: reference,
        witness,
        consensus: discrepancies.is_empty(),
        deciders: deciders
            .into_iter()
            .map(|(id, admits, c)| GraphDecider {
                id,
                admits,
                witness: c.map(|c| c.to_string()),
            })
            .collect(),
        discrepancies,
        notes,
    })
}

fn tpc_decide(cli: &Cli, limits: &Limits, target: &str) -> Result<u8> {
    if let Some(spec) = GraphSpec::parse(target) {
        let spec = spec?;
        let g = spec.build()?;
        let d = decide_graph(target, &spec, &g, limits)?;
        if cli.json {
            println!("{}", serde_json::to_string_pretty(&d)?);
        } else {
            println!("{target}: {} vertices, {} edges", d.n, d.edges);
            for x in &d.deciders {
                println!("  {:<22} {}", x.id, answer(x.admits, x.witness.as_deref()));
            }
            for n in &d.notes {
                println!("  note: {n}");
            }
            print_consensus(d.admits, d.witness.as_deref(), &d.discrepancies, &[]);
        }
        return Ok(if d.consensus { EXIT_OK } else { EXIT_DISCREPANCY });
    }

    let r = ring(limits, target)?;
    let v = zdg::decide_ring(&r, limits)?;
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&v)?);
    } else {
        println!("{}: order {}, {} vertices", v.ring, r.order(), r.zero_divisors_nonzero().len());
        for x in &v.deciders {
            let witness = x.witness.as_ref().map(|w| format!("{{{}}}", w.join(",")));
            print!("  {:<22} {}", x.id, answer(x.admits, witness.as_deref()));
            match &x.note {
                Some(n) => println!("  ({n})"),
                None => println!(),
            }
        }
        if !v.cross_checked {
            println!("  note: not cross-checked against the graph");
        }
        let witness = v.witness.as_ref().map(|w| format!("{{{}}}", w.join(",")));
        print_consensus(v.admits, witness.as_deref(), &v.discrepancies, &v.known_findings);
    }
    Ok(if v.discrepancies.is_empty() { EXIT_OK } else { EXIT_DISCREPANCY })
}

fn answer(admits: bool, witness: Option<&str>) -> String {
    match (admits, witness) {
        (true, Some(w)) => format!("admits {w}"),
        (true, None) => "admits".into(),
        (false, _) => "no code".into(),
    }
}

fn print_consensus(admits: bool, witness: Option<&str>, discrepancies: &[String], findings: &[String]) {
    for f in findings {
        println!("  known finding: {f}");
    }
    if discrepancies.is_empty() {
        println!("consensus: {}", answer(admits, witness));
    } else {
        println!("DISCREPANCY");
        for d in discrepancies {
            println!("  {d}");
        }
    }
}

fn print_report(cli: &Cli, r: &SuiteReport) -> Result<()> {
    if cli.json {
        println!("{}", serde_json::to_string_pretty(r)?);
        return Ok(());
    }
    println!(
        "{}: {} instances, {} agree, {} discrepancies ({} unexpected), {} codes checked, {:.0} ms",
        r.suite,
        r.instances,
        r.agreements,
        r.discrepancies.len(),
        r.unexpected().count(),
        r.codes_checked,
        r.wall_ms
    );
    for d in &r.discrepancies {
        let tag = d.finding.as_deref().unwrap_or("UNEXPECTED");
        println!("  [{tag}] {}: {}", d.instance, serde_json::to_string(&d.detail)?);
    }
    if !r.findings.is_empty() {
        println!("known findings: {}", r.findings.join(", "));
    }
    Ok(())
}

fn tree_gen(
    cli: &Cli,
    trace: Option<&Path>,
    random: Option<&[u64]>,
    reading: treelab::Reading,
    output: Option<&Path>,
) -> Result<u8> {
    let trace: BuildTrace = match (trace, random) {
        (Some(path), _) => serde_json::from_str(&read(path)?).with_context(|| format!("parsing {}", path.display()))?,
        (None, Some([seed, budget])) => treelab::random_family(*seed, *budget as usize, reading)?,
        _ => bail!("give a trace file or --random SEED BUDGET"),
    };
    let built = treelab::generate_family(&trace, reading)?;
    let dp = tpc::tree_tpc(&built.tree)?;
    if let Some(path) = output {
        write(path, &(io::to_json(&built.tree) + "\n"))?;
    }
    let report = json!({
        "trace": built.trace,
        "n": built.tree.n(),
        "edges": built.tree.edges(),
        "code": built.code.to_string(),
        "tree_dp": dp.as_ref().map(|c| c.to_string()),
        "admits": dp.is_some(),
    });
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        println!("trace    {}", serde_json::to_string(&built.trace)?);
        println!("tree     {} vertices, edges {:?}", built.tree.n(), built.tree.edges());
        println!("code     {}", built.code);
        println!("tree DP  {}", answer(dp.is_some(), dp.as_ref().map(|c| c.to_string()).as_deref()));
    }
    Ok(if dp.is_some() { EXIT_OK } else { EXIT_DISCREPANCY })
}
