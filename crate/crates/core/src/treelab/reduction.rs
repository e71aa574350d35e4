//! Exhaustive check, on small trees, that every tree with a total perfect code
//! can be grown from an admissible path by the family operations.
//!
//! Trees are taken from all Prüfer sequences and deduplicated by canonical
//! form. Membership is decided by undoing operations: strip a pendant, or
//! strip a hanging path whose length and joining point an operation allows,
//! provided the joining vertex qualifies in the smaller tree.

use std::collections::HashMap;

use serde::Serialize;

use super::ops::{code_for, Op, Reading};
use super::prufer;
use crate::graph::{algo, Graph};
use crate::par::{self, Exec};
use crate::tpc;

#[derive(Debug, Clone, Serialize)]
pub struct ReductionReport {
    pub max_n: usize,
    pub reading: Reading,
    pub labelled: u64,
    pub unlabelled: usize,
    pub admitting: usize,
    pub reducible: usize,
    /// Edge lists of admitting trees that could not be reduced.
    pub failures: Vec<String>,
}

/// One representative per isomorphism class, for every order `1..=max_n`.
pub fn unlabelled_trees(max_n: usize, exec: Exec) -> (u64, Vec<Graph>) {
    let mut labelled = 0u64;
    let mut out = Vec::new();
    for n in 1..=max_n {
        if n <= 2 {
            labelled += 1;
            out.push(crate::graph::path(n).expect("n >= 1"));
            continue;
        }
        // split the sequence space by its first entry
        let chunks = par::map_range(exec, 0..n, |first| {
            let mut seen: HashMap<String, Graph> = HashMap::new();
            let mut count = 0u64;
            prufer::for_each_sequence_with_prefix(n, &[first], |seq| {
                count += 1;
                let g = prufer::decode(seq, n);
                seen.entry(prufer::canonical_form(&g)).or_insert(g);
            });
            (count, seen)
        });
        let mut merged: HashMap<String, Graph> = HashMap::new();
        for (count, seen) in chunks {
            labelled += count;
            for (k, g) in seen {
                merged.entry(k).or_insert(g);
            }
        }
        let mut forms: Vec<(String, Graph)> = merged.into_iter().collect();
        forms.sort_by(|a, b| a.0.cmp(&b.0));
        out.extend(forms.into_iter().map(|(_, g)| g));
    }
    (labelled, out)
}

pub fn reduction_check(max_n: usize, reading: Reading, exec: Exec) -> ReductionReport {
    let (labelled, trees) = unlabelled_trees(max_n, exec);
    let mut memo: HashMap<String, bool> = HashMap::new();
    let mut admitting = 0;
    let mut reducible = 0;
    let mut failures = Vec::new();
    for t in &trees {
        if tpc::tree_tpc(t).expect("enumerated graphs are trees").is_none() {
            continue;
        }
        admitting += 1;
        if in_family(t, reading, &mut memo) {
            reducible += 1;
        } else {
            failures.push(format!("{:?}", t.edges()));
        }
    }
    ReductionReport {
        max_n,
        reading,
        labelled,
        unlabelled: trees.len(),
        admitting,
        reducible,
        failures,
    }
}

fn is_path(g: &Graph) -> bool {
    algo::is_tree(g) && (0..g.n()).all(|v| g.degree(v) <= 2)
}

/// Whether `t` can be grown from an admissible path.
pub fn in_family(t: &Graph, reading: Reading, memo: &mut HashMap<String, bool>) -> bool {
    let key = prufer::canonical_form(t);
    if let Some(&known) = memo.get(&key) {
        return known;
    }
    let result = decide(t, reading, memo);
    memo.insert(key, result);
    result
}

fn decide(t: &Graph, reading: Reading, memo: &mut HashMap<String, bool>) -> bool {
    let n = t.n();
    if is_path(t) && n >= 2 && n % 4 != 1 {
        return true;
    }
    // cut each edge (v, x) and look at the side containing x
    for &(a, b) in t.edges() {
        for (v, x) in [(a, b), (b, a)] {
            let side = side_of(t, v, x);
            let rest: Vec<usize> = (0..n).filter(|u| !side.contains(u)).collect();
            if rest.len() < 2 {
                continue;
            }
            let sub = t.induced(&side);
            if !is_path(&sub) {
                continue;
            }
            let smaller = t.induced(&rest);
            let v_new = rest.binary_search(&v).expect("v stays");
            let x_sub = side.binary_search(&x).expect("x on its side");
            let len = side.len();
            let ops = step_ops(&sub, x_sub, len, reading);
            if ops.is_empty() {
                continue;
            }
            let fits = ops
                .iter()
                .any(|&op| code_for(&smaller, op, v_new).ok().flatten().is_some());
            if fits && in_family(&smaller, reading, memo) {
                return true;
            }
        }
    }
    false
}

/// Operations that could have attached the path `sub` by its vertex `x`.
fn step_ops(sub: &Graph, x: usize, len: usize, reading: Reading) -> Vec<Op> {
    if len == 1 {
        return vec![Op::A2];
    }
    let dist = algo::distances(sub, x);
    let ends: Vec<usize> = algo::leaves(sub);
    let mut ops = Vec::new();
    if sub.degree(x) == 1 {
        if reading.hanging_len_ok(len) {
            ops.push(Op::A1);
        }
    } else if ends.iter().any(|&e| {
        let k = dist[e].expect("path is connected");
        reading.middle_ok(len, k)
    }) {
        ops.push(Op::A4);
    }
    ops
}

/// Sorted vertices reachable from `x` without crossing `v`.
fn side_of(t: &Graph, v: usize, x: usize) -> Vec<usize> {
    let mut seen = vec![false; t.n()];
    seen[v] = true;
    seen[x] = true;
    let mut stack = vec![x];
    let mut out = vec![x];
    while let Some(u) = stack.pop() {
        for &w in t.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                out.push(w);
                stack.push(w);
            }
        }
    }
    out.sort_unstable();
    out
}
