//! Tree constructions: growth operations, pendant constructions, coronas of
//! paths, and exhaustive small-tree checks.

pub mod ops;
pub mod prufer;
pub mod reduction;

use crate::error::{Error, Result};
use crate::graph::{algo, CodeSet, Graph};

pub use ops::{
    apply_step, corona_family, generate_family, pendant_tree_on_path_pairs, pendant_tree_spread,
    random_family, BuildTrace, BuiltTree, CoronaKind, Op, Reading, TreeBuildStep,
};

/// `pn(v, S)`: vertices whose only neighbour in `S` is `v`.
pub fn private_neighborhood(g: &Graph, s: &CodeSet, v: usize) -> Result<Vec<usize>> {
    if !s.contains(v) {
        return Err(Error::Precondition(format!("v{} is not in the set", v + 1)));
    }
    let counts = g.code_counts(s);
    Ok(g.neighbors(v)
        .iter()
        .copied()
        .filter(|&u| counts[u] == 1)
        .collect())
}

/// `v` is the whole private neighbourhood of some member of `S`.
pub fn is_quasi_isolated(g: &Graph, s: &CodeSet, v: usize) -> bool {
    s.contains(v)
        && s.iter().any(|u| {
            private_neighborhood(g, s, u).is_ok_and(|pn| pn == [v])
        })
}

pub fn leaf_set(t: &Graph) -> Vec<usize> {
    algo::leaves(t)
}

/// The vertex at distance `k` from `leaf` (the lowest index if several).
pub fn k_support_vertex(t: &Graph, leaf: usize, k: usize) -> Result<usize> {
    if leaf >= t.n() || t.degree(leaf) != 1 {
        return Err(Error::Precondition(format!("v{} is not a leaf", leaf + 1)));
    }
    algo::distances(t, leaf)
        .iter()
        .position(|&d| d == Some(k))
        .ok_or_else(|| {
            Error::Precondition(format!("no vertex at distance {k} from v{}", leaf + 1))
        })
}
