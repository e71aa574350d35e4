//! Total perfect codes: verification, exact search, trees and closed forms.

pub mod families;
pub mod search;
pub mod tree_dp;

use serde::Serialize;

use crate::error::Result;
use crate::graph::{algo, CodeSet, Graph};

pub use families::{
    complete_bipartite_code, complete_decider, cycle_code, cycle_decider, path_code, path_decider,
};
pub use search::{enumerate_tpcs, enumerate_tpcs_bounded, find_tpc};
pub use tree_dp::{tree_tpc, tree_tpc_constrained, tree_tpc_containing};

/// One decider's answer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub admits: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<CodeSet>,
    pub decider: String,
    pub cross_checked: bool,
}

impl Verdict {
    pub fn new(decider: &str, witness: Option<CodeSet>) -> Verdict {
        Verdict {
            admits: witness.is_some(),
            witness,
            decider: decider.to_string(),
            cross_checked: false,
        }
    }

    /// A yes/no answer without a constructed code.
    pub fn bare(decider: &str, admits: bool) -> Verdict {
        Verdict {
            admits,
            witness: None,
            decider: decider.to_string(),
            cross_checked: false,
        }
    }
}

/// Every vertex, members included, has exactly one neighbour in `code`.
pub fn is_total_perfect_code(g: &Graph, code: &CodeSet) -> bool {
    code.iter().all(|v| v < g.n()) && g.code_counts(code).iter().all(|&c| c == 1)
}

/// `Some(false)` for a regular graph of odd order, which cannot have a code.
/// Nothing follows otherwise.
pub fn regular_parity_check(g: &Graph) -> Option<bool> {
    g.is_regular()
        .filter(|_| g.n() % 2 == 1)
        .map(|_| false)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EndVertexReport {
    pub codes: usize,
    /// The graph is a star K_{1,n}; stars are outside the claim being probed.
    pub star: bool,
    /// Some code contains no degree-one vertex.
    pub some_code_avoids_end_vertices: bool,
}

/// Enumerates codes and asks whether one avoids every end vertex.
pub fn end_vertex_analysis(g: &Graph, bound: usize) -> Result<EndVertexReport> {
    let codes = enumerate_tpcs_bounded(g, bound)?;
    let ends = algo::leaves(g);
    let star = algo::is_tree(g) && g.n() >= 2 && (0..g.n()).any(|v| g.degree(v) == g.n() - 1);
    Ok(EndVertexReport {
        codes: codes.len(),
        star,
        some_code_avoids_end_vertices: codes
            .iter()
            .any(|c| ends.iter().all(|&e| !c.contains(e))),
    })
}
