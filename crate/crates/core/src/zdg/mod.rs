//! Zero-divisor graphs: vertices are the nonzero zero-divisors of a ring,
//! with distinct `x`, `y` adjacent when `xy = 0`.
//!
//! In these graphs every total perfect code is a single edge, so the pair
//! search below is a complete decision procedure. The exact search in
//! [`crate::tpc`] is kept alongside as an independent oracle.

pub mod counting;
pub mod cut;
pub mod deciders;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{CodeSet, Graph};
use crate::par::{self, Exec};
use crate::ring::Ring;
use crate::tpc;

pub use counting::{count_zero_divisors, CountReport, ProductForm};
pub use cut::{cut_vertex_report, CutVertexReport};
pub use deciders::{
    decide_ring, local_decider, mixed_decider, reduced_decider, DeciderResult, RingVerdict,
};

/// `Γ(R)` together with the vertex to ring-element map.
#[derive(Debug, Clone)]
pub struct ZdGraph {
    ring: Ring,
    graph: Graph,
    elements: Vec<usize>,
}

impl ZdGraph {
    pub fn new(ring: &Ring) -> ZdGraph {
        Self::build(ring, Exec::Sequential)
    }

    /// Builds `Γ(R)`, scanning rows of the multiplication table under `exec`.
    pub fn build(ring: &Ring, exec: Exec) -> ZdGraph {
        let elements = ring.zero_divisors_nonzero();
        let rows = par::map_range(exec, 0..elements.len(), |i| {
            let x = elements[i];
            (i + 1..elements.len())
                .filter(|&j| ring.mul(x, elements[j]) == 0)
                .map(|j| (i, j))
                .collect::<Vec<_>>()
        });
        let labels: BTreeMap<usize, String> = elements
            .iter()
            .enumerate()
            .map(|(v, &x)| (v, ring.element_name(x)))
            .collect();
        let graph = Graph::build(elements.len(), rows.into_iter().flatten().collect())
            .with_labels(labels);
        ZdGraph {
            ring: ring.clone(),
            graph,
            elements,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Ring element of each vertex, ascending.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn element(&self, v: usize) -> usize {
        self.elements[v]
    }

    pub fn vertex_of(&self, x: usize) -> Option<usize> {
        self.elements.binary_search(&x).ok()
    }

    /// The vertex set for a list of ring elements, if all are vertices.
    pub fn code_of_elements(&self, xs: &[usize]) -> Option<CodeSet> {
        xs.iter().map(|&x| self.vertex_of(x)).collect()
    }

    pub fn element_names(&self, code: &CodeSet) -> Vec<String> {
        code.iter().map(|v| self.graph.label(v)).collect()
    }

    pub fn degree_one_vertices(&self) -> Vec<usize> {
        degree_one_vertices(self)
    }
}

pub fn zero_divisor_graph(ring: &Ring) -> ZdGraph {
    ZdGraph::new(ring)
}

/// `ann(x) \ {0, x}`, which is the neighbourhood of `x` in `Γ(R)`.
pub fn cap_ann(ring: &Ring, x: usize) -> Result<Vec<usize>> {
    if x >= ring.order() || !ring.is_zero_divisor(x) {
        return Err(Error::Precondition(format!(
            "{} is not a nonzero zero-divisor of {}",
            if x < ring.order() { ring.element_name(x) } else { x.to_string() },
            ring.name()
        )));
    }
    Ok(ring
        .annihilator(x)
        .into_iter()
        .filter(|&y| y != 0 && y != x)
        .collect())
}

/// Vertices of degree exactly one.
pub fn degree_one_vertices(z: &ZdGraph) -> Vec<usize> {
    (0..z.n()).filter(|&v| z.graph.degree(v) == 1).collect()
}

/// Every code made of one edge, in edge order.
///
/// A pair `{a, b}` can only work when the two neighbourhoods split the vertex
/// set, so the degree sum is checked before the full verification.
pub fn pair_codes(g: &Graph) -> impl Iterator<Item = CodeSet> + '_ {
    g.edges()
        .iter()
        .filter(move |&&(a, b)| g.degree(a) + g.degree(b) == g.n())
        .map(|&(a, b)| CodeSet::new(vec![a, b]))
        .filter(move |c| tpc::is_total_perfect_code(g, c))
}

/// The first edge, in lexicographic order, whose endpoints form a code.
pub fn tpc_pair_solver(z: &ZdGraph) -> Option<CodeSet> {
    pair_codes(z.graph()).next()
}
