//! Cut vertices of `Γ(R)` for local rings, checked against the annihilator
//! conditions that are supposed to predict them.

use serde::Serialize;

use super::{pair_codes, ZdGraph};
use crate::error::{Error, Result};
use crate::graph::algo;
use crate::ring::Ring;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MemberCheck {
    pub element: String,
    pub ann_size: usize,
    pub degree: usize,
    pub cut: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CutVertexReport {
    pub ring: String,
    pub articulation_points: Vec<String>,
    pub admits: bool,
    /// `|Z(R)|`, zero included.
    pub zero_divisors: usize,
    /// Some element has `|ann(x)| = 2`.
    pub has_ann2: bool,
    /// Order 16, `|Z(R)| = 8` and no element with `|ann(x)| = 2`: the shape
    /// shared by the seven order-16 rings with cut vertices and no code.
    pub exceptional_shape: bool,
    /// Members of every code, each listed once.
    pub members: Vec<MemberCheck>,
    /// Every member with `|ann| > 2` is a cut vertex.
    pub large_ann_members_cut: bool,
    /// Same, restricted to members that are not degree-one vertices.
    pub large_ann_members_cut_qualified: bool,
    /// Cut vertices exist iff `has_ann2` or `exceptional_shape`.
    pub cut_rule: bool,
    /// Same, with `has_ann2` also requiring `|Z(R)| >= 3`.
    pub cut_rule_qualified: bool,
}

pub fn cut_vertex_report(ring: &Ring) -> Result<CutVertexReport> {
    if !ring.is_local() {
        return Err(Error::Precondition(format!("{} is not local", ring.name())));
    }
    let z = ZdGraph::new(ring);
    let g = z.graph();
    let cuts = algo::articulation_points(g);
    let zero_divisors = z.n() + 1;
    let has_ann2 = z.elements().iter().any(|&x| ring.annihilator_size(x) == 2);
    let exceptional_shape = ring.order() == 16 && zero_divisors == 8 && !has_ann2;

    let mut member_vertices: Vec<usize> = pair_codes(g).flat_map(|c| c.into_vec()).collect();
    member_vertices.sort_unstable();
    member_vertices.dedup();
    let members: Vec<MemberCheck> = member_vertices
        .iter()
        .map(|&v| MemberCheck {
            element: g.label(v),
            ann_size: ring.annihilator_size(z.element(v)),
            degree: g.degree(v),
            cut: cuts.binary_search(&v).is_ok(),
        })
        .collect();
    let large_ann_members_cut = members.iter().all(|m| m.ann_size <= 2 || m.cut);
    let large_ann_members_cut_qualified = members
        .iter()
        .all(|m| m.ann_size <= 2 || m.degree == 1 || m.cut);
    let has_cut = !cuts.is_empty();

    Ok(CutVertexReport {
        ring: ring.name().to_string(),
        articulation_points: cuts.iter().map(|&v| g.label(v)).collect(),
        admits: !member_vertices.is_empty() || z.n() == 0,
        zero_divisors,
        has_ann2,
        exceptional_shape,
        members,
        large_ann_members_cut,
        large_ann_members_cut_qualified,
        cut_rule: has_cut == (has_ann2 || exceptional_shape),
        cut_rule_qualified: has_cut == ((has_ann2 && zero_divisors >= 3) || exceptional_shape),
    })
}
