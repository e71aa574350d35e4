//! Structural deciders for `Γ(R)`, each reported next to the pair search and
//! the exact search so disagreements are visible.
//!
//! Factor classification follows the local decomposition of the ring:
//! `m` local factors that are not fields and `n` field factors.
//!
//! | shape            | rule                                                   |
//! |------------------|--------------------------------------------------------|
//! | one field        | empty graph, the empty code works                      |
//! | `n >= 2` fields  | a code exists iff `n = 2`                              |
//! | one local        | some `x` with `ann(x) = {0, y}` and `|Z(R)| >= 3`, or `Γ(R) = K_2` |
//! | local x field    | iff the local factor has exactly one nonzero zero-divisor |
//! | anything else    | no code                                                |

use serde::Serialize;

use super::{pair_codes, ZdGraph};
use crate::error::{Error, Result};
use crate::graph::CodeSet;
use crate::limits::Limits;
use crate::ring::{decompose, Ring, RingBuilder};
use crate::tpc;

/// Id of the finding raised when the local-times-field rule, read with a
/// bound of two zero-divisors, disagrees with the search.
pub const FINDING_LOCAL_TIMES_FIELD: &str = "local-times-field-two-zero-divisors";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeciderResult {
    pub id: String,
    pub admits: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RingVerdict {
    pub ring: String,
    pub admits: bool,
    /// Lexicographically least code, as element names.
    pub witness: Option<Vec<String>>,
    pub deciders: Vec<DeciderResult>,
    /// At least one search ran next to the structural rule.
    pub cross_checked: bool,
    pub discrepancies: Vec<String>,
    pub known_findings: Vec<String>,
    #[serde(skip)]
    pub code: Option<CodeSet>,
}

impl RingVerdict {
    pub fn consensus(&self) -> bool {
        self.discrepancies.is_empty()
    }

    pub fn decider(&self, id: &str) -> Option<&DeciderResult> {
        self.deciders.iter().find(|d| d.id == id)
    }
}

/// A structural answer with an optional code given as ring elements of the host.
struct Rule {
    id: &'static str,
    admits: bool,
    witness: Option<Vec<usize>>,
    note: Option<String>,
}

/// Annihilator rule for a local ring that is not a field.
fn local_rule(ring: &Ring) -> Rule {
    let z = ring.zero_divisors_nonzero();
    if z.len() + 1 >= 3 {
        for &x in &z {
            let ann = ring.annihilator(x);
            if ann.len() == 2 {
                let y = ann[1];
                return Rule {
                    id: "local-ann2",
                    admits: true,
                    witness: Some(sorted(vec![x, y])),
                    note: Some(format!(
                        "ann({}) = {{0, {}}}",
                        ring.element_name(x),
                        ring.element_name(y)
                    )),
                };
            }
        }
    }
    if z.len() == 2 && ring.mul(z[0], z[1]) == 0 {
        return Rule {
            id: "local-ann2",
            admits: true,
            witness: Some(z),
            note: Some("the graph is a single edge".into()),
        };
    }
    Rule {
        id: "local-ann2",
        admits: false,
        witness: None,
        note: None,
    }
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

/// Rule over an ordered factor list; `host` is the product ring when it is
/// available and indexed by exactly these factors.
fn product_rule(factors: &[Ring], host: Option<&Ring>) -> (Rule, Vec<String>) {
    let is_field: Vec<bool> = factors.iter().map(|f| f.is_field()).collect();
    let m = is_field.iter().filter(|&&f| !f).count();
    let n = factors.len() - m;
    let at = |parts: &[usize]| host.and_then(|h| h.from_components(parts));
    let mut findings = Vec::new();
    let rule = match (m, n) {
        (0, 1) => Rule {
            id: "field-empty-graph",
            admits: true,
            witness: Some(Vec::new()),
            note: Some("a field has no nonzero zero-divisors".into()),
        },
        (0, k) => {
            let witness = (k == 2).then(|| {
                let a = at(&[factors[0].one(), 0]);
                let b = at(&[0, factors[1].one()]);
                a.zip(b).map(|(a, b)| sorted(vec![a, b]))
            });
            Rule {
                id: "reduced-two-fields",
                admits: k == 2,
                witness: witness.flatten(),
                note: Some(format!("{k} field factors")),
            }
        }
        (1, 0) => local_rule(&factors[0]),
        (1, 1) => {
            let li = is_field.iter().position(|&f| !f).expect("one local factor");
            let fi = 1 - li;
            let zl = factors[li].zero_divisors_nonzero();
            let admits = zl.len() == 1;
            // the bound of two, as printed, also accepts |Z*| = 2
            if (zl.len() <= 2) != admits {
                findings.push(FINDING_LOCAL_TIMES_FIELD.to_string());
            }
            let witness = admits.then(|| {
                let mut a = [0, 0];
                a[li] = zl[0];
                let mut b = [0, 0];
                b[fi] = factors[fi].one();
                at(&a).zip(at(&b)).map(|(a, b)| sorted(vec![a, b]))
            });
            Rule {
                id: "mixed-structure",
                admits,
                witness: witness.flatten(),
                note: Some(format!(
                    "local factor has {} nonzero zero-divisor(s)",
                    zl.len()
                )),
            }
        }
        (m, n) => Rule {
            id: "mixed-structure",
            admits: false,
            witness: None,
            note: Some(format!("{m} local and {n} field factors")),
        },
    };
    (rule, findings)
}

/// Runs the searches next to the structural rules and collects the verdict.
fn assemble(
    host: &Ring,
    z: Option<&ZdGraph>,
    rules: Vec<Rule>,
    findings: Vec<String>,
    limits: &Limits,
) -> RingVerdict {
    let mut deciders = Vec::new();
    let mut discrepancies = Vec::new();
    for r in &rules {
        let witness = r.witness.as_ref().map(|xs| {
            xs.iter().map(|&x| host.element_name(x)).collect::<Vec<_>>()
        });
        if let (Some(z), Some(xs)) = (z, &r.witness) {
            let ok = z
                .code_of_elements(xs)
                .is_some_and(|c| tpc::is_total_perfect_code(z.graph(), &c));
            if !ok {
                discrepancies.push(format!("{}: witness {:?} is not a code", r.id, witness));
            }
        }
        deciders.push(DeciderResult {
            id: r.id.to_string(),
            admits: r.admits,
            witness,
            note: r.note.clone(),
        });
    }

    // the search answer wins; the exact search when it ran, else the pair search
    let mut oracle: Option<Option<CodeSet>> = None;
    if let Some(z) = z {
        // the empty graph has the empty code, which no edge can represent
        let pair = if z.n() == 0 {
            Some(CodeSet::empty())
        } else {
            pair_codes(z.graph()).next()
        };
        deciders.push(DeciderResult {
            id: "pair-search".into(),
            admits: pair.is_some(),
            witness: pair.as_ref().map(|c| z.element_names(c)),
            note: None,
        });
        oracle = Some(pair);
        if z.n() <= limits.search_vertex_bound {
            let exact = tpc::find_tpc(z.graph());
            if let Some(c) = exact.as_ref().filter(|c| z.n() > 0 && c.len() != 2) {
                discrepancies.push(format!("exact-search: code of size {}", c.len()));
            }
            deciders.push(DeciderResult {
                id: "exact-search".into(),
                admits: exact.is_some(),
                witness: exact.as_ref().map(|c| z.element_names(c)),
                note: None,
            });
            oracle = Some(exact);
        }
    }

    let admits = match &oracle {
        Some(o) => o.is_some(),
        None => rules.first().is_some_and(|r| r.admits),
    };
    for d in &deciders {
        if d.admits != admits {
            let said = if d.admits { "admits" } else { "does not admit" };
            discrepancies.push(format!("{} says {said}", d.id));
        }
    }
    let code = oracle.clone().flatten();
    let witness = match (&code, z) {
        (Some(c), Some(z)) => Some(z.element_names(c)),
        _ => rules
            .first()
            .filter(|r| r.admits)
            .and_then(|r| r.witness.as_ref())
            .map(|xs| xs.iter().map(|&x| host.element_name(x)).collect()),
    };
    RingVerdict {
        ring: host.name().to_string(),
        admits,
        witness,
        deciders,
        cross_checked: z.is_some(),
        discrepancies,
        known_findings: findings,
        code,
    }
}

/// Decider for a local ring that is not a field: the annihilator rule, the
/// degree-one rule, the pair search and the exact search.
pub fn local_decider(ring: &Ring, limits: &Limits) -> Result<RingVerdict> {
    if !ring.is_local() || ring.is_field() {
        return Err(Error::Precondition(format!(
            "{} is not a local ring that is not a field",
            ring.name()
        )));
    }
    let z = ZdGraph::new(ring);
    let ones = z.degree_one_vertices();
    let degree_one = Rule {
        id: "degree-one",
        admits: !ones.is_empty(),
        witness: ones.first().map(|&v| {
            let u = z.graph().neighbors(v)[0];
            sorted(vec![z.element(v), z.element(u)])
        }),
        note: None,
    };
    Ok(assemble(ring, Some(&z), vec![local_rule(ring), degree_one], Vec::new(), limits))
}

/// Decider for a product of fields.
pub fn reduced_decider(fields: &[Ring], limits: &Limits) -> Result<RingVerdict> {
    if let Some(f) = fields.iter().find(|f| !f.is_field()) {
        return Err(Error::Precondition(format!(
            "{} is not a field; use the mixed decider",
            f.name()
        )));
    }
    if fields.len() < 2 {
        return Err(Error::Precondition("need at least two field factors".into()));
    }
    decide_factors(fields, limits)
}

/// Decider for a product of local non-field rings and fields, locals first.
pub fn mixed_decider(locals: &[Ring], fields: &[Ring], limits: &Limits) -> Result<RingVerdict> {
    if let Some(r) = locals.iter().find(|r| !r.is_local() || r.is_field()) {
        return Err(Error::Precondition(format!(
            "{} is not a local ring that is not a field",
            r.name()
        )));
    }
    if let Some(f) = fields.iter().find(|f| !f.is_field()) {
        return Err(Error::Precondition(format!("{} is not a field", f.name())));
    }
    if locals.is_empty() && fields.is_empty() {
        return Err(Error::Precondition("no factors".into()));
    }
    if locals.len() == 1 && fields.is_empty() {
        return local_decider(&locals[0], limits);
    }
    let all: Vec<Ring> = locals.iter().chain(fields).cloned().collect();
    decide_factors(&all, limits)
}

/// Builds the product when it fits under the cap; otherwise the structural
/// rule answers alone and the verdict is not cross-checked.
fn decide_factors(factors: &[Ring], limits: &Limits) -> Result<RingVerdict> {
    let order: u128 = factors.iter().map(|f| f.order() as u128).product();
    if order <= limits.ring_order_cap as u128 {
        let host = RingBuilder::with_cap(limits.ring_order_cap).product(factors)?;
        let z = ZdGraph::new(&host);
        let (rule, findings) = product_rule(factors, Some(&host));
        return Ok(assemble(&host, Some(&z), vec![rule], findings, limits));
    }
    let (rule, findings) = product_rule(factors, None);
    let name = factors.iter().map(|f| f.name()).collect::<Vec<_>>().join(" x ");
    Ok(RingVerdict {
        ring: name,
        admits: rule.admits,
        witness: None,
        deciders: vec![DeciderResult {
            id: rule.id.into(),
            admits: rule.admits,
            witness: None,
            note: rule.note,
        }],
        cross_checked: false,
        discrepancies: Vec::new(),
        known_findings: findings,
        code: None,
    })
}

/// Classifies `ring` by its local factors and runs the matching decider on
/// `Γ(ring)` itself.
pub fn decide_ring(ring: &Ring, limits: &Limits) -> Result<RingVerdict> {
    let d = decompose::decompose(ring);
    if d.local_count() == 1 && d.field_count() == 0 {
        return local_decider(ring, limits);
    }
    let factors = decompose::local_factors(ring);
    // witnesses can be placed only when the ring is indexed by these factors
    let indexed = ring
        .factors()
        .is_some_and(|fs| fs.len() == factors.len() && fs.iter().zip(&factors).all(|(a, b)| std::sync::Arc::ptr_eq(a, b)));
    let z = ZdGraph::new(ring);
    let (rule, findings) = product_rule(&factors, indexed.then_some(ring));
    Ok(assemble(ring, Some(&z), vec![rule], findings, limits))
}
