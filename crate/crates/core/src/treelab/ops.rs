//! Growing trees that keep a total perfect code.
//!
//! Every tree in the family starts as a path `P_n` (`n >= 2`, `n mod 4 != 1`)
//! and grows by four operations applied at a vertex `v` lying in some code `C`:
//!
//! * `A1`: hang a new path `P_n` from `v` by one of its ends.
//! * `A2`: add a pendant vertex at `v`.
//! * `A3`: as `A1`, but `v` must not be `C`-quasi-isolated.
//! * `A4`: hang `P_n` from `v` by its vertex at distance `k` from an end;
//!   `v` must not be `C`-quasi-isolated.
//!
//! The admissible path lengths come in two readings; see [`Reading`].

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::is_quasi_isolated;
use crate::error::{Error, Result};
use crate::graph::{self, algo, CodeSet, Graph};
use crate::tpc::{self, is_total_perfect_code};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Op {
    A1,
    A2,
    A3,
    A4,
}

/// Which path lengths the hanging-path operations accept.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reading {
    /// `A1`/`A3`: `n >= 5`, `n mod 4 != 2`. `A4`: `n` odd, `n mod 8 != 3`,
    /// any `1 <= k <= n - 2`. Lets through lengths that break the code,
    /// e.g. `n = 7` on `A1`.
    AsWritten,
    /// `A1`/`A3`: `n >= 5`, `n mod 4` in {0, 1}. `A4`: `n >= 7`,
    /// `n mod 8` in {1, 7}, `k = (n - 1) / 2`. Exactly the lengths for which
    /// the code forced along the new path closes up at its far end(s).
    #[default]
    Corrected,
}

impl Reading {
    pub fn hanging_len_ok(self, n: usize) -> bool {
        n >= 5
            && match self {
                Reading::AsWritten => n % 4 != 2,
                Reading::Corrected => matches!(n % 4, 0 | 1),
            }
    }

    pub fn middle_ok(self, n: usize, k: usize) -> bool {
        match self {
            Reading::AsWritten => n % 2 == 1 && n % 8 != 3 && k >= 1 && k + 2 <= n,
            Reading::Corrected => n >= 7 && matches!(n % 8, 1 | 7) && 2 * k + 1 == n,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeBuildStep {
    pub op: Op,
    /// Attachment vertex in the current tree (0-based).
    pub at: usize,
    /// Length of the new path (`A1`, `A3`, `A4`).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub len: Option<usize>,
    /// Distance of the joined path vertex from the path's first end (`A4`).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
}

impl TreeBuildStep {
    pub fn pendant(at: usize) -> Self {
        TreeBuildStep {
            op: Op::A2,
            at,
            len: None,
            k: None,
        }
    }

    pub fn hang(op: Op, at: usize, len: usize) -> Self {
        TreeBuildStep {
            op,
            at,
            len: Some(len),
            k: None,
        }
    }

    pub fn middle(at: usize, len: usize, k: usize) -> Self {
        TreeBuildStep {
            op: Op::A4,
            at,
            len: Some(len),
            k: Some(k),
        }
    }

    /// Vertices this step adds.
    pub fn added(&self) -> usize {
        match self.op {
            Op::A2 => 1,
            _ => self.len.unwrap_or(0),
        }
    }
}

/// Initial path length plus steps; replayable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuildTrace {
    pub initial: usize,
    #[serde(default)]
    pub steps: Vec<TreeBuildStep>,
}

#[derive(Debug, Clone)]
pub struct BuiltTree {
    pub trace: BuildTrace,
    pub tree: Graph,
    pub code: CodeSet,
}

fn precondition<T>(msg: String) -> Result<T> {
    Err(Error::Precondition(msg))
}

/// Applies one step to `t`, given the code `code` that `step.at` belongs to.
pub fn apply_step(t: &Graph, code: &CodeSet, step: &TreeBuildStep, reading: Reading) -> Result<Graph> {
    if !algo::is_tree(t) {
        return Err(Error::NotATree("growth operations need a tree".into()));
    }
    let v = step.at;
    if v >= t.n() {
        return precondition(format!("attachment vertex {v} outside 0..{}", t.n()));
    }
    if !is_total_perfect_code(t, code) {
        return precondition("the supplied set is not a total perfect code".into());
    }
    if !code.contains(v) {
        return precondition(format!("v{} is not in the supplied code", v + 1));
    }
    let base = t.n();
    let mut edges = t.edges().to_vec();
    let needs_free = matches!(step.op, Op::A3 | Op::A4);
    if needs_free && is_quasi_isolated(t, code, v) {
        return precondition(format!("v{} is quasi-isolated with respect to the code", v + 1));
    }
    let len = match step.op {
        Op::A2 => 1,
        _ => step
            .len
            .ok_or_else(|| Error::Precondition(format!("{:?} needs a path length", step.op)))?,
    };
    match step.op {
        Op::A2 => edges.push((v, base)),
        Op::A1 | Op::A3 => {
            if !reading.hanging_len_ok(len) {
                return precondition(format!(
                    "{:?} path length {len} is not admissible ({reading:?})",
                    step.op
                ));
            }
            edges.extend((1..len).map(|i| (base + i - 1, base + i)));
            edges.push((v, base));
        }
        Op::A4 => {
            let k = step
                .k
                .ok_or_else(|| Error::Precondition("A4 needs a support depth k".into()))?;
            if !reading.middle_ok(len, k) {
                return precondition(format!(
                    "A4 with path length {len} and depth {k} is not admissible ({reading:?})"
                ));
            }
            edges.extend((1..len).map(|i| (base + i - 1, base + i)));
            edges.push((v, base + k));
        }
    }
    Ok(Graph::build(base + len, edges))
}

/// The code the step forces on the new vertices, joined with `code`.
/// Valid whenever the step is admissible under [`Reading::Corrected`].
pub fn extend_code(t_order: usize, code: &CodeSet, step: &TreeBuildStep) -> CodeSet {
    let mut out = code.as_slice().to_vec();
    let base = t_order;
    match step.op {
        Op::A2 => {}
        Op::A1 | Op::A3 => {
            let len = step.len.unwrap_or(0);
            // path vertex j (1-based from the joined end)
            out.extend((1..=len).filter(|j| matches!(j % 4, 3 | 0)).map(|j| base + j - 1));
        }
        Op::A4 => {
            let len = step.len.unwrap_or(0);
            let k = step.k.unwrap_or(0);
            // distance d from the joined vertex along either side
            for idx in 0..len {
                let d = idx.abs_diff(k);
                if matches!(d % 4, 2 | 3) {
                    out.push(base + idx);
                }
            }
        }
    }
    CodeSet::new(out)
}

/// A code of `t` usable for `op` at `v`, if one exists.
///
/// Any code containing `v` serves `A1`/`A2`. For `A3`/`A4`, `v` is
/// `C`-quasi-isolated exactly when its partner in `C` is a leaf, so the leaf
/// neighbours of `v` are kept out.
pub fn code_for(t: &Graph, op: Op, v: usize) -> Result<Option<CodeSet>> {
    match op {
        Op::A1 | Op::A2 => tpc::tree_tpc_containing(t, v),
        Op::A3 | Op::A4 => {
            let leaves: Vec<usize> = t
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&u| t.degree(u) == 1)
                .collect();
            tpc::tree_tpc_constrained(t, &[v], &leaves)
        }
    }
}

/// Replays a trace, checking after every step that the tree keeps a code.
///
/// A step that breaks the code is reported as [`Error::Finding`] carrying the
/// trace up to and including that step.
pub fn generate_family(trace: &BuildTrace, reading: Reading) -> Result<BuiltTree> {
    let n0 = trace.initial;
    if n0 < 2 || n0 % 4 == 1 {
        return precondition(format!("initial path length {n0} must be >= 2 and not 1 mod 4"));
    }
    let mut tree = graph::path(n0)?;
    let mut code = tpc::path_code(n0)?;
    for (i, step) in trace.steps.iter().enumerate() {
        if step.at >= tree.n() {
            return precondition(format!(
                "step {}: attachment vertex {} outside 0..{}",
                i + 1,
                step.at,
                tree.n()
            ));
        }
        let Some(c) = code_for(&tree, step.op, step.at)? else {
            return precondition(format!(
                "step {}: no total perfect code of the current tree fits {:?} at v{}",
                i + 1,
                step.op,
                step.at + 1
            ));
        };
        let next = apply_step(&tree, &c, step, reading)
            .map_err(|e| Error::Precondition(format!("step {}: {e}", i + 1)))?;
        let extended = extend_code(tree.n(), &c, step);
        code = if is_total_perfect_code(&next, &extended) {
            extended
        } else {
            match tpc::tree_tpc(&next)? {
                Some(c) => c,
                None => {
                    let prefix = BuildTrace {
                        initial: n0,
                        steps: trace.steps[..=i].to_vec(),
                    };
                    return Err(Error::Finding(format!(
                        "tree lost its total perfect code: {}",
                        serde_json::to_string(&prefix)?
                    )));
                }
            }
        };
        tree = next;
    }
    Ok(BuiltTree {
        trace: trace.clone(),
        tree,
        code,
    })
}

/// A seeded random trace whose tree has at most `budget` vertices.
pub fn random_family(seed: u64, budget: usize, reading: Reading) -> Result<BuildTrace> {
    if budget < 2 {
        return precondition("budget must allow at least 2 vertices".into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let starts: Vec<usize> = (2..=budget.min(12)).filter(|n| n % 4 != 1).collect();
    let initial = *starts.choose(&mut rng).expect("2 is always admissible");
    let target = rng.random_range(initial..=budget);
    let mut tree = graph::path(initial)?;
    let mut steps = Vec::new();
    while tree.n() < target {
        let room = target - tree.n();
        let step = random_step(&mut rng, &tree, room, reading)?;
        let Some(step) = step else { break };
        let c = code_for(&tree, step.op, step.at)?.expect("chosen vertex fits the op");
        tree = apply_step(&tree, &c, &step, reading)?;
        steps.push(step);
    }
    Ok(BuildTrace { initial, steps })
}

fn random_step(
    rng: &mut ChaCha8Rng,
    tree: &Graph,
    room: usize,
    reading: Reading,
) -> Result<Option<TreeBuildStep>> {
    let hang_lens: Vec<usize> = (5..=room).filter(|&n| reading.hanging_len_ok(n)).collect();
    let mid: Vec<(usize, usize)> = (5..=room)
        .flat_map(|n| (1..n).map(move |k| (n, k)))
        .filter(|&(n, k)| reading.middle_ok(n, k))
        .collect();
    let mut ops = vec![Op::A2];
    if !hang_lens.is_empty() {
        ops.extend([Op::A1, Op::A3]);
    }
    if !mid.is_empty() {
        ops.push(Op::A4);
    }
    while !ops.is_empty() {
        let i = rng.random_range(0..ops.len());
        let op = ops.swap_remove(i);
        let mut fits = Vec::new();
        for v in 0..tree.n() {
            if code_for(tree, op, v)?.is_some() {
                fits.push(v);
            }
        }
        let Some(&at) = fits.choose(rng) else { continue };
        let step = match op {
            Op::A2 => TreeBuildStep::pendant(at),
            Op::A1 | Op::A3 => TreeBuildStep::hang(op, at, *hang_lens.choose(rng).unwrap()),
            Op::A4 => {
                let &(n, k) = mid.choose(rng).unwrap();
                TreeBuildStep::middle(at, n, k)
            }
        };
        return Ok(Some(step));
    }
    Ok(None)
}

/// Residue class of the base path length for [`corona_family`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoronaKind {
    ThreeMod4,
    ZeroMod4,
    TwoMod4,
}

impl CoronaKind {
    pub fn of(len: usize) -> Option<CoronaKind> {
        match len % 4 {
            3 => Some(CoronaKind::ThreeMod4),
            0 => Some(CoronaKind::ZeroMod4),
            2 => Some(CoronaKind::TwoMod4),
            _ => None,
        }
    }
}

/// `P_len` with one pendant per path vertex.
pub fn corona_family(kind: CoronaKind, len: usize) -> Result<Graph> {
    if len < 3 || CoronaKind::of(len) != Some(kind) {
        return precondition(format!("path length {len} does not fit {kind:?} (need >= 3)"));
    }
    Ok(graph::corona(&graph::path(len)?, &graph::complete(1)?))
}

fn pendant_tree(base_len: usize, w: &[usize], pendants: usize) -> Result<(Graph, CodeSet)> {
    let mut edges: Vec<(usize, usize)> = (1..base_len).map(|i| (i - 1, i)).collect();
    for p in 0..pendants {
        edges.push((w[p % w.len()], base_len + p));
    }
    let g = Graph::build(base_len + pendants, edges);
    let code = CodeSet::new(w.to_vec());
    if !is_total_perfect_code(&g, &code) {
        return Err(Error::Finding(format!(
            "pendant tree on P_{base_len} with {pendants} pendants: {code} is not a code"
        )));
    }
    Ok((g, code))
}

/// `P_n` with `n = 2 mod 4`, W = {v1, v2, v5, v6, .., v_{n-1}, v_n} and
/// `2k + 2` pendants spread round-robin over W. W is a code of the result.
pub fn pendant_tree_spread(base_len: usize, k: usize) -> Result<(Graph, CodeSet)> {
    if base_len % 4 != 2 {
        return precondition(format!("base path length {base_len} must be 2 mod 4"));
    }
    let w: Vec<usize> = (1..=base_len).filter(|j| matches!(j % 4, 1 | 2)).map(|j| j - 1).collect();
    pendant_tree(base_len, &w, 2 * k + 2)
}

/// `P_{4n-1}` with W = {v2, v3, v6, v7, ..} and one pendant on each vertex of
/// W, `6n - 1` vertices in all. W is a code of the result.
pub fn pendant_tree_on_path_pairs(n: usize) -> Result<(Graph, CodeSet)> {
    if n == 0 {
        return precondition("n must be >= 1".into());
    }
    let base_len = 4 * n - 1;
    let w: Vec<usize> = (1..=base_len).filter(|j| matches!(j % 4, 2 | 3)).map(|j| j - 1).collect();
    pendant_tree(base_len, &w, w.len())
}
