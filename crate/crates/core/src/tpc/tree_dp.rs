//! Linear-time total perfect codes on trees.
//!
//! Root the tree at vertex 0. For vertex `v`, state `(i, c)` says whether `v`
//! is in the code (`i`) and how many of its children are (`c`, 0 or 1). The
//! parent must then supply the remaining `1 - c`, and every child `u` must sit
//! in a state `(_, 1 - i)`.

use crate::error::{Error, Result};
use crate::graph::{algo, CodeSet, Graph};

struct Rooted {
    order: Vec<usize>,
    children: Vec<Vec<usize>>,
}

fn root(t: &Graph) -> Result<Rooted> {
    if !algo::is_tree(t) {
        return Err(Error::NotATree(format!(
            "{} vertices, {} edges, connected: {}",
            t.n(),
            t.edge_count(),
            algo::is_connected(t)
        )));
    }
    let n = t.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut children = vec![Vec::new(); n];
    let mut stack = vec![0];
    parent[0] = 0;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &u in t.neighbors(v) {
            if parent[u] == usize::MAX {
                parent[u] = v;
                children[v].push(u);
                stack.push(u);
            }
        }
    }
    Ok(Rooted { order, children })
}

/// Some total perfect code of the tree `t`, if one exists.
pub fn tree_tpc(t: &Graph) -> Result<Option<CodeSet>> {
    solve(t, &[], &[])
}

/// A total perfect code of `t` that contains `v`, if one exists.
pub fn tree_tpc_containing(t: &Graph, v: usize) -> Result<Option<CodeSet>> {
    if v >= t.n() {
        return Err(Error::Precondition(format!("vertex {v} outside 0..{}", t.n())));
    }
    solve(t, &[v], &[])
}

/// A code containing all of `must_in` and none of `must_out`.
pub fn tree_tpc_constrained(
    t: &Graph,
    must_in: &[usize],
    must_out: &[usize],
) -> Result<Option<CodeSet>> {
    if let Some(v) = must_in.iter().chain(must_out).find(|&&v| v >= t.n()) {
        return Err(Error::Precondition(format!("vertex {v} outside 0..{}", t.n())));
    }
    solve(t, must_in, must_out)
}

fn solve(t: &Graph, must_in: &[usize], must_out: &[usize]) -> Result<Option<CodeSet>> {
    let rooted = root(t)?;
    let n = t.n();
    let mut allowed = vec![[true; 2]; n];
    for &v in must_in {
        allowed[v][0] = false;
    }
    for &v in must_out {
        allowed[v][1] = false;
    }
    // ok[v][i][c]
    let mut ok = vec![[[false; 2]; 2]; n];
    for &v in rooted.order.iter().rev() {
        for i in 0..2 {
            if !allowed[v][i] {
                continue;
            }
            let kids = &rooted.children[v];
            let can = |u: usize, j: usize| ok[u][j][1 - i];
            let missing_out = kids.iter().filter(|&&u| !can(u, 0)).count();
            let none_in = missing_out == 0;
            let one_in = match missing_out {
                0 => kids.iter().any(|&u| can(u, 1)),
                1 => kids.iter().any(|&u| !can(u, 0) && can(u, 1)),
                _ => false,
            };
            ok[v][i] = [none_in, one_in];
        }
    }
    // the root has no parent, so its children must supply its one neighbour
    let Some(i) = (0..2).rev().find(|&i| ok[0][i][1]) else {
        return Ok(None);
    };
    let mut code = Vec::new();
    let mut stack = vec![(0usize, i, 1usize)];
    while let Some((v, i, c)) = stack.pop() {
        if i == 1 {
            code.push(v);
        }
        let kids = &rooted.children[v];
        let can = |u: usize, j: usize| ok[u][j][1 - i];
        let chosen = if c == 1 {
            kids.iter()
                .copied()
                .find(|&u| !can(u, 0))
                .or_else(|| kids.iter().copied().find(|&u| can(u, 1)))
        } else {
            None
        };
        for &u in kids {
            let j = usize::from(Some(u) == chosen);
            stack.push((u, j, 1 - i));
        }
    }
    Ok(Some(CodeSet::new(code)))
}
