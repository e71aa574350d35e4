//! Labelled trees from Prüfer sequences, and canonical forms of unlabelled trees.

use std::collections::BinaryHeap;
use std::cmp::Reverse;

use rand::Rng;

use crate::graph::{algo, Graph};

/// Decodes a Prüfer sequence of length `n - 2` over `0..n`.
pub fn decode(seq: &[usize], n: usize) -> Graph {
    assert!(n >= 2 && seq.len() == n - 2 && seq.iter().all(|&x| x < n));
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let Reverse(leaf) = leaves.pop().expect("a leaf always remains");
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.push(Reverse(x));
        }
    }
    let Reverse(a) = leaves.pop().unwrap();
    let Reverse(b) = leaves.pop().unwrap();
    edges.push((a, b));
    Graph::build(n, edges)
}

/// Uniformly random labelled tree on `n` vertices.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    match n {
        0 => Graph::build(0, Vec::new()),
        1 => Graph::build(1, Vec::new()),
        _ => {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
            decode(&seq, n)
        }
    }
}

/// All `n^(n-2)` sequences, visited in counting order.
pub fn for_each_sequence(n: usize, f: impl FnMut(&[usize])) {
    for_each_sequence_with_prefix(n, &[], f);
}

/// All sequences of length `n - 2` over `0..n` that start with `prefix`.
pub fn for_each_sequence_with_prefix(n: usize, prefix: &[usize], mut f: impl FnMut(&[usize])) {
    if n < 2 || prefix.len() > n - 2 {
        return;
    }
    let len = n - 2;
    let fixed = prefix.len();
    let mut seq = vec![0usize; len];
    seq[..fixed].copy_from_slice(prefix);
    loop {
        f(&seq);
        let mut i = len;
        loop {
            if i == fixed {
                return;
            }
            i -= 1;
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
        }
    }
}

/// Canonical string of an unlabelled tree (AHU encoding rooted at the centre).
pub fn canonical_form(t: &Graph) -> String {
    debug_assert!(algo::is_tree(t));
    centers(t)
        .into_iter()
        .map(|c| encode(t, c, usize::MAX))
        .min()
        .unwrap_or_default()
}

fn encode(t: &Graph, v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = t
        .neighbors(v)
        .iter()
        .filter(|&&u| u != parent)
        .map(|&u| encode(t, u, v))
        .collect();
    kids.sort();
    let mut s = String::from("(");
    for k in kids {
        s.push_str(&k);
    }
    s.push(')');
    s
}

/// One or two centre vertices, found by peeling leaves.
pub fn centers(t: &Graph) -> Vec<usize> {
    let n = t.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &u in t.neighbors(v) {
                if degree[u] > 1 {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
            degree[v] = 0;
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}
