//! Simple undirected graphs on dense vertex indices.

pub mod algo;
pub mod io;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Graphs above this many vertices also carry per-vertex neighbour bitsets.
pub const BITSET_THRESHOLD: usize = 64;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    bits: Option<Vec<Vec<u64>>>,
    labels: BTreeMap<usize, String>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

/// A set of vertices, kept sorted and duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CodeSet(Vec<usize>);

impl CodeSet {
    pub fn new(mut v: Vec<usize>) -> Self {
        v.sort_unstable();
        v.dedup();
        CodeSet(v)
    }

    pub fn empty() -> Self {
        CodeSet(Vec::new())
    }

    /// From 1-based vertex names, as in `{v1, v2}`.
    pub fn one_based(v: &[usize]) -> Self {
        CodeSet::new(v.iter().map(|&x| x - 1).collect())
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for v in self.iter() {
            m[v] = true;
        }
        m
    }
}

impl fmt::Display for CodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "v{}", v + 1)?;
        }
        f.write_str("}")
    }
}

impl FromIterator<usize> for CodeSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        CodeSet::new(iter.into_iter().collect())
    }
}

impl Graph {
    /// Validates the edge list: endpoints in range, no loops, no repeats.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut list: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::Graph(format!("edge ({a},{b}) outside 0..{n}")));
            }
            if a == b {
                return Err(Error::Graph(format!("self-loop at {a}")));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        let before = list.len();
        list.dedup();
        if list.len() != before {
            return Err(Error::Graph("parallel edges".into()));
        }
        Ok(Self::from_sorted(n, list))
    }

    /// For generators that produce valid edges by construction.
    pub(crate) fn build(n: usize, edges: Vec<(usize, usize)>) -> Graph {
        let mut list: Vec<(usize, usize)> =
            edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        list.sort_unstable();
        list.dedup();
        debug_assert!(list.iter().all(|&(a, b)| a != b && b < n));
        Self::from_sorted(n, list)
    }

    fn from_sorted(n: usize, edges: Vec<(usize, usize)>) -> Graph {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let bits = (n > BITSET_THRESHOLD).then(|| {
            let words = n.div_ceil(64);
            adj.iter()
                .map(|ns| {
                    let mut w = vec![0u64; words];
                    for &u in ns {
                        w[u / 64] |= 1 << (u % 64);
                    }
                    w
                })
                .collect()
        });
        Graph {
            n,
            edges,
            adj,
            bits,
            labels: BTreeMap::new(),
        }
    }

    pub fn with_labels(mut self, labels: BTreeMap<usize, String>) -> Graph {
        self.labels = labels.into_iter().filter(|(k, _)| *k < self.n).collect();
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    pub fn labels(&self) -> &BTreeMap<usize, String> {
        &self.labels
    }

    pub fn label(&self, v: usize) -> String {
        self.labels
            .get(&v)
            .cloned()
            .unwrap_or_else(|| format!("v{}", v + 1))
    }

    /// `t` when every vertex has degree `t`.
    pub fn is_regular(&self) -> Option<usize> {
        let t = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|a| a.len() == t).then_some(t)
    }

    /// `|N(v) ∩ C|` for every vertex.
    pub fn code_counts(&self, code: &CodeSet) -> Vec<usize> {
        match &self.bits {
            Some(bits) => {
                let mut cw = vec![0u64; self.n.div_ceil(64)];
                for v in code.iter() {
                    cw[v / 64] |= 1 << (v % 64);
                }
                bits.iter()
                    .map(|row| {
                        row.iter()
                            .zip(&cw)
                            .map(|(a, b)| (a & b).count_ones() as usize)
                            .sum()
                    })
                    .collect()
            }
            None => {
                let mask = code.mask(self.n);
                self.adj
                    .iter()
                    .map(|ns| ns.iter().filter(|&&u| mask[u]).count())
                    .collect()
            }
        }
    }

    pub fn uses_bitsets(&self) -> bool {
        self.bits.is_some()
    }

    /// Induced subgraph on `keep` (renumbered in the given order).
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| pos[a] != usize::MAX && pos[b] != usize::MAX)
            .map(|&(a, b)| (pos[a], pos[b]))
            .collect();
        Graph::build(keep.len(), edges)
    }

    /// Adds a new vertex joined to `to`; returns its index.
    pub fn with_pendant(&self, to: usize) -> (Graph, usize) {
        let mut edges = self.edges.clone();
        edges.push((to, self.n));
        let g = Graph::build(self.n + 1, edges).with_labels(self.labels.clone());
        (g, self.n)
    }
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Graph("path needs n >= 1".into()));
    }
    Ok(Graph::build(n, (1..n).map(|i| (i - 1, i)).collect()))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Graph("cycle needs n >= 3".into()));
    }
    let mut e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    e.push((0, n - 1));
    Ok(Graph::build(n, e))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Graph("complete graph needs n >= 1".into()));
    }
    let e = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    Ok(Graph::build(n, e))
}

/// Parts are `0..m` and `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    if m == 0 || n == 0 {
        return Err(Error::Graph("complete bipartite graph needs m, n >= 1".into()));
    }
    let e = (0..m).flat_map(|a| (m..m + n).map(move |b| (a, b))).collect();
    Ok(Graph::build(m + n, e))
}

/// K_{1,n}; the centre is vertex 0.
pub fn star(n: usize) -> Result<Graph> {
    complete_bipartite(1, n)
}

/// Copy of `g` followed by `|V(g)|` copies of `h`; copy `i` is joined to vertex `i`.
pub fn corona(g: &Graph, h: &Graph) -> Graph {
    let (gn, hn) = (g.n(), h.n());
    let mut edges = g.edges().to_vec();
    for i in 0..gn {
        let base = gn + i * hn;
        edges.extend(h.edges().iter().map(|&(a, b)| (base + a, base + b)));
        edges.extend((0..hn).map(|j| (i, base + j)));
    }
    Graph::build(gn + gn * hn, edges)
}

/// Non-regular order-8 graph with the code {v1, v2, v7, v8}.
pub fn fig1() -> Graph {
    let one_based = [
        (1, 2),
        (1, 4),
        (2, 3),
        (3, 4),
        (3, 5),
        (4, 6),
        (5, 6),
        (5, 7),
        (6, 8),
        (7, 8),
    ];
    Graph::build(8, one_based.iter().map(|&(a, b)| (a - 1, b - 1)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_sizes() {
        for n in 1..12 {
            assert_eq!(path(n).unwrap().edge_count(), n - 1);
            assert_eq!(complete(n).unwrap().edge_count(), n * (n - 1) / 2);
            for m in 1..6 {
                assert_eq!(complete_bipartite(m, n).unwrap().edge_count(), m * n);
            }
        }
        for n in 3..12 {
            assert_eq!(cycle(n).unwrap().edge_count(), n);
        }
        assert_eq!(path(4).unwrap().edges(), &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(star(3).unwrap(), complete_bipartite(1, 3).unwrap());
        assert!(path(0).is_err() && cycle(2).is_err() && complete_bipartite(0, 2).is_err());
    }

    #[test]
    fn corona_sizes() {
        let graphs = [path(3).unwrap(), cycle(5).unwrap(), complete(4).unwrap(), star(2).unwrap()];
        for g in &graphs {
            for h in &graphs {
                let c = corona(g, h);
                assert_eq!(c.n(), g.n() * (1 + h.n()));
                assert_eq!(c.edge_count(), g.edge_count() + g.n() * (h.edge_count() + h.n()));
            }
        }
        let k1 = complete(1).unwrap();
        assert_eq!(corona(&k1, &k1), path(2).unwrap());
        let p4_like = corona(&path(2).unwrap(), &k1);
        assert_eq!(p4_like.edges(), &[(0, 1), (0, 2), (1, 3)]);
        let cat = corona(&path(3).unwrap(), &k1);
        assert_eq!(cat.n(), 6);
        assert!((0..3).all(|v| cat.degree(v) >= 2));
    }

    #[test]
    fn fig1_shape() {
        let g = fig1();
        let degs: Vec<usize> = (0..8).map(|v| g.degree(v)).collect();
        assert_eq!(degs, vec![2, 2, 3, 3, 3, 3, 2, 2]);
        assert_eq!(g.is_regular(), None);
    }

    #[test]
    fn regularity() {
        assert_eq!(cycle(5).unwrap().is_regular(), Some(2));
        assert_eq!(path(3).unwrap().degree(1), 2);
        assert_eq!(complete(4).unwrap().is_regular(), Some(3));
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::new(3, [(0, 0)]).is_err());
        assert!(Graph::new(3, [(0, 3)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(0, []).is_ok());
    }

    #[test]
    fn bitset_counts_match_plain_counts() {
        let g = cycle(130).unwrap();
        assert!(g.uses_bitsets());
        let code = CodeSet::new((0..130).filter(|v| v % 4 < 2).collect());
        let plain: Vec<usize> = (0..130)
            .map(|v| g.neighbors(v).iter().filter(|&&u| code.contains(u)).count())
            .collect();
        assert_eq!(g.code_counts(&code), plain);
    }

    #[test]
    fn code_set_display() {
        let c = CodeSet::one_based(&[2, 1]);
        assert_eq!(c.as_slice(), &[0, 1]);
        assert_eq!(c.to_string(), "{v1,v2}");
    }
}
