//! Traversals and structural queries.

use std::collections::VecDeque;

use super::{CodeSet, Graph};

/// BFS distances from `s`; `None` for unreachable vertices.
pub fn distances(g: &Graph, s: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n()];
    dist[s] = Some(0);
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        let d = dist[v].unwrap();
        for &u in g.neighbors(v) {
            if dist[u].is_none() {
                dist[u] = Some(d + 1);
                queue.push_back(u);
            }
        }
    }
    dist
}

/// Connected components, each sorted; components ordered by least vertex.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    comp.push(u);
                    stack.push(u);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    components(g).len() <= 1
}

/// Largest shortest-path distance; `None` when disconnected.
pub fn diameter(g: &Graph) -> Option<usize> {
    let mut best = 0;
    for s in 0..g.n() {
        for d in distances(g, s) {
            best = best.max(d?);
        }
    }
    Some(best)
}

pub fn is_tree(g: &Graph) -> bool {
    g.n() >= 1 && g.edge_count() + 1 == g.n() && is_connected(g)
}

/// Cut vertices by DFS low-link, per component.
pub fn articulation_points(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut root_children = 0;
        // (vertex, parent, next neighbour position)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(top) = stack.last_mut() {
            let (v, parent) = (top.0, top.1);
            if let Some(&u) = g.neighbors(v).get(top.2) {
                top.2 += 1;
                if disc[u] == usize::MAX {
                    disc[u] = timer;
                    low[u] = timer;
                    timer += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((u, v, 0));
                } else if u != parent {
                    low[v] = low[v].min(disc[u]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if parent != root && low[v] >= disc[parent] {
                        is_cut[parent] = true;
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    (0..n).filter(|&v| is_cut[v]).collect()
}

/// Every member of `code` has exactly one neighbour inside `code`.
pub fn is_matching(g: &Graph, code: &CodeSet) -> bool {
    let counts = g.code_counts(code);
    code.iter().all(|v| counts[v] == 1)
}

/// `v` is a leaf (degree one).
pub fn leaves(g: &Graph) -> Vec<usize> {
    (0..g.n()).filter(|&v| g.degree(v) == 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, fig1, path, star, Graph};
    use proptest::prelude::*;

    fn brute_cut_vertices(g: &Graph) -> Vec<usize> {
        let base = components(g).len();
        (0..g.n())
            .filter(|&v| {
                let keep: Vec<usize> = (0..g.n()).filter(|&u| u != v).collect();
                components(&g.induced(&keep)).len() > base
            })
            .collect()
    }

    fn brute_diameter(g: &Graph) -> Option<usize> {
        // Floyd-Warshall
        let n = g.n();
        let inf = usize::MAX / 4;
        let mut d = vec![vec![inf; n]; n];
        for v in 0..n {
            d[v][v] = 0;
            for &u in g.neighbors(v) {
                d[v][u] = 1;
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if d[i][k] + d[k][j] < d[i][j] {
                        d[i][j] = d[i][k] + d[k][j];
                    }
                }
            }
        }
        let m = d.iter().flatten().copied().max().unwrap_or(0);
        (m < inf).then_some(m)
    }

    #[test]
    fn small_examples() {
        assert_eq!(articulation_points(&path(3).unwrap()), vec![1]);
        assert!(articulation_points(&cycle(6).unwrap()).is_empty());
        assert_eq!(articulation_points(&star(4).unwrap()), vec![0]);
        assert_eq!(diameter(&path(4).unwrap()), Some(3));
        assert_eq!(diameter(&complete(5).unwrap()), Some(1));
        let two = Graph::new(2, []).unwrap();
        assert_eq!(diameter(&two), None);
        assert_eq!(diameter(&Graph::new(0, []).unwrap()), Some(0));
        assert!(is_tree(&path(5).unwrap()));
        assert!(!is_tree(&cycle(5).unwrap()));
        assert!(!is_tree(&Graph::new(3, [(0, 1)]).unwrap()));
    }

    #[test]
    fn matchings() {
        let p4 = path(4).unwrap();
        assert!(is_matching(&p4, &CodeSet::one_based(&[2, 3])));
        assert!(!is_matching(&complete(3).unwrap(), &CodeSet::new(vec![0, 1, 2])));
        assert!(is_matching(&fig1(), &CodeSet::empty()));
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..=12).prop_flat_map(|n| {
            prop::collection::vec(prop::bool::weighted(0.25), n * (n - 1) / 2).prop_map(move |bits| {
                let pairs = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
                let edges: Vec<_> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
                Graph::new(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn cut_vertices_match_removal(g in arb_graph()) {
            prop_assert_eq!(articulation_points(&g), brute_cut_vertices(&g));
        }

        #[test]
        fn diameter_matches_all_pairs(g in arb_graph()) {
            prop_assert_eq!(diameter(&g), brute_diameter(&g));
        }
    }
}
