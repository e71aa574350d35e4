//! Exact search for total perfect codes.
//!
//! Depth-first over vertices in index order, trying "in the code" before "out".
//! Each vertex tracks how many neighbours are in the code (`cnt`) and how many
//! are still undecided (`avail`). A vertex fails when `cnt > 1` or when
//! `cnt == 0` with nothing left to choose; `cnt == 1` pushes the remaining
//! neighbours out and `cnt == 0, avail == 1` pulls the last one in.
//!
//! Two distinct codes are never nested, so the first code reached by this
//! order is the lexicographically least one and enumeration comes out sorted.

use crate::error::{Error, Result};
use crate::graph::{algo, CodeSet, Graph};
use crate::limits::DEFAULT_ENUMERATION_BOUND;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Unknown,
    In,
    Out,
}

struct Search<'g> {
    g: &'g Graph,
    status: Vec<Status>,
    cnt: Vec<u32>,
    avail: Vec<u32>,
    trail: Vec<usize>,
    queue: Vec<usize>,
    nodes: u64,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.n();
        Search {
            g,
            status: vec![Status::Unknown; n],
            cnt: vec![0; n],
            avail: (0..n).map(|v| g.degree(v) as u32).collect(),
            trail: Vec::new(),
            queue: Vec::new(),
            nodes: 0,
        }
    }

    fn set(&mut self, v: usize, s: Status) -> bool {
        match self.status[v] {
            Status::Unknown => {}
            cur => return cur == s,
        }
        self.status[v] = s;
        self.trail.push(v);
        for &u in self.g.neighbors(v) {
            self.avail[u] -= 1;
            if s == Status::In {
                self.cnt[u] += 1;
            }
            self.queue.push(u);
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let v = self.trail.pop().unwrap();
            let was_in = self.status[v] == Status::In;
            for &u in self.g.neighbors(v) {
                self.avail[u] += 1;
                if was_in {
                    self.cnt[u] -= 1;
                }
            }
            self.status[v] = Status::Unknown;
        }
    }

    fn propagate(&mut self) -> bool {
        while let Some(u) = self.queue.pop() {
            match (self.cnt[u], self.avail[u]) {
                (c, _) if c > 1 => return self.fail(),
                (0, 0) => return self.fail(),
                (1, a) if a > 0 => {
                    for i in 0..self.g.degree(u) {
                        let w = self.g.neighbors(u)[i];
                        if self.status[w] == Status::Unknown {
                            self.set(w, Status::Out);
                        }
                    }
                }
                (0, 1) => {
                    let w = *self
                        .g
                        .neighbors(u)
                        .iter()
                        .find(|&&w| self.status[w] == Status::Unknown)
                        .expect("avail counts undecided neighbours");
                    self.set(w, Status::In);
                }
                _ => {}
            }
        }
        true
    }

    fn fail(&mut self) -> bool {
        self.queue.clear();
        false
    }

    /// Calls `found` on every code in lexicographic order until it returns false.
    fn run(&mut self, found: &mut dyn FnMut(CodeSet) -> bool) {
        self.queue.extend(0..self.g.n());
        if self.propagate() {
            self.dfs(0, found);
        }
    }

    /// Returns false when the caller asked to stop.
    fn dfs(&mut self, from: usize, found: &mut dyn FnMut(CodeSet) -> bool) -> bool {
        self.nodes += 1;
        let Some(v) = (from..self.g.n()).find(|&v| self.status[v] == Status::Unknown) else {
            let code: CodeSet = (0..self.g.n())
                .filter(|&v| self.status[v] == Status::In)
                .collect();
            debug_assert!(super::is_total_perfect_code(self.g, &code));
            return found(code);
        };
        for s in [Status::In, Status::Out] {
            let mark = self.trail.len();
            let ok = self.set(v, s) && self.propagate();
            if ok && !self.dfs(v + 1, found) {
                self.undo_to(mark);
                return false;
            }
            self.undo_to(mark);
        }
        true
    }
}

/// Lexicographically least total perfect code, if any.
///
/// Components are searched independently; the union of their least codes is
/// the least code of the whole graph.
pub fn find_tpc(g: &Graph) -> Option<CodeSet> {
    let comps = algo::components(g);
    if comps.len() <= 1 {
        return first_code(g);
    }
    let mut all = Vec::new();
    for comp in comps {
        let sub = g.induced(&comp);
        let code = first_code(&sub)?;
        all.extend(code.iter().map(|i| comp[i]));
    }
    Some(CodeSet::new(all))
}

fn first_code(g: &Graph) -> Option<CodeSet> {
    let mut out = None;
    Search::new(g).run(&mut |c| {
        out = Some(c);
        false
    });
    out
}

/// Every total perfect code, sorted, for graphs within the default bound.
pub fn enumerate_tpcs(g: &Graph) -> Result<Vec<CodeSet>> {
    enumerate_tpcs_bounded(g, DEFAULT_ENUMERATION_BOUND)
}

pub fn enumerate_tpcs_bounded(g: &Graph, bound: usize) -> Result<Vec<CodeSet>> {
    if g.n() > bound {
        return Err(Error::EnumerationBound { n: g.n(), bound });
    }
    let mut out = Vec::new();
    Search::new(g).run(&mut |c| {
        out.push(c);
        true
    });
    Ok(out)
}

/// Search-tree size for a full enumeration; used by benches.
pub fn search_nodes(g: &Graph) -> u64 {
    let mut s = Search::new(g);
    s.run(&mut |_| true);
    s.nodes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, fig1, path};
    use crate::tpc::is_total_perfect_code;
    use proptest::prelude::*;

    /// Every subset, sorted lexicographically.
    fn brute(g: &Graph) -> Vec<CodeSet> {
        let n = g.n();
        let mut out: Vec<CodeSet> = (0u32..1 << n)
            .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect::<CodeSet>())
            .filter(|c| is_total_perfect_code(g, c))
            .collect();
        out.sort();
        out
    }

    #[test]
    fn small_cases() {
        assert_eq!(find_tpc(&path(5).unwrap()), None);
        assert_eq!(find_tpc(&path(4).unwrap()), Some(CodeSet::one_based(&[2, 3])));
        assert_eq!(find_tpc(&cycle(4).unwrap()), Some(CodeSet::one_based(&[1, 2])));
        assert_eq!(
            enumerate_tpcs(&path(2).unwrap()).unwrap(),
            vec![CodeSet::one_based(&[1, 2])]
        );
        assert!(enumerate_tpcs(&path(5).unwrap()).unwrap().is_empty());
        assert!(enumerate_tpcs(&cycle(8).unwrap())
            .unwrap()
            .contains(&CodeSet::one_based(&[1, 2, 5, 6])));
        assert_eq!(find_tpc(&Graph::new(0, []).unwrap()), Some(CodeSet::empty()));
        assert_eq!(find_tpc(&Graph::new(1, []).unwrap()), None);
    }

    #[test]
    fn enumeration_bound() {
        let g = path(30).unwrap();
        assert!(matches!(enumerate_tpcs(&g), Err(Error::EnumerationBound { n: 30, bound: 24 })));
        assert!(enumerate_tpcs_bounded(&g, 30).is_ok());
    }

    #[test]
    fn agrees_with_subset_brute_force_on_named_graphs() {
        let mut graphs = vec![fig1()];
        graphs.extend((1..=12).map(|n| path(n).unwrap()));
        graphs.extend((3..=12).map(|n| cycle(n).unwrap()));
        graphs.extend((1..=7).map(|n| complete(n).unwrap()));
        graphs.push(complete_bipartite(2, 3).unwrap());
        for g in graphs {
            let all = brute(&g);
            assert_eq!(enumerate_tpcs(&g).unwrap(), all, "{g:?}");
            assert_eq!(find_tpc(&g), all.first().cloned(), "{g:?}");
        }
    }

    #[test]
    fn disconnected_graphs_take_the_union() {
        // P_4 on {0,2,4,6} interleaved with P_2 on {1,3}... plus K_2 on {5,7}
        let g = Graph::new(8, [(0, 2), (2, 4), (4, 6), (1, 3), (5, 7)]).unwrap();
        let all = brute(&g);
        assert_eq!(find_tpc(&g), all.first().cloned());
        assert_eq!(find_tpc(&g), Some(CodeSet::new(vec![1, 2, 3, 4, 5, 7])));
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..=11).prop_flat_map(|n| {
            prop::collection::vec(prop::bool::weighted(0.3), n * (n - 1) / 2).prop_map(move |bits| {
                let pairs = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
                let edges: Vec<_> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
                Graph::new(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(400))]

        #[test]
        fn matches_brute_force(g in arb_graph()) {
            let all = brute(&g);
            prop_assert_eq!(find_tpc(&g), all.first().cloned());
            prop_assert_eq!(enumerate_tpcs(&g).unwrap(), all);
        }
    }
}
