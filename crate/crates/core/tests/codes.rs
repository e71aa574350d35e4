use proptest::prelude::*;
use tpcode::graph::{self, algo, Graph};
use tpcode::tpc;
use tpcode::treelab::prufer;

fn arb_graph() -> impl Strategy<Value = Graph> {
    (2usize..12).prop_flat_map(|n| {
        proptest::collection::vec(proptest::bool::ANY, n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
            let edges: Vec<_> = pairs.zip(bits).filter(|(_, on)| *on).map(|(e, _)| e).collect();
            Graph::new(n, edges).unwrap()
        })
    })
}

/// Brute force over all subsets, for cross-checking the search.
fn brute_force(g: &Graph) -> usize {
    (0u32..1 << g.n())
        .filter(|mask| {
            let c = (0..g.n()).filter(|v| mask >> v & 1 == 1).collect();
            tpc::is_total_perfect_code(g, &c)
        })
        .count()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn every_code_found_is_a_matching_of_even_size(g in arb_graph()) {
        for c in tpc::enumerate_tpcs(&g).unwrap() {
            prop_assert!(tpc::is_total_perfect_code(&g, &c));
            prop_assert!(algo::is_matching(&g, &c));
            prop_assert_eq!(c.len() % 2, 0);
            if let Some(t) = g.is_regular() {
                prop_assert_eq!(t * c.len(), g.n());
            }
        }
    }

    #[test]
    fn enumeration_matches_brute_force(g in arb_graph()) {
        let all = tpc::enumerate_tpcs(&g).unwrap();
        prop_assert_eq!(all.len(), brute_force(&g));
        prop_assert_eq!(tpc::find_tpc(&g).is_some(), !all.is_empty());
    }

    #[test]
    fn tree_dp_agrees_with_search(seed in any::<u64>(), n in 1usize..16) {
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
        let t = prufer::random_tree(&mut rng, n);
        let dp = tpc::tree_tpc(&t).unwrap();
        prop_assert_eq!(dp.is_some(), tpc::find_tpc(&t).is_some());
        if let Some(c) = dp {
            prop_assert!(tpc::is_total_perfect_code(&t, &c));
        }
    }
}

#[test]
fn closed_forms_match_search() {
    for n in 1..=30 {
        let p = graph::path(n).unwrap();
        assert_eq!(tpc::path_decider(n), tpc::find_tpc(&p).is_some(), "P_{n}");
    }
    for n in 3..=30 {
        let c = graph::cycle(n).unwrap();
        assert_eq!(tpc::cycle_decider(n), tpc::find_tpc(&c).is_some(), "C_{n}");
    }
    for n in 1..=9 {
        let k = graph::complete(n).unwrap();
        assert_eq!(tpc::complete_decider(n), tpc::find_tpc(&k).is_some(), "K_{n}");
    }
}

#[test]
fn cycle_of_eight() {
    let c = tpc::cycle_code(8).unwrap();
    assert_eq!(c.to_string(), "{v1,v2,v5,v6}");
}
