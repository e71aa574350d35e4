use proptest::prelude::*;
use tpcode::graph::{self, algo, io, Graph};
use tpcode::treelab::prufer;

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..14).prop_flat_map(|n| {
        proptest::collection::vec(proptest::bool::ANY, n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
            let edges: Vec<_> = pairs.zip(bits).filter(|(_, on)| *on).map(|(e, _)| e).collect();
            Graph::new(n, edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn json_round_trips(g in arb_graph()) {
        let back = io::from_json(&io::to_json(&g)).unwrap();
        prop_assert_eq!(back.n(), g.n());
        prop_assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn exports_are_byte_stable(g in arb_graph()) {
        prop_assert_eq!(io::to_dot(&g), io::to_dot(&g.clone()));
        prop_assert_eq!(io::to_json(&g), io::to_json(&g.clone()));
    }

    #[test]
    fn handshake(g in arb_graph()) {
        let total: usize = (0..g.n()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(total, 2 * g.edge_count());
    }

    #[test]
    fn prufer_trees_are_trees(seed in any::<u64>(), n in 1usize..30) {
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
        let t = prufer::random_tree(&mut rng, n);
        prop_assert!(algo::is_tree(&t));
        prop_assert_eq!(t.edge_count(), n - 1);
    }
}

#[test]
fn generator_sizes() {
    assert_eq!(graph::path(5).unwrap().edge_count(), 4);
    assert_eq!(graph::cycle(6).unwrap().is_regular(), Some(2));
    assert_eq!(graph::complete(5).unwrap().edge_count(), 10);
    assert_eq!(graph::complete_bipartite(2, 3).unwrap().edge_count(), 6);
    let c = graph::corona(&graph::path(4).unwrap(), &graph::complete(1).unwrap());
    assert_eq!((c.n(), c.edge_count()), (8, 7));
    assert!(algo::is_tree(&c));
}

#[test]
fn cut_vertices_of_a_path() {
    let g = graph::path(5).unwrap();
    assert_eq!(algo::articulation_points(&g), vec![1, 2, 3]);
    assert!(algo::articulation_points(&graph::cycle(5).unwrap()).is_empty());
}
