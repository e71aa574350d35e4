use proptest::prelude::*;
use tpcode::graph::algo;
use tpcode::limits::Limits;
use tpcode::ring::{FiniteRing, RingBuilder};
use tpcode::tpc;
use tpcode::zdg::{self, ZdGraph};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(80))]

    #[test]
    fn codes_have_exactly_two_members(n in 4u64..160) {
        let z = ZdGraph::new(&FiniteRing::zn(n).unwrap());
        let g = z.graph();
        // fields give the empty graph, whose only code is empty
        prop_assume!(g.n() > 0);
        if g.n() <= 24 {
            for c in tpc::enumerate_tpcs(g).unwrap() {
                prop_assert_eq!(c.len(), 2);
            }
        }
        let pair = zdg::tpc_pair_solver(&z);
        prop_assert_eq!(pair.is_some(), tpc::find_tpc(g).is_some());
    }

    #[test]
    fn connected_with_diameter_at_most_three(n in 4u64..200) {
        let z = ZdGraph::new(&FiniteRing::zn(n).unwrap());
        if z.n() >= 2 {
            prop_assert!(algo::is_connected(z.graph()));
            prop_assert!(algo::diameter(z.graph()).unwrap() <= 3);
        }
    }

    #[test]
    fn closed_form_count_matches_enumeration(a in 2u64..20, b in 2u64..20) {
        let builder = RingBuilder::new();
        let fs = vec![builder.zn(a).unwrap(), builder.zn(b).unwrap()];
        let r = zdg::count_zero_divisors(&fs, &builder).unwrap();
        prop_assert!(r.agrees());
        prop_assert_eq!(r.enumerated, Some(ZdGraph::new(&builder.product(&fs).unwrap()).n()));
    }

    #[test]
    fn ring_deciders_reach_consensus(n in 2u64..200) {
        let limits = Limits { search_vertex_bound: 4096, ..Limits::default() };
        let v = zdg::decide_ring(&FiniteRing::zn(n).unwrap(), &limits).unwrap();
        prop_assert!(v.discrepancies.is_empty(), "{:?}", v.discrepancies);
        prop_assert!(v.consensus());
    }
}

#[test]
fn small_anchors() {
    let z12 = ZdGraph::new(&FiniteRing::zn(12).unwrap());
    assert_eq!((z12.n(), z12.graph().edge_count()), (7, 8));
    let code = zdg::tpc_pair_solver(&z12).unwrap();
    assert_eq!(z12.element_names(&code), vec!["4", "6"]);
    assert_eq!(ZdGraph::new(&FiniteRing::zn(4).unwrap()).n(), 1);
}
