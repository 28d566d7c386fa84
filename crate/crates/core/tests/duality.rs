mod common;

use dualdiam_core::constructions::assemble_delta;
use dualdiam_core::duality::{count_spanning_trees, dual_graph, dual_tree, enumerate_spanning_trees, EdgeSet};
use dualdiam_core::metrics::Graph;
use dualdiam_core::Error;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn euler_formula_on_corpus_and_deltas() {
    let mut all: Vec<_> = common::corpus().into_iter().map(|(_, d)| d).collect();
    all.extend((1..=3).map(|n| assemble_delta(n, None).unwrap().diagram));
    for d in &all {
        let c = d.complex();
        assert_eq!(c.vertex_count() + c.face_count(), c.edge_count() + 2);
    }
}

#[test]
fn complements_of_spanning_trees_are_dual_trees() {
    for (name, d) in common::corpus() {
        let g = common::skeleton(&d);
        let gd = Graph::dual(d.complex());
        let trees = enumerate_spanning_trees(&g);
        assert_eq!(trees.len() as u128, count_spanning_trees(&g), "{name}");
        // planar duality preserves the tree count
        assert_eq!(count_spanning_trees(&gd), count_spanning_trees(&g), "{name}");
        for t in trees.iter().take(25) {
            let pair = dual_tree(&d, t).unwrap();
            assert_eq!(pair.dual_tree, t.complement());
            assert_eq!(pair.dual_tree.len(), d.complex().face_count() - 1);
        }
    }
}

#[test]
fn non_trees_are_rejected() {
    let d = common::grid(2, 1);
    let e = d.complex().edge_count();
    let cycle = EdgeSet::from_ids(e, d.boundary_walk().darts.iter().map(|&x| d.complex().edge_of(x))).unwrap();
    assert!(matches!(dual_tree(&d, &cycle), Err(Error::NotAcyclic)));
    assert!(dual_tree(&d, &EdgeSet::empty(e)).is_err());
}

#[test]
fn dual_graph_records_outer_root() {
    let d = common::grid(2, 2);
    let dg = dual_graph(&d).unwrap();
    assert_eq!(dg.root(), d.outer_face());
    assert_eq!(dg.graph().vertex_count(), 5);
    assert_eq!(dg.graph().degree(dg.root()), 8);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn wilson_trees_pair_with_dual_trees(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = dualdiam_core::constructions::random::random_diagram(&mut rng, Default::default()).unwrap();
        let g = common::skeleton(&d);
        let t = dualdiam_core::verification::wilson_random_spanning_tree(&g, &mut rng);
        prop_assert_eq!(t.len(), g.vertex_count() - 1);
        let pair = dual_tree(&d, &t).unwrap();
        let gd = Graph::dual(d.complex());
        prop_assert!(dualdiam_core::duality::check_spanning_tree(&gd, &pair.dual_tree).is_ok());
    }
}
