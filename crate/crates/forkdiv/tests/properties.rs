//! Property tests for the structural invariants that hold on every graph:
//! codec round-trips, complement and induced-subgraph identities, and
//! hereditarity of pattern freeness under random induced subsets.

use proptest::prelude::*;

use forkdiv::graph::{Graph, VertexSet};
use forkdiv::graph6::{parse_graph6, to_graph6};
use forkdiv::patterns::{is_free, PatternId};
use forkdiv::structure::expand_homogeneous;

/// A random simple graph on up to `max_n` vertices.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n)
        .prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            (Just(n), proptest::collection::vec(any::<bool>(), pairs))
        })
        .prop_map(|(n, bits)| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[idx] {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(64)) {
        let line = to_graph6(&g);
        prop_assert_eq!(parse_graph6(&line).unwrap(), g);
    }

    #[test]
    fn complement_is_an_involution(g in arb_graph(16)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        prop_assert_eq!(g.induced(g.vertex_set()), g);
    }

    #[test]
    fn complement_edge_counts_partition_pairs(g in arb_graph(16)) {
        let n = g.n();
        prop_assert_eq!(g.edge_count() + g.complement().edge_count(), n * n.saturating_sub(1) / 2);
    }

    #[test]
    fn freeness_is_hereditary(g in arb_graph(9), mask in any::<u64>(), which in 0usize..6) {
        let pattern = [
            PatternId::Fork,
            PatternId::Gem,
            PatternId::Butterfly,
            PatternId::Claw,
            PatternId::Bull,
            PatternId::P6,
        ][which];
        let subset = VertexSet::from_bits(mask & g.vertex_set().bits());
        if is_free(&g, pattern) {
            prop_assert!(is_free(&g.induced(subset), pattern));
        }
    }

    #[test]
    fn expansion_result_is_externally_homogeneous(g in arb_graph(10), u in 0usize..10, v in 0usize..10) {
        prop_assume!(g.n() >= 2);
        let u = u % g.n();
        let v = v % g.n();
        prop_assume!(u != v);
        let x = expand_homogeneous(&g, VertexSet::singleton(u).with(v));
        // maximality: every outside vertex is complete or anticomplete to x
        for w in (g.vertex_set() - x).iter() {
            let inter = g.neighbors(w) & x;
            prop_assert!(inter.is_empty() || inter == x);
        }
    }

    #[test]
    fn induced_preserves_adjacency(g in arb_graph(12), mask in any::<u64>()) {
        let subset = VertexSet::from_bits(mask & g.vertex_set().bits());
        let h = g.induced(subset);
        let labels: Vec<usize> = subset.iter().collect();
        for i in 0..h.n() {
            for j in i + 1..h.n() {
                prop_assert_eq!(h.has_edge(i, j), g.has_edge(labels[i], labels[j]));
            }
        }
    }
}
