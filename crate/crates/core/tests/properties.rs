//! Randomised invariants over generated multigraphs: cut algebra, the
//! candidate-weight superset, file round trips, and the lifted-cut
//! thickness identity the gadget construction hinges on.

use proptest::prelude::*;
use std::collections::BTreeSet;

use thintree::graph::{cut_from_mask, Cut, Multigraph, SignedWeights};
use thintree::io::{parse_graph, write_graph};
use thintree::oracle::{max_avg_cut_opt_bf, thickness};
use thintree::rational::rational;
use thintree::reduce::{enumerate_candidate_avg_weights, lift_cut, reduce_mac_to_ttvc};

/// Connected multigraph on 2..=6 vertices: a random recursive tree plus
/// up to 8 extra (possibly parallel) edges.
fn arb_multigraph() -> impl Strategy<Value = Multigraph> {
    (2usize..=6)
        .prop_flat_map(|n| {
            (
                Just(n),
                prop::collection::vec(any::<u64>(), n - 1),
                prop::collection::vec((0..n, 0..n), 0..8),
            )
        })
        .prop_map(|(n, parents, extras)| {
            let mut edges: Vec<(usize, usize)> = parents
                .iter()
                .enumerate()
                .map(|(i, seed)| {
                    let v = i + 1;
                    ((*seed as usize) % v, v)
                })
                .collect();
            edges.extend(extras.into_iter().filter(|(u, v)| u != v));
            Multigraph::new(n, edges).expect("valid edges")
        })
}

fn arb_weighted() -> impl Strategy<Value = (Multigraph, SignedWeights)> {
    arb_multigraph().prop_flat_map(|g| {
        let m = g.edge_count();
        (Just(g), prop::collection::vec(any::<bool>(), m)).prop_map(|(g, bits)| {
            let weights =
                SignedWeights::new(bits.into_iter().map(|b| if b { 1 } else { -1 }).collect())
                    .expect("+-1 weights");
            (g, weights)
        })
    })
}

proptest! {
    /// Building a cut from a side or from its complement yields the same
    /// canonical object, and canonicalisation is idempotent.
    #[test]
    fn cut_canonicalisation((g, _) in arb_weighted(), seed in any::<u64>()) {
        let n = g.vertex_count();
        let mask = 1 + seed % ((1u64 << (n - 1)) - 1);
        let cut = cut_from_mask(n, mask);
        let complement: Vec<usize> = (0..n).filter(|v| !cut.contains(*v)).collect();
        let from_complement = Cut::new(n, complement).unwrap();
        prop_assert_eq!(&cut, &from_complement);
        let rebuilt = Cut::new(n, cut.vertices().collect::<Vec<_>>()).unwrap();
        prop_assert_eq!(&cut, &rebuilt);
        prop_assert_eq!(g.delta(&cut).unwrap(), g.delta(&from_complement).unwrap());
    }

    /// The vertex-set symmetric difference induces the edge-set one.
    #[test]
    fn symmetric_difference_law(g in arb_multigraph(), a in any::<u64>(), b in any::<u64>()) {
        let n = g.vertex_count();
        let cuts = (1u64 << (n - 1)) - 1;
        let ca = cut_from_mask(n, 1 + a % cuts);
        let cb = cut_from_mask(n, 1 + b % cuts);
        let lhs: BTreeSet<usize> = match ca.symmetric_difference(&cb).unwrap() {
            Some(c) => g.delta(&c).unwrap().into_iter().collect(),
            None => BTreeSet::new(),
        };
        let da: BTreeSet<usize> = g.delta(&ca).unwrap().into_iter().collect();
        let db: BTreeSet<usize> = g.delta(&cb).unwrap().into_iter().collect();
        let rhs: BTreeSet<usize> = da.symmetric_difference(&db).copied().collect();
        prop_assert_eq!(lhs, rhs);
    }

    /// Average cut weights stay in [-1, 1] and the optimum always appears
    /// in the candidate enumeration.
    #[test]
    fn avg_weight_bounds_and_candidate_superset((g, w) in arb_weighted()) {
        for mask in 1..(1u64 << (g.vertex_count() - 1)) {
            let cut = cut_from_mask(g.vertex_count(), mask);
            let avg = g.avg_cut_weight(&w, &cut).unwrap();
            prop_assert!(avg >= rational(-1, 1) && avg <= rational(1, 1));
        }
        let (optimum, _) = max_avg_cut_opt_bf(&g, &w).unwrap();
        let candidates = enumerate_candidate_avg_weights(&g).unwrap();
        prop_assert!(candidates.contains(&optimum));
    }

    /// The parsers reject arbitrary junk with an error, never a panic,
    /// and mutated valid files either parse or error cleanly.
    #[test]
    fn parsers_never_panic(junk in "\\PC*", (g, w) in arb_weighted(), flip in any::<usize>()) {
        let _ = parse_graph(&junk);
        let _ = thintree::io::parse_tree(&junk);

        let mut text = write_graph(&g, Some(&w));
        if !text.is_empty() {
            let pos = flip % text.len();
            while !text.is_char_boundary(pos) && !text.is_empty() {
                text.pop();
            }
            if text.is_char_boundary(pos) {
                text.insert(pos, 'x');
            }
            let _ = parse_graph(&text);
        }
    }

    /// Graph files round-trip exactly.
    #[test]
    fn graph_file_round_trip((g, w) in arb_weighted()) {
        let text = write_graph(&g, Some(&w));
        let parsed = parse_graph(&text).unwrap();
        prop_assert_eq!(&parsed.graph, &g);
        prop_assert_eq!(&parsed.weights, &w);
        let unweighted = write_graph(&g, None);
        let parsed = parse_graph(&unweighted).unwrap();
        prop_assert_eq!(&parsed.graph, &g);
        prop_assert!(!parsed.explicit_weights);
    }

    /// Contracting any pair preserves same-side cuts: the count matches
    /// and the contracted graph keeps every surviving edge's identity.
    #[test]
    fn contraction_preserves_same_side_cuts(g in arb_multigraph(), seed in any::<u64>()) {
        let n = g.vertex_count();
        let u = (seed % n as u64) as usize;
        let v = ((seed >> 32) % n as u64) as usize;
        prop_assume!(u != v);
        let (h, mapping) = g.contract(u, v).unwrap();
        let same_side = (1..(1u64 << (n - 1)))
            .map(|mask| cut_from_mask(n, mask))
            .filter(|c| c.contains(u) == c.contains(v))
            .count();
        let contracted = if h.vertex_count() >= 2 {
            (1u64 << (h.vertex_count() - 1)) - 1
        } else {
            0
        };
        prop_assert_eq!(same_side as u64, contracted);
        let survivors = mapping.iter().filter(|x| x.is_some()).count();
        prop_assert_eq!(survivors, h.edge_count());
    }

    /// The load-bearing identity of the gadget: a lifted cut's thickness
    /// is exactly (average weight + 2) / 3, at any structurally valid
    /// multiplier.
    #[test]
    fn lifted_thickness_identity(
        (g, w) in arb_weighted(),
        multiplier in 3usize..=6,
        seed in any::<u64>(),
    ) {
        prop_assume!(g.edge_count() <= 8);
        let instance = reduce_mac_to_ttvc(&g, &w, &rational(0, 1), multiplier).unwrap();
        let n = g.vertex_count();
        let mask = 1 + seed % ((1u64 << (n - 1)) - 1);
        let cut = cut_from_mask(n, mask);
        let lifted = lift_cut(&instance, &cut).unwrap();

        let crossing = g.crossing_count(&cut).unwrap();
        prop_assert_eq!(
            instance.g_prime().crossing_count(&lifted).unwrap(),
            3 * crossing
        );
        let avg = g.avg_cut_weight(&w, &cut).unwrap();
        let lifted_thickness = thickness(instance.g_prime(), instance.tree(), &lifted).unwrap();
        prop_assert_eq!(lifted_thickness, (avg + rational(2, 1)) / rational(3, 1));
    }
}
