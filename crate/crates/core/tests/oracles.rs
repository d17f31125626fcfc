//! Library routines checked against brute-force recounts.

mod common;

use common::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sigdom::domination::{min_k_tuple_dominating, min_signed_dds, SolveOptions};
use sigdom::graph::DEFAULT_CYCLE_EDGE_LIMIT;
use sigdom::{Graph, SignedGraph};

#[test]
fn cycle_enumeration_matches_permutation_recount() {
    for (name, g) in small_corpus() {
        let fast = g.enumerate_cycles(DEFAULT_CYCLE_EDGE_LIMIT).unwrap();
        let slow: Vec<_> = cycles_by_permutation(&g).into_iter().collect();
        assert_eq!(fast, slow, "{name}");
    }
}

#[test]
fn k4_has_seven_cycles() {
    let k4 = complete(4);
    let oracle = cycles_by_permutation(&k4);
    assert_eq!(oracle.len(), 7);
    assert_eq!(k4.enumerate_cycles(64).unwrap().len(), 7);
}

#[test]
fn k4_one_negative_edge_has_four_negative_cycles() {
    let s = SignedGraph::with_negative_edges(complete(4), [(1, 2)]).unwrap();
    let oracle: Vec<_> = cycles_by_permutation(s.graph())
        .into_iter()
        .filter(|c| s.cycle_sign(c).unwrap().is_negative())
        .collect();
    assert_eq!(oracle.len(), 4);
    let got: Vec<_> = s.negative_cycle_set(64).unwrap().into_iter().collect();
    assert_eq!(got, oracle);
}

#[test]
fn marking_balance_matches_cycle_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (name, g) in small_corpus() {
        for _ in 0..20 {
            let s = SignedGraph::random_with(g.clone(), &mut rng, 0.5).unwrap();
            let cert = s.is_balanced();
            let negatives = s.negative_cycle_set(64).unwrap();
            assert_eq!(cert.is_balanced(), negatives.is_empty(), "{name}");
            if let Some(c) = cert.witness_cycle() {
                assert!(
                    negatives.contains(c),
                    "{name}: witness {c:?} not a negative cycle"
                );
            }
        }
    }
}

#[test]
fn exact_solvers_match_exhaustive_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let opts = SolveOptions::default();
    for (name, g) in small_cubic()
        .into_iter()
        .filter(|(_, g)| g.vertex_count() <= 12)
    {
        let unsigned = min_k_tuple_dominating(&g, 2, &opts).unwrap();
        assert_eq!(
            Some(unsigned.witness.clone()),
            brute_min_k_tuple(&g, 2),
            "{name}"
        );

        for _ in 0..3 {
            let s = SignedGraph::random_with(g.clone(), &mut rng, 0.5).unwrap();
            let r = min_signed_dds(&s, &opts).unwrap();
            let oracle = brute_min_signed(&s).unwrap();
            assert_eq!(r.value, oracle.len(), "{name}");
            assert_eq!(r.witness, oracle, "{name}: witness tie-break");
        }
    }
}

#[test]
fn solver_examples_from_exhaustive_search() {
    let opts = SolveOptions::default();
    // Path a-b-c: every pair leaves an endpoint dominated once.
    let path = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
    assert_eq!(brute_min_k_tuple(&path, 2).unwrap().len(), 3);
    assert_eq!(min_k_tuple_dominating(&path, 2, &opts).unwrap().value, 3);

    let k4 = complete(4);
    assert_eq!(brute_min_k_tuple(&k4, 2).unwrap().to_vec(), vec![0, 1]);
    let pos = SignedGraph::all_positive(k4);
    assert_eq!(brute_min_signed(&pos).unwrap().len(), 2);
    assert_eq!(min_signed_dds(&pos, &opts).unwrap().value, 2);
}
