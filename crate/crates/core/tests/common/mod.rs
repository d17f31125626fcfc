//! Test-only oracles, kept independent of the library's search code.

#![allow(dead_code)]

use std::collections::BTreeSet;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sigdom::domination::{is_k_tuple_dominating, is_signed_dds};
use sigdom::families::{k4_union, petersen};
use sigdom::graph::canonical_cycle;
use sigdom::{Graph, SignedGraph, VertexSet};

/// Every simple cycle by brute force over ordered vertex sequences.
pub fn cycles_by_permutation(g: &Graph) -> BTreeSet<Vec<usize>> {
    let n = g.vertex_count();
    let mut out = BTreeSet::new();
    for len in 3..=n {
        for seq in (0..n).permutations(len) {
            if seq[0] != *seq.iter().min().unwrap() {
                continue;
            }
            let closed = (0..len).all(|i| g.has_edge(seq[i], seq[(i + 1) % len]));
            if closed {
                out.insert(canonical_cycle(&seq));
            }
        }
    }
    out
}

/// Smallest set passing the verifier, scanning sizes upward and each size in
/// lexicographic order.
pub fn brute_force_min(g: &Graph, mut passes: impl FnMut(&VertexSet) -> bool) -> Option<VertexSet> {
    let n = g.vertex_count();
    for size in 0..=n {
        for combo in (0..n).combinations(size) {
            let d = VertexSet::from_members(n, combo).unwrap();
            if passes(&d) {
                return Some(d);
            }
        }
    }
    None
}

pub fn brute_min_signed(s: &SignedGraph) -> Option<VertexSet> {
    brute_force_min(s.graph(), |d| is_signed_dds(s, d).unwrap().ok())
}

pub fn brute_min_k_tuple(g: &Graph, k: usize) -> Option<VertexSet> {
    brute_force_min(g, |d| is_k_tuple_dominating(g, d, k).unwrap().ok())
}

pub fn cycle(n: usize) -> Graph {
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).tuple_combinations()).unwrap()
}

/// Fixed corpus of graphs on at most 8 vertices.
pub fn small_corpus() -> Vec<(&'static str, Graph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut out = vec![
        ("triangle", cycle(3)),
        ("C4", cycle(4)),
        ("C5", cycle(5)),
        ("K4", k4_union(1).unwrap()),
        ("K5", complete(5)),
        (
            "K2,3",
            Graph::new(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap(),
        ),
        (
            "K3,3",
            Graph::new(6, (0..3).cartesian_product(3..6)).unwrap(),
        ),
        (
            "W5",
            Graph::new(
                6,
                [
                    (0, 1),
                    (1, 2),
                    (2, 3),
                    (3, 4),
                    (0, 4),
                    (5, 0),
                    (5, 1),
                    (5, 2),
                    (5, 3),
                    (5, 4),
                ],
            )
            .unwrap(),
        ),
        (
            "bowtie",
            Graph::new(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap(),
        ),
        (
            "tree",
            Graph::new(6, [(0, 1), (0, 2), (2, 3), (2, 4), (4, 5)]).unwrap(),
        ),
        ("prism", petersen(3, 1).unwrap().graph),
        ("P(4,1)", petersen(4, 1).unwrap().graph),
        (
            "2K4-ish",
            Graph::new(
                8,
                [
                    (0, 1),
                    (0, 2),
                    (0, 3),
                    (1, 2),
                    (1, 3),
                    (2, 3),
                    (4, 5),
                    (5, 6),
                    (6, 7),
                    (4, 7),
                    (3, 4),
                ],
            )
            .unwrap(),
        ),
    ];
    for (name, n, p) in [
        ("G(7,0.5)", 7, 0.5),
        ("G(8,0.4)", 8, 0.4),
        ("G(8,0.6)", 8, 0.6),
    ] {
        let edges: Vec<_> = (0..n)
            .tuple_combinations()
            .filter(|_| rng.gen_bool(p))
            .collect();
        out.push((name, Graph::new(n, edges).unwrap()));
    }
    out
}

/// Cubic graphs on at most 12 vertices used by the solver property checks.
pub fn small_cubic() -> Vec<(String, Graph)> {
    let mut out = vec![
        ("K4".to_string(), k4_union(1).unwrap()),
        ("2K4".to_string(), k4_union(2).unwrap()),
        ("3K4".to_string(), k4_union(3).unwrap()),
        (
            "K3,3".to_string(),
            Graph::new(6, (0..3).cartesian_product(3..6)).unwrap(),
        ),
    ];
    for n in 3..=6 {
        for k in 1..n {
            if 2 * k < n {
                out.push((format!("P({n},{k})"), petersen(n, k).unwrap().graph));
            }
        }
    }
    out
}

pub fn random_set(rng: &mut impl Rng, n: usize) -> VertexSet {
    VertexSet::from_members(n, (0..n).filter(|_| rng.gen_bool(0.5))).unwrap()
}
