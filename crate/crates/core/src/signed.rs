//! Signatures, cycle signs, balance and switching.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::ops::{Mul, Neg};

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{canonical_cycle, Graph};
use crate::set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Positive,
    #[serde(rename = "-")]
    Negative,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// A graph with a sign on every edge. `signs[i]` belongs to
/// `graph.edges()[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    graph: Graph,
    signs: Vec<Sign>,
}

/// Outcome of a balance test, with a witness either way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BalanceCertificate {
    /// A vertex marking `μ` with `σ(uv) = μ(u)μ(v)` on every edge. Each
    /// component's smallest vertex is marked `+`.
    Balanced { marking: Vec<Sign> },
    /// A simple cycle whose sign product is negative.
    Unbalanced { witness_cycle: Vec<usize> },
}

impl BalanceCertificate {
    pub fn is_balanced(&self) -> bool {
        matches!(self, BalanceCertificate::Balanced { .. })
    }

    pub fn witness_cycle(&self) -> Option<&[usize]> {
        match self {
            BalanceCertificate::Unbalanced { witness_cycle } => Some(witness_cycle),
            BalanceCertificate::Balanced { .. } => None,
        }
    }
}

impl SignedGraph {
    pub fn new(graph: Graph, signs: Vec<Sign>) -> Result<Self> {
        if signs.len() != graph.edge_count() {
            return Err(Error::SignatureLength {
                signs: signs.len(),
                edges: graph.edge_count(),
            });
        }
        Ok(SignedGraph { graph, signs })
    }

    /// `|Σ|`: every edge positive.
    pub fn all_positive(graph: Graph) -> Self {
        let signs = vec![Sign::Positive; graph.edge_count()];
        SignedGraph { graph, signs }
    }

    /// Signs every edge in `negative` negative and the rest positive. Pairs
    /// may be given in either orientation; a pair that is not an edge is an
    /// error.
    pub fn with_negative_edges<I>(graph: Graph, negative: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut signs = vec![Sign::Positive; graph.edge_count()];
        for (a, b) in negative {
            let e = graph.edge_index(a, b).ok_or(Error::NotAnEdge(a, b))?;
            signs[e] = Sign::Negative;
        }
        Ok(SignedGraph { graph, signs })
    }

    /// Each edge, in canonical order, is independently negative with
    /// probability `p_neg`.
    ///
    /// The generator is ChaCha8 (`rand_chacha::ChaCha8Rng::seed_from_u64`).
    /// For every edge one `u64` is drawn; its top 53 bits scaled by `2^-53`
    /// give `u ∈ [0, 1)`, and the edge is negative iff `u < p_neg`.
    pub fn random(graph: Graph, seed: u64, p_neg: f64) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self::random_with(graph, &mut rng, p_neg)
    }

    /// Same rule as [`SignedGraph::random`], drawing from a caller-owned
    /// generator.
    pub fn random_with<R: RngCore>(graph: Graph, rng: &mut R, p_neg: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p_neg) {
            return Err(Error::InvalidProbability(p_neg));
        }
        let signs = (0..graph.edge_count())
            .map(|_| {
                let u = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
                if u < p_neg {
                    Sign::Negative
                } else {
                    Sign::Positive
                }
            })
            .collect();
        Ok(SignedGraph { graph, signs })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn into_parts(self) -> (Graph, Vec<Sign>) {
        (self.graph, self.signs)
    }

    pub fn sign(&self, a: usize, b: usize) -> Option<Sign> {
        self.graph.edge_index(a, b).map(|e| self.signs[e])
    }

    /// `(a, b, sign)` for every edge in canonical order.
    pub fn signed_edges(&self) -> impl Iterator<Item = (usize, usize, Sign)> + '_ {
        self.graph
            .edges()
            .iter()
            .zip(&self.signs)
            .map(|(&(a, b), &s)| (a, b, s))
    }

    pub fn negative_edges(&self) -> Vec<(usize, usize)> {
        self.signed_edges()
            .filter(|e| e.2.is_negative())
            .map(|(a, b, _)| (a, b))
            .collect()
    }

    /// Product of the signs along a closed walk given as a vertex sequence;
    /// the closing edge from last back to first is implied.
    pub fn cycle_sign(&self, cycle: &[usize]) -> Result<Sign> {
        if cycle.len() < 3 {
            return Err(Error::NotACycle(format!(
                "sequence of length {} is too short",
                cycle.len()
            )));
        }
        let len = cycle.len();
        (0..len).try_fold(Sign::Positive, |acc, i| {
            let (a, b) = (cycle[i], cycle[(i + 1) % len]);
            self.sign(a, b)
                .map(|s| acc * s)
                .ok_or_else(|| Error::NotACycle(format!("{a}-{b} is not an edge")))
        })
    }

    /// Breadth-first marking per component; the first edge in canonical
    /// order that violates `σ(uv) = μ(u)μ(v)` closes a negative cycle with
    /// the tree paths to its endpoints.
    pub fn is_balanced(&self) -> BalanceCertificate {
        let n = self.graph.vertex_count();
        let mut marking: Vec<Option<Sign>> = vec![None; n];
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        let mut queue = VecDeque::new();

        for root in 0..n {
            if marking[root].is_some() {
                continue;
            }
            marking[root] = Some(Sign::Positive);
            queue.push_back(root);
            while let Some(v) = queue.pop_front() {
                let mv = marking[v].expect("marked");
                for &w in self.graph.neighbors(v) {
                    if marking[w].is_none() {
                        let s = self.sign(v, w).expect("edge");
                        marking[w] = Some(mv * s);
                        parent[w] = v;
                        depth[w] = depth[v] + 1;
                        queue.push_back(w);
                    }
                }
            }
        }

        let marking: Vec<Sign> = marking.into_iter().map(|m| m.expect("marked")).collect();
        let conflict = self
            .signed_edges()
            .find(|&(a, b, s)| s != marking[a] * marking[b]);

        match conflict {
            None => BalanceCertificate::Balanced { marking },
            Some((a, b, _)) => BalanceCertificate::Unbalanced {
                witness_cycle: tree_cycle(&parent, &depth, a, b),
            },
        }
    }

    /// `Σ^X`: negate every edge with exactly one endpoint in `X`.
    pub fn switch(&self, x: &VertexSet) -> Result<SignedGraph> {
        x.check_universe(self.graph.vertex_count())?;
        let signs = self
            .signed_edges()
            .map(|(a, b, s)| {
                if x.contains(a) != x.contains(b) {
                    -s
                } else {
                    s
                }
            })
            .collect();
        Ok(SignedGraph {
            graph: self.graph.clone(),
            signs,
        })
    }

    /// Two signatures on one graph are switching equivalent iff their
    /// edgewise product is balanced.
    pub fn switching_equivalent(&self, other: &SignedGraph) -> Result<bool> {
        if self.graph != other.graph {
            return Err(Error::UnderlyingGraphMismatch);
        }
        let product = SignedGraph {
            graph: self.graph.clone(),
            signs: self
                .signs
                .iter()
                .zip(&other.signs)
                .map(|(&a, &b)| a * b)
                .collect(),
        };
        Ok(product.is_balanced().is_balanced())
    }

    /// A switching set `X` with `other = self^X`, if one exists. Read off
    /// the marking of the product signature: `X = {v : μ(v) = −}`.
    pub fn switching_set_to(&self, other: &SignedGraph) -> Result<Option<VertexSet>> {
        if self.graph != other.graph {
            return Err(Error::UnderlyingGraphMismatch);
        }
        let product = SignedGraph {
            graph: self.graph.clone(),
            signs: self
                .signs
                .iter()
                .zip(&other.signs)
                .map(|(&a, &b)| a * b)
                .collect(),
        };
        match product.is_balanced() {
            BalanceCertificate::Balanced { marking } => {
                let members = marking
                    .iter()
                    .enumerate()
                    .filter(|(_, m)| m.is_negative())
                    .map(|(v, _)| v);
                Ok(Some(VertexSet::from_members(marking.len(), members)?))
            }
            BalanceCertificate::Unbalanced { .. } => Ok(None),
        }
    }

    /// Every negative simple cycle, canonical form. Exhaustive, so bounded
    /// by `max_edges` like [`Graph::enumerate_cycles`].
    pub fn negative_cycle_set(&self, max_edges: usize) -> Result<BTreeSet<Vec<usize>>> {
        let mut out = BTreeSet::new();
        for c in self.graph.enumerate_cycles(max_edges)? {
            if self.cycle_sign(&c)?.is_negative() {
                out.insert(c);
            }
        }
        Ok(out)
    }

    /// `Σ[X : V∖X]`: the cut edges with their signs, on the full vertex set.
    pub fn cut_subgraph(&self, x: &VertexSet) -> Result<SignedGraph> {
        let sub = self.graph.cut_subgraph(x)?;
        let signs = sub
            .edges()
            .iter()
            .map(|&(a, b)| self.sign(a, b).expect("cut edge is an edge"))
            .collect();
        Ok(SignedGraph { graph: sub, signs })
    }
}

// Cycle through the non-tree edge a-b and the BFS tree paths from a and b to
// their lowest common ancestor.
fn tree_cycle(parent: &[usize], depth: &[usize], a: usize, b: usize) -> Vec<usize> {
    let (mut x, mut y) = (a, b);
    let mut from_a = vec![x];
    let mut from_b = vec![y];
    while depth[x] > depth[y] {
        x = parent[x];
        from_a.push(x);
    }
    while depth[y] > depth[x] {
        y = parent[y];
        from_b.push(y);
    }
    while x != y {
        x = parent[x];
        y = parent[y];
        from_a.push(x);
        from_b.push(y);
    }
    from_b.pop();
    from_a.extend(from_b.into_iter().rev());
    canonical_cycle(&from_a)
}
