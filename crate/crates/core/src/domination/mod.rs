//! k-tuple and signed double domination.
//!
//! A set `D` is k-tuple dominating when `|N[v] ∩ D| ≥ k` for every vertex.
//! For a signed graph, `D` is a double dominating set when it is 2-tuple
//! dominating and the cut `Σ[D : V∖D]` is balanced.

mod solver;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{CycleDecomposition, Graph};
use crate::set::VertexSet;
use crate::signed::{BalanceCertificate, SignedGraph};

pub use solver::{
    min_k_tuple_dominating, min_signed_dds, min_signed_k_tuple, Budget, SolveOptions, SolveResult,
};

/// Why a candidate set was rejected.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DdsFailure {
    /// `vertex` is dominated only `multiplicity` times.
    Coverage { vertex: usize, multiplicity: usize },
    /// The cut subgraph contains this negative cycle.
    UnbalancedCut { witness_cycle: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DdsVerdict {
    pub failure: Option<DdsFailure>,
}

impl DdsVerdict {
    pub const OK: DdsVerdict = DdsVerdict { failure: None };

    pub fn ok(&self) -> bool {
        self.failure.is_none()
    }
}

/// `|N[v] ∩ D|`.
pub fn domination_multiplicity(g: &Graph, d: &VertexSet, v: usize) -> Result<usize> {
    g.check_vertex(v)?;
    d.check_universe(g.vertex_count())?;
    Ok(multiplicity(g, d, v))
}

fn multiplicity(g: &Graph, d: &VertexSet, v: usize) -> usize {
    usize::from(d.contains(v)) + g.neighbors(v).iter().filter(|&&w| d.contains(w)).count()
}

/// Coverage test only; reports the smallest under-dominated vertex.
pub fn is_k_tuple_dominating(g: &Graph, d: &VertexSet, k: usize) -> Result<DdsVerdict> {
    d.check_universe(g.vertex_count())?;
    if k < 1 {
        return Err(Error::invalid("k-tuple domination needs k >= 1"));
    }
    let failure = (0..g.vertex_count()).find_map(|v| {
        let m = multiplicity(g, d, v);
        (m < k).then_some(DdsFailure::Coverage {
            vertex: v,
            multiplicity: m,
        })
    });
    Ok(DdsVerdict { failure })
}

/// Double domination of a signed graph: coverage with `k = 2`, then balance
/// of `Σ[D : V∖D]`. The balance test only runs once coverage holds.
pub fn is_signed_dds(s: &SignedGraph, d: &VertexSet) -> Result<DdsVerdict> {
    is_signed_k_tuple(s, d, 2)
}

/// [`is_signed_dds`] with the coverage threshold as a parameter.
pub fn is_signed_k_tuple(s: &SignedGraph, d: &VertexSet, k: usize) -> Result<DdsVerdict> {
    let coverage = is_k_tuple_dominating(s.graph(), d, k)?;
    if !coverage.ok() {
        return Ok(coverage);
    }
    match s.cut_subgraph(d)?.is_balanced() {
        BalanceCertificate::Balanced { .. } => Ok(DdsVerdict::OK),
        BalanceCertificate::Unbalanced { witness_cycle } => Ok(DdsVerdict {
            failure: Some(DdsFailure::UnbalancedCut { witness_cycle }),
        }),
    }
}

/// `|V|/2`, the smallest possible double dominating set of a cubic graph:
/// with `|D| < |V|/2` the cut would need at least `2|V∖D|` edges but can
/// hold at most `2|D|`.
pub fn cubic_lower_bound(g: &Graph) -> Result<usize> {
    g.check_cubic()?;
    Ok(g.vertex_count() / 2)
}

/// Structure of the cut `G[D : V∖D]` for a half-size set in a cubic graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HalfDdsReport {
    /// `D` is 2-tuple dominating.
    pub is_dds: bool,
    /// Every vertex has cut degree exactly 2.
    pub two_regular: bool,
    /// Cut degree -> number of vertices with that degree.
    pub degree_profile: BTreeMap<usize, usize>,
    /// Present whenever the cut is even.
    pub decomposition: Option<CycleDecomposition>,
}

/// For cubic `G` and `|D| = |V|/2`, a double dominating `D` forces every
/// vertex to have exactly two cut edges, so the cut splits into cycles.
/// When `D` is not double dominating no such claim is made and only the
/// degree profile (plus a decomposition, if the cut happens to be even) is
/// reported.
pub fn analyze_half_dds(g: &Graph, d: &VertexSet) -> Result<HalfDdsReport> {
    g.check_cubic()?;
    d.check_universe(g.vertex_count())?;
    let half = g.vertex_count() / 2;
    if d.len() != half {
        return Err(Error::WrongCardinality {
            expected: half,
            actual: d.len(),
        });
    }
    let is_dds = is_k_tuple_dominating(g, d, 2)?.ok();
    let cut = g.cut_subgraph(d)?;
    let mut degree_profile = BTreeMap::new();
    for deg in cut.degrees() {
        *degree_profile.entry(deg).or_insert(0) += 1;
    }
    let two_regular = cut.is_regular(2);
    let decomposition = if cut.is_even() {
        Some(cut.cycle_decomposition()?)
    } else {
        None
    };
    Ok(HalfDdsReport {
        is_dds,
        two_regular,
        degree_profile,
        decomposition,
    })
}
