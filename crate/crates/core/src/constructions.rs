//! Closed-form double dominating sets for `P(n,k)` and `I(n,j,k)`.
//!
//! Apart from the tight `P(2m,1)` set, every construction leaves a forest as
//! the cut subgraph, so it is a double dominating set under every signature.
//! All of them except the `k = 1` sets contain the whole u-rim `U`; every
//! u-vertex then has at most one cut edge (its spoke), and acyclicity comes
//! down to breaking each inner cycle at one edge whose endpoints both lie
//! outside `D`.

use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::families::{inner_blocks, petersen, FamilyGraph};
use crate::set::VertexSet;
use crate::signed::SignedGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTag {
    /// `P(2m+1, 1)`
    POdd1,
    /// `P(2m, 1)`, valid for every signature
    PEven1,
    /// `P(2m, 1)`, size `2m`, needs both rims positive
    PEven1Tight,
    /// `gcd(n,k) = 1`, `⌈n/k⌉` odd
    Gcd1Odd,
    /// `gcd(n,k) = 1`, `⌈n/k⌉` even
    Gcd1Even,
    /// `gcd(n,k) = d ≥ 2`
    GcdD,
    IgraphGcd1,
    IgraphGcdD,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::POdd1 => "P_odd_1",
            CaseTag::PEven1 => "P_even_1",
            CaseTag::PEven1Tight => "P_even_1_tight",
            CaseTag::Gcd1Odd => "gcd1_odd",
            CaseTag::Gcd1Even => "gcd1_even",
            CaseTag::GcdD => "gcd_d",
            CaseTag::IgraphGcd1 => "igraph_gcd1",
            CaseTag::IgraphGcdD => "igraph_gcd_d",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for CaseTag {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionResult {
    pub set: VertexSet,
    pub claimed_size: usize,
    pub case_tag: CaseTag,
    pub cut_forest_expected: bool,
}

/// `P(n,1)`, `n ≥ 3`, size `2(⌊n/2⌋ + 1)`.
///
/// * `n = 2m+1`: `{u_{2i}, v_{2i} : i < m} ∪ {u_{2m-1}, u_{2m}}`
/// * `n = 2m`:   `{u_{2i}, v_{2i} : i < m} ∪ {u_{2m-1}, v_{2m-1}}`
pub fn construct_pn1(n: usize) -> Result<ConstructionResult> {
    let p = petersen(n, 1)?;
    let m = n / 2;
    let evens: Vec<usize> = (0..m).map(|i| 2 * i).collect();
    let (set, tag) = if n % 2 == 1 {
        let mut us = evens.clone();
        us.extend([2 * m - 1, 2 * m]);
        (p.set_of(&us, &evens), CaseTag::POdd1)
    } else {
        let mut both = evens;
        both.push(2 * m - 1);
        (p.set_of(&both, &both), CaseTag::PEven1)
    };
    Ok(ConstructionResult {
        set,
        claimed_size: 2 * m + 2,
        case_tag: tag,
        cut_forest_expected: true,
    })
}

/// `P(2m,1)` with `D = {u_{2i}, v_{2i} : i < m}` of size `2m`, paired with
/// the all-positive signature. The cut is exactly the outer and inner
/// cycles, so `D` qualifies precisely when both are positive.
pub fn construct_pn1_tight(n: usize) -> Result<(ConstructionResult, SignedGraph)> {
    if n % 2 == 1 || n < 4 {
        return Err(Error::invalid(format!(
            "tight P(n,1) set needs even n >= 4, got {n}"
        )));
    }
    let p = petersen(n, 1)?;
    let evens: Vec<usize> = (0..n / 2).map(|i| 2 * i).collect();
    let result = ConstructionResult {
        set: p.set_of(&evens, &evens),
        claimed_size: n,
        case_tag: CaseTag::PEven1Tight,
        cut_forest_expected: false,
    };
    Ok((result, SignedGraph::all_positive(p.graph)))
}

/// `P(n,k)` with `gcd(n,k) = 1`, `k ≥ 2`: `D = U ∪ V_2 ∪ V_4 ∪ ... ∪ V_{2m}`
/// over the blocks of [`inner_blocks`]. With `t = ⌈n/k⌉` blocks, the size is
/// `n + mk` when `t = 2m+1` and `2n − mk` when `t = 2m`.
pub fn construct_gcd1(n: usize, k: usize) -> Result<ConstructionResult> {
    check_gcd1(n, k)?;
    let (set, claimed, odd) = gcd1_set(n, k)?;
    Ok(ConstructionResult {
        set,
        claimed_size: claimed,
        case_tag: if odd {
            CaseTag::Gcd1Odd
        } else {
            CaseTag::Gcd1Even
        },
        cut_forest_expected: true,
    })
}

fn check_gcd1(n: usize, k: usize) -> Result<()> {
    if k < 2 || 2 * k >= n || n.gcd(&k) != 1 {
        return Err(Error::invalid(format!(
            "gcd-1 construction needs gcd(n,k) = 1, k >= 2 and 2k < n, got n={n}, k={k}"
        )));
    }
    Ok(())
}

// (set, closed-form size, ⌈n/k⌉ odd). 2k < n makes ⌈n/k⌉ >= 3, so the odd
// case has m >= 1 and the even case m >= 2.
fn gcd1_set(n: usize, k: usize) -> Result<(VertexSet, usize, bool)> {
    let blocks = inner_blocks(n, k)?;
    let t = blocks.len();
    let m = t / 2;
    let mut set = VertexSet::from_members(2 * n, 0..n)?;
    for block in blocks.iter().skip(1).step_by(2) {
        set = set.union(block)?;
    }
    let claimed = if t % 2 == 1 { n + m * k } else { 2 * n - m * k };
    Ok((set, claimed, t % 2 == 1))
}

/// `P(n,k)` with `d = gcd(n,k) ≥ 2`. Inner cycle `C_r` (for `r = 1..=d`) runs
/// `v_{r-1}, v_{r-1+k}, v_{r-1+2k}, ...`; every third vertex of it, starting
/// at `v_{r-1}`, joins `D` alongside `U`, for `⌈n/3d⌉` per cycle. Indices
/// are taken mod `n`.
pub fn construct_gcd_d(n: usize, k: usize) -> Result<ConstructionResult> {
    check_gcd_d(n, k)?;
    let (set, claimed) = gcd_d_set(n, k)?;
    Ok(ConstructionResult {
        set,
        claimed_size: claimed,
        case_tag: CaseTag::GcdD,
        cut_forest_expected: true,
    })
}

fn check_gcd_d(n: usize, k: usize) -> Result<()> {
    if k < 1 || 2 * k >= n || n.gcd(&k) < 2 {
        return Err(Error::invalid(format!(
            "gcd-d construction needs gcd(n,k) >= 2 and 2k < n, got n={n}, k={k}"
        )));
    }
    Ok(())
}

fn gcd_d_set(n: usize, k: usize) -> Result<(VertexSet, usize)> {
    let d = n.gcd(&k);
    let per_cycle = n.div_ceil(3 * d);
    let mut set = VertexSet::from_members(2 * n, 0..n)?;
    for r in 0..d {
        for j in 0..per_cycle {
            set.insert(n + (r + 3 * j * k) % n)?;
        }
    }
    Ok((set, n + d * per_cycle))
}

/// Dispatches `P(n,k)` to the matching construction.
pub fn construct_petersen(n: usize, k: usize) -> Result<ConstructionResult> {
    petersen(n, k)?;
    if k == 1 {
        construct_pn1(n)
    } else if n.gcd(&k) == 1 {
        construct_gcd1(n, k)
    } else {
        construct_gcd_d(n, k)
    }
}

/// `I(n,j,k)`. The `P(n,k)` sets only rely on `U ⊆ D` and on the inner
/// cycles, which `I(n,j,k)` shares with `P(n,k)`, so the same set is used.
/// `j = 1` returns the `P(n,k)` result unchanged.
pub fn construct_igraph(n: usize, j: usize, k: usize) -> Result<ConstructionResult> {
    crate::families::igraph(n, j, k)?;
    if j == 1 {
        return construct_petersen(n, k);
    }
    let (set, claimed, tag) = if n.gcd(&k) == 1 {
        check_gcd1(n, k)?;
        let (set, claimed, _) = gcd1_set(n, k)?;
        (set, claimed, CaseTag::IgraphGcd1)
    } else {
        check_gcd_d(n, k)?;
        let (set, claimed) = gcd_d_set(n, k)?;
        (set, claimed, CaseTag::IgraphGcdD)
    };
    Ok(ConstructionResult {
        set,
        claimed_size: claimed,
        case_tag: tag,
        cut_forest_expected: true,
    })
}

/// Construction for an already built family graph.
pub fn construct_for(fg: &FamilyGraph) -> Result<ConstructionResult> {
    construct_igraph(fg.n, fg.j, fg.k)
}

/// Closed-form upper bound on the double domination number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UpperBound {
    /// The case's exact construction size.
    pub value: usize,
    /// `3n/2` for the `gcd(n,k) = 1`, `k ≥ 2` cases, kept as a rational.
    pub relaxed: Option<Ratio<usize>>,
}

/// Upper bound for `I(n,j,k)` (use `j = 1` for `P(n,k)`):
///
/// * `k = 1`: `2(⌊n/2⌋ + 1)`
/// * `gcd(n,k) = 1`: `n + mk` or `2n − mk`, relaxed to `3n/2`
/// * `gcd(n,k) = d ≥ 2`: `n + d⌈n/3d⌉`
pub fn upper_bound(n: usize, j: usize, k: usize) -> Result<UpperBound> {
    crate::families::igraph(n, j, k)?;
    if k == 1 {
        if j != 1 {
            return Err(Error::invalid(format!("no bound for I({n},{j},1)")));
        }
        return Ok(UpperBound {
            value: 2 * (n / 2 + 1),
            relaxed: None,
        });
    }
    let d = n.gcd(&k);
    if d == 1 {
        let t = n.div_ceil(k);
        let m = t / 2;
        let value = if t % 2 == 1 { n + m * k } else { 2 * n - m * k };
        Ok(UpperBound {
            value,
            relaxed: Some(Ratio::new(3 * n, 2)),
        })
    } else {
        Ok(UpperBound {
            value: n + d * n.div_ceil(3 * d),
            relaxed: None,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::is_signed_dds;
    use crate::families::igraph;

    #[test]
    fn pn1_sets() {
        let c = construct_pn1(5).unwrap();
        let p = petersen(5, 1).unwrap();
        assert_eq!(c.set, p.set_of(&[0, 2, 3, 4], &[0, 2]));
        assert_eq!((c.claimed_size, c.case_tag), (6, CaseTag::POdd1));

        let c = construct_pn1(4).unwrap();
        let p = petersen(4, 1).unwrap();
        assert_eq!(c.set, p.set_of(&[0, 2, 3], &[0, 2, 3]));
        assert_eq!((c.claimed_size, c.case_tag), (6, CaseTag::PEven1));

        let c = construct_pn1(6).unwrap();
        let g = petersen(6, 1).unwrap().graph;
        assert!(g.cut_subgraph(&c.set).unwrap().is_forest());

        let c = construct_pn1(3).unwrap();
        let p = petersen(3, 1).unwrap();
        assert_eq!(c.set, p.set_of(&[0, 1, 2], &[0]));
        assert!(is_signed_dds(&SignedGraph::all_positive(p.graph), &c.set)
            .unwrap()
            .ok());
    }

    #[test]
    fn tight_sets() {
        let (c, s) = construct_pn1_tight(4).unwrap();
        let p = petersen(4, 1).unwrap();
        assert_eq!(c.set, p.set_of(&[0, 2], &[0, 2]));
        assert!(is_signed_dds(&s, &c.set).unwrap().ok());

        let (c, s) = construct_pn1_tight(6).unwrap();
        let p = petersen(6, 1).unwrap();
        assert_eq!(c.claimed_size, 6);
        let dec = s
            .graph()
            .cut_subgraph(&c.set)
            .unwrap()
            .cycle_decomposition()
            .unwrap();
        assert_eq!(
            dec.cycles,
            vec![p.outer_cycles[0].clone(), p.inner_cycles[0].clone()]
        );

        let neg_outer = SignedGraph::with_negative_edges(p.graph, [(0, 1)]).unwrap();
        assert!(!is_signed_dds(&neg_outer, &c.set).unwrap().ok());
        assert!(construct_pn1_tight(5).is_err());
    }

    #[test]
    fn gcd1_sizes() {
        assert_eq!(construct_gcd1(17, 2).unwrap().claimed_size, 25);
        assert_eq!(construct_gcd1(17, 2).unwrap().case_tag, CaseTag::Gcd1Odd);
        assert_eq!(construct_gcd1(15, 2).unwrap().claimed_size, 22);
        assert_eq!(construct_gcd1(15, 2).unwrap().case_tag, CaseTag::Gcd1Even);
        let c = construct_gcd1(5, 2).unwrap();
        let p = petersen(5, 2).unwrap();
        assert_eq!(c.set, p.set_of(&[0, 1, 2, 3, 4], &[2, 3]));
        assert_eq!(c.claimed_size, 7);
        assert!(construct_gcd1(6, 2).is_err());
    }

    #[test]
    fn gcd_d_sets() {
        let c = construct_gcd_d(16, 6).unwrap();
        let p = petersen(16, 6).unwrap();
        let us: Vec<usize> = (0..16).collect();
        assert_eq!(c.set, p.set_of(&us, &[0, 2, 4, 1, 3, 5]));
        assert_eq!(c.claimed_size, 22);

        let c = construct_gcd_d(6, 2).unwrap();
        let p = petersen(6, 2).unwrap();
        assert_eq!(c.set, p.set_of(&[0, 1, 2, 3, 4, 5], &[0, 1]));
        assert_eq!(construct_gcd_d(9, 3).unwrap().claimed_size, 12);
        assert!(construct_gcd_d(7, 2).is_err());
    }

    #[test]
    fn igraph_sets() {
        let c = construct_igraph(7, 2, 3).unwrap();
        assert_eq!((c.claimed_size, c.case_tag), (10, CaseTag::IgraphGcd1));
        let c = construct_igraph(8, 2, 2).unwrap();
        assert_eq!((c.claimed_size, c.case_tag), (12, CaseTag::IgraphGcdD));
        assert_eq!(
            construct_igraph(11, 1, 3).unwrap(),
            construct_petersen(11, 3).unwrap()
        );
        let g = igraph(8, 2, 2).unwrap();
        assert!(g.graph.cut_subgraph(&c.set).unwrap().is_forest());
    }

    #[test]
    fn bounds() {
        assert_eq!(upper_bound(7, 1, 1).unwrap().value, 8);
        let b = upper_bound(15, 1, 2).unwrap();
        assert_eq!(b.value, 22);
        assert_eq!(b.relaxed, Some(Ratio::new(45, 2)));
        assert!(Ratio::from_integer(b.value) <= b.relaxed.unwrap());
        assert_eq!(upper_bound(16, 1, 6).unwrap().value, 22);
    }
}
