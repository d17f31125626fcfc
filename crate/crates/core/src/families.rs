//! Generalized Petersen graphs, I-graphs and disjoint unions of `K4`.
//!
//! Family graphs on `2n` vertices use a fixed index convention: `u_i` is
//! vertex `i` and `v_i` is vertex `n + i`, with subscripts taken mod `n`.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// A named graph family instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family")]
pub enum Family {
    /// `P(n,k)`
    #[serde(rename = "P")]
    Petersen { n: usize, k: usize },
    /// `I(n,j,k)`
    #[serde(rename = "I")]
    IGraph { n: usize, j: usize, k: usize },
    /// `m` disjoint copies of `K4`
    #[serde(rename = "K4U")]
    K4Union { m: usize },
}

impl Family {
    /// The `n` of the `u_i`/`v_i` labelling, or `None` for families without
    /// that naming scheme.
    pub fn rim_size(&self) -> Option<usize> {
        match *self {
            Family::Petersen { n, .. } | Family::IGraph { n, .. } => Some(n),
            Family::K4Union { .. } => None,
        }
    }

    pub fn build(&self) -> Result<Graph> {
        match *self {
            Family::Petersen { n, k } => Ok(petersen(n, k)?.graph),
            Family::IGraph { n, j, k } => Ok(igraph(n, j, k)?.graph),
            Family::K4Union { m } => k4_union(m),
        }
    }

    /// Header comment used by the edge-list writers, e.g. `# family P 5 2`.
    pub fn header(&self) -> String {
        match *self {
            Family::Petersen { n, k } => format!("# family P {n} {k}"),
            Family::IGraph { n, j, k } => format!("# family I {n} {j} {k}"),
            Family::K4Union { m } => format!("# family K4U {m}"),
        }
    }

    /// Parses the words after `family`, e.g. `["P", "5", "2"]`.
    pub fn from_words(words: &[&str]) -> Result<Family> {
        let nums = |rest: &[&str], want: usize| -> Result<Vec<usize>> {
            if rest.len() != want {
                return Err(Error::invalid(format!(
                    "family {} takes {want} parameters, got {}",
                    words[0],
                    rest.len()
                )));
            }
            rest.iter()
                .map(|w| {
                    w.parse::<usize>()
                        .map_err(|_| Error::invalid(format!("bad family parameter {w:?}")))
                })
                .collect()
        };
        match words.split_first() {
            Some((&"P", rest)) => {
                let p = nums(rest, 2)?;
                Ok(Family::Petersen { n: p[0], k: p[1] })
            }
            Some((&"I", rest)) => {
                let p = nums(rest, 3)?;
                Ok(Family::IGraph {
                    n: p[0],
                    j: p[1],
                    k: p[2],
                })
            }
            Some((&"K4U", rest)) => {
                let p = nums(rest, 1)?;
                Ok(Family::K4Union { m: p[0] })
            }
            Some((other, _)) => Err(Error::invalid(format!("unknown family {other:?}"))),
            None => Err(Error::invalid("missing family name")),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Petersen { n, k } => write!(f, "P({n},{k})"),
            Family::IGraph { n, j, k } => write!(f, "I({n},{j},{k})"),
            Family::K4Union { m } => write!(f, "K4U({m})"),
        }
    }
}

/// `P(n,k)` or `I(n,j,k)` together with its named parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyGraph {
    pub graph: Graph,
    pub n: usize,
    /// Outer step; 1 for `P(n,k)`.
    pub j: usize,
    /// Inner step.
    pub k: usize,
    /// `u_i v_i` for `i = 0..n`.
    pub spokes: Vec<(usize, usize)>,
    /// Cycles induced by the u-vertices, `gcd(n,j)` of them.
    pub outer_cycles: Vec<Vec<usize>>,
    /// Cycles induced by the v-vertices, `gcd(n,k)` of them.
    pub inner_cycles: Vec<Vec<usize>>,
}

impl FamilyGraph {
    pub fn family(&self) -> Family {
        if self.j == 1 {
            Family::Petersen {
                n: self.n,
                k: self.k,
            }
        } else {
            Family::IGraph {
                n: self.n,
                j: self.j,
                k: self.k,
            }
        }
    }

    pub fn u(&self, i: usize) -> usize {
        i % self.n
    }

    pub fn v(&self, i: usize) -> usize {
        self.n + i % self.n
    }

    /// The set `U` of all u-vertices.
    pub fn u_side(&self) -> VertexSet {
        VertexSet::from_members(2 * self.n, 0..self.n).expect("in range")
    }

    /// Builds a vertex set from `u`/`v` subscripts (taken mod `n`).
    pub fn set_of(&self, us: &[usize], vs: &[usize]) -> VertexSet {
        let members = us
            .iter()
            .map(|&i| self.u(i))
            .chain(vs.iter().map(|&i| self.v(i)));
        VertexSet::from_members(2 * self.n, members).expect("in range")
    }
}

/// `P(n,k)`, defined for `2 ≤ 2k < n`.
pub fn petersen(n: usize, k: usize) -> Result<FamilyGraph> {
    if k < 1 || 2 * k >= n {
        return Err(Error::invalid(format!(
            "P({n},{k}) needs 1 <= k and 2k < n"
        )));
    }
    build_igraph(n, 1, k)
}

/// `I(n,j,k)` with edges `u_i u_{i+j}`, `u_i v_i`, `v_i v_{i+k}`.
///
/// Requires `j, k ≥ 1`, `2j < n` and `2k < n`, which keeps the graph simple
/// and cubic. `j > k` is accepted so that `I(n,k,j)` can be built for the
/// u/v swap. `igraph(n, 1, k)` is `P(n,k)` edge for edge.
pub fn igraph(n: usize, j: usize, k: usize) -> Result<FamilyGraph> {
    if j < 1 || k < 1 || 2 * j >= n || 2 * k >= n {
        return Err(Error::invalid(format!(
            "I({n},{j},{k}) needs j, k >= 1, 2j < n and 2k < n"
        )));
    }
    build_igraph(n, j, k)
}

fn build_igraph(n: usize, j: usize, k: usize) -> Result<FamilyGraph> {
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..n {
        edges.push((i, (i + j) % n));
        edges.push((i, n + i));
        edges.push((n + i, n + (i + k) % n));
    }
    let graph = Graph::new(2 * n, edges)?;
    let spokes = (0..n).map(|i| (i, n + i)).collect();
    let outer_cycles = rim_cycles(n, j, 0);
    let inner_cycles = rim_cycles(n, k, n);
    Ok(FamilyGraph {
        graph,
        n,
        j,
        k,
        spokes,
        outer_cycles,
        inner_cycles,
    })
}

// Orbits of i -> i + step (mod n), each started at its smallest index and
// shifted by `offset` into the vertex index space.
fn rim_cycles(n: usize, step: usize, offset: usize) -> Vec<Vec<usize>> {
    let d = n.gcd(&step);
    (0..d)
        .map(|start| {
            (0..n / d)
                .map(|t| offset + (start + t * step) % n)
                .collect()
        })
        .collect()
}

/// `m` disjoint copies of `K4`; copy `c` uses vertices `4c..4c+4`.
pub fn k4_union(m: usize) -> Result<Graph> {
    if m < 1 {
        return Err(Error::invalid("K4 union needs m >= 1"));
    }
    let edges = (0..m).flat_map(|c| {
        let b = 4 * c;
        [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
            .into_iter()
            .map(move |(x, y)| (b + x, b + y))
    });
    Graph::new(4 * m, edges)
}

/// Splits the v-vertices of `P(n,k)` into consecutive blocks
/// `{v_{(i-1)k}, ..., v_{(i-1)k+k-1}}`, with a shorter last block when `k`
/// does not divide `n`. There are `⌈n/k⌉` blocks, over `2n` vertices.
pub fn inner_blocks(n: usize, k: usize) -> Result<Vec<VertexSet>> {
    if k < 2 || n.gcd(&k) != 1 || 2 * k >= n {
        return Err(Error::invalid(format!(
            "inner blocks need gcd(n,k) = 1, k >= 2 and 2k < n, got n={n}, k={k}"
        )));
    }
    let t = n.div_ceil(k);
    (0..t)
        .map(|b| {
            let lo = b * k;
            let hi = (lo + k).min(n);
            VertexSet::from_members(2 * n, (lo..hi).map(|i| n + i))
        })
        .collect()
}

/// `u3`/`v3` style label for a family vertex.
pub fn vertex_label(n: usize, vertex: usize) -> String {
    if vertex < n {
        format!("u{vertex}")
    } else {
        format!("v{}", vertex - n)
    }
}

/// Resolves a vertex token: a raw index, or `u<i>`/`v<i>` when `rim` gives
/// the family's `n`. Labelled subscripts must be below `n`.
pub fn parse_vertex(token: &str, rim: Option<usize>, vertex_count: usize) -> Result<usize> {
    let bad = || Error::BadLabel(token.to_string());
    let vertex = match token.chars().next() {
        Some(side @ ('u' | 'v')) => {
            let n = rim.ok_or_else(bad)?;
            let i: usize = token[1..].parse().map_err(|_| bad())?;
            if i >= n {
                return Err(bad());
            }
            if side == 'u' {
                i
            } else {
                n + i
            }
        }
        _ => token.parse().map_err(|_| bad())?,
    };
    if vertex >= vertex_count {
        return Err(Error::VertexOutOfRange {
            vertex,
            n: vertex_count,
        });
    }
    Ok(vertex)
}

/// Parses a comma or whitespace separated list of vertex tokens.
pub fn parse_vertex_set(spec: &str, rim: Option<usize>, vertex_count: usize) -> Result<VertexSet> {
    let members = spec
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| parse_vertex(t, rim, vertex_count))
        .collect::<Result<Vec<_>>>()?;
    VertexSet::from_members(vertex_count, members)
}

/// Formats a set with family labels when `rim` is known, raw indices
/// otherwise.
pub fn format_vertex_set(set: &VertexSet, rim: Option<usize>) -> String {
    set.iter()
        .map(|v| match rim {
            Some(n) => vertex_label(n, v),
            None => v.to_string(),
        })
        .collect::<Vec<_>>()
        .join(",")
}
