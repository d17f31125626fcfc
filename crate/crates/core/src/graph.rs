//! Simple undirected graphs on dense vertex indices.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::set::VertexSet;

/// Default edge cap for [`Graph::enumerate_cycles`].
pub const DEFAULT_CYCLE_EDGE_LIMIT: usize = 64;

/// Undirected simple graph with vertices `0..n`.
///
/// Edges are stored once as `(min, max)` in sorted order, and every vertex
/// keeps a sorted neighbor list. Values are immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

/// The edges with exactly one endpoint in `left`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCut {
    pub left: VertexSet,
    pub edges: Vec<(usize, usize)>,
}

/// An edge partition of an even graph into cycles. Each cycle is a vertex
/// sequence; the closing edge back to the first vertex is implicit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleDecomposition {
    pub cycles: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse silently; self-loops and out-of-range endpoints
    /// are rejected.
    pub fn new<I>(n: usize, edge_list: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut edges = Vec::new();
        for (a, b) in edge_list {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        edges.dedup();

        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn edgeless(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edges in sorted order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && self.adj[a].binary_search(&b).is_ok()
    }

    /// Position of `{a, b}` in [`Graph::edges`].
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        self.edges.binary_search(&(a.min(b), a.max(b))).ok()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        VertexSet::from_members(self.n, self.adj[v].iter().copied().chain([v]))
    }

    /// The edge cut `[X : V∖X]`, edges in canonical order.
    pub fn edge_cut(&self, x: &VertexSet) -> Result<EdgeCut> {
        x.check_universe(self.n)?;
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|&(a, b)| x.contains(a) != x.contains(b))
            .collect();
        Ok(EdgeCut {
            left: x.clone(),
            edges,
        })
    }

    /// The subgraph spanned by the edges of `[X : V∖X]`. The vertex set is
    /// kept whole, so vertices with no cut edge stay as isolated vertices.
    pub fn cut_subgraph(&self, x: &VertexSet) -> Result<Graph> {
        let cut = self.edge_cut(x)?;
        Graph::new(self.n, cut.edges)
    }

    pub fn is_even(&self) -> bool {
        self.adj.iter().all(|l| l.len() % 2 == 0)
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.adj.iter().all(|l| l.len() == d)
    }

    pub fn is_cubic(&self) -> bool {
        self.is_regular(3)
    }

    /// Errors with the first vertex whose degree is not 3.
    pub fn check_cubic(&self) -> Result<()> {
        match (0..self.n).find(|&v| self.degree(v) != 3) {
            None => Ok(()),
            Some(vertex) => Err(Error::NotCubic {
                vertex,
                degree: self.degree(vertex),
            }),
        }
    }

    /// Component label per vertex; labels are assigned in order of each
    /// component's smallest vertex.
    pub fn components(&self) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.n];
        let mut next = 0;
        let mut stack = Vec::new();
        for root in 0..self.n {
            if label[root] != usize::MAX {
                continue;
            }
            label[root] = next;
            stack.push(root);
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if label[w] == usize::MAX {
                        label[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        label
    }

    pub fn component_count(&self) -> usize {
        self.components().into_iter().max().map_or(0, |m| m + 1)
    }

    /// A graph is a forest iff `|E| = |V| - #components`.
    pub fn is_forest(&self) -> bool {
        self.edges.len() + self.component_count() == self.n
    }

    /// Splits an even graph into edge-disjoint cycles.
    ///
    /// Starting from the smallest vertex that still has unused edges, walk
    /// along the smallest-index unused edge until the walk revisits a vertex
    /// on the current trail, then cut that closed stretch off as a cycle and
    /// keep walking from the revisited vertex. Each emitted cycle is rotated
    /// to start at its smallest vertex, heading towards the smaller of its
    /// two neighbors on the cycle.
    pub fn cycle_decomposition(&self) -> Result<CycleDecomposition> {
        if let Some(vertex) = (0..self.n).find(|&v| self.degree(v) % 2 == 1) {
            return Err(Error::NotEvenGraph {
                vertex,
                degree: self.degree(vertex),
            });
        }

        let mut used = vec![false; self.edges.len()];
        let mut unused_degree = self.degrees();
        // Position of each vertex on the current trail, if it is on it.
        let mut on_trail = vec![usize::MAX; self.n];
        let mut cycles = Vec::new();

        while let Some(start) = (0..self.n).find(|&v| unused_degree[v] > 0) {
            let mut trail = vec![start];
            on_trail[start] = 0;
            loop {
                let cur = *trail.last().expect("trail never empty");
                let next = self.adj[cur].iter().copied().find(|&w| {
                    let e = self.edge_index(cur, w).expect("adjacent");
                    !used[e]
                });
                let Some(next) = next else {
                    // In an even graph the walk can only stall where it began.
                    debug_assert_eq!(trail.len(), 1);
                    on_trail[cur] = usize::MAX;
                    break;
                };
                used[self.edge_index(cur, next).expect("adjacent")] = true;
                unused_degree[cur] -= 1;
                unused_degree[next] -= 1;

                if on_trail[next] == usize::MAX {
                    on_trail[next] = trail.len();
                    trail.push(next);
                } else {
                    let at = on_trail[next];
                    let cycle: Vec<usize> = trail.drain(at..).collect();
                    for &v in &cycle {
                        on_trail[v] = usize::MAX;
                    }
                    on_trail[next] = trail.len();
                    trail.push(next);
                    cycles.push(canonical_cycle(&cycle));
                }
            }
        }
        Ok(CycleDecomposition { cycles })
    }

    /// Enumerates every simple cycle once, in canonical form (see
    /// [`canonical_cycle`]), sorted. Refuses graphs with more than
    /// `max_edges` edges.
    pub fn enumerate_cycles(&self, max_edges: usize) -> Result<Vec<Vec<usize>>> {
        if self.edges.len() > max_edges {
            return Err(Error::SizeLimitExceeded {
                what: "edge count",
                actual: self.edges.len(),
                limit: max_edges,
            });
        }
        let mut out = Vec::new();
        let mut path = Vec::new();
        let mut on_path = vec![false; self.n];
        for start in 0..self.n {
            path.push(start);
            on_path[start] = true;
            self.extend_paths(start, &mut path, &mut on_path, &mut out);
            on_path[start] = false;
            path.pop();
        }
        out.sort();
        Ok(out)
    }

    // Simple paths from `start` through vertices larger than `start`; a path
    // closes into a cycle when its last vertex touches `start`. Requiring
    // path[1] < last keeps one of the two orientations.
    fn extend_paths(
        &self,
        start: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let cur = *path.last().expect("non-empty");
        for &w in &self.adj[cur] {
            if w == start && path.len() >= 3 && path[1] < cur {
                out.push(path.clone());
            } else if w > start && !on_path[w] {
                on_path[w] = true;
                path.push(w);
                self.extend_paths(start, path, on_path, out);
                path.pop();
                on_path[w] = false;
            }
        }
    }
}

impl CycleDecomposition {
    /// Every cycle edge in canonical `(min, max)` form, in cycle order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.cycles.iter().flat_map(|c| cycle_edges(c)).collect()
    }
}

/// Consecutive pairs of a closed vertex sequence, canonicalized.
pub fn cycle_edges(cycle: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    let len = cycle.len();
    (0..len).map(move |i| {
        let (a, b) = (cycle[i], cycle[(i + 1) % len]);
        (a.min(b), a.max(b))
    })
}

/// Rotates a cycle to start at its smallest vertex and orients it towards
/// the smaller of that vertex's two cycle neighbors.
pub fn canonical_cycle(cycle: &[usize]) -> Vec<usize> {
    let len = cycle.len();
    if len == 0 {
        return Vec::new();
    }
    let (at, _) = cycle
        .iter()
        .enumerate()
        .min_by_key(|&(_, v)| v)
        .expect("non-empty");
    let forward = cycle[(at + 1) % len];
    let backward = cycle[(at + len - 1) % len];
    if forward <= backward {
        (0..len).map(|i| cycle[(at + i) % len]).collect()
    } else {
        (0..len).map(|i| cycle[(at + len - i) % len]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn k4_is_complete_and_cubic() {
        let g = k4();
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.degrees(), vec![3; 4]);
        assert!(g.is_cubic());
    }

    #[test]
    fn edgeless_graph_has_zero_degrees() {
        let g = Graph::new(3, []).unwrap();
        assert_eq!(g.degrees(), vec![0, 0, 0]);
        assert_eq!(g, Graph::edgeless(3));
    }

    #[test]
    fn duplicate_pairs_collapse() {
        let g = Graph::new(4, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn rejects_loops_and_out_of_range() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::new(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn closed_neighborhoods() {
        assert_eq!(
            k4().closed_neighborhood(0).unwrap().to_vec(),
            vec![0, 1, 2, 3]
        );
        assert_eq!(
            Graph::edgeless(3).closed_neighborhood(2).unwrap().to_vec(),
            vec![2]
        );
        assert!(k4().closed_neighborhood(4).is_err());
    }

    #[test]
    fn k4_cut_is_k22() {
        let g = k4();
        let x = VertexSet::from_members(4, [0, 1]).unwrap();
        let cut = g.edge_cut(&x).unwrap();
        assert_eq!(cut.edges, vec![(0, 2), (0, 3), (1, 2), (1, 3)]);
        let sub = g.cut_subgraph(&x).unwrap();
        assert!(sub.is_regular(2));
        assert_eq!(
            sub.cycle_decomposition().unwrap().cycles,
            vec![vec![0, 2, 1, 3]]
        );
    }

    #[test]
    fn empty_side_gives_empty_cut() {
        let g = k4();
        let x = VertexSet::empty(4);
        assert!(g.edge_cut(&x).unwrap().edges.is_empty());
        assert_eq!(g.cut_subgraph(&x).unwrap(), Graph::edgeless(4));
        assert!(matches!(
            g.edge_cut(&VertexSet::empty(5)),
            Err(Error::UniverseMismatch { .. })
        ));
    }

    #[test]
    fn evenness() {
        assert!(cycle(4).is_even());
        assert!(!k4().is_even());
    }

    #[test]
    fn decomposes_cycles_and_disjoint_triangles() {
        assert_eq!(
            cycle(4).cycle_decomposition().unwrap().cycles,
            vec![vec![0, 1, 2, 3]]
        );
        let two = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(
            two.cycle_decomposition().unwrap().cycles,
            vec![vec![0, 1, 2], vec![3, 4, 5]]
        );
        assert_eq!(
            k4().cycle_decomposition(),
            Err(Error::NotEvenGraph {
                vertex: 0,
                degree: 3
            })
        );
    }

    #[test]
    fn bowtie_splits_at_shared_vertex() {
        // Two triangles sharing vertex 0.
        let g = Graph::new(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
        let dec = g.cycle_decomposition().unwrap();
        assert_eq!(dec.cycles, vec![vec![0, 1, 2], vec![0, 3, 4]]);
    }

    #[test]
    fn counts_cycles() {
        assert_eq!(cycle(3).enumerate_cycles(64).unwrap(), vec![vec![0, 1, 2]]);
        let k4_cycles = k4().enumerate_cycles(64).unwrap();
        assert_eq!(k4_cycles.len(), 7);
        assert_eq!(k4_cycles.iter().filter(|c| c.len() == 3).count(), 4);
        assert_eq!(k4_cycles.iter().filter(|c| c.len() == 4).count(), 3);
        let tree = Graph::new(5, [(0, 1), (0, 2), (2, 3), (2, 4)]).unwrap();
        assert!(tree.enumerate_cycles(64).unwrap().is_empty());
        assert!(tree.is_forest());
        assert!(matches!(
            k4().enumerate_cycles(5),
            Err(Error::SizeLimitExceeded {
                actual: 6,
                limit: 5,
                ..
            })
        ));
    }

    #[test]
    fn canonical_form_handles_rotation_and_reflection() {
        assert_eq!(canonical_cycle(&[3, 1, 2, 0]), vec![0, 2, 1, 3]);
        assert_eq!(canonical_cycle(&[2, 0, 3, 1]), vec![0, 2, 1, 3]);
    }
}
