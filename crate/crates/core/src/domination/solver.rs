//! Exact minimum k-tuple and signed double dominating sets.
//!
//! Sizes are tried in increasing order starting from the counting bound
//! `⌈k·|V| / (Δ+1)⌉` (which is `|V|/2` for cubic graphs and `k = 2`). For a
//! fixed size the search decides vertices `0, 1, 2, ...` in turn, trying
//! "include" before "exclude", so the first set found is the
//! lexicographically smallest of that size. A branch is cut when
//!
//! * some vertex can no longer reach `k` even if every undecided member of
//!   its closed neighborhood is added,
//! * the total coverage deficit exceeds what the remaining picks can supply,
//! * (signed) the cut edges between already decided vertices are unbalanced.
//!   Adding vertices only adds cut edges among decided vertices, so an
//!   unbalanced partial cut stays unbalanced.
//!
//! The subtrees "first member is `f`" are disjoint and ordered by `f`; the
//! parallel mode hands them to rayon and keeps the smallest `f` that
//! succeeds, which yields the same witness as the sequential search.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;
use crate::signed::SignedGraph;

/// Search limits. `None` means unlimited.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub time_limit: Option<Duration>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOptions {
    /// Graphs with more vertices are refused.
    pub max_vertices: usize,
    pub budget: Budget,
    /// Worker threads; 1 runs the search on the calling thread.
    pub threads: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            max_vertices: 24,
            budget: Budget::default(),
            threads: 1,
        }
    }
}

/// Result of an exact search.
///
/// When `limits_hit` is set the search stopped early: `witness` is still a
/// valid set (the whole vertex set) but `value` is only an upper bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub value: usize,
    pub witness: VertexSet,
    pub nodes_explored: u64,
    pub limits_hit: bool,
}

/// Minimum `k`-tuple dominating set of `g`.
pub fn min_k_tuple_dominating(g: &Graph, k: usize, opts: &SolveOptions) -> Result<SolveResult> {
    solve(g, None, k, opts)
}

/// Minimum double dominating set of `s` (coverage 2 and balanced cut).
pub fn min_signed_dds(s: &SignedGraph, opts: &SolveOptions) -> Result<SolveResult> {
    solve(s.graph(), Some(s), 2, opts)
}

/// [`min_signed_dds`] with the coverage threshold as a parameter.
pub fn min_signed_k_tuple(s: &SignedGraph, k: usize, opts: &SolveOptions) -> Result<SolveResult> {
    solve(s.graph(), Some(s), k, opts)
}

fn solve(
    g: &Graph,
    signed: Option<&SignedGraph>,
    k: usize,
    opts: &SolveOptions,
) -> Result<SolveResult> {
    let n = g.vertex_count();
    if k < 1 {
        return Err(Error::invalid("k-tuple domination needs k >= 1"));
    }
    if n > opts.max_vertices {
        return Err(Error::SizeLimitExceeded {
            what: "vertex count",
            actual: n,
            limit: opts.max_vertices,
        });
    }
    // Coverage is monotone, so V itself must cover everything. V has an
    // empty cut, so it then passes the balance condition too.
    if let Some(v) = (0..n).find(|&v| g.degree(v) + 1 < k) {
        return Err(Error::Infeasible {
            k,
            vertex: v,
            size: g.degree(v) + 1,
        });
    }
    if n == 0 {
        return Ok(SolveResult {
            value: 0,
            witness: VertexSet::empty(0),
            nodes_explored: 0,
            limits_hit: false,
        });
    }

    let inst = Instance::new(g, signed, k);
    let limits = Limits::new(&opts.budget);
    let lower = (k * n).div_ceil(g.max_degree() + 1).max(k).min(n);

    for size in lower..=n {
        let found = if opts.threads > 1 {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(opts.threads)
                .build()
                .map_err(|e| Error::invalid(format!("thread pool: {e}")))?;
            pool.install(|| {
                (0..=n - size)
                    .into_par_iter()
                    .find_map_first(|first| inst.search_from(first, size, &limits))
            })
        } else {
            (0..=n - size).find_map(|first| inst.search_from(first, size, &limits))
        };

        if limits.aborted() {
            break;
        }
        if let Some(members) = found {
            return Ok(SolveResult {
                value: size,
                witness: VertexSet::from_members(n, members)?,
                nodes_explored: limits.nodes(),
                limits_hit: false,
            });
        }
    }

    // Budget exhausted (the full vertex set always qualifies, so the loop
    // only falls through on abort).
    Ok(SolveResult {
        value: n,
        witness: VertexSet::full(n),
        nodes_explored: limits.nodes(),
        limits_hit: true,
    })
}

struct Limits {
    max_nodes: u64,
    deadline: Option<Instant>,
    nodes: AtomicU64,
    aborted: AtomicBool,
}

impl Limits {
    fn new(b: &Budget) -> Self {
        Limits {
            max_nodes: b.max_nodes.unwrap_or(u64::MAX),
            deadline: b.time_limit.map(|t| Instant::now() + t),
            nodes: AtomicU64::new(0),
            aborted: AtomicBool::new(false),
        }
    }

    /// Counts one node; false once any limit is exceeded.
    #[inline]
    fn tick(&self) -> bool {
        if self.aborted.load(Ordering::Relaxed) {
            return false;
        }
        let count = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        let over_time =
            count.is_multiple_of(1024) && self.deadline.is_some_and(|d| Instant::now() >= d);
        if count > self.max_nodes || over_time {
            self.aborted.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    fn aborted(&self) -> bool {
        self.aborted.load(Ordering::Relaxed)
    }

    fn nodes(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed).min(self.max_nodes)
    }
}

struct Instance {
    n: usize,
    k: u32,
    closed: Vec<Vec<usize>>,
    /// For signed searches: edges to smaller neighbors, flagged when negative.
    back_edges: Option<Vec<Vec<(usize, bool)>>>,
    max_closed: u32,
}

impl Instance {
    fn new(g: &Graph, signed: Option<&SignedGraph>, k: usize) -> Self {
        let n = g.vertex_count();
        let closed = (0..n)
            .map(|v| {
                let mut c = g.neighbors(v).to_vec();
                c.push(v);
                c
            })
            .collect();
        let back_edges = signed.map(|s| {
            (0..n)
                .map(|x| {
                    g.neighbors(x)
                        .iter()
                        .filter(|&&y| y < x)
                        .map(|&y| (y, s.sign(x, y).expect("edge").is_negative()))
                        .collect()
                })
                .collect()
        });
        Instance {
            n,
            k: k as u32,
            closed,
            back_edges,
            max_closed: g.max_degree() as u32 + 1,
        }
    }

    /// Searches the sets of `size` vertices whose smallest member is `first`.
    fn search_from(&self, first: usize, size: usize, limits: &Limits) -> Option<Vec<usize>> {
        if limits.aborted() {
            return None;
        }
        let mut st = State::new(self);
        for x in 0..first {
            if !st.assign(self, x, false) {
                return None;
            }
        }
        if !st.assign(self, first, true) || st.deficit > (size as u32 - 1) * self.max_closed {
            return None;
        }
        if st.dfs(self, first + 1, size - 1, limits) {
            Some((0..self.n).filter(|&v| st.chosen[v]).collect())
        } else {
            None
        }
    }
}

struct State {
    chosen: Vec<bool>,
    cover: Vec<u32>,
    undecided: Vec<u32>,
    /// Sum over vertices of `max(0, k - cover)`.
    deficit: u32,
    uf: ParityUnionFind,
}

impl State {
    fn new(inst: &Instance) -> Self {
        State {
            chosen: vec![false; inst.n],
            cover: vec![0; inst.n],
            undecided: inst.closed.iter().map(|c| c.len() as u32).collect(),
            deficit: inst.k * inst.n as u32,
            uf: ParityUnionFind::new(inst.n),
        }
    }

    fn dfs(&mut self, inst: &Instance, pos: usize, picks: usize, limits: &Limits) -> bool {
        if !limits.tick() {
            return false;
        }
        if pos == inst.n {
            return picks == 0;
        }
        let picks_cap = |p: usize| p as u32 * inst.max_closed;

        if picks > 0 {
            let mark = self.uf.mark();
            if self.assign(inst, pos, true)
                && self.deficit <= picks_cap(picks - 1)
                && self.dfs(inst, pos + 1, picks - 1, limits)
            {
                return true;
            }
            self.unassign(inst, pos, true, mark);
            if limits.aborted() {
                return false;
            }
        }
        if inst.n - pos > picks {
            let mark = self.uf.mark();
            if self.assign(inst, pos, false)
                && self.deficit <= picks_cap(picks)
                && self.dfs(inst, pos + 1, picks, limits)
            {
                return true;
            }
            self.unassign(inst, pos, false, mark);
        }
        false
    }

    /// Decides vertex `x`. Returns false if the partial assignment can no
    /// longer be completed; the caller undoes it either way.
    fn assign(&mut self, inst: &Instance, x: usize, include: bool) -> bool {
        self.chosen[x] = include;
        let mut ok = true;
        for &w in &inst.closed[x] {
            self.undecided[w] -= 1;
            if include {
                if self.cover[w] < inst.k {
                    self.deficit -= 1;
                }
                self.cover[w] += 1;
            }
            if self.cover[w] + self.undecided[w] < inst.k {
                ok = false;
            }
        }
        if ok {
            if let Some(back) = &inst.back_edges {
                for &(y, negative) in &back[x] {
                    if self.chosen[y] != include && !self.uf.union(x, y, negative) {
                        return false;
                    }
                }
            }
        }
        ok
    }

    fn unassign(&mut self, inst: &Instance, x: usize, include: bool, mark: usize) {
        self.uf.rollback(mark);
        for &w in &inst.closed[x] {
            self.undecided[w] += 1;
            if include {
                self.cover[w] -= 1;
                if self.cover[w] < inst.k {
                    self.deficit += 1;
                }
            }
        }
        self.chosen[x] = false;
    }
}

/// Union-find over vertex markings with parity (`true` = marking differs
/// from the root's). No path compression, so unions can be rolled back.
struct ParityUnionFind {
    parent: Vec<usize>,
    parity: Vec<bool>,
    rank: Vec<u8>,
    log: Vec<(usize, Option<usize>)>,
}

impl ParityUnionFind {
    fn new(n: usize) -> Self {
        ParityUnionFind {
            parent: (0..n).collect(),
            parity: vec![false; n],
            rank: vec![0; n],
            log: Vec::new(),
        }
    }

    fn find(&self, mut x: usize) -> (usize, bool) {
        let mut p = false;
        while self.parent[x] != x {
            p ^= self.parity[x];
            x = self.parent[x];
        }
        (x, p)
    }

    /// Requires the markings of `a` and `b` to differ iff `differ`. Returns
    /// false on contradiction, which leaves the structure unchanged.
    fn union(&mut self, a: usize, b: usize, differ: bool) -> bool {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            return pa ^ pb == differ;
        }
        let (child, root) = if self.rank[ra] < self.rank[rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[child] = root;
        self.parity[child] = pa ^ pb ^ differ;
        let bumped = if self.rank[ra] == self.rank[rb] {
            self.rank[root] += 1;
            Some(root)
        } else {
            None
        };
        self.log.push((child, bumped));
        true
    }

    fn mark(&self) -> usize {
        self.log.len()
    }

    fn rollback(&mut self, mark: usize) {
        while self.log.len() > mark {
            let (child, bumped) = self.log.pop().expect("non-empty");
            self.parent[child] = child;
            self.parity[child] = false;
            if let Some(root) = bumped {
                self.rank[root] -= 1;
            }
        }
    }
}
