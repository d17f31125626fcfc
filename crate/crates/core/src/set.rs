//! Dense vertex sets backed by a word-packed bitmask.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

const WORD: usize = 64;

/// A subset of `0..universe`.
///
/// Equality includes the universe size. [`Ord`] compares the sorted member
/// lists lexicographically, so `{0, 3} < {1, 2}`; the exact solvers use the
/// same order to pick a canonical witness.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            universe,
            words: vec![0; universe.div_ceil(WORD)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = Self::empty(universe);
        for v in 0..universe {
            set.words[v / WORD] |= 1 << (v % WORD);
        }
        set
    }

    /// Builds a set from members, rejecting any index outside the universe.
    /// Repeated members are ignored.
    pub fn from_members<I>(universe: usize, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set = Self::empty(universe);
        for v in members {
            set.insert(v)?;
        }
        Ok(set)
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, v: usize) -> Result<bool> {
        self.check(v)?;
        let (w, bit) = (v / WORD, 1u64 << (v % WORD));
        let fresh = self.words[w] & bit == 0;
        self.words[w] |= bit;
        Ok(fresh)
    }

    pub fn remove(&mut self, v: usize) -> Result<bool> {
        self.check(v)?;
        let (w, bit) = (v / WORD, 1u64 << (v % WORD));
        let present = self.words[w] & bit != 0;
        self.words[w] &= !bit;
        Ok(present)
    }

    /// Membership test; indices outside the universe are simply absent.
    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.universe).filter(move |&v| self.contains(v))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn complement(&self) -> Self {
        let mut out = Self::full(self.universe);
        for (o, w) in out.words.iter_mut().zip(&self.words) {
            *o &= !w;
        }
        out
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.same_universe(other)?;
        let mut out = self.clone();
        for (o, w) in out.words.iter_mut().zip(&other.words) {
            *o |= w;
        }
        Ok(out)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.universe == other.universe
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(a, b)| a & !b == 0)
    }

    /// Errors unless the set lives over exactly `n` vertices.
    pub fn check_universe(&self, n: usize) -> Result<()> {
        if self.universe == n {
            Ok(())
        } else {
            Err(Error::UniverseMismatch {
                set: self.universe,
                graph: n,
            })
        }
    }

    fn same_universe(&self, other: &Self) -> Result<()> {
        other.check_universe(self.universe)
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.universe {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.universe,
            })
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter()
            .cmp(other.iter())
            .then(self.universe.cmp(&other.universe))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}
