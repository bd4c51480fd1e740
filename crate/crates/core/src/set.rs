//! Fixed-universe subsets of `Z_n` with cyclic interval constructors.

use std::cmp::Ordering;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A subset of `Z_n` backed by a bitmask. The universe size is part of the
/// value; binary operations require both operands to share it.
///
/// Ordering is lexicographic on the ascending member list (with a proper
/// prefix sorting first), which is the tie-break order used across the crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct IndexSet {
    universe: u32,
    bits: u128,
}

pub const MAX_UNIVERSE: u32 = 128;

fn universe_mask(n: u32) -> u128 {
    if n == 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

fn check_universe(n: u32) -> Result<()> {
    if n == 0 || n > MAX_UNIVERSE {
        return Err(Error::Universe(n));
    }
    Ok(())
}

impl IndexSet {
    pub fn empty(universe: u32) -> Result<Self> {
        check_universe(universe)?;
        Ok(IndexSet { universe, bits: 0 })
    }

    pub fn full(universe: u32) -> Result<Self> {
        check_universe(universe)?;
        Ok(IndexSet {
            universe,
            bits: universe_mask(universe),
        })
    }

    pub fn from_members<I: IntoIterator<Item = u32>>(universe: u32, members: I) -> Result<Self> {
        let mut s = IndexSet::empty(universe)?;
        for m in members {
            s.insert(m)?;
        }
        Ok(s)
    }

    pub(crate) fn from_bits(universe: u32, bits: u128) -> Self {
        debug_assert!(bits & !universe_mask(universe) == 0);
        IndexSet { universe, bits }
    }

    pub(crate) fn bits(&self) -> u128 {
        self.bits
    }

    pub fn universe(&self) -> u32 {
        self.universe
    }

    pub fn len(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, i: u32) -> bool {
        i < self.universe && (self.bits >> i) & 1 == 1
    }

    pub fn insert(&mut self, i: u32) -> Result<()> {
        if i >= self.universe {
            return Err(Error::IndexOutOfRange {
                index: i,
                universe: self.universe,
            });
        }
        self.bits |= 1u128 << i;
        Ok(())
    }

    pub fn remove(&mut self, i: u32) {
        if i < self.universe {
            self.bits &= !(1u128 << i);
        }
    }

    pub fn with(&self, i: u32) -> Result<Self> {
        let mut s = *self;
        s.insert(i)?;
        Ok(s)
    }

    pub fn without(&self, i: u32) -> Self {
        let mut s = *self;
        s.remove(i);
        s
    }

    fn assert_same_universe(&self, other: &Self) {
        assert_eq!(
            self.universe, other.universe,
            "set operation across universes {} and {}",
            self.universe, other.universe
        );
    }

    pub fn union(&self, other: &Self) -> Self {
        self.assert_same_universe(other);
        IndexSet::from_bits(self.universe, self.bits | other.bits)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.assert_same_universe(other);
        IndexSet::from_bits(self.universe, self.bits & other.bits)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.assert_same_universe(other);
        IndexSet::from_bits(self.universe, self.bits & !other.bits)
    }

    pub fn complement(&self) -> Self {
        IndexSet::from_bits(self.universe, !self.bits & universe_mask(self.universe))
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.assert_same_universe(other);
        self.bits & !other.bits == 0
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.assert_same_universe(other);
        self.bits & other.bits != 0
    }

    pub fn first(&self) -> Option<u32> {
        if self.bits == 0 {
            None
        } else {
            Some(self.bits.trailing_zeros())
        }
    }

    pub fn iter(&self) -> Members {
        Members { bits: self.bits }
    }

    pub fn members(&self) -> Vec<u32> {
        self.iter().collect()
    }

    /// `[a, b]_n`: walking forward from `a` up to and including `b`.
    /// `[a, a]_n = {a}` and `[a, a-1]_n` is all of `Z_n`.
    pub fn closed(universe: u32, a: u32, b: u32) -> Result<Self> {
        Self::run(universe, a, b, 1)
    }

    /// `[a, b)_n` with the convention `[a, a)_n = empty`.
    pub fn closed_open(universe: u32, a: u32, b: u32) -> Result<Self> {
        Self::run(universe, a, b, 0)
    }

    /// `(a, b]_n`: points strictly after `a` up to `b`; `(a, a]_n = Z_n`.
    pub fn open_closed(universe: u32, a: u32, b: u32) -> Result<Self> {
        check_universe(universe)?;
        Self::check_point(universe, a)?;
        Self::closed(universe, (a + 1) % universe, b)
    }

    /// `(a, b)_n`: points strictly between `a` and `b`; `(a, a)_n = Z_n \ {a}`.
    pub fn open(universe: u32, a: u32, b: u32) -> Result<Self> {
        check_universe(universe)?;
        Self::check_point(universe, a)?;
        Self::closed_open(universe, (a + 1) % universe, b)
    }

    fn check_point(universe: u32, p: u32) -> Result<()> {
        if p >= universe {
            return Err(Error::IndexOutOfRange { index: p, universe });
        }
        Ok(())
    }

    /// Cyclic run starting at `a` of length `((b - a) mod n) + extra`.
    fn run(universe: u32, a: u32, b: u32, extra: u32) -> Result<Self> {
        check_universe(universe)?;
        Self::check_point(universe, a)?;
        Self::check_point(universe, b)?;
        let len = (b + universe - a) % universe + extra;
        let mut s = IndexSet::empty(universe)?;
        for i in 0..len {
            s.insert((a + i) % universe)?;
        }
        Ok(s)
    }

    /// Compares by ascending member lists, proper prefixes first.
    pub fn cmp_lex(&self, other: &Self) -> Ordering {
        self.assert_same_universe(other);
        let mut a = self.iter();
        let mut b = other.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) => match x.cmp(&y) {
                    Ordering::Equal => continue,
                    ord => return ord,
                },
            }
        }
    }
}

impl Ord for IndexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_lex(other)
    }
}

impl PartialOrd for IndexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct Members {
    bits: u128,
}

impl Iterator for Members {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.bits == 0 {
            None
        } else {
            let i = self.bits.trailing_zeros();
            self.bits &= self.bits - 1;
            Some(i)
        }
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "{{")?;
        for (idx, m) in self.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}/{}", self.universe)
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for IndexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.len() as usize))?;
        for m in self.iter() {
            seq.serialize_element(&m)?;
        }
        seq.end()
    }
}
