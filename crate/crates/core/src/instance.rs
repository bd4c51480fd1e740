//! The circulant instance `C_n^k` and its basic covering algebra.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::matrix::BinaryMatrix;
use crate::set::IndexSet;

/// The pair `(n, k)` defining the circulant matrix whose i-th row supports
/// the cyclic window `[i, i+k) mod n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "InstanceDto", into = "InstanceDto")]
pub struct CirculantInstance {
    n: u32,
    k: u32,
}

#[derive(Serialize, Deserialize)]
struct InstanceDto {
    n: u32,
    k: u32,
}

impl TryFrom<InstanceDto> for CirculantInstance {
    type Error = Error;
    fn try_from(dto: InstanceDto) -> Result<Self> {
        CirculantInstance::new(dto.n, dto.k)
    }
}

impl From<CirculantInstance> for InstanceDto {
    fn from(inst: CirculantInstance) -> Self {
        InstanceDto {
            n: inst.n,
            k: inst.k,
        }
    }
}

impl CirculantInstance {
    pub fn new(n: u32, k: u32) -> Result<Self> {
        if n > crate::set::MAX_UNIVERSE {
            return Err(Error::InvalidInstance(format!(
                "n = {n} exceeds the supported maximum of {}",
                crate::set::MAX_UNIVERSE
            )));
        }
        if k < 2 || k + 1 > n {
            return Err(Error::InvalidInstance(format!(
                "require 2 <= k <= n-1, got n = {n}, k = {k}"
            )));
        }
        Ok(CirculantInstance { n, k })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// `s = n / k` when `k` divides `n`, which is the regime where the
    /// transversal machinery applies.
    pub fn quotient(&self) -> Option<u32> {
        self.n.is_multiple_of(self.k).then_some(self.n / self.k)
    }

    /// The covering number `ceil(n / k)`.
    pub fn covering_number(&self) -> u32 {
        self.n.div_ceil(self.k)
    }

    /// Support of row `i`: the window `{i, i+1, ..., i+k-1} mod n`.
    pub fn row_support(&self, i: u32) -> Result<IndexSet> {
        if i >= self.n {
            return Err(Error::IndexOutOfRange {
                index: i,
                universe: self.n,
            });
        }
        IndexSet::closed_open(self.n, i, (i + self.k) % self.n)
    }

    pub(crate) fn row_bits(&self, i: u32) -> u128 {
        debug_assert!(i < self.n);
        self.row_support(i).expect("row index checked").bits()
    }

    /// True iff `s` meets every row window.
    ///
    /// Panics if `s` lives in a different universe.
    pub fn is_cover(&self, s: &IndexSet) -> bool {
        assert_eq!(s.universe(), self.n, "cover candidate universe mismatch");
        (0..self.n).all(|i| s.bits() & self.row_bits(i) != 0)
    }

    /// True iff `s` is a cover and no proper subset of it is.
    ///
    /// When the answer is yes, also asserts that `s` meets every row at most
    /// twice, a structural fact about minimal covers used as a cross-check.
    pub fn is_minimal_cover(&self, s: &IndexSet) -> bool {
        if !self.is_cover(s) {
            return false;
        }
        let minimal = s.iter().all(|e| !self.is_cover(&s.without(e)));
        if minimal {
            for i in 0..self.n {
                assert!(
                    (s.bits() & self.row_bits(i)).count_ones() <= 2,
                    "minimal cover {s} meets row {i} more than twice"
                );
            }
        }
        minimal
    }

    /// The canonical minimum cover `{i + h*k : 0 <= h < ceil(n/k)}`.
    pub fn canonical_min_cover(&self, i: u32) -> IndexSet {
        let mut s = IndexSet::empty(self.n).expect("valid universe");
        for h in 0..self.covering_number() {
            s.insert((i + h * self.k) % self.n).expect("in range");
        }
        s
    }

    /// Smallest cover size found by exhaustive combination search. This is an
    /// oracle for `covering_number`, so it deliberately avoids the closed
    /// formula and any gap-structure shortcuts.
    pub fn brute_force_tau(&self, limits: &Limits) -> Result<u32> {
        limits.check_enum_n(self.n)?;
        for size in 1..=self.n {
            let mut found = false;
            crate::covers::for_each_subset_of_size(self.n, size, &mut |bits| {
                if self.is_cover(&IndexSet::from_bits(self.n, bits)) {
                    found = true;
                    return std::ops::ControlFlow::Break(());
                }
                std::ops::ControlFlow::Continue(())
            });
            if found {
                return Ok(size);
            }
        }
        Err(Error::Internal(format!(
            "no cover found for C_{}^{}",
            self.n, self.k
        )))
    }

    /// Contraction minor: drop the columns in `removed`, then clean up
    /// dominating rows (and any columns left uncovered by every row).
    pub fn contract(&self, removed: &IndexSet) -> Result<BinaryMatrix> {
        assert_eq!(removed.universe(), self.n, "contraction universe mismatch");
        let count = removed.len();
        if count == 0 || count > self.n - 2 {
            return Err(Error::InvalidInput(format!(
                "contraction needs 1 <= |N| <= n-2, got |N| = {count} for n = {}",
                self.n
            )));
        }
        let surviving: Vec<u32> = removed.complement().members();
        let ncols = surviving.len() as u32;
        let position: std::collections::HashMap<u32, u32> = surviving
            .iter()
            .enumerate()
            .map(|(p, &c)| (c, p as u32))
            .collect();
        let mut rows = Vec::with_capacity(self.n as usize);
        for i in 0..self.n {
            let mut row = IndexSet::empty(ncols)?;
            for c in self.row_support(i)?.difference(removed).iter() {
                row.insert(position[&c])?;
            }
            rows.push((i, row));
        }
        Ok(BinaryMatrix::from_labeled_rows(surviving, rows))
    }
}
