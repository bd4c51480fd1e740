use crate::error::{Error, Result};

/// Runtime bounds for the exhaustive verification routines.
///
/// Enumeration-backed operations (cover enumeration, brute-force separation,
/// facet reports) reject instances beyond these bounds instead of running
/// unbounded searches.
#[derive(Debug, Clone, Copy)]
pub struct Limits {
    /// Largest `n` accepted by cover-enumeration oracles.
    pub max_enum_n: u32,
    /// Cap on enumerated candidates (covers, transversals, subsets).
    pub max_candidates: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_enum_n: 36,
            max_candidates: 1_000_000,
        }
    }
}

impl Limits {
    pub fn new(max_enum_n: u32, max_candidates: u64) -> Self {
        Limits {
            max_enum_n,
            max_candidates,
        }
    }

    pub(crate) fn check_enum_n(&self, n: u32) -> Result<()> {
        if n > self.max_enum_n {
            return Err(Error::BoundExceeded(format!(
                "n = {} exceeds enumeration bound {}",
                n, self.max_enum_n
            )));
        }
        Ok(())
    }

    pub(crate) fn check_candidates(&self, count: u64, what: &str) -> Result<()> {
        if count > self.max_candidates {
            return Err(Error::BoundExceeded(format!(
                "{} requires {} candidates, above the cap of {}",
                what, count, self.max_candidates
            )));
        }
        Ok(())
    }
}
