//! Facet verification by exact root enumeration and affine rank.

use std::collections::BTreeMap;

use num::{One, Zero};
use serde::Serialize;

use crate::covers;
use crate::error::{Error, Result};
use crate::inequality::{IneqKind, LinearInequality};
use crate::instance::CirculantInstance;
use crate::limits::Limits;
use crate::ratio::{rat_int, Rat};
use crate::set::IndexSet;

/// Outcome of checking one inequality against the full root set.
///
/// `is_facet` holds exactly when the inequality is valid and its roots have
/// affine rank `n - 1`; the polyhedron is full-dimensional, so that is the
/// facet criterion.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FacetReport {
    pub valid: bool,
    pub roots: Vec<IndexSet>,
    pub affine_rank: u32,
    pub is_facet: bool,
    #[serde(rename = "structuralChecks")]
    pub structural: BTreeMap<String, bool>,
}

/// Shared enumeration state for checking many inequalities on one instance:
/// all minimal covers plus every cover of size at most `tau + 2`.
///
/// Roots of a valid positive inequality are minimal covers, and the small
/// non-minimal covers act as a safety net for the bounded-right-hand-side
/// families handled here.
pub struct CoverPool {
    minimal: Vec<IndexSet>,
    extra: Vec<IndexSet>,
}

impl CoverPool {
    pub fn build(inst: &CirculantInstance, limits: &Limits) -> Result<CoverPool> {
        let minimal = covers::enumerate_minimal_covers(inst, limits)?;
        let small = covers::covers_up_to_size(inst, inst.covering_number() + 2, limits)?;
        let minimal_lookup: std::collections::HashSet<IndexSet> = minimal.iter().copied().collect();
        let extra = small
            .into_iter()
            .filter(|s| !minimal_lookup.contains(s))
            .collect();
        Ok(CoverPool { minimal, extra })
    }

    pub fn minimal(&self) -> &[IndexSet] {
        &self.minimal
    }
}

/// Rank of the difference vectors against the first point, over exact
/// rationals.
fn affine_rank(points: &[IndexSet]) -> u32 {
    if points.len() < 2 {
        return 0;
    }
    let n = points[0].universe() as usize;
    let base = points[0];
    let mut rows: Vec<Vec<Rat>> = points[1..]
        .iter()
        .map(|p| {
            (0..n as u32)
                .map(|i| rat_int(p.contains(i) as i64) - rat_int(base.contains(i) as i64))
                .collect()
        })
        .collect();
    let mut rank = 0usize;
    for col in 0..n {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_val = rows[rank][col].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = &rows[r][col] / &pivot_val;
                let pivot_row = rows[rank].clone();
                for (v, p) in rows[r][col..].iter_mut().zip(&pivot_row[col..]) {
                    *v -= &factor * p;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank as u32
}

pub(crate) fn facet_report_with_pool(
    inst: &CirculantInstance,
    ineq: &LinearInequality,
    pool: &CoverPool,
) -> Result<FacetReport> {
    if ineq.n() != inst.n() as usize {
        return Err(Error::DimensionMismatch {
            expected: inst.n() as usize,
            got: ineq.n(),
        });
    }
    let mut violated = None;
    let mut roots = Vec::new();
    for s in &pool.minimal {
        let lhs = ineq.eval(s);
        if lhs < *ineq.rhs() && violated.is_none() {
            violated = Some(*s);
        }
        if lhs == *ineq.rhs() {
            roots.push(*s);
        }
    }
    for s in &pool.extra {
        if ineq.tight_at(s) {
            roots.push(*s);
        }
    }
    roots.sort();
    roots.dedup();
    let valid = violated.is_none();
    let rank = affine_rank(&roots);
    let is_facet = valid && rank == inst.n() - 1;
    // boolean/rank shapes carry no battery
    let structural = structural_battery(inst, ineq).unwrap_or_default();
    Ok(FacetReport {
        valid,
        roots,
        affine_rank: rank,
        is_facet,
        structural,
    })
}

/// Collects all tight covers from the instance's cover pool, computes their
/// affine rank exactly, and reports whether the inequality defines a facet.
pub fn facet_report(
    inst: &CirculantInstance,
    ineq: &LinearInequality,
    limits: &Limits,
) -> Result<FacetReport> {
    let pool = CoverPool::build(inst, limits)?;
    facet_report_with_pool(inst, ineq, &pool)
}

/// Structural predicates every non-boolean non-rank facet must satisfy,
/// evaluated on the canonical integer form with `a0` the minimum coefficient
/// and `w` the columns above it.
///
/// The transversal checks (`w_*`) apply only on instances with `k | n` for
/// inequalities whose right-hand side is `(s+1) * a0`; they are omitted from
/// the map otherwise. The caller decides what to do with failures: this
/// reports, it does not assert.
pub fn structural_battery(
    inst: &CirculantInstance,
    ineq: &LinearInequality,
) -> Result<BTreeMap<String, bool>> {
    match ineq.kind() {
        IneqKind::BooleanLower | IneqKind::BooleanUpper | IneqKind::RowCover | IneqKind::Rank => {
            return Err(Error::InvalidInput(
                "structural battery applies to non-boolean, non-rank inequalities".into(),
            ));
        }
        IneqKind::Minor | IneqKind::Generic => {}
    }
    if ineq.n() != inst.n() as usize {
        return Err(Error::DimensionMismatch {
            expected: inst.n() as usize,
            got: ineq.n(),
        });
    }
    let canon = ineq.canonicalized();
    let (a0, w) = canon.profile();
    if a0 < Rat::one() {
        return Err(Error::InvalidInput(
            "structural battery expects positive coefficients".into(),
        ));
    }
    if w.is_empty() {
        return Err(Error::InvalidInput(
            "all coefficients equal: the inequality is rank-shaped".into(),
        ));
    }
    let free = w.complement();
    let n = inst.n();
    let mut checks = BTreeMap::new();
    checks.insert(
        "every_row_keeps_two_free_columns".to_string(),
        (0..n).all(|i| {
            inst.row_support(i)
                .expect("row in range")
                .intersection(&free)
                .len()
                >= 2
        }),
    );
    checks.insert(
        "coeffs_at_most_twice_min".to_string(),
        w.iter()
            .all(|i| canon.coeffs()[i as usize] <= rat_int(2) * &a0),
    );
    checks.insert(
        "rhs_at_least_min_times_tau_plus_one".to_string(),
        *canon.rhs() >= &a0 * rat_int(inst.covering_number() as i64 + 1),
    );
    if let Some(s) = inst.quotient() {
        if *canon.rhs() == &a0 * rat_int(s as i64 + 1) {
            checks.insert(
                "w_hits_each_min_cover_once".to_string(),
                (0..inst.k()).all(|j| inst.canonical_min_cover(j).intersection(&w).len() == 1),
            );
            checks.insert("w_size_equals_k".to_string(), w.len() == inst.k());
            checks.insert(
                "w_coeffs_exactly_twice_min".to_string(),
                w.iter()
                    .all(|i| canon.coeffs()[i as usize] == rat_int(2) * &a0),
            );
        }
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inequality::{check_validity, minor_inequality, rank_inequality};
    use crate::minors::cert_from_transversal;

    fn inst(n: u32, k: u32) -> CirculantInstance {
        CirculantInstance::new(n, k).unwrap()
    }

    fn set(n: u32, members: &[u32]) -> IndexSet {
        IndexSet::from_members(n, members.iter().copied()).unwrap()
    }

    #[test]
    fn minor_facet_on_c10_5() {
        let c = inst(10, 5);
        let cert = cert_from_transversal(&c, &set(10, &[0, 2, 4, 6, 8])).unwrap();
        let ineq = minor_inequality(&cert).unwrap();
        let report = facet_report(&c, &ineq, &Limits::default()).unwrap();
        assert!(report.valid);
        assert_eq!(report.affine_rank, 9);
        assert!(report.is_facet);
        assert!(report.structural.values().all(|&ok| ok));
        assert_eq!(report.structural.len(), 6);
    }

    #[test]
    fn rank_facet_depends_on_divisibility() {
        let limits = Limits::default();
        let c6 = inst(6, 3);
        let report = facet_report(&c6, &rank_inequality(&c6), &limits).unwrap();
        assert!(report.valid && !report.is_facet);
        assert_eq!(report.affine_rank, 2);
        assert_eq!(report.roots.len(), 3);

        let c8 = inst(8, 3);
        let report = facet_report(&c8, &rank_inequality(&c8), &limits).unwrap();
        assert!(report.is_facet);
        assert_eq!(report.affine_rank, 7);
    }

    #[test]
    fn battery_rejects_rank_and_boolean() {
        let c = inst(10, 5);
        assert!(structural_battery(&c, &rank_inequality(&c)).is_err());
        let bools = crate::inequality::boolean_facets(&c);
        assert!(structural_battery(&c, &bools[0]).is_err());
    }

    #[test]
    fn battery_reports_without_asserting_on_composites() {
        // the transversal equal to row 0 of C_12^4 gives a valid composite
        // inequality whose free-column check fails at that row
        let c = inst(12, 4);
        let w = set(12, &[0, 1, 2, 3]);
        let mut coeffs = vec![rat_int(1); 12];
        for i in w.iter() {
            coeffs[i as usize] = rat_int(2);
        }
        let ineq = LinearInequality::new(coeffs, rat_int(4), IneqKind::Generic);
        let out = check_validity(&c, &ineq, &Limits::default()).unwrap();
        assert!(out.valid);
        let checks = structural_battery(&c, &ineq).unwrap();
        assert!(!checks["every_row_keeps_two_free_columns"]);
        assert!(checks["w_hits_each_min_cover_once"]);
    }

    #[test]
    fn affine_rank_basics() {
        let pts = vec![set(4, &[0]), set(4, &[1]), set(4, &[2])];
        assert_eq!(affine_rank(&pts), 2);
        assert_eq!(affine_rank(&pts[..1]), 0);
        let dup = vec![set(4, &[0, 1]), set(4, &[0, 1])];
        assert_eq!(affine_rank(&dup), 0);
    }
}
