//! Weighted set covering on circulant instances: a brute-force oracle over
//! minimal covers, LP relaxations, and the cutting-plane loop driven by the
//! transversal separation oracle.

use std::collections::HashSet;
use std::ops::ControlFlow;

use num::{Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::covers;
use crate::error::{Error, Result};
use crate::exec;
use crate::facet::{facet_report_with_pool, CoverPool, FacetReport};
use crate::inequality::{
    classify_minor, minor_inequality, rank_inequality, row_cover_inequality, IneqKind,
    LinearInequality, MinorClass,
};
use crate::instance::CirculantInstance;
use crate::limits::Limits;
use crate::minors::{cert_from_transversal, MinorCert};
use crate::ratio::{rat_int, rat_serde, rat_vec_serde, Rat};
use crate::ratlp::{solve_lp, LpProblem, LpSolution, LpStatus};
use crate::separation::{cut_for_witness, separate, SeparationOutcome};
use crate::set::IndexSet;

/// Result of one weighted solve.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SolveResult {
    #[serde(with = "rat_serde")]
    pub optimal_value: Rat,
    pub optimal_cover: IndexSet,
    pub cuts: Vec<LinearInequality>,
    pub iterations: u32,
    pub certified_exact: bool,
    /// Best lower bound proved by the final LP.
    #[serde(with = "rat_serde")]
    pub lp_bound: Rat,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Present only when the loop halted on a fractional point it could not
    /// cut on an instance where that should be impossible.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<FractionalReport>,
}

/// Diagnostic emitted when the cutting-plane loop stalls fractionally on
/// `C_sk^k` with `s` in `{2, 3}`.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FractionalReport {
    #[serde(with = "rat_vec_serde")]
    pub lp_point: Vec<Rat>,
    pub cut_pool: Vec<LinearInequality>,
    pub transcript: Vec<SeparationOutcome>,
}

/// Integer weights drawn uniformly from `lo..=hi` with a fixed seed.
pub fn random_weights(n: u32, lo: i64, hi: i64, seed: u64) -> Vec<Rat> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| rat_int(rng.gen_range(lo..=hi))).collect()
}

fn check_weights(inst: &CirculantInstance, weights: &[Rat]) -> Result<()> {
    if weights.len() != inst.n() as usize {
        return Err(Error::DimensionMismatch {
            expected: inst.n() as usize,
            got: weights.len(),
        });
    }
    if let Some(i) = weights.iter().position(|w| w.is_negative()) {
        return Err(Error::InvalidInput(format!("negative weight at index {i}")));
    }
    Ok(())
}

fn weight_of(weights: &[Rat], s: &IndexSet) -> Rat {
    s.iter().map(|i| weights[i as usize].clone()).sum()
}

/// Ground-truth optimum by scanning minimal covers; with nonnegative weights
/// some optimal solution is always a minimal cover. Ties break to the
/// lexicographically smallest cover.
pub fn solve_ip_bruteforce(
    inst: &CirculantInstance,
    weights: &[Rat],
    limits: &Limits,
) -> Result<SolveResult> {
    check_weights(inst, weights)?;
    limits.check_enum_n(inst.n())?;
    let inst_copy = *inst;
    let per_anchor: Vec<Option<(Rat, IndexSet)>> = exec::map_range(inst.k() as usize, move |a| {
        let mut best: Option<(Rat, IndexSet)> = None;
        let _ = covers::for_each_minimal_cover_from_anchor(&inst_copy, a as u32, &mut |elems| {
            let s = IndexSet::from_members(inst_copy.n(), elems.iter().copied()).expect("in range");
            let wt = weight_of(weights, &s);
            let better = match &best {
                None => true,
                Some((bw, bs)) => wt < *bw || (wt == *bw && s < *bs),
            };
            if better {
                best = Some((wt, s));
            }
            ControlFlow::Continue(())
        });
        best
    });
    let (value, cover) = per_anchor
        .into_iter()
        .flatten()
        .min_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)))
        .ok_or_else(|| Error::Internal("instance has no minimal cover".into()))?;
    Ok(SolveResult {
        lp_bound: value.clone(),
        optimal_value: value,
        optimal_cover: cover,
        cuts: Vec::new(),
        iterations: 0,
        certified_exact: true,
        seed: None,
        counterexample: None,
    })
}

/// LP over the row covers (plus the rank constraint when asked) inside the
/// unit box. The backbone of the idealness and rank-sufficiency checks.
pub fn solve_relaxation(
    inst: &CirculantInstance,
    weights: &[Rat],
    include_rank: bool,
) -> Result<LpSolution> {
    check_weights(inst, weights)?;
    let mut constraints: Vec<LinearInequality> = (0..inst.n())
        .map(|i| row_cover_inequality(inst, i))
        .collect();
    if include_rank {
        constraints.push(rank_inequality(inst));
    }
    let sol = solve_lp(&LpProblem::new(weights.to_vec(), constraints)?)?;
    if sol.status != LpStatus::Optimal {
        return Err(Error::Internal(
            "covering relaxation reported infeasible".into(),
        ));
    }
    Ok(sol)
}

fn cover_from_integral_point(inst: &CirculantInstance, point: &[Rat]) -> Result<IndexSet> {
    let members = point
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, _)| i as u32);
    let cover = IndexSet::from_members(inst.n(), members)?;
    if !inst.is_cover(&cover) {
        return Err(Error::Internal("integral LP point is not a cover".into()));
    }
    Ok(cover)
}

/// Deterministic repair: take the columns at value >= 1/2, patch uncovered
/// rows with their cheapest column, then drop redundant columns.
fn round_up_cover(inst: &CirculantInstance, point: &[Rat], weights: &[Rat]) -> IndexSet {
    let half = crate::ratio::rat(1, 2);
    let mut cover = IndexSet::from_members(
        inst.n(),
        point
            .iter()
            .enumerate()
            .filter(|(_, x)| **x >= half)
            .map(|(i, _)| i as u32),
    )
    .expect("in range");
    for i in 0..inst.n() {
        let row = inst.row_support(i).expect("row in range");
        if !cover.intersects(&row) {
            let pick = row
                .iter()
                .min_by(|&a, &b| {
                    weights[a as usize]
                        .cmp(&weights[b as usize])
                        .then(a.cmp(&b))
                })
                .expect("nonempty row");
            cover.insert(pick).expect("in range");
        }
    }
    for e in cover.members() {
        if inst.is_cover(&cover.without(e)) {
            cover.remove(e);
        }
    }
    cover
}

/// Cutting-plane solve: LP over boolean facets plus the rank constraint,
/// repeatedly strengthened by violated transversal cuts.
///
/// On `C_sk^k` with `s` in `{2, 3}` those cuts complete the description, so
/// the loop always terminates at an integral vertex; a fractional stall there
/// is reported as a counterexample instead of being patched over. For other
/// shapes the solve is exact whenever it happens to end integral and
/// otherwise returns the rounded cover with `certified_exact = false`.
pub fn solve_cutting_plane(inst: &CirculantInstance, weights: &[Rat]) -> Result<SolveResult> {
    check_weights(inst, weights)?;
    if inst.k() < 3 {
        return Err(Error::InvalidInput(
            "cutting-plane solving needs k >= 3".into(),
        ));
    }
    let s_opt = inst.quotient();
    let base: Vec<LinearInequality> = (0..inst.n())
        .map(|i| row_cover_inequality(inst, i))
        .chain(std::iter::once(rank_inequality(inst)))
        .collect();

    let mut cuts: Vec<LinearInequality> = Vec::new();
    let mut seen_witnesses: HashSet<IndexSet> = HashSet::new();
    let mut transcript: Vec<SeparationOutcome> = Vec::new();
    let mut iterations = 0u32;
    loop {
        let mut constraints = base.clone();
        constraints.extend(cuts.iter().cloned());
        let sol = solve_lp(&LpProblem::new(weights.to_vec(), constraints)?)?;
        if sol.status != LpStatus::Optimal {
            return Err(Error::Internal("covering LP reported infeasible".into()));
        }
        iterations += 1;
        if sol.is_integral {
            let cover = cover_from_integral_point(inst, &sol.point)?;
            return Ok(SolveResult {
                optimal_value: sol.objective_value.clone(),
                optimal_cover: cover,
                cuts,
                iterations,
                certified_exact: true,
                lp_bound: sol.objective_value,
                seed: None,
                counterexample: None,
            });
        }
        if s_opt.is_some() {
            let out = separate(inst, &sol.point)?;
            transcript.push(out.clone());
            if out.violated {
                let w = out.witness.expect("violated outcome carries a witness");
                if !seen_witnesses.insert(w) {
                    return Err(Error::Internal(
                        "separation returned an already-added transversal".into(),
                    ));
                }
                let (cut, _cert) = cut_for_witness(inst, &w)?;
                cuts.push(cut);
                continue;
            }
        }
        // fractional optimum and no cut left in the family
        let cover = round_up_cover(inst, &sol.point, weights);
        let value = weight_of(weights, &cover);
        let counterexample = matches!(s_opt, Some(2) | Some(3)).then(|| FractionalReport {
            lp_point: sol.point.clone(),
            cut_pool: cuts.clone(),
            transcript: transcript.clone(),
        });
        return Ok(SolveResult {
            optimal_value: value,
            optimal_cover: cover,
            cuts,
            iterations,
            certified_exact: false,
            lp_bound: sol.objective_value,
            seed: None,
            counterexample,
        });
    }
}

/// Independent cutting-plane solves for a batch of weight vectors.
pub fn solve_cutting_plane_batch(
    inst: &CirculantInstance,
    batch: &[Vec<Rat>],
) -> Vec<Result<SolveResult>> {
    let inst = *inst;
    exec::map_slice(batch, move |w| solve_cutting_plane(&inst, w))
}

/// Sequential reference path for [`solve_cutting_plane_batch`].
pub fn solve_cutting_plane_batch_seq(
    inst: &CirculantInstance,
    batch: &[Vec<Rat>],
) -> Vec<Result<SolveResult>> {
    exec::map_slice_seq(batch, |w| solve_cutting_plane(inst, w))
}

/// One enumerated transversal inequality on `C_sk^k`.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct S1Entry {
    #[serde(rename = "W")]
    pub transversal: IndexSet,
    pub inequality: LinearInequality,
    /// Present when the transversal leaves a free column in every row.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cert: Option<MinorCert>,
    /// True when the inequality is a rank plus row-cover composite instead.
    pub composite: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<MinorClass>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub facet: Option<FacetReport>,
}

/// Enumerates all `s^k` transversal inequalities, attaching certificates and
/// (within enumeration bounds) facet reports.
pub fn enumerate_s1_inequalities(
    inst: &CirculantInstance,
    limits: &Limits,
) -> Result<Vec<S1Entry>> {
    let s = inst
        .quotient()
        .ok_or_else(|| Error::InvalidInput("transversal enumeration needs k | n".into()))?;
    let total = (s as u64)
        .checked_pow(inst.k())
        .ok_or_else(|| Error::BoundExceeded("transversal count overflows".into()))?;
    limits.check_candidates(total, "transversal enumeration")?;
    let pool = match CoverPool::build(inst, limits) {
        Ok(pool) => Some(pool),
        Err(Error::BoundExceeded(_)) => None,
        Err(e) => return Err(e),
    };
    let pool = &pool;
    let inst_copy = *inst;
    let entries: Vec<Result<S1Entry>> = exec::map_range(total as usize, move |idx| {
        let mut rem = idx as u64;
        let mut w = IndexSet::empty(inst_copy.n())?;
        for j in 0..inst_copy.k() {
            w.insert(j + (rem % s as u64) as u32 * inst_copy.k())?;
            rem /= s as u64;
        }
        let mut coeffs = vec![rat_int(1); inst_copy.n() as usize];
        for i in w.iter() {
            coeffs[i as usize] = rat_int(2);
        }
        let (cert, composite) = match cert_from_transversal(&inst_copy, &w) {
            Ok(cert) => (Some(cert), false),
            Err(Error::InvalidInput(_)) => (None, true),
            Err(e) => return Err(e),
        };
        let inequality = match &cert {
            Some(cert) => minor_inequality(cert)?,
            None => LinearInequality::new(coeffs, rat_int(s as i64 + 1), IneqKind::Generic),
        };
        let classification = cert.as_ref().map(classify_minor).transpose()?;
        let facet = pool
            .as_ref()
            .map(|p| facet_report_with_pool(&inst_copy, &inequality, p))
            .transpose()?;
        Ok(S1Entry {
            transversal: w,
            inequality,
            cert,
            composite,
            classification,
            facet,
        })
    });
    entries.into_iter().collect()
}

/// One relevant certificate in the conjecture tabulation.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ConjectureCase {
    #[serde(rename = "W")]
    pub transversal: IndexSet,
    pub minor_n: u32,
    pub minor_k: u32,
    pub conjecture_form: bool,
    pub is_facet: bool,
}

/// Tabulation of `conjecture_form` against verified facetness over all
/// relevant certificates of the instance. Disagreements are reported, never
/// asserted away.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ConjectureReport {
    pub n: u32,
    pub k: u32,
    pub relevant: u32,
    pub agreements: u32,
    pub disagreements: Vec<ConjectureCase>,
}

pub fn conjecture_scan(inst: &CirculantInstance, limits: &Limits) -> Result<ConjectureReport> {
    let entries = enumerate_s1_inequalities(inst, limits)?;
    let mut relevant = 0u32;
    let mut agreements = 0u32;
    let mut disagreements = Vec::new();
    for entry in entries {
        let (Some(cert), Some(class), Some(facet)) =
            (&entry.cert, &entry.classification, &entry.facet)
        else {
            continue;
        };
        if !class.relevant {
            continue;
        }
        relevant += 1;
        if class.conjecture_form == facet.is_facet {
            agreements += 1;
        } else {
            disagreements.push(ConjectureCase {
                transversal: entry.transversal,
                minor_n: cert.minor_n(),
                minor_k: cert.minor_k(),
                conjecture_form: class.conjecture_form,
                is_facet: facet.is_facet,
            });
        }
    }
    Ok(ConjectureReport {
        n: inst.n(),
        k: inst.k(),
        relevant,
        agreements,
        disagreements,
    })
}
