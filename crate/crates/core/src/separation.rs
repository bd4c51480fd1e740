//! Separation of the rhs-`(s+1)` transversal inequalities on `C_sk^k`.
//!
//! Candidate cuts take coefficient 2 on a transversal `W` picking one column
//! per canonical minimum cover, and the cut is violated at a point exactly
//! when `sum_W x < (s+1) - sum x`. Minimizing the left side over transversals
//! is a shortest `r -> t` path in a layered acyclic digraph with one layer
//! per residue class, solved here by a layer-sweep dynamic program with exact
//! rational lengths.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec;
use crate::inequality::{IneqKind, LinearInequality};
use crate::instance::CirculantInstance;
use crate::limits::Limits;
use crate::minors::{cert_from_transversal, MinorCert};
use crate::ratio::{rat_int, rat_serde, Rat};
use crate::set::IndexSet;

/// The layered digraph: source, one layer per residue holding the canonical
/// minimum cover `x^i`, complete bipartite arcs between consecutive layers,
/// and a sink fed by the last layer with zero-length arcs. Every other arc
/// inherits the target column's value as its length.
#[derive(Debug, Clone)]
pub struct SeparationDigraph {
    s: u32,
    k: u32,
}

impl SeparationDigraph {
    pub fn build(inst: &CirculantInstance) -> Result<Self> {
        let s = inst.quotient().ok_or_else(|| {
            Error::InvalidInput(format!(
                "separation digraph needs k | n, got n = {}, k = {}",
                inst.n(),
                inst.k()
            ))
        })?;
        Ok(SeparationDigraph { s, k: inst.k() })
    }

    pub fn layer_count(&self) -> u32 {
        self.k
    }

    /// Columns of layer `i`, ascending: `{i, i+k, ..., i+(s-1)k}`.
    pub fn layer(&self, i: u32) -> Vec<u32> {
        (0..self.s).map(|r| i + r * self.k).collect()
    }

    /// `s*k` layer nodes plus source and sink.
    pub fn node_count(&self) -> u32 {
        self.s * self.k + 2
    }

    /// `s` source arcs, `s^2` arcs between each consecutive layer pair, and
    /// `s` sink arcs.
    pub fn arc_count(&self) -> u32 {
        self.s + (self.k - 1) * self.s * self.s + self.s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SeparationOutcome {
    pub violated: bool,
    /// Lexicographically smallest minimum-cost transversal, present when a
    /// violated cut exists.
    #[serde(rename = "W")]
    pub witness: Option<IndexSet>,
    #[serde(with = "rat_serde")]
    pub path_cost: Rat,
    #[serde(with = "rat_serde")]
    pub threshold: Rat,
}

fn check_point(inst: &CirculantInstance, xhat: &[Rat]) -> Result<()> {
    if xhat.len() != inst.n() as usize {
        return Err(Error::DimensionMismatch {
            expected: inst.n() as usize,
            got: xhat.len(),
        });
    }
    Ok(())
}

fn threshold(inst: &CirculantInstance, xhat: &[Rat]) -> Rat {
    let s = inst.n() / inst.k();
    rat_int(s as i64 + 1) - xhat.iter().sum::<Rat>()
}

fn outcome(inst: &CirculantInstance, xhat: &[Rat], cost: Rat, w: Vec<u32>) -> SeparationOutcome {
    let threshold = threshold(inst, xhat);
    let violated = cost < threshold;
    SeparationOutcome {
        violated,
        witness: violated.then(|| IndexSet::from_members(inst.n(), w).expect("witness in range")),
        path_cost: cost,
        threshold,
    }
}

/// Shortest-path separation over the layered digraph. Among minimum-cost
/// transversals the witness is the lexicographically smallest; extending two
/// partial transversals by the same later picks preserves their order, so
/// keeping the smallest partial per node is exact.
pub fn separate(inst: &CirculantInstance, xhat: &[Rat]) -> Result<SeparationOutcome> {
    check_point(inst, xhat)?;
    let graph = SeparationDigraph::build(inst)?;
    let mut frontier: Vec<(Rat, Vec<u32>)> = graph
        .layer(0)
        .into_iter()
        .map(|v| (xhat[v as usize].clone(), vec![v]))
        .collect();
    for i in 1..graph.layer_count() {
        // arcs into a node all cost the same, so the best incoming partial is
        // shared across the layer
        let best = frontier
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)))
            .map(|(idx, _)| idx)
            .expect("nonempty layer");
        let (base_cost, base_w) = frontier[best].clone();
        frontier = graph
            .layer(i)
            .into_iter()
            .map(|v| {
                let mut w = base_w.clone();
                w.push(v);
                w.sort_unstable();
                (&base_cost + &xhat[v as usize], w)
            })
            .collect();
    }
    let (cost, w) = frontier
        .into_iter()
        .min_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)))
        .expect("nonempty final layer");
    Ok(outcome(inst, xhat, cost, w))
}

fn transversal_for_index(inst: &CirculantInstance, s: u32, mut idx: u64) -> Vec<u32> {
    let k = inst.k();
    let mut w: Vec<u32> = (0..k)
        .map(|j| {
            let offset = (idx % s as u64) as u32;
            idx /= s as u64;
            j + offset * k
        })
        .collect();
    w.sort_unstable();
    w
}

fn best_in_range(
    inst: &CirculantInstance,
    xhat: &[Rat],
    s: u32,
    range: std::ops::Range<u64>,
) -> Option<(Rat, Vec<u32>)> {
    let mut best: Option<(Rat, Vec<u32>)> = None;
    for idx in range {
        let w = transversal_for_index(inst, s, idx);
        let cost: Rat = w.iter().map(|&v| xhat[v as usize].clone()).sum();
        let better = match &best {
            None => true,
            Some((bc, bw)) => cost < *bc || (cost == *bc && w < *bw),
        };
        if better {
            best = Some((cost, w));
        }
    }
    best
}

fn brute_force_with(
    inst: &CirculantInstance,
    xhat: &[Rat],
    limits: &Limits,
    parallel: bool,
) -> Result<SeparationOutcome> {
    check_point(inst, xhat)?;
    let s = inst
        .quotient()
        .ok_or_else(|| Error::InvalidInput("brute-force separation needs k | n".into()))?;
    let total = (s as u64)
        .checked_pow(inst.k())
        .ok_or_else(|| Error::BoundExceeded("transversal count overflows".into()))?;
    limits.check_candidates(total, "brute-force separation")?;

    let chunk = total.div_ceil(64).max(1);
    let ranges: Vec<std::ops::Range<u64>> = (0..total)
        .step_by(chunk as usize)
        .map(|lo| lo..(lo + chunk).min(total))
        .collect();
    let inst_copy = *inst;
    let per_chunk: Vec<Option<(Rat, Vec<u32>)>> = if parallel {
        exec::map_slice(&ranges, move |r| {
            best_in_range(&inst_copy, xhat, s, r.clone())
        })
    } else {
        exec::map_slice_seq(&ranges, |r| best_in_range(&inst_copy, xhat, s, r.clone()))
    };
    let (cost, w) = per_chunk
        .into_iter()
        .flatten()
        .min_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)))
        .ok_or_else(|| Error::Internal("no transversal enumerated".into()))?;
    Ok(outcome(inst, xhat, cost, w))
}

/// Exhaustive minimum over all `s^k` transversals, with the same tie-break
/// as [`separate`]. The oracle the shortest-path route is checked against.
pub fn brute_force_separate(
    inst: &CirculantInstance,
    xhat: &[Rat],
    limits: &Limits,
) -> Result<SeparationOutcome> {
    brute_force_with(inst, xhat, limits, true)
}

/// Sequential reference path for [`brute_force_separate`].
pub fn brute_force_separate_seq(
    inst: &CirculantInstance,
    xhat: &[Rat],
    limits: &Limits,
) -> Result<SeparationOutcome> {
    brute_force_with(inst, xhat, limits, false)
}

/// The cut induced by a separation witness: coefficient 2 on the transversal,
/// 1 elsewhere, right-hand side `s + 1`. Comes with a minor certificate when
/// every row keeps a free column; otherwise the cut is a rank plus row-cover
/// composite and is labeled generic.
pub fn cut_for_witness(
    inst: &CirculantInstance,
    w: &IndexSet,
) -> Result<(LinearInequality, Option<MinorCert>)> {
    let s = inst
        .quotient()
        .ok_or_else(|| Error::InvalidInput("witness cuts need k | n".into()))?;
    match cert_from_transversal(inst, w) {
        Ok(cert) => {
            let ineq = crate::inequality::minor_inequality(&cert)?;
            debug_assert_eq!(*ineq.rhs(), rat_int(s as i64 + 1));
            Ok((ineq, Some(cert)))
        }
        Err(Error::InvalidInput(_)) => {
            let mut coeffs = vec![rat_int(1); inst.n() as usize];
            for i in w.iter() {
                coeffs[i as usize] = rat_int(2);
            }
            Ok((
                LinearInequality::new(coeffs, rat_int(s as i64 + 1), IneqKind::Generic),
                None,
            ))
        }
        Err(e) => Err(e),
    }
}
