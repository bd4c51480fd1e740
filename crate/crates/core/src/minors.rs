//! Circulant-minor certificates.
//!
//! A contraction minor of `C_n^k` is circulant exactly when the removed
//! column set splits into node-disjoint simple dicycles of the auxiliary
//! digraph on `Z_n` whose arcs step by `k` or `k + 1`. A certificate records
//! the removed set, the dicycle parameters and the resulting minor shape.
//!
//! For instances with `n = s*k` the certificate is built directly from a
//! transversal `W` picking one column out of each canonical minimum cover:
//! each pick is joined to the next residue's pick by a run of `k`-steps
//! followed by a single `(k+1)`-step, and the union of those runs is the
//! removed set.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instance::CirculantInstance;
use crate::set::IndexSet;

/// An arc of the step digraph: `to = from + length (mod n)` with length `k`
/// or `k + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphArc {
    pub from: u32,
    pub to: u32,
    pub length: u32,
}

/// The 2n arcs of the step digraph on `Z_n`, grouped per source vertex.
pub fn graph_arcs(inst: &CirculantInstance) -> Vec<GraphArc> {
    let n = inst.n();
    let k = inst.k();
    let mut arcs = Vec::with_capacity(2 * n as usize);
    for i in 0..n {
        for len in [k, k + 1] {
            arcs.push(GraphArc {
                from: i,
                to: (i + len) % n,
                length: len,
            });
        }
    }
    arcs
}

/// A simple closed walk in the step digraph, stored as its node sequence
/// together with the step length used out of each node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dicycle {
    nodes: Vec<u32>,
    arc_lengths: Vec<u32>,
}

impl Dicycle {
    /// Validates that consecutive nodes (cyclically) differ by `k` or `k+1`
    /// modulo `n` and that no node repeats.
    pub fn from_nodes(inst: &CirculantInstance, nodes: Vec<u32>) -> Result<Self> {
        let n = inst.n();
        let k = inst.k();
        if nodes.len() < 2 {
            return Err(Error::InvalidInput(
                "a dicycle needs at least two nodes".into(),
            ));
        }
        let mut seen = IndexSet::empty(n)?;
        for &v in &nodes {
            if v >= n {
                return Err(Error::IndexOutOfRange {
                    index: v,
                    universe: n,
                });
            }
            if seen.contains(v) {
                return Err(Error::InvalidInput(format!("node {v} repeats in dicycle")));
            }
            seen.insert(v)?;
        }
        let mut arc_lengths = Vec::with_capacity(nodes.len());
        for (idx, &v) in nodes.iter().enumerate() {
            let next = nodes[(idx + 1) % nodes.len()];
            let step = (next + n - v) % n;
            if step != k && step != k + 1 {
                return Err(Error::InvalidInput(format!(
                    "step {v} -> {next} has length {step}, expected {k} or {}",
                    k + 1
                )));
            }
            arc_lengths.push(step);
        }
        Ok(Dicycle { nodes, arc_lengths })
    }

    pub fn nodes(&self) -> &[u32] {
        &self.nodes
    }

    pub fn arc_lengths(&self) -> &[u32] {
        &self.arc_lengths
    }
}

/// Dicycle parameters `(winding, short_arcs, long_arcs)`: the number of
/// `k`-arcs, `(k+1)`-arcs, and how many times the walk wraps around `Z_n`.
pub fn dicycle_params(inst: &CirculantInstance, nodes: &[u32]) -> Result<(u32, u32, u32)> {
    let cyc = Dicycle::from_nodes(inst, nodes.to_vec())?;
    let short = cyc.arc_lengths.iter().filter(|&&l| l == inst.k()).count() as u32;
    let long = cyc.arc_lengths.len() as u32 - short;
    let total: u32 = cyc.arc_lengths.iter().sum();
    if !total.is_multiple_of(inst.n()) {
        return Err(Error::InvalidInput(format!(
            "arc lengths sum to {total}, not a multiple of n = {}",
            inst.n()
        )));
    }
    Ok((total / inst.n(), short, long))
}

/// Certificate that contracting `removed` from the instance yields a matrix
/// isomorphic to `C_{minor_n}^{minor_k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorCert {
    instance: CirculantInstance,
    /// One column per canonical minimum cover; these receive coefficient 2
    /// in the associated inequality. Exactly the targets of `(k+1)`-arcs.
    w: IndexSet,
    /// Columns removed by the contraction; node set of the dicycles.
    removed: IndexSet,
    /// Number of node-disjoint dicycles.
    dicycles: u32,
    /// Winding number shared by every dicycle.
    winding: u32,
    /// `k`-arcs per dicycle.
    short_arcs: u32,
    /// `(k+1)`-arcs per dicycle.
    long_arcs: u32,
    minor_n: u32,
    minor_k: u32,
}

/// Wire form of a certificate; the owning instance travels separately.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MinorCertDto {
    #[serde(rename = "W")]
    pub w: Vec<u32>,
    #[serde(rename = "N")]
    pub removed: Vec<u32>,
    pub d: u32,
    pub n1: u32,
    pub n2: u32,
    pub n3: u32,
    #[serde(rename = "nPrime")]
    pub n_prime: u32,
    #[serde(rename = "kPrime")]
    pub k_prime: u32,
}

impl Serialize for MinorCert {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_dto().serialize(s)
    }
}

impl MinorCert {
    pub fn instance(&self) -> CirculantInstance {
        self.instance
    }

    pub fn w(&self) -> &IndexSet {
        &self.w
    }

    pub fn removed(&self) -> &IndexSet {
        &self.removed
    }

    pub fn dicycles(&self) -> u32 {
        self.dicycles
    }

    pub fn winding(&self) -> u32 {
        self.winding
    }

    pub fn short_arcs(&self) -> u32 {
        self.short_arcs
    }

    pub fn long_arcs(&self) -> u32 {
        self.long_arcs
    }

    pub fn minor_n(&self) -> u32 {
        self.minor_n
    }

    pub fn minor_k(&self) -> u32 {
        self.minor_k
    }

    pub fn to_dto(&self) -> MinorCertDto {
        MinorCertDto {
            w: self.w.members(),
            removed: self.removed.members(),
            d: self.dicycles,
            n1: self.winding,
            n2: self.short_arcs,
            n3: self.long_arcs,
            n_prime: self.minor_n,
            k_prime: self.minor_k,
        }
    }

    /// Rebuilds a certificate from its wire form, re-validating it.
    pub fn from_dto(inst: CirculantInstance, dto: &MinorCertDto) -> Result<Self> {
        let cert = MinorCert {
            instance: inst,
            w: IndexSet::from_members(inst.n(), dto.w.iter().copied())?,
            removed: IndexSet::from_members(inst.n(), dto.removed.iter().copied())?,
            dicycles: dto.d,
            winding: dto.n1,
            short_arcs: dto.n2,
            long_arcs: dto.n3,
            minor_n: dto.n_prime,
            minor_k: dto.k_prime,
        };
        if !validate_cert(&cert) {
            return Err(Error::InvalidInput(
                "certificate does not validate against its instance".into(),
            ));
        }
        Ok(cert)
    }

    /// Test-only raw constructor bypassing validation.
    #[cfg(test)]
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn raw(
        instance: CirculantInstance,
        w: IndexSet,
        removed: IndexSet,
        dicycles: u32,
        winding: u32,
        short_arcs: u32,
        long_arcs: u32,
        minor_n: u32,
        minor_k: u32,
    ) -> Self {
        MinorCert {
            instance,
            w,
            removed,
            dicycles,
            winding,
            short_arcs,
            long_arcs,
            minor_n,
            minor_k,
        }
    }
}

/// Per-residue profile of a transversal on `C_sk^k`: the offsets `t_j` of the
/// picked columns and the length of the `k`-step run leaving each pick.
pub(crate) fn transversal_profile(
    inst: &CirculantInstance,
    w: &IndexSet,
) -> Result<(Vec<u32>, Vec<u32>)> {
    let s = inst.quotient().ok_or_else(|| {
        Error::InvalidInput(format!(
            "transversal certificates need k | n, got n = {}, k = {}",
            inst.n(),
            inst.k()
        ))
    })?;
    let k = inst.k();
    assert_eq!(w.universe(), inst.n(), "transversal universe mismatch");

    let mut offsets = Vec::with_capacity(k as usize);
    for j in 0..k {
        let picks = inst.canonical_min_cover(j).intersection(w);
        if picks.len() != 1 {
            return Err(Error::InvalidInput(format!(
                "transversal must pick exactly one column from each canonical \
                 minimum cover; residue {j} has {}",
                picks.len()
            )));
        }
        let pick = picks.first().expect("nonempty");
        offsets.push((pick - j) / k);
    }

    let run = |j: usize| -> u32 {
        let t = offsets[j] as i64;
        let t_next = offsets[(j + 1) % k as usize] as i64;
        let s = s as i64;
        let d = t - t_next;
        // The run of k-steps out of pick j must land one (k+1)-step short of
        // pick j+1; crossing the residue wrap costs one extra slot.
        let len = if j as u32 != k - 1 {
            if d >= 0 {
                (s - 1) - d
            } else {
                -d - 1
            }
        } else if d <= -2 {
            -d - 2
        } else if d <= s - 2 {
            (s - 2) - d
        } else {
            debug_assert_eq!(d, s - 1);
            s - 1
        };
        len as u32
    };
    let runs: Vec<u32> = (0..k as usize).map(run).collect();
    Ok((offsets, runs))
}

/// Builds the single-dicycle certificate defined by a transversal `w` of the
/// canonical minimum covers of `C_sk^k`.
///
/// Preconditions: `k | n`, `w` picks exactly one column per canonical
/// minimum cover, and every row keeps at least one column outside `w`
/// (otherwise the associated inequality is a row-cover plus rank composite
/// and carries no minor).
pub fn cert_from_transversal(inst: &CirculantInstance, w: &IndexSet) -> Result<MinorCert> {
    let n = inst.n();
    let k = inst.k();
    let s = n / k;
    let (offsets, runs) = transversal_profile(inst, w)?;
    let free = w.complement();
    for j in 0..n {
        if !free.intersects(&inst.row_support(j)?) {
            return Err(Error::InvalidInput(format!(
                "row {j} lies entirely inside the transversal; the inequality \
                 is a rank/row-cover composite and has no minor certificate"
            )));
        }
    }

    let mut removed = IndexSet::empty(n)?;
    for j in 0..k {
        let pick = j + offsets[j as usize] * k;
        for r in 0..=runs[j as usize] {
            let v = (pick + r * k) % n;
            if removed.contains(v) {
                return Err(Error::Internal(format!(
                    "transversal runs are not disjoint at column {v}"
                )));
            }
            removed.insert(v)?;
        }
    }

    let short_arcs: u32 = runs.iter().sum();
    let long_arcs = k;
    if !(short_arcs + k + 1).is_multiple_of(s) {
        return Err(Error::Internal(
            "dicycle winding number is not integral".into(),
        ));
    }
    let winding = (short_arcs + k + 1) / s;
    if winding >= k {
        return Err(Error::Internal(
            "transversal construction yielded a degenerate minor (winding >= k)".into(),
        ));
    }
    debug_assert_eq!(winding * n, k * short_arcs + (k + 1) * long_arcs);
    let minor_n = n - (short_arcs + long_arcs);
    let minor_k = k - winding;
    debug_assert_eq!(minor_n, s * minor_k + 1);

    let cert = MinorCert {
        instance: *inst,
        w: *w,
        removed,
        dicycles: 1,
        winding,
        short_arcs,
        long_arcs,
        minor_n,
        minor_k,
    };
    debug_assert!(validate_cert(&cert));
    Ok(cert)
}

/// Checks a certificate against its instance.
///
/// The removed set must decompose into `dicycles` node-disjoint simple
/// dicycles with identical parameters, where the targets of `(k+1)`-arcs are
/// exactly `w`. Given `w`, the arc into each removed node is forced (a
/// `(k+1)`-arc into `w`-nodes, a `k`-arc into the rest), so the decomposition
/// is checked by following that forced predecessor map.
pub fn validate_cert(cert: &MinorCert) -> bool {
    let inst = cert.instance;
    let n = inst.n();
    let k = inst.k();
    let nset = &cert.removed;
    let d = cert.dicycles;

    if nset.is_empty() || nset.len() > n - 2 || d == 0 {
        return false;
    }
    if !cert.w.is_subset_of(nset) {
        return false;
    }
    // arithmetic relations between the parameters
    if cert.winding * n != k * cert.short_arcs + (k + 1) * cert.long_arcs {
        return false;
    }
    if nset.len() != d * (cert.short_arcs + cert.long_arcs) {
        return false;
    }
    if cert.minor_n != n - nset.len() || cert.minor_n < 1 {
        return false;
    }
    if cert.winding * d >= k || cert.minor_k != k - d * cert.winding {
        return false;
    }
    if cert.w.len() != d * cert.long_arcs {
        return false;
    }
    // every w-node must be reachable by a long arc within the removed set
    for v in cert.w.iter() {
        if !nset.contains((v + n - (k + 1)) % n) {
            return false;
        }
    }

    // forced predecessor map must be a permutation of the removed set
    let mut pred = std::collections::HashMap::new();
    let mut pred_seen = IndexSet::empty(n).expect("valid universe");
    for v in nset.iter() {
        let step = if cert.w.contains(v) { k + 1 } else { k };
        let p = (v + n - step) % n;
        if !nset.contains(p) || pred_seen.contains(p) {
            return false;
        }
        pred_seen.insert(p).expect("in range");
        pred.insert(v, p);
    }

    // walk the cycles of the permutation and compare parameters
    let mut visited = IndexSet::empty(n).expect("valid universe");
    let mut cycles = 0u32;
    for start in nset.iter() {
        if visited.contains(start) {
            continue;
        }
        cycles += 1;
        let mut shorts = 0u32;
        let mut longs = 0u32;
        let mut v = start;
        loop {
            visited.insert(v).expect("in range");
            if cert.w.contains(v) {
                longs += 1;
            } else {
                shorts += 1;
            }
            v = pred[&v];
            if v == start {
                break;
            }
        }
        if shorts != cert.short_arcs || longs != cert.long_arcs {
            return false;
        }
        let total = k * shorts + (k + 1) * longs;
        if !total.is_multiple_of(n) || total / n != cert.winding {
            return false;
        }
    }
    cycles == d
}

/// Contracts by the certificate's removed set and verifies that the result is
/// the claimed circulant under the natural order of surviving columns: every
/// row must be a cyclic window of length `minor_k` and the rows must be all
/// `minor_n` distinct shifts.
pub fn contraction_is_circulant(cert: &MinorCert) -> Result<(u32, u32)> {
    if !validate_cert(cert) {
        return Err(Error::InvalidInput(
            "certificate does not validate against its instance".into(),
        ));
    }
    let m = cert.instance.contract(&cert.removed)?;
    let np = cert.minor_n;
    let kp = cert.minor_k;
    if !m.dropped_zero_cols().is_empty() {
        return Err(Error::NotCirculant(format!(
            "contraction dropped uncovered columns {:?}",
            m.dropped_zero_cols()
        )));
    }
    if m.ncols() != np || m.nrows() != np as usize {
        return Err(Error::NotCirculant(format!(
            "contraction has {} columns and {} rows, expected {np} of each",
            m.ncols(),
            m.nrows()
        )));
    }
    let mut expected: Vec<IndexSet> = (0..np)
        .map(|i| IndexSet::closed_open(np, i, (i + kp) % np))
        .collect::<Result<_>>()?;
    let mut got: Vec<IndexSet> = m.rows().to_vec();
    expected.sort();
    got.sort();
    if expected != got {
        return Err(Error::NotCirculant(format!(
            "rows are not the distinct cyclic windows of C_{np}^{kp}"
        )));
    }
    Ok((np, kp))
}

/// The explicit dicycles of a valid certificate, each starting at its
/// smallest node, ordered by those start nodes.
pub fn dicycles_of(cert: &MinorCert) -> Result<Vec<Dicycle>> {
    if !validate_cert(cert) {
        return Err(Error::InvalidInput(
            "certificate does not validate against its instance".into(),
        ));
    }
    let inst = cert.instance;
    let n = inst.n();
    let k = inst.k();
    let mut succ = std::collections::HashMap::new();
    for v in cert.removed.iter() {
        let step = if cert.w.contains(v) { k + 1 } else { k };
        succ.insert((v + n - step) % n, v);
    }
    let mut visited = IndexSet::empty(n)?;
    let mut cycles = Vec::with_capacity(cert.dicycles as usize);
    for start in cert.removed.iter() {
        if visited.contains(start) {
            continue;
        }
        let mut nodes = Vec::new();
        let mut v = start;
        loop {
            visited.insert(v)?;
            nodes.push(v);
            v = succ[&v];
            if v == start {
                break;
            }
        }
        cycles.push(Dicycle::from_nodes(&inst, nodes)?);
    }
    Ok(cycles)
}

/// Whether `C_{minor_n}^{minor_k}` embeds as a minor of some `C_sk^k`, and a
/// witness `(s, k)` when it does.
///
/// Writing `minor_n = h*minor_k + r` with `1 <= r <= minor_k - 1`, an
/// embedding exists iff `r <= h - 1`, realized by `s = h` and
/// `k = ceil(minor_n / (h - r))`.
pub fn embeddable_in_sk(minor_n: u32, minor_k: u32) -> Result<Option<(u32, u32)>> {
    if minor_k < 2 || minor_n <= minor_k {
        return Err(Error::InvalidInput(format!(
            "embeddability needs minor_k >= 2 and minor_n > minor_k, got ({minor_n}, {minor_k})"
        )));
    }
    let h = minor_n / minor_k;
    let r = minor_n % minor_k;
    if r == 0 {
        return Err(Error::InvalidInput(format!(
            "minor_n = {minor_n} is a multiple of minor_k = {minor_k}, outside the embeddability criterion"
        )));
    }
    if r > h - 1 {
        return Ok(None);
    }
    let s = h;
    let k = minor_n.div_ceil(h - r);
    // witness satisfies minor_k/k <= minor_n/(s k) <= (minor_k+1)/(k+1)
    debug_assert!(s * minor_k <= minor_n);
    debug_assert!(minor_n as u64 * (k as u64 + 1) <= s as u64 * k as u64 * (minor_k as u64 + 1));
    Ok(Some((s, k)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(n: u32, k: u32) -> CirculantInstance {
        CirculantInstance::new(n, k).unwrap()
    }

    fn set(n: u32, members: &[u32]) -> IndexSet {
        IndexSet::from_members(n, members.iter().copied()).unwrap()
    }

    #[test]
    fn graph_arc_shape() {
        let arcs = graph_arcs(&inst(6, 3));
        assert_eq!(arcs.len(), 12);
        assert!(arcs.contains(&GraphArc {
            from: 0,
            to: 3,
            length: 3
        }));
        assert!(arcs.contains(&GraphArc {
            from: 5,
            to: 3,
            length: 4
        }));
    }

    #[test]
    fn dicycle_params_examples() {
        // all-long cycle on the even residues of C_10^5
        assert_eq!(
            dicycle_params(&inst(10, 5), &[0, 6, 2, 8, 4]).unwrap(),
            (3, 0, 5)
        );
        // two-node cycle using only k-arcs in C_6^3
        assert_eq!(dicycle_params(&inst(6, 3), &[0, 3]).unwrap(), (1, 2, 0));
        // walking the constructed dicycle of the C_30^6 example is covered in
        // cert tests below
        assert!(dicycle_params(&inst(6, 3), &[0, 1]).is_err());
        assert!(dicycle_params(&inst(6, 3), &[0, 3, 0, 3]).is_err());
    }

    #[test]
    fn transversal_profile_c30_6() {
        let c = inst(30, 6);
        let w = set(30, &[0, 5, 8, 15, 16, 19]);
        let (offsets, runs) = transversal_profile(&c, &w).unwrap();
        assert_eq!(offsets, vec![0, 3, 1, 2, 2, 0]);
        assert_eq!(runs, vec![2, 2, 0, 4, 2, 3]);
    }

    #[test]
    fn cert_c30_6() {
        let c = inst(30, 6);
        let cert = cert_from_transversal(&c, &set(30, &[0, 5, 8, 15, 16, 19])).unwrap();
        assert_eq!(
            (cert.winding(), cert.short_arcs(), cert.long_arcs()),
            (4, 13, 6)
        );
        assert_eq!((cert.minor_n(), cert.minor_k()), (11, 2));
        assert_eq!(cert.winding() * 30, 6 * 13 + 7 * 6);
        assert_eq!(cert.removed().len(), 19);
        assert!(validate_cert(&cert));
        assert_eq!(contraction_is_circulant(&cert).unwrap(), (11, 2));
    }

    #[test]
    fn cert_c10_5_even_transversal() {
        let c = inst(10, 5);
        let cert = cert_from_transversal(&c, &set(10, &[0, 2, 4, 6, 8])).unwrap();
        let (offsets, runs) = transversal_profile(&c, cert.w()).unwrap();
        assert_eq!(offsets, vec![0, 1, 0, 1, 0]);
        assert_eq!(runs, vec![0; 5]);
        assert_eq!(
            (cert.winding(), cert.short_arcs(), cert.long_arcs()),
            (3, 0, 5)
        );
        assert_eq!((cert.minor_n(), cert.minor_k()), (5, 2));
        assert_eq!(contraction_is_circulant(&cert).unwrap(), (5, 2));
    }

    #[test]
    fn cert_c6_3() {
        let cert = cert_from_transversal(&inst(6, 3), &set(6, &[0, 2, 4])).unwrap();
        assert_eq!(cert.minor_n(), 2 * cert.minor_k() + 1);
        assert!(cert.minor_n() >= 1 && cert.minor_k() >= 1);
        assert!(validate_cert(&cert));
    }

    #[test]
    fn construction_rejects_bad_transversals() {
        let c = inst(10, 5);
        // not a transversal: two picks in residue 0
        assert!(cert_from_transversal(&c, &set(10, &[0, 5, 2, 6, 8])).is_err());
        // composite: row 0 lies inside w
        let w = set(10, &[0, 1, 2, 3, 4]);
        assert!(cert_from_transversal(&c, &w).is_err());
        // k must divide n
        assert!(cert_from_transversal(&inst(8, 3), &set(8, &[0])).is_err());
    }

    #[test]
    fn validate_rejects_tampered_certs() {
        let c = inst(10, 5);
        let good = cert_from_transversal(&c, &set(10, &[0, 2, 4, 6, 8])).unwrap();
        assert!(validate_cert(&good));

        let mut off_by_one = good.clone();
        off_by_one.winding += 1;
        assert!(!validate_cert(&off_by_one));

        // a path, not a cycle: drop one removed node
        let mut path = good.clone();
        path.removed = path.removed.without(4);
        path.w = path.w.without(4);
        assert!(!validate_cert(&path));
    }

    #[test]
    fn w_is_recovered_from_long_arc_targets() {
        // The stored w always equals the set of (k+1)-arc targets. The
        // rule-of-thumb formula {i in N : i-(k+1) in N} can overshoot when a
        // k-run abuts the long arc into the next pick, as it does here.
        let c = inst(10, 5);
        let w = set(10, &[0, 1, 3, 7, 9]);
        let cert = cert_from_transversal(&c, &w).unwrap();
        assert_eq!(*cert.w(), w);
        assert!(validate_cert(&cert));
        let formula = IndexSet::from_members(
            10,
            cert.removed()
                .iter()
                .filter(|&v| cert.removed().contains((v + 10 - 6) % 10)),
        )
        .unwrap();
        assert!(w.is_subset_of(&formula));
        assert_eq!(formula, set(10, &[0, 1, 3, 5, 7, 9]));
        assert_eq!((cert.minor_n(), cert.minor_k()), (3, 1));
        assert_eq!(contraction_is_circulant(&cert).unwrap(), (3, 1));
    }

    #[test]
    fn w_recovery_exact_over_all_transversals_of_c12_4() {
        // arc-target recovery always matches; the set formula contains w
        let c = inst(12, 4);
        let s = 3u32;
        for idx in 0..s.pow(4) {
            let mut t = idx;
            let mut w = IndexSet::empty(12).unwrap();
            for j in 0..4 {
                w.insert(j + (t % s) * 4).unwrap();
                t /= s;
            }
            match cert_from_transversal(&c, &w) {
                Ok(cert) => {
                    assert_eq!(*cert.w(), w);
                    assert!(validate_cert(&cert));
                    assert_eq!(
                        contraction_is_circulant(&cert).unwrap(),
                        (cert.minor_n(), cert.minor_k())
                    );
                    assert_eq!(cert.minor_n(), s * cert.minor_k() + 1);
                }
                Err(Error::InvalidInput(_)) => {} // composite transversal
                Err(e) => panic!("unexpected error: {e}"),
            }
        }
    }

    #[test]
    fn at_least_two_short_runs_below_s_minus_one() {
        // whenever every row keeps a free column, at least two residues have
        // a k-run of length at most s-2
        for (n, k) in [(10u32, 5u32), (12, 4), (12, 6)] {
            let c = inst(n, k);
            let s = n / k;
            let total = (s as u64).pow(k);
            for idx in 0..total {
                let mut t = idx;
                let mut w = IndexSet::empty(n).unwrap();
                for j in 0..k {
                    w.insert(j + (t % s as u64) as u32 * k).unwrap();
                    t /= s as u64;
                }
                if let Ok(cert) = cert_from_transversal(&c, &w) {
                    let (_, runs) = transversal_profile(&c, cert.w()).unwrap();
                    let small = runs.iter().filter(|&&r| r + 2 <= s).count();
                    assert!(small >= 2, "W = {w}: runs {runs:?}");
                    assert!(cert.short_arcs() <= k * (s - 1) - 2);
                    assert!(cert.winding() < k);
                }
            }
        }
    }

    #[test]
    fn all_short_arc_cert_with_empty_w() {
        // the canonical cover itself induces a pure k-arc dicycle; its minor
        // inequality is exactly the rank form
        let c = inst(30, 6);
        let nodes = set(30, &[0, 6, 12, 18, 24]);
        let cert = MinorCert {
            instance: c,
            w: IndexSet::empty(30).unwrap(),
            removed: nodes,
            dicycles: 1,
            winding: 1,
            short_arcs: 5,
            long_arcs: 0,
            minor_n: 25,
            minor_k: 5,
        };
        assert!(validate_cert(&cert));
        assert_eq!(contraction_is_circulant(&cert).unwrap(), (25, 5));
    }

    #[test]
    fn constructed_dicycle_has_the_expected_params() {
        let c = inst(30, 6);
        let cert = cert_from_transversal(&c, &set(30, &[0, 5, 8, 15, 16, 19])).unwrap();
        let cycles = dicycles_of(&cert).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].nodes().len(), 19);
        assert_eq!(dicycle_params(&c, cycles[0].nodes()).unwrap(), (4, 13, 6));

        // two node-disjoint pure k-arc cycles form a d = 2 certificate
        let c12 = inst(12, 4);
        let cert2 = MinorCert::raw(
            c12,
            IndexSet::empty(12).unwrap(),
            set(12, &[0, 4, 8, 1, 5, 9]),
            2,
            1,
            3,
            0,
            6,
            2,
        );
        assert!(validate_cert(&cert2));
        let cycles = dicycles_of(&cert2).unwrap();
        assert_eq!(cycles.len(), 2);
        for cyc in &cycles {
            assert_eq!(dicycle_params(&c12, cyc.nodes()).unwrap(), (1, 3, 0));
        }
        assert_eq!(contraction_is_circulant(&cert2).unwrap(), (6, 2));
    }

    #[test]
    fn embeddability_matches_exhaustive_condition_up_to_k10() {
        // reference: some s, k with s*k' <= n' and n'(k+1) <= s k (k'+1)
        let oracle = |np: u32, kp: u32| -> bool {
            (2..=np).any(|s| {
                (2..=np).any(|k| {
                    s * kp <= np
                        && (np as u64) * (k as u64 + 1) <= (s as u64) * (k as u64) * (kp as u64 + 1)
                })
            })
        };
        for kp in 2u32..=10 {
            for np in (kp + 1)..=30 {
                if np % kp == 0 {
                    continue;
                }
                assert_eq!(
                    embeddable_in_sk(np, kp).unwrap().is_some(),
                    oracle(np, kp),
                    "(n', k') = ({np}, {kp})"
                );
            }
        }
    }

    #[test]
    fn deep_minor_with_winding_three() {
        // a 10-node dicycle of C_16^4 stepping 5 eight times and 4 twice
        // winds three times and certifies a C_6^1 minor; its inequality has
        // right-hand side 6, beyond the transversal family
        let c = inst(16, 4);
        let nodes = vec![0u32, 5, 10, 15, 4, 9, 14, 3, 8, 12];
        assert_eq!(dicycle_params(&c, &nodes).unwrap(), (3, 2, 8));
        let cert = MinorCert::raw(
            c,
            set(16, &[3, 4, 5, 8, 9, 10, 14, 15]),
            set(16, &[0, 3, 4, 5, 8, 9, 10, 12, 14, 15]),
            1,
            3,
            2,
            8,
            6,
            1,
        );
        assert!(validate_cert(&cert));
        assert_eq!(contraction_is_circulant(&cert).unwrap(), (6, 1));
        let cycles = dicycles_of(&cert).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].nodes().len(), 10);
    }

    #[test]
    fn cert_dto_round_trip() {
        let c = inst(30, 6);
        let cert = cert_from_transversal(&c, &set(30, &[0, 5, 8, 15, 16, 19])).unwrap();
        let js = serde_json::to_string(&cert).unwrap();
        let dto: MinorCertDto = serde_json::from_str(&js).unwrap();
        let back = MinorCert::from_dto(c, &dto).unwrap();
        assert_eq!(back, cert);

        let mut tampered = cert.to_dto();
        tampered.n1 = 5;
        assert!(MinorCert::from_dto(c, &tampered).is_err());
    }

    #[test]
    fn embeddability_cases() {
        assert_eq!(embeddable_in_sk(7, 3).unwrap(), Some((2, 7)));
        assert_eq!(embeddable_in_sk(5, 3).unwrap(), None);
        let (s, k) = embeddable_in_sk(11, 2).unwrap().unwrap();
        assert_eq!(s, 5);
        assert!(k >= 2);
        assert!(embeddable_in_sk(6, 3).is_err());
        assert!(embeddable_in_sk(6, 1).is_err());
    }

    #[test]
    fn c14_7_even_transversal_gives_c7_3() {
        let c = inst(14, 7);
        let w = IndexSet::from_members(14, (0..14).step_by(2).map(|x| x as u32)).unwrap();
        let cert = cert_from_transversal(&c, &w).unwrap();
        assert_eq!((cert.minor_n(), cert.minor_k()), (7, 3));
        assert_eq!(contraction_is_circulant(&cert).unwrap(), (7, 3));
    }
}
