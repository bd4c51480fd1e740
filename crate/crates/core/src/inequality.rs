//! Linear inequalities over the covering polyhedron and their generators.

use std::ops::ControlFlow;

use num::{BigInt, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::covers;
use crate::error::{Error, Result};
use crate::instance::CirculantInstance;
use crate::limits::Limits;
use crate::minors::{validate_cert, MinorCert};
use crate::ratio::{rat_int, rat_serde, rat_vec_serde, Rat};
use crate::set::IndexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IneqKind {
    BooleanLower,
    BooleanUpper,
    RowCover,
    Rank,
    Minor,
    Generic,
}

/// An inequality `coeffs . x >= rhs` with exact rational data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinearInequality {
    #[serde(with = "rat_vec_serde")]
    coeffs: Vec<Rat>,
    #[serde(with = "rat_serde")]
    rhs: Rat,
    kind: IneqKind,
}

impl LinearInequality {
    pub fn new(coeffs: Vec<Rat>, rhs: Rat, kind: IneqKind) -> Self {
        LinearInequality { coeffs, rhs, kind }
    }

    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn rhs(&self) -> &Rat {
        &self.rhs
    }

    pub fn kind(&self) -> IneqKind {
        self.kind
    }

    /// Left-hand side value on the characteristic vector of `s`.
    pub fn eval(&self, s: &IndexSet) -> Rat {
        debug_assert_eq!(s.universe() as usize, self.coeffs.len());
        let mut total = Rat::zero();
        for i in s.iter() {
            total += &self.coeffs[i as usize];
        }
        total
    }

    pub fn satisfied_by(&self, s: &IndexSet) -> bool {
        self.eval(s) >= self.rhs
    }

    pub fn tight_at(&self, s: &IndexSet) -> bool {
        self.eval(s) == self.rhs
    }

    /// Scales to integer coefficients with overall gcd 1 (rhs included),
    /// preserving direction. This is the identity used for cut-pool
    /// comparison and for the structural battery.
    pub fn canonicalized(&self) -> LinearInequality {
        let mut lcm = BigInt::one();
        for r in self.coeffs.iter().chain(std::iter::once(&self.rhs)) {
            lcm = num::Integer::lcm(&lcm, r.denom());
        }
        let scale = Rat::from_integer(lcm);
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * &scale).to_integer())
            .collect();
        let rhs_int = (&self.rhs * &scale).to_integer();
        let mut g = rhs_int.abs();
        for c in &ints {
            g = num::Integer::gcd(&g, &c.abs());
        }
        if g.is_zero() {
            g = BigInt::one();
        }
        LinearInequality {
            coeffs: ints
                .into_iter()
                .map(|c| Rat::from_integer(c / &g))
                .collect(),
            rhs: Rat::from_integer(rhs_int / g),
            kind: self.kind,
        }
    }

    /// Minimum coefficient and the columns strictly above it, for an
    /// inequality already in canonical integer form.
    pub(crate) fn profile(&self) -> (Rat, IndexSet) {
        let a0 = self
            .coeffs
            .iter()
            .min()
            .cloned()
            .expect("nonempty coefficient vector");
        let above = IndexSet::from_members(
            self.coeffs.len() as u32,
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| **c > a0)
                .map(|(i, _)| i as u32),
        )
        .expect("indices in range");
        (a0, above)
    }
}

/// The `3n` boolean facets: nonnegativity, the unit upper bounds in `>=`
/// form, and the row covers.
pub fn boolean_facets(inst: &CirculantInstance) -> Vec<LinearInequality> {
    let n = inst.n() as usize;
    let mut out = Vec::with_capacity(3 * n);
    for i in 0..n {
        let mut coeffs = vec![Rat::zero(); n];
        coeffs[i] = Rat::one();
        out.push(LinearInequality::new(
            coeffs,
            Rat::zero(),
            IneqKind::BooleanLower,
        ));
    }
    for i in 0..n {
        let mut coeffs = vec![Rat::zero(); n];
        coeffs[i] = -Rat::one();
        out.push(LinearInequality::new(
            coeffs,
            -Rat::one(),
            IneqKind::BooleanUpper,
        ));
    }
    for i in 0..inst.n() {
        out.push(row_cover_inequality(inst, i));
    }
    out
}

pub fn row_cover_inequality(inst: &CirculantInstance, row: u32) -> LinearInequality {
    let mut coeffs = vec![Rat::zero(); inst.n() as usize];
    for c in inst.row_support(row).expect("row in range").iter() {
        coeffs[c as usize] = Rat::one();
    }
    LinearInequality::new(coeffs, Rat::one(), IneqKind::RowCover)
}

/// `sum x_i >= ceil(n/k)`.
pub fn rank_inequality(inst: &CirculantInstance) -> LinearInequality {
    LinearInequality::new(
        vec![Rat::one(); inst.n() as usize],
        rat_int(inst.covering_number() as i64),
        IneqKind::Rank,
    )
}

/// Coefficient 2 on the certificate's `w`, 1 elsewhere, right-hand side
/// `ceil(minor_n / minor_k)`.
pub fn minor_inequality(cert: &MinorCert) -> Result<LinearInequality> {
    if !validate_cert(cert) {
        return Err(Error::InvalidInput(
            "minor inequality requires a valid certificate".into(),
        ));
    }
    let inst = cert.instance();
    let mut coeffs = vec![Rat::one(); inst.n() as usize];
    for i in cert.w().iter() {
        coeffs[i as usize] = rat_int(2);
    }
    let rhs = rat_int(cert.minor_n().div_ceil(cert.minor_k()) as i64);
    Ok(LinearInequality::new(coeffs, rhs, IneqKind::Minor))
}

/// Relevance and conjecture-form classification of a certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MinorClass {
    /// The minor inequality is not dominated by the rank constraint:
    /// `minor_n` is not a multiple of `minor_k` and the minor's covering
    /// number exceeds the instance's.
    pub relevant: bool,
    /// `minor_n = 1 (mod minor_k)`.
    pub conjecture_form: bool,
}

pub fn classify_minor(cert: &MinorCert) -> Result<MinorClass> {
    if !validate_cert(cert) {
        return Err(Error::InvalidInput(
            "classification requires a valid certificate".into(),
        ));
    }
    let np = cert.minor_n();
    let kp = cert.minor_k();
    let relevant = !np.is_multiple_of(kp) && np.div_ceil(kp) > cert.instance().covering_number();
    Ok(MinorClass {
        relevant,
        conjecture_form: np % kp == 1,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidityOutcome {
    pub valid: bool,
    /// Lexicographically smallest violating minimal cover, when invalid.
    pub counterexample: Option<IndexSet>,
}

/// Exhaustive validity check: the inequality holds at every minimal cover.
///
/// For nonnegative coefficients this is equivalent to validity over the whole
/// covering polyhedron, since dropping elements only lowers the left side.
pub fn check_validity(
    inst: &CirculantInstance,
    ineq: &LinearInequality,
    limits: &Limits,
) -> Result<ValidityOutcome> {
    if ineq.n() != inst.n() as usize {
        return Err(Error::DimensionMismatch {
            expected: inst.n() as usize,
            got: ineq.n(),
        });
    }
    limits.check_enum_n(inst.n())?;
    let inst_copy = *inst;
    let ineq_ref = ineq;
    // each anchor scans its own lexicographic stream and reports its first
    // violation; the global counterexample is the smallest across anchors
    let firsts: Vec<Option<IndexSet>> = crate::exec::map_range(inst.k() as usize, move |a| {
        let mut hit = None;
        let _ = covers::for_each_minimal_cover_from_anchor(&inst_copy, a as u32, &mut |elems| {
            let s = IndexSet::from_members(inst_copy.n(), elems.iter().copied()).expect("in range");
            if !ineq_ref.satisfied_by(&s) {
                hit = Some(s);
                return ControlFlow::Break(());
            }
            ControlFlow::Continue(())
        });
        hit
    });
    let counterexample = firsts.into_iter().flatten().min();
    Ok(ValidityOutcome {
        valid: counterexample.is_none(),
        counterexample,
    })
}
