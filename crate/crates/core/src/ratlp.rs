//! Exact rational linear programming by dense two-phase simplex.
//!
//! Problems here are tiny (tens of variables, a few hundred rows), so a
//! dense tableau with Bland's anti-cycling rule is the whole story: no
//! floating point, no sparsity, deterministic pivots. Variables carry the
//! implicit box `0 <= x <= 1`; the upper bounds become explicit rows.

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::inequality::LinearInequality;
use crate::ratio::{is_integral, Rat};

/// Minimize `objective . x` subject to the constraint rows (in `>=` form)
/// and the implicit bounds `0 <= x <= 1`.
#[derive(Debug, Clone)]
pub struct LpProblem {
    objective: Vec<Rat>,
    constraints: Vec<LinearInequality>,
}

impl LpProblem {
    pub fn new(objective: Vec<Rat>, constraints: Vec<LinearInequality>) -> Result<Self> {
        for c in &constraints {
            if c.n() != objective.len() {
                return Err(Error::DimensionMismatch {
                    expected: objective.len(),
                    got: c.n(),
                });
            }
        }
        Ok(LpProblem {
            objective,
            constraints,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
}

#[derive(Debug, Clone)]
pub struct LpSolution {
    pub status: LpStatus,
    /// Optimal basic point; empty when infeasible.
    pub point: Vec<Rat>,
    pub objective_value: Rat,
    pub is_integral: bool,
}

struct Tableau {
    /// rows[i] = coefficients over all columns plus rhs in the last slot
    rows: Vec<Vec<Rat>>,
    /// objective row, same layout, value = -z in the rhs slot
    cost: Vec<Rat>,
    basis: Vec<usize>,
    /// first artificial column; phase 2 never pivots at or beyond it
    artificial_start: usize,
}

impl Tableau {
    fn rhs_col(&self) -> usize {
        self.cost.len() - 1
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let pivot_val = self.rows[row][col].clone();
        debug_assert!(!pivot_val.is_zero());
        for v in self.rows[row].iter_mut() {
            *v /= &pivot_val;
        }
        let pivot_row = self.rows[row].clone();
        for r in 0..self.rows.len() {
            if r == row || self.rows[r][col].is_zero() {
                continue;
            }
            let factor = self.rows[r][col].clone();
            for (v, p) in self.rows[r].iter_mut().zip(&pivot_row) {
                *v -= &factor * p;
            }
        }
        if !self.cost[col].is_zero() {
            let factor = self.cost[col].clone();
            for (v, p) in self.cost.iter_mut().zip(&pivot_row) {
                *v -= &factor * p;
            }
        }
        self.basis[row] = col;
    }

    /// Bland's rule: entering column is the lowest-index one with a negative
    /// reduced cost; the leaving row minimizes the ratio, ties broken by the
    /// smallest basic variable index. Returns false once optimal.
    fn bland_step(&mut self, allowed_cols: usize) -> Result<bool> {
        let rhs = self.rhs_col();
        let Some(col) = (0..allowed_cols).find(|&j| self.cost[j].is_negative()) else {
            return Ok(false);
        };
        let mut leave: Option<usize> = None;
        let mut best_ratio: Option<Rat> = None;
        for r in 0..self.rows.len() {
            if !self.rows[r][col].is_positive() {
                continue;
            }
            let ratio = &self.rows[r][rhs] / &self.rows[r][col];
            let better = match &best_ratio {
                None => true,
                Some(b) => {
                    ratio < *b
                        || (ratio == *b
                            && self.basis[r] < self.basis[leave.expect("set with best")])
                }
            };
            if better {
                best_ratio = Some(ratio);
                leave = Some(r);
            }
        }
        let Some(row) = leave else {
            return Err(Error::Internal(
                "unbounded pivot in a box-bounded program".into(),
            ));
        };
        self.pivot(row, col);
        Ok(true)
    }
}

/// Solves the program, returning an exact optimal basic solution or an
/// infeasibility verdict. The result is certified: primal feasibility and
/// the objective value are re-checked exactly before returning.
pub fn solve_lp(problem: &LpProblem) -> Result<LpSolution> {
    let n = problem.num_vars();
    if n == 0 {
        return Err(Error::InvalidInput("empty objective".into()));
    }

    // constraint rows followed by the upper-bound rows -x_i >= -1
    let mut raw: Vec<(Vec<Rat>, Rat)> = problem
        .constraints
        .iter()
        .map(|c| (c.coeffs().to_vec(), c.rhs().clone()))
        .collect();
    for i in 0..n {
        let mut coeffs = vec![Rat::zero(); n];
        coeffs[i] = -Rat::one();
        raw.push((coeffs, -Rat::one()));
    }
    let m = raw.len();

    // standard form: a.x - surplus = b with b normalized nonnegative;
    // rows that keep b > 0 get an artificial basic variable
    let needs_artificial: Vec<bool> = raw.iter().map(|(_, b)| b.is_positive()).collect();
    let num_artificial = needs_artificial.iter().filter(|&&x| x).count();
    let total_cols = n + m + num_artificial;
    let mut rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let mut art = 0usize;
    for (i, (coeffs, b)) in raw.iter().enumerate() {
        let mut row = vec![Rat::zero(); total_cols + 1];
        let flip = !needs_artificial[i];
        for (j, c) in coeffs.iter().enumerate() {
            row[j] = if flip { -c } else { c.clone() };
        }
        row[n + i] = if flip { Rat::one() } else { -Rat::one() };
        row[total_cols] = if flip { -b } else { b.clone() };
        if needs_artificial[i] {
            row[n + m + art] = Rat::one();
            basis.push(n + m + art);
            art += 1;
        } else {
            basis.push(n + i);
        }
        rows.push(row);
    }

    let mut tab = Tableau {
        rows,
        cost: vec![Rat::zero(); total_cols + 1],
        basis,
        artificial_start: n + m,
    };

    // phase 1: drive the artificial variables to zero
    if num_artificial > 0 {
        for j in tab.artificial_start..total_cols {
            tab.cost[j] = Rat::one();
        }
        for r in 0..tab.rows.len() {
            if tab.basis[r] >= tab.artificial_start {
                let row = tab.rows[r].clone();
                for (v, p) in tab.cost.iter_mut().zip(&row) {
                    *v -= p;
                }
            }
        }
        while tab.bland_step(total_cols)? {}
        let rhs = tab.rhs_col();
        let phase1_value = -tab.cost[rhs].clone();
        if phase1_value.is_positive() {
            return Ok(LpSolution {
                status: LpStatus::Infeasible,
                point: Vec::new(),
                objective_value: Rat::zero(),
                is_integral: false,
            });
        }
        // pivot any remaining artificial out of the basis; a row with no
        // eligible pivot is redundant and can be dropped
        let mut r = 0;
        while r < tab.rows.len() {
            if tab.basis[r] >= tab.artificial_start {
                debug_assert!(tab.rows[r][rhs].is_zero());
                match (0..tab.artificial_start).find(|&j| !tab.rows[r][j].is_zero()) {
                    Some(col) => tab.pivot(r, col),
                    None => {
                        tab.rows.remove(r);
                        tab.basis.remove(r);
                        continue;
                    }
                }
            }
            r += 1;
        }
    }

    // phase 2: original objective, artificial columns frozen out
    tab.cost = vec![Rat::zero(); total_cols + 1];
    for j in 0..n {
        tab.cost[j] = problem.objective[j].clone();
    }
    for r in 0..tab.rows.len() {
        let b = tab.basis[r];
        if !tab.cost[b].is_zero() {
            let factor = tab.cost[b].clone();
            let row = tab.rows[r].clone();
            for (v, p) in tab.cost.iter_mut().zip(&row) {
                *v -= &factor * p;
            }
        }
    }
    while tab.bland_step(tab.artificial_start)? {}

    let rhs = tab.rhs_col();
    let mut point = vec![Rat::zero(); n];
    for (r, &b) in tab.basis.iter().enumerate() {
        if b < n {
            point[b] = tab.rows[r][rhs].clone();
        }
    }
    let objective_value: Rat = problem
        .objective
        .iter()
        .zip(&point)
        .map(|(c, x)| c * x)
        .sum();

    // exact certification of the reported optimum
    for (idx, c) in problem.constraints.iter().enumerate() {
        let lhs: Rat = c.coeffs().iter().zip(&point).map(|(a, x)| a * x).sum();
        if lhs < *c.rhs() {
            return Err(Error::Internal(format!(
                "simplex point violates constraint {idx}"
            )));
        }
    }
    if point.iter().any(|x| x.is_negative() || *x > Rat::one()) {
        return Err(Error::Internal("simplex point escapes the unit box".into()));
    }

    let is_integral = point.iter().all(is_integral);
    Ok(LpSolution {
        status: LpStatus::Optimal,
        point,
        objective_value,
        is_integral,
    })
}
