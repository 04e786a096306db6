//! Exact two-phase simplex over rationals.
//!
//! Free variables are split into positive and negative parts, inequalities
//! get slacks, and phase one drives artificial variables to zero. Pivots use
//! Bland's anti-cycling rule (lowest eligible index enters, lowest basic
//! index leaves on ratio ties), so every solve is reproducible bit-for-bit.

use crate::error::{Error, Result};
use crate::rational::{RatVector, Rational};
use num_traits::{One, Signed, Zero};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Relation {
    Le,
    Eq,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sense {
    Min,
    Max,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Clone, Debug)]
pub struct LpOutcome {
    pub status: LpStatus,
    /// Optimal objective value, present iff `status == Optimal`.
    pub value: Option<Rational>,
    /// A feasible point attaining `value`, present iff `status == Optimal`.
    pub point: Option<RatVector>,
}

#[derive(Clone, Copy, Debug)]
pub struct LpLimits {
    pub pivot_cap: u64,
}

static DEFAULT_PIVOT_CAP: std::sync::atomic::AtomicU64 =
    std::sync::atomic::AtomicU64::new(1_000_000);

/// Overrides the process-wide default pivot cap (10^6).
pub fn set_default_pivot_cap(cap: u64) {
    DEFAULT_PIVOT_CAP.store(cap, std::sync::atomic::Ordering::Relaxed);
}

impl Default for LpLimits {
    fn default() -> Self {
        LpLimits {
            pivot_cap: DEFAULT_PIVOT_CAP.load(std::sync::atomic::Ordering::Relaxed),
        }
    }
}

pub type Constraint = (RatVector, Relation, Rational);

struct Tableau {
    /// Constraint rows, each of width `ncols + 1` (last entry is the rhs).
    rows: Vec<Vec<Rational>>,
    /// Objective row in canonical form (basic columns zeroed).
    obj: Vec<Rational>,
    /// Basic variable of each row.
    basis: Vec<usize>,
    ncols: usize,
    pivots: u64,
    cap: u64,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) -> Result<()> {
        self.pivots += 1;
        if self.pivots > self.cap {
            return Err(Error::PivotCapExceeded { limit: self.cap });
        }
        let inv = self.rows[row][col].recip();
        for v in self.rows[row].iter_mut() {
            *v *= &inv;
        }
        for r in 0..self.rows.len() {
            if r == row || self.rows[r][col].is_zero() {
                continue;
            }
            let factor = std::mem::replace(&mut self.rows[r][col], Rational::zero());
            for c in 0..=self.ncols {
                if c == col {
                    continue;
                }
                let delta = &factor * &self.rows[row][c];
                self.rows[r][c] -= delta;
            }
        }
        if !self.obj[col].is_zero() {
            let factor = std::mem::replace(&mut self.obj[col], Rational::zero());
            for c in 0..=self.ncols {
                if c == col {
                    continue;
                }
                let delta = &factor * &self.rows[row][c];
                self.obj[c] -= delta;
            }
        }
        self.basis[row] = col;
        Ok(())
    }

    /// Runs simplex to optimality on the current (maximization) objective.
    /// `allowed` masks the columns permitted to enter the basis.
    fn optimize(&mut self, allowed: &[bool]) -> Result<LpStatus> {
        loop {
            // Bland: smallest improving column.
            let entering = (0..self.ncols)
                .find(|&j| allowed[j] && self.obj[j].is_negative());
            let Some(col) = entering else {
                return Ok(LpStatus::Optimal);
            };
            // Ratio test; ties broken by smallest basic variable index.
            let mut best: Option<(Rational, usize, usize)> = None;
            for r in 0..self.rows.len() {
                if self.rows[r][col].is_positive() {
                    let ratio = &self.rows[r][self.ncols] / &self.rows[r][col];
                    let candidate = (ratio, self.basis[r], r);
                    best = match best {
                        None => Some(candidate),
                        Some(b) => {
                            if (&candidate.0, candidate.1) < (&b.0, b.1) {
                                Some(candidate)
                            } else {
                                Some(b)
                            }
                        }
                    };
                }
            }
            match best {
                Some((_, _, row)) => self.pivot(row, col)?,
                None => return Ok(LpStatus::Unbounded),
            }
        }
    }

    /// Rewrites the objective row for cost vector `costs` (maximization) in
    /// canonical form with respect to the current basis.
    fn set_objective(&mut self, costs: &[Rational]) {
        self.obj = costs.iter().map(|c| -c).collect();
        self.obj.push(Rational::zero());
        for r in 0..self.rows.len() {
            let b = self.basis[r];
            if self.obj[b].is_zero() {
                continue;
            }
            let factor = std::mem::replace(&mut self.obj[b], Rational::zero());
            for c in 0..=self.ncols {
                if c == b {
                    continue;
                }
                let delta = &factor * &self.rows[r][c];
                self.obj[c] -= delta;
            }
        }
    }
}

/// Solves `sense (objective · x)` over free variables `x` subject to the
/// given constraints. Exact; deterministic; never rounds.
pub fn solve_lp(
    objective: &RatVector,
    constraints: &[Constraint],
    sense: Sense,
    limits: &LpLimits,
) -> Result<LpOutcome> {
    let n = objective.dim();
    if n == 0 {
        return Err(Error::InvalidInput("empty objective".into()));
    }
    for (a, _, _) in constraints {
        a.check_dim(n)?;
    }

    let m = constraints.len();
    // Columns: x+ (n), x- (n), one slack per Le row, one artificial per row
    // that still needs a basic variable.
    let n_slack = constraints
        .iter()
        .filter(|(_, rel, _)| *rel == Relation::Le)
        .count();
    let base = 2 * n;
    let slack0 = base;
    let art0 = base + n_slack;

    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(m);
    let mut needs_artificial: Vec<bool> = Vec::with_capacity(m);
    let mut slack_idx = 0usize;
    for (a, rel, b) in constraints {
        let negate = b.is_negative();
        let s = |v: &Rational| if negate { -v } else { v.clone() };
        let mut row = vec![Rational::zero(); art0 + 1];
        for j in 0..n {
            row[j] = s(&a[j]);
            row[n + j] = -s(&a[j]);
        }
        if *rel == Relation::Le {
            row[slack0 + slack_idx] = if negate { -Rational::one() } else { Rational::one() };
            slack_idx += 1;
        }
        row[art0] = s(b);
        needs_artificial.push(*rel == Relation::Eq || negate);
        rows.push(row);
    }

    // Widen rows with artificial columns and pick the initial basis.
    let n_art = needs_artificial.iter().filter(|&&x| x).count();
    let ncols = art0 + n_art;
    let mut basis = Vec::with_capacity(m);
    let mut art = 0usize;
    let mut slack_pos = 0usize;
    for (i, row) in rows.iter_mut().enumerate() {
        let rhs = row.pop().unwrap();
        row.extend(std::iter::repeat_with(Rational::zero).take(n_art));
        row.push(rhs);
        if needs_artificial[i] {
            row[art0 + art] = Rational::one();
            basis.push(art0 + art);
            art += 1;
            if constraints[i].1 == Relation::Le {
                slack_pos += 1;
            }
        } else {
            basis.push(slack0 + slack_pos);
            slack_pos += 1;
        }
    }

    let mut tab = Tableau {
        rows,
        obj: Vec::new(),
        basis,
        ncols,
        pivots: 0,
        cap: limits.pivot_cap,
    };

    let allow_all = vec![true; ncols];
    let mut allow_real = vec![true; ncols];
    allow_real[art0..].fill(false);

    // Phase one: maximize -(sum of artificials).
    if n_art > 0 {
        let mut costs = vec![Rational::zero(); ncols];
        for c in costs[art0..].iter_mut() {
            *c = -Rational::one();
        }
        tab.set_objective(&costs);
        let st = tab.optimize(&allow_all)?;
        debug_assert_eq!(st, LpStatus::Optimal);
        if !tab.obj[ncols].is_zero() {
            return Ok(LpOutcome {
                status: LpStatus::Infeasible,
                value: None,
                point: None,
            });
        }
        // Drive remaining artificials out of the basis; rows that cannot
        // pivot are redundant and dropped.
        let mut r = 0;
        while r < tab.rows.len() {
            if tab.basis[r] >= art0 {
                match (0..art0).find(|&j| !tab.rows[r][j].is_zero()) {
                    Some(col) => tab.pivot(r, col)?,
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

    // Phase two with the real objective.
    let mut costs = vec![Rational::zero(); ncols];
    for j in 0..n {
        let c = match sense {
            Sense::Max => objective[j].clone(),
            Sense::Min => -&objective[j],
        };
        costs[j] = c.clone();
        costs[n + j] = -c;
    }
    tab.set_objective(&costs);
    match tab.optimize(&allow_real)? {
        LpStatus::Unbounded => Ok(LpOutcome {
            status: LpStatus::Unbounded,
            value: None,
            point: None,
        }),
        _ => {
            let mut x = vec![Rational::zero(); 2 * n];
            for (r, &b) in tab.basis.iter().enumerate() {
                if b < 2 * n {
                    x[b] = tab.rows[r][ncols].clone();
                }
            }
            let point = RatVector::new((0..n).map(|j| &x[j] - &x[n + j]).collect());
            let raw = tab.obj[ncols].clone();
            let value = match sense {
                Sense::Max => raw,
                Sense::Min => -raw,
            };
            debug_assert!(check_solution(objective, constraints, sense, &value, &point));
            Ok(LpOutcome {
                status: LpStatus::Optimal,
                value: Some(value),
                point: Some(point),
            })
        }
    }
}

/// Feasibility plus exact objective attainment of a claimed optimum.
pub fn check_solution(
    objective: &RatVector,
    constraints: &[Constraint],
    _sense: Sense,
    value: &Rational,
    point: &RatVector,
) -> bool {
    if objective.dot(point) != *value {
        return false;
    }
    constraints.iter().all(|(a, rel, b)| {
        let lhs = a.dot(point);
        match rel {
            Relation::Le => lhs <= *b,
            Relation::Eq => lhs == *b,
        }
    })
}
