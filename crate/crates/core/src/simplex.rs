//! Phase-one simplex for `A x = b, x ≥ 0` feasibility.
//!
//! Every row gets an artificial variable and the total artificial mass is
//! minimized with Bland's rule. The optimum is the L1 distance from `b` to the
//! cone `{A x : x ≥ 0}` restricted to the reachable vertex; the system is
//! feasible iff it is zero (up to the caller's tolerance).

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

const PIVOT_TOL: f64 = 1e-11;
const COST_TOL: f64 = 1e-12;
const MAX_ITERATIONS: usize = 50_000;

#[derive(Debug, Clone, PartialEq)]
pub struct LpOutcome {
    pub feasible: bool,
    /// Values of the structural variables at the phase-one optimum.
    pub solution: Vec<f64>,
    /// Phase-one optimum: total artificial mass `Σ |b − A x|`.
    pub residual: f64,
    /// `max |A x − b|` recomputed from the original data.
    pub max_violation: f64,
}

/// Solves the phase-one problem for the rows of `constraints` against `rhs`.
///
/// All rows must have the same length. Feasible iff `residual ≤ tol`.
pub fn solve_feasibility_lp(constraints: &[Vec<f64>], rhs: &[f64], tol: f64) -> Result<LpOutcome> {
    let m = constraints.len();
    if rhs.len() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: rhs.len(),
        });
    }
    let n = constraints.first().map_or(0, Vec::len);
    if let Some(bad) = constraints.iter().find(|r| r.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: bad.len(),
        });
    }
    if constraints
        .iter()
        .flatten()
        .chain(rhs)
        .any(|x| !x.is_finite())
    {
        return Err(Error::NonFinite);
    }

    // Tableau rows: [structural | artificial | rhs], all rhs made nonnegative.
    let width = n + m + 1;
    let mut t = vec![0.0; m * width];
    for (i, (row, &b)) in constraints.iter().zip(rhs).enumerate() {
        let sign = if b < 0.0 { -1.0 } else { 1.0 };
        for (j, &a) in row.iter().enumerate() {
            t[i * width + j] = sign * a;
        }
        t[i * width + n + i] = 1.0;
        t[i * width + width - 1] = sign * b;
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Reduced costs of the phase-one objective; artificials start basic.
    let mut cost = vec![0.0; width];
    for i in 0..m {
        for j in 0..n {
            cost[j] -= t[i * width + j];
        }
        cost[width - 1] -= t[i * width + width - 1];
    }

    let mut iterations = 0;
    while let Some(enter) = (0..n + m).find(|&j| cost[j] < -COST_TOL && !basis.contains(&j)) {
        let mut leave: Option<(usize, f64)> = None;
        for i in 0..m {
            let a = t[i * width + enter];
            if a <= PIVOT_TOL {
                continue;
            }
            let ratio = t[i * width + width - 1] / a;
            leave = match leave {
                None => Some((i, ratio)),
                Some((r, best)) => {
                    let tie = (ratio - best).abs() <= 1e-12 * (1.0 + best.abs());
                    if ratio < best && !tie || tie && basis[i] < basis[r] {
                        Some((i, ratio))
                    } else {
                        Some((r, best))
                    }
                }
            };
        }
        let Some((row, _)) = leave else {
            // Unbounded direction in a problem bounded below by 0 can only come
            // from round-off; the current vertex is as good as it gets.
            break;
        };
        pivot(&mut t, &mut cost, width, m, row, enter);
        basis[row] = enter;
        iterations += 1;
        if iterations > MAX_ITERATIONS {
            return Err(Error::NumericalBreakdown {
                limit: MAX_ITERATIONS,
            });
        }
    }

    let mut solution = vec![0.0; n];
    let mut residual = 0.0;
    for (i, &var) in basis.iter().enumerate() {
        let value = t[i * width + width - 1].max(0.0);
        if var < n {
            solution[var] = value;
        } else {
            residual += value;
        }
    }
    let max_violation = constraints
        .iter()
        .zip(rhs)
        .map(|(row, b)| (row.iter().zip(&solution).map(|(a, x)| a * x).sum::<f64>() - b).abs())
        .fold(0.0, f64::max);
    Ok(LpOutcome {
        feasible: residual <= tol,
        solution,
        residual,
        max_violation,
    })
}

fn pivot(t: &mut [f64], cost: &mut [f64], width: usize, m: usize, row: usize, col: usize) {
    let p = t[row * width + col];
    for j in 0..width {
        t[row * width + j] /= p;
    }
    t[row * width + col] = 1.0;
    for i in 0..m {
        if i == row {
            continue;
        }
        let f = t[i * width + col];
        if f == 0.0 {
            continue;
        }
        for j in 0..width {
            t[i * width + j] -= f * t[row * width + j];
        }
        t[i * width + col] = 0.0;
    }
    let f = cost[col];
    for j in 0..width {
        cost[j] -= f * t[row * width + j];
    }
    cost[col] = 0.0;
}
