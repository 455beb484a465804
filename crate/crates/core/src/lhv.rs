//! Local-hidden-variable feasibility for the Hardy measurement scenario.
//!
//! Two parties, two settings each (`X1`, `Y1` and `X2`, `Y2`), three outcomes
//! per setting. Local stochastic models are exactly the mixtures of the
//! 3² × 3² = 81 deterministic product strategies, so deciding whether a
//! behavior is local is a linear feasibility problem in 81 weights.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::observables::{joint_probability, HardyObservableSet, ObservableLabel, Outcome};
use crate::simplex::solve_feasibility_lp;
use crate::state::DensityOperator;

pub const DEFAULT_LHV_TOL: f64 = 1e-9;

const NORMALIZATION_TOL: f64 = 1e-6;

const ALICE: [ObservableLabel; 2] = [ObservableLabel::X1, ObservableLabel::Y1];
const BOB: [ObservableLabel; 2] = [ObservableLabel::X2, ObservableLabel::Y2];

fn setting_index(label: ObservableLabel) -> usize {
    match label {
        ObservableLabel::X1 | ObservableLabel::X2 => 0,
        ObservableLabel::Y1 | ObservableLabel::Y2 => 1,
    }
}

/// Joint outcome tables `P(a, b | A, B)`.
///
/// `tables[2·A + B][a][b]` with `A ∈ {X1, Y1}`, `B ∈ {X2, Y2}` indexed 0/1
/// and outcomes indexed `+1, 0, −1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Behavior {
    pub tables: [[[f64; 3]; 3]; 4],
}

impl Behavior {
    pub fn new(tables: [[[f64; 3]; 3]; 4]) -> Self {
        Self { tables }
    }

    pub fn table(&self, alice: ObservableLabel, bob: ObservableLabel) -> &[[f64; 3]; 3] {
        &self.tables[2 * setting_index(alice) + setting_index(bob)]
    }

    pub fn prob(
        &self,
        alice: ObservableLabel,
        a: Outcome,
        bob: ObservableLabel,
        b: Outcome,
    ) -> f64 {
        self.table(alice, bob)[a.index()][b.index()]
    }

    /// Largest `|Σ table − 1|` over the four setting pairs.
    pub fn normalization_error(&self) -> f64 {
        self.tables
            .iter()
            .map(|t| (t.iter().flatten().sum::<f64>() - 1.0).abs())
            .fold(0.0, f64::max)
    }

    /// Largest disagreement between one party's marginals computed under
    /// the other party's two settings.
    pub fn signaling_error(&self) -> f64 {
        let mut worst = 0.0_f64;
        for sa in 0..2 {
            for o in 0..3 {
                let m0: f64 = self.tables[2 * sa][o].iter().sum();
                let m1: f64 = self.tables[2 * sa + 1][o].iter().sum();
                worst = worst.max((m0 - m1).abs());
            }
        }
        for sb in 0..2 {
            for o in 0..3 {
                let m0: f64 = (0..3).map(|a| self.tables[sb][a][o]).sum();
                let m1: f64 = (0..3).map(|a| self.tables[2 + sb][a][o]).sum();
                worst = worst.max((m0 - m1).abs());
            }
        }
        worst
    }

    /// Behavior of the mixture `Σ_λ w_λ · strategy_λ`.
    pub fn from_strategy_mixture(strategies: &[DeterministicStrategy], weights: &[f64]) -> Self {
        let mut tables = [[[0.0; 3]; 3]; 4];
        for (s, &w) in strategies.iter().zip(weights) {
            for (sa, &la) in ALICE.iter().enumerate() {
                for (sb, &lb) in BOB.iter().enumerate() {
                    tables[2 * sa + sb][s.outcome(la).index()][s.outcome(lb).index()] += w;
                }
            }
        }
        Self { tables }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.tables
            .iter()
            .flatten()
            .flatten()
            .zip(other.tables.iter().flatten().flatten())
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    }
}

/// Outcome assignment to every setting of both parties.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DeterministicStrategy {
    /// Outcomes for `X1`, `Y1`.
    pub alice: [Outcome; 2],
    /// Outcomes for `X2`, `Y2`.
    pub bob: [Outcome; 2],
}

impl DeterministicStrategy {
    pub fn outcome(&self, label: ObservableLabel) -> Outcome {
        match label {
            ObservableLabel::X1 => self.alice[0],
            ObservableLabel::Y1 => self.alice[1],
            ObservableLabel::X2 => self.bob[0],
            ObservableLabel::Y2 => self.bob[1],
        }
    }
}

/// All 81 strategies, lexicographic in `(X1, Y1, X2, Y2)` with outcome order
/// `+1, 0, −1`.
pub fn enumerate_strategies() -> Vec<DeterministicStrategy> {
    let mut out = Vec::with_capacity(81);
    for x1 in Outcome::ALL {
        for y1 in Outcome::ALL {
            for x2 in Outcome::ALL {
                for y2 in Outcome::ALL {
                    out.push(DeterministicStrategy {
                        alice: [x1, y1],
                        bob: [x2, y2],
                    });
                }
            }
        }
    }
    out
}

/// Outcome of an LHV feasibility test.
#[derive(Debug, Clone, PartialEq)]
pub struct LhvResult {
    pub feasible: bool,
    /// Weights over [`enumerate_strategies`] order; present iff feasible.
    pub weights: Option<Vec<f64>>,
    /// Largest cell residual of the reconstructed behavior when feasible,
    /// otherwise the minimized total residual of the phase-one problem.
    pub max_violation: f64,
}

pub fn behavior_from_state(sigma: &DensityOperator, obs: &HardyObservableSet) -> Result<Behavior> {
    let mut tables = [[[0.0; 3]; 3]; 4];
    for (sa, &la) in ALICE.iter().enumerate() {
        for (sb, &lb) in BOB.iter().enumerate() {
            for a in Outcome::ALL {
                for b in Outcome::ALL {
                    tables[2 * sa + sb][a.index()][b.index()] =
                        joint_probability(sigma, obs.get(la), a, obs.get(lb), b)?;
                }
            }
        }
    }
    Ok(Behavior { tables })
}

/// Searches for a distribution over the 81 deterministic strategies that
/// reproduces every one of the 36 cells of `behavior`.
pub fn lhv_feasible(behavior: &Behavior, tol: f64) -> Result<LhvResult> {
    for (setting, t) in behavior.tables.iter().enumerate() {
        let sum: f64 = t.iter().flatten().sum();
        if !sum.is_finite() || (sum - 1.0).abs() > NORMALIZATION_TOL {
            return Err(Error::MalformedBehavior { setting, sum });
        }
    }
    let strategies = enumerate_strategies();
    let mut rows = Vec::with_capacity(37);
    let mut rhs = Vec::with_capacity(37);
    rows.push(alloc::vec![1.0; strategies.len()]);
    rhs.push(1.0);
    for (sa, &la) in ALICE.iter().enumerate() {
        for (sb, &lb) in BOB.iter().enumerate() {
            for a in Outcome::ALL {
                for b in Outcome::ALL {
                    rows.push(
                        strategies
                            .iter()
                            .map(|s| {
                                if s.outcome(la) == a && s.outcome(lb) == b {
                                    1.0
                                } else {
                                    0.0
                                }
                            })
                            .collect(),
                    );
                    rhs.push(behavior.tables[2 * sa + sb][a.index()][b.index()]);
                }
            }
        }
    }
    let lp = solve_feasibility_lp(&rows, &rhs, tol)?;
    if !lp.feasible {
        return Ok(LhvResult {
            feasible: false,
            weights: None,
            max_violation: lp.residual,
        });
    }
    let total: f64 = lp.solution.iter().sum();
    let weights: Vec<f64> = lp.solution.iter().map(|w| w / total).collect();
    let max_violation =
        Behavior::from_strategy_mixture(&strategies, &weights).max_abs_diff(behavior);
    Ok(LhvResult {
        feasible: max_violation <= tol,
        weights: Some(weights),
        max_violation,
    })
}
