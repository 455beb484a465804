//! Fixture states for the `gen-state` command.

use hardy_core::{Complex64, DensityOperator, StateVector};

use crate::error::CliError;
use crate::statefile::StateFile;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StateSpec {
    /// `√p1_sq |00⟩ + √(1 − p1_sq) |11⟩` in `C^d1 ⊗ C^d2`.
    Hardy { p1_sq: f64, d1: usize, d2: usize },
    /// `Σ_{i<r} |ii⟩ / √r` with `r = min(d1, d2)`.
    Bell { d1: usize, d2: usize },
    /// `|00⟩`.
    Product { d1: usize, d2: usize },
    /// `p |ψ⟩⟨ψ| + (1 − p) I / (d1 d2)` for the Hardy state above.
    WhiteNoiseMix {
        p1_sq: f64,
        p: f64,
        d1: usize,
        d2: usize,
    },
}

fn check_dims(d1: usize, d2: usize, min: usize) -> Result<(), CliError> {
    if d1 < min || d2 < min {
        return Err(CliError::Format(format!(
            "dimensions must be at least {min}, got {d1}x{d2}"
        )));
    }
    Ok(())
}

fn hardy_vector(p1_sq: f64, d1: usize, d2: usize) -> Result<StateVector, CliError> {
    if !(p1_sq > 0.0 && p1_sq < 1.0) {
        return Err(CliError::Format(format!(
            "p1_sq must lie in (0, 1), got {p1_sq}"
        )));
    }
    check_dims(d1, d2, 2)?;
    let mut amps = vec![Complex64::new(0.0, 0.0); d1 * d2];
    amps[0] = Complex64::new(p1_sq.sqrt(), 0.0);
    amps[d2 + 1] = Complex64::new((1.0 - p1_sq).sqrt(), 0.0);
    StateVector::new(d1, d2, amps).map_err(|e| CliError::invalid("hardy state", e))
}

pub fn generate(spec: StateSpec) -> Result<StateFile, CliError> {
    match spec {
        StateSpec::Hardy { p1_sq, d1, d2 } => {
            Ok(StateFile::from_pure(&hardy_vector(p1_sq, d1, d2)?))
        }
        StateSpec::Bell { d1, d2 } => {
            check_dims(d1, d2, 2)?;
            let r = d1.min(d2);
            let w = Complex64::new(1.0 / (r as f64).sqrt(), 0.0);
            let mut amps = vec![Complex64::new(0.0, 0.0); d1 * d2];
            for i in 0..r {
                amps[i * d2 + i] = w;
            }
            let psi =
                StateVector::new(d1, d2, amps).map_err(|e| CliError::invalid("bell state", e))?;
            Ok(StateFile::from_pure(&psi))
        }
        StateSpec::Product { d1, d2 } => {
            check_dims(d1, d2, 1)?;
            let mut amps = vec![Complex64::new(0.0, 0.0); d1 * d2];
            amps[0] = Complex64::new(1.0, 0.0);
            let psi = StateVector::new(d1, d2, amps)
                .map_err(|e| CliError::invalid("product state", e))?;
            Ok(StateFile::from_pure(&psi))
        }
        StateSpec::WhiteNoiseMix { p1_sq, p, d1, d2 } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(CliError::Format(format!(
                    "mixing weight p must lie in [0, 1], got {p}"
                )));
            }
            let psi = hardy_vector(p1_sq, d1, d2)?;
            let rho = psi
                .to_density()
                .mix(p, &DensityOperator::maximally_mixed(d1, d2))
                .map_err(|e| CliError::invalid("white-noise mixture", e))?;
            Ok(StateFile::from_mixed(&rho))
        }
    }
}
