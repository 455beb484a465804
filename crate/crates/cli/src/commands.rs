//! Command implementations. Each returns the report document; printing and
//! exit codes are left to the binary.

use std::path::Path;

use hardy_core::certify::candidate_with_gap;
use hardy_core::{
    behavior_from_state, build_bases, build_observables, certify, find_hardy_pair, lhv_feasible,
    noise_threshold, schmidt_decompose, StateVector,
};

use crate::error::CliError;
use crate::generate::{generate, StateSpec};
use crate::report::{CandidateInfo, CertifyReport, InputDigest, LhvReport, NoiseReport};
use crate::statefile::{read_state, LoadedState, StateFile, StateInput};

fn pure_of(input: &StateInput, role: &str) -> Result<StateVector, CliError> {
    match &input.state {
        LoadedState::Pure(psi) => Ok(psi.clone()),
        LoadedState::Mixed(_) => Err(CliError::Format(format!(
            "{}: {role} must be a pure state",
            input.path.display()
        ))),
    }
}

/// Reads the optional candidate file, falling back to the top eigenvector
/// of the state.
fn resolve_candidate(
    state: &StateInput,
    candidate: Option<&Path>,
    inputs: &mut Vec<InputDigest>,
) -> Result<(StateVector, CandidateInfo), CliError> {
    match candidate {
        Some(path) => {
            let input = read_state(path)?;
            inputs.push(InputDigest::new("candidate", &input));
            Ok((pure_of(&input, "candidate")?, CandidateInfo::File))
        }
        None => {
            let choice = candidate_with_gap(&state.state.to_density());
            let info = CandidateInfo::TopEigenvector {
                eigenvalue: choice.eigenvalue,
                degeneracy_gap: choice.gap,
            };
            Ok((choice.state, info))
        }
    }
}

pub fn cmd_certify(
    state_path: &Path,
    candidate_path: Option<&Path>,
    delta: f64,
) -> Result<CertifyReport, CliError> {
    let state = read_state(state_path)?;
    let mut inputs = vec![InputDigest::new("state", &state)];
    let (candidate, info) = resolve_candidate(&state, candidate_path, &mut inputs)?;
    let report = certify(&state.state.to_density(), &candidate, delta)
        .map_err(|e| CliError::invalid("certify", e))?;
    Ok(CertifyReport::new(inputs, delta, info, &report))
}

pub fn cmd_noise_threshold(
    psi_path: &Path,
    noise_path: &Path,
    delta: f64,
) -> Result<NoiseReport, CliError> {
    let psi_in = read_state(psi_path)?;
    let noise_in = read_state(noise_path)?;
    let psi = pure_of(&psi_in, "Hardy state")?;
    let report = noise_threshold(&psi, &noise_in.state.to_density(), delta)
        .map_err(|e| CliError::invalid(psi_path.display().to_string(), e))?;
    let inputs = vec![
        InputDigest::new("state", &psi_in),
        InputDigest::new("noise", &noise_in),
    ];
    Ok(NoiseReport::new(inputs, delta, &report))
}

pub fn cmd_lhv_check(
    state_path: &Path,
    candidate_path: Option<&Path>,
    delta: f64,
    tol: f64,
) -> Result<LhvReport, CliError> {
    let state = read_state(state_path)?;
    let mut inputs = vec![InputDigest::new("state", &state)];
    let (candidate, _) = resolve_candidate(&state, candidate_path, &mut inputs)?;
    let sigma = state.state.to_density();
    let sf = schmidt_decompose(&candidate);
    let pair = find_hardy_pair(&sf, delta)
        .ok_or_else(|| CliError::invalid("candidate", hardy_core::Error::NotHardy))?;
    let (d1, d2) = candidate.dims();
    let obs = build_bases(&sf, &pair)
        .and_then(|b| build_observables(&b, d1, d2))
        .map_err(|e| CliError::invalid("observables", e))?;
    let behavior =
        behavior_from_state(&sigma, &obs).map_err(|e| CliError::invalid("behavior", e))?;
    let lhv = lhv_feasible(&behavior, tol).map_err(|e| CliError::invalid("lhv-check", e))?;
    let cert = certify(&sigma, &candidate, delta).map_err(|e| CliError::invalid("certify", e))?;
    Ok(LhvReport::new(inputs, delta, tol, &lhv, &cert))
}

pub fn cmd_gen_state(spec: StateSpec) -> Result<StateFile, CliError> {
    generate(spec)
}
