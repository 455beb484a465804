use std::path::{Path, PathBuf};

use hardy_core::{validate_density, Complex64, ComplexMatrix, DensityOperator, StateVector};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::CliError;

/// Validation tolerance for states read from disk.
pub const FILE_STATE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StateKind {
    Pure,
    Mixed,
}

/// On-disk state representation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateFile {
    pub kind: StateKind,
    pub dims: [usize; 2],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub amplitudes: Option<Vec<[f64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<[f64; 2]>>>,
}

/// A parsed and validated state.
#[derive(Debug, Clone, PartialEq)]
pub enum LoadedState {
    Pure(StateVector),
    Mixed(DensityOperator),
}

impl LoadedState {
    pub fn to_density(&self) -> DensityOperator {
        match self {
            Self::Pure(psi) => psi.to_density(),
            Self::Mixed(rho) => rho.clone(),
        }
    }

    pub fn dims(&self) -> (usize, usize) {
        match self {
            Self::Pure(psi) => psi.dims(),
            Self::Mixed(rho) => rho.dims(),
        }
    }
}

fn to_complex(pair: &[f64; 2]) -> Complex64 {
    Complex64::new(pair[0], pair[1])
}

fn to_pair(z: &Complex64) -> [f64; 2] {
    [z.re, z.im]
}

impl StateFile {
    pub fn from_pure(psi: &StateVector) -> Self {
        let (d1, d2) = psi.dims();
        Self {
            kind: StateKind::Pure,
            dims: [d1, d2],
            amplitudes: Some(psi.amplitudes().iter().map(to_pair).collect()),
            matrix: None,
        }
    }

    pub fn from_mixed(rho: &DensityOperator) -> Self {
        let (d1, d2) = rho.dims();
        let m = rho.matrix();
        let matrix = (0..m.rows())
            .map(|i| (0..m.cols()).map(|j| to_pair(&m[(i, j)])).collect())
            .collect();
        Self {
            kind: StateKind::Mixed,
            dims: [d1, d2],
            amplitudes: None,
            matrix: Some(matrix),
        }
    }

    /// Checks shape and runs the state-type validation.
    pub fn validate(&self) -> Result<LoadedState, CliError> {
        let [d1, d2] = self.dims;
        if d1 == 0 || d2 == 0 {
            return Err(CliError::Format(format!(
                "dims must be positive, got [{d1}, {d2}]"
            )));
        }
        let n = d1 * d2;
        match self.kind {
            StateKind::Pure => {
                if self.matrix.is_some() {
                    return Err(CliError::Format(
                        "pure state must not carry a matrix".into(),
                    ));
                }
                let amps = self
                    .amplitudes
                    .as_ref()
                    .ok_or_else(|| CliError::Format("pure state needs amplitudes".into()))?;
                if amps.len() != n {
                    return Err(CliError::Format(format!(
                        "expected {n} amplitudes for dims [{d1}, {d2}], found {}",
                        amps.len()
                    )));
                }
                let psi = StateVector::new(d1, d2, amps.iter().map(to_complex).collect())
                    .map_err(|e| CliError::invalid("pure state", e))?;
                Ok(LoadedState::Pure(psi))
            }
            StateKind::Mixed => {
                if self.amplitudes.is_some() {
                    return Err(CliError::Format(
                        "mixed state must not carry amplitudes".into(),
                    ));
                }
                let rows = self
                    .matrix
                    .as_ref()
                    .ok_or_else(|| CliError::Format("mixed state needs a matrix".into()))?;
                if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                    return Err(CliError::Format(format!(
                        "matrix must be {n}x{n} for dims [{d1}, {d2}]"
                    )));
                }
                let data = rows.iter().flatten().map(to_complex).collect();
                let m =
                    ComplexMatrix::new(n, n, data).map_err(|e| CliError::invalid("matrix", e))?;
                let rho = validate_density(m, d1, d2, FILE_STATE_TOL)
                    .map_err(|e| CliError::invalid("mixed state", e))?;
                Ok(LoadedState::Mixed(rho))
            }
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("state files always serialize");
        s.push('\n');
        s
    }
}

/// A state file read from disk, with the SHA-256 of its bytes.
#[derive(Debug, Clone)]
pub struct StateInput {
    pub path: PathBuf,
    pub sha256: String,
    pub state: LoadedState,
}

pub fn parse_state(text: &str, path: &Path) -> Result<LoadedState, CliError> {
    let file: StateFile = serde_json::from_str(text).map_err(|source| CliError::Json {
        path: path.to_owned(),
        source,
    })?;
    file.validate().map_err(|e| match e {
        CliError::Invalid { context, source } => CliError::Invalid {
            context: format!("{}: {context}", path.display()),
            source,
        },
        CliError::Format(msg) => CliError::Format(format!("{}: {msg}", path.display())),
        other => other,
    })
}

pub fn read_state(path: &Path) -> Result<StateInput, CliError> {
    let bytes = std::fs::read(path).map_err(|source| CliError::Read {
        path: path.to_owned(),
        source,
    })?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| CliError::Format(format!("{}: not valid UTF-8", path.display())))?;
    let state = parse_state(&text, path)?;
    Ok(StateInput {
        path: path.to_owned(),
        sha256: hex::encode(Sha256::digest(&bytes)),
        state,
    })
}
