//! Validated bipartite pure and mixed states.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::eigen::hermitian_eig;
use crate::error::{Error, Result};
use crate::matrix::{vec_norm, ComplexMatrix};

/// Tolerance used by the constructors that do not take one explicitly.
pub const STATE_TOL: f64 = 1e-9;

/// Unit vector in `C^d1 ⊗ C^d2`, amplitudes indexed as `i * d2 + k`.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    d1: usize,
    d2: usize,
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    pub fn new(d1: usize, d2: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        check_dims(d1, d2, amplitudes.len())?;
        if amplitudes
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NonFinite);
        }
        let norm = vec_norm(&amplitudes);
        if (norm - 1.0).abs() > STATE_TOL {
            return Err(Error::NotNormalized { norm });
        }
        Ok(Self { d1, d2, amplitudes })
    }

    /// Rescales a nonzero vector to unit norm.
    pub fn normalized(d1: usize, d2: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        check_dims(d1, d2, amplitudes.len())?;
        let norm = vec_norm(&amplitudes);
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(Error::NotNormalized { norm });
        }
        Self::new(d1, d2, amplitudes.into_iter().map(|z| z / norm).collect())
    }

    pub fn d1(&self) -> usize {
        self.d1
    }

    pub fn d2(&self) -> usize {
        self.d2
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.d1, self.d2)
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    /// `d1 × d2` coefficient matrix `C` with `ψ = Σ C_ik |i⟩|k⟩`.
    pub fn coefficient_matrix(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.d1, self.d2, |i, k| self.amplitudes[i * self.d2 + k])
    }

    pub fn projector(&self) -> ComplexMatrix {
        ComplexMatrix::projector(&self.amplitudes)
    }

    pub fn to_density(&self) -> DensityOperator {
        DensityOperator {
            d1: self.d1,
            d2: self.d2,
            matrix: self.projector(),
        }
    }

    /// Multiplies every amplitude by `e^{iφ}`.
    pub fn with_global_phase(&self, phi: f64) -> Self {
        let w = Complex64::from_polar(1.0, phi);
        Self {
            d1: self.d1,
            d2: self.d2,
            amplitudes: self.amplitudes.iter().map(|z| z * w).collect(),
        }
    }

    /// `|⟨self|other⟩|²`.
    pub fn fidelity(&self, other: &Self) -> f64 {
        crate::matrix::inner(&self.amplitudes, &other.amplitudes).norm_sqr()
    }
}

/// Positive semidefinite, unit-trace operator on `C^d1 ⊗ C^d2`.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityOperator {
    d1: usize,
    d2: usize,
    matrix: ComplexMatrix,
}

impl DensityOperator {
    pub fn d1(&self) -> usize {
        self.d1
    }

    pub fn d2(&self) -> usize {
        self.d2
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.d1, self.d2)
    }

    pub fn dim(&self) -> usize {
        self.d1 * self.d2
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    /// `I / (d1·d2)`.
    pub fn maximally_mixed(d1: usize, d2: usize) -> Self {
        let n = d1 * d2;
        Self {
            d1,
            d2,
            matrix: ComplexMatrix::identity(n).scale_real(1.0 / n as f64),
        }
    }

    /// `p·self + (1-p)·other`, for `p ∈ [0, 1]`.
    pub fn mix(&self, p: f64, other: &Self) -> Result<Self> {
        if self.dims() != other.dims() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidParameter("mixing weight must lie in [0, 1]"));
        }
        let matrix = &self.matrix.scale_real(p) + &other.matrix.scale_real(1.0 - p);
        Ok(Self {
            d1: self.d1,
            d2: self.d2,
            matrix,
        })
    }

    /// Convex combination `Σ w_k ρ_k` of states with matching dimensions.
    /// Weights must be nonnegative and sum to 1 within the state tolerance.
    pub fn convex_combination(parts: &[(f64, Self)]) -> Result<Self> {
        let (_, first) = parts
            .first()
            .ok_or(Error::InvalidParameter("empty mixture"))?;
        let total: f64 = parts.iter().map(|(w, _)| w).sum();
        if parts.iter().any(|(w, _)| *w < 0.0) || (total - 1.0).abs() > STATE_TOL {
            return Err(Error::InvalidParameter(
                "mixture weights must be a probability vector",
            ));
        }
        let mut matrix = ComplexMatrix::zeros(first.dim(), first.dim());
        for (w, rho) in parts {
            if rho.dims() != first.dims() {
                return Err(Error::DimensionMismatch {
                    expected: first.dim(),
                    found: rho.dim(),
                });
            }
            matrix = &matrix + &rho.matrix.scale_real(*w);
        }
        Ok(Self {
            d1: first.d1,
            d2: first.d2,
            matrix,
        })
    }

    /// `Tr[P σ]` for an operator `P` on the full space.
    pub fn expectation(&self, op: &ComplexMatrix) -> Result<f64> {
        Ok(op.trace_product(&self.matrix)?.re)
    }
}

/// Checks hermiticity, unit trace and positivity within `tol`.
///
/// Eigenvalues in `[-tol, 0)` are clipped to zero and the result
/// renormalized to unit trace.
pub fn validate_density(
    matrix: ComplexMatrix,
    d1: usize,
    d2: usize,
    tol: f64,
) -> Result<DensityOperator> {
    let n = d1 * d2;
    if d1 == 0 || d2 == 0 {
        return Err(Error::InvalidParameter(
            "subsystem dimensions must be positive",
        ));
    }
    if !matrix.is_square() {
        return Err(Error::NonSquare {
            rows: matrix.rows(),
            cols: matrix.cols(),
        });
    }
    if matrix.rows() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: matrix.rows(),
        });
    }
    let eig = hermitian_eig(&matrix, tol)?;
    let trace: f64 = eig.eigenvalues.iter().sum();
    if (trace - 1.0).abs() > tol {
        return Err(Error::NotUnitTrace { trace });
    }
    let min_eigenvalue = eig.eigenvalues.first().copied().unwrap_or(0.0);
    if min_eigenvalue < -tol {
        return Err(Error::NotPositive {
            min_eigenvalue,
            tol,
        });
    }
    let matrix = if min_eigenvalue < 0.0 {
        let clipped: f64 = eig.eigenvalues.iter().map(|l| l.max(0.0)).sum();
        eig.reconstruct_with(|l| l.max(0.0) / clipped)
    } else {
        matrix.hermitian_part()
    };
    Ok(DensityOperator { d1, d2, matrix })
}

fn check_dims(d1: usize, d2: usize, len: usize) -> Result<()> {
    if d1 == 0 || d2 == 0 {
        return Err(Error::InvalidParameter(
            "subsystem dimensions must be positive",
        ));
    }
    if len != d1 * d2 {
        return Err(Error::DimensionMismatch {
            expected: d1 * d2,
            found: len,
        });
    }
    Ok(())
}
