//! Schmidt decomposition of bipartite pure states and Hardy-pair selection.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::eigen::hermitian_eig;
use crate::matrix::{vec_norm, ComplexMatrix};
use crate::observables::hardy_parameter_a;
use crate::state::StateVector;

/// Default weight-distinctness threshold for [`find_hardy_pair`].
pub const DEFAULT_DELTA: f64 = 1e-8;

// Reduced-state eigenvalues at or below this are treated as absent terms.
const RANK_CUTOFF: f64 = 1e-13;

/// `ψ = Σ_i p_i |α_i⟩ ⊗ |β_i⟩` with weights in descending order.
///
/// Column `i` of `left_basis` is `|α_i⟩` (length `d1`), column `i` of
/// `right_basis` is `|β_i⟩` (length `d2`).
#[derive(Debug, Clone, PartialEq)]
pub struct SchmidtForm {
    pub d1: usize,
    pub d2: usize,
    pub weights: Vec<f64>,
    pub left_basis: ComplexMatrix,
    pub right_basis: ComplexMatrix,
}

impl SchmidtForm {
    pub fn rank(&self) -> usize {
        self.weights.len()
    }

    pub fn left(&self, i: usize) -> Vec<Complex64> {
        self.left_basis.col(i)
    }

    pub fn right(&self, i: usize) -> Vec<Complex64> {
        self.right_basis.col(i)
    }

    /// Amplitudes of `Σ_i p_i |α_i⟩ ⊗ |β_i⟩`.
    pub fn reconstruct(&self) -> Vec<Complex64> {
        let mut out = alloc::vec![Complex64::new(0.0, 0.0); self.d1 * self.d2];
        for (t, &p) in self.weights.iter().enumerate() {
            for i in 0..self.d1 {
                let a = self.left_basis[(i, t)] * p;
                for k in 0..self.d2 {
                    out[i * self.d2 + k] += a * self.right_basis[(k, t)];
                }
            }
        }
        out
    }
}

/// Decomposes `psi` via the spectrum of its first-subsystem reduced state.
///
/// The left vectors are eigenvectors of `C C†` (`C` the coefficient matrix);
/// each right vector is recovered as `Cᵀ ᾱ_i / p_i`.
pub fn schmidt_decompose(psi: &StateVector) -> SchmidtForm {
    let (d1, d2) = psi.dims();
    let c = psi.coefficient_matrix();
    let reduced = &c * &c.adjoint();
    let eig = hermitian_eig(&reduced, f64::INFINITY).expect("C C† is square and Hermitian");

    let mut terms: Vec<(f64, Vec<Complex64>, Vec<Complex64>)> = Vec::new();
    for k in (0..d1).rev() {
        if eig.eigenvalues[k] <= RANK_CUTOFF {
            continue;
        }
        let alpha = eig.vector(k);
        let image: Vec<Complex64> = (0..d2)
            .map(|col| (0..d1).map(|row| alpha[row].conj() * c[(row, col)]).sum())
            .collect();
        let p = vec_norm(&image);
        let beta = image.into_iter().map(|z| z / p).collect();
        terms.push((p, alpha, beta));
    }
    terms.sort_by(|a, b| b.0.total_cmp(&a.0));

    let r = terms.len();
    let left_basis = ComplexMatrix::from_fn(d1, r, |i, t| terms[t].1[i]);
    let right_basis = ComplexMatrix::from_fn(d2, r, |k, t| terms[t].2[k]);
    SchmidtForm {
        d1,
        d2,
        weights: terms.into_iter().map(|t| t.0).collect(),
        left_basis,
        right_basis,
    }
}

/// Two distinct Schmidt weights of a candidate and its Hardy parameter.
///
/// `p1 < p2`; `index_small`/`index_large` point into the source
/// [`SchmidtForm`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HardyPair {
    pub index_small: usize,
    pub index_large: usize,
    pub p1: f64,
    pub p2: f64,
    pub a: f64,
}

/// Picks the weight pair with the largest Hardy parameter among pairs that
/// differ by more than `delta` and are both above `delta`. `None` means the
/// state is not a Hardy state at this resolution.
pub fn find_hardy_pair(sf: &SchmidtForm, delta: f64) -> Option<HardyPair> {
    let w = &sf.weights;
    let mut best: Option<HardyPair> = None;
    for i in 0..w.len() {
        for j in (i + 1)..w.len() {
            let (hi, lo) = if w[i] >= w[j] { (i, j) } else { (j, i) };
            let (p1, p2) = (w[lo], w[hi]);
            if p1 <= delta || p2 - p1 <= delta {
                continue;
            }
            let a = hardy_parameter_a(p1, p2).expect("weights above delta are positive");
            if best.is_none_or(|b| a > b.a) {
                best = Some(HardyPair {
                    index_small: lo,
                    index_large: hi,
                    p1,
                    p2,
                    a,
                });
            }
        }
    }
    best
}
