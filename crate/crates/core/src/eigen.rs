//! Hermitian eigendecomposition by cyclic complex Jacobi rotations.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

const MAX_SWEEPS: usize = 100;

/// Spectrum of a Hermitian matrix.
///
/// `eigenvalues` are ascending; column `k` of `eigenvectors` is the unit
/// eigenvector for `eigenvalues[k]`, rotated so that its largest-magnitude
/// component is real and positive.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenSystem {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
}

impl EigenSystem {
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn vector(&self, k: usize) -> Vec<Complex64> {
        self.eigenvectors.col(k)
    }

    /// `Σ_k f(λ_k) v_k v_k†`.
    pub fn reconstruct_with(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let n = self.eigenvectors.rows();
        let mut out = ComplexMatrix::zeros(n, n);
        for (k, &lambda) in self.eigenvalues.iter().enumerate() {
            let w = f(lambda);
            if w == 0.0 {
                continue;
            }
            for i in 0..n {
                let vi = self.eigenvectors[(i, k)] * w;
                for j in 0..n {
                    out[(i, j)] += vi * self.eigenvectors[(j, k)].conj();
                }
            }
        }
        out
    }

    pub fn reconstruct(&self) -> ComplexMatrix {
        self.reconstruct_with(|x| x)
    }
}

/// Full eigendecomposition of a Hermitian matrix.
///
/// The input is symmetrized as `(M + M†)/2` after the hermiticity check, so
/// deviations up to `hermiticity_tol` are absorbed rather than propagated.
pub fn hermitian_eig(m: &ComplexMatrix, hermiticity_tol: f64) -> Result<EigenSystem> {
    if !m.is_square() {
        return Err(Error::NonSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let deviation = m.hermitian_deviation();
    if deviation.is_nan() || deviation > hermiticity_tol {
        return Err(Error::NonHermitian {
            deviation,
            tol: hermiticity_tol,
        });
    }
    let n = m.rows();
    let mut a = m.hermitian_part();
    let mut v = ComplexMatrix::identity(n);

    let scale = frobenius(&a);
    let tiny = f64::EPSILON * 1e-3 * scale;
    if scale > 0.0 {
        for _ in 0..MAX_SWEEPS {
            if off_diagonal(&a) <= tiny {
                break;
            }
            let mut rotated = false;
            for p in 0..n {
                for q in (p + 1)..n {
                    if a[(p, q)].norm() > tiny / n as f64 {
                        rotate(&mut a, &mut v, p, q);
                        rotated = true;
                    }
                }
            }
            if !rotated {
                break;
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let eigenvalues = order.iter().map(|&k| a[(k, k)].re).collect();
    let mut eigenvectors = ComplexMatrix::from_fn(n, n, |i, j| v[(i, order[j])]);
    for k in 0..n {
        fix_phase(&mut eigenvectors, k);
    }
    Ok(EigenSystem {
        eigenvalues,
        eigenvectors,
    })
}

/// Trace norm `Tr|M| = Σ |λ_k|` of a Hermitian matrix.
pub fn trace_norm(m: &ComplexMatrix) -> Result<f64> {
    let eig = hermitian_eig(m, 1e-9)?;
    Ok(eig.eigenvalues.iter().map(|l| l.abs()).sum())
}

fn frobenius(a: &ComplexMatrix) -> f64 {
    libm::sqrt(a.as_slice().iter().map(|z| z.norm_sqr()).sum())
}

fn off_diagonal(a: &ComplexMatrix) -> f64 {
    let n = a.rows();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    libm::sqrt(s)
}

/// Applies `A ← J† A J`, `V ← V J` with the unitary `J` that annihilates
/// `a_pq`. With `a_pq = r e^{iφ}`, `J` restricted to (p, q) is
/// `[[c, s e^{iφ}], [-s e^{-iφ}, c]]`.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let g = a[(p, q)];
    let r = g.norm();
    if r == 0.0 {
        return;
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let phase = g / r;
    let theta = (aqq - app) / (2.0 * r);
    let t = if theta >= 0.0 {
        1.0 / (theta + libm::sqrt(theta * theta + 1.0))
    } else {
        -1.0 / (-theta + libm::sqrt(theta * theta + 1.0))
    };
    let c = 1.0 / libm::sqrt(t * t + 1.0);
    let s = t * c;
    let se = phase * s;
    let n = a.rows();

    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * c - akq * se.conj();
        a[(k, q)] = akp * se + akq * c;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = apk * c - aqk * se;
        a[(q, k)] = apk * se.conj() + aqk * c;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)] = Complex64::new(app - t * r, 0.0);
    a[(q, q)] = Complex64::new(aqq + t * r, 0.0);

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * c - vkq * se.conj();
        v[(k, q)] = vkp * se + vkq * c;
    }
}

fn fix_phase(v: &mut ComplexMatrix, k: usize) {
    let n = v.rows();
    let mut best = 0;
    let mut best_mag = -1.0;
    for i in 0..n {
        let mag = v[(i, k)].norm();
        // Earliest index wins among (near-)ties so the choice is stable.
        if mag > best_mag * (1.0 + 1e-12) {
            best = i;
            best_mag = mag;
        }
    }
    if best_mag <= 0.0 {
        return;
    }
    let rot = v[(best, k)].conj() / best_mag;
    for i in 0..n {
        v[(i, k)] *= rot;
    }
    v[(best, k)] = Complex64::new(v[(best, k)].norm(), 0.0);
}
