//! Random states and operators for property testing.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
use rand::Rng;

use crate::matrix::{inner, tensor_product, vec_norm, ComplexMatrix};
use crate::state::{DensityOperator, StateVector};

/// Standard complex Gaussian (independent N(0, ½) real and imaginary parts).
pub fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let u1: f64 = 1.0 - rng.random::<f64>();
    let u2: f64 = rng.random();
    let r = libm::sqrt(-libm::log(u1));
    Complex64::from_polar(r, 2.0 * PI * u2)
}

pub fn gaussian_matrix<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |_, _| gaussian(rng))
}

/// `A + A†` for Gaussian `A`.
pub fn random_hermitian<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    let a = gaussian_matrix(n, n, rng);
    &a + &a.adjoint()
}

/// Haar-random unit vector in `C^d1 ⊗ C^d2`.
pub fn random_state<R: Rng + ?Sized>(d1: usize, d2: usize, rng: &mut R) -> StateVector {
    let v: Vec<Complex64> = (0..d1 * d2).map(|_| gaussian(rng)).collect();
    StateVector::normalized(d1, d2, v).expect("Gaussian vector is nonzero")
}

/// Columns of a Haar-random `n × n` unitary, by Gram–Schmidt.
pub fn random_unitary<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    let mut cols: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    while cols.len() < n {
        let mut v: Vec<Complex64> = (0..n).map(|_| gaussian(rng)).collect();
        for _ in 0..2 {
            for c in &cols {
                let proj = inner(c, &v);
                for (x, y) in v.iter_mut().zip(c) {
                    *x -= proj * y;
                }
            }
        }
        let norm = vec_norm(&v);
        if norm > 1e-8 {
            cols.push(v.into_iter().map(|z| z / norm).collect());
        }
    }
    ComplexMatrix::from_fn(n, n, |i, j| cols[j][i])
}

/// Random density operator `G G† / Tr[G G†]` with `G` of shape `n × rank`.
pub fn random_density_matrix<R: Rng + ?Sized>(n: usize, rank: usize, rng: &mut R) -> ComplexMatrix {
    let g = gaussian_matrix(n, rank.max(1), rng);
    let m = &g * &g.adjoint();
    let tr = m.trace().re;
    m.scale_real(1.0 / tr)
}

pub fn random_density<R: Rng + ?Sized>(
    d1: usize,
    d2: usize,
    rank: usize,
    rng: &mut R,
) -> DensityOperator {
    let m = random_density_matrix(d1 * d2, rank, rng);
    crate::state::validate_density(m, d1, d2, 1e-9).expect("G G† is a valid state")
}

/// Convex mixture of `terms` random product states.
pub fn random_separable<R: Rng + ?Sized>(
    d1: usize,
    d2: usize,
    terms: usize,
    rng: &mut R,
) -> DensityOperator {
    let raw: Vec<f64> = (0..terms.max(1))
        .map(|_| rng.random::<f64>() + 1e-3)
        .collect();
    let total: f64 = raw.iter().sum();
    let mut m = ComplexMatrix::zeros(d1 * d2, d1 * d2);
    for w in raw {
        let r1 = random_density_matrix(d1, 1 + rng.random_range(0..d1), rng);
        let r2 = random_density_matrix(d2, 1 + rng.random_range(0..d2), rng);
        m = &m + &tensor_product(&r1, &r2).scale_real(w / total);
    }
    crate::state::validate_density(m, d1, d2, 1e-9).expect("mixture of product states is valid")
}

/// Random orthogonal projector of the given rank on `C^n`.
pub fn random_projector<R: Rng + ?Sized>(n: usize, rank: usize, rng: &mut R) -> ComplexMatrix {
    let u = random_unitary(n, rng);
    let mut p = ComplexMatrix::zeros(n, n);
    for k in 0..rank.min(n) {
        p = &p + &ComplexMatrix::projector(&u.col(k));
    }
    p
}

/// Random Schmidt weights (rank `r ≥ 2`) whose two largest differ by a
/// comfortable margin, sorted descending.
pub fn random_hardy_weights<R: Rng + ?Sized>(r: usize, rng: &mut R) -> Vec<f64> {
    loop {
        let raw: Vec<f64> = (0..r).map(|_| 0.05 + rng.random::<f64>()).collect();
        let total: f64 = raw.iter().map(|x| x * x).sum();
        let mut w: Vec<f64> = raw.iter().map(|x| x / libm::sqrt(total)).collect();
        w.sort_by(|a, b| b.total_cmp(a));
        if w[0] - w[1] > 0.02 {
            return w;
        }
    }
}

/// `Σ_i p_i U|i⟩ ⊗ W|i⟩` for Haar-random local unitaries `U`, `W`.
pub fn random_hardy_state<R: Rng + ?Sized>(
    d1: usize,
    d2: usize,
    rng: &mut R,
) -> (StateVector, Vec<f64>) {
    let r = d1.min(d2);
    assert!(r >= 2, "a Hardy state needs both dimensions at least 2");
    let rank = 2 + rng.random_range(0..=(r - 2));
    let weights = random_hardy_weights(rank, rng);
    let u = random_unitary(d1, rng);
    let w = random_unitary(d2, rng);
    let mut amps = alloc::vec![Complex64::new(0.0, 0.0); d1 * d2];
    for (t, &p) in weights.iter().enumerate() {
        for i in 0..d1 {
            for k in 0..d2 {
                amps[i * d2 + k] += u[(i, t)] * w[(k, t)] * p;
            }
        }
    }
    (
        StateVector::normalized(d1, d2, amps).expect("nonzero"),
        weights,
    )
}
