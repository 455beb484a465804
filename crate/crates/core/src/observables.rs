//! The Hardy measurement construction: rotations `U`, `V`, the local bases
//! they generate inside the selected Schmidt pair, the four three-outcome
//! observables, and the joint probabilities that define the paradox.

use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{vec_norm, ComplexMatrix};
use crate::schmidt::{HardyPair, SchmidtForm};
use crate::state::DensityOperator;

const PROB_CLIP: f64 = 1e-12;

/// The Hardy parameter `p1² p2² (p1 − p2)² / (p1² + p2² − p1 p2)²`.
///
/// This is the one nonzero probability `P(Y1=+1, Y2=+1)` of the pure Hardy
/// state; it vanishes exactly when `p1 = p2`.
pub fn hardy_parameter_a(p1: f64, p2: f64) -> Result<f64> {
    check_weight(p1)?;
    check_weight(p2)?;
    let d = p1 * p1 + p2 * p2 - p1 * p2;
    let num = p1 * p2 * (p1 - p2);
    Ok(num * num / (d * d))
}

fn check_weight(p: f64) -> Result<()> {
    if p > 0.0 && p.is_finite() {
        Ok(())
    } else {
        Err(Error::NonPositiveWeight { weight: p })
    }
}

/// The two 2×2 unitaries acting on the coordinates of the selected Schmidt
/// pair.
#[derive(Debug, Clone, PartialEq)]
pub struct RotationPair {
    pub u: ComplexMatrix,
    pub v: ComplexMatrix,
}

/// `U = (p1+p2)^{-1/2} [[√p2, −i√p1], [−i√p1, √p2]]` and
/// `V = (p1²+p2²−p1p2)^{-1/2} [[−i(p2−p1), √(p1p2)], [√(p1p2), −i(p2−p1)]]`.
pub fn build_rotations(p1: f64, p2: f64) -> Result<RotationPair> {
    check_weight(p1)?;
    check_weight(p2)?;
    let nu = 1.0 / libm::sqrt(p1 + p2);
    let diag_u = Complex64::new(libm::sqrt(p2) * nu, 0.0);
    let off_u = Complex64::new(0.0, -libm::sqrt(p1) * nu);
    let nv = 1.0 / libm::sqrt(p1 * p1 + p2 * p2 - p1 * p2);
    let diag_v = Complex64::new(0.0, -(p2 - p1) * nv);
    let off_v = Complex64::new(libm::sqrt(p1 * p2) * nv, 0.0);
    let u = ComplexMatrix::new(2, 2, alloc::vec![diag_u, off_u, off_u, diag_u])?;
    let v = ComplexMatrix::new(2, 2, alloc::vec![diag_v, off_v, off_v, diag_v])?;
    Ok(RotationPair { u, v })
}

/// Local measurement vectors. Subscript `_1` vectors live in `C^d1`, `_2`
/// vectors in `C^d2`.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementBases {
    pub x_plus_1: Vec<Complex64>,
    pub x_minus_1: Vec<Complex64>,
    pub y_plus_1: Vec<Complex64>,
    pub y_minus_1: Vec<Complex64>,
    pub x_plus_2: Vec<Complex64>,
    pub x_minus_2: Vec<Complex64>,
    pub y_plus_2: Vec<Complex64>,
    pub y_minus_2: Vec<Complex64>,
}

/// Builds the x- and y-bases inside `span{α_s, α_l}` and `span{β_s, β_l}`,
/// where `s` carries the smaller weight `p1` and `l` the larger `p2`:
/// `(x₊, x₋) = U (e_s, e_l)` and `(y₊, y₋) = VU (e_s, e_l)`.
pub fn build_bases(sf: &SchmidtForm, pair: &HardyPair) -> Result<MeasurementBases> {
    let rot = build_rotations(pair.p1, pair.p2)?;
    let vu = &rot.v * &rot.u;
    let a_s = sf.left(pair.index_small);
    let a_l = sf.left(pair.index_large);
    let b_s = sf.right(pair.index_small);
    let b_l = sf.right(pair.index_large);
    let row = |m: &ComplexMatrix, r: usize, e1: &[Complex64], e2: &[Complex64]| -> Vec<Complex64> {
        e1.iter()
            .zip(e2)
            .map(|(a, b)| m[(r, 0)] * a + m[(r, 1)] * b)
            .collect()
    };
    Ok(MeasurementBases {
        x_plus_1: row(&rot.u, 0, &a_s, &a_l),
        x_minus_1: row(&rot.u, 1, &a_s, &a_l),
        y_plus_1: row(&vu, 0, &a_s, &a_l),
        y_minus_1: row(&vu, 1, &a_s, &a_l),
        x_plus_2: row(&rot.u, 0, &b_s, &b_l),
        x_minus_2: row(&rot.u, 1, &b_s, &b_l),
        y_plus_2: row(&vu, 0, &b_s, &b_l),
        y_minus_2: row(&vu, 1, &b_s, &b_l),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ObservableLabel {
    X1,
    Y1,
    X2,
    Y2,
}

impl ObservableLabel {
    pub fn subsystem(self) -> u8 {
        match self {
            Self::X1 | Self::Y1 => 1,
            Self::X2 | Self::Y2 => 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::X1 => "X1",
            Self::Y1 => "Y1",
            Self::X2 => "X2",
            Self::Y2 => "Y2",
        }
    }
}

impl fmt::Display for ObservableLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Measurement outcome of a Hardy observable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Outcome {
    Plus,
    Zero,
    Minus,
}

impl Outcome {
    /// Outcomes in table order `+1, 0, −1`.
    pub const ALL: [Outcome; 3] = [Outcome::Plus, Outcome::Zero, Outcome::Minus];

    pub fn value(self) -> i8 {
        match self {
            Self::Plus => 1,
            Self::Zero => 0,
            Self::Minus => -1,
        }
    }

    pub fn index(self) -> usize {
        match self {
            Self::Plus => 0,
            Self::Zero => 1,
            Self::Minus => 2,
        }
    }

    pub fn from_value(v: i8) -> Option<Self> {
        match v {
            1 => Some(Self::Plus),
            0 => Some(Self::Zero),
            -1 => Some(Self::Minus),
            _ => None,
        }
    }
}

/// Three-outcome local observable with eigenvalues `+1`, `−1` on two rank-one
/// projectors and `0` on their orthogonal complement.
#[derive(Debug, Clone, PartialEq)]
pub struct Observable {
    pub label: ObservableLabel,
    pub subsystem: u8,
    pub proj_plus: ComplexMatrix,
    pub proj_minus: ComplexMatrix,
    pub proj_zero: ComplexMatrix,
}

impl Observable {
    fn from_vectors(label: ObservableLabel, plus: &[Complex64], minus: &[Complex64]) -> Self {
        let d = plus.len();
        let proj_plus = ComplexMatrix::projector(plus);
        let proj_minus = ComplexMatrix::projector(minus);
        let proj_zero = &(&ComplexMatrix::identity(d) - &proj_plus) - &proj_minus;
        Self {
            label,
            subsystem: label.subsystem(),
            proj_plus,
            proj_minus,
            proj_zero,
        }
    }

    pub fn dim(&self) -> usize {
        self.proj_plus.rows()
    }

    pub fn projector(&self, outcome: Outcome) -> &ComplexMatrix {
        match outcome {
            Outcome::Plus => &self.proj_plus,
            Outcome::Zero => &self.proj_zero,
            Outcome::Minus => &self.proj_minus,
        }
    }

    /// `P₊ − P₋`.
    pub fn operator(&self) -> ComplexMatrix {
        &self.proj_plus - &self.proj_minus
    }
}

/// `X1`, `Y1` on the first subsystem and `X2`, `Y2` on the second.
#[derive(Debug, Clone, PartialEq)]
pub struct HardyObservableSet {
    pub x1: Observable,
    pub y1: Observable,
    pub x2: Observable,
    pub y2: Observable,
}

impl HardyObservableSet {
    pub fn get(&self, label: ObservableLabel) -> &Observable {
        match label {
            ObservableLabel::X1 => &self.x1,
            ObservableLabel::Y1 => &self.y1,
            ObservableLabel::X2 => &self.x2,
            ObservableLabel::Y2 => &self.y2,
        }
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.x1.dim(), self.x2.dim())
    }
}

pub fn build_observables(
    bases: &MeasurementBases,
    d1: usize,
    d2: usize,
) -> Result<HardyObservableSet> {
    for v in [
        &bases.x_plus_1,
        &bases.x_minus_1,
        &bases.y_plus_1,
        &bases.y_minus_1,
    ] {
        if v.len() != d1 {
            return Err(Error::DimensionMismatch {
                expected: d1,
                found: v.len(),
            });
        }
    }
    for v in [
        &bases.x_plus_2,
        &bases.x_minus_2,
        &bases.y_plus_2,
        &bases.y_minus_2,
    ] {
        if v.len() != d2 {
            return Err(Error::DimensionMismatch {
                expected: d2,
                found: v.len(),
            });
        }
    }
    debug_assert!((vec_norm(&bases.x_plus_1) - 1.0).abs() < 1e-9);
    Ok(HardyObservableSet {
        x1: Observable::from_vectors(ObservableLabel::X1, &bases.x_plus_1, &bases.x_minus_1),
        y1: Observable::from_vectors(ObservableLabel::Y1, &bases.y_plus_1, &bases.y_minus_1),
        x2: Observable::from_vectors(ObservableLabel::X2, &bases.x_plus_2, &bases.x_minus_2),
        y2: Observable::from_vectors(ObservableLabel::Y2, &bases.y_plus_2, &bases.y_minus_2),
    })
}

/// `Tr[(P_a ⊗ P_b) σ]` for `obs_a` on subsystem 1 and `obs_b` on subsystem 2.
pub fn joint_probability(
    sigma: &DensityOperator,
    obs_a: &Observable,
    a: Outcome,
    obs_b: &Observable,
    b: Outcome,
) -> Result<f64> {
    if obs_a.subsystem != 1 {
        return Err(Error::SubsystemMismatch {
            expected: 1,
            found: obs_a.subsystem,
        });
    }
    if obs_b.subsystem != 2 {
        return Err(Error::SubsystemMismatch {
            expected: 2,
            found: obs_b.subsystem,
        });
    }
    let (d1, d2) = sigma.dims();
    if obs_a.dim() != d1 {
        return Err(Error::DimensionMismatch {
            expected: d1,
            found: obs_a.dim(),
        });
    }
    if obs_b.dim() != d2 {
        return Err(Error::DimensionMismatch {
            expected: d2,
            found: obs_b.dim(),
        });
    }
    let pa = obs_a.projector(a);
    let pb = obs_b.projector(b);
    let s = sigma.matrix();
    // Σ (P_a)_{ij} (P_b)_{kl} σ_{(j,l),(i,k)}
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..d1 {
        for j in 0..d1 {
            let pij = pa[(i, j)];
            if pij == Complex64::new(0.0, 0.0) {
                continue;
            }
            for k in 0..d2 {
                for l in 0..d2 {
                    acc += pij * pb[(k, l)] * s[(j * d2 + l, i * d2 + k)];
                }
            }
        }
    }
    Ok(clip_probability(acc.re))
}

fn clip_probability(p: f64) -> f64 {
    debug_assert!(
        p > -1e-9 && p < 1.0 + 1e-9,
        "probability {p} far outside [0, 1]"
    );
    if (-PROB_CLIP..0.0).contains(&p) {
        0.0
    } else if p > 1.0 && p <= 1.0 + PROB_CLIP {
        1.0
    } else {
        p
    }
}

/// The six Hardy probabilities, in order:
/// `P(X1=+1,X2=+1)`, `P(Y1=+1,X2=−1)`, `P(X1=−1,Y2=+1)`, `P(Y1=+1,X2=0)`,
/// `P(X1=0,Y2=+1)`, `P(Y1=+1,Y2=+1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HardyProbabilityTable {
    pub entries: [f64; 6],
}

impl HardyProbabilityTable {
    /// Setting/outcome pattern for each entry.
    pub const PATTERNS: [(ObservableLabel, Outcome, ObservableLabel, Outcome); 6] = [
        (
            ObservableLabel::X1,
            Outcome::Plus,
            ObservableLabel::X2,
            Outcome::Plus,
        ),
        (
            ObservableLabel::Y1,
            Outcome::Plus,
            ObservableLabel::X2,
            Outcome::Minus,
        ),
        (
            ObservableLabel::X1,
            Outcome::Minus,
            ObservableLabel::Y2,
            Outcome::Plus,
        ),
        (
            ObservableLabel::Y1,
            Outcome::Plus,
            ObservableLabel::X2,
            Outcome::Zero,
        ),
        (
            ObservableLabel::X1,
            Outcome::Zero,
            ObservableLabel::Y2,
            Outcome::Plus,
        ),
        (
            ObservableLabel::Y1,
            Outcome::Plus,
            ObservableLabel::Y2,
            Outcome::Plus,
        ),
    ];

    /// Table of an ideal pure Hardy state: five zeros, then `a`.
    pub fn ideal(a: f64) -> Self {
        Self {
            entries: [0.0, 0.0, 0.0, 0.0, 0.0, a],
        }
    }

    /// Largest entrywise deviation from [`HardyProbabilityTable::ideal`].
    pub fn deviation_from_ideal(&self, a: f64) -> f64 {
        let ideal = Self::ideal(a);
        self.entries
            .iter()
            .zip(ideal.entries)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    }

    pub fn zero_conditions(&self) -> &[f64] {
        &self.entries[..5]
    }

    pub fn hardy_entry(&self) -> f64 {
        self.entries[5]
    }
}

pub fn hardy_probability_table(
    sigma: &DensityOperator,
    obs: &HardyObservableSet,
) -> Result<HardyProbabilityTable> {
    let mut entries = [0.0; 6];
    for (slot, (la, oa, lb, ob)) in entries.iter_mut().zip(HardyProbabilityTable::PATTERNS) {
        *slot = joint_probability(sigma, obs.get(la), oa, obs.get(lb), ob)?;
    }
    Ok(HardyProbabilityTable { entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigen::hermitian_eig;
    use crate::schmidt::{find_hardy_pair, schmidt_decompose, DEFAULT_DELTA};
    use crate::state::StateVector;
    use alloc::vec;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn hardy_02() -> StateVector {
        StateVector::new(
            2,
            2,
            vec![
                c(0.2f64.sqrt(), 0.0),
                c(0.0, 0.0),
                c(0.0, 0.0),
                c(0.8f64.sqrt(), 0.0),
            ],
        )
        .unwrap()
    }

    fn setup(psi: &StateVector) -> (HardyPair, HardyObservableSet) {
        let sf = schmidt_decompose(psi);
        let pair = find_hardy_pair(&sf, DEFAULT_DELTA).unwrap();
        let bases = build_bases(&sf, &pair).unwrap();
        (pair, build_observables(&bases, psi.d1(), psi.d2()).unwrap())
    }

    #[test]
    fn equal_weight_rotations() {
        let s = core::f64::consts::FRAC_1_SQRT_2;
        let rot = build_rotations(s, s).unwrap();
        let u =
            ComplexMatrix::new(2, 2, vec![c(s, 0.0), c(0.0, -s), c(0.0, -s), c(s, 0.0)]).unwrap();
        let v = ComplexMatrix::new(
            2,
            2,
            vec![c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)],
        )
        .unwrap();
        assert!(rot.u.max_abs_diff(&u) < 1e-15);
        assert!(rot.v.max_abs_diff(&v) < 1e-15);
    }

    #[test]
    fn v_diagonal_for_02_state() {
        let (p1, p2) = (0.2f64.sqrt(), 0.8f64.sqrt());
        let rot = build_rotations(p1, p2).unwrap();
        let expected = c(0.0, -(p2 - p1) / 0.6f64.sqrt());
        assert!((rot.v[(0, 0)] - expected).norm() < 1e-12);
        assert!((rot.v[(1, 1)] - expected).norm() < 1e-12);
        assert!((expected.im + 0.447214 / 0.6f64.sqrt()).abs() < 1e-6);
        let id = ComplexMatrix::identity(2);
        assert!((&rot.u.adjoint() * &rot.u).max_abs_diff(&id) < 1e-15);
        assert!((&rot.v.adjoint() * &rot.v).max_abs_diff(&id) < 1e-15);
    }

    #[test]
    fn nonpositive_weights_rejected() {
        assert!(matches!(
            build_rotations(0.0, 1.0),
            Err(Error::NonPositiveWeight { .. })
        ));
        assert!(matches!(
            hardy_parameter_a(-0.1, 0.5),
            Err(Error::NonPositiveWeight { .. })
        ));
    }

    #[test]
    fn a_closed_form_values() {
        assert_eq!(hardy_parameter_a(0.6, 0.6).unwrap(), 0.0);
        let a = hardy_parameter_a(0.2f64.sqrt(), 0.8f64.sqrt()).unwrap();
        assert!((a - 0.16 * 0.2 / 0.36).abs() < 1e-15);
        assert!((a - 0.0888889).abs() < 1e-7);
        assert_eq!(
            hardy_parameter_a(0.3, 0.9).unwrap(),
            hardy_parameter_a(0.9, 0.3).unwrap()
        );
    }

    #[test]
    fn bases_are_orthonormal_pairs() {
        let psi = hardy_02();
        let sf = schmidt_decompose(&psi);
        let pair = find_hardy_pair(&sf, DEFAULT_DELTA).unwrap();
        let b = build_bases(&sf, &pair).unwrap();
        use crate::matrix::inner;
        for (p, m) in [
            (&b.x_plus_1, &b.x_minus_1),
            (&b.y_plus_1, &b.y_minus_1),
            (&b.x_plus_2, &b.x_minus_2),
            (&b.y_plus_2, &b.y_minus_2),
        ] {
            assert!((vec_norm(p) - 1.0).abs() < 1e-12);
            assert!((vec_norm(m) - 1.0).abs() < 1e-12);
            assert!(inner(p, m).norm() < 1e-12);
        }
    }

    #[test]
    fn zero_projector_rank_tracks_dimension() {
        let (_, obs) = setup(&hardy_02());
        assert!(obs.x1.proj_zero.max_abs() < 1e-15);

        let mut amps = vec![c(0.0, 0.0); 9];
        amps[0] = c(0.6f64.sqrt(), 0.0);
        amps[4] = c(0.3f64.sqrt(), 0.0);
        amps[8] = c(0.1f64.sqrt(), 0.0);
        let (_, obs3) = setup(&StateVector::new(3, 3, amps).unwrap());
        let eig = hermitian_eig(&obs3.x1.proj_zero, 1e-12).unwrap();
        let rank = eig.eigenvalues.iter().filter(|l| **l > 0.5).count();
        assert_eq!(rank, 1);
    }

    #[test]
    fn spectral_operator_has_plus_minus_zero() {
        let mut amps = vec![c(0.0, 0.0); 9];
        amps[0] = c(0.6f64.sqrt(), 0.0);
        amps[4] = c(0.4f64.sqrt(), 0.0);
        let (_, obs) = setup(&StateVector::new(3, 3, amps).unwrap());
        let eig = hermitian_eig(&obs.y2.operator(), 1e-12).unwrap();
        let expected = [-1.0, 0.0, 1.0];
        for (l, e) in eig.eigenvalues.iter().zip(expected) {
            assert!((l - e).abs() < 1e-12);
        }
    }

    #[test]
    fn pure_hardy_table() {
        let psi = hardy_02();
        let (pair, obs) = setup(&psi);
        let table = hardy_probability_table(&psi.to_density(), &obs).unwrap();
        assert!(table.deviation_from_ideal(pair.a) < 1e-10);
    }

    #[test]
    fn maximally_mixed_table() {
        let (_, obs) = setup(&hardy_02());
        let table = hardy_probability_table(&DensityOperator::maximally_mixed(2, 2), &obs).unwrap();
        let expected = [0.25, 0.25, 0.25, 0.0, 0.0, 0.25];
        for (x, e) in table.entries.iter().zip(expected) {
            assert!((x - e).abs() < 1e-12);
        }
    }

    #[test]
    fn mixture_table_is_convex_combination() {
        let psi = hardy_02();
        let (pair, obs) = setup(&psi);
        let white = DensityOperator::maximally_mixed(2, 2);
        let p = 0.37;
        let sigma = psi.to_density().mix(p, &white).unwrap();
        let table = hardy_probability_table(&sigma, &obs).unwrap();
        let white_t = [0.25, 0.25, 0.25, 0.0, 0.0, 0.25];
        for (k, x) in table.entries.iter().enumerate() {
            let pure = HardyProbabilityTable::ideal(pair.a).entries[k];
            assert!((x - (p * pure + (1.0 - p) * white_t[k])).abs() < 1e-12);
        }
    }

    #[test]
    fn all_nine_outcomes_sum_to_one() {
        let psi = hardy_02();
        let (_, obs) = setup(&psi);
        let sigma = psi
            .to_density()
            .mix(0.5, &DensityOperator::maximally_mixed(2, 2))
            .unwrap();
        for la in [&obs.x1, &obs.y1] {
            for lb in [&obs.x2, &obs.y2] {
                let total: f64 = Outcome::ALL
                    .iter()
                    .flat_map(|&a| Outcome::ALL.iter().map(move |&b| (a, b)))
                    .map(|(a, b)| joint_probability(&sigma, la, a, lb, b).unwrap())
                    .sum();
                assert!((total - 1.0).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn subsystem_mismatch() {
        let psi = hardy_02();
        let (_, obs) = setup(&psi);
        let sigma = psi.to_density();
        assert_eq!(
            joint_probability(&sigma, &obs.x2, Outcome::Plus, &obs.x2, Outcome::Plus),
            Err(Error::SubsystemMismatch {
                expected: 1,
                found: 2
            })
        );
        assert_eq!(
            joint_probability(&sigma, &obs.x1, Outcome::Plus, &obs.y1, Outcome::Plus),
            Err(Error::SubsystemMismatch {
                expected: 2,
                found: 1
            })
        );
    }
}
