//! Trace distance, the `6ε < a` verdict, and noise tolerance.

use crate::eigen::{hermitian_eig, trace_norm};
use crate::error::{Error, Result};
use crate::observables::{
    build_bases, build_observables, hardy_probability_table, HardyProbabilityTable,
};
use crate::schmidt::{find_hardy_pair, schmidt_decompose, HardyPair};
use crate::state::{DensityOperator, StateVector};

/// A margin `a − 6ε` must exceed this to certify.
pub const CERTIFICATION_TOL: f64 = 1e-10;

/// `½ Tr|σ₁ − σ₂|`, clipped to `[0, 1]`.
pub fn trace_distance(s1: &DensityOperator, s2: &DensityOperator) -> Result<f64> {
    if s1.dims() != s2.dims() {
        return Err(Error::DimensionMismatch {
            expected: s1.dim(),
            found: s2.dim(),
        });
    }
    let diff = s1.matrix().try_sub(s2.matrix())?;
    Ok((0.5 * trace_norm(&diff)?).clamp(0.0, 1.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// `a − 6ε` exceeds [`CERTIFICATION_TOL`]: no local realistic model
    /// exists, and the state is therefore not separable.
    NonlocalCertified,
    Inconclusive,
    /// The candidate has no two distinct Schmidt weights.
    NotHardy,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::NonlocalCertified => "NonlocalCertified",
            Self::Inconclusive => "Inconclusive",
            Self::NotHardy => "NotHardy",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CertificationReport {
    /// Trace distance between `σ` and the candidate projector.
    pub epsilon: f64,
    /// Hardy parameter of the selected pair; 0 when there is none.
    pub a: f64,
    /// `a − 6ε`.
    pub margin: f64,
    pub verdict: Verdict,
    pub pair: Option<HardyPair>,
    /// Hardy probabilities of `σ` on the candidate's observables.
    pub table: Option<HardyProbabilityTable>,
}

impl CertificationReport {
    /// Nonseparability follows from certified nonlocality; nothing else is
    /// inferred here.
    pub fn nonseparable(&self) -> bool {
        self.verdict == Verdict::NonlocalCertified
    }
}

/// Evaluates the criterion for `sigma` against the Hardy state `candidate`.
pub fn certify(
    sigma: &DensityOperator,
    candidate: &StateVector,
    delta: f64,
) -> Result<CertificationReport> {
    if sigma.dims() != candidate.dims() {
        return Err(Error::DimensionMismatch {
            expected: sigma.dim(),
            found: candidate.d1() * candidate.d2(),
        });
    }
    let epsilon = trace_distance(sigma, &candidate.to_density())?;
    let sf = schmidt_decompose(candidate);
    let Some(pair) = find_hardy_pair(&sf, delta) else {
        return Ok(CertificationReport {
            epsilon,
            a: 0.0,
            margin: -6.0 * epsilon,
            verdict: Verdict::NotHardy,
            pair: None,
            table: None,
        });
    };
    let bases = build_bases(&sf, &pair)?;
    let obs = build_observables(&bases, candidate.d1(), candidate.d2())?;
    let table = hardy_probability_table(sigma, &obs)?;
    let margin = pair.a - 6.0 * epsilon;
    let verdict = if margin > CERTIFICATION_TOL {
        Verdict::NonlocalCertified
    } else {
        Verdict::Inconclusive
    };
    Ok(CertificationReport {
        epsilon,
        a: pair.a,
        margin,
        verdict,
        pair: Some(pair),
        table: Some(table),
    })
}

/// Top eigenvector of a density operator together with its eigenvalue and
/// the gap to the next one (0 for a degenerate top eigenvalue).
#[derive(Debug, Clone, PartialEq)]
pub struct CandidateChoice {
    pub state: StateVector,
    pub eigenvalue: f64,
    pub gap: f64,
}

pub fn candidate_with_gap(sigma: &DensityOperator) -> CandidateChoice {
    let eig = hermitian_eig(sigma.matrix(), f64::INFINITY).expect("density operators are square");
    let n = eig.len();
    let eigenvalue = eig.eigenvalues[n - 1];
    let gap = if n > 1 {
        eigenvalue - eig.eigenvalues[n - 2]
    } else {
        eigenvalue
    };
    let state = StateVector::normalized(sigma.d1(), sigma.d2(), eig.vector(n - 1))
        .expect("eigenvectors are unit vectors");
    CandidateChoice {
        state,
        eigenvalue,
        gap,
    }
}

/// Default Hardy candidate: the eigenvector of `σ` with the largest
/// eigenvalue.
pub fn candidate_from_state(sigma: &DensityOperator) -> StateVector {
    candidate_with_gap(sigma).state
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseThresholdReport {
    /// Smallest weight of `|ψ⟩⟨ψ|` in `p|ψ⟩⟨ψ| + (1−p)σ̃` above which the
    /// criterion certifies.
    pub p_star: f64,
    /// `D(σ̃, |ψ⟩⟨ψ|)`.
    pub d_noise: f64,
    pub a: f64,
}

/// Since `D(pψψ + (1−p)σ̃, ψψ) = (1−p)·D(σ̃, ψψ)`, certification holds exactly
/// for `p > 1 − a / (6 D(σ̃, ψψ))`.
pub fn noise_threshold(
    psi: &StateVector,
    noise: &DensityOperator,
    delta: f64,
) -> Result<NoiseThresholdReport> {
    if psi.dims() != noise.dims() {
        return Err(Error::DimensionMismatch {
            expected: noise.dim(),
            found: psi.d1() * psi.d2(),
        });
    }
    let pair = find_hardy_pair(&schmidt_decompose(psi), delta).ok_or(Error::NotHardy)?;
    let d_noise = trace_distance(noise, &psi.to_density())?;
    let a = pair.a;
    let p_star = if d_noise <= a / 6.0 {
        0.0
    } else {
        (1.0 - a / (6.0 * d_noise)).max(0.0)
    };
    Ok(NoiseThresholdReport { p_star, d_noise, a })
}
