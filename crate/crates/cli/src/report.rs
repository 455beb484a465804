//! JSON report documents written by the commands.

use hardy_core::{CertificationReport, HardyPair, LhvResult, NoiseThresholdReport, Verdict};
use serde::{Deserialize, Serialize};

use crate::statefile::StateInput;

pub const TOOL_NAME: &str = "hardy";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InputDigest {
    pub role: String,
    pub path: String,
    pub sha256: String,
}

impl InputDigest {
    pub fn new(role: &str, input: &StateInput) -> Self {
        Self {
            role: role.into(),
            path: input.path.display().to_string(),
            sha256: input.sha256.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum VerdictTag {
    NonlocalCertified,
    Inconclusive,
    NotHardy,
}

impl From<Verdict> for VerdictTag {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::NonlocalCertified => Self::NonlocalCertified,
            Verdict::Inconclusive => Self::Inconclusive,
            Verdict::NotHardy => Self::NotHardy,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PairReport {
    pub index_small: usize,
    pub index_large: usize,
    pub p1: f64,
    pub p2: f64,
}

impl From<&HardyPair> for PairReport {
    fn from(p: &HardyPair) -> Self {
        Self {
            index_small: p.index_small,
            index_large: p.index_large,
            p1: p.p1,
            p2: p.p2,
        }
    }
}

/// Where the Hardy candidate came from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "source", rename_all = "snake_case")]
pub enum CandidateInfo {
    File,
    /// Top eigenvector of the state; `degeneracy_gap` is the distance to
    /// the next eigenvalue.
    TopEigenvector {
        eigenvalue: f64,
        degeneracy_gap: f64,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertifyReport {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub delta: f64,
    pub candidate: CandidateInfo,
    pub epsilon: f64,
    pub a: f64,
    pub margin: f64,
    pub verdict: VerdictTag,
    pub nonseparable: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pair: Option<PairReport>,
    /// `P(X1=+1,X2=+1)`, `P(Y1=+1,X2=-1)`, `P(X1=-1,Y2=+1)`,
    /// `P(Y1=+1,X2=0)`, `P(X1=0,Y2=+1)`, `P(Y1=+1,Y2=+1)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<[f64; 6]>,
}

impl CertifyReport {
    pub fn new(
        inputs: Vec<InputDigest>,
        delta: f64,
        candidate: CandidateInfo,
        r: &CertificationReport,
    ) -> Self {
        Self {
            tool: TOOL_NAME.into(),
            version: TOOL_VERSION.into(),
            command: "certify".into(),
            inputs,
            delta,
            candidate,
            epsilon: r.epsilon,
            a: r.a,
            margin: r.margin,
            verdict: r.verdict.into(),
            nonseparable: r.nonseparable(),
            pair: r.pair.as_ref().map(PairReport::from),
            table: r.table.map(|t| t.entries),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NoiseReport {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub delta: f64,
    pub p_star: f64,
    pub d_noise: f64,
    pub a: f64,
}

impl NoiseReport {
    pub fn new(inputs: Vec<InputDigest>, delta: f64, r: &NoiseThresholdReport) -> Self {
        Self {
            tool: TOOL_NAME.into(),
            version: TOOL_VERSION.into(),
            command: "noise-threshold".into(),
            inputs,
            delta,
            p_star: r.p_star,
            d_noise: r.d_noise,
            a: r.a,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LhvReport {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub delta: f64,
    pub tol: f64,
    pub feasible: bool,
    pub max_violation: f64,
    /// Weights over the 81 deterministic strategies, lexicographic in
    /// `(X1, Y1, X2, Y2)` with outcome order `+1, 0, -1`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<f64>>,
    pub epsilon: f64,
    pub a: f64,
    pub margin: f64,
    pub verdict: VerdictTag,
}

impl LhvReport {
    pub fn new(
        inputs: Vec<InputDigest>,
        delta: f64,
        tol: f64,
        lhv: &LhvResult,
        cert: &CertificationReport,
    ) -> Self {
        Self {
            tool: TOOL_NAME.into(),
            version: TOOL_VERSION.into(),
            command: "lhv-check".into(),
            inputs,
            delta,
            tol,
            feasible: lhv.feasible,
            max_violation: lhv.max_violation,
            weights: lhv.weights.clone(),
            epsilon: cert.epsilon,
            a: cert.a,
            margin: cert.margin,
            verdict: cert.verdict.into(),
        }
    }
}

pub fn to_json<T: Serialize>(report: &T) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports always serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn finite() -> impl Strategy<Value = f64> {
        prop::num::f64::NORMAL | prop::num::f64::SUBNORMAL | prop::num::f64::ZERO
    }

    proptest! {
        #[test]
        fn certify_report_round_trips(
            eps in finite(), a in finite(), margin in finite(), p1 in finite(), gap in finite(),
            table in prop::array::uniform6(finite()),
        ) {
            let r = CertifyReport {
                tool: TOOL_NAME.into(),
                version: TOOL_VERSION.into(),
                command: "certify".into(),
                inputs: vec![InputDigest { role: "state".into(), path: "s.json".into(), sha256: "ab".into() }],
                delta: 1e-8,
                candidate: CandidateInfo::TopEigenvector { eigenvalue: p1, degeneracy_gap: gap },
                epsilon: eps,
                a,
                margin,
                verdict: VerdictTag::Inconclusive,
                nonseparable: false,
                pair: Some(PairReport { index_small: 1, index_large: 0, p1, p2: a }),
                table: Some(table),
            };
            let back: CertifyReport = serde_json::from_str(&to_json(&r)).unwrap();
            prop_assert_eq!(back, r);
        }

        #[test]
        fn lhv_report_round_trips(weights in prop::collection::vec(finite(), 81), mv in finite()) {
            let r = LhvReport {
                tool: TOOL_NAME.into(),
                version: TOOL_VERSION.into(),
                command: "lhv-check".into(),
                inputs: vec![],
                delta: 1e-8,
                tol: 1e-9,
                feasible: true,
                max_violation: mv,
                weights: Some(weights),
                epsilon: 0.1,
                a: 0.05,
                margin: -0.55,
                verdict: VerdictTag::Inconclusive,
            };
            let back: LhvReport = serde_json::from_str(&to_json(&r)).unwrap();
            prop_assert_eq!(back, r);
        }
    }
}
