//! `b_1² 𝒯 |a_1 a_2⟩ = λ 𝒯 |ā_1 ā_2⟩` on four anyons.

use serde::Serialize;

use super::tangle::tangle;
use crate::braid::verify::{describe, VerifyReport};
use crate::braid::{self, BraidWord};
use crate::error::Result;
use crate::scalar::Scalar;
use crate::state::{fidelity_up_to_phase, AnyonState};

#[derive(Clone, Debug, Serialize)]
pub struct LemmaCase {
    pub labels: [u8; 2],
    pub fidelity: f64,
    pub passed: bool,
    /// `λ` in readable form, when the two sides agree up to phase.
    pub phase: Option<String>,
    pub phase_float: Option<[f64; 2]>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaReport {
    pub cases: Vec<LemmaCase>,
    /// Whether one `λ` serves all four label pairs. Recorded, not required.
    pub same_phase: bool,
}

impl LemmaReport {
    pub fn all_pass(&self) -> bool {
        self.cases.iter().all(|c| c.passed)
    }

    pub fn to_verify_report(&self) -> VerifyReport {
        let mut r = VerifyReport::new("lemma");
        for c in &self.cases {
            let detail = if c.passed { String::new() } else { format!("fidelity {}", c.fidelity) };
            r.push(format!("(a1,a2) = ({},{})", c.labels[0], c.labels[1]), c.passed, detail);
        }
        r
    }
}

pub fn verify_lemma<S: Scalar>(tol: f64) -> Result<LemmaReport> {
    let t = tangle(4, 2, 0)?;
    let b1sq = BraidWord::parse(4, "b1^2")?;
    let mut cases = Vec::new();
    let mut phases: Vec<S> = Vec::new();
    for a1 in 0..2u8 {
        for a2 in 0..2u8 {
            let lhs = braid::apply(&b1sq, &braid::apply(&t, &AnyonState::<S>::basis(4, &[a1, a2])?)?)?;
            let rhs = braid::apply(&t, &AnyonState::<S>::basis(4, &[a1 ^ 1, a2 ^ 1])?)?;
            let f = fidelity_up_to_phase(&rhs, &lhs)?;
            let passed = f.phase.is_some() && f.overlap_sqr.close_to(&S::one(), tol);
            let phase_float = f.phase.as_ref().map(|p| {
                let z = p.to_c64();
                [z.re, z.im]
            });
            let phase = f.phase.as_ref().map(describe);
            if let Some(p) = f.phase {
                phases.push(p);
            }
            cases.push(LemmaCase { labels: [a1, a2], fidelity: f.fidelity, passed, phase, phase_float });
        }
    }
    let same_phase = phases.len() == 4 && phases.iter().all(|p| p.close_to(&phases[0], tol));
    Ok(LemmaReport { cases, same_phase })
}
