//! Bob's outcome-conditioned correction braids.

use std::fmt;

use serde::Serialize;

use crate::braid::verify::VerifyReport;
use crate::braid::{BraidWord, Letter};
use crate::error::{Error, Result};
use crate::layout::Layout;

/// Correction for one outcome string.
///
/// `factors` lists the Bob-local generators `j` whose square appears, in
/// increasing order. Local label 0 is the auxiliary anyon next to Bob's
/// register, so `b_0` involves it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorrectionPlan {
    pub outcomes: Vec<u8>,
    pub parity: u8,
    pub factors: Vec<usize>,
    pub uses_auxiliary: bool,
}

/// Builds the correction for outcomes `a_1 … a_M`.
///
/// `b_j²` appears for `1 <= j <= M-1` when `a_{j+1} + … + a_M` is odd, and
/// `b_0²` appears when `M` is even and the parity `c` is 1. Exponents are
/// reduced mod 2 on the square, since every `b_j⁴` is the identity.
pub fn correction_word(outcomes: &[u8]) -> Result<CorrectionPlan> {
    if let Some(bad) = outcomes.iter().find(|&&a| a > 1) {
        return Err(Error::InvalidLabels(format!("outcome {bad} is not 0 or 1")));
    }
    let m = outcomes.len();
    let parity = outcomes.iter().fold(0u8, |acc, a| acc ^ a);
    let uses_auxiliary = m % 2 == 0 && parity == 1;
    let mut factors = Vec::new();
    if uses_auxiliary {
        factors.push(0);
    }
    let mut tail = vec![0u8; m + 1];
    for i in (0..m).rev() {
        tail[i] = tail[i + 1] ^ outcomes[i];
    }
    // tail[j] = a_{j+1} + … + a_M mod 2
    factors.extend((1..m).filter(|&j| tail[j] == 1));
    Ok(CorrectionPlan { outcomes: outcomes.to_vec(), parity, factors, uses_auxiliary })
}

impl CorrectionPlan {
    pub fn is_identity(&self) -> bool {
        self.factors.is_empty()
    }

    /// The correction as a global braid word, in product order `b_0² b_1² …`
    /// (the highest local factor acts first).
    pub fn global_word(&self, layout: &Layout) -> Result<BraidWord> {
        if self.outcomes.len() != layout.m() {
            return Err(Error::DimensionMismatch { expected: layout.m(), found: self.outcomes.len() });
        }
        let letters = self.factors.iter().map(|&j| Letter::new(layout.bob_local_generator(j), 2)).collect();
        BraidWord::from_letters(layout.total_anyons(), letters)
    }

    pub fn outcome_string(&self) -> String {
        outcome_string(&self.outcomes)
    }
}

pub fn outcome_string(outcomes: &[u8]) -> String {
    outcomes.iter().map(|a| char::from(b'0' + a)).collect()
}

/// `"I"` or e.g. `"b0^2 b3^2"`, in Bob-local labels.
impl fmt::Display for CorrectionPlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("I");
        }
        let parts: Vec<String> = self.factors.iter().map(|j| format!("b{j}^2")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Bob's corrections for four teleported anyons, transcribed by hand.
pub const TABLE1: [(&str, &str); 16] = [
    ("0000", "I"),
    ("0001", "b0^2 b1^2 b2^2 b3^2"),
    ("0010", "b0^2 b1^2 b2^2"),
    ("0011", "b3^2"),
    ("0100", "b0^2 b1^2"),
    ("0101", "b2^2 b3^2"),
    ("0110", "b2^2"),
    ("0111", "b0^2 b1^2 b3^2"),
    ("1000", "b0^2"),
    ("1001", "b1^2 b2^2 b3^2"),
    ("1010", "b1^2 b2^2"),
    ("1011", "b0^2 b3^2"),
    ("1100", "b1^2"),
    ("1101", "b0^2 b2^2 b3^2"),
    ("1110", "b0^2 b2^2"),
    ("1111", "b1^2 b3^2"),
];

/// Generated corrections for all sixteen outcomes of `M = 4`, in
/// lexicographic order.
pub fn table1() -> Vec<CorrectionPlan> {
    (0..16u8)
        .map(|bits| {
            let outcomes: Vec<u8> = (0..4).map(|i| (bits >> (3 - i)) & 1).collect();
            correction_word(&outcomes).expect("binary outcomes")
        })
        .collect()
}

/// Compares [`table1`] with [`TABLE1`] row by row.
pub fn verify_table1() -> VerifyReport {
    let mut report = VerifyReport::new("correction table");
    for (plan, (outcomes, expect)) in table1().iter().zip(TABLE1) {
        let got = plan.to_string();
        let ok = plan.outcome_string() == outcomes && got == expect;
        let detail = if ok { String::new() } else { format!("generated `{got}`, table has `{expect}`") };
        report.push(format!("row {outcomes}"), ok, detail);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plan(s: &str) -> CorrectionPlan {
        let o: Vec<u8> = s.bytes().map(|b| b - b'0').collect();
        correction_word(&o).unwrap()
    }

    #[test]
    fn spec_rows() {
        assert_eq!(plan("0101").to_string(), "b2^2 b3^2");
        assert_eq!(plan("1011").to_string(), "b0^2 b3^2");
        assert_eq!(plan("100").to_string(), "I");
        assert!(plan("100").is_identity());
    }

    #[test]
    fn auxiliary_only_for_even_m_odd_parity() {
        for m in 1..=6usize {
            for bits in 0..1u32 << m {
                let o: Vec<u8> = (0..m).map(|i| ((bits >> i) & 1) as u8).collect();
                let p = correction_word(&o).unwrap();
                assert_eq!(p.uses_auxiliary, m % 2 == 0 && p.parity == 1);
                assert_eq!(p.factors.contains(&0), p.uses_auxiliary);
                assert!(p.factors.iter().all(|&j| j < m));
            }
        }
    }

    #[test]
    fn table_matches() {
        let r = verify_table1();
        assert!(r.all_pass(), "{r}");
        assert_eq!(r.checks.len(), 16);
    }

    #[test]
    fn global_word_maps_labels() {
        let l = Layout::new(4, 2).unwrap();
        let w = plan("1011").global_word(&l).unwrap();
        assert_eq!(w.to_string(), "b4^2 b1^2");
        assert!(plan("0000").global_word(&l).unwrap().is_empty());
        assert!(plan("000").global_word(&l).is_err());
    }

    #[test]
    fn rejects_non_binary() {
        assert!(correction_word(&[0, 2]).is_err());
    }
}
