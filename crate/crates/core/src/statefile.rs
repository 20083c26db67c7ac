//! JSON state files.
//!
//! ```json
//! { "anyons": 4, "sector": "0", "amplitudes": [[0.7071, 0], [0, 0], [0, 0], [0, 0.7071]],
//!   "cyclotomic": [[0, 1, 0, -1, 1], [0, 0, 0, 0, 0], ...] }
//! ```
//!
//! Amplitudes are listed in big-endian bitstring order. `cyclotomic` rows are
//! `[c0, c1, c2, c3, k]` for `(c0 + c1 ζ + c2 ζ² + c3 ζ³) / 2^k`; numerators
//! too large for a JSON integer are written as strings.

use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::scalar::{CycScalar, Scalar};
use crate::state::{AnyonState, Sector};

/// Allowed gap between the float and cyclotomic copies of an amplitude.
const AGREE_TOL: f64 = 1e-9;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StateFile {
    pub anyons: usize,
    pub sector: Sector,
    pub amplitudes: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cyclotomic: Option<Vec<Vec<Value>>>,
}

impl StateFile {
    pub fn from_float(state: &AnyonState<Complex64>) -> Self {
        StateFile {
            anyons: state.anyons(),
            sector: state.sector(),
            amplitudes: state.amplitudes().iter().map(|z| [z.re, z.im]).collect(),
            cyclotomic: None,
        }
    }

    pub fn from_exact(state: &AnyonState<CycScalar>) -> Self {
        let mut file = Self::from_float(&state.to_float());
        file.cyclotomic = Some(state.amplitudes().iter().map(cyc_row).collect());
        file
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::StateFile(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::StateFile(e.to_string()))
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, serde_json::to_string_pretty(self)? + "\n")?;
        Ok(())
    }

    /// Float state, validated against the default norm tolerance.
    pub fn to_float(&self) -> Result<AnyonState<Complex64>> {
        let amps = self.amplitudes.iter().map(|&[re, im]| Complex64::new(re, im)).collect();
        AnyonState::new(self.anyons, self.sector, amps)
    }

    /// Exact state; requires the `cyclotomic` field, which must agree with
    /// `amplitudes`.
    pub fn to_exact(&self) -> Result<AnyonState<CycScalar>> {
        let rows = self
            .cyclotomic
            .as_ref()
            .ok_or_else(|| Error::NotExact("state file has no `cyclotomic` amplitudes".into()))?;
        let amps = rows.iter().map(|r| parse_row(r)).collect::<Result<Vec<_>>>()?;
        if amps.len() != self.amplitudes.len() {
            return Err(Error::StateFile(format!(
                "{} cyclotomic amplitudes but {} float amplitudes",
                amps.len(),
                self.amplitudes.len()
            )));
        }
        for (i, (a, &[re, im])) in amps.iter().zip(&self.amplitudes).enumerate() {
            if (a.to_c64() - Complex64::new(re, im)).norm() > AGREE_TOL {
                return Err(Error::StateFile(format!("amplitude {i}: cyclotomic {a} disagrees with [{re}, {im}]")));
            }
        }
        AnyonState::new(self.anyons, self.sector, amps)
    }
}

fn cyc_row(s: &CycScalar) -> Vec<Value> {
    let mut row: Vec<Value> = match s.numerators_i64() {
        Some(n) => n.iter().map(|&c| Value::from(c)).collect(),
        None => s.numerators().into_iter().map(Value::from).collect(),
    };
    row.push(Value::from(s.denominator_exp()));
    row
}

fn parse_row(row: &[Value]) -> Result<CycScalar> {
    if row.len() != 5 {
        return Err(Error::StateFile(format!("cyclotomic row needs 5 entries, found {}", row.len())));
    }
    let nums: Vec<String> = row[..4]
        .iter()
        .map(|v| match v {
            Value::Number(n) if n.is_i64() => Ok(n.to_string()),
            Value::String(s) => Ok(s.clone()),
            other => Err(Error::StateFile(format!("bad numerator {other}"))),
        })
        .collect::<Result<_>>()?;
    let k = row[4]
        .as_u64()
        .and_then(|k| u32::try_from(k).ok())
        .ok_or_else(|| Error::StateFile(format!("bad denominator exponent {}", row[4])))?;
    CycScalar::from_numerator_strs([&nums[0], &nums[1], &nums[2], &nums[3]], k)
}
