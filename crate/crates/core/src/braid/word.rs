use std::fmt;
use std::ops::Mul;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// One factor `b_j^p` of a braid word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    /// 1-based generator index: `b_j` exchanges anyons `j` and `j+1`.
    pub generator: usize,
    pub power: i32,
}

impl Letter {
    pub fn new(generator: usize, power: i32) -> Self {
        Letter { generator, power }
    }
}

/// A braid on `anyons` strands, stored in product order.
///
/// `letters[0]` is the leftmost factor, so the last letter acts on a state
/// first. `"b3 b2"` means: apply `b2`, then `b3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    anyons: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn identity(anyons: usize) -> Self {
        BraidWord { anyons, letters: Vec::new() }
    }

    /// Word from letters in product order.
    pub fn from_letters(anyons: usize, letters: Vec<Letter>) -> Result<Self> {
        for l in &letters {
            if l.generator == 0 || l.generator >= anyons {
                return Err(Error::GeneratorOutOfRange { index: l.generator, anyons });
            }
        }
        Ok(BraidWord { anyons, letters })
    }

    /// Word from letters listed in the order they act on a state.
    pub fn from_applied(anyons: usize, applied: impl IntoIterator<Item = Letter>) -> Result<Self> {
        let mut letters: Vec<Letter> = applied.into_iter().collect();
        letters.reverse();
        Self::from_letters(anyons, letters)
    }

    pub fn generator(anyons: usize, index: usize) -> Result<Self> {
        Self::from_letters(anyons, vec![Letter::new(index, 1)])
    }

    pub fn anyons(&self) -> usize {
        self.anyons
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Letters in the order they act on a state.
    pub fn applied(&self) -> impl Iterator<Item = &Letter> + '_ {
        self.letters.iter().rev()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            anyons: self.anyons,
            letters: self.letters.iter().rev().map(|l| Letter::new(l.generator, -l.power)).collect(),
        }
    }

    /// `self` followed by `next`, i.e. the product `next · self`.
    pub fn then(&self, next: &BraidWord) -> BraidWord {
        next * self
    }

    /// Total absolute exponent, the number of elementary exchanges.
    pub fn crossing_count(&self) -> u64 {
        self.letters.iter().map(|l| l.power.unsigned_abs() as u64).sum()
    }

    /// Smallest and largest generator index touched.
    pub fn support(&self) -> Option<(usize, usize)> {
        let min = self.letters.iter().map(|l| l.generator).min()?;
        let max = self.letters.iter().map(|l| l.generator).max()?;
        Some((min, max))
    }

    /// Parses the compact text form, e.g. `"b3 b2 b1^-2"`. `""` and `"I"`
    /// are the identity.
    pub fn parse(anyons: usize, text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.is_empty() || trimmed == "I" {
            return Ok(Self::identity(anyons));
        }
        let mut letters = Vec::new();
        for tok in trimmed.split_whitespace() {
            let bad = || Error::Parse(format!("bad braid letter `{tok}`"));
            let body = tok.strip_prefix('b').ok_or_else(bad)?;
            let (idx, pow) = match body.split_once('^') {
                Some((i, p)) => (i, p.parse::<i32>().map_err(|_| bad())?),
                None => (body, 1),
            };
            letters.push(Letter::new(idx.parse().map_err(|_| bad())?, pow));
        }
        Self::from_letters(anyons, letters)
    }

    /// Parses the JSON form `[[j, p], ...]`.
    pub fn from_json(anyons: usize, json: &str) -> Result<Self> {
        let pairs: Vec<(usize, i32)> = serde_json::from_str(json)?;
        Self::from_letters(anyons, pairs.into_iter().map(|(g, p)| Letter::new(g, p)).collect())
    }
}

impl Mul for &BraidWord {
    type Output = BraidWord;

    /// Concatenation in product order; `rhs` acts first.
    fn mul(self, rhs: &BraidWord) -> BraidWord {
        assert_eq!(self.anyons, rhs.anyons, "braid words on different strand counts");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&rhs.letters);
        BraidWord { anyons: self.anyons, letters }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.power == 1 {
            write!(f, "b{}", self.generator)
        } else {
            write!(f, "b{}^{}", self.generator, self.power)
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(Letter::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Serialized as `[[generator, power], ...]` in product order.
impl Serialize for BraidWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.letters.len()))?;
        for l in &self.letters {
            seq.serialize_element(&(l.generator, l.power))?;
        }
        seq.end()
    }
}
