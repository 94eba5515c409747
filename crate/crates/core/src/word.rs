//! Braid words in the standard generators.
//!
//! A word is an ordered list of letters `σ_i^{±1}` with `1 ≤ i ≤ m−1` for an
//! explicit strand count `m`. Composition is plain concatenation; nothing is
//! ever cancelled implicitly, so transformation sequences stay auditable.

use std::fmt;

use crate::error::WordError;
use crate::perm::Permutation;

/// Orientation of a single crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    /// +1 or −1.
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

/// One letter `σ_index` (Pos) or `σ_index^{-1}` (Neg); `index` is 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub index: usize,
    pub sign: Sign,
}

impl Letter {
    pub fn new(index: usize, sign: Sign) -> Letter {
        Letter { index, sign }
    }

    pub fn inverse(self) -> Letter {
        Letter {
            index: self.index,
            sign: self.sign.flip(),
        }
    }

    /// Signed-integer form used by the text and JSON formats: `k ↔ σ_k`,
    /// `−k ↔ σ_k^{-1}`.
    pub fn to_signed(self) -> i64 {
        match self.sign {
            Sign::Pos => self.index as i64,
            Sign::Neg => -(self.index as i64),
        }
    }

    pub fn from_signed(value: i64, m: usize) -> Result<Letter, WordError> {
        if value == 0 {
            return Err(WordError::ZeroToken);
        }
        let index = value.unsigned_abs() as usize;
        if index >= m {
            return Err(WordError::IndexOutOfRange { index, m });
        }
        let sign = if value > 0 { Sign::Pos } else { Sign::Neg };
        Ok(Letter { index, sign })
    }
}

/// A braid word on `m` strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    m: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    /// The identity word on `m` strands. `m ≥ 2` is required.
    pub fn identity(m: usize) -> BraidWord {
        assert!(m >= 2, "braid words need at least two strands");
        BraidWord {
            m,
            letters: Vec::new(),
        }
    }

    pub fn from_letters(m: usize, letters: Vec<Letter>) -> Result<BraidWord, WordError> {
        if m < 2 {
            return Err(WordError::TooFewStrands { m });
        }
        for letter in &letters {
            if letter.index == 0 || letter.index >= m {
                return Err(WordError::IndexOutOfRange {
                    index: letter.index,
                    m,
                });
            }
        }
        Ok(BraidWord { m, letters })
    }

    /// Parses the text format: whitespace/comma-separated nonzero integers,
    /// `k ↔ σ_k`, `−k ↔ σ_k^{-1}`. The empty string is the identity.
    pub fn parse(text: &str, m: usize) -> Result<BraidWord, WordError> {
        if m < 2 {
            return Err(WordError::TooFewStrands { m });
        }
        let mut letters = Vec::new();
        for token in text.split(|c: char| c.is_whitespace() || c == ',') {
            if token.is_empty() {
                continue;
            }
            let value: i64 = token.parse().map_err(|_| WordError::MalformedToken {
                token: token.to_string(),
            })?;
            letters.push(Letter::from_signed(value, m)?);
        }
        Ok(BraidWord { m, letters })
    }

    /// Renders the text format; `parse(print(w), m) == w` bit-exactly.
    pub fn print(&self) -> String {
        self.letters
            .iter()
            .map(|l| l.to_signed().to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn to_signed_vec(&self) -> Vec<i64> {
        self.letters.iter().map(|l| l.to_signed()).collect()
    }

    pub fn from_signed_slice(m: usize, values: &[i64]) -> Result<BraidWord, WordError> {
        let letters = values
            .iter()
            .map(|&v| Letter::from_signed(v, m))
            .collect::<Result<Vec<_>, _>>()?;
        BraidWord::from_letters(m, letters)
    }

    /// Concatenation `u · v`. No cancellation is performed.
    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord, WordError> {
        if self.m != other.m {
            return Err(WordError::StrandMismatch {
                left: self.m,
                right: other.m,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { m: self.m, letters })
    }

    /// The inverse word: letters reversed with signs flipped.
    pub fn inverse(&self) -> BraidWord {
        let letters = self.letters.iter().rev().map(|l| l.inverse()).collect();
        BraidWord { m: self.m, letters }
    }

    /// `self` repeated `n` times; negative `n` repeats the inverse word.
    pub fn power(&self, n: i64) -> BraidWord {
        let base = if n >= 0 { self.clone() } else { self.inverse() };
        let mut letters = Vec::with_capacity(base.letters.len() * n.unsigned_abs() as usize);
        for _ in 0..n.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord { m: self.m, letters }
    }

    /// The strand permutation: start position ↦ end position, built
    /// left-to-right as a product of transpositions `(i i+1)` per letter.
    /// Signs are irrelevant.
    pub fn permutation(&self) -> Permutation {
        let mut occupant: Vec<usize> = (0..self.m).collect();
        for letter in &self.letters {
            occupant.swap(letter.index - 1, letter.index);
        }
        // occupant[pos] = starting strand now at pos; invert to start ↦ end.
        let mut map = vec![0usize; self.m];
        for (pos, &start) in occupant.iter().enumerate() {
            map[start] = pos;
        }
        Permutation::from_map(map).expect("occupant array is a bijection")
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().is_identity()
    }

    pub fn letter(&self, pos1: usize) -> Option<Letter> {
        if pos1 == 0 {
            return None;
        }
        self.letters.get(pos1 - 1).copied()
    }

    pub(crate) fn letters_mut(&mut self) -> &mut Vec<Letter> {
        &mut self.letters
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            write!(f, "e")
        } else {
            write!(f, "{}", self.print())
        }
    }
}

/// The full twist `Δ^n` on `m` strands, with `Δ = (σ_1 ⋯ σ_{m−1})^m`.
/// Negative `n` yields the inverse word.
pub fn full_twist(m: usize, n: i64) -> Result<BraidWord, WordError> {
    if m < 2 {
        return Err(WordError::TooFewStrands { m });
    }
    let mut letters = Vec::with_capacity((m - 1) * m);
    for _ in 0..m {
        for i in 1..m {
            letters.push(Letter::new(i, Sign::Pos));
        }
    }
    Ok(BraidWord { m, letters }.power(n))
}

/// One repetition `(σ_1 ⋯ σ_{m−1})` of the twist block.
pub(crate) fn twist_block(m: usize) -> BraidWord {
    let letters = (1..m).map(|i| Letter::new(i, Sign::Pos)).collect();
    BraidWord { m, letters }
}
