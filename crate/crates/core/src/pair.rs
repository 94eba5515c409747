//! Certified commuting pairs of pure braids.
//!
//! `CommutingPair` can only be built through `certify`, which checks purity
//! of both words and commutation via the free-group action, so downstream
//! consumers never recheck preconditions.

use crate::artin::commutes;
use crate::error::PairError;
use crate::word::{full_twist, BraidWord};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutingPair {
    a: BraidWord,
    b: BraidWord,
}

impl CommutingPair {
    /// Certifies that `a` and `b` are pure braids on the same strand count
    /// that commute as group elements.
    pub fn certify(a: BraidWord, b: BraidWord) -> Result<CommutingPair, PairError> {
        if a.m() != b.m() {
            return Err(PairError::Word(crate::error::WordError::StrandMismatch {
                left: a.m(),
                right: b.m(),
            }));
        }
        if !a.is_pure() {
            return Err(PairError::NotPure { word: a.print() });
        }
        if !b.is_pure() {
            return Err(PairError::NotPure { word: b.print() });
        }
        if !commutes(&a, &b) {
            return Err(PairError::NonCommuting);
        }
        Ok(CommutingPair { a, b })
    }

    pub fn a(&self) -> &BraidWord {
        &self.a
    }

    pub fn b(&self) -> &BraidWord {
        &self.b
    }

    pub fn m(&self) -> usize {
        self.a.m()
    }
}

/// A commuting pair on three strands in structured form:
/// `a = Δ^{k1} w^{l1}`, `b = Δ^{k2} w^{l2}` for a pure 3-braid `w`.
/// Every such pair commutes because the full twist is central and powers of
/// a common word commute.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuredPair3 {
    pub w: BraidWord,
    pub k1: i64,
    pub l1: i64,
    pub k2: i64,
    pub l2: i64,
}

impl StructuredPair3 {
    pub fn new(
        w: BraidWord,
        k1: i64,
        l1: i64,
        k2: i64,
        l2: i64,
    ) -> Result<StructuredPair3, PairError> {
        if w.m() != 3 {
            return Err(PairError::NeedThreeStrands { m: w.m() });
        }
        if !w.is_pure() {
            return Err(PairError::NotPure { word: w.print() });
        }
        Ok(StructuredPair3 { w, k1, l1, k2, l2 })
    }

    /// The concrete word `Δ^{k1} w^{l1}`.
    pub fn a_word(&self) -> BraidWord {
        let delta = full_twist(3, self.k1).expect("m = 3");
        delta.compose(&self.w.power(self.l1)).expect("same m")
    }

    /// The concrete word `Δ^{k2} w^{l2}`.
    pub fn b_word(&self) -> BraidWord {
        let delta = full_twist(3, self.k2).expect("m = 3");
        delta.compose(&self.w.power(self.l2)).expect("same m")
    }
}

/// Expands a structured pair into concrete words and certifies commutation.
pub fn expand_structured(pair: &StructuredPair3) -> Result<CommutingPair, PairError> {
    CommutingPair::certify(pair.a_word(), pair.b_word())
}
