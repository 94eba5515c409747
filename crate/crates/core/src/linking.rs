//! Pairwise linking numbers of pure-braid closures.
//!
//! For a pure braid the closure has one component per strand, labelled by
//! start position. Walking the word with a running strand permutation, each
//! letter `σ_i^ε` contributes `ε` to the signed crossing count of the two
//! component labels currently at positions `i`, `i+1`; the linking number is
//! half that count, which is always even for pure braids.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::InvariantError;
use crate::word::BraidWord;

/// Symmetric integer matrix of pairwise linking numbers, zero diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkingMatrix {
    m: usize,
    entries: Vec<Vec<i64>>,
}

impl LinkingMatrix {
    pub fn zero(m: usize) -> LinkingMatrix {
        LinkingMatrix {
            m,
            entries: vec![vec![0; m]; m],
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Linking number of components `i` and `j` (1-based).
    pub fn lk(&self, i: usize, j: usize) -> i64 {
        self.entries[i - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn add(&self, other: &LinkingMatrix) -> LinkingMatrix {
        assert_eq!(self.m, other.m);
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(r, s)| r.iter().zip(s).map(|(a, b)| a + b).collect())
            .collect();
        LinkingMatrix { m: self.m, entries }
    }

    pub fn neg(&self) -> LinkingMatrix {
        let entries = self
            .entries
            .iter()
            .map(|r| r.iter().map(|a| -a).collect())
            .collect();
        LinkingMatrix { m: self.m, entries }
    }
}

impl Serialize for LinkingMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("LinkingMatrix", 2)?;
        s.serialize_field("m", &self.m)?;
        s.serialize_field("entries", &self.entries)?;
        s.end()
    }
}

/// Linking matrix of the closure of a pure braid.
pub fn linking_matrix(word: &BraidWord) -> Result<LinkingMatrix, InvariantError> {
    if !word.is_pure() {
        return Err(InvariantError::NotPure { word: word.print() });
    }
    let m = word.m();
    let mut counts = vec![vec![0i64; m]; m];
    let mut occupant: Vec<usize> = (0..m).collect();
    for letter in word.letters() {
        let i = letter.index - 1;
        let s = occupant[i];
        let t = occupant[i + 1];
        counts[s][t] += letter.sign.as_i64();
        counts[t][s] += letter.sign.as_i64();
        occupant.swap(i, i + 1);
    }
    let mut entries = vec![vec![0i64; m]; m];
    for s in 0..m {
        for t in 0..m {
            assert!(
                counts[s][t] % 2 == 0,
                "signed crossing count between strands {} and {} is odd in a pure braid",
                s + 1,
                t + 1
            );
            entries[s][t] = counts[s][t] / 2;
        }
    }
    Ok(LinkingMatrix { m, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::full_twist;

    fn w(text: &str, m: usize) -> BraidWord {
        BraidWord::parse(text, m).unwrap()
    }

    #[test]
    fn sigma1_squared() {
        let lk = linking_matrix(&w("1 1", 3)).unwrap();
        assert_eq!(lk.lk(1, 2), 1);
        assert_eq!(lk.lk(2, 1), 1);
        assert_eq!(lk.lk(1, 3), 0);
        assert_eq!(lk.lk(2, 3), 0);
    }

    #[test]
    fn full_twist_links_every_pair_once() {
        let lk = linking_matrix(&full_twist(3, 1).unwrap()).unwrap();
        assert_eq!((lk.lk(3, 1), lk.lk(1, 2), lk.lk(2, 3)), (1, 1, 1));
    }

    #[test]
    fn identity_word_zero_matrix() {
        let lk = linking_matrix(&BraidWord::identity(5)).unwrap();
        assert_eq!(lk, LinkingMatrix::zero(5));
    }

    #[test]
    fn full_twist_powers() {
        for m in 3..=6 {
            for n in [-2i64, 0, 1, 3] {
                let lk = linking_matrix(&full_twist(m, n).unwrap()).unwrap();
                for i in 1..=m {
                    for j in 1..=m {
                        assert_eq!(lk.lk(i, j), if i == j { 0 } else { n });
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_non_pure() {
        assert!(matches!(
            linking_matrix(&w("1", 3)),
            Err(InvariantError::NotPure { .. })
        ));
    }

    #[test]
    fn additive_on_pure_words() {
        let u = w("1 1 2 2", 3);
        let v = w("-2 -2", 3);
        let sum = linking_matrix(&u.compose(&v).unwrap()).unwrap();
        let expect = linking_matrix(&u)
            .unwrap()
            .add(&linking_matrix(&v).unwrap());
        assert_eq!(sum, expect);
    }

    #[test]
    fn inverse_negates() {
        let u = w("1 1 2 2 -1 -1", 3);
        assert_eq!(
            linking_matrix(&u.inverse()).unwrap(),
            linking_matrix(&u).unwrap().neg()
        );
    }

    #[test]
    fn conjugated_generator_pair() {
        // C = σ2 σ1² σ2^{-1} links strands 1 and 3.
        let lk = linking_matrix(&w("2 1 1 -2", 3)).unwrap();
        assert_eq!(lk.lk(1, 3), 1);
        assert_eq!(lk.lk(1, 2), 0);
        assert_eq!(lk.lk(2, 3), 0);
    }

    #[test]
    fn json_shape() {
        let lk = linking_matrix(&w("1 1", 3)).unwrap();
        assert_eq!(
            serde_json::to_string(&lk).unwrap(),
            r#"{"m":3,"entries":[[0,1,0],[1,0,0],[0,0,0]]}"#
        );
    }
}
