//! Strand permutations.
//!
//! `map[p] = q` means the strand starting at position `p` ends at position
//! `q`. Positions are 1-based at the API surface, matching component labels
//! everywhere else in the crate; storage is 0-based.

use crate::error::WordError;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    map: Vec<usize>, // 0-based
}

impl Permutation {
    pub fn identity(m: usize) -> Permutation {
        Permutation {
            map: (0..m).collect(),
        }
    }

    /// Builds from a 0-based map; rejects non-bijections.
    pub fn from_map(map: Vec<usize>) -> Result<Permutation, WordError> {
        let m = map.len();
        let mut seen = vec![false; m];
        for &q in &map {
            if q >= m || seen[q] {
                return Err(WordError::NotABijection);
            }
            seen[q] = true;
        }
        Ok(Permutation { map })
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    /// Image of the 1-based position `p`.
    pub fn apply(&self, p: usize) -> usize {
        self.map[p - 1] + 1
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &q)| i == q)
    }

    pub fn inverse(&self) -> Permutation {
        let mut map = vec![0usize; self.map.len()];
        for (p, &q) in self.map.iter().enumerate() {
            map[q] = p;
        }
        Permutation { map }
    }

    /// `self` then `other`: the composite sends `p` to `other(self(p))`.
    /// This matches walking a braid word left to right.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.map.len(), other.map.len());
        Permutation {
            map: self.map.iter().map(|&q| other.map[q]).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_round_trip() {
        let p = Permutation::from_map(vec![2, 0, 1, 3]).unwrap();
        assert!(p.then(&p.inverse()).is_identity());
        assert!(p.inverse().then(&p).is_identity());
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::from_map(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_map(vec![0, 3]).is_err());
    }

    #[test]
    fn apply_is_one_based() {
        let p = Permutation::from_map(vec![1, 0]).unwrap();
        assert_eq!(p.apply(1), 2);
        assert_eq!(p.apply(2), 1);
    }
}
