//! Triple linking tensors.
//!
//! A tensor assigns an integer to every component triple `(i, j, k)` with
//! `i ≠ j` and `j ≠ k` (`k = i` is allowed). Only nonzero entries are stored;
//! comparison and serialization are canonical because the map is ordered.

use std::collections::BTreeMap;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// Sparse integer tensor over admissible component triples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleLinkingTensor {
    m: usize,
    values: BTreeMap<(usize, usize, usize), i64>,
}

impl TripleLinkingTensor {
    pub fn zero(m: usize) -> TripleLinkingTensor {
        TripleLinkingTensor {
            m,
            values: BTreeMap::new(),
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// True iff `(i, j, k)` indexes a defined entry: labels in `1..=m`,
    /// `i ≠ j`, `j ≠ k`.
    pub fn is_admissible(&self, i: usize, j: usize, k: usize) -> bool {
        let in_range = |x: usize| (1..=self.m).contains(&x);
        in_range(i) && in_range(j) && in_range(k) && i != j && j != k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> i64 {
        debug_assert!(self.is_admissible(i, j, k));
        self.values.get(&(i, j, k)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, i: usize, j: usize, k: usize, v: i64) {
        assert!(
            self.is_admissible(i, j, k),
            "inadmissible triple ({i},{j},{k})"
        );
        let entry = self.values.entry((i, j, k)).or_insert(0);
        *entry += v;
        if *entry == 0 {
            self.values.remove(&(i, j, k));
        }
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: i64) {
        assert!(
            self.is_admissible(i, j, k),
            "inadmissible triple ({i},{j},{k})"
        );
        if v == 0 {
            self.values.remove(&(i, j, k));
        } else {
            self.values.insert((i, j, k), v);
        }
    }

    /// Nonzero entries in lexicographic order of `(i, j, k)`.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize, usize), i64)> + '_ {
        self.values.iter().map(|(&t, &v)| (t, v))
    }

    /// All admissible triples, including those with zero value.
    pub fn admissible_triples(m: usize) -> impl Iterator<Item = (usize, usize, usize)> {
        (1..=m).flat_map(move |i| {
            (1..=m).flat_map(move |j| {
                (1..=m).filter_map(move |k| (i != j && j != k).then_some((i, j, k)))
            })
        })
    }

    /// Sum of `|value|` over all admissible triples.
    pub fn abs_sum(&self) -> i64 {
        self.values.values().map(|v| v.abs()).sum()
    }

    pub fn neg(&self) -> TripleLinkingTensor {
        TripleLinkingTensor {
            m: self.m,
            values: self.values.iter().map(|(&t, &v)| (t, -v)).collect(),
        }
    }

    /// Checks `values[k][j][i] = −values[i][j][k]` for mutually distinct
    /// labels and `values[i][j][i] = 0`.
    pub fn is_antisymmetric(&self) -> bool {
        Self::admissible_triples(self.m).all(|(i, j, k)| {
            if i == k {
                self.get(i, j, k) == 0
            } else {
                self.get(k, j, i) == -self.get(i, j, k)
            }
        })
    }
}

impl Serialize for TripleLinkingTensor {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            i: usize,
            j: usize,
            k: usize,
            v: i64,
        }
        let entries: Vec<Entry> = self
            .values
            .iter()
            .map(|(&(i, j, k), &v)| Entry { i, j, k, v })
            .collect();
        let mut s = serializer.serialize_struct("TripleLinkingTensor", 2)?;
        s.serialize_field("m", &self.m)?;
        s.serialize_field("entries", &entries)?;
        s.end()
    }
}
