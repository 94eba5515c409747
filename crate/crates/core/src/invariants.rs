//! Closed-form triple linking tensors and triple-point bounds.
//!
//! For a certified commuting pure pair `(a, b)` on `m ≥ 3` strands the
//! triple linking number of the associated surface link is
//!
//! ```text
//! Tlk[i][j][k] = −Lk_ij(â)·Lk_jk(b̂) + Lk_ij(b̂)·Lk_jk(â)
//! ```
//!
//! and for the family `(b, Δ^n)` this collapses to
//! `Tlk[i][j][k] = −n·(Lk_ij(b̂) − Lk_jk(b̂))`, whose absolute sum equals the
//! lower bound `4n(μ(m−2) − ν)` on the triple point number.

use std::collections::BTreeMap;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::InvariantError;
use crate::linking::{linking_matrix, LinkingMatrix};
use crate::pair::CommutingPair;
use crate::tensor::TripleLinkingTensor;
use crate::word::{full_twist, BraidWord};

/// Triple linking tensor of a certified commuting pair.
pub fn tlk_formula(pair: &CommutingPair) -> Result<TripleLinkingTensor, InvariantError> {
    let m = pair.m();
    if m < 3 {
        return Err(InvariantError::NeedThreeStrands { m });
    }
    let lk_a = linking_matrix(pair.a())?;
    let lk_b = linking_matrix(pair.b())?;
    Ok(tensor_from_linking(&lk_a, &lk_b))
}

fn tensor_from_linking(lk_a: &LinkingMatrix, lk_b: &LinkingMatrix) -> TripleLinkingTensor {
    let m = lk_a.m();
    let mut tensor = TripleLinkingTensor::zero(m);
    for (i, j, k) in TripleLinkingTensor::admissible_triples(m) {
        let v = -lk_a.lk(i, j) * lk_b.lk(j, k) + lk_b.lk(i, j) * lk_a.lk(j, k);
        tensor.set(i, j, k, v);
    }
    tensor
}

/// Sum of `|Tlk[i][j][k]|` over all admissible triples.
pub fn tlk_abs_sum(tensor: &TripleLinkingTensor) -> i64 {
    tensor.abs_sum()
}

/// Tensor of the pair `(b, Δ^n)` via the collapsed form
/// `−n·(Lk_ij(b̂) − Lk_jk(b̂))`. Agrees entrywise with
/// `tlk_formula(b, Δ^n)`; negative `n` is meaningful here.
pub fn tlk_b_delta(b: &BraidWord, n: i64) -> Result<TripleLinkingTensor, InvariantError> {
    if !b.is_pure() {
        return Err(InvariantError::NotPure { word: b.print() });
    }
    let m = b.m();
    if m < 3 {
        return Err(InvariantError::NeedThreeStrands { m });
    }
    let lk = linking_matrix(b)?;
    let mut tensor = TripleLinkingTensor::zero(m);
    for (i, j, k) in TripleLinkingTensor::admissible_triples(m) {
        tensor.set(i, j, k, -n * (lk.lk(i, j) - lk.lk(j, k)));
    }
    Ok(tensor)
}

/// Lower-bound report for the triple point number of the family `(b, Δ^n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub m: usize,
    pub n: i64,
    /// `μ = Σ_{i<j} |Lk_ij(b̂)|`
    pub mu: i64,
    /// `ν = Σ_{i<j<k} (ν_ijk + ν_jki + ν_kij)`
    pub nu: i64,
    /// Nonzero `ν_ijk` terms keyed by `(i, j, k)`.
    pub nu_terms: BTreeMap<(usize, usize, usize), i64>,
    /// `4n(μ(m−2) − ν)`
    pub lower_bound: i64,
    /// `Σ |Tlk|` of the formula tensor; equals `lower_bound`.
    pub tlk_abs_sum: i64,
    /// R3 count of a constructed sequence, when one was built.
    pub realized_r3_count: Option<usize>,
}

impl Serialize for BoundReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct NuTerm {
            i: usize,
            j: usize,
            k: usize,
            v: i64,
        }
        let nu_terms: Vec<NuTerm> = self
            .nu_terms
            .iter()
            .map(|(&(i, j, k), &v)| NuTerm { i, j, k, v })
            .collect();
        let mut s = serializer.serialize_struct("BoundReport", 8)?;
        s.serialize_field("m", &self.m)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("mu", &self.mu)?;
        s.serialize_field("nu", &self.nu)?;
        s.serialize_field("nu_terms", &nu_terms)?;
        s.serialize_field("lower_bound", &self.lower_bound)?;
        s.serialize_field("tlk_abs_sum", &self.tlk_abs_sum)?;
        s.serialize_field("realized_r3_count", &self.realized_r3_count)?;
        s.end()
    }
}

fn nu_term(lk: &LinkingMatrix, i: usize, j: usize, k: usize) -> i64 {
    let a = lk.lk(i, j);
    let b = lk.lk(j, k);
    if a * b > 0 {
        a.abs().min(b.abs())
    } else {
        0
    }
}

/// Computes `μ`, `ν`, and the lower bound `4n(μ(m−2) − ν)` for `(b, Δ^n)`,
/// and checks at runtime that the formula tensor's absolute sum equals the
/// bound.
pub fn thm2_bound(b: &BraidWord, n: i64) -> Result<BoundReport, InvariantError> {
    if n < 0 {
        return Err(InvariantError::NegativeTwist { n });
    }
    if !b.is_pure() {
        return Err(InvariantError::NotPure { word: b.print() });
    }
    let m = b.m();
    if m < 3 {
        return Err(InvariantError::NeedThreeStrands { m });
    }
    let lk = linking_matrix(b)?;

    let mut mu = 0i64;
    for i in 1..=m {
        for j in i + 1..=m {
            mu += lk.lk(i, j).abs();
        }
    }

    let mut nu = 0i64;
    let mut nu_terms = BTreeMap::new();
    for i in 1..=m {
        for j in i + 1..=m {
            for k in j + 1..=m {
                for (p, q, r) in [(i, j, k), (j, k, i), (k, i, j)] {
                    let term = nu_term(&lk, p, q, r);
                    nu += term;
                    if term != 0 {
                        nu_terms.insert((p, q, r), term);
                    }
                }
            }
        }
    }

    let lower_bound = 4 * n * (mu * (m as i64 - 2) - nu);

    let delta_n = full_twist(m, n)?;
    let pair = CommutingPair::certify(b.clone(), delta_n)
        .expect("the full twist is central and b is pure");
    let tensor = tlk_formula(&pair)?;
    let abs_sum = tensor.abs_sum();
    assert_eq!(
        abs_sum, lower_bound,
        "tensor absolute sum must equal 4n(mu(m-2)-nu); got {abs_sum} vs {lower_bound}"
    );

    Ok(BoundReport {
        m,
        n,
        mu,
        nu,
        nu_terms,
        lower_bound,
        tlk_abs_sum: abs_sum,
        realized_r3_count: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pair::CommutingPair;

    fn w(text: &str, m: usize) -> BraidWord {
        BraidWord::parse(text, m).unwrap()
    }

    fn pair(a: &str, b: &str, m: usize) -> CommutingPair {
        CommutingPair::certify(w(a, m), w(b, m)).unwrap()
    }

    #[test]
    fn formula_reproduces_base_tensor() {
        // (A, Δ): +1 at (3,2,1) and (3,1,2); −1 at (1,2,3) and (2,1,3).
        let delta = full_twist(3, 1).unwrap().print();
        let t = tlk_formula(&pair("1 1", &delta, 3)).unwrap();
        assert_eq!(t.get(3, 2, 1), 1);
        assert_eq!(t.get(3, 1, 2), 1);
        assert_eq!(t.get(1, 2, 3), -1);
        assert_eq!(t.get(2, 1, 3), -1);
        assert_eq!(t.entries().count(), 4);
    }

    #[test]
    fn formula_vanishes_on_equal_words() {
        let t = tlk_formula(&pair("1 1 2 2", "1 1 2 2", 3)).unwrap();
        assert_eq!(t, TripleLinkingTensor::zero(3));
    }

    #[test]
    fn formula_delta_against_a_delta() {
        // (Δ, A·Δ): entry (1,2,3) = −1·1 + 2·1 = +1.
        let delta = full_twist(3, 1).unwrap();
        let a_delta = w("1 1", 3).compose(&delta).unwrap();
        let p = CommutingPair::certify(delta, a_delta).unwrap();
        let t = tlk_formula(&p).unwrap();
        assert_eq!(t.get(1, 2, 3), 1);
    }

    #[test]
    fn skew_symmetry_in_the_pair() {
        let delta = full_twist(3, 1).unwrap();
        let c = w("2 2", 3);
        let t1 = tlk_formula(&CommutingPair::certify(c.clone(), delta.clone()).unwrap()).unwrap();
        let t2 = tlk_formula(&CommutingPair::certify(delta, c).unwrap()).unwrap();
        assert_eq!(t1, t2.neg());
    }

    #[test]
    fn abs_sum_values() {
        let delta = full_twist(3, 1).unwrap().print();
        assert_eq!(
            tlk_abs_sum(&tlk_formula(&pair("1 1", &delta, 3)).unwrap()),
            4
        );
        assert_eq!(tlk_abs_sum(&TripleLinkingTensor::zero(4)), 0);
        assert_eq!(
            tlk_abs_sum(&tlk_formula(&pair("-1 -1 2 2", &delta, 3)).unwrap()),
            8
        );
    }

    #[test]
    fn b_delta_matches_formula() {
        for (b, n) in [("2 2", 1i64), ("1 1 2 2", 2), ("-1 -1 2 2", 1), ("", 3)] {
            let b = w(b, 3);
            let short = tlk_b_delta(&b, n).unwrap();
            let p = CommutingPair::certify(b, full_twist(3, n).unwrap()).unwrap();
            assert_eq!(short, tlk_formula(&p).unwrap());
        }
    }

    #[test]
    fn b_delta_examples() {
        let t = tlk_b_delta(&w("2 2", 3), 2).unwrap();
        assert_eq!(t.get(1, 2, 3), 2);
        assert_eq!(
            tlk_b_delta(&w("1 1", 3), 0).unwrap(),
            TripleLinkingTensor::zero(3)
        );
        // n = 1 with b = A reproduces the base tensor.
        let t = tlk_b_delta(&w("1 1", 3), 1).unwrap();
        assert_eq!(t.get(3, 2, 1), 1);
        assert_eq!(t.get(1, 2, 3), -1);
    }

    #[test]
    fn bound_for_single_band() {
        let r = thm2_bound(&w("2 2", 3), 1).unwrap();
        assert_eq!((r.mu, r.nu, r.lower_bound), (1, 0, 4));
        assert_eq!(r.tlk_abs_sum, 4);
    }

    #[test]
    fn bound_with_overlap() {
        let r = thm2_bound(&w("1 1 2 2", 3), 1).unwrap();
        assert_eq!((r.mu, r.nu, r.lower_bound), (2, 1, 4));
        assert_eq!(r.nu_terms.get(&(1, 2, 3)), Some(&1));
    }

    #[test]
    fn bound_for_identity_is_zero() {
        let r = thm2_bound(&BraidWord::identity(3), 9).unwrap();
        assert_eq!((r.mu, r.nu, r.lower_bound), (0, 0, 0));
    }

    #[test]
    fn bound_alternating_family_has_zero_nu() {
        let r = thm2_bound(&w("-1 -1 2 2 -3 -3", 4), 1).unwrap();
        assert_eq!(r.nu, 0);
        assert_eq!(r.mu, 3);
        assert_eq!(r.lower_bound, 24);
    }

    #[test]
    fn bound_rejects_bad_inputs() {
        assert!(matches!(
            thm2_bound(&w("1", 3), 1),
            Err(InvariantError::NotPure { .. })
        ));
        assert!(matches!(
            thm2_bound(&w("1 1", 3), -1),
            Err(InvariantError::NegativeTwist { n: -1 })
        ));
    }

    #[test]
    fn formula_tensor_is_antisymmetric() {
        let delta2 = full_twist(3, 2).unwrap().print();
        for b in ["1 1", "2 2", "1 1 2 2", "-2 -2 1 1 1 1"] {
            let t = tlk_formula(&pair(b, &delta2, 3)).unwrap();
            assert!(t.is_antisymmetric());
        }
    }
}
