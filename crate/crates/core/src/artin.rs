//! Exact word problem via the faithful action on a free group.
//!
//! A braid on `m` strands acts on the free group `F_m = ⟨x_1, …, x_m⟩` by
//! `σ_i: x_i ↦ x_i x_{i+1} x_i^{-1}, x_{i+1} ↦ x_i`, other generators fixed.
//! The action is faithful, so two words are equal as braids iff they act the
//! same on every generator. Images are kept freely reduced at every step.

use crate::word::{BraidWord, Sign};

/// A freely reduced word in `x_1, …, x_m`: nonzero signed generator indices.
type FreeWord = Vec<i32>;

fn push_reduced(out: &mut FreeWord, g: i32) {
    if out.last() == Some(&-g) {
        out.pop();
    } else {
        out.push(g);
    }
}

fn extend_reduced(out: &mut FreeWord, word: &[i32]) {
    for &g in word {
        push_reduced(out, g);
    }
}

fn extend_reduced_inverse(out: &mut FreeWord, word: &[i32]) {
    for &g in word.iter().rev() {
        push_reduced(out, -g);
    }
}

/// Images of `x_1, …, x_m` under the automorphism induced by `word`.
pub fn artin_action(word: &BraidWord) -> Vec<FreeWord> {
    let m = word.m();
    let mut table: Vec<FreeWord> = (1..=m as i32).map(|j| vec![j]).collect();
    for letter in word.letters() {
        let i = letter.index - 1;
        match letter.sign {
            Sign::Pos => {
                // x_i ↦ T[i]·T[i+1]·T[i]^{-1}, x_{i+1} ↦ T[i]
                let mut conj = Vec::with_capacity(2 * table[i].len() + table[i + 1].len());
                extend_reduced(&mut conj, &table[i]);
                extend_reduced(&mut conj, &table[i + 1]);
                extend_reduced_inverse(&mut conj, &table[i]);
                table[i + 1] = std::mem::replace(&mut table[i], conj);
            }
            Sign::Neg => {
                // x_i ↦ T[i+1], x_{i+1} ↦ T[i+1]^{-1}·T[i]·T[i+1]
                let mut conj = Vec::with_capacity(2 * table[i + 1].len() + table[i].len());
                extend_reduced_inverse(&mut conj, &table[i + 1]);
                extend_reduced(&mut conj, &table[i]);
                extend_reduced(&mut conj, &table[i + 1]);
                table[i] = std::mem::replace(&mut table[i + 1], conj);
            }
        }
    }
    table
}

/// True iff `word` represents the identity braid.
pub fn artin_is_identity(word: &BraidWord) -> bool {
    artin_action(word)
        .iter()
        .enumerate()
        .all(|(j, image)| image.len() == 1 && image[0] == j as i32 + 1)
}

/// True iff `u` and `v` represent the same braid. Both words must share `m`;
/// the induced automorphisms are compared directly.
pub fn braid_eq(u: &BraidWord, v: &BraidWord) -> bool {
    u.m() == v.m() && artin_action(u) == artin_action(v)
}

/// True iff `a·b = b·a` as braid-group elements.
pub fn commutes(a: &BraidWord, b: &BraidWord) -> bool {
    assert_eq!(a.m(), b.m(), "commutes requires equal strand counts");
    let ab = a.compose(b).expect("same m");
    let ba = b.compose(a).expect("same m");
    braid_eq(&ab, &ba)
}
