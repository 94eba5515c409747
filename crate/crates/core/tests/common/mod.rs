//! Shared corpus generators for the integration suites. All randomness is
//! seeded, so every run sees the same corpus.

use rand::rngs::StdRng;
use rand::Rng;
use trilink::{BraidWord, StructuredPair3};

pub fn random_word(rng: &mut StdRng, m: usize, len: usize) -> BraidWord {
    let letters: Vec<i64> = (0..len)
        .map(|_| {
            let idx = rng.random_range(1..m as i64);
            if rng.random_bool(0.5) {
                idx
            } else {
                -idx
            }
        })
        .collect();
    BraidWord::from_signed_slice(m, &letters).unwrap()
}

/// Rejection-samples a pure word of even length at most `max_len`.
pub fn random_pure_word(rng: &mut StdRng, m: usize, max_len: usize) -> BraidWord {
    loop {
        let len = 2 * rng.random_range(0..=max_len / 2);
        let word = random_word(rng, m, len);
        if word.is_pure() {
            return word;
        }
    }
}

/// The block `σ_i^{2(−1)^i}`: inverse squares at odd indices, squares at
/// even ones.
pub fn alternating_block(i: usize, m: usize) -> BraidWord {
    let v = if i.is_multiple_of(2) {
        i as i64
    } else {
        -(i as i64)
    };
    BraidWord::from_signed_slice(m, &[v, v]).unwrap()
}

/// A word built from alternating blocks: every index once, then random
/// repetitions, total length capped at `max_len`, in shuffled order.
pub fn alternating_family_word(rng: &mut StdRng, m: usize, max_len: usize) -> BraidWord {
    let mut indices: Vec<usize> = (1..m).collect();
    while 2 * (indices.len() + 1) <= max_len && rng.random_bool(0.6) {
        indices.push(rng.random_range(1..m));
    }
    // Fisher-Yates shuffle.
    for i in (1..indices.len()).rev() {
        let j = rng.random_range(0..=i);
        indices.swap(i, j);
    }
    let mut word = BraidWord::identity(m);
    for i in indices {
        word = word.compose(&alternating_block(i, m)).unwrap();
    }
    word
}

pub fn random_structured_pair(rng: &mut StdRng, max_exp: i64, max_wlen: usize) -> StructuredPair3 {
    let w = random_pure_word(rng, 3, max_wlen);
    let mut exp = || rng.random_range(-max_exp..=max_exp);
    StructuredPair3::new(w, exp(), exp(), exp(), exp()).unwrap()
}
