//! Builders of explicit transformation sequences.
//!
//! The primitive is a sequence sliding one generator past one full twist,
//! `σ_i^{±1} Δ^{±1} → Δ^{±1} σ_i^{±1}`, costing exactly `2(m−2)` R3 moves.
//! For a positive letter and positive twist it is assembled from two
//! fragments:
//!
//! * slide: `σ_j (σ_1 ⋯ σ_{m−1}) → (σ_1 ⋯ σ_{m−1}) σ_{j−1}`, one R3;
//! * wrap:  `σ_1 (σ_1 ⋯ σ_{m−1})² → (σ_1 ⋯ σ_{m−1})² σ_{m−1}`, `m−2` R3s;
//!
//! applied `(i−1)` times, once, and `(m−i−1)` times. Inverse letters and
//! inverse twists are routed through a conjugation idiom — insert a
//! cancelling pair, replay the reversed positive sequence on the inner
//! window, delete the leftover pair — because R3 is positive-only. Reversal
//! preserves the R3 count and flips every triple-point sign.
//!
//! On top of the primitive: `seq_b_delta_n` realizes `b·Δ^n → Δ^n·b`, and
//! `seq_structured3` realizes `a·b → b·a` for structured pairs
//! `a = Δ^{k1} w^{l1}`, `b = Δ^{k2} w^{l2}` on three strands.

use crate::error::ConstructError;
use crate::pair::StructuredPair3;
use crate::rewriting::{
    apply_move, reverse_sequence, tlk_from_sequence, InsertOrder, Move, TransformationSequence,
};
use crate::tensor::TripleLinkingTensor;
use crate::word::{full_twist, twist_block, BraidWord, Letter, Sign};

/// A built sequence with its declared target and extracted data.
#[derive(Debug, Clone)]
pub struct SequenceBundle {
    pub seq: TransformationSequence,
    /// Declared endpoint; the replayed sequence ends at exactly this word.
    pub target: BraidWord,
    pub r3_count: usize,
    /// Extracted tensor; present only when the start word is pure.
    pub tensor: Option<TripleLinkingTensor>,
    /// Which builder produced this bundle.
    pub provenance: String,
}

/// Incrementally applies pushed moves so positions are always checked
/// against the live word.
struct SeqBuilder {
    start: BraidWord,
    current: BraidWord,
    moves: Vec<Move>,
}

impl SeqBuilder {
    fn new(start: BraidWord) -> SeqBuilder {
        SeqBuilder {
            current: start.clone(),
            start,
            moves: Vec::new(),
        }
    }

    fn push(&mut self, mv: Move) -> Result<(), ConstructError> {
        self.current = apply_move(&self.current, &mv)?;
        self.moves.push(mv);
        Ok(())
    }

    fn push_offset(&mut self, moves: &[Move], offset: usize) -> Result<(), ConstructError> {
        for mv in moves {
            self.push(Move {
                kind: mv.kind,
                pos: mv.pos + offset,
            })?;
        }
        Ok(())
    }

    fn finish(
        self,
        target: BraidWord,
        provenance: String,
    ) -> Result<SequenceBundle, ConstructError> {
        assert_eq!(
            self.current, target,
            "builder `{provenance}` ended at a different word than its target"
        );
        let seq = TransformationSequence::new(self.start, self.moves);
        let r3_count = seq.r3_count();
        let tensor = if seq.start.is_pure() {
            Some(tlk_from_sequence(&seq, &target)?.tensor)
        } else {
            None
        };
        Ok(SequenceBundle {
            seq,
            target,
            r3_count,
            tensor,
            provenance,
        })
    }
}

fn insert_order(sign: Sign) -> InsertOrder {
    match sign {
        Sign::Pos => InsertOrder::PosFirst,
        Sign::Neg => InsertOrder::NegFirst,
    }
}

/// Far-commutation moves (local positions) turning `window` into `target`,
/// assuming the two are equal in the partially commutative monoid where
/// letters commute iff their indices differ by more than one.
fn commutation_moves(window: &[Letter], target: &[Letter]) -> Result<Vec<Move>, ConstructError> {
    if window.len() != target.len() {
        return Err(ConstructError::Builder(
            "far-commutation sort: length mismatch".into(),
        ));
    }
    let mut cur = window.to_vec();
    let mut moves = Vec::new();
    for p in 0..cur.len() {
        if cur[p] == target[p] {
            continue;
        }
        // The wanted letter is the first occurrence of its index; everything
        // before it must commute with it or the words are not equivalent.
        let mut found = None;
        for q in p + 1..cur.len() {
            if cur[q].index == target[p].index {
                if (p..q).all(|r| cur[r].index.abs_diff(cur[q].index) > 1) {
                    found = Some(q);
                }
                break;
            }
        }
        let q = found.ok_or_else(|| {
            ConstructError::Builder(format!("far-commutation sort stuck at position {}", p + 1))
        })?;
        if cur[q].sign != target[p].sign {
            return Err(ConstructError::Builder(
                "far-commutation sort: sign mismatch".into(),
            ));
        }
        for r in (p..q).rev() {
            moves.push(Move::commute(r + 1));
            cur.swap(r, r + 1);
        }
    }
    if cur != target {
        return Err(ConstructError::Builder(
            "far-commutation sort failed".into(),
        ));
    }
    Ok(moves)
}

/// Local move list for `σ_j (σ_1 ⋯ σ_{m−1}) → (σ_1 ⋯ σ_{m−1}) σ_{j−1}`:
/// far commutes around exactly one R3.
fn slide_moves(j: usize, m: usize) -> Vec<Move> {
    let mut moves = Vec::with_capacity(m - 1);
    for p in 1..=j.saturating_sub(2) {
        moves.push(Move::commute(p));
    }
    moves.push(Move::r3(j - 1));
    for p in j + 1..=m - 1 {
        moves.push(Move::commute(p));
    }
    moves
}

fn slide_start(j: usize, m: usize) -> BraidWord {
    let head = BraidWord::from_letters(m, vec![Letter::new(j, Sign::Pos)]).expect("valid letter");
    head.compose(&twist_block(m)).expect("same m")
}

fn slide_target(j: usize, m: usize) -> BraidWord {
    let tail =
        BraidWord::from_letters(m, vec![Letter::new(j - 1, Sign::Pos)]).expect("valid letter");
    twist_block(m).compose(&tail).expect("same m")
}

/// Local move list for `σ_1 (σ_1 ⋯ σ_{m−1})² → (σ_1 ⋯ σ_{m−1})² σ_{m−1}`:
/// a cascade of `m−2` R3 moves between two far-commutation rearrangements.
fn wrap_moves(m: usize) -> Result<Vec<Move>, ConstructError> {
    let start = wrap_start(m);

    // σ_1 · σ_1 · (σ_2 σ_1)(σ_3 σ_2) ⋯ (σ_{m−1} σ_{m−2}) · σ_{m−1}
    let mut staged = vec![Letter::new(1, Sign::Pos), Letter::new(1, Sign::Pos)];
    for k in 1..=m - 2 {
        staged.push(Letter::new(k + 1, Sign::Pos));
        staged.push(Letter::new(k, Sign::Pos));
    }
    staged.push(Letter::new(m - 1, Sign::Pos));

    let mut moves = commutation_moves(start.letters(), &staged)?;
    let mut cur = staged;
    for k in 1..=m - 2 {
        let pos = 2 * k;
        let (a, b) = (cur[pos - 1], cur[pos]);
        cur[pos - 1] = b;
        cur[pos] = a;
        cur[pos + 1] = b;
        moves.push(Move::r3(pos));
    }
    moves.extend(commutation_moves(&cur, wrap_target(m).letters())?);
    Ok(moves)
}

fn wrap_start(m: usize) -> BraidWord {
    let head = BraidWord::from_letters(m, vec![Letter::new(1, Sign::Pos)]).expect("valid letter");
    head.compose(&twist_block(m).power(2)).expect("same m")
}

fn wrap_target(m: usize) -> BraidWord {
    let tail =
        BraidWord::from_letters(m, vec![Letter::new(m - 1, Sign::Pos)]).expect("valid letter");
    twist_block(m).power(2).compose(&tail).expect("same m")
}

/// Replays `moves` from `start` and returns the inverted move list.
fn reversed_moves(start: &BraidWord, moves: &[Move]) -> Result<Vec<Move>, ConstructError> {
    let seq = TransformationSequence::new(start.clone(), moves.to_vec());
    Ok(reverse_sequence(&seq)?.moves)
}

/// Local move list for the window `σ_i^{sign} Δ^{twist} → Δ^{twist} σ_i^{sign}`
/// with `twist ∈ {+1, −1}`; always exactly `2(m−2)` R3 moves.
fn cross_moves(i: usize, sign: Sign, twist: Sign, m: usize) -> Result<Vec<Move>, ConstructError> {
    let n = m * (m - 1);
    match (sign, twist) {
        (Sign::Pos, Sign::Pos) => {
            let block = m - 1;
            let mut moves = Vec::new();
            let mut offset = 0;
            let mut j = i;
            for _ in 0..i - 1 {
                for mv in slide_moves(j, m) {
                    moves.push(Move {
                        kind: mv.kind,
                        pos: mv.pos + offset,
                    });
                }
                offset += block;
                j -= 1;
            }
            for mv in wrap_moves(m)? {
                moves.push(Move {
                    kind: mv.kind,
                    pos: mv.pos + offset,
                });
            }
            offset += 2 * block;
            j = m - 1;
            for _ in 0..m - 1 - i {
                for mv in slide_moves(j, m) {
                    moves.push(Move {
                        kind: mv.kind,
                        pos: mv.pos + offset,
                    });
                }
                offset += block;
                j -= 1;
            }
            Ok(moves)
        }
        (Sign::Neg, Sign::Pos) => {
            // σ_i^{-1} Δ → σ_i^{-1} Δ σ_i σ_i^{-1} → σ_i^{-1} σ_i Δ σ_i^{-1} → Δ σ_i^{-1}
            let forward = cross_moves(i, Sign::Pos, Sign::Pos, m)?;
            let fwd_start = sigma_word(i, Sign::Pos, m).compose(&full_twist(m, 1)?)?;
            let rev = reversed_moves(&fwd_start, &forward)?;
            let mut moves = vec![Move::insert(n + 2, i, InsertOrder::PosFirst)];
            for mv in rev {
                moves.push(Move {
                    kind: mv.kind,
                    pos: mv.pos + 1,
                });
            }
            moves.push(Move::delete(1));
            Ok(moves)
        }
        (s, Sign::Neg) => {
            // σ_i^ε Δ^{-1} → Δ^{-1} Δ σ_i^ε Δ^{-1} → Δ^{-1} σ_i^ε Δ Δ^{-1} → Δ^{-1} σ_i^ε
            let forward = cross_moves(i, s, Sign::Pos, m)?;
            let fwd_start = sigma_word(i, s, m).compose(&full_twist(m, 1)?)?;
            let rev = reversed_moves(&fwd_start, &forward)?;
            let delta = full_twist(m, 1)?;
            let mut moves = Vec::new();
            for t in 1..=n {
                let letter = delta.letters()[n - t];
                moves.push(Move::insert(t, letter.index, InsertOrder::NegFirst));
            }
            for mv in rev {
                moves.push(Move {
                    kind: mv.kind,
                    pos: mv.pos + n,
                });
            }
            for s in 0..n {
                moves.push(Move::delete(2 * n + 1 - s));
            }
            Ok(moves)
        }
    }
}

fn sigma_word(i: usize, sign: Sign, m: usize) -> BraidWord {
    BraidWord::from_letters(m, vec![Letter::new(i, sign)]).expect("valid letter")
}

/// Local move list for `u · Δ^{count} → Δ^{count} · u`, sliding the letters
/// of `u` rightward one twist at a time, last letter first.
fn letters_past_twists_moves(u: &BraidWord, count: i64) -> Result<Vec<Move>, ConstructError> {
    let m = u.m();
    let n = m * (m - 1);
    let twist_sign = if count >= 0 { Sign::Pos } else { Sign::Neg };
    let reps = count.unsigned_abs() as usize;
    let mut moves = Vec::new();
    for j in (1..=u.len()).rev() {
        let letter = u.letters()[j - 1];
        for s in 0..reps {
            let local = cross_moves(letter.index, letter.sign, twist_sign, m)?;
            let offset = (j - 1) + s * n;
            for mv in local {
                moves.push(Move {
                    kind: mv.kind,
                    pos: mv.pos + offset,
                });
            }
        }
    }
    Ok(moves)
}

/// Sequence `σ_j (σ_1 ⋯ σ_{m−1}) → (σ_1 ⋯ σ_{m−1}) σ_{j−1}` with one R3.
pub fn seq_slide(j: usize, m: usize) -> Result<SequenceBundle, ConstructError> {
    if m < 3 {
        return Err(ConstructError::NeedThreeStrands { m });
    }
    if !(2..=m - 1).contains(&j) {
        return Err(ConstructError::SlideIndexOutOfRange { j, m });
    }
    let mut builder = SeqBuilder::new(slide_start(j, m));
    for mv in slide_moves(j, m) {
        builder.push(mv)?;
    }
    builder.finish(slide_target(j, m), format!("slide(j={j}, m={m})"))
}

/// Sequence `σ_1 (σ_1 ⋯ σ_{m−1})² → (σ_1 ⋯ σ_{m−1})² σ_{m−1}` with `m−2` R3s.
pub fn seq_wrap(m: usize) -> Result<SequenceBundle, ConstructError> {
    if m < 3 {
        return Err(ConstructError::NeedThreeStrands { m });
    }
    let mut builder = SeqBuilder::new(wrap_start(m));
    for mv in wrap_moves(m)? {
        builder.push(mv)?;
    }
    let bundle = builder.finish(wrap_target(m), format!("wrap(m={m})"))?;
    debug_assert_eq!(bundle.r3_count, m - 2);
    Ok(bundle)
}

/// Sequence `σ_i^{±1} Δ → Δ σ_i^{±1}` with exactly `2(m−2)` R3 moves.
pub fn seq_sigma_past_delta(
    i: usize,
    sign: Sign,
    m: usize,
) -> Result<SequenceBundle, ConstructError> {
    if m < 3 {
        return Err(ConstructError::NeedThreeStrands { m });
    }
    if !(1..=m - 1).contains(&i) {
        return Err(ConstructError::IndexOutOfRange { index: i, m });
    }
    let delta = full_twist(m, 1)?;
    let start = sigma_word(i, sign, m).compose(&delta)?;
    let target = delta.compose(&sigma_word(i, sign, m))?;
    let mut builder = SeqBuilder::new(start);
    for mv in cross_moves(i, sign, Sign::Pos, m)? {
        builder.push(mv)?;
    }
    let sign_txt = if sign == Sign::Pos { "+1" } else { "-1" };
    let bundle = builder.finish(
        target,
        format!("sigma_past_delta(i={i}, sign={sign_txt}, m={m})"),
    )?;
    debug_assert_eq!(bundle.r3_count, 2 * (m - 2));
    Ok(bundle)
}

/// Sequence `b · Δ^n → Δ^n · b` with `2(m−2)·n·len(b)` R3 moves. The tensor
/// is extracted when `b` is pure.
pub fn seq_b_delta_n(b: &BraidWord, n: i64) -> Result<SequenceBundle, ConstructError> {
    let m = b.m();
    if m < 3 {
        return Err(ConstructError::NeedThreeStrands { m });
    }
    if n < 0 {
        return Err(ConstructError::NegativeTwist { n });
    }
    let delta_n = full_twist(m, n)?;
    let start = b.compose(&delta_n)?;
    let target = delta_n.compose(b)?;
    let mut builder = SeqBuilder::new(start);
    builder.push_offset(&letters_past_twists_moves(b, n)?, 0)?;
    let bundle = builder.finish(target, format!("b_delta_n(m={m}, n={n}, len={})", b.len()))?;
    debug_assert_eq!(bundle.r3_count, 2 * (m - 2) * n as usize * b.len());
    Ok(bundle)
}

/// Sequence `a·b → b·a` for a structured pair `a = Δ^{k1} w^{l1}`,
/// `b = Δ^{k2} w^{l2}` on three strands. The twist blocks cross the `w`
/// blocks letter by letter; when `k1, k2` (or `l1, l2`) have opposite signs
/// the regrouping between the two phases is bridged by explicit pair
/// insertions and deletions, which contribute no R3 moves.
pub fn seq_structured3(p: &StructuredPair3) -> Result<SequenceBundle, ConstructError> {
    let m = 3usize;
    let n = m * (m - 1);
    let w_l1 = p.w.power(p.l1);
    let w_l2 = p.w.power(p.l2);
    let a_word = p.a_word();
    let b_word = p.b_word();
    let start = a_word.compose(&b_word)?;
    let target = b_word.compose(&a_word)?;

    let mut builder = SeqBuilder::new(start);

    // Phase 1: Δ^{k1} (w^{l1} Δ^{k2}) w^{l2} → Δ^{k1} (Δ^{k2} w^{l1}) w^{l2}
    let base = p.k1.unsigned_abs() as usize * n;
    builder.push_offset(&letters_past_twists_moves(&w_l1, p.k2)?, base)?;

    // Regroup Δ^{k1} Δ^{k2} → Δ^{k2} Δ^{k1} and w^{l1} w^{l2} → w^{l2} w^{l1};
    // only opposite-sign exponents differ as words.
    if p.k1 * p.k2 < 0 {
        bridge_opposite(&mut builder, 0, &full_twist(m, 1)?, p.k1, p.k2)?;
    }
    if p.l1 * p.l2 < 0 {
        let w_offset = (p.k1.unsigned_abs() + p.k2.unsigned_abs()) as usize * n;
        bridge_opposite(&mut builder, w_offset, &p.w, p.l1, p.l2)?;
    }

    // Phase 2: Δ^{k2} (Δ^{k1} w^{l2}) w^{l1} → Δ^{k2} (w^{l2} Δ^{k1}) w^{l1},
    // the reverse of sliding w^{l2} past Δ^{k1}.
    let f_moves = letters_past_twists_moves(&w_l2, p.k1)?;
    let f_start = w_l2.compose(&full_twist(m, p.k1)?)?;
    let rev = reversed_moves(&f_start, &f_moves)?;
    builder.push_offset(&rev, p.k2.unsigned_abs() as usize * n)?;

    builder.finish(
        target,
        format!(
            "structured3(w={:?}, k1={}, l1={}, k2={}, l2={})",
            p.w.print(),
            p.k1,
            p.l1,
            p.k2,
            p.l2
        ),
    )
}

/// Bridges `X^{k1} X^{k2} → X^{k2} X^{k1}` (as words) for opposite-sign
/// exponents: delete the cancelling copies at the inner boundary, then
/// insert them back on the other side.
fn bridge_opposite(
    builder: &mut SeqBuilder,
    offset: usize,
    block: &BraidWord,
    k1: i64,
    k2: i64,
) -> Result<(), ConstructError> {
    debug_assert!(k1 * k2 < 0);
    let r = block.len();
    let c = k1.unsigned_abs().min(k2.unsigned_abs()) as usize;
    let boundary = k1.unsigned_abs() as usize * r;
    for d in 0..c * r {
        builder.push(Move::delete(offset + boundary - d))?;
    }
    // W·W^{-1} with W = c copies of the k2-signed block, inserted after the
    // surviving left part of X^{k2}.
    let signed = block.power(k2.signum());
    let left = (k2.unsigned_abs() as usize - c) * r;
    let mut t = 0;
    for _ in 0..c {
        for letter in signed.letters() {
            t += 1;
            builder.push(Move::insert(
                offset + left + t,
                letter.index,
                insert_order(letter.sign),
            ))?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::tlk_formula;
    use crate::pair::expand_structured;
    use crate::rewriting::validate_sequence;

    fn w(text: &str, m: usize) -> BraidWord {
        BraidWord::parse(text, m).unwrap()
    }

    fn check(bundle: &SequenceBundle) {
        let report = validate_sequence(&bundle.seq, &bundle.target, true);
        assert!(report.valid, "{}: {report:?}", bundle.provenance);
    }

    #[test]
    fn slide_small() {
        let b = seq_slide(2, 3).unwrap();
        assert_eq!(b.seq.start, w("2 1 2", 3));
        assert_eq!(b.target, w("1 2 1", 3));
        assert_eq!(b.r3_count, 1);
        check(&b);
    }

    #[test]
    fn slide_wider() {
        let b = seq_slide(2, 5).unwrap();
        assert_eq!(b.r3_count, 1);
        check(&b);
        let b = seq_slide(4, 5).unwrap();
        assert_eq!(b.r3_count, 1);
        check(&b);
    }

    #[test]
    fn slide_rejects_j_one() {
        assert!(matches!(
            seq_slide(1, 3),
            Err(ConstructError::SlideIndexOutOfRange { j: 1, m: 3 })
        ));
    }

    #[test]
    fn wrap_counts() {
        for m in 3..=6 {
            let b = seq_wrap(m).unwrap();
            assert_eq!(b.r3_count, m - 2, "m = {m}");
            check(&b);
        }
        let b = seq_wrap(6).unwrap();
        assert_eq!(b.target, wrap_target(6));
    }

    #[test]
    fn sigma_past_delta_counts() {
        let b = seq_sigma_past_delta(1, Sign::Pos, 3).unwrap();
        assert_eq!(b.r3_count, 2);
        check(&b);
        let b = seq_sigma_past_delta(2, Sign::Pos, 5).unwrap();
        assert_eq!(b.r3_count, 6);
        check(&b);
    }

    #[test]
    fn sigma_past_delta_negative_letter() {
        let b = seq_sigma_past_delta(1, Sign::Neg, 3).unwrap();
        assert_eq!(b.r3_count, 2);
        assert_eq!(
            b.target,
            full_twist(3, 1).unwrap().compose(&w("-1", 3)).unwrap()
        );
        check(&b);
    }

    #[test]
    fn sigma_past_delta_all_indices() {
        for m in 3..=5 {
            for i in 1..m {
                for sign in [Sign::Pos, Sign::Neg] {
                    let b = seq_sigma_past_delta(i, sign, m).unwrap();
                    assert_eq!(b.r3_count, 2 * (m - 2), "i={i} m={m}");
                    check(&b);
                }
            }
        }
    }

    #[test]
    fn b_delta_n_base_case() {
        let b = seq_b_delta_n(&w("2 2", 3), 1).unwrap();
        assert_eq!(b.r3_count, 4);
        check(&b);
        let tensor = b.tensor.unwrap();
        assert_eq!(tensor.abs_sum(), 4);
    }

    #[test]
    fn b_delta_n_identity_or_zero_twists() {
        let b = seq_b_delta_n(&BraidWord::identity(4), 5).unwrap();
        assert!(b.seq.moves.is_empty());
        assert_eq!(b.tensor.unwrap(), TripleLinkingTensor::zero(4));
        let b = seq_b_delta_n(&w("1 1 2 2", 3), 0).unwrap();
        assert!(b.seq.moves.is_empty());
    }

    #[test]
    fn b_delta_n_mixed_signs() {
        let b = seq_b_delta_n(&w("-1 -1 2 2", 3), 1).unwrap();
        assert_eq!(b.r3_count, 8);
        check(&b);
        assert_eq!(b.tensor.unwrap().abs_sum(), 8);
    }

    #[test]
    fn b_delta_n_rejects_negative_n() {
        assert!(matches!(
            seq_b_delta_n(&w("1 1", 3), -1),
            Err(ConstructError::NegativeTwist { n: -1 })
        ));
    }

    #[test]
    fn b_delta_n_matches_formula_tensor() {
        for (b_txt, n) in [("2 2", 1i64), ("1 1", 1), ("-1 -1 2 2", 1), ("1 1 2 2", 2)] {
            let b = w(b_txt, 3);
            let bundle = seq_b_delta_n(&b, n).unwrap();
            check(&bundle);
            let pair = crate::pair::CommutingPair::certify(b, full_twist(3, n).unwrap()).unwrap();
            assert_eq!(
                bundle.tensor.unwrap(),
                tlk_formula(&pair).unwrap(),
                "b={b_txt} n={n}"
            );
        }
    }

    #[test]
    fn structured3_base_instance() {
        // (A, Δ): four triple points, tensor matches the base case.
        let p = StructuredPair3::new(w("1 1", 3), 0, 1, 1, 0).unwrap();
        let bundle = seq_structured3(&p).unwrap();
        assert_eq!(bundle.r3_count, 4);
        check(&bundle);
        let tensor = bundle.tensor.unwrap();
        assert_eq!(tensor.get(3, 2, 1), 1);
        assert_eq!(tensor.get(3, 1, 2), 1);
        assert_eq!(tensor.get(1, 2, 3), -1);
        assert_eq!(tensor.get(2, 1, 3), -1);
    }

    #[test]
    fn structured3_trivial_a() {
        let p = StructuredPair3::new(w("1 1 2 2", 3), 0, 0, 2, 1).unwrap();
        let bundle = seq_structured3(&p).unwrap();
        assert!(bundle.seq.moves.is_empty());
        assert_eq!(bundle.tensor.unwrap(), TripleLinkingTensor::zero(3));
    }

    #[test]
    fn structured3_matches_formula() {
        let cases = [
            ("1 1", 0, 1, 1, 0),
            ("1 1", 1, 0, 1, 1),
            ("1 1 2 2", 1, 1, 0, 2),
            ("2 2", 1, 2, 2, 1),
            ("1 1 2 2", 1, -1, 0, 2),
            ("1 1", -1, 2, 1, -2),
            ("2 1 1 -2", 2, 1, -1, 3),
        ];
        for (w_txt, k1, l1, k2, l2) in cases {
            let p = StructuredPair3::new(w(w_txt, 3), k1, l1, k2, l2).unwrap();
            let bundle = seq_structured3(&p).unwrap();
            check(&bundle);
            let pair = expand_structured(&p).unwrap();
            assert_eq!(
                bundle.tensor.clone().unwrap(),
                tlk_formula(&pair).unwrap(),
                "case w={w_txt} k1={k1} l1={l1} k2={k2} l2={l2}"
            );
        }
    }

    #[test]
    fn reversal_negates_extracted_tensor() {
        let bundle = seq_b_delta_n(&w("1 1 2 2", 3), 1).unwrap();
        let rev = reverse_sequence(&bundle.seq).unwrap();
        let back = tlk_from_sequence(&rev, &bundle.seq.start).unwrap();
        assert_eq!(back.tensor, bundle.tensor.unwrap().neg());
        assert_eq!(back.r3_count, bundle.r3_count);
    }
}
