//! Braid-word transformation sequences and triple-point extraction.
//!
//! Three move families connect words representing the same braid:
//!
//! 1. insertion or deletion of `σ_i σ_i^{-1}` / `σ_i^{-1} σ_i`,
//! 2. far commutation `σ_i σ_j → σ_j σ_i` with `|i−j| > 1`,
//! 3. Reidemeister III substitution `σ_i σ_j σ_i → σ_j σ_i σ_j` with
//!    `|i−j| = 1`, all-positive letters only.
//!
//! Each R3 move carries one signed, typed triple point. For a move rewriting
//! `w σ_i σ_j σ_i w'` at position `pos` (prefix `w`), the sign is `+1` when
//! `i < j` and `−1` when `i > j`; with `k = min(i, j)` and `τ` the strand
//! permutation of `w^{-1}`, the type is `(τ(k+2), τ(k+1), τ(k))` read as
//! (top, middle, bottom) component labels. Moves (1) and (2) carry none.

use serde::Serialize;

use crate::artin::artin_action;
use crate::error::RewriteError;
use crate::tensor::TripleLinkingTensor;
use crate::word::{BraidWord, Letter, Sign};

/// Order of the cancelling pair inserted by move (1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InsertOrder {
    /// `σ_i σ_i^{-1}`
    PosFirst,
    /// `σ_i^{-1} σ_i`
    NegFirst,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MoveKind {
    InsertPair { index: usize, order: InsertOrder },
    DeletePair,
    FarCommute,
    R3,
}

/// A single move at a 1-based letter position of the current word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Move {
    pub kind: MoveKind,
    pub pos: usize,
}

impl Move {
    pub fn insert(pos: usize, index: usize, order: InsertOrder) -> Move {
        Move {
            kind: MoveKind::InsertPair { index, order },
            pos,
        }
    }

    pub fn delete(pos: usize) -> Move {
        Move {
            kind: MoveKind::DeletePair,
            pos,
        }
    }

    pub fn commute(pos: usize) -> Move {
        Move {
            kind: MoveKind::FarCommute,
            pos,
        }
    }

    pub fn r3(pos: usize) -> Move {
        Move {
            kind: MoveKind::R3,
            pos,
        }
    }

    pub fn is_r3(&self) -> bool {
        matches!(self.kind, MoveKind::R3)
    }
}

/// Applies one move, returning the rewritten word.
pub fn apply_move(word: &BraidWord, mv: &Move) -> Result<BraidWord, RewriteError> {
    let len = word.len();
    let m = word.m();
    let pos = mv.pos;
    if pos == 0 {
        return Err(RewriteError::PositionOutOfRange { pos, len });
    }
    let mut out = word.clone();
    match mv.kind {
        MoveKind::InsertPair { index, order } => {
            if pos > len + 1 {
                return Err(RewriteError::PositionOutOfRange { pos, len });
            }
            if index == 0 || index >= m {
                return Err(RewriteError::PatternMismatch {
                    pos,
                    reason: format!("insert index {index} out of range for m = {m}"),
                });
            }
            let (first, second) = match order {
                InsertOrder::PosFirst => (Sign::Pos, Sign::Neg),
                InsertOrder::NegFirst => (Sign::Neg, Sign::Pos),
            };
            let letters = out.letters_mut();
            letters.insert(pos - 1, Letter::new(index, second));
            letters.insert(pos - 1, Letter::new(index, first));
        }
        MoveKind::DeletePair => {
            if pos + 1 > len {
                return Err(RewriteError::PositionOutOfRange { pos, len });
            }
            let a = word.letters()[pos - 1];
            let b = word.letters()[pos];
            if a.index != b.index || a.sign == b.sign {
                return Err(RewriteError::PatternMismatch {
                    pos,
                    reason: "letters are not a cancelling pair".into(),
                });
            }
            let letters = out.letters_mut();
            letters.drain(pos - 1..pos + 1);
        }
        MoveKind::FarCommute => {
            if pos + 1 > len {
                return Err(RewriteError::PositionOutOfRange { pos, len });
            }
            let a = word.letters()[pos - 1];
            let b = word.letters()[pos];
            if a.index.abs_diff(b.index) <= 1 {
                return Err(RewriteError::PatternMismatch {
                    pos,
                    reason: format!("indices {} and {} are not far apart", a.index, b.index),
                });
            }
            out.letters_mut().swap(pos - 1, pos);
        }
        MoveKind::R3 => {
            if pos + 2 > len {
                return Err(RewriteError::PositionOutOfRange { pos, len });
            }
            let a = word.letters()[pos - 1];
            let b = word.letters()[pos];
            let c = word.letters()[pos + 1];
            let all_positive = a.sign == Sign::Pos && b.sign == Sign::Pos && c.sign == Sign::Pos;
            if !all_positive || a.index != c.index || a.index.abs_diff(b.index) != 1 {
                return Err(RewriteError::PatternMismatch {
                    pos,
                    reason: "expected positive letters σi σj σi with |i−j| = 1".into(),
                });
            }
            let letters = out.letters_mut();
            letters[pos - 1] = b;
            letters[pos] = a;
            letters[pos + 1] = b;
        }
    }
    Ok(out)
}

/// A start word together with an ordered list of moves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformationSequence {
    pub start: BraidWord,
    pub moves: Vec<Move>,
}

impl TransformationSequence {
    pub fn new(start: BraidWord, moves: Vec<Move>) -> TransformationSequence {
        TransformationSequence { start, moves }
    }

    /// The chain of words visited: `chain[0]` is the start, `chain[k]` the
    /// word after move `k`.
    pub fn replay(&self) -> Result<Vec<BraidWord>, RewriteError> {
        let mut chain = Vec::with_capacity(self.moves.len() + 1);
        chain.push(self.start.clone());
        for mv in &self.moves {
            let next = apply_move(chain.last().unwrap(), mv)?;
            chain.push(next);
        }
        Ok(chain)
    }

    /// The final word, if every move applies.
    pub fn endpoint(&self) -> Result<BraidWord, RewriteError> {
        let mut word = self.start.clone();
        for mv in &self.moves {
            word = apply_move(&word, mv)?;
        }
        Ok(word)
    }

    pub fn r3_count(&self) -> usize {
        self.moves.iter().filter(|mv| mv.is_r3()).count()
    }
}

/// Inverts a valid sequence: the result runs from the endpoint back to the
/// start. Insertions become deletions and vice versa; far commutations and
/// R3 moves are self-dual at the same position.
pub fn reverse_sequence(
    seq: &TransformationSequence,
) -> Result<TransformationSequence, RewriteError> {
    let chain = seq.replay()?;
    let mut moves = Vec::with_capacity(seq.moves.len());
    for (k, mv) in seq.moves.iter().enumerate().rev() {
        let before = &chain[k];
        let inverse = match mv.kind {
            MoveKind::InsertPair { .. } => Move::delete(mv.pos),
            MoveKind::DeletePair => {
                let first = before.letters()[mv.pos - 1];
                let order = match first.sign {
                    Sign::Pos => InsertOrder::PosFirst,
                    Sign::Neg => InsertOrder::NegFirst,
                };
                Move::insert(mv.pos, first.index, order)
            }
            MoveKind::FarCommute => Move::commute(mv.pos),
            MoveKind::R3 => Move::r3(mv.pos),
        };
        moves.push(inverse);
    }
    Ok(TransformationSequence::new(
        chain.last().unwrap().clone(),
        moves,
    ))
}

/// Per-move outcome inside a validation report.
#[derive(Debug, Clone, Serialize)]
pub struct MoveReport {
    pub step: usize,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AuditOutcome {
    Skipped,
    Passed,
    FailedAtStep(usize),
}

/// Result of replaying a sequence against an expected endpoint.
#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub moves: Vec<MoveReport>,
    pub endpoint_matches: Option<bool>,
    pub audit: AuditOutcome,
}

/// Replays all moves, checking applicability of each, letter-exact equality
/// of the final word with `target`, and (optionally) braid equality of every
/// intermediate word with the start word under the free-group action.
pub fn validate_sequence(
    seq: &TransformationSequence,
    target: &BraidWord,
    audit: bool,
) -> ValidationReport {
    let mut reports = Vec::with_capacity(seq.moves.len());
    let mut word = seq.start.clone();
    let mut failed = false;
    for (k, mv) in seq.moves.iter().enumerate() {
        match apply_move(&word, mv) {
            Ok(next) => {
                reports.push(MoveReport {
                    step: k + 1,
                    ok: true,
                    error: None,
                });
                word = next;
            }
            Err(e) => {
                reports.push(MoveReport {
                    step: k + 1,
                    ok: false,
                    error: Some(e.to_string()),
                });
                failed = true;
                break;
            }
        }
    }
    let endpoint_matches = if failed { None } else { Some(&word == target) };

    let audit_outcome = if !audit || failed {
        AuditOutcome::Skipped
    } else {
        let reference = artin_action(&seq.start);
        let mut outcome = AuditOutcome::Passed;
        let mut current = seq.start.clone();
        for (k, mv) in seq.moves.iter().enumerate() {
            current = apply_move(&current, mv).expect("validated above");
            if artin_action(&current) != reference {
                outcome = AuditOutcome::FailedAtStep(k + 1);
                break;
            }
        }
        outcome
    };

    let valid = !failed
        && endpoint_matches == Some(true)
        && matches!(audit_outcome, AuditOutcome::Skipped | AuditOutcome::Passed);
    ValidationReport {
        valid,
        moves: reports,
        endpoint_matches,
        audit: audit_outcome,
    }
}

/// One signed, typed triple point contributed by an R3 move.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TriplePointRecord {
    pub sign: i64,
    /// (top, middle, bottom) component labels.
    #[serde(rename = "type")]
    pub triple: (usize, usize, usize),
    /// 1-based index of the move in the sequence.
    pub move_index: usize,
}

/// Extracts one record per R3 move. The records read component labels off
/// strand start positions, which is meaningful when the start word is pure;
/// for other sequences the extraction is formal.
pub fn triple_points(seq: &TransformationSequence) -> Result<Vec<TriplePointRecord>, RewriteError> {
    let mut records = Vec::new();
    let mut word = seq.start.clone();
    for (step, mv) in seq.moves.iter().enumerate() {
        if mv.is_r3() {
            let i = word.letters()[mv.pos - 1].index;
            let j = word.letters()[mv.pos].index;
            let sign = if i < j { 1 } else { -1 };
            let k = i.min(j);
            let prefix = BraidWord::from_letters(word.m(), word.letters()[..mv.pos - 1].to_vec())
                .expect("prefix of a valid word");
            let tau = prefix.permutation().inverse();
            records.push(TriplePointRecord {
                sign,
                triple: (tau.apply(k + 2), tau.apply(k + 1), tau.apply(k)),
                move_index: step + 1,
            });
        }
        word = apply_move(&word, mv)?;
    }
    Ok(records)
}

/// Tensor extracted from a sequence, plus the number of R3 moves that
/// produced it (an upper-bound datum for the triple point number).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceTensor {
    pub tensor: TripleLinkingTensor,
    pub r3_count: usize,
}

/// Per-type signed sums of the triple points of a sequence from `a·b` to
/// `b·a`. The endpoint is checked letter-exactly against `target`.
pub fn tlk_from_sequence(
    seq: &TransformationSequence,
    target: &BraidWord,
) -> Result<SequenceTensor, RewriteError> {
    if !seq.start.is_pure() {
        return Err(RewriteError::NonPureStart);
    }
    let endpoint = seq.endpoint()?;
    if &endpoint != target {
        return Err(RewriteError::EndpointMismatch);
    }
    let records = triple_points(seq)?;
    let mut tensor = TripleLinkingTensor::zero(seq.start.m());
    for r in &records {
        tensor.add(r.triple.0, r.triple.1, r.triple.2, r.sign);
    }
    Ok(SequenceTensor {
        tensor,
        r3_count: seq.r3_count(),
    })
}
