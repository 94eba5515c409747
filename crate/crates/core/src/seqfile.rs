//! JSON Lines sequence files.
//!
//! Line 1 is the header `{"m": int, "start": [ints]}` with letters in the
//! signed-integer form. Every following line is one move:
//!
//! ```text
//! {"step": int, "kind": "insert"|"delete"|"commute"|"r3", "pos": int,
//!  "params": {...}, "word_after": [ints]}
//! ```
//!
//! Insert moves carry `{"index": k, "order": "+-"|"-+"}` in `params` (the
//! order of the cancelling pair); other kinds carry `{}`. On read, each move
//! is replayed and must reproduce `word_after` exactly or the file is
//! rejected.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::SeqFileError;
use crate::rewriting::{apply_move, InsertOrder, Move, MoveKind, TransformationSequence};
use crate::word::BraidWord;

#[derive(Serialize, Deserialize)]
struct HeaderLine {
    m: usize,
    start: Vec<i64>,
}

#[derive(Serialize, Deserialize, Default)]
struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    index: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    order: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct MoveLine {
    step: usize,
    kind: String,
    pos: usize,
    params: Params,
    word_after: Vec<i64>,
}

fn kind_name(kind: &MoveKind) -> &'static str {
    match kind {
        MoveKind::InsertPair { .. } => "insert",
        MoveKind::DeletePair => "delete",
        MoveKind::FarCommute => "commute",
        MoveKind::R3 => "r3",
    }
}

fn order_token(order: InsertOrder) -> &'static str {
    match order {
        InsertOrder::PosFirst => "+-",
        InsertOrder::NegFirst => "-+",
    }
}

/// Renders a sequence to the JSON Lines format, replaying it to fill in
/// every `word_after`.
pub fn write_sequence(seq: &TransformationSequence) -> Result<String, SeqFileError> {
    let chain = seq
        .replay()
        .map_err(|e| SeqFileError::BadMove { line: 0, source: e })?;
    let header = HeaderLine {
        m: seq.start.m(),
        start: seq.start.to_signed_vec(),
    };
    let mut out = serde_json::to_string(&header).expect("header serializes");
    out.push('\n');
    for (k, mv) in seq.moves.iter().enumerate() {
        let params = match mv.kind {
            MoveKind::InsertPair { index, order } => Params {
                index: Some(index),
                order: Some(order_token(order).to_string()),
            },
            _ => Params::default(),
        };
        let line = MoveLine {
            step: k + 1,
            kind: kind_name(&mv.kind).to_string(),
            pos: mv.pos,
            params,
            word_after: chain[k + 1].to_signed_vec(),
        };
        out.push_str(&serde_json::to_string(&line).expect("move serializes"));
        out.push('\n');
    }
    Ok(out)
}

/// Parses and replays a JSON Lines sequence file, rejecting it unless every
/// move applies and reproduces its recorded `word_after`.
pub fn read_sequence(text: &str) -> Result<TransformationSequence, SeqFileError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (header_idx, header_line) = lines.next().ok_or(SeqFileError::Malformed {
        line: 1,
        reason: "empty file".into(),
    })?;
    let header: HeaderLine =
        serde_json::from_str(header_line).map_err(|e| SeqFileError::Malformed {
            line: header_idx + 1,
            reason: e.to_string(),
        })?;
    let start = BraidWord::from_signed_slice(header.m, &header.start)?;

    let mut word = start.clone();
    let mut moves = Vec::new();
    let mut expected_step = 0usize;
    for (idx, line) in lines {
        let line_no = idx + 1;
        let parsed: MoveLine = serde_json::from_str(line).map_err(|e| SeqFileError::Malformed {
            line: line_no,
            reason: e.to_string(),
        })?;
        expected_step += 1;
        if parsed.step != expected_step {
            return Err(SeqFileError::Malformed {
                line: line_no,
                reason: format!("expected step {expected_step}, found {}", parsed.step),
            });
        }
        let kind = match parsed.kind.as_str() {
            "insert" => {
                let index = parsed.index_param(line_no)?;
                let order = match parsed.params.order.as_deref() {
                    Some("+-") => InsertOrder::PosFirst,
                    Some("-+") => InsertOrder::NegFirst,
                    other => {
                        return Err(SeqFileError::Malformed {
                            line: line_no,
                            reason: format!(
                                "bad insert order {other:?}, expected \"+-\" or \"-+\""
                            ),
                        })
                    }
                };
                MoveKind::InsertPair { index, order }
            }
            "delete" => MoveKind::DeletePair,
            "commute" => MoveKind::FarCommute,
            "r3" => MoveKind::R3,
            other => {
                return Err(SeqFileError::Malformed {
                    line: line_no,
                    reason: format!("unknown move kind {other:?}"),
                })
            }
        };
        let mv = Move {
            kind,
            pos: parsed.pos,
        };
        word = apply_move(&word, &mv).map_err(|e| SeqFileError::BadMove {
            line: line_no,
            source: e,
        })?;
        let recorded = BraidWord::from_signed_slice(header.m, &parsed.word_after)?;
        if recorded != word {
            return Err(SeqFileError::ReplayMismatch { line: line_no });
        }
        moves.push(mv);
    }
    Ok(TransformationSequence::new(start, moves))
}

impl MoveLine {
    fn index_param(&self, line_no: usize) -> Result<usize, SeqFileError> {
        self.params.index.ok_or_else(|| SeqFileError::Malformed {
            line: line_no,
            reason: "insert move is missing params.index".into(),
        })
    }
}

pub fn write_sequence_file(path: &Path, seq: &TransformationSequence) -> Result<(), SeqFileError> {
    fs::write(path, write_sequence(seq)?)?;
    Ok(())
}

pub fn read_sequence_file(path: &Path) -> Result<TransformationSequence, SeqFileError> {
    read_sequence(&fs::read_to_string(path)?)
}
