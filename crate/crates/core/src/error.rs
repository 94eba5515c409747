//! Error types, one enum per subsystem.

use thiserror::Error;

/// Construction and parsing failures for braid words.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("generator index {index} is out of range for {m} strands (need 1..={})", m.saturating_sub(1))]
    IndexOutOfRange { index: usize, m: usize },
    #[error("zero is not a valid generator token")]
    ZeroToken,
    #[error("malformed token {token:?}: expected a nonzero integer")]
    MalformedToken { token: String },
    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("braid words need at least two strands, got m = {m}")]
    TooFewStrands { m: usize },
    #[error("permutation map is not a bijection")]
    NotABijection,
}

/// Certification failures for commuting pairs.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum PairError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("word is not pure: {word:?} has a nontrivial strand permutation")]
    NotPure { word: String },
    #[error("words do not commute as braid-group elements")]
    NonCommuting,
    #[error("structured pairs are defined on exactly three strands, got m = {m}")]
    NeedThreeStrands { m: usize },
}

/// Failures while applying or replaying transformation moves.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum RewriteError {
    #[error("move position {pos} is out of range for a word of length {len}")]
    PositionOutOfRange { pos: usize, len: usize },
    #[error("move pattern does not match at position {pos}: {reason}")]
    PatternMismatch { pos: usize, reason: String },
    #[error("sequence start word is not pure; triple points need strand components")]
    NonPureStart,
    #[error("sequence endpoint does not match the expected target word")]
    EndpointMismatch,
    #[error(transparent)]
    Word(#[from] WordError),
}

/// Failures in closed-form invariant computations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum InvariantError {
    #[error("word is not pure: {word:?}")]
    NotPure { word: String },
    #[error("twist exponent must be non-negative, got n = {n}")]
    NegativeTwist { n: i64 },
    #[error("need at least three strands, got m = {m}")]
    NeedThreeStrands { m: usize },
    #[error(transparent)]
    Word(#[from] WordError),
}

/// Failures in sequence builders.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructError {
    #[error("slide fragment needs 2 <= j <= m-1, got j = {j} for m = {m}")]
    SlideIndexOutOfRange { j: usize, m: usize },
    #[error("need at least three strands, got m = {m}")]
    NeedThreeStrands { m: usize },
    #[error("generator index {index} is out of range for m = {m}")]
    IndexOutOfRange { index: usize, m: usize },
    #[error("twist exponent must be non-negative, got n = {n}")]
    NegativeTwist { n: i64 },
    #[error("internal builder invariant broken: {0}")]
    Builder(String),
    #[error(transparent)]
    Pair(#[from] PairError),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// Failures reading or replaying sequence files.
#[derive(Debug, Error)]
pub enum SeqFileError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: replay produced a different word than word_after")]
    ReplayMismatch { line: usize },
    #[error("line {line}: move does not apply: {source}")]
    BadMove { line: usize, source: RewriteError },
    #[error(transparent)]
    Word(#[from] WordError),
}
