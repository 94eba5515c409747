//! Triple linking numbers and triple-point bounds of torus-covering surface
//! links determined by commuting pure braids.
//!
//! Two independent computation paths are provided and must agree exactly:
//!
//! * a closed formula over pairwise linking numbers of the braid closures
//!   ([`invariants::tlk_formula`]), and
//! * explicit braid-word transformation sequences whose Reidemeister III
//!   moves yield signed, typed triple points
//!   ([`constructions`], [`rewriting::tlk_from_sequence`]).
//!
//! Everything is exact integer arithmetic; all values are immutable after
//! construction and every operation is a pure function, so the whole crate
//! is safe to drive from multiple threads.

pub mod artin;
pub mod constructions;
pub mod error;
pub mod invariants;
pub mod linking;
pub mod pair;
pub mod perm;
pub mod rewriting;
pub mod seqfile;
pub mod tensor;
pub mod word;

pub use artin::{artin_is_identity, braid_eq, commutes};
pub use constructions::{
    seq_b_delta_n, seq_sigma_past_delta, seq_slide, seq_structured3, seq_wrap, SequenceBundle,
};
pub use invariants::{thm2_bound, tlk_abs_sum, tlk_b_delta, tlk_formula, BoundReport};
pub use linking::{linking_matrix, LinkingMatrix};
pub use pair::{expand_structured, CommutingPair, StructuredPair3};
pub use perm::Permutation;
pub use rewriting::{
    apply_move, reverse_sequence, tlk_from_sequence, triple_points, validate_sequence, InsertOrder,
    Move, MoveKind, TransformationSequence, TriplePointRecord, ValidationReport,
};
pub use tensor::TripleLinkingTensor;
pub use word::{full_twist, BraidWord, Letter, Sign};
