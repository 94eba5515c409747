//! C ABI over the trilink library.
//!
//! Handles are opaque pointers owned by this library; every constructor has
//! a matching `*_free`. Fallible calls return a [`TlStatus`] and write their
//! result through an out pointer, which is left untouched on failure. JSON
//! results use the same canonical layouts as the CLI. After any non-OK
//! status, [`tl_last_error`] returns a message for the current thread.
//!
//! The generated header lives at `include/trilink.h`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::path::Path;
use std::ptr;

use trilink::error::{InvariantError, PairError, SeqFileError};
use trilink::{
    full_twist, seq_b_delta_n, thm2_bound, tlk_formula, tlk_from_sequence, validate_sequence,
    BraidWord, CommutingPair,
};

/// Status code of a fallible call. Values match the CLI exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TlStatus {
    Ok = 0,
    /// A required pointer argument was null, or a string was not UTF-8.
    NullArgument = 1,
    /// Malformed input: word text, strand count, or sequence file syntax.
    Parse = 2,
    /// A precondition failed (non-pure word, m < 3, negative n, ...).
    Precondition = 3,
    /// The two words do not commute as braid-group elements.
    NonCommuting = 4,
    /// Formula and sequence tensors disagree.
    Disagreement = 5,
    /// A sequence move does not apply or recorded words do not replay.
    InvalidSequence = 6,
}

/// Opaque handle to a braid word.
pub struct TlWord {
    inner: BraidWord,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: &str) {
    let owned = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(owned));
}

fn clear_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

fn fail(status: TlStatus, message: &str) -> TlStatus {
    set_error(message);
    status
}

fn pair_status(e: &PairError) -> TlStatus {
    match e {
        PairError::Word(_) => TlStatus::Parse,
        PairError::NotPure { .. } | PairError::NeedThreeStrands { .. } => TlStatus::Precondition,
        PairError::NonCommuting => TlStatus::NonCommuting,
    }
}

fn invariant_status(e: &InvariantError) -> TlStatus {
    match e {
        InvariantError::Word(_) => TlStatus::Parse,
        _ => TlStatus::Precondition,
    }
}

fn seqfile_status(e: &SeqFileError) -> TlStatus {
    match e {
        SeqFileError::Io(_) | SeqFileError::Malformed { .. } | SeqFileError::Word(_) => {
            TlStatus::Parse
        }
        SeqFileError::BadMove { .. } | SeqFileError::ReplayMismatch { .. } => {
            TlStatus::InvalidSequence
        }
    }
}

/// # Safety
/// `word` must be null or a pointer previously returned by this library.
unsafe fn word_ref<'a>(word: *const TlWord) -> Option<&'a BraidWord> {
    word.as_ref().map(|w| &w.inner)
}

fn word_out(out: *mut *mut TlWord, word: BraidWord) -> TlStatus {
    if out.is_null() {
        return fail(TlStatus::NullArgument, "out pointer is null");
    }
    unsafe { *out = Box::into_raw(Box::new(TlWord { inner: word })) };
    clear_error();
    TlStatus::Ok
}

fn string_out(out: *mut *mut c_char, text: String) -> TlStatus {
    if out.is_null() {
        return fail(TlStatus::NullArgument, "out pointer is null");
    }
    let owned = match CString::new(text) {
        Ok(s) => s,
        Err(_) => return fail(TlStatus::NullArgument, "result contained a NUL byte"),
    };
    unsafe { *out = owned.into_raw() };
    clear_error();
    TlStatus::Ok
}

unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, TlStatus> {
    if text.is_null() {
        return Err(fail(TlStatus::NullArgument, "string argument is null"));
    }
    CStr::from_ptr(text)
        .to_str()
        .map_err(|_| fail(TlStatus::NullArgument, "string argument is not UTF-8"))
}

/// Parses a braid word from the text format (whitespace/comma-separated
/// nonzero integers) on `m` strands.
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tl_word_parse(
    m: u32,
    text: *const c_char,
    out: *mut *mut TlWord,
) -> TlStatus {
    let text = match read_str(text) {
        Ok(t) => t,
        Err(status) => return status,
    };
    match BraidWord::parse(text, m as usize) {
        Ok(word) => word_out(out, word),
        Err(e) => fail(TlStatus::Parse, &e.to_string()),
    }
}

/// Frees a word handle. Null is ignored.
///
/// # Safety
/// `word` must be null or a pointer returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tl_word_free(word: *mut TlWord) {
    if !word.is_null() {
        drop(Box::from_raw(word));
    }
}

/// Frees a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the most recent failure on this thread, or null. The caller
/// frees it with `tl_string_free`.
#[no_mangle]
pub extern "C" fn tl_last_error() -> *mut c_char {
    LAST_ERROR.with(|slot| match slot.borrow().as_ref() {
        Some(msg) => msg.clone().into_raw(),
        None => ptr::null_mut(),
    })
}

/// Strand count of a word, or 0 for null.
///
/// # Safety
/// `word` must be null or a valid handle.
#[no_mangle]
pub unsafe extern "C" fn tl_word_strands(word: *const TlWord) -> u32 {
    word_ref(word).map_or(0, |w| w.m() as u32)
}

/// Letter count of a word, or 0 for null.
///
/// # Safety
/// `word` must be null or a valid handle.
#[no_mangle]
pub unsafe extern "C" fn tl_word_len(word: *const TlWord) -> usize {
    word_ref(word).map_or(0, |w| w.len())
}

/// Renders a word in the text format.
///
/// # Safety
/// `word` must be a valid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tl_word_text(word: *const TlWord, out: *mut *mut c_char) -> TlStatus {
    match word_ref(word) {
        Some(w) => string_out(out, w.print()),
        None => fail(TlStatus::NullArgument, "word handle is null"),
    }
}

/// Writes whether the word is pure (identity strand permutation).
///
/// # Safety
/// `word` must be a valid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tl_word_is_pure(word: *const TlWord, out: *mut bool) -> TlStatus {
    let (Some(w), false) = (word_ref(word), out.is_null()) else {
        return fail(TlStatus::NullArgument, "null argument");
    };
    *out = w.is_pure();
    clear_error();
    TlStatus::Ok
}

/// Concatenation `a·b` (no cancellation).
///
/// # Safety
/// `a` and `b` must be valid handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tl_word_compose(
    a: *const TlWord,
    b: *const TlWord,
    out: *mut *mut TlWord,
) -> TlStatus {
    let (Some(a), Some(b)) = (word_ref(a), word_ref(b)) else {
        return fail(TlStatus::NullArgument, "word handle is null");
    };
    match a.compose(b) {
        Ok(word) => word_out(out, word),
        Err(e) => fail(TlStatus::Parse, &e.to_string()),
    }
}

/// The inverse word: letters reversed, signs flipped.
///
/// # Safety
/// `word` must be a valid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tl_word_inverse(word: *const TlWord, out: *mut *mut TlWord) -> TlStatus {
    match word_ref(word) {
        Some(w) => word_out(out, w.inverse()),
        None => fail(TlStatus::NullArgument, "word handle is null"),
    }
}

/// The full twist `Δ^n` on `m` strands.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tl_full_twist(m: u32, n: i64, out: *mut *mut TlWord) -> TlStatus {
    match full_twist(m as usize, n) {
        Ok(word) => word_out(out, word),
        Err(e) => fail(TlStatus::Parse, &e.to_string()),
    }
}

/// Writes whether two words represent the same braid (free-group action).
///
/// # Safety
/// `a` and `b` must be valid handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tl_words_equal(
    a: *const TlWord,
    b: *const TlWord,
    out: *mut bool,
) -> TlStatus {
    let (Some(a), Some(b)) = (word_ref(a), word_ref(b)) else {
        return fail(TlStatus::NullArgument, "word handle is null");
    };
    if out.is_null() {
        return fail(TlStatus::NullArgument, "out pointer is null");
    }
    if a.m() != b.m() {
        return fail(TlStatus::Precondition, "strand counts differ");
    }
    *out = trilink::braid_eq(a, b);
    clear_error();
    TlStatus::Ok
}

/// Writes whether `a·b = b·a` as braid-group elements.
///
/// # Safety
/// `a` and `b` must be valid handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tl_words_commute(
    a: *const TlWord,
    b: *const TlWord,
    out: *mut bool,
) -> TlStatus {
    let (Some(a), Some(b)) = (word_ref(a), word_ref(b)) else {
        return fail(TlStatus::NullArgument, "word handle is null");
    };
    if out.is_null() {
        return fail(TlStatus::NullArgument, "out pointer is null");
    }
    if a.m() != b.m() {
        return fail(TlStatus::Precondition, "strand counts differ");
    }
    *out = trilink::commutes(a, b);
    clear_error();
    TlStatus::Ok
}

/// Linking matrix of a pure braid closure as canonical JSON.
///
/// # Safety
/// `word` must be a valid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tl_linking_json(word: *const TlWord, out: *mut *mut c_char) -> TlStatus {
    let Some(w) = word_ref(word) else {
        return fail(TlStatus::NullArgument, "word handle is null");
    };
    match trilink::linking_matrix(w) {
        Ok(matrix) => string_out(out, serde_json::to_string(&matrix).expect("serializable")),
        Err(e) => fail(invariant_status(&e), &e.to_string()),
    }
}

/// Triple linking tensor of a commuting pure pair as canonical JSON.
///
/// # Safety
/// `a` and `b` must be valid handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tl_tlk_json(
    a: *const TlWord,
    b: *const TlWord,
    out: *mut *mut c_char,
) -> TlStatus {
    let (Some(a), Some(b)) = (word_ref(a), word_ref(b)) else {
        return fail(TlStatus::NullArgument, "word handle is null");
    };
    let pair = match CommutingPair::certify(a.clone(), b.clone()) {
        Ok(pair) => pair,
        Err(e) => return fail(pair_status(&e), &e.to_string()),
    };
    match tlk_formula(&pair) {
        Ok(tensor) => string_out(out, serde_json::to_string(&tensor).expect("serializable")),
        Err(e) => fail(invariant_status(&e), &e.to_string()),
    }
}

/// Bound report for the family `(b, Δ^n)` as canonical JSON.
///
/// # Safety
/// `b` must be a valid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tl_bound_json(
    b: *const TlWord,
    n: i64,
    out: *mut *mut c_char,
) -> TlStatus {
    let Some(b) = word_ref(b) else {
        return fail(TlStatus::NullArgument, "word handle is null");
    };
    match thm2_bound(b, n) {
        Ok(report) => string_out(out, serde_json::to_string(&report).expect("serializable")),
        Err(e) => fail(invariant_status(&e), &e.to_string()),
    }
}

/// Builds the sequence `b·Δ^n → Δ^n·b`, extracts its tensor, and compares it
/// with the closed formula. Writes `{"verdict", "r3_count", ...}` JSON and
/// returns `Disagreement` if the tensors differ.
///
/// # Safety
/// `b` must be a valid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tl_oracle_json(
    b: *const TlWord,
    n: i64,
    out: *mut *mut c_char,
) -> TlStatus {
    let Some(b) = word_ref(b) else {
        return fail(TlStatus::NullArgument, "word handle is null");
    };
    if !b.is_pure() {
        return fail(TlStatus::Precondition, "word is not pure");
    }
    if n < 0 {
        return fail(TlStatus::Precondition, "n must be non-negative");
    }
    let bundle = match seq_b_delta_n(b, n) {
        Ok(bundle) => bundle,
        Err(e) => return fail(TlStatus::Precondition, &e.to_string()),
    };
    let extracted = match tlk_from_sequence(&bundle.seq, &bundle.target) {
        Ok(t) => t,
        Err(e) => return fail(TlStatus::InvalidSequence, &e.to_string()),
    };
    let delta_n = full_twist(b.m(), n).expect("m >= 3");
    let pair = CommutingPair::certify(b.clone(), delta_n).expect("full twist is central");
    let formula = match tlk_formula(&pair) {
        Ok(t) => t,
        Err(e) => return fail(invariant_status(&e), &e.to_string()),
    };
    let agree = formula == extracted.tensor;
    #[derive(serde::Serialize)]
    struct OracleDoc {
        verdict: &'static str,
        r3_count: usize,
        formula_tensor: trilink::TripleLinkingTensor,
        sequence_tensor: trilink::TripleLinkingTensor,
    }
    let doc = OracleDoc {
        verdict: if agree { "agree" } else { "disagree" },
        r3_count: extracted.r3_count,
        formula_tensor: formula,
        sequence_tensor: extracted.tensor,
    };
    let status = string_out(out, serde_json::to_string(&doc).expect("serializable"));
    if status != TlStatus::Ok {
        return status;
    }
    if agree {
        TlStatus::Ok
    } else {
        fail(
            TlStatus::Disagreement,
            "formula and sequence tensors disagree",
        )
    }
}

/// Replays and validates a JSON Lines sequence file, writing the validation
/// report as JSON.
///
/// # Safety
/// `path` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tl_verify_json(
    path: *const c_char,
    audit: bool,
    out: *mut *mut c_char,
) -> TlStatus {
    let path = match read_str(path) {
        Ok(p) => p,
        Err(status) => return status,
    };
    let seq = match trilink::seqfile::read_sequence_file(Path::new(path)) {
        Ok(seq) => seq,
        Err(e) => return fail(seqfile_status(&e), &e.to_string()),
    };
    let endpoint = match seq.endpoint() {
        Ok(word) => word,
        Err(e) => return fail(TlStatus::InvalidSequence, &e.to_string()),
    };
    let report = validate_sequence(&seq, &endpoint, audit);
    let valid = report.valid;
    let status = string_out(out, serde_json::to_string(&report).expect("serializable"));
    if status != TlStatus::Ok {
        return status;
    }
    if valid {
        TlStatus::Ok
    } else {
        fail(TlStatus::InvalidSequence, "sequence failed validation")
    }
}
