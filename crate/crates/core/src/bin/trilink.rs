//! Command-line front end. Every command prints one JSON document to stdout
//! (compact canonical by default, `--pretty` for indented) and communicates
//! failure through exit codes:
//!
//! * 0  ok
//! * 2  parse error (words, flags, malformed files)
//! * 3  violated precondition (non-pure word, m < 3, negative n, ...)
//! * 4  words do not commute
//! * 5  oracle disagreement between formula and sequence tensors
//! * 6  invalid sequence (inapplicable move, word_after or endpoint mismatch)

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use trilink::error::{ConstructError, InvariantError, PairError, SeqFileError, WordError};
use trilink::rewriting::{AuditOutcome, MoveReport};
use trilink::{
    full_twist, seq_b_delta_n, seq_structured3, thm2_bound, tlk_formula, tlk_from_sequence,
    triple_points, validate_sequence, BoundReport, BraidWord, CommutingPair, SequenceBundle,
    StructuredPair3, TripleLinkingTensor, TriplePointRecord,
};

#[derive(Parser)]
#[command(
    name = "trilink",
    version,
    about = "Triple linking numbers of torus-covering surface links from commuting pure braids"
)]
struct Cli {
    /// Pretty-print JSON output.
    #[arg(long, global = true, conflicts_with = "json")]
    pretty: bool,
    /// Compact canonical JSON output (the default).
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Linking matrix of a pure braid closure.
    Lk {
        /// Strand count.
        #[arg(long)]
        m: usize,
        /// Braid word: whitespace/comma-separated nonzero integers.
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Triple linking tensor of a commuting pair of pure braids.
    Tlk {
        #[arg(long)]
        m: usize,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Build the sequence b·Δⁿ → Δⁿ·b, extract its tensor, and check it
    /// against the closed formula.
    Oracle {
        #[arg(long)]
        m: usize,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long)]
        n: i64,
        /// Write the constructed sequence to a JSON Lines file.
        #[arg(long)]
        emit: Option<PathBuf>,
        /// Check braid equality of every intermediate word.
        #[arg(long)]
        audit: bool,
    },
    /// Replay and validate a JSON Lines sequence file.
    Verify {
        file: PathBuf,
        /// Check braid equality of every intermediate word.
        #[arg(long)]
        audit: bool,
    },
    /// Lower bound 4n(μ(m−2)−ν) for the triple point number of (b, Δⁿ).
    Bound {
        #[arg(long)]
        m: usize,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long)]
        n: i64,
    },
    /// Build a transformation sequence and emit it (twist family via
    /// --b/--n, structured three-strand family via --w/--k1/--l1/--k2/--l2).
    Sequence {
        #[arg(long)]
        m: usize,
        #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["w", "k1", "l1", "k2", "l2"], requires = "n")]
        b: Option<String>,
        #[arg(long)]
        n: Option<i64>,
        #[arg(long, allow_hyphen_values = true, requires_all = ["k1", "l1", "k2", "l2"])]
        w: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        k1: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        l1: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        k2: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        l2: Option<i64>,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
}

struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn new(code: i32, message: impl Into<String>) -> CliError {
        CliError {
            code,
            message: message.into(),
        }
    }
}

impl From<WordError> for CliError {
    fn from(e: WordError) -> CliError {
        CliError::new(2, e.to_string())
    }
}

impl From<PairError> for CliError {
    fn from(e: PairError) -> CliError {
        let code = match &e {
            PairError::Word(_) => 2,
            PairError::NotPure { .. } | PairError::NeedThreeStrands { .. } => 3,
            PairError::NonCommuting => 4,
        };
        CliError::new(code, e.to_string())
    }
}

impl From<InvariantError> for CliError {
    fn from(e: InvariantError) -> CliError {
        let code = match &e {
            InvariantError::Word(_) => 2,
            _ => 3,
        };
        CliError::new(code, e.to_string())
    }
}

impl From<ConstructError> for CliError {
    fn from(e: ConstructError) -> CliError {
        match e {
            ConstructError::Word(inner) => inner.into(),
            ConstructError::Pair(inner) => inner.into(),
            ConstructError::Rewrite(_) | ConstructError::Builder(_) => {
                CliError::new(1, e.to_string())
            }
            _ => CliError::new(3, e.to_string()),
        }
    }
}

impl From<SeqFileError> for CliError {
    fn from(e: SeqFileError) -> CliError {
        let code = match &e {
            SeqFileError::Io(_) | SeqFileError::Malformed { .. } | SeqFileError::Word(_) => 2,
            SeqFileError::BadMove { .. } | SeqFileError::ReplayMismatch { .. } => 6,
        };
        CliError::new(code, e.to_string())
    }
}

struct CmdOutput {
    stdout: String,
    code: i32,
}

fn render<T: Serialize>(value: &T, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(value).expect("serializable output")
    } else {
        serde_json::to_string(value).expect("serializable output")
    }
}

fn parse_pure(text: &str, m: usize) -> Result<BraidWord, CliError> {
    let word = BraidWord::parse(text, m)?;
    if !word.is_pure() {
        return Err(CliError::new(
            3,
            format!(
                "word {:?} is not pure: its strand permutation is nontrivial",
                word.print()
            ),
        ));
    }
    Ok(word)
}

#[derive(Serialize)]
struct OracleSummary {
    m: usize,
    n: i64,
    b: Vec<i64>,
    verdict: &'static str,
    r3_count: usize,
    formula_tensor: TripleLinkingTensor,
    sequence_tensor: TripleLinkingTensor,
    bound: BoundReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    audit: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    emitted: Option<String>,
}

#[derive(Serialize)]
struct VerifySummary {
    valid: bool,
    m: usize,
    start: Vec<i64>,
    endpoint: Vec<i64>,
    move_count: usize,
    r3_count: usize,
    audit: AuditOutcome,
    triple_points: Option<Vec<TriplePointRecord>>,
    moves: Vec<MoveReport>,
}

#[derive(Serialize)]
struct SequenceSummary {
    provenance: String,
    m: usize,
    start: Vec<i64>,
    target: Vec<i64>,
    move_count: usize,
    r3_count: usize,
    tensor: Option<TripleLinkingTensor>,
    #[serde(skip_serializing_if = "Option::is_none")]
    emitted: Option<String>,
}

fn emit_bundle(bundle: &SequenceBundle, path: &Path) -> Result<String, CliError> {
    trilink::seqfile::write_sequence_file(path, &bundle.seq)?;
    Ok(path.display().to_string())
}

fn run(cli: &Cli) -> Result<CmdOutput, CliError> {
    let pretty = cli.pretty;
    match &cli.command {
        Command::Lk { m, word } => {
            let word = parse_pure(word, *m)?;
            let matrix = trilink::linking_matrix(&word)?;
            Ok(CmdOutput {
                stdout: render(&matrix, pretty),
                code: 0,
            })
        }
        Command::Tlk { m, a, b } => {
            let a = parse_pure(a, *m)?;
            let b = parse_pure(b, *m)?;
            let pair = CommutingPair::certify(a, b)?;
            let tensor = tlk_formula(&pair)?;
            Ok(CmdOutput {
                stdout: render(&tensor, pretty),
                code: 0,
            })
        }
        Command::Oracle {
            m,
            b,
            n,
            emit,
            audit,
        } => {
            let b = parse_pure(b, *m)?;
            if *n < 0 {
                return Err(CliError::new(3, format!("n must be non-negative, got {n}")));
            }
            let bundle = seq_b_delta_n(&b, *n)?;
            let pair = CommutingPair::certify(b.clone(), full_twist(*m, *n)?)?;
            let formula = tlk_formula(&pair)?;
            let extracted = tlk_from_sequence(&bundle.seq, &bundle.target)
                .map_err(|e| CliError::new(6, e.to_string()))?;
            let audit_state = if *audit {
                let report = validate_sequence(&bundle.seq, &bundle.target, true);
                if !report.valid {
                    return Err(CliError::new(6, "constructed sequence failed its audit"));
                }
                Some("passed")
            } else {
                None
            };
            let mut bound = thm2_bound(&b, *n)?;
            bound.realized_r3_count = Some(bundle.r3_count);
            let agree = formula == extracted.tensor;
            let emitted = match emit {
                Some(path) => Some(emit_bundle(&bundle, path)?),
                None => None,
            };
            let summary = OracleSummary {
                m: *m,
                n: *n,
                b: b.to_signed_vec(),
                verdict: if agree { "agree" } else { "disagree" },
                r3_count: extracted.r3_count,
                formula_tensor: formula,
                sequence_tensor: extracted.tensor,
                bound,
                audit: audit_state,
                emitted,
            };
            Ok(CmdOutput {
                stdout: render(&summary, pretty),
                code: if agree { 0 } else { 5 },
            })
        }
        Command::Verify { file, audit } => {
            let seq = trilink::seqfile::read_sequence_file(file)?;
            let endpoint = seq
                .endpoint()
                .map_err(|e| CliError::new(6, e.to_string()))?;
            let report = validate_sequence(&seq, &endpoint, *audit);
            let points = if seq.start.is_pure() {
                Some(triple_points(&seq).map_err(|e| CliError::new(6, e.to_string()))?)
            } else {
                None
            };
            let valid = report.valid;
            let summary = VerifySummary {
                valid,
                m: seq.start.m(),
                start: seq.start.to_signed_vec(),
                endpoint: endpoint.to_signed_vec(),
                move_count: seq.moves.len(),
                r3_count: seq.r3_count(),
                audit: report.audit,
                triple_points: points,
                moves: report.moves,
            };
            Ok(CmdOutput {
                stdout: render(&summary, pretty),
                code: if valid { 0 } else { 6 },
            })
        }
        Command::Bound { m, b, n } => {
            let b = parse_pure(b, *m)?;
            let report = thm2_bound(&b, *n)?;
            Ok(CmdOutput {
                stdout: render(&report, pretty),
                code: 0,
            })
        }
        Command::Sequence {
            m,
            b,
            n,
            w,
            k1,
            l1,
            k2,
            l2,
            emit,
        } => {
            let bundle = match (b, w) {
                (Some(b), None) => {
                    let b = BraidWord::parse(b, *m)?;
                    let n = n.ok_or_else(|| CliError::new(2, "--n is required with --b"))?;
                    if n < 0 {
                        return Err(CliError::new(3, format!("n must be non-negative, got {n}")));
                    }
                    seq_b_delta_n(&b, n)?
                }
                (None, Some(w)) => {
                    if *m != 3 {
                        return Err(CliError::new(3, "structured pairs need --m 3"));
                    }
                    let w = BraidWord::parse(w, 3)?;
                    let p = StructuredPair3::new(
                        w,
                        k1.expect("required by clap"),
                        l1.expect("required by clap"),
                        k2.expect("required by clap"),
                        l2.expect("required by clap"),
                    )?;
                    seq_structured3(&p)?
                }
                _ => {
                    return Err(CliError::new(
                        2,
                        "pass either --b with --n, or --w with --k1/--l1/--k2/--l2",
                    ));
                }
            };
            let emitted = match emit {
                Some(path) => Some(emit_bundle(&bundle, path)?),
                None => None,
            };
            let summary = SequenceSummary {
                provenance: bundle.provenance.clone(),
                m: bundle.seq.start.m(),
                start: bundle.seq.start.to_signed_vec(),
                target: bundle.target.to_signed_vec(),
                move_count: bundle.seq.moves.len(),
                r3_count: bundle.r3_count,
                tensor: bundle.tensor.clone(),
                emitted,
            };
            Ok(CmdOutput {
                stdout: render(&summary, pretty),
                code: 0,
            })
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            println!("{}", out.stdout);
            std::process::exit(out.code);
        }
        Err(err) => {
            eprintln!("error: {}", err.message);
            std::process::exit(err.code);
        }
    }
}
