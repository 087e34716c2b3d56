//! Error and failure types shared across the crate.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Errors from constructors, parsers, and operations with checked
/// preconditions. Each variant names the violated invariant.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts not weakly decreasing: {parts:?}")]
    NonPartitionShape { parts: Vec<usize> },
    #[error("shape {inner} not contained in {outer}")]
    NotContained { inner: String, outer: String },
    #[error("alphabet [{two_n}] cannot hold {rows} rows")]
    AlphabetTooSmall { two_n: usize, rows: usize },
    #[error("alphabet bound must be a positive even integer, got {two_n}")]
    InvalidAlphabet { two_n: usize },
    #[error("alphabet mismatch: expected [{expected}], got [{got}]")]
    AlphabetMismatch { expected: usize, got: usize },
    #[error("mu has {rows} rows but n = {n}")]
    MuTooLong { rows: usize, n: usize },
    #[error("expected {want} row lines, got {got}")]
    RowCountMismatch { want: usize, got: usize },
    #[error("row {row} has {got} cells, lambda prescribes {want}")]
    RowLengthMismatch { row: usize, got: usize, want: usize },
    #[error("entry {entry} at row {row}, col {col} outside [0, {two_n}]")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        entry: usize,
        two_n: usize,
    },
    #[error("zero off mu at row {row}, col {col}")]
    ZeroOffMu { row: usize, col: usize },
    #[error("nonzero entry {entry} on mu at row {row}, col {col}")]
    NonzeroOnMu {
        row: usize,
        col: usize,
        entry: usize,
    },
    #[error("row not weakly increasing at row {row}, col {col}")]
    RowNotWeaklyIncreasing { row: usize, col: usize },
    #[error("column not strictly increasing at row {row}, col {col}")]
    ColumnNotStrictlyIncreasing { row: usize, col: usize },
    #[error("weight has {nu} cells but the skew shape has {skew}")]
    WeightSizeMismatch { nu: usize, skew: usize },
    #[error("chain members not nested at step {step}")]
    ChainNotNested { step: usize },
    #[error("chain step {step} is not a horizontal strip")]
    ChainStepNotHorizontal { step: usize },
    #[error("expected a straight shape (mu = -)")]
    SkewInput,
    #[error("reverse row word is not Yamanouchi")]
    NotLittlewoodRichardson,
    #[error("weight is not an even partition")]
    WeightNotEven,
    #[error("Littlewood regime requires n >= l(lambda): n = {n}, l(lambda) = {rows}")]
    NotLittlewoodRegime { n: usize, rows: usize },
    #[error("line {line}, col {col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },
}

/// A located refutation of one of the verified statements.
///
/// Checks return `Ok(None)` for "confirmed" and `Ok(Some(failure))` with
/// the first counterexample otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckFailure {
    pub clause: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub row: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub col: Option<usize>,
    pub detail: String,
}

impl CheckFailure {
    pub fn at(clause: &str, row: usize, col: usize, detail: String) -> Self {
        CheckFailure {
            clause: clause.to_owned(),
            row: Some(row),
            col: Some(col),
            detail,
        }
    }

    pub fn general(clause: &str, detail: String) -> Self {
        CheckFailure {
            clause: clause.to_owned(),
            row: None,
            col: None,
            detail,
        }
    }
}

impl fmt::Display for CheckFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.clause)?;
        if let (Some(r), Some(c)) = (self.row, self.col) {
            write!(f, " at row {r}, col {c}")?;
        }
        write!(f, ": {}", self.detail)
    }
}
