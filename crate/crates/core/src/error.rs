use thiserror::Error;

/// Errors surfaced by construction and verification routines.
///
/// Verification *failures* are not errors: suites record them in a
/// [`crate::report::CheckReport`]. An `Error` means a precondition was
/// violated or an exact operation is impossible (a genuine pole, a
/// non-nilpotent series argument, an inexact division).
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    /// The reduced rational function has a pole at q = 1. For contraction
    /// this signals that the expected singularity cancellation failed; the
    /// offending matrix entry is reported when known.
    #[error("pole at q = 1{}", coords(.row, .col))]
    PoleAtOne { row: Option<usize>, col: Option<usize> },

    #[error("matrix is not nilpotent within {dim} steps")]
    NotNilpotent { dim: usize },

    #[error("graded commutator requires declared operator parities")]
    UndeclaredParity,

    #[error("exact division failed: {0}")]
    DivisibilityFailure(String),

    #[error("invalid N = {0}: need N >= 2")]
    InvalidN(u8),

    #[error("unknown generator {0}")]
    UnknownGenerator(String),

    #[error("coproduct of {0} is not in solvable triangular form")]
    NotSolvable(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

fn coords(row: &Option<usize>, col: &Option<usize>) -> String {
    match (row, col) {
        (Some(r), Some(c)) => format!(" at entry ({r}, {c})"),
        _ => String::new(),
    }
}

pub type Result<T> = std::result::Result<T, Error>;
