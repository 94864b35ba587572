//! Error types shared across the crate.

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Rejected inputs and invariant violations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("basis index {index} out of range for {n} qubits (dimension {dim})")]
    BasisIndexOutOfRange { index: usize, n: usize, dim: usize },

    #[error("qubit index {q} out of range for {n} qubits")]
    QubitOutOfRange { q: usize, n: usize },

    #[error("controlled-phase requires two distinct qubits, got ({i}, {j})")]
    IdenticalQubits { i: usize, j: usize },

    #[error("states have different qubit counts: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix is not unitary: max |U†U − I| entry = {deviation:.3e}")]
    NotUnitary { deviation: f64 },

    #[error("register must have at least {min} qubits, got {n}")]
    TooFewQubits { n: usize, min: usize },

    #[error("run already completed {total} steps; cannot step further")]
    RunCompleted { total: usize },

    #[error("record times must be sorted, unique, and within 0..={total}: {reason}")]
    InvalidRecordTimes { total: usize, reason: String },

    #[error("grid oracle supports at most {max} qubits, got {n}")]
    OracleTooLarge { n: usize, max: usize },

    #[error("{what} requires at least {min} points, got {got}")]
    NotEnoughPoints {
        what: &'static str,
        min: usize,
        got: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
