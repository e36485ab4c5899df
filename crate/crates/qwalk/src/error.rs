//! Error type shared by all walk operations.

use std::fmt;

/// Errors that can occur while constructing or evolving walk states.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Error {
    /// A coin matrix failed the unitarity check; carries the largest
    /// entrywise deviation of `U†U` from the identity.
    NonUnitary { deviation: f64 },
    /// A position lies outside the state's `[-n_max, n_max]` support.
    OutOfRange { position: i64, n_max: usize },
    /// A state or amplitude pair whose squared norm is not 1.
    NotNormalized { norm_sqr: f64 },
    /// A shift would move amplitude past `±n_max`; the array was sized
    /// too small for the requested number of steps.
    Overflow { n_max: usize },
    /// Two states that must share the same half-width do not.
    ExtentMismatch { expected: usize, found: usize },
    /// A probability entry is negative.
    NegativeProbability { value: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonUnitary { deviation } => {
                write!(
                    f,
                    "coin matrix is not unitary (max |U†U - I| = {deviation:e})"
                )
            }
            Error::OutOfRange { position, n_max } => {
                write!(f, "position {position} outside [-{n_max}, {n_max}]")
            }
            Error::NotNormalized { norm_sqr } => {
                write!(f, "state is not normalized (|ψ|² = {norm_sqr})")
            }
            Error::Overflow { n_max } => {
                write!(
                    f,
                    "shift would move amplitude past ±{n_max}; increase n_max"
                )
            }
            Error::ExtentMismatch { expected, found } => {
                write!(
                    f,
                    "half-width mismatch: expected n_max {expected}, found {found}"
                )
            }
            Error::NegativeProbability { value } => {
                write!(f, "negative probability entry {value}")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
