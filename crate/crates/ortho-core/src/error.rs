//! Crate-wide error type.

use std::fmt;

/// Errors produced by lattice, product, and operator computations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Operands that must share a space or shape do not.
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },
    /// The instance lies outside the representable class.
    Unsupported(String),
    /// A computation that relies on the product axioms was asked to run on a
    /// product that has not passed verification.
    UnverifiedProduct,
    /// An exact enumeration would exceed its configured bound.
    BoundExceeded {
        what: &'static str,
        dim: usize,
        bound: usize,
    },
    /// Malformed input text (rationals or instance files).
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch {
                context,
                expected,
                found,
            } => write!(
                f,
                "dimension mismatch in {context}: expected {expected}, found {found}"
            ),
            Error::Unsupported(msg) => write!(f, "unsupported instance: {msg}"),
            Error::UnverifiedProduct => {
                write!(f, "product has not been verified; run verification first")
            }
            Error::BoundExceeded { what, dim, bound } => write!(
                f,
                "{what} refused: dimension {dim} exceeds the enumeration bound {bound}"
            ),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
