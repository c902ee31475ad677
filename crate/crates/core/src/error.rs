use std::fmt;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, DprtError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DprtError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("N must be prime (got {0})")]
    NotPrime(usize),

    #[error("pixel ({row}, {col}) = {value} does not fit in {bits} bits")]
    PixelOutOfRange {
        row: usize,
        col: usize,
        value: u64,
        bits: u32,
    },

    #[error("coefficient R({m}, {d}) = {value} exceeds the bound {bound}")]
    CoefficientOutOfRange {
        m: usize,
        d: usize,
        value: u64,
        bound: u64,
    },

    #[error("invalid radon array: {0}")]
    InvalidRadonArray(InvalidReason),
}

/// Why a sinogram cannot be the DPRT of any `B`-bit image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvalidReason {
    /// Projection `m` does not carry the same total mass as projection 0.
    MassMismatch { m: usize, expected: u64, found: u64 },
    /// The backprojected sum at `(row, col)` is smaller than the total sum.
    Negative { row: usize, col: usize },
    /// Division by `N` at `(row, col)` leaves a remainder.
    NotDivisible {
        row: usize,
        col: usize,
        remainder: u64,
    },
    /// The reconstructed pixel does not fit in the declared width.
    Overflow {
        row: usize,
        col: usize,
        value: u64,
        bits: u32,
    },
}

impl fmt::Display for InvalidReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvalidReason::MassMismatch { m, expected, found } => write!(
                f,
                "projection {m} sums to {found}, projection 0 sums to {expected}"
            ),
            InvalidReason::Negative { row, col } => {
                write!(f, "backprojection at ({row}, {col}) is below the total sum")
            }
            InvalidReason::NotDivisible {
                row,
                col,
                remainder,
            } => write!(
                f,
                "backprojection at ({row}, {col}) leaves remainder {remainder} modulo N"
            ),
            InvalidReason::Overflow {
                row,
                col,
                value,
                bits,
            } => write!(f, "pixel ({row}, {col}) = {value} needs more than {bits} bits"),
        }
    }
}

impl DprtError {
    pub(crate) fn invalid(reason: InvalidReason) -> Self {
        DprtError::InvalidRadonArray(reason)
    }
}
