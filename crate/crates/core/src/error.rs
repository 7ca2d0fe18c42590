use thiserror::Error;

use crate::system::LatticePoint;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid system (n={n}, D={d}): {reason}")]
    InvalidSystem { n: i64, d: i64, reason: &'static str },

    #[error("integer overflow in lattice arithmetic")]
    Overflow,

    #[error("digit {digit} at position {position} is outside 0..{n}")]
    DigitOutOfRange { digit: i64, position: usize, n: i64 },

    #[error("negative exponent offset {0}; integer digit strings need offset >= 0")]
    NegativeOffset(i32),

    #[error("reduction from {start} did not reach a fixed point (cycle or iteration cap after {steps} steps)")]
    Cycle { start: LatticePoint, steps: usize },

    #[error("{0}")]
    Domain(String),

    #[error("chain violation: {0}")]
    Chain(String),

    #[error("set of {points} lattice points is not 6-connected")]
    Disconnected { points: usize },

    #[error("power iteration did not converge after {0} iterations")]
    NonConvergence(usize),

    #[error("{what} needs {points} points, above the enumeration limit {limit}; use sampling mode")]
    Guard { what: &'static str, points: u128, limit: u128 },
}
