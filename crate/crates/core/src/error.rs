use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("alphabet must hold between 2 and {max} distinct symbols, got {got}")]
    AlphabetSize { got: usize, max: usize },
    #[error("alphabet symbol {0:?} appears more than once")]
    DuplicateSymbol(char),
    #[error("no input strings")]
    EmptyInput,
    #[error("input strings must be non-empty")]
    EmptyString,
    #[error("string {row} has length {found}, expected {expected}")]
    LengthMismatch {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("symbol {ch:?} at string {row}, position {col} is not in the alphabet")]
    InvalidSymbol { row: usize, col: usize, ch: char },
    #[error("distance {d} outside [0, {len}]")]
    DistanceOutOfRange { d: usize, len: usize },
    #[error("invalid bound interval [{low}, {high}] for length {len}")]
    InvalidBounds { low: usize, high: usize, len: usize },
    #[error("domain for position {0} is empty or outside the alphabet")]
    InvalidDomain(usize),
    #[error("operation expects {expected} mode")]
    ModeMismatch { expected: &'static str },
    #[error("invalid frontier: {0}")]
    InvalidFrontier(String),
    #[error("instance is infeasible at distance {0}")]
    Infeasible(usize),
}
