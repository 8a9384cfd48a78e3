use thiserror::Error;

use crate::verify::Collision;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid Pauli character {found:?} at position {position}")]
    Parse { position: usize, found: char },

    #[error("empty Pauli string")]
    EmptyPauli,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("operators {first} and {second} do not commute")]
    NonCommuting { first: usize, second: usize },

    #[error("generator {row} is dependent on the preceding generators")]
    Dependent { row: usize },

    #[error("operator {row} is not an element of the stabilizer")]
    NotStabilizer { row: usize },

    #[error("check set has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },

    #[error("generator {index} is neither X-type nor Z-type")]
    NotCss { index: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("enumeration of {faults} faults exceeds the cap of {cap}")]
    TooLarge { faults: u128, cap: u128 },

    #[error("distinct faults collide: {0}")]
    Collision(Box<Collision>),

    #[error("search failed after {attempts} attempts: {detail}")]
    SearchFailed { attempts: usize, detail: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub(crate) fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::Dimension { expected, found })
    }
}
