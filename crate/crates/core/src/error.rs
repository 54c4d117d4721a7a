use thiserror::Error;

/// Errors raised anywhere in the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("matrix is singular")]
    Singular,

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("type {letter}{rank} is not an admissible simple type")]
    InadmissibleType { letter: char, rank: usize },

    #[error("lattice basis is singular")]
    SingularLatticeBasis,

    #[error("weight {weight} is not in the character lattice")]
    NotInLattice { weight: String },

    #[error("weight {weight} is not dominant")]
    NotDominant { weight: String },

    #[error("{what} exceeds the guard cap ({size} > {cap})")]
    GuardExceeded { what: &'static str, size: u128, cap: u128 },

    #[error("empty representation: {0}")]
    EmptyRepresentation(&'static str),

    #[error("invalid simple-root subset: {0}")]
    InvalidSubset(String),

    #[error("empty support: a vector needs at least one nonzero coefficient")]
    EmptySupport,

    #[error("{0}")]
    Unsupported(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub fn guard(what: &'static str, size: impl Into<u128>, cap: impl Into<u128>) -> Self {
        Error::GuardExceeded { what, size: size.into(), cap: cap.into() }
    }

    pub fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }

    pub fn is_guard(&self) -> bool {
        matches!(self, Error::GuardExceeded { .. })
    }

    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
