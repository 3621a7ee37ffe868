use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("presentation is not admissible: basis paths survive at length {max_len}")]
    NonAdmissible { max_len: usize },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("invalid algebra: {0}")]
    Validation(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("modules live over different algebras")]
    AlgebraMismatch,

    #[error("endomorphism algebra modulo radical looks like a division algebra of dimension {dim}")]
    DivisionAlgebraEnd { dim: usize },

    #[error("cocycle has the wrong shape: {0}")]
    CocycleMismatch(String),

    #[error("no almost split sequence found: {0}")]
    NotAlmostSplit(String),

    #[error("enumeration bound exceeded ({0}); finiteness undetermined")]
    EnumerationBound(String),

    #[error("radical powers did not stabilize within {max_power} steps")]
    PowerBound { max_power: usize },

    #[error("partition level {level} is empty while {remaining} objects remain")]
    EmptyLevelWithRemainder { level: usize, remaining: usize },

    #[error("cover failure: {0}")]
    CoverFailure(String),

    #[error("Ext^1(Delta({0}), Delta({0})) does not vanish")]
    NonVanishingSelfExt(usize),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}
