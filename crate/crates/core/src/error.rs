use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("no root system of type {family} with rank {rank}")]
    IllegalTypeRank { family: char, rank: usize },
    #[error("vector is not in the root lattice")]
    NotInSpan,
    #[error("vector is not a root")]
    NotARoot,
    #[error("unknown real form `{0}`")]
    UnknownForm(String),
    #[error("bad parameters for {form}: {reason}")]
    BadParams { form: String, reason: String },
    #[error("conjugation check failed: {0}")]
    SChamberViolation(String),
    #[error("index {0} is not a simple root")]
    NotSimple(usize),
    #[error("root is outside Q ∩ σ(Q⁻ⁿ)")]
    NotInCriticalSet,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("psi is not contained in phi")]
    NotNested,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("cannot read {path}: {reason}")]
    Io { path: String, reason: String },
}
