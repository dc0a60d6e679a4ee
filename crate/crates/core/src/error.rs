use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("invalid element for tract {tract}: {detail}")]
    InvalidElement { tract: String, detail: String },

    #[error("unknown tract identifier `{0}`")]
    UnknownTract(String),

    #[error("unknown homomorphism `{0}`")]
    UnknownHom(String),

    #[error("tract mismatch: {0} vs {1}")]
    TractMismatch(String, String),

    #[error("ground set mismatch: {0} vs {1}")]
    GroundSetMismatch(usize, usize),

    #[error("ground set of size {0} is out of range (1..=16)")]
    GroundSetSize(usize),

    #[error("arity mismatch: expected {expected}, got {got}")]
    Arity { expected: usize, got: usize },

    #[error("zero vector where a nonzero vector is required")]
    ZeroVector,

    #[error("not a matroid: {0}")]
    NotAMatroid(String),

    #[error("{0} is not a basis")]
    NotABasis(String),

    #[error("element {0} already lies in the basis")]
    ElementInBasis(usize),

    #[error("{0} is not a circuit")]
    NotACircuit(String),

    #[error("inconsistent Grassmann-Plucker ratios: {0}")]
    Inconsistent(String),

    #[error("circuit set is not representable by a Grassmann-Plucker function: {0}")]
    NotRepresentable(String),

    #[error("unsupported scale: {0}")]
    UnsupportedScale(String),

    #[error("strategy unavailable: {0}")]
    StrategyUnavailable(String),

    #[error("strategies disagree: {0}")]
    StrategyDisagreement(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
