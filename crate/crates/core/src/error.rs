use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("not a morphism: {0}")]
    NotAMorphism(String),
    #[error("window exceeded: {0}")]
    WindowExceeded(String),
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("parameter mismatch: {0}")]
    ParameterMismatch(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("degenerate pairing")]
    DegeneratePairing,
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown atom `{atom}` at offset {offset} for this algebra")]
    UnknownAtom { atom: String, offset: usize },
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
