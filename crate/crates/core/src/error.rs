use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("unknown {kind} `{key}`")]
    UnknownKey { kind: &'static str, key: String },

    #[error("pole: denominator {denominator} vanishes at q = {q}")]
    Pole { denominator: String, q: String },

    #[error("domain error at term {index}: {reason}")]
    Domain { index: usize, reason: String },

    #[error("no image given for generator `{0}`")]
    MissingImage(String),

    #[error("matrix is not nilpotent by order {max_order}")]
    NotNilpotent { max_order: usize },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid presentation: {0}")]
    Presentation(String),

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("invalid parameter: {0}")]
    Parameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
