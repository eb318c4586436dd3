use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("pole: factor {0} vanishes identically")]
    Pole(String),

    #[error("series is not a unit: {0}")]
    NonUnit(String),

    #[error("degenerate specialization: {0}")]
    Degenerate(String),

    #[error("series involves the formal variable z: {0}")]
    NotPureQ(String),

    #[error("expansion would be unbounded below in q: {0}")]
    Unbounded(String),

    #[error("near pole at sample point: {0}")]
    NearPole(String),

    #[error("numeric evaluation did not converge: {0}")]
    NoConvergence(String),

    #[error("insufficient precision: needed order {needed}, got {got}")]
    Precision { needed: i64, got: i64 },

    #[error("unbound variable `{0}`")]
    Unbound(String),

    #[error("unsupported in exact arithmetic: {0}")]
    Unsupported(String),

    #[error("unknown identity id `{0}`")]
    UnknownId(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
