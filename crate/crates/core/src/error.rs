use thiserror::Error;

/// Errors raised by the series kernels and the geometric pipelines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series variables differ: `{left}` vs `{right}`")]
    VariableMismatch { left: String, right: String },

    #[error("series exponent shifts differ: {left} vs {right}")]
    ShiftMismatch { left: String, right: String },

    #[error("{op}: series must have exponent shift 0, found {shift}")]
    NonzeroShift { op: &'static str, shift: String },

    #[error("{op}: constant term {constant} is not a unit")]
    NonUnitConstant { op: &'static str, constant: String },

    #[error("{op}: constant term must be 1, found {constant}")]
    ConstantNotOne { op: &'static str, constant: String },

    #[error("bivariate series is not square: {x_order} x-orders vs {t_order} t-orders")]
    NotSquare { x_order: usize, t_order: usize },

    #[error("unknown surface `{0}`")]
    UnknownSurface(String),

    #[error("inconsistent surface invariants: {0}")]
    InconsistentSurface(String),

    #[error("rank must be at least 2, got {0}")]
    RankTooSmall(i64),

    #[error("exponent {exponent} is not an integer at the requested point")]
    NonIntegralExponent { exponent: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
