use thiserror::Error;

use crate::rational::ParseRationalError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseRationalError),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("problem has no rows or no parameters")]
    EmptyProblem,

    /// Column numbers are 1-based.
    #[error("column {column} of X is identically zero; drop the parameter before solving")]
    ZeroColumn { column: usize },

    #[error("empty box for parameter {level}: lower {lower} exceeds upper {upper}")]
    EmptyBox {
        level: usize,
        lower: String,
        upper: String,
    },

    #[error(
        "selected value {value} for parameter {level} lies outside its box [{lower}, {upper}]"
    )]
    OutsideBox {
        level: usize,
        value: String,
        lower: String,
        upper: String,
    },

    #[error("residual certificate failed: residual {residual} differs from minimum {mu}")]
    CertificateFailed { residual: String, mu: String },

    #[error("closed form not applicable: {0}")]
    ClosedForm(&'static str),

    #[error("complexity bound undefined: {0}")]
    Bound(String),

    #[error("instance too large for vertex enumeration ({parameters} parameters, {rows} rows)")]
    GuardExceeded { parameters: usize, rows: usize },

    #[error("no feasible vertex found in epigraph program")]
    NoFeasibleVertex,

    #[error("internal error: {0}")]
    Internal(String),
}
