use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain where the operation is defined.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("aliasing: frequency {j} needs |j| < n/2 on an n = {n} grid")]
    Aliasing { j: i64, n: usize },

    #[error("truncation insufficient: tail bound {tail:e} exceeds tolerance {tol:e}")]
    TruncationInsufficient { tail: f64, tol: f64 },

    #[error("transform strip violated: Im zeta = {im} outside {strip}")]
    StripViolation { im: f64, strip: String },

    #[error("operands live on different groups: {0:?} vs {1:?}")]
    MixedGroups(Vec<usize>, Vec<usize>),

    #[error("not a homomorphism: {0}")]
    NotHomomorphism(String),

    #[error("invalid subgroup: {0}")]
    InvalidSubgroup(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
