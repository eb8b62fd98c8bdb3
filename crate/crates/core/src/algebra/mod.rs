//! Exact arithmetic in `Z[u, u^-1][[T]]`.

mod laurent;
mod series;

pub use laurent::LaurentPolynomial;
pub use series::TruncatedSeries;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("the zero polynomial has no monomial factor")]
    ZeroPolynomial,
    #[error("evaluation at u = 0 hits a negative power")]
    PoleAtZero,
    #[error("series truncation orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },
    #[error("series carry no constant term")]
    ConstantTerm,
    #[error("parse error: {0}")]
    Parse(String),
}

impl AlgebraError {
    pub fn name(&self) -> &'static str {
        match self {
            AlgebraError::ZeroPolynomial => "ZeroPolynomial",
            AlgebraError::PoleAtZero => "PoleAtZero",
            AlgebraError::OrderMismatch { .. } => "OrderMismatch",
            AlgebraError::ConstantTerm => "ConstantTerm",
            AlgebraError::Parse(_) => "ParseError",
        }
    }
}
