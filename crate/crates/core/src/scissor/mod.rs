//! Virtual Poincaré polynomials of constructible sets built from signature
//! quadrics.
//!
//! Two independent routes are provided. [`closed`] holds the closed forms for
//! the cone `X_{m,M}`, the projective quadric `Z_{m,M}` and the level sets
//! `X^{±1}_{s,t}`. [`beta_eval`] evaluates a [`SetExpression`] using only
//! additivity over closed algebraic subsets, multiplicativity, the β of a few
//! smooth compact atoms, and the hyperbolic-pair reduction of quadrics.

pub mod closed;
mod engine;
mod expr;

pub use closed::{beta_quadric, beta_x0, beta_x1, beta_xneg1, beta_z, cone_relation_check};
pub use engine::{
    beta_eval, euler_characteristic, projective_reduce, quadric_base_case, quadric_reduce,
};
pub use expr::{Level, SetExpression};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScissorError {
    #[error("X^{c}_{{{s},{t}}} is a base case and has no hyperbolic pair to split")]
    NotReducible { c: i64, s: u32, t: u32 },
    #[error("Z_{{{m},{big_m}}} has no real points")]
    EmptyProjectiveQuadric { m: u32, big_m: u32 },
    #[error("malformed set expression: {0}")]
    MalformedExpression(String),
}

impl ScissorError {
    pub fn name(&self) -> &'static str {
        match self {
            ScissorError::NotReducible { .. } => "NotReducible",
            ScissorError::EmptyProjectiveQuadric { .. } => "EmptyProjectiveQuadric",
            ScissorError::MalformedExpression(_) => "MalformedExpression",
        }
    }
}
