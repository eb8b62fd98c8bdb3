//! Polynomial germs at the origin: parsing, Hessian inertia, jet splitting,
//! signature recovery from zeta coefficients, and the zeta discriminator.

mod discriminate;
mod inertia;
mod parse;
pub mod poly;
mod signature;
mod split;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::arcspace::ArcError;

pub use discriminate::{discriminate, Discrimination, Verdict};
pub use inertia::{
    congruence_diagonalize, hessian, hessian_inertia, quadratic_form_matrix, Congruence, Inertia, Matrix,
};
pub use parse::parse_polynomial;
pub use poly::Polynomial;
pub use signature::{recover_minmax_naive, recover_signature, Ambiguity, NaiveRecovery};
pub use split::{split_jet, SplitResult};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GermError {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("nonzero constant term: the polynomial does not vanish at the origin")]
    NotAGerm,
    #[error("the linear part does not vanish: the origin is not a singular point")]
    NotSingularAtOrigin,
    #[error("germs live in different dimensions ({left} vs {right})")]
    DimensionMismatch { left: usize, right: usize },
    #[error("dimension {dim} is smaller than the largest variable index {used}")]
    DimensionTooSmall { dim: usize, used: usize },
    #[error("jet order must be at least 3 (got {0})")]
    InvalidJetOrder(u32),
    #[error("series order must be at least 1")]
    InvalidOrder,
    #[error("not a signature-quadric coefficient: {0}")]
    NotSignatureForm(String),
    #[error("invalid germ JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Arc(#[from] ArcError),
}

impl GermError {
    pub fn name(&self) -> &'static str {
        match self {
            GermError::Syntax { .. } => "SyntaxError",
            GermError::NotAGerm => "NotAGerm",
            GermError::NotSingularAtOrigin => "NotSingularAtOrigin",
            GermError::DimensionMismatch { .. } => "DimensionMismatch",
            GermError::DimensionTooSmall { .. } => "DimensionTooSmall",
            GermError::InvalidJetOrder(_) => "InvalidJetOrder",
            GermError::InvalidOrder => "InvalidOrder",
            GermError::NotSignatureForm(_) => "NotSignatureForm",
            GermError::Json(_) => "MalformedGermJson",
            GermError::Arc(e) => e.name(),
        }
    }
}

/// A polynomial vanishing at the origin.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolynomialGerm(Polynomial);

impl PolynomialGerm {
    pub fn new(poly: Polynomial) -> Result<Self, GermError> {
        if !poly.homogeneous(0).is_zero() {
            return Err(GermError::NotAGerm);
        }
        Ok(Self(poly))
    }

    pub fn poly(&self) -> &Polynomial {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.nvars()
    }

    /// `self ∘ L` for a linear map given by its matrix (`x_i ↦ Σ_j L[i][j] x_j`).
    pub fn linear_substitution(&self, l: &[Vec<BigRational>]) -> Self {
        let n = self.nvars();
        let subs: Vec<Polynomial> = l
            .iter()
            .map(|row| {
                row.iter().enumerate().fold(Polynomial::zero(n), |acc, (j, c)| {
                    acc.add(&Polynomial::var(n, j).scale(c))
                })
            })
            .collect();
        Self(self.0.compose(&subs, None))
    }
}

impl fmt::Display for PolynomialGerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Parses the germ grammar; `dim` raises the number of variables.
pub fn parse_germ(text: &str, dim: Option<usize>) -> Result<PolynomialGerm, GermError> {
    PolynomialGerm::new(parse_polynomial(text, dim)?)
}

fn format_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn parse_rational(s: &str) -> Result<BigRational, GermError> {
    let bad = || GermError::Json(format!("bad rational {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d == BigInt::from(0) {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

#[derive(Serialize, Deserialize)]
struct GermJson {
    nvars: usize,
    terms: Vec<(Vec<u32>, String)>,
}

impl PolynomialGerm {
    /// `{"nvars": d, "terms": [[[e1, …, ed], "p/q"], …]}`.
    pub fn from_json_value(value: &serde_json::Value) -> Result<Self, GermError> {
        let raw: GermJson =
            serde_json::from_value(value.clone()).map_err(|e| GermError::Json(e.to_string()))?;
        if raw.nvars == 0 {
            return Err(GermError::Json("nvars must be positive".into()));
        }
        let mut terms = Vec::with_capacity(raw.terms.len());
        for (m, c) in raw.terms {
            if m.len() != raw.nvars {
                return Err(GermError::Json(format!(
                    "exponent vector {m:?} does not have {} entries",
                    raw.nvars
                )));
            }
            terms.push((m, parse_rational(&c)?));
        }
        Self::new(Polynomial::from_terms(raw.nvars, terms))
    }
}

impl Serialize for PolynomialGerm {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        GermJson {
            nvars: self.nvars(),
            terms: self
                .0
                .terms()
                .map(|(m, c)| (m.clone(), format_rational(c)))
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PolynomialGerm {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let value = serde_json::Value::deserialize(deserializer)?;
        Self::from_json_value(&value).map_err(de::Error::custom)
    }
}

pub(crate) fn serialize_display<T: fmt::Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub(crate) fn serialize_display_vec<T: fmt::Display, S: Serializer>(
    v: &[T],
    s: S,
) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}
