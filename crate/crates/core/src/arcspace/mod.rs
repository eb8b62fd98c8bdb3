//! Truncated arc spaces of diagonal quadratic germs and their zeta functions.
//!
//! For `f = Σ_{i≤s} x_i² − Σ_{j≤t} y_j²` on `R^d`, write `q = s + t` and let
//! `B` be the polar form of the quadratic part. An arc `γ = Σ_{i≤n} a_i t^i`
//! splits into its `(x, y)`-block `w` and its `z`-block. If `w` has order `e`
//! (`a_1^w = … = a_{e−1}^w = 0`, `a_e^w ≠ 0`) then
//!
//! ```text
//! f∘γ = Q(a_e) t^{2e} + Σ_{k≥1} (2 B(a_e, a_{e+k}) + P_k(a_{e+1}, …, a_{e+k−1})) t^{2e+k}
//! ```
//!
//! so every coefficient after the first is affine in one new vector `a_{e+k}`
//! with linear part `2 B(a_e, ·) ≠ 0`. The strata of `A_n` are therefore:
//!
//! - `2e < n`: `a_e` on the punctured cone `X⁰_{s,t} \ {0}`, the vectors
//!   `a_{e+1}, …, a_{n−e}` each on one affine hyperplane (the last one off a
//!   hyperplane for the naive zeta), `a_{n−e+1}, …, a_n` free;
//! - `2e = n`: `a_e` on `X^{±1}_{s,t}` (off the cone for the naive zeta),
//!   `a_{e+1}, …, a_n` free;
//! - `2e > n`: empty, the order of `f∘γ` exceeds `n`.
//!
//! The `z`-block is free throughout. Each hyperplane fibre is made an
//! algebraic product by cutting the punctured cone according to the first
//! nonzero coordinate of `B(a_e, ·)`, so the strata stay inside algebraic
//! scissor moves. Summing gives
//!
//! ```text
//! β(A_n^{±1}) = u^{n(d−q)} [ Σ_{1≤e<n/2} (β(X⁰) − 1) u^{(n−2e)(q−1)} u^{eq}
//!                            + [n even] β(X^{±1}) u^{nq/2} ]
//! ```
//!
//! and for the naive `A_n` the final hyperplane factor `u^{q−1}` becomes
//! `u^q − u^{q−1}` and `β(X^{±1})` becomes `u^q − β(X⁰)`.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{LaurentPolynomial as Lp, TruncatedSeries};
use crate::scissor::{self, beta_eval, Level, ScissorError, SetExpression};

/// Default truncation order for zeta series.
pub const DEFAULT_ORDER: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArcError {
    #[error("invalid germ: {0}")]
    InvalidGerm(String),
    #[error("arc order must be at least 1")]
    ZeroOrder,
    #[error(transparent)]
    Scissor(#[from] ScissorError),
}

impl ArcError {
    pub fn name(&self) -> &'static str {
        match self {
            ArcError::InvalidGerm(_) => "InvalidGerm",
            ArcError::ZeroOrder => "InvalidOrder",
            ArcError::Scissor(e) => e.name(),
        }
    }
}

/// `Σ_{i≤s} x_i² − Σ_{j≤t} y_j²` on `R^d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct QuadraticGerm {
    d: u32,
    s: u32,
    t: u32,
}

impl QuadraticGerm {
    pub fn new(d: u32, s: u32, t: u32) -> Result<Self, ArcError> {
        if s + t == 0 {
            return Err(ArcError::InvalidGerm("s + t must be at least 1".into()));
        }
        if s + t > d {
            return Err(ArcError::InvalidGerm(format!(
                "s + t = {} exceeds the dimension {d}",
                s + t
            )));
        }
        Ok(Self { d, s, t })
    }

    pub fn dim(&self) -> u32 {
        self.d
    }

    pub fn plus(&self) -> u32 {
        self.s
    }

    pub fn minus(&self) -> u32 {
        self.t
    }

    pub fn rank(&self) -> u32 {
        self.s + self.t
    }

    pub fn corank(&self) -> u32 {
        self.d - self.s - self.t
    }

    /// The same form with the sign of `f` reversed.
    pub fn negated(&self) -> Self {
        Self {
            d: self.d,
            s: self.t,
            t: self.s,
        }
    }
}

impl fmt::Display for QuadraticGerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(d={}, s={}, t={})", self.d, self.s, self.t)
    }
}

/// Which arc set is measured: `ord(f∘γ) = n`, or leading term `±t^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Selector {
    Naive,
    Plus,
    Minus,
}

impl Selector {
    pub const ALL: [Selector; 3] = [Selector::Naive, Selector::Plus, Selector::Minus];

    pub fn as_str(self) -> &'static str {
        match self {
            Selector::Naive => "naive",
            Selector::Plus => "plus",
            Selector::Minus => "minus",
        }
    }
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Selector {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "naive" => Ok(Selector::Naive),
            "plus" | "+1" => Ok(Selector::Plus),
            "minus" | "-1" => Ok(Selector::Minus),
            other => Err(format!("unknown selector {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Stratum {
    pub description: String,
    pub set: SetExpression,
    pub beta: Lp,
}

/// Stratification of one `A_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArcStratumReport {
    pub germ: QuadraticGerm,
    pub n: usize,
    pub selector: Selector,
    pub strata: Vec<Stratum>,
    pub total_beta: Lp,
}

fn span(lo: u32, hi: u32) -> String {
    match hi.cmp(&lo) {
        std::cmp::Ordering::Less => "none".to_string(),
        std::cmp::Ordering::Equal => format!("a_{lo}"),
        std::cmp::Ordering::Greater => format!("a_{lo}..a_{hi}"),
    }
}

fn punctured_cone(s: u32, t: u32) -> SetExpression {
    SetExpression::difference(SetExpression::quadric(0, s, t), SetExpression::Point)
}

/// Splits `A_n^{selector}` into algebraic product strata indexed by the order
/// `e` of the `(x, y)`-block.
pub fn stratify(
    germ: &QuadraticGerm,
    n: usize,
    selector: Selector,
) -> Result<ArcStratumReport, ArcError> {
    if n == 0 {
        return Err(ArcError::ZeroOrder);
    }
    let (s, t, q) = (germ.s, germ.t, germ.rank());
    let nn = n as u32;
    let z_block = SetExpression::AffineSpace(nn * germ.corank());
    let mut strata = Vec::new();

    for e in (1..).take_while(|e| 2 * e < nn) {
        let forced = nn - 2 * e;
        let mut factors = vec![punctured_cone(s, t)];
        factors.extend((1..forced).map(|_| SetExpression::AffineSpace(q - 1)));
        factors.push(match selector {
            Selector::Naive => SetExpression::difference(
                SetExpression::AffineSpace(q),
                SetExpression::AffineSpace(q - 1),
            ),
            Selector::Plus | Selector::Minus => SetExpression::AffineSpace(q - 1),
        });
        factors.push(SetExpression::AffineSpace(e * q));
        factors.push(z_block.clone());
        let last = match selector {
            Selector::Naive => "off",
            _ => "on",
        };
        strata.push(Stratum {
            description: format!(
                "e={e}: zero {}, a_{e} on the punctured cone, {} on affine hyperplanes \
                 (a_{} {last} its hyperplane), free {}, z-block free",
                span(1, e - 1),
                span(e + 1, nn - e),
                nn - e,
                span(nn - e + 1, nn),
            ),
            set: SetExpression::product(factors),
            beta: Lp::zero(),
        });
    }

    if nn.is_multiple_of(2) {
        let e = nn / 2;
        let (leading, what) = match selector {
            Selector::Naive => (
                SetExpression::difference(SetExpression::AffineSpace(q), SetExpression::quadric(0, s, t)),
                "off the cone",
            ),
            Selector::Plus => (SetExpression::quadric(1, s, t), "on X^1"),
            Selector::Minus => (SetExpression::quadric(-1, s, t), "on X^-1"),
        };
        strata.push(Stratum {
            description: format!(
                "e={e}: zero {}, a_{e} {what}, free {}, z-block free",
                span(1, e - 1),
                span(e + 1, nn)
            ),
            set: SetExpression::product([leading, SetExpression::AffineSpace(e * q), z_block]),
            beta: Lp::zero(),
        });
    }

    let mut total_beta = Lp::zero();
    for stratum in &mut strata {
        stratum.beta = beta_eval(&stratum.set)?;
        total_beta += &stratum.beta;
    }
    Ok(ArcStratumReport {
        germ: *germ,
        n,
        selector,
        strata,
        total_beta,
    })
}

/// `β(A_n^{selector})` from the closed forms of the quadric atoms.
pub fn arc_beta_closed(germ: &QuadraticGerm, n: usize, selector: Selector) -> Lp {
    let (s, t, q) = (germ.s as i64, germ.t as i64, germ.rank() as i64);
    let n = n as i64;
    let cone = scissor::beta_x0(s as u32, t as u32);
    let punctured = &cone - Lp::one();
    let mut inner = Lp::zero();
    for e in (1..).take_while(|e| 2 * e < n) {
        let forced = n - 2 * e;
        let fibre = match selector {
            Selector::Naive => {
                Lp::u_pow((forced - 1) * (q - 1)) * (Lp::u_pow(q) - Lp::u_pow(q - 1))
            }
            _ => Lp::u_pow(forced * (q - 1)),
        };
        inner += &punctured * fibre * Lp::u_pow(e * q);
    }
    if n % 2 == 0 {
        let leading = match selector {
            Selector::Naive => Lp::u_pow(q) - &cone,
            Selector::Plus => scissor::beta_quadric(Level::Plus, s as u32, t as u32),
            Selector::Minus => scissor::beta_quadric(Level::Minus, s as u32, t as u32),
        };
        inner += leading * Lp::u_pow((n / 2) * q);
    }
    inner.shift(n * germ.corank() as i64)
}

/// `Σ_{n=1}^{N} β(A_n^{selector}) u^{−nd} T^n`, each coefficient from
/// [`stratify`].
pub fn zeta(germ: &QuadraticGerm, selector: Selector, order: usize) -> Result<TruncatedSeries, ArcError> {
    if order == 0 {
        return Err(ArcError::ZeroOrder);
    }
    let coeffs = (1..=order)
        .map(|n| {
            stratify(germ, n, selector)
                .map(|r| (n, r.total_beta.shift(-(n as i64) * germ.d as i64)))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(TruncatedSeries::from_coeffs(order, coeffs).expect("indices start at 1"))
}

/// The same series from [`arc_beta_closed`].
pub fn zeta_closed(
    germ: &QuadraticGerm,
    selector: Selector,
    order: usize,
) -> Result<TruncatedSeries, ArcError> {
    if order == 0 {
        return Err(ArcError::ZeroOrder);
    }
    let coeffs = (1..=order).map(|n| {
        (
            n,
            arc_beta_closed(germ, n, selector).shift(-(n as i64) * germ.d as i64),
        )
    });
    Ok(TruncatedSeries::from_coeffs(order, coeffs).expect("indices start at 1"))
}

/// `T²` coefficient of the signed zeta function: `u^{−(s+t)} β(X^{±1}_{s,t})`,
/// independent of `d`.
pub fn t2_signed_closed(s: u32, t: u32, sign: Selector) -> Lp {
    let level = match sign {
        Selector::Minus => Level::Minus,
        _ => Level::Plus,
    };
    scissor::beta_quadric(level, s, t).shift(-((s + t) as i64))
}

/// `T²` coefficient of the naive zeta function: `u^{−(s+t)} (u^{s+t} − β(X⁰_{s,t}))`.
pub fn t2_naive_closed(s: u32, t: u32) -> Lp {
    let q = (s + t) as i64;
    (Lp::u_pow(q) - scissor::beta_x0(s, t)).shift(-q)
}
