//! Reading `(s, t)` back out of `T²` coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::algebra::LaurentPolynomial as Lp;
use crate::arcspace::t2_naive_closed;

use super::GermError;

/// `s` (or `t`) from one signed `T²` coefficient.
///
/// After removing the largest power of `u` the residual is `u^k − 1`
/// (giving `k`) or `u^k + 1` (giving `k + 1`; `k = 0` is the residual `2`).
fn count_from_signed(c: &Lp, label: &str) -> Result<u32, GermError> {
    if c.is_zero() {
        return Ok(0);
    }
    let (_, residual) = c.factor_monomial().expect("nonzero");
    let bad = || GermError::NotSignatureForm(format!("{label} coefficient {c} has residual {residual}"));
    let one = BigInt::one();
    if residual == Lp::constant(2) {
        return Ok(1);
    }
    let terms: Vec<(i64, &BigInt)> = residual.terms().collect();
    match terms.as_slice() {
        [(0, c0), (k, ck)] if *k >= 1 && **ck == one => {
            let k = u32::try_from(*k).map_err(|_| bad())?;
            if **c0 == -&one {
                Ok(k)
            } else if **c0 == one {
                Ok(k + 1)
            } else {
                Err(bad())
            }
        }
        _ => Err(bad()),
    }
}

/// `(s, t)` from the `T²` coefficients of the plus and minus zeta functions.
pub fn recover_signature(c_plus: &Lp, c_minus: &Lp) -> Result<(u32, u32), GermError> {
    Ok((
        count_from_signed(c_plus, "plus")?,
        count_from_signed(c_minus, "minus")?,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Ambiguity {
    /// `M = m + 1`: the coefficient collapses to `1 − u^{−1}` for every `m`.
    ConsecutivePair,
    /// `m = 0`. The coefficient is `1 − u^{−M}`, so `M` is readable when the
    /// cone `X_{0,M}` is the origin; with an empty cone it would not be.
    ZeroMinimum { max_if_point_cone: u32 },
}

impl fmt::Display for Ambiguity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ambiguity::ConsecutivePair => f.write_str("M = m+1 family: coefficient is 1 - u^-1 for every m"),
            Ambiguity::ZeroMinimum { max_if_point_cone } => write!(
                f,
                "m = 0: M = {max_if_point_cone} only under the convention that X_{{0,M}} is a point"
            ),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum NaiveRecovery {
    Determined {
        m: u32,
        #[serde(rename = "M")]
        big_m: u32,
    },
    Ambiguous { reason: Ambiguity },
}

/// `(min(s,t), max(s,t))` from the naive `T²` coefficient
/// `1 − u^{−(s+t)} β(X⁰_{s,t})`, when it is determined.
pub fn recover_minmax_naive(c_naive: &Lp) -> Result<NaiveRecovery, GermError> {
    let bad = || GermError::NotSignatureForm(format!("naive coefficient {c_naive}"));
    // p = u^{-(m+M)} β(X⁰_{m,M})
    let p = Lp::one() - c_naive;
    let terms: Vec<(i64, i64)> = p
        .terms()
        .map(|(e, c)| i64::try_from(c).map(|c| (e, c)).map_err(|_| bad()))
        .collect::<Result<_, _>>()?;
    let neg = |e: i64| u32::try_from(-e).map_err(|_| bad());
    let candidate = match terms.as_slice() {
        [(-1, 1)] => return Ok(NaiveRecovery::Ambiguous { reason: Ambiguity::ConsecutivePair }),
        [(e, 1)] if *e <= -2 => {
            return Ok(NaiveRecovery::Ambiguous {
                reason: Ambiguity::ZeroMinimum { max_if_point_cone: neg(*e)? },
            })
        }
        // m = M = 1: 2u^{-1} − u^{-2}
        [(-2, -1), (-1, 2)] => (1, 1),
        // u^{-1} − u^{-(m+1)} + u^{-M}, M ≥ m + 2
        [(low, 1), (mid, -1), (-1, 1)] if *mid <= -2 => (neg(*mid)? - 1, neg(*low)?),
        // M = m ≥ 2: u^{-1} + u^{-m} − u^{-(m+1)}
        [(low, -1), (mid, 1), (-1, 1)] if *mid == *low + 1 && *mid <= -2 => {
            let m = neg(*mid)?;
            (m, m)
        }
        _ => return Err(bad()),
    };
    let (m, big_m) = candidate;
    if m == 0 || t2_naive_closed(m, big_m) != *c_naive {
        return Err(bad());
    }
    Ok(NaiveRecovery::Determined { m, big_m })
}
