//! Laurent polynomials in `u` with arbitrary-precision integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use super::AlgebraError;

/// An element of `Z[u, u^-1]`.
///
/// Stored as a sparse map from exponent to coefficient. Zero coefficients are
/// never stored, so structural equality is ring equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, c)
    }

    /// The variable `u`.
    pub fn u() -> Self {
        Self::monomial(1, 1)
    }

    /// `c * u^exponent`.
    pub fn monomial(exponent: i64, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponent, c);
        }
        Self { terms }
    }

    /// `u^exponent`.
    pub fn u_pow(exponent: i64) -> Self {
        Self::monomial(exponent, 1)
    }

    /// `1 + u + ... + u^(len-1)`; zero when `len == 0`.
    pub fn geometric(len: u32) -> Self {
        (0..len as i64).map(|k| (k, BigInt::one())).collect()
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// repeated exponents.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        terms.into_iter().map(|(e, c)| (e, c.into())).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponent: i64) -> BigInt {
        self.terms.get(&exponent).cloned().unwrap_or_default()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Highest exponent, `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Lowest exponent, `None` for zero.
    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Multiplies by `u^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Splits off the largest monomial factor: returns `(shift, reduced)` with
    /// `self == u^shift * reduced` and `reduced` having a nonzero constant
    /// term.
    pub fn factor_monomial(&self) -> Result<(i64, Self), AlgebraError> {
        let shift = self.min_exponent().ok_or(AlgebraError::ZeroPolynomial)?;
        Ok((shift, self.shift(-shift)))
    }

    /// Exact evaluation at a nonzero integer.
    pub fn eval_int(&self, v: i64) -> Result<BigRational, AlgebraError> {
        if v == 0 {
            if self.min_exponent().is_some_and(|e| e < 0) {
                return Err(AlgebraError::PoleAtZero);
            }
            return Ok(BigRational::from_integer(self.coeff(0)));
        }
        let base = BigRational::from_integer(BigInt::from(v));
        let mut sum = BigRational::zero();
        for (e, c) in &self.terms {
            let p = if *e >= 0 {
                num_traits::pow(base.clone(), *e as usize)
            } else {
                num_traits::pow(base.recip(), e.unsigned_abs() as usize)
            };
            sum += p * BigRational::from_integer(c.clone());
        }
        Ok(sum)
    }
}

impl FromIterator<(i64, BigInt)> for LaurentPolynomial {
    fn from_iter<I: IntoIterator<Item = (i64, BigInt)>>(iter: I) -> Self {
        let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in iter {
            *terms.entry(e).or_default() += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Self { terms }
    }
}

impl From<i64> for LaurentPolynomial {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl Zero for LaurentPolynomial {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPolynomial {
    fn one() -> Self {
        Self::constant(1)
    }
}

impl AddAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn add_assign(&mut self, rhs: &LaurentPolynomial) {
        for (e, c) in &rhs.terms {
            let entry = self.terms.entry(*e).or_default();
            *entry += c;
            if entry.is_zero() {
                self.terms.remove(e);
            }
        }
    }
}

impl SubAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn sub_assign(&mut self, rhs: &LaurentPolynomial) {
        for (e, c) in &rhs.terms {
            let entry = self.terms.entry(*e).or_default();
            *entry -= c;
            if entry.is_zero() {
                self.terms.remove(e);
            }
        }
    }
}

impl AddAssign for LaurentPolynomial {
    fn add_assign(&mut self, rhs: Self) {
        *self += &rhs;
    }
}

impl SubAssign for LaurentPolynomial {
    fn sub_assign(&mut self, rhs: Self) {
        *self -= &rhs;
    }
}

impl Add<&LaurentPolynomial> for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&LaurentPolynomial> for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&LaurentPolynomial> for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self.terms
            .iter()
            .flat_map(|(ea, ca)| rhs.terms.iter().map(move |(eb, cb)| (ea + eb, ca * cb)))
            .collect()
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $m(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPolynomial> for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $m(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
                (&self).$m(rhs)
            }
        }
        impl $tr<LaurentPolynomial> for &LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $m(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}

/// Renders with descending exponents, e.g. `u^3 + u^2 - u` or `2*u^-1`.
impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let var = match *e {
                0 => None,
                1 => Some("u".to_string()),
                e => Some(format!("u^{e}")),
            };
            match var {
                None => write!(f, "{mag}")?,
                Some(v) if mag.is_one() => f.write_str(&v)?,
                Some(v) => write!(f, "{mag}*{v}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPolynomial({self})")
    }
}

/// Parses the text rendering produced by `Display`. Whitespace is ignored;
/// terms are `c`, `u`, `u^k`, `c*u`, `c*u^k` with `k` possibly negative.
impl FromStr for LaurentPolynomial {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = |msg: &str| AlgebraError::Parse(format!("{msg} in {s:?}"));
        if compact.is_empty() {
            return Err(err("empty polynomial"));
        }
        let bytes = compact.as_bytes();
        let mut pieces = Vec::new();
        let mut start = 0;
        for i in 1..bytes.len() {
            // a sign splits terms unless it belongs to an exponent
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                pieces.push(&compact[start..i]);
                start = i;
            }
        }
        pieces.push(&compact[start..]);

        let mut terms = Vec::new();
        for piece in pieces {
            let (negative, body) = match piece.as_bytes()[0] {
                b'-' => (true, &piece[1..]),
                b'+' => (false, &piece[1..]),
                _ => (false, piece),
            };
            if body.is_empty() {
                return Err(err("dangling sign"));
            }
            let (coeff, var) = match body.split_once('*') {
                Some((c, v)) => (Some(c), Some(v)),
                None if body.starts_with('u') => (None, Some(body)),
                None => (Some(body), None),
            };
            let mut c = match coeff {
                Some(c) => c.parse::<BigInt>().map_err(|_| err("bad coefficient"))?,
                None => BigInt::one(),
            };
            if negative {
                c = -c;
            }
            let e = match var {
                None => 0,
                Some("u") => 1,
                Some(v) => v
                    .strip_prefix("u^")
                    .and_then(|k| k.parse::<i64>().ok())
                    .ok_or_else(|| err("bad monomial"))?,
            };
            terms.push((e, c));
        }
        Ok(terms.into_iter().collect())
    }
}

/// JSON form: `[[exponent, "coefficient"], ...]`, exponents ascending.
impl Serialize for LaurentPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&(e, c.to_string()))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw: Vec<(i64, String)> = Vec::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(raw.len());
        for (e, c) in raw {
            let c: BigInt = c.parse().map_err(de::Error::custom)?;
            terms.push((e, c));
        }
        Ok(terms.into_iter().collect())
    }
}
