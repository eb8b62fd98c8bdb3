//! Formal power series in `T` over `Z[u, u^-1]`, truncated at a fixed order.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize, Serializer};

use super::{AlgebraError, LaurentPolynomial};

/// `Σ_{n=1}^{N} c_n T^n`. There is no constant term; coefficients past the
/// order are dropped.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: BTreeMap<usize, LaurentPolynomial>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            order,
            coeffs: BTreeMap::new(),
        }
    }

    /// Builds a series from `(n, c_n)` pairs. Indices past `order` are
    /// discarded; index 0 is rejected.
    pub fn from_coeffs<I>(order: usize, coeffs: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (usize, LaurentPolynomial)>,
    {
        let mut s = Self::zero(order);
        for (n, c) in coeffs {
            if n == 0 {
                return Err(AlgebraError::ConstantTerm);
            }
            s.add_term(n, &c);
        }
        Ok(s)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `T^n` (zero when absent or beyond the order).
    pub fn coeff(&self, n: usize) -> LaurentPolynomial {
        self.coeffs.get(&n).cloned().unwrap_or_default()
    }

    /// Nonzero coefficients in increasing `n`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &LaurentPolynomial)> + '_ {
        self.coeffs.iter().map(|(n, c)| (*n, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_term(&mut self, n: usize, c: &LaurentPolynomial) {
        if n == 0 || n > self.order || c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(n).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&n);
        }
    }

    fn check_order(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.order != other.order {
            return Err(AlgebraError::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_order(other)?;
        let mut out = self.clone();
        for (n, c) in &other.coeffs {
            out.add_term(*n, c);
        }
        Ok(out)
    }

    /// Product modulo `T^(N+1)`.
    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_order(other)?;
        let mut out = Self::zero(self.order);
        for (i, a) in &self.coeffs {
            for (j, b) in &other.coeffs {
                if i + j > self.order {
                    break;
                }
                out.add_term(i + j, &(a * b));
            }
        }
        Ok(out)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0 + O(T^{})", self.order + 1);
        }
        for (i, (n, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*T^{n}")?;
        }
        write!(f, " + O(T^{})", self.order + 1)
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries({self})")
    }
}

/// Parses the `Display` form: `(p1)*T^n1 + (p2)*T^n2 + O(T^(N+1))`.
impl FromStr for TruncatedSeries {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = |msg: &str| AlgebraError::Parse(format!("{msg} in {s:?}"));
        let (body, tail) = compact
            .rsplit_once("O(T^")
            .ok_or_else(|| err("missing O(T^..) tail"))?;
        let order = tail
            .strip_suffix(')')
            .and_then(|k| k.parse::<usize>().ok())
            .and_then(|k| k.checked_sub(1))
            .ok_or_else(|| err("bad order"))?;
        let body = body.strip_suffix('+').ok_or_else(|| err("bad tail"))?;
        let mut series = Self::zero(order);
        if body == "0" {
            return Ok(series);
        }
        let mut rest = body;
        while !rest.is_empty() {
            let inner = rest.strip_prefix('(').ok_or_else(|| err("expected '('"))?;
            let close = inner.find(')').ok_or_else(|| err("unbalanced"))?;
            let poly: LaurentPolynomial = inner[..close].parse()?;
            let after = inner[close + 1..]
                .strip_prefix("*T^")
                .ok_or_else(|| err("expected *T^"))?;
            let digits = after.find(|c: char| !c.is_ascii_digit()).unwrap_or(after.len());
            let n: usize = after[..digits].parse().map_err(|_| err("bad index"))?;
            if n == 0 {
                return Err(AlgebraError::ConstantTerm);
            }
            series.add_term(n, &poly);
            rest = after[digits..].strip_prefix('+').unwrap_or(&after[digits..]);
        }
        Ok(series)
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    order: usize,
    terms: Vec<(usize, LaurentPolynomial)>,
}

impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SeriesJson {
            order: self.order,
            terms: self.coeffs.iter().map(|(n, c)| (*n, c.clone())).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = SeriesJson::deserialize(deserializer)?;
        Self::from_coeffs(raw.order, raw.terms).map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(n: usize, c: &str, order: usize) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(order, [(n, c.parse().unwrap())]).unwrap()
    }

    #[test]
    fn add_and_mul_examples() {
        let t2 = mono(2, "1", 4);
        assert_eq!(t2.add(&t2).unwrap(), mono(2, "2", 4));
        assert!(t2.mul(&mono(3, "1", 4)).unwrap().is_zero());
        let ut = mono(1, "u", 4);
        assert_eq!(ut.mul(&ut).unwrap(), mono(2, "u^2", 4));
    }

    #[test]
    fn order_mismatch() {
        let a = TruncatedSeries::zero(3);
        let b = TruncatedSeries::zero(4);
        assert_eq!(
            a.add(&b),
            Err(AlgebraError::OrderMismatch { left: 3, right: 4 })
        );
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn truncation_on_construction() {
        let s = mono(5, "u", 4);
        assert!(s.is_zero());
        assert!(TruncatedSeries::from_coeffs(4, [(0, LaurentPolynomial::one())]).is_err());
    }

    #[test]
    fn text_round_trip() {
        let s = TruncatedSeries::from_coeffs(
            6,
            [
                (2, "2*u^-1".parse().unwrap()),
                (4, "u^-1 - 3*u^-2".parse().unwrap()),
            ],
        )
        .unwrap();
        let text = s.to_string();
        assert_eq!(text, "(2*u^-1)*T^2 + (u^-1 - 3*u^-2)*T^4 + O(T^7)");
        assert_eq!(text.parse::<TruncatedSeries>().unwrap(), s);
        let z = TruncatedSeries::zero(3);
        assert_eq!(z.to_string().parse::<TruncatedSeries>().unwrap(), z);
    }

    #[test]
    fn json_shape() {
        let s = mono(2, "u^-1 + u^-2", 2);
        assert_eq!(
            serde_json::to_string(&s).unwrap(),
            r#"{"order":2,"terms":[[2,[[-2,"1"],[-1,"1"]]]]}"#
        );
    }
}
