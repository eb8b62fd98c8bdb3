//! Sparse multivariate polynomials over `Q`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Monomial = Vec<u32>;

/// A polynomial in `x1, …, x_nvars` with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

pub(crate) fn total_degree(m: &[u32]) -> u32 {
    m.iter().sum()
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    /// `c * x^exponents`.
    pub fn monomial(exponents: Monomial, c: BigRational) -> Self {
        let nvars = exponents.len();
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exponents, c);
        }
        p
    }

    /// The coordinate `x_{index+1}` (zero-based index).
    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Self::monomial(e, BigRational::one())
    }

    /// Builds from `(exponents, coefficient)` pairs, summing duplicates.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.len(), nvars, "exponent vector length must equal nvars");
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> + '_ {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &[u32]) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Largest total degree, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| total_degree(m)).max()
    }

    /// Smallest total degree of a nonzero term, `None` for zero.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|m| total_degree(m)).min()
    }

    /// The homogeneous component of degree `k`.
    pub fn homogeneous(&self, k: u32) -> Self {
        self.filter(|m| total_degree(m) == k)
    }

    /// Drops every term of degree above `max_degree`.
    pub fn truncate(&self, max_degree: u32) -> Self {
        self.filter(|m| total_degree(m) <= max_degree)
    }

    pub fn filter(&self, mut keep: impl FnMut(&[u32]) -> bool) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Indices of variables that occur in some term.
    pub fn variables(&self) -> Vec<usize> {
        (0..self.nvars)
            .filter(|&i| self.terms.keys().any(|m| m[i] > 0))
            .collect()
    }

    /// Re-embeds into a ring with more variables (appended at the end).
    pub fn with_nvars(&self, nvars: usize) -> Self {
        assert!(nvars >= self.nvars);
        Self {
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut m = m.clone();
                    m.resize(nvars, 0);
                    (m, c.clone())
                })
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    /// Product, dropping terms of degree above `max_degree` when given.
    pub fn mul_truncated(&self, other: &Self, max_degree: Option<u32>) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m: Monomial = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                if max_degree.is_some_and(|k| total_degree(&m) > k) {
                    continue;
                }
                out.add_term(m, ca * cb);
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.mul_truncated(other, None)
    }

    pub fn pow_truncated(&self, exp: u32, max_degree: Option<u32>) -> Self {
        let mut acc = Self::constant(self.nvars, BigRational::one());
        for _ in 0..exp {
            acc = acc.mul_truncated(self, max_degree);
        }
        acc
    }

    /// `self(subs[0], …, subs[nvars−1])`, truncated when `max_degree` is
    /// given. All substituted polynomials must share one ring.
    pub fn compose(&self, subs: &[Polynomial], max_degree: Option<u32>) -> Polynomial {
        assert_eq!(subs.len(), self.nvars, "one substitution per variable");
        let target = subs.first().map_or(0, |p| p.nvars);
        // cache powers of each substituted polynomial
        let mut powers: Vec<Vec<Polynomial>> = subs
            .iter()
            .map(|p| vec![Polynomial::constant(target, BigRational::one()), p.clone()])
            .collect();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i]
                        .last()
                        .unwrap()
                        .mul_truncated(&subs[i], max_degree);
                    powers[i].push(next);
                }
                term = term.mul_truncated(&powers[i][e as usize], max_degree);
                if term.is_zero() {
                    break;
                }
            }
            out = out.add(&term);
        }
        out
    }
}

fn fmt_coeff(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Terms by increasing degree; within a degree, larger powers of earlier
/// variables first. Coefficients print as `p/q`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|(a, _), (b, _)| total_degree(a).cmp(&total_degree(b)).then(b.cmp(a)));
        for (i, (m, c)) in ordered.into_iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let vars: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(j, &e)| match e {
                    1 => format!("x{}", j + 1),
                    e => format!("x{}^{e}", j + 1),
                })
                .collect();
            if vars.is_empty() {
                f.write_str(&fmt_coeff(&mag))?;
            } else if mag.is_one() {
                f.write_str(&vars.join("*"))?;
            } else {
                write!(f, "{}*{}", fmt_coeff(&mag), vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({self})", self.nvars)
    }
}

#[cfg(test)]
pub(crate) fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> Polynomial {
        Polynomial::var(3, i)
    }

    #[test]
    fn ring_operations() {
        let p = x(0).add(&x(1));
        let q = x(0).sub(&x(1));
        let sq = x(0).mul(&x(0)).sub(&x(1).mul(&x(1)));
        assert_eq!(p.mul(&q), sq);
        assert!(p.sub(&p).is_zero());
        assert_eq!(p.pow_truncated(3, Some(2)), Polynomial::zero(3));
        assert_eq!(p.pow_truncated(2, None).num_terms(), 3);
    }

    #[test]
    fn compose_and_truncate() {
        // (x1 - x2^2)^2 + 2 (x1 - x2^2) x2^2 = x1^2 - x2^4
        let f = x(0).mul(&x(0)).add(&x(0).mul(&x(1)).mul(&x(1)).scale(&rational(2, 1)));
        let subs = [x(0).sub(&x(1).mul(&x(1))), x(1), x(2)];
        let g = f.compose(&subs, None);
        assert_eq!(g, x(0).mul(&x(0)).sub(&x(1).pow_truncated(4, None)));
        assert_eq!(f.compose(&subs, Some(3)), x(0).mul(&x(0)));
    }

    #[test]
    fn degrees_and_display() {
        let f = Polynomial::from_terms(
            3,
            [
                (vec![2, 1, 0], rational(3, 2)),
                (vec![0, 0, 1], rational(1, 1)),
                (vec![0, 2, 0], rational(-1, 1)),
            ],
        );
        assert_eq!(f.order(), Some(1));
        assert_eq!(f.degree(), Some(3));
        assert_eq!(f.to_string(), "x3 - x2^2 + 3/2*x1^2*x2");
        assert_eq!(f.variables(), vec![0, 1, 2]);
        assert_eq!(f.homogeneous(2).to_string(), "-x2^2");
    }
}
