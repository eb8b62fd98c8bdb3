//! Jet-level splitting `f∘φ = Σ ±x_i² + F(x_{r+1}, …, x_d)`.
//!
//! The quadratic part is diagonalized by a rational congruence. Then, degree
//! by degree, every term `c·x_i·m` that contains a rank variable `x_i` is
//! absorbed by `x_i ↦ x_i − c/(2 d_i)·m`. Since `deg m ≥ 2`, the substitution
//! cancels the term against the cross product of `d_i x_i²` and only creates
//! terms of higher degree, so after the pass at the final jet order every
//! surviving term up to that order lies in the corank variables.

use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;

use super::inertia::{check_singular, congruence_diagonalize, quadratic_form_matrix, Inertia};
use super::poly::{Monomial, Polynomial};
use super::{GermError, PolynomialGerm};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitResult {
    /// Components of `φ`, truncated at `jet_order`.
    #[serde(serialize_with = "super::serialize_display_vec")]
    pub change: Vec<Polynomial>,
    /// Diagonal coefficients `d_1, …, d_r` of the quadratic part in the new
    /// coordinates. Each is `±1` when `|d_i|` is a rational square.
    #[serde(serialize_with = "super::serialize_display_vec")]
    pub diagonal: Vec<BigRational>,
    /// `F`, of order at least 3, in the last `d − r` variables.
    #[serde(serialize_with = "super::serialize_display")]
    pub remainder: Polynomial,
    pub jet_order: u32,
    pub inertia: Inertia,
}

impl SplitResult {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    /// `Σ d_i x_i²`.
    pub fn quadratic_part(&self) -> Polynomial {
        let n = self.remainder.nvars();
        self.diagonal
            .iter()
            .enumerate()
            .fold(Polynomial::zero(n), |acc, (i, d)| {
                let mut m = vec![0; n];
                m[i] = 2;
                acc.add(&Polynomial::monomial(m, d.clone()))
            })
    }

    /// `Σ_{i≤s} x_i² − Σ x_j²`, the form up to positive rescaling of the
    /// rank variables.
    pub fn normal_form(&self) -> Polynomial {
        let n = self.remainder.nvars();
        self.diagonal
            .iter()
            .enumerate()
            .fold(Polynomial::zero(n), |acc, (i, d)| {
                let mut m = vec![0; n];
                m[i] = 2;
                let sign = if d.is_positive() {
                    BigRational::one()
                } else {
                    -BigRational::one()
                };
                acc.add(&Polynomial::monomial(m, sign))
            })
    }

    /// `(f∘φ − Q − F)` truncated at the jet order. Zero for a valid split.
    pub fn residual(&self, f: &PolynomialGerm) -> Polynomial {
        f.poly()
            .compose(&self.change, Some(self.jet_order))
            .sub(&self.quadratic_part())
            .sub(&self.remainder)
    }
}

fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| BigRational::new(n, d))
}

pub fn split_jet(f: &PolynomialGerm, jet_order: u32) -> Result<SplitResult, GermError> {
    if jet_order < 3 {
        return Err(GermError::InvalidJetOrder(jet_order));
    }
    check_singular(f)?;
    let n = f.nvars();
    let congruence = congruence_diagonalize(&quadratic_form_matrix(f.poly()));
    let rank = congruence.rank;

    let mut columns = congruence.transform.clone();
    let mut diagonal: Vec<BigRational> = congruence.diagonal[..rank].to_vec();
    for (col, d) in columns.iter_mut().zip(diagonal.iter_mut()) {
        if let Some(root) = rational_sqrt(&d.abs()) {
            for v in col.iter_mut() {
                *v /= &root;
            }
            *d = if d.is_positive() {
                BigRational::one()
            } else {
                -BigRational::one()
            };
        }
    }

    // φ_k = Σ_j P[k][j] x_j
    let mut change: Vec<Polynomial> = (0..n)
        .map(|k| {
            (0..n).fold(Polynomial::zero(n), |acc, j| {
                acc.add(&Polynomial::var(n, j).scale(&columns[j][k]))
            })
        })
        .collect();
    let mut g = f.poly().compose(&change, Some(jet_order));

    for degree in 3..=jet_order {
        // x_i ↦ x_i − (1 / 2d_i) Σ c·m over the terms assigned to x_i
        let mut shifts: Vec<Polynomial> = vec![Polynomial::zero(n); rank];
        for (m, c) in g.homogeneous(degree).terms() {
            let Some(i) = (0..rank).find(|&i| m[i] > 0) else {
                continue;
            };
            let mut cofactor: Monomial = m.clone();
            cofactor[i] -= 1;
            let a = c / (&diagonal[i] * BigRational::from_integer(2.into()));
            shifts[i] = shifts[i].add(&Polynomial::monomial(cofactor, a));
        }
        if shifts.iter().all(Polynomial::is_zero) {
            continue;
        }
        let psi: Vec<Polynomial> = (0..n)
            .map(|k| {
                let x = Polynomial::var(n, k);
                if k < rank {
                    x.sub(&shifts[k])
                } else {
                    x
                }
            })
            .collect();
        g = g.compose(&psi, Some(jet_order));
        change = change.iter().map(|c| c.compose(&psi, Some(jet_order))).collect();
    }

    let remainder = g.filter(|m| m.iter().sum::<u32>() >= 3);
    debug_assert!(remainder.terms().all(|(m, _)| m[..rank].iter().all(|&e| e == 0)));
    Ok(SplitResult {
        change,
        diagonal,
        remainder,
        jet_order,
        inertia: congruence.inertia(),
    })
}
