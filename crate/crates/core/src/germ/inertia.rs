//! Sylvester inertia by exact congruence diagonalization over `Q`.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::poly::Polynomial;
use super::{GermError, PolynomialGerm};

/// Dense symmetric matrix over `Q`.
pub type Matrix = Vec<Vec<BigRational>>;

/// Counts of positive and negative squares of a quadratic form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Inertia {
    pub s: u32,
    pub t: u32,
    pub nvars: u32,
}

impl Inertia {
    pub fn rank(&self) -> u32 {
        self.s + self.t
    }

    pub fn corank(&self) -> u32 {
        self.nvars - self.s - self.t
    }

    /// Number of negative squares.
    pub fn index(&self) -> u32 {
        self.t
    }
}

/// `Pᵀ A P = diag(d_1, …, d_r, 0, …, 0)` with `P` invertible and every `d_i`
/// for `i < r` nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Congruence {
    /// Columns of `P`: `transform[j]` is the image of the `j`-th new basis
    /// vector in old coordinates.
    pub transform: Vec<Vec<BigRational>>,
    pub diagonal: Vec<BigRational>,
    pub rank: usize,
}

impl Congruence {
    pub fn inertia(&self) -> Inertia {
        let s = self.diagonal.iter().filter(|d| d.is_positive()).count() as u32;
        let t = self.diagonal.iter().filter(|d| d.is_negative()).count() as u32;
        Inertia {
            s,
            t,
            nvars: self.diagonal.len() as u32,
        }
    }
}

/// Symmetric reduction by simultaneous row and column operations.
///
/// A zero pivot with a nonzero off-diagonal entry `a_ij` is repaired by the
/// move `x_i ↦ x_i + x_j`, after which the new diagonal entry is `2 a_ij`.
pub fn congruence_diagonalize(a: &Matrix) -> Congruence {
    let n = a.len();
    let mut a = a.clone();
    let mut p: Vec<Vec<BigRational>> = (0..n)
        .map(|j| {
            (0..n)
                .map(|i| if i == j { BigRational::one() } else { BigRational::zero() })
                .collect()
        })
        .collect();

    let swap = |a: &mut Matrix, p: &mut Vec<Vec<BigRational>>, i: usize, j: usize| {
        if i == j {
            return;
        }
        a.swap(i, j);
        for row in a.iter_mut() {
            row.swap(i, j);
        }
        p.swap(i, j);
    };
    // new basis vector i := e_i + e_j
    let add_into = |a: &mut Matrix, p: &mut Vec<Vec<BigRational>>, i: usize, j: usize, f: &BigRational| {
        let row_j = a[j].clone();
        for (x, y) in a[i].iter_mut().zip(&row_j) {
            *x += y * f;
        }
        for row in a.iter_mut() {
            let v = &row[j] * f;
            row[i] += v;
        }
        let col = p[j].clone();
        for (x, y) in p[i].iter_mut().zip(col) {
            *x += y * f;
        }
    };

    let mut rank = 0;
    for k in 0..n {
        if let Some(i) = (k..n).find(|&i| !a[i][i].is_zero()) {
            swap(&mut a, &mut p, k, i);
        } else if let Some((i, j)) =
            (k..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_zero())
        {
            add_into(&mut a, &mut p, i, j, &BigRational::one());
            swap(&mut a, &mut p, k, i);
        } else {
            break;
        }
        rank += 1;
        let pivot = a[k][k].clone();
        for j in k + 1..n {
            if a[k][j].is_zero() {
                continue;
            }
            let f = -(&a[k][j] / &pivot);
            add_into(&mut a, &mut p, j, k, &f);
        }
    }
    let diagonal = (0..n).map(|i| a[i][i].clone()).collect();
    Congruence {
        transform: p,
        diagonal,
        rank,
    }
}

/// Matrix `A` of the quadratic part, `f₂(x) = xᵀ A x`.
pub fn quadratic_form_matrix(f: &Polynomial) -> Matrix {
    let n = f.nvars();
    let half = BigRational::new(1.into(), 2.into());
    let mut a = vec![vec![BigRational::zero(); n]; n];
    for (m, c) in f.homogeneous(2).terms() {
        let idx: Vec<usize> = (0..n).filter(|&i| m[i] > 0).collect();
        match idx.as_slice() {
            [i] => a[*i][*i] = c.clone(),
            [i, j] => {
                a[*i][*j] = c * &half;
                a[*j][*i] = c * &half;
            }
            _ => unreachable!("degree-2 monomial touches one or two variables"),
        }
    }
    a
}

/// Second derivatives at the origin, `2A`.
pub fn hessian(f: &Polynomial) -> Matrix {
    let two = BigRational::from_integer(2.into());
    quadratic_form_matrix(f)
        .into_iter()
        .map(|row| row.into_iter().map(|v| v * &two).collect())
        .collect()
}

pub(crate) fn check_singular(f: &PolynomialGerm) -> Result<(), GermError> {
    if !f.poly().homogeneous(1).is_zero() {
        return Err(GermError::NotSingularAtOrigin);
    }
    Ok(())
}

/// Positive and negative squares of the Hessian at the origin.
pub fn hessian_inertia(f: &PolynomialGerm) -> Result<Inertia, GermError> {
    check_singular(f)?;
    Ok(congruence_diagonalize(&hessian(f.poly())).inertia())
}
