//! Test-only oracles and generators shared by the integration targets.
#![allow(dead_code)]

use nash_zeta::germ::{Matrix, Polynomial, PolynomialGerm};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::Rng;

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Characteristic polynomial `det(xI − A)` of an integer matrix by
/// Faddeev–LeVerrier, lowest degree first. Every division is exact.
pub fn charpoly(a: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = a.len();
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::from(1);
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = BigInt::zero();
                for l in 0..n {
                    acc += &a[i][l] * &m[l][j];
                }
                if i == j {
                    acc += &c[n - k + 1];
                }
                next[i][j] = acc;
            }
        }
        m = next;
        let mut trace = BigInt::zero();
        for i in 0..n {
            for l in 0..n {
                trace += &a[i][l] * &m[l][i];
            }
        }
        c[n - k] = -trace / BigInt::from(k);
    }
    c
}

/// `A` scaled by the lcm of its denominators, which preserves inertia.
fn clear_denominators(a: &Matrix) -> Vec<Vec<BigInt>> {
    let lcm = a
        .iter()
        .flatten()
        .fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
    a.iter()
        .map(|row| row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect())
        .collect()
}

fn sign_changes<'a>(coeffs: impl Iterator<Item = &'a BigInt>) -> u32 {
    let signs: Vec<bool> = coeffs.filter(|c| !c.is_zero()).map(|c| c.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count() as u32
}

/// `(positive, negative, zero)` eigenvalue counts of a symmetric matrix from
/// Descartes' rule, which is exact for real-rooted polynomials.
pub fn descartes_inertia(a: &Matrix) -> (u32, u32, u32) {
    let c = charpoly(&clear_denominators(a));
    let zero = c.iter().take_while(|x| x.is_zero()).count() as u32;
    let positive = sign_changes(c.iter());
    let reflected: Vec<BigInt> = c
        .iter()
        .enumerate()
        .map(|(i, x)| if i % 2 == 1 { -x.clone() } else { x.clone() })
        .collect();
    (positive, sign_changes(reflected.iter()), zero)
}

fn small_rational<R: Rng>(rng: &mut R) -> BigRational {
    q(rng.gen_range(-5..=5), rng.gen_range(1..=4))
}

/// A random rational symmetric matrix of size `1..=8`. Some are built as
/// `Bᵀ D B` with few rows to force degeneracy, some have a zero diagonal to
/// force hyperbolic pivots.
#[allow(clippy::needless_range_loop)]
pub fn random_symmetric<R: Rng>(rng: &mut R) -> Matrix {
    let n = rng.gen_range(1..=8);
    match rng.gen_range(0..3) {
        0 => {
            let k = rng.gen_range(0..=n);
            let b: Vec<Vec<BigRational>> = (0..k).map(|_| (0..n).map(|_| small_rational(rng)).collect()).collect();
            let d: Vec<BigRational> = (0..k).map(|_| small_rational(rng)).collect();
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| (0..k).fold(BigRational::zero(), |acc, l| acc + &b[l][i] * &d[l] * &b[l][j]))
                        .collect()
                })
                .collect()
        }
        kind => {
            let mut a = vec![vec![BigRational::zero(); n]; n];
            for i in 0..n {
                for j in i..n {
                    let v = if kind == 2 && i == j { BigRational::zero() } else { small_rational(rng) };
                    a[i][j] = v.clone();
                    a[j][i] = v;
                }
            }
            a
        }
    }
}

/// A random germ of order ≥ 2 and degree ≤ 4 in at most 4 variables.
pub fn random_germ<R: Rng>(rng: &mut R) -> PolynomialGerm {
    let n = rng.gen_range(1..=4);
    let count = rng.gen_range(1..=8);
    let terms = (0..count).map(|_| {
        let degree = rng.gen_range(2..=4u32);
        let mut m = vec![0u32; n];
        for _ in 0..degree {
            m[rng.gen_range(0..n)] += 1;
        }
        (m, small_rational(rng))
    });
    PolynomialGerm::new(Polynomial::from_terms(n, terms)).expect("no constant term")
}

/// `xᵀ A x` as a polynomial.
pub fn quadratic_form(a: &Matrix) -> Polynomial {
    let n = a.len();
    let mut terms = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut m = vec![0u32; n];
            m[i] += 1;
            m[j] += 1;
            terms.push((m, a[i][j].clone()));
        }
    }
    Polynomial::from_terms(n, terms)
}
