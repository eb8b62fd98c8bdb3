//! Refuting blow-Nash equivalence by comparing zeta coefficients.

use serde::Serialize;

use crate::algebra::{LaurentPolynomial as Lp, TruncatedSeries};
use crate::arcspace::{zeta, QuadraticGerm, Selector};

use super::inertia::{hessian_inertia, Inertia};
use super::{GermError, PolynomialGerm};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    /// The two germs have different zeta coefficients at `(selector, n)`.
    ///
    /// `conditional` is set when the witness sits at `n ≥ 3` and one of the
    /// germs has a nonzero part of degree ≥ 3: such coefficients were taken
    /// from the quadratic parts only.
    Distinguished {
        selector: Selector,
        n: usize,
        f_coeff: Lp,
        g_coeff: Lp,
        conditional: bool,
    },
    NotDistinguished { up_to: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrimination {
    pub f_inertia: Inertia,
    pub g_inertia: Inertia,
    pub verdict: Verdict,
}

/// Zeta series of the diagonal form with the given inertia. A zero quadratic
/// part never reaches a finite order, so its series vanish.
fn quadratic_zeta(inertia: &Inertia, selector: Selector, order: usize) -> Result<TruncatedSeries, GermError> {
    if inertia.rank() == 0 {
        return Ok(TruncatedSeries::zero(order));
    }
    let germ = QuadraticGerm::new(inertia.nvars, inertia.s, inertia.t)?;
    Ok(zeta(&germ, selector, order)?)
}

pub fn discriminate(
    f: &PolynomialGerm,
    g: &PolynomialGerm,
    order: usize,
) -> Result<Discrimination, GermError> {
    if f.nvars() != g.nvars() {
        return Err(GermError::DimensionMismatch {
            left: f.nvars(),
            right: g.nvars(),
        });
    }
    if order == 0 {
        return Err(GermError::InvalidOrder);
    }
    let f_inertia = hessian_inertia(f)?;
    let g_inertia = hessian_inertia(g)?;
    let higher_order = |p: &PolynomialGerm| p.poly().degree().is_some_and(|d| d >= 3);
    let has_higher = higher_order(f) || higher_order(g);

    let mut series = Vec::with_capacity(Selector::ALL.len());
    for selector in Selector::ALL {
        series.push((
            selector,
            quadratic_zeta(&f_inertia, selector, order)?,
            quadratic_zeta(&g_inertia, selector, order)?,
        ));
    }
    for n in 1..=order {
        for (selector, zf, zg) in &series {
            let (a, b) = (zf.coeff(n), zg.coeff(n));
            if a != b {
                return Ok(Discrimination {
                    f_inertia,
                    g_inertia,
                    verdict: Verdict::Distinguished {
                        selector: *selector,
                        n,
                        f_coeff: a,
                        g_coeff: b,
                        conditional: n >= 3 && has_higher,
                    },
                });
            }
        }
    }
    Ok(Discrimination {
        f_inertia,
        g_inertia,
        verdict: Verdict::NotDistinguished { up_to: order },
    })
}
