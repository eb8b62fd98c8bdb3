//! Decomposition engine: β from additivity, multiplicativity, and the
//! hyperbolic-pair split, with no reference to the closed forms.

use std::collections::HashMap;
use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;

use crate::algebra::LaurentPolynomial as Lp;

use super::{Level, ScissorError, SetExpression};

type Memo = RwLock<HashMap<(Level, u32, u32), Lp>>;

static QUADRIC_MEMO: LazyLock<Memo> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// Atom table for quadrics with `s = 0` or `t = 0`.
pub fn quadric_base_case(level: Level, s: u32, t: u32) -> Option<SetExpression> {
    if s > 0 && t > 0 {
        return None;
    }
    let expr = match level {
        Level::Zero => SetExpression::Point,
        Level::Plus if s == 0 => SetExpression::empty(),
        Level::Plus => SetExpression::Sphere(s - 1),
        Level::Minus if t == 0 => SetExpression::empty(),
        Level::Minus => SetExpression::Sphere(t - 1),
    };
    Some(expr)
}

/// Splits off one hyperbolic pair `x² − y² = pq`.
///
/// On `p ≠ 0` the coordinate `q` is solved for, leaving `R* × R^(s+t−2)`; on
/// `p = 0` the equation drops to the smaller quadric and `q` is free.
pub fn quadric_reduce(level: Level, s: u32, t: u32) -> Result<SetExpression, ScissorError> {
    if s == 0 || t == 0 {
        return Err(ScissorError::NotReducible {
            c: level.value(),
            s,
            t,
        });
    }
    Ok(SetExpression::union([
        SetExpression::product([
            SetExpression::PuncturedLine,
            SetExpression::AffineSpace(s + t - 2),
        ]),
        SetExpression::product([
            SetExpression::QuadricAffine {
                level,
                s: s - 1,
                t: t - 1,
            },
            SetExpression::AffineSpace(1),
        ]),
    ]))
}

/// Cuts `Z_{m,M}` along the hyperplane `y_M = 0`: the affine chart is
/// `X^1_{m,M−1}` and the part at infinity is `Z_{m,M−1}` (empty when `M = 1`).
pub fn projective_reduce(m: u32, big_m: u32) -> Result<SetExpression, ScissorError> {
    if m == 0 || big_m == 0 {
        return Err(ScissorError::EmptyProjectiveQuadric { m, big_m });
    }
    let at_infinity = if big_m == 1 {
        SetExpression::empty()
    } else {
        SetExpression::QuadricProjective { m, big_m: big_m - 1 }
    };
    Ok(SetExpression::union([
        SetExpression::QuadricAffine {
            level: Level::Plus,
            s: m,
            t: big_m - 1,
        },
        at_infinity,
    ]))
}

fn quadric_beta(level: Level, s: u32, t: u32) -> Result<Lp, ScissorError> {
    let key = (level, s, t);
    if let Some(hit) = QUADRIC_MEMO.read().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let expr = match quadric_base_case(level, s, t) {
        Some(base) => base,
        None => quadric_reduce(level, s, t)?,
    };
    let value = eval(&expr)?;
    QUADRIC_MEMO.write().unwrap().insert(key, value.clone());
    Ok(value)
}

fn eval(e: &SetExpression) -> Result<Lp, ScissorError> {
    use SetExpression::*;
    Ok(match e {
        AffineSpace(k) => Lp::u_pow(*k as i64),
        PuncturedLine => Lp::u() - Lp::one(),
        Point => Lp::one(),
        Sphere(n) => Lp::one() + Lp::u_pow(*n as i64),
        ProjectiveSpace(k) => Lp::geometric(k + 1),
        QuadricAffine { level, s, t } => quadric_beta(*level, *s, *t)?,
        QuadricProjective { m, big_m } => eval(&projective_reduce(*m, *big_m)?)?,
        Product(children) => {
            let mut acc = Lp::one();
            for c in children {
                acc = acc * eval(c)?;
            }
            acc
        }
        DisjointUnion(children) => {
            let mut acc = Lp::zero();
            for c in children {
                acc += eval(c)?;
            }
            acc
        }
        Difference { ambient, removed } => eval(ambient)? - eval(removed)?,
    })
}

/// Virtual Poincaré polynomial of a constructible set.
pub fn beta_eval(e: &SetExpression) -> Result<Lp, ScissorError> {
    e.validate()?;
    eval(e)
}

/// β specialized at `u = −1`.
pub fn euler_characteristic(e: &SetExpression) -> Result<BigInt, ScissorError> {
    let beta = beta_eval(e)?;
    let value = beta
        .eval_int(-1)
        .map_err(|err| ScissorError::MalformedExpression(err.to_string()))?;
    debug_assert!(value.is_integer());
    Ok(value.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scissor::closed;

    fn lp(s: &str) -> Lp {
        s.parse().unwrap()
    }

    #[test]
    fn reduce_examples() {
        let e = quadric_reduce(Level::Plus, 2, 1).unwrap();
        assert_eq!(
            e,
            SetExpression::union([
                SetExpression::product([SetExpression::PuncturedLine, SetExpression::AffineSpace(1)]),
                SetExpression::product([SetExpression::quadric(1, 1, 0), SetExpression::AffineSpace(1)]),
            ])
        );
        assert_eq!(beta_eval(&e).unwrap(), lp("u^2 + u"));

        let e = quadric_reduce(Level::Zero, 1, 1).unwrap();
        assert_eq!(
            e,
            SetExpression::union([
                SetExpression::product([SetExpression::PuncturedLine, SetExpression::AffineSpace(0)]),
                SetExpression::product([SetExpression::quadric(0, 0, 0), SetExpression::AffineSpace(1)]),
            ])
        );
        assert_eq!(beta_eval(&e).unwrap(), lp("2*u - 1"));

        assert_eq!(
            quadric_reduce(Level::Plus, 2, 0),
            Err(ScissorError::NotReducible { c: 1, s: 2, t: 0 })
        );
        assert_eq!(quadric_base_case(Level::Plus, 2, 0), Some(SetExpression::Sphere(1)));
    }

    #[test]
    fn reduction_shrinks_s_plus_t() {
        for level in Level::ALL {
            for s in 1..6 {
                for t in 1..6 {
                    let SetExpression::DisjointUnion(parts) = quadric_reduce(level, s, t).unwrap()
                    else {
                        panic!("expected a union");
                    };
                    let SetExpression::Product(ref factors) = parts[1] else {
                        panic!("expected a product");
                    };
                    let SetExpression::QuadricAffine { s: s2, t: t2, .. } = factors[0] else {
                        panic!("expected a quadric");
                    };
                    assert!(s2 + t2 < s + t);
                }
            }
        }
    }

    #[test]
    fn eval_examples() {
        let e = SetExpression::product([SetExpression::AffineSpace(2), SetExpression::quadric(1, 1, 1)]);
        assert_eq!(beta_eval(&e).unwrap(), lp("u^3 - u^2"));
        let e = SetExpression::union([SetExpression::AffineSpace(1), SetExpression::Point]);
        assert_eq!(beta_eval(&e).unwrap(), lp("u + 1"));
        assert_eq!(beta_eval(&SetExpression::quadric(0, 2, 3)).unwrap(), lp("u^4"));
        assert_eq!(beta_eval(&SetExpression::empty()).unwrap(), lp("0"));
        assert_eq!(beta_eval(&SetExpression::ProjectiveSpace(2)).unwrap(), lp("1 + u + u^2"));
    }

    #[test]
    fn projective_oracle_matches_closed_form() {
        for m in 1..=8 {
            for big_m in 1..=8 {
                let e = SetExpression::QuadricProjective { m, big_m };
                assert_eq!(beta_eval(&e).unwrap(), closed::beta_z(m, big_m).unwrap(), "Z_{m},{big_m}");
            }
        }
    }

    #[test]
    fn malformed_is_rejected() {
        let e = SetExpression::product([SetExpression::QuadricProjective { m: 0, big_m: 1 }]);
        assert!(matches!(beta_eval(&e), Err(ScissorError::MalformedExpression(_))));
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_characteristic(&SetExpression::Sphere(1)).unwrap(), BigInt::from(0));
        assert_eq!(euler_characteristic(&SetExpression::quadric(0, 2, 2)).unwrap(), BigInt::from(1));
        assert_eq!(euler_characteristic(&SetExpression::ProjectiveSpace(2)).unwrap(), BigInt::from(1));
    }

    #[test]
    fn memo_is_shared_across_threads() {
        let handles: Vec<_> = (0..4)
            .map(|_| std::thread::spawn(|| beta_eval(&SetExpression::quadric(-1, 9, 7)).unwrap()))
            .collect();
        let values: Vec<Lp> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert!(values.windows(2).all(|w| w[0] == w[1]));
        assert_eq!(values[0], closed::beta_xneg1(9, 7));
    }
}
