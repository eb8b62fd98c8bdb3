//! Closed-form virtual Poincaré polynomials of signature quadrics.

use crate::algebra::LaurentPolynomial as Lp;

use super::ScissorError;

/// β of the cone `Σ_{i≤m} x_i² = Σ_{j≤M} y_j²` in `R^(m+M)`.
///
/// Symmetric in its arguments. With `a = min(m, M) ≥ 1`, `b = max(m, M)`
/// this is `u^(a+b−1) − u^(b−1) + u^a`; when `min(m, M) = 0` the cone is the
/// origin and the value is 1.
pub fn beta_x0(m: u32, big_m: u32) -> Lp {
    let (a, b) = (m.min(big_m) as i64, m.max(big_m) as i64);
    if a == 0 {
        return Lp::one();
    }
    Lp::u_pow(a + b - 1) - Lp::u_pow(b - 1) + Lp::u_pow(a)
}

/// β of the projective quadric `Z_{m,M}`: `(1 + u^(b−1))(1 + u + … + u^(a−1))`
/// with `a = min`, `b = max`.
pub fn beta_z(m: u32, big_m: u32) -> Result<Lp, ScissorError> {
    if m == 0 || big_m == 0 {
        return Err(ScissorError::EmptyProjectiveQuadric { m, big_m });
    }
    let (a, b) = (m.min(big_m), m.max(big_m));
    Ok((Lp::one() + Lp::u_pow(b as i64 - 1)) * Lp::geometric(a))
}

/// β of `{Σ_{i≤s} x_i² − Σ_{j≤t} y_j² = 1}`.
///
/// The row `t = 0` is the sphere `S^(s−1)`, whose value `1 + u^(s−1)` is the
/// `t = 0` case of the `s > t` branch.
pub fn beta_x1(s: u32, t: u32) -> Lp {
    let (s, t) = (s as i64, t as i64);
    if s == 0 {
        Lp::zero()
    } else if s <= t {
        Lp::u_pow(t - 1) * (Lp::u_pow(s) - Lp::one())
    } else {
        Lp::u_pow(t) * (Lp::u_pow(s - 1) + Lp::one())
    }
}

/// β of `{Σ x_i² − Σ y_j² = −1}`, which is `X^1_{t,s}` with the roles swapped.
pub fn beta_xneg1(s: u32, t: u32) -> Lp {
    beta_x1(t, s)
}

/// Closed form for any level.
pub fn beta_quadric(level: super::Level, s: u32, t: u32) -> Lp {
    match level {
        super::Level::Minus => beta_xneg1(s, t),
        super::Level::Zero => beta_x0(s, t),
        super::Level::Plus => beta_x1(s, t),
    }
}

/// Whether `β(X_{m,M}) = 1 + (u − 1) β(Z_{m,M})` holds, i.e. the punctured
/// cone fibres over `Z_{m,M}` with fibre `R*`.
pub fn cone_relation_check(m: u32, big_m: u32) -> bool {
    match beta_z(m, big_m) {
        Ok(z) => beta_x0(m, big_m) == Lp::one() + (Lp::u() - Lp::one()) * z,
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> Lp {
        s.parse().unwrap()
    }

    #[test]
    fn cone_values() {
        assert_eq!(beta_x0(2, 2), lp("u^3 + u^2 - u"));
        assert_eq!(beta_x0(1, 1), lp("2*u - 1"));
        assert_eq!(beta_x0(3, 3), lp("u^5 + u^3 - u^2"));
        assert_eq!(beta_x0(0, 3), lp("1"));
        assert_eq!(beta_x0(3, 0), lp("1"));
        assert_eq!(beta_x0(3, 2), beta_x0(2, 3));
    }

    #[test]
    fn toric_decomposition_of_x22() {
        // (R*)^3 + 4 (R*)^2 + 4 R* + point
        let r = Lp::u() - Lp::one();
        let toric = r.pow(3) + Lp::constant(4) * r.pow(2) + Lp::constant(4) * &r + Lp::one();
        assert_eq!(beta_x0(2, 2), toric);
    }

    #[test]
    fn projective_values() {
        assert_eq!(beta_z(2, 2).unwrap(), lp("u^2 + 2*u + 1"));
        assert_eq!(beta_z(1, 1).unwrap(), lp("2"));
        assert_eq!(beta_z(1, 2).unwrap(), lp("1 + u"));
        assert_eq!(beta_z(2, 1).unwrap(), lp("1 + u"));
        assert_eq!(
            beta_z(0, 3),
            Err(ScissorError::EmptyProjectiveQuadric { m: 0, big_m: 3 })
        );
    }

    #[test]
    fn level_one_values() {
        assert_eq!(beta_x1(1, 1), lp("u - 1"));
        assert_eq!(beta_x1(2, 1), lp("u^2 + u"));
        assert_eq!(beta_x1(0, 2), lp("0"));
        assert_eq!(beta_x1(0, 0), lp("0"));
        assert_eq!(beta_x1(1, 0), lp("2"));
        assert_eq!(beta_x1(2, 0), lp("1 + u"));
        assert_eq!(beta_x1(3, 0), lp("1 + u^2"));
    }

    #[test]
    fn level_minus_one_values() {
        assert_eq!(beta_xneg1(2, 2), lp("u^3 - u"));
        assert_eq!(beta_xneg1(1, 2), lp("u^2 + u"));
        assert_eq!(beta_xneg1(2, 0), lp("0"));
        assert_eq!(beta_xneg1(0, 3), lp("1 + u^2"));
    }

    #[test]
    fn cone_relation_examples() {
        assert!(cone_relation_check(2, 2));
        assert!(cone_relation_check(1, 3));
        assert!(cone_relation_check(1, 1));
        assert!(!cone_relation_check(0, 1));
    }

    #[test]
    fn cone_over_sphere() {
        // X_{1,M} is a cone on S^{M-1}: 1 + (u - 1)(1 + u^{M-1})
        for big_m in 1..=12i64 {
            let cone = Lp::one() + (Lp::u() - Lp::one()) * (Lp::one() + Lp::u_pow(big_m - 1));
            assert_eq!(beta_x0(1, big_m as u32), cone);
        }
    }
}
