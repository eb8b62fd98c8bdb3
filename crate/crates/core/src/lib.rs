//! Exact virtual Poincaré polynomials of real signature quadrics and zeta
//! functions of quadratic Nash germs.
//!
//! The crate is organized bottom-up:
//!
//! - [`algebra`]: Laurent polynomials in `u` and truncated series in `T`.
//! - [`scissor`]: β of constructible sets, by closed forms and by an
//!   independent decomposition engine.
//! - [`arcspace`]: stratification of truncated arc spaces of
//!   `Σ x_i² − Σ y_j²` and the naive and signed zeta functions.
//! - [`germ`]: polynomial germs, Hessian inertia, jet splitting, signature
//!   recovery from zeta coefficients, and the zeta-based discriminator.
//! - [`selfcheck`]: grid checks of every exact identity.
//! - [`cli`]: the command-line surface.
//!
//! ```
//! use nash_zeta::arcspace::{zeta, QuadraticGerm, Selector};
//! use nash_zeta::germ::recover_signature;
//!
//! let germ = QuadraticGerm::new(3, 2, 1).unwrap();
//! let plus = zeta(&germ, Selector::Plus, 2).unwrap().coeff(2);
//! let minus = zeta(&germ, Selector::Minus, 2).unwrap().coeff(2);
//! assert_eq!(plus.to_string(), "u^-1 + u^-2");
//! assert_eq!(recover_signature(&plus, &minus).unwrap(), (2, 1));
//! ```

pub mod algebra;
pub mod scissor;
pub mod arcspace;
pub mod germ;
pub mod selfcheck;
pub mod cli;
