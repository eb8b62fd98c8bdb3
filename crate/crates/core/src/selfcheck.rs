//! Grid checks of every exact identity the engine relies on.
//!
//! The closed forms are injected through [`ClosedForms`] so a deliberately
//! broken formula can be shown to fail the harness.

use std::fmt;
use std::thread;

use serde::Serialize;

use crate::algebra::LaurentPolynomial as Lp;
use crate::arcspace::{self, QuadraticGerm, Selector};
use crate::germ::{recover_minmax_naive, recover_signature, NaiveRecovery};
use crate::scissor::{self, beta_eval, Level, SetExpression};

/// The closed forms checked against the decomposition engine.
#[derive(Clone, Copy)]
pub struct ClosedForms {
    pub x0: fn(u32, u32) -> Lp,
    pub x1: fn(u32, u32) -> Lp,
    pub xneg1: fn(u32, u32) -> Lp,
    pub z: fn(u32, u32) -> Lp,
}

fn beta_z_total(m: u32, big_m: u32) -> Lp {
    scissor::beta_z(m, big_m).unwrap_or_default()
}

impl Default for ClosedForms {
    fn default() -> Self {
        Self {
            x0: scissor::beta_x0,
            x1: scissor::beta_x1,
            xneg1: scissor::beta_xneg1,
            z: beta_z_total,
        }
    }
}

impl ClosedForms {
    fn quadric(&self, level: Level, s: u32, t: u32) -> Lp {
        match level {
            Level::Minus => (self.xneg1)(s, t),
            Level::Zero => (self.x0)(s, t),
            Level::Plus => (self.x1)(s, t),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl CheckLine {
    fn new(name: &str) -> Self {
        Self {
            name: name.to_string(),
            checked: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SelfCheckReport {
    pub max: u32,
    pub lines: Vec<CheckLine>,
}

impl SelfCheckReport {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(CheckLine::passed)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }
}

impl fmt::Display for SelfCheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.lines {
            if line.passed() {
                writeln!(f, "{}: {} identities OK", line.name, line.checked)?;
            } else {
                writeln!(
                    f,
                    "{}: {} of {} identities FAILED",
                    line.name,
                    line.failures.len(),
                    line.checked
                )?;
                for failure in &line.failures {
                    writeln!(f, "  {failure}")?;
                }
            }
        }
        write!(f, "{}", if self.passed() { "all checks passed" } else { "selfcheck FAILED" })
    }
}

fn oracle_grid(max: u32, forms: &ClosedForms) -> CheckLine {
    let mut line = CheckLine::new("closed-form/oracle grid");
    for level in Level::ALL {
        for s in 0..=max {
            for t in 0..=max {
                let closed = forms.quadric(level, s, t);
                let oracle = beta_eval(&SetExpression::QuadricAffine { level, s, t });
                line.check(oracle.as_ref() == Ok(&closed), || {
                    format!(
                        "(c,s,t)=({},{s},{t}): closed form {closed}, oracle {}",
                        level.value(),
                        oracle.map(|b| b.to_string()).unwrap_or_else(|e| e.to_string())
                    )
                });
            }
        }
    }
    line
}

fn projective_grid(max: u32, forms: &ClosedForms) -> Vec<CheckLine> {
    let mut z_line = CheckLine::new("projective quadric oracle");
    let mut cone = CheckLine::new("cone relation X = 1 + (u-1) Z");
    let mut diff = CheckLine::new("projective difference identity");
    let u_minus_1 = Lp::u() - Lp::one();
    for m in 1..=max {
        for big_m in 1..=max {
            let z = (forms.z)(m, big_m);
            let oracle = beta_eval(&SetExpression::QuadricProjective { m, big_m });
            z_line.check(oracle.as_ref() == Ok(&z), || format!("Z_{{{m},{big_m}}}: closed form {z}"));
            let x0 = (forms.x0)(m, big_m);
            cone.check(x0 == Lp::one() + &u_minus_1 * &z, || format!("(m,M)=({m},{big_m})"));
            let (s, t) = (m, big_m);
            let x1 = (forms.x1)(s, t);
            let via_z = if s <= t {
                (forms.z)(s, t + 1) - (forms.z)(s, t)
            } else {
                (forms.z)(t + 1, s) - (forms.z)(t, s)
            };
            diff.check(x1 == via_z, || format!("(s,t)=({s},{t}): {x1} vs {via_z}"));
        }
    }
    vec![z_line, cone, diff]
}

fn symmetry_and_degree(max: u32, forms: &ClosedForms) -> Vec<CheckLine> {
    let mut sym = CheckLine::new("X^-1_{s,t} = X^1_{t,s}");
    let mut deg = CheckLine::new("degree = s+t-1 on positive-dimensional quadrics");
    for s in 0..=max {
        for t in 0..=max {
            sym.check((forms.xneg1)(s, t) == (forms.x1)(t, s), || format!("(s,t)=({s},{t})"));
            for level in Level::ALL {
                let set = SetExpression::QuadricAffine { level, s, t };
                if set.dimension().is_some_and(|d| d > 0) {
                    let beta = forms.quadric(level, s, t);
                    deg.check(beta.degree() == Some((s + t - 1) as i64), || {
                        format!("(c,s,t)=({},{s},{t}): degree {:?}", level.value(), beta.degree())
                    });
                }
            }
        }
    }
    vec![sym, deg]
}

fn germs(max_d: u32) -> impl Iterator<Item = QuadraticGerm> {
    (1..=max_d).flat_map(move |d| {
        (0..=d).flat_map(move |s| (0..=d - s).filter_map(move |t| QuadraticGerm::new(d, s, t).ok()))
    })
}

fn zeta_grid(max: u32) -> Vec<CheckLine> {
    let max_d = max.min(6);
    let order = 6;
    let mut consistency = CheckLine::new("zeta: strata vs closed form");
    let mut stable = CheckLine::new("zeta: stabilization d -> d+1");
    let mut odd = CheckLine::new("zeta: odd coefficients plus = minus");
    let mut swap = CheckLine::new("zeta: sign swap under f -> -f");
    let mut degree = CheckLine::new("zeta: u-degree <= 0");
    for germ in germs(max_d) {
        let mut by_selector = Vec::new();
        for selector in Selector::ALL {
            let z = arcspace::zeta(&germ, selector, order).expect("valid germ");
            let closed = arcspace::zeta_closed(&germ, selector, order).expect("valid germ");
            consistency.check(z == closed, || format!("{germ} {selector}"));
            let lifted = QuadraticGerm::new(germ.dim() + 1, germ.plus(), germ.minus()).unwrap();
            let z_lifted = arcspace::zeta(&lifted, selector, order).unwrap();
            stable.check(z == z_lifted, || format!("{germ} {selector}"));
            for (n, c) in z.terms() {
                degree.check(c.degree().is_none_or(|d| d <= 0), || format!("{germ} {selector} T^{n}"));
            }
            by_selector.push(z);
        }
        let (plus, minus) = (&by_selector[1], &by_selector[2]);
        for n in (1..=order).step_by(2) {
            odd.check(plus.coeff(n) == minus.coeff(n), || format!("{germ} T^{n}"));
        }
        let swapped = arcspace::zeta(&germ.negated(), Selector::Minus, order).unwrap();
        swap.check(*plus == swapped, || format!("{germ}"));
    }
    vec![consistency, stable, odd, swap, degree]
}

fn recovery_grid(max: u32) -> Vec<CheckLine> {
    let mut signed = CheckLine::new("signature round trip from T^2");
    for germ in germs(max.min(8)) {
        let plus = arcspace::zeta(&germ, Selector::Plus, 2).unwrap().coeff(2);
        let minus = arcspace::zeta(&germ, Selector::Minus, 2).unwrap().coeff(2);
        let got = recover_signature(&plus, &minus);
        signed.check(got == Ok((germ.plus(), germ.minus())), || format!("{germ}: {got:?}"));
    }
    let mut naive = CheckLine::new("naive (min,max) recovery");
    for m in 1..=max.min(6) {
        for big_m in m..=max {
            let got = recover_minmax_naive(&arcspace::t2_naive_closed(m, big_m));
            let ok = match got {
                Ok(NaiveRecovery::Determined { m: a, big_m: b }) => big_m != m + 1 && (a, b) == (m, big_m),
                Ok(NaiveRecovery::Ambiguous { .. }) => big_m == m + 1,
                Err(_) => false,
            };
            naive.check(ok, || format!("(m,M)=({m},{big_m}): {got:?}"));
        }
    }
    vec![signed, naive]
}

/// Runs every grid up to `max` with the given closed forms.
pub fn run_with(max: u32, forms: &ClosedForms) -> SelfCheckReport {
    let max = max.max(2);
    let lines = thread::scope(|scope| {
        let jobs = [
            scope.spawn(move || vec![oracle_grid(max, forms)]),
            scope.spawn(move || projective_grid(max, forms)),
            scope.spawn(move || symmetry_and_degree(max, forms)),
            scope.spawn(move || zeta_grid(max)),
            scope.spawn(move || recovery_grid(max)),
        ];
        jobs.into_iter()
            .flat_map(|job| job.join().expect("selfcheck worker panicked"))
            .collect()
    });
    SelfCheckReport { max, lines }
}

pub fn selfcheck(max: u32) -> SelfCheckReport {
    run_with(max, &ClosedForms::default())
}
