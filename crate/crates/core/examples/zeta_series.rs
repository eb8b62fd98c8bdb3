//! Naive and signed zeta series of `Σ_{i≤s} x_i² − Σ_{j≤t} y_j²` on `R^d`,
//! with the stratification of one arc space.
//!
//! Run with `cargo run --example zeta_series -- d s t [order]`.

use nash_zeta::arcspace::{stratify, zeta, QuadraticGerm, Selector, DEFAULT_ORDER};

fn main() {
    let args: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (d, s, t) = match args[..] {
        [d, s, t, ..] => (d, s, t),
        _ => (3, 2, 1),
    };
    let order = args.get(3).map_or(DEFAULT_ORDER, |&n| n as usize);
    let germ = QuadraticGerm::new(d, s, t).unwrap_or_else(|e| panic!("{e}"));

    for selector in Selector::ALL {
        println!("{selector:>5}: {}", zeta(&germ, selector, order).unwrap());
    }

    let report = stratify(&germ, 4, Selector::Plus).unwrap();
    println!("\nA_4^+1 of {germ}, beta = {}", report.total_beta);
    for stratum in &report.strata {
        println!("  {}\n    beta = {}", stratum.description, stratum.beta);
    }
}
