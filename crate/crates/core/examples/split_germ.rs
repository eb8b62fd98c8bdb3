//! Hessian inertia and jet splitting of a polynomial germ.
//!
//! Run with `cargo run --example split_germ -- "x1*x2 + x2^3 + x3^4" 5`.

use nash_zeta::germ::{hessian_inertia, parse_germ, split_jet};

fn main() {
    let mut args = std::env::args().skip(1);
    let text = args.next().unwrap_or_else(|| "x1^2 + 2*x1*x2^2 + x2^3*x3 - x3^2".into());
    let jet: u32 = args.next().and_then(|a| a.parse().ok()).unwrap_or(5);

    let f = parse_germ(&text, None).unwrap_or_else(|e| panic!("{e}"));
    let inertia = hessian_inertia(&f).unwrap_or_else(|e| panic!("{e}"));
    println!("f = {f}");
    println!("inertia: s = {}, t = {}, corank = {}", inertia.s, inertia.t, inertia.corank());

    let split = split_jet(&f, jet).unwrap();
    for (i, c) in split.change.iter().enumerate() {
        println!("x{} -> {c}", i + 1);
    }
    println!("quadratic part: {}", split.quadratic_part());
    println!("remainder:      {}", split.remainder);
    println!("residual up to order {jet}: {}", split.residual(&f));
}
