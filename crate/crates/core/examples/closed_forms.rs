//! Closed-form β of the signature quadrics on a small grid.
//!
//! Run with `cargo run --example closed_forms -- 5`.

use nash_zeta::scissor::{beta_x0, beta_x1, beta_xneg1, beta_z};

fn main() {
    let max: u32 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    println!("{:>7}  {:<28} {:<28} {:<28}", "(s,t)", "X^0", "X^1", "X^-1");
    for s in 0..=max {
        for t in 0..=max {
            println!(
                "{:>7}  {:<28} {:<28} {:<28}",
                format!("({s},{t})"),
                beta_x0(s, t).to_string(),
                beta_x1(s, t).to_string(),
                beta_xneg1(s, t).to_string()
            );
        }
    }
    println!();
    for m in 1..=max {
        for big_m in m..=max {
            println!("Z_{{{m},{big_m}}} = {}", beta_z(m, big_m).expect("m, M >= 1"));
        }
    }
}
