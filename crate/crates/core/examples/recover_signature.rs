//! Reads `(s, t)` back from `T²` coefficients, and shows where the naive
//! coefficient alone loses the information.

use nash_zeta::arcspace::{zeta, QuadraticGerm, Selector};
use nash_zeta::germ::{recover_minmax_naive, recover_signature};

fn main() {
    for (d, s, t) in [(3, 2, 1), (5, 0, 4), (6, 3, 3), (8, 7, 1)] {
        let germ = QuadraticGerm::new(d, s, t).unwrap();
        let c = |sel| zeta(&germ, sel, 2).unwrap().coeff(2);
        let (plus, minus, naive) = (c(Selector::Plus), c(Selector::Minus), c(Selector::Naive));
        println!("{germ}");
        println!("  plus  {plus}\n  minus {minus}\n  naive {naive}");
        println!("  signed recovery: {:?}", recover_signature(&plus, &minus).unwrap());
        println!("  naive recovery:  {:?}", recover_minmax_naive(&naive).unwrap());
    }
}
