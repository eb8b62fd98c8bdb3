//! Compares germs pairwise through their zeta coefficients.

use nash_zeta::germ::{discriminate, parse_germ, Verdict};

fn main() {
    let pairs = [
        ("x1^2 + x2^2 - x3^2", "x1^2 - x2^2 - x3^2"),
        ("x1^2 + x2^2", "x1^2 + 2*x1*x2 + 2*x2^2"),
        ("x1^2 + x2^2 + x3^3", "x1^2 + x2^2 + x3^2"),
        ("x1*x2 + x3^4", "x1^2 - x2^2 + x3^3"),
    ];
    for (f, g) in pairs {
        let result = discriminate(&parse_germ(f, None).unwrap(), &parse_germ(g, None).unwrap(), 6).unwrap();
        let summary = match result.verdict {
            Verdict::Distinguished { selector, n, f_coeff, g_coeff, .. } => {
                format!("distinguished at T^{n} ({selector}): {f_coeff} vs {g_coeff}")
            }
            Verdict::NotDistinguished { up_to } => format!("same coefficients up to T^{up_to}"),
        };
        println!("{f}  |  {g}\n  {summary}");
    }
}
