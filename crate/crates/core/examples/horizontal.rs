//! Horizontal contributions h_n from the tautological pipeline.

use vwcalc::exactnum::rat;
use vwcalc::tautcalc::{horizontal_coefficient, horizontal_coefficient_at_t, horizontal_series};

fn main() {
    let (h, norm) = horizontal_series(5);
    println!("normalization {norm}");
    for (n, c) in h.coeffs().iter().enumerate() {
        println!("h_{n} = {c}");
    }

    // The equivariant weight drops out.
    for t in [rat(1), rat(3), rat(-2)] {
        assert_eq!(horizontal_coefficient_at_t(3, &t), horizontal_coefficient(3));
    }

    let quintic: Vec<String> = h.coeffs().iter().map(|c| c.eval_int(6, 4).to_string()).collect();
    println!("quintic (g = 6): {}", quintic.join(", "));
}
