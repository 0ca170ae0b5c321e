//! Nested partitions, Euler characteristic series and theta functions.

use vwcalc::exactnum::Rational;
use vwcalc::qseries::{euler_char_series, gottsche_series, nested_partition_count, nested_partition_product, theta1};

fn main() {
    let p = nested_partition_product(12);
    for m in 0..=12u32 {
        let brute = nested_partition_count(m);
        assert_eq!(Rational::from_integer(brute.clone().into()), *p.coeff(m as usize));
        println!("{m:>2}: {brute}");
    }

    for e in [1, 24, 55] {
        let s = euler_char_series(e, 5);
        println!("e = {e}: {s}");
    }
    println!("Hilbert schemes of K3: {}", gottsche_series(24, 5));
    println!("theta_1 = {}", theta1(12));
}
