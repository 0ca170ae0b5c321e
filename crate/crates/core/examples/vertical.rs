//! Vertical terms: rank 2 and the rank-r formula.

use vwcalc::assemble::surface_preset;
use vwcalc::exactnum::rat;
use vwcalc::surfring::{vertical_c2_2, vertical_rank_r, VerticalParts};

fn main() {
    let parts = VerticalParts::at(&rat(1)).unwrap();
    println!("numerator     {}", parts.numerator);
    println!("1/denominator {}", parts.inverted_denominator);

    let (norm, poly) = vertical_c2_2();
    println!("rank 2: {norm} * ({poly})");

    let quintic = surface_preset("quintic").unwrap();
    for r in 2..=5 {
        let (norm, poly) = vertical_rank_r(r).unwrap();
        println!(
            "rank {r}: {norm} * ({poly});  quintic bracket {}",
            quintic.eval_chern(&poly)
        );
    }
}
