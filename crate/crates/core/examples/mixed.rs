//! The mixed term on S^[2,1] via the blow-up of S x S along the diagonal.

use vwcalc::exactnum::rat;
use vwcalc::surfring::{blowup_integrate, mixed_at_t, mixed_s21, BlowupClass};

fn main() {
    let e = BlowupClass::e();
    let a1 = BlowupClass::a1();
    println!("int e^2 a1 b1 = {}", blowup_integrate(&(&(&e.pow(2) * &a1) * &BlowupClass::b1())));
    println!("int e^3 a1    = {}", blowup_integrate(&(&e.pow(3) * &a1)));
    println!("int e^4       = {}", blowup_integrate(&e.pow(4)));

    for i in 1..=2 {
        for j in 1..=2 {
            for k in 1..=2 {
                let (norm, poly) = mixed_s21(i, j, k).unwrap();
                println!("(i,j,k) = ({i},{j},{k}): {norm} * ({poly})");
            }
        }
    }

    // Only t^0 survives; any weight gives the same answer.
    let at_t = mixed_at_t(&rat(7), 1, 1, 1).unwrap();
    println!("at t = 7: {at_t}");
}
