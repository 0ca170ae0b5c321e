//! Truncated power series over exact rationals and over Q[g, pg].

use vwcalc::exactnum::{rat, ratio, ParamPoly, TruncSeries};

fn main() {
    let n = 6;
    let a = TruncSeries::from_coeffs("q", vec![rat(1), rat(-3), rat(1)], n);
    println!("1/(1 - 3q + q^2)      = {}", a.inv().unwrap());

    let b = TruncSeries::from_coeffs("q", vec![rat(1), rat(-10), rat(9)], n);
    let r = b.sqrt().unwrap();
    println!("sqrt(1 - 10q + 9q^2)  = {r}");
    assert_eq!(&r * &r, b);

    let c = TruncSeries::binomial("q", 1, rat(2), n);
    println!("(1 + 2q)^(3/2)        = {}", c.pow(&ratio(3, 2)).unwrap());

    // A symbolic exponent keeps coefficients polynomial in g.
    let one_minus_g = &ParamPoly::from_int(1) - &ParamPoly::g();
    let s = TruncSeries::binomial("q", 1, ParamPoly::from_int(2), 3);
    let p = s.pow(&one_minus_g).unwrap();
    for (k, coeff) in p.coeffs().iter().enumerate() {
        println!("(1 + 2q)^(1-g), q^{k}: {coeff}");
    }

    // Leading fractional powers are carried as a shift.
    let shifted = TruncSeries::<vwcalc::Rational>::one("q", 3).with_shift(ratio(1, 4));
    println!("q^(1/4) * 1            = {shifted}");
}
