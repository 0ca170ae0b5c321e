//! Integrals over symmetric products of a curve in terms of omega and theta.

use vwcalc::exactnum::{binom_poly, ratio, ParamPoly, TruncSeries};
use vwcalc::tautcalc::{integrate_cn, TautClass, TautExpr, OMEGA};

fn main() {
    // theta^i / i! * omega^(n-i) integrates to binom(g, i).
    let n = 4;
    for i in 0..=n {
        let fact: i64 = (1..=i as i64).product();
        let class = TautClass::monomial(n, (n - i) as u32, i as u32, ParamPoly::constant(ratio(1, fact)));
        let value = integrate_cn(&class);
        assert_eq!(value, binom_poly(&ParamPoly::g(), i as u32));
        println!("C^[{n}]: theta^{i}/{i}! omega^{}  ->  {value}", n - i);
    }

    // exp(a theta) behaves like (1 + a omega)^g under the integral.
    let rate = TruncSeries::from_coeffs(
        OMEGA,
        vec![ParamPoly::constant(ratio(1, 2)), ParamPoly::constant(ratio(-3, 1))],
        n,
    );
    let expr = TautExpr::exp_theta(rate);
    let expanded = expr.integrate_by_expansion();
    let substituted = expr.integrate_by_substitution();
    assert_eq!(expanded, substituted);
    println!("int exp((1/2 - 3w) theta) = {expanded}");
}
