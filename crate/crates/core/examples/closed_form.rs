//! The horizontal series four ways: tautological, diagonal, residue, closed form.

use std::env;

use vwcalc::closedform::{closed_form_series, root_residual, root_x0, HorizontalRoutes};
use vwcalc::exactnum::ParamPoly;

fn main() {
    let g: i64 = env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let order = 10;

    let routes = HorizontalRoutes::compute(g, order).expect("g >= 2");
    println!("g = {g}, all routes agree: {}", routes.all_agree());
    for (n, c) in routes.closed_form.coeffs().iter().enumerate() {
        println!("q^{n}: {c}");
    }

    println!("x0 = {}", root_x0(6));
    assert!(root_residual(12).valuation().is_none());

    let (b, norm) = closed_form_series(&ParamPoly::g(), 4);
    println!("symbolic, times {norm}:");
    for (n, c) in b.coeffs().iter().enumerate() {
        println!("  q^{n}: {c}");
    }
}
