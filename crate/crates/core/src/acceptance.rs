//! The acceptance suite, shared by `vwcalc selftest` and the integration tests.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::assemble::{
    compare_vw, genus_form_normalization, mixed_in_genus_form, surface_preset, Status, Surface,
};
use crate::closedform::{
    first_denominator_identity, root_residual, second_denominator_identity, HorizontalRoutes,
};
use crate::error::Result;
use crate::exactnum::{binom_poly, rat, ratio, ChernPoly, ParamPoly, Rational, TruncSeries};
use crate::qseries::{euler_char_series, nested_partition_count, nested_partition_product, vw_expected_q3, vw_prediction_bracket};
use crate::surfring::{
    blowup_integrate, blowup_integrate_product, mixed_s21, vertical_c2_2, vertical_rank_r, BlowupClass,
    SurfClass, VerticalParts,
};
use crate::tautcalc::{horizontal_coefficient, horizontal_normalization, integrate_cn, TautClass, TautExpr, OMEGA};

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{mark}] {:>2} {}: {}", self.id, self.name, self.detail)
    }
}

fn outcome(id: u8, name: &'static str, r: Result<(bool, String)>) -> CriterionResult {
    let (passed, detail) = r.unwrap_or_else(|e| (false, format!("error: {e}")));
    CriterionResult { id, name, passed, detail }
}

fn gp(a: i64) -> ParamPoly {
    ParamPoly::from_int(a)
}

/// 1, -2(g-1), (g-1)(2g-11), -(2/3)(g-1)(2g^2-31g+126).
pub fn expected_horizontal() -> [ParamPoly; 4] {
    let g = ParamPoly::g();
    let gm1 = &g - &gp(1);
    let quad = &(&(&g * &g).scale(&rat(2)) - &g.scale(&rat(31))) + &gp(126);
    [
        gp(1),
        gm1.scale(&rat(-2)),
        &gm1 * &(&g.scale(&rat(2)) - &gp(11)),
        (&gm1 * &quad).scale(&ratio(-2, 3)),
    ]
}

fn c1_horizontal() -> Result<(bool, String)> {
    let expected = expected_horizontal();
    let mut ok = true;
    for (n, e) in expected.iter().enumerate() {
        ok &= horizontal_coefficient(n) == *e;
    }
    let exp = horizontal_normalization().exponent_of_two();
    ok &= exp == -&(&ParamPoly::pg() + &ParamPoly::g());
    Ok((ok, format!("h_0..h_3 checked, normalization 2-exponent {exp}")))
}

fn c2_routes() -> Result<(bool, String)> {
    let mut ok = true;
    let mut bad = Vec::new();
    for g in [2, 3, 6, 10] {
        let r = HorizontalRoutes::compute(g, 10)?;
        if !r.all_agree() {
            ok = false;
            bad.push(format!("g={g} at q^{:?}", r.first_disagreement()));
        }
    }
    let detail = if ok {
        "four routes agree at g = 2, 3, 6, 10 through q^10".to_string()
    } else {
        bad.join(", ")
    };
    Ok((ok, detail))
}

fn c3_roots() -> Result<(bool, String)> {
    let (l1, r1) = first_denominator_identity(12);
    let (l2, r2) = second_denominator_identity(12);
    let ok = root_residual(12).valuation().is_none() && l1 == r1 && l2 == r2;
    Ok((ok, "root and both denominator identities through q^12".into()))
}

fn c4_vertical() -> Result<(bool, String)> {
    let (norm, poly) = vertical_c2_2();
    let parts = VerticalParts::at(&rat(1))?;
    let ok = norm.exponent_of_two() == -&ParamPoly::p2()
        && poly == &ChernPoly::c2() + &ChernPoly::k2().scale(&rat(6))
        && parts.numerator == SurfClass::from_ints(4, -10, 8, 5)
        && parts.inverted_denominator == SurfClass::from_ints(1, 3, 7, -1);
    Ok((ok, format!("{norm} * ({poly})")))
}

fn c5_rank_r() -> Result<(bool, String)> {
    let r2 = vertical_rank_r(2)?;
    let ok = r2 == vertical_c2_2();
    Ok((ok, format!("rank 2: {} * ({})", r2.0, r2.1)))
}

fn c6_mixed() -> Result<(bool, String)> {
    let k2 = ChernPoly::k2();
    let expected = &k2 * &(&(&k2.scale(&rat(-12)) - &ChernPoly::c2().scale(&rat(2))) + &ChernPoly::from_int(62));
    let mut ok = true;
    for i in 1..=2 {
        for j in 1..=2 {
            for k in 1..=2 {
                let (norm, poly) = mixed_s21(i, j, k)?;
                ok &= poly == expected && norm.exponent_of_two() == -&ParamPoly::p2();
                ok &= poly.to_genus() == mixed_in_genus_form() && norm == genus_form_normalization();
            }
        }
    }
    Ok((ok, format!("all 8 choices give (-2)^(-P2) * ({expected})")))
}

fn c7_blowup() -> Result<(bool, String)> {
    let e = BlowupClass::e();
    let a1 = BlowupClass::a1();
    let b1 = BlowupClass::b1();
    let minus_k2 = -&ChernPoly::k2();
    let e4 = &ChernPoly::c2() - &ChernPoly::k2();
    let mut ok = blowup_integrate(&(&(&e.pow(2) * &a1) * &b1)) == minus_k2
        && blowup_integrate(&(&e.pow(2) * &a1.pow(2))) == minus_k2
        && blowup_integrate(&(&e.pow(3) * &a1)) == minus_k2
        && blowup_integrate(&e.pow(4)) == e4;
    for k in 1..4 {
        ok &= blowup_integrate_product(&e.pow(k), &e.pow(4 - k)) == e4;
    }
    let deg3 = [
        &(&a1 * &b1) * &b1,
        &BlowupClass::a2() * &a1,
        &(&a1 * &a1) * &b1,
        &BlowupClass::b2() * &b1,
    ];
    for c in &deg3 {
        ok &= blowup_integrate(&(&e * c)).is_zero();
    }
    Ok((ok, format!("pushdowns -K2, e^4 = {e4}, reductions agree")))
}

fn c8_headline() -> Result<(bool, String)> {
    let r = compare_vw(&Surface::Symbolic);
    let ok = r.status == Status::Equal && r.normalizations_equal;
    Ok((
        ok,
        format!(
            "{} through q^3; sign ratio (-1)^({}) {} (-1)^vd",
            r.status,
            r.sign_difference,
            if r.sign_matches_vd { "equals" } else { "differs from" }
        ),
    ))
}

fn c9_prediction() -> Result<(bool, String)> {
    let (b, _) = vw_prediction_bracket(3);
    Ok((b.coeffs() == vw_expected_q3().as_slice(), "direct product expansion through q^3".into()))
}

fn c10_partitions() -> Result<(bool, String)> {
    let p = nested_partition_product(18);
    let mut ok = (0..=18).all(|m| Rational::from_integer(nested_partition_count(m as u32).into()) == *p.coeff(m));
    for e in [1, 24, 55] {
        let s = euler_char_series(e, 12);
        ok &= *s.shift() == ratio(-e, 12);
    }
    Ok((ok, "brute force through q^18; shifts -1/12, -2, -55/12".into()))
}

fn random_rate(rng: &mut ChaCha8Rng, n: usize) -> TruncSeries<ParamPoly> {
    let coeffs = (0..=3)
        .map(|_| ParamPoly::constant(ratio(rng.gen_range(-9..=9), rng.gen_range(1..=6))))
        .collect();
    TruncSeries::from_coeffs(OMEGA, coeffs, n)
}

fn c11_poincare() -> Result<(bool, String)> {
    let mut ok = true;
    for n in 0..=10usize {
        for i in 0..=n {
            let mut fact = Rational::from_integer(1.into());
            for k in 1..=i {
                fact *= rat(k as i64);
            }
            let class = TautClass::monomial(n, (n - i) as u32, i as u32, ParamPoly::constant(fact.recip()));
            ok &= integrate_cn(&class) == binom_poly(&ParamPoly::g(), i as u32);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..20 {
        let n = rng.gen_range(1..=6);
        let expr = TautExpr::exp_theta(random_rate(&mut rng, n));
        ok &= expr.integrate_by_expansion() == expr.integrate_by_substitution();
    }
    Ok((ok, "Poincare formula for n <= 10; 20 seeded exp(a theta) checks".into()))
}

fn c12_quintic() -> Result<(bool, String)> {
    let s = Surface::Concrete(surface_preset("quintic")?);
    let r = compare_vw(&s);
    let expected: Vec<ParamPoly> = [1, -10, 90, -580].iter().map(|x| gp(*x)).collect();
    let norm = r.monopole_normalization.describe();
    let ok = r.status == Status::Equal && r.bracket() == expected && norm == "(-2)^(-10)";
    let shown: Vec<String> = r.bracket().iter().map(|c| c.to_string()).collect();
    Ok((ok, format!("{} ({}) with {norm}", r.status, shown.join(", "))))
}

/// Run all twelve criteria in order.
pub fn run_all() -> Vec<CriterionResult> {
    vec![
        outcome(1, "horizontal coefficients", c1_horizontal()),
        outcome(2, "closed-form cross-validation", c2_routes()),
        outcome(3, "root identities", c3_roots()),
        outcome(4, "vertical term", c4_vertical()),
        outcome(5, "rank-r reduction", c5_rank_r()),
        outcome(6, "mixed term", c6_mixed()),
        outcome(7, "blow-up pushdowns", c7_blowup()),
        outcome(8, "monopole vs prediction", c8_headline()),
        outcome(9, "prediction product form", c9_prediction()),
        outcome(10, "nested partitions", c10_partitions()),
        outcome(11, "Poincare calculus", c11_poincare()),
        outcome(12, "quintic end-to-end", c12_quintic()),
    ]
}
