//! Tautological calculus on the symmetric products `C^[n]` of the canonical
//! curve, and the horizontal (`Z_1 = empty`) contributions built from it.
//!
//! Classes are polynomials in `omega` (the class of `C^[n-1]`) and `theta` (the
//! pulled-back theta divisor). They are only ever compared after integration:
//! `theta^i / i!` integrates against `omega^(n-i)` to `binom(g, i)`, so
//! `theta^i` may be replaced by `i! binom(g, i) omega^i` under the integral.

use std::collections::BTreeMap;

use num_traits::One;

use crate::exactnum::{binom_poly, ratio, ParamPoly, Rational, TruncSeries};
use crate::normalization::NormalizationRecord;

/// Name of the series variable standing for `omega`.
pub const OMEGA: &str = "w";

/// A class on `C^[n]`: map from `(omega power, theta power)` to coefficients.
///
/// Monomials of total degree above `n` are dropped on construction.
#[derive(Debug, Clone, PartialEq)]
pub struct TautClass {
    n: usize,
    terms: BTreeMap<(u32, u32), ParamPoly>,
}

impl TautClass {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(n: usize, omega: u32, theta: u32, c: ParamPoly) -> Self {
        let mut out = Self::zero(n);
        out.add_term(omega, theta, c);
        out
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(n, 0, 0, ParamPoly::from_int(1))
    }

    /// A pure `omega`-series viewed as a class on `C^[n]`.
    pub fn from_omega_series(n: usize, s: &TruncSeries<ParamPoly>) -> Self {
        let mut out = Self::zero(n);
        for (k, c) in s.coeffs().iter().enumerate().take(n + 1) {
            out.add_term(k as u32, 0, c.clone());
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &ParamPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, omega: u32, theta: u32) -> ParamPoly {
        self.terms.get(&(omega, theta)).cloned().unwrap_or_default()
    }

    /// Part of complex degree exactly `d`.
    pub fn degree_part(&self, d: u32) -> Self {
        Self {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|((w, t), _)| w + t == d)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    fn add_term(&mut self, omega: u32, theta: u32, c: ParamPoly) {
        if (omega + theta) as usize > self.n || c.is_zero() {
            return;
        }
        let key = (omega, theta);
        let sum = &self.terms.get(&key).cloned().unwrap_or_default() + &c;
        if sum.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((w, t), c) in &other.terms {
            out.add_term(*w, *t, c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.n.min(other.n));
        for ((w1, t1), c1) in &self.terms {
            for ((w2, t2), c2) in &other.terms {
                out.add_term(w1 + w2, t1 + t2, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &ParamPoly) -> Self {
        let mut out = Self::zero(self.n);
        for ((w, t), x) in &self.terms {
            out.add_term(*w, *t, x * c);
        }
        out
    }
}

/// Apply `theta^i -> i! binom(g, i) omega^i`. Valid only under the integral
/// against powers of `omega`.
pub fn reduce_theta(c: &TautClass) -> TautClass {
    let mut out = TautClass::zero(c.n);
    for ((w, t), x) in &c.terms {
        let mut fact = Rational::one();
        for j in 2..=*t {
            fact *= Rational::from_integer(j.into());
        }
        let weight = binom_poly(&ParamPoly::g(), *t).scale(&fact);
        out.add_term(w + t, 0, x * &weight);
    }
    out
}

/// `int_{C^[n]}`: coefficient of `omega^n` after theta-reduction.
pub fn integrate_cn(c: &TautClass) -> ParamPoly {
    reduce_theta(c).coeff(c.n as u32, 0)
}

/// `P(omega) * exp(theta * a(omega))` on `C^[n]`, with `P` and `a` power series
/// in `omega` truncated at order `n`.
///
/// The theta-exponent is kept unexpanded so that several exponential factors
/// consolidate by adding their rates.
#[derive(Debug, Clone, PartialEq)]
pub struct TautExpr {
    n: usize,
    prefactor: TruncSeries<ParamPoly>,
    theta_rate: TruncSeries<ParamPoly>,
}

impl TautExpr {
    pub fn one(n: usize) -> Self {
        Self {
            n,
            prefactor: TruncSeries::one(OMEGA, n),
            theta_rate: TruncSeries::zero(OMEGA, n),
        }
    }

    pub fn new(prefactor: TruncSeries<ParamPoly>, theta_rate: TruncSeries<ParamPoly>) -> Self {
        let n = prefactor.order().min(theta_rate.order());
        Self {
            n,
            prefactor: prefactor.truncate(n),
            theta_rate: theta_rate.truncate(n),
        }
    }

    /// Pure power series in `omega`.
    pub fn from_series(prefactor: TruncSeries<ParamPoly>) -> Self {
        let n = prefactor.order();
        Self::new(prefactor, TruncSeries::zero(OMEGA, n))
    }

    /// `exp(theta * rate(omega))`.
    pub fn exp_theta(rate: TruncSeries<ParamPoly>) -> Self {
        let n = rate.order();
        Self::new(TruncSeries::one(OMEGA, n), rate)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn prefactor(&self) -> &TruncSeries<ParamPoly> {
        &self.prefactor
    }

    pub fn theta_rate(&self) -> &TruncSeries<ParamPoly> {
        &self.theta_rate
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(
            &self.prefactor * &other.prefactor,
            &self.theta_rate + &other.theta_rate,
        )
    }

    pub fn inv(&self) -> Self {
        Self::new(
            self.prefactor.inv().expect("prefactor constant term is a unit"),
            -&self.theta_rate,
        )
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(self.prefactor.scale(r), self.theta_rate.clone())
    }

    /// Expand the exponential into an honest polynomial in `omega, theta`.
    pub fn to_class(&self) -> TautClass {
        let mut out = TautClass::zero(self.n);
        let mut rate_pow = TruncSeries::one(OMEGA, self.n);
        let mut fact = Rational::one();
        for i in 0..=self.n {
            if i > 0 {
                rate_pow = &rate_pow * &self.theta_rate;
                fact *= Rational::from_integer(i.into());
            }
            let term = &self.prefactor * &rate_pow;
            for j in 0..=(self.n - i) {
                let c = term.coeff(j);
                if !c.is_zero() {
                    out.add_term(j as u32, i as u32, c.scale(&fact.recip()));
                }
            }
        }
        out
    }

    /// Integral over `C^[n]` by expanding and theta-reducing term by term.
    pub fn integrate_by_expansion(&self) -> ParamPoly {
        integrate_cn(&self.to_class())
    }

    /// Integral over `C^[n]` via `exp(a theta) ~ (1 + a omega)^g`.
    pub fn integrate_by_substitution(&self) -> ParamPoly {
        let w = TruncSeries::variable(OMEGA, self.n);
        let base = &TruncSeries::one(OMEGA, self.n) + &(&w * &self.theta_rate);
        let sub = base.pow(&ParamPoly::g()).expect("constant term is 1");
        (&self.prefactor * &sub).coeff(self.n).clone()
    }
}

/// `c_t = (1 + a omega t)^e * exp(-a t theta / (1 + a omega t))`.
///
/// Both the tangent bundle of `C^[n]` (`a = 1`) and tautological bundles
/// `L^[n]` (`a = -1`) have total Chern series of this shape.
#[derive(Debug, Clone, PartialEq)]
pub struct ChernSeries {
    pub slope: Rational,
    pub exponent: ParamPoly,
}

impl ChernSeries {
    /// Specialize the formal parameter to `t` on `C^[n]`.
    pub fn at(&self, t: &Rational, n: usize) -> TautExpr {
        let at = &self.slope * t;
        let lin = TruncSeries::binomial(OMEGA, 1, ParamPoly::constant(at.clone()), n);
        let prefactor = lin.pow(&self.exponent).expect("constant term is 1");
        let rate = lin.inv().expect("constant term is 1").scale(&-at);
        TautExpr::new(prefactor, rate)
    }
}

/// `c_t(T_{C^[n]}) = (1 + omega t)^(n + 1 - g) exp(-t theta / (1 + omega t))`.
pub fn chern_series_tangent(n: usize) -> ChernSeries {
    ChernSeries {
        slope: Rational::one(),
        exponent: &ParamPoly::from_int(n as i64 + 1) - &ParamPoly::g(),
    }
}

/// `c_t(L^[n]) = (1 - omega t)^(n + g - 1 - deg L) exp(t theta / (1 - omega t))`.
pub fn chern_series_bundle(l_degree: &ParamPoly, n: usize) -> ChernSeries {
    ChernSeries {
        slope: -Rational::one(),
        exponent: &(&ParamPoly::from_int(n as i64 - 1) + &ParamPoly::g()) - l_degree,
    }
}

/// Degree of `K_S` restricted to the canonical curve: `K_S^2 = g - 1`.
pub fn canonical_degree() -> ParamPoly {
    ParamPoly::k2()
}

/// Degree of `K_S^2` restricted to the canonical curve: `2g - 2`.
pub fn bicanonical_degree() -> ParamPoly {
    canonical_degree().scale(&Rational::from_integer(2.into()))
}

/// The horizontal integrand on `C^[n]` with the equivariant parameter kept at
/// `t`, excluding the constant `(-2)^(-P2) (-1)^n (-2)^n t^n`:
///
/// `c_{1/2t}((K^2)^[n]) c_{-1/t}(T) c_{-1/t}(K^[n]) / (c_{1/t}(K^[n]) c_{1/t}((K^2)^[n]))`.
pub fn horizontal_integrand(n: usize, t: &Rational) -> TautExpr {
    let k = chern_series_bundle(&canonical_degree(), n);
    let k2 = chern_series_bundle(&bicanonical_degree(), n);
    let tangent = chern_series_tangent(n);
    let inv_t = t.recip();
    let numerator = k2
        .at(&(&inv_t / Rational::from_integer(2.into())), n)
        .mul(&tangent.at(&-&inv_t, n))
        .mul(&k.at(&-&inv_t, n));
    let denominator = k.at(&inv_t, n).mul(&k2.at(&inv_t, n));
    numerator.mul(&denominator.inv())
}

/// Normalization of the horizontal series: `(-2)^(-pg - g) = (-2)^(-P2)`.
pub fn horizontal_normalization() -> NormalizationRecord {
    NormalizationRecord::minus_two_pow(&-&ParamPoly::p2())
}

/// `h_n` with the equivariant parameter set to `t`. Independent of `t`.
pub fn horizontal_coefficient_at_t(n: usize, t: &Rational) -> ParamPoly {
    let mut scalar = Rational::one();
    for _ in 0..n {
        scalar *= t * Rational::from_integer(2.into());
    }
    horizontal_integrand(n, t).integrate_by_expansion().scale(&scalar)
}

/// Coefficient `h_n` of `q^n` in the horizontal series, normalized by
/// [`horizontal_normalization`]. Polynomial in `g`.
pub fn horizontal_coefficient(n: usize) -> ParamPoly {
    horizontal_coefficient_at_t(n, &Rational::one())
}

/// The same coefficient from the consolidated integrand
/// `(-2)^(-pg-1) (-1)^n (omega - 2)^(n+1-g) (1+omega)^n (1-omega)^(-n)
///  exp(theta (1/(2-omega) - 1/(1+omega) - 1/(1-omega)))`,
/// with `(omega - 2)^(n+1-g)` split as `(-2)^(n+1-g) (1 - omega/2)^(n+1-g)`.
///
/// Returns the full normalization record and the polynomial integral.
pub fn horizontal_consolidated(n: usize) -> (NormalizationRecord, ParamPoly) {
    let e = &ParamPoly::from_int(n as i64 + 1) - &ParamPoly::g();
    let record = NormalizationRecord::minus_two_pow(&(&-&ParamPoly::pg() - &ParamPoly::from_int(1)))
        * NormalizationRecord::sign_pow(&ParamPoly::from_int(n as i64))
        * NormalizationRecord::minus_two_pow(&e);
    (record, consolidated_integrand(n, &theta_rates(n)).integrate_by_substitution())
}

/// The three theta-exponent rates `1/(2 - omega)`, `-1/(1 + omega)`, `-1/(1 - omega)`.
pub fn theta_rates(n: usize) -> [TruncSeries<ParamPoly>; 3] {
    let one = ParamPoly::from_int(1);
    let c = |x: i64| ParamPoly::from_int(x);
    let two_minus = TruncSeries::binomial(OMEGA, 1, ParamPoly::constant(ratio(-1, 2)), n)
        .inv()
        .unwrap()
        .scale(&ratio(1, 2));
    let one_plus = TruncSeries::binomial(OMEGA, 1, one.clone(), n).inv().unwrap();
    let one_minus = TruncSeries::binomial(OMEGA, 1, c(-1), n).inv().unwrap();
    [two_minus, -&one_plus, -&one_minus]
}

/// Consolidated integrand with its theta factors multiplied in the given order.
pub fn consolidated_integrand(n: usize, rates: &[TruncSeries<ParamPoly>]) -> TautExpr {
    let e = &ParamPoly::from_int(n as i64 + 1) - &ParamPoly::g();
    let half = TruncSeries::binomial(OMEGA, 1, ParamPoly::constant(ratio(-1, 2)), n);
    let plus = TruncSeries::binomial(OMEGA, 1, ParamPoly::from_int(1), n);
    let minus = TruncSeries::binomial(OMEGA, 1, ParamPoly::from_int(-1), n);
    let prefactor = &(&half.pow(&e).unwrap() * &plus.pow_int(n as i64).unwrap())
        * &minus.pow_int(-(n as i64)).unwrap();
    let mut expr = TautExpr::from_series(prefactor);
    for r in rates {
        expr = expr.mul(&TautExpr::exp_theta(r.clone()));
    }
    expr
}

/// Horizontal series `sum_n h_n q^n` through `q^order` with its normalization.
pub fn horizontal_series(order: usize) -> (TruncSeries<ParamPoly>, NormalizationRecord) {
    let coeffs = (0..=order).map(horizontal_coefficient).collect();
    (
        TruncSeries::from_coeffs("q", coeffs, order),
        horizontal_normalization(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn g() -> ParamPoly {
        ParamPoly::g()
    }

    fn int(n: i64) -> ParamPoly {
        ParamPoly::from_int(n)
    }

    /// `h_1..h_3` as printed in the closed-form expansion.
    fn expected_h(n: usize) -> ParamPoly {
        let gm1 = &g() - &int(1);
        match n {
            0 => int(1),
            1 => gm1.scale(&rat(-2)),
            2 => &gm1 * &(&g().scale(&rat(2)) - &int(11)),
            3 => {
                let quad = &(&(&g() * &g()).scale(&rat(2)) - &g().scale(&rat(31))) + &int(126);
                (&gm1 * &quad).scale(&ratio(-2, 3))
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn poincare_formula_basic_cases() {
        for n in 0..5 {
            assert_eq!(integrate_cn(&TautClass::monomial(n, n as u32, 0, int(1))), int(1));
            assert!(integrate_cn(&TautClass::monomial(n, n as u32 + 1, 0, int(1))).is_zero());
        }
        // theta * omega^(n-1) integrates to g.
        assert_eq!(integrate_cn(&TautClass::monomial(4, 3, 1, int(1))), g());
        // theta^n / n! integrates to binom(g, n).
        let fact = ratio(1, 6);
        let c = TautClass::monomial(3, 0, 3, ParamPoly::constant(fact));
        assert_eq!(integrate_cn(&c), binom_poly(&g(), 3));
        // theta-free terms are untouched by reduction.
        let plain = TautClass::monomial(3, 2, 0, int(7));
        assert_eq!(reduce_theta(&plain), plain);
        assert_eq!(reduce_theta(&TautClass::monomial(4, 3, 1, int(1))), TautClass::monomial(4, 4, 0, g()));
    }

    #[test]
    fn chern_classes_in_low_dimension() {
        // C^[0] is a point.
        let t0 = chern_series_tangent(0).at(&rat(1), 0).to_class();
        assert_eq!(t0, TautClass::one(0));
        let b0 = chern_series_bundle(&canonical_degree(), 0).at(&rat(1), 0).to_class();
        assert_eq!(b0, TautClass::one(0));

        // c_1(T_C) = (2 - g) omega - theta, which integrates to 2 - 2g.
        let t1 = chern_series_tangent(1).at(&rat(1), 1).to_class().degree_part(1);
        assert_eq!(t1.coeff(1, 0), &int(2) - &g());
        assert_eq!(t1.coeff(0, 1), int(-1));
        assert_eq!(integrate_cn(&t1), &int(2) - &g().scale(&rat(2)));

        // c_1(L^[1]) integrates to deg L on C^[1] = C.
        for deg in [canonical_degree(), bicanonical_degree(), int(5)] {
            let c1 = chern_series_bundle(&deg, 1).at(&rat(1), 1).to_class().degree_part(1);
            assert_eq!(integrate_cn(&c1), deg);
        }
    }

    #[test]
    fn tangent_theta_rate_at_one() {
        // The theta-exponent of c_1(T) is -1/(1 + omega).
        let n = 5;
        let expr = chern_series_tangent(n).at(&rat(1), n);
        let expected = -&TruncSeries::binomial(OMEGA, 1, int(1), n).inv().unwrap();
        assert_eq!(*expr.theta_rate(), expected);
    }

    #[test]
    fn half_specialization_matches_shifted_power() {
        // c_{1/2}((K^2)^[n]) has prefactor (1 - omega/2)^(n+1-g)
        // = (-2)^(-(n+1-g)) (omega - 2)^(n+1-g).
        let n = 4;
        let expr = chern_series_bundle(&bicanonical_degree(), n).at(&ratio(1, 2), n);
        let e = &int(n as i64 + 1) - &g();
        let direct = TruncSeries::binomial(OMEGA, 1, ParamPoly::constant(ratio(-1, 2)), n)
            .pow(&e)
            .unwrap();
        assert_eq!(*expr.prefactor(), direct);
    }

    #[test]
    fn horizontal_matches_printed_expansion() {
        for n in 0..=3 {
            assert_eq!(horizontal_coefficient(n), expected_h(n), "h_{n}");
        }
        let at6: Vec<_> = (1..=3).map(|n| horizontal_coefficient(n).eval_int(6, 0)).collect();
        assert_eq!(at6, vec![rat(-10), rat(5), rat(-40)]);
    }

    #[test]
    fn horizontal_is_independent_of_t() {
        for n in 0..=4 {
            let h = horizontal_coefficient(n);
            for t in [rat(2), rat(-3), ratio(1, 3), ratio(-5, 7)] {
                assert_eq!(horizontal_coefficient_at_t(n, &t), h, "n = {n}, t = {t}");
            }
        }
    }

    #[test]
    fn consolidated_form_agrees_and_stays_polynomial() {
        for n in 0..=6 {
            let (record, value) = horizontal_consolidated(n);
            let ratio_record = &record * &horizontal_normalization().inverse();
            let (factor, rest) = ratio_record.split_constant();
            assert_eq!(rest, NormalizationRecord::one(), "symbolic residue at n = {n}");
            assert_eq!(value.scale(&factor), horizontal_coefficient(n), "n = {n}");
        }
    }

    #[test]
    fn theta_consolidation_order_is_irrelevant() {
        let n = 5;
        let [a, b, c] = theta_rates(n);
        let orders = [
            [a.clone(), b.clone(), c.clone()],
            [b.clone(), c.clone(), a.clone()],
            [c.clone(), a.clone(), b.clone()],
            [c, b, a],
        ];
        let first = consolidated_integrand(n, &orders[0]).to_class();
        for o in &orders[1..] {
            assert_eq!(consolidated_integrand(n, o).to_class(), first);
        }
    }

    #[test]
    fn expansion_and_substitution_routes_agree() {
        for n in 0..=6 {
            let expr = horizontal_integrand(n, &rat(1));
            assert_eq!(expr.integrate_by_expansion(), expr.integrate_by_substitution());
        }
    }
}
