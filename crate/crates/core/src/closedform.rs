//! Independent evaluations of the horizontal generating series.
//!
//! Three routes, each exact:
//!
//! 1. the algebraic closed form
//!    `B(q) = (1-q)^(g-1) ((1 + f(q)) / 2)^(1-g)`, `f = (1-3q)/sqrt((1-q)(1-9q))`;
//! 2. the diagonal of the double series
//!    `sum_{i,n} x^i t^n int_{C^[i]} (w-2)^(n+1-2g) (1+w)^(n-g) (1-w)^(-n-g) (1-2w)^g`;
//! 3. the residue of the diagonal integrand at the root `x0(q)` with `x0(0) = 0`.
//!
//! Routes 2 and 3 produce `sum_n a_nn q^n`, which relates to the normalized
//! bracket by `h_n = (-1)^n (-2)^(2g-1) a_nn`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{rat, ratio, Coeff, ParamPoly, Rational, TruncSeries};
use crate::normalization::NormalizationRecord;
use crate::tautcalc::{horizontal_normalization, integrate_cn, TautClass, OMEGA};

/// Series variable for the generating series.
pub const Q: &str = "q";

fn q_lin<C: Coeff>(c: i64, order: usize) -> TruncSeries<C> {
    TruncSeries::binomial(Q, 1, C::from_int(c), order)
}

/// `f(q) = (1 - 3q) / sqrt((1 - q)(1 - 9q))`.
pub fn f_series<C: Coeff>(order: usize) -> TruncSeries<C> {
    let root = (&q_lin::<C>(-1, order) * &q_lin(-9, order)).sqrt().unwrap();
    &q_lin(-3, order) * &root.inv().unwrap()
}

/// `B(q)` with the canonical genus given in any coefficient ring (a symbol or a
/// number).
pub fn closed_form_generic<C: Coeff>(g: &C, order: usize) -> TruncSeries<C> {
    let one = C::one();
    let half_sum = (&TruncSeries::one(Q, order) + &f_series(order)).scale(&ratio(1, 2));
    let left = q_lin::<C>(-1, order).pow(&g.minus(&one)).unwrap();
    let right = half_sum.pow(&one.minus(g)).unwrap();
    &left * &right
}

/// The closed form with normalization `(-2)^(-pg - g)`.
pub fn closed_form_series(g: &ParamPoly, order: usize) -> (TruncSeries<ParamPoly>, NormalizationRecord) {
    (closed_form_generic(g, order), horizontal_normalization())
}

/// The closed form at a concrete genus.
pub fn closed_form_series_at(g: i64, order: usize) -> TruncSeries<Rational> {
    closed_form_generic(&rat(g), order)
}

/// Coefficients `a_{i,n}` indexed by `x`-power `i` and `t`-power `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct BivariateSeries {
    coeffs: Vec<Vec<Rational>>,
    t_order: usize,
}

impl BivariateSeries {
    /// `coeffs[i][n]` for `i <= x_order`, `n <= t_order`.
    pub fn new(coeffs: Vec<Vec<Rational>>) -> Self {
        let t_order = coeffs.first().map_or(0, |r| r.len().saturating_sub(1));
        assert!(coeffs.iter().all(|r| r.len() == t_order + 1), "ragged coefficient grid");
        Self { coeffs, t_order }
    }

    pub fn from_fn<F: Fn(usize, usize) -> Rational>(x_order: usize, t_order: usize, f: F) -> Self {
        Self::new(
            (0..=x_order)
                .map(|i| (0..=t_order).map(|n| f(i, n)).collect())
                .collect(),
        )
    }

    pub fn x_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn t_order(&self) -> usize {
        self.t_order
    }

    pub fn coeff(&self, i: usize, n: usize) -> &Rational {
        &self.coeffs[i][n]
    }
}

/// The integrand of the double series at a fixed `t`-power `n`, as a series in
/// `omega` through `omega^order`.
pub fn dubl_integrand(g: i64, n: usize, order: usize) -> TruncSeries<Rational> {
    let n = n as i64;
    let lin = |c: Rational| TruncSeries::binomial(OMEGA, 1, c, order);
    let e = n + 1 - 2 * g;
    let constant = num_traits::pow(rat(-2), e.unsigned_abs() as usize);
    let constant = if e < 0 { constant.recip() } else { constant };
    let shifted = lin(ratio(-1, 2)).pow_int(e).unwrap().scale(&constant);
    let terms = [
        shifted,
        lin(rat(1)).pow_int(n - g).unwrap(),
        lin(rat(-1)).pow_int(-n - g).unwrap(),
        lin(rat(-2)).pow_int(g).unwrap(),
    ];
    terms.iter().skip(1).fold(terms[0].clone(), |acc, s| &acc * s)
}

/// Expand the double series on the square grid `i, n <= order`, integrating each
/// `omega`-series over `C^[i]`.
pub fn expand_dubl(g: i64, order: usize) -> BivariateSeries {
    let columns: Vec<TruncSeries<ParamPoly>> = (0..=order)
        .map(|n| dubl_integrand(g, n, order).map(|c| ParamPoly::constant(c.clone())))
        .collect();
    BivariateSeries::from_fn(order, order, |i, n| {
        let class = TautClass::from_omega_series(i, &columns[n]);
        integrate_cn(&class)
            .as_constant()
            .expect("fixed genus gives rational integrals")
    })
}

/// `sum_n a_nn q^n`.
pub fn diagonal(b: &BivariateSeries) -> Result<TruncSeries<Rational>> {
    if b.x_order() != b.t_order() {
        return Err(Error::NotSquare {
            x_order: b.x_order(),
            t_order: b.t_order(),
        });
    }
    let coeffs = (0..=b.x_order()).map(|n| b.coeff(n, n).clone()).collect();
    Ok(TruncSeries::from_coeffs(Q, coeffs, b.x_order()))
}

/// `h_n = (-1)^n (-2)^(2g-1) a_n`: convert the diagonal series to the
/// normalized bracket.
pub fn diagonal_to_bracket(a: &TruncSeries<Rational>, g: i64) -> TruncSeries<Rational> {
    let scale = num_traits::pow(rat(-2), (2 * g - 1) as usize);
    let coeffs = a
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| {
            let s = if n % 2 == 0 { scale.clone() } else { -scale.clone() };
            c * s
        })
        .collect();
    TruncSeries::from_coeffs(Q, coeffs, a.order())
}

/// `sqrt(1 + 8q/(1+q))`, the difference of the two roots.
pub fn root_gap(order: usize) -> TruncSeries<Rational> {
    let one_plus = q_lin::<Rational>(1, order);
    let arg = &TruncSeries::one(Q, order)
        + &(&TruncSeries::monomial(Q, 1, rat(8), order) * &one_plus.inv().unwrap());
    arg.sqrt().expect("argument has constant term 1")
}

/// `x0 = (1 - sqrt(1 + 8q/(1+q))) / 2`, the root tending to 0 with `q`.
pub fn root_x0(order: usize) -> TruncSeries<Rational> {
    (&TruncSeries::one(Q, order) - &root_gap(order)).scale(&ratio(1, 2))
}

/// `x0^2 - x0 - 2q/(1+q)`; identically zero.
pub fn root_residual(order: usize) -> TruncSeries<Rational> {
    let x0 = root_x0(order);
    let two_q = TruncSeries::monomial(Q, 1, rat(2), order);
    let rhs = &two_q * &q_lin::<Rational>(1, order).inv().unwrap();
    &(&(&x0 * &x0) - &x0) - &rhs
}

/// `x0^2 - x0 - 2` and its claimed value `-2/(1+q)`.
pub fn first_denominator_identity(order: usize) -> (TruncSeries<Rational>, TruncSeries<Rational>) {
    let x0 = root_x0(order);
    let lhs = &(&(&x0 * &x0) - &x0) - &TruncSeries::constant(Q, rat(2), order);
    let rhs = q_lin::<Rational>(1, order).inv().unwrap().scale(&rat(-2));
    (lhs, rhs)
}

/// `x0^2 - 3 x0 + 2` and its claimed value `(1 + 3q + sqrt((1+q)(1+9q)))/(1+q)`.
pub fn second_denominator_identity(order: usize) -> (TruncSeries<Rational>, TruncSeries<Rational>) {
    let x0 = root_x0(order);
    let lhs = &(&(&x0 * &x0) - &x0.scale(&rat(3))) + &TruncSeries::constant(Q, rat(2), order);
    let root = (&q_lin::<Rational>(1, order) * &q_lin(9, order)).sqrt().unwrap();
    let num = &q_lin::<Rational>(3, order) + &root;
    let rhs = &num * &q_lin::<Rational>(1, order).inv().unwrap();
    (lhs, rhs)
}

/// Residue of the diagonal integrand at `x0`:
/// `(1-2x0)^g / ((x0-2)^(2g-1) (1+x0)^g (1-x0)^(g-1)) * 1/((1+q)(x1-x0))`.
///
/// This is `sum_n a_nn q^n`; see [`residue_series`] for the normalized bracket.
pub fn residue_diagonal(g: i64, order: usize) -> Result<TruncSeries<Rational>> {
    let one = TruncSeries::<Rational>::one(Q, order);
    let gap = root_gap(order);
    let x0 = root_x0(order);
    if !x0.coeff(0).is_zero() {
        return Err(Error::InvalidArgument("root does not tend to the origin".into()));
    }
    let num = (&one - &x0.scale(&rat(2))).pow_int(g)?;
    let den = [
        (&x0 - &TruncSeries::constant(Q, rat(2), order)).pow_int(2 * g - 1)?,
        (&one + &x0).pow_int(g)?,
        (&one - &x0).pow_int(g - 1)?,
        &q_lin::<Rational>(1, order) * &gap,
    ];
    let den = den.iter().skip(1).fold(den[0].clone(), |acc, s| &acc * s);
    Ok(&num * &den.inv()?)
}

/// The residue in its simplified form
/// `(-1)^(g-1) (1+9q)^((g-1)/2) / ((x0^2-x0-2)^g (x0^2-3x0+2)^(g-1) (1+q)^((g+1)/2))`.
pub fn residue_diagonal_simplified(g: i64, order: usize) -> Result<TruncSeries<Rational>> {
    let (d1, _) = first_denominator_identity(order);
    let (d2, _) = second_denominator_identity(order);
    let sign = if (g - 1) % 2 == 0 { rat(1) } else { rat(-1) };
    let up = q_lin::<Rational>(9, order).pow(&ratio(g - 1, 2))?;
    let down = q_lin::<Rational>(1, order).pow(&ratio(g + 1, 2))?;
    let den = &(&d1.pow_int(g)? * &d2.pow_int(g - 1)?) * &down;
    Ok((&up * &den.inv()?).scale(&sign))
}

/// Normalized horizontal bracket from the residue at `x0`; equals the closed form.
pub fn residue_series(g: i64, order: usize) -> Result<TruncSeries<Rational>> {
    let a = residue_diagonal(g, order)?;
    Ok(diagonal_to_bracket(&a, g))
}

/// The four evaluations of the horizontal bracket at one integer genus.
#[derive(Debug, Clone)]
pub struct HorizontalRoutes {
    pub g: i64,
    pub tautological: TruncSeries<Rational>,
    pub diagonal: TruncSeries<Rational>,
    pub residue: TruncSeries<Rational>,
    pub closed_form: TruncSeries<Rational>,
}

impl HorizontalRoutes {
    pub fn compute(g: i64, order: usize) -> Result<Self> {
        let taut = crate::tautcalc::horizontal_series(order)
            .0
            .map(|c| c.eval_int(g, 0));
        let diag = diagonal_to_bracket(&diagonal(&expand_dubl(g, order))?, g);
        Ok(Self {
            g,
            tautological: taut,
            diagonal: diag,
            residue: residue_series(g, order)?,
            closed_form: closed_form_series_at(g, order),
        })
    }

    pub fn all_agree(&self) -> bool {
        self.tautological == self.closed_form
            && self.diagonal == self.closed_form
            && self.residue == self.closed_form
    }

    /// First power of `q` at which some route disagrees with the closed form.
    pub fn first_disagreement(&self) -> Option<usize> {
        (0..=self.closed_form.order()).find(|&k| {
            let c = self.closed_form.coeff(k);
            self.tautological.coeff(k) != c || self.diagonal.coeff(k) != c || self.residue.coeff(k) != c
        })
    }
}

/// Certify the symbolic closed form through `q^order` against the residue route
/// at the `order + 2` genera `2..=order + 3`; each coefficient has `g`-degree at
/// most `n + 1`, so agreement at that many points is an identity in `Q[g]`.
pub fn certify_closed_form(order: usize) -> Result<bool> {
    let (symbolic, _) = closed_form_series(&ParamPoly::g(), order);
    for (n, c) in symbolic.coeffs().iter().enumerate() {
        if c.degree().unwrap_or(0) as usize > n + 1 {
            return Ok(false);
        }
    }
    for g in 2..=(order as i64 + 3) {
        let numeric = residue_series(g, order)?;
        if symbolic.map(|c| c.eval_int(g, 0)) != numeric {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `1`: convenience for callers comparing against the degenerate genus.
pub fn unit_series(order: usize) -> TruncSeries<Rational> {
    TruncSeries::from_coeffs(Q, vec![Rational::one()], order)
}
