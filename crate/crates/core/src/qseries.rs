//! Eta-type products, theta series, partition counts and the Vafa-Witten
//! prediction for the monopole branch.
//!
//! Fractional leading powers like `q^(1/4)` are kept in the series shift and never
//! folded into the coefficients.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::closedform::Q;
use crate::exactnum::{rat, ratio, Coeff, ParamPoly, Rational, TruncSeries};
use crate::normalization::NormalizationRecord;

/// `prod_{n=1}^{N} (1 - q^n)^{exponent(n)}` through `q^N`.
pub fn euler_product<C: Coeff, F: Fn(usize) -> C>(exponent: F, order: usize) -> TruncSeries<C> {
    let mut acc = TruncSeries::one(Q, order);
    for n in 1..=order {
        let e = exponent(n);
        if e.is_zero() {
            continue;
        }
        let factor = TruncSeries::binomial(Q, n, C::from_int(-1), order);
        acc = &acc * &factor.pow(&e).expect("factor has constant term 1");
    }
    acc
}

/// `sum_{j >= 0} q^(j^2 + j)`.
pub fn theta_reduced<C: Coeff>(order: usize) -> TruncSeries<C> {
    let mut coeffs = vec![C::zero(); order + 1];
    let mut j = 0;
    while j * j + j <= order {
        coeffs[j * j + j] = C::one();
        j += 1;
    }
    TruncSeries::from_coeffs(Q, coeffs, order)
}

/// `theta_1 = sum_{n in Z + 1/2} q^(n^2)`, stored as `q^(1/4)` times a power
/// series, by enumerating half-integers with `n^2 <= order + 1/4`.
pub fn theta1(order: usize) -> TruncSeries<Rational> {
    let mut coeffs = vec![rat(0); order + 1];
    let bound = ratio(4 * order as i64 + 1, 4);
    // n = k/2 with k odd, both signs.
    let mut k: i64 = -(2 * (order as i64) + 3);
    while k <= 2 * order as i64 + 3 {
        if k % 2 != 0 {
            let sq = ratio(k * k, 4);
            if sq <= bound {
                let idx = (sq - ratio(1, 4)).to_integer();
                let idx: usize = idx.try_into().expect("small index");
                coeffs[idx] += rat(1);
            }
        }
        k += 1;
    }
    TruncSeries::new(Q, ratio(1, 4), coeffs, order)
}

/// Bracket of the Vafa-Witten monopole prediction,
/// `prod (1-q^(2n))^(-12 nu) (1-q^n)^(2g-2) (sum q^(j^2+j))^(1-g)`.
pub fn vw_prediction_bracket(order: usize) -> (TruncSeries<ParamPoly>, NormalizationRecord) {
    let g = ParamPoly::g();
    let nu = ParamPoly::nu();
    let one = ParamPoly::from_int(1);
    let two_g_minus_two = (&g - &one).scale(&rat(2));
    let even = nu.scale(&rat(-12));
    let product = euler_product(
        |m| {
            if m % 2 == 0 {
                &two_g_minus_two + &even
            } else {
                two_g_minus_two.clone()
            }
        },
        order,
    );
    let theta = theta_reduced::<ParamPoly>(order).pow(&(&one - &g)).unwrap();
    (&product * &theta, vw_normalization())
}

/// `2^(-nu + 1 - g)`.
pub fn vw_normalization() -> NormalizationRecord {
    let e = &(&ParamPoly::from_int(1) - &ParamPoly::nu()) - &ParamPoly::g();
    NormalizationRecord::two_pow(&e)
}

/// The displayed prediction polynomials through `q^3`.
pub fn vw_expected_q3() -> [ParamPoly; 4] {
    let g = ParamPoly::g();
    let nu = ParamPoly::nu();
    let c = ParamPoly::from_int;
    let gm1 = &g - &c(1);
    [
        c(1),
        gm1.scale(&rat(-2)),
        &(&gm1 * &(&g - &c(3))).scale(&rat(2)) + &nu.scale(&rat(12)),
        (&gm1 * &(&(&nu.scale(&rat(18)) + &(&g * &g)) - &(&g.scale(&rat(8)) - &c(9)))).scale(&ratio(-4, 3)),
    ]
}

/// A pair of partitions, both weakly decreasing with positive parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionPair {
    pub lambda: Vec<u32>,
    pub mu: Vec<u32>,
}

impl PartitionPair {
    /// `mu_i <= lambda_i` for all `i` (padding `mu` with zeros).
    pub fn is_nested(&self) -> bool {
        self.mu.len() <= self.lambda.len() && self.mu.iter().zip(&self.lambda).all(|(m, l)| m <= l)
    }

    pub fn size(&self) -> u32 {
        self.lambda.iter().sum::<u32>() + self.mu.iter().sum::<u32>()
    }
}

/// All partitions of `n`, parts in weakly decreasing order.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for p in (1..=max.min(n)).rev() {
            prefix.push(p);
            go(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of nested pairs `mu <= lambda` with `|mu| + |lambda| = total`, by
/// enumeration.
pub fn nested_partition_count(total: u32) -> BigUint {
    let mut count = BigUint::zero();
    for lsize in 0..=total {
        let msize = total - lsize;
        if msize > lsize {
            continue;
        }
        let mus = partitions(msize);
        for lambda in partitions(lsize) {
            for mu in &mus {
                let pair = PartitionPair {
                    lambda: lambda.clone(),
                    mu: mu.clone(),
                };
                if pair.is_nested() {
                    count += 1u32;
                }
            }
        }
    }
    count
}

/// `(1 - q) prod (1 - q^n)^(-2)`.
pub fn nested_partition_product(order: usize) -> TruncSeries<Rational> {
    let lin = TruncSeries::binomial(Q, 1, rat(-1), order);
    &lin * &euler_product(|_| rat(-2), order)
}

/// `q^(-e/12) (1 - q)^e prod (1 - q^n)^(-2e)`.
pub fn euler_char_series(e: i64, order: usize) -> TruncSeries<Rational> {
    euler_char_series_generic(&rat(e), order).with_shift(ratio(-e, 12))
}

/// [`euler_char_series`] with a symbolic Euler number; the shift `-e/12` is
/// returned separately since a series shift must be a number.
pub fn euler_char_series_generic<C: Coeff>(e: &C, order: usize) -> TruncSeries<C> {
    let lin = TruncSeries::binomial(Q, 1, C::from_int(-1), order).pow(e).unwrap();
    let two_e = e.scale(&rat(-2));
    &lin * &euler_product(|_| two_e.clone(), order)
}

/// Euler characteristics of Hilbert schemes of points:
/// `q^(-e/24) prod (1 - q^n)^(-e)`.
pub fn gottsche_series(e: i64, order: usize) -> TruncSeries<Rational> {
    euler_product(|_| rat(-e), order).with_shift(ratio(-e, 24))
}

/// `G(q) = q^(-1) prod (1 - q^n)^(-24)`.
pub fn g_series(order: usize) -> TruncSeries<Rational> {
    euler_product(|_| rat(-24), order).with_shift(rat(-1))
}

/// True when every coefficient is an integer.
pub fn has_integer_coefficients(s: &TruncSeries<Rational>) -> bool {
    s.coeffs().iter().all(|c| c.is_integer())
}

/// Shorthand for the constant series 1 in `q`.
pub fn one_series(order: usize) -> TruncSeries<Rational> {
    TruncSeries::from_coeffs(Q, vec![Rational::one()], order)
}
