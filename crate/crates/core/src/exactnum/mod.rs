//! Exact arithmetic substrate: rationals, bivariate parameter polynomials and
//! truncated power series over either.
//!
//! Every operation here is exact. Series carry an explicit truncation order and
//! an exact rational exponent shift, so a series `q^s (c_0 + c_1 q + ... + c_N q^N)`
//! is stored as `(s, [c_0, ..., c_N])`.

mod coeff;
mod poly;
mod series;

pub use coeff::{binom_coeff, Coeff, Rational};
pub use poly::{ChernPoly, ChernVars, GenusVars, ParamPoly, Poly, VarSet};
pub use series::TruncSeries;

use crate::error::Result;

/// Product of two series, truncated at the smaller order.
pub fn series_mul<C: Coeff>(a: &TruncSeries<C>, b: &TruncSeries<C>) -> Result<TruncSeries<C>> {
    a.checked_mul(b)
}

/// Multiplicative inverse of a series with shift 0 and unit constant term.
pub fn series_inv<C: Coeff>(a: &TruncSeries<C>) -> Result<TruncSeries<C>> {
    a.inv()
}

/// Square root on the branch with constant term 1.
pub fn series_sqrt<C: Coeff>(a: &TruncSeries<C>) -> Result<TruncSeries<C>> {
    a.sqrt()
}

/// `e (e - 1) ... (e - k + 1) / k!` with a symbolic top argument.
pub fn binom_poly(e: &ParamPoly, k: u32) -> ParamPoly {
    binom_coeff(e, k)
}

/// `(1 + h)^e = sum_k binom(e, k) h^k`, truncated.
pub fn series_pow<C: Coeff>(base: &TruncSeries<C>, e: &C) -> Result<TruncSeries<C>> {
    base.pow(e)
}

/// Rational from a machine integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Rational `n / d`; panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
