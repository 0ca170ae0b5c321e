//! Constant prefactors with symbolic exponents, e.g. `(-2)^(-pg - g)`.
//!
//! These are kept out of the series coefficients, which then stay polynomial in
//! the surface parameters. A record is a product `(-1)^s * prod_p p^(e_p)` where
//! `s` and each `e_p` are parameter polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::exactnum::{ParamPoly, Rational};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct NormalizationRecord {
    sign: ParamPoly,
    primes: BTreeMap<u64, ParamPoly>,
}

impl NormalizationRecord {
    pub fn one() -> Self {
        Self::default()
    }

    /// `(-2)^e`.
    pub fn minus_two_pow(e: &ParamPoly) -> Self {
        Self::sign_pow(e) * Self::prime_pow(2, e)
    }

    /// `2^e`.
    pub fn two_pow(e: &ParamPoly) -> Self {
        Self::prime_pow(2, e)
    }

    /// `(-1)^e`.
    pub fn sign_pow(e: &ParamPoly) -> Self {
        let mut r = Self::one();
        r.sign = canonical_sign(e.clone());
        r
    }

    /// `p^e` for a prime `p`.
    pub fn prime_pow(p: u64, e: &ParamPoly) -> Self {
        let mut r = Self::one();
        if !e.is_zero() {
            r.primes.insert(p, e.clone());
        }
        r
    }

    /// `n^e` for a positive integer `n`, factored into primes.
    pub fn int_pow(n: u64, e: &ParamPoly) -> Self {
        let mut r = Self::one();
        for (p, k) in factorize(n) {
            r = r * Self::prime_pow(p, &e.scale(&Rational::from_integer(k.into())));
        }
        r
    }

    pub fn exponent_of_two(&self) -> ParamPoly {
        self.prime_exponent(2)
    }

    pub fn exponent_of_minus_one(&self) -> ParamPoly {
        self.sign.clone()
    }

    pub fn prime_exponent(&self, p: u64) -> ParamPoly {
        self.primes.get(&p).cloned().unwrap_or_default()
    }

    /// Primes other than 2 with a nonzero exponent.
    pub fn odd_primes(&self) -> impl Iterator<Item = (u64, &ParamPoly)> {
        self.primes.iter().filter(|(p, _)| **p != 2).map(|(p, e)| (*p, e))
    }

    pub fn inverse(&self) -> Self {
        Self {
            sign: canonical_sign(-&self.sign),
            primes: self.primes.iter().map(|(p, e)| (*p, -e)).collect(),
        }
    }

    /// True when this is `(-2)^e` for some `e` up to sign parity.
    pub fn is_minus_two_power(&self) -> bool {
        self.odd_primes().next().is_none()
            && (&self.sign - &self.exponent_of_two()).is_even_valued()
    }

    /// Split off the integer constant parts of every exponent as an exact
    /// rational factor, leaving a record with constant-free exponents.
    pub fn split_constant(&self) -> (Rational, Self) {
        let mut factor = Rational::one();
        let mut rest = Self::one();
        let s0 = self.sign.constant_term();
        if s0.is_integer() {
            if s0.to_integer().is_odd() {
                factor = -factor;
            }
            rest.sign = canonical_sign(&self.sign - &ParamPoly::constant(s0));
        } else {
            rest.sign = self.sign.clone();
        }
        for (p, e) in &self.primes {
            let c = e.constant_term();
            if c.is_integer() {
                let k = c.to_integer();
                factor *= int_power(*p, &k);
                rest = rest * Self::prime_pow(*p, &(e - &ParamPoly::constant(c)));
            } else {
                rest = rest * Self::prime_pow(*p, e);
            }
        }
        (factor, rest)
    }

    /// Exact value at concrete `(g, pg)`; every exponent must be an integer there.
    pub fn evaluate(&self, g: i64, pg: i64) -> Result<Rational> {
        let int_at = |e: &ParamPoly| -> Result<BigInt> {
            let v = e.eval_int(g, pg);
            if v.is_integer() {
                Ok(v.to_integer())
            } else {
                Err(Error::NonIntegralExponent {
                    exponent: e.to_string(),
                })
            }
        };
        let mut value = Rational::one();
        if int_at(&self.sign)?.is_odd() {
            value = -value;
        }
        for (p, e) in &self.primes {
            value *= int_power(*p, &int_at(e)?);
        }
        Ok(value)
    }

    /// Substitute concrete parameters into the exponents, keeping the record
    /// symbolic in form. Used to print e.g. `(-2)^(-10)`.
    pub fn at(&self, g: i64, pg: i64) -> Self {
        let c = |e: &ParamPoly| ParamPoly::constant(e.eval_int(g, pg));
        Self {
            sign: canonical_sign(c(&self.sign)),
            primes: self
                .primes
                .iter()
                .map(|(p, e)| (*p, c(e)))
                .filter(|(_, e)| !e.is_zero())
                .collect(),
        }
    }

    /// Human-readable form using the aliases `P2 = pg + g` and `nu = pg + 1`
    /// where they match exactly.
    pub fn describe(&self) -> String {
        if self.primes.is_empty() && self.sign.is_zero() {
            return "1".to_string();
        }
        let two = self.exponent_of_two();
        if self.odd_primes().next().is_none() && self.sign == canonical_sign(two.clone()) {
            return format!("(-2)^({})", alias_exponent(&two));
        }
        let mut parts = Vec::new();
        if !self.sign.is_zero() {
            parts.push(format!("(-1)^({})", alias_exponent(&self.sign)));
        }
        for (p, e) in &self.primes {
            parts.push(format!("{}^({})", p, alias_exponent(e)));
        }
        parts.join(" * ")
    }
}

impl Mul for NormalizationRecord {
    type Output = NormalizationRecord;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Mul<&NormalizationRecord> for &NormalizationRecord {
    type Output = NormalizationRecord;
    fn mul(self, rhs: &NormalizationRecord) -> NormalizationRecord {
        let mut primes = self.primes.clone();
        for (p, e) in &rhs.primes {
            let sum = &primes.get(p).cloned().unwrap_or_default() + e;
            if sum.is_zero() {
                primes.remove(p);
            } else {
                primes.insert(*p, sum);
            }
        }
        NormalizationRecord {
            sign: canonical_sign(&self.sign + &rhs.sign),
            primes,
        }
    }
}

impl fmt::Display for NormalizationRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.describe())
    }
}

impl fmt::Debug for NormalizationRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NormalizationRecord({})", self.describe())
    }
}

/// Reduce every integer coefficient of a sign exponent into {0, 1}. This keeps
/// the parity at all integer points, so equal signs compare equal.
fn canonical_sign(e: ParamPoly) -> ParamPoly {
    let two = BigInt::from(2);
    ParamPoly::from_terms(e.terms().map(|(m, c)| {
        if c.is_integer() {
            (*m, Rational::from_integer(c.to_integer().mod_floor(&two)))
        } else {
            (*m, c.clone())
        }
    }))
}

fn alias_exponent(e: &ParamPoly) -> String {
    let p2 = ParamPoly::p2();
    if *e == p2 {
        "P2".to_string()
    } else if *e == -&p2 {
        "-P2".to_string()
    } else {
        e.to_string()
    }
}

fn int_power(p: u64, k: &BigInt) -> Rational {
    let base = Rational::from_integer(BigInt::from(p));
    let mag = k.abs().to_u32().expect("exponent fits in u32");
    let v = num_traits::pow(base, mag as usize);
    if k.is_negative() {
        v.recip()
    } else {
        v
    }
}

fn factorize(mut n: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut k = 0;
        while n.is_multiple_of(p) {
            n /= p;
            k += 1;
        }
        if k > 0 {
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}
