use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::coeff::{binom_coeff, Coeff, Rational};
use crate::error::{Error, Result};

/// Truncated power series `q^shift * sum_{k=0}^{order} c_k q^k`.
///
/// Binary operations truncate at the smaller of the two orders, so a result
/// never claims more precision than its inputs carry.
#[derive(Clone, PartialEq)]
pub struct TruncSeries<C> {
    var: String,
    shift: Rational,
    coeffs: Vec<C>,
}

impl<C: Coeff> TruncSeries<C> {
    /// Series with the given coefficients, padded with zeros or cut to `order`.
    pub fn new(var: &str, shift: Rational, mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order + 1, C::zero());
        Self {
            var: var.to_string(),
            shift,
            coeffs,
        }
    }

    pub fn from_coeffs(var: &str, coeffs: Vec<C>, order: usize) -> Self {
        Self::new(var, Rational::zero(), coeffs, order)
    }

    pub fn zero(var: &str, order: usize) -> Self {
        Self::from_coeffs(var, Vec::new(), order)
    }

    pub fn one(var: &str, order: usize) -> Self {
        Self::constant(var, C::one(), order)
    }

    pub fn constant(var: &str, c: C, order: usize) -> Self {
        Self::from_coeffs(var, vec![c], order)
    }

    /// `c * var^k`, zero if `k` exceeds the order.
    pub fn monomial(var: &str, k: usize, c: C, order: usize) -> Self {
        let mut s = Self::zero(var, order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// The series variable itself.
    pub fn variable(var: &str, order: usize) -> Self {
        Self::monomial(var, 1, C::one(), order)
    }

    /// `1 + c * var^k`.
    pub fn binomial(var: &str, k: usize, c: C, order: usize) -> Self {
        &Self::one(var, order) + &Self::monomial(var, k, c, order)
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn shift(&self) -> &Rational {
        &self.shift
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    pub fn with_shift(mut self, shift: Rational) -> Self {
        self.shift = shift;
        self
    }

    pub fn with_var(mut self, var: &str) -> Self {
        self.var = var.to_string();
        self
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(&self.var, self.shift.clone(), self.coeffs.clone(), order.min(self.order()))
    }

    pub fn map<D: Coeff, F: Fn(&C) -> D>(&self, f: F) -> TruncSeries<D> {
        TruncSeries {
            var: self.var.clone(),
            shift: self.shift.clone(),
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        self.map(|c| c.scale(r))
    }

    pub fn scale_by(&self, c: &C) -> Self {
        self.map(|x| x.times(c))
    }

    /// Lowest index with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    fn check_var(&self, other: &Self) -> Result<()> {
        if self.var != other.var {
            return Err(Error::VariableMismatch {
                left: self.var.clone(),
                right: other.var.clone(),
            });
        }
        Ok(())
    }

    fn check_shift(&self, other: &Self) -> Result<()> {
        if self.shift != other.shift {
            return Err(Error::ShiftMismatch {
                left: self.shift.to_string(),
                right: other.shift.to_string(),
            });
        }
        Ok(())
    }

    fn require_unshifted(&self, op: &'static str) -> Result<()> {
        if !self.shift.is_zero() {
            return Err(Error::NonzeroShift {
                op,
                shift: self.shift.to_string(),
            });
        }
        Ok(())
    }

    fn require_constant_one(&self, op: &'static str) -> Result<()> {
        self.require_unshifted(op)?;
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantNotOne {
                op,
                constant: self.coeffs[0].to_string(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        self.check_shift(other)?;
        let n = self.order().min(other.order());
        let coeffs = (0..=n).map(|k| self.coeffs[k].plus(&other.coeffs[k])).collect();
        Ok(Self::new(&self.var, self.shift.clone(), coeffs, n))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let n = self.order().min(other.order());
        let mut coeffs = vec![C::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].plus(&a.times(b));
                }
            }
        }
        Ok(Self::new(&self.var, &self.shift + &other.shift, coeffs, n))
    }

    /// Inverse of a series with shift 0 and invertible constant term.
    pub fn inv(&self) -> Result<Self> {
        self.require_unshifted("series_inv")?;
        let b0 = self.coeffs[0]
            .unit_inverse()
            .ok_or_else(|| Error::NonUnitConstant {
                op: "series_inv",
                constant: self.coeffs[0].to_string(),
            })?;
        let n = self.order();
        let mut out = vec![b0.clone()];
        for k in 1..=n {
            let mut acc = C::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc = acc.plus(&self.coeffs[j].times(&out[k - j]));
                }
            }
            out.push(acc.times(&b0).negated());
        }
        Ok(Self::new(&self.var, Rational::zero(), out, n))
    }

    /// Square root with constant term 1.
    pub fn sqrt(&self) -> Result<Self> {
        self.require_constant_one("series_sqrt")?;
        let n = self.order();
        let half = Rational::new(1.into(), 2.into());
        let mut out = vec![C::one()];
        for k in 1..=n {
            let mut acc = self.coeffs[k].clone();
            for j in 1..k {
                acc = acc.minus(&out[j].times(&out[k - j]));
            }
            out.push(acc.scale(&half));
        }
        Ok(Self::new(&self.var, Rational::zero(), out, n))
    }

    /// `(1 + h)^e = sum_k binom(e, k) h^k`. The base must have constant term 1;
    /// callers factor any other constant out themselves.
    pub fn pow(&self, e: &C) -> Result<Self> {
        self.require_constant_one("series_pow")?;
        let n = self.order();
        let h = self.checked_sub(&Self::one(&self.var, n))?;
        let mut acc = Self::one(&self.var, n);
        let mut h_pow = Self::one(&self.var, n);
        for k in 1..=n {
            h_pow = &h_pow * &h;
            let b = binom_coeff(e, k as u32);
            if !b.is_zero() {
                acc = &acc + &h_pow.scale_by(&b);
            }
        }
        Ok(acc)
    }

    /// Integer power; negative exponents need an invertible constant term.
    pub fn pow_int(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = Self::one(&self.var, self.order()).with_shift(Rational::zero());
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.checked_mul(&sq)?;
            }
            k >>= 1;
            if k > 0 {
                sq = sq.checked_mul(&sq)?;
            }
        }
        Ok(acc)
    }
}

impl<C: Coeff> fmt::Display for TruncSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        if !self.shift.is_zero() {
            write!(f, "{}^({}) * (", self.var, self.shift)?;
        }
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*{}", self.var)?,
                _ => write!(f, "({c})*{}^{k}", self.var)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O({}^{})", self.var, self.order() + 1)?;
        if !self.shift.is_zero() {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for TruncSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncSeries[{}]", self)
    }
}

impl<'a, C: Coeff> Add<&'a TruncSeries<C>> for &'a TruncSeries<C> {
    type Output = TruncSeries<C>;
    /// Panics on mismatched variables or shifts; use `checked_add` to recover.
    fn add(self, rhs: &'a TruncSeries<C>) -> TruncSeries<C> {
        self.checked_add(rhs).expect("incompatible series in addition")
    }
}

impl<'a, C: Coeff> Sub<&'a TruncSeries<C>> for &'a TruncSeries<C> {
    type Output = TruncSeries<C>;
    fn sub(self, rhs: &'a TruncSeries<C>) -> TruncSeries<C> {
        self.checked_sub(rhs).expect("incompatible series in subtraction")
    }
}

impl<'a, C: Coeff> Mul<&'a TruncSeries<C>> for &'a TruncSeries<C> {
    type Output = TruncSeries<C>;
    fn mul(self, rhs: &'a TruncSeries<C>) -> TruncSeries<C> {
        self.checked_mul(rhs).expect("incompatible series in multiplication")
    }
}

impl<C: Coeff> Neg for &TruncSeries<C> {
    type Output = TruncSeries<C>;
    fn neg(self) -> TruncSeries<C> {
        self.map(|c| c.negated())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, ParamPoly};

    fn q(coeffs: &[i64], order: usize) -> TruncSeries<Rational> {
        TruncSeries::from_coeffs("q", coeffs.iter().map(|&c| rat(c)).collect(), order)
    }

    #[test]
    fn identity_and_telescoping() {
        let s = q(&[3, -1, 4, 1, 5], 4);
        assert_eq!(&TruncSeries::one("q", 4) * &s, s);
        let geom = q(&[1, 1, 1, 1, 1, 1], 5);
        assert_eq!(&q(&[1, -1], 5) * &geom, TruncSeries::one("q", 5));
    }

    #[test]
    fn hand_product() {
        let a = q(&[1, 2, 1], 4);
        let b = q(&[1, -2, 1], 4);
        assert_eq!(&a * &b, q(&[1, 0, -2, 0, 1], 4));
    }

    #[test]
    fn mul_truncates_at_min_order_and_adds_shifts() {
        let a = q(&[1, 1], 6).with_shift(Rational::new(1.into(), 4.into()));
        let b = q(&[1, 1], 3).with_shift(Rational::new(1.into(), 2.into()));
        let p = a.checked_mul(&b).unwrap();
        assert_eq!(p.order(), 3);
        assert_eq!(*p.shift(), Rational::new(3.into(), 4.into()));
    }

    #[test]
    fn variable_mismatch_rejected() {
        let a = q(&[1, 1], 3);
        let b = a.clone().with_var("t");
        assert!(matches!(a.checked_mul(&b), Err(Error::VariableMismatch { .. })));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(q(&[1, -1], 4).inv().unwrap(), q(&[1, 1, 1, 1, 1], 4));
        assert_eq!(q(&[1], 3).inv().unwrap(), q(&[1], 3));
        // Recurrence b_k = 3 b_{k-1} - b_{k-2}: 1, 3, 8, 21.
        assert_eq!(q(&[1, -3, 1], 3).inv().unwrap(), q(&[1, 3, 8, 21], 3));
        assert!(matches!(q(&[0, 1], 3).inv(), Err(Error::NonUnitConstant { .. })));
        let shifted = q(&[1], 3).with_shift(rat(1));
        assert!(matches!(shifted.inv(), Err(Error::NonzeroShift { .. })));
        // Non-unit ParamPoly constants are rejected too.
        let symbolic = TruncSeries::constant("q", ParamPoly::g(), 2);
        assert!(symbolic.inv().is_err());
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(q(&[1, -2, 1], 5).sqrt().unwrap(), q(&[1, -1], 5));
        assert_eq!(q(&[1], 3).sqrt().unwrap(), q(&[1], 3));
        let a = q(&[1, -10, 9], 6);
        let r = a.sqrt().unwrap();
        assert_eq!(&r * &r, a);
        assert!(matches!(q(&[4, 1], 3).sqrt(), Err(Error::ConstantNotOne { .. })));
    }

    #[test]
    fn integer_power_matches_pow() {
        let base = q(&[1, 1], 4);
        assert_eq!(base.pow(&rat(2)).unwrap(), q(&[1, 2, 1], 4));
        let b = q(&[1, 2], 5);
        assert_eq!(b.pow(&rat(-2)).unwrap(), b.pow_int(-2).unwrap());
        assert_eq!(b.pow_int(-2).unwrap(), (&b * &b).inv().unwrap());
        assert!(matches!(q(&[2, 1], 3).pow(&rat(3)), Err(Error::ConstantNotOne { .. })));
    }

    #[test]
    fn symbolic_pow_definition() {
        // (1 - q)^(g - 1) = 1 - (g - 1) q + binom(g - 1, 2) q^2.
        let gm1 = &ParamPoly::g() - &ParamPoly::from_int(1);
        let base = TruncSeries::binomial("q", 1, ParamPoly::from_int(-1), 2);
        let s = base.pow(&gm1).unwrap();
        assert_eq!(*s.coeff(0), ParamPoly::from_int(1));
        assert_eq!(*s.coeff(1), -&gm1);
        assert_eq!(*s.coeff(2), crate::exactnum::binom_poly(&gm1, 2));
    }

    #[test]
    fn symbolic_pow_against_integer_inverse() {
        // (1 + 2q)^(1 - g) at g = 3 equals 1/(1 + 2q)^2.
        let e = &ParamPoly::from_int(1) - &ParamPoly::g();
        let base = TruncSeries::binomial("q", 1, ParamPoly::from_int(2), 2);
        let s = base.pow(&e).unwrap().map(|c| c.eval_int(3, 0));
        let direct = q(&[1, 2], 2).pow_int(2).unwrap().inv().unwrap();
        assert_eq!(s, direct);
    }
}
