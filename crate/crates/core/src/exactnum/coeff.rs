use std::fmt;

use num_traits::{One, Zero};

/// Exact rational numbers, always stored in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// A commutative coefficient ring containing the rationals.
///
/// Methods take references so that big-number coefficients are not cloned on
/// every operation.
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display + Zero + One {
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn scale(&self, r: &Rational) -> Self;
    /// Inverse, when `self` is a unit of the ring.
    fn unit_inverse(&self) -> Option<Self>;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n.into()))
    }
}

impl Coeff for Rational {
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn unit_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// `e (e - 1) ... (e - k + 1) / k!` in any coefficient ring.
pub fn binom_coeff<C: Coeff>(e: &C, k: u32) -> C {
    let mut acc = C::one();
    for j in 0..k {
        let factor = e.minus(&C::from_int(j as i64));
        acc = acc.times(&factor);
    }
    let mut fact = Rational::from_integer(1.into());
    for j in 2..=k {
        fact *= Rational::from_integer(j.into());
    }
    acc.scale(&fact.recip())
}
