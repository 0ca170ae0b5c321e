use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::marker::PhantomData;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::coeff::{Coeff, Rational};

/// A fixed, named pair of polynomial variables.
pub trait VarSet: Copy + Clone + fmt::Debug + Default + PartialEq + Eq + Hash + 'static {
    const NAMES: [&'static str; 2];
}

/// Surface parameters: canonical genus `g` and geometric genus `pg`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct GenusVars;

impl VarSet for GenusVars {
    const NAMES: [&'static str; 2] = ["g", "pg"];
}

/// Chern numbers of a surface: `c2 = e(S)` and `K2 = c1(S)^2`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ChernVars;

impl VarSet for ChernVars {
    const NAMES: [&'static str; 2] = ["c2", "K2"];
}

/// Polynomial in two named variables with exact rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is polynomial
/// equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<V: VarSet> {
    terms: BTreeMap<[u32; 2], Rational>,
    _vars: PhantomData<V>,
}

pub type ParamPoly = Poly<GenusVars>;
pub type ChernPoly = Poly<ChernVars>;

impl<V: VarSet> Poly<V> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
            _vars: PhantomData,
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial([0, 0], c)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(Rational::from_integer(n.into()))
    }

    pub fn monomial(exps: [u32; 2], c: Rational) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// The `idx`-th variable (0 or 1).
    pub fn var(idx: usize) -> Self {
        let mut exps = [0, 0];
        exps[idx] = 1;
        Self::monomial(exps, Rational::one())
    }

    pub fn from_terms<I: IntoIterator<Item = ([u32; 2], Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exps: [u32; 2], c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; 2], &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: [u32; 2]) -> Rational {
        self.terms.get(&exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e[0] + e[1]).max()
    }

    /// Degree in a single variable.
    pub fn degree_in(&self, idx: usize) -> u32 {
        self.terms.keys().map(|e| e[idx]).max().unwrap_or(0)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff([0, 0])
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.degree() {
            None => Some(Rational::zero()),
            Some(0) => Some(self.constant_term()),
            _ => None,
        }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_constant().filter(|c| c.is_integer()).map(|c| c.to_integer())
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * r)).collect(),
            _vars: PhantomData,
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::from_int(1);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, point: &[Rational; 2]) -> Rational {
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut m = c.clone();
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    m *= &point[i];
                }
            }
            total += m;
        }
        total
    }

    pub fn eval_int(&self, a: i64, b: i64) -> Rational {
        self.eval(&[
            Rational::from_integer(a.into()),
            Rational::from_integer(b.into()),
        ])
    }

    /// Replace each variable by a polynomial over another variable pair.
    pub fn substitute<W: VarSet>(&self, images: &[Poly<W>; 2]) -> Poly<W> {
        let mut out = Poly::<W>::zero();
        for (e, c) in &self.terms {
            let m = &images[0].pow(e[0]) * &images[1].pow(e[1]);
            out = &out + &m.scale(c);
        }
        out
    }

    /// Partial substitution of one variable, keeping the variable pair.
    pub fn substitute_var(&self, idx: usize, image: &Self) -> Self {
        let other = Self::var(1 - idx);
        let mut images = [other.clone(), other];
        images[idx] = image.clone();
        self.substitute(&images)
    }

    /// True when the polynomial takes an even integer value at every integer
    /// point. Decided from the values on the box `[0, d]^2`, which determine the
    /// coefficients in the binomial basis.
    pub fn is_even_valued(&self) -> bool {
        let d = self.degree().unwrap_or(0) as i64;
        let two = BigInt::from(2);
        for a in 0..=d {
            for b in 0..=d {
                let v = self.eval_int(a, b);
                if !v.is_integer() || !(v.to_integer() % &two).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// True when the polynomial is integer-valued on integer points.
    pub fn is_integer_valued(&self) -> bool {
        let d = self.degree().unwrap_or(0) as i64;
        (0..=d).all(|a| (0..=d).all(|b| self.eval_int(a, b).is_integer()))
    }

    /// Terms in graded-lex order, highest first.
    fn sorted_terms(&self) -> Vec<(&[u32; 2], &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| (b[0] + b[1], b[0], b[1]).cmp(&(a[0] + a[1], a[0], a[1])));
        v
    }
}

impl ParamPoly {
    pub fn g() -> Self {
        Self::var(0)
    }

    pub fn pg() -> Self {
        Self::var(1)
    }

    /// `nu = chi(O_S) = pg + 1`.
    pub fn nu() -> Self {
        &Self::pg() + &Self::from_int(1)
    }

    /// `P2 = pg + g`.
    pub fn p2() -> Self {
        &Self::pg() + &Self::g()
    }

    /// `K^2 = g - 1`.
    pub fn k2() -> Self {
        &Self::g() - &Self::from_int(1)
    }

    /// `c2 = 12 nu - K^2 = 12 pg + 13 - g`.
    pub fn c2() -> Self {
        &Self::nu().scale(&Rational::from_integer(12.into())) - &Self::k2()
    }
}

impl ChernPoly {
    pub fn c2() -> Self {
        Self::var(0)
    }

    pub fn k2() -> Self {
        Self::var(1)
    }

    /// Rewrite in `(g, pg)` using `K^2 = g - 1` and `c2 = 12 pg + 13 - g`.
    pub fn to_genus(&self) -> ParamPoly {
        self.substitute(&[ParamPoly::c2(), ParamPoly::k2()])
    }

    /// Evaluate at concrete Chern numbers.
    pub fn eval_chern(&self, k2: i64, c2: i64) -> Rational {
        self.eval_int(c2, k2)
    }
}

impl<V: VarSet> Default for Poly<V> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<V: VarSet> fmt::Display for Poly<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mut factors = Vec::new();
            for (idx, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(V::NAMES[idx].to_string()),
                    _ => factors.push(format!("{}^{}", V::NAMES[idx], k)),
                }
            }
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<V: VarSet> fmt::Debug for Poly<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl<'a, V: VarSet> Add<&'a Poly<V>> for &'a Poly<V> {
    type Output = Poly<V>;
    fn add(self, rhs: &'a Poly<V>) -> Poly<V> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<'a, V: VarSet> Sub<&'a Poly<V>> for &'a Poly<V> {
    type Output = Poly<V>;
    fn sub(self, rhs: &'a Poly<V>) -> Poly<V> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl<'a, V: VarSet> Mul<&'a Poly<V>> for &'a Poly<V> {
    type Output = Poly<V>;
    fn mul(self, rhs: &'a Poly<V>) -> Poly<V> {
        let mut out = Poly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term([ea[0] + eb[0], ea[1] + eb[1]], ca * cb);
            }
        }
        out
    }
}

impl<V: VarSet> Neg for &Poly<V> {
    type Output = Poly<V>;
    fn neg(self) -> Poly<V> {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
            _vars: PhantomData,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<V: VarSet> $tr<Poly<V>> for Poly<V> {
            type Output = Poly<V>;
            fn $m(self, rhs: Poly<V>) -> Poly<V> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<V: VarSet> Neg for Poly<V> {
    type Output = Poly<V>;
    fn neg(self) -> Poly<V> {
        -&self
    }
}

impl<V: VarSet> Zero for Poly<V> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<V: VarSet> One for Poly<V> {
    fn one() -> Self {
        Poly::from_int(1)
    }
}

impl<V: VarSet> Coeff for Poly<V> {
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
        Poly::constant(r.clone())
    }
    fn scale(&self, r: &Rational) -> Self {
        Poly::scale(self, r)
    }
    fn unit_inverse(&self) -> Option<Self> {
        match self.as_constant() {
            Some(c) if !c.is_zero() => Some(Poly::constant(c.recip())),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, ratio};

    #[test]
    fn display_is_graded_lex() {
        let g = ParamPoly::g();
        let pg = ParamPoly::pg();
        let p = &(&(&g * &g).scale(&ratio(2, 3)) - &(&g * &pg)) + &ParamPoly::from_int(-4);
        assert_eq!(p.to_string(), "2/3*g^2 - g*pg - 4");
        assert_eq!(ParamPoly::zero().to_string(), "0");
        assert_eq!((-&pg).to_string(), "-pg");
    }

    #[test]
    fn chern_alias_display() {
        let v = &ChernPoly::c2() + &ChernPoly::k2().scale(&rat(6));
        assert_eq!(v.to_string(), "c2 + 6*K2");
    }

    #[test]
    fn derived_aliases() {
        // K^2 = 5, c2 = 55 on a quintic; g = 6, pg = 4.
        assert_eq!(ParamPoly::k2().eval_int(6, 4), rat(5));
        assert_eq!(ParamPoly::c2().eval_int(6, 4), rat(55));
        assert_eq!(ParamPoly::p2().eval_int(6, 4), rat(10));
        assert_eq!(ParamPoly::nu().eval_int(6, 4), rat(5));
    }

    #[test]
    fn even_valued_detects_parity() {
        let g = ParamPoly::g();
        // g(g+1) is always even but has odd coefficients.
        let p = &g * &(&g + &ParamPoly::from_int(1));
        assert!(p.is_even_valued());
        assert!(!g.is_even_valued());
        assert!(!g.scale(&ratio(1, 2)).is_integer_valued());
    }
}
