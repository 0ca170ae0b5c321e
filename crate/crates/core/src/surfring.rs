//! Small intersection rings: the surface `S`, and the blow-up of `S x S` along
//! the diagonal (the nested Hilbert scheme `S^[2,1]`).
//!
//! Classes are only ever compared after integration, so each ring keeps just
//! enough structure to integrate: truncation in degree and the integration rules.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{rat, ratio, ChernPoly, ParamPoly, Rational};
use crate::normalization::NormalizationRecord;

/// A class on `S` in `u = c1(S)` and `v = c2(S)`, truncated above degree 2.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SurfClass {
    // coefficients of 1, u, u^2, v
    c: [Rational; 4],
}

impl SurfClass {
    pub fn new(one: Rational, u: Rational, u2: Rational, v: Rational) -> Self {
        Self { c: [one, u, u2, v] }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(c, rat(0), rat(0), rat(0))
    }

    pub fn u() -> Self {
        Self::new(rat(0), rat(1), rat(0), rat(0))
    }

    pub fn v() -> Self {
        Self::new(rat(0), rat(0), rat(0), rat(1))
    }

    pub fn from_ints(one: i64, u: i64, u2: i64, v: i64) -> Self {
        Self::new(rat(one), rat(u), rat(u2), rat(v))
    }

    pub fn constant_term(&self) -> &Rational {
        &self.c[0]
    }

    pub fn u_coeff(&self) -> &Rational {
        &self.c[1]
    }

    pub fn u2_coeff(&self) -> &Rational {
        &self.c[2]
    }

    pub fn v_coeff(&self) -> &Rational {
        &self.c[3]
    }

    /// Monomial `u^a v^b`; zero above degree 2.
    pub fn monomial(a: u32, b: u32) -> Self {
        match (a, b) {
            (0, 0) => Self::constant(rat(1)),
            (1, 0) => Self::u(),
            (2, 0) => Self::new(rat(0), rat(0), rat(1), rat(0)),
            (0, 1) => Self::v(),
            _ => Self::default(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self {
            c: std::array::from_fn(|i| &self.c[i] * r),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// `1/x` for `x` with nonzero constant term.
    pub fn inv(&self) -> Result<Self> {
        let c0 = &self.c[0];
        if c0.is_zero() {
            return Err(Error::NonUnitConstant {
                op: "surface class inverse",
                constant: c0.to_string(),
            });
        }
        // x = c0 (1 + h), h nilpotent with h^3 = 0.
        let h = &self.scale(&c0.recip()) - &Self::constant(rat(1));
        let h2 = &h * &h;
        let s = &(&Self::constant(rat(1)) - &h) + &h2;
        Ok(s.scale(&c0.recip()))
    }

    /// Degree-2 part under `u^2 -> K^2`, `v -> c2`.
    pub fn integrate(&self) -> ChernPoly {
        &ChernPoly::k2().scale(&self.c[2]) + &ChernPoly::c2().scale(&self.c[3])
    }
}

impl fmt::Display for SurfClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["", "c1", "c1^2", "c2"];
        let mut out = Vec::new();
        for (c, name) in self.c.iter().zip(names) {
            if c.is_zero() {
                continue;
            }
            let mag = if c < &rat(0) { -c } else { c.clone() };
            let sign = if c < &rat(0) { "-" } else { "+" };
            let body = match (name, mag.is_one()) {
                ("", _) => mag.to_string(),
                (_, true) => name.to_string(),
                _ => format!("{mag}*{name}"),
            };
            out.push((sign, body));
        }
        let Some(((s0, b0), rest)) = out.split_first() else {
            return write!(f, "0");
        };
        write!(f, "{}{b0}", if *s0 == "-" { "-" } else { "" })?;
        for (s, b) in rest {
            write!(f, " {s} {b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SurfClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SurfClass({self})")
    }
}

impl Add for &SurfClass {
    type Output = SurfClass;
    fn add(self, rhs: &SurfClass) -> SurfClass {
        SurfClass {
            c: std::array::from_fn(|i| &self.c[i] + &rhs.c[i]),
        }
    }
}

impl Sub for &SurfClass {
    type Output = SurfClass;
    fn sub(self, rhs: &SurfClass) -> SurfClass {
        SurfClass {
            c: std::array::from_fn(|i| &self.c[i] - &rhs.c[i]),
        }
    }
}

impl Neg for &SurfClass {
    type Output = SurfClass;
    fn neg(self) -> SurfClass {
        self.scale(&rat(-1))
    }
}

impl Mul for &SurfClass {
    type Output = SurfClass;
    fn mul(self, rhs: &SurfClass) -> SurfClass {
        let [a0, a1, a2, a3] = &self.c;
        let [b0, b1, b2, b3] = &rhs.c;
        SurfClass::new(
            a0 * b0,
            a0 * b1 + a1 * b0,
            a0 * b2 + a2 * b0 + a1 * b1,
            a0 * b3 + a3 * b0,
        )
    }
}

/// `integrate_S` with `K^2`, `c2` left symbolic.
pub fn integrate_s(c: &SurfClass) -> ChernPoly {
    c.integrate()
}

/// `(c1, c2)` of `T_S (x) K_S^l`: `c1 = (1 - 2l) u`, `c2 = v + (l^2 - l) u^2`.
pub fn twist_chern(l: i64) -> (SurfClass, SurfClass) {
    (
        SurfClass::from_ints(0, 1 - 2 * l, 0, 0),
        SurfClass::from_ints(0, 0, l * l - l, 1),
    )
}

/// `(c1, c2)` of the cotangent bundle.
pub fn cotangent_chern() -> (SurfClass, SurfClass) {
    (-&SurfClass::u(), SurfClass::v())
}

/// Equivariant Euler class `e(F t^w) = (wt)^2 + wt c1 + c2` of a rank-2 class.
pub fn euler_rank2(weight: &Rational, c1: &SurfClass, c2: &SurfClass) -> SurfClass {
    &(&SurfClass::constant(weight * weight) + &c1.scale(weight)) + c2
}

/// Numerator and inverted denominator of the vertical integrand at weight `t`,
/// before multiplying out.
#[derive(Debug, Clone, PartialEq)]
pub struct VerticalParts {
    pub numerator: SurfClass,
    pub inverted_denominator: SurfClass,
}

impl VerticalParts {
    pub fn at(t: &Rational) -> Result<Self> {
        let (o1, o2) = cotangent_chern();
        let (p1, p2) = twist_chern(2);
        let (m1, m2) = twist_chern(-1);
        let numerator = &euler_rank2(t, &o1, &o2) * &euler_rank2(&(t * rat(2)), &p1, &p2);
        let den = euler_rank2(&-t, &m1, &m2);
        Ok(Self {
            numerator,
            inverted_denominator: den.inv()?,
        })
    }

    pub fn product(&self) -> SurfClass {
        &self.numerator * &self.inverted_denominator
    }
}

/// `(-2)^(-P2)`: the trivial weight-2 and weight-(-1) pieces, `(-t)^P2 / (2t)^P2`.
pub fn vertical_normalization() -> NormalizationRecord {
    NormalizationRecord::minus_two_pow(&-&ParamPoly::p2())
}

/// Polynomial part of the vertical integral at equivariant weight `t`.
pub fn vertical_at_t(t: &Rational) -> Result<ChernPoly> {
    Ok(VerticalParts::at(t)?.product().integrate())
}

/// The rank-2 vertical term `(-2)^(-P2) (c2 + 6 K^2)`.
pub fn vertical_c2_2() -> (NormalizationRecord, ChernPoly) {
    let poly = vertical_at_t(&rat(1)).expect("weight 1 denominator is a unit");
    (vertical_normalization(), poly)
}

/// Plurigenus `P_n = chi + n(n-1) K^2 / 2` for `n >= 2`, in `(g, pg)`.
pub fn plurigenus(n: i64) -> ParamPoly {
    &ParamPoly::nu() + &ParamPoly::k2().scale(&ratio(n * (n - 1), 2))
}

/// `sum_{i=1}^{r-1} 1/i`.
pub fn harmonic(r: i64) -> Rational {
    (1..r).map(|i| ratio(1, i)).fold(rat(0), |a, b| a + b)
}

/// Vertical term in rank `r`:
/// `(-1)^(P2+...+Pr) r^(-Pr) (prod_{i<r} i^i)^(g-1) [r K^2 (r-1 - 2(r-1)H + 2r H^2) + c2]`.
pub fn vertical_rank_r(r: i64) -> Result<(NormalizationRecord, ChernPoly)> {
    if r < 2 {
        return Err(Error::RankTooSmall(r));
    }
    let sign: ParamPoly = (2..=r).map(plurigenus).fold(ParamPoly::zero(), |a, b| &a + &b);
    let mut norm = NormalizationRecord::sign_pow(&sign)
        * NormalizationRecord::int_pow(r as u64, &-&plurigenus(r));
    let k2 = ParamPoly::k2();
    for i in 2..r {
        norm = norm * NormalizationRecord::int_pow(i as u64, &k2.scale(&rat(i)));
    }
    let h = harmonic(r);
    let rr = rat(r);
    let bracket = &rr - &rat(1) - rat(2) * (&rr - rat(1)) * &h + rat(2) * &rr * &h * &h;
    let poly = &ChernPoly::k2().scale(&(rr * bracket)) + &ChernPoly::c2();
    Ok((norm, poly))
}

/// Exponents of `(e, a1, a2, b1, b2)`.
pub type BlowupMonomial = [u32; 5];

fn factor_degrees(m: &BlowupMonomial) -> (u32, u32, u32) {
    let s1 = m[1] + 2 * m[2];
    let s2 = m[3] + 2 * m[4];
    (s1, s2, m[0] + s1 + s2)
}

fn surviving(m: &BlowupMonomial) -> bool {
    let (s1, s2, total) = factor_degrees(m);
    s1 <= 2 && s2 <= 2 && total <= 4
}

/// A class on `Bl_diag(S x S)` in `e = [E]`, `a_i = c_i(S_1)`, `b_i = c_i(S_2)`.
///
/// Monomials vanish once a factor exceeds degree 2 or the total exceeds 4.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BlowupClass {
    terms: BTreeMap<BlowupMonomial, Rational>,
}

impl BlowupClass {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial([0; 5], c)
    }

    pub fn monomial(m: BlowupMonomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if surviving(&m) && !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    fn generator(idx: usize) -> Self {
        let mut m = [0; 5];
        m[idx] = 1;
        Self::monomial(m, rat(1))
    }

    pub fn e() -> Self {
        Self::generator(0)
    }

    pub fn a1() -> Self {
        Self::generator(1)
    }

    pub fn a2() -> Self {
        Self::generator(2)
    }

    pub fn b1() -> Self {
        Self::generator(3)
    }

    pub fn b2() -> Self {
        Self::generator(4)
    }

    /// `c1` of factor 1 or 2.
    pub fn c1_of(factor: u8) -> Self {
        match factor {
            1 => Self::a1(),
            2 => Self::b1(),
            _ => panic!("factor index must be 1 or 2"),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BlowupMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> Rational {
        self.terms.get(&[0; 5]).cloned().unwrap_or_default()
    }

    fn insert_add(&mut self, m: BlowupMonomial, c: Rational) {
        if !surviving(&m) {
            return;
        }
        let entry = self.terms.entry(m).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, c)| (*m, c * r)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(rat(1)), |acc, _| &acc * self)
    }

    /// `1/x` by a geometric series; the nilpotent part has `h^5 = 0`.
    pub fn inv(&self) -> Result<Self> {
        let c0 = self.constant_term();
        if c0.is_zero() {
            return Err(Error::NonUnitConstant {
                op: "blow-up class inverse",
                constant: c0.to_string(),
            });
        }
        let one = Self::constant(rat(1));
        let h = &self.scale(&c0.recip()) - &one;
        let mut sum = one.clone();
        let mut power = one;
        for _ in 1..5 {
            power = &power * &(-&h);
            sum = &sum + &power;
        }
        Ok(sum.scale(&c0.recip()))
    }

    /// Part with `e`-exponent exactly `k`, with `e` removed.
    pub fn e_part(&self, k: u32) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            if m[0] == k {
                let mut m2 = *m;
                m2[0] = 0;
                out.insert_add(m2, c.clone());
            }
        }
        out
    }

    /// Degree by the grading `deg e = deg a1 = deg b1 = 1`, `deg a2 = deg b2 = 2`.
    pub fn degree_part(&self, d: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| factor_degrees(m).2 == d)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// `e`-free part restricted to the diagonal: `a_i, b_i -> c_i(S)`.
    pub fn restrict_to_diagonal(&self) -> SurfClass {
        let mut out = SurfClass::default();
        for (m, c) in &self.terms {
            if m[0] != 0 {
                continue;
            }
            let a = SurfClass::monomial(m[1] + m[3], m[2] + m[4]);
            out = &out + &a.scale(c);
        }
        out
    }
}

impl fmt::Display for BlowupClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 5] = ["e", "a1", "a2", "b1", "b2"];
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let vars: Vec<String> = m
                    .iter()
                    .zip(NAMES)
                    .filter(|(k, _)| **k > 0)
                    .map(|(k, n)| if *k == 1 { n.to_string() } else { format!("{n}^{k}") })
                    .collect();
                if vars.is_empty() {
                    c.to_string()
                } else if c.is_one() {
                    vars.join("*")
                } else {
                    format!("{c}*{}", vars.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for BlowupClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BlowupClass({self})")
    }
}

impl Add for &BlowupClass {
    type Output = BlowupClass;
    fn add(self, rhs: &BlowupClass) -> BlowupClass {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_add(*m, c.clone());
        }
        out
    }
}

impl Sub for &BlowupClass {
    type Output = BlowupClass;
    fn sub(self, rhs: &BlowupClass) -> BlowupClass {
        self + &(-rhs)
    }
}

impl Neg for &BlowupClass {
    type Output = BlowupClass;
    fn neg(self) -> BlowupClass {
        self.scale(&rat(-1))
    }
}

impl Mul for &BlowupClass {
    type Output = BlowupClass;
    fn mul(self, rhs: &BlowupClass) -> BlowupClass {
        let mut out = BlowupClass::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let m: BlowupMonomial = std::array::from_fn(|i| m1[i] + m2[i]);
                out.insert_add(m, c1 * c2);
            }
        }
        out
    }
}

/// A class on `E = P(T_S)` written `A zeta + B` with `zeta = [E]|_E` and
/// `A, B` pulled back from the diagonal; `zeta^2 = c1 zeta - c2`.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct ExceptionalClass {
    pub zeta: SurfClass,
    pub base: SurfClass,
}

impl ExceptionalClass {
    pub fn from_base(b: SurfClass) -> Self {
        Self {
            zeta: SurfClass::default(),
            base: b,
        }
    }

    /// `zeta^k` reduced by the Grothendieck relation.
    pub fn zeta_pow(k: u32) -> Self {
        let mut out = Self::from_base(SurfClass::constant(rat(1)));
        for _ in 0..k {
            out = Self {
                zeta: &(&out.zeta * &SurfClass::u()) + &out.base,
                base: -&(&out.zeta * &SurfClass::v()),
            };
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        // (A z + B)(C z + D) = AC (c1 z - c2) + (AD + BC) z + BD
        let ac = &self.zeta * &rhs.zeta;
        Self {
            zeta: &(&(&ac * &SurfClass::u()) + &(&self.zeta * &rhs.base)) + &(&self.base * &rhs.zeta),
            base: &(&self.base * &rhs.base) - &(&ac * &SurfClass::v()),
        }
    }

    /// Push down to the diagonal: `zeta -> -1`, `1 -> 0`.
    pub fn push_down(&self) -> SurfClass {
        -&self.zeta
    }
}

/// For `X = sum_k e^k X_k`, the class `sum_{k >= 1} zeta^(k-1) X_k|_E` with
/// `e X' |_{E}` integrating as `X'|_E` over `E`.
pub fn exceptional_part(x: &BlowupClass) -> ExceptionalClass {
    let mut out = ExceptionalClass::default();
    for k in 1..=4 {
        let coeff = x.e_part(k).restrict_to_diagonal();
        let term = ExceptionalClass::zeta_pow(k - 1).mul(&ExceptionalClass::from_base(coeff));
        out = ExceptionalClass {
            zeta: &out.zeta + &term.zeta,
            base: &out.base + &term.base,
        };
    }
    out
}

fn factor_integral(deg1: u32, deg2: u32) -> ChernPoly {
    match (deg1, deg2) {
        (2, 0) => ChernPoly::k2(),
        (0, 1) => ChernPoly::c2(),
        _ => ChernPoly::zero(),
    }
}

/// Integrate over the blow-up: `e^0` terms factor over `S_1 x S_2`, `e^1`
/// terms vanish, `e^(>=2)` terms reduce on `E` and push down to `S`.
pub fn blowup_integrate(c: &BlowupClass) -> ChernPoly {
    let top = c.degree_part(4);
    let mut total = ChernPoly::zero();
    for (m, coeff) in top.terms() {
        if m[0] == 0 {
            let part = &factor_integral(m[1], m[2]) * &factor_integral(m[3], m[4]);
            total = &total + &part.scale(coeff);
        }
    }
    let on_e = exceptional_part(&top);
    &total + &on_e.push_down().integrate()
}

/// `int X Y` computed without multiplying on the blow-up: the `E`-part of `XY` is
/// `X'|_E zeta Y'|_E + X'|_E Y_0|_E + X_0|_E Y'|_E` with `X = X_0 + e X'`.
pub fn blowup_integrate_product(x: &BlowupClass, y: &BlowupClass) -> ChernPoly {
    let (x0, y0) = (x.e_part(0), y.e_part(0));
    let mut total = ChernPoly::zero();
    for (m, coeff) in (&x0 * &y0).degree_part(4).terms() {
        let part = &factor_integral(m[1], m[2]) * &factor_integral(m[3], m[4]);
        total = &total + &part.scale(coeff);
    }
    let xe = exceptional_part(x);
    let ye = exceptional_part(y);
    let zeta = ExceptionalClass {
        zeta: SurfClass::constant(rat(1)),
        base: SurfClass::default(),
    };
    let x0e = ExceptionalClass::from_base(x0.restrict_to_diagonal());
    let y0e = ExceptionalClass::from_base(y0.restrict_to_diagonal());
    let e_part = [xe.mul(&zeta).mul(&ye), xe.mul(&y0e), x0e.mul(&ye)];
    let mut push = SurfClass::default();
    for p in &e_part {
        push = &push + &p.push_down();
    }
    // Only the degree-3 part on E contributes; push_down of anything else lands
    // outside degree 2 on S and integrates to zero.
    &total + &push.integrate()
}

/// `e(L t^w) = wt + c1(L)` for a line bundle.
pub fn euler_line(wt: &Rational, c1: &BlowupClass) -> BlowupClass {
    &BlowupClass::constant(wt.clone()) + c1
}

/// `e(F t^w) = (wt)^2 + wt c1 + c2` for a rank-2 bundle.
pub fn euler_rank2_blowup(wt: &Rational, c1: &BlowupClass, c2: &BlowupClass) -> BlowupClass {
    &(&BlowupClass::constant(wt * wt) + &c1.scale(wt)) + c2
}

fn check_choice(x: u8) -> Result<()> {
    if x == 1 || x == 2 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("factor choice must be 1 or 2, got {x}")))
    }
}

/// The integrand `c1(S_2) / e(N^vir)` on `S^[2,1]` at weight `t`, without the
/// trivial pieces `(-t)^P2 / (2t)^P2` that make up [`mixed_normalization`].
pub fn mixed_integrand_at(t: &Rational, i: u8, j: u8, k: u8) -> Result<BlowupClass> {
    for x in [i, j, k] {
        check_choice(x)?;
    }
    let e = BlowupClass::e();
    let (a1, a2, b1, b2) = (
        BlowupClass::a1(),
        BlowupClass::a2(),
        BlowupClass::b1(),
        BlowupClass::b2(),
    );
    let ci = BlowupClass::c1_of(i);
    let cj = BlowupClass::c1_of(j);
    let ck = BlowupClass::c1_of(k);
    let two = rat(2);
    let w1 = t.clone();
    let w2 = t * &two;
    let wm = -t;
    let a1sq = &a1 * &a1;

    // c1 of the twisted line bundles, K = -c1.
    let k_i_2e = &e.scale(&two) - &ci;
    let k_i_e = &e - &ci;
    let k_j_me = &(-&cj) - &e;
    let k_j_m2e = &(-&cj) - &e.scale(&two);
    let kinv_k_2e = &ck + &e.scale(&two);
    let kinv_k_e = &ck + &e;

    let numerator = [
        b1.clone(),
        euler_line(&w1, &k_i_2e),
        euler_rank2_blowup(&w1, &-&a1, &a2),
        euler_rank2_blowup(&w1, &-&b1, &b2),
        euler_rank2_blowup(&w2, &a1.scale(&rat(-3)), &(&a2 + &a1sq.scale(&two))),
        euler_line(&w2, &b1.scale(&rat(-2))),
        euler_line(&w2, &k_j_m2e),
        euler_line(&wm, &kinv_k_e),
    ];
    let denominator = [
        euler_line(&w1, &k_i_e),
        euler_line(&w1, &-&b1),
        euler_line(&w2, &k_j_me),
        euler_rank2_blowup(&wm, &a1.scale(&rat(3)), &(&a2 + &a1sq.scale(&two))),
        euler_line(&wm, &b1.scale(&two)),
        euler_line(&wm, &kinv_k_2e),
    ];
    let num = numerator.iter().fold(BlowupClass::constant(rat(1)), |a, x| &a * x);
    let den = denominator.iter().fold(BlowupClass::constant(rat(1)), |a, x| &a * x);
    Ok(&num * &den.inv()?)
}

/// `(-2)^(-P2)`, from `(-t)^P2 / (2t)^P2`.
pub fn mixed_normalization() -> NormalizationRecord {
    NormalizationRecord::minus_two_pow(&-&ParamPoly::p2())
}

/// Polynomial part of the mixed integral at weight `t`.
pub fn mixed_at_t(t: &Rational, i: u8, j: u8, k: u8) -> Result<ChernPoly> {
    Ok(blowup_integrate(&mixed_integrand_at(t, i, j, k)?))
}

/// The `S^[2,1]` contribution `(-2)^(-P2) K^2 (-12 K^2 - 2 c2 + 62)`.
pub fn mixed_s21(i: u8, j: u8, k: u8) -> Result<(NormalizationRecord, ChernPoly)> {
    Ok((mixed_normalization(), mixed_at_t(&rat(1), i, j, k)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2() -> ChernPoly {
        ChernPoly::k2()
    }

    fn c2() -> ChernPoly {
        ChernPoly::c2()
    }

    #[test]
    fn surface_integration() {
        assert!(integrate_s(&SurfClass::constant(rat(1))).is_zero());
        assert_eq!(integrate_s(&SurfClass::monomial(2, 0)).eval_chern(5, 55), rat(5));
        let x = &SurfClass::v() + &SurfClass::monomial(2, 0).scale(&rat(6));
        assert_eq!(integrate_s(&x).to_string(), "c2 + 6*K2");
    }

    #[test]
    fn twists() {
        assert_eq!(twist_chern(0), (SurfClass::u(), SurfClass::v()));
        assert_eq!(twist_chern(2), (SurfClass::from_ints(0, -3, 0, 0), SurfClass::from_ints(0, 0, 2, 1)));
        assert_eq!(twist_chern(-1), (SurfClass::from_ints(0, 3, 0, 0), SurfClass::from_ints(0, 0, 2, 1)));
    }

    #[test]
    fn twist_matches_splitting_principle() {
        // Roots x, y of T_S; T_S (x) K^l has roots x - l(x+y), y - l(x+y).
        for l in -3..=3 {
            let (c1, c2) = twist_chern(l);
            // (x - l s)(y - l s) = xy - l s^2 + l^2 s^2 with s = x + y.
            assert_eq!(*c1.u_coeff(), rat(1 - 2 * l));
            assert_eq!(*c2.u2_coeff(), rat(l * l - l));
            assert_eq!(*c2.v_coeff(), rat(1));
        }
    }

    #[test]
    fn vertical_rank_two() {
        let (norm, poly) = vertical_c2_2();
        assert_eq!(poly, &c2() + &k2().scale(&rat(6)));
        assert_eq!(norm.exponent_of_two(), -&ParamPoly::p2());
        assert_eq!(norm.describe(), "(-2)^(-P2)");
        assert_eq!(poly.eval_chern(5, 55), rat(85));
        assert_eq!(norm.evaluate(6, 4).unwrap(), ratio(1, 1024));
    }

    #[test]
    fn vertical_intermediate_display() {
        let parts = VerticalParts::at(&rat(1)).unwrap();
        assert_eq!(parts.numerator, SurfClass::from_ints(4, -10, 8, 5));
        assert_eq!(parts.inverted_denominator, SurfClass::from_ints(1, 3, -2 + 9, -1));
    }

    #[test]
    fn vertical_weight_independent() {
        for t in [ratio(1, 3), rat(2), rat(-5), ratio(7, 2)] {
            assert_eq!(vertical_at_t(&t).unwrap(), vertical_c2_2().1);
        }
    }

    #[test]
    fn rank_r() {
        let (n2, p2) = vertical_rank_r(2).unwrap();
        assert_eq!((n2, p2), vertical_c2_2());
        let (n3, p3) = vertical_rank_r(3).unwrap();
        assert_eq!(p3, &k2().scale(&ratio(57, 2)) + &c2());
        assert_eq!(p3.eval_chern(5, 55), ratio(395, 2));
        assert_eq!(plurigenus(2).eval_int(6, 4), rat(10));
        assert_eq!(plurigenus(3).eval_int(6, 4), rat(20));
        // (-1)^30 3^-20 (2^2)^5
        assert_eq!(n3.evaluate(6, 4).unwrap(), Rational::new(1024.into(), num_traits::pow(3.into(), 20)));
        assert!(matches!(vertical_rank_r(1), Err(Error::RankTooSmall(1))));
    }

    #[test]
    fn pushdown_values() {
        let e = BlowupClass::e();
        let a1 = BlowupClass::a1();
        let b1 = BlowupClass::b1();
        let minus_k2 = -&k2();
        assert_eq!(blowup_integrate(&(&(&e.pow(2) * &a1) * &b1)), minus_k2);
        assert_eq!(blowup_integrate(&(&e.pow(3) * &a1)), minus_k2);
        assert_eq!(blowup_integrate(&e.pow(4)), &c2() - &k2());
        assert!(blowup_integrate(&(&e * &(&BlowupClass::a2() * &b1))).is_zero());
        assert_eq!(blowup_integrate(&(&a1.pow(2) * &BlowupClass::b2())), &k2() * &c2());
    }

    #[test]
    fn inverse_is_inverse() {
        let x = &(&BlowupClass::constant(rat(3)) + &BlowupClass::e()) - &BlowupClass::a1().scale(&rat(2));
        let y = &x * &x.inv().unwrap();
        assert_eq!(y, BlowupClass::constant(rat(1)));
        let s = SurfClass::from_ints(2, 3, -1, 4);
        assert_eq!(&s * &s.inv().unwrap(), SurfClass::constant(rat(1)));
    }

    #[test]
    fn mixed_term() {
        let expected = &k2() * &(&(&k2().scale(&rat(-12)) - &c2().scale(&rat(2))) + &ChernPoly::from_int(62));
        for i in 1..=2 {
            for j in 1..=2 {
                for k in 1..=2 {
                    let (norm, poly) = mixed_s21(i, j, k).unwrap();
                    assert_eq!(poly, expected, "({i},{j},{k})");
                    assert_eq!(norm.describe(), "(-2)^(-P2)");
                }
            }
        }
        assert_eq!(expected.eval_chern(5, 55), rat(-540));
    }

    #[test]
    fn mixed_literal_display() {
        // Literal t = 1 product as displayed, factor by factor.
        let e = BlowupClass::e();
        let (a1, a2, b1, b2) = (BlowupClass::a1(), BlowupClass::a2(), BlowupClass::b1(), BlowupClass::b2());
        let one = BlowupClass::constant(rat(1));
        let half = ratio(1, 2);
        for (i, j, k) in [(1, 1, 1), (2, 1, 2), (1, 2, 2)] {
            let (ci, cj, ck) = (BlowupClass::c1_of(i), BlowupClass::c1_of(j), BlowupClass::c1_of(k));
            let num = [
                b1.clone(),
                &(&one + &e.scale(&rat(2))) - &ci,
                &(&one - &a1) + &a2,
                &(&one - &b1) + &b2,
                BlowupClass::constant(rat(8)),
                &(&(&one - &a1.scale(&ratio(3, 2))) + &a2.scale(&ratio(1, 4))) + &a1.pow(2).scale(&half),
                &one - &b1,
                &(&one - &cj.scale(&half)) - &e,
                &(&one - &ck) - &e,
            ];
            let den = [
                &(&one + &e) - &ci,
                &one - &b1,
                &(&one - &cj.scale(&half)) - &e.scale(&half),
                BlowupClass::constant(rat(-1)),
                &(&(&one - &a1.scale(&rat(3))) + &a2) + &a1.pow(2).scale(&rat(2)),
                &one - &b1.scale(&rat(2)),
                &(&one - &ck) - &e.scale(&rat(2)),
            ];
            let n = num.iter().fold(one.clone(), |a, x| &a * x);
            let d = den.iter().fold(one.clone(), |a, x| &a * x);
            let literal = &n * &d.inv().unwrap();
            assert_eq!(literal, mixed_integrand_at(&rat(1), i, j, k).unwrap());
        }
    }

    #[test]
    fn mixed_weight_independent() {
        let base = mixed_s21(1, 1, 1).unwrap().1;
        for t in [rat(2), ratio(-1, 3), ratio(5, 7)] {
            assert_eq!(mixed_at_t(&t, 1, 2, 1).unwrap(), base);
            // The full integrand carries only t^0 in the surviving degree.
            let lhs = mixed_at_t(&t, 2, 2, 2).unwrap().eval_chern(5, 55);
            assert_eq!(lhs, rat(-540));
        }
    }

    #[test]
    fn confluence_on_samples() {
        let e = BlowupClass::e();
        let x = &(&e.pow(2) + &BlowupClass::a1()) - &e;
        let y = &(&(&e * &BlowupClass::b1()) + &BlowupClass::a2()) + &e.pow(2).scale(&rat(3));
        assert_eq!(blowup_integrate(&(&x * &y)), blowup_integrate_product(&x, &y));
    }

    #[test]
    fn mixed_rejects_bad_choice() {
        assert!(mixed_s21(3, 1, 1).is_err());
    }
}
