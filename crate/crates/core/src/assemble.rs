//! Surface data, assembly of the monopole-branch series through `q^3`, and the
//! comparison with the Vafa-Witten prediction.

use std::fmt;

use crate::closedform::Q;
use crate::error::{Error, Result};
use crate::exactnum::{rat, ChernPoly, ParamPoly, Rational, TruncSeries};
use crate::normalization::NormalizationRecord;
use crate::qseries::vw_prediction_bracket;
use crate::surfring::{mixed_s21, plurigenus, vertical_c2_2};
use crate::tautcalc::{horizontal_normalization, horizontal_series};

/// Highest power of `q` at which every fixed-locus component is included.
pub const COMPLETE_THROUGH: usize = 3;

/// Numerical invariants of a minimal surface of general type with `h^1(O) = 0`.
///
/// `c2` is the topological Euler number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceData {
    pub name: String,
    pub k2: i64,
    pub c2: i64,
    pub chi: i64,
    pub pg: i64,
    pub g: i64,
}

impl SurfaceData {
    /// Build from `K^2`, `c2`, `chi`, checking Noether's formula.
    pub fn custom(name: &str, k2: i64, c2: i64, chi: i64) -> Result<Self> {
        if (k2 + c2) % 12 != 0 {
            return Err(Error::InconsistentSurface(format!(
                "K2 + c2 = {} is not divisible by 12",
                k2 + c2
            )));
        }
        if (k2 + c2) / 12 != chi {
            return Err(Error::InconsistentSurface(format!(
                "chi = {chi} but (K2 + c2)/12 = {}",
                (k2 + c2) / 12
            )));
        }
        Ok(Self {
            name: name.to_string(),
            k2,
            c2,
            chi,
            pg: chi - 1,
            g: 1 + k2,
        })
    }

    /// `K^2` and `c2` only, deriving `chi`.
    pub fn from_chern(name: &str, k2: i64, c2: i64) -> Result<Self> {
        if (k2 + c2) % 12 != 0 {
            return Err(Error::InconsistentSurface(format!(
                "K2 + c2 = {} is not divisible by 12",
                k2 + c2
            )));
        }
        Self::custom(name, k2, c2, (k2 + c2) / 12)
    }

    pub fn p2(&self) -> i64 {
        self.pg + self.g
    }

    /// `P_n = chi + n(n-1) K^2 / 2`.
    pub fn plurigenus(&self, n: i64) -> i64 {
        self.chi + n * (n - 1) * self.k2 / 2
    }

    pub fn nu(&self) -> i64 {
        self.chi
    }

    /// Evaluate a `(g, pg)` polynomial on this surface.
    pub fn eval(&self, p: &ParamPoly) -> Rational {
        p.eval_int(self.g, self.pg)
    }

    pub fn eval_chern(&self, p: &ChernPoly) -> Rational {
        p.eval_chern(self.k2, self.c2)
    }
}

/// Names accepted by [`surface_preset`].
pub const PRESETS: [&str; 3] = ["quintic", "blowup-k3", "octic-double"];

/// Built-in surfaces.
///
/// `octic-double` is the double cover of the plane branched along an octic:
/// `K = pi^* O(1)` so `K^2 = 2`, and `chi = 2 chi(O_P2) + (L^2 + L.K_P2)/2 = 4`
/// with `L = O(4)`.
pub fn surface_preset(name: &str) -> Result<SurfaceData> {
    match name {
        "quintic" => SurfaceData::custom("quintic", 5, 55, 5),
        "blowup-k3" => SurfaceData::custom("blowup-k3", -1, 25, 2),
        "octic-double" => SurfaceData::custom("octic-double", 2, 46, 4),
        _ => Err(Error::UnknownSurface(name.to_string())),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Surface {
    Symbolic,
    Concrete(SurfaceData),
}

impl Surface {
    pub fn name(&self) -> &str {
        match self {
            Surface::Symbolic => "symbolic",
            Surface::Concrete(s) => &s.name,
        }
    }

    /// Specialize a polynomial; symbolic surfaces leave it alone.
    pub fn specialize(&self, p: &ParamPoly) -> ParamPoly {
        match self {
            Surface::Symbolic => p.clone(),
            Surface::Concrete(s) => ParamPoly::constant(s.eval(p)),
        }
    }

    pub fn specialize_chern(&self, p: &ChernPoly) -> ChernPoly {
        match self {
            Surface::Symbolic => p.clone(),
            Surface::Concrete(s) => ChernPoly::constant(s.eval_chern(p)),
        }
    }

    pub fn specialize_record(&self, r: &NormalizationRecord) -> NormalizationRecord {
        match self {
            Surface::Symbolic => r.clone(),
            Surface::Concrete(s) => r.at(s.g, s.pg),
        }
    }
}

/// Fixed-locus component contributing at a given power of `q`.
#[derive(Debug, Clone, PartialEq)]
pub struct Component {
    pub label: String,
    pub power: usize,
    pub value: ParamPoly,
}

/// The monopole-branch series: bracket, normalization and its components.
#[derive(Debug, Clone, PartialEq)]
pub struct MonopoleSeries {
    pub bracket: TruncSeries<ParamPoly>,
    pub normalization: NormalizationRecord,
    pub per_component: Vec<Component>,
}

impl MonopoleSeries {
    /// Components at `q^n`.
    pub fn components_at(&self, n: usize) -> Vec<&Component> {
        self.per_component.iter().filter(|c| c.power == n).collect()
    }

    /// Bracket rebuilt from the component list.
    pub fn sum_of_components(&self) -> TruncSeries<ParamPoly> {
        let mut coeffs = vec![ParamPoly::zero(); self.bracket.order() + 1];
        for c in &self.per_component {
            coeffs[c.power] = &coeffs[c.power] + &c.value;
        }
        TruncSeries::from_coeffs(Q, coeffs, self.bracket.order())
    }

    pub fn specialize(&self, s: &Surface) -> Self {
        Self {
            bracket: self.bracket.map(|c| s.specialize(c)),
            normalization: s.specialize_record(&self.normalization),
            per_component: self
                .per_component
                .iter()
                .map(|c| Component {
                    value: s.specialize(&c.value),
                    ..c.clone()
                })
                .collect(),
        }
    }
}

fn horizontal_label(n: usize) -> String {
    format!("S^[0,{n}]")
}

/// Monopole series through `q^3` in `(g, pg)`.
pub fn monopole_series_q3() -> MonopoleSeries {
    monopole_series(COMPLETE_THROUGH)
}

/// Monopole series through `q^order`. Past `q^3` only the horizontal
/// components are included, so those coefficients are not the full invariant.
pub fn monopole_series(order: usize) -> MonopoleSeries {
    let (h, norm) = horizontal_series(order);
    let mut per_component: Vec<Component> = (0..=order)
        .map(|n| Component {
            label: horizontal_label(n),
            power: n,
            value: h.coeff(n).clone(),
        })
        .collect();
    let (vnorm, vpoly) = vertical_c2_2();
    let (mnorm, mpoly) = mixed_s21(1, 1, 1).expect("valid factor choice");
    assert_eq!(vnorm, norm);
    assert_eq!(mnorm, norm);
    if order >= 2 {
        per_component.push(Component {
            label: "S^[1,1]".into(),
            power: 2,
            value: vpoly.to_genus(),
        });
    }
    if order >= 3 {
        per_component.push(Component {
            label: "S^[1,2]".into(),
            power: 3,
            value: mpoly.to_genus(),
        });
    }
    per_component.sort_by_key(|c| c.power);
    let mut m = MonopoleSeries {
        bracket: TruncSeries::zero(Q, order),
        normalization: norm,
        per_component,
    };
    m.bracket = m.sum_of_components();
    m
}

/// `vd = 2r c2(E) - (r-1) K^2 - (r^2-1) chi` at rank 2, for a symbolic surface
/// and given `c2(E)`.
pub fn virtual_dimension(c2_e: &ParamPoly) -> ParamPoly {
    let chi = ParamPoly::nu();
    &(&c2_e.scale(&rat(4)) - &ParamPoly::k2()) - &chi.scale(&rat(3))
}

/// `vd` on a concrete surface.
pub fn virtual_dimension_at(s: &SurfaceData, c2_e: i64) -> i64 {
    4 * c2_e - s.k2 - 3 * s.chi
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Equal,
    Unequal,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Equal => "EQUAL",
            Status::Unequal => "UNEQUAL",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PowerComparison {
    pub power: usize,
    pub monopole: ParamPoly,
    pub prediction: ParamPoly,
    pub equal: bool,
}

/// Outcome of comparing the monopole series with the prediction.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub surface: String,
    pub powers: Vec<PowerComparison>,
    pub first_mismatch: Option<usize>,
    pub monopole_normalization: NormalizationRecord,
    pub prediction_normalization: NormalizationRecord,
    /// Powers of 2 and odd primes agree.
    pub normalizations_equal: bool,
    /// Exponent of `-1` in the ratio monopole / prediction.
    pub sign_difference: ParamPoly,
    /// `vd` mod 2 does not depend on `c2(E)`; this is `vd` at `c2(E) = 0`.
    pub vd_parity: ParamPoly,
    /// The sign difference is exactly `(-1)^vd`.
    pub sign_matches_vd: bool,
    pub status: Status,
}

impl ComparisonReport {
    pub fn bracket(&self) -> Vec<ParamPoly> {
        self.powers.iter().map(|p| p.monopole.clone()).collect()
    }
}

/// Compare two brackets power by power through `q^3`, both already specialized.
pub fn compare_brackets(
    surface: &Surface,
    monopole: &TruncSeries<ParamPoly>,
    monopole_norm: &NormalizationRecord,
    prediction: &TruncSeries<ParamPoly>,
    prediction_norm: &NormalizationRecord,
) -> ComparisonReport {
    let top = COMPLETE_THROUGH.min(monopole.order()).min(prediction.order());
    let powers: Vec<PowerComparison> = (0..=top)
        .map(|n| {
            let a = monopole.coeff(n).clone();
            let b = prediction.coeff(n).clone();
            PowerComparison {
                power: n,
                equal: a == b,
                monopole: a,
                prediction: b,
            }
        })
        .collect();
    let first_mismatch = powers.iter().find(|p| !p.equal).map(|p| p.power);
    let ratio = monopole_norm * &prediction_norm.inverse();
    let normalizations_equal = ratio.exponent_of_two().is_zero() && ratio.odd_primes().next().is_none();
    let sign_difference = ratio.exponent_of_minus_one();
    let vd_parity = parity(surface.specialize(&virtual_dimension(&ParamPoly::zero())));
    let sign_matches_vd = (&sign_difference - &vd_parity).is_even_valued();
    let status = if first_mismatch.is_none() && normalizations_equal {
        Status::Equal
    } else {
        Status::Unequal
    };
    ComparisonReport {
        surface: surface.name().to_string(),
        powers,
        first_mismatch,
        monopole_normalization: monopole_norm.clone(),
        prediction_normalization: prediction_norm.clone(),
        normalizations_equal,
        sign_difference,
        vd_parity,
        sign_matches_vd,
        status,
    }
}

fn parity(p: ParamPoly) -> ParamPoly {
    match p.as_integer() {
        Some(k) => ParamPoly::from_int(if k % 2 == 0.into() { 0 } else { 1 }),
        None => p,
    }
}

/// The headline comparison through `q^3`.
pub fn compare_vw(surface: &Surface) -> ComparisonReport {
    let m = monopole_series_q3().specialize(surface);
    let (p, pn) = vw_prediction_bracket(COMPLETE_THROUGH);
    let p = p.map(|c| surface.specialize(c));
    let pn = surface.specialize_record(&pn);
    compare_brackets(surface, &m.bracket, &m.normalization, &p, &pn)
}

/// Add `delta` to the coefficient of `q^power`; a negative control.
pub fn inject_mismatch(s: &TruncSeries<ParamPoly>, power: usize, delta: &ParamPoly) -> TruncSeries<ParamPoly> {
    let mut coeffs = s.coeffs().to_vec();
    coeffs.resize(s.order() + 1, ParamPoly::zero());
    coeffs[power] = &coeffs[power] + delta;
    TruncSeries::new(s.var(), s.shift().clone(), coeffs, s.order())
}

/// The mixed term rewritten in `(g, nu)`: `(g-1)(-24 nu - 10 g + 72)`.
pub fn mixed_in_genus_form() -> ParamPoly {
    let g = ParamPoly::g();
    let nu = ParamPoly::nu();
    let gm1 = &g - &ParamPoly::from_int(1);
    &gm1 * &(&(&nu.scale(&rat(-24)) - &g.scale(&rat(10))) + &ParamPoly::from_int(72))
}

/// `(-2)^(-nu - g + 1)`.
pub fn genus_form_normalization() -> NormalizationRecord {
    let e = &(&ParamPoly::from_int(1) - &ParamPoly::nu()) - &ParamPoly::g();
    NormalizationRecord::minus_two_pow(&e)
}

/// Plurigenera `P_2..P_r` of a symbolic surface.
pub fn plurigenera(r: i64) -> Vec<ParamPoly> {
    (2..=r).map(plurigenus).collect()
}

/// Horizontal normalization, for callers that only need the record.
pub fn monopole_normalization() -> NormalizationRecord {
    horizontal_normalization()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<ParamPoly> {
        v.iter().map(|x| ParamPoly::from_int(*x)).collect()
    }

    #[test]
    fn presets() {
        let q = surface_preset("quintic").unwrap();
        assert_eq!((q.k2, q.c2, q.chi, q.pg, q.g, q.p2()), (5, 55, 5, 4, 6, 10));
        assert_eq!(q.plurigenus(2), 10);
        let b = surface_preset("blowup-k3").unwrap();
        assert_eq!((b.k2, b.c2, b.chi, b.pg, b.g), (-1, 25, 2, 1, 0));
        let o = surface_preset("octic-double").unwrap();
        assert_eq!((o.k2, o.c2, o.chi, o.pg, o.g), (2, 46, 4, 3, 3));
        assert!(SurfaceData::custom("k3ish", 0, 24, 2).is_ok());
        assert!(SurfaceData::from_chern("bad", 1, 1).is_err());
        assert!(SurfaceData::custom("bad", 5, 55, 4).is_err());
        assert!(matches!(surface_preset("torus"), Err(Error::UnknownSurface(_))));
    }

    #[test]
    fn monopole_symbolic() {
        let m = monopole_series_q3();
        assert_eq!(m.bracket.coeffs(), crate::qseries::vw_expected_q3().as_slice());
        assert_eq!(m.normalization, genus_form_normalization());
        let labels = |n| m.components_at(n).iter().map(|c| c.label.clone()).collect::<Vec<_>>();
        assert_eq!(labels(0), vec!["S^[0,0]"]);
        assert_eq!(labels(1), vec!["S^[0,1]"]);
        assert_eq!(labels(2), vec!["S^[0,2]", "S^[1,1]"]);
        assert_eq!(labels(3), vec!["S^[0,3]", "S^[1,2]"]);
    }

    #[test]
    fn q2_split() {
        let m = monopole_series_q3();
        let parts = m.components_at(2);
        let g = ParamPoly::g();
        let gm1 = &g - &ParamPoly::from_int(1);
        assert_eq!(parts[0].value, &gm1 * &(&g.scale(&rat(2)) - &ParamPoly::from_int(11)));
        assert_eq!(parts[1].value, &ParamPoly::c2() + &ParamPoly::k2().scale(&rat(6)));
    }

    #[test]
    fn quintic_monopole() {
        let s = Surface::Concrete(surface_preset("quintic").unwrap());
        let m = monopole_series_q3().specialize(&s);
        assert_eq!(m.bracket.coeffs(), ints(&[1, -10, 90, -580]).as_slice());
        assert_eq!(m.normalization.describe(), "(-2)^(-10)");
    }

    #[test]
    fn comparisons() {
        let r = compare_vw(&Surface::Symbolic);
        assert_eq!(r.status, Status::Equal);
        assert!(r.sign_matches_vd);
        let s = Surface::Concrete(surface_preset("quintic").unwrap());
        let r = compare_vw(&s);
        assert_eq!(r.status, Status::Equal);
        assert_eq!(r.vd_parity, ParamPoly::from_int(0));
        assert!(r.sign_matches_vd);
        let sd = surface_preset("quintic").unwrap();
        assert_eq!(virtual_dimension_at(&sd, 7), 4 * 7 - 5 - 15);
    }

    #[test]
    fn negative_control() {
        let m = monopole_series_q3();
        let (p, pn) = vw_prediction_bracket(3);
        let bad = inject_mismatch(&m.bracket, 2, &ParamPoly::from_int(1));
        let r = compare_brackets(&Surface::Symbolic, &bad, &m.normalization, &p, &pn);
        assert_eq!(r.status, Status::Unequal);
        assert_eq!(r.first_mismatch, Some(2));
    }

    #[test]
    fn mixed_genus_form() {
        let (norm, poly) = mixed_s21(2, 1, 2).unwrap();
        assert_eq!(poly.to_genus(), mixed_in_genus_form());
        assert_eq!(norm, genus_form_normalization());
    }

    #[test]
    fn octic_compare() {
        let s = Surface::Concrete(surface_preset("octic-double").unwrap());
        assert_eq!(compare_vw(&s).status, Status::Equal);
    }
}
