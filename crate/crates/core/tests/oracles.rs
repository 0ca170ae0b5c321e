//! Independent checks of derived values: each value here is recomputed with
//! separate, deliberately naive arithmetic rather than the library's.

use num_traits::{One, Zero};
use vwcalc::assemble::{surface_preset, virtual_dimension_at};
use vwcalc::closedform::{closed_form_series_at, residue_series};
use vwcalc::exactnum::{rat, ratio, ChernPoly, Rational};
use vwcalc::qseries::{euler_product, nested_partition_product, vw_prediction_bracket};
use vwcalc::surfring::{blowup_integrate, mixed_s21, vertical_c2_2, vertical_rank_r, BlowupClass};

type Naive = Vec<Rational>;

fn mul(a: &Naive, b: &Naive, n: usize) -> Naive {
    (0..=n)
        .map(|k| (0..=k).map(|i| &a[i] * &b[k - i]).fold(Rational::zero(), |x, y| x + y))
        .collect()
}

fn inv(a: &Naive, n: usize) -> Naive {
    let mut out = vec![a[0].recip()];
    for k in 1..=n {
        let s = (1..=k).map(|i| &a[i] * &out[k - i]).fold(Rational::zero(), |x, y| x + y);
        out.push(-s / &a[0]);
    }
    out
}

// sqrt of a series with constant term 1, solving b^2 = a coefficient by coefficient.
fn sqrt(a: &Naive, n: usize) -> Naive {
    let mut b = vec![Rational::one()];
    for k in 1..=n {
        let s = (1..k).map(|i| &b[i] * &b[k - i]).fold(Rational::zero(), |x, y| x + y);
        b.push((&a[k] - s) / rat(2));
    }
    b
}

fn poly(c: &[i64], n: usize) -> Naive {
    (0..=n).map(|k| rat(*c.get(k).unwrap_or(&0))).collect()
}

fn power(a: &Naive, e: u32, n: usize) -> Naive {
    (0..e).fold(poly(&[1], n), |acc, _| mul(&acc, a, n))
}

/// `B(q)` at integer `g >= 2` with only long multiplication and recurrences.
fn closed_form_naive(g: u32, n: usize) -> Naive {
    let root = sqrt(&poly(&[1, -10, 9], n), n);
    let f = mul(&poly(&[1, -3], n), &inv(&root, n), n);
    let half: Naive = (0..=n)
        .map(|k| (&f[k] + if k == 0 { rat(1) } else { rat(0) }) / rat(2))
        .collect();
    let left = power(&poly(&[1, -1], n), g - 1, n);
    mul(&left, &inv(&power(&half, g - 1, n), n), n)
}

#[test]
fn closed_form_against_naive_arithmetic() {
    for g in [2, 3, 6, 10] {
        let lib = closed_form_series_at(g as i64, 10);
        assert_eq!(lib.coeffs(), closed_form_naive(g, 10).as_slice(), "g = {g}");
        assert_eq!(residue_series(g as i64, 10).unwrap(), lib);
    }
}

#[test]
fn quintic_substitutions() {
    // Horizontal polynomials at g = 6.
    let g = 6i64;
    let h = [
        rat(1),
        rat(-2 * (g - 1)),
        rat((g - 1) * (2 * g - 11)),
        ratio(-2 * (g - 1) * (2 * g * g - 31 * g + 126), 3),
    ];
    assert_eq!(h, [rat(1), rat(-10), rat(5), rat(-40)]);
    assert_eq!(&closed_form_series_at(6, 3).coeffs()[..4], &h);

    // Prediction at g = 6, nu = 5.
    let nu = 5i64;
    let expected = [
        rat(1),
        rat(-2 * (g - 1)),
        rat(2 * (g - 1) * (g - 3) + 12 * nu),
        ratio(-4 * (g - 1) * (18 * nu + g * g - 8 * g + 9), 3),
    ];
    assert_eq!(expected, [rat(1), rat(-10), rat(90), rat(-580)]);
    let (b, norm) = vw_prediction_bracket(3);
    let at: Vec<Rational> = b.coeffs().iter().map(|c| c.eval_int(6, 4)).collect();
    assert_eq!(at, expected);
    // 2^(-nu+1-g) = 2^(-10)
    assert_eq!(norm.evaluate(6, 4).unwrap(), ratio(1, 1024));

    // Vertical and mixed at K2 = 5, c2 = 55.
    let (k2, c2) = (5, 55);
    assert_eq!(vertical_c2_2().1.eval_chern(k2, c2), rat(c2 + 6 * k2));
    assert_eq!(mixed_s21(1, 2, 1).unwrap().1.eval_chern(k2, c2), rat(k2 * (-12 * k2 - 2 * c2 + 62)));
    assert_eq!(rat(k2 * (-12 * k2 - 2 * c2 + 62)), rat(-540));
}

#[test]
fn surfaces_from_first_principles() {
    // Quintic: K = O(1)|S so K^2 = 5; c(T_S) = (1+H)^4 / (1+5H) has
    // c2 = (6 - 20 + 25) H^2, and H^2 has degree 5.
    let k2 = 5;
    let c2 = (6 - 20 + 25) * 5;
    let q = surface_preset("quintic").unwrap();
    assert_eq!((q.k2, q.c2, q.chi), (k2, c2, (k2 + c2) / 12));
    assert_eq!(q.pg, 4);

    // Double plane branched along an octic: L = O(4), K = pi^*(K_P2 + L) = pi^* H.
    let (l, kp) = (4i64, -3i64);
    let k2 = 2 * (kp + l) * (kp + l);
    let chi = 2 + l * (l + kp) / 2;
    let c2 = 12 * chi - k2;
    let o = surface_preset("octic-double").unwrap();
    assert_eq!((o.k2, o.c2, o.chi, o.pg, o.g), (k2, c2, chi, chi - 1, 1 + k2));

    // Plurigenera by Riemann-Roch.
    for n in 2..6 {
        assert_eq!(q.plurigenus(n), 5 + n * (n - 1) * 5 / 2);
    }
    assert_eq!(virtual_dimension_at(&q, 10), 4 * 10 - 5 - 15);
}

#[test]
fn rank_three_by_hand() {
    // H = 1 + 1/2; bracket 3 K^2 (2 - 4H + 6H^2) + c2.
    let h = ratio(3, 2);
    let coeff = rat(3) * (rat(2) - rat(4) * &h + rat(6) * &h * &h);
    assert_eq!(coeff, ratio(57, 2));
    let (norm, p) = vertical_rank_r(3).unwrap();
    assert_eq!(p.eval_chern(5, 55), coeff * rat(5) + rat(55));
    // (-1)^(P2+P3) 3^(-P3) (1^1 2^2)^(g-1) at the quintic: P2 = 10, P3 = 20.
    let expected = Rational::new(num_traits::pow(4.into(), 5), num_traits::pow(3.into(), 20));
    assert_eq!(norm.evaluate(6, 4).unwrap(), expected);
}

#[test]
fn e_fourth_by_hand() {
    // zeta^3 = (c1^2 - c2) zeta - c1 c2 on E; push down zeta -> -1.
    let expected = &ChernPoly::c2() - &ChernPoly::k2();
    assert_eq!(blowup_integrate(&BlowupClass::e().pow(4)), expected);
}

fn partitions_dp(n: usize) -> Vec<u64> {
    let mut p = vec![0u64; n + 1];
    p[0] = 1;
    for part in 1..=n {
        for k in part..=n {
            p[k] += p[k - part];
        }
    }
    p
}

// Count mu inside lambda with |mu| = m by recursion on rows.
fn count_sub(lambda: &[u32], row: usize, cap: u32, m: u32) -> u64 {
    if m == 0 {
        return 1;
    }
    if row == lambda.len() {
        return 0;
    }
    let top = lambda[row].min(cap).min(m);
    (1..=top).map(|x| count_sub(lambda, row + 1, x, m - x)).sum()
}

fn all_partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in all_partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[test]
fn partition_oracles() {
    let p = euler_product(|_| rat(-1), 20);
    let dp = partitions_dp(20);
    for k in 0..=20 {
        assert_eq!(*p.coeff(k), rat(dp[k] as i64));
    }
    let nested = nested_partition_product(14);
    for total in 0..=14u32 {
        let mut count = 0;
        for ls in total.div_ceil(2)..=total {
            for lambda in all_partitions(ls, ls) {
                count += count_sub(&lambda, 0, u32::MAX, total - ls);
            }
        }
        assert_eq!(*nested.coeff(total as usize), rat(count as i64), "total {total}");
    }
}
