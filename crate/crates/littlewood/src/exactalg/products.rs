//! Expansion of infinite products into truncated [`XSeries`].
//!
//! Everything here reduces to binomial factors `(1 - c * x^alpha)^{p}` with
//! `c` living in the coefficient ring.  When `c` is a truncated [`QSeries`]
//! monomial, powers of `c` die out at the `q`-order budget, which is what
//! makes the q-shifted factorials finite; `x`-truncation is driven by the
//! total-degree bound.

use super::qseries::QSeries;
use super::ring::Ring;
use super::xseries::{total_degree, XSeries};
use super::Rational;

/// `(1 - coeff * x^exps)^{power}` truncated to total degree `d`.
///
/// For negative powers the expansion must terminate: either `d` is set and
/// the monomial has positive total degree, or `coeff` is nilpotent under the
/// ring's own truncation (a `QSeries` monomial with positive `q`-weight).
pub fn binomial_factor<C: Ring>(
    nvars: usize,
    coeff: C,
    exps: &[i32],
    power: i64,
    d: Option<i64>,
) -> XSeries<C> {
    assert_eq!(exps.len(), nvars);
    let deg = total_degree(exps);
    let k_max_by_degree = match d {
        Some(d) if deg > 0 => Some((d.max(0) / deg) as i64),
        _ => None,
    };
    let mut out = XSeries::zero(nvars);
    if let Some(d) = d {
        out = out.with_degree_bound(d);
    }

    let mut coeff_pow = C::one();
    let mut binom: i64 = 1;
    let mut k: i64 = 0;
    loop {
        if power > 0 && k > power {
            break;
        }
        if let Some(km) = k_max_by_degree {
            if k > km {
                break;
            }
        }
        if k > 0 && coeff_pow.is_zero() {
            break;
        }
        if power < 0 && k_max_by_degree.is_none() {
            // termination must come from the coefficient ring
            assert!(
                k <= 4 * 1024,
                "nonconvergent binomial expansion: unbounded degree and non-nilpotent coefficient"
            );
        }
        let sign = if power > 0 && k % 2 == 1 { -1 } else { 1 };
        let c = coeff_pow.mul_ref(&C::from_int(sign * binom));
        let e: Vec<i32> = exps.iter().map(|&x| x * k as i32).collect();
        out.insert_add(e, c);

        k += 1;
        binom = if power > 0 {
            if k > power {
                0
            } else {
                binom * (power - k + 1) / k
            }
        } else {
            let m = -power;
            // C(k+m-1, m-1) built incrementally
            binom * (k + m - 1) / k
        };
        coeff_pow = coeff_pow.mul_ref(&coeff);
    }
    out
}

/// The q-shifted factorial `(coeff * q^{q_exp} * x^exps ; q^{base})_inf`
/// raised to `power` (`+1` or `-1`), truncated at (`d`, `q_order`).
pub fn pochhammer_xfactors(
    nvars: usize,
    coeff: &Rational,
    q_exp: u32,
    base: u32,
    exps: &[i32],
    power: i64,
    d: Option<i64>,
    q_order: u32,
) -> XSeries<QSeries> {
    assert!(base >= 1);
    let mut acc = XSeries::one(nvars);
    if let Some(d) = d {
        acc = acc.with_degree_bound(d);
    }
    let mut e = q_exp;
    loop {
        let c = QSeries::monomial(coeff.clone(), e).truncate(q_order);
        acc = acc.mul(&binomial_factor(nvars, c, exps, power, d));
        match e.checked_add(base) {
            Some(next) if next <= q_order => e = next,
            _ => break,
        }
    }
    acc
}

fn unit_exps(nvars: usize, assignments: &[(usize, i32)]) -> Vec<i32> {
    let mut e = vec![0; nvars];
    for &(i, p) in assignments {
        e[i] = p;
    }
    e
}

/// `prod_{i<j} 1/(1 - x_i x_j)` truncated to total degree `d`.
pub fn cross_pair_product<C: Ring>(nvars: usize, d: i64) -> XSeries<C> {
    let mut acc = XSeries::one(nvars).with_degree_bound(d);
    for i in 0..nvars {
        for j in (i + 1)..nvars {
            let e = unit_exps(nvars, &[(i, 1), (j, 1)]);
            acc = acc.mul(&binomial_factor(nvars, C::one(), &e, -1, Some(d)));
        }
    }
    acc
}

/// `prod_i (q^u x_i^2; q^2)_inf / (q^v x_i^2; q^2)_inf * prod_{i<j} 1/(1-x_i x_j)`.
///
/// `(u, v) = (1, 0)` and `(2, 1)` are the two product sides of the
/// empty-2-core Littlewood identities.
pub fn square_ratio_littlewood_product(
    u: u32,
    v: u32,
    nvars: usize,
    d: i64,
    q_order: u32,
) -> XSeries<QSeries> {
    let one = Rational::from_integer(1.into());
    let mut acc: XSeries<QSeries> = cross_pair_product(nvars, d);
    for i in 0..nvars {
        let e = unit_exps(nvars, &[(i, 2)]);
        let num = pochhammer_xfactors(nvars, &one, u, 2, &e, 1, Some(d), q_order);
        let den = pochhammer_xfactors(nvars, &one, v, 2, &e, -1, Some(d), q_order);
        acc = acc.mul(&num).mul(&den);
    }
    acc
}

/// `prod_i (-q x_i; q)_inf / (x_i; q)_inf * prod_{i<j} 1/(1-x_i x_j)`,
/// the product side of Kawanaka's identity.
pub fn kawanaka_product(nvars: usize, d: i64, q_order: u32) -> XSeries<QSeries> {
    let one = Rational::from_integer(1.into());
    let minus_one = -&one;
    let mut acc: XSeries<QSeries> = cross_pair_product(nvars, d);
    for i in 0..nvars {
        let e = unit_exps(nvars, &[(i, 1)]);
        let num = pochhammer_xfactors(nvars, &minus_one, 1, 1, &e, 1, Some(d), q_order);
        let den = pochhammer_xfactors(nvars, &one, 0, 1, &e, -1, Some(d), q_order);
        acc = acc.mul(&num).mul(&den);
    }
    acc
}

/// `prod_i 1/(1 - x_i^2)^{1/2} * prod_{i<j} 1/(1-x_i x_j)` with exact
/// rational coefficients; the square root expands by the binomial series
/// `sum_k C(2k,k)/4^k x^{2k}`.
pub fn half_power_product(nvars: usize, d: i64) -> XSeries<Rational> {
    let mut acc: XSeries<Rational> = cross_pair_product(nvars, d);
    for i in 0..nvars {
        let mut factor = XSeries::zero(nvars).with_degree_bound(d);
        let mut term = Rational::from_integer(1.into());
        let mut k = 0i64;
        while 2 * k <= d {
            factor.insert_add(unit_exps(nvars, &[(i, 2 * k as i32)]), term.clone());
            k += 1;
            // (2k-1)!!/(2k)!! steps by (2k-1)/(2k)
            term *= Rational::new((2 * k - 1).into(), (2 * k).into());
        }
        acc = acc.mul(&factor);
    }
    acc
}
