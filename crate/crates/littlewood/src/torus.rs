//! Constant-term evaluation of the torus integrals.
//!
//! Over the `n`-torus, integration of a Laurent polynomial against
//! `dT(x) = dx_1/x_1 ... dx_n/x_n / (2^n n! (2πi)^n)` extracts the
//! constant term divided by `2^n n!`, so every integral here is a finite
//! constant-term computation once the density is expanded to a fixed
//! `q`-order.
//!
//! Only four density families are supported, all pre-simplified so that no
//! half-integer power of `q` ever appears: the per-variable factor is
//! `(q^u x_i^{±2}; q^2)_inf / (q^v x_i^{±2}; q^2)_inf` with `(u,v) = (0,1)`
//! for the `(a,b) = (q,q)` integral and its Koornwinder twin
//! `(t_0..t_3) = (q^{1/2},-q^{1/2},q^{1/2},-q^{1/2})`, and `(u,v) = (1,2)`
//! for `(a,b) = (1,q^2)` and `(t_0..t_3) = (1,-1,q,-q)`; the pair
//! cancellation `(a,-a;q)_inf = (a^2;q^2)_inf` is what removes the square
//! roots.  The cross factor is `Π_{i<j} (1 - x_i^± x_j^±)` in every family.
//! Raw uncancelled densities (with a torus-nonexpandable `1/(1-x_i^2)`) are
//! deliberately unrepresentable.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::One;

use crate::exactalg::products::{binomial_factor, pochhammer_xfactors};
use crate::exactalg::{QSeries, Rational, XSeries};
use crate::partitions::Partition;
use crate::schur::schur;
use crate::{Error, Result};

/// The four supported densities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `I^{(n)}_λ(q,q;q)` normalisation family.
    Iqq,
    /// `I^{(n)}_λ(1,q^2;q)` normalisation family.
    I1q2,
    /// Koornwinder density at `q=t`, `(t_0..t_3) = (±q^{1/2}, ±q^{1/2})`.
    KHalfQuarters,
    /// Koornwinder density at `q=t`, `(t_0..t_3) = (1,-1,q,-q)`.
    K1m1qmq,
}

impl Family {
    /// Per-variable exponents `(u, v)` of the simplified factor.
    pub fn uv(self) -> (u32, u32) {
        match self {
            Family::Iqq | Family::KHalfQuarters => (0, 1),
            Family::I1q2 | Family::K1m1qmq => (1, 2),
        }
    }

    /// The integral family with the same density.
    pub fn integral_twin(self) -> Family {
        match self {
            Family::Iqq | Family::KHalfQuarters => Family::Iqq,
            Family::I1q2 | Family::K1m1qmq => Family::I1q2,
        }
    }

    pub fn parse(s: &str) -> Result<Family> {
        match s {
            "I_qq" => Ok(Family::Iqq),
            "I_1q2" => Ok(Family::I1q2),
            "K_halfquarters" => Ok(Family::KHalfQuarters),
            "K_1m1qmq" => Ok(Family::K1m1qmq),
            other => Err(Error::UnsupportedFamily(other.to_string())),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Iqq => "I_qq",
            Family::I1q2 => "I_1q2",
            Family::KHalfQuarters => "K_halfquarters",
            Family::K1m1qmq => "K_1m1qmq",
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// A density request: family, variable count, `q`-truncation order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DensitySpec {
    pub family: Family,
    pub n: usize,
    pub q_order: u32,
}

impl DensitySpec {
    pub fn new(family: Family, n: usize, q_order: u32) -> Self {
        DensitySpec { family, n, q_order }
    }
}

/// Result of a normalized torus integral.
#[derive(Clone, Debug)]
pub struct TorusIntegralResult {
    pub value: QSeries,
    pub shape: Partition,
    pub spec: DensitySpec,
}

static DENSITY_CACHE: OnceLock<
    RwLock<HashMap<(u32, u32, usize, u32), Arc<XSeries<QSeries>>>>,
> = OnceLock::new();

/// The expanded density, exact to the spec's `q`-order.  Memoized per
/// `(u, v, n, D)`; the `x`-support is finite because every `x`-carrying
/// factor except the `q^0` polynomial part has positive `q`-weight.
pub fn density(spec: DensitySpec) -> Arc<XSeries<QSeries>> {
    let (u, v) = spec.family.uv();
    let key = (u, v, spec.n, spec.q_order);
    let cache = DENSITY_CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(hit) = cache.read().expect("density cache poisoned").get(&key) {
        return hit.clone();
    }
    let computed = Arc::new(build_density(u, v, spec.n, spec.q_order));
    cache
        .write()
        .expect("density cache poisoned")
        .entry(key)
        .or_insert(computed)
        .clone()
}

fn build_density(u: u32, v: u32, n: usize, d: u32) -> XSeries<QSeries> {
    let one = Rational::one();
    let mut acc = XSeries::one(n);
    for i in 0..n {
        let mut e = vec![0i32; n];
        for sign in [2i32, -2] {
            e[i] = sign;
            acc = acc.mul(&pochhammer_xfactors(n, &one, u, 2, &e, 1, None, d));
            acc = acc.mul(&pochhammer_xfactors(n, &one, v, 2, &e, -1, None, d));
        }
        e[i] = 0;
    }
    for i in 0..n {
        for j in (i + 1)..n {
            for (si, sj) in [(1i32, 1i32), (1, -1), (-1, 1), (-1, -1)] {
                let mut e = vec![0i32; n];
                e[i] = si;
                e[j] = sj;
                let c = QSeries::one().truncate(d);
                acc = acc.mul(&binomial_factor(n, c, &e, 1, None));
            }
        }
    }
    acc
}

/// `1 / (2^n n!)`, the torus measure normalization.
fn measure_factor(n: usize) -> Rational {
    let mut den = num_bigint::BigInt::from(1);
    for k in 1..=n {
        den *= num_bigint::BigInt::from(2 * k as u64);
    }
    Rational::new(1.into(), den)
}

/// Constant term of `f * g` without forming the product.
fn constant_term_of_product(f: &XSeries<QSeries>, g: &XSeries<QSeries>) -> QSeries {
    let (small, large, negate_lookup) = if f.num_terms() <= g.num_terms() {
        (f, g, true)
    } else {
        (g, f, true)
    };
    let _ = negate_lookup;
    let mut acc = QSeries::zero();
    for (e, c) in small.terms() {
        let ne: Vec<i32> = e.iter().map(|a| -a).collect();
        let d = large.coefficient(&ne);
        if d.is_zero() {
            continue;
        }
        acc = acc.add(&c.mul(&d));
    }
    acc
}

/// `s_λ(x_1^±, ..., x_n^±)`: the `2n`-variable Schur polynomial with the
/// doubling substitution `x_{2k-1}, x_{2k} -> x_k, x_k^{-1}`.
pub fn schur_doubled(shape: &Partition, n: usize) -> XSeries<QSeries> {
    use crate::exactalg::VarImage;
    let big = schur(shape, 2 * n);
    let images: Vec<VarImage<Rational>> = (0..2 * n)
        .map(|t| {
            if t % 2 == 0 {
                VarImage::var(t / 2, n)
            } else {
                VarImage::var_inv(t / 2, n)
            }
        })
        .collect();
    big.substitute(&images, n)
        .map_coeffs(|r| QSeries::constant(r.clone()))
}

/// The unnormalized torus integral `CT(f * Δ) / (2^n n!)`.
pub fn raw_integral(f: &XSeries<QSeries>, spec: DensitySpec) -> QSeries {
    let d = density(spec);
    constant_term_of_product(f, &d).mul_scalar(&measure_factor(spec.n))
}

/// `Z`-normalization for the spec: the raw integral of `1`.
pub fn normalization_constant_term(spec: DensitySpec) -> QSeries {
    raw_integral(&XSeries::one(spec.n), spec)
}

/// The normalized integral `I_λ = CT(s_λ(x^±) Δ) / CT(Δ)`, which is `1` at
/// `λ = 0` by construction.  Requires `length(λ) <= 2n`.
pub fn integral_i(shape: &Partition, spec: DensitySpec) -> Result<TorusIntegralResult> {
    if spec.n == 0 {
        if shape.is_empty() {
            return Ok(TorusIntegralResult {
                value: QSeries::one().truncate(spec.q_order),
                shape: shape.clone(),
                spec,
            });
        }
        return Err(Error::LengthExceedsBound { len: shape.length(), bound: 0 });
    }
    if shape.length() > 2 * spec.n {
        return Err(Error::LengthExceedsBound { len: shape.length(), bound: 2 * spec.n });
    }
    let z = normalization_constant_term(spec);
    let num = raw_integral(&schur_doubled(shape, spec.n), spec);
    let value = num.div(&z)?;
    Ok(TorusIntegralResult { value, shape: shape.clone(), spec })
}

/// Koornwinder inner product `<f, g> = CT(f(x) g(x^{-1}) Δ) / (2^n n!)`,
/// truncated at the spec's order.
pub fn inner_product(f: &XSeries<QSeries>, g: &XSeries<QSeries>, spec: DensitySpec) -> QSeries {
    let d = density(spec);
    let mut acc = QSeries::zero();
    for (ef, cf) in f.terms() {
        for (eg, cg) in g.terms() {
            // Δ-exponent must cancel ef - eg
            let ed: Vec<i32> = ef.iter().zip(eg).map(|(a, b)| b - a).collect();
            let cd = d.coefficient(&ed);
            if cd.is_zero() {
                continue;
            }
            acc = acc.add(&cf.mul(cg).mul(&cd));
        }
    }
    acc.mul_scalar(&measure_factor(spec.n))
}

/// Closed product form of the `I`-family normalization
/// `Z_n(a,b;q) = Π_i (a b q^{n+i-2};q)_inf /
///   [(q^i, -a q^{i-1}, -b q^{i-1};q)_inf (a b q^{2i-2};q^2)_inf^2]`
/// for `(a,b) = (q,q)` or `(1,q^2)`.
pub fn z_n_closed(family: Family, n: usize, d: u32) -> Result<QSeries> {
    let one = Rational::one();
    let minus_one = -&one;
    // (a, b) as powers of q
    let (a_exp, b_exp) = match family {
        Family::Iqq => (1u32, 1u32),
        Family::I1q2 => (0, 2),
        other => return Err(Error::UnsupportedFamily(other.name().to_string())),
    };
    let mut acc = QSeries::one().truncate(d);
    for i in 1..=n as u32 {
        let num = QSeries::pochhammer(&one, a_exp + b_exp + n as u32 + i - 2, 1, d);
        acc = acc.mul(&num);
        let den1 = QSeries::pochhammer(&one, i, 1, d);
        let den2 = QSeries::pochhammer(&minus_one, a_exp + i - 1, 1, d);
        let den3 = QSeries::pochhammer(&minus_one, b_exp + i - 1, 1, d);
        let den4 = QSeries::pochhammer(&one, a_exp + b_exp + 2 * i - 2, 2, d);
        let den = den1.mul(&den2).mul(&den3).mul(&den4).mul(&den4);
        acc = acc.div(&den)?;
    }
    Ok(acc)
}

/// Gustafson's generalised Askey–Wilson integral `<1,1>` for the two `q=t`
/// Koornwinder specializations:
/// `Π_i (t, t_0t_1t_2t_3 t^{n+i-2};q)_inf /
///   [(q, t^i;q)_inf Π_{r<s} (t_r t_s t^{i-1};q)_inf]` at `t = q`.
pub fn gustafson_norm(family: Family, n: usize, d: u32) -> Result<QSeries> {
    let one = Rational::one();
    let minus_one = -&one;
    // pairwise products t_r t_s as (coeff sign, q-exponent offset at i=1)
    let pair_terms: Vec<(Rational, u32)> = match family {
        Family::KHalfQuarters => vec![
            (minus_one.clone(), 1),
            (one.clone(), 1),
            (minus_one.clone(), 1),
            (minus_one.clone(), 1),
            (one.clone(), 1),
            (minus_one.clone(), 1),
        ],
        Family::K1m1qmq => vec![
            (minus_one.clone(), 0),
            (one.clone(), 1),
            (minus_one.clone(), 1),
            (minus_one.clone(), 1),
            (one.clone(), 1),
            (minus_one.clone(), 2),
        ],
        other => return Err(Error::UnsupportedFamily(other.name().to_string())),
    };
    // t0 t1 t2 t3 = q^2 in both families
    let mut acc = QSeries::one().truncate(d);
    for i in 1..=n as u32 {
        let num1 = QSeries::pochhammer(&one, 1, 1, d); // (t;q) with t=q
        let num2 = QSeries::pochhammer(&one, 2 + n as u32 + i - 2, 1, d);
        acc = acc.mul(&num1).mul(&num2);
        let den1 = QSeries::pochhammer(&one, 1, 1, d); // (q;q)
        let den2 = QSeries::pochhammer(&one, i, 1, d); // (t^i;q)
        acc = acc.div(&den1.mul(&den2))?;
        for (c, off) in &pair_terms {
            let den = QSeries::pochhammer(c, off + i - 1, 1, d);
            acc = acc.div(&den)?;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat_int;
    use crate::partitions::{empty_two_core_partitions, enumerate_partitions, partition};
    use crate::pfaffian::{closed_form_int1, closed_form_int2};

    #[test]
    fn density_iqq_order_zero() {
        // only the q^0 factors survive: (1-x^2)(1-x^{-2})
        let d = density(DensitySpec::new(Family::Iqq, 1, 0));
        assert_eq!(d.coefficient(&[0]).coeff(0), rat_int(2));
        assert_eq!(d.coefficient(&[2]).coeff(0), rat_int(-1));
        assert_eq!(d.coefficient(&[-2]).coeff(0), rat_int(-1));
        assert_eq!(d.num_terms(), 3);
    }

    #[test]
    fn density_i1q2_order_zero_is_one() {
        let d = density(DensitySpec::new(Family::I1q2, 1, 0));
        assert_eq!(d.num_terms(), 1);
        assert_eq!(d.coefficient(&[0]).coeff(0), rat_int(1));
    }

    #[test]
    fn density_has_cross_factors_at_n2() {
        // at q^0 the I_1q2 density in two variables is exactly
        // (1-x1x2)(1-x1/x2)(1-x2/x1)(1-1/(x1x2))
        //   = 4 - 2(x1x2 + x1/x2 + x2/x1 + 1/(x1x2)) + x1^2 + x1^{-2} + x2^2 + x2^{-2}
        let d = density(DensitySpec::new(Family::I1q2, 2, 0));
        assert_eq!(d.coefficient(&[0, 0]).coeff(0), rat_int(4));
        for e in [[1, 1], [1, -1], [-1, 1], [-1, -1]] {
            assert_eq!(d.coefficient(&e).coeff(0), rat_int(-2), "at {e:?}");
        }
        for e in [[2, 0], [-2, 0], [0, 2], [0, -2]] {
            assert_eq!(d.coefficient(&e).coeff(0), rat_int(1), "at {e:?}");
        }
    }

    #[test]
    fn density_symmetries() {
        for family in [Family::Iqq, Family::I1q2] {
            for n in 1..=2usize {
                let d = density(DensitySpec::new(family, n, 6));
                for i in 0..n {
                    assert_eq!(d.invert_var(i), *d, "{family} n={n} x_{i} inversion");
                }
                assert_eq!(d.negate_all_vars(), *d, "{family} n={n} global sign flip");
            }
        }
    }

    #[test]
    fn normalized_integral_at_zero_is_one() {
        for family in [Family::Iqq, Family::I1q2] {
            for n in 1..=2usize {
                let spec = DensitySpec::new(family, n, 8);
                let r = integral_i(&Partition::empty(), spec).unwrap();
                assert!(r.value.eq_to_order(&QSeries::one().truncate(8), 8));
            }
        }
    }

    #[test]
    fn integral_vanishes_on_nonempty_core() {
        let spec = DensitySpec::new(Family::Iqq, 1, 10);
        let r = integral_i(&partition(&[1]), spec).unwrap();
        assert!(r.value.eq_to_order(&QSeries::zero().truncate(10), 10));
        // (3,2,1) is the smallest even-size nonempty core reachable at n=2
        let spec = DensitySpec::new(Family::I1q2, 2, 8);
        let r = integral_i(&partition(&[3, 2, 1]), spec).unwrap();
        assert!(r.value.eq_to_order(&QSeries::zero().truncate(8), 8));
    }

    #[test]
    fn integral_one_one_is_unity() {
        let spec = DensitySpec::new(Family::Iqq, 1, 10);
        let r = integral_i(&partition(&[1, 1]), spec).unwrap();
        assert!(r.value.eq_to_order(&QSeries::one().truncate(10), 10));
    }

    #[test]
    fn integrals_match_closed_forms_small() {
        let d = 8u32;
        for n in 1..=2usize {
            for p in empty_two_core_partitions(6, None, Some(2 * n)) {
                let spec1 = DensitySpec::new(Family::Iqq, n, d);
                let got = integral_i(&p, spec1).unwrap().value;
                let expect = closed_form_int1(&p, n).unwrap().to_qseries(d).unwrap();
                assert!(got.eq_to_order(&expect, d), "int1 at λ={p}, n={n}");

                let spec2 = DensitySpec::new(Family::I1q2, n, d);
                let got = integral_i(&p, spec2).unwrap().value;
                let expect = closed_form_int2(&p, n).unwrap().to_qseries(d).unwrap();
                assert!(got.eq_to_order(&expect, d), "int2 at λ={p}, n={n}");
            }
        }
    }

    #[test]
    fn vanishing_sweep_small() {
        let d = 8u32;
        for n in 1..=2usize {
            for family in [Family::Iqq, Family::I1q2] {
                let spec = DensitySpec::new(family, n, d);
                for p in enumerate_partitions(6, None, Some(2 * n)) {
                    if p.has_empty_two_core(crate::partitions::TwoCoreMethod::Abacus) {
                        continue;
                    }
                    let got = integral_i(&p, spec).unwrap().value;
                    assert!(
                        got.eq_to_order(&QSeries::zero().truncate(d), d),
                        "λ={p}, n={n}, {family}"
                    );
                }
            }
        }
    }

    #[test]
    fn z_closed_form_matches_constant_term() {
        let d = 8u32;
        for family in [Family::Iqq, Family::I1q2] {
            for n in 1..=2usize {
                let direct = normalization_constant_term(DensitySpec::new(family, n, d));
                let closed = z_n_closed(family, n, d).unwrap();
                assert!(direct.eq_to_order(&closed, d), "{family} n={n}");
            }
        }
    }

    #[test]
    fn gustafson_matches_constant_term() {
        let d = 8u32;
        for family in [Family::KHalfQuarters, Family::K1m1qmq] {
            for n in 1..=2usize {
                let direct = normalization_constant_term(DensitySpec::new(family, n, d));
                let closed = gustafson_norm(family, n, d).unwrap();
                assert!(direct.eq_to_order(&closed, d), "{family} n={n}");
            }
        }
    }

    #[test]
    fn inner_product_parity_and_norm() {
        let d = 8u32;
        for family in [Family::KHalfQuarters, Family::K1m1qmq] {
            let spec = DensitySpec::new(family, 1, d);
            let one = XSeries::one(1);
            let norm = inner_product(&one, &one, spec);
            assert!(norm.eq_to_order(&gustafson_norm(family, 1, d).unwrap(), d));
            // <x + x^{-1}, 1> = 0 by the x -> -x symmetry of the density
            let m1 = XSeries::monomial(1, vec![1], QSeries::one())
                .add(&XSeries::monomial(1, vec![-1], QSeries::one()));
            assert!(inner_product(&m1, &one, spec).is_zero());
            // <0, g> = 0
            assert!(inner_product(&XSeries::zero(1), &one, spec).is_zero());
        }
    }

    #[test]
    fn integral_rejects_long_shapes() {
        let spec = DensitySpec::new(Family::Iqq, 1, 4);
        assert!(integral_i(&partition(&[1, 1, 1]), spec).is_err());
    }
}
