//! Sparse Laurent polynomials in `q` with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::qseries::QSeries;
use super::ring::Ring;
use super::Rational;
use crate::{Error, Result};

/// Map from integer exponent of `q` to a nonzero rational coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(Rational::one(), 0)
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(super::rat_int(n))
    }

    pub fn monomial(c: Rational, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { terms }
    }

    /// The generator `q`.
    pub fn q() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// `1 - q^e` (any integer `e`), ubiquitous as a hook/content factor.
    pub fn one_minus_q(e: i64) -> Self {
        Self::one().sub(&Self::monomial(Rational::one(), e))
    }

    /// `1 + q^e`.
    pub fn one_plus_q(e: i64) -> Self {
        Self::one().add(&Self::monomial(Rational::one(), e))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: i64) -> Rational {
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn insert_add(&mut self, e: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.insert_add(e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = LaurentPoly::zero();
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &rhs.terms {
                out.insert_add(ea + eb, ca * cb);
            }
        }
        out
    }

    pub fn mul_scalar(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, a)| (e, a * c)).collect(),
        }
    }

    /// Multiply by `q^k`.
    pub fn mul_q_power(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitute `q -> q^k` for `k >= 1`.
    pub fn substitute_q_power(&self, k: u32) -> Self {
        assert!(k >= 1);
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e * k as i64, c.clone()))
                .collect(),
        }
    }

    pub fn eval_q0(&self) -> Result<Rational> {
        if self.min_exp().map_or(false, |m| m < 0) {
            return Err(Error::NotAPowerSeries);
        }
        Ok(self.coeff(0))
    }

    /// Reinterpret as a [`QSeries`]; fails on negative exponents.
    /// `order = None` keeps the polynomial exact.
    pub fn to_qseries(&self, order: Option<u32>) -> Result<QSeries> {
        if self.min_exp().map_or(false, |m| m < 0) {
            return Err(Error::NotAPowerSeries);
        }
        let top = self.max_exp().unwrap_or(0).max(0) as usize;
        let mut coeffs = vec![Rational::zero(); top + 1];
        for (&e, c) in &self.terms {
            coeffs[e as usize] = c.clone();
        }
        Ok(QSeries::new(coeffs, order))
    }

    /// Dense form `(shift, coeffs)` with `self = q^shift * sum coeffs[i] q^i`
    /// and `coeffs[0] != 0`.  Zero maps to `(0, [])`.
    pub(crate) fn to_dense(&self) -> (i64, Vec<Rational>) {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => {
                let mut v = vec![Rational::zero(); (hi - lo) as usize + 1];
                for (&e, c) in &self.terms {
                    v[(e - lo) as usize] = c.clone();
                }
                (lo, v)
            }
            _ => (0, vec![]),
        }
    }

    pub(crate) fn from_dense(shift: i64, coeffs: &[Rational]) -> Self {
        let mut out = LaurentPoly::zero();
        for (i, c) in coeffs.iter().enumerate() {
            out.insert_add(shift + i as i64, c.clone());
        }
        out
    }
}

impl std::ops::Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        LaurentPoly::add(&self, &rhs)
    }
}

impl std::ops::Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        LaurentPoly::mul(&self, &rhs)
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }

    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

impl Ring for LaurentPoly {
    fn add_ref(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }

    fn neg_ref(&self) -> Self {
        self.neg()
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }

    fn from_int(n: i64) -> Self {
        LaurentPoly::from_int(n)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in &self.terms {
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let mag_one = mag == Rational::one();
            match (e, mag_one) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag} q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{mag} q^{e}")?,
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Dense polynomial helpers over Q, used for gcd-based canonicalization.
// ---------------------------------------------------------------------------

pub(crate) fn poly_deg(a: &[Rational]) -> Option<usize> {
    a.iter().rposition(|c| !c.is_zero())
}

fn poly_trim(mut a: Vec<Rational>) -> Vec<Rational> {
    while a.last().map_or(false, |c| c.is_zero()) {
        a.pop();
    }
    a
}

/// Long division `a = q*b + r`; `b` must be nonzero.
pub(crate) fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let db = poly_deg(b).expect("division by zero polynomial");
    let mut r = poly_trim(a.to_vec());
    let mut q = vec![Rational::zero(); r.len().saturating_sub(db)];
    let lead = b[db].clone();
    while let Some(dr) = poly_deg(&r) {
        if dr < db {
            break;
        }
        let factor = &r[dr] / &lead;
        let shift = dr - db;
        for i in 0..=db {
            let delta = &b[i] * &factor;
            r[shift + i] -= delta;
        }
        q[shift] = factor;
        r = poly_trim(r);
    }
    (poly_trim(q), r)
}

/// Monic gcd by the Euclidean algorithm.
pub(crate) fn poly_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut a = poly_trim(a.to_vec());
    let mut b = poly_trim(b.to_vec());
    while !b.is_empty() {
        let (_, r) = poly_divrem(&a, &b);
        a = b;
        b = r;
        // keep coefficients in check
        if let Some(d) = poly_deg(&b) {
            let lead = b[d].clone();
            for c in b.iter_mut() {
                *c /= &lead;
            }
        }
    }
    if let Some(d) = poly_deg(&a) {
        let lead = a[d].clone();
        for c in a.iter_mut() {
            *c /= &lead;
        }
    }
    a
}

#[cfg(test)]
mod tests {
    use super::super::rat_int;
    use super::*;

    #[test]
    fn difference_of_squares() {
        let p = LaurentPoly::one_minus_q(1).mul(&LaurentPoly::one_plus_q(1));
        assert_eq!(p, LaurentPoly::one_minus_q(2));
    }

    #[test]
    fn laurent_negative_exponents() {
        // (1 - q^{-2}) * q^2 = q^2 - 1
        let p = LaurentPoly::one_minus_q(-2).mul_q_power(2);
        assert_eq!(p.coeff(2), rat_int(1));
        assert_eq!(p.coeff(0), rat_int(-1));
        assert_eq!(p.min_exp(), Some(0));
    }

    #[test]
    fn gcd_shared_factor() {
        // gcd(1-q^2, 1-q^3) = 1-q, monic -> q-1 normalized to monic (q - 1)/1
        let a = LaurentPoly::one_minus_q(2).to_dense().1;
        let b = LaurentPoly::one_minus_q(3).to_dense().1;
        let g = poly_gcd(&a, &b);
        // monic gcd is q - 1
        assert_eq!(g, vec![rat_int(-1), rat_int(1)]);
    }

    #[test]
    fn to_qseries_rejects_laurent() {
        assert!(LaurentPoly::one_minus_q(-1).to_qseries(None).is_err());
    }
}
