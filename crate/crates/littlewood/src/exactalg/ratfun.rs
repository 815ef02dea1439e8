//! Rational functions in `q` in canonical form.
//!
//! Canonical form: the denominator is a genuine polynomial with nonzero
//! constant term and leading coefficient 1, and shares no polynomial factor
//! with the numerator.  Any pure `q`-power sits in the numerator, which may
//! therefore be a Laurent polynomial.  Two rational functions are equal as
//! functions iff their canonical forms are structurally equal.

use std::fmt;

use num_traits::{One, Zero};

use super::laurent::{poly_deg, poly_divrem, poly_gcd, LaurentPoly};
use super::qseries::QSeries;
use super::ring::Ring;
use super::Rational;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    /// Build `num/den` and canonicalize.  Panics when `den` is zero.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RationalFunction { num, den: LaurentPoly::one() };
        }
        let (ns, nd) = num.to_dense();
        let (ds, dd) = den.to_dense();
        let g = poly_gcd(&nd, &dd);
        let (nq, nr) = poly_divrem(&nd, &g);
        let (dq, dr) = poly_divrem(&dd, &g);
        debug_assert!(nr.is_empty() && dr.is_empty(), "gcd division left a remainder");
        let lead = dq[poly_deg(&dq).expect("nonzero denominator")].clone();
        let num = LaurentPoly::from_dense(ns - ds, &nq).mul_scalar(&lead.recip());
        let den = LaurentPoly::from_dense(0, &dq).mul_scalar(&lead.recip());
        RationalFunction { num, den }
    }

    pub fn zero() -> Self {
        RationalFunction { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        RationalFunction { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    pub fn constant(c: Rational) -> Self {
        RationalFunction { num: LaurentPoly::constant(c), den: LaurentPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(super::rat_int(n))
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        RationalFunction { num: p, den: LaurentPoly::one() }
    }

    /// `q^k` for any integer `k`.
    pub fn q_power(k: i64) -> Self {
        RationalFunction {
            num: LaurentPoly::monomial(Rational::one(), k),
            den: LaurentPoly::one(),
        }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == LaurentPoly::one() && self.den == LaurentPoly::one()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::new(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByNonUnit);
        }
        Ok(Self::new(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inverse()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Expand as a power series to order `d`.
    ///
    /// Requires the canonical numerator to be free of negative exponents,
    /// i.e. the function must actually be a power series in `q`.
    pub fn to_qseries(&self, d: u32) -> Result<QSeries> {
        let num = self.num.to_qseries(Some(d))?;
        let den = self.den.to_qseries(Some(d))?;
        num.div(&den)
    }
}

impl std::ops::Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: RationalFunction) -> RationalFunction {
        RationalFunction::add(&self, &rhs)
    }
}

impl std::ops::Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: RationalFunction) -> RationalFunction {
        RationalFunction::mul(&self, &rhs)
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }

    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        RationalFunction::one()
    }
}

impl Ring for RationalFunction {
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
        RationalFunction::from_int(n)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == LaurentPoly::one() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::super::rat_int;
    use super::*;

    #[test]
    fn cancels_common_factor() {
        // (1-q^2)/(1-q) -> 1+q
        let r = RationalFunction::new(LaurentPoly::one_minus_q(2), LaurentPoly::one_minus_q(1));
        assert_eq!(r, RationalFunction::from_laurent(LaurentPoly::one_plus_q(1)));
        assert_eq!(r.to_string(), "1 + q");
    }

    #[test]
    fn canonical_form_is_unique() {
        // q(1-q)/(1-q^3) == (q-q^2)/(1-q^3) == q/(1+q+q^2)
        let a = RationalFunction::new(
            LaurentPoly::q().mul(&LaurentPoly::one_minus_q(1)),
            LaurentPoly::one_minus_q(3),
        );
        let b = RationalFunction::new(
            LaurentPoly::q().sub(&LaurentPoly::monomial(rat_int(1), 2)),
            LaurentPoly::one_minus_q(3),
        );
        assert_eq!(a, b);
        assert_eq!(a.den().coeff(0), rat_int(1));
        assert_eq!(a.den().max_exp(), Some(2));
    }

    #[test]
    fn laurent_numerators_are_allowed() {
        // q^{-1}(1+q) / (1+q) = q^{-1}
        let r = RationalFunction::new(
            LaurentPoly::one_plus_q(1).mul_q_power(-1),
            LaurentPoly::one_plus_q(1),
        );
        assert_eq!(r, RationalFunction::q_power(-1));
        assert!(r.to_qseries(4).is_err());
    }

    #[test]
    fn series_expansion() {
        // 1/(1-q) -> all-ones series
        let r = RationalFunction::new(LaurentPoly::one(), LaurentPoly::one_minus_q(1));
        let s = r.to_qseries(3).unwrap();
        assert_eq!(s.coeffs(), &[rat_int(1), rat_int(1), rat_int(1), rat_int(1)]);
    }

    #[test]
    fn arithmetic_round_trip() {
        let a = RationalFunction::new(LaurentPoly::one_plus_q(1), LaurentPoly::one_minus_q(2));
        let b = RationalFunction::new(LaurentPoly::q(), LaurentPoly::one_minus_q(3));
        let s = a.add(&b).sub(&b);
        assert_eq!(s, a);
        let p = a.mul(&b).div(&b).unwrap();
        assert_eq!(p, a);
    }
}
