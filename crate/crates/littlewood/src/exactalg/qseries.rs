//! Truncated formal power series in `q` with exact rational coefficients.
//!
//! A [`QSeries`] is either an exact polynomial (`order == None`, every
//! coefficient beyond the stored ones is genuinely zero) or a series known
//! only up to `q^D` (`order == Some(D)`).  Binary operations propagate the
//! weaker of the two orders, so precision bookkeeping is automatic: an exact
//! polynomial combined with a series truncated at `D` yields a series
//! truncated at `D`.

use std::fmt;

use num_traits::{One, Signed, Zero};

use super::ring::Ring;
use super::Rational;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    /// Coefficient of `q^i` at index `i`; no trailing zeros are stored.
    coeffs: Vec<Rational>,
    /// `None` for exact polynomials, `Some(D)` for series known mod `q^{D+1}`.
    order: Option<u32>,
}

impl QSeries {
    pub fn new(mut coeffs: Vec<Rational>, order: Option<u32>) -> Self {
        if let Some(d) = order {
            coeffs.truncate(d as usize + 1);
        }
        let mut s = QSeries { coeffs, order };
        s.trim();
        s
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn zero() -> Self {
        QSeries { coeffs: vec![], order: None }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c], None)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(super::rat_int(n))
    }

    /// The monomial `c * q^k`, exact.
    pub fn monomial(c: Rational, k: u32) -> Self {
        let mut coeffs = vec![Rational::zero(); k as usize + 1];
        coeffs[k as usize] = c;
        Self::new(coeffs, None)
    }

    /// The generator `q` as an exact polynomial.
    pub fn q() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn order(&self) -> Option<u32> {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True when the constant term is invertible.
    pub fn is_unit(&self) -> bool {
        !self.coeff(0).is_zero()
    }

    pub fn coeff(&self, k: u32) -> Rational {
        self.coeffs.get(k as usize).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Value at `q = 0`.
    pub fn eval_q0(&self) -> Rational {
        self.coeff(0)
    }

    fn combined_order(a: Option<u32>, b: Option<u32>) -> Option<u32> {
        match (a, b) {
            (None, x) => x,
            (x, None) => x,
            (Some(p), Some(q)) => Some(p.min(q)),
        }
    }

    /// Restate this series as known only to order `d`.
    pub fn truncate(&self, d: u32) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(d as usize + 1);
        Self::new(coeffs, Some(Self::combined_order(self.order, Some(d)).unwrap()))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = Self::combined_order(self.order, rhs.order);
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for i in 0..len {
            let a = self.coeffs.get(i);
            let b = rhs.coeffs.get(i);
            coeffs.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Self::new(coeffs, order)
    }

    pub fn neg(&self) -> Self {
        QSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            order: self.order,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let order = Self::combined_order(self.order, rhs.order);
        if self.is_zero() || rhs.is_zero() {
            return Self::new(vec![], order);
        }
        let cap = match order {
            Some(d) => (d as usize + 1).min(self.coeffs.len() + rhs.coeffs.len() - 1),
            None => self.coeffs.len() + rhs.coeffs.len() - 1,
        };
        let mut coeffs = vec![Rational::zero(); cap];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= cap {
                break;
            }
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let k = i + j;
                if k >= cap {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                coeffs[k] += a * b;
            }
        }
        Self::new(coeffs, order)
    }

    pub fn mul_scalar(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::new(vec![], self.order);
        }
        QSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            order: self.order,
        }
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: u32) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![Rational::zero(); k as usize];
        coeffs.extend(self.coeffs.iter().cloned());
        // shifting does not reveal coefficients beyond the stated order
        Self::new(coeffs, self.order)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = match self.order {
            Some(d) => Self::one().truncate(d),
            None => Self::one(),
        };
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse, truncated at this series' stated order.
    ///
    /// Exact polynomials must be truncated first (their inverse is not a
    /// polynomial) unless they are constants.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::DivisionByNonUnit);
        }
        let c0 = self.coeff(0);
        let d = match self.order {
            Some(d) => d,
            None => {
                if self.coeffs.len() == 1 {
                    return Ok(Self::constant(c0.recip()));
                }
                return Err(Error::DivisionByNonUnit);
            }
        };
        let inv0 = c0.recip();
        let mut coeffs = vec![Rational::zero(); d as usize + 1];
        coeffs[0] = inv0.clone();
        for n in 1..=(d as usize) {
            let mut acc = Rational::zero();
            for k in 1..=n.min(self.coeffs.len().saturating_sub(1)) {
                let a = &self.coeffs[k];
                if a.is_zero() || coeffs[n - k].is_zero() {
                    continue;
                }
                acc += a * &coeffs[n - k];
            }
            coeffs[n] = -&inv0 * acc;
        }
        Ok(Self::new(coeffs, Some(d)))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inverse()?))
    }

    /// Substitute `q -> q^k` for `k >= 1`.
    pub fn substitute_q_power(&self, k: u32) -> Self {
        assert!(k >= 1, "q -> q^k substitution needs k >= 1");
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() * k as usize + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k as usize] = c.clone();
        }
        let order = self.order.map(|d| d * k + k - 1);
        Self::new(coeffs, order)
    }

    /// Coefficient-wise equality of the truncations at order `upto`.
    ///
    /// Panics if either side is not known to order `upto`; comparisons must
    /// never silently claim more precision than was computed.
    pub fn eq_to_order(&self, rhs: &Self, upto: u32) -> bool {
        for (label, o) in [("lhs", self.order), ("rhs", rhs.order)] {
            if let Some(d) = o {
                assert!(
                    d >= upto,
                    "{label} only known to order {d}, compared at {upto}"
                );
            }
        }
        (0..=upto).all(|k| self.coeff(k) == rhs.coeff(k))
    }

    /// `(c q^{a}; q^{b})_inf` truncated at order `d`: the product
    /// `prod_{i>=0} (1 - c q^{a + i b})`.
    pub fn pochhammer(c: &Rational, a: u32, b: u32, d: u32) -> Self {
        assert!(b >= 1, "pochhammer base must carry positive q-weight");
        let mut acc = Self::one().truncate(d);
        let mut e = a;
        loop {
            let factor = Self::one().sub(&Self::monomial(c.clone(), e));
            acc = acc.mul(&factor);
            match e.checked_add(b) {
                Some(next) if next <= d => e = next,
                _ => break,
            }
        }
        acc
    }
}

impl std::ops::Add for QSeries {
    type Output = QSeries;
    fn add(self, rhs: QSeries) -> QSeries {
        QSeries::add(&self, &rhs)
    }
}

impl std::ops::Mul for QSeries {
    type Output = QSeries;
    fn mul(self, rhs: QSeries) -> QSeries {
        QSeries::mul(&self, &rhs)
    }
}

impl Zero for QSeries {
    fn zero() -> Self {
        QSeries::zero()
    }

    fn is_zero(&self) -> bool {
        QSeries::is_zero(self)
    }
}

impl One for QSeries {
    fn one() -> Self {
        QSeries::one()
    }
}

impl Ring for QSeries {
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
        QSeries::from_int(n)
    }
}

fn fmt_coeff(c: &Rational, k: usize, first: bool, out: &mut String) {
    let mag = c.abs();
    let sign = if c.is_negative() { "-" } else { "+" };
    if first {
        if c.is_negative() {
            out.push('-');
        }
    } else {
        out.push_str(&format!(" {sign} "));
    }
    let mag_one = mag == Rational::one();
    match (k, mag_one) {
        (0, _) => out.push_str(&mag.to_string()),
        (1, true) => out.push('q'),
        (1, false) => out.push_str(&format!("{mag} q")),
        (_, true) => out.push_str(&format!("q^{k}")),
        (_, false) => out.push_str(&format!("{mag} q^{k}")),
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            fmt_coeff(c, k, first, &mut out);
            first = false;
        }
        if first {
            out.push('0');
        }
        if let Some(d) = self.order {
            out.push_str(&format!(" + O(q^{})", d + 1));
        }
        write!(f, "{out}")
    }
}

#[cfg(test)]
mod tests {
    use super::super::{rat, rat_int};
    use super::*;

    #[test]
    fn geometric_series_inverse() {
        // 1/(1-q) at D=3 -> 1+q+q^2+q^3
        let f = QSeries::one().sub(&QSeries::q()).truncate(3);
        let inv = f.inverse().unwrap();
        assert_eq!(inv.coeffs(), &[rat_int(1), rat_int(1), rat_int(1), rat_int(1)]);
    }

    #[test]
    fn exact_polynomials_keep_exactness() {
        let f = QSeries::one().sub(&QSeries::q());
        let g = QSeries::one().add(&QSeries::q());
        let p = f.mul(&g);
        assert_eq!(p.order(), None);
        assert_eq!(p.coeff(0), rat_int(1));
        assert_eq!(p.coeff(1), rat_int(0));
        assert_eq!(p.coeff(2), rat_int(-1));
    }

    #[test]
    fn euler_product_low_order() {
        // (q;q)_inf = 1 - q - q^2 + q^5 + ...
        let e = QSeries::pochhammer(&rat_int(1), 1, 1, 6);
        assert_eq!(e.coeff(0), rat_int(1));
        assert_eq!(e.coeff(1), rat_int(-1));
        assert_eq!(e.coeff(2), rat_int(-1));
        assert_eq!(e.coeff(3), rat_int(0));
        assert_eq!(e.coeff(4), rat_int(0));
        assert_eq!(e.coeff(5), rat_int(1));
    }

    #[test]
    fn even_base_pochhammer() {
        // (q^2;q^2)_inf at D=3 -> 1 - q^2
        let e = QSeries::pochhammer(&rat_int(1), 2, 2, 3);
        assert_eq!(e.coeff(0), rat_int(1));
        assert_eq!(e.coeff(1), rat_int(0));
        assert_eq!(e.coeff(2), rat_int(-1));
        assert_eq!(e.coeff(3), rat_int(0));
    }

    #[test]
    fn scalar_pochhammer_constant_factor() {
        // (-1;q)_inf has constant term 2
        let e = QSeries::pochhammer(&rat_int(-1), 0, 1, 4);
        assert_eq!(e.coeff(0), rat_int(2));
    }

    #[test]
    fn display_forms() {
        let z = QSeries::zero().truncate(8);
        assert_eq!(z.to_string(), "0 + O(q^9)");
        let f = QSeries::one()
            .sub(&QSeries::q())
            .add(&QSeries::monomial(rat(1, 2), 3));
        assert_eq!(f.to_string(), "1 - q + 1/2 q^3");
    }

    #[test]
    #[should_panic(expected = "only known to order")]
    fn comparing_beyond_known_order_panics() {
        let a = QSeries::one().truncate(3);
        let b = QSeries::one().truncate(8);
        a.eq_to_order(&b, 5);
    }
}
