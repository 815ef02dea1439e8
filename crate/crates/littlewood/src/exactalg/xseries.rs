//! Multivariate Laurent series in `x_1..x_n` over a generic coefficient ring.
//!
//! The representation is a sparse map from integer exponent vectors to
//! nonzero coefficients.  An optional total-degree bound `d` makes the type
//! a truncated power series: multiplication drops terms whose exponent sum
//! exceeds the bound.  The bound is meaningful for series with nonnegative
//! exponents (the identity product sides); torus densities are built without
//! a bound, their support being controlled by the `q`-order instead.

use std::collections::BTreeMap;
use std::fmt;

use super::ring::Ring;

/// Image of a variable under substitution: zero or a monomial `c * x^exps`.
#[derive(Clone, Debug)]
pub enum VarImage<C> {
    Zero,
    Monomial { coeff: C, exps: Vec<i32> },
}

impl<C: Ring> VarImage<C> {
    /// `x_i` in a `target_nvars`-variable ring (0-based index).
    pub fn var(i: usize, target_nvars: usize) -> Self {
        let mut exps = vec![0; target_nvars];
        exps[i] = 1;
        VarImage::Monomial { coeff: C::one(), exps }
    }

    /// `x_i^{-1}` in a `target_nvars`-variable ring.
    pub fn var_inv(i: usize, target_nvars: usize) -> Self {
        let mut exps = vec![0; target_nvars];
        exps[i] = -1;
        VarImage::Monomial { coeff: C::one(), exps }
    }

    pub fn scalar(c: C, target_nvars: usize) -> Self {
        if c.is_zero() {
            VarImage::Zero
        } else {
            VarImage::Monomial { coeff: c, exps: vec![0; target_nvars] }
        }
    }
}

#[derive(Clone, Debug)]
pub struct XSeries<C: Ring> {
    nvars: usize,
    degree_bound: Option<i64>,
    terms: BTreeMap<Vec<i32>, C>,
}

/// Equality compares variables and terms; the degree bound is bookkeeping,
/// not part of the value.
impl<C: Ring> PartialEq for XSeries<C> {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.terms == other.terms
    }
}

impl<C: Ring> XSeries<C> {
    pub fn zero(nvars: usize) -> Self {
        XSeries { nvars, degree_bound: None, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        let mut s = Self::zero(nvars);
        if !c.is_zero() {
            s.terms.insert(vec![0; nvars], c);
        }
        s
    }

    pub fn monomial(nvars: usize, exps: Vec<i32>, c: C) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut s = Self::zero(nvars);
        if !c.is_zero() {
            s.terms.insert(exps, c);
        }
        s
    }

    /// Attach a total-degree bound, dropping terms above it.
    pub fn with_degree_bound(mut self, d: i64) -> Self {
        self.degree_bound = Some(d);
        self.terms.retain(|e, _| total_degree(e) <= d);
        self
    }

    pub fn degree_bound(&self) -> Option<i64> {
        self.degree_bound
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[i32]) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    /// Coefficient of `x_1^0 ... x_n^0`.
    pub fn constant_term(&self) -> C {
        self.coefficient(&vec![0; self.nvars])
    }

    pub fn insert_add(&mut self, exps: Vec<i32>, c: C) {
        if c.is_zero() {
            return;
        }
        if let Some(d) = self.degree_bound {
            if total_degree(&exps) > d {
                return;
            }
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().add_ref(&c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn merge_bound(a: Option<i64>, b: Option<i64>) -> Option<i64> {
        match (a, b) {
            (None, x) => x,
            (x, None) => x,
            (Some(p), Some(q)) => Some(p.min(q)),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        out.degree_bound = Self::merge_bound(self.degree_bound, rhs.degree_bound);
        if let Some(d) = out.degree_bound {
            out.terms.retain(|e, _| total_degree(e) <= d);
        }
        for (e, c) in &rhs.terms {
            out.insert_add(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        XSeries {
            nvars: self.nvars,
            degree_bound: self.degree_bound,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg_ref())).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars);
        let bound = Self::merge_bound(self.degree_bound, rhs.degree_bound);
        let mut out = Self::zero(self.nvars);
        out.degree_bound = bound;
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<i32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                if let Some(d) = bound {
                    if total_degree(&e) > d {
                        continue;
                    }
                }
                out.insert_add(e, ca.mul_ref(cb));
            }
        }
        out
    }

    pub fn mul_scalar(&self, c: &C) -> Self {
        let mut out = Self::zero(self.nvars);
        out.degree_bound = self.degree_bound;
        if c.is_zero() {
            return out;
        }
        for (e, a) in &self.terms {
            out.insert_add(e.clone(), a.mul_ref(c));
        }
        out
    }

    /// Multiply every exponent vector by `x^shift` (exponent-wise addition).
    pub fn shift_exponents(&self, shift: &[i32]) -> Self {
        assert_eq!(shift.len(), self.nvars);
        let mut out = Self::zero(self.nvars);
        out.degree_bound = self.degree_bound;
        for (e, c) in &self.terms {
            let ne: Vec<i32> = e.iter().zip(shift).map(|(a, b)| a + b).collect();
            out.insert_add(ne, c.clone());
        }
        out
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> XSeries<D> {
        let mut out = XSeries::zero(self.nvars);
        out.degree_bound = self.degree_bound;
        for (e, c) in &self.terms {
            out.insert_add(e.clone(), f(c));
        }
        out
    }

    /// Keep only terms of total degree `<= d` (does not attach a bound).
    pub fn restrict_degree(&self, d: i64) -> Self {
        let mut out = Self::zero(self.nvars);
        out.degree_bound = self.degree_bound;
        for (e, c) in &self.terms {
            if total_degree(e) <= d {
                out.terms.insert(e.clone(), c.clone());
            }
        }
        out
    }

    /// Substitute each variable by a monomial (or zero).  The image lives in
    /// a ring with `target_nvars` variables.
    pub fn substitute(&self, images: &[VarImage<C>], target_nvars: usize) -> XSeries<C> {
        assert_eq!(images.len(), self.nvars);
        let mut out = XSeries::zero(target_nvars);
        'term: for (e, c) in &self.terms {
            let mut exps = vec![0i32; target_nvars];
            let mut coeff = c.clone();
            for (i, &ei) in e.iter().enumerate() {
                if ei == 0 {
                    continue;
                }
                match &images[i] {
                    VarImage::Zero => continue 'term,
                    VarImage::Monomial { coeff: mc, exps: me } => {
                        for (t, m) in exps.iter_mut().zip(me) {
                            *t += m * ei;
                        }
                        if !mc.is_one_hint() {
                            let p = pow_ref(mc, ei);
                            coeff = coeff.mul_ref(&p);
                        }
                    }
                }
            }
            out.insert_add(exps, coeff);
        }
        out
    }

    /// Exchange variables `i` and `j`.
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        out.degree_bound = self.degree_bound;
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            ne.swap(i, j);
            out.insert_add(ne, c.clone());
        }
        out
    }

    /// Replace `x_i` by `x_i^{-1}`.
    pub fn invert_var(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        out.degree_bound = self.degree_bound;
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            ne[i] = -ne[i];
            out.insert_add(ne, c.clone());
        }
        out
    }

    /// Replace every `x_i` by `x_i^{-1}`.
    pub fn invert_all_vars(&self) -> Self {
        let mut out = Self::zero(self.nvars);
        out.degree_bound = self.degree_bound;
        for (e, c) in &self.terms {
            out.insert_add(e.iter().map(|a| -a).collect(), c.clone());
        }
        out
    }

    /// Replace every `x_i` by `-x_i`.
    pub fn negate_all_vars(&self) -> Self {
        let mut out = Self::zero(self.nvars);
        out.degree_bound = self.degree_bound;
        for (e, c) in &self.terms {
            let deg: i32 = e.iter().map(|a| a.rem_euclid(2)).sum();
            let c = if deg % 2 == 0 { c.clone() } else { c.neg_ref() };
            out.insert_add(e.clone(), c);
        }
        out
    }

    /// Invariance under all adjacent transpositions.
    pub fn is_symmetric(&self) -> bool {
        (1..self.nvars).all(|i| self.swap_vars(i - 1, i) == *self)
    }

    /// Invariance under permutations and all inversions `x_i -> x_i^{-1}`.
    pub fn is_bc_symmetric(&self) -> bool {
        self.is_symmetric() && (0..self.nvars).all(|i| self.invert_var(i) == *self)
    }

    /// Lexicographically largest exponent vector, if any.
    pub fn leading_exponent(&self) -> Option<&Vec<i32>> {
        self.terms.keys().next_back()
    }
}

/// Sum of the exponents of a term.
pub fn total_degree(exps: &[i32]) -> i64 {
    exps.iter().map(|&e| e as i64).sum()
}

fn pow_ref<C: Ring>(c: &C, e: i32) -> C {
    assert!(e >= 0, "monomial substitution images must have unit coefficients for negative powers");
    let mut acc = C::one();
    for _ in 0..e {
        acc = acc.mul_ref(c);
    }
    acc
}

// Small helper so substitution avoids pointless powers of 1.
trait IsOneHint {
    fn is_one_hint(&self) -> bool;
}

impl<C: Ring> IsOneHint for C {
    fn is_one_hint(&self) -> bool {
        *self == C::one()
    }
}

impl<C: Ring + fmt::Display> fmt::Display for XSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p != 0)
                .map(|(i, &p)| {
                    if p == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, p)
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}
