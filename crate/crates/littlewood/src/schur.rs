//! Schur polynomials in `n` variables and expansion into the Schur basis.
//!
//! `schur(λ, n)` enumerates semistandard Young tableaux of shape `λ` with
//! entries at most `n` (weakly increasing rows, strictly increasing
//! columns); each tableau contributes its weight monomial.  Tableau
//! generation is division-free and works over any ring.  The classical
//! ratio of alternants `det(x_i^{λ_j+n-j}) / det(x_i^{n-j})` is kept as a
//! test oracle only.
//!
//! `schur_expand` inverts the basis by greedy elimination of the
//! lexicographically leading monomial: for a symmetric polynomial the
//! leading exponent vector is a partition `λ`, and subtracting
//! `c_λ s_λ` introduces only lexicographically smaller terms.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use crate::exactalg::{Rational, Ring, XSeries};
use crate::partitions::Partition;
use crate::{Error, Result};

/// Expansion `f = Σ c_λ s_λ(x_1..x_n)` of a symmetric polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct SchurExpansion<C: Ring> {
    pub n: usize,
    pub coeffs: BTreeMap<Partition, C>,
}

impl<C: Ring> SchurExpansion<C> {
    pub fn coefficient(&self, p: &Partition) -> C {
        self.coeffs.get(p).cloned().unwrap_or_else(C::zero)
    }

    /// Rebuild `Σ c_λ s_λ(x)`.
    pub fn reconstruct(&self) -> XSeries<C> {
        let mut acc = XSeries::zero(self.n);
        for (p, c) in &self.coeffs {
            let s = schur_lifted::<C>(p, self.n);
            acc = acc.add(&s.mul_scalar(c));
        }
        acc
    }
}

static SCHUR_CACHE: OnceLock<RwLock<HashMap<(Partition, usize), Arc<XSeries<Rational>>>>> =
    OnceLock::new();

/// The Schur polynomial `s_λ(x_1..x_n)`; zero when `length(λ) > n`.
/// Results are memoized; concurrent readers share the cached series.
pub fn schur(shape: &Partition, n: usize) -> Arc<XSeries<Rational>> {
    let cache = SCHUR_CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    let key = (shape.clone(), n);
    if let Some(hit) = cache.read().expect("schur cache poisoned").get(&key) {
        return hit.clone();
    }
    let computed = Arc::new(schur_by_tableaux(shape, n));
    cache
        .write()
        .expect("schur cache poisoned")
        .entry(key)
        .or_insert(computed)
        .clone()
}

/// `s_λ` with its integer coefficients lifted into an arbitrary ring.
pub fn schur_lifted<C: Ring>(shape: &Partition, n: usize) -> XSeries<C> {
    schur(shape, n).map_coeffs(|r| {
        // Kostka numbers are (small) integers
        C::from_int(rational_to_i64(r))
    })
}

fn rational_to_i64(r: &Rational) -> i64 {
    debug_assert!(r.is_integer());
    i64::try_from(r.numer()).expect("coefficient fits i64")
}

fn schur_by_tableaux(shape: &Partition, n: usize) -> XSeries<Rational> {
    let mut out = XSeries::zero(n);
    if shape.length() > n {
        return out;
    }
    if shape.is_empty() {
        return XSeries::one(n);
    }
    let rows: Vec<usize> = shape.parts().iter().map(|&p| p as usize).collect();
    let mut filling: Vec<Vec<u32>> = rows.iter().map(|&r| vec![0; r]).collect();
    let mut weight = vec![0i32; n];
    fill_cell(&rows, n, 0, 0, &mut filling, &mut weight, &mut out);
    out
}

fn fill_cell(
    rows: &[usize],
    n: usize,
    row: usize,
    col: usize,
    filling: &mut Vec<Vec<u32>>,
    weight: &mut Vec<i32>,
    out: &mut XSeries<Rational>,
) {
    if row == rows.len() {
        out.insert_add(weight.clone(), Rational::from_integer(1.into()));
        return;
    }
    let (next_row, next_col) = if col + 1 < rows[row] {
        (row, col + 1)
    } else {
        (row + 1, 0)
    };
    let min_left = if col > 0 { filling[row][col - 1] } else { 1 };
    let min_above = if row > 0 && rows[row - 1] > col {
        filling[row - 1][col] + 1
    } else {
        1
    };
    let lo = min_left.max(min_above);
    for v in lo..=(n as u32) {
        filling[row][col] = v;
        weight[(v - 1) as usize] += 1;
        fill_cell(rows, n, next_row, next_col, filling, weight, out);
        weight[(v - 1) as usize] -= 1;
    }
    filling[row][col] = 0;
}

/// Exponent vector already sorted weakly decreasing? Then it names a
/// partition.
fn exponent_partition(e: &[i32]) -> Option<Partition> {
    if e.iter().any(|&p| p < 0) {
        return None;
    }
    if e.windows(2).any(|w| w[0] < w[1]) {
        return None;
    }
    Partition::new(e.iter().map(|&p| p as u32).collect()).ok()
}

/// Expand a symmetric polynomial in the Schur basis.
///
/// The input must be symmetric in `x_1..x_n` (checked by adjacent
/// transpositions) with nonnegative exponents.  Lex-leading elimination
/// terminates with an exact zero remainder; a non-partition leading
/// exponent means the input was not symmetric after all.
pub fn schur_expand<C: Ring>(f: &XSeries<C>, n: usize) -> Result<SchurExpansion<C>> {
    assert_eq!(f.nvars(), n);
    if !f.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let mut rem = f.clone();
    let mut coeffs = BTreeMap::new();
    let budget = 64 * f.num_terms() + 4096;
    for _ in 0..budget {
        let lead = match rem.leading_exponent() {
            Some(e) => e.clone(),
            None => return Ok(SchurExpansion { n, coeffs }),
        };
        let shape = exponent_partition(&lead).ok_or(Error::NotSymmetric)?;
        let c = rem.coefficient(&lead);
        let s = schur_lifted::<C>(&shape, n);
        rem = rem.sub(&s.mul_scalar(&c));
        coeffs.insert(shape, c);
    }
    Err(Error::NonTerminatingRemainder)
}

/// Test oracle: the bialternant `det(x_i^{λ_j+n-j}) / det(x_i^{n-j})`,
/// computed by exact multivariate polynomial division.
pub fn schur_by_bialternant(shape: &Partition, n: usize) -> XSeries<Rational> {
    if shape.length() > n {
        return XSeries::zero(n);
    }
    let num = alternant(shape, n);
    let den = alternant(&Partition::empty(), n);
    divide_exact(&num, &den).expect("alternant ratio is a polynomial")
}

/// `det(x_i^{λ_j + n - j})` by Leibniz expansion.
fn alternant(shape: &Partition, n: usize) -> XSeries<Rational> {
    let exps: Vec<i32> = (1..=n)
        .map(|j| (shape.part(j) as usize + n - j) as i32)
        .collect();
    let mut out = XSeries::zero(n);
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |p, sign| {
        let mut e = vec![0i32; n];
        for (i, &pi) in p.iter().enumerate() {
            e[i] = exps[pi];
        }
        out.insert_add(e, Rational::from_integer(sign.into()));
    });
    out
}

fn permute(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize], i64)) {
    let n = perm.len();
    if k == n {
        visit(perm, permutation_sign(perm));
        return;
    }
    for i in k..n {
        perm.swap(k, i);
        permute(perm, k + 1, visit);
        perm.swap(k, i);
    }
}

fn permutation_sign(perm: &[usize]) -> i64 {
    let mut sign = 1i64;
    for i in 0..perm.len() {
        for j in (i + 1)..perm.len() {
            if perm[i] > perm[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// Exact division of multivariate polynomials with integer exponents;
/// `None` when the division is not exact.
fn divide_exact(num: &XSeries<Rational>, den: &XSeries<Rational>) -> Option<XSeries<Rational>> {
    let n = num.nvars();
    let (dlead, dc) = {
        let e = den.leading_exponent()?;
        (e.clone(), den.coefficient(e))
    };
    let mut rem = num.clone();
    let mut quo = XSeries::zero(n);
    while let Some(lead) = rem.leading_exponent() {
        let e: Vec<i32> = lead.iter().zip(&dlead).map(|(a, b)| a - b).collect();
        if e.iter().any(|&p| p < 0) {
            return None;
        }
        let c = &rem.coefficient(lead) / &dc;
        let term = XSeries::monomial(n, e, c);
        rem = rem.sub(&term.mul(den));
        quo = quo.add(&term);
    }
    Some(quo)
}
