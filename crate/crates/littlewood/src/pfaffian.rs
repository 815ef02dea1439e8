//! Pfaffians over the rational-function field and the structured Pfaffian
//! formulas for the torus integrals, together with their closed-form
//! evaluations.
//!
//! The two structured matrices have entry `(i,j)` supported only when
//! `λ_i - λ_j + j - i` is odd, which for partitions with empty 2-core
//! splits the index range into two equal parity classes; the Pfaffian then
//! collapses to a determinant that Chu's generalisation of Cauchy's double
//! alternant evaluates in closed form.

use num_traits::One;

use crate::exactalg::{LaurentPoly, Rational, RationalFunction};
use crate::partitions::{ParityClass, Partition, TwoCoreMethod};
use crate::{Error, Result};

/// Square antisymmetric matrix over the rational-function field.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewMatrix {
    dim: usize,
    entries: Vec<RationalFunction>,
}

impl SkewMatrix {
    /// Build from the strict upper triangle; the rest follows by
    /// antisymmetry (zero diagonal included).
    pub fn from_upper(dim: usize, mut upper: impl FnMut(usize, usize) -> RationalFunction) -> Self {
        let mut entries = vec![RationalFunction::zero(); dim * dim];
        for i in 0..dim {
            for j in (i + 1)..dim {
                let v = upper(i, j);
                entries[i * dim + j] = v.clone();
                entries[j * dim + i] = v.neg();
            }
        }
        SkewMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &RationalFunction {
        &self.entries[i * self.dim + j]
    }

    fn set(&mut self, i: usize, j: usize, v: RationalFunction) {
        self.entries[i * self.dim + j] = v;
    }

    fn swap_rows_cols(&mut self, a: usize, b: usize) {
        for j in 0..self.dim {
            self.entries.swap(a * self.dim + j, b * self.dim + j);
        }
        for i in 0..self.dim {
            self.entries.swap(i * self.dim + a, i * self.dim + b);
        }
    }

    /// The Pfaffian, by skew-symmetric elimination with exact
    /// rational-function arithmetic.  Pivots are chosen to minimize the
    /// denominator degree.  `pf(A)^2 = det(A)`.
    pub fn pfaffian(&self) -> Result<RationalFunction> {
        if self.dim % 2 != 0 {
            return Err(Error::OddDimension(self.dim));
        }
        if self.dim == 0 {
            return Ok(RationalFunction::one());
        }
        let mut a = self.clone();
        let mut sign = 1i64;
        let mut acc = RationalFunction::one();
        let dim = a.dim;
        let mut base = 0;
        while base < dim {
            // pick the pivot column for row `base`
            let mut pivot_col: Option<usize> = None;
            let mut best_deg = i64::MAX;
            for k in (base + 1)..dim {
                let e = a.get(base, k);
                if e.is_zero() {
                    continue;
                }
                let deg = e.den().max_exp().unwrap_or(0);
                if deg < best_deg {
                    best_deg = deg;
                    pivot_col = Some(k);
                }
            }
            let Some(k) = pivot_col else {
                return Ok(RationalFunction::zero());
            };
            if k != base + 1 {
                a.swap_rows_cols(k, base + 1);
                sign = -sign;
            }
            let pivot = a.get(base, base + 1).clone();
            for k in (base + 2)..dim {
                let factor = a.get(base, k).div(&pivot)?;
                if factor.is_zero() {
                    continue;
                }
                // congruence: col_k -= f * col_{base+1}, row_k -= f * row_{base+1}
                for i in 0..dim {
                    let v = a.get(i, k).sub(&factor.mul(a.get(i, base + 1)));
                    a.set(i, k, v);
                }
                for j in 0..dim {
                    let v = a.get(k, j).sub(&factor.mul(a.get(base + 1, j)));
                    a.set(k, j, v);
                }
            }
            acc = acc.mul(&pivot);
            base += 2;
        }
        if sign < 0 {
            acc = acc.neg();
        }
        Ok(acc)
    }

    /// Recursive cofactor expansion along the first remaining row; the
    /// test oracle for small dimensions.
    pub fn pfaffian_by_cofactor(&self) -> Result<RationalFunction> {
        if self.dim % 2 != 0 {
            return Err(Error::OddDimension(self.dim));
        }
        let idx: Vec<usize> = (0..self.dim).collect();
        Ok(self.pf_rec(&idx))
    }

    fn pf_rec(&self, idx: &[usize]) -> RationalFunction {
        if idx.is_empty() {
            return RationalFunction::one();
        }
        let i0 = idx[0];
        let mut acc = RationalFunction::zero();
        for (t, &j) in idx.iter().enumerate().skip(1) {
            let e = self.get(i0, j);
            if e.is_zero() {
                continue;
            }
            let rest: Vec<usize> = idx[1..]
                .iter()
                .copied()
                .filter(|&r| r != j)
                .collect();
            let sub = self.pf_rec(&rest);
            let term = e.mul(&sub);
            acc = if t % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }

    pub fn determinant(&self) -> RationalFunction {
        determinant(self.dim, |i, j| self.get(i, j).clone())
    }
}

/// Determinant of a general square matrix over the rational-function
/// field, by fraction-managed Gaussian elimination.
pub fn determinant(n: usize, entry: impl Fn(usize, usize) -> RationalFunction) -> RationalFunction {
    let mut m: Vec<Vec<RationalFunction>> = (0..n)
        .map(|i| (0..n).map(|j| entry(i, j)).collect())
        .collect();
    let mut det = RationalFunction::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return RationalFunction::zero();
        };
        if p != col {
            m.swap(p, col);
            det = det.neg();
        }
        let pivot = m[col][col].clone();
        det = det.mul(&pivot);
        for r in (col + 1)..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].div(&pivot).expect("nonzero pivot");
            for c in col..n {
                let v = m[r][c].sub(&f.mul(&m[col][c]));
                m[r][c] = v;
            }
        }
    }
    det
}

fn prefactor(n: usize) -> RationalFunction {
    // prod_{i=1}^n (1-q^{2i-1})^{2n-2i+1} / (1-q^{2i})^{2n-2i}
    let mut num = LaurentPoly::one();
    let mut den = LaurentPoly::one();
    for i in 1..=n as i64 {
        let odd = LaurentPoly::one_minus_q(2 * i - 1);
        let even = LaurentPoly::one_minus_q(2 * i);
        for _ in 0..(2 * n as i64 - 2 * i + 1) {
            num = num.mul(&odd);
        }
        for _ in 0..(2 * n as i64 - 2 * i) {
            den = den.mul(&even);
        }
    }
    RationalFunction::new(num, den)
}

/// Exponent of the structured entry: `λ_i - λ_j + j - i` for 1-based `i<j`.
fn entry_exponent(shape: &Partition, i: usize, j: usize) -> i64 {
    shape.part(i) as i64 - shape.part(j) as i64 + j as i64 - i as i64
}

fn check_length(shape: &Partition, n: usize) -> Result<()> {
    if shape.length() > 2 * n {
        return Err(Error::LengthExceedsBound { len: shape.length(), bound: 2 * n });
    }
    Ok(())
}

/// First structured matrix: entries `q^{(e-1)/2} / (1-q^e)` on odd `e`.
pub fn matrix_p1(shape: &Partition, n: usize) -> Result<SkewMatrix> {
    check_length(shape, n)?;
    Ok(SkewMatrix::from_upper(2 * n, |i, j| {
        let e = entry_exponent(shape, i + 1, j + 1);
        if e.rem_euclid(2) == 1 {
            RationalFunction::new(
                LaurentPoly::monomial(Rational::one(), (e - 1) / 2),
                LaurentPoly::one_minus_q(e),
            )
        } else {
            RationalFunction::zero()
        }
    }))
}

/// Second structured matrix: entries `(1+q^e) / (1-q^e)` on odd `e`.
pub fn matrix_p2(shape: &Partition, n: usize) -> Result<SkewMatrix> {
    check_length(shape, n)?;
    Ok(SkewMatrix::from_upper(2 * n, |i, j| {
        let e = entry_exponent(shape, i + 1, j + 1);
        if e.rem_euclid(2) == 1 {
            RationalFunction::new(LaurentPoly::one_plus_q(e), LaurentPoly::one_minus_q(e))
        } else {
            RationalFunction::zero()
        }
    }))
}

/// Pfaffian formula for the first integral family `(a,b) = (q,q)`.
pub fn pf_formula_p1(shape: &Partition, n: usize) -> Result<RationalFunction> {
    let pf = matrix_p1(shape, n)?.pfaffian()?;
    Ok(prefactor(n).mul(&pf))
}

/// Pfaffian formula for the second integral family `(a,b) = (1,q^2)`,
/// with the extra normalization `1/(2^{n-1}(1+q^n))`.
pub fn pf_formula_p2(shape: &Partition, n: usize) -> Result<RationalFunction> {
    let pf = matrix_p2(shape, n)?.pfaffian()?;
    let mut two_pow = Rational::one();
    for _ in 1..n {
        two_pow *= Rational::from_integer(2.into());
    }
    let norm = RationalFunction::new(
        LaurentPoly::one(),
        LaurentPoly::one_plus_q(n as i64).mul_scalar(&two_pow),
    );
    Ok(prefactor(n).mul(&norm).mul(&pf))
}

/// The hook/content ratio `C^e_λ(q^{2n}) H^o_λ / (C^o_λ(q^{2n}) H^e_λ)`
/// shared by both closed forms.
fn closed_ratio(shape: &Partition, n: usize) -> RationalFunction {
    let num = shape
        .content_poly(2 * n as i64, ParityClass::Even)
        .mul(&shape.hook_poly(ParityClass::Odd));
    let den = shape
        .content_poly(2 * n as i64, ParityClass::Odd)
        .mul(&shape.hook_poly(ParityClass::Even));
    RationalFunction::new(num, den)
}

fn check_empty_core(shape: &Partition) -> Result<()> {
    if !shape.has_empty_two_core(TwoCoreMethod::Abacus) {
        return Err(Error::NonEmptyTwoCore);
    }
    Ok(())
}

/// Closed form of the first integral:
/// `q^{b(λ')} C^e_λ(q^{2n}) H^o_λ / (C^o_λ(q^{2n}) H^e_λ)`.
pub fn closed_form_int1(shape: &Partition, n: usize) -> Result<RationalFunction> {
    check_length(shape, n)?;
    check_empty_core(shape)?;
    let b_conj = shape.conjugate().b_statistic();
    Ok(RationalFunction::q_power(b_conj).mul(&closed_ratio(shape, n)))
}

/// Closed form of the second integral:
/// `q^{b(λ)} (1+q^{n+2(b(λ')-b(λ))}) / (1+q^n)` times the shared ratio.
pub fn closed_form_int2(shape: &Partition, n: usize) -> Result<RationalFunction> {
    check_length(shape, n)?;
    check_empty_core(shape)?;
    let b = shape.b_statistic();
    let b_conj = shape.conjugate().b_statistic();
    let e = n as i64 + 2 * (b_conj - b);
    let factor = RationalFunction::new(
        LaurentPoly::one_plus_q(e).mul_q_power(b),
        LaurentPoly::one_plus_q(n as i64),
    );
    Ok(factor.mul(&closed_ratio(shape, n)))
}

/// Chu's generalisation of Cauchy's double alternant:
/// `det[(b x_i + c y_j)/(x_i + y_j)]` equals
/// `(b-c)^{n-1} (b Π x_i + (-1)^{n-1} c Π y_i) Π_{i<j}(x_i-x_j)(y_i-y_j) / Π_{i,j}(x_i+y_j)`.
/// Returns whether the two sides agree for the given data.
pub fn chu_determinant_check(
    x: &[RationalFunction],
    y: &[RationalFunction],
    b: &RationalFunction,
    c: &RationalFunction,
) -> Result<bool> {
    let n = x.len();
    assert_eq!(n, y.len());
    assert!(n >= 1);
    for xi in x {
        for yj in y {
            if xi.add(yj).is_zero() {
                return Err(Error::SingularDenominator);
            }
        }
    }
    let lhs = determinant(n, |i, j| {
        b.mul(&x[i])
            .add(&c.mul(&y[j]))
            .div(&x[i].add(&y[j]))
            .expect("checked nonzero")
    });

    let mut rhs = b.sub(c).pow(n as i64 - 1).expect("nonnegative power");
    let mut px = RationalFunction::one();
    let mut py = RationalFunction::one();
    for i in 0..n {
        px = px.mul(&x[i]);
        py = py.mul(&y[i]);
    }
    let signed_c = if n % 2 == 1 { c.clone() } else { c.neg() };
    rhs = rhs.mul(&b.mul(&px).add(&signed_c.mul(&py)));
    for i in 0..n {
        for j in (i + 1)..n {
            rhs = rhs.mul(&x[i].sub(&x[j])).mul(&y[i].sub(&y[j]));
        }
    }
    for xi in x {
        for yj in y {
            rhs = rhs.div(&xi.add(yj)).expect("checked nonzero");
        }
    }
    Ok(lhs == rhs)
}

/// `C_λ(q^N)/H_λ(q) = Π_{1≤i<j≤N}(1-q^{λ_i-λ_j+j-i}) / Π_{i=1}^{N-1}(q;q)_i`
/// for `length(λ) <= N`.  Returns whether both sides agree.
pub fn hook_content_identity_holds(shape: &Partition, big_n: usize) -> bool {
    assert!(shape.length() <= big_n);
    let lhs = RationalFunction::new(
        shape.content_poly(big_n as i64, ParityClass::All),
        shape.hook_poly(ParityClass::All),
    );
    let mut num = LaurentPoly::one();
    for i in 1..=big_n {
        for j in (i + 1)..=big_n {
            num = num.mul(&LaurentPoly::one_minus_q(entry_exponent(shape, i, j)));
        }
    }
    let mut den = LaurentPoly::one();
    for i in 1..big_n {
        for k in 1..=i as i64 {
            den = den.mul(&LaurentPoly::one_minus_q(k));
        }
    }
    lhs == RationalFunction::new(num, den)
}
