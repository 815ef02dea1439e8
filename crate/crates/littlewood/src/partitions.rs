//! Partitions, Young-diagram statistics, hooks, contents, 2-cores and the
//! signed statistic `b(λ)`.
//!
//! A partition is stored as its weakly decreasing sequence of positive
//! parts; trailing zeros are trimmed so equality and hashing are canonical.
//! Cells are addressed 1-based as `(row, column)`: the arm of a cell counts
//! boxes strictly to its right, the leg boxes strictly below, and
//! `hook = arm + leg + 1`.
//!
//! The statistic `b(λ) = Σ_{(i,j) ∈ λ} (-1)^{h(i,j)} (λ_i - i)` (the sign
//! exponent is exactly the hook length of the cell) drives the coefficients
//! of the empty-2-core Littlewood identities: on partitions with empty
//! 2-core it is nonnegative and vanishes precisely when all rows are even.

use std::fmt;

use num_traits::One;

use crate::exactalg::{LaurentPoly, Rational};
use crate::{Error, Result};

/// Weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

/// 1-based cell address inside a Young diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

/// Arm, leg, hook and content data of a single cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HookData {
    pub arm: u32,
    pub leg: u32,
    pub hook: u32,
    /// `col - row`.
    pub content: i64,
    /// Parity class of `row + col`.
    pub row_plus_col_even: bool,
}

/// Which even/odd refinement of a hook or content product to take.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParityClass {
    All,
    Even,
    Odd,
}

/// The three equivalent empty-2-core tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwoCoreMethod {
    /// Beta-number abacus: compute the 2-core and test emptiness.
    Abacus,
    /// `|H_odd| == |H_even|` on the hook multiset.
    HookCount,
    /// Parity count of `λ_i + 2m - i` over a padding of length `2m`:
    /// empty 2-core iff exactly `m` entries of each parity.
    BetaParity { m: usize },
}

/// Hook multisets of a diagram, each sorted decreasingly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookMultisets {
    pub all: Vec<u32>,
    pub even: Vec<u32>,
    pub odd: Vec<u32>,
}

impl Partition {
    /// Build from parts; trailing zeros are trimmed.  Fails unless the
    /// sequence is weakly decreasing.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!(
                "parts must be weakly decreasing, got {parts:?}"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    /// Parse the CLI text form `"6,4,3,1"`; the empty string is the empty
    /// partition.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "()" || s == "0" {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad part {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }

    /// The rectangle `(m^n)`.
    pub fn rectangle(m: u32, n: usize) -> Self {
        if m == 0 {
            return Self::empty();
        }
        Partition { parts: vec![m; n] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i` with 1-based `i`; zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        assert!(i >= 1, "parts are 1-indexed");
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// All parts even.
    pub fn is_even(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 0)
    }

    /// All columns even, i.e. the conjugate is even.
    pub fn conjugate_is_even(&self) -> bool {
        self.conjugate().is_even()
    }

    pub fn contains(&self, other: &Partition) -> bool {
        (1..=other.length()).all(|i| self.part(i) >= other.part(i))
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1) as usize;
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p as usize >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Cells of the diagram in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts.iter().enumerate().flat_map(|(i, &p)| {
            (1..=p as usize).map(move |j| Cell { row: i + 1, col: j })
        })
    }

    pub fn contains_cell(&self, s: Cell) -> bool {
        s.row >= 1 && s.col >= 1 && self.part(s.row) as usize >= s.col
    }

    /// Arm, leg, hook and content of a cell of the diagram.
    pub fn hook_data(&self, s: Cell) -> Result<HookData> {
        if !self.contains_cell(s) {
            return Err(Error::CellOutsideDiagram(s.row, s.col));
        }
        let conj = self.conjugate();
        Ok(self.hook_data_with_conj(s, &conj))
    }

    fn hook_data_with_conj(&self, s: Cell, conj: &Partition) -> HookData {
        let arm = self.part(s.row) - s.col as u32;
        let leg = conj.part(s.col) - s.row as u32;
        HookData {
            arm,
            leg,
            hook: arm + leg + 1,
            content: s.col as i64 - s.row as i64,
            row_plus_col_even: (s.row + s.col) % 2 == 0,
        }
    }

    /// The multiset of hook lengths, refined into even and odd parts.
    pub fn hook_multisets(&self) -> HookMultisets {
        let conj = self.conjugate();
        let mut all = Vec::with_capacity(self.size() as usize);
        for s in self.cells() {
            all.push(self.hook_data_with_conj(s, &conj).hook);
        }
        all.sort_unstable_by(|a, b| b.cmp(a));
        let even = all.iter().copied().filter(|h| h % 2 == 0).collect();
        let odd = all.iter().copied().filter(|h| h % 2 == 1).collect();
        HookMultisets { all, even, odd }
    }

    /// The 2-core, via beta numbers on the 2-abacus: the beta set
    /// `λ_i + N - i` splits by parity onto two runners, every bead slides
    /// down its runner, and the residual beta set is read back as a
    /// partition.  Linear in the length, unlike literal domino stripping.
    pub fn two_core(&self) -> Partition {
        let n = self.length().max(1);
        let betas: Vec<u64> = (1..=n)
            .map(|i| self.part(i) as u64 + (n - i) as u64)
            .collect();
        let evens = betas.iter().filter(|&&b| b % 2 == 0).count() as u64;
        let odds = n as u64 - evens;
        let mut new_betas: Vec<u64> = (0..evens)
            .map(|k| 2 * k)
            .chain((0..odds).map(|k| 2 * k + 1))
            .collect();
        new_betas.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = new_betas
            .iter()
            .enumerate()
            .map(|(idx, &b)| (b - (n - idx - 1) as u64) as u32)
            .collect();
        Partition::new(parts).expect("descending beta set reads back as a partition")
    }

    /// Empty-2-core test by the chosen method; the methods agree.
    pub fn has_empty_two_core(&self, method: TwoCoreMethod) -> bool {
        match method {
            TwoCoreMethod::Abacus => self.two_core().is_empty(),
            TwoCoreMethod::HookCount => {
                let h = self.hook_multisets();
                h.even.len() == h.odd.len()
            }
            TwoCoreMethod::BetaParity { m } => {
                assert!(
                    2 * m >= self.length(),
                    "beta parity needs padding 2m >= length(λ)"
                );
                let n = 2 * m;
                let evens = (1..=n)
                    .filter(|&i| (self.part(i) as usize + n - i) % 2 == 0)
                    .count();
                evens == m
            }
        }
    }

    /// `b(λ) = Σ_{(i,j)} (-1)^{h(i,j)} (λ_i - i)`, defined for every
    /// partition; nonnegativity is special to empty 2-cores.
    pub fn b_statistic(&self) -> i64 {
        let conj = self.conjugate();
        let mut acc = 0i64;
        for s in self.cells() {
            let h = self.hook_data_with_conj(s, &conj).hook;
            let w = self.part(s.row) as i64 - s.row as i64;
            acc += if h % 2 == 1 { -w } else { w };
        }
        acc
    }

    /// `b(λ)` via the staircase form: with `λ` padded to length `2n` and
    /// `δ = (2n-1, ..., 1, 0)`,
    ///
    /// `b(λ) = Σ_{(i,j) ∈ λ+δ} (-1)^{λ_i-i-j+1} (λ_i-i)
    ///        - Σ_{1≤i<j≤2n} (-1)^{λ_i-λ_j+j-i} (λ_i-i)`.
    pub fn b_via_delta(&self, n: usize) -> Result<i64> {
        if self.length() > n {
            return Err(Error::LengthExceedsBound { len: self.length(), bound: n });
        }
        let nn = 2 * n;
        let lam = |i: usize| self.part(i) as i64;
        let mut first = 0i64;
        for i in 1..=nn {
            let w = lam(i) - i as i64;
            let row_len = lam(i) + (nn - i) as i64;
            for j in 1..=row_len {
                let sign = if (lam(i) - i as i64 - j + 1).rem_euclid(2) == 1 { -1 } else { 1 };
                first += sign * w;
            }
        }
        let mut second = 0i64;
        for i in 1..=nn {
            for j in (i + 1)..=nn {
                let sign = if (lam(i) - lam(j) + j as i64 - i as i64).rem_euclid(2) == 1 {
                    -1
                } else {
                    1
                };
                second += sign * (lam(i) - i as i64);
            }
        }
        Ok(first - second)
    }

    /// `b(λ')` via pairwise sums, valid for empty 2-core:
    ///
    /// `b(λ') = |λ|/2 - n² - n + Σ_{1≤i<j≤2n} (-1)^{λ_i-λ_j+j-i} (λ_j-j)`.
    pub fn b_conj_via_delta(&self, n: usize) -> Result<i64> {
        if self.length() > n {
            return Err(Error::LengthExceedsBound { len: self.length(), bound: n });
        }
        if !self.has_empty_two_core(TwoCoreMethod::Abacus) {
            return Err(Error::NonEmptyTwoCore);
        }
        let nn = 2 * n;
        let lam = |i: usize| self.part(i) as i64;
        let mut pair_sum = 0i64;
        for i in 1..=nn {
            for j in (i + 1)..=nn {
                let sign = if (lam(i) - lam(j) + j as i64 - i as i64).rem_euclid(2) == 1 {
                    -1
                } else {
                    1
                };
                pair_sum += sign * (lam(j) - j as i64);
            }
        }
        let n = n as i64;
        Ok(self.size() as i64 / 2 - n * n - n + pair_sum)
    }

    /// Hook polynomial `Π_h (1 - q^h)` over the chosen parity class of
    /// hook lengths.
    pub fn hook_poly(&self, variant: ParityClass) -> LaurentPoly {
        let hooks = self.hook_multisets();
        let hs = match variant {
            ParityClass::All => hooks.all,
            ParityClass::Even => hooks.even,
            ParityClass::Odd => hooks.odd,
        };
        let mut acc = LaurentPoly::one();
        for h in hs {
            acc = acc.mul(&LaurentPoly::one_minus_q(h as i64));
        }
        acc
    }

    /// Content polynomial `Π_s (1 - q^{z_exp + content(s)})` over cells in
    /// the chosen parity class of `row + col`.  `z_exp` may be negative
    /// (e.g. `z = q^{-2m}`), so the result is a Laurent polynomial.
    pub fn content_poly(&self, z_exp: i64, variant: ParityClass) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for s in self.cells() {
            let even = (s.row + s.col) % 2 == 0;
            let keep = match variant {
                ParityClass::All => true,
                ParityClass::Even => even,
                ParityClass::Odd => !even,
            };
            if keep {
                let c = s.col as i64 - s.row as i64;
                acc = acc.mul(&LaurentPoly::one_minus_q(z_exp + c));
            }
        }
        acc
    }

    /// `Π(odd hooks) / Π(even hooks)` as an exact rational, the `q -> 1`
    /// limit of the hook polynomial ratio `H^o/H^e`.
    pub fn hook_ratio_rational(&self) -> Rational {
        let hooks = self.hook_multisets();
        let mut r = Rational::one();
        for h in hooks.odd {
            r *= Rational::from_integer(h.into());
        }
        for h in hooks.even {
            r /= Rational::from_integer(h.into());
        }
        r
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Convenience constructor for literals in tests and examples.
pub fn partition(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition literal")
}

/// All partitions with `|λ| <= max_size` subject to optional part/length
/// bounds, in graded order (size ascending), lexicographically descending
/// within each size.  The order is part of the report contract.
pub fn enumerate_partitions(
    max_size: u32,
    max_part: Option<u32>,
    max_length: Option<usize>,
) -> Vec<Partition> {
    let mut out = Vec::new();
    for size in 0..=max_size {
        gen_partitions_of(
            size,
            max_part.unwrap_or(size).min(size),
            max_length.unwrap_or(size as usize),
            &mut Vec::new(),
            &mut out,
        );
    }
    out
}

fn gen_partitions_of(
    remaining: u32,
    max_part: u32,
    max_length: usize,
    stack: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition { parts: stack.clone() });
        return;
    }
    if max_length == 0 || max_part == 0 {
        return;
    }
    let mut p = max_part.min(remaining);
    while p >= 1 {
        stack.push(p);
        gen_partitions_of(remaining - p, p, max_length - 1, stack, out);
        stack.pop();
        p -= 1;
    }
}

/// Partitions with empty 2-core, same bounds and order as
/// [`enumerate_partitions`].
pub fn empty_two_core_partitions(
    max_size: u32,
    max_part: Option<u32>,
    max_length: Option<usize>,
) -> Vec<Partition> {
    enumerate_partitions(max_size, max_part, max_length)
        .into_iter()
        .filter(|p| p.has_empty_two_core(TwoCoreMethod::Abacus))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Literal domino remover, the oracle for the abacus implementation:
    /// strips removable dominoes until none is left.
    fn two_core_by_domino_removal(p: &Partition) -> Partition {
        let mut parts = p.parts().to_vec();
        'outer: loop {
            let len = parts.len();
            // horizontal domino at the end of row i
            for i in 0..len {
                let below = if i + 1 < len { parts[i + 1] } else { 0 };
                if parts[i] >= 2 && parts[i] - 2 >= below {
                    parts[i] -= 2;
                    while parts.last() == Some(&0) {
                        parts.pop();
                    }
                    continue 'outer;
                }
            }
            // vertical domino at the end of rows i, i+1
            for i in 0..len.saturating_sub(1) {
                let below = if i + 2 < len { parts[i + 2] } else { 0 };
                if parts[i] == parts[i + 1] && parts[i] >= 1 && parts[i + 1] - 1 >= below {
                    parts[i] -= 1;
                    parts[i + 1] -= 1;
                    while parts.last() == Some(&0) {
                        parts.pop();
                    }
                    continue 'outer;
                }
            }
            break;
        }
        Partition::new(parts).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(partition(&[6, 4, 3, 1]).conjugate(), partition(&[4, 3, 3, 2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(partition(&[2, 2]).conjugate(), partition(&[2, 2]));
    }

    #[test]
    fn conjugate_is_involutive() {
        for p in enumerate_partitions(10, None, None) {
            assert_eq!(p.conjugate().conjugate(), p);
        }
    }

    #[test]
    fn hook_data_examples() {
        let p = partition(&[6, 4, 3, 1]);
        // two boxes right of (2,2), one below, hook 4
        let h = p.hook_data(Cell { row: 2, col: 2 }).unwrap();
        assert_eq!((h.arm, h.leg, h.hook), (2, 1, 4));

        let one = partition(&[1]);
        let h = one.hook_data(Cell { row: 1, col: 1 }).unwrap();
        assert_eq!((h.arm, h.leg, h.hook), (0, 0, 1));

        let sq = partition(&[2, 2]);
        let h = sq.hook_data(Cell { row: 1, col: 1 }).unwrap();
        assert_eq!(h.hook, 3);
        assert_eq!(h.content, 0);
        assert!(h.row_plus_col_even);

        assert!(p.hook_data(Cell { row: 2, col: 5 }).is_err());
    }

    #[test]
    fn hook_multisets_examples() {
        let h = partition(&[6, 4, 3, 1]).hook_multisets();
        assert_eq!(h.odd, vec![9, 7, 3, 1, 1, 1, 1]);
        assert_eq!(h.even, vec![6, 6, 4, 4, 4, 2, 2]);

        let h = partition(&[1, 1]).hook_multisets();
        assert_eq!(h.all, vec![2, 1]);
        assert_eq!(h.odd, vec![1]);
        assert_eq!(h.even, vec![2]);

        let h = Partition::empty().hook_multisets();
        assert!(h.all.is_empty() && h.even.is_empty() && h.odd.is_empty());
    }

    #[test]
    fn two_core_examples() {
        assert_eq!(partition(&[6, 4, 3, 1]).two_core(), Partition::empty());
        assert_eq!(partition(&[2, 1]).two_core(), partition(&[2, 1]));
        assert_eq!(partition(&[3, 1]).two_core(), Partition::empty());
        // (2,1,1) tiles by one horizontal + one vertical domino
        assert_eq!(partition(&[2, 1, 1]).two_core(), Partition::empty());
        assert_eq!(partition(&[1]).two_core(), partition(&[1]));
    }

    #[test]
    fn two_core_agrees_with_domino_removal() {
        for p in enumerate_partitions(12, None, None) {
            assert_eq!(p.two_core(), two_core_by_domino_removal(&p), "core of {p}");
        }
    }

    #[test]
    fn empty_two_core_methods_agree() {
        for p in enumerate_partitions(14, None, None) {
            let a = p.has_empty_two_core(TwoCoreMethod::Abacus);
            let h = p.has_empty_two_core(TwoCoreMethod::HookCount);
            assert_eq!(a, h, "{p}");
            for m in [(p.length() + 1) / 2, p.length(), p.length() + 3] {
                let m = m.max(1);
                let b = p.has_empty_two_core(TwoCoreMethod::BetaParity { m });
                assert_eq!(a, b, "{p} with m={m}");
            }
        }
    }

    #[test]
    fn empty_two_core_specific_cases() {
        assert!(partition(&[2, 2]).has_empty_two_core(TwoCoreMethod::HookCount));
        assert!(!partition(&[2, 1, 1, 1]).has_empty_two_core(TwoCoreMethod::Abacus));
        assert!(!partition(&[1]).has_empty_two_core(TwoCoreMethod::HookCount));
        // beta set of (2,1,1) for 2m=4 is {5,3,2,0}: two odd, two even
        assert!(partition(&[2, 1, 1]).has_empty_two_core(TwoCoreMethod::BetaParity { m: 2 }));
    }

    #[test]
    fn b_statistic_examples() {
        assert_eq!(partition(&[2, 1, 1, 1]).b_statistic(), 0);
        assert_eq!(partition(&[2, 2]).b_statistic(), 0);
        assert_eq!(partition(&[6, 4, 3, 1]).b_statistic(), 3);
        assert_eq!(partition(&[6, 4, 3, 1]).conjugate().b_statistic(), 2);
        assert_eq!(partition(&[1, 1]).b_statistic(), 1);
        assert_eq!(Partition::empty().b_statistic(), 0);
    }

    #[test]
    fn b_nonnegative_on_empty_core_zero_iff_even() {
        for p in empty_two_core_partitions(14, None, None) {
            let b = p.b_statistic();
            assert!(b >= 0, "b({p}) = {b}");
            assert_eq!(b == 0, p.is_even(), "b({p}) = {b}");
        }
    }

    #[test]
    fn b_via_delta_matches_direct() {
        for p in enumerate_partitions(12, None, None) {
            for n in p.length().max(1)..=(p.length() + 3).min(6) {
                assert_eq!(p.b_via_delta(n).unwrap(), p.b_statistic(), "{p} n={n}");
            }
        }
    }

    #[test]
    fn b_conj_via_delta_matches_conjugate_on_empty_cores() {
        for p in empty_two_core_partitions(12, None, None) {
            let expect = p.conjugate().b_statistic();
            for n in p.length().max(1)..=(p.length() + 3).min(6) {
                assert_eq!(p.b_conj_via_delta(n).unwrap(), expect, "{p} n={n}");
            }
        }
    }

    #[test]
    fn b_via_delta_examples() {
        assert_eq!(partition(&[1, 1]).b_via_delta(2).unwrap(), 1);
        assert_eq!(Partition::empty().b_via_delta(3).unwrap(), 0);
        assert_eq!(partition(&[6, 4, 3, 1]).b_via_delta(4).unwrap(), 3);
        assert_eq!(partition(&[6, 4, 3, 1]).b_conj_via_delta(4).unwrap(), 2);
        assert!(partition(&[1, 1]).b_via_delta(1).is_err());
        assert!(partition(&[2, 1]).b_conj_via_delta(2).is_err());
    }

    #[test]
    fn hook_poly_examples() {
        let p = partition(&[1, 1]);
        assert_eq!(p.hook_poly(ParityClass::Odd), LaurentPoly::one_minus_q(1));
        assert_eq!(p.hook_poly(ParityClass::Even), LaurentPoly::one_minus_q(2));
        assert_eq!(
            p.hook_poly(ParityClass::All),
            LaurentPoly::one_minus_q(1).mul(&LaurentPoly::one_minus_q(2))
        );
    }

    #[test]
    fn content_poly_examples() {
        // C_{(2)}(q^2) = (1-q^2)(1-q^3)
        let p = partition(&[2]);
        assert_eq!(
            p.content_poly(2, ParityClass::All),
            LaurentPoly::one_minus_q(2).mul(&LaurentPoly::one_minus_q(3))
        );
        // C^e_{(2,2)}(q^{-2}) = (1-q^{-2})^2, C^o = (1-q^{-1})(1-q^{-3})
        let p = partition(&[2, 2]);
        assert_eq!(
            p.content_poly(-2, ParityClass::Even),
            LaurentPoly::one_minus_q(-2).mul(&LaurentPoly::one_minus_q(-2))
        );
        assert_eq!(
            p.content_poly(-2, ParityClass::Odd),
            LaurentPoly::one_minus_q(-1).mul(&LaurentPoly::one_minus_q(-3))
        );
    }

    #[test]
    fn hook_polys_invariant_under_conjugation() {
        for p in enumerate_partitions(10, None, None) {
            let c = p.conjugate();
            assert_eq!(p.hook_poly(ParityClass::All), c.hook_poly(ParityClass::All));
            assert_eq!(p.hook_poly(ParityClass::Even), c.hook_poly(ParityClass::Even));
            assert_eq!(p.hook_poly(ParityClass::Odd), c.hook_poly(ParityClass::Odd));
        }
    }

    #[test]
    fn enumeration_order_and_bounds() {
        let all: Vec<String> = enumerate_partitions(2, None, None)
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(all, vec!["()", "(1)", "(2)", "(1,1)"]);

        let bounded: Vec<String> = enumerate_partitions(2, None, Some(1))
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(bounded, vec!["()", "(1)", "(2)"]);

        assert_eq!(enumerate_partitions(0, None, None), vec![Partition::empty()]);
    }

    #[test]
    fn empty_two_core_enumeration() {
        let got: Vec<String> = empty_two_core_partitions(4, None, None)
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(
            got,
            vec!["()", "(2)", "(1,1)", "(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"]
        );
    }

    #[test]
    fn parse_round_trips() {
        assert_eq!(Partition::parse("6,4,3,1").unwrap(), partition(&[6, 4, 3, 1]));
        assert_eq!(Partition::parse("").unwrap(), Partition::empty());
        assert!(Partition::parse("1,2").is_err());
        assert!(Partition::parse("x").is_err());
    }
}
