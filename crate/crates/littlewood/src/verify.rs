//! End-to-end verification of the identity suites.
//!
//! Every identity is checked by building both sides through disjoint code
//! paths — sum sides from the partition statistics and Schur polynomials,
//! product sides from the `exactalg` product expanders, bounded sides from
//! the Koornwinder Gram–Schmidt — and comparing coefficient by coefficient
//! at the configured truncation orders.  A report never claims more than
//! equality to the stated `x`-degree `d` and `q`-order `D`.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::exactalg::products::{
    binomial_factor, half_power_product, kawanaka_product, square_ratio_littlewood_product,
};
use crate::exactalg::{LaurentPoly, QSeries, Rational, RationalFunction, Ring, XSeries};
use crate::koornwinder::{bounded_rhs, limit_stabilization, KoornCache};
use crate::partitions::{
    empty_two_core_partitions, enumerate_partitions, ParityClass, Partition, TwoCoreMethod,
};
use crate::pfaffian::{closed_form_int1, closed_form_int2, pf_formula_p1, pf_formula_p2};
use crate::schur::{schur_expand, SchurExpansion};
use crate::torus::{
    gustafson_norm, integral_i, normalization_constant_term, z_n_closed, DensitySpec, Family,
};
use crate::{Error, Result};

/// Identity ids accepted by the CLI and used in reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    L1,
    L2,
    Cor,
    B1,
    B2,
    Classical1,
    Classical2,
    Classical3,
    Kawanaka,
    P1Eval,
    P2Eval,
    Vanishing,
    Lemma21,
    Lemma22,
    Lemma23,
    ConjSym,
    MLimit,
    ZNorm,
    Gustafson,
    PropCoef,
}

impl IdentityId {
    pub const ALL: [IdentityId; 20] = [
        IdentityId::L1,
        IdentityId::L2,
        IdentityId::Cor,
        IdentityId::B1,
        IdentityId::B2,
        IdentityId::Classical1,
        IdentityId::Classical2,
        IdentityId::Classical3,
        IdentityId::Kawanaka,
        IdentityId::P1Eval,
        IdentityId::P2Eval,
        IdentityId::Vanishing,
        IdentityId::Lemma21,
        IdentityId::Lemma22,
        IdentityId::Lemma23,
        IdentityId::ConjSym,
        IdentityId::MLimit,
        IdentityId::ZNorm,
        IdentityId::Gustafson,
        IdentityId::PropCoef,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::L1 => "L1",
            IdentityId::L2 => "L2",
            IdentityId::Cor => "COR",
            IdentityId::B1 => "B1",
            IdentityId::B2 => "B2",
            IdentityId::Classical1 => "CLASSICAL_1",
            IdentityId::Classical2 => "CLASSICAL_2",
            IdentityId::Classical3 => "CLASSICAL_3",
            IdentityId::Kawanaka => "KAWANAKA",
            IdentityId::P1Eval => "P1_EVAL",
            IdentityId::P2Eval => "P2_EVAL",
            IdentityId::Vanishing => "VANISHING",
            IdentityId::Lemma21 => "LEMMA_21",
            IdentityId::Lemma22 => "LEMMA_22",
            IdentityId::Lemma23 => "LEMMA_23",
            IdentityId::ConjSym => "CONJ_SYM",
            IdentityId::MLimit => "MLIMIT",
            IdentityId::ZNorm => "ZNORM",
            IdentityId::Gustafson => "GUSTAFSON",
            IdentityId::PropCoef => "PROP_COEF",
        }
    }

    pub fn parse(s: &str) -> Result<IdentityId> {
        IdentityId::ALL
            .iter()
            .copied()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

impl std::fmt::Display for IdentityId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Global budget caps, spec defaults.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct Budgets {
    pub vars: usize,
    pub m: u32,
    pub x_degree: i64,
    pub q_order: u32,
    pub max_size: u32,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets { vars: 4, m: 2, x_degree: 12, q_order: 20, max_size: 12 }
    }
}

/// Concrete parameters of one verification instance.
#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct InstanceParams {
    pub n: usize,
    pub m: u32,
    pub x_degree: i64,
    pub q_order: u32,
    pub max_size: u32,
}

#[derive(Clone, Copy, Debug)]
pub struct Instance {
    pub id: IdentityId,
    pub params: InstanceParams,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// First failing comparison of an instance.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Mismatch {
    pub location: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InstanceReport {
    pub id: String,
    pub params: InstanceParams,
    pub status: Status,
    pub cases_checked: usize,
    pub mismatch: Option<Mismatch>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub version: u32,
    pub budgets: Budgets,
    pub instances: Vec<InstanceReport>,
    pub summary: Summary,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str("| identity | n | m | x-degree | q-order | max |λ| | status | cases | first mismatch |\n");
        out.push_str("|---|---|---|---|---|---|---|---|---|\n");
        for r in &self.instances {
            let mm = r
                .mismatch
                .as_ref()
                .map(|m| m.location.clone())
                .unwrap_or_default();
            let status = match r.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
            };
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} | {} | {} | {} | {} |",
                r.id,
                r.params.n,
                r.params.m,
                r.params.x_degree,
                r.params.q_order,
                r.params.max_size,
                status,
                r.cases_checked,
                mm
            );
        }
        let _ = writeln!(
            out,
            "\n{} of {} instances passed.",
            self.summary.passed, self.summary.total
        );
        out
    }
}

// ---------------------------------------------------------------------------
// Sum-side coefficients
// ---------------------------------------------------------------------------

fn ratfun(num: LaurentPoly, den: LaurentPoly) -> RationalFunction {
    RationalFunction::new(num, den)
}

/// `q^{b(λ)} H^o_λ / H^e_λ` as a series at order `d`.
pub fn l1_coefficient(p: &Partition, d: u32) -> QSeries {
    let num = p.hook_poly(ParityClass::Odd).mul_q_power(p.b_statistic());
    ratfun(num, p.hook_poly(ParityClass::Even))
        .to_qseries(d)
        .expect("unit denominator")
}

/// `q^{b(λ')} H^o_λ / H^e_λ` as a series at order `d`.
pub fn l2_coefficient(p: &Partition, d: u32) -> QSeries {
    let b = p.conjugate().b_statistic();
    let num = p.hook_poly(ParityClass::Odd).mul_q_power(b);
    ratfun(num, p.hook_poly(ParityClass::Even))
        .to_qseries(d)
        .expect("unit denominator")
}

/// `Π_h (1+q^h)/(1-q^h)` as a series at order `d`.
pub fn kawanaka_coefficient(p: &Partition, d: u32) -> QSeries {
    let hooks = p.hook_multisets();
    let mut num = LaurentPoly::one();
    let mut den = LaurentPoly::one();
    for h in hooks.all {
        num = num.mul(&LaurentPoly::one_plus_q(h as i64));
        den = den.mul(&LaurentPoly::one_minus_q(h as i64));
    }
    ratfun(num, den).to_qseries(d).expect("unit denominator")
}

/// Bounded sum-side coefficient
/// `q^{b(λ')} C^e_λ(q^{-2m}) H^o_λ / (C^o_λ(q^{-2m}) H^e_λ)`.
pub fn bounded_b1_coefficient(p: &Partition, m: u32, d: u32) -> QSeries {
    let z = -2 * m as i64;
    let num = p
        .content_poly(z, ParityClass::Even)
        .mul(&p.hook_poly(ParityClass::Odd))
        .mul_q_power(p.conjugate().b_statistic());
    let den = p
        .content_poly(z, ParityClass::Odd)
        .mul(&p.hook_poly(ParityClass::Even));
    ratfun(num, den)
        .to_qseries(d)
        .expect("bounded coefficient is a power series")
}

/// Bounded sum-side coefficient
/// `(q^{2b(λ')-b(λ)} + q^{m+b(λ)}) C^e_λ(q^{-2m}) H^o_λ
///   / ((1+q^m) C^o_λ(q^{-2m}) H^e_λ)`.
pub fn bounded_b2_coefficient(p: &Partition, m: u32, d: u32) -> QSeries {
    let z = -2 * m as i64;
    let b = p.b_statistic();
    let bc = p.conjugate().b_statistic();
    let heads = LaurentPoly::monomial(Rational::from_int(1), 2 * bc - b)
        .add(&LaurentPoly::monomial(Rational::from_int(1), m as i64 + b));
    let num = heads
        .mul(&p.content_poly(z, ParityClass::Even))
        .mul(&p.hook_poly(ParityClass::Odd));
    let den = LaurentPoly::one_plus_q(m as i64)
        .mul(&p.content_poly(z, ParityClass::Odd))
        .mul(&p.hook_poly(ParityClass::Even));
    ratfun(num, den)
        .to_qseries(d)
        .expect("bounded coefficient is a power series")
}

/// Sum side of an identity as a Schur-coefficient map over the swept
/// partitions (`|λ| <= max_size`, `length <= n`, plus identity filters).
pub fn lhs_sum(
    id: IdentityId,
    n: usize,
    max_size: u32,
    q_order: u32,
    m: u32,
) -> SchurExpansion<QSeries> {
    let mut coeffs = std::collections::BTreeMap::new();
    match id {
        IdentityId::L1 | IdentityId::L2 => {
            for p in empty_two_core_partitions(max_size, None, Some(n)) {
                let c = if id == IdentityId::L1 {
                    l1_coefficient(&p, q_order)
                } else {
                    l2_coefficient(&p, q_order)
                };
                coeffs.insert(p, c);
            }
        }
        IdentityId::Kawanaka => {
            for p in enumerate_partitions(max_size, None, Some(n)) {
                coeffs.insert(p.clone(), kawanaka_coefficient(&p, q_order));
            }
        }
        IdentityId::B1 | IdentityId::B2 => {
            for p in enumerate_partitions(2 * m * n as u32, Some(2 * m), Some(n)) {
                if !p.has_empty_two_core(TwoCoreMethod::Abacus) {
                    continue;
                }
                let c = if id == IdentityId::B1 {
                    bounded_b1_coefficient(&p, m, q_order)
                } else {
                    bounded_b2_coefficient(&p, m, q_order)
                };
                coeffs.insert(p, c);
            }
        }
        other => panic!("lhs_sum: {other} has no q-series sum side"),
    }
    SchurExpansion { n, coeffs }
}

/// Product side of a q-series identity, expanded to (`d`, `D`).
pub fn rhs_product(id: IdentityId, n: usize, d: i64, q_order: u32) -> XSeries<QSeries> {
    match id {
        IdentityId::L1 => square_ratio_littlewood_product(1, 0, n, d, q_order),
        IdentityId::L2 => square_ratio_littlewood_product(2, 1, n, d, q_order),
        IdentityId::Kawanaka => kawanaka_product(n, d, q_order),
        other => panic!("rhs_product: {other} has no q-series product side"),
    }
}

// ---------------------------------------------------------------------------
// Per-identity verifiers
// ---------------------------------------------------------------------------

struct CaseLog {
    cases: usize,
    mismatch: Option<Mismatch>,
}

impl CaseLog {
    fn new() -> Self {
        CaseLog { cases: 0, mismatch: None }
    }

    fn done(&self) -> bool {
        self.mismatch.is_some()
    }

    fn check_series(&mut self, location: impl Fn() -> String, expected: &QSeries, actual: &QSeries, d: u32) {
        if self.done() {
            return;
        }
        self.cases += 1;
        if !expected.truncate(d).eq_to_order(&actual.truncate(d), d) {
            self.mismatch = Some(Mismatch {
                location: location(),
                expected: expected.truncate(d).to_string(),
                actual: actual.truncate(d).to_string(),
            });
        }
    }

    fn check_rational(
        &mut self,
        location: impl Fn() -> String,
        expected: &Rational,
        actual: &Rational,
    ) {
        if self.done() {
            return;
        }
        self.cases += 1;
        if expected != actual {
            self.mismatch = Some(Mismatch {
                location: location(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    fn check_ratfun(
        &mut self,
        location: impl Fn() -> String,
        expected: &RationalFunction,
        actual: &RationalFunction,
    ) {
        if self.done() {
            return;
        }
        self.cases += 1;
        if expected != actual {
            self.mismatch = Some(Mismatch {
                location: location(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    fn check_bool(&mut self, location: impl Fn() -> String, ok: bool, note: &str) {
        if self.done() {
            return;
        }
        self.cases += 1;
        if !ok {
            self.mismatch = Some(Mismatch {
                location: location(),
                expected: "true".into(),
                actual: format!("false ({note})"),
            });
        }
    }
}

fn compare_expansions(
    log: &mut CaseLog,
    label: &str,
    sweep: &SchurExpansion<QSeries>,
    expansion: &SchurExpansion<QSeries>,
    cap: u32,
    d: u32,
) {
    let keys: BTreeSet<Partition> = sweep
        .coeffs
        .keys()
        .cloned()
        .chain(expansion.coeffs.keys().cloned())
        .filter(|p| p.size() <= cap)
        .collect();
    for p in keys {
        let expected = sweep.coefficient(&p);
        let actual = expansion.coefficient(&p);
        log.check_series(|| format!("{label} coefficient of s_{p}"), &expected, &actual, d);
    }
}

fn verify_schur_product_identity(id: IdentityId, p: &InstanceParams) -> CaseLog {
    let mut log = CaseLog::new();
    let cap = p.max_size.min(p.x_degree as u32);
    let sweep = lhs_sum(id, p.n, cap, p.q_order, p.m);
    let product = rhs_product(id, p.n, p.x_degree, p.q_order);
    match schur_expand(&product, p.n) {
        Ok(expansion) => {
            compare_expansions(&mut log, id.name(), &sweep, &expansion, cap, p.q_order)
        }
        Err(e) => {
            log.cases += 1;
            log.mismatch = Some(Mismatch {
                location: format!("{id} product expansion"),
                expected: "schur expansion".into(),
                actual: format!("error: {e}"),
            });
        }
    }
    log
}

fn verify_classical(id: IdentityId, p: &InstanceParams) -> CaseLog {
    let mut log = CaseLog::new();
    let d = p.x_degree;
    let n = p.n;
    let one: XSeries<Rational> = XSeries::one(n).with_degree_bound(d);
    let mut product = crate::exactalg::products::cross_pair_product::<Rational>(n, d);
    match id {
        IdentityId::Classical1 => {
            for i in 0..n {
                let mut e = vec![0; n];
                e[i] = 1;
                product = product.mul(&binomial_factor(n, Rational::from_int(1), &e, -1, Some(d)));
            }
        }
        IdentityId::Classical2 => {
            for i in 0..n {
                let mut e = vec![0; n];
                e[i] = 2;
                product = product.mul(&binomial_factor(n, Rational::from_int(1), &e, -1, Some(d)));
            }
        }
        IdentityId::Classical3 => {}
        _ => unreachable!(),
    }
    let product = product.mul(&one);
    let expansion = match schur_expand(&product, n) {
        Ok(e) => e,
        Err(e) => {
            log.cases += 1;
            log.mismatch = Some(Mismatch {
                location: format!("{id} product expansion"),
                expected: "schur expansion".into(),
                actual: format!("error: {e}"),
            });
            return log;
        }
    };
    let cap = p.max_size.min(d as u32);
    for lam in enumerate_partitions(cap, None, Some(n)) {
        let keep = match id {
            IdentityId::Classical1 => true,
            IdentityId::Classical2 => lam.is_even(),
            IdentityId::Classical3 => lam.conjugate_is_even(),
            _ => unreachable!(),
        };
        let expected = if keep { Rational::from_int(1) } else { Rational::from_int(0) };
        let actual = expansion.coefficient(&lam);
        log.check_rational(|| format!("{id} coefficient of s_{lam}"), &expected, &actual);
    }
    log
}

fn verify_corollary(p: &InstanceParams) -> CaseLog {
    let mut log = CaseLog::new();
    let d = p.x_degree;
    let n = p.n;
    let product = half_power_product(n, d);
    let expansion = match schur_expand(&product, n) {
        Ok(e) => e,
        Err(e) => {
            log.cases += 1;
            log.mismatch = Some(Mismatch {
                location: "COR product expansion".into(),
                expected: "schur expansion".into(),
                actual: format!("error: {e}"),
            });
            return log;
        }
    };
    let cap = p.max_size.min(d as u32);
    for lam in enumerate_partitions(cap, None, Some(n)) {
        let expected = if lam.has_empty_two_core(TwoCoreMethod::Abacus) {
            lam.hook_ratio_rational()
        } else {
            Rational::from_int(0)
        };
        let actual = expansion.coefficient(&lam);
        log.check_rational(|| format!("COR coefficient of s_{lam}"), &expected, &actual);
    }
    log
}

fn verify_bounded(id: IdentityId, p: &InstanceParams, cache: &KoornCache) -> CaseLog {
    let mut log = CaseLog::new();
    let family = if id == IdentityId::B1 { Family::KHalfQuarters } else { Family::K1m1qmq };
    for n in 1..=p.n {
        for m in 0..=p.m {
            let sweep = lhs_sum(id, n, 0, p.q_order, m);
            let rhs = match bounded_rhs(m, n, family, p.q_order, cache) {
                Ok(r) => r,
                Err(e) => {
                    log.cases += 1;
                    log.mismatch = Some(Mismatch {
                        location: format!("{id} bounded side m={m} n={n}"),
                        expected: "Schur expansion".into(),
                        actual: format!("error: {e}"),
                    });
                    return log;
                }
            };
            compare_expansions(
                &mut log,
                &format!("{id}[m={m},n={n}]"),
                &sweep,
                &rhs,
                2 * m * n as u32,
                p.q_order,
            );
            if log.done() {
                return log;
            }
        }
    }
    log
}

fn verify_pf_eval(id: IdentityId, p: &InstanceParams) -> CaseLog {
    let mut log = CaseLog::new();
    for n in 1..=p.n {
        for lam in empty_two_core_partitions(p.max_size, None, Some(2 * n)) {
            let (formula, closed) = if id == IdentityId::P1Eval {
                (pf_formula_p1(&lam, n), closed_form_int1(&lam, n))
            } else {
                (pf_formula_p2(&lam, n), closed_form_int2(&lam, n))
            };
            let formula = formula.expect("length checked by sweep");
            let closed = closed.expect("core checked by sweep");
            log.check_ratfun(|| format!("{id} at λ={lam}, n={n}"), &closed, &formula);
            if log.done() {
                return log;
            }
        }
    }
    log
}

fn verify_vanishing(p: &InstanceParams) -> CaseLog {
    let mut log = CaseLog::new();
    let d = p.q_order;
    for n in 1..=p.n {
        for family in [Family::Iqq, Family::I1q2] {
            let spec = DensitySpec::new(family, n, d);
            for lam in enumerate_partitions(p.max_size, None, Some(2 * n)) {
                let value = match integral_i(&lam, spec) {
                    Ok(r) => r.value,
                    Err(e) => {
                        log.cases += 1;
                        log.mismatch = Some(Mismatch {
                            location: format!("integral at λ={lam}, n={n}, {family}"),
                            expected: "series".into(),
                            actual: format!("error: {e}"),
                        });
                        return log;
                    }
                };
                let expected = if lam.has_empty_two_core(TwoCoreMethod::Abacus) {
                    let closed = if family == Family::Iqq {
                        closed_form_int1(&lam, n)
                    } else {
                        closed_form_int2(&lam, n)
                    };
                    closed
                        .expect("empty core")
                        .to_qseries(d)
                        .expect("closed form is a power series")
                } else {
                    QSeries::zero().truncate(d)
                };
                log.check_series(
                    || format!("integral at λ={lam}, n={n}, {family}"),
                    &expected,
                    &value,
                    d,
                );
                if log.done() {
                    return log;
                }
            }
        }
    }
    log
}

fn verify_lemma21(p: &InstanceParams) -> CaseLog {
    let mut log = CaseLog::new();
    for lam in enumerate_partitions(p.max_size, None, None) {
        let a = lam.has_empty_two_core(TwoCoreMethod::Abacus);
        let h = lam.has_empty_two_core(TwoCoreMethod::HookCount);
        let m = (lam.length() + 1) / 2 + 1;
        let b = lam.has_empty_two_core(TwoCoreMethod::BetaParity { m });
        log.check_bool(
            || format!("2-core methods at λ={lam}"),
            a == h && h == b,
            &format!("abacus={a} hooks={h} beta={b}"),
        );
        if log.done() {
            return log;
        }
    }
    log
}

fn verify_lemma22(p: &InstanceParams) -> CaseLog {
    let mut log = CaseLog::new();
    for lam in empty_two_core_partitions(p.max_size, None, None) {
        let b = lam.b_statistic();
        log.check_bool(
            || format!("b(λ) sign/vanishing at λ={lam}"),
            b >= 0 && ((b == 0) == lam.is_even()),
            &format!("b={b}, even={}", lam.is_even()),
        );
        if log.done() {
            return log;
        }
    }
    log
}

fn verify_lemma23(p: &InstanceParams) -> CaseLog {
    let mut log = CaseLog::new();
    for lam in enumerate_partitions(p.max_size, None, None) {
        for n in lam.length().max(1)..=p.n.max(lam.length()) {
            let direct = lam.b_statistic();
            let via = lam.b_via_delta(n).expect("length <= n by sweep");
            log.check_bool(
                || format!("b via λ+δ at λ={lam}, n={n}"),
                via == direct,
                &format!("direct={direct} staircase={via}"),
            );
            if lam.has_empty_two_core(TwoCoreMethod::Abacus) {
                let direct = lam.conjugate().b_statistic();
                let via = lam.b_conj_via_delta(n).expect("empty core by branch");
                log.check_bool(
                    || format!("b' via pair sums at λ={lam}, n={n}"),
                    via == direct,
                    &format!("direct={direct} pairsum={via}"),
                );
            }
            if log.done() {
                return log;
            }
        }
    }
    log
}

fn verify_conj_sym(p: &InstanceParams) -> CaseLog {
    let mut log = CaseLog::new();
    for lam in empty_two_core_partitions(p.max_size, None, None) {
        let conj = lam.conjugate();
        for m in 1..=p.m {
            let z = 2 * m as i64;
            let lhs = ratfun(
                conj.content_poly(z, ParityClass::Even)
                    .mul(&conj.hook_poly(ParityClass::Odd))
                    .mul_q_power(lam.b_statistic()),
                conj.content_poly(z, ParityClass::Odd)
                    .mul(&conj.hook_poly(ParityClass::Even)),
            );
            let rhs = ratfun(
                lam.content_poly(-z, ParityClass::Even)
                    .mul(&lam.hook_poly(ParityClass::Odd))
                    .mul_q_power(conj.b_statistic()),
                lam.content_poly(-z, ParityClass::Odd)
                    .mul(&lam.hook_poly(ParityClass::Even)),
            );
            log.check_ratfun(|| format!("conjugation identity at λ={lam}, m={m}"), &lhs, &rhs);
            if log.done() {
                return log;
            }
        }
    }
    log
}

fn verify_mlimit(p: &InstanceParams, cache: &KoornCache) -> CaseLog {
    let mut log = CaseLog::new();
    for n in 1..=p.n {
        for family in [Family::KHalfQuarters, Family::K1m1qmq] {
            match limit_stabilization(n, family, p.x_degree, p.q_order, cache) {
                Ok(r) => {
                    // thresholds: 2m >= D + λ_1 for the (q,q) type;
                    // m >= D + λ_1/2 for the (1,q^2) type, whose prefactor
                    // deviation q^{m+b} is shifted down by q^{b-b'}
                    let bound = match family.integral_twin() {
                        Family::Iqq => (p.q_order as i64 + p.x_degree) / 2 + 1,
                        _ => p.q_order as i64 + p.x_degree / 2 + 2,
                    };
                    log.check_bool(
                        || format!("m-limit stabilization, n={n}, {family}"),
                        (r.stabilized_at as i64) <= bound,
                        &format!("stabilized at m={} > bound {bound}", r.stabilized_at),
                    );
                }
                Err(e) => {
                    log.cases += 1;
                    log.mismatch = Some(Mismatch {
                        location: format!("m-limit stabilization, n={n}, {family}"),
                        expected: "stabilized series equal to the product side".into(),
                        actual: format!("error: {e}"),
                    });
                }
            }
            if log.done() {
                return log;
            }
        }
    }
    log
}

fn verify_znorm(p: &InstanceParams) -> CaseLog {
    let mut log = CaseLog::new();
    for n in 1..=p.n {
        for family in [Family::Iqq, Family::I1q2] {
            let direct = normalization_constant_term(DensitySpec::new(family, n, p.q_order));
            let closed = z_n_closed(family, n, p.q_order).expect("supported family");
            log.check_series(
                || format!("Z_{n} closed form, {family}"),
                &closed,
                &direct,
                p.q_order,
            );
            if log.done() {
                return log;
            }
        }
    }
    log
}

fn verify_gustafson(p: &InstanceParams) -> CaseLog {
    let mut log = CaseLog::new();
    for n in 1..=p.n {
        for family in [Family::KHalfQuarters, Family::K1m1qmq] {
            let direct = normalization_constant_term(DensitySpec::new(family, n, p.q_order));
            let closed = gustafson_norm(family, n, p.q_order).expect("supported family");
            log.check_series(
                || format!("Gustafson norm n={n}, {family}"),
                &closed,
                &direct,
                p.q_order,
            );
            if log.done() {
                return log;
            }
        }
    }
    log
}

fn verify_prop_coef(p: &InstanceParams, cache: &KoornCache) -> CaseLog {
    let mut log = CaseLog::new();
    for n in 1..=p.n {
        for m in 0..=p.m {
            for family in [Family::KHalfQuarters, Family::K1m1qmq] {
                let rhs = match bounded_rhs(m, n, family, p.q_order, cache) {
                    Ok(r) => r,
                    Err(e) => {
                        log.cases += 1;
                        log.mismatch = Some(Mismatch {
                            location: format!("bounded side m={m} n={n} {family}"),
                            expected: "Schur expansion".into(),
                            actual: format!("error: {e}"),
                        });
                        return log;
                    }
                };
                let spec = DensitySpec::new(family.integral_twin(), m as usize, p.q_order);
                for lam in enumerate_partitions(2 * m * n as u32, Some(2 * m), Some(n)) {
                    let conj = lam.conjugate();
                    let integral = match integral_i(&conj, spec) {
                        Ok(r) => r.value,
                        Err(e) => {
                            log.cases += 1;
                            log.mismatch = Some(Mismatch {
                                location: format!("integral at λ'={conj}, m={m}"),
                                expected: "series".into(),
                                actual: format!("error: {e}"),
                            });
                            return log;
                        }
                    };
                    let expected = if lam.size() % 2 == 0 { integral } else { integral.neg() };
                    let actual = rhs.coefficient(&lam);
                    log.check_series(
                        || format!("coefficient transfer at λ={lam}, m={m}, n={n}, {family}"),
                        &expected,
                        &actual,
                        p.q_order,
                    );
                    if log.done() {
                        return log;
                    }
                }
            }
        }
    }
    log
}

// ---------------------------------------------------------------------------
// Suite driver
// ---------------------------------------------------------------------------

/// Verify a single instance.
pub fn verify_instance(inst: &Instance, cache: &KoornCache, timings: bool) -> InstanceReport {
    let start = Instant::now();
    let p = &inst.params;
    let log = match inst.id {
        IdentityId::L1 | IdentityId::L2 | IdentityId::Kawanaka => {
            verify_schur_product_identity(inst.id, p)
        }
        IdentityId::Cor => verify_corollary(p),
        IdentityId::Classical1 | IdentityId::Classical2 | IdentityId::Classical3 => {
            verify_classical(inst.id, p)
        }
        IdentityId::B1 | IdentityId::B2 => verify_bounded(inst.id, p, cache),
        IdentityId::P1Eval | IdentityId::P2Eval => verify_pf_eval(inst.id, p),
        IdentityId::Vanishing => verify_vanishing(p),
        IdentityId::Lemma21 => verify_lemma21(p),
        IdentityId::Lemma22 => verify_lemma22(p),
        IdentityId::Lemma23 => verify_lemma23(p),
        IdentityId::ConjSym => verify_conj_sym(p),
        IdentityId::MLimit => verify_mlimit(p, cache),
        IdentityId::ZNorm => verify_znorm(p),
        IdentityId::Gustafson => verify_gustafson(p),
        IdentityId::PropCoef => verify_prop_coef(p, cache),
    };
    InstanceReport {
        id: inst.id.name().to_string(),
        params: *p,
        status: if log.mismatch.is_none() { Status::Pass } else { Status::Fail },
        cases_checked: log.cases,
        mismatch: log.mismatch,
        timing_ms: timings.then(|| start.elapsed().as_millis()),
    }
}

/// Default per-identity instances under the given budgets.  Cost centers
/// (densities, Gram systems) are clamped to the ranges the identities are
/// stated for; everything else follows the budgets directly.
pub fn default_suite(b: &Budgets) -> Vec<Instance> {
    let base = InstanceParams {
        n: b.vars,
        m: b.m,
        x_degree: b.x_degree,
        q_order: b.q_order,
        max_size: b.max_size,
    };
    IdentityId::ALL
        .iter()
        .map(|&id| Instance { id, params: instance_params(id, base) })
        .collect()
}

/// Clamp the shared budget to an identity-appropriate instance.
pub fn instance_params(id: IdentityId, base: InstanceParams) -> InstanceParams {
    let mut p = base;
    match id {
        IdentityId::L1 | IdentityId::L2 | IdentityId::Kawanaka | IdentityId::Cor => {}
        IdentityId::Classical1 | IdentityId::Classical2 | IdentityId::Classical3 => {
            p.x_degree = p.x_degree.min(8);
        }
        IdentityId::B1 | IdentityId::B2 | IdentityId::PropCoef => {
            p.n = p.n.min(2);
            p.m = p.m.min(2);
            p.q_order = p.q_order.min(12);
        }
        IdentityId::P1Eval | IdentityId::P2Eval => {
            p.n = p.n.min(3);
            p.max_size = p.max_size.min(10);
        }
        IdentityId::Vanishing => {
            p.n = p.n.min(2);
            p.max_size = p.max_size.min(8);
            p.q_order = p.q_order.min(12);
        }
        IdentityId::Lemma21 | IdentityId::Lemma22 => {}
        IdentityId::Lemma23 => {
            p.n = p.n.min(6);
        }
        IdentityId::ConjSym => {
            p.max_size = p.max_size.min(10);
            p.m = p.m.max(5).min(5);
        }
        IdentityId::MLimit => {
            p.n = p.n.min(2);
            p.x_degree = p.x_degree.min(6);
            p.q_order = p.q_order.min(10);
        }
        IdentityId::ZNorm | IdentityId::Gustafson => {
            p.n = p.n.min(2);
            p.q_order = p.q_order.min(12);
        }
    }
    p
}

/// Run instances (in parallel) and aggregate the report in input order.
pub fn run_suite(instances: &[Instance], cache: &KoornCache, timings: bool) -> Report {
    let reports: Vec<InstanceReport> = instances
        .par_iter()
        .map(|inst| verify_instance(inst, cache, timings))
        .collect();
    let passed = reports.iter().filter(|r| r.status == Status::Pass).count();
    Report {
        version: 1,
        budgets: Budgets {
            vars: 0,
            m: 0,
            x_degree: 0,
            q_order: 0,
            max_size: 0,
        },
        instances: reports,
        summary: Summary {
            total: instances.len(),
            passed,
            failed: instances.len() - passed,
        },
    }
}

/// Run instances with the budget block echoed into the report.
pub fn run_suite_with_budgets(
    instances: &[Instance],
    budgets: &Budgets,
    cache: &KoornCache,
    timings: bool,
) -> Report {
    let mut r = run_suite(instances, cache, timings);
    r.budgets = *budgets;
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partition;

    fn params(n: usize, m: u32, d: i64, q: u32, max: u32) -> InstanceParams {
        InstanceParams { n, m, x_degree: d, q_order: q, max_size: max }
    }

    #[test]
    fn identity_ids_round_trip() {
        for id in IdentityId::ALL {
            assert_eq!(IdentityId::parse(id.name()).unwrap(), id);
        }
        assert!(IdentityId::parse("NOPE").is_err());
    }

    #[test]
    fn l1_small_instance_passes() {
        let cache = KoornCache::in_memory();
        let inst = Instance { id: IdentityId::L1, params: params(2, 2, 4, 12, 4) };
        let r = verify_instance(&inst, &cache, false);
        assert_eq!(r.status, Status::Pass, "{:?}", r.mismatch);
        assert!(r.cases_checked >= 4);
    }

    #[test]
    fn l1_coefficients_worked_examples() {
        // coefficient of s_(2) is 1/(1+q), of s_(1,1) is q/(1+q)
        let d = 10u32;
        let c2 = l1_coefficient(&partition(&[2]), d);
        let expect = LaurentPoly::one()
            .to_qseries(Some(d))
            .unwrap()
            .div(&LaurentPoly::one_plus_q(1).to_qseries(Some(d)).unwrap())
            .unwrap();
        assert!(c2.eq_to_order(&expect, d));
        let c11 = l1_coefficient(&partition(&[1, 1]), d);
        assert!(c11.eq_to_order(&expect.shift(1).truncate(d), d));
    }

    #[test]
    fn kawanaka_small_instance_passes() {
        let cache = KoornCache::in_memory();
        let inst = Instance { id: IdentityId::Kawanaka, params: params(1, 2, 3, 6, 3) };
        let r = verify_instance(&inst, &cache, false);
        assert_eq!(r.status, Status::Pass, "{:?}", r.mismatch);
    }

    #[test]
    fn corollary_small_instance_passes() {
        let cache = KoornCache::in_memory();
        let inst = Instance { id: IdentityId::Cor, params: params(2, 2, 6, 0, 6) };
        let r = verify_instance(&inst, &cache, false);
        assert_eq!(r.status, Status::Pass, "{:?}", r.mismatch);
    }

    #[test]
    fn bounded_b1_small_instance_passes() {
        let cache = KoornCache::in_memory();
        let inst = Instance { id: IdentityId::B1, params: params(1, 1, 4, 8, 4) };
        let r = verify_instance(&inst, &cache, false);
        assert_eq!(r.status, Status::Pass, "{:?}", r.mismatch);
    }

    #[test]
    fn report_serialization_is_deterministic() {
        let cache = KoornCache::in_memory();
        let instances = vec![
            Instance { id: IdentityId::Lemma21, params: params(2, 2, 4, 6, 8) },
            Instance { id: IdentityId::Lemma22, params: params(2, 2, 4, 6, 8) },
        ];
        let budgets = Budgets::default();
        let a = run_suite_with_budgets(&instances, &budgets, &cache, false).to_json();
        let b = run_suite_with_budgets(&instances, &budgets, &cache, false).to_json();
        assert_eq!(a, b);
        assert!(a.contains("\"status\": \"pass\""));
    }

    #[test]
    fn markdown_contains_one_row_per_instance() {
        let cache = KoornCache::in_memory();
        let instances = vec![Instance {
            id: IdentityId::Lemma22,
            params: params(1, 1, 2, 4, 6),
        }];
        let r = run_suite_with_budgets(&instances, &Budgets::default(), &cache, false);
        let md = r.to_markdown();
        assert!(md.contains("| LEMMA_22 |"));
        assert!(md.contains("1 of 1 instances passed."));
    }

    #[test]
    fn default_suite_covers_every_identity() {
        let suite = default_suite(&Budgets::default());
        assert_eq!(suite.len(), IdentityId::ALL.len());
        assert!(suite.len() >= 15);
    }

    #[test]
    fn q0_degeneration_of_sum_coefficients() {
        // at q=0 the L1 coefficient indicates even rows, L2 even columns
        for p in empty_two_core_partitions(10, None, None) {
            let c1 = l1_coefficient(&p, 4).eval_q0();
            assert_eq!(c1 == Rational::from_int(1), p.is_even(), "L1 at {p}");
            assert!(c1 == Rational::from_int(0) || c1 == Rational::from_int(1));
            let c2 = l2_coefficient(&p, 4).eval_q0();
            assert_eq!(c2 == Rational::from_int(1), p.conjugate_is_even(), "L2 at {p}");
        }
    }
}
