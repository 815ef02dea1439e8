//! The exact coefficient rings: Laurent polynomials, rational functions in
//! canonical form, truncated q-series and q-shifted factorials.
//!
//! Run with: cargo run --example qseries_arithmetic

use littlewood::exactalg::{rat_int, LaurentPoly, QSeries, RationalFunction};

fn main() {
    // Laurent polynomials are exact and allow negative exponents
    let p = LaurentPoly::one_minus_q(1).mul(&LaurentPoly::one_plus_q(1));
    println!("(1-q)(1+q) = {p}");
    println!("(1-q^-2) q^2 = {}", LaurentPoly::one_minus_q(-2).mul_q_power(2));

    // rational functions canonicalize: gcd removed, denominator monic with
    // nonzero constant term
    let r = RationalFunction::new(
        LaurentPoly::q().mul(&LaurentPoly::one_minus_q(1)),
        LaurentPoly::one_minus_q(3),
    );
    println!("q(1-q)/(1-q^3) canonicalizes to {r}");
    println!("(1-q^2)/(1-q) canonicalizes to {}", RationalFunction::new(
        LaurentPoly::one_minus_q(2),
        LaurentPoly::one_minus_q(1),
    ));

    // truncated series: 1/(1-q) to order 6
    let geo = QSeries::one().sub(&QSeries::q()).truncate(6).inverse().unwrap();
    println!("1/(1-q) = {geo}");

    // the Euler product (q;q)_inf and a base-q^2 factorial
    println!("(q;q)_inf   = {}", QSeries::pochhammer(&rat_int(1), 1, 1, 10));
    println!("(q^2;q^2)_inf = {}", QSeries::pochhammer(&rat_int(1), 2, 2, 10));
    println!("(-1;q)_inf  = {}", QSeries::pochhammer(&rat_int(-1), 0, 1, 6));

    // series expansion of a rational function
    let f = RationalFunction::new(LaurentPoly::one_plus_q(1), LaurentPoly::one_minus_q(2));
    println!("(1+q)/(1-q^2) = {}", f.to_qseries(8).unwrap());

    // exactness bookkeeping: polynomials stay exact, truncation is sticky
    let exact = LaurentPoly::one_minus_q(5).to_qseries(None).unwrap();
    println!("exact polynomial: {exact} (no O-term)");
    println!("after truncation: {}", exact.truncate(3));
}
