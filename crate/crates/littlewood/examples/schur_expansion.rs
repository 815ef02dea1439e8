//! Schur polynomials from semistandard tableaux and expansion of symmetric
//! polynomials into the Schur basis.
//!
//! Run with: cargo run --example schur_expansion

use littlewood::exactalg::{rat_int, Rational, XSeries};
use littlewood::partitions::partition;
use littlewood::schur::{schur, schur_by_bialternant, schur_expand};

fn main() {
    println!("s_(1)(x1,x2)   = {}", schur(&partition(&[1]), 2));
    println!("s_(2,1)(x1,x2) = {}", schur(&partition(&[2, 1]), 2));
    println!("s_(1,1,1)(x1,x2) = {} (too many rows)", schur(&partition(&[1, 1, 1]), 2));

    // the tableau generator agrees with the ratio of alternants
    let lam = partition(&[3, 1]);
    assert_eq!(*schur(&lam, 3), schur_by_bialternant(&lam, 3));
    println!("tableau sum for s_(3,1) matches det(x_i^(λ_j+n-j))/det(x_i^(n-j))");

    // expanding a symmetric polynomial: x1^2 + x2^2 = s_(2) - s_(1,1)
    let f: XSeries<Rational> = XSeries::monomial(2, vec![2, 0], rat_int(1))
        .add(&XSeries::monomial(2, vec![0, 2], rat_int(1)));
    let e = schur_expand(&f, 2).unwrap();
    println!("x1^2 + x2^2 expands as:");
    for (p, c) in &e.coeffs {
        println!("  {c} * s_{p}");
    }

    // round trip through a sparse combination
    let g = schur(&partition(&[2, 2]), 3)
        .mul_scalar(&rat_int(5))
        .add(&schur(&partition(&[1]), 3).mul_scalar(&rat_int(-3)));
    let ge = schur_expand(&g, 3).unwrap();
    println!("5 s_(2,2) - 3 s_(1) recovered: {:?}", ge.coeffs);
    assert_eq!(ge.reconstruct(), g);

    // asymmetric input is rejected
    let bad = XSeries::monomial(2, vec![2, 0], rat_int(1));
    println!("expanding x1^2 alone: {:?}", schur_expand(&bad, 2).err());
}
