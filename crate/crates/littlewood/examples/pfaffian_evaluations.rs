//! Pfaffians over the rational-function field: the structured Pfaffian
//! formulas, their closed-form evaluations, and Chu's determinant.
//!
//! Run with: cargo run --example pfaffian_evaluations

use littlewood::exactalg::{LaurentPoly, RationalFunction};
use littlewood::partitions::{empty_two_core_partitions, partition};
use littlewood::pfaffian::{
    chu_determinant_check, closed_form_int1, closed_form_int2, pf_formula_p1, pf_formula_p2,
    SkewMatrix,
};

fn main() {
    // a generic 4x4 Pfaffian and its defining expansion
    let m = SkewMatrix::from_upper(4, |i, j| RationalFunction::q_power((i + j) as i64));
    let pf = m.pfaffian().unwrap();
    println!("4x4 Pfaffian = {pf}");
    println!("pf^2 == det: {}", pf.mul(&pf) == m.determinant());

    // the two structured formulas against their closed forms
    for lam in [partition(&[2]), partition(&[1, 1]), partition(&[2, 2])] {
        let p1 = pf_formula_p1(&lam, 1).unwrap();
        let i1 = closed_form_int1(&lam, 1).unwrap();
        println!("λ={lam}: P1 pfaffian = {p1}");
        println!("         closed form = {i1}  (equal: {})", p1 == i1);
    }

    // the full sweep the acceptance suite runs, in miniature
    let mut checked = 0;
    for n in 1..=2usize {
        for lam in empty_two_core_partitions(6, None, Some(2 * n)) {
            assert_eq!(pf_formula_p1(&lam, n).unwrap(), closed_form_int1(&lam, n).unwrap());
            assert_eq!(pf_formula_p2(&lam, n).unwrap(), closed_form_int2(&lam, n).unwrap());
            checked += 2;
        }
    }
    println!("{checked} Pfaffian evaluations match their closed forms (|λ| <= 6, n <= 2)");

    // Chu's generalisation of Cauchy's double alternant
    let x = [RationalFunction::q_power(1), RationalFunction::q_power(2)];
    let y = [
        RationalFunction::one(),
        RationalFunction::q_power(3),
    ];
    let b = RationalFunction::one();
    let c = RationalFunction::from_laurent(LaurentPoly::one_plus_q(1)).neg();
    println!(
        "Chu determinant identity at x=(q,q^2), y=(1,q^3), b=1, c=-(1+q): {}",
        chu_determinant_check(&x, &y, &b, &c).unwrap()
    );
}
