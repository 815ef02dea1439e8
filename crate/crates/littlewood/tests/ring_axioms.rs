//! Property tests for the exact-arithmetic kernel.

use littlewood::exactalg::{LaurentPoly, QSeries, Rational, RationalFunction, XSeries};
use num_bigint::BigInt;
use proptest::prelude::*;

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=12)
        .prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn arb_qseries() -> impl Strategy<Value = QSeries> {
    proptest::collection::vec(arb_rational(), 0..6)
        .prop_map(|coeffs| QSeries::new(coeffs, Some(6)))
}

fn arb_laurent() -> impl Strategy<Value = LaurentPoly> {
    proptest::collection::vec((-4i64..=5, arb_rational()), 0..5).prop_map(|terms| {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p = p.add(&LaurentPoly::monomial(c, e));
        }
        p
    })
}

proptest! {
    #[test]
    fn qseries_ring_axioms(a in arb_qseries(), b in arb_qseries(), c in arb_qseries()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&b).sub(&b), a.truncate(6));
    }

    #[test]
    fn qseries_inversion(a in arb_qseries()) {
        prop_assume!(a.is_unit());
        let inv = a.inverse().unwrap();
        prop_assert!(a.mul(&inv).eq_to_order(&QSeries::one().truncate(6), 6));
    }

    #[test]
    fn laurent_ring_axioms(a in arb_laurent(), b in arb_laurent(), c in arb_laurent()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&b).sub(&b), a);
    }

    /// Canonical forms are unique: a/b == c/d structurally iff ad == cb.
    #[test]
    fn rational_function_canonical_form(
        a in arb_laurent(),
        b in arb_laurent(),
        c in arb_laurent(),
        d in arb_laurent(),
    ) {
        prop_assume!(!b.is_zero() && !d.is_zero());
        let x = RationalFunction::new(a.clone(), b.clone());
        let y = RationalFunction::new(c.clone(), d.clone());
        let cross_equal = a.mul(&d) == c.mul(&b);
        prop_assert_eq!(x == y, cross_equal);
    }

    /// Scaling numerator and denominator together never changes the value.
    #[test]
    fn rational_function_scaling_invariance(
        a in arb_laurent(),
        b in arb_laurent(),
        s in arb_laurent(),
    ) {
        prop_assume!(!b.is_zero() && !s.is_zero());
        let x = RationalFunction::new(a.clone(), b.clone());
        let y = RationalFunction::new(a.mul(&s), b.mul(&s));
        prop_assert_eq!(x, y);
    }

    /// The constant term is linear and kills every nonconstant monomial.
    #[test]
    fn constant_term_linearity(
        e1 in proptest::collection::vec(-3i32..=3, 2),
        e2 in proptest::collection::vec(-3i32..=3, 2),
        c1 in arb_rational(),
        c2 in arb_rational(),
    ) {
        let f = XSeries::monomial(2, e1.clone(), c1.clone());
        let g = XSeries::monomial(2, e2.clone(), c2.clone());
        let lhs = f.add(&g).constant_term();
        let rhs = f.constant_term() + g.constant_term();
        prop_assert_eq!(lhs, rhs);
        if e1.iter().any(|&p| p != 0) {
            prop_assert_eq!(f.constant_term(), Rational::new(0.into(), 1.into()));
        }
    }
}
