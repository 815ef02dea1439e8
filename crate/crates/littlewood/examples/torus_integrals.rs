//! Torus integrals as constant terms: the normalized Schur integrals, the
//! vanishing phenomenon off empty 2-cores, and the closed normalization
//! products.
//!
//! Run with: cargo run --example torus_integrals

use littlewood::partitions::partition;
use littlewood::pfaffian::closed_form_int1;
use littlewood::torus::{
    density, gustafson_norm, integral_i, normalization_constant_term, z_n_closed, DensitySpec,
    Family,
};

fn main() {
    let d = 10u32;

    // the density at order 0 is just the q-free polynomial part
    let spec0 = DensitySpec::new(Family::Iqq, 1, 0);
    println!("density (q,q)-family, n=1, D=0: {}", density(spec0));

    // normalized integrals: 1 at λ=0, 0 off empty 2-cores
    let spec = DensitySpec::new(Family::Iqq, 1, d);
    for lam in [partition(&[]), partition(&[1]), partition(&[1, 1]), partition(&[2])] {
        let r = integral_i(&lam, spec).unwrap();
        println!("I_{lam}(q,q;q) = {}", r.value);
    }

    // the direct constant term agrees with the hook/content closed form
    let lam = partition(&[2]);
    let closed = closed_form_int1(&lam, 1).unwrap();
    println!("closed form at λ=(2): {closed}");
    println!("  as a series: {}", closed.to_qseries(d).unwrap());

    // (3,2,1) has 2-core (3,2,1): its integral vanishes identically
    let spec2 = DensitySpec::new(Family::I1q2, 2, d);
    let r = integral_i(&partition(&[3, 2, 1]), spec2).unwrap();
    println!("I_(3,2,1)(1,q^2;q) at n=2: {}", r.value);

    // normalization constants: direct constant term vs closed products
    for family in [Family::Iqq, Family::I1q2] {
        let direct = normalization_constant_term(DensitySpec::new(family, 2, d));
        let closed = z_n_closed(family, 2, d).unwrap();
        println!("Z_2 for {family}: {direct}");
        println!("  closed product agrees: {}", direct.eq_to_order(&closed, d));
    }
    for family in [Family::KHalfQuarters, Family::K1m1qmq] {
        let direct = normalization_constant_term(DensitySpec::new(family, 1, d));
        let closed = gustafson_norm(family, 1, d).unwrap();
        println!("Gustafson <1,1> for {family} agrees: {}", direct.eq_to_order(&closed, d));
    }
}
