//! Partition statistics: hooks, contents, 2-cores, and the signed
//! statistic b(λ) that weights the empty-2-core Littlewood sums.
//!
//! Run with: cargo run --example partition_statistics

use littlewood::partitions::{
    empty_two_core_partitions, partition, ParityClass, TwoCoreMethod,
};

fn main() {
    let lam = partition(&[6, 4, 3, 1]);
    println!("λ = {lam}, |λ| = {}, length {}", lam.size(), lam.length());
    println!("conjugate λ' = {}", lam.conjugate());

    let hooks = lam.hook_multisets();
    println!("hook multiset   {:?}", hooks.all);
    println!("  odd hooks     {:?}", hooks.odd);
    println!("  even hooks    {:?}", hooks.even);
    println!("balanced odd/even hook counts <=> empty 2-core");

    println!("2-core of λ = {} (diagram tiles by dominoes)", lam.two_core());
    println!("2-core of (2,1) = {} (the staircase is its own core)", partition(&[2, 1]).two_core());

    println!("b(λ)  = {}", lam.b_statistic());
    println!("b(λ') = {}", lam.conjugate().b_statistic());
    println!("b((2,1,1,1)) = {} (b can vanish off empty 2-cores)", partition(&[2, 1, 1, 1]).b_statistic());

    // the statistic recomputed through the staircase/pair-sum formulas
    println!("b via λ+δ staircase (n=4): {}", lam.b_via_delta(4).unwrap());
    println!("b' via pair sums    (n=4): {}", lam.b_conj_via_delta(4).unwrap());

    // hook and content polynomials entering the closed forms
    println!("H^o(q) = {}", lam.hook_poly(ParityClass::Odd));
    println!("H^e(q) = {}", lam.hook_poly(ParityClass::Even));
    println!("C^e(q^2;q) = {}", lam.content_poly(2, ParityClass::Even));

    // the three equivalent empty-2-core tests
    for p in [partition(&[2, 2]), partition(&[2, 1, 1]), partition(&[3, 2, 1])] {
        println!(
            "{p}: abacus {}, hook count {}, beta parity {}",
            p.has_empty_two_core(TwoCoreMethod::Abacus),
            p.has_empty_two_core(TwoCoreMethod::HookCount),
            p.has_empty_two_core(TwoCoreMethod::BetaParity { m: p.length() }),
        );
    }

    let cores: Vec<String> = empty_two_core_partitions(6, None, None)
        .iter()
        .map(|p| p.to_string())
        .collect();
    println!("empty-2-core partitions with |λ| <= 6: {}", cores.join(" "));
}
