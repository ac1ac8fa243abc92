//! The induced side of the type A decomposition, recomputed one `s_λ`
//! coefficient at a time by Frobenius reciprocity: restrict `χ^λ` to
//! `𝔖_g × C` and pair with `χ^μ ⊠ θ^k`. The sum over powers of the cyclic
//! generator is a Ramanujan sum, so everything stays in the integers.

use num_bigint::BigInt;
use num_integer::Integer;

use procesi_core::characters::character_value;
use procesi_core::macdonald::WeightSign;
use procesi_core::partitions::{factorial, partitions_of};
use procesi_core::verify::{type_a_lhs, type_a_rhs, DirectFibers};
use procesi_core::Partition;

fn mobius(mut n: usize) -> i64 {
    let mut out = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            out = -out;
        }
        p += 1;
    }
    if n > 1 {
        out = -out;
    }
    out
}

fn totient(n: usize) -> i64 {
    (1..=n).filter(|&k| k.gcd(&n) == 1).count() as i64
}

/// `Σ_{u ∈ (ℤ/q)^×} ζ_q^{ku}`.
fn ramanujan(q: usize, k: usize) -> i64 {
    let m = q / q.gcd(&k);
    mobius(m) * totient(q) / totient(m)
}

/// Class size of cycle type `nu` in `𝔖_g`.
fn class_size(nu: &Partition) -> BigInt {
    let mut z = BigInt::from(1);
    let mut counts = std::collections::BTreeMap::new();
    for &p in nu.parts() {
        *counts.entry(p).or_insert(0usize) += 1;
        z *= p;
    }
    for (_, m) in counts {
        z *= factorial(m);
    }
    factorial(nu.size()) / z
}

/// Multiplicity of `χ^μ ⊠ θ^k` in the restriction of `χ^λ`, where `C` is
/// generated by `r` disjoint `ℓ`-cycles.
fn restriction(lambda: &Partition, mu: &Partition, ell: usize, r: usize, k: usize) -> BigInt {
    let g = mu.size();
    let mut total = BigInt::from(0);
    for nu in partitions_of(g) {
        let chi_mu = character_value(mu, &nu).unwrap();
        if chi_mu == 0 {
            continue;
        }
        let weight = class_size(&nu) * chi_mu;
        for d in (1..=ell).filter(|d| ell.is_multiple_of(*d)) {
            // Powers c^m with gcd(m, ℓ) = d: each ℓ-cycle splits into d cycles.
            let mut cycle_type = nu.parts().to_vec();
            cycle_type.extend(std::iter::repeat_n(ell / d, d * r));
            let ty = Partition::from_unsorted(cycle_type);
            let chi = character_value(lambda, &ty).unwrap();
            total += &weight * chi * ramanujan(ell / d, k);
        }
    }
    let denom = factorial(g) * BigInt::from(ell);
    assert!(
        (&total % &denom) == BigInt::from(0),
        "non-integral multiplicity"
    );
    total / denom
}

#[test]
fn induced_side_matches_frobenius_reciprocity() {
    let src = DirectFibers::default();
    for n in 0..=7 {
        for ell in 2..=4 {
            for lambda in partitions_of(n) {
                let cq = lambda.core_quotient(ell);
                let parts = type_a_lhs(&cq.core, ell, WeightSign::default(), &src).unwrap();
                let rhs = type_a_rhs(&lambda, ell, WeightSign::default(), &src).unwrap();
                let lhs = type_a_lhs(&lambda, ell, WeightSign::default(), &src).unwrap();
                for i in 0..ell {
                    for target in partitions_of(n) {
                        let mut want = BigInt::from(0);
                        for (j, pj) in parts.components.iter().enumerate() {
                            for (mu, c) in pj.terms() {
                                let k = (i + ell - j) % ell;
                                want += c * restriction(&target, mu, ell, cq.r, k);
                            }
                        }
                        let got = rhs.components[i].coeff(&target);
                        assert_eq!(got, want, "λ={lambda} ℓ={ell} i={i} s{target}");
                        assert_eq!(
                            lhs.components[i].coeff(&target),
                            want,
                            "λ={lambda} ℓ={ell} i={i} s{target}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn ramanujan_sums() {
    assert_eq!(ramanujan(1, 0), 1);
    assert_eq!(ramanujan(4, 0), 2);
    assert_eq!(ramanujan(4, 1), 0);
    assert_eq!(ramanujan(4, 2), -2);
    assert_eq!(ramanujan(3, 1), -1);
    assert_eq!(ramanujan(6, 1), 1);
}
