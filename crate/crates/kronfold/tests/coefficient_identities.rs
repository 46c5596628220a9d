//! Cross-identities between the coefficient families, plus the frozen
//! two-row comparison values.

use num_traits::Zero;
use proptest::prelude::*;

use kronfold::coefficients::{alt_kron, am, kostka, kronecker, sm, sym_kron};
use kronfold::partition::{count_partitions_in_box, enumerate_partitions, Partition};
use kronfold::Nat;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn sym_plus_alt_equals_kron_small() {
    for d in 1..=8u64 {
        for lam in enumerate_partitions(d, None) {
            for mu in enumerate_partitions(d, None) {
                let g = kronecker(&lam, &mu, &mu).unwrap();
                let s = sym_kron(&lam, &mu).unwrap();
                let a = alt_kron(&lam, &mu).unwrap();
                assert_eq!(s + a, g, "λ = {lam}, μ = {mu}");
            }
        }
    }
}

#[test]
fn kronecker_argument_symmetry_and_transposition() {
    for d in [4u64, 5, 6] {
        let shapes: Vec<Partition> = enumerate_partitions(d, None).collect();
        for a in &shapes {
            for b in &shapes {
                for c in &shapes {
                    let g = kronecker(a, b, c).unwrap();
                    assert_eq!(g, kronecker(a, c, b).unwrap());
                    assert_eq!(g, kronecker(b, a, c).unwrap());
                    assert_eq!(g, kronecker(c, b, a).unwrap());
                    // conjugating two arguments preserves g
                    assert_eq!(g, kronecker(a, &b.conjugate(), &c.conjugate()).unwrap());
                }
            }
        }
    }
}

#[test]
fn column_with_conjugate_pair_is_one() {
    for d in 1..=10u64 {
        let column = Partition::column(d);
        for lam in enumerate_partitions(d, None) {
            assert_eq!(
                kronecker(&column, &lam, &lam.conjugate()).unwrap(),
                Nat::from(1u32),
                "g(1^{d}, {lam}, {lam}ᵗ)"
            );
        }
    }
}

#[test]
fn kostka_positive_iff_dominance() {
    for d in 1..=8u64 {
        for lam in enumerate_partitions(d, None) {
            for mu in enumerate_partitions(d, None) {
                let k = kostka(&lam, &mu).unwrap();
                assert_eq!(
                    !k.is_zero(),
                    lam.dominates(&mu),
                    "K_{{{lam},{mu}}} = {k}"
                );
            }
        }
    }
}

#[test]
fn sm_monotone_in_bound() {
    for d in 1..=8u64 {
        for lam in enumerate_partitions(d, None) {
            let mut prev = Nat::zero();
            for n in 1..=d + 1 {
                let cur = sm(&lam, n).unwrap();
                assert!(cur >= prev, "sm({lam},{n})");
                prev = cur;
            }
        }
    }
}

/// The two-row comparison at reduced Durfee size. Both sides agree on the
/// scanned range; the values are frozen from an independent computation.
#[test]
fn two_row_comparison_small_durfee() {
    let expected_r2 = [1u64, 0, 1];
    let expected_r3 = [1u64, 0, 1, 1, 0];
    for (r, expected) in [(2u64, &expected_r2[..]), (3u64, &expected_r3[..])] {
        let rect = Partition::rectangle(r, r);
        for (b, &want) in expected.iter().enumerate() {
            let b = b as u64;
            let two_row = if b == 0 {
                Partition::row(r * r)
            } else {
                Partition::new(vec![r * r - b, b]).unwrap()
            };
            let g = kronecker(&two_row, &rect, &rect).unwrap();
            assert_eq!(g, Nat::from(want), "g at r = {r}, b = {b}");
            let diff = count_partitions_in_box(b, r, r)
                - if b == 0 {
                    Nat::zero()
                } else {
                    count_partitions_in_box(b - 1, r, r)
                };
            assert_eq!(g, diff, "box-count difference at r = {r}, b = {b}");
        }
    }
}

fn arb_partition(max_weight: u64) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u64..=4, 1..=4).prop_map(move |mut parts| {
        let mut total: u64 = parts.iter().sum();
        while total > max_weight {
            let last = parts.pop().unwrap();
            total -= last;
        }
        if parts.is_empty() {
            parts.push(1);
        }
        Partition::from_unsorted(parts)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Semigroup closure on small random pairs (the acceptance suite runs
    /// the full-size seeded version).
    #[test]
    fn semigroup_rules_small(lam in arb_partition(5), nu in arb_partition(5), n in 1u64..=4) {
        let sum = lam.add(&nu);
        let sm_l = sm(&lam, n).unwrap();
        let sm_n = sm(&nu, n).unwrap();
        let am_l = am(&lam, n).unwrap();
        let am_n = am(&nu, n).unwrap();
        let sm_sum = sm(&sum, n).unwrap();
        let am_sum = am(&sum, n).unwrap();
        if !sm_l.is_zero() && !sm_n.is_zero() {
            prop_assert!(sm_sum >= sm_l.clone().max(sm_n.clone()));
        }
        if !am_l.is_zero() && !am_n.is_zero() {
            prop_assert!(sm_sum >= am_l.clone().max(am_n.clone()));
        }
        if !sm_l.is_zero() && !am_n.is_zero() {
            prop_assert!(am_sum >= sm_l.max(am_n));
        }
    }

    /// sm is independent of the evaluation schedule: the parallel reduction
    /// equals a sequential fold over μ in enumeration order.
    #[test]
    fn sm_deterministic_parallel_vs_sequential(lam in arb_partition(6), n in 1u64..=5) {
        let parallel = sm(&lam, n).unwrap();
        let sequential: Nat = enumerate_partitions(lam.weight(), Some(n))
            .map(|mu| sym_kron(&lam, &mu).unwrap())
            .sum();
        prop_assert_eq!(parallel, sequential);
    }
}
