//! Property tests for the partition primitives, with an independent
//! pentagonal-recurrence oracle for the partition counts.

use num_traits::{One, Zero};
use proptest::prelude::*;

use kronfold::partition::{
    count_partitions_in_box, enumerate_partitions, enumerate_with_bounds, Partition,
};
use kronfold::Nat;

/// p(n) by the pentagonal number recurrence, independent of the enumerator.
fn pentagonal_partition_count(n: u64) -> Nat {
    let n = n as usize;
    let mut table: Vec<num_bigint::BigInt> = vec![num_bigint::BigInt::zero(); n + 1];
    table[0] = num_bigint::BigInt::one();
    for i in 1..=n {
        let mut acc = num_bigint::BigInt::zero();
        let mut k = 1i64;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > i {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc += sign * &table[i - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= i {
                acc += sign * &table[i - g2];
            }
            k += 1;
        }
        table[i] = acc;
    }
    table[n].to_biguint().expect("partition counts are positive")
}

#[test]
fn enumeration_count_matches_pentagonal_recurrence() {
    for n in 0..=30u64 {
        let count = enumerate_partitions(n, None).count();
        assert_eq!(Nat::from(count as u64), pentagonal_partition_count(n), "p({n})");
    }
    assert_eq!(enumerate_partitions(10, None).count(), 42);
}

#[test]
fn enumeration_is_strictly_decreasing_lex() {
    for n in 1..=12u64 {
        let all: Vec<Partition> = enumerate_partitions(n, None).collect();
        for w in all.windows(2) {
            assert!(w[0] > w[1], "{:?} before {:?}", w[0], w[1]);
        }
    }
}

#[test]
fn bounded_enumeration_matches_box_count() {
    for b in 0..=12u64 {
        for rows in 1..=4u64 {
            for cols in 1..=4u64 {
                let by_stream = enumerate_with_bounds(b, Some(rows), Some(cols)).count();
                assert_eq!(
                    Nat::from(by_stream as u64),
                    count_partitions_in_box(b, rows, cols),
                    "b = {b}, {rows}×{cols}"
                );
            }
        }
    }
}

fn arb_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u64..=12, 0..=8).prop_map(Partition::from_unsorted)
}

proptest! {
    #[test]
    fn conjugate_is_an_involution(lam in arb_partition()) {
        let conj = lam.conjugate();
        prop_assert_eq!(conj.conjugate(), lam.clone());
        prop_assert_eq!(conj.weight(), lam.weight());
        prop_assert_eq!(conj.len() as u64, lam.first());
        prop_assert_eq!(conj.durfee(), lam.durfee());
    }

    #[test]
    fn add_is_a_commutative_monoid(a in arb_partition(), b in arb_partition(), c in arb_partition()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.add(&Partition::empty()), a.clone());
        prop_assert_eq!(a.add(&b).weight(), a.weight() + b.weight());
    }

    #[test]
    fn columns_reassemble(lam in arb_partition()) {
        let mut rebuilt = Partition::empty();
        for k in lam.column_multiset() {
            rebuilt = rebuilt.add(&Partition::column(k));
        }
        prop_assert_eq!(rebuilt, lam);
    }

    #[test]
    fn selfconjugate_weight_parity(lam in arb_partition()) {
        if lam.is_self_conjugate() {
            prop_assert_eq!((lam.weight() - lam.durfee()) % 2, 0);
        }
    }

    #[test]
    fn box_count_complement_symmetry(b in 0u64..=25, r in 1u64..=5) {
        let square = r * r;
        if b <= square {
            prop_assert_eq!(
                count_partitions_in_box(b, r, r),
                count_partitions_in_box(square - b, r, r)
            );
        }
    }

    #[test]
    fn grammar_roundtrip(lam in arb_partition()) {
        let rendered = lam.to_string();
        let parsed: Partition = rendered.parse().unwrap();
        prop_assert_eq!(parsed, lam);
    }
}
