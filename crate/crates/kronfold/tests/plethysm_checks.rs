//! Plethysm sweeps: the Kostka upper bound, the first-row vanishing rule,
//! the dimension cross-check, and sanity on the power-sum coefficients.

use num_traits::Zero;

use kronfold::characters::class_order;
use kronfold::coefficients::kostka;
use kronfold::partition::{enumerate_partitions, Partition};
use kronfold::plethysm::{dimension_oracle, plethysm_coefficient, plethysm_h_h};
use kronfold::{Int, Nat, Rat};

fn factor_pairs(dm: u64) -> Vec<(u64, u64)> {
    (1..=dm)
        .filter(|d| dm % d == 0)
        .map(|d| (d, dm / d))
        .collect()
}

#[test]
fn first_row_vanishing_and_kostka_vanishing() {
    for dm in 1..=12u64 {
        for (d, m) in factor_pairs(dm) {
            let rect = Partition::rectangle(d, m);
            for lam in enumerate_partitions(dm, None) {
                if lam.first() < m {
                    assert!(
                        plethysm_coefficient(&lam, d, m).unwrap().is_zero(),
                        "a_{lam}({d}[{m}])"
                    );
                    assert!(kostka(&lam, &rect).unwrap().is_zero(), "K_{lam},{rect}");
                }
            }
        }
    }
}

#[test]
fn kostka_bounds_plethysm() {
    for dm in 1..=10u64 {
        for (d, m) in factor_pairs(dm) {
            let rect = Partition::rectangle(d, m);
            for lam in enumerate_partitions(dm, None) {
                let a = plethysm_coefficient(&lam, d, m).unwrap();
                let k = kostka(&lam, &rect).unwrap();
                assert!(a <= k, "a_{lam}({d}[{m}]) = {a} > K = {k}");
            }
        }
    }
}

#[test]
fn dimension_oracle_agrees() {
    for dm in 1..=10u64 {
        for (d, m) in factor_pairs(dm) {
            for k in 1..=3u64 {
                let (via_schur, closed) = dimension_oracle(d, m, k).unwrap();
                assert_eq!(via_schur, closed, "dim S^{d}(S^{m}ℂ^{k})");
            }
        }
    }
}

#[test]
fn power_sum_coefficients_positive_with_z_denominators() {
    for (d, m) in [(2u64, 2u64), (2, 3), (3, 2), (2, 4), (4, 2), (3, 3), (2, 5)] {
        let f = plethysm_h_h(d, m).unwrap();
        assert!(f.terms().count() > 0);
        for (rho, c) in f.terms() {
            assert!(c > &Rat::zero(), "coefficient of p_{rho} in h_{d}[h_{m}]");
            let z = Rat::from(Int::from(class_order(rho)));
            assert!((c * z).is_integer(), "z_ρ · coeff must be integral at p_{rho}");
        }
    }
}

#[test]
fn sum_of_squares_identity() {
    // Σ_λ a_λ(d[m])² has no closed check here, but Σ_λ a_λ·dim s_λ(1^k)
    // already ran; spot a frozen nontrivial value instead: h_3[h_2].
    let coeffs: Vec<(Partition, Nat)> = enumerate_partitions(6, None)
        .map(|lam| {
            let a = plethysm_coefficient(&lam, 3, 2).unwrap();
            (lam, a)
        })
        .filter(|(_, a)| !a.is_zero())
        .collect();
    // S³(S²) = s_6 + s_{4,2} + s_{2,2,2}
    let expected: Vec<(Partition, Nat)> = [("6", 1u32), ("4,2", 1), ("2,2,2", 1)]
        .iter()
        .map(|(s, v)| (s.parse().unwrap(), Nat::from(*v)))
        .collect();
    assert_eq!(coeffs, expected);
}
