//! Ground truth for the certifier and the scans at reduced caps (the
//! acceptance suite runs the full-size sweeps).

use num_traits::Zero;

use kronfold::certify::{
    certify, reproduce_small_values, scan_exceptional, verify_certificate, CertifyOutcome,
};
use kronfold::coefficients::{am, sm};
use kronfold::partition::{enumerate_partitions, Partition};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn scan_exceptional_14_matches_known_sets() {
    let scan = scan_exceptional(14).unwrap();
    assert_eq!(scan.x_s, vec![2, 3, 4, 7, 8, 12]);
    assert_eq!(scan.x_a, vec![1, 2, 5, 6, 10, 14]);
}

/// Every vanishing case of sm(·,7) under weight 12. The tabulated exception
/// list misses (2,1,1,1); the report exposes exactly that single gap.
#[test]
fn small_values_truth_at_cap_12() {
    let report = reproduce_small_values(12).unwrap();
    let zeros: Vec<String> = report.zero_cases.iter().map(|q| q.to_string()).collect();
    assert_eq!(
        zeros,
        vec![
            "1,1", "1,1,1", "2,1,1", "1^4", "3,1,1", "2,1,1,1", "1^7", "1^8", "2,1^7", "1^12"
        ]
    );
    let unexpected: Vec<String> = report
        .unexpected_zeros
        .iter()
        .map(|q| q.to_string())
        .collect();
    assert_eq!(unexpected, vec!["2,1,1,1"]);
    assert!(report.unexpected_positives.is_empty());
    assert!(!report.matches_tabulated);
}

#[test]
fn certifier_matches_direct_positivity_up_to_10() {
    for d in 1..=10u64 {
        for lam in enumerate_partitions(d, None) {
            let outcome = certify(&lam, 12);
            let positive = !sm(&lam, 12).unwrap().is_zero();
            match &outcome {
                CertifyOutcome::Certified { certificate } => {
                    assert!(verify_certificate(certificate), "verify {lam}");
                    assert!(positive, "certified {lam} but sm vanishes");
                }
                CertifyOutcome::Exceptional { .. } => {
                    assert!(!positive, "{lam} marked exceptional but sm > 0");
                }
                CertifyOutcome::Undecided { .. } => {
                    // the (2,2,1^k) family: the method only grants the dichotomy
                    let ell = kronfold::certify::column2_ell(lam.weight() - 4);
                    let s = sm(&lam, ell).unwrap();
                    let a = am(&lam, ell).unwrap();
                    assert!(!s.is_zero() || !a.is_zero(), "dichotomy at {lam}");
                }
                CertifyOutcome::MethodGap { detail } => {
                    panic!("method gap at {lam}: {detail}");
                }
            }
        }
    }
}

#[test]
fn column2_dichotomy_small() {
    for a in 0..=8u64 {
        let lam = Partition::new(vec![2, 2]).unwrap().add(&Partition::column(a));
        let ell = kronfold::certify::column2_ell(a);
        let s = sm(&lam, ell).unwrap();
        let am_v = am(&lam, ell).unwrap();
        assert!(
            !s.is_zero() || !am_v.is_zero(),
            "neither sm nor am positive at (2,2,1^{a})"
        );
    }
}

#[test]
fn certificates_are_deterministic() {
    let first = certify(&p("5,4,4,2,1"), 12);
    let second = certify(&p("5,4,4,2,1"), 12);
    let a = serde_json::to_string(&first).unwrap();
    let b = serde_json::to_string(&second).unwrap();
    assert_eq!(a, b);
}
