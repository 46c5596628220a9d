//! The `verify-paper` pipeline: every claim the library reproduces, run at
//! the requested level and folded into one deterministic report.
//!
//! Quick level works at weight caps 10/12; full raises them to 12/14 and
//! adds the (4,4) and (3,5) eliminations.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use kronfold::certify::{
    certify, column2_ell, reproduce_small_values, scan_exceptional, verify_certificate,
    CertifyOutcome,
};
use kronfold::coefficients::{
    alt_kron, am, kostka, kronecker, sm, sym_kron, verify_sign_theorem,
};
use kronfold::partition::{count_partitions_in_box, enumerate_partitions, Partition};
use kronfold::plethysm::{dimension_oracle, plethysm_coefficient};
use kronfold::selfconj::{construct_self_conjugate, length_bound, paper_candidates, Method};
use kronfold::stabilizer::{
    annihilator_dimension, apply_operator, build_pow, evaluation_consistency,
    invariant_dimension, matrix_power_entry, partition_count_bounded, symmetry_check,
    DerivationOperator, ExactPolynomial,
};
use kronfold::{Int, Nat, Sign};

use crate::report::{run_check, CheckRecord, Report, Status};

pub struct Caps {
    /// identity sweeps over pairs of partitions
    pub pair_weight: u64,
    /// single-partition sweeps
    pub sweep_weight: u64,
    /// extra elimination sizes beyond the quick trio
    pub extra_stabilizer: Vec<(usize, u32)>,
    pub small_values_cap: u64,
}

pub fn caps_for(level: &str) -> Option<Caps> {
    match level {
        "quick" => Some(Caps {
            pair_weight: 10,
            sweep_weight: 12,
            extra_stabilizer: vec![],
            small_values_cap: 12,
        }),
        "full" => Some(Caps {
            pair_weight: 12,
            sweep_weight: 14,
            extra_stabilizer: vec![(3, 5), (4, 4)],
            small_values_cap: 13,
        }),
        _ => None,
    }
}

pub fn run(level: &str) -> Option<Report> {
    let caps = caps_for(level)?;
    let mut checks: Vec<CheckRecord> = Vec::new();

    checks.push(run_check(
        "exceptional-scan",
        "the exceptional column lengths are X_s = {2,3,4,7,8,12} for sm and \
         X_a = {1,2,5,6,10,14} for am at ell = max(isqrt(a)+2, 12)",
        || {
            let scan = scan_exceptional(14).expect("cap 14 allowed");
            let ok = scan.x_s == vec![2, 3, 4, 7, 8, 12] && scan.x_a == vec![1, 2, 5, 6, 10, 14];
            (
                if ok { Status::Pass } else { Status::Fail },
                json!({ "x_s": scan.x_s, "x_a": scan.x_a }),
            )
        },
    ));

    checks.push(run_check(
        "sign-rule-sweep",
        "for self-conjugate lambda, the sign column [1^D] sits in S²[lambda] \
         when sgn(lambda) = +1 and in Λ²[lambda] when sgn(lambda) = -1, with \
         multiplicity one",
        || {
            let mut checked = 0u64;
            let mut failures = Vec::new();
            for d in 1..=caps.sweep_weight {
                for lam in kronfold::selfconj::self_conjugate_partitions(d, d) {
                    let rep = verify_sign_theorem(&lam).expect("self-conjugate");
                    checked += 1;
                    if !rep.consistent {
                        failures.push(lam.to_string());
                    }
                }
            }
            (
                if failures.is_empty() { Status::Pass } else { Status::Fail },
                json!({ "checked": checked, "failures": failures }),
            )
        },
    ));

    checks.push(run_check(
        "sym-plus-alt-equals-kron",
        "sk(lambda,mu) + ak(lambda,mu) = g(lambda,mu,mu) for all pairs of \
         equal weight",
        || {
            let mut checked = 0u64;
            let mut failures = Vec::new();
            for d in 1..=caps.pair_weight {
                let shapes: Vec<Partition> = enumerate_partitions(d, None).collect();
                for lam in &shapes {
                    for mu in &shapes {
                        let g = kronecker(lam, mu, mu).expect("weights match");
                        let s = sym_kron(lam, mu).expect("weights match");
                        let a = alt_kron(lam, mu).expect("weights match");
                        checked += 1;
                        if s + a != g {
                            failures.push(format!("({lam}; {mu})"));
                        }
                    }
                }
            }
            (
                if failures.is_empty() { Status::Pass } else { Status::Fail },
                json!({ "checked": checked, "failures": failures }),
            )
        },
    ));

    checks.push(run_check(
        "column-conjugate-kron-one",
        "g(1^D, lambda, lambda-transpose) = 1 for every lambda of weight D",
        || {
            let mut checked = 0u64;
            let mut failures = Vec::new();
            for d in 1..=caps.pair_weight {
                let column = Partition::column(d);
                for lam in enumerate_partitions(d, None) {
                    let g = kronecker(&column, &lam, &lam.conjugate()).expect("weights match");
                    checked += 1;
                    if g != Nat::from(1u32) {
                        failures.push(lam.to_string());
                    }
                }
            }
            (
                if failures.is_empty() { Status::Pass } else { Status::Fail },
                json!({ "checked": checked, "failures": failures }),
            )
        },
    ));

    checks.push(run_check(
        "kron-transposition-invariance",
        "g is symmetric in its three arguments and unchanged when two of \
         them are conjugated",
        || {
            let mut checked = 0u64;
            let mut ok = true;
            for d in 3..=6u64 {
                let shapes: Vec<Partition> = enumerate_partitions(d, None).collect();
                for a in &shapes {
                    for b in &shapes {
                        for c in &shapes {
                            let g = kronecker(a, b, c).expect("weights match");
                            ok &= g == kronecker(b, a, c).expect("weights match");
                            ok &= g == kronecker(a, c, b).expect("weights match");
                            ok &= g
                                == kronecker(a, &b.conjugate(), &c.conjugate())
                                    .expect("weights match");
                            checked += 1;
                        }
                    }
                }
            }
            (
                if ok { Status::Pass } else { Status::Fail },
                json!({ "checked": checked }),
            )
        },
    ));

    checks.push(run_check(
        "sm-schedule-independence",
        "sm(lambda,n) depends only on the weight of lambda and n, and the \
         parallel reduction equals the sequential fold over mu",
        || {
            let mut checked = 0u64;
            let mut ok = true;
            for d in 1..=8u64 {
                for lam in enumerate_partitions(d, None) {
                    for n in [1u64, 3, 5] {
                        let parallel = sm(&lam, n).expect("within cap");
                        let sequential: Nat = enumerate_partitions(d, Some(n))
                            .map(|mu| sym_kron(&lam, &mu).expect("weights match"))
                            .sum();
                        ok &= parallel == sequential;
                        checked += 1;
                    }
                }
            }
            (
                if ok { Status::Pass } else { Status::Fail },
                json!({ "checked": checked }),
            )
        },
    ));

    checks.push(run_check(
        "semigroup-inequalities",
        "positivity is preserved under componentwise addition: sm+sm and \
         am+am give sm, sm+am gives am, each at least the max of the inputs",
        || {
            let (pairs, applications, failures) = semigroup_trials(200, 8, 5);
            (
                if failures.is_empty() { Status::Pass } else { Status::Fail },
                json!({
                    "pairs": pairs,
                    "rule_applications": applications,
                    "failures": failures,
                }),
            )
        },
    ));

    checks.push(run_check(
        "small-values-reproduction",
        "sm(lambda,7) > 0 for every lambda of length at most 14 outside the \
         tabulated exceptions {1^r: r in X_s} and {(2,1,1), (3,1,1), (2,1^7)}",
        || {
            let report = reproduce_small_values(caps.small_values_cap).expect("cap allowed");
            let status = if report.matches_tabulated {
                Status::Pass
            } else {
                Status::Fail
            };
            (
                status,
                json!({
                    "weight_cap": report.weight_cap,
                    "zero_cases": report.zero_cases.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                    "unexpected_zeros": report.unexpected_zeros.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                    "unexpected_positives": report.unexpected_positives.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                    "note": "the direct computation finds sm((2,1,1,1),7) = 0, a vanishing case \
                             the tabulated exception list does not contain; the value is \
                             hand-checkable against the character table of the degree-5 \
                             symmetric group",
                }),
            )
        },
    ));

    checks.push(run_check(
        "construction-sweep",
        "for every weight a in [1,500] and each achievable sign there is a \
         self-conjugate partition of that weight and sign with length at \
         most max(isqrt(a)+2, 12)",
        || {
            let mut built = 0u64;
            let mut methods = std::collections::BTreeMap::<String, u64>::new();
            let mut failures = Vec::new();
            for a in 1..=500u64 {
                for sign in [Sign::Plus, Sign::Minus] {
                    let exceptional = (sign == Sign::Plus
                        && kronfold::selfconj::X_S.contains(&a))
                        || (sign == Sign::Minus && kronfold::selfconj::X_A.contains(&a));
                    match construct_self_conjugate(a, sign) {
                        Ok(res) => {
                            built += 1;
                            let label = serde_json::to_value(res.method)
                                .ok()
                                .and_then(|v| v.as_str().map(str::to_string))
                                .unwrap_or_else(|| format!("{:?}", res.method));
                            *methods.entry(label).or_insert(0) += 1;
                            let p = &res.partition;
                            let ok = p.weight() == a
                                && p.is_self_conjugate()
                                && p.sign_self_conjugate() == Ok(sign)
                                && p.len() as u64 <= length_bound(a)
                                && !exceptional;
                            if !ok {
                                failures.push(format!("a={a} sign={sign}"));
                            }
                            if a >= 100 && res.method == Method::ExhaustiveFallback {
                                failures.push(format!("a={a} sign={sign}: fell back above 100"));
                            }
                        }
                        Err(_) if exceptional => {}
                        Err(e) => failures.push(format!("a={a} sign={sign}: {e}")),
                    }
                }
            }
            (
                if failures.is_empty() { Status::Pass } else { Status::Fail },
                json!({ "built": built, "methods": methods, "failures": failures }),
            )
        },
    ));

    checks.push(run_check(
        "construction-pair-parity",
        "for a >= 100 the two closed-form candidates differ by exactly one \
         box above the diagonal, so they realize both signs",
        || {
            let mut ok = true;
            let mut checked = 0u64;
            for a in 100..=500u64 {
                let (first, second) = paper_candidates(a).expect("a >= 15");
                let above_first = first.boxes_above_diagonal();
                let above_second = second.boxes_above_diagonal();
                ok &= first.is_self_conjugate()
                    && second.is_self_conjugate()
                    && above_second == above_first + 1;
                checked += 1;
            }
            (
                if ok { Status::Pass } else { Status::Fail },
                json!({ "checked": checked }),
            )
        },
    ));

    checks.push(run_check(
        "base-table-verbatim",
        "the fixed witnesses for a <= 14 have the stated weight, sign, and \
         length, and exist exactly off the exceptional sets",
        || {
            let mut ok = true;
            for a in 1..=14u64 {
                let plus = kronfold::selfconj::base_table(a, Sign::Plus);
                let minus = kronfold::selfconj::base_table(a, Sign::Minus);
                ok &= plus.is_some() != kronfold::selfconj::X_S.contains(&a);
                ok &= minus.is_some() != kronfold::selfconj::X_A.contains(&a);
                for (w, sign) in [(plus, Sign::Plus), (minus, Sign::Minus)] {
                    if let Some(w) = w {
                        ok &= w.weight() == a
                            && w.sign_self_conjugate() == Ok(sign)
                            && w.len() as u64 <= length_bound(a);
                    }
                }
            }
            (
                if ok { Status::Pass } else { Status::Fail },
                json!({ "range": "1..=14" }),
            )
        },
    ));

    checks.push(run_check(
        "certifier-ground-truth",
        "certificates exist exactly where sm(lambda,12) > 0, every emitted \
         certificate passes the independent verifier, and the (2,2,1^k) \
         family is undecided by the column method but satisfies the \
         sm/am dichotomy",
        || {
            let mut counts = std::collections::BTreeMap::<&str, u64>::new();
            let mut failures = Vec::new();
            for d in 1..=caps.sweep_weight.min(12) {
                for lam in enumerate_partitions(d, None) {
                    let outcome = certify(&lam, 12);
                    let positive = !sm(&lam, 12).expect("within cap").is_zero();
                    match &outcome {
                        CertifyOutcome::Certified { certificate } => {
                            *counts.entry("certified").or_insert(0) += 1;
                            if !verify_certificate(certificate) {
                                failures.push(format!("{lam}: verifier rejected"));
                            }
                            if !positive {
                                failures.push(format!("{lam}: certified but sm = 0"));
                            }
                        }
                        CertifyOutcome::Exceptional { .. } => {
                            *counts.entry("exceptional").or_insert(0) += 1;
                            if positive {
                                failures.push(format!("{lam}: exceptional but sm > 0"));
                            }
                        }
                        CertifyOutcome::Undecided { .. } => {
                            *counts.entry("undecided").or_insert(0) += 1;
                            let ell = column2_ell(lam.weight().saturating_sub(4));
                            let s = sm(&lam, ell).expect("within cap");
                            let a = am(&lam, ell).expect("within cap");
                            if s.is_zero() && a.is_zero() {
                                failures.push(format!("{lam}: dichotomy failed"));
                            }
                        }
                        CertifyOutcome::MethodGap { detail } => {
                            failures.push(format!("{lam}: method gap: {detail}"));
                        }
                    }
                }
            }
            (
                if failures.is_empty() { Status::Pass } else { Status::Fail },
                json!({ "counts": counts, "failures": failures }),
            )
        },
    ));

    checks.push(run_check(
        "pos-instantiation-m10",
        "at weight 10, every lambda with first part at least 3 is certified \
         positive at ell = 12",
        || {
            let mut checked = 0u64;
            let mut failures = Vec::new();
            for lam in enumerate_partitions(10, None) {
                if lam.first() < 3 {
                    continue;
                }
                checked += 1;
                match certify(&lam, 12) {
                    CertifyOutcome::Certified { certificate } => {
                        if !verify_certificate(&certificate) {
                            failures.push(lam.to_string());
                        }
                    }
                    other => failures.push(format!("{lam}: {other:?}")),
                }
            }
            (
                if failures.is_empty() { Status::Pass } else { Status::Fail },
                json!({ "checked": checked, "failures": failures }),
            )
        },
    ));

    checks.push(run_check(
        "column2-dichotomy",
        "for the family (2,2,1^a), a <= 8, at least one of sm and am is \
         positive at ell = max(7, ceil(sqrt(a+2)))",
        || {
            let mut rows = Vec::new();
            let mut ok = true;
            for a in 0..=8u64 {
                let lam = Partition::new(vec![2, 2]).expect("partition").add(&Partition::column(a));
                let ell = column2_ell(a);
                let s = sm(&lam, ell).expect("within cap");
                let v = am(&lam, ell).expect("within cap");
                ok &= !s.is_zero() || !v.is_zero();
                rows.push(json!({
                    "a": a,
                    "ell": ell,
                    "sm": s.to_string(),
                    "am": v.to_string(),
                }));
            }
            (
                if ok { Status::Pass } else { Status::Fail },
                json!({ "rows": rows }),
            )
        },
    ));

    checks.push(run_check(
        "plethysm-kostka-bound",
        "a_lambda(d[m]) <= K_{lambda, d x m} for every lambda of weight d*m",
        || {
            let mut checked = 0u64;
            let mut failures = Vec::new();
            for dm in 1..=10u64 {
                for d in (1..=dm).filter(|x| dm % x == 0) {
                    let m = dm / d;
                    let rect = Partition::rectangle(d, m);
                    for lam in enumerate_partitions(dm, None) {
                        let a = plethysm_coefficient(&lam, d, m).expect("within cap");
                        let k = kostka(&lam, &rect).expect("weights match");
                        checked += 1;
                        if a > k {
                            failures.push(format!("{lam} at {d}[{m}]"));
                        }
                    }
                }
            }
            (
                if failures.is_empty() { Status::Pass } else { Status::Fail },
                json!({ "checked": checked, "failures": failures }),
            )
        },
    ));

    checks.push(run_check(
        "plethysm-first-row-vanishing",
        "whenever the first part of lambda is smaller than m, both \
         a_lambda(d[m]) and K_{lambda, d x m} vanish",
        || {
            let mut checked = 0u64;
            let mut failures = Vec::new();
            let mut extra_vanishing = Vec::new();
            for dm in 1..=10u64 {
                for d in (1..=dm).filter(|x| dm % x == 0) {
                    let m = dm / d;
                    let rect = Partition::rectangle(d, m);
                    for lam in enumerate_partitions(dm, None) {
                        let a = plethysm_coefficient(&lam, d, m).expect("within cap");
                        if lam.first() < m {
                            checked += 1;
                            let k = kostka(&lam, &rect).expect("weights match");
                            if !a.is_zero() || !k.is_zero() {
                                failures.push(format!("{lam} at {d}[{m}]"));
                            }
                        } else if a.is_zero() {
                            extra_vanishing.push(format!("{lam} at {d}[{m}]"));
                        }
                    }
                }
            }
            (
                if failures.is_empty() { Status::Pass } else { Status::Fail },
                json!({
                    "checked": checked,
                    "failures": failures,
                    "vanishing_beyond_first_row_rule": extra_vanishing,
                    "note": "the vanishing locus is strictly larger than the first-row rule; \
                             the rule is one-directional",
                }),
            )
        },
    ));

    checks.push(run_check(
        "plethysm-dimension-oracle",
        "the Schur expansion of h_d[h_m] evaluated at k ones equals the \
         closed binomial count of monomials of degree d in the degree-m \
         monomials of k variables",
        || {
            let mut checked = 0u64;
            let mut ok = true;
            for dm in 1..=10u64 {
                for d in (1..=dm).filter(|x| dm % x == 0) {
                    let m = dm / d;
                    for k in 1..=3u64 {
                        let (lhs, rhs) = dimension_oracle(d, m, k).expect("within cap");
                        ok &= lhs == rhs;
                        checked += 1;
                    }
                }
            }
            (
                if ok { Status::Pass } else { Status::Fail },
                json!({ "checked": checked }),
            )
        },
    ));

    for r in [2u64, 3] {
        checks.push(run_check(
            &format!("two-row-comparison-r{r}"),
            "comparison of g((r*r-b, b), r x r, r x r) with the difference of \
             box-bounded partition counts; asserted in the source material \
             only for r >= 7, measured here",
            || {
                let rect = Partition::rectangle(r, r);
                let mut rows = Vec::new();
                for b in 0..=(r * r) / 2 {
                    let two_row = if b == 0 {
                        Partition::row(r * r)
                    } else {
                        Partition::new(vec![r * r - b, b]).expect("partition")
                    };
                    let g = kronecker(&two_row, &rect, &rect).expect("weights match");
                    let diff = count_partitions_in_box(b, r, r)
                        - if b == 0 {
                            Nat::zero()
                        } else {
                            count_partitions_in_box(b - 1, r, r)
                        };
                    rows.push(json!({
                        "b": b,
                        "kronecker": g.to_string(),
                        "box_count_difference": diff.to_string(),
                        "equal": g == diff,
                    }));
                }
                (Status::ReportedOnly, json!({ "rows": rows }))
            },
        ));
    }

    checks.push(run_check(
        "operator-closed-form-3-3",
        "a basis operator acts on the trace power as multiplication by its \
         variable times m times the corresponding entry of the (m-1)-st \
         matrix power",
        || {
            let n = 3usize;
            let m = 3u32;
            let pow: ExactPolynomial<Int> = build_pow(n, m).expect("small");
            let mut ok = true;
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        for d in 0..n {
                            let lhs =
                                apply_operator(&DerivationOperator::Basis { a, b, c, d }, &pow);
                            let path: ExactPolynomial<Int> = matrix_power_entry(n, m - 1, a, b);
                            let mut rhs = ExactPolynomial::zero(n, m);
                            for (mono, coeff) in path.terms() {
                                let mut m2 = mono.clone();
                                m2[c * n + d] += 1;
                                rhs.add_term(m2, coeff.clone() * Int::from(m));
                            }
                            ok &= lhs == rhs;
                        }
                    }
                }
            }
            (
                if ok { Status::Pass } else { Status::Fail },
                json!({ "operators": n * n * n * n }),
            )
        },
    ));

    checks.push(run_check(
        "ad-annihilates-pow",
        "every commutator operator Ad(eta^k (x) e_j) kills the trace power",
        || {
            let mut ok = true;
            let mut checked = 0u64;
            for n in 2..=4usize {
                for m in 2..=5u32 {
                    let pow: ExactPolynomial<Int> = build_pow(n, m).expect("small");
                    for k in 0..n {
                        for j in 0..n {
                            ok &= apply_operator(&DerivationOperator::Ad { k, j }, &pow).is_zero();
                            checked += 1;
                        }
                    }
                }
            }
            (
                if ok { Status::Pass } else { Status::Fail },
                json!({ "checked": checked }),
            )
        },
    ));

    let mut stab_sizes: Vec<(usize, u32)> = vec![(3, 3), (3, 4), (4, 3)];
    stab_sizes.extend(caps.extra_stabilizer.iter().copied());
    for (n, m) in stab_sizes {
        checks.push(run_check(
            &format!("annihilator-{n}-{m}"),
            "the annihilator of the trace power in the operator space has \
             dimension n*n - 1",
            || {
                let dim = annihilator_dimension(n, m).expect("within caps");
                (
                    if dim == n * n - 1 { Status::Pass } else { Status::Fail },
                    json!({ "n": n, "m": m, "dimension": dim, "expected": n * n - 1 }),
                )
            },
        ));
        checks.push(run_check(
            &format!("invariant-{n}-{m}"),
            "the space of degree-m polynomials invariant under the full \
             stabilizer has dimension equal to the number of partitions of \
             m with at most n parts, and exceeds one",
            || {
                let dim = invariant_dimension(n, m).expect("within caps");
                let expected = partition_count_bounded(m, n);
                (
                    if dim == expected && dim > 1 { Status::Pass } else { Status::Fail },
                    json!({ "n": n, "m": m, "dimension": dim, "expected": expected }),
                )
            },
        ));
    }

    checks.push(run_check(
        "pow-symmetries-3-3",
        "the trace power is symbolically invariant under variable \
         transposition and under conjugation by invertible matrices, and is \
         homogeneous of degree m (so scaling by m-th roots of unity fixes it)",
        || {
            let report = symmetry_check(3, 3, 5).expect("small");
            (
                if report.all_pass() { Status::Pass } else { Status::Fail },
                serde_json::to_value(&report).expect("serializable"),
            )
        },
    ));

    checks.push(run_check(
        "pow-evaluation-consistency",
        "the coordinate polynomial evaluated at random rational matrices \
         agrees with iterated matrix multiplication plus trace",
        || {
            let ok = evaluation_consistency(3, 3, 20).expect("small")
                && evaluation_consistency(2, 4, 20).expect("small");
            (
                if ok { Status::Pass } else { Status::Fail },
                json!({ "trials": 40 }),
            )
        },
    ));

    Some(Report {
        level: level.to_string(),
        checks,
    })
}

/// Seeded random semigroup trials; returns (pairs, per-rule application
/// counts, failures).
pub fn semigroup_trials(
    pairs: u32,
    max_weight: u64,
    max_bound: u64,
) -> (u32, Value, Vec<String>) {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6b66_2222);
    let pools: Vec<Vec<Partition>> = (1..=max_weight)
        .map(|d| enumerate_partitions(d, None).collect())
        .collect();
    let mut rule1 = 0u64;
    let mut rule2 = 0u64;
    let mut rule3 = 0u64;
    let mut failures = Vec::new();
    for _ in 0..pairs {
        let d1 = rng.gen_range(1..=max_weight);
        let d2 = rng.gen_range(1..=max_weight);
        let lam = pools[d1 as usize - 1][rng.gen_range(0..pools[d1 as usize - 1].len())].clone();
        let nu = pools[d2 as usize - 1][rng.gen_range(0..pools[d2 as usize - 1].len())].clone();
        let n = rng.gen_range(1..=max_bound);
        let sum = lam.add(&nu);
        let sm_l = sm(&lam, n).expect("within cap");
        let sm_n = sm(&nu, n).expect("within cap");
        let am_l = am(&lam, n).expect("within cap");
        let am_n = am(&nu, n).expect("within cap");
        let sm_sum = sm(&sum, n).expect("within cap");
        let am_sum = am(&sum, n).expect("within cap");
        if !sm_l.is_zero() && !sm_n.is_zero() {
            rule1 += 1;
            if sm_sum < sm_l.clone().max(sm_n.clone()) {
                failures.push(format!("rule1 at ({lam}) + ({nu}), n = {n}"));
            }
        }
        if !am_l.is_zero() && !am_n.is_zero() {
            rule2 += 1;
            if sm_sum < am_l.clone().max(am_n.clone()) {
                failures.push(format!("rule2 at ({lam}) + ({nu}), n = {n}"));
            }
        }
        if !sm_l.is_zero() && !am_n.is_zero() {
            rule3 += 1;
            if am_sum < sm_l.max(am_n) {
                failures.push(format!("rule3 at ({lam}) + ({nu}), n = {n}"));
            }
        }
    }
    (
        pairs,
        json!({ "sm-sm": rule1, "am-am": rule2, "sm-am": rule3 }),
        failures,
    )
}
