//! Semigroup positivity certificates for sm(λ, ℓ), an independent verifier,
//! and the exceptional-set scans.
//!
//! A certificate decomposes the columns of λ into blocks, claims sm- or
//! am-positivity for each block, and folds the blocks together with the
//! three semigroup rules (sm+sm→sm, am+am→sm, sm+am→am). The generator
//! follows the column case analysis — nonexceptional columns stand alone,
//! exceptional columns are grouped so that every composite block stays
//! directly checkable — and verifies every positivity claim as it builds.
//! The verifier re-checks everything from scratch without consulting the
//! generator.
//!
//! Block justifications keep verification cheap and trust explicit:
//! composite blocks carry `direct-computation` and must have weight ≤ 16;
//! single columns cite the base table (a ≤ 14) or the sign-rule witness
//! construction (a > 14).


use serde::Serialize;

use crate::coefficients::{am_witness, sm_witness};
use crate::partition::{enumerate_partitions, Partition, Sign};
use crate::selfconj::{
    base_table, ceil_sqrt, construct_self_conjugate, length_bound, X_A, X_S,
};
use crate::{Error, Result};

/// Largest block weight the verifier will recompute directly.
pub const DIRECT_CHECK_CAP: u64 = 16;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BlockKind {
    SmPositive,
    AmPositive,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Justification {
    DirectComputation,
    BaseTable,
    SignTheorem,
}

#[derive(Clone, Debug, Serialize)]
pub struct Block {
    pub partition: Partition,
    pub kind: BlockKind,
    pub justification: Justification,
}

/// Which semigroup rule merges the next block into the running sum.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SemigroupRule {
    /// sm + sm → sm
    SmSm,
    /// am + am → sm
    AmAm,
    /// sm + am (either order) → am
    Mixed,
}

#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub target: Partition,
    pub ell: u64,
    pub blocks: Vec<Block>,
    pub combination: Vec<SemigroupRule>,
}

/// certify() outcome. Failures are values: they carry the matched
/// exceptional case or the reason the method could not be completed.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum CertifyOutcome {
    Certified { certificate: Certificate },
    /// λ is one of the cases where sm is actually zero at the stated ℓ.
    Exceptional { matched: String },
    /// The (2,2,1^k) family: the column method only yields the dichotomy
    /// "sm or am positive", so no sm-certificate is attempted.
    Undecided { family: String },
    /// The column method could not assemble a verifiable certificate.
    MethodGap { detail: String },
}

impl CertifyOutcome {
    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            CertifyOutcome::Certified { certificate } => Some(certificate),
            _ => None,
        }
    }
}

/// ℓ from the length budget L: max(⌈√L⌉ + 2, 12). This is the certificate
/// bound; the per-column witness bound max(⌊√a⌋+2, 12) is
/// `selfconj::length_bound`.
pub fn default_ell(lambda: &Partition) -> u64 {
    (ceil_sqrt(lambda.len() as u64) + 2).max(12)
}

/// The nine partitions with vanishing sm at the certificate ℓ, plus
/// (2,1,1,1), whose sm also vanishes although the column method expects it
/// to be positive (see `reproduce_small_values`).
pub fn exceptional_targets() -> Vec<Partition> {
    let mut out: Vec<Partition> = X_S.iter().map(|&r| Partition::column(r)).collect();
    for s in ["2,1,1", "2,1,1,1", "3,1,1", "2,1^7"] {
        out.push(s.parse().expect("valid literal"));
    }
    out
}

fn is_column2_family(lambda: &Partition) -> bool {
    let parts = lambda.parts();
    parts.len() >= 2
        && parts[0] == 2
        && parts[1] == 2
        && parts[2..].iter().all(|&p| p == 1)
}

fn column_partition(cols: &[u64]) -> Partition {
    let mut acc = Partition::empty();
    for &k in cols {
        acc = acc.add(&Partition::column(k));
    }
    acc
}

fn single_column_block(k: u64, kind: BlockKind, ell: u64) -> Option<Block> {
    let sign = match kind {
        BlockKind::SmPositive => Sign::Plus,
        BlockKind::AmPositive => Sign::Minus,
    };
    let (witness, justification) = if k <= 14 {
        (base_table(k, sign)?, Justification::BaseTable)
    } else {
        (
            construct_self_conjugate(k, sign).ok()?.partition,
            Justification::SignTheorem,
        )
    };
    if witness.len() as u64 > ell {
        return None;
    }
    Some(Block {
        partition: Partition::column(k),
        kind,
        justification,
    })
}

fn direct_block(cols: &[u64], kind: BlockKind, ell: u64) -> Option<Block> {
    let partition = column_partition(cols);
    if partition.weight() > DIRECT_CHECK_CAP {
        return None;
    }
    let witness = match kind {
        BlockKind::SmPositive => sm_witness(&partition, ell).ok()?,
        BlockKind::AmPositive => am_witness(&partition, ell).ok()?,
    };
    witness.map(|_| Block {
        partition,
        kind,
        justification: Justification::DirectComputation,
    })
}

/// Produces a certificate that sm(λ, ℓ) > 0, or a failure value.
pub fn certify(lambda: &Partition, ell: u64) -> CertifyOutcome {
    if lambda.is_empty() {
        return CertifyOutcome::MethodGap {
            detail: "empty target: sm(0, n) = 1 holds trivially, no columns to decompose".into(),
        };
    }
    for exc in exceptional_targets() {
        if *lambda == exc {
            return CertifyOutcome::Exceptional {
                matched: exc.to_string(),
            };
        }
    }
    if is_column2_family(lambda) {
        return CertifyOutcome::Undecided {
            family: "2,2,1^k".into(),
        };
    }

    match build_blocks(lambda, ell) {
        Some(blocks) => CertifyOutcome::Certified {
            certificate: assemble(lambda.clone(), ell, blocks),
        },
        None => match rescue(lambda, ell) {
            Some(cert) => CertifyOutcome::Certified { certificate: cert },
            None => CertifyOutcome::MethodGap {
                detail: format!(
                    "no verifiable block decomposition of {lambda} at ell = {ell} \
                     within the direct-check cap {DIRECT_CHECK_CAP}"
                ),
            },
        },
    }
}

/// The column case analysis. Returns an unordered block list with an even
/// number of am blocks, or None when some required claim fails its check.
fn build_blocks(lambda: &Partition, ell: u64) -> Option<Vec<Block>> {
    let columns = lambda.column_multiset();
    let mut exceptional: Vec<u64> = columns
        .iter()
        .copied()
        .filter(|k| X_S.contains(k))
        .collect();
    let mut plain: Vec<u64> = columns
        .iter()
        .copied()
        .filter(|k| !X_S.contains(k))
        .collect();
    plain.sort_unstable(); // ascending: cheapest partners first
    exceptional.sort_unstable();

    let mut blocks = Vec::new();
    match exceptional.len() {
        0 => {}
        1 => {
            let r = exceptional[0];
            if r != 2 {
                // r ∈ {3,4,7,8,12}, all am-positive singles
                if let Some(pos) = plain.iter().position(|k| !X_A.contains(k)) {
                    let k = plain.remove(pos);
                    blocks.push(single_column_block(r, BlockKind::AmPositive, ell)?);
                    blocks.push(single_column_block(k, BlockKind::AmPositive, ell)?);
                } else {
                    // every other column is am-exceptional; bundle r with one
                    let pos = plain.iter().position(|&k| {
                        direct_block(&[r, k], BlockKind::SmPositive, ell).is_some()
                    })?;
                    let k = plain.remove(pos);
                    blocks.push(direct_block(&[r, k], BlockKind::SmPositive, ell)?);
                }
            } else {
                // the lone exceptional column has length 2
                let pos = plain.iter().position(|&k| {
                    direct_block(&[2, k], BlockKind::SmPositive, ell).is_some()
                })?;
                let k = plain.remove(pos);
                blocks.push(direct_block(&[2, k], BlockKind::SmPositive, ell)?);
            }
        }
        _ => {
            let total: u64 = exceptional.iter().sum();
            let as_one = if total <= DIRECT_CHECK_CAP {
                direct_block(&exceptional, BlockKind::SmPositive, ell)
            } else {
                None
            };
            match as_one {
                Some(block) => blocks.push(block),
                None => {
                    blocks.extend(pair_up_exceptional(&exceptional, &mut plain, ell)?);
                }
            }
        }
    }

    // remaining nonexceptional columns stand alone
    for &k in &plain {
        blocks.push(single_column_block(k, BlockKind::SmPositive, ell)?);
    }
    if blocks.is_empty() {
        return None;
    }
    debug_assert_eq!(
        blocks
            .iter()
            .filter(|b| b.kind == BlockKind::AmPositive)
            .count()
            % 2,
        0,
        "am blocks must pair up"
    );
    Some(blocks)
}

/// Covers two or more exceptional columns when they cannot form one direct
/// block: columns of length 2 pair among themselves, the other lengths are
/// am-positive singles folded in pairs, and leftovers merge into small
/// direct blocks.
fn pair_up_exceptional(
    exceptional: &[u64],
    plain: &mut Vec<u64>,
    ell: u64,
) -> Option<Vec<Block>> {
    let mut blocks = Vec::new();
    let twos = exceptional.iter().filter(|&&k| k == 2).count();
    let mut others: Vec<u64> = exceptional.iter().copied().filter(|&k| k != 2).collect();

    for _ in 0..twos / 2 {
        blocks.push(direct_block(&[2, 2], BlockKind::SmPositive, ell)?);
    }
    if twos % 2 == 1 {
        // partner the leftover 2-column with the smallest other column
        if let Some(&e) = others.first() {
            blocks.push(direct_block(&[2, e], BlockKind::SmPositive, ell)?);
            others.remove(0);
        } else {
            let pos = plain.iter().position(|&k| {
                direct_block(&[2, k], BlockKind::SmPositive, ell).is_some()
            })?;
            let k = plain.remove(pos);
            blocks.push(direct_block(&[2, k], BlockKind::SmPositive, ell)?);
        }
    }
    if others.len() % 2 == 1 {
        // fix am parity: borrow an am-positive plain column, else merge the
        // smallest leftover into a direct block with a plain column
        if let Some(pos) = plain.iter().position(|k| !X_A.contains(k)) {
            let k = plain.remove(pos);
            blocks.push(single_column_block(k, BlockKind::AmPositive, ell)?);
        } else {
            let e = others.remove(0);
            let pos = plain.iter().position(|&k| {
                direct_block(&[e, k], BlockKind::SmPositive, ell).is_some()
            })?;
            let k = plain.remove(pos);
            blocks.push(direct_block(&[e, k], BlockKind::SmPositive, ell)?);
        }
    }
    for &e in &others {
        blocks.push(single_column_block(e, BlockKind::AmPositive, ell)?);
    }
    Some(blocks)
}

/// Single-block certificate for small targets; the last resort when the
/// column analysis fails but sm(λ, ℓ) is in fact positive.
fn rescue(lambda: &Partition, ell: u64) -> Option<Certificate> {
    if lambda.weight() > DIRECT_CHECK_CAP {
        return None;
    }
    sm_witness(lambda, ell).ok()?.map(|_| {
        assemble(
            lambda.clone(),
            ell,
            vec![Block {
                partition: lambda.clone(),
                kind: BlockKind::SmPositive,
                justification: Justification::DirectComputation,
            }],
        )
    })
}

/// Orders blocks (am pairs first, then sm) and records the fold rules.
fn assemble(target: Partition, ell: u64, mut blocks: Vec<Block>) -> Certificate {
    blocks.sort_by(|a, b| {
        let rank = |k: BlockKind| match k {
            BlockKind::AmPositive => 0,
            BlockKind::SmPositive => 1,
        };
        rank(a.kind)
            .cmp(&rank(b.kind))
            .then_with(|| b.partition.cmp(&a.partition))
    });
    let mut combination = Vec::new();
    let mut acc = blocks[0].kind;
    for block in &blocks[1..] {
        let (rule, next) = match (acc, block.kind) {
            (BlockKind::SmPositive, BlockKind::SmPositive) => {
                (SemigroupRule::SmSm, BlockKind::SmPositive)
            }
            (BlockKind::AmPositive, BlockKind::AmPositive) => {
                (SemigroupRule::AmAm, BlockKind::SmPositive)
            }
            _ => (SemigroupRule::Mixed, BlockKind::AmPositive),
        };
        combination.push(rule);
        acc = next;
    }
    debug_assert_eq!(acc, BlockKind::SmPositive, "fold must end sm-positive");
    Certificate {
        target,
        ell,
        blocks,
        combination,
    }
}

/// Re-checks a certificate from scratch: block reassembly, every positivity
/// claim (by direct computation for small blocks, by witness citation for
/// single columns), and the fold's kind algebra. Never calls the generator.
pub fn verify_certificate(cert: &Certificate) -> bool {
    // blocks must reassemble the target columns
    let mut cols: Vec<u64> = Vec::new();
    for b in &cert.blocks {
        cols.extend(b.partition.column_multiset());
    }
    cols.sort_unstable_by(|a, b| b.cmp(a));
    if cols != cert.target.column_multiset() {
        return false;
    }
    if cert.blocks.is_empty() {
        return false;
    }

    for block in &cert.blocks {
        if !verify_block(block, cert.ell) {
            return false;
        }
    }

    if cert.combination.len() + 1 != cert.blocks.len() {
        return false;
    }
    let mut acc = cert.blocks[0].kind;
    for (rule, block) in cert.combination.iter().zip(&cert.blocks[1..]) {
        acc = match (rule, acc, block.kind) {
            (SemigroupRule::SmSm, BlockKind::SmPositive, BlockKind::SmPositive) => {
                BlockKind::SmPositive
            }
            (SemigroupRule::AmAm, BlockKind::AmPositive, BlockKind::AmPositive) => {
                BlockKind::SmPositive
            }
            (SemigroupRule::Mixed, BlockKind::SmPositive, BlockKind::AmPositive)
            | (SemigroupRule::Mixed, BlockKind::AmPositive, BlockKind::SmPositive) => {
                BlockKind::AmPositive
            }
            _ => return false,
        };
    }
    acc == BlockKind::SmPositive
}

fn verify_block(block: &Block, ell: u64) -> bool {
    let p = &block.partition;
    match block.justification {
        Justification::DirectComputation => {
            if p.weight() > DIRECT_CHECK_CAP {
                return false;
            }
            let witness = match block.kind {
                BlockKind::SmPositive => sm_witness(p, ell),
                BlockKind::AmPositive => am_witness(p, ell),
            };
            matches!(witness, Ok(Some(_)))
        }
        Justification::BaseTable | Justification::SignTheorem => {
            // must be a single column with a valid sign witness short enough
            let k = p.weight();
            if p.parts().iter().any(|&x| x != 1) {
                return false;
            }
            let sign = match block.kind {
                BlockKind::SmPositive => Sign::Plus,
                BlockKind::AmPositive => Sign::Minus,
            };
            let witness = match block.justification {
                Justification::BaseTable => base_table(k, sign),
                _ => construct_self_conjugate(k, sign).ok().map(|r| r.partition),
            };
            match witness {
                Some(w) => {
                    w.weight() == k
                        && w.sign_self_conjugate() == Ok(sign)
                        && w.len() as u64 <= ell
                }
                None => false,
            }
        }
    }
}

/// One row of the exceptional scan.
#[derive(Clone, Debug, Serialize)]
pub struct ScanRow {
    pub a: u64,
    pub ell: u64,
    pub sm_witness: Option<Partition>,
    pub am_witness: Option<Partition>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExceptionalScan {
    pub max_a: u64,
    pub x_s: Vec<u64>,
    pub x_a: Vec<u64>,
    pub rows: Vec<ScanRow>,
}

/// Classifies a = 1..max_a by the vanishing of sm(1^a, ℓ(a)) and
/// am(1^a, ℓ(a)), with a witness μ or ν whenever positive.
pub fn scan_exceptional(max_a: u64) -> Result<ExceptionalScan> {
    if max_a > 20 {
        return Err(Error::CapExceeded(format!(
            "scan-exceptional max_a {max_a} > 20: character sums above 𝔖_20 are not desk scale"
        )));
    }
    let mut rows = Vec::new();
    let mut x_s = Vec::new();
    let mut x_a = Vec::new();
    for a in 1..=max_a {
        let ell = length_bound(a);
        let column = Partition::column(a);
        let smw = sm_witness(&column, ell)?;
        let amw = am_witness(&column, ell)?;
        if smw.is_none() {
            x_s.push(a);
        }
        if amw.is_none() {
            x_a.push(a);
        }
        rows.push(ScanRow {
            a,
            ell,
            sm_witness: smw,
            am_witness: amw,
        });
    }
    Ok(ExceptionalScan {
        max_a,
        x_s,
        x_a,
        rows,
    })
}

/// The tabulated exception list for the sm(·,7) sweep, restricted to a
/// weight cap: the columns 1^r for r in X_s plus (2,1,1), (3,1,1), (2,1^7).
pub fn tabulated_small_values_exceptions(weight_cap: u64) -> Vec<Partition> {
    let mut out: Vec<Partition> = X_S
        .iter()
        .filter(|&&r| r <= weight_cap)
        .map(|&r| Partition::column(r))
        .collect();
    for s in ["2,1,1", "3,1,1", "2,1^7"] {
        let p: Partition = s.parse().expect("valid literal");
        if p.weight() <= weight_cap {
            out.push(p);
        }
    }
    out.sort();
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct SmallValuesRow {
    pub lambda: Partition,
    pub positive: bool,
    pub tabulated_exception: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SmallValuesReport {
    pub weight_cap: u64,
    pub rows: Vec<SmallValuesRow>,
    pub zero_cases: Vec<Partition>,
    /// zero sm(·,7) but absent from the tabulated exception list
    pub unexpected_zeros: Vec<Partition>,
    /// positive sm(·,7) but present in the tabulated exception list
    pub unexpected_positives: Vec<Partition>,
    pub matches_tabulated: bool,
}

/// Sweeps every λ with |λ| ≤ weight_cap and ℓ(λ) ≤ 14, classifying the
/// vanishing of sm(λ, 7) against the tabulated exception list.
pub fn reproduce_small_values(weight_cap: u64) -> Result<SmallValuesReport> {
    if weight_cap > 13 {
        return Err(Error::CapExceeded(format!(
            "small-values weight cap {weight_cap} > 13"
        )));
    }
    let tabulated = tabulated_small_values_exceptions(weight_cap);
    let mut rows = Vec::new();
    let mut zero_cases = Vec::new();
    let mut unexpected_zeros = Vec::new();
    let mut unexpected_positives = Vec::new();
    for d in 1..=weight_cap {
        for lambda in enumerate_partitions(d, Some(14)) {
            let positive = sm_witness(&lambda, 7)?.is_some();
            let tabulated_exception = tabulated.contains(&lambda);
            if !positive {
                zero_cases.push(lambda.clone());
                if !tabulated_exception {
                    unexpected_zeros.push(lambda.clone());
                }
            } else if tabulated_exception {
                unexpected_positives.push(lambda.clone());
            }
            rows.push(SmallValuesRow {
                lambda,
                positive,
                tabulated_exception,
            });
        }
    }
    let matches_tabulated = unexpected_zeros.is_empty() && unexpected_positives.is_empty();
    Ok(SmallValuesReport {
        weight_cap,
        rows,
        zero_cases,
        unexpected_zeros,
        unexpected_positives,
        matches_tabulated,
    })
}

/// ℓ used by the two-column dichotomy: max(7, ⌈√(a+2)⌉).
pub fn column2_ell(a: u64) -> u64 {
    ceil_sqrt(a + 2).max(7)
}
