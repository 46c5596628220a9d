//! Construction of self-conjugate partitions of prescribed weight, sign and
//! bounded length.
//!
//! Three regimes:
//! - `a ≤ 14`: a fixed base table (one partition per achievable sign).
//! - `a ≥ 100`: closed-form candidate pairs. For even residue r = a − b²
//!   (b = ⌊√a⌋) the pair is built around a b×b square; for odd residue around
//!   a (b−1)-square. The two candidates differ by exactly one box above the
//!   diagonal, so they realize both signs.
//! - `15 ≤ a ≤ 99`: the same formulas are attempted, and every output is
//!   validated (weight, self-conjugacy, sign, length). Whenever a candidate
//!   fails validation the builder falls back to a deterministic exhaustive
//!   search over self-conjugate partitions, first in enumeration order.
//!
//! Candidates are canonicalized by sorting the generated part multiset, and
//! always validated before being returned.

use serde::Serialize;

use crate::partition::{Partition, Sign};
use crate::{Error, Result};

/// Column lengths a with sm(1^a, ℓ) = 0 at ℓ = max(⌊√a⌋+2, 12).
pub const X_S: [u64; 6] = [2, 3, 4, 7, 8, 12];
/// Column lengths a with am(1^a, ℓ) = 0 at the same ℓ.
pub const X_A: [u64; 6] = [1, 2, 5, 6, 10, 14];

/// ℓ(a) = max(⌊√a⌋ + 2, 12): the length budget for a weight-a witness.
pub fn length_bound(a: u64) -> u64 {
    (isqrt(a) + 2).max(12)
}

pub(crate) fn isqrt(a: u64) -> u64 {
    if a == 0 {
        return 0;
    }
    let mut x = (a as f64).sqrt() as u64;
    while (x + 1) * (x + 1) <= a {
        x += 1;
    }
    while x * x > a {
        x -= 1;
    }
    x
}

pub(crate) fn ceil_sqrt(a: u64) -> u64 {
    let s = isqrt(a);
    if s * s == a {
        s
    } else {
        s + 1
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    BaseTable,
    EvenCase,
    OddCase,
    ExhaustiveFallback,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstructionResult {
    pub partition: Partition,
    pub target_sign: Sign,
    pub method: Method,
    pub length_bound_used: u64,
}

/// The fixed table for a ≤ 14: sign +1 entries exist exactly for a ∉ X_s,
/// sign −1 entries exactly for a ∉ X_a.
pub fn base_table(a: u64, sign: Sign) -> Option<Partition> {
    let parts: &[u64] = match (a, sign) {
        (1, Sign::Plus) => &[1],
        (5, Sign::Plus) => &[3, 1, 1],
        (6, Sign::Plus) => &[3, 2, 1],
        (9, Sign::Plus) => &[5, 1, 1, 1, 1],
        (10, Sign::Plus) => &[5, 2, 1, 1, 1],
        (11, Sign::Plus) => &[4, 3, 3, 1],
        (13, Sign::Plus) => &[7, 1, 1, 1, 1, 1, 1],
        (14, Sign::Plus) => &[7, 2, 1, 1, 1, 1, 1],
        (3, Sign::Minus) => &[2, 1],
        (4, Sign::Minus) => &[2, 2],
        (7, Sign::Minus) => &[4, 1, 1, 1],
        (8, Sign::Minus) => &[4, 2, 1, 1],
        (9, Sign::Minus) => &[3, 3, 3],
        (11, Sign::Minus) => &[6, 1, 1, 1, 1, 1],
        (12, Sign::Minus) => &[6, 2, 1, 1, 1, 1],
        (13, Sign::Minus) => &[5, 3, 3, 1, 1],
        _ => return None,
    };
    Some(Partition::new(parts.to_vec()).expect("table entries are partitions"))
}

/// Componentwise sum of (v repeated `count`) with columns of ones of the
/// given heights, e.g. block(b, b−2, &[r₁, 2]) = (b^{b−2}) + (1^{r₁}) + (1²).
fn block(v: u64, count: u64, bumps: &[u64]) -> Vec<u64> {
    let len = bumps.iter().copied().max().unwrap_or(0).max(count) as usize;
    let mut parts = vec![0u64; len];
    for p in parts.iter_mut().take(count as usize) {
        *p += v;
    }
    for &bump in bumps {
        for p in parts.iter_mut().take(bump as usize) {
            *p += 1;
        }
    }
    parts
}

fn candidate(group: Vec<u64>, tail: &[u64]) -> Partition {
    let mut parts = group;
    parts.extend_from_slice(tail);
    Partition::from_unsorted(parts)
}

/// The two closed-form candidates for a ≥ 15; the first has ⌊(a−s)/2⌋ boxes
/// above the diagonal for the larger square side s, the second one more.
pub fn paper_candidates(a: u64) -> Option<(Partition, Partition)> {
    if a < 15 {
        return None;
    }
    let b = isqrt(a);
    let r = a - b * b;
    if r % 2 == 0 {
        let r1 = r / 2;
        let alpha = candidate(block(b, b, &[r1]), &[r1]);
        let beta = if r1 <= b.saturating_sub(2) {
            candidate(block(b, b - 2, &[r1, 2]), &[b - 2, b - 2, r1, 2])
        } else {
            // r1 ∈ {b−1, b}
            candidate(
                block(b + 1, b - 2, &[r1 + 4 - b]),
                &[b - 2, b - 2, b - 2, r1 + 4 - b],
            )
        };
        Some((alpha, beta))
    } else {
        let d = b - 1;
        let r1 = (r - 1) / 2;
        let gamma = candidate(block(d + 1, d, &[r1, 1]), &[d, r1, 1]);
        let delta = if r1 <= d.saturating_sub(2) {
            candidate(block(d + 1, d - 2, &[r1, 5]), &[d - 2, d - 2, d - 2, r1, 5])
        } else {
            candidate(
                block(d + 2, d - 2, &[r1 + 7 - d]),
                &[d - 2, d - 2, d - 2, d - 2, r1 + 7 - d],
            )
        };
        Some((gamma, delta))
    }
}

fn validate(p: &Partition, a: u64, bound: u64) -> Option<Sign> {
    if p.weight() != a || p.len() as u64 > bound {
        return None;
    }
    p.sign_self_conjugate().ok()
}

/// All self-conjugate partitions of `a` with length ≤ `max_len`, in
/// enumeration order (decreasing lexicographic). Generated through the
/// bijection with partitions into distinct odd principal hook lengths.
pub fn self_conjugate_partitions(a: u64, max_len: u64) -> Vec<Partition> {
    let max_hook = 2 * max_len.saturating_sub(1) + 1;
    let mut hooks = Vec::new();
    let mut out = Vec::new();
    collect_hooks(a, max_hook.min(2 * a + 1), &mut hooks, &mut out);
    out.sort_unstable_by(|x, y| y.cmp(x));
    out.retain(|p| p.len() as u64 <= max_len);
    out
}

fn collect_hooks(rem: u64, max_hook: u64, hooks: &mut Vec<u64>, out: &mut Vec<Partition>) {
    if rem == 0 {
        out.push(from_hooks(hooks));
        return;
    }
    let mut h = max_hook.min(rem);
    if h % 2 == 0 {
        h -= 1;
    }
    while h >= 1 {
        // remaining hooks are < h, odd, distinct: they can absorb at most
        // (h−2) + (h−4) + ... which is ((h−1)/2)² in total
        let slack = ((h - 1) / 2) * ((h - 1) / 2);
        if h + slack >= rem {
            hooks.push(h);
            collect_hooks(rem - h, h - 1, hooks, out);
            hooks.pop();
        }
        if h == 1 {
            break;
        }
        h -= 2;
    }
}

fn from_hooks(hooks: &[u64]) -> Partition {
    // hook h_i = 2(λ_i − i) + 1 with rows 1..=d on the diagonal
    let d = hooks.len();
    let mut parts: Vec<u64> = hooks
        .iter()
        .enumerate()
        .map(|(i, &h)| (h - 1) / 2 + i as u64 + 1)
        .collect();
    let mut row = d as u64 + 1;
    loop {
        let count = parts[..d].iter().filter(|&&p| p >= row).count() as u64;
        if count == 0 {
            break;
        }
        parts.push(count);
        row += 1;
    }
    Partition::new(parts).expect("hook reconstruction is monotone")
}

/// Builds a self-conjugate partition of weight `a`, requested sign, and
/// length ≤ max(⌊√a⌋+2, 12). Rejects the exceptional (a, sign) pairs.
pub fn construct_self_conjugate(a: u64, sign: Sign) -> Result<ConstructionResult> {
    let bound = length_bound(a);
    if sign == Sign::Plus && X_S.contains(&a) {
        return Err(Error::ExceptionalSign { a, sign, set: "X_s" });
    }
    if sign == Sign::Minus && X_A.contains(&a) {
        return Err(Error::ExceptionalSign { a, sign, set: "X_a" });
    }
    if a <= 14 {
        let partition = base_table(a, sign).ok_or(Error::ExceptionalSign {
            a,
            sign,
            set: if sign == Sign::Plus { "X_s" } else { "X_a" },
        })?;
        debug_assert_eq!(validate(&partition, a, bound), Some(sign));
        return Ok(ConstructionResult {
            partition,
            target_sign: sign,
            method: Method::BaseTable,
            length_bound_used: bound,
        });
    }

    let method = if (a - isqrt(a) * isqrt(a)) % 2 == 0 {
        Method::EvenCase
    } else {
        Method::OddCase
    };
    if let Some((first, second)) = paper_candidates(a) {
        for cand in [first, second] {
            if validate(&cand, a, bound) == Some(sign) {
                return Ok(ConstructionResult {
                    partition: cand,
                    target_sign: sign,
                    method,
                    length_bound_used: bound,
                });
            }
        }
    }

    // fallback: first self-conjugate partition of a with the right sign in
    // enumeration order
    let partition = self_conjugate_partitions(a, bound)
        .into_iter()
        .find(|p| p.sign_self_conjugate() == Ok(sign))
        .unwrap_or_else(|| panic!("no self-conjugate partition of {a} with sign {sign} and length ≤ {bound}"));
    Ok(ConstructionResult {
        partition,
        target_sign: sign,
        method: Method::ExhaustiveFallback,
        length_bound_used: bound,
    })
}
