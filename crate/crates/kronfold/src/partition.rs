//! Integer partitions: the universal index for representations, conjugacy
//! classes and Young diagrams.
//!
//! Partitions are stored as nonincreasing positive parts with zeros trimmed;
//! the empty sequence is the unique partition of 0. The text grammar accepts
//! comma lists (`5,4,4`) and exponent notation (`7,2,1^5`); the canonical
//! rendering is the comma list with runs of four or more identical parts
//! compressed to `part^count`, and `0` for the empty partition.
//!
//! Enumeration is in decreasing lexicographic order on the part vectors, so
//! reports and golden files are byte-stable.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::{Error, Nat, Result};

/// Weights beyond this are rejected at parse time; coefficients, not
/// partitions, need big integers.
pub const MAX_PARSE_WEIGHT: u64 = 1_000_000;

/// Sign of a self-conjugate partition: `Plus` when the number of boxes
/// strictly above the main diagonal is even.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// A partition: nonincreasing sequence of positive integers.
///
/// The derived `Ord` is lexicographic on the part vector; enumeration yields
/// partitions in *decreasing* lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Builds from a nonincreasing sequence; trailing zeros are trimmed.
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse {
                literal: format!("{parts:?}"),
                reason: "parts must be nonincreasing".into(),
            });
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Builds from an arbitrary multiset of parts: sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u64>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The single column `1^k`.
    pub fn column(k: u64) -> Self {
        Partition {
            parts: vec![1; k as usize],
        }
    }

    /// The single row `(c)`.
    pub fn row(c: u64) -> Self {
        if c == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![c] }
        }
    }

    /// The rectangle with `rows` parts equal to `width`.
    pub fn rectangle(rows: u64, width: u64) -> Self {
        if rows == 0 || width == 0 {
            Partition::empty()
        } else {
            Partition {
                parts: vec![width; rows as usize],
            }
        }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// |λ|, the number of boxes.
    pub fn weight(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// ℓ(λ), the number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// λ₁, or 0 for the empty partition.
    pub fn first(&self) -> u64 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Reflection of the Young diagram across the main diagonal.
    pub fn conjugate(&self) -> Partition {
        let first = self.first() as usize;
        let mut parts = Vec::with_capacity(first);
        for col in 0..first as u64 {
            parts.push(self.parts.iter().take_while(|&&p| p > col).count() as u64);
        }
        Partition { parts }
    }

    /// Componentwise sum, the shorter operand padded with zeros.
    pub fn add(&self, other: &Partition) -> Partition {
        let n = self.parts.len().max(other.parts.len());
        let mut parts = Vec::with_capacity(n);
        for i in 0..n {
            parts.push(
                self.parts.get(i).copied().unwrap_or(0) + other.parts.get(i).copied().unwrap_or(0),
            );
        }
        Partition { parts }
    }

    /// Largest r with λ_r ≥ r: the side of the Durfee square.
    pub fn durfee(&self) -> u64 {
        let mut r = 0u64;
        for (i, &p) in self.parts.iter().enumerate() {
            if p >= i as u64 + 1 {
                r = i as u64 + 1;
            } else {
                break;
            }
        }
        r
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Number of boxes strictly above the main diagonal.
    pub fn boxes_above_diagonal(&self) -> u64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| p.saturating_sub(i as u64 + 1))
            .sum()
    }

    /// Sign of a self-conjugate partition; rejects other inputs.
    pub fn sign_self_conjugate(&self) -> Result<Sign> {
        if !self.is_self_conjugate() {
            return Err(Error::NotSelfConjugate(self.clone()));
        }
        if self.boxes_above_diagonal() % 2 == 0 {
            Ok(Sign::Plus)
        } else {
            Ok(Sign::Minus)
        }
    }

    /// Column lengths of the diagram, as a nonincreasing multiset.
    /// Reassembling these columns (componentwise sum of `1^k`) gives λ back.
    pub fn column_multiset(&self) -> Vec<u64> {
        self.conjugate().parts
    }

    /// Dominance order: every prefix sum of `self` is ≥ the one of `other`.
    /// Only meaningful for equal weights.
    pub fn dominates(&self, other: &Partition) -> bool {
        let mut a = 0u64;
        let mut b = 0u64;
        let n = self.parts.len().max(other.parts.len());
        for i in 0..n {
            a += self.parts.get(i).copied().unwrap_or(0);
            b += other.parts.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        let mut pieces = Vec::new();
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let mut run = 1;
            while i + run < self.parts.len() && self.parts[i + run] == p {
                run += 1;
            }
            if run >= 4 {
                pieces.push(format!("{p}^{run}"));
            } else {
                for _ in 0..run {
                    pieces.push(p.to_string());
                }
            }
            i += run;
        }
        f.write_str(&pieces.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let err = |reason: &str| Error::Parse {
            literal: s.to_string(),
            reason: reason.to_string(),
        };
        if trimmed.is_empty() {
            return Err(err("empty literal; the empty partition is written `0`"));
        }
        if trimmed == "0" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        let mut weight = 0u64;
        for token in trimmed.split(',') {
            let token = token.trim();
            let (part, count) = match token.split_once('^') {
                Some((p, c)) => {
                    let part: u64 = p.trim().parse().map_err(|_| err("bad part"))?;
                    let count: u64 = c.trim().parse().map_err(|_| err("bad exponent"))?;
                    (part, count)
                }
                None => (token.parse().map_err(|_| err("bad part"))?, 1),
            };
            if part == 0 {
                return Err(err("parts must be positive"));
            }
            if count == 0 {
                return Err(err("exponents must be positive"));
            }
            weight = weight
                .checked_add(part.checked_mul(count).ok_or_else(|| err("overflow"))?)
                .ok_or_else(|| err("overflow"))?;
            if weight > MAX_PARSE_WEIGHT {
                return Err(err("weight beyond desk scale"));
            }
            for _ in 0..count {
                parts.push(part);
            }
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(err("parts must be nonincreasing"));
        }
        Ok(Partition { parts })
    }
}

/// Streams every partition of `weight` with at most `max_parts` parts and
/// parts at most `max_part`, in decreasing lexicographic order.
pub fn enumerate_with_bounds(
    weight: u64,
    max_parts: Option<u64>,
    max_part: Option<u64>,
) -> PartitionIter {
    let slots = max_parts.unwrap_or(weight);
    let cap = max_part.unwrap_or(weight);
    let mut stack = Vec::new();
    stack.push(Frame {
        prefix: Vec::new(),
        remaining: weight,
        max_part: cap,
        slots,
    });
    PartitionIter { stack }
}

/// Streams every partition of `weight` with at most `max_parts` parts
/// (`None` for unbounded), in decreasing lexicographic order.
pub fn enumerate_partitions(weight: u64, max_parts: Option<u64>) -> PartitionIter {
    enumerate_with_bounds(weight, max_parts, None)
}

struct Frame {
    prefix: Vec<u64>,
    remaining: u64,
    max_part: u64,
    slots: u64,
}

pub struct PartitionIter {
    stack: Vec<Frame>,
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        while let Some(frame) = self.stack.pop() {
            if frame.remaining == 0 {
                return Some(Partition {
                    parts: frame.prefix,
                });
            }
            if frame.slots == 0 || frame.max_part == 0 {
                continue;
            }
            let hi = frame.max_part.min(frame.remaining);
            // smallest feasible first part: the remaining slots must absorb the rest
            let lo = frame.remaining.div_ceil(frame.slots);
            if lo > hi {
                continue;
            }
            // push ascending so the largest first part pops first
            for k in lo..=hi {
                let mut prefix = frame.prefix.clone();
                prefix.push(k);
                self.stack.push(Frame {
                    prefix,
                    remaining: frame.remaining - k,
                    max_part: k,
                    slots: frame.slots - 1,
                });
            }
        }
        None
    }
}

/// p_b(rows, cols): partitions of `b` fitting inside a rows × cols box.
pub fn count_partitions_in_box(b: u64, rows: u64, cols: u64) -> Nat {
    use num_traits::{One, Zero};
    if b > rows.saturating_mul(cols) {
        return Nat::zero();
    }
    let (rows, cols, b) = (rows as usize, cols as usize, b as usize);
    // table[r][w] = partitions of w with at most r parts, each ≤ current col bound
    let mut table = vec![vec![Nat::zero(); b + 1]; rows + 1];
    for row in table.iter_mut() {
        row[0] = Nat::one();
    }
    for c in 1..=cols {
        for r in 1..=rows {
            for w in 1..=b {
                // parts ≤ c with ≤ r of them: either all ≤ c-1 (already in table),
                // or remove one part equal to c
                if w >= c {
                    let add = table[r - 1][w - c].clone();
                    table[r][w] += add;
                }
            }
        }
    }
    table[rows][b].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p("5,4,4").conjugate(), p("3,3,3,3,1"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p("1,1,1").conjugate(), p("3"));
    }

    #[test]
    fn add_examples() {
        assert_eq!(p("5,4").add(&p("2,1")), p("7,5"));
        assert_eq!(p("5,4").add(&Partition::empty()), p("5,4"));
        assert_eq!(p("1,1").add(&p("2")), p("3,1"));
    }

    #[test]
    fn sign_examples() {
        assert_eq!(p("2,1").sign_self_conjugate().unwrap(), Sign::Minus);
        assert_eq!(p("1").sign_self_conjugate().unwrap(), Sign::Plus);
        assert_eq!(p("3,1,1").sign_self_conjugate().unwrap(), Sign::Plus);
        assert!(p("2,1,1").sign_self_conjugate().is_err());
    }

    #[test]
    fn durfee_examples() {
        assert_eq!(p("4,3,1").durfee(), 2);
        assert_eq!(Partition::empty().durfee(), 0);
        assert_eq!(Partition::rectangle(5, 5).durfee(), 5);
    }

    #[test]
    fn enumerate_examples() {
        let got: Vec<_> = enumerate_partitions(4, Some(2)).collect();
        assert_eq!(got, vec![p("4"), p("3,1"), p("2,2")]);
        let zero: Vec<_> = enumerate_partitions(0, Some(3)).collect();
        assert_eq!(zero, vec![Partition::empty()]);
        let three: Vec<_> = enumerate_partitions(3, None).collect();
        assert_eq!(three, vec![p("3"), p("2,1"), p("1,1,1")]);
    }

    #[test]
    fn column_multiset_examples() {
        assert_eq!(p("2,2,1,1").column_multiset(), vec![4, 2]);
        assert_eq!(p("3").column_multiset(), vec![1, 1, 1]);
        assert_eq!(p("3,1,1").column_multiset(), vec![3, 1, 1]);
    }

    #[test]
    fn box_count_examples() {
        use num_traits::One;
        assert_eq!(count_partitions_in_box(2, 2, 2), Nat::from(2u32));
        assert_eq!(count_partitions_in_box(0, 3, 3), Nat::one());
        assert_eq!(count_partitions_in_box(3, 2, 2), Nat::one());
        assert_eq!(count_partitions_in_box(5, 2, 2), Nat::from(0u32));
    }

    #[test]
    fn grammar_roundtrip() {
        assert_eq!(p("1^8").parts(), &[1; 8]);
        assert_eq!(p("7,2,1^5").to_string(), "7,2,1^5");
        assert_eq!(p("5,4,4").to_string(), "5,4,4");
        assert_eq!(p("1,1,1,1").to_string(), "1^4");
        assert_eq!(p("2,2,2,1").to_string(), "2,2,2,1");
        assert_eq!(Partition::empty().to_string(), "0");
        assert_eq!(p("0"), Partition::empty());
        assert!("1,5".parse::<Partition>().is_err());
        assert!("3^0".parse::<Partition>().is_err());
        assert!("".parse::<Partition>().is_err());
    }

    #[test]
    fn boxes_above_diagonal_matches_selfconj_formula() {
        for s in ["1", "2,1", "3,1,1", "4,2,1,1", "5,3,3,1,1"] {
            let lam = p(s);
            assert!(lam.is_self_conjugate());
            assert_eq!(
                lam.boxes_above_diagonal(),
                (lam.weight() - lam.durfee()) / 2
            );
        }
    }
}
