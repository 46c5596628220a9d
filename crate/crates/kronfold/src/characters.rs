//! Exact irreducible characters of the symmetric group 𝔖_D.
//!
//! Evaluation uses the Murnaghan–Nakayama recursion on first-column hook
//! lengths (beta-sets): removing a border strip of size t is subtracting t
//! from one beta number while keeping the set distinct, with sign given by
//! the number of beta numbers jumped over. The recursion strips the longest
//! remaining cycle first and memoizes on (remaining shape, remaining cycles);
//! the memo is a concurrent map, and since values are pure, racing inserts
//! are benign.

use dashmap::DashMap;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;

use crate::partition::Partition;
use crate::scalar::ExactInt;
use crate::{Error, Int, Nat, Result};

/// A partition of D read as the cycle lengths of a conjugacy class of 𝔖_D.
pub type CycleType = Partition;

/// D! as an exact integer.
pub fn factorial(d: u64) -> Nat {
    let mut f = Nat::one();
    for k in 2..=d {
        f *= Nat::from(k);
    }
    f
}

/// z_μ = Π i^{m_i} · m_i!, the order of the centralizer of the class μ.
pub fn class_order(mu: &CycleType) -> Nat {
    let mut z = Nat::one();
    let parts = mu.parts();
    let mut i = 0;
    while i < parts.len() {
        let p = parts[i];
        let mut mult = 0u64;
        while i < parts.len() && parts[i] == p {
            mult += 1;
            i += 1;
        }
        for _ in 0..mult {
            z *= Nat::from(p);
        }
        z *= factorial(mult);
    }
    z
}

/// |class of μ| = D!/z_μ.
pub fn class_size(mu: &CycleType) -> Nat {
    let d = mu.weight();
    let z = class_order(mu);
    let fact = factorial(d);
    debug_assert!((&fact % &z).is_zero());
    fact / z
}

/// Cycle type of σ² for σ of cycle type μ: odd cycles persist, even cycles
/// split in two.
pub fn square_cycle_type(mu: &CycleType) -> CycleType {
    let mut parts = Vec::with_capacity(mu.len() * 2);
    for &c in mu.parts() {
        if c % 2 == 1 {
            parts.push(c);
        } else {
            parts.push(c / 2);
            parts.push(c / 2);
        }
    }
    Partition::from_unsorted(parts)
}

/// Memoized Murnaghan–Nakayama evaluator over an exact integer scalar.
pub struct CharCache<I> {
    memo: DashMap<(Vec<u64>, Vec<u64>), I>,
}

impl<I: ExactInt> Default for CharCache<I> {
    fn default() -> Self {
        Self::new()
    }
}

impl<I: ExactInt> CharCache<I> {
    pub fn new() -> Self {
        CharCache {
            memo: DashMap::new(),
        }
    }

    /// χ_λ(μ), requiring |λ| = |μ|.
    pub fn character(&self, lambda: &Partition, mu: &CycleType) -> Result<I> {
        if lambda.weight() != mu.weight() {
            return Err(Error::WeightMismatch(lambda.weight(), mu.weight()));
        }
        Ok(self.mn(lambda.parts().to_vec(), mu.parts()))
    }

    fn mn(&self, shape: Vec<u64>, cycles: &[u64]) -> I {
        if shape.is_empty() {
            debug_assert!(cycles.is_empty());
            return I::one();
        }
        let key = (shape.clone(), cycles.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let t = cycles[0];
        let rest = &cycles[1..];
        let n = shape.len();
        let beta: Vec<u64> = shape
            .iter()
            .enumerate()
            .map(|(i, &p)| p + (n - 1 - i) as u64)
            .collect();
        let mut total = I::zero();
        for (i, &b) in beta.iter().enumerate() {
            if b < t {
                continue;
            }
            let nb = b - t;
            if beta.contains(&nb) {
                continue;
            }
            let height = beta.iter().filter(|&&x| nb < x && x < b).count();
            let mut nbeta = beta.clone();
            nbeta[i] = nb;
            nbeta.sort_unstable_by(|a, b| b.cmp(a));
            let m = nbeta.len();
            let sub_shape: Vec<u64> = nbeta
                .iter()
                .enumerate()
                .map(|(j, &x)| x - (m - 1 - j) as u64)
                .filter(|&p| p > 0)
                .collect();
            let sub = self.mn(sub_shape, rest);
            if height % 2 == 0 {
                total = total + sub;
            } else {
                total = total - sub;
            }
        }
        self.memo.insert(key, total.clone());
        total
    }

    /// Number of memoized subproblems, for diagnostics.
    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }
}

/// Process-wide cache used by every coefficient formula in the crate.
static SHARED: Lazy<CharCache<Int>> = Lazy::new(CharCache::new);

/// χ_λ(μ) through the process-wide cache.
pub fn character(lambda: &Partition, mu: &CycleType) -> Result<Int> {
    SHARED.character(lambda, mu)
}

/// dim [λ] by the hook length formula; cross-checks χ_λ at the identity.
pub fn dimension(lambda: &Partition) -> Nat {
    let d = lambda.weight();
    let conj = lambda.conjugate();
    let mut hooks = Nat::one();
    for (i, &p) in lambda.parts().iter().enumerate() {
        for j in 0..p as usize {
            let arm = p - 1 - j as u64;
            let leg = conj.parts()[j] - 1 - i as u64;
            hooks *= Nat::from(arm + leg + 1);
        }
    }
    let fact = factorial(d);
    assert!(
        (&fact % &hooks).is_zero(),
        "hook product must divide {d}! for {lambda}"
    );
    fact / hooks
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn class_order_examples() {
        assert_eq!(class_order(&p("1^4")), factorial(4));
        assert_eq!(class_order(&p("2,1")), Nat::from(2u32));
        assert_eq!(class_order(&p("3")), Nat::from(3u32));
    }

    #[test]
    fn square_examples() {
        assert_eq!(square_cycle_type(&p("2")), p("1,1"));
        assert_eq!(square_cycle_type(&p("4")), p("2,2"));
        assert_eq!(square_cycle_type(&p("3")), p("3"));
        assert_eq!(square_cycle_type(&p("6,4,3")), p("3,3,3,2,2"));
    }

    #[test]
    fn character_examples() {
        // trivial and sign representations
        for mu in crate::partition::enumerate_partitions(5, None) {
            assert_eq!(character(&p("5"), &mu).unwrap(), Int::from(1));
            let expect = if (5 - mu.len() as u64) % 2 == 0 { 1 } else { -1 };
            assert_eq!(character(&p("1^5"), &mu).unwrap(), Int::from(expect));
        }
        assert_eq!(character(&p("2,1"), &p("3")).unwrap(), Int::from(-1));
        assert!(character(&p("2,1"), &p("2,2")).is_err());
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(dimension(&p("2,2")), Nat::from(2u32));
        assert_eq!(dimension(&p("7")), Nat::from(1u32));
        assert_eq!(dimension(&p("2,1")), Nat::from(2u32));
        assert_eq!(dimension(&p("3,2")), Nat::from(5u32));
    }

    #[test]
    fn generic_cache_matches_shared() {
        let small: CharCache<i64> = CharCache::new();
        for lam in crate::partition::enumerate_partitions(6, None) {
            for mu in crate::partition::enumerate_partitions(6, None) {
                let a = small.character(&lam, &mu).unwrap();
                let b = character(&lam, &mu).unwrap();
                assert_eq!(Int::from(a), b);
            }
        }
    }
}
