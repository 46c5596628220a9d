//! Plethysm of complete homogeneous symmetric functions in the power-sum
//! basis, and the Kostka upper bound machinery around it.
//!
//! Everything runs in the p-basis: p_k[f] substitutes p_j ↦ p_{jk} in f, and
//! h_d[f] = Σ over ν ⊢ d of (1/z_ν) Π_i p_{ν_i}[f]. Schur coefficients come
//! out by pairing with characters, since ⟨p_ρ, s_λ⟩ = χ_λ(ρ).

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};

use num_integer::binomial;
use num_traits::{One, Signed, Zero};

use crate::characters::{character, class_order};
use crate::partition::{enumerate_partitions, Partition};
use crate::{Error, Int, Nat, Rat, Result};

/// Degrees d·m above this cap are rejected; the support alone stays small,
/// but Schur extraction walks every character of 𝔖_{dm}.
static PLETHYSM_CAP: AtomicU64 = AtomicU64::new(14);

pub fn plethysm_cap() -> u64 {
    PLETHYSM_CAP.load(Ordering::Relaxed)
}

pub fn set_plethysm_cap(cap: u64) {
    PLETHYSM_CAP.store(cap, Ordering::Relaxed);
}

/// A homogeneous symmetric function stored on the power-sum basis with exact
/// rational coefficients; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct SymFuncP {
    degree: u64,
    terms: BTreeMap<Partition, Rat>,
}

impl SymFuncP {
    pub fn zero(degree: u64) -> Self {
        SymFuncP {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// h_m = Σ over ρ ⊢ m of p_ρ / z_ρ.
    pub fn h(m: u64) -> Self {
        let mut terms = BTreeMap::new();
        for rho in enumerate_partitions(m, None) {
            let z = Rat::from(Int::from(class_order(&rho)));
            terms.insert(rho, Rat::one() / z);
        }
        SymFuncP { degree: m, terms }
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rat)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, rho: &Partition) -> Rat {
        self.terms.get(rho).cloned().unwrap_or_else(Rat::zero)
    }

    fn insert_add(&mut self, rho: Partition, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(rho.clone()).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&rho);
        }
    }

    /// p_k[self]: every power-sum index is dilated by k.
    pub fn plethysm_p(&self, k: u64) -> SymFuncP {
        let mut out = SymFuncP::zero(self.degree * k);
        for (rho, c) in &self.terms {
            let dilated =
                Partition::from_unsorted(rho.parts().iter().map(|&p| p * k).collect());
            out.insert_add(dilated, c.clone());
        }
        out
    }

    pub fn mul(&self, other: &SymFuncP) -> SymFuncP {
        let mut out = SymFuncP::zero(self.degree + other.degree);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut parts = a.parts().to_vec();
                parts.extend_from_slice(b.parts());
                out.insert_add(Partition::from_unsorted(parts), ca * cb);
            }
        }
        out
    }

    pub fn add_scaled(&mut self, other: &SymFuncP, scale: &Rat) {
        debug_assert_eq!(self.degree, other.degree);
        for (rho, c) in &other.terms {
            self.insert_add(rho.clone(), c * scale);
        }
    }

    /// ⟨self, s_λ⟩ = Σ_ρ coeff(p_ρ)·χ_λ(ρ).
    pub fn schur_coefficient(&self, lambda: &Partition) -> Result<Rat> {
        if lambda.weight() != self.degree {
            return Err(Error::WeightMismatch(lambda.weight(), self.degree));
        }
        let mut acc = Rat::zero();
        for (rho, c) in &self.terms {
            acc += c * Rat::from(character(lambda, rho)?);
        }
        Ok(acc)
    }

    /// Specialization p_j ↦ k for all j, i.e. evaluation at k ones.
    pub fn eval_at_ones(&self, k: u64) -> Rat {
        let mut acc = Rat::zero();
        let k = Rat::from(Int::from(k));
        for (rho, c) in &self.terms {
            let mut term = c.clone();
            for _ in 0..rho.len() {
                term *= k.clone();
            }
            acc += term;
        }
        acc
    }
}

/// h_d[h_m] expanded exactly in the power-sum basis at degree d·m.
pub fn plethysm_h_h(d: u64, m: u64) -> Result<SymFuncP> {
    let degree = d
        .checked_mul(m)
        .ok_or_else(|| Error::CapExceeded("plethysm degree overflow".into()))?;
    if degree > plethysm_cap() {
        return Err(Error::CapExceeded(format!(
            "plethysm degree {degree} exceeds cap {}",
            plethysm_cap()
        )));
    }
    if d == 0 {
        // h_0 = 1; the empty product
        let mut out = SymFuncP::zero(0);
        out.insert_add(Partition::empty(), Rat::one());
        return Ok(out);
    }
    let inner = SymFuncP::h(m);
    // dilations p_k[h_m], reused across ν
    let mut dilated: BTreeMap<u64, SymFuncP> = BTreeMap::new();
    for k in 1..=d {
        dilated.insert(k, inner.plethysm_p(k));
    }
    let mut out = SymFuncP::zero(degree);
    for nu in enumerate_partitions(d, None) {
        let mut prod: Option<SymFuncP> = None;
        for &part in nu.parts() {
            let factor = &dilated[&part];
            prod = Some(match prod {
                None => factor.clone(),
                Some(acc) => acc.mul(factor),
            });
        }
        let prod = prod.expect("d ≥ 1");
        let z = Rat::from(Int::from(class_order(&nu)));
        out.add_scaled(&prod, &(Rat::one() / z));
    }
    Ok(out)
}

/// a_λ(d[m]) = ⟨h_d[h_m], s_λ⟩; integral and nonnegative.
pub fn plethysm_coefficient(lambda: &Partition, d: u64, m: u64) -> Result<Nat> {
    let dm = d
        .checked_mul(m)
        .ok_or_else(|| Error::CapExceeded("plethysm degree overflow".into()))?;
    if lambda.weight() != dm {
        return Err(Error::WeightMismatch(lambda.weight(), dm));
    }
    let f = plethysm_h_h(d, m)?;
    let c = f.schur_coefficient(lambda)?;
    assert!(
        c.is_integer(),
        "plethysm coefficient a_{lambda}({d}[{m}]) = {c} is not integral — arithmetic bug"
    );
    let n = c.to_integer();
    assert!(
        !n.is_negative(),
        "plethysm coefficient a_{lambda}({d}[{m}]) = {n} is negative — arithmetic bug"
    );
    Ok(n.to_biguint().expect("nonnegative"))
}

/// s_λ(1^k): the hook content formula Π (k + j − i)/hook(i,j).
pub fn schur_dimension_at_ones(lambda: &Partition, k: u64) -> Nat {
    if lambda.len() as u64 > k {
        return Nat::zero();
    }
    if lambda.is_empty() {
        return Nat::one();
    }
    let conj = lambda.conjugate();
    let mut num = Nat::one();
    let mut den = Nat::one();
    for (i, &p) in lambda.parts().iter().enumerate() {
        for j in 0..p as usize {
            // contents: k + (j − i) with j − i > −k since i < ℓ(λ) ≤ k
            let content = k + j as u64 - i as u64;
            num *= Nat::from(content);
            let arm = p - 1 - j as u64;
            let leg = conj.parts()[j] - 1 - i as u64;
            den *= Nat::from(arm + leg + 1);
        }
    }
    assert!((&num % &den).is_zero(), "hook content must divide exactly");
    num / den
}

/// Two routes to dim S^d(S^m ℂ^k): the Schur expansion evaluated at k ones,
/// and the closed binomial form. The pair is returned for comparison.
pub fn dimension_oracle(d: u64, m: u64, k: u64) -> Result<(Nat, Nat)> {
    let mut via_schur = Nat::zero();
    for lambda in enumerate_partitions(d * m, Some(k)) {
        let a = plethysm_coefficient(&lambda, d, m)?;
        if a.is_zero() {
            continue;
        }
        via_schur += a * schur_dimension_at_ones(&lambda, k);
    }
    let inner_dim = binomial(Nat::from(k + m - 1), Nat::from(m));
    let closed = binomial(inner_dim + Nat::from(d - 1), Nat::from(d));
    Ok((via_schur, closed))
}
