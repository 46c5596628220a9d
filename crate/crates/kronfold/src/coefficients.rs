//! Kronecker, symmetric/antisymmetric Kronecker, sm/am, and Kostka
//! coefficients.
//!
//! Every formula is an inner product of characters over the conjugacy classes
//! of 𝔖_D. Sums are taken over exact integers with the denominator cleared:
//! the class-size weighted sum must be divisible by D! (or 2·D!), and a
//! failed division panics because it can only mean a character bug.
//!
//! `sm`/`am` parallelize over the partitions μ; the per-μ values are collected
//! in enumeration order and reduced sequentially, so results do not depend on
//! the schedule. The positivity-only entry points (`sm_witness`,
//! `am_witness`) instead scan μ in enumeration order and stop at the first
//! positive summand.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use dashmap::DashMap;
use num_traits::{Signed, Zero};
use once_cell::sync::Lazy;
use rayon::prelude::*;
use serde::Serialize;

use crate::characters::{character, class_size, factorial, square_cycle_type, CycleType};
use crate::partition::{enumerate_partitions, Partition, Sign};
use crate::{Error, Int, Nat, Result};

/// Coefficient queries above this weight are rejected; character sums over
/// p(D) classes blow up past desk scale. Overridable at run time.
static MAX_WEIGHT: AtomicU64 = AtomicU64::new(24);

pub fn max_weight() -> u64 {
    MAX_WEIGHT.load(Ordering::Relaxed)
}

pub fn set_max_weight(w: u64) {
    MAX_WEIGHT.store(w, Ordering::Relaxed);
}

fn guard(d: u64) -> Result<()> {
    let cap = max_weight();
    if d > cap {
        Err(Error::WeightCapExceeded(d, cap))
    } else {
        Ok(())
    }
}

fn check_weights(a: &Partition, b: &Partition) -> Result<u64> {
    if a.weight() != b.weight() {
        return Err(Error::WeightMismatch(a.weight(), b.weight()));
    }
    guard(a.weight())?;
    Ok(a.weight())
}

fn exact_nonneg_div(num: Int, den: &Nat, what: &str) -> Nat {
    assert!(
        !num.is_negative(),
        "{what}: negative class sum {num} — character bug"
    );
    let num = num.to_biguint().expect("nonnegative");
    assert!(
        (&num % den).is_zero(),
        "{what}: class sum {num} not divisible by {den} — character bug"
    );
    num / den
}

static CLASS_CACHE: Lazy<DashMap<u64, Arc<Vec<(CycleType, Int)>>>> = Lazy::new(DashMap::new);

fn classes(d: u64) -> Arc<Vec<(CycleType, Int)>> {
    if let Some(c) = CLASS_CACHE.get(&d) {
        return c.clone();
    }
    let data: Vec<(CycleType, Int)> = enumerate_partitions(d, None)
        .map(|rho| {
            let size = Int::from(class_size(&rho));
            (rho, size)
        })
        .collect();
    let arc = Arc::new(data);
    CLASS_CACHE.insert(d, arc.clone());
    arc
}

/// g(λ,μ,ν) = Σ_ρ (1/z_ρ)·χ_λ(ρ)·χ_μ(ρ)·χ_ν(ρ); symmetric in all three
/// arguments and invariant under conjugating two of them.
pub fn kronecker(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<Nat> {
    let d = check_weights(lambda, mu)?;
    check_weights(mu, nu)?;
    let sum: Int = classes(d)
        .par_iter()
        .map(|(rho, size)| {
            let a = character(lambda, rho).expect("weights match");
            let b = character(mu, rho).expect("weights match");
            let c = character(nu, rho).expect("weights match");
            size * a * b * c
        })
        .collect::<Vec<_>>()
        .into_iter()
        .sum();
    Ok(exact_nonneg_div(sum, &factorial(d), "kronecker"))
}

fn sym_alt(lambda: &Partition, mu: &Partition, plus: bool) -> Result<Nat> {
    let d = check_weights(lambda, mu)?;
    let sum: Int = classes(d)
        .par_iter()
        .map(|(rho, size)| {
            let a = character(lambda, rho).expect("weights match");
            let b = character(mu, rho).expect("weights match");
            let sq = character(mu, &square_cycle_type(rho)).expect("weights match");
            let kernel = if plus { &b * &b + sq } else { &b * &b - sq };
            size * a * kernel
        })
        .collect::<Vec<_>>()
        .into_iter()
        .sum();
    let den = factorial(d) * Nat::from(2u32);
    Ok(exact_nonneg_div(
        sum,
        &den,
        if plus { "sym_kron" } else { "alt_kron" },
    ))
}

/// sk(λ,μ): multiplicity of [λ] in S²[μ].
pub fn sym_kron(lambda: &Partition, mu: &Partition) -> Result<Nat> {
    sym_alt(lambda, mu, true)
}

/// ak(λ,μ): multiplicity of [λ] in Λ²[μ]; sk + ak = g(λ,μ,μ).
pub fn alt_kron(lambda: &Partition, mu: &Partition) -> Result<Nat> {
    sym_alt(lambda, mu, false)
}

fn mu_range(d: u64, n: u64) -> Vec<Partition> {
    enumerate_partitions(d, Some(n)).collect()
}

/// sm(λ,n) = Σ over μ ⊢ |λ| with ℓ(μ) ≤ n of sk(λ,μ).
pub fn sm(lambda: &Partition, n: u64) -> Result<Nat> {
    guard(lambda.weight())?;
    let terms = mu_range(lambda.weight(), n)
        .par_iter()
        .map(|mu| sym_kron(lambda, mu))
        .collect::<Result<Vec<_>>>()?;
    Ok(terms.into_iter().sum())
}

/// am(λ,n) = Σ over μ ⊢ |λ| with ℓ(μ) ≤ n of ak(λ,μ).
pub fn am(lambda: &Partition, n: u64) -> Result<Nat> {
    guard(lambda.weight())?;
    let terms = mu_range(lambda.weight(), n)
        .par_iter()
        .map(|mu| alt_kron(lambda, mu))
        .collect::<Result<Vec<_>>>()?;
    Ok(terms.into_iter().sum())
}

/// First μ in enumeration order with sk(λ,μ) > 0, if any.
pub fn sm_witness(lambda: &Partition, n: u64) -> Result<Option<Partition>> {
    guard(lambda.weight())?;
    for mu in enumerate_partitions(lambda.weight(), Some(n)) {
        if !sym_kron(lambda, &mu)?.is_zero() {
            return Ok(Some(mu));
        }
    }
    Ok(None)
}

/// First μ in enumeration order with ak(λ,μ) > 0, if any.
pub fn am_witness(lambda: &Partition, n: u64) -> Result<Option<Partition>> {
    guard(lambda.weight())?;
    for mu in enumerate_partitions(lambda.weight(), Some(n)) {
        if !alt_kron(lambda, &mu)?.is_zero() {
            return Ok(Some(mu));
        }
    }
    Ok(None)
}

/// K_{λ,μ}: semistandard tableaux of shape λ and content μ, counted by
/// direct backtracking (rows weakly increase, columns strictly increase).
pub fn kostka(lambda: &Partition, mu: &Partition) -> Result<Nat> {
    let d = check_weights(lambda, mu)?;
    if d == 0 {
        return Ok(Nat::from(1u32));
    }
    let shape: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    let mut remaining: Vec<u64> = mu.parts().to_vec();
    let nvals = remaining.len();
    let rows = shape.len();
    let cols = shape.first().copied().unwrap_or(0);
    // cells in row-major order; grid[r][c] = value placed (1-based)
    let mut grid = vec![vec![0usize; cols]; rows];
    let mut count = 0u64;

    fn rec(
        shape: &[usize],
        grid: &mut Vec<Vec<usize>>,
        remaining: &mut Vec<u64>,
        nvals: usize,
        r: usize,
        c: usize,
        count: &mut u64,
    ) {
        if r == shape.len() {
            *count += 1;
            return;
        }
        let (nr, nc) = if c + 1 < shape[r] {
            (r, c + 1)
        } else {
            (r + 1, 0)
        };
        let min_row = if c > 0 { grid[r][c - 1] } else { 1 };
        let min_col = if r > 0 && shape[r - 1] > c {
            grid[r - 1][c] + 1
        } else {
            1
        };
        let lo = min_row.max(min_col);
        for v in lo..=nvals {
            if remaining[v - 1] == 0 {
                continue;
            }
            remaining[v - 1] -= 1;
            grid[r][c] = v;
            rec(shape, grid, remaining, nvals, nr, nc, count);
            remaining[v - 1] += 1;
        }
    }

    rec(&shape, &mut grid, &mut remaining, nvals, 0, 0, &mut count);
    Ok(Nat::from(count))
}

/// Serializes an exact nonnegative integer as its decimal string.
pub fn serialize_nat<S: serde::Serializer>(
    v: &Nat,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Outcome of checking one self-conjugate partition against the sign rule
/// for the symmetric/antisymmetric split of [1^D] in [λ]⊗[λ].
#[derive(Debug, Clone, Serialize)]
pub struct SignTheoremReport {
    pub lambda: Partition,
    #[serde(serialize_with = "serialize_nat")]
    pub sk: Nat,
    #[serde(serialize_with = "serialize_nat")]
    pub ak: Nat,
    pub sign: Sign,
    pub consistent: bool,
}

/// Computes sk((1^D),λ) and ak((1^D),λ) for self-conjugate λ and checks
/// they are (1,0) for sign +1 and (0,1) for sign −1.
pub fn verify_sign_theorem(lambda: &Partition) -> Result<SignTheoremReport> {
    let sign = lambda.sign_self_conjugate()?;
    let column = Partition::column(lambda.weight());
    let sk = sym_kron(&column, lambda)?;
    let ak = alt_kron(&column, lambda)?;
    let one = Nat::from(1u32);
    let zero = Nat::zero();
    let consistent = match sign {
        Sign::Plus => sk == one && ak == zero,
        Sign::Minus => sk == zero && ak == one,
    };
    Ok(SignTheoremReport {
        lambda: lambda.clone(),
        sk,
        ak,
        sign,
        consistent,
    })
}
