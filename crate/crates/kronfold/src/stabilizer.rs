//! Symbolic checks on Pow = tr(X^m) for an n×n variable matrix X: the
//! coordinate polynomial itself, derivation operators acting on it, the
//! annihilator dimension inside the n⁴-dimensional operator space, and the
//! dimension of the polynomials invariant under the full symmetry group.
//!
//! Variables are ordered row-major: x^i_j ↦ index i·n + j. Monomials are
//! exponent vectors under graded lexicographic order (all polynomials here
//! are homogeneous, so plain lexicographic order on the exponent vector).
//! All linear algebra is fraction-free over exact integers.
//!
//! Both elimination problems split along the torus grading: the variable
//! x^i_j has weight e_i − e_j, every monomial of Pow has weight zero, and a
//! basis operator ξ^a_b ⊗ x^c_d shifts weights by e_a − e_b + e_c − e_d.
//! Operators of different weight never share an image monomial, so the
//! annihilator system is block diagonal over operator weights; likewise the
//! diagonal operators Ad(η^k ⊗ e_k) scale each monomial by its weight, so
//! invariant polynomials are supported on balanced monomials only.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::matrix::{rank_bareiss, rank_gram};
use crate::partition::enumerate_partitions;
use crate::scalar::ExactScalar;
use crate::{Error, Int, Rat, Result};

/// Default caps: the elimination for (n, m) beyond these is no longer desk
/// scale.
pub const MAX_N: usize = 4;
pub const MAX_M: u32 = 5;

type Monomial = Vec<u8>;

/// A homogeneous polynomial in the n² matrix entries with exact
/// coefficients; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactPolynomial<T> {
    n: usize,
    degree: u32,
    terms: BTreeMap<Monomial, T>,
}

impl<T: ExactScalar> ExactPolynomial<T> {
    pub fn zero(n: usize, degree: u32) -> Self {
        ExactPolynomial {
            n,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &T)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, mono: Monomial, c: T) {
        debug_assert_eq!(mono.len(), self.n * self.n);
        debug_assert_eq!(mono.iter().map(|&e| e as u32).sum::<u32>(), self.degree);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(mono.clone()).or_insert_with(T::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.terms.remove(&mono);
        }
    }

    pub fn coefficient(&self, mono: &Monomial) -> T {
        self.terms.get(mono).cloned().unwrap_or_else(T::zero)
    }

    /// Exchange x^i_j with x^j_i in every monomial.
    pub fn transpose_vars(&self) -> Self {
        let n = self.n;
        let mut out = ExactPolynomial::zero(n, self.degree);
        for (mono, c) in &self.terms {
            let mut t = vec![0u8; n * n];
            for i in 0..n {
                for j in 0..n {
                    t[j * n + i] = mono[i * n + j];
                }
            }
            out.add_term(t, c.clone());
        }
        out
    }

    /// Evaluation at concrete values, one per variable in row-major order.
    pub fn evaluate(&self, values: &[T]) -> T {
        assert_eq!(values.len(), self.n * self.n);
        let mut acc = T::zero();
        for (mono, c) in &self.terms {
            let mut term = c.clone();
            for (v, &e) in values.iter().zip(mono.iter()) {
                for _ in 0..e {
                    term = term * v.clone();
                }
            }
            acc = acc + term;
        }
        acc
    }

    /// Substitutes each variable by a linear form Σ coeff·x_idx and expands.
    pub fn substitute_linear(&self, forms: &[Vec<(T, usize)>]) -> Self {
        let nn = self.n * self.n;
        assert_eq!(forms.len(), nn);
        let mut out = ExactPolynomial::zero(self.n, self.degree);
        for (mono, c) in &self.terms {
            // product over variables of the substituted linear form
            let mut partial: Vec<(Monomial, T)> = vec![(vec![0u8; nn], c.clone())];
            for (var, &e) in mono.iter().enumerate() {
                for _ in 0..e {
                    let mut next = Vec::with_capacity(partial.len() * forms[var].len());
                    for (m, coeff) in &partial {
                        for (fc, fv) in &forms[var] {
                            let mut m2 = m.clone();
                            m2[*fv] += 1;
                            next.push((m2, coeff.clone() * fc.clone()));
                        }
                    }
                    partial = next;
                }
            }
            for (m, coeff) in partial {
                out.add_term(m, coeff);
            }
        }
        out
    }
}

/// tr(X^m) as an exact polynomial: one term per cyclic index tuple.
pub fn build_pow<T: ExactScalar>(n: usize, m: u32) -> Result<ExactPolynomial<T>> {
    if n == 0 || m == 0 {
        return Err(Error::CapExceeded("build_pow needs n ≥ 1, m ≥ 1".into()));
    }
    let tuples = (n as u64).checked_pow(m).filter(|&t| t <= 20_000_000);
    if tuples.is_none() {
        return Err(Error::CapExceeded(format!(
            "build_pow({n},{m}): n^m too large"
        )));
    }
    let mut out = ExactPolynomial::zero(n, m);
    let mut tuple = vec![0usize; m as usize];
    loop {
        let mut mono = vec![0u8; n * n];
        for t in 0..m as usize {
            let i = tuple[t];
            let j = tuple[(t + 1) % m as usize];
            mono[i * n + j] += 1;
        }
        out.add_term(mono, T::one());
        // odometer
        let mut pos = 0;
        loop {
            if pos == m as usize {
                return Ok(out);
            }
            tuple[pos] += 1;
            if tuple[pos] < n {
                break;
            }
            tuple[pos] = 0;
            pos += 1;
        }
    }
}

/// A first-order derivation on polynomials in the matrix entries: either a
/// basis operator ξ^a_b ⊗ x^c_d (multiply by x^c_d, differentiate by x^b_a)
/// or the commutator combination Ad(η^k ⊗ e_j) = Σ_i (ξ^k_i ⊗ x^i_j − ξ^i_j ⊗ x^k_i).
/// Indices are 0-based.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum DerivationOperator {
    Basis { a: usize, b: usize, c: usize, d: usize },
    Ad { k: usize, j: usize },
}

fn apply_basis<T: ExactScalar>(
    f: &ExactPolynomial<T>,
    a: usize,
    b: usize,
    c: usize,
    d: usize,
    sign_plus: bool,
    out: &mut ExactPolynomial<T>,
) {
    let n = f.n;
    let diff = b * n + a; // ξ^a_b = ∂/∂x^b_a
    let mul = c * n + d;
    for (mono, coeff) in &f.terms {
        let e = mono[diff];
        if e == 0 {
            continue;
        }
        let mut m2 = mono.clone();
        m2[diff] -= 1;
        m2[mul] += 1;
        let scaled = coeff.clone() * T::from_u8(e).expect("small exponent");
        out.add_term(m2, if sign_plus { scaled } else { -scaled });
    }
}

/// Applies a derivation operator; dimensions must match.
pub fn apply_operator<T: ExactScalar>(
    op: &DerivationOperator,
    f: &ExactPolynomial<T>,
) -> ExactPolynomial<T> {
    let n = f.n;
    let mut out = ExactPolynomial::zero(n, f.degree);
    match *op {
        DerivationOperator::Basis { a, b, c, d } => {
            assert!(a < n && b < n && c < n && d < n);
            apply_basis(f, a, b, c, d, true, &mut out);
        }
        DerivationOperator::Ad { k, j } => {
            assert!(k < n && j < n);
            for i in 0..n {
                apply_basis(f, k, i, i, j, true, &mut out);
                apply_basis(f, i, j, k, i, false, &mut out);
            }
        }
    }
    out
}

/// The matrix-power entry (X^p)^i_j as a polynomial: sum over index paths.
pub fn matrix_power_entry<T: ExactScalar>(
    n: usize,
    p: u32,
    i: usize,
    j: usize,
) -> ExactPolynomial<T> {
    assert!(p >= 1, "matrix_power_entry needs p ≥ 1");
    let mut out = ExactPolynomial::zero(n, p);
    let mut path = vec![0usize; p as usize - 1];
    loop {
        let mut mono = vec![0u8; n * n];
        let mut prev = i;
        for &step in &path {
            mono[prev * n + step] += 1;
            prev = step;
        }
        mono[prev * n + j] += 1;
        out.add_term(mono, T::one());
        let mut pos = 0;
        loop {
            if pos == path.len() {
                return out;
            }
            path[pos] += 1;
            if path[pos] < n {
                break;
            }
            path[pos] = 0;
            pos += 1;
        }
    }
}

fn guard_caps(n: usize, m: u32) -> Result<()> {
    if n < 1 || m < 1 {
        return Err(Error::CapExceeded("need n ≥ 1 and m ≥ 1".into()));
    }
    if n > MAX_N || m > MAX_M {
        return Err(Error::CapExceeded(format!(
            "(n, m) = ({n}, {m}) exceeds the default caps ({MAX_N}, {MAX_M})"
        )));
    }
    Ok(())
}

fn operator_weight(n: usize, a: usize, b: usize, c: usize, d: usize) -> Vec<i32> {
    let mut w = vec![0i32; n];
    w[a] += 1;
    w[b] -= 1;
    w[c] += 1;
    w[d] -= 1;
    w
}

/// dim of { L ∈ End(V) : L·Pow = 0 } = n⁴ − rank of the stacked image
/// system, computed block by block over operator weights.
pub fn annihilator_dimension(n: usize, m: u32) -> Result<usize> {
    guard_caps(n, m)?;
    let pow: ExactPolynomial<Int> = build_pow(n, m)?;
    let mut groups: BTreeMap<Vec<i32>, Vec<ExactPolynomial<Int>>> = BTreeMap::new();
    let ops: Vec<(usize, usize, usize, usize)> = (0..n)
        .flat_map(|a| (0..n).flat_map(move |b| (0..n).flat_map(move |c| (0..n).map(move |d| (a, b, c, d)))))
        .collect();
    let images: Vec<(Vec<i32>, ExactPolynomial<Int>)> = ops
        .par_iter()
        .map(|&(a, b, c, d)| {
            let img = apply_operator(&DerivationOperator::Basis { a, b, c, d }, &pow);
            (operator_weight(n, a, b, c, d), img)
        })
        .collect();
    for (w, img) in images {
        groups.entry(w).or_default().push(img);
    }
    let mut rank = 0usize;
    for (_, imgs) in groups {
        let mut mono_index: BTreeMap<Monomial, usize> = BTreeMap::new();
        for img in &imgs {
            for (mono, _) in img.terms() {
                let next = mono_index.len();
                mono_index.entry(mono.clone()).or_insert(next);
            }
        }
        let mut mat = vec![vec![Int::zero(); imgs.len()]; mono_index.len()];
        for (col, img) in imgs.iter().enumerate() {
            for (mono, c) in img.terms() {
                mat[mono_index[mono]][col] = c.clone();
            }
        }
        rank += rank_bareiss(mat);
    }
    Ok(n * n * n * n - rank)
}

fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u8; nvars];
    fn rec(pos: usize, rem: u32, current: &mut Vec<u8>, out: &mut Vec<Monomial>) {
        if pos + 1 == current.len() {
            current[pos] = rem as u8;
            out.push(current.clone());
            current[pos] = 0;
            return;
        }
        for e in (0..=rem).rev() {
            current[pos] = e as u8;
            rec(pos + 1, rem - e, current, out);
        }
        current[pos] = 0;
    }
    rec(0, degree, &mut current, &mut out);
    out
}

fn is_balanced(n: usize, mono: &Monomial) -> bool {
    for k in 0..n {
        let row: i32 = (0..n).map(|j| mono[k * n + j] as i32).sum();
        let col: i32 = (0..n).map(|i| mono[i * n + k] as i32).sum();
        if row != col {
            return false;
        }
    }
    true
}

/// dim of { f ∈ S^m V : Ad(L)·f = 0 for all L, τ·f = f }, where τ swaps
/// x^i_j with x^j_i. Must equal the number of partitions of m with at most
/// n parts.
pub fn invariant_dimension(n: usize, m: u32) -> Result<usize> {
    guard_caps(n, m)?;
    // the diagonal operators Ad(η^k ⊗ e_k) scale a monomial by (rowsum_k −
    // colsum_k), so solutions are supported on balanced monomials
    let balanced: Vec<Monomial> = monomials_of_degree(n * n, m)
        .into_iter()
        .filter(|mo| is_balanced(n, mo))
        .collect();
    let index: BTreeMap<Monomial, usize> = balanced
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, mo)| (mo, i))
        .collect();
    let ncols = balanced.len();
    let mut rows: Vec<Vec<(usize, Int)>> = Vec::new();

    for k in 0..n {
        for j in 0..n {
            if k == j {
                continue;
            }
            // rows of the constraint "coefficientwise image under Ad(k,j) is 0",
            // grouped by the image monomial
            let mut by_target: BTreeMap<Monomial, Vec<(usize, Int)>> = BTreeMap::new();
            for (colidx, mono) in balanced.iter().enumerate() {
                let mut single = ExactPolynomial::<Int>::zero(n, m);
                single.add_term(mono.clone(), Int::one());
                let img = apply_operator(&DerivationOperator::Ad { k, j }, &single);
                for (target, c) in img.terms() {
                    by_target
                        .entry(target.clone())
                        .or_default()
                        .push((colidx, c.clone()));
                }
            }
            rows.extend(by_target.into_values());
        }
    }
    // τ-invariance as linear constraints: coeff(A) = coeff(Aᵀ)
    for (colidx, mono) in balanced.iter().enumerate() {
        let mut t = vec![0u8; n * n];
        for i in 0..n {
            for j in 0..n {
                t[j * n + i] = mono[i * n + j];
            }
        }
        if t > *mono {
            rows.push(vec![(colidx, Int::one()), (index[&t], -Int::one())]);
        }
    }

    let rank = rank_gram(&rows, ncols);
    Ok(ncols - rank)
}

/// Count of partitions of m with at most n parts: the predicted invariant
/// dimension.
pub fn partition_count_bounded(m: u32, n: usize) -> usize {
    enumerate_partitions(m as u64, Some(n as u64)).count()
}

#[derive(Clone, Debug, Serialize)]
pub struct SymmetryReport {
    pub n: usize,
    pub m: u32,
    pub transpose_symmetric: bool,
    pub conjugation_trials: u32,
    pub conjugation_symmetric: bool,
    pub homogeneous: bool,
    pub counterexample: Option<String>,
}

impl SymmetryReport {
    pub fn all_pass(&self) -> bool {
        self.transpose_symmetric && self.conjugation_symmetric && self.homogeneous
    }
}

fn det_int(mat: &[Vec<Int>]) -> Int {
    let n = mat.len();
    if n == 0 {
        return Int::one();
    }
    // cofactor expansion; n ≤ 4 here
    if n == 1 {
        return mat[0][0].clone();
    }
    let mut det = Int::zero();
    for (col, head) in mat[0].iter().enumerate() {
        if head.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Int>> = mat[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != col)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let sub = det_int(&minor);
        if col % 2 == 0 {
            det += head * sub;
        } else {
            det -= head * sub;
        }
    }
    det
}

fn inverse_rational(mat: &[Vec<Int>]) -> Option<Vec<Vec<Rat>>> {
    let n = mat.len();
    let det = det_int(mat);
    if det.is_zero() {
        return None;
    }
    // adjugate / det
    let mut inv = vec![vec![Rat::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<Int>> = (0..n)
                .filter(|&r| r != j)
                .map(|r| {
                    (0..n)
                        .filter(|&c| c != i)
                        .map(|c| mat[r][c].clone())
                        .collect()
                })
                .collect();
            let mut cof = det_int(&minor);
            if (i + j) % 2 == 1 {
                cof = -cof;
            }
            inv[i][j] = Rat::new(cof, det.clone());
        }
    }
    Some(inv)
}

/// Checks the three stabilizer symmetries of Pow symbolically:
/// transposition of the variable matrix, conjugation by random invertible
/// rational matrices, and the scaling symmetry as a homogeneity assertion.
pub fn symmetry_check(n: usize, m: u32, trials: u32) -> Result<SymmetryReport> {
    if n > MAX_N + 2 || m > MAX_M + 3 {
        return Err(Error::CapExceeded(format!(
            "symmetry_check({n},{m}) beyond desk scale"
        )));
    }
    let pow: ExactPolynomial<Rat> = build_pow(n, m)?;
    let mut counterexample = None;

    let transpose_symmetric = pow.transpose_vars() == pow;
    if !transpose_symmetric {
        counterexample = Some("transposition changed the polynomial".to_string());
    }

    let homogeneous = pow
        .terms()
        .all(|(mono, _)| mono.iter().map(|&e| e as u32).sum::<u32>() == m);
    if homogeneous && counterexample.is_none() {
        // scaling X by ω multiplies every monomial by ω^m, so m-th roots of
        // unity stabilize; nothing further to compute
    } else if !homogeneous {
        counterexample.get_or_insert_with(|| "inhomogeneous term found".to_string());
    }

    let mut conjugation_symmetric = true;
    let mut rng = ChaCha8Rng::seed_from_u64(0x6b66_0000 + (n as u64) * 100 + m as u64);
    for trial in 0..trials {
        // random invertible integer matrix with small entries
        let g: Vec<Vec<Int>> = loop {
            let cand: Vec<Vec<Int>> = (0..n)
                .map(|_| (0..n).map(|_| Int::from(rng.gen_range(-3i64..=3))).collect())
                .collect();
            if !det_int(&cand).is_zero() {
                break cand;
            }
        };
        let ginv = inverse_rational(&g).expect("nonzero determinant");
        // x^i_j ↦ (g X g⁻¹)^i_j = Σ_{a,b} g[i][a] · ginv[b][j] · x^a_b
        let mut forms: Vec<Vec<(Rat, usize)>> = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut form = Vec::new();
                for a in 0..n {
                    for b in 0..n {
                        let coeff = Rat::from(g[i][a].clone()) * ginv[b][j].clone();
                        if !coeff.is_zero() {
                            form.push((coeff, a * n + b));
                        }
                    }
                }
                forms.push(form);
            }
        }
        if pow.substitute_linear(&forms) != pow {
            conjugation_symmetric = false;
            counterexample
                .get_or_insert_with(|| format!("conjugation trial {trial} changed the polynomial"));
            break;
        }
    }

    Ok(SymmetryReport {
        n,
        m,
        transpose_symmetric,
        conjugation_trials: trials,
        conjugation_symmetric,
        homogeneous,
        counterexample,
    })
}

/// Random rational matrix evaluation of Pow against iterated matrix
/// multiplication and trace; used as the evaluation oracle.
pub fn evaluation_consistency(n: usize, m: u32, trials: u32) -> Result<bool> {
    let pow: ExactPolynomial<Rat> = build_pow(n, m)?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x6b66_1111 + (n as u64) * 100 + m as u64);
    for _ in 0..trials {
        let entries: Vec<Rat> = (0..n * n)
            .map(|_| {
                Rat::new(
                    Int::from(rng.gen_range(-4i64..=4)),
                    Int::from(rng.gen_range(1i64..=3)),
                )
            })
            .collect();
        let via_poly = pow.evaluate(&entries);
        // trace of the m-th power by repeated multiplication
        let mut acc: Vec<Vec<Rat>> = (0..n)
            .map(|i| (0..n).map(|j| entries[i * n + j].clone()).collect())
            .collect();
        for _ in 1..m {
            let mut next = vec![vec![Rat::zero(); n]; n];
            for i in 0..n {
                for j in 0..n {
                    let mut s = Rat::zero();
                    for k in 0..n {
                        s += acc[i][k].clone() * entries[k * n + j].clone();
                    }
                    next[i][j] = s;
                }
            }
            acc = next;
        }
        let mut trace = Rat::zero();
        for (i, row) in acc.iter().enumerate() {
            trace += row[i].clone();
        }
        if via_poly != trace {
            return Ok(false);
        }
    }
    Ok(true)
}
