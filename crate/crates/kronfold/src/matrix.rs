//! Exact rank computation by fraction-free (Bareiss) elimination.



use crate::scalar::ExactInt;

/// Rank of a dense integer matrix. Fraction-free two-step elimination with
/// full pivoting; every division is exact by the Bareiss identity.
pub fn rank_bareiss<I: ExactInt>(mut m: Vec<Vec<I>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut prev = I::one();
    let mut r = 0;
    for step in 0..rows.min(cols) {
        // find any nonzero pivot in the remaining submatrix
        let mut pivot = None;
        'search: for i in step..rows {
            for j in step..cols {
                if !m[i][j].is_zero() {
                    pivot = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(step, pi);
        if pj != step {
            for row in m.iter_mut() {
                row.swap(step, pj);
            }
        }
        for i in step + 1..rows {
            for j in step + 1..cols {
                let num = m[step][step].clone() * m[i][j].clone()
                    - m[i][step].clone() * m[step][j].clone();
                m[i][j] = exact_div(num, &prev);
            }
            m[i][step] = I::zero();
        }
        prev = m[step][step].clone();
        r = step + 1;
    }
    r
}

/// Rank of a tall sparse matrix via its Gram matrix: over the rationals,
/// ker A = ker AᵀA, so rank A = rank AᵀA.
pub fn rank_gram<I: ExactInt>(rows: &[Vec<(usize, I)>], ncols: usize) -> usize {
    let mut gram = vec![vec![I::zero(); ncols]; ncols];
    for row in rows {
        for (c1, v1) in row {
            for (c2, v2) in row {
                if c2 < c1 {
                    continue;
                }
                let prod = v1.clone() * v2.clone();
                if c1 != c2 {
                    gram[*c2][*c1] = gram[*c2][*c1].clone() + prod.clone();
                }
                gram[*c1][*c2] = gram[*c1][*c2].clone() + prod;
            }
        }
    }
    rank_bareiss(gram)
}

fn exact_div<I: ExactInt>(num: I, den: &I) -> I {
    debug_assert!(!den.is_zero());
    let (q, r) = num.div_rem(den);
    debug_assert!(r.is_zero(), "fraction-free elimination divided inexactly");
    q
}
