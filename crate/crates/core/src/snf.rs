//! Smith normal form over the integers, and the lattice queries built on it.
//!
//! Used for the theta-map kernel certificate: the kernel of an integer
//! matrix `M : Z^n -> Z^m` is spanned by the columns of the right transform
//! that pair with zero diagonal entries, and that span is automatically
//! saturated. Matrices here are tiny (weight-lattice rank), so the textbook
//! algorithm with full pivoting is plenty.


use alloc::vec::Vec;

pub use num_bigint::BigInt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::linalg;
use crate::rat::Rat;

/// Result of a Smith normal form computation `U * M * V = D`.
///
/// Only the pieces needed downstream are kept: the diagonal of `D`, the
/// right transform `V`, and the rank.
#[derive(Debug, Clone)]
pub struct Snf {
    /// Nonzero diagonal entries (the elementary divisors, in order).
    pub divisors: Vec<BigInt>,
    /// The unimodular right transform; columns `rank..` span `ker M` over Z.
    pub right: Vec<Vec<BigInt>>,
    pub rank: usize,
}

fn swap_rows(m: &mut [Vec<BigInt>], a: usize, b: usize) {
    m.swap(a, b);
}

fn swap_cols(m: &mut [Vec<BigInt>], v: &mut [Vec<BigInt>], a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
    for row in v.iter_mut() {
        row.swap(a, b);
    }
}

/// row[a] -= q * row[b]
fn row_sub(m: &mut [Vec<BigInt>], a: usize, b: usize, q: &BigInt) {
    let cols = m[0].len();
    for c in 0..cols {
        let delta = q * &m[b][c];
        m[a][c] -= delta;
    }
}

/// col[a] -= q * col[b], mirrored into the right transform.
fn col_sub(m: &mut [Vec<BigInt>], v: &mut [Vec<BigInt>], a: usize, b: usize, q: &BigInt) {
    for row in m.iter_mut() {
        let delta = q * &row[b];
        row[a] -= delta;
    }
    for row in v.iter_mut() {
        let delta = q * &row[b];
        row[a] -= delta;
    }
}

/// Smith normal form of an integer matrix. Empty matrices are fine.
pub fn smith_normal_form(matrix: &[Vec<BigInt>]) -> Snf {
    let rows = matrix.len();
    let cols = if rows == 0 { 0 } else { matrix[0].len() };
    let mut m: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut v: Vec<Vec<BigInt>> = (0..cols)
        .map(|i| {
            (0..cols)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();

    let mut t = 0;
    while t < rows && t < cols {
        // Find the entry of least nonzero magnitude in the working submatrix.
        let mut pivot: Option<(usize, usize)> = None;
        for r in t..rows {
            for c in t..cols {
                if m[r][c].is_zero() {
                    continue;
                }
                match pivot {
                    Some((pr, pc)) if m[pr][pc].abs() <= m[r][c].abs() => {}
                    _ => pivot = Some((r, c)),
                }
            }
        }
        let Some((pr, pc)) = pivot else { break };
        swap_rows(&mut m, t, pr);
        swap_cols(&mut m, &mut v, t, pc);

        // Clear row and column t; restart if a remainder re-populates them.
        loop {
            let mut dirty = false;
            for r in t + 1..rows {
                if m[r][t].is_zero() {
                    continue;
                }
                let q = m[r][t].div_floor(&m[t][t]);
                row_sub(&mut m, r, t, &q);
                if !m[r][t].is_zero() {
                    // Remainder smaller than the pivot: promote it.
                    swap_rows(&mut m, t, r);
                    dirty = true;
                }
            }
            for c in t + 1..cols {
                if m[t][c].is_zero() {
                    continue;
                }
                let q = m[t][c].div_floor(&m[t][t]);
                col_sub(&mut m, &mut v, c, t, &q);
                if !m[t][c].is_zero() {
                    swap_cols(&mut m, &mut v, t, c);
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
        }

        // Divisibility: the pivot must divide every remaining entry.
        let mut fixed = true;
        'scan: for r in t + 1..rows {
            for c in t + 1..cols {
                if !(&m[r][c] % &m[t][t]).is_zero() {
                    // Fold the offending row in and redo this pivot.
                    let one = BigInt::one();
                    row_sub(&mut m, t, r, &-&one);
                    fixed = false;
                    break 'scan;
                }
            }
        }
        if !fixed {
            continue;
        }
        if m[t][t].is_negative() {
            for c in t..cols {
                let neg = -&m[t][c];
                m[t][c] = neg;
            }
        }
        t += 1;
    }

    let rank = t;
    let divisors = (0..rank).map(|i| m[i][i].clone()).collect();
    Snf {
        divisors,
        right: v,
        rank,
    }
}

/// An integral basis of `ker(M : Z^n -> Z^m)`. The returned vectors span
/// the full (saturated) kernel lattice.
pub fn integer_kernel_basis(matrix: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let cols = if matrix.is_empty() { 0 } else { matrix[0].len() };
    if cols == 0 {
        return Vec::new();
    }
    let snf = smith_normal_form(matrix);
    (snf.rank..cols)
        .map(|c| (0..cols).map(|r| snf.right[r][c].clone()).collect())
        .collect()
}

/// Does `v` lie in the Z-span of `basis`? `v` may be rational; membership
/// requires an exactly integral coefficient vector.
pub fn integer_span_contains(basis: &[Vec<BigInt>], v: &[Rat]) -> bool {
    if basis.is_empty() {
        return v.iter().all(Rat::is_zero);
    }
    let dim = basis[0].len();
    assert_eq!(dim, v.len());
    // Columns = basis vectors; solve B c = v over Q, then demand c integral.
    let b: Vec<Vec<Rat>> = (0..dim)
        .map(|r| basis.iter().map(|col| Rat::from_integer(col[r].clone())).collect())
        .collect();
    match linalg::solve(&b, v) {
        None => false,
        Some(c) => {
            // `solve` returns one solution; basis vectors from an SNF kernel
            // are linearly independent, so it is the only one.
            let recombined = linalg::mat_vec(&b, &c);
            recombined == v && c.iter().all(Rat::is_integer)
        }
    }
}

/// Do two integer bases span the same lattice?
pub fn same_integer_lattice(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> bool {
    let to_rat = |v: &Vec<BigInt>| -> Vec<Rat> {
        v.iter().map(|x| Rat::from_integer(x.clone())).collect()
    };
    a.iter().all(|v| integer_span_contains(b, &to_rat(v)))
        && b.iter().all(|v| integer_span_contains(a, &to_rat(v)))
}

pub fn bigint_matrix(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    m.iter().map(|row| row.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn bi(v: Vec<i64>) -> Vec<BigInt> {
        v.into_iter().map(BigInt::from).collect()
    }

    #[test]
    fn snf_known_example() {
        // det = -8, gcd of entries 2 => divisors (2, 4)
        let m = bigint_matrix(&[vec![2, 4], vec![6, 8]]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.rank, 2);
        assert_eq!(snf.divisors, bi(vec![2, 4]));
    }

    #[test]
    fn kernel_of_sum_map() {
        // M = [1 1 1]: kernel rank 2, and (1, -1, 0) must be in the lattice.
        let m = bigint_matrix(&[vec![1, 1, 1]]);
        let basis = integer_kernel_basis(&m);
        assert_eq!(basis.len(), 2);
        for b in &basis {
            let s: BigInt = b.iter().sum();
            assert!(s.is_zero());
        }
        assert!(integer_span_contains(&basis, &[rat(1), rat(-1), rat(0)]));
        assert!(!integer_span_contains(&basis, &[rat(1), rat(0), rat(0)]));
    }

    #[test]
    fn membership_requires_integrality() {
        let basis = vec![bi(vec![2, 0]), bi(vec![0, 1])];
        assert!(integer_span_contains(&basis, &[rat(4), rat(3)]));
        assert!(!integer_span_contains(&basis, &[rat(1), rat(0)]));
        assert!(!integer_span_contains(&basis, &[crate::rat::ratio(1, 2), rat(0)]));
    }

    #[test]
    fn lattice_equality_ignores_presentation() {
        let a = vec![bi(vec![1, 0]), bi(vec![0, 1])];
        let b = vec![bi(vec![1, 1]), bi(vec![0, 1])];
        assert!(same_integer_lattice(&a, &b));
        let c = vec![bi(vec![2, 0]), bi(vec![0, 1])];
        assert!(!same_integer_lattice(&a, &c));
    }
}
