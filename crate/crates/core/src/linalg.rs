//! Exact Gaussian elimination over the rationals.
//!
//! Matrices are `Vec<Vec<Rat>>` in row-major order. Everything here is
//! sized for Cartan-matrix ranks (single digits), so the plain cubic
//! algorithms are the right tool.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::rat::{rat, Rat};

/// `n x n` identity.
pub fn identity(n: usize) -> Vec<Vec<Rat>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect())
        .collect()
}

/// Matrix-vector product. Panics on shape mismatch.
pub fn mat_vec(m: &[Vec<Rat>], v: &[Rat]) -> Vec<Rat> {
    m.iter()
        .map(|row| {
            assert_eq!(row.len(), v.len());
            row.iter().zip(v).map(|(a, b)| a * b).sum()
        })
        .collect()
}

/// Matrix product. Panics on shape mismatch.
pub fn mat_mul(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), inner);
            (0..cols)
                .map(|j| (0..inner).map(|k| &row[k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// Convert an integer matrix to rationals.
pub fn from_int(m: &[Vec<i64>]) -> Vec<Vec<Rat>> {
    m.iter().map(|row| row.iter().map(|&x| rat(x)).collect()).collect()
}

/// Reduced row echelon form in place; returns the rank.
fn rref(m: &mut [Vec<Rat>]) -> usize {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivot_row = 0;
    for col in 0..cols {
        let Some(src) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, src);
        let inv = m[pivot_row][col].recip();
        for x in m[pivot_row].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..rows {
            if r != pivot_row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in 0..cols {
                    let delta = &factor * &m[pivot_row][c];
                    m[r][c] = &m[r][c] - &delta;
                }
            }
        }
        pivot_row += 1;
        if pivot_row == rows {
            break;
        }
    }
    pivot_row
}

/// Rank over the rationals.
pub fn rank(m: &[Vec<Rat>]) -> usize {
    let mut work: Vec<Vec<Rat>> = m.to_vec();
    rref(&mut work)
}

/// Inverse of a square matrix, or `None` if singular.
pub fn invert(m: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = m.len();
    let mut work: Vec<Vec<Rat>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n);
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    rref(&mut work);
    // Singular iff the left block failed to reduce to the identity
    // (pivots then spill into the augmented block).
    for (i, row) in work.iter().enumerate() {
        for (j, x) in row[..n].iter().enumerate() {
            let expected_one = i == j;
            if (expected_one && !x.is_one()) || (!expected_one && !x.is_zero()) {
                return None;
            }
        }
    }
    Some(work.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Solve `m x = rhs`; returns one solution if the system is consistent.
pub fn solve(m: &[Vec<Rat>], rhs: &[Rat]) -> Option<Vec<Rat>> {
    let rows = m.len();
    assert_eq!(rows, rhs.len());
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut work: Vec<Vec<Rat>> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    rref(&mut work);
    // Inconsistent if some row is (0 ... 0 | nonzero).
    for row in &work {
        if row[..cols].iter().all(Rat::is_zero) && !row[cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); cols];
    for row in &work {
        if let Some(lead) = (0..cols).find(|&c| !row[c].is_zero()) {
            x[lead] = row[cols].clone();
        }
    }
    Some(x)
}

/// Determinant by fraction-free-ish elimination (clones freely; fine at rank <= 8).
pub fn determinant(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    let mut work: Vec<Vec<Rat>> = m.to_vec();
    let mut det = Rat::one();
    for col in 0..n {
        let Some(src) = (col..n).find(|&r| !work[r][col].is_zero()) else {
            return Rat::zero();
        };
        if src != col {
            work.swap(col, src);
            det = -det;
        }
        det *= work[col][col].clone();
        let inv = work[col][col].recip();
        for r in col + 1..n {
            if work[r][col].is_zero() {
                continue;
            }
            let factor = &work[r][col] * &inv;
            for c in col..n {
                let delta = &factor * &work[col][c];
                work[r][c] = &work[r][c] - &delta;
            }
        }
    }
    det
}

/// Sylvester's criterion: every leading principal minor positive.
/// Assumes `m` is symmetric (checked by the caller).
pub fn is_positive_definite(m: &[Vec<Rat>]) -> bool {
    use num_traits::Signed;
    let n = m.len();
    (1..=n).all(|k| {
        let minor: Vec<Vec<Rat>> = m[..k].iter().map(|row| row[..k].to_vec()).collect();
        determinant(&minor).is_positive()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::ratio;

    #[test]
    fn inverse_round_trip() {
        let m = from_int(&[vec![2, -1], vec![-1, 2]]);
        let inv = invert(&m).unwrap();
        assert_eq!(mat_mul(&m, &inv), identity(2));
        assert_eq!(inv[0][0], ratio(2, 3));
    }

    #[test]
    fn singular_has_no_inverse() {
        let m = from_int(&[vec![1, 2], vec![2, 4]]);
        assert!(invert(&m).is_none());
        assert_eq!(rank(&m), 1);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = from_int(&[vec![1, 1], vec![0, 1]]);
        let x = solve(&m, &[rat(3), rat(1)]).unwrap();
        assert_eq!(x, vec![rat(2), rat(1)]);

        let sing = from_int(&[vec![1, 1], vec![1, 1]]);
        assert!(solve(&sing, &[rat(0), rat(1)]).is_none());
        assert!(solve(&sing, &[rat(1), rat(1)]).is_some());
    }

    #[test]
    fn positive_definite_detects_sign() {
        let pd = from_int(&[vec![2, -1], vec![-1, 2]]);
        assert!(is_positive_definite(&pd));
        let semidef = from_int(&[vec![2, -2], vec![-2, 2]]);
        assert!(!is_positive_definite(&semidef));
    }

    #[test]
    fn determinant_matches_hand_value() {
        let m = from_int(&[vec![2, -2], vec![-1, 2]]);
        assert_eq!(determinant(&m), rat(2));
    }
}
