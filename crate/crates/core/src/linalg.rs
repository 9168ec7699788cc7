//! Small dense exact linear algebra over the rationals.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::num::Q;

fn to_q(rows: &[Vec<BigInt>]) -> Vec<Vec<Q>> {
    rows.iter()
        .map(|r| r.iter().map(|x| Q::from_integer(x.clone())).collect())
        .collect()
}

/// Row echelon form in place; returns the pivot columns.
fn echelon(m: &mut [Vec<Q>]) -> Vec<usize> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut row = 0;
    for c in 0..cols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        for r in row + 1..m.len() {
            if m[r][c].is_zero() {
                continue;
            }
            let f = &m[r][c] / &m[row][c];
            for k in c..cols {
                let t = &f * &m[row][k];
                m[r][k] -= t;
            }
        }
        pivots.push(c);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    pivots
}

pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    let mut m = to_q(rows);
    echelon(&mut m).len()
}

pub fn rank_i64(rows: &[Vec<i64>]) -> usize {
    let big: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    rank(&big)
}

pub fn rank_q(rows: &[Vec<Q>]) -> usize {
    let mut m = rows.to_vec();
    echelon(&mut m).len()
}

/// Greedy choice of row indices forming a maximal independent set.
pub fn independent_rows(rows: &[Vec<BigInt>]) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut basis: Vec<Vec<BigInt>> = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        basis.push(r.clone());
        if rank(&basis) == basis.len() {
            chosen.push(i);
        } else {
            basis.pop();
        }
    }
    chosen
}

/// Column indices `c` such that the submatrix on those columns has full row rank.
pub fn independent_columns(rows: &[Vec<BigInt>]) -> Vec<usize> {
    let mut m = to_q(rows);
    echelon(&mut m)
}

/// Inverse of a square nonsingular matrix.
pub fn inverse(m: &[Vec<BigInt>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = to_q(m);
    for (i, row) in a.iter_mut().enumerate() {
        row.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
    }
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(c, p);
        let inv = Q::one() / &a[c][c];
        for k in 0..2 * n {
            a[c][k] = &a[c][k] * &inv;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for k in 0..2 * n {
                    let t = &f * &a[c][k];
                    a[r][k] -= t;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn det_i64(m: &[Vec<i64>]) -> BigInt {
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .map(|r| r.iter().map(|&x| Q::from_integer(BigInt::from(x))).collect())
        .collect();
    let n = a.len();
    let mut det = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return BigInt::zero();
        };
        if p != c {
            a.swap(c, p);
            det = -det;
        }
        det *= &a[c][c];
        for r in c + 1..n {
            if a[r][c].is_zero() {
                continue;
            }
            let f = &a[r][c] / &a[c][c];
            for k in c..n {
                let t = &f * &a[c][k];
                a[r][k] -= t;
            }
        }
    }
    det.to_integer()
}
