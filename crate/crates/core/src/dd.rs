//! Double description: extreme rays of a pointed cone `{y : A y >= 0}`.
//!
//! Rays are kept as primitive integer vectors; adjacency uses the combinatorial test.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::num::{clear_denominators, primitive_big};

#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }
    fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }
    fn contains_all(&self, o: &Bits) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| b & !a == 0)
    }
}

pub(crate) fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Extreme rays of `{y in R^d : row . y >= 0 for all rows}`.
///
/// The rows must have rank `d`, otherwise the cone has a lineality space and the call fails.
pub(crate) fn extreme_rays(rows: &[Vec<BigInt>], d: usize) -> Result<Vec<Vec<BigInt>>> {
    let rows: Vec<&Vec<BigInt>> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect();
    let owned: Vec<Vec<BigInt>> = rows.iter().map(|r| (*r).clone()).collect();
    let basis = linalg::independent_rows(&owned);
    if basis.len() != d {
        return Err(Error::Invariant(format!(
            "double description needs rank {d}, got {}",
            basis.len()
        )));
    }
    let square: Vec<Vec<BigInt>> = basis.iter().map(|&i| owned[i].clone()).collect();
    let inv = linalg::inverse(&square).ok_or_else(|| Error::Invariant("singular basis".into()))?;

    let m = owned.len();
    let mut rays: Vec<(Vec<BigInt>, Bits)> = Vec::with_capacity(d);
    for j in 0..d {
        let col: Vec<_> = (0..d).map(|i| inv[i][j].clone()).collect();
        let r = clear_denominators(&col);
        let mut z = Bits::new(m);
        for (k, &b) in basis.iter().enumerate() {
            if k != j {
                z.set(b);
            }
        }
        rays.push((r, z));
    }

    for h in (0..m).filter(|i| !basis.contains(i)) {
        let row = &owned[h];
        let vals: Vec<BigInt> = rays.iter().map(|(r, _)| dot(row, r)).collect();
        let mut next: Vec<(Vec<BigInt>, Bits)> = Vec::new();
        for (i, (r, z)) in rays.iter().enumerate() {
            if vals[i].is_zero() {
                let mut z = z.clone();
                z.set(h);
                next.push((r.clone(), z));
            } else if vals[i].is_positive() {
                next.push((r.clone(), z.clone()));
            }
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].1.and(&rays[q].1);
                if (common.count() as usize) + 2 < d {
                    continue;
                }
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(k, (_, z))| k != p && k != q && z.contains_all(&common));
                if blocked {
                    continue;
                }
                let mut r: Vec<BigInt> = rays[q]
                    .0
                    .iter()
                    .zip(&rays[p].0)
                    .map(|(yn, yp)| &vals[p] * yn - &vals[q] * yp)
                    .collect();
                primitive_big(&mut r);
                let mut z = common;
                z.set(h);
                next.push((r, z));
            }
        }
        rays = next;
    }
    Ok(rays.into_iter().map(|(r, _)| r).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    fn sorted(mut v: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
        v.sort();
        v
    }

    #[test]
    fn orthant_is_its_own_dual() {
        let rays = extreme_rays(&big(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), 3).unwrap();
        assert_eq!(sorted(rays), sorted(big(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])));
    }

    #[test]
    fn square_cone_has_four_rays() {
        // cone over a square: x +- y >= 0 style constraints on (z, x, y)
        let rows = big(&[&[1, 1, 0], &[1, -1, 0], &[1, 0, 1], &[1, 0, -1]]);
        let rays = sorted(extreme_rays(&rows, 3).unwrap());
        assert_eq!(
            rays,
            sorted(big(&[&[1, 1, 1], &[1, 1, -1], &[1, -1, 1], &[1, -1, -1]]))
        );
    }

    #[test]
    fn redundant_rows_are_harmless() {
        let rows = big(&[&[1, 0], &[0, 1], &[1, 1], &[2, 0], &[1, 0]]);
        let rays = sorted(extreme_rays(&rows, 2).unwrap());
        assert_eq!(rays, sorted(big(&[&[1, 0], &[0, 1]])));
    }

    #[test]
    fn lineality_is_rejected() {
        assert!(extreme_rays(&big(&[&[1, 0]]), 2).is_err());
    }
}
