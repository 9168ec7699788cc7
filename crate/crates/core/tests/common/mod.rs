#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use toric_bcut::num::q;
use toric_bcut::{NewtonPolyhedron, Polynomial, Q};

pub const EXAMPLES: [&str; 3] =
    ["x1^2 + x1*x2^4 + x2^3*x3 + x3^3", "x1^2 + x2*x3", "x2*x3 + x1^2*x2^2 + x1^2*x3^2"];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Distinct nonzero exponent vectors; entries favour 0 and 1 so that B1 data shows up.
pub fn random_support(rng: &mut ChaCha8Rng, n: usize, max_points: usize, max_entry: u32) -> Vec<Vec<u32>> {
    let available = (max_entry as usize + 1).pow(n as u32) - 1;
    let k = rng.gen_range(1..=max_points.min(available));
    let mut out: BTreeSet<Vec<u32>> = BTreeSet::new();
    while out.len() < k {
        let e: Vec<u32> = (0..n)
            .map(|_| if rng.gen_bool(0.45) { 0 } else { rng.gen_range(1..=max_entry) })
            .collect();
        if e.iter().any(|&x| x > 0) {
            out.insert(e);
        }
    }
    out.into_iter().collect()
}

pub fn random_polynomial(rng: &mut ChaCha8Rng, n: usize, max_points: usize, max_entry: u32) -> Polynomial {
    let support = random_support(rng, n, max_points, max_entry);
    let terms: Vec<(Vec<u32>, Q)> = support
        .into_iter()
        .map(|e| {
            let c = rng.gen_range(1..=9) * if rng.gen_bool(0.5) { 1 } else { -1 };
            (e, q(c))
        })
        .collect();
    Polynomial::new(n, terms).unwrap()
}

pub fn random_orthant_point(rng: &mut ChaCha8Rng, n: usize) -> Vec<Q> {
    (0..n).map(|_| Q::new(rng.gen_range(0..=40).into(), rng.gen_range(1..=7).into())).collect()
}

pub fn random_weight(rng: &mut ChaCha8Rng, n: usize, max: i64) -> Vec<i64> {
    (0..n).map(|_| rng.gen_range(0..=max)).collect()
}

/// `min a.u` over the generating support, independent of the vertex list.
pub fn brute_phi(support: &[Vec<u32>], u: &[i64]) -> i64 {
    support.iter().map(|a| a.iter().zip(u).map(|(&x, &y)| x as i64 * y).sum::<i64>()).min().unwrap()
}

/// Facet indices of positive level that carry at least one B1 certificate.
pub fn b1_facets(p: &NewtonPolyhedron) -> Vec<usize> {
    let certs = toric_bcut::detect_b1(p);
    p.positive_facets()
        .into_iter()
        .filter(|j| certs.get(j).is_some_and(|v| !v.is_empty()) && p.facets[*j].half_space.coordinate().is_none())
        .collect()
}

/// All nonempty subsets of `items`, capped at `limit` elements.
pub fn subsets(items: &[usize], limit: usize) -> Vec<Vec<usize>> {
    let items = &items[..items.len().min(limit)];
    (1u32..(1 << items.len()))
        .map(|mask| (0..items.len()).filter(|&i| mask & (1 << i) != 0).map(|i| items[i]).collect())
        .collect()
}
