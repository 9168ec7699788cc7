//! Face-by-face non-degeneracy: exact for faces of dimension at most one,
//! exhaustive torus search over small prime fields otherwise.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::num::{self, Q};
use crate::poly::Polynomial;
use crate::upoly::UPoly;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleConfig {
    pub primes: Vec<u64>,
    /// Maximum number of torus points enumerated per face and prime.
    pub budget: u64,
    /// Shuffles the prime order when set.
    pub seed: Option<u64>,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { primes: vec![101, 103, 107], budget: 10_000_000, seed: None }
    }
}

impl OracleConfig {
    pub fn validate(&self) -> Result<()> {
        for &p in &self.primes {
            if p < 3 {
                return Err(Error::PrimeTooSmall(p));
            }
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
        }
        Ok(())
    }

    /// Primes in processing order.
    pub fn ordered_primes(&self) -> Vec<u64> {
        let mut ps = self.primes.clone();
        if let Some(seed) = self.seed {
            ps.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        }
        ps
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ExactLowDim,
    FiniteFieldSampling,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Nondegenerate,
    Degenerate,
    ProbablyNondegenerate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// A point of the torus over `F_p` where the face polynomial and its partials vanish.
    TorusPoint { prime: u64, point: Vec<u64> },
    /// Repeated factor of the edge polynomial, coefficients ascending, when no prime produced a point.
    RepeatedFactor {
        #[serde(with = "num::qlist")]
        factor: Vec<Q>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct NondegeneracyVerdict {
    /// Facet-index set of the face.
    pub face: Vec<usize>,
    pub dim: usize,
    pub method: Method,
    pub primes: Vec<u64>,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
}

impl NondegeneracyVerdict {
    pub fn passes(&self) -> bool {
        self.verdict != Verdict::Degenerate
    }
}

/// One verdict per compact face of the Newton polyhedron of `f`, in lattice order.
pub fn nondegeneracy_check(f: &Polynomial, config: &OracleConfig) -> Result<Vec<NondegeneracyVerdict>> {
    config.validate()?;
    let p = f.newton_polyhedron()?;
    let mut out = Vec::new();
    for face in p.faces.iter().filter(|fc| fc.is_compact()) {
        let fp = f.face_polynomial(&p, face)?;
        out.push(face_verdict(&fp, face.dim, face.facets.clone(), config)?);
    }
    Ok(out)
}

/// Verdict for one face polynomial of the given face dimension.
pub fn face_verdict(
    fp: &Polynomial,
    dim: usize,
    face: Vec<usize>,
    config: &OracleConfig,
) -> Result<NondegeneracyVerdict> {
    config.validate()?;
    match dim {
        0 => Ok(NondegeneracyVerdict {
            face,
            dim,
            method: Method::ExactLowDim,
            primes: vec![],
            verdict: Verdict::Nondegenerate,
            witness: None,
        }),
        1 => {
            let p = edge_polynomial(fp)?;
            if p.is_squarefree() {
                return Ok(NondegeneracyVerdict {
                    face,
                    dim,
                    method: Method::ExactLowDim,
                    primes: vec![],
                    verdict: Verdict::Nondegenerate,
                    witness: None,
                });
            }
            let (primes, point) = match torus_search(fp, config) {
                Ok(r) => r,
                Err(Error::BudgetExceeded { .. }) | Err(Error::NoUsablePrime) => (vec![], None),
                Err(e) => return Err(e),
            };
            let witness = point.unwrap_or_else(|| Witness::RepeatedFactor {
                factor: p.gcd(&p.derivative()).0,
            });
            Ok(NondegeneracyVerdict {
                face,
                dim,
                method: Method::ExactLowDim,
                primes,
                verdict: Verdict::Degenerate,
                witness: Some(witness),
            })
        }
        _ => {
            let (primes, witness) = torus_search(fp, config)?;
            let verdict = if witness.is_some() {
                Verdict::Degenerate
            } else {
                Verdict::ProbablyNondegenerate
            };
            Ok(NondegeneracyVerdict {
                face,
                dim,
                method: Method::FiniteFieldSampling,
                primes,
                verdict,
                witness,
            })
        }
    }
}

/// Write a polynomial supported on a lattice segment as `x^v0 * p(x^d)` and return `p`.
pub fn edge_polynomial(fp: &Polynomial) -> Result<UPoly> {
    let pts: Vec<Vec<i64>> = fp.terms().keys().map(|e| e.0.iter().map(|&x| x as i64).collect()).collect();
    let v0 = pts.first().expect("nonempty").clone();
    let v1 = pts.last().expect("nonempty").clone();
    let diff: Vec<i64> = v1.iter().zip(&v0).map(|(a, b)| a - b).collect();
    let g = num::gcd_i64(&diff);
    if g == 0 {
        return Ok(UPoly::constant(fp.terms().values().next().expect("nonempty").clone()));
    }
    let d: Vec<i64> = diff.iter().map(|x| x / g).collect();
    let j = d.iter().position(|&x| x != 0).expect("nonzero direction");
    let mut coeffs = vec![Q::zero(); g as usize + 1];
    for (a, c) in pts.iter().zip(fp.terms().values()) {
        let k = (a[j] - v0[j]) / d[j];
        let on_line = k >= 0 && k <= g && a.iter().zip(&v0).zip(&d).all(|((x, y), z)| x - y == k * z);
        if !on_line {
            return Err(Error::Invariant("edge polynomial support is not collinear".into()));
        }
        coeffs[k as usize] = c.clone();
    }
    Ok(UPoly::new(coeffs))
}

fn mod_p(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().expect("reduced")
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Exhaustive search of `(F_p^*)^n` for a common zero of `f` and all `x_i df/dx_i`.
///
/// Primes dividing a coefficient numerator are skipped, since reduction would change the support.
pub fn torus_search(fp: &Polynomial, config: &OracleConfig) -> Result<(Vec<u64>, Option<Witness>)> {
    config.validate()?;
    let n = fp.n();
    let mut used = Vec::new();
    for p in config.ordered_primes() {
        let points = (p as u128 - 1).pow(n as u32);
        if points > config.budget as u128 {
            return Err(Error::BudgetExceeded { points, budget: config.budget });
        }
        if fp.terms().values().any(|c| (c.denom() % p).is_zero()) {
            return Err(Error::PrimeDividesDenominator(p));
        }
        if fp.terms().values().any(|c| (c.numer() % p).is_zero()) {
            continue;
        }
        used.push(p);
        if let Some(pt) = search_prime(fp, p) {
            return Ok((used, Some(Witness::TorusPoint { prime: p, point: pt })));
        }
    }
    if used.is_empty() {
        return Err(Error::NoUsablePrime);
    }
    Ok((used, None))
}

fn search_prime(fp: &Polynomial, p: u64) -> Option<Vec<u64>> {
    let n = fp.n();
    let terms: Vec<(Vec<u64>, u64)> = fp
        .terms()
        .iter()
        .map(|(e, c)| {
            let cm = mod_p(c.numer(), p) * inv_mod(mod_p(c.denom(), p), p) % p;
            (e.0.iter().map(|&x| x as u64).collect(), cm)
        })
        .collect();
    // powers[i][t][x] = x^{e_{t,i}} for x in 1..p
    let powers: Vec<Vec<Vec<u64>>> = (0..n)
        .map(|i| {
            terms
                .iter()
                .map(|(e, _)| (0..p).map(|x| pow_mod(x, e[i], p)).collect())
                .collect()
        })
        .collect();
    let weights: Vec<Vec<u64>> = (0..n).map(|i| terms.iter().map(|(e, _)| e[i] % p).collect()).collect();
    let m = terms.len();
    // outer[t] = c_t * prod_{i >= 1} x_i^{e_{t,i}}, refreshed when x_1.. change
    let mut x = vec![1u64; n];
    let mut outer = vec![0u64; m];
    let mut vals = vec![0u64; m];
    loop {
        for (t, (_, c)) in terms.iter().enumerate() {
            outer[t] = (1..n).fold(*c, |v, i| v * powers[i][t][x[i] as usize] % p);
        }
        for x0 in 1..p {
            for t in 0..m {
                vals[t] = outer[t] * powers[0][t][x0 as usize] % p;
            }
            if vals.iter().sum::<u64>() % p == 0
                && (0..n).all(|i| vals.iter().zip(&weights[i]).map(|(v, w)| v * w % p).sum::<u64>() % p == 0)
            {
                x[0] = x0;
                return Some(x);
            }
        }
        let mut i = 1;
        loop {
            if i >= n {
                return None;
            }
            x[i] += 1;
            if x[i] < p {
                break;
            }
            x[i] = 1;
            i += 1;
        }
    }
}
