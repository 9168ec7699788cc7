//! Cox-construction data of a fan, proper transforms, and the orbit-by-orbit
//! normal-crossings check above the origin.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::b1::{b_cut, classify_cones, BSet, ConeKind, Mode};
use crate::error::{Error, Result};
use crate::fan::{normal_fan, Fan};
use crate::linalg;
use crate::nondeg::{face_verdict, NondegeneracyVerdict, OracleConfig};
use crate::num::{self, Q};
use crate::poly::{fmt_monomial, fmt_terms, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct StackPresentation {
    pub n: usize,
    /// Fan ray indices: the standard rays `e_1..e_n`, then the exceptional rays.
    pub ray_order: Vec<usize>,
    pub variables: Vec<String>,
    pub exceptional: Vec<usize>,
    /// `n x #rays`, columns the ray generators, of the shape `[I | B]`.
    pub beta: Vec<Vec<i64>>,
    /// Torus weights: one row per variable, one column per exceptional ray.
    pub weights: Vec<Vec<i64>>,
    /// Per maximal cone, the variables (positions in `ray_order`) of its generator.
    pub irrelevant: Vec<Vec<usize>>,
    /// Minimal generators of the irrelevant ideal.
    pub irrelevant_minimal: Vec<Vec<usize>>,
    /// Exponents of the pullback of each `x_i` on the variables.
    pub pullback: Vec<Vec<i64>>,
}

impl StackPresentation {
    fn monomial(&self, e: &[i64]) -> String {
        let e: Vec<u64> = e.iter().map(|&x| x as u64).collect();
        fmt_monomial(&e, &self.variables).unwrap_or_else(|| "1".into())
    }

    /// Generators of the irrelevant ideal as monomials.
    pub fn irrelevant_monomials(&self, minimal: bool) -> Vec<String> {
        let gens = if minimal { &self.irrelevant_minimal } else { &self.irrelevant };
        gens.iter()
            .map(|g| {
                let mut e = vec![0i64; self.variables.len()];
                g.iter().for_each(|&v| e[v] = 1);
                self.monomial(&e)
            })
            .collect()
    }

    /// `x_i -> x_i' * prod u^...` for each `i`.
    pub fn pullback_strings(&self) -> Vec<String> {
        (0..self.n)
            .map(|i| format!("x{} -> {}", i + 1, self.monomial(&self.pullback[i])))
            .collect()
    }
}

/// Quotient presentation of the fan; standard rays must be present.
pub fn cox_presentation(fan: &Fan) -> Result<StackPresentation> {
    let n = fan.n;
    let mut ray_order = Vec::with_capacity(fan.rays.len());
    for i in 0..n {
        ray_order.push(fan.standard_ray(i).ok_or(Error::MissingStandardRay(i + 1))?);
    }
    let exceptional = fan.exceptional_rays();
    ray_order.extend(&exceptional);
    let mut variables: Vec<String> = (1..=n).map(|i| format!("x{i}'")).collect();
    variables.extend((1..=exceptional.len()).map(|k| format!("u{k}")));

    let beta: Vec<Vec<i64>> = (0..n).map(|i| ray_order.iter().map(|&r| fan.rays[r].u[i]).collect()).collect();
    let m = exceptional.len();
    let mut weights: Vec<Vec<i64>> = (0..n).map(|i| exceptional.iter().map(|&r| fan.rays[r].u[i]).collect()).collect();
    for k in 0..m {
        weights.push((0..m).map(|t| if t == k { -1 } else { 0 }).collect());
    }
    let irrelevant: Vec<Vec<usize>> = fan
        .maximal_cones()
        .map(|c| (0..ray_order.len()).filter(|&v| !c.rays.contains(&ray_order[v])).collect())
        .collect();
    let mut irrelevant_minimal: Vec<Vec<usize>> = Vec::new();
    let mut by_size = irrelevant.clone();
    by_size.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    for g in by_size {
        if !irrelevant_minimal.iter().any(|h| h.iter().all(|v| g.contains(v))) {
            irrelevant_minimal.push(g);
        }
    }
    irrelevant_minimal.sort();
    let pullback = beta.clone();
    Ok(StackPresentation { n, ray_order, variables, exceptional, beta, weights, irrelevant, irrelevant_minimal, pullback })
}

/// `f` pulled back along a fan and divided by the largest monomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TransformedPolynomial {
    pub variables: Vec<String>,
    /// Fan ray index of each variable.
    pub ray_order: Vec<usize>,
    /// `N_rho` for each variable.
    pub multiplicities: Vec<i64>,
    #[serde(with = "term_map")]
    pub terms: BTreeMap<Vec<u64>, Q>,
}

mod term_map {
    use super::*;
    use serde::{de, Deserializer, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Term {
        exponents: Vec<u64>,
        #[serde(with = "num::qstr")]
        coefficient: Q,
    }

    pub fn serialize<S: Serializer>(m: &BTreeMap<Vec<u64>, Q>, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(m.iter().map(|(e, c)| Term { exponents: e.clone(), coefficient: c.clone() }))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BTreeMap<Vec<u64>, Q>, D::Error> {
        let v = Vec::<Term>::deserialize(d)?;
        let len = v.len();
        let m: BTreeMap<_, _> = v.into_iter().map(|t| (t.exponents, t.coefficient)).collect();
        if m.len() != len {
            return Err(de::Error::custom("duplicate exponent vector"));
        }
        Ok(m)
    }
}

impl TransformedPolynomial {
    pub fn position(&self, ray: usize) -> Option<usize> {
        self.ray_order.iter().position(|&r| r == ray)
    }

    fn fmt_subset<'a>(&self, terms: impl Iterator<Item = (&'a Vec<u64>, &'a Q)>) -> String {
        let mut v: Vec<(&Vec<u64>, &Q)> = terms.collect();
        v.sort_by(|a, b| b.0.cmp(a.0));
        fmt_terms(v.into_iter().map(|(e, c)| (e.clone(), c)), &self.variables)
    }
}

impl fmt::Display for TransformedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_subset(self.terms.iter()))
    }
}

/// Exponent of term `a` on ray `rho` is `a . u_rho - N_rho`.
pub fn proper_transform(f: &Polynomial, fan: &Fan) -> Result<TransformedPolynomial> {
    if fan.n != f.n() {
        return Err(Error::Dimension { expected: f.n(), got: fan.n });
    }
    let pres = cox_presentation(fan)?;
    let us: Vec<&Vec<i64>> = pres.ray_order.iter().map(|&r| &fan.rays[r].u).collect();
    let multiplicities: Vec<i64> = us.iter().map(|u| f.order(u)).collect();
    let mut terms = BTreeMap::new();
    for (a, c) in f.terms() {
        let mut e = Vec::with_capacity(us.len());
        for (k, u) in us.iter().enumerate() {
            let x = a.dot(u) - multiplicities[k];
            if x < 0 {
                return Err(Error::NegativeExponent { ray: pres.ray_order[k] });
            }
            e.push(x as u64);
        }
        terms.insert(e, c.clone());
    }
    Ok(TransformedPolynomial { variables: pres.variables, ray_order: pres.ray_order, multiplicities, terms })
}

/// Set the variables of `cone` (fan ray indices) to zero.
pub fn orbit_restriction(fp: &TransformedPolynomial, cone: &[usize]) -> TransformedPolynomial {
    let pos: Vec<usize> = cone.iter().filter_map(|&r| fp.position(r)).collect();
    TransformedPolynomial {
        terms: fp
            .terms
            .iter()
            .filter(|(e, _)| pos.iter().all(|&k| e[k] == 0))
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect(),
        ..fp.clone()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CanonicalEntry {
    pub ray: usize,
    pub u: Vec<i64>,
    /// Coefficient `|u| - 1` in the relative canonical divisor.
    pub multiplicity: i64,
    pub nu: i64,
}

pub fn relative_canonical(fan: &Fan) -> Vec<CanonicalEntry> {
    fan.rays
        .iter()
        .enumerate()
        .map(|(i, r)| CanonicalEntry { ray: i, u: r.u.clone(), multiplicity: r.norm() - 1, nu: r.norm() })
        .collect()
}

/// `{(1,1)} together with (N_rho, |u_rho|)` over rays with `N_rho > 0`.
pub fn numerical_data(fan: &Fan, f: &Polynomial) -> BTreeSet<(i64, i64)> {
    let mut out: BTreeSet<(i64, i64)> = BTreeSet::new();
    out.insert((1, 1));
    for r in &fan.rays {
        let nr = f.order(&r.u);
        if nr > 0 {
            out.insert((nr, r.norm()));
        }
    }
    out
}

/// Finite group of the chart of a simplicial maximal cone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ChartGroup {
    pub cone: Vec<usize>,
    /// Rows: standard directions outside the cone; columns: exceptional rays of the cone.
    pub matrix: Vec<Vec<i64>>,
    /// Non-unit invariant factors.
    pub invariant_factors: Vec<i64>,
    pub order: i64,
    /// `|det|` of the matrix with the cone's generators as columns.
    pub det: i64,
}

/// Smith invariant factors (absolute values, in divisibility order) of an integer matrix.
pub fn smith_invariants(m: &[Vec<i64>]) -> Vec<i128> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                diag.extend(std::iter::repeat_n(0, rows.min(cols) - t));
                return diag;
            };
            a.swap(t, bi);
            for row in a.iter_mut() {
                row.swap(t, bj);
            }
            let p = a[t][t];
            let mut dirty = false;
            for i in t + 1..rows {
                let qv = a[i][t] / p;
                for j in t..cols {
                    a[i][j] -= qv * a[t][j];
                }
                dirty |= a[i][t] != 0;
            }
            for j in t + 1..cols {
                let qv = a[t][j] / p;
                for i in t..rows {
                    a[i][j] -= qv * a[i][t];
                }
                dirty |= a[t][j] != 0;
            }
            if dirty {
                continue;
            }
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % p != 0));
            if let Some(i) = bad {
                for j in t..cols {
                    a[t][j] += a[i][j];
                }
                continue;
            }
            diag.push(p.abs());
            break;
        }
    }
    diag
}

pub fn chart_groups(fan: &Fan) -> Result<Vec<ChartGroup>> {
    if !fan.simplicial {
        return Err(Error::Invariant("chart groups need a simplicial fan".into()));
    }
    let mut out = Vec::new();
    for c in fan.maximal_cones() {
        let ex: Vec<usize> = c.rays.iter().copied().filter(|&r| fan.rays[r].standard.is_none()).collect();
        let off: Vec<usize> = (0..fan.n)
            .filter(|&i| !c.rays.iter().any(|&r| fan.rays[r].standard == Some(i)))
            .collect();
        let matrix: Vec<Vec<i64>> = off.iter().map(|&i| ex.iter().map(|&r| fan.rays[r].u[i]).collect()).collect();
        let inv = smith_invariants(&matrix);
        let order: i128 = inv.iter().product();
        let full: Vec<Vec<i64>> = (0..fan.n).map(|i| c.rays.iter().map(|&r| fan.rays[r].u[i]).collect()).collect();
        let det = linalg::det_i64(&full).abs();
        out.push(ChartGroup {
            cone: c.rays.clone(),
            matrix,
            invariant_factors: inv.iter().filter(|&&d| d != 1).map(|&d| d as i64).collect(),
            order: order as i64,
            det: det.to_i64().ok_or_else(|| Error::Overflow(det.to_string()))?,
        });
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Case {
    A,
    B,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum OrbitDetail {
    Nondegeneracy { restriction: String, oracle: NondegeneracyVerdict },
    UnitDerivative {
        #[serde(with = "num::dir")]
        base: usize,
        witness: String,
        apex: Vec<u32>,
    },
    ShapeViolation {
        #[serde(with = "num::dirs")]
        bases: Vec<usize>,
        residual: String,
    },
    NoncompactFace { facets: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct OrbitRecord {
    /// Ray indices in the fan of the cut.
    pub cone: Vec<usize>,
    pub normals: Vec<Vec<i64>>,
    pub class: ConeKind,
    pub case: Case,
    pub pass: bool,
    pub verdict: String,
    pub detail: OrbitDetail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SNCCertificate {
    pub pass: bool,
    pub rays: Vec<Vec<i64>>,
    pub proper_transform: String,
    pub orbits: Vec<OrbitRecord>,
    pub numerical_data: Vec<(i64, i64)>,
}

impl SNCCertificate {
    pub fn failures(&self) -> impl Iterator<Item = &OrbitRecord> {
        self.orbits.iter().filter(|o| !o.pass)
    }
}

/// Check every orbit above the origin of the blow-up along the normal fan of the cut.
pub fn verify_desingularization(f: &Polynomial, b: &BSet, config: &OracleConfig) -> Result<SNCCertificate> {
    config.validate()?;
    let p = f.newton_polyhedron()?;
    if b.polyhedron != p.id {
        return Err(Error::InvalidBSet("drop set belongs to another polyhedron".into()));
    }
    let cut = b_cut(&p, b)?;
    let dagger = normal_fan(&cut.polyhedron);
    let original = normal_fan(&p);
    let classes = classify_cones(&dagger, &p, &original, b)?;
    let fp = proper_transform(f, &dagger)?;
    let n = f.n();
    let mut cache: BTreeMap<Vec<usize>, NondegeneracyVerdict> = BTreeMap::new();
    let mut orbits = Vec::new();
    for c in &classes {
        let covers = (0..n).all(|i| c.rays.iter().any(|&r| dagger.rays[r].u[i] > 0));
        if !covers {
            continue;
        }
        let record = match c.kind {
            ConeKind::Old => {
                let face = c.face.as_ref().expect("old cones carry a face");
                let restriction = orbit_restriction(&fp, &c.rays);
                if !face.is_compact() {
                    OrbitRecord {
                        cone: c.rays.clone(),
                        normals: c.normals.clone(),
                        class: c.kind,
                        case: Case::A,
                        pass: false,
                        verdict: "noncompact-face".into(),
                        detail: OrbitDetail::NoncompactFace { facets: face.facets.clone() },
                    }
                } else {
                    let fpoly = f.face_polynomial(&p, face)?;
                    if fpoly.terms().len() != restriction.terms.len() {
                        return Err(Error::Invariant(format!(
                            "restriction to {:?} does not match the face polynomial",
                            c.rays
                        )));
                    }
                    let v = match cache.get(&face.facets) {
                        Some(v) => v.clone(),
                        None => {
                            let v = face_verdict(&fpoly, face.dim, face.facets.clone(), config)?;
                            cache.insert(face.facets.clone(), v.clone());
                            v
                        }
                    };
                    OrbitRecord {
                        cone: c.rays.clone(),
                        normals: c.normals.clone(),
                        class: c.kind,
                        case: Case::A,
                        pass: v.passes(),
                        verdict: serde_json::to_value(v.verdict).expect("enum").as_str().unwrap_or("").into(),
                        detail: OrbitDetail::Nondegeneracy { restriction: restriction.to_string(), oracle: v },
                    }
                }
            }
            ConeKind::New => case_b(f, &fp, &dagger, c, b.mode),
        };
        orbits.push(record);
    }
    Ok(SNCCertificate {
        pass: orbits.iter().all(|o| o.pass),
        rays: dagger.rays.iter().map(|r| r.u.clone()).collect(),
        proper_transform: fp.to_string(),
        orbits,
        numerical_data: numerical_data(&dagger, f).into_iter().collect(),
    })
}

fn case_b(
    f: &Polynomial,
    fp: &TransformedPolynomial,
    dagger: &Fan,
    c: &crate::b1::ConeClassification,
    mode: Mode,
) -> OrbitRecord {
    let candidates: Vec<usize> = match (c.base_ray, mode) {
        (Some(b), _) => vec![b],
        (None, Mode::General) => c
            .rays
            .iter()
            .copied()
            .filter(|&r| dagger.rays[r].standard.is_some() && f.order(&dagger.rays[r].u) == 0)
            .collect(),
        (None, _) => vec![],
    };
    let mut residual = String::from("no base ray");
    for &b in &candidates {
        let rest: Vec<usize> = c.rays.iter().copied().filter(|&r| r != b).collect();
        let restr = orbit_restriction(fp, &rest);
        let k = fp.position(b).expect("base ray present");
        let constant = restr.terms.iter().filter(|(e, _)| e[k] == 0).count();
        let linear: Vec<(&Vec<u64>, &Q)> = restr.terms.iter().filter(|(e, _)| e[k] == 1).collect();
        if constant == 0 && linear.len() == 1 {
            let (e, _) = linear[0];
            let apex = f
                .terms()
                .keys()
                .find(|a| {
                    fp.ray_order
                        .iter()
                        .enumerate()
                        .all(|(t, &r)| a.dot(&dagger.rays[r].u) - fp.multiplicities[t] == e[t] as i64)
                })
                .map(|a| a.0.clone())
                .unwrap_or_default();
            let witness = fmt_monomial(e, &fp.variables).unwrap_or_else(|| "1".into());
            return OrbitRecord {
                cone: c.rays.clone(),
                normals: c.normals.clone(),
                class: c.kind,
                case: Case::B,
                pass: true,
                verdict: "unit-derivative".into(),
                detail: OrbitDetail::UnitDerivative {
                    base: dagger.rays[b].standard.expect("standard"),
                    witness,
                    apex,
                },
            };
        }
        let bad = restr.terms.iter().filter(|(e, _)| e[k] <= 1);
        residual = fp.fmt_subset(bad);
    }
    OrbitRecord {
        cone: c.rays.clone(),
        normals: c.normals.clone(),
        class: c.kind,
        case: Case::B,
        pass: false,
        verdict: "shape-violation".into(),
        detail: OrbitDetail::ShapeViolation {
            bases: candidates.iter().filter_map(|&b| dagger.rays[b].standard).collect(),
            residual,
        },
    }
}

/// Ray generator matrix with the given columns, used by determinant checks.
pub fn generator_matrix(fan: &Fan, cone: &[usize]) -> Vec<Vec<BigInt>> {
    (0..fan.n)
        .map(|i| cone.iter().map(|&r| BigInt::from(fan.rays[r].u[i])).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::b1::{choose_consistent, general_bset};
    use crate::polyhedron::{dd_convert, HalfSpace, Representation};

    fn fan_of(hs: &[(Vec<i64>, i64)]) -> Fan {
        let hs = hs.iter().map(|(u, l)| HalfSpace::new(u.clone(), num::q(*l)).unwrap()).collect();
        normal_fan(&dd_convert(&Representation::HalfSpaces(hs), 3).unwrap())
    }

    #[test]
    fn presentation_of_example_one() {
        let fan = fan_of(&[(vec![9, 4, 6], 18)]);
        let pres = cox_presentation(&fan).unwrap();
        assert_eq!(pres.variables, vec!["x1'", "x2'", "x3'", "u1"]);
        assert_eq!(pres.pullback_strings(), vec!["x1 -> x1'*u1^9", "x2 -> x2'*u1^4", "x3 -> x3'*u1^6"]);
        assert_eq!(pres.irrelevant_monomials(true), vec!["x1'", "x2'", "x3'"]);
        for i in 0..3 {
            for k in 0..pres.exceptional.len() {
                let s: i64 = (0..pres.variables.len()).map(|v| pres.beta[i][v] * pres.weights[v][k]).sum();
                assert_eq!(s, 0);
            }
        }
        let f = Polynomial::parse("x1^2+x1*x2^4+x2^3*x3+x3^3", 3).unwrap();
        let fp = proper_transform(&f, &fan).unwrap();
        assert_eq!(fp.to_string(), "x1'^2 + x1'*x2'^4*u1^7 + x2'^3*x3' + x3'^3");
        let u = fan.ray_of_normal(&[9, 4, 6]).unwrap();
        assert_eq!(orbit_restriction(&fp, &[u]).to_string(), "x1'^2 + x2'^3*x3' + x3'^3");
        let e1 = fan.standard_ray(0).unwrap();
        assert_eq!(orbit_restriction(&fp, &[u, e1]).to_string(), "x2'^3*x3' + x3'^3");
        assert_eq!(orbit_restriction(&fp, &[]), fp);
    }

    #[test]
    fn presentation_of_example_three_and_standard() {
        let fan = fan_of(&[(vec![0, 1, 1], 2)]);
        let pres = cox_presentation(&fan).unwrap();
        let w: Vec<i64> = pres.weights[..3].iter().map(|r| r[0]).collect();
        assert_eq!(w, vec![0, 1, 1]);
        assert_eq!(pres.irrelevant_monomials(true), vec!["x2'", "x3'"]);
        let id = fan_of(&[]);
        let pres = cox_presentation(&id).unwrap();
        assert!(pres.exceptional.is_empty());
        assert_eq!(pres.pullback_strings(), vec!["x1 -> x1'", "x2 -> x2'", "x3 -> x3'"]);
        let rc = relative_canonical(&fan);
        let e = rc.iter().find(|e| e.u == vec![0, 1, 1]).unwrap();
        assert_eq!((e.multiplicity, e.nu), (1, 2));
    }

    #[test]
    fn verify_example_one() {
        let f = Polynomial::parse("x1^2+x1*x2^4+x2^3*x3+x3^3", 3).unwrap();
        let p = f.newton_polyhedron().unwrap();
        let b = choose_consistent(&p, &[1, 2]).unwrap().accepted().unwrap().clone();
        let cert = verify_desingularization(&f, &b, &OracleConfig::default()).unwrap();
        assert!(cert.pass, "{cert:#?}");
        assert_eq!(cert.numerical_data, vec![(1, 1), (18, 19)]);
        let bs: Vec<&OrbitRecord> = cert.orbits.iter().filter(|o| o.case == Case::B).collect();
        assert_eq!(bs.len(), 1);
        let want: BTreeSet<Vec<i64>> = [vec![9, 4, 6], vec![1, 0, 0], vec![0, 0, 1]].into_iter().collect();
        assert_eq!(bs[0].normals.iter().cloned().collect::<BTreeSet<_>>(), want);
        match &bs[0].detail {
            OrbitDetail::UnitDerivative { base, apex, witness } => {
                assert_eq!(*base, 2);
                assert_eq!(apex, &vec![0, 3, 1]);
                assert_eq!(witness, "x2'^3*x3'");
            }
            d => panic!("{d:?}"),
        }
    }

    #[test]
    fn general_mode_failure_is_reported() {
        // dropping both facets of x1^2 + x2*x3 leaves the identity, whose origin orbit fails
        let f = Polynomial::parse("x1^2+x2*x3", 3).unwrap();
        let p = f.newton_polyhedron().unwrap();
        let b = general_bset(&p, &[0, 1]).unwrap();
        let cert = verify_desingularization(&f, &b, &OracleConfig::default()).unwrap();
        assert!(!cert.pass);
    }

    #[test]
    fn smith_forms() {
        assert_eq!(smith_invariants(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(smith_invariants(&[vec![4]]), vec![4]);
        assert_eq!(smith_invariants(&[vec![2, 4], vec![6, 8]]), vec![2, 4]);
        assert_eq!(smith_invariants(&[vec![0, 0], vec![0, 0]]), vec![0, 0]);
    }
}
