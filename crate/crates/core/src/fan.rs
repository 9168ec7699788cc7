//! Fans refining the positive orthant: normal fans, duality, inscribability and
//! pulling subdivisions.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::dd;
use crate::error::{Error, Result};
use crate::linalg;
use crate::num::{self, Q};
use crate::polyhedron::{Face, NewtonPolyhedron};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ray {
    pub u: Vec<i64>,
    pub dual_facet: Option<usize>,
    /// `Some(i)` when `u = e_i`.
    pub standard: Option<usize>,
}

impl Ray {
    pub fn new(u: Vec<i64>, dual_facet: Option<usize>) -> Self {
        let nz: Vec<usize> = (0..u.len()).filter(|&i| u[i] != 0).collect();
        let standard = (nz.len() == 1 && u[nz[0]] == 1).then(|| nz[0]);
        Ray { u, dual_facet, standard }
    }

    /// `|u|`, the sum of the entries.
    pub fn norm(&self) -> i64 {
        num::l1(&self.u)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Cone {
    #[serde(rename = "rayIdx")]
    pub rays: Vec<usize>,
    pub dim: usize,
    pub dual_face: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "FanJson", try_from = "FanJson")]
pub struct Fan {
    pub n: usize,
    pub rays: Vec<Ray>,
    /// Every cone, closed under faces, sorted by dimension then ray set.
    pub cones: Vec<Cone>,
    /// Indices into `cones`.
    pub maximal: Vec<usize>,
    pub simplicial: bool,
    /// Id of the polyhedron this fan is the normal fan of.
    pub source: Option<u64>,
    /// Ray indices sorted lexicographically by generator; fixes all tie-breaking.
    pub ray_order: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct FanJson {
    n: usize,
    rays: Vec<Vec<i64>>,
    cones: Vec<Cone>,
    maximal: Vec<usize>,
    simplicial: bool,
    ray_dual_facet: Vec<Option<usize>>,
    source: Option<u64>,
    ray_order: Vec<usize>,
}

impl From<Fan> for FanJson {
    fn from(f: Fan) -> Self {
        FanJson {
            n: f.n,
            ray_dual_facet: f.rays.iter().map(|r| r.dual_facet).collect(),
            rays: f.rays.into_iter().map(|r| r.u).collect(),
            cones: f.cones,
            maximal: f.maximal,
            simplicial: f.simplicial,
            source: f.source,
            ray_order: f.ray_order,
        }
    }
}

impl TryFrom<FanJson> for Fan {
    type Error = String;
    fn try_from(j: FanJson) -> std::result::Result<Self, String> {
        if j.ray_dual_facet.len() != j.rays.len() {
            return Err("rayDualFacet length mismatch".into());
        }
        if j.cones.iter().flat_map(|c| &c.rays).any(|&r| r >= j.rays.len())
            || j.maximal.iter().any(|&m| m >= j.cones.len())
        {
            return Err("index out of range".into());
        }
        Ok(Fan {
            n: j.n,
            rays: j.rays.into_iter().zip(j.ray_dual_facet).map(|(u, d)| Ray::new(u, d)).collect(),
            cones: j.cones,
            maximal: j.maximal,
            simplicial: j.simplicial,
            source: j.source,
            ray_order: j.ray_order,
        })
    }
}

/// A facet of a cone: the rays it contains and an inequality `normal . x >= 0` valid on the cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeFacet {
    pub rays: Vec<usize>,
    pub normal: Vec<BigInt>,
}

fn big_rows(vecs: &[&Vec<i64>]) -> Vec<Vec<BigInt>> {
    vecs.iter().map(|v| v.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

/// Facets of the cone generated by `vecs`, as index sets into `vecs`.
pub fn cone_facets(vecs: &[&Vec<i64>]) -> Result<Vec<ConeFacet>> {
    let rows = big_rows(vecs);
    let cols = linalg::independent_columns(&rows);
    let k = cols.len();
    if k == 0 {
        return Ok(vec![]);
    }
    let n = vecs[0].len();
    let proj: Vec<Vec<BigInt>> = rows.iter().map(|r| cols.iter().map(|&c| r[c].clone()).collect()).collect();
    let ys = dd::extreme_rays(&proj, k)?;
    let mut out: Vec<ConeFacet> = Vec::new();
    for y in ys {
        let rays: Vec<usize> = (0..vecs.len()).filter(|&i| dd::dot(&y, &proj[i]).is_zero()).collect();
        if out.iter().any(|f| f.rays == rays) {
            continue;
        }
        let mut normal = vec![BigInt::zero(); n];
        for (t, &c) in cols.iter().enumerate() {
            normal[c] = y[t].clone();
        }
        out.push(ConeFacet { rays, normal });
    }
    out.sort_by(|a, b| a.rays.cmp(&b.rays));
    Ok(out)
}

/// All faces (including the zero cone and the cone itself) of the cone on `subset`.
fn cone_faces(
    all: &[Ray],
    subset: &[usize],
    memo: &mut BTreeMap<Vec<usize>, BTreeSet<Vec<usize>>>,
) -> Result<BTreeSet<Vec<usize>>> {
    if let Some(f) = memo.get(subset) {
        return Ok(f.clone());
    }
    let vecs: Vec<&Vec<i64>> = subset.iter().map(|&i| &all[i].u).collect();
    let mut out = BTreeSet::new();
    out.insert(subset.to_vec());
    for f in cone_facets(&vecs)? {
        let g: Vec<usize> = f.rays.iter().map(|&t| subset[t]).collect();
        out.extend(cone_faces(all, &g, memo)?);
    }
    memo.insert(subset.to_vec(), out.clone());
    Ok(out)
}

fn lex_order(rays: &[Ray]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..rays.len()).collect();
    order.sort_by(|&a, &b| rays[a].u.cmp(&rays[b].u));
    order
}

fn rank_of(rays: &[Ray], set: &[usize]) -> usize {
    let v: Vec<Vec<i64>> = set.iter().map(|&i| rays[i].u.clone()).collect();
    linalg::rank_i64(&v)
}

impl Fan {
    /// Fan generated by the given maximal cones; faces are found by double description.
    pub fn from_maximal(n: usize, rays: Vec<Ray>, maximal: Vec<Vec<usize>>) -> Result<Fan> {
        for r in &rays {
            if r.u.len() != n || r.u.iter().any(|&x| x < 0) || num::gcd_i64(&r.u) != 1 {
                return Err(Error::Invariant(format!("ray {:?} is not a primitive orthant vector", r.u)));
            }
        }
        let mut memo = BTreeMap::new();
        let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut maxsets: BTreeSet<Vec<usize>> = BTreeSet::new();
        for m in maximal {
            let mut m = m;
            m.sort();
            m.dedup();
            if m.iter().any(|&i| i >= rays.len()) {
                return Err(Error::NotInStructure);
            }
            all.extend(cone_faces(&rays, &m, &mut memo)?);
            maxsets.insert(m);
        }
        Ok(Self::assemble(n, rays, all, &maxsets, None, |_| None))
    }

    fn assemble(
        n: usize,
        rays: Vec<Ray>,
        sets: BTreeSet<Vec<usize>>,
        maxsets: &BTreeSet<Vec<usize>>,
        source: Option<u64>,
        dual: impl Fn(&[usize]) -> Option<Vec<usize>>,
    ) -> Fan {
        let mut cones: Vec<Cone> = sets
            .into_iter()
            .map(|s| Cone { dim: rank_of(&rays, &s), dual_face: dual(&s), rays: s })
            .collect();
        cones.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| a.rays.cmp(&b.rays)));
        let maximal = (0..cones.len()).filter(|&i| maxsets.contains(&cones[i].rays)).collect();
        let simplicial = cones.iter().all(|c| c.rays.len() == c.dim);
        let ray_order = lex_order(&rays);
        Fan { n, rays, cones, maximal, simplicial, source, ray_order }
    }

    pub fn cone_index(&self, rays: &[usize]) -> Option<usize> {
        self.cones.iter().position(|c| c.rays == rays)
    }

    pub fn ray_of_normal(&self, u: &[i64]) -> Option<usize> {
        self.rays.iter().position(|r| r.u == u)
    }

    pub fn standard_ray(&self, i: usize) -> Option<usize> {
        self.rays.iter().position(|r| r.standard == Some(i))
    }

    /// Ray indices whose generators are not standard basis vectors.
    pub fn exceptional_rays(&self) -> Vec<usize> {
        (0..self.rays.len()).filter(|&i| self.rays[i].standard.is_none()).collect()
    }

    pub fn maximal_cones(&self) -> impl Iterator<Item = &Cone> {
        self.maximal.iter().map(move |&i| &self.cones[i])
    }

    /// Inequalities `y . x >= 0` cutting out each full-dimensional maximal cone.
    pub fn maximal_inequalities(&self) -> Result<Vec<Vec<Vec<BigInt>>>> {
        self.maximal_cones()
            .map(|c| {
                let vecs: Vec<&Vec<i64>> = c.rays.iter().map(|&i| &self.rays[i].u).collect();
                Ok(cone_facets(&vecs)?.into_iter().map(|f| f.normal).collect())
            })
            .collect()
    }

    /// Positions in `maximal` of the maximal cones containing `p`.
    pub fn locate(&self, p: &[Q]) -> Result<Vec<usize>> {
        let ineqs = self.maximal_inequalities()?;
        Ok(locate_with(&ineqs, p))
    }

    /// Ray subsets of maximal cones: the materialized augmentation.
    pub fn augmentation(&self) -> Vec<Vec<usize>> {
        let mut out: BTreeSet<(usize, Vec<usize>)> = BTreeSet::new();
        for c in self.maximal_cones() {
            let k = c.rays.len();
            for mask in 0u64..(1u64 << k) {
                let s: Vec<usize> = (0..k).filter(|b| mask >> b & 1 == 1).map(|b| c.rays[b]).collect();
                out.insert((s.len(), s));
            }
        }
        out.into_iter().map(|(_, s)| s).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}

/// Positions of the cones (given by their inequalities) containing `p`.
pub fn locate_with(ineqs: &[Vec<Vec<BigInt>>], p: &[Q]) -> Vec<usize> {
    (0..ineqs.len())
        .filter(|&k| {
            ineqs[k].iter().all(|y| {
                let s: Q = y.iter().zip(p).map(|(a, b)| b * a).sum();
                !s.is_negative()
            })
        })
        .collect()
}

/// Normal fan: one ray per facet (in facet order), one cone per nonempty face.
pub fn normal_fan(p: &NewtonPolyhedron) -> Fan {
    let rays: Vec<Ray> = p
        .facets
        .iter()
        .enumerate()
        .map(|(j, f)| Ray::new(f.half_space.u.clone(), Some(j)))
        .collect();
    let sets: BTreeSet<Vec<usize>> = p.faces.iter().map(|f| f.facets.clone()).collect();
    let maxsets: BTreeSet<Vec<usize>> = p.faces.iter().filter(|f| f.dim == 0).map(|f| f.facets.clone()).collect();
    Fan::assemble(p.n, rays, sets, &maxsets, Some(p.id), |s| Some(s.to_vec()))
}

/// Either side of the face/cone duality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Dual {
    Cone(usize),
    Face(Face),
}

/// The dual of a cone (a face of the source polyhedron) or of a face (a cone of the fan).
pub fn dual_pair(fan: &Fan, p: &NewtonPolyhedron, obj: &Dual) -> Result<Dual> {
    if fan.source != Some(p.id) {
        return Err(Error::NotInStructure);
    }
    match obj {
        Dual::Cone(i) => {
            let c = fan.cones.get(*i).ok_or(Error::NotInStructure)?;
            let face = c.dual_face.as_ref().and_then(|s| p.face(s)).ok_or(Error::NotInStructure)?;
            Ok(Dual::Face(face.clone()))
        }
        Dual::Face(f) => {
            if f.polyhedron != p.id {
                return Err(Error::NotInStructure);
            }
            fan.cones
                .iter()
                .position(|c| c.dual_face.as_deref() == Some(&f.facets[..]))
                .map(Dual::Cone)
                .ok_or(Error::NotInStructure)
        }
    }
}

/// Pairs of rays spanning a two-dimensional cone.
pub fn ray_adjacency(fan: &Fan) -> BTreeSet<(usize, usize)> {
    fan.cones
        .iter()
        .filter(|c| c.dim == 2 && c.rays.len() == 2)
        .map(|c| (c.rays[0], c.rays[1]))
        .collect()
}

/// Smallest cone whose ray set contains `rays`, if any.
pub fn inscribed(rays: &[usize], fan: &Fan) -> Option<usize> {
    (0..fan.cones.len())
        .filter(|&i| rays.iter().all(|r| fan.cones[i].rays.contains(r)))
        .min_by_key(|&i| fan.cones[i].rays.len())
}

/// Pulling subdivision in the lexicographic ray order; adds no rays.
pub fn frugal_simplicial_subdivision(fan: &Fan) -> Result<Fan> {
    if fan.simplicial {
        return Ok(fan.clone());
    }
    let mut rank_pos = vec![0usize; fan.rays.len()];
    for (pos, &r) in fan.ray_order.iter().enumerate() {
        rank_pos[r] = pos;
    }
    let mut memo: BTreeMap<Vec<usize>, Vec<Vec<usize>>> = BTreeMap::new();
    let mut maxsets: BTreeSet<Vec<usize>> = BTreeSet::new();
    for c in fan.maximal_cones() {
        for s in pull(&fan.rays, &c.rays, &rank_pos, &mut memo)? {
            maxsets.insert(s);
        }
    }
    let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
    for m in &maxsets {
        for mask in 0u64..(1u64 << m.len()) {
            all.insert((0..m.len()).filter(|b| mask >> b & 1 == 1).map(|b| m[b]).collect());
        }
    }
    let rays: Vec<Ray> = fan.rays.clone();
    let mut out = Fan::assemble(fan.n, rays, all, &maxsets, None, |_| None);
    out.ray_order = fan.ray_order.clone();
    Ok(out)
}

fn pull(
    rays: &[Ray],
    set: &[usize],
    rank_pos: &[usize],
    memo: &mut BTreeMap<Vec<usize>, Vec<Vec<usize>>>,
) -> Result<Vec<Vec<usize>>> {
    if let Some(v) = memo.get(set) {
        return Ok(v.clone());
    }
    let d = rank_of(rays, set);
    let out = if set.len() == d {
        vec![set.to_vec()]
    } else {
        let apex = *set.iter().min_by_key(|&&r| rank_pos[r]).expect("nonempty");
        let vecs: Vec<&Vec<i64>> = set.iter().map(|&i| &rays[i].u).collect();
        let mut out = Vec::new();
        for f in cone_facets(&vecs)? {
            let g: Vec<usize> = f.rays.iter().map(|&t| set[t]).collect();
            if g.contains(&apex) {
                continue;
            }
            for mut s in pull(rays, &g, rank_pos, memo)? {
                s.push(apex);
                s.sort();
                out.push(s);
            }
        }
        out
    };
    memo.insert(set.to_vec(), out.clone());
    Ok(out)
}
