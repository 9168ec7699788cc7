//! Newton Q-polyhedra with recession cone the positive orthant.
//!
//! Both representations are produced by double description on the homogenization
//! cone generated by `(1, a)` for points `a` and `(0, e_i)` for the recession rays.

use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};
use std::hash::{DefaultHasher, Hash, Hasher};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::dd;
use crate::error::{Error, Result};
use crate::linalg;
use crate::num::{self, clear_denominators, dot_iq, fmt_q, q, Q};

/// Largest supported ambient dimension.
pub const MAX_DIM: usize = 6;

/// `{a >= 0 : a . u >= level}` with `u` primitive and nonnegative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HalfSpace {
    pub u: Vec<i64>,
    #[serde(rename = "N", with = "num::qstr")]
    pub level: Q,
}

impl HalfSpace {
    pub fn new(u: Vec<i64>, level: Q) -> Result<Self> {
        if u.iter().all(|&x| x == 0) {
            return Err(Error::InvalidHalfSpace("zero normal".into()));
        }
        if u.iter().any(|&x| x < 0) {
            return Err(Error::InvalidHalfSpace(format!("normal {u:?} has a negative entry")));
        }
        if num::gcd_i64(&u) != 1 {
            return Err(Error::InvalidHalfSpace(format!("normal {u:?} is not primitive")));
        }
        if level.is_negative() {
            return Err(Error::InvalidHalfSpace("negative level".into()));
        }
        Ok(HalfSpace { u, level })
    }

    /// Rescale an arbitrary nonnegative normal to its primitive form.
    pub fn normalized(u: &[i64], level: Q) -> Result<Self> {
        let g = num::gcd_i64(u);
        if g == 0 {
            return Err(Error::InvalidHalfSpace("zero normal".into()));
        }
        HalfSpace::new(num::primitive_i64(u), level / q(g))
    }

    pub fn contains(&self, a: &[Q]) -> bool {
        dot_iq(&self.u, a) >= self.level
    }

    pub fn is_tight(&self, a: &[Q]) -> bool {
        dot_iq(&self.u, a) == self.level
    }

    /// `s = -|u| / N`, defined for positive levels.
    pub fn slope(&self) -> Option<Q> {
        if self.level.is_zero() {
            None
        } else {
            Some(-q(num::l1(&self.u)) / &self.level)
        }
    }

    pub fn coordinate(&self) -> Option<usize> {
        let nz: Vec<usize> = (0..self.u.len()).filter(|&i| self.u[i] != 0).collect();
        (nz.len() == 1).then(|| nz[0])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Facet {
    #[serde(flatten)]
    pub half_space: HalfSpace,
    pub vertex_idx: Vec<usize>,
    #[serde(with = "num::dirs")]
    pub noncompact_dirs: Vec<usize>,
}

/// A nonempty face, identified by the sorted set of facets containing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Face {
    pub polyhedron: u64,
    pub facets: Vec<usize>,
    pub dim: usize,
    pub vertex_idx: Vec<usize>,
    #[serde(with = "num::dirs")]
    pub noncompact_dirs: Vec<usize>,
}

impl Face {
    pub fn is_compact(&self) -> bool {
        self.noncompact_dirs.is_empty()
    }

    pub fn is_improper(&self) -> bool {
        self.facets.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NewtonPolyhedron {
    pub n: usize,
    #[serde(with = "num::qmat")]
    pub vertices: Vec<Vec<Q>>,
    pub facets: Vec<Facet>,
    pub faces: Vec<Face>,
    /// Set when the polyhedron is the whole orthant.
    pub trivial: bool,
    pub id: u64,
}

/// Input to [`dd_convert`].
#[derive(Clone, Debug)]
pub enum Representation {
    Vertices(Vec<Vec<Q>>),
    HalfSpaces(Vec<HalfSpace>),
}

fn check_dim(n: usize) -> Result<()> {
    if n == 0 || n > MAX_DIM {
        return Err(Error::DimensionCap(n, MAX_DIM));
    }
    Ok(())
}

fn lex_desc_q(a: &[Q], b: &[Q]) -> Ordering {
    b.cmp(a)
}

/// Newton polyhedron of a finite set of points of the orthant.
pub fn newton_polyhedron(support: &[Vec<Q>], n: usize) -> Result<NewtonPolyhedron> {
    check_dim(n)?;
    if support.is_empty() {
        return Err(Error::EmptySupport);
    }
    for p in support {
        if p.len() != n {
            return Err(Error::Dimension { expected: n, got: p.len() });
        }
        if !num::is_nonneg(p) {
            return Err(Error::NegativeEntry);
        }
    }
    build(support, n)
}

/// Convert one representation into the full polyhedron.
pub fn dd_convert(input: &Representation, n: usize) -> Result<NewtonPolyhedron> {
    match input {
        Representation::Vertices(v) => newton_polyhedron(v, n),
        Representation::HalfSpaces(hs) => {
            check_dim(n)?;
            for h in hs {
                if h.u.len() != n {
                    return Err(Error::Dimension { expected: n, got: h.u.len() });
                }
                HalfSpace::new(h.u.clone(), h.level.clone())?;
            }
            let vertices = vertices_of(hs, n)?;
            build(&vertices, n)
        }
    }
}

/// Extreme points of `{a >= 0 : a . u_j >= N_j}`.
fn vertices_of(hs: &[HalfSpace], n: usize) -> Result<Vec<Vec<Q>>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for h in hs {
        let mut r = vec![-h.level.clone()];
        r.extend(h.u.iter().map(|&x| q(x)));
        rows.push(clear_denominators(&r));
    }
    for i in 0..=n {
        let mut r = vec![BigInt::zero(); n + 1];
        r[i] = BigInt::from(1);
        rows.push(r);
    }
    let rays = dd::extreme_rays(&rows, n + 1)?;
    let mut out = Vec::new();
    for r in rays {
        if r[0].is_zero() {
            let nz = r[1..].iter().filter(|x| !x.is_zero()).count();
            if nz != 1 {
                return Err(Error::Invariant("recession cone is not the orthant".into()));
            }
        } else {
            let t = Q::from_integer(r[0].clone());
            out.push(r[1..].iter().map(|x| Q::from_integer(x.clone()) / &t).collect());
        }
    }
    Ok(out)
}

fn facet_order(a: &HalfSpace, b: &HalfSpace) -> Ordering {
    match (a.slope(), b.slope()) {
        (Some(sa), Some(sb)) => sb.cmp(&sa).then_with(|| b.u.cmp(&a.u)),
        (Some(_), None) => Ordering::Less,
        (None, Some(_)) => Ordering::Greater,
        (None, None) => b.u.cmp(&a.u),
    }
}

fn build(points: &[Vec<Q>], n: usize) -> Result<NewtonPolyhedron> {
    let mut pts: Vec<Vec<Q>> = points.to_vec();
    pts.sort_by(|a, b| lex_desc_q(a, b));
    pts.dedup();

    // Facets of the homogenization cone are extreme rays of its dual.
    let mut gens: Vec<Vec<BigInt>> = Vec::new();
    for p in &pts {
        let mut g = vec![q(1)];
        g.extend(p.iter().cloned());
        gens.push(clear_denominators(&g));
    }
    for i in 0..n {
        let mut g = vec![BigInt::zero(); n + 1];
        g[i + 1] = BigInt::from(1);
        gens.push(g);
    }
    let duals = dd::extreme_rays(&gens, n + 1)?;
    let mut halfs: Vec<HalfSpace> = Vec::new();
    for y in duals {
        if y[1..].iter().all(|x| x.is_zero()) {
            continue;
        }
        let u: Vec<i64> = y[1..].iter().map(num::to_i64).collect::<Result<_>>()?;
        let u = num::primitive_i64(&u);
        let level = pts.iter().map(|p| dot_iq(&u, p)).min().expect("nonempty");
        let h = HalfSpace::new(u, level)?;
        if !halfs.contains(&h) {
            halfs.push(h);
        }
    }
    halfs.sort_by(facet_order);

    let vertices: Vec<Vec<Q>> = pts
        .into_iter()
        .filter(|p| {
            let tight: Vec<Vec<i64>> = halfs
                .iter()
                .filter(|h| h.is_tight(p))
                .map(|h| h.u.clone())
                .collect();
            linalg::rank_i64(&tight) == n
        })
        .collect();

    let facets: Vec<Facet> = halfs
        .into_iter()
        .map(|h| Facet {
            vertex_idx: (0..vertices.len()).filter(|&k| h.is_tight(&vertices[k])).collect(),
            noncompact_dirs: (0..n).filter(|&i| h.u[i] == 0).collect(),
            half_space: h,
        })
        .collect();

    let trivial = facets.iter().all(|f| f.half_space.level.is_zero());
    let mut hasher = DefaultHasher::new();
    n.hash(&mut hasher);
    for v in &vertices {
        v.iter().map(fmt_q).collect::<Vec<_>>().hash(&mut hasher);
    }
    for f in &facets {
        f.half_space.u.hash(&mut hasher);
        fmt_q(&f.half_space.level).hash(&mut hasher);
    }
    let id = hasher.finish();

    let mut p = NewtonPolyhedron { n, vertices, facets, faces: Vec::new(), trivial, id };
    p.faces = p.enumerate_faces()?;
    Ok(p)
}

impl NewtonPolyhedron {
    /// Vertices and recession directions lying on every facet of `set`.
    fn generators_on(&self, set: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let verts = (0..self.vertices.len())
            .filter(|&k| set.iter().all(|&j| self.facets[j].vertex_idx.contains(&k)))
            .collect();
        let dirs = (0..self.n)
            .filter(|&i| set.iter().all(|&j| self.facets[j].half_space.u[i] == 0))
            .collect();
        (verts, dirs)
    }

    fn closure(&self, verts: &[usize], dirs: &[usize]) -> Vec<usize> {
        (0..self.facets.len())
            .filter(|&j| {
                let f = &self.facets[j];
                verts.iter().all(|k| f.vertex_idx.contains(k))
                    && dirs.iter().all(|&i| f.half_space.u[i] == 0)
            })
            .collect()
    }

    fn make_face(&self, facets: Vec<usize>, verts: Vec<usize>, dirs: Vec<usize>) -> Face {
        let normals: Vec<Vec<i64>> = facets.iter().map(|&j| self.facets[j].half_space.u.clone()).collect();
        Face {
            polyhedron: self.id,
            dim: self.n - linalg::rank_i64(&normals),
            facets,
            vertex_idx: verts,
            noncompact_dirs: dirs,
        }
    }

    fn enumerate_faces(&self) -> Result<Vec<Face>> {
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<usize>> = VecDeque::new();
        seen.insert(vec![]);
        queue.push_back(vec![]);
        while let Some(s) = queue.pop_front() {
            for j in 0..self.facets.len() {
                if s.contains(&j) {
                    continue;
                }
                let mut t = s.clone();
                t.push(j);
                let (verts, dirs) = self.generators_on(&t);
                if verts.is_empty() {
                    continue;
                }
                let c = self.closure(&verts, &dirs);
                if seen.insert(c.clone()) {
                    queue.push_back(c);
                }
            }
        }
        let mut faces: Vec<Face> = seen
            .into_iter()
            .map(|s| {
                let (v, d) = self.generators_on(&s);
                self.make_face(s, v, d)
            })
            .collect();
        faces.sort_by(|a, b| b.dim.cmp(&a.dim).then_with(|| a.facets.cmp(&b.facets)));
        Ok(faces)
    }

    pub fn half_spaces(&self) -> Vec<HalfSpace> {
        self.facets.iter().map(|f| f.half_space.clone()).collect()
    }

    /// Indices of facets with positive level.
    pub fn positive_facets(&self) -> Vec<usize> {
        (0..self.facets.len())
            .filter(|&j| self.facets[j].half_space.level.is_positive())
            .collect()
    }

    pub fn facet_of_normal(&self, u: &[i64]) -> Option<usize> {
        self.facets.iter().position(|f| f.half_space.u == u)
    }

    pub fn slope(&self, facet: usize) -> Option<Q> {
        self.facets.get(facet).and_then(|f| f.half_space.slope())
    }

    /// `phi(u) = min over vertices of a . u`.
    pub fn phi(&self, u: &[Q]) -> Result<Q> {
        if u.len() != self.n {
            return Err(Error::Dimension { expected: self.n, got: u.len() });
        }
        if !num::is_nonneg(u) {
            return Err(Error::NegativeEntry);
        }
        Ok(self
            .vertices
            .iter()
            .map(|a| a.iter().zip(u).map(|(x, y)| x * y).sum::<Q>())
            .min()
            .expect("a polyhedron has a vertex"))
    }

    pub fn phi_int(&self, u: &[i64]) -> Result<Q> {
        self.phi(&num::qvec(u))
    }

    /// The face where `a . u` attains `phi(u)`.
    pub fn first_meet_locus(&self, u: &[Q]) -> Result<Face> {
        let m = self.phi(u)?;
        let verts: Vec<usize> = (0..self.vertices.len())
            .filter(|&k| self.vertices[k].iter().zip(u).map(|(x, y)| x * y).sum::<Q>() == m)
            .collect();
        let dirs: Vec<usize> = (0..self.n).filter(|&i| u[i].is_zero()).collect();
        let set = self.closure(&verts, &dirs);
        self.face(&set)
            .cloned()
            .ok_or_else(|| Error::Invariant("first meet locus missing from the lattice".into()))
    }

    pub fn face_lattice(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, facets: &[usize]) -> Option<&Face> {
        self.faces.iter().find(|f| f.facets == facets)
    }

    pub fn face_index(&self, facets: &[usize]) -> Option<usize> {
        self.faces.iter().position(|f| f.facets == facets)
    }

    /// Intersection of the given facets, `None` when empty.
    pub fn intersect_facets(&self, set: &[usize]) -> Option<Face> {
        let (verts, dirs) = self.generators_on(set);
        if verts.is_empty() {
            return None;
        }
        let c = self.closure(&verts, &dirs);
        self.face(&c).cloned()
    }

    /// Two facets are adjacent when they meet in codimension two.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.intersect_facets(&[i, j]).is_some_and(|f| f.dim + 2 == self.n)
    }

    pub fn contains(&self, a: &[Q]) -> bool {
        num::is_nonneg(a) && self.facets.iter().all(|f| f.half_space.contains(a))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{qf, qvec};

    fn pts(v: &[&[i64]]) -> Vec<Vec<Q>> {
        v.iter().map(|p| qvec(p)).collect()
    }

    fn f1() -> NewtonPolyhedron {
        newton_polyhedron(&pts(&[&[2, 0, 0], &[1, 4, 0], &[0, 3, 1], &[0, 0, 3]]), 3).unwrap()
    }

    #[test]
    fn example_one_facets() {
        let p = f1();
        let pos: Vec<(Vec<i64>, Q)> = p
            .positive_facets()
            .into_iter()
            .map(|j| (p.facets[j].half_space.u.clone(), p.facets[j].half_space.level.clone()))
            .collect();
        assert_eq!(
            pos,
            vec![(vec![9, 4, 6], q(18)), (vec![4, 1, 5], q(8)), (vec![1, 0, 1], q(1))]
        );
        assert_eq!(p.vertices.len(), 4);
        assert_eq!(p.facets.len(), 6);
        assert!(!p.trivial);
    }

    #[test]
    fn single_point() {
        let p = newton_polyhedron(&pts(&[&[1, 0]]), 2).unwrap();
        assert_eq!(p.vertices, pts(&[&[1, 0]]));
        let hs = p.half_spaces();
        assert_eq!(hs, vec![HalfSpace::new(vec![1, 0], q(1)).unwrap(), HalfSpace::new(vec![0, 1], q(0)).unwrap()]);
        assert_eq!(p.faces.len(), 4);
    }

    #[test]
    fn halfspace_input() {
        let h = HalfSpace::new(vec![9, 4, 6], q(18)).unwrap();
        let p = dd_convert(&Representation::HalfSpaces(vec![h]), 3).unwrap();
        assert_eq!(
            p.vertices,
            vec![qvec(&[2, 0, 0]), vec![q(0), qf(9, 2), q(0)], qvec(&[0, 0, 3])]
        );
        let k = p.vertices.iter().position(|v| v[1] == qf(9, 2)).unwrap();
        let on: Vec<Vec<i64>> = p
            .facets
            .iter()
            .filter(|f| f.vertex_idx.contains(&k))
            .map(|f| f.half_space.u.clone())
            .collect();
        assert_eq!(on, vec![vec![9, 4, 6], vec![1, 0, 0], vec![0, 0, 1]]);
    }

    #[test]
    fn orthant_is_trivial() {
        let p = dd_convert(&Representation::HalfSpaces(vec![]), 3).unwrap();
        assert!(p.trivial);
        assert_eq!(p.vertices, vec![qvec(&[0, 0, 0])]);
        assert_eq!(p.positive_facets().len(), 0);
        assert_eq!(p.faces.len(), 8);
    }

    #[test]
    fn phi_and_first_meet() {
        let p = f1();
        assert_eq!(p.phi_int(&[9, 4, 6]).unwrap(), q(18));
        assert_eq!(p.phi_int(&[1, 1, 1]).unwrap(), q(2));
        assert_eq!(p.phi_int(&[0, 0, 0]).unwrap(), q(0));
        assert!(p.phi_int(&[-1, 0, 0]).is_err());
        let f = p.first_meet_locus(&qvec(&[9, 4, 6])).unwrap();
        assert_eq!(f.facets, vec![0]);
        assert_eq!(f.vertex_idx.len(), 3);
        let v = p.first_meet_locus(&qvec(&[1, 1, 1])).unwrap();
        assert_eq!(v.dim, 0);
        assert_eq!(p.vertices[v.vertex_idx[0]], qvec(&[2, 0, 0]));
        assert!(p.first_meet_locus(&qvec(&[0, 0, 0])).unwrap().is_improper());
    }

    #[test]
    fn adjacency_of_example_facets() {
        let p = f1();
        assert!(p.adjacent(1, 2));
        let f3 = newton_polyhedron(&pts(&[&[0, 1, 1], &[2, 2, 0], &[2, 0, 2]]), 3).unwrap();
        assert_eq!(f3.facets[1].half_space.u, vec![1, 2, 0]);
        assert_eq!(f3.facets[2].half_space.u, vec![1, 0, 2]);
        assert!(!f3.adjacent(1, 2));
    }

    #[test]
    fn json_round_trip() {
        let p = f1();
        let s = serde_json::to_string(&p).unwrap();
        let back: NewtonPolyhedron = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        assert!(s.contains("\"N\":\"18\""));
    }
}
