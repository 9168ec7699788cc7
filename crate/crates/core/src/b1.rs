//! B1-facets, drop-set decisions, slope classes, the cut polyhedron and the
//! old/new classification of cones of its normal fan.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fan::{inscribed, Fan};
use crate::num::{self, Q};
use crate::polyhedron::{dd_convert, Face, NewtonPolyhedron, Representation};

/// Apex vertex and base direction of a B1-facet.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct B1Certificate {
    pub facet: usize,
    pub apex: Vec<i64>,
    pub apex_vertex: usize,
    #[serde(with = "num::dir")]
    pub base: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Consistent,
    Compatible,
    /// Any positive-level facets outside translates of coordinate hyperplanes; no B1 data.
    General,
}

/// A class of the drop set with its shared apex and base, when these exist.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct BClass {
    pub facets: Vec<usize>,
    pub apex: Option<Vec<i64>>,
    pub apex_vertex: Option<usize>,
    #[serde(with = "num::dir_opt")]
    pub base: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct BSet {
    pub polyhedron: u64,
    pub facets: Vec<usize>,
    /// One certificate per member, aligned with `facets`; empty in general mode.
    pub chosen: Vec<B1Certificate>,
    pub mode: Mode,
    pub classes: Vec<BClass>,
}

impl BSet {
    /// The empty drop set.
    pub fn empty(p: &NewtonPolyhedron) -> BSet {
        BSet { polyhedron: p.id, facets: vec![], chosen: vec![], mode: Mode::Consistent, classes: vec![] }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Refusal {
    pub reason: String,
    /// Facets of the component that admits no assignment.
    pub blocking: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "decision", rename_all = "kebab-case")]
pub enum Choice {
    Accepted(BSet),
    Refused(Refusal),
}

impl Choice {
    pub fn accepted(&self) -> Option<&BSet> {
        match self {
            Choice::Accepted(b) => Some(b),
            Choice::Refused(_) => None,
        }
    }

    pub fn is_accepted(&self) -> bool {
        self.accepted().is_some()
    }
}

/// All `(apex, base)` certificates of every positive-level facet.
pub fn detect_b1(p: &NewtonPolyhedron) -> BTreeMap<usize, Vec<B1Certificate>> {
    let mut out = BTreeMap::new();
    for j in p.positive_facets() {
        let f = &p.facets[j];
        let mut certs = Vec::new();
        for &k in &f.vertex_idx {
            let v = &p.vertices[k];
            if !v.iter().all(|x| x.is_integer()) {
                continue;
            }
            for i in 0..p.n {
                let ok = v[i].is_one()
                    && f.half_space.u[i] > 0
                    && f.vertex_idx.iter().all(|&w| w == k || p.vertices[w][i].is_zero());
                if ok {
                    certs.push(B1Certificate {
                        facet: j,
                        apex: v.iter().map(|x| num::q_to_i64(x).expect("integral")).collect(),
                        apex_vertex: k,
                        base: i,
                    });
                }
            }
        }
        certs.sort_by_key(|c| c.base);
        out.insert(j, certs);
    }
    out
}

fn validate_members(p: &NewtonPolyhedron, facets: &[usize]) -> Result<Vec<usize>> {
    let mut m = facets.to_vec();
    m.sort();
    m.dedup();
    for &j in &m {
        let f = p.facets.get(j).ok_or(Error::FacetIndex(j))?;
        if !f.half_space.level.is_positive() {
            return Err(Error::ZeroLevel(j));
        }
        if f.half_space.coordinate().is_some() {
            return Err(Error::CoordinateFacet(j));
        }
    }
    Ok(m)
}

/// Connected components of `members` under `linked`.
fn components(members: &[usize], linked: impl Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &s in members {
        if !seen.insert(s) {
            continue;
        }
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(a) = stack.pop() {
            for &b in members {
                if !seen.contains(&b) && linked(a, b) {
                    seen.insert(b);
                    comp.push(b);
                    stack.push(b);
                }
            }
        }
        comp.sort();
        out.push(comp);
    }
    out
}

fn certificates_for(p: &NewtonPolyhedron, members: &[usize]) -> Result<BTreeMap<usize, Vec<B1Certificate>>> {
    let all = detect_b1(p);
    let mut out = BTreeMap::new();
    for &j in members {
        let c = all.get(&j).cloned().unwrap_or_default();
        if c.is_empty() {
            return Err(Error::NotB1(j));
        }
        out.insert(j, c);
    }
    Ok(out)
}

/// Accept `facets` if every adjacency class shares a base direction (smallest chosen).
pub fn choose_consistent(p: &NewtonPolyhedron, facets: &[usize]) -> Result<Choice> {
    let members = validate_members(p, facets)?;
    let certs = certificates_for(p, &members)?;
    let mut chosen = BTreeMap::new();
    let mut classes = Vec::new();
    for comp in components(&members, |a, b| p.adjacent(a, b)) {
        let mut common: BTreeSet<usize> = certs[&comp[0]].iter().map(|c| c.base).collect();
        for j in &comp[1..] {
            let s: BTreeSet<usize> = certs[j].iter().map(|c| c.base).collect();
            common = common.intersection(&s).copied().collect();
        }
        let Some(&b) = common.iter().next() else {
            return Ok(Choice::Refused(Refusal {
                reason: "adjacent facets admit no common base direction".into(),
                blocking: comp,
            }));
        };
        for &j in &comp {
            let c = certs[&j].iter().find(|c| c.base == b).expect("base available").clone();
            chosen.insert(j, c);
        }
        let apex_vertex = chosen[&comp[0]].apex_vertex;
        if comp.iter().any(|j| chosen[j].apex_vertex != apex_vertex) {
            return Err(Error::Invariant(format!("class {comp:?} has no common apex")));
        }
        classes.push(BClass {
            apex: Some(chosen[&comp[0]].apex.clone()),
            apex_vertex: Some(apex_vertex),
            base: Some(b),
            facets: comp,
        });
    }
    Ok(Choice::Accepted(BSet {
        polyhedron: p.id,
        chosen: members.iter().map(|j| chosen[j].clone()).collect(),
        facets: members,
        mode: Mode::Consistent,
        classes,
    }))
}

/// Accept `facets` if certificates can be chosen so that adjacent facets with equal
/// apex have equal base. Exhaustive backtracking.
pub fn choose_compatible(p: &NewtonPolyhedron, facets: &[usize]) -> Result<Choice> {
    let members = validate_members(p, facets)?;
    let certs = certificates_for(p, &members)?;
    let adj: Vec<Vec<bool>> = members
        .iter()
        .map(|&a| members.iter().map(|&b| p.adjacent(a, b)).collect())
        .collect();
    let mut pick: Vec<usize> = Vec::with_capacity(members.len());
    if !backtrack(&members, &certs, &adj, &mut pick) {
        let blocking = components(&members, |a, b| p.adjacent(a, b))
            .into_iter()
            .find(|comp| {
                let sub = certificates_for(p, comp).expect("validated");
                let sub_adj: Vec<Vec<bool>> =
                    comp.iter().map(|&a| comp.iter().map(|&b| p.adjacent(a, b)).collect()).collect();
                !backtrack(comp, &sub, &sub_adj, &mut Vec::new())
            })
            .unwrap_or_else(|| members.clone());
        return Ok(Choice::Refused(Refusal {
            reason: "no assignment of apices is compatible on adjacent facets".into(),
            blocking,
        }));
    }
    let chosen: Vec<B1Certificate> =
        members.iter().zip(&pick).map(|(j, &k)| certs[j][k].clone()).collect();
    let by_facet: BTreeMap<usize, &B1Certificate> = chosen.iter().map(|c| (c.facet, c)).collect();
    let classes = components(&members, |a, b| {
        p.adjacent(a, b) && by_facet[&a].apex_vertex == by_facet[&b].apex_vertex
    })
    .into_iter()
    .map(|comp| {
        let c = by_facet[&comp[0]];
        BClass { apex: Some(c.apex.clone()), apex_vertex: Some(c.apex_vertex), base: Some(c.base), facets: comp }
    })
    .collect();
    Ok(Choice::Accepted(BSet { polyhedron: p.id, facets: members, chosen, mode: Mode::Compatible, classes }))
}

fn backtrack(
    members: &[usize],
    certs: &BTreeMap<usize, Vec<B1Certificate>>,
    adj: &[Vec<bool>],
    pick: &mut Vec<usize>,
) -> bool {
    let t = pick.len();
    if t == members.len() {
        return true;
    }
    for k in 0..certs[&members[t]].len() {
        let c = &certs[&members[t]][k];
        let ok = (0..t).all(|s| {
            let o = &certs[&members[s]][pick[s]];
            !adj[t][s] || o.apex_vertex != c.apex_vertex || o.base == c.base
        });
        if ok {
            pick.push(k);
            if backtrack(members, certs, adj, pick) {
                return true;
            }
            pick.pop();
        }
    }
    false
}

/// A drop set without B1 requirements; validity is left to the verifier.
pub fn general_bset(p: &NewtonPolyhedron, facets: &[usize]) -> Result<BSet> {
    let members = validate_members(p, facets)?;
    let classes = components(&members, |a, b| p.adjacent(a, b))
        .into_iter()
        .map(|comp| BClass { facets: comp, apex: None, apex_vertex: None, base: None })
        .collect();
    Ok(BSet { polyhedron: p.id, facets: members, chosen: vec![], mode: Mode::General, classes })
}

/// Positive-level facets grouped by slope, ascending.
pub fn slope_classes(p: &NewtonPolyhedron) -> BTreeMap<Q, Vec<usize>> {
    let mut out: BTreeMap<Q, Vec<usize>> = BTreeMap::new();
    for j in p.positive_facets() {
        out.entry(p.slope(j).expect("positive level")).or_default().push(j);
    }
    out
}

/// The cut polyhedron together with the correspondence of retained facets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct BCut {
    pub polyhedron: NewtonPolyhedron,
    /// `[original facet, facet of the cut]` for every retained facet.
    pub correspondence: Vec<[usize; 2]>,
    pub dropped: Vec<usize>,
}

/// Intersect the half-spaces of all facets outside `b`.
pub fn b_cut(p: &NewtonPolyhedron, b: &BSet) -> Result<BCut> {
    if b.polyhedron != p.id {
        return Err(Error::InvalidBSet("drop set belongs to another polyhedron".into()));
    }
    validate_members(p, &b.facets)?;
    let retained: Vec<usize> = (0..p.facets.len()).filter(|j| !b.facets.contains(j)).collect();
    let hs = retained.iter().map(|&j| p.facets[j].half_space.clone()).collect();
    let cut = dd_convert(&Representation::HalfSpaces(hs), p.n)?;
    let mut correspondence = Vec::new();
    for &j in &retained {
        let h = &p.facets[j].half_space;
        let k = cut.facet_of_normal(&h.u).ok_or_else(|| {
            Error::Invariant(format!("retained facet {j} is not a facet of the cut"))
        })?;
        if cut.facets[k].half_space.level != h.level {
            return Err(Error::Invariant(format!("level of facet {j} changed in the cut")));
        }
        correspondence.push([j, k]);
    }
    if correspondence.len() != cut.facets.len() {
        return Err(Error::Invariant("cut has facets without a retained preimage".into()));
    }
    Ok(BCut { polyhedron: cut, correspondence, dropped: b.facets.clone() })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConeKind {
    Old,
    New,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ConeClassification {
    /// Ray indices in the fan of the cut.
    pub rays: Vec<usize>,
    pub normals: Vec<Vec<i64>>,
    /// Facets of the original polyhedron dual to the rays.
    pub facets: Vec<usize>,
    pub kind: ConeKind,
    /// Old cones: the face cut out by the dual facets.
    pub face: Option<Face>,
    /// New cones: the standard base ray and the remaining rays.
    pub base_ray: Option<usize>,
    pub sigma_circ: Option<Vec<usize>>,
    pub class: Option<usize>,
    pub base_ray_in_cone: bool,
    pub apex_inscribed: bool,
}

/// Classify every ray subset of a maximal cone of `dagger` as old or new.
pub fn classify_cones(
    dagger: &Fan,
    p: &NewtonPolyhedron,
    original: &Fan,
    b: &BSet,
) -> Result<Vec<ConeClassification>> {
    if original.source != Some(p.id) || b.polyhedron != p.id {
        return Err(Error::NotInStructure);
    }
    let to_facet: Vec<usize> = dagger
        .rays
        .iter()
        .map(|r| p.facet_of_normal(&r.u).ok_or_else(|| Error::UnknownNormal(r.u.clone())))
        .collect::<Result<_>>()?;
    let to_orig: Vec<usize> = dagger
        .rays
        .iter()
        .map(|r| original.ray_of_normal(&r.u).ok_or_else(|| Error::UnknownNormal(r.u.clone())))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for s in dagger.augmentation() {
        let mut facets: Vec<usize> = s.iter().map(|&r| to_facet[r]).collect();
        facets.sort();
        let mut orig: Vec<usize> = s.iter().map(|&r| to_orig[r]).collect();
        orig.sort();
        let face = p.intersect_facets(&facets);
        let inscribable = inscribed(&orig, original).is_some();
        if face.is_some() != inscribable {
            return Err(Error::Invariant(format!(
                "old/new criteria disagree on rays {s:?} (facets {facets:?})"
            )));
        }
        let normals = s.iter().map(|&r| dagger.rays[r].u.clone()).collect();
        let mut c = ConeClassification {
            rays: s.clone(),
            normals,
            facets,
            kind: if face.is_some() { ConeKind::Old } else { ConeKind::New },
            face,
            base_ray: None,
            sigma_circ: None,
            class: None,
            base_ray_in_cone: false,
            apex_inscribed: false,
        };
        if c.kind == ConeKind::New {
            for (ci, class) in b.classes.iter().enumerate() {
                let (Some(base), Some(av)) = (class.base, class.apex_vertex) else { continue };
                let Some(eb) = dagger.standard_ray(base) else { continue };
                if !s.contains(&eb) {
                    continue;
                }
                let rest: Vec<usize> = s.iter().copied().filter(|&r| r != eb).collect();
                let ins = rest.iter().all(|&r| p.facets[to_facet[r]].vertex_idx.contains(&av));
                if !c.base_ray_in_cone || (ins && !c.apex_inscribed) {
                    c.base_ray_in_cone = true;
                    c.apex_inscribed = ins;
                    c.base_ray = Some(eb);
                    c.sigma_circ = Some(rest);
                    c.class = Some(ci);
                }
            }
        }
        out.push(c);
    }
    Ok(out)
}

/// `phi` of the cut compared with `phi` of the original at the dropped normals.
pub fn dropped_levels(p: &NewtonPolyhedron, cut: &BCut) -> Result<Vec<(usize, Q, Q)>> {
    cut.dropped
        .iter()
        .map(|&j| {
            let u = &p.facets[j].half_space.u;
            Ok((j, cut.polyhedron.phi_int(u)?, p.facets[j].half_space.level.clone()))
        })
        .collect()
}

/// Whether the level of every dropped facet strictly decreases in the cut.
pub fn drops_are_strict(p: &NewtonPolyhedron, cut: &BCut) -> Result<bool> {
    Ok(dropped_levels(p, cut)?.iter().all(|(_, new, old)| new < old))
}
