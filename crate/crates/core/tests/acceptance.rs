//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Every criterion is exact; the pinned tolerance is the number of permitted
//! violations, which is zero throughout.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use num_bigint::BigInt;
use num_traits::Signed;
use rand::Rng;
use toric_bcut::fan::locate_with;
use toric_bcut::num::{q, qf, qvec};
use toric_bcut::*;

const MAX_VIOLATIONS: usize = 0;
const TIME_BUDGET: Duration = Duration::from_secs(5);
const SEED: u64 = 0x5eed_b1;

const RANDOM_SUPPORTS: usize = 50;
const ORTHANT_POINTS: usize = 500;
const LOCUS_PAIRS: usize = 200;
const EQUIVALENCE_POLYHEDRA: usize = 200;
const CUT_INSTANCES: usize = 60;
const SUBDIVISION_POINTS: usize = 500;
const POINTS_PER_FAN: usize = 50;

type Outcome = std::result::Result<String, String>;

fn check(ok: bool, what: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn setup(text: &str) -> (Polynomial, NewtonPolyhedron) {
    let f = parse_polynomial(text, 3).unwrap();
    let p = f.newton_polyhedron().unwrap();
    (f, p)
}

fn facet_table(p: &NewtonPolyhedron) -> BTreeSet<(Vec<i64>, Q)> {
    p.positive_facets().into_iter().map(|j| (p.facets[j].half_space.u.clone(), p.facets[j].half_space.level.clone())).collect()
}

fn normal_set(v: &[Vec<i64>]) -> BTreeSet<Vec<i64>> {
    v.iter().cloned().collect()
}

fn terms(s: &str) -> BTreeSet<String> {
    s.split(" + ").map(str::to_string).collect()
}

fn accepted(p: &NewtonPolyhedron, facets: &[usize]) -> std::result::Result<BSet, String> {
    choose_consistent(p, facets)
        .map_err(|e| e.to_string())?
        .accepted()
        .cloned()
        .ok_or_else(|| format!("drop set {facets:?} refused"))
}

fn facet(p: &NewtonPolyhedron, u: &[i64]) -> std::result::Result<usize, String> {
    p.facet_of_normal(u).ok_or_else(|| format!("no facet {u:?}"))
}

fn criterion_1() -> Outcome {
    let (_, p) = setup(EXAMPLES[0]);
    let want: BTreeSet<(Vec<i64>, Q)> =
        [(vec![9, 4, 6], q(18)), (vec![4, 1, 5], q(8)), (vec![1, 0, 1], q(1))].into_iter().collect();
    check(facet_table(&p) == want, || format!("facets {:?}", facet_table(&p)))?;
    for (u, s) in [(vec![9, 4, 6], qf(-19, 18)), (vec![4, 1, 5], qf(-5, 4)), (vec![1, 0, 1], qf(-2, 1))] {
        let got = p.slope(facet(&p, &u)?);
        check(got.as_ref() == Some(&s), || format!("slope of {u:?} is {got:?}"))?;
    }
    Ok("3 facets, slopes -19/18, -5/4, -2".into())
}

fn criterion_2() -> Outcome {
    let (f, p) = setup(EXAMPLES[0]);
    let b = accepted(&p, &[facet(&p, &[4, 1, 5])?, facet(&p, &[1, 0, 1])?])?;
    check(b.chosen.iter().all(|c| c.base == 2), || "base direction is not 3".into())?;
    let cut = b_cut(&p, &b).map_err(|e| e.to_string())?;
    let verts: BTreeSet<Vec<Q>> = cut.polyhedron.vertices.iter().cloned().collect();
    let want: BTreeSet<Vec<Q>> = [qvec(&[2, 0, 0]), vec![q(0), qf(9, 2), q(0)], qvec(&[0, 0, 3])].into_iter().collect();
    check(verts == want, || format!("cut vertices {verts:?}"))?;
    let dagger = normal_fan(&cut.polyhedron);
    let fp = proper_transform(&f, &dagger).map_err(|e| e.to_string())?;
    check(fp.to_string() == "x1'^2 + x1'*x2'^4*u1^7 + x2'^3*x3' + x3'^3", || format!("f' = {fp}"))?;
    let cert = verify_desingularization(&f, &b, &OracleConfig::default()).map_err(|e| e.to_string())?;
    check(cert.pass, || "certificate failed".into())?;
    let b_cones: Vec<BTreeSet<Vec<i64>>> =
        cert.orbits.iter().filter(|o| o.case == Case::B).map(|o| normal_set(&o.normals)).collect();
    let want_cone = normal_set(&[vec![9, 4, 6], vec![1, 0, 0], vec![0, 0, 1]]);
    check(b_cones == vec![want_cone], || format!("case B cones {b_cones:?}"))?;
    check(cert.numerical_data == vec![(1, 1), (18, 19)], || format!("data {:?}", cert.numerical_data))?;
    let red = reduced_candidate_poles(&f, &b).map_err(|e| e.to_string())?;
    check(red.values() == [qf(-1, 1), qf(-19, 18)].into_iter().collect(), || format!("reduced poles {red}"))?;
    Ok(format!("f' = {fp}; {} orbits; reduced poles {red}", cert.orbits.len()))
}

fn criterion_3() -> Outcome {
    let (f, p) = setup(EXAMPLES[1]);
    let (t1, t2) = (facet(&p, &[1, 2, 0])?, facet(&p, &[1, 0, 2])?);
    let both = choose_consistent(&p, &[t1, t2]).map_err(|e| e.to_string())?;
    check(!both.is_accepted(), || "inconsistent pair accepted".into())?;
    let want_verts: [BTreeSet<Vec<Q>>; 2] = [
        [qvec(&[2, 0, 0]), qvec(&[0, 0, 1])].into_iter().collect(),
        [qvec(&[2, 0, 0]), qvec(&[0, 1, 0])].into_iter().collect(),
    ];
    let want_pullback = [
        vec!["x1 -> x1'*u1", "x2 -> x2'", "x3 -> x3'*u1^2"],
        vec!["x1 -> x1'*u1", "x2 -> x2'*u1^2", "x3 -> x3'"],
    ];
    for (k, drop) in [t1, t2].into_iter().enumerate() {
        let b = accepted(&p, &[drop])?;
        let cut = b_cut(&p, &b).map_err(|e| e.to_string())?;
        let verts: BTreeSet<Vec<Q>> = cut.polyhedron.vertices.iter().cloned().collect();
        check(verts == want_verts[k], || format!("cut vertices {verts:?}"))?;
        let dagger = normal_fan(&cut.polyhedron);
        let pres = cox_presentation(&dagger).map_err(|e| e.to_string())?;
        check(pres.pullback_strings() == want_pullback[k], || format!("pullback {:?}", pres.pullback_strings()))?;
        let fp = proper_transform(&f, &dagger).map_err(|e| e.to_string())?;
        check(fp.to_string() == "x1'^2 + x2'*x3'", || format!("f' = {fp}"))?;
        let cert = verify_desingularization(&f, &b, &OracleConfig::default()).map_err(|e| e.to_string())?;
        check(cert.pass, || format!("certificate failed dropping {drop}"))?;
    }
    let strata = [Stratum { chi: 1, divisors: vec![(2, 3)] }, Stratum { chi: 2, divisors: vec![(1, 1), (2, 3)] }];
    let z = assemble_topological_zeta(&strata).map_err(|e| e.to_string())?;
    check(z.to_string() == "(s+3)/((s+1)(2s+3))", || format!("Z = {z}"))?;
    let poles = actual_poles(&z).set();
    check(poles == [qf(-1, 1), qf(-3, 2)].into_iter().collect(), || format!("poles {poles:?}"))?;
    Ok(format!("pair refused; singletons verified; Z = {z}"))
}

fn criterion_4() -> Outcome {
    let (f, p) = setup(EXAMPLES[2]);
    let (t2, t3) = (facet(&p, &[1, 2, 0])?, facet(&p, &[1, 0, 2])?);
    check(!p.adjacent(t2, t3), || "facets adjacent".into())?;
    let b = accepted(&p, &[t2, t3])?;
    let dagger = normal_fan(&b_cut(&p, &b).map_err(|e| e.to_string())?.polyhedron);
    let pres = cox_presentation(&dagger).map_err(|e| e.to_string())?;
    check(pres.exceptional.len() == 1, || "expected one exceptional ray".into())?;
    check(pres.irrelevant_monomials(true) == ["x2'", "x3'"], || format!("irrelevant {:?}", pres.irrelevant_monomials(true)))?;
    let fp = proper_transform(&f, &dagger).map_err(|e| e.to_string())?;
    check(terms(&fp.to_string()) == terms("x2'*x3' + x1'^2*x2'^2 + x1'^2*x3'^2"), || format!("f' = {fp}"))?;
    let cert = verify_desingularization(&f, &b, &OracleConfig::default()).map_err(|e| e.to_string())?;
    check(cert.pass, || "certificate failed".into())?;
    let red = reduced_candidate_poles(&f, &b).map_err(|e| e.to_string())?;
    check(red.values() == [qf(-1, 1)].into_iter().collect(), || format!("reduced poles {red}"))?;
    Ok(format!("f' = {fp}; reduced poles {red}"))
}

fn duality_suite_polys() -> Vec<Polynomial> {
    let mut r = rng(SEED);
    let mut out: Vec<Polynomial> = EXAMPLES.iter().map(|t| parse_polynomial(t, 3).unwrap()).collect();
    for _ in 0..RANDOM_SUPPORTS {
        let n = r.gen_range(1..=4);
        out.push(random_polynomial(&mut r, n, 8, 5));
    }
    out
}

fn criterion_5() -> Outcome {
    let mut r = rng(SEED ^ 5);
    let mut violations = Vec::new();
    let (mut pairs, mut points, mut loci) = (0, 0, 0);
    let polys = duality_suite_polys();
    for f in &polys {
        let p = f.newton_polyhedron().map_err(|e| e.to_string())?;
        let fan = normal_fan(&p);
        for face in &p.faces {
            pairs += 1;
            match dual_pair(&fan, &p, &Dual::Face(face.clone())) {
                Ok(Dual::Cone(c)) if fan.cones[c].dim + face.dim == p.n => {
                    if dual_pair(&fan, &p, &Dual::Cone(c)).ok() != Some(Dual::Face(face.clone())) {
                        violations.push(format!("{f}: duality not involutive at {:?}", face.facets));
                    }
                }
                other => violations.push(format!("{f}: face {:?} -> {other:?}", face.facets)),
            }
        }
    }
    let ineqs: Vec<_> = polys
        .iter()
        .map(|f| normal_fan(&f.newton_polyhedron().unwrap()).maximal_inequalities().unwrap())
        .collect();
    for k in 0..ORTHANT_POINTS {
        let which = k % polys.len();
        let x = random_orthant_point(&mut r, polys[which].n());
        points += 1;
        if locate_with(&ineqs[which], &x).is_empty() {
            violations.push(format!("{}: point {x:?} in no maximal cone", polys[which]));
        }
    }
    for k in 0..LOCUS_PAIRS {
        let f = &polys[k % polys.len()];
        let p = f.newton_polyhedron().unwrap();
        let (u1, u2) = (random_weight(&mut r, p.n, 6), random_weight(&mut r, p.n, 6));
        let sum: Vec<i64> = u1.iter().zip(&u2).map(|(a, b)| a + b).collect();
        let l1 = p.first_meet_locus(&qvec(&u1)).unwrap();
        let l2 = p.first_meet_locus(&qvec(&u2)).unwrap();
        let l12 = p.first_meet_locus(&qvec(&sum)).unwrap();
        let union: Vec<usize> = l1.facets.iter().chain(&l2.facets).copied().collect::<BTreeSet<_>>().into_iter().collect();
        loci += 1;
        match p.intersect_facets(&union) {
            Some(g) if g == l12 => {}
            None => {}
            other => violations.push(format!("{f}: loci {u1:?} + {u2:?} give {other:?}, expected {:?}", l12.facets)),
        }
        let phi_sum = p.phi_int(&sum).unwrap();
        let additive = p.phi_int(&u1).unwrap() + p.phi_int(&u2).unwrap();
        let nonempty = p.intersect_facets(&union).is_some();
        if (phi_sum == additive) != nonempty {
            violations.push(format!("{f}: phi additivity disagrees with locus intersection for {u1:?}, {u2:?}"));
        }
    }
    if violations.len() > MAX_VIOLATIONS {
        return Err(format!("{} violations, first: {}", violations.len(), violations[0]));
    }
    Ok(format!("{} polyhedra, {pairs} dual pairs, {points} points, {loci} locus pairs", polys.len()))
}

/// Random n = 3 polynomials with at least one B1 facet, with their accepted consistent drop sets.
fn cut_instances() -> Vec<(Polynomial, NewtonPolyhedron, BSet)> {
    let mut r = rng(SEED ^ 6);
    let mut out = Vec::new();
    for text in EXAMPLES {
        let (f, p) = setup(text);
        for s in subsets(&b1_facets(&p), 6) {
            if let Some(b) = choose_consistent(&p, &s).unwrap().accepted().cloned() {
                out.push((f.clone(), p.clone(), b));
            }
        }
    }
    while out.len() < CUT_INSTANCES {
        let f = random_polynomial(&mut r, 3, 7, 4);
        let p = f.newton_polyhedron().unwrap();
        for s in subsets(&b1_facets(&p), 4) {
            if let Some(b) = choose_consistent(&p, &s).unwrap().accepted().cloned() {
                out.push((f.clone(), p.clone(), b));
            }
        }
    }
    out
}

fn criterion_6() -> Outcome {
    let mut r = rng(SEED ^ 66);
    let mut violations = Vec::new();
    let instances = cut_instances();
    let mut cones = 0;
    for (f, p, b) in &instances {
        let support: Vec<Vec<u32>> = f.support().into_iter().map(|e| e.0).collect();
        let cut = match b_cut(p, b) {
            Ok(c) => c,
            Err(e) => {
                violations.push(format!("{f}: {e}"));
                continue;
            }
        };
        let g = &cut.polyhedron;
        for (j, fc) in p.facets.iter().enumerate() {
            let u = &fc.half_space.u;
            let phi = q(brute_phi(&support, u));
            let dagger_phi = g.vertices.iter().map(|v| num::dot_iq(u, v)).min().unwrap();
            let ok = if b.facets.contains(&j) { dagger_phi < phi } else { dagger_phi == phi };
            if !ok {
                violations.push(format!("{f}: phi at {u:?}: {dagger_phi} vs {phi}"));
            }
        }
        for _ in 0..10 {
            let u = random_weight(&mut r, 3, 9);
            let dagger_phi = g.vertices.iter().map(|v| num::dot_iq(&u, v)).min().unwrap();
            if dagger_phi > q(brute_phi(&support, &u)) {
                violations.push(format!("{f}: phi dagger exceeds phi at {u:?}"));
            }
        }
        let retained: BTreeSet<Vec<i64>> = (0..p.facets.len())
            .filter(|j| !b.facets.contains(j))
            .map(|j| p.facets[j].half_space.u.clone())
            .collect();
        let cut_normals: BTreeSet<Vec<i64>> = g.facets.iter().map(|fc| fc.half_space.u.clone()).collect();
        let sources: BTreeSet<usize> = cut.correspondence.iter().map(|m| m[0]).collect();
        let targets: BTreeSet<usize> = cut.correspondence.iter().map(|m| m[1]).collect();
        let bijective = retained == cut_normals
            && sources.len() == cut.correspondence.len()
            && targets.len() == g.facets.len()
            && cut.correspondence.len() == g.facets.len()
            && cut.correspondence.iter().all(|m| p.facets[m[0]].half_space.u == g.facets[m[1]].half_space.u);
        if !bijective {
            violations.push(format!("{f}: correspondence {:?} is not a bijection", cut.correspondence));
        }
        let dagger = normal_fan(g);
        let original = normal_fan(p);
        let classes = match classify_cones(&dagger, p, &original, b) {
            Ok(c) => c,
            Err(e) => {
                violations.push(format!("{f}: {e}"));
                continue;
            }
        };
        let augmentation: BTreeSet<Vec<usize>> = dagger.augmentation().into_iter().collect();
        let classified: BTreeSet<Vec<usize>> = classes.iter().map(|c| c.rays.clone()).collect();
        if augmentation != classified {
            violations.push(format!("{f}: classification misses cones"));
        }
        for c in &classes {
            cones += 1;
            let orig_facets: Vec<usize> =
                c.normals.iter().map(|u| p.facet_of_normal(u).expect("retained facet")).collect();
            let empty = p.intersect_facets(&orig_facets).is_none();
            let orig_rays: Vec<usize> = c.normals.iter().map(|u| original.ray_of_normal(u).unwrap()).collect();
            let inscribable = original.maximal_cones().any(|m| orig_rays.iter().all(|x| m.rays.contains(x)));
            if empty == inscribable || (c.kind == ConeKind::New) != empty {
                violations.push(format!("{f}: cone {:?} empty={empty} inscribable={inscribable} {:?}", c.normals, c.kind));
            }
        }
    }
    if violations.len() > MAX_VIOLATIONS {
        return Err(format!("{} violations, first: {}", violations.len(), violations[0]));
    }
    Ok(format!("{} accepted drop sets, {cones} cones classified", instances.len()))
}

fn criterion_7() -> Outcome {
    let mut r = rng(SEED ^ 7);
    let (mut polyhedra, mut sets, mut refused) = (0, 0, 0);
    let mut violations = Vec::new();
    let mut attempts = 0;
    while polyhedra < EQUIVALENCE_POLYHEDRA {
        attempts += 1;
        if attempts > 50 * EQUIVALENCE_POLYHEDRA {
            return Err(format!("only {polyhedra} polyhedra with B1 facets generated"));
        }
        let f = random_polynomial(&mut r, 3, 8, 3);
        let p = f.newton_polyhedron().unwrap();
        let b1 = b1_facets(&p);
        if b1.is_empty() {
            continue;
        }
        polyhedra += 1;
        for s in subsets(&b1, 6) {
            sets += 1;
            let c = choose_consistent(&p, &s).map_err(|e| e.to_string())?;
            let m = choose_compatible(&p, &s).map_err(|e| e.to_string())?;
            if !c.is_accepted() {
                refused += 1;
            }
            if c.is_accepted() != m.is_accepted() {
                violations.push(format!("{f}: drop {s:?} consistent={} compatible={}", c.is_accepted(), m.is_accepted()));
            }
        }
    }
    if violations.len() > MAX_VIOLATIONS {
        return Err(format!("{} discrepancies, first: {}", violations.len(), violations[0]));
    }
    Ok(format!("{polyhedra} polyhedra, {sets} drop sets, {refused} refused by both"))
}

/// Inverse generator matrix of a full-dimensional simplicial cone.
fn cone_inverse(fan: &Fan, rays: &[usize]) -> Vec<Vec<Q>> {
    let m: Vec<Vec<BigInt>> = (0..fan.n).map(|i| rays.iter().map(|&k| BigInt::from(fan.rays[k].u[i])).collect()).collect();
    linalg::inverse(&m).expect("full-dimensional simplicial cone")
}

/// Nonnegative barycentric coordinates, independent of the facet inequalities.
fn in_simplicial_cone(inv: &[Vec<Q>], x: &[Q]) -> bool {
    inv.iter().all(|row| !row.iter().zip(x).map(|(a, b)| a * b).sum::<Q>().is_negative())
}

fn criterion_8() -> Outcome {
    let mut r = rng(SEED ^ 8);
    let mut fans: Vec<Fan> = duality_suite_polys().iter().map(|f| normal_fan(&f.newton_polyhedron().unwrap())).collect();
    for (_, p, b) in cut_instances() {
        fans.push(normal_fan(&p));
        fans.push(normal_fan(&b_cut(&p, &b).unwrap().polyhedron));
    }
    let mut violations = Vec::new();
    let (mut subdivided, mut total_points) = (0, 0);
    for fan in &fans {
        let sub = match frugal_simplicial_subdivision(fan) {
            Ok(s) => s,
            Err(e) => {
                violations.push(e.to_string());
                continue;
            }
        };
        if !fan.simplicial {
            subdivided += 1;
        }
        let rays_in: BTreeSet<&Vec<i64>> = fan.rays.iter().map(|x| &x.u).collect();
        let rays_out: BTreeSet<&Vec<i64>> = sub.rays.iter().map(|x| &x.u).collect();
        if rays_in != rays_out {
            violations.push("ray sets differ".into());
            continue;
        }
        let lift = |k: usize| fan.rays.iter().position(|x| x.u == sub.rays[k].u).unwrap();
        let mut host = Vec::new();
        for c in sub.maximal_cones() {
            if c.rays.len() != fan.n {
                violations.push(format!("non-simplicial cone {:?}", c.rays));
            }
            let lifted: Vec<usize> = c.rays.iter().map(|&k| lift(k)).collect();
            match fan.maximal_cones().position(|m| lifted.iter().all(|x| m.rays.contains(x))) {
                Some(h) => host.push(h),
                None => violations.push(format!("cone {lifted:?} not inscribed")),
            }
        }
        if sub.cones.iter().any(|c| c.rays.len() != c.dim) {
            violations.push("subdivision has a non-simplicial face".into());
        }
        if host.len() != sub.maximal.len() {
            continue;
        }
        let ineqs = fan.maximal_inequalities().unwrap();
        let inverses: Vec<Vec<Vec<Q>>> = sub.maximal_cones().map(|c| cone_inverse(&sub, &c.rays)).collect();
        for _ in 0..POINTS_PER_FAN {
            total_points += 1;
            let x = random_orthant_point(&mut r, fan.n);
            let inside: BTreeSet<usize> = locate_with(&ineqs, &x).into_iter().collect();
            let mut covered = BTreeSet::new();
            let hits: Vec<usize> = (0..inverses.len()).filter(|&k| in_simplicial_cone(&inverses[k], &x)).collect();
            covered.extend(hits.iter().map(|&k| host[k]));
            for &h in &inside {
                let pieces_hit = hits.iter().any(|&k| host[k] == h);
                if !pieces_hit {
                    violations.push(format!("point {x:?} in input cone {h} but in none of its pieces"));
                }
            }
            if !covered.is_subset(&inside) || inside.is_empty() {
                violations.push(format!("membership disagrees at {x:?}"));
            }
        }
    }
    if total_points < SUBDIVISION_POINTS {
        return Err(format!("only {total_points} membership points"));
    }
    if violations.len() > MAX_VIOLATIONS {
        return Err(format!("{} violations, first: {}", violations.len(), violations[0]));
    }
    Ok(format!("{} fans ({subdivided} subdivided), {total_points} membership points", fans.len()))
}

fn criterion_9() -> Outcome {
    let mut orbits = 0;
    for text in EXAMPLES {
        let (f, p) = setup(text);
        let cert = verify_desingularization(&f, &BSet::empty(&p), &OracleConfig::default()).map_err(|e| e.to_string())?;
        check(cert.pass, || format!("{text}: baseline failed"))?;
        check(cert.orbits.iter().all(|o| o.case == Case::A), || format!("{text}: case B orbit in baseline"))?;
        let want: BTreeSet<(i64, i64)> = std::iter::once((1, 1))
            .chain(p.positive_facets().into_iter().map(|j| {
                let h = &p.facets[j].half_space;
                (num::q_to_i64(&h.level).unwrap(), num::l1(&h.u))
            }))
            .collect();
        let got: BTreeSet<(i64, i64)> = cert.numerical_data.iter().copied().collect();
        check(got == want, || format!("{text}: data {got:?} vs {want:?}"))?;
        orbits += cert.orbits.len();
    }
    Ok(format!("3 examples, {orbits} orbits, all case A"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("example 1 facet table", criterion_1),
        ("example 1 pipeline", criterion_2),
        ("example 2 refusal, singletons, zeta", criterion_3),
        ("example 3 pipeline", criterion_4),
        ("face/cone duality suite", criterion_5),
        ("cut suite", criterion_6),
        ("n=3 consistent/compatible equivalence", criterion_7),
        ("simplicial subdivision suite", criterion_8),
        ("baseline desingularization", criterion_9),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > TIME_BUDGET => Err(format!("{msg}; exceeded {TIME_BUDGET:?}")),
            o => o,
        };
        match outcome {
            Ok(msg) => println!("PASS criterion {}: {name} ({msg}) [{elapsed:.2?}]", k + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {}: {name} ({msg}) [{elapsed:.2?}]", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
