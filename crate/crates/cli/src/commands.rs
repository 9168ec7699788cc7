use std::fmt::Write as _;
use std::path::Path;

use serde_json::{json, Value};
use toric_bcut::b1::drops_are_strict;
use toric_bcut::num::fmt_q;
use toric_bcut::{
    actual_poles, assemble_topological_zeta, b_cut, candidate_poles, chart_groups, choose_compatible,
    choose_consistent, classify_cones, cox_presentation, detect_b1, frugal_simplicial_subdivision, normal_fan,
    parse_polynomial, proper_transform, reduced_candidate_poles, relative_canonical, removable_slope_classes,
    slope_classes, verify_desingularization, BSet, Choice, Mode, NewtonPolyhedron, OracleConfig, OrbitDetail,
    Polynomial, Refusal, Stratum, Q,
};

use crate::drop::{self, Resolved};
use crate::{CliError, Report};

fn load(text: &str, n: usize) -> Result<(Polynomial, NewtonPolyhedron), CliError> {
    let f = parse_polynomial(text, n)?;
    let p = f.newton_polyhedron()?;
    Ok((f, p))
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn point(v: &[Q]) -> String {
    format!("({})", v.iter().map(fmt_q).collect::<Vec<_>>().join(","))
}

fn normal(u: &[i64]) -> String {
    format!("({})", u.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

fn facet_line(p: &NewtonPolyhedron, j: usize) -> String {
    let h = &p.facets[j].half_space;
    match p.slope(j) {
        Some(s) => {
            let nu: i64 = h.u.iter().sum();
            format!("[{j}] ({},{},slope {}) eta=({},{nu})", normal(&h.u), fmt_q(&h.level), fmt_q(&s), fmt_q(&h.level))
        }
        None => format!("[{j}] ({},{})", normal(&h.u), fmt_q(&h.level)),
    }
}

fn refused(r: Refusal) -> Report {
    let text = format!("refused: {} (blocking facets {:?})\n", r.reason, r.blocking);
    Report { json: json!({ "refusal": to_value(&r) }), text, ok: false }
}

fn drop_text(b: &BSet, auto: &Option<Value>) -> String {
    let mut s = format!("drop: {:?} ({:?} mode)\n", b.facets, b.mode);
    if let Some(a) = auto {
        let _ = writeln!(s, "auto: dropped slopes {} skipped {}", a["droppedSlopes"], a["skippedSlopes"]);
    }
    s
}

pub fn analyze(text: &str, n: usize) -> Result<Report, CliError> {
    let (f, p) = load(text, n)?;
    let fan = normal_fan(&p);
    let certs = detect_b1(&p);
    let table: Vec<Value> = (0..p.facets.len())
        .map(|j| {
            let h = &p.facets[j].half_space;
            json!({
                "id": j,
                "u": h.u,
                "N": fmt_q(&h.level),
                "nu": h.u.iter().sum::<i64>(),
                "slope": p.slope(j).map(|s| fmt_q(&s)),
                "b1": certs.get(&j).is_some_and(|c| !c.is_empty()),
            })
        })
        .collect();
    let poles = candidate_poles(&f)?;
    let json = json!({
        "polynomial": f.to_string(),
        "n": n,
        "polyhedron": p.to_json(),
        "fan": fan.to_json(),
        "facetTable": table,
        "candidatePoles": to_value(&poles),
    });
    let mut s = String::new();
    let _ = writeln!(s, "f = {f}");
    let verts: Vec<String> = p.vertices.iter().map(|v| point(v)).collect();
    let _ = writeln!(s, "vertices: {}", verts.join(" "));
    let _ = writeln!(s, "facets:");
    for j in 0..p.facets.len() {
        let _ = writeln!(s, "  {}", facet_line(&p, j));
    }
    let _ = writeln!(s, "fan: {} rays, {} maximal cones, simplicial {}", fan.rays.len(), fan.maximal.len(), fan.simplicial);
    let _ = writeln!(s, "candidate poles: {poles}");
    Ok(Report { json, text: s, ok: true })
}

pub fn b1(text: &str, n: usize, spec: Option<&str>, mode: Mode) -> Result<Report, CliError> {
    let (f, p) = load(text, n)?;
    let certs = detect_b1(&p);
    let cert_json: Vec<Value> = certs
        .iter()
        .filter(|(_, c)| !c.is_empty())
        .map(|(j, c)| json!({ "facet": j, "u": p.facets[*j].half_space.u, "certificates": to_value(c) }))
        .collect();
    let classes: Vec<Value> =
        slope_classes(&p).iter().map(|(s, fs)| json!({ "slope": fmt_q(s), "facets": fs })).collect();
    let mut s = String::new();
    for (j, c) in certs.iter().filter(|(_, c)| !c.is_empty()) {
        let list: Vec<String> = c.iter().map(|x| format!("apex {} base {}", normal(&x.apex), x.base + 1)).collect();
        let _ = writeln!(s, "{}: {}", facet_line(&p, *j), list.join("; "));
    }
    let mut json = json!({ "certificates": cert_json, "slopeClasses": classes, "decisions": Value::Null });
    let mut ok = true;
    let facets = match spec.map(str::trim) {
        None | Some("none") => None,
        Some("auto") => match drop::resolve(spec, mode, &f, &p)? {
            Resolved::Accepted { bset, .. } => Some(bset.facets),
            Resolved::Refused(_) => None,
        },
        Some(list) => Some(drop::parse_facets(list, &p)?),
    };
    if let Some(facets) = facets {
        let consistent = choose_consistent(&p, &facets)?;
        let compatible = if n == 3 { Some(choose_compatible(&p, &facets)?) } else { None };
        ok = match mode {
            Mode::Consistent => consistent.is_accepted(),
            Mode::Compatible => compatible.as_ref().is_some_and(Choice::is_accepted),
            Mode::General => true,
        };
        let verdict = |c: &Choice| if c.is_accepted() { "accepted" } else { "refused" };
        let _ = writeln!(s, "drop {facets:?}: consistent {}", verdict(&consistent));
        if let Some(c) = &compatible {
            let _ = writeln!(s, "drop {facets:?}: compatible {}", verdict(c));
        }
        json["decisions"] = json!({ "facets": facets, "consistent": to_value(&consistent), "compatible": to_value(&compatible) });
    }
    Ok(Report { json, text: s, ok })
}

pub fn bcut(text: &str, n: usize, spec: Option<&str>, mode: Mode) -> Result<Report, CliError> {
    let (_, p) = load(text, n)?;
    let f = parse_polynomial(text, n)?;
    let (bset, auto) = match drop::resolve(spec, mode, &f, &p)? {
        Resolved::Accepted { bset, auto } => (bset, auto),
        Resolved::Refused(r) => return Ok(refused(r)),
    };
    let cut = b_cut(&p, &bset)?;
    let dagger = normal_fan(&cut.polyhedron);
    let classes = classify_cones(&dagger, &p, &normal_fan(&p), &bset)?;
    let strict = drops_are_strict(&p, &cut)?;
    let mut s = drop_text(&bset, &auto);
    let verts: Vec<String> = cut.polyhedron.vertices.iter().map(|v| point(v)).collect();
    let _ = writeln!(s, "cut vertices: {}", verts.join(" "));
    let _ = writeln!(s, "cut facets:");
    for j in 0..cut.polyhedron.facets.len() {
        let _ = writeln!(s, "  {}", facet_line(&cut.polyhedron, j));
    }
    let _ = writeln!(s, "cones:");
    for c in &classes {
        let ns: Vec<String> = c.normals.iter().map(|u| normal(u)).collect();
        let _ = writeln!(s, "  {{{}}} {:?}", ns.join(","), c.kind);
    }
    let json = json!({
        "drop": to_value(&bset),
        "auto": auto,
        "cut": to_value(&cut),
        "fan": dagger.to_json(),
        "cones": to_value(&classes),
        "strictDrops": strict,
    });
    Ok(Report { json, text: s, ok: true })
}

pub fn blowup(text: &str, n: usize, spec: Option<&str>, mode: Mode) -> Result<Report, CliError> {
    let (f, p) = load(text, n)?;
    let (bset, auto) = match drop::resolve(spec, mode, &f, &p)? {
        Resolved::Accepted { bset, auto } => (bset, auto),
        Resolved::Refused(r) => return Ok(refused(r)),
    };
    let dagger = normal_fan(&b_cut(&p, &bset)?.polyhedron);
    let pres = cox_presentation(&dagger)?;
    let fp = proper_transform(&f, &dagger)?;
    let canonical = relative_canonical(&dagger);
    let groups = chart_groups(&frugal_simplicial_subdivision(&dagger)?)?;
    let mut s = drop_text(&bset, &auto);
    let _ = writeln!(s, "variables: {}", pres.variables.join(" "));
    for line in pres.pullback_strings() {
        let _ = writeln!(s, "  {line}");
    }
    let _ = writeln!(s, "irrelevant ideal: ({})", pres.irrelevant_monomials(true).join(", "));
    let _ = writeln!(s, "proper transform: {fp}");
    for e in &canonical {
        if e.multiplicity > 0 {
            let _ = writeln!(s, "  K coefficient on {}: {} (nu = {})", normal(&e.u), e.multiplicity, e.nu);
        }
    }
    let json = json!({
        "drop": to_value(&bset),
        "auto": auto,
        "presentation": to_value(&pres),
        "pullback": pres.pullback_strings(),
        "irrelevantIdeal": pres.irrelevant_monomials(true),
        "properTransform": to_value(&fp),
        "properTransformText": fp.to_string(),
        "canonical": to_value(&canonical),
        "chartGroups": to_value(&groups),
    });
    Ok(Report { json, text: s, ok: true })
}

fn reduced_or_null(f: &Polynomial, b: &BSet) -> Result<Option<toric_bcut::PoleSet>, CliError> {
    match b.mode {
        Mode::Consistent => Ok(Some(reduced_candidate_poles(f, b)?)),
        Mode::Compatible if f.n() == 3 => Ok(Some(reduced_candidate_poles(f, b)?)),
        _ => Ok(None),
    }
}

pub fn verify(text: &str, n: usize, spec: Option<&str>, mode: Mode, oracle: &OracleConfig) -> Result<Report, CliError> {
    oracle.validate()?;
    let (f, p) = load(text, n)?;
    let (bset, auto) = match drop::resolve(spec, mode, &f, &p)? {
        Resolved::Accepted { bset, auto } => (bset, auto),
        Resolved::Refused(r) => return Ok(refused(r)),
    };
    let cert = verify_desingularization(&f, &bset, oracle)?;
    let reduced = reduced_or_null(&f, &bset)?;
    let mut s = drop_text(&bset, &auto);
    let _ = writeln!(s, "proper transform: {}", cert.proper_transform);
    for o in &cert.orbits {
        let ns: Vec<String> = o.normals.iter().map(|u| normal(u)).collect();
        let extra = match &o.detail {
            OrbitDetail::UnitDerivative { base, witness, .. } => format!(" base x{}' witness {witness}", base + 1),
            OrbitDetail::ShapeViolation { residual, .. } => format!(" residual {residual}"),
            _ => String::new(),
        };
        let mark = if o.pass { "ok" } else { "FAIL" };
        let _ = writeln!(s, "  {mark} case {:?} {{{}}} {}{extra}", o.case, ns.join(","), o.verdict);
    }
    let data: Vec<String> = cert.numerical_data.iter().map(|(a, b)| format!("({a},{b})")).collect();
    let _ = writeln!(s, "numerical data: {{{}}}", data.join(","));
    if let Some(r) = &reduced {
        let _ = writeln!(s, "reduced poles: {r}");
    }
    let _ = writeln!(s, "certificate: {}", if cert.pass { "PASS" } else { "FAIL" });
    let json = json!({
        "drop": to_value(&bset),
        "auto": auto,
        "certificate": to_value(&cert),
        "reducedPoles": reduced.as_ref().map(to_value),
    });
    Ok(Report { json, text: s, ok: cert.pass })
}

pub fn poles(text: &str, n: usize, spec: Option<&str>, mode: Mode) -> Result<Report, CliError> {
    let (f, p) = load(text, n)?;
    let candidate = candidate_poles(&f)?;
    let removal_mode = if mode == Mode::Compatible && n == 3 { Mode::Compatible } else { Mode::Consistent };
    let removable = removable_slope_classes(&f, removal_mode)?;
    let removable_json: Vec<Value> =
        removable.iter().map(|(s, b)| json!({ "slope": fmt_q(s), "facets": b.facets })).collect();
    let mut s = format!("candidate poles: {candidate}\n");
    let slopes: Vec<String> = removable.keys().rev().map(fmt_q).collect();
    let _ = writeln!(s, "removable slopes: {{{}}}", slopes.join(", "));
    let mut json = json!({ "candidate": to_value(&candidate), "removable": removable_json, "reduced": Value::Null });
    if spec.is_some() {
        match drop::resolve(spec, mode, &f, &p)? {
            Resolved::Accepted { bset, auto } => {
                let reduced = reduced_or_null(&f, &bset)?;
                if let Some(r) = &reduced {
                    let _ = writeln!(s, "reduced poles: {r}");
                }
                json["drop"] = to_value(&bset);
                json["auto"] = auto.unwrap_or(Value::Null);
                json["reduced"] = reduced.as_ref().map(to_value).unwrap_or(Value::Null);
            }
            Resolved::Refused(r) => return Ok(refused(r)),
        }
    }
    Ok(Report { json, text: s, ok: true })
}

pub fn ztop(path: &Path) -> Result<Report, CliError> {
    let raw = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let strata: Vec<Stratum> =
        serde_json::from_str(&raw).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let z = assemble_topological_zeta(&strata)?;
    let poles = actual_poles(&z);
    let mut s = format!("Z_top = {z}\n");
    let list: Vec<String> = poles.poles.iter().map(fmt_q).collect();
    let _ = writeln!(s, "poles: {{{}}}", list.join(", "));
    if !poles.complete {
        let _ = writeln!(s, "denominator factor without rational roots: {:?}", poles.residual);
    }
    let json = json!({ "zeta": to_value(&z), "display": z.to_string(), "poles": to_value(&poles) });
    Ok(Report { json, text: s, ok: true })
}
