//! Resolution of the `--drop` flag into a drop set.

use serde_json::{json, Value};
use toric_bcut::num::fmt_q;
use toric_bcut::{
    choose_compatible, choose_consistent, general_bset, removable_slope_classes, BSet, Choice, Mode,
    NewtonPolyhedron, Polynomial, Refusal,
};

use crate::CliError;

pub enum Resolved {
    Accepted { bset: BSet, auto: Option<Value> },
    Refused(Refusal),
}

fn parse_normal(text: &str) -> Result<Vec<i64>, CliError> {
    let inner = text.trim().strip_prefix('(').and_then(|t| t.strip_suffix(')'));
    let inner = inner.ok_or_else(|| CliError::Input(format!("malformed normal `{text}`")))?;
    inner
        .split(',')
        .map(|c| c.trim().parse::<i64>().map_err(|_| CliError::Input(format!("malformed normal `{text}`"))))
        .collect()
}

/// Facet indices named by a list of ids (`0,2`) or normals (`(4,1,5);(1,0,1)`).
pub fn parse_facets(spec: &str, p: &NewtonPolyhedron) -> Result<Vec<usize>, CliError> {
    let mut out = Vec::new();
    if spec.contains('(') {
        for part in spec.split(';').filter(|s| !s.trim().is_empty()) {
            let u = parse_normal(part)?;
            if u.len() != p.n {
                return Err(CliError::Input(format!("normal `{part}` has {} entries, expected {}", u.len(), p.n)));
            }
            let j = p.facet_of_normal(&u).ok_or(CliError::Lib(toric_bcut::Error::UnknownNormal(u)))?;
            out.push(j);
        }
    } else {
        for part in spec.split(',').filter(|s| !s.trim().is_empty()) {
            let j: usize = part.trim().parse().map_err(|_| CliError::Input(format!("malformed facet id `{part}`")))?;
            if j >= p.facets.len() {
                return Err(CliError::Lib(toric_bcut::Error::FacetIndex(j)));
            }
            out.push(j);
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn choose(p: &NewtonPolyhedron, facets: &[usize], mode: Mode) -> Result<Choice, CliError> {
    Ok(match mode {
        Mode::Consistent => choose_consistent(p, facets)?,
        Mode::Compatible => {
            if p.n != 3 {
                return Err(CliError::Input("compatible mode needs n = 3".into()));
            }
            choose_compatible(p, facets)?
        }
        Mode::General => Choice::Accepted(general_bset(p, facets)?),
    })
}

/// `auto` drops removable slope classes, adding them in slope order while the union stays accepted.
fn auto(f: &Polynomial, p: &NewtonPolyhedron, mode: Mode) -> Result<Resolved, CliError> {
    if mode == Mode::General {
        return Err(CliError::Input("`--drop auto` needs consistent or compatible mode".into()));
    }
    let classes = removable_slope_classes(f, mode)?;
    let mut chosen = BSet::empty(p);
    chosen.mode = mode;
    let (mut dropped, mut skipped) = (Vec::new(), Vec::new());
    for (slope, b) in &classes {
        let mut trial: Vec<usize> = chosen.facets.iter().chain(&b.facets).copied().collect();
        trial.sort_unstable();
        match choose(p, &trial, mode)? {
            Choice::Accepted(next) => {
                chosen = next;
                dropped.push(fmt_q(slope));
            }
            Choice::Refused(_) => skipped.push(fmt_q(slope)),
        }
    }
    let report = json!({ "droppedSlopes": dropped, "skippedSlopes": skipped, "facets": chosen.facets });
    Ok(Resolved::Accepted { bset: chosen, auto: Some(report) })
}

pub fn resolve(spec: Option<&str>, mode: Mode, f: &Polynomial, p: &NewtonPolyhedron) -> Result<Resolved, CliError> {
    match spec.map(str::trim) {
        None | Some("none") | Some("") => {
            let mut b = BSet::empty(p);
            b.mode = mode;
            Ok(Resolved::Accepted { bset: b, auto: None })
        }
        Some("auto") => auto(f, p, mode),
        Some(list) => {
            let facets = parse_facets(list, p)?;
            Ok(match choose(p, &facets, mode)? {
                Choice::Accepted(bset) => Resolved::Accepted { bset, auto: None },
                Choice::Refused(r) => Resolved::Refused(r),
            })
        }
    }
}
