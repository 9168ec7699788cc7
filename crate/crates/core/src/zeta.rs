//! Candidate poles, removable slope classes and topological zeta functions
//! assembled from user-supplied strata.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::b1::{choose_compatible, choose_consistent, slope_classes, BSet, Mode};
use crate::error::{Error, Result};
use crate::num::{self, Q};
use crate::poly::Polynomial;
use crate::polyhedron::NewtonPolyhedron;
use crate::upoly::UPoly;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoleEntry {
    #[serde(with = "num::qstr")]
    pub value: Q,
    /// Carried by the constant `-1`.
    pub constant: bool,
    /// Facets whose slope is this value.
    pub facets: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoleSet {
    pub poles: Vec<PoleEntry>,
}

impl PoleSet {
    fn build(p: &NewtonPolyhedron, keep: impl Fn(usize) -> bool) -> PoleSet {
        let mut m: BTreeMap<Q, PoleEntry> = BTreeMap::new();
        let minus_one = -Q::one();
        m.insert(minus_one.clone(), PoleEntry { value: minus_one, constant: true, facets: vec![] });
        for j in p.positive_facets().into_iter().filter(|&j| keep(j)) {
            let s = p.slope(j).expect("positive level");
            m.entry(s.clone())
                .or_insert_with(|| PoleEntry { value: s, constant: false, facets: vec![] })
                .facets
                .push(j);
        }
        PoleSet { poles: m.into_values().collect() }
    }

    pub fn values(&self) -> BTreeSet<Q> {
        self.poles.iter().map(|e| e.value.clone()).collect()
    }

    pub fn contains(&self, s: &Q) -> bool {
        self.poles.iter().any(|e| &e.value == s)
    }

    pub fn len(&self) -> usize {
        self.poles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poles.is_empty()
    }

    pub fn is_subset(&self, other: &PoleSet) -> bool {
        self.poles.iter().all(|e| other.contains(&e.value))
    }
}

impl fmt::Display for PoleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.poles.iter().rev().map(|e| num::fmt_q(&e.value)).collect();
        write!(f, "{{{}}}", v.join(", "))
    }
}

/// `{-1}` together with the slopes of positive-level facets.
pub fn candidate_poles(f: &Polynomial) -> Result<PoleSet> {
    Ok(PoleSet::build(&f.newton_polyhedron()?, |_| true))
}

/// Slopes of the facets kept by `b`, with `-1`.
pub fn reduced_candidate_poles(f: &Polynomial, b: &BSet) -> Result<PoleSet> {
    let p = f.newton_polyhedron()?;
    if b.polyhedron != p.id {
        return Err(Error::InvalidBSet("drop set belongs to another polyhedron".into()));
    }
    match b.mode {
        Mode::Consistent => {}
        Mode::Compatible if p.n == 3 => {}
        m => return Err(Error::InvalidBSet(format!("no pole reduction in {m:?} mode for n = {}", p.n))),
    }
    if let Some(&j) = b.facets.iter().find(|&&j| j >= p.facets.len()) {
        return Err(Error::FacetIndex(j));
    }
    Ok(PoleSet::build(&p, |j| !b.facets.contains(&j)))
}

/// Slopes other than `-1` whose whole facet class can be dropped, each with its drop set.
pub fn removable_slope_classes(f: &Polynomial, mode: Mode) -> Result<BTreeMap<Q, BSet>> {
    let p = f.newton_polyhedron()?;
    let choose = match mode {
        Mode::Consistent => choose_consistent,
        Mode::Compatible if p.n == 3 => choose_compatible,
        Mode::Compatible => return Err(Error::Dimension { expected: 3, got: p.n }),
        Mode::General => return Err(Error::InvalidBSet("general mode removes no slopes".into())),
    };
    let minus_one = -Q::one();
    let mut out = BTreeMap::new();
    for (s, class) in slope_classes(&p) {
        if s == minus_one {
            continue;
        }
        match choose(&p, &class) {
            Ok(c) => {
                if let Some(b) = c.accepted() {
                    out.insert(s, b.clone());
                }
            }
            Err(Error::NotB1(_) | Error::CoordinateFacet(_) | Error::ZeroLevel(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stratum {
    pub chi: i64,
    /// Pairs `(N, nu)`.
    pub divisors: Vec<(i64, i64)>,
}

impl Stratum {
    pub fn validate(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        for &(n, nu) in &self.divisors {
            if n < 0 || nu < 0 || (n == 0 && nu == 0) {
                return Err(Error::InvalidStratum(format!("bad pair ({n}, {nu})")));
            }
            if !seen.insert((n, nu)) {
                return Err(Error::InvalidStratum(format!("repeated pair ({n}, {nu})")));
            }
        }
        Ok(())
    }
}

/// Reduced quotient of integer polynomials in `s`, coefficients ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalFunctionInS {
    #[serde(with = "num::bigints")]
    pub num: Vec<BigInt>,
    #[serde(with = "num::bigints")]
    pub den: Vec<BigInt>,
}

fn upoly(c: &[BigInt]) -> UPoly {
    UPoly::from_ints(c)
}

impl RationalFunctionInS {
    pub fn zero() -> Self {
        RationalFunctionInS { num: vec![], den: vec![BigInt::one()] }
    }

    pub fn constant(c: i64) -> Self {
        Self::new(&[BigInt::from(c)], &[BigInt::one()]).expect("nonzero denominator")
    }

    pub fn new(num: &[BigInt], den: &[BigInt]) -> Result<Self> {
        Self::from_upoly(upoly(num), upoly(den))
    }

    fn from_upoly(n: UPoly, d: UPoly) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::InvalidStratum("zero denominator".into()));
        }
        if n.is_zero() {
            return Ok(Self::zero());
        }
        let g = n.gcd(&d);
        let (n, _) = n.divrem(&g);
        let (d, _) = d.divrem(&g);
        let mut all: Vec<Q> = n.0.clone();
        all.extend(d.0.iter().cloned());
        let joint = num::clear_denominators(&all);
        let mut num: Vec<BigInt> = joint[..n.0.len()].to_vec();
        let mut den: Vec<BigInt> = joint[n.0.len()..].to_vec();
        if den.last().expect("nonzero").is_negative() {
            num.iter_mut().for_each(|c| *c = -&*c);
            den.iter_mut().for_each(|c| *c = -&*c);
        }
        Ok(RationalFunctionInS { num, den })
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = upoly(&self.num).mul(&upoly(&o.den)).add(&upoly(&o.num).mul(&upoly(&self.den)));
        let d = upoly(&self.den).mul(&upoly(&o.den));
        Self::from_upoly(n, d).expect("product of nonzero denominators")
    }

    pub fn eval(&self, s: &Q) -> Option<Q> {
        let d = upoly(&self.den).eval(s);
        (!d.is_zero()).then(|| upoly(&self.num).eval(s) / d)
    }
}

fn fmt_spoly(c: &[BigInt]) -> String {
    let mut out = String::new();
    for (k, a) in c.iter().enumerate().rev() {
        if a.is_zero() {
            continue;
        }
        let neg = a.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        let m = a.abs();
        if k == 0 || !m.is_one() {
            out.push_str(&m.to_string());
        }
        match k {
            0 => {}
            1 => out.push('s'),
            _ => out.push_str(&format!("s^{k}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn divisors(v: &BigInt) -> Option<Vec<BigInt>> {
    let v = v.abs().to_u64()?;
    if v > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= v {
        if v % d == 0 {
            out.push(BigInt::from(d));
            if d * d != v {
                out.push(BigInt::from(v / d));
            }
        }
        d += 1;
    }
    Some(out)
}

/// Rational roots with multiplicity, and the cofactor without rational roots.
/// `None` when the coefficients are too large to search.
fn rational_factorization(c: &[BigInt]) -> Option<(Vec<(Q, usize)>, Vec<BigInt>)> {
    let mut p = upoly(c);
    let mut roots: Vec<(Q, usize)> = Vec::new();
    let push = |r: Q, roots: &mut Vec<(Q, usize)>| match roots.iter_mut().find(|(x, _)| *x == r) {
        Some(e) => e.1 += 1,
        None => roots.push((r, 1)),
    };
    loop {
        let ints = p.primitive_ints();
        if ints.len() <= 1 {
            break;
        }
        if ints[0].is_zero() {
            push(Q::zero(), &mut roots);
            p = UPoly::from_ints(&ints[1..]);
            continue;
        }
        let lead = ints.last().expect("degree >= 1");
        let ps = divisors(&ints[0])?;
        let qs = divisors(lead)?;
        let mut found = None;
        'search: for a in &ps {
            for b in &qs {
                for sign in [1, -1] {
                    let r = Q::new(a * sign, b.clone());
                    if p.eval(&r).is_zero() {
                        found = Some(r);
                        break 'search;
                    }
                }
            }
        }
        let Some(r) = found else { break };
        let lin = UPoly::new(vec![-r.clone(), Q::one()]);
        p = p.divrem(&lin).0;
        push(r, &mut roots);
    }
    roots.sort_by(|a, b| b.0.cmp(&a.0));
    Some((roots, p.primitive_ints()))
}

impl fmt::Display for RationalFunctionInS {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = fmt_spoly(&self.num);
        if self.den.len() == 1 && self.den[0].is_one() {
            return f.write_str(&num);
        }
        let num_terms = self.num.iter().filter(|c| !c.is_zero()).count();
        let num = if num_terms > 1 { format!("({num})") } else { num };
        let Some((roots, rest)) = rational_factorization(&self.den) else {
            return write!(f, "{num}/({})", fmt_spoly(&self.den));
        };
        let mut pieces: Vec<String> = Vec::new();
        let mut lead_product = BigInt::one();
        for (r, k) in &roots {
            let lin = vec![-r.numer().clone(), r.denom().clone()];
            lead_product *= r.denom().pow(*k as u32);
            let s = format!("({})", fmt_spoly(&lin));
            pieces.push(if *k > 1 { format!("{s}^{k}") } else { s });
        }
        let scalar = self.den.last().expect("nonzero").clone();
        if rest.len() > 1 {
            let rest_lead = rest.last().expect("nonempty").clone();
            pieces.push(format!("({})", fmt_spoly(&rest)));
            lead_product *= rest_lead;
        }
        let scalar = scalar / lead_product;
        if !scalar.is_one() {
            pieces.insert(0, scalar.to_string());
        }
        let den = pieces.concat();
        if pieces.len() == 1 && den.starts_with('(') {
            write!(f, "{num}/{den}")
        } else {
            write!(f, "{num}/({den})")
        }
    }
}

/// `sum chi / prod (N s + nu)` over the strata.
pub fn assemble_topological_zeta(strata: &[Stratum]) -> Result<RationalFunctionInS> {
    let mut acc = RationalFunctionInS::zero();
    for st in strata {
        st.validate()?;
        let mut den = UPoly::constant(Q::one());
        for &(n, nu) in &st.divisors {
            den = den.mul(&UPoly::new(vec![num::q(nu), num::q(n)]));
        }
        let term = RationalFunctionInS::from_upoly(UPoly::constant(num::q(st.chi)), den)?;
        acc = acc.add(&term);
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ActualPoles {
    #[serde(with = "num::qlist")]
    pub poles: Vec<Q>,
    /// Part of the denominator without rational roots, if any.
    #[serde(with = "num::bigints")]
    pub residual: Vec<BigInt>,
    /// All roots of the denominator were rational and found.
    pub complete: bool,
}

impl ActualPoles {
    pub fn set(&self) -> BTreeSet<Q> {
        self.poles.iter().cloned().collect()
    }
}

/// Rational roots of the reduced denominator, largest first.
pub fn actual_poles(z: &RationalFunctionInS) -> ActualPoles {
    match rational_factorization(&z.den) {
        Some((roots, rest)) => ActualPoles {
            poles: roots.into_iter().map(|(r, _)| r).collect(),
            complete: rest.len() <= 1,
            residual: if rest.len() <= 1 { vec![] } else { rest },
        },
        None => ActualPoles { poles: vec![], residual: z.den.clone(), complete: false },
    }
}
