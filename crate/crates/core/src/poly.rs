//! Sparse polynomials over the rationals with zero constant term.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::num::{fmt_q, Q};
use crate::polyhedron::{self, Face, NewtonPolyhedron};

/// Lattice point of the positive orthant.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ExponentVector(pub Vec<u32>);

impl ExponentVector {
    pub fn to_q(&self) -> Vec<Q> {
        self.0.iter().map(|&e| Q::from_integer(BigInt::from(e))).collect()
    }

    pub fn dot(&self, u: &[i64]) -> i64 {
        self.0.iter().zip(u).map(|(&a, &b)| a as i64 * b).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<ExponentVector, Q>,
}

impl Polynomial {
    /// Combine like terms and validate.
    pub fn new<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Q)>,
    {
        if n == 0 || n > polyhedron::MAX_DIM {
            return Err(Error::DimensionCap(n, polyhedron::MAX_DIM));
        }
        let mut map: BTreeMap<ExponentVector, Q> = BTreeMap::new();
        for (e, c) in terms {
            if e.len() != n {
                return Err(Error::Dimension { expected: n, got: e.len() });
            }
            *map.entry(ExponentVector(e)).or_insert_with(Q::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        if map.keys().any(|e| e.is_zero()) {
            return Err(Error::ConstantTerm);
        }
        if map.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(Polynomial { n, terms: map })
    }

    pub fn parse(text: &str, n: usize) -> Result<Self> {
        Parser::new(text, n).polynomial()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<ExponentVector, Q> {
        &self.terms
    }

    pub fn coefficient(&self, e: &[u32]) -> Option<&Q> {
        self.terms.get(&ExponentVector(e.to_vec()))
    }

    pub fn support(&self) -> Vec<ExponentVector> {
        self.terms.keys().cloned().collect()
    }

    pub fn support_points(&self) -> Vec<Vec<Q>> {
        self.terms.keys().map(|e| e.to_q()).collect()
    }

    pub fn newton_polyhedron(&self) -> Result<NewtonPolyhedron> {
        polyhedron::newton_polyhedron(&self.support_points(), self.n)
    }

    /// `phi(u)` over the support, an integer for integral `u`.
    pub fn order(&self, u: &[i64]) -> i64 {
        self.terms.keys().map(|e| e.dot(u)).min().expect("nonempty")
    }

    /// Terms lying on `face`; the polyhedron must be the Newton polyhedron of `self`.
    pub fn face_polynomial(&self, p: &NewtonPolyhedron, face: &Face) -> Result<Polynomial> {
        if face.polyhedron != p.id || p.n != self.n || p.face(&face.facets) != Some(face) {
            return Err(Error::NotInStructure);
        }
        let pts = self.support_points();
        let own = p.vertices.iter().all(|v| pts.contains(v)) && pts.iter().all(|a| p.contains(a));
        if !own {
            return Err(Error::NotInStructure);
        }
        let terms = self.terms.iter().filter(|(e, _)| {
            let a = e.to_q();
            face.facets.iter().all(|&j| p.facets[j].half_space.is_tight(&a))
        });
        Ok(Polynomial {
            n: self.n,
            terms: terms.map(|(e, c)| (e.clone(), c.clone())).collect(),
        })
    }
}

/// Parse a polynomial in `x1..xn`.
pub fn parse_polynomial(text: &str, n: usize) -> Result<Polynomial> {
    Polynomial::parse(text, n)
}

/// Free-function form of [`Polynomial::face_polynomial`].
pub fn face_polynomial(f: &Polynomial, p: &NewtonPolyhedron, face: &Face) -> Result<Polynomial> {
    f.face_polynomial(p, face)
}

/// Write a monomial with the given variable names; `None` for the empty monomial.
pub(crate) fn fmt_monomial(exps: &[u64], names: &[String]) -> Option<String> {
    let parts: Vec<String> = exps
        .iter()
        .zip(names)
        .filter(|(e, _)| **e > 0)
        .map(|(e, v)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
        .collect();
    (!parts.is_empty()).then(|| parts.join("*"))
}

/// Write a signed sum of terms in the given order.
pub(crate) fn fmt_terms<'a, I>(terms: I, names: &[String]) -> String
where
    I: IntoIterator<Item = (Vec<u64>, &'a Q)>,
{
    let mut out = String::new();
    for (k, (e, c)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        let mono = fmt_monomial(&e, names);
        let body = match (&mono, a.is_one()) {
            (Some(m), true) => m.clone(),
            (Some(m), false) => format!("{}*{m}", fmt_q(&a)),
            (None, _) => fmt_q(&a),
        };
        match (k, neg) {
            (0, false) => out.push_str(&body),
            (0, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.n).map(|i| format!("x{i}")).collect();
        let terms = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| (e.0.iter().map(|&x| x as u64).collect::<Vec<_>>(), c));
        f.write_str(&fmt_terms(terms, &names))
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    n: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, n: usize) -> Self {
        Parser { s: text.as_bytes(), pos: 0, n }
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Syntax { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    /// Accepts ASCII `-` and the Unicode minus sign.
    fn sign(&mut self) -> Option<bool> {
        match self.peek() {
            Some(b'+') => {
                self.pos += 1;
                Some(false)
            }
            Some(b'-') => {
                self.pos += 1;
                Some(true)
            }
            Some(0xE2) if self.s[self.pos..].starts_with("\u{2212}".as_bytes()) => {
                self.pos += 3;
                Some(true)
            }
            _ => None,
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii");
        Ok(txt.parse().expect("digits"))
    }

    fn small(&mut self) -> Result<u64> {
        let d = self.digits()?;
        u64::try_from(d).or_else(|_| self.err("integer too large"))
    }

    fn polynomial(&mut self) -> Result<Polynomial> {
        let mut terms = Vec::new();
        let mut first = true;
        loop {
            let neg = match self.sign() {
                Some(s) => s,
                None if first => false,
                None => return self.err("expected '+' or '-'"),
            };
            let (e, mut c) = self.term()?;
            if neg {
                c = -c;
            }
            terms.push((e, c));
            first = false;
            if self.peek().is_none() {
                break;
            }
        }
        Polynomial::new(self.n, terms)
    }

    fn term(&mut self) -> Result<(Vec<u32>, Q)> {
        let mut coef = Q::one();
        let mut exps = vec![0u32; self.n];
        let mut need_factor = true;
        if self.peek().is_some_and(|b| b.is_ascii_digit()) {
            let p = self.digits()?;
            coef = if self.peek() == Some(b'/') {
                self.pos += 1;
                let d = self.digits()?;
                if d.is_zero() {
                    return self.err("zero denominator");
                }
                Q::new(p, d)
            } else {
                Q::from_integer(p)
            };
            need_factor = false;
            if self.peek() == Some(b'*') {
                self.pos += 1;
                need_factor = true;
            }
        }
        if need_factor {
            loop {
                self.variable(&mut exps)?;
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                } else {
                    break;
                }
            }
        }
        Ok((exps, coef))
    }

    fn variable(&mut self, exps: &mut [u32]) -> Result<()> {
        if self.peek() != Some(b'x') {
            return self.err("expected a variable x1..xn");
        }
        self.pos += 1;
        if !self.s.get(self.pos).is_some_and(|b| b.is_ascii_digit()) {
            return self.err("expected a variable index");
        }
        let idx = self.small()? as usize;
        if idx == 0 || idx > self.n {
            return Err(Error::VariableOutOfRange { index: idx, n: self.n });
        }
        let mut e = 1u64;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            e = self.small()?;
            if e == 0 {
                return self.err("exponent must be at least 1");
            }
        }
        let slot = &mut exps[idx - 1];
        *slot = u32::try_from(*slot as u64 + e).or_else(|_| self.err("exponent too large"))?;
        Ok(())
    }
}
