//! Univariate polynomials over the rationals, coefficients in ascending order.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::num::Q;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly(pub Vec<Q>);

impl UPoly {
    pub fn new(mut c: Vec<Q>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UPoly(c)
    }

    pub fn constant(c: Q) -> Self {
        UPoly::new(vec![c])
    }

    pub fn from_ints(c: &[BigInt]) -> Self {
        UPoly::new(c.iter().cloned().map(Q::from_integer).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> Q {
        self.0.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn add(&self, o: &UPoly) -> UPoly {
        let len = self.0.len().max(o.0.len());
        UPoly::new(
            (0..len)
                .map(|i| {
                    self.0.get(i).cloned().unwrap_or_else(Q::zero)
                        + o.0.get(i).cloned().unwrap_or_else(Q::zero)
                })
                .collect(),
        )
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly(vec![]);
        }
        let mut c = vec![Q::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        UPoly::new(c)
    }

    pub fn scale(&self, s: &Q) -> UPoly {
        UPoly::new(self.0.iter().map(|x| x * s).collect())
    }

    pub fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.0.len() - 1;
        let mut r = self.0.clone();
        if r.len() <= dd {
            return (UPoly(vec![]), self.clone());
        }
        let mut quo = vec![Q::zero(); r.len() - dd];
        let lead = d.lead();
        for k in (0..quo.len()).rev() {
            let c = &r[k + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.0.iter().enumerate() {
                r[k + j] -= &c * dj;
            }
            quo[k] = c;
        }
        (UPoly::new(quo), UPoly::new(r))
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&(Q::one() / self.lead()))
    }

    pub fn gcd(&self, o: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Q) -> Q {
        self.0.iter().rev().fold(Q::zero(), |acc, c| acc * x + c)
    }

    /// Squarefree means `gcd(p, p')` is a nonzero constant.
    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Integer coefficients after clearing denominators and removing content, sign of `self` kept.
    pub fn primitive_ints(&self) -> Vec<BigInt> {
        let mut v = crate::num::clear_denominators(&self.0);
        if self.lead().is_negative() != v.last().is_some_and(|x| x.is_negative()) {
            v.iter_mut().for_each(|x| *x = -x.clone());
        }
        v
    }
}
