//! Exact rational helpers and serde adapters.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number used for coefficients, levels and vertex coordinates.
pub type Q = BigRational;

pub fn q(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

pub fn qf(p: i64, d: i64) -> Q {
    Q::new(BigInt::from(p), BigInt::from(d))
}

pub fn qvec(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| q(x)).collect()
}

/// `"p"` for integers, `"p/q"` otherwise.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, d)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Q::new(p, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Q::from_integer),
    }
}

pub fn dot_iq(u: &[i64], a: &[Q]) -> Q {
    u.iter()
        .zip(a)
        .fold(Q::zero(), |acc, (&ui, ai)| acc + ai * BigInt::from(ui))
}

pub fn to_i64(x: &BigInt) -> Result<i64> {
    x.to_i64().ok_or_else(|| Error::Overflow(x.to_string()))
}

pub fn q_to_i64(x: &Q) -> Result<i64> {
    if !x.is_integer() {
        return Err(Error::Invariant(format!("{} is not an integer", fmt_q(x))));
    }
    to_i64(x.numer())
}

pub fn gcd_i64(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, &x| g.gcd(&x))
}

/// Divide by the gcd of the entries; zero vectors are returned unchanged.
pub fn primitive_i64(v: &[i64]) -> Vec<i64> {
    let g = gcd_i64(v);
    if g <= 1 {
        v.to_vec()
    } else {
        v.iter().map(|x| x / g).collect()
    }
}

pub fn primitive_big(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Scale a rational vector by a positive integer so that it becomes integral and primitive.
pub fn clear_denominators(v: &[Q]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let mut out: Vec<BigInt> = v.iter().map(|x| (x * &l).to_integer()).collect();
    primitive_big(&mut out);
    out
}

pub fn is_nonneg(v: &[Q]) -> bool {
    v.iter().all(|x| !x.is_negative())
}

pub fn l1(u: &[i64]) -> i64 {
    u.iter().sum()
}

/// serde adapter: a single rational as a `"p/q"` string.
pub mod qstr {
    use super::*;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_q(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        parse_q(&s).ok_or_else(|| de::Error::custom(format!("bad rational {s:?}")))
    }
}

/// serde adapter: a list of rationals.
pub mod qlist {
    use super::*;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &[Q], s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(x.iter().map(fmt_q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Q>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter()
            .map(|s| parse_q(s).ok_or_else(|| de::Error::custom(format!("bad rational {s:?}"))))
            .collect()
    }
}

/// serde adapter: a matrix of rationals.
pub mod qmat {
    use super::*;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &[Vec<Q>], s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(x.iter().map(|r| r.iter().map(fmt_q).collect::<Vec<_>>()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Vec<Vec<Q>>, D::Error> {
        let v = Vec::<Vec<String>>::deserialize(d)?;
        v.iter()
            .map(|r| {
                r.iter()
                    .map(|s| {
                        parse_q(s).ok_or_else(|| de::Error::custom(format!("bad rational {s:?}")))
                    })
                    .collect()
            })
            .collect()
    }
}

/// serde adapter: coordinate directions stored 0-based, written 1-based.
pub mod dirs {
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &[usize], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(x.iter().map(|i| i + 1))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<usize>, D::Error> {
        Vec::<usize>::deserialize(d)?
            .into_iter()
            .map(|i| i.checked_sub(1).ok_or_else(|| de::Error::custom("directions are 1-based")))
            .collect()
    }
}

/// serde adapter: a single coordinate direction, written 1-based.
pub mod dir {
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &usize, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u64(*x as u64 + 1)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<usize, D::Error> {
        usize::deserialize(d)?
            .checked_sub(1)
            .ok_or_else(|| de::Error::custom("directions are 1-based"))
    }
}

/// serde adapter: an optional coordinate direction, written 1-based.
pub mod dir_opt {
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Option<usize>, s: S) -> Result<S::Ok, S::Error> {
        match x {
            Some(i) => s.serialize_some(&(*i as u64 + 1)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<usize>, D::Error> {
        Option::<usize>::deserialize(d)?
            .map(|i| i.checked_sub(1).ok_or_else(|| de::Error::custom("directions are 1-based")))
            .transpose()
    }
}

/// serde adapter: big integers as JSON numbers when they fit in i64, strings otherwise.
pub mod bigints {
    use super::*;
    use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Small(i64),
        Big(String),
    }

    pub fn serialize<S: Serializer>(x: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(x.iter().map(|v| match v.to_i64() {
            Some(i) => Repr::Small(i),
            None => Repr::Big(v.to_string()),
        }))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Vec<BigInt>, D::Error> {
        Vec::<Repr>::deserialize(d)?
            .into_iter()
            .map(|r| match r {
                Repr::Small(i) => Ok(BigInt::from(i)),
                Repr::Big(s) => s.parse().map_err(|_| de::Error::custom(format!("bad integer {s:?}"))),
            })
            .collect()
    }
}
