//! Exact rational scalars and their `"p/q"` wire format.

use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// All polyhedral arithmetic in this crate is exact; no floating point.
pub type Rat = BigRational;

pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p"` or `"p/q"` with optional sign.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::ParseRational(s.to_string());
    match s.split_once('/') {
        None => {
            let p = BigInt::from_str(s).map_err(|_| bad())?;
            Ok(Rat::from_integer(p))
        }
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(p, q))
        }
    }
}

/// Renders a rational as `"p"` when integral, `"p/q"` otherwise.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn is_integral(r: &Rat) -> bool {
    r.denom().is_one()
}

pub fn rat_abs_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    num::Integer::gcd(&a.abs(), &b.abs())
}

/// Serde adapter serializing a rational as a `"p/q"` string and accepting
/// either a string or a JSON integer on input.
pub mod rat_serde {
    use super::*;
    use serde::de::{self, Visitor};
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rat(r))
    }

    pub(crate) struct RatVisitor;

    impl Visitor<'_> for RatVisitor {
        type Value = Rat;

        fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
            f.write_str("a rational as \"p/q\" string or an integer")
        }

        fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Rat, E> {
            parse_rat(v).map_err(|e| E::custom(e.to_string()))
        }

        fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Rat, E> {
            Ok(rat_int(v))
        }

        fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Rat, E> {
            Ok(Rat::from_integer(BigInt::from(v)))
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rat, D::Error> {
        d.deserialize_any(RatVisitor)
    }
}

/// Serde adapter for vectors of rationals.
pub mod rat_vec_serde {
    use super::*;
    use serde::de::{SeqAccess, Visitor};
    use serde::ser::SerializeSeq;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rat], s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for r in v {
            seq.serialize_element(&format_rat(r))?;
        }
        seq.end()
    }

    struct VecVisitor;

    impl<'de> Visitor<'de> for VecVisitor {
        type Value = Vec<Rat>;

        fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
            f.write_str("a sequence of rationals")
        }

        fn visit_seq<A: SeqAccess<'de>>(
            self,
            mut seq: A,
        ) -> std::result::Result<Vec<Rat>, A::Error> {
            struct Elem(Rat);
            impl<'de> serde::Deserialize<'de> for Elem {
                fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                    d.deserialize_any(super::rat_serde::RatVisitor).map(Elem)
                }
            }
            let mut out = Vec::new();
            while let Some(Elem(r)) = seq.next_element::<Elem>()? {
                out.push(r);
            }
            Ok(out)
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Rat>, D::Error> {
        d.deserialize_seq(VecVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "5", "-3", "2/3", "-7/4", "10/5"] {
            let r = parse_rat(s).unwrap();
            let back = parse_rat(&format_rat(&r)).unwrap();
            assert_eq!(r, back);
        }
        assert_eq!(format_rat(&parse_rat("10/5").unwrap()), "2");
        assert_eq!(format_rat(&rat(-1, 2)), "-1/2");
    }

    #[test]
    fn rejects_malformed() {
        for s in ["", "a", "1/0", "1/2/3", "1.5"] {
            assert!(parse_rat(s).is_err(), "{s} should not parse");
        }
    }
}
