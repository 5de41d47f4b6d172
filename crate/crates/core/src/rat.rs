//! Exact rational arithmetic and the canonical `p/q` text form.
//!
//! Rationals cross every external boundary (JSON, preset files, CLI
//! arguments) as strings in canonical lowest terms with positive
//! denominator: `"3"`, `"-1/2"`, `"7/3"`. Never floats.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision exact rational.
pub type Rat = num_rational::BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `n/d`. Panics if `d == 0`; intended for literals in code.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Error produced when a rational string fails to parse.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational {input:?}: {reason}")]
pub struct RatParseError {
    pub input: String,
    pub reason: &'static str,
}

/// Parse the canonical text form: an optional sign, an integer numerator,
/// and an optional `/denominator`. The result is reduced with a positive
/// denominator regardless of how the input was written.
pub fn parse_rat(s: &str) -> Result<Rat, RatParseError> {
    let err = |reason| RatParseError {
        input: s.to_string(),
        reason,
    };
    let trimmed = s.trim();
    if trimmed.is_empty() {
        return Err(err("empty string"));
    }
    let mut parts = trimmed.splitn(2, '/');
    let numer = parts
        .next()
        .unwrap()
        .trim()
        .parse::<BigInt>()
        .map_err(|_| err("numerator is not an integer"))?;
    let denom = match parts.next() {
        None => BigInt::one(),
        Some(d) => d
            .trim()
            .parse::<BigInt>()
            .map_err(|_| err("denominator is not an integer"))?,
    };
    if denom.is_zero() {
        return Err(err("denominator is zero"));
    }
    Ok(Rat::new(numer, denom))
}

/// Canonical text form: `p` when the denominator is 1, else `p/q` with `q > 0`.
pub fn format_rat(r: &Rat) -> String {
    // BigRational's Display already prints reduced form with positive
    // denominator and omits `/1`.
    r.to_string()
}

/// Render a slice of rationals as `[a, b, ...]` in canonical form.
pub fn format_rat_vec(v: &[Rat]) -> String {
    let mut out = String::from("[");
    for (i, r) in v.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        out.push_str(&format_rat(r));
    }
    out.push(']');
    out
}

/// True when every coordinate is an integer.
pub fn all_integral(v: &[Rat]) -> bool {
    v.iter().all(Rat::is_integer)
}

/// True when every coordinate is zero.
pub fn all_zero(v: &[Rat]) -> bool {
    v.iter().all(Rat::is_zero)
}

/// Componentwise difference `a - b`. Panics if lengths differ.
pub fn vec_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// The sign of a rational, as -1, 0, or 1.
pub fn sign(r: &Rat) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Serde adapters serializing [`Rat`] as its canonical string form.
pub mod rat_serde {
    use super::{format_rat, parse_rat, Rat};
    use alloc::string::String;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rat, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&format_rat(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(de)?;
        parse_rat(&s).map_err(serde::de::Error::custom)
    }
}

/// Serde adapters for `Vec<Rat>` as a JSON array of canonical strings.
pub mod rat_vec_serde {
    use super::{format_rat, parse_rat, Rat};
    use alloc::string::String;
    use alloc::vec::Vec;
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rat], ser: S) -> Result<S::Ok, S::Error> {
        let mut seq = ser.serialize_seq(Some(v.len()))?;
        for r in v {
            seq.serialize_element(&format_rat(r))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<Rat>, D::Error> {
        let strings = Vec::<String>::deserialize(de)?;
        strings
            .iter()
            .map(|s| parse_rat(s).map_err(serde::de::Error::custom))
            .collect()
    }
}
