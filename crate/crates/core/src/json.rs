//! Serialization helpers: counts are written as decimal strings and
//! rationals as `{"num": "...", "den": "..."}` so no value is ever truncated.

use num_traits::Signed;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::Rational;

/// Serialize any integer as a decimal string.
pub fn dec<T: ToString, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn dec_opt<T: ToString, S: Serializer>(v: &Option<T>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_str(&v.to_string()),
        None => s.serialize_none(),
    }
}

pub fn dec_vec<T: ToString, S: Serializer>(v: &[T], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

pub fn rational<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    RationalJson(r).serialize(s)
}

pub fn rational_opt<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    match r {
        Some(r) => RationalJson(r).serialize(s),
        None => s.serialize_none(),
    }
}

pub struct RationalJson<'a>(pub &'a Rational);

impl Serialize for RationalJson<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Rational", 2)?;
        st.serialize_field("num", &self.0.numer().to_string())?;
        st.serialize_field("den", &self.0.denom().to_string())?;
        st.end()
    }
}

/// `num/den`, or just `num` for integers.
pub fn rational_text(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Lossy decimal rendering for human-facing columns only.
pub fn rational_approx(r: &Rational, digits: usize) -> String {
    use num_bigint::BigInt;
    use num_traits::{ToPrimitive, Zero};
    let scale = BigInt::from(10u32).pow(digits as u32);
    let neg = r.is_negative();
    let abs = r.abs();
    let scaled = (abs * Rational::from_integer(scale.clone())).round().to_integer();
    let int_part = &scaled / &scale;
    let frac_part = &scaled % &scale;
    let mut out = String::new();
    if neg && !scaled.is_zero() {
        out.push('-');
    }
    out.push_str(&int_part.to_string());
    if digits > 0 {
        let frac = frac_part.to_u128().unwrap_or(0);
        out.push('.');
        out.push_str(&format!("{frac:0digits$}"));
    }
    out
}
