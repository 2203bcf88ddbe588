//! Helpers around [`BigRational`]: construction, p-adic valuation, the
//! `"num/den"` text form, and small combinatorial integers.

use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ExactError;

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn big(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// Base-10 `"num/den"`, with the denominator omitted when it is 1.
pub fn to_string(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse(s: &str) -> Result<Rational, ExactError> {
    let s = s.trim();
    let bad = || ExactError::Parse(s.to_string());
    match s.split_once('/') {
        None => Ok(Rational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(ExactError::ZeroDenominator);
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Multiplicity of `p` in a nonzero integer.
pub fn int_valuation(n: &BigInt, p: u64) -> u32 {
    debug_assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut v = 0;
    let mut n = n.clone();
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// p-adic valuation; `None` for zero.
pub fn valuation(q: &Rational, p: u64) -> Option<i64> {
    if q.is_zero() {
        return None;
    }
    Some(int_valuation(q.numer(), p) as i64 - int_valuation(q.denom(), p) as i64)
}

pub fn is_p_integral(q: &Rational, p: u64) -> bool {
    valuation(q, p).map_or(true, |v| v >= 0)
}

/// Reduce a p-integral rational to its residue in `[0, p^n)`.
pub fn reduce_mod(q: &Rational, modulus: &BigInt) -> Option<BigInt> {
    let inv = mod_inverse(q.denom(), modulus)?;
    Some((q.numer() * inv).mod_floor(modulus))
}

pub fn mod_inverse(a: &BigInt, modulus: &BigInt) -> Option<BigInt> {
    if modulus.is_one() {
        return Some(BigInt::zero());
    }
    let ext = a.mod_floor(modulus).extended_gcd(modulus);
    if !ext.gcd.is_one() {
        return None;
    }
    Some(ext.x.mod_floor(modulus))
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Binomial coefficient for a signed upper argument.
pub fn binomial_signed(n: i64, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k as i64 {
        acc *= n - i;
    }
    acc / factorial(k)
}

pub fn pow(q: &Rational, e: i32) -> Rational {
    if e >= 0 {
        num_traits::pow(q.clone(), e as usize)
    } else {
        num_traits::pow(q.recip(), (-e) as usize)
    }
}

/// Sum of `coeffs[i] * vals[i]` with one common denominator and a single
/// reduction at the end.
pub fn dot(coeffs: &[BigInt], vals: &[Rational]) -> Rational {
    let den = vals
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let mut num = BigInt::zero();
    for (c, v) in coeffs.iter().zip(vals) {
        if c.is_zero() || v.is_zero() {
            continue;
        }
        num += c * v.numer() * (&den / v.denom());
    }
    Rational::new(num, den)
}

/// Sum with a common denominator, no intermediate reductions.
pub fn sum(vals: &[Rational]) -> Rational {
    let den = vals
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let num = vals
        .iter()
        .fold(BigInt::zero(), |acc, v| acc + v.numer() * (&den / v.denom()));
    Rational::new(num, den)
}

pub fn to_i64(q: &Rational) -> Option<i64> {
    if q.denom().is_one() {
        q.numer().to_i64()
    } else {
        None
    }
}

pub fn abs_u(n: &BigInt) -> BigUint {
    n.abs().to_biguint().unwrap_or_default()
}

pub fn sign_of(n: &BigInt) -> Sign {
    n.sign()
}

/// Serde adapter writing a rational as its `"num/den"` string.
pub mod serde_str {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::Rational;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::to_string(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        super::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// Same as [`serde_str`] for sequences.
pub mod serde_vec {
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};

    use super::Rational;

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for q in v {
            seq.serialize_element(&super::to_string(q))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|s| super::parse(s).map_err(serde::de::Error::custom))
            .collect()
    }
}
