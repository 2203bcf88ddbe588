//! Elements of Q_p known to finite precision.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::PadicError;
use crate::exact::rational::{int_valuation, mod_inverse, parse as parse_rational};
use crate::exact::Rational;

/// `p^val * unit + O(p^(val + prec))` with `unit` a p-adic unit reduced
/// mod `p^prec`.
///
/// Zero is stored with `unit = 0`, `prec = 0` and `val` equal to the
/// absolute precision to which it is known.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PadicNumber {
    p: u64,
    val: i64,
    unit: BigInt,
    prec: u32,
}

pub(crate) fn pow_p(p: u64, n: u32) -> BigInt {
    num_traits::pow(BigInt::from(p), n as usize)
}

impl PadicNumber {
    pub fn zero(p: u64, abs_prec: i64) -> Self {
        Self { p, val: abs_prec, unit: BigInt::zero(), prec: 0 }
    }

    pub fn one(p: u64, prec: u32) -> Self {
        Self::from_int(1, p, prec)
    }

    /// Builds `p^val * r + O(p^abs_prec)` for an arbitrary integer `r`.
    pub fn from_residue(p: u64, val: i64, r: BigInt, abs_prec: i64) -> Self {
        if abs_prec <= val {
            return Self::zero(p, abs_prec);
        }
        let r = r.mod_floor(&pow_p(p, (abs_prec - val) as u32));
        if r.is_zero() {
            return Self::zero(p, abs_prec);
        }
        let k = int_valuation(&r, p);
        let val = val + k as i64;
        let prec = (abs_prec - val) as u32;
        let unit = (r / pow_p(p, k)).mod_floor(&pow_p(p, prec));
        Self { p, val, unit, prec }
    }

    /// An exact rational rounded to `prec` significant digits. Zero maps to
    /// zero known modulo `p^prec`.
    pub fn from_rational(q: &Rational, p: u64, prec: u32) -> Self {
        if q.is_zero() {
            return Self::zero(p, prec as i64);
        }
        let vn = int_valuation(q.numer(), p);
        let vd = int_valuation(q.denom(), p);
        let modulus = pow_p(p, prec);
        let num = q.numer() / pow_p(p, vn);
        let den = q.denom() / pow_p(p, vd);
        let inv = mod_inverse(&den, &modulus).expect("unit denominator");
        Self {
            p,
            val: vn as i64 - vd as i64,
            unit: (num * inv).mod_floor(&modulus),
            prec,
        }
    }

    /// An exact rational known modulo `p^abs_prec`.
    pub fn from_rational_abs(q: &Rational, p: u64, abs_prec: i64) -> Self {
        if q.is_zero() {
            return Self::zero(p, abs_prec);
        }
        let v = crate::exact::rational::valuation(q, p).unwrap();
        if v >= abs_prec {
            return Self::zero(p, abs_prec);
        }
        Self::from_rational(q, p, (abs_prec - v) as u32)
    }

    pub fn from_int(n: i64, p: u64, prec: u32) -> Self {
        Self::from_rational(&Rational::from_integer(n.into()), p, prec)
    }

    pub fn from_bigint(n: &BigInt, p: u64, prec: u32) -> Self {
        Self::from_rational(&Rational::from_integer(n.clone()), p, prec)
    }

    /// Parses `"digits:<d0><d1>..."` (little-endian base-p, comma separated
    /// when `p > 36`) or a rational `"n"` / `"n/d"`. Rationals get `prec`
    /// significant digits; digit strings carry their own length.
    pub fn parse_literal(s: &str, p: u64, prec: u32) -> Result<Self, PadicError> {
        let s = s.trim();
        if let Some(digits) = s.strip_prefix("digits:") {
            let ds = parse_digits(digits, p)?;
            let n = ds.len() as u32;
            let mut acc = BigInt::zero();
            for d in ds.iter().rev() {
                acc = acc * p + d;
            }
            return Ok(Self::from_residue(p, 0, acc, n as i64));
        }
        let q = parse_rational(s).map_err(|_| PadicError::Parse(s.to_string()))?;
        Ok(Self::from_rational(&q, p, prec))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.val)
    }

    pub fn unit(&self) -> &BigInt {
        &self.unit
    }

    /// Significant digits of the unit part.
    pub fn prec(&self) -> u32 {
        self.prec
    }

    /// The exponent of the error term.
    pub fn abs_prec(&self) -> i64 {
        self.val + self.prec as i64
    }

    pub fn is_zero(&self) -> bool {
        self.unit.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        !self.is_zero() && self.val == 0
    }

    pub fn is_integral(&self) -> bool {
        self.is_zero() || self.val >= 0
    }

    /// Drops digits beyond absolute precision `abs`.
    pub fn truncate(&self, abs: i64) -> Self {
        if abs >= self.abs_prec() {
            return self.clone();
        }
        Self::from_residue(self.p, self.val, self.unit.clone(), abs)
    }

    /// The representative `p^val * unit` as an exact rational.
    pub fn to_rational(&self) -> Rational {
        if self.val >= 0 {
            Rational::from_integer(&self.unit * pow_p(self.p, self.val as u32))
        } else {
            Rational::new(self.unit.clone(), pow_p(self.p, (-self.val) as u32))
        }
    }

    /// Residue in `[0, p^n)`; requires an integral value.
    pub fn residue(&self, n: u32) -> BigInt {
        debug_assert!(self.is_integral());
        if self.is_zero() {
            return BigInt::zero();
        }
        (&self.unit * pow_p(self.p, self.val as u32)).mod_floor(&pow_p(self.p, n))
    }

    /// Agreement modulo `p^n`, ignoring the stored precisions.
    pub fn eq_mod(&self, other: &Self, n: i64) -> bool {
        let d = self.to_rational() - other.to_rational();
        d.is_zero() || crate::exact::rational::valuation(&d, self.p).unwrap() >= n
    }

    /// Little-endian base-p digits of the unit part, exactly `prec` of them.
    pub fn digits(&self) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.prec as usize);
        let mut u = self.unit.clone();
        let p = BigInt::from(self.p);
        for _ in 0..self.prec {
            let (q, r) = u.div_rem(&p);
            out.push(r.to_u64().unwrap());
            u = q;
        }
        out
    }

    pub fn inverse(&self) -> Result<Self, PadicError> {
        if self.is_zero() {
            return Err(PadicError::DivisionByZero);
        }
        let modulus = pow_p(self.p, self.prec);
        let unit = mod_inverse(&self.unit, &modulus).expect("unit part is invertible");
        Ok(Self { p: self.p, val: -self.val, unit, prec: self.prec })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, PadicError> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self, PadicError> {
        if e < 0 {
            return self.inverse()?.pow(-e);
        }
        if self.is_zero() {
            return Ok(if e == 0 {
                Self::one(self.p, self.val.max(0) as u32)
            } else {
                Self::zero(self.p, self.val.saturating_mul(e))
            });
        }
        let modulus = pow_p(self.p, self.prec);
        Ok(Self {
            p: self.p,
            val: self.val * e,
            unit: self.unit.modpow(&BigInt::from(e), &modulus),
            prec: self.prec,
        })
    }

    fn same_prime(&self, other: &Self) {
        assert_eq!(self.p, other.p, "p-adic numbers over different primes");
    }
}

fn parse_digits(s: &str, p: u64) -> Result<Vec<u64>, PadicError> {
    let bad = || PadicError::Parse(s.to_string());
    let ds: Vec<u64> = if s.contains(',') || p > 36 {
        s.split(',')
            .map(|d| d.trim().parse::<u64>().map_err(|_| bad()))
            .collect::<Result<_, _>>()?
    } else {
        s.chars()
            .map(|c| c.to_digit(36).map(u64::from).ok_or_else(bad))
            .collect::<Result<_, _>>()?
    };
    if ds.is_empty() || ds.iter().any(|&d| d >= p) {
        return Err(bad());
    }
    Ok(ds)
}

fn format_digits(ds: &[u64], p: u64) -> String {
    if p > 36 {
        ds.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
    } else {
        ds.iter()
            .map(|&d| std::char::from_digit(d as u32, 36).unwrap())
            .collect()
    }
}

impl Add for &PadicNumber {
    type Output = PadicNumber;
    fn add(self, rhs: Self) -> PadicNumber {
        self.same_prime(rhs);
        let abs = self.abs_prec().min(rhs.abs_prec());
        let v = self.val.min(rhs.val);
        let shift = |x: &PadicNumber| &x.unit * pow_p(x.p, (x.val - v) as u32);
        PadicNumber::from_residue(self.p, v, shift(self) + shift(rhs), abs)
    }
}

impl Sub for &PadicNumber {
    type Output = PadicNumber;
    fn sub(self, rhs: Self) -> PadicNumber {
        self + &(-rhs)
    }
}

impl Neg for &PadicNumber {
    type Output = PadicNumber;
    fn neg(self) -> PadicNumber {
        if self.is_zero() {
            return self.clone();
        }
        let modulus = pow_p(self.p, self.prec);
        PadicNumber { unit: (-&self.unit).mod_floor(&modulus), ..self.clone() }
    }
}

impl Mul for &PadicNumber {
    type Output = PadicNumber;
    fn mul(self, rhs: Self) -> PadicNumber {
        self.same_prime(rhs);
        if self.is_zero() || rhs.is_zero() {
            return PadicNumber::zero(self.p, self.val + rhs.val);
        }
        let prec = self.prec.min(rhs.prec);
        let modulus = pow_p(self.p, prec);
        PadicNumber {
            p: self.p,
            val: self.val + rhs.val,
            unit: (&self.unit * &rhs.unit).mod_floor(&modulus),
            prec,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for PadicNumber {
            type Output = PadicNumber;
            fn $f(self, rhs: Self) -> PadicNumber {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for PadicNumber {
    type Output = PadicNumber;
    fn neg(self) -> PadicNumber {
        -&self
    }
}

impl fmt::Display for PadicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.to_rational();
        write!(f, "{} + O({}^{})", crate::exact::rational::to_string(&r), self.p, self.abs_prec())
    }
}

#[derive(Serialize, Deserialize)]
struct PadicJson {
    p: u64,
    val: i64,
    unit: String,
    prec: u32,
}

impl Serialize for PadicNumber {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PadicJson {
            p: self.p,
            val: self.val,
            unit: format_digits(&self.digits(), self.p),
            prec: self.prec,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PadicNumber {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let j = PadicJson::deserialize(d)?;
        if j.prec == 0 {
            return Ok(Self::zero(j.p, j.val));
        }
        let ds = parse_digits(&j.unit, j.p).map_err(D::Error::custom)?;
        if ds.len() != j.prec as usize || ds[0] == 0 {
            return Err(D::Error::custom("unit digits must have length prec and a nonzero first digit"));
        }
        let mut unit = BigInt::zero();
        for d in ds.iter().rev() {
            unit = unit * j.p + d;
        }
        Ok(Self { p: j.p, val: j.val, unit, prec: j.prec })
    }
}

impl PadicNumber {
    /// Sign-aware smallest representative of an integral value, handy for
    /// printing small residues such as `-1`.
    pub fn balanced_residue(&self, n: u32) -> BigInt {
        let m = pow_p(self.p, n);
        let r = self.residue(n);
        if (&r * 2u32) > m {
            r - m
        } else {
            r
        }
    }
}
