//! Coefficient rings for the generic polynomial, series and Magnus-group code.
//!
//! Everything that only needs ring operations plus an embedding of the
//! rationals is written against [`Scalar`]. Exact work uses [`Rational`];
//! `f64`/`f32` are supported for quick numerical cross-checks, and
//! `Poly<T>` is itself a `Scalar` so bivariate polynomials come for free.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, ToPrimitive, Zero};

use super::Rational;

pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Image of a rational number in this ring.
    fn from_rational(q: &Rational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n.into()))
    }

    fn pow_u(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

/// Scalars that also divide. Needed for series inversion.
pub trait FieldScalar: Scalar + std::ops::Div<Output = Self> {}

impl Scalar for Rational {
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
}
impl FieldScalar for Rational {}

impl Scalar for f64 {
    fn from_rational(q: &Rational) -> Self {
        q.to_f64().unwrap_or(f64::NAN)
    }
}
impl FieldScalar for f64 {}

impl Scalar for f32 {
    fn from_rational(q: &Rational) -> Self {
        q.to_f32().unwrap_or(f32::NAN)
    }
}
impl FieldScalar for f32 {}

/// Approximate equality for the float instantiations; exact for rationals.
pub trait ApproxEq {
    fn approx_eq(&self, other: &Self, tol: f64) -> bool;
}

impl ApproxEq for Rational {
    fn approx_eq(&self, other: &Self, _tol: f64) -> bool {
        self == other
    }
}

impl ApproxEq for f64 {
    fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (self - other).abs() <= tol * (1.0 + self.abs().max(other.abs()))
    }
}

impl ApproxEq for f32 {
    fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        ((self - other).abs() as f64) <= tol * (1.0 + self.abs().max(other.abs()) as f64)
    }
}
