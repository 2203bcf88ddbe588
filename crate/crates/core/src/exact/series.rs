//! Power series in `T` truncated at a fixed order.

use std::ops::{Add, Mul, Neg, Sub};

use super::rational::factorial;
use super::{FieldScalar, Rational, Scalar};

/// Coefficients of `T^0 .. T^{L-1}`; the length is the truncation order.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> TruncSeries<T> {
    /// Pads with zeros or drops terms so the result has exactly `order` terms.
    pub fn new(mut coeffs: Vec<T>, order: usize) -> Self {
        coeffs.resize(order, T::zero());
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![T::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect() }
    }

    /// `exp(c T)` truncated: coefficients `c^n / n!`.
    pub fn exp_linear(c: &T, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order);
        let mut pow = T::one();
        for n in 0..order {
            let inv_fact = Rational::new(1.into(), factorial(n as u32));
            coeffs.push(pow.clone() * T::from_rational(&inv_fact));
            pow = pow * c.clone();
        }
        Self { coeffs }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.order(), other.order(), "truncation orders differ");
    }
}

impl<T: FieldScalar> TruncSeries<T> {
    /// Multiplicative inverse; `None` when the constant term vanishes.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.order();
        let a0 = self.coeffs.first()?.clone();
        if a0.is_zero() {
            return None;
        }
        let inv0 = T::one() / a0;
        let mut out: Vec<T> = Vec::with_capacity(n);
        out.push(inv0.clone());
        for k in 1..n {
            let mut acc = T::zero();
            for i in 1..=k {
                acc = acc + self.coeffs[i].clone() * out[k - i].clone();
            }
            out.push(-(acc * inv0.clone()));
        }
        Some(Self { coeffs: out })
    }
}

impl<T: Scalar> Add for &TruncSeries<T> {
    type Output = TruncSeries<T>;
    fn add(self, rhs: Self) -> TruncSeries<T> {
        self.check(rhs);
        TruncSeries {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }
}

impl<T: Scalar> Sub for &TruncSeries<T> {
    type Output = TruncSeries<T>;
    fn sub(self, rhs: Self) -> TruncSeries<T> {
        self.check(rhs);
        TruncSeries {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.clone() - b.clone()).collect(),
        }
    }
}

impl<T: Scalar> Mul for &TruncSeries<T> {
    type Output = TruncSeries<T>;
    fn mul(self, rhs: Self) -> TruncSeries<T> {
        self.check(rhs);
        let n = self.order();
        let mut out = vec![T::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..n - i].iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        TruncSeries { coeffs: out }
    }
}

impl<T: Scalar> Add for TruncSeries<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<T: Scalar> Sub for TruncSeries<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<T: Scalar> Mul for TruncSeries<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<T: Scalar> Neg for TruncSeries<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<T: Scalar> TruncSeries<T> {
    pub fn is_one(&self) -> bool {
        self.coeffs.first().is_some_and(|c| c.is_one()) && self.coeffs[1..].iter().all(|c| c.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    type Q = TruncSeries<Rational>;

    #[test]
    fn exp_is_a_homomorphism() {
        let a = rat(2, 3);
        let b = rat(-5, 4);
        let lhs = &Q::exp_linear(&a, 12) * &Q::exp_linear(&b, 12);
        assert_eq!(lhs, Q::exp_linear(&(a + b), 12));
        assert!((&Q::exp_linear(&int(3), 9) * &Q::exp_linear(&int(-3), 9)).is_one());
    }

    #[test]
    fn inverse_and_truncation() {
        let s = Q::new(vec![int(1), int(-1)], 6);
        let inv = s.inverse().unwrap();
        assert_eq!(inv.coeffs(), vec![int(1); 6].as_slice());
        assert!(Q::new(vec![int(0), int(1)], 4).inverse().is_none());
        assert_eq!(Q::new(vec![int(1); 10], 3).order(), 3);
    }

    #[test]
    fn float_series() {
        let e = TruncSeries::<f64>::exp_linear(&1.0, 20);
        let total: f64 = e.coeffs().iter().sum();
        assert!((total - std::f64::consts::E).abs() < 1e-12);
    }
}
