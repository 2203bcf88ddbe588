use crate::exact::{Scalar, TruncSeries};

use super::MagnusError;

/// `exp(ρX) exp(sum_k L_k (ad X)^(k-1) Y)` modulo words with two or more `Y`.
/// The coefficient of `T^(k-1)` in `ypart` is `L_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct YLinear<T> {
    pub rho: T,
    pub ypart: TruncSeries<T>,
}

impl<T: Scalar> YLinear<T> {
    pub fn new(rho: T, ypart: TruncSeries<T>) -> Self {
        Self { rho, ypart }
    }

    pub fn identity(order: usize) -> Self {
        Self { rho: T::zero(), ypart: TruncSeries::zero(order) }
    }

    pub fn order(&self) -> usize {
        self.ypart.order()
    }

    /// `(ρ, h)(ρ', g) = (ρ + ρ', e^(-ρ'T) h + g)`.
    pub fn mul(&self, other: &Self) -> Result<Self, MagnusError> {
        if self.order() != other.order() {
            return Err(MagnusError::OrderMismatch { left: self.order(), right: other.order() });
        }
        let twist = TruncSeries::exp_linear(&-other.rho.clone(), self.order());
        Ok(Self {
            rho: self.rho.clone() + other.rho.clone(),
            ypart: &(&twist * &self.ypart) + &other.ypart,
        })
    }

    /// `(-ρ, -e^(ρT) h)`.
    pub fn inverse(&self) -> Self {
        let twist = TruncSeries::exp_linear(&self.rho, self.order());
        Self { rho: -self.rho.clone(), ypart: -(&twist * &self.ypart) }
    }

    pub fn is_identity(&self) -> bool {
        self.rho.is_zero() && self.ypart.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};
    use crate::exact::Rational;

    fn el(rho: Rational, ys: &[i64], order: usize) -> YLinear<Rational> {
        YLinear::new(rho, TruncSeries::new(ys.iter().map(|&y| int(y)).collect(), order))
    }

    #[test]
    fn laws() {
        let a = el(rat(2, 3), &[1, -2, 5], 8);
        let b = el(rat(-1, 4), &[0, 3, 0, 7], 8);
        let c = el(int(5), &[-1, 1, 1], 8);
        let e = YLinear::identity(8);
        assert_eq!(a.mul(&e).unwrap(), a);
        assert_eq!(e.mul(&a).unwrap(), a);
        assert!(a.mul(&a.inverse()).unwrap().is_identity());
        assert!(a.inverse().mul(&a).unwrap().is_identity());
        let l = a.mul(&b).unwrap().mul(&c).unwrap();
        let r = a.mul(&b.mul(&c).unwrap()).unwrap();
        assert_eq!(l, r);
    }

    #[test]
    fn order_mismatch() {
        let a = el(int(1), &[1], 4);
        let b = el(int(1), &[1], 5);
        assert_eq!(a.mul(&b), Err(MagnusError::OrderMismatch { left: 4, right: 5 }));
    }

    #[test]
    fn floats() {
        let a = YLinear::new(0.5f64, TruncSeries::new(vec![1.0, 2.0], 6));
        let p = a.mul(&a.inverse()).unwrap();
        assert!(p.ypart.coeffs().iter().all(|c| c.abs() < 1e-12));
    }
}
