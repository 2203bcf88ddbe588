use std::fmt;
use std::sync::{Arc, Mutex, MutexGuard};

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use super::{MeasureError, MomentMeasure};
use crate::exact::rational::{dot, factorial, int_valuation, mod_inverse, valuation};
use crate::exact::stirling::FallingFactorialRows;
use crate::exact::Rational;
use crate::padic::pow_p;

type MomentFn = Arc<dyn Fn(usize) -> Rational + Send + Sync>;

/// Mahler coefficients `c_j = ∫ binom(b, j) dμ`, extended on demand.
///
/// Backed either by a fixed moment list or by a generator that produces
/// `m_n` for any `n`.
#[derive(Clone)]
pub struct MahlerTable {
    source: Option<MomentFn>,
    moments: Vec<Rational>,
    coeffs: Vec<Rational>,
    rows: FallingFactorialRows,
}

impl fmt::Debug for MahlerTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MahlerTable")
            .field("moments", &self.moments.len())
            .field("coeffs", &self.coeffs.len())
            .field("unbounded", &self.source.is_some())
            .finish()
    }
}

impl MahlerTable {
    pub fn from_measure(mu: &MomentMeasure) -> Self {
        Self {
            source: None,
            moments: mu.moments().to_vec(),
            coeffs: Vec::new(),
            rows: FallingFactorialRows::new(),
        }
    }

    pub fn from_generator(f: impl Fn(usize) -> Rational + Send + Sync + 'static) -> Self {
        Self {
            source: Some(Arc::new(f)),
            moments: Vec::new(),
            coeffs: Vec::new(),
            rows: FallingFactorialRows::new(),
        }
    }

    /// Largest `J` this table can reach, `None` if unbounded.
    pub fn limit(&self) -> Option<usize> {
        match self.source {
            Some(_) => None,
            None => Some(self.moments.len().saturating_sub(1)),
        }
    }

    /// Makes `c_0..=c_j` available.
    pub fn ensure(&mut self, j: usize) -> Result<(), MeasureError> {
        if let Some(lim) = self.limit() {
            if j > lim {
                return Err(MeasureError::InsufficientMoments { needed: j, have: lim + 1 });
            }
        }
        if let Some(src) = &self.source {
            while self.moments.len() <= j {
                let n = self.moments.len();
                self.moments.push(src(n));
            }
        }
        while self.coeffs.len() <= j {
            let jj = self.rows.index() as usize;
            let row = self.rows.current();
            let s = dot(row, &self.moments[..=jj]);
            self.coeffs.push(s / Rational::from_integer(factorial(jj as u32)));
            self.rows.advance();
        }
        Ok(())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn moments(&self) -> &[Rational] {
        &self.moments
    }

    /// Residues of `p^L c_j` mod `p^n` for `j <= jmax`, with `L` the largest
    /// power of `p` in any denominator.
    pub(crate) fn scaled_residues(&mut self, jmax: usize, p: u64, n: u32) -> Result<(u32, Vec<BigInt>), MeasureError> {
        self.ensure(jmax)?;
        let cs = &self.coeffs[..=jmax];
        let dens: Vec<u32> = cs.iter().map(|c| int_valuation(c.denom(), p)).collect();
        let l = dens.iter().copied().max().unwrap_or(0);
        let modulus = pow_p(p, n);
        let res = cs
            .iter()
            .zip(&dens)
            .map(|(c, &vd)| {
                let den = c.denom() / pow_p(p, vd);
                let inv = mod_inverse(&den, &modulus).expect("p-free denominator");
                (c.numer() * pow_p(p, l - vd) * inv).mod_floor(&modulus)
            })
            .collect();
        Ok((l, res))
    }
}

/// A [`MahlerTable`] behind a mutex, for contexts shared across threads.
#[derive(Debug)]
pub struct SharedMahlerTable {
    inner: Mutex<MahlerTable>,
}

impl SharedMahlerTable {
    pub fn new(table: MahlerTable) -> Self {
        Self { inner: Mutex::new(table) }
    }

    pub fn lock(&self) -> MutexGuard<'_, MahlerTable> {
        self.inner.lock().expect("Mahler table poisoned")
    }

    /// Exact coefficients `c_0..=c_j`.
    pub fn coeffs(&self, j: usize) -> Result<Vec<Rational>, MeasureError> {
        let mut t = self.lock();
        t.ensure(j)?;
        Ok(t.coeffs[..=j].to_vec())
    }
}

/// `c_0, ..., c_J` exactly.
pub fn mahler_coefficients(mu: &MomentMeasure, j: usize) -> Result<Vec<Rational>, MeasureError> {
    let mut t = MahlerTable::from_measure(mu);
    t.ensure(j)?;
    Ok(t.coeffs[..=j].to_vec())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntegralityReport {
    pub p: u64,
    pub j_max: usize,
    /// Smallest valuation among the nonzero coefficients.
    pub min_valuation: Option<i64>,
    pub first_non_integral: Option<usize>,
    pub integral: bool,
}

pub fn integrality_report(coeffs: &[Rational], p: u64) -> IntegralityReport {
    let vals: Vec<Option<i64>> = coeffs.iter().map(|c| valuation(c, p)).collect();
    let min_valuation = vals.iter().flatten().copied().min();
    let first_non_integral = vals.iter().position(|v| v.is_some_and(|v| v < 0));
    IntegralityReport {
        p,
        j_max: coeffs.len().saturating_sub(1),
        min_valuation,
        first_non_integral,
        integral: first_non_integral.is_none(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};
    use crate::exact::stirling::stirling_second;

    #[test]
    fn first_coefficients() {
        let mu = MomentMeasure::new(vec![rat(1, 2), rat(5, 4), rat(-7, 3), int(11)]).unwrap();
        let c = mahler_coefficients(&mu, 3).unwrap();
        assert_eq!(c[0], rat(1, 2));
        assert_eq!(c[1], rat(5, 4));
        assert_eq!(c[2], (rat(-7, 3) - rat(5, 4)) / int(2));
        assert!(mahler_coefficients(&mu, 4).is_err());
    }

    #[test]
    fn stirling_round_trip() {
        // m_n = sum_j S(n, j) j! c_j
        let mu = MomentMeasure::new((0..10).map(|n| rat(n * n - 3, n + 2)).collect()).unwrap();
        let c = mahler_coefficients(&mu, 9).unwrap();
        for n in 0..10u32 {
            let back: Rational = (0..=n)
                .map(|j| {
                    Rational::from_integer(stirling_second(n, j) * factorial(j)) * &c[j as usize]
                })
                .sum();
            assert_eq!(back, mu.moments()[n as usize]);
        }
    }

    #[test]
    fn generator_matches_fixed() {
        let gen = |n: usize| rat(1, n as i64 + 1);
        let mut t = MahlerTable::from_generator(gen);
        t.ensure(12).unwrap();
        let mu = MomentMeasure::new((0..13).map(gen).collect()).unwrap();
        assert_eq!(t.coeffs(), mahler_coefficients(&mu, 12).unwrap().as_slice());
        assert_eq!(t.limit(), None);
    }

    #[test]
    fn report() {
        let r = integrality_report(&[int(1), rat(1, 3), int(0)], 3);
        assert!(!r.integral);
        assert_eq!(r.first_non_integral, Some(1));
        assert_eq!(r.min_valuation, Some(-1));
        assert!(integrality_report(&[int(1), rat(1, 3)], 5).integral);
    }
}
