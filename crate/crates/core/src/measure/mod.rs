//! Measures on Z_p given by exact power moments, and what can be done with
//! them: Mahler coefficients, integration of continuous functions, coset
//! masses, affine pushforwards and finite-level tables.

mod finite;
mod integrate;
mod mahler;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::rational::{binomial, serde_vec};
use crate::exact::Rational;
use crate::padic::PadicError;

pub use finite::{
    bernoulli_distribution_mass, finite_level, hurwitz_adelic_mass, hurwitz_adelic_masses,
    FiniteLevelMeasure,
    PrimeComponent,
};
pub use integrate::{
    coset_mass, integrate, integrate_adaptive, AdaptiveOptions, Integral, MahlerStream,
    Stabilization,
};
pub(crate) use finite::factor;
pub(crate) use integrate::indicator;
pub use mahler::{
    integrality_report, mahler_coefficients, IntegralityReport, MahlerTable, SharedMahlerTable,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MeasureError {
    #[error("a moment measure needs at least 2 moments, got {0}")]
    TooFewMoments(usize),
    #[error("need moments up to index {needed}, only {have} available")]
    InsufficientMoments { needed: usize, have: usize },
    #[error("integrand defined on 0..={have}, need 0..={needed}")]
    ShortStream { needed: usize, have: usize },
    #[error("Mahler sum did not stabilize mod p^{prec} up to J = {cap}")]
    NotStabilized { cap: usize, prec: i64 },
    #[error("coset {u} + p^{t}Z_p: need 0 <= u < p^t")]
    BadCoset { u: u64, t: u32 },
    #[error("scaling factor of an affine map must be nonzero")]
    DegenerateAffine,
    #[error("no component supplied for the prime {0}")]
    MissingPrime(u64),
    #[error("bad finite-level data: {0}")]
    FiniteLevel(String),
    #[error(transparent)]
    Padic(#[from] PadicError),
}

/// Where a moment sequence came from.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeasureMeta {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<i64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// `moments[n]` is the integral of `b^n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MomentMeasure {
    #[serde(default)]
    pub meta: MeasureMeta,
    #[serde(with = "serde_vec")]
    moments: Vec<Rational>,
}

impl MomentMeasure {
    pub fn new(moments: Vec<Rational>) -> Result<Self, MeasureError> {
        if moments.len() < 2 {
            return Err(MeasureError::TooFewMoments(moments.len()));
        }
        Ok(Self { meta: MeasureMeta::default(), moments })
    }

    pub fn with_meta(mut self, meta: MeasureMeta) -> Self {
        self.meta = meta;
        self
    }

    pub fn moments(&self) -> &[Rational] {
        &self.moments
    }

    /// The moment count `K`.
    pub fn len(&self) -> usize {
        self.moments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moments.is_empty()
    }

    pub fn total_mass(&self) -> &Rational {
        &self.moments[0]
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("moment measures serialize")
    }
}

/// Image under `v -> m v + s`: `m'_n = sum_i binom(n,i) m^i s^(n-i) m_i`.
pub fn affine_pushforward(
    mu: &MomentMeasure,
    m: &Rational,
    s: &Rational,
) -> Result<MomentMeasure, MeasureError> {
    if m.is_zero() {
        return Err(MeasureError::DegenerateAffine);
    }
    let k = mu.len();
    let mut m_pows = vec![Rational::one(); k];
    let mut s_pows = vec![Rational::one(); k];
    for i in 1..k {
        m_pows[i] = &m_pows[i - 1] * m;
        s_pows[i] = &s_pows[i - 1] * s;
    }
    let scaled: Vec<Rational> = mu.moments.iter().zip(&m_pows).map(|(x, y)| x * y).collect();
    let out = (0..k)
        .map(|n| {
            let mut acc = Rational::zero();
            for i in 0..=n {
                if scaled[i].is_zero() || s_pows[n - i].is_zero() {
                    continue;
                }
                acc += Rational::from_integer(binomial(n as u32, i as u32)) * &scaled[i] * &s_pows[n - i];
            }
            acc
        })
        .collect();
    Ok(MomentMeasure { meta: mu.meta.clone(), moments: out })
}

/// Preimage under `v -> m v + s`, i.e. the pushforward by `b -> (b - s)/m`.
pub fn affine_pullback(
    mu: &MomentMeasure,
    m: &Rational,
    s: &Rational,
) -> Result<MomentMeasure, MeasureError> {
    if m.is_zero() {
        return Err(MeasureError::DegenerateAffine);
    }
    affine_pushforward(mu, &m.recip(), &(-s / m))
}

/// Image under `b -> -b`.
pub fn involution(mu: &MomentMeasure) -> MomentMeasure {
    let moments = mu
        .moments
        .iter()
        .enumerate()
        .map(|(n, x)| if n % 2 == 1 { -x } else { x.clone() })
        .collect();
    MomentMeasure { meta: mu.meta.clone(), moments }
}

/// `M_k(c1 c2) = M_k(c1) + c1^k M_k(c2)` for `1 <= k <= K`, with `M_k` the
/// regularized Hurwitz moments.
pub fn cocycle_moment_check(a: i64, m: i64, c1: i64, c2: i64, k_max: usize) -> bool {
    use crate::lfun::hurwitz_moment;
    (1..=k_max).all(|k| {
        let lhs = hurwitz_moment(a, m, c1 * c2, k);
        let c1k = num_traits::pow(Rational::from_integer(c1.into()), k);
        let rhs = hurwitz_moment(a, m, c1, k) + c1k * hurwitz_moment(a, m, c2, k);
        lhs == rhs
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    fn sample() -> MomentMeasure {
        MomentMeasure::new(vec![rat(1, 2), rat(5, 4), int(-3), rat(7, 9), int(2)]).unwrap()
    }

    #[test]
    fn pushforward_basics() {
        let mu = sample();
        assert_eq!(affine_pushforward(&mu, &int(1), &int(0)).unwrap(), mu);
        let pf = affine_pushforward(&mu, &int(3), &rat(2, 5)).unwrap();
        assert_eq!(pf.moments()[1], int(3) * &mu.moments()[1] + rat(2, 5) * &mu.moments()[0]);
        let back = affine_pullback(&pf, &int(3), &rat(2, 5)).unwrap();
        assert_eq!(back, mu);
        assert!(affine_pushforward(&mu, &int(0), &int(1)).is_err());
    }

    #[test]
    fn involution_commutes_with_flipped_translation() {
        let mu = sample();
        assert_eq!(involution(&involution(&mu)), mu);
        let s = rat(-4, 7);
        let lhs = involution(&affine_pushforward(&mu, &int(5), &s).unwrap());
        let rhs = affine_pushforward(&involution(&mu), &int(5), &-s).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn json_shape() {
        let mu = MomentMeasure::new(vec![rat(1, 2), int(3)]).unwrap().with_meta(MeasureMeta {
            a: Some(1),
            m: Some(3),
            c: Some(4),
            ..Default::default()
        });
        let j = mu.to_json();
        assert_eq!(j, r#"{"meta":{"a":1,"m":3,"c":4},"moments":["1/2","3"]}"#);
        let back: MomentMeasure = serde_json::from_str(&j).unwrap();
        assert_eq!(back, mu);
        assert!(MomentMeasure::new(vec![int(1)]).is_err());
    }

    #[test]
    fn cocycle() {
        assert!(cocycle_moment_check(1, 3, 4, 7, 12));
        assert!(cocycle_moment_check(2, 5, 6, 1, 8));
    }
}
