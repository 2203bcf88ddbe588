//! Cohen's p-adic Hurwitz zeta function `ζ_p(s, x)` expressed through the
//! L-functions of [`crate::lfun`], on both of its domains, and its relation
//! to the Shiratani zeta function.

mod bridge;
mod chi;
mod zeta;

use serde::Serialize;
use thiserror::Error;

use crate::exact::rational::valuation;
use crate::exact::Rational;
use crate::lfun::LfunError;
use crate::padic::{teichmuller, PadicError, PadicNumber};

pub use bridge::{claim_r0, cohen_shiratani_bridge, example11, BridgeCheck, ClaimR0, Example11, Example11Term};
pub use chi::{chi_bernoulli_exact, chi_bernoulli_teich, cohen2_closed_form};
pub use zeta::{cohen_zeta_c, cohen_zeta_zp, CohenValue};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CohenError {
    #[error("{0}")]
    Domain(String),
    #[error("claim violated: p = {p} divides a + m v = {value} for v = {v} < r")]
    ClaimViolation { p: u64, v: i64, value: i64 },
    #[error(transparent)]
    Lfun(#[from] LfunError),
    #[error(transparent)]
    Padic(#[from] PadicError),
}

impl From<crate::measure::MeasureError> for CohenError {
    fn from(e: crate::measure::MeasureError) -> Self {
        CohenError::Lfun(e.into())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Classification {
    /// `x` outside `(p/q) Z_p`.
    #[serde(rename = "CZp")]
    CZp,
    #[serde(rename = "Zp")]
    Zp,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CohenDomain {
    #[serde(with = "crate::exact::rational::serde_str")]
    pub x: Rational,
    pub p: u64,
    pub classification: Classification,
}

impl CohenDomain {
    /// `None` for `p = 2` and `v_2(x) = -1`, which lies in neither domain.
    pub fn classify(x: &Rational, p: u64) -> Option<Self> {
        let v = valuation(x, p).unwrap_or(i64::MAX);
        let bound = if p == 2 { -1 } else { 0 };
        let classification = if v >= 0 {
            Classification::Zp
        } else if v < bound {
            Classification::CZp
        } else {
            return None;
        };
        Some(Self { x: x.clone(), p, classification })
    }
}

/// `ω_v(u p^n) = p^n ω(u)`.
pub fn omega_v(x: &PadicNumber) -> Result<PadicNumber, CohenError> {
    let n = x.valuation().ok_or(PadicError::DivisionByZero)?;
    let u = PadicNumber::from_residue(x.p(), 0, x.unit().clone(), x.prec() as i64);
    let w = teichmuller(&u)?;
    let pn = PadicNumber::from_residue(x.p(), n, 1.into(), n + w.prec() as i64);
    Ok(&pn * &w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    #[test]
    fn omega_v_values() {
        let p5 = PadicNumber::from_int(5, 5, 6);
        assert_eq!(omega_v(&p5).unwrap(), PadicNumber::from_residue(5, 1, 1.into(), 7));
        let u = PadicNumber::from_int(2, 5, 6);
        assert_eq!(omega_v(&u).unwrap(), teichmuller(&u).unwrap());
        let ten = PadicNumber::from_int(10, 5, 6);
        let want = &PadicNumber::from_residue(5, 1, 1.into(), 7) * &teichmuller(&u).unwrap();
        assert!(omega_v(&ten).unwrap().eq_mod(&want, 7));
        assert!(omega_v(&PadicNumber::zero(5, 6)).is_err());
    }

    #[test]
    fn domains() {
        assert_eq!(CohenDomain::classify(&rat(1, 3), 3).unwrap().classification, Classification::CZp);
        assert_eq!(CohenDomain::classify(&rat(6, 5), 3).unwrap().classification, Classification::Zp);
        assert!(CohenDomain::classify(&rat(1, 2), 2).is_none());
        assert_eq!(CohenDomain::classify(&rat(1, 4), 2).unwrap().classification, Classification::CZp);
    }
}
