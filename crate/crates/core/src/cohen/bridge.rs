use serde::Serialize;

use super::zeta::cohen_zeta_zp;
use super::CohenError;
use crate::exact::rational::rat;
use crate::lfun::{shiratani_zeta, Branch, LpContext};
use crate::padic::{ap_inverse_bracket, padic_power, teichmuller, PadicNumber};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClaimR0 {
    pub r0: i64,
    /// `<a p^-1>`.
    pub bracket: i64,
    pub verified: bool,
}

/// Least `r0 >= 0` with `p | a + m r0`, and whether `a + m r0 = <a p^-1> p`.
pub fn claim_r0(a: i64, m: i64, p: u64) -> Result<ClaimR0, CohenError> {
    if !(0 < a && a < m) {
        return Err(CohenError::Domain(format!("0 < a < m required (a = {a}, m = {m})")));
    }
    let bracket = ap_inverse_bracket(a, m, p)?;
    let p = p as i64;
    let r0 = (0..p).find(|r| (a + m * r) % p == 0).expect("m is invertible mod p");
    Ok(ClaimR0 { r0, bracket, verified: a + m * r0 == bracket * p })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BridgeCheck {
    pub r: i64,
    pub lhs: PadicNumber,
    pub rhs: PadicNumber,
    pub effective_prec: i64,
    pub holds: bool,
}

/// `(a + m v)/m` for `v < r`, checked to be p-adic units.
fn shifted_terms(a: i64, m: i64, p: u64, r: i64) -> Result<Vec<i64>, CohenError> {
    (0..r)
        .map(|v| {
            let y = a + m * v;
            if y % p as i64 == 0 {
                Err(CohenError::ClaimViolation { p, v, value: y })
            } else {
                Ok(y)
            }
        })
        .collect()
}

/// Both sides of
/// `ζ_p(s, (a + m r)/m) = m^s ζ_p^Sh(s; a, m) - sum_{v<r} ((a + m v)/m)^-s`
/// where `a + m r = <a p^-1> p`. Powers of units are read as
/// `m^s = ω(m) [m]^s` and `y^-s = ω(y)^-1 [y]^-s`, which agree with the
/// ordinary powers at `s = 1 - k`, `e | k`.
pub fn cohen_shiratani_bridge(ctx: &LpContext, s: &PadicNumber) -> Result<BridgeCheck, CohenError> {
    let (p, a, m) = (ctx.p(), ctx.a(), ctx.m());
    if ctx.branch() != Branch::PCoprimeM || p == 2 {
        return Err(CohenError::Domain("the bridge needs p > 2 and p ∤ m".into()));
    }
    let claim = claim_r0(a, m, p)?;
    let r = (claim.bracket * p as i64 - a) / m;
    if r == 0 {
        return Err(CohenError::Domain(format!("p | a gives r = 0 (a = {a})")));
    }
    let ys = shifted_terms(a, m, p, r)?;
    let n = ctx.prec();
    let wide = n as i64 + 2;

    let lhs = cohen_zeta_zp(s, &rat(a + m * r, m), p, n, None)?;
    let sh = shiratani_zeta(ctx, s)?;
    let unit_power = |num: i64, den: i64, e: &PadicNumber, wsign: i64| -> Result<PadicNumber, CohenError> {
        let y = PadicNumber::from_rational(&rat(num, den), p, wide as u32);
        let w = teichmuller(&y)?;
        let ang = y.checked_div(&w)?;
        Ok(&w.pow(wsign)? * &padic_power(&ang, e)?)
    };
    let s_w = s.truncate(wide);
    let mut rhs = &unit_power(m, 1, &s_w, 1)? * &sh.value;
    let minus_s = -s_w;
    for y in ys {
        rhs = &rhs - &unit_power(y, m, &minus_s, -1)?;
    }
    let eff = lhs.effective_prec.min(rhs.abs_prec());
    Ok(BridgeCheck {
        r,
        holds: lhs.value.eq_mod(&rhs, eff),
        lhs: lhs.value.truncate(eff),
        rhs: rhs.truncate(eff),
        effective_prec: eff,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Example11Term {
    pub v: i64,
    pub numerator: i64,
    pub denominator: i64,
    pub unit: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Example11 {
    pub p: u64,
    pub a: i64,
    pub m: i64,
    pub bracket: i64,
    pub r: i64,
    pub product: i64,
    pub claim_verified: bool,
    pub terms: Vec<Example11Term>,
}

/// The shifted terms for `p = 11`, `a = 3`, `m = 106`.
pub fn example11() -> Example11 {
    let (p, a, m) = (11u64, 3i64, 106i64);
    let claim = claim_r0(a, m, p).expect("valid example");
    let r = claim.r0;
    let terms = (0..r)
        .map(|v| {
            let y = a + m * v;
            Example11Term { v, numerator: y, denominator: m, unit: y % p as i64 != 0 }
        })
        .collect();
    Example11 {
        p,
        a,
        m,
        bracket: claim.bracket,
        r,
        product: a + m * r,
        claim_verified: claim.verified,
        terms,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claim_examples() {
        assert_eq!(claim_r0(3, 106, 11).unwrap(), ClaimR0 { r0: 9, bracket: 87, verified: true });
        assert_eq!(claim_r0(1, 3, 5).unwrap(), ClaimR0 { r0: 3, bracket: 2, verified: true });
    }

    #[test]
    fn example_table() {
        let ex = example11();
        assert_eq!(ex.bracket, 87);
        assert_eq!(ex.product, 957);
        let nums: Vec<i64> = ex.terms.iter().map(|t| t.numerator).collect();
        assert_eq!(nums, vec![3, 109, 215, 321, 427, 533, 639, 745, 851]);
        assert!(ex.terms.iter().all(|t| t.unit && t.denominator == 106));
    }

    #[test]
    fn bridge_at_negative_integers() {
        let ctx = LpContext::new(3, 1, 4, 5).unwrap().with_prec(7);
        for k in [2i64, 4] {
            let b = cohen_shiratani_bridge(&ctx, &PadicNumber::from_int(1 - k, 3, 14)).unwrap();
            assert!(b.holds, "k={k}: {b:?}");
            assert!(b.effective_prec >= 5);
        }
    }
}
