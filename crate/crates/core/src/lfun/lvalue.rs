use serde::Serialize;

use super::context::{Branch, ContextSummary, LpContext};
use super::LfunError;
use crate::measure::{Integral, MeasureError, SharedMahlerTable};
use crate::padic::{angle, padic_power, teichmuller, PadicNumber, StructuralConstants};

/// Which measure the L-value integral is taken against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    /// `b -> F(b)` against the Hurwitz measure on Z_p.
    Direct,
    /// `v -> F(m v + ac)` against its pullback.
    Pullback,
}

impl Route {
    pub fn default_for(branch: Branch) -> Self {
        match branch {
            Branch::PDividesM => Route::Pullback,
            Branch::PCoprimeM => Route::Direct,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LValue {
    pub ctx: ContextSummary,
    pub beta: i64,
    pub s: PadicNumber,
    pub value: PadicNumber,
    pub effective_prec: i64,
    pub stabilized: bool,
    pub route: Route,
    #[serde(rename = "J")]
    pub j: usize,
    pub prefactor_valuation: i64,
}

/// Whether `s` lies in `1 - β + (q/p) Z_p`, where the L-value does not
/// depend on `c`. Every `s` in Z_p qualifies for odd `p`.
pub fn branch_space_contains(sc: StructuralConstants, beta: i64, s: &PadicNumber) -> bool {
    if !s.is_integral() {
        return false;
    }
    if sc.p != 2 {
        return true;
    }
    let target = PadicNumber::from_int(1 - beta, 2, 1);
    s.eq_mod(&target, 1)
}

/// `[b]^(1-s) b^-1 ω(b)^β` for a unit `b`, zero on `pZ_p`.
fn integrand(b: &PadicNumber, one_minus_s: &PadicNumber, beta: i64) -> Result<PadicNumber, MeasureError> {
    if !b.is_unit() {
        return Ok(PadicNumber::zero(b.p(), b.abs_prec()));
    }
    let w = teichmuller(b)?;
    let ang = b.checked_div(&w)?;
    let pw = padic_power(&ang, one_minus_s)?;
    Ok(&(&pw * &b.inverse()?) * &w.pow(beta)?)
}

fn integral(
    ctx: &LpContext,
    route: Route,
    one_minus_s: &PadicNumber,
    beta: i64,
) -> Result<Integral, LfunError> {
    let p = ctx.p();
    let n = ctx.prec();
    let tq = ctx.structural().q_valuation();
    let (table, scale, shift, level): (&SharedMahlerTable, i64, i64, u32) = match route {
        Route::Direct => (ctx.hat_table(), 1, 0, tq),
        Route::Pullback => {
            // ω(m v + ac) is constant on cosets of p^(t - v_p(m))
            let vm = crate::exact::rational::int_valuation(&ctx.m().into(), p);
            (ctx.bold_table(), ctx.m(), ctx.a() * ctx.c(), tq.saturating_sub(vm))
        }
    };
    let f = |i: u64| {
        let b = PadicNumber::from_int(scale * i as i64 + shift, p, n);
        integrand(&b.truncate(n as i64), one_minus_s, beta)
    };
    Ok(table.integrate_adaptive(f, p, n as i64, ctx.adaptive_options(level, 0))?)
}

/// `1 - ω(c)^β [c]^(1-s)`.
fn euler_prefactor(c: i64, p: u64, n: u32, beta: i64, one_minus_s: &PadicNumber) -> Result<PadicNumber, LfunError> {
    let c = PadicNumber::from_int(c, p, n);
    let t = &teichmuller(&c)?.pow(beta)? * &padic_power(&angle(&c)?, one_minus_s)?;
    Ok(&PadicNumber::one(p, n) - &t)
}

pub fn lp_beta(ctx: &LpContext, beta: i64, s: &PadicNumber) -> Result<LValue, LfunError> {
    lp_beta_route(ctx, beta, s, Route::default_for(ctx.branch()))
}

/// `L_p^[β](s) = (1 - ω(c)^β [c]^(1-s))^-1 ∫_{Z_p^×} [b]^(1-s) b^-1 ω(b)^β`.
pub fn lp_beta_route(
    ctx: &LpContext,
    beta: i64,
    s: &PadicNumber,
    route: Route,
) -> Result<LValue, LfunError> {
    if ctx.is_degenerate() {
        return Err(LfunError::InvalidContext("L-values are undefined for c = 1".into()));
    }
    let p = ctx.p();
    let n = ctx.prec();
    let beta = beta.rem_euclid(ctx.e() as i64);
    if !s.is_integral() {
        return Err(LfunError::Padic(crate::padic::PadicError::NotIntegral(s.to_string())));
    }
    let one = PadicNumber::one(p, n);
    let one_minus_s = (&one - s).truncate(n as i64);
    if beta == 0 && one_minus_s.is_zero() {
        return Err(LfunError::Pole);
    }

    let mut prefactor = euler_prefactor(ctx.c(), p, n, beta, &one_minus_s)?;
    if prefactor.is_zero() {
        return Err(LfunError::VanishingPrefactor { prec: prefactor.abs_prec() });
    }
    let pv = prefactor.valuation().unwrap();
    if pv > 0 {
        // enough digits that the quotient loses exactly pv of them
        let wide = (&PadicNumber::one(p, n + pv as u32) - s).truncate(n as i64 + pv);
        prefactor = euler_prefactor(ctx.c(), p, n + pv as u32, beta, &wide)?;
    }

    let int = integral(ctx, route, &one_minus_s, beta)?;
    let value = int.value.checked_div(&prefactor)?.truncate(int.effective_prec.min(n as i64) - pv);
    let eff = value.abs_prec();
    Ok(LValue {
        ctx: ctx.summary(),
        beta,
        s: s.clone(),
        value,
        effective_prec: eff,
        stabilized: int.stabilization.stabilized,
        route,
        j: int.stabilization.j,
        prefactor_valuation: pv,
    })
}

/// `ζ_p^Sh(s; a, m) = -L_p^[0](s; a, m)`, for odd `p`.
pub fn shiratani_zeta(ctx: &LpContext, s: &PadicNumber) -> Result<LValue, LfunError> {
    if ctx.p() == 2 {
        return Err(LfunError::Unsupported("the Shiratani zeta function needs p > 2".into()));
    }
    let mut v = lp_beta(ctx, 0, s)?;
    v.value = -v.value;
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lfun::interpolation_value;

    fn s_int(k: i64, p: u64) -> PadicNumber {
        PadicNumber::from_int(1 - k, p, 12)
    }

    #[test]
    fn interpolation_small() {
        for (p, a, m, c) in [(3u64, 1i64, 3i64, 4i64), (5, 2, 3, 4)] {
            let ctx = LpContext::new(p, a, m, c).unwrap().with_prec(6);
            let e = ctx.e() as i64;
            for k in 1..=4i64 {
                let v = lp_beta(&ctx, k % e, &s_int(k, p)).unwrap();
                let want = PadicNumber::from_rational_abs(&interpolation_value(p, a, m, k as usize), p, v.effective_prec);
                assert!(v.value.eq_mod(&want, v.effective_prec), "p={p} k={k}");
                assert!(v.stabilized);
            }
        }
    }

    #[test]
    fn routes_agree() {
        let ctx = LpContext::new(3, 1, 3, 4).unwrap().with_prec(5);
        let s = PadicNumber::from_rational(&crate::exact::rational::rat(2, 7), 3, 5);
        let a = lp_beta_route(&ctx, 1, &s, Route::Direct).unwrap();
        let b = lp_beta_route(&ctx, 1, &s, Route::Pullback).unwrap();
        let prec = a.effective_prec.min(b.effective_prec);
        assert!(a.value.eq_mod(&b.value, prec));
    }

    #[test]
    fn pole_and_branches() {
        let ctx = LpContext::new(3, 1, 3, 4).unwrap().with_prec(4);
        assert_eq!(lp_beta(&ctx, 0, &PadicNumber::one(3, 4)), Err(LfunError::Pole));
        let sc = ctx.structural();
        assert!(branch_space_contains(sc, 0, &PadicNumber::from_int(5, 3, 4)));
        let sc2 = crate::padic::structural(2).unwrap();
        assert!(branch_space_contains(sc2, 0, &PadicNumber::from_int(-3, 2, 4)));
        assert!(!branch_space_contains(sc2, 1, &PadicNumber::from_int(-3, 2, 4)));
    }
}
