use num_integer::Integer;
use serde::Serialize;

use super::context::LpContext;
use super::LfunError;
use crate::measure::{
    factor, finite_level, hurwitz_adelic_mass, hurwitz_adelic_masses, indicator, FiniteLevelMeasure,
    PrimeComponent,
};
use crate::padic::PadicNumber;

/// Masses of `x + N Ẑ` in `Z/M` for the Hurwitz measure of `(a, m, c)`.
pub fn adelic_table(a: i64, m: i64, c: i64, n: u64, modulus: u64) -> Result<FiniteLevelMeasure, LfunError> {
    if m <= 1 || n == 0 || modulus == 0 || c.gcd(&m) != 1 || (c as i128).gcd(&(n as i128)) != 1 {
        return Err(LfunError::InvalidContext(format!(
            "adelic table needs m > 1, N, M > 0 and c prime to m N (m = {m}, N = {n}, c = {c})"
        )));
    }
    let masses = hurwitz_adelic_masses(a, m, c, n);
    let comps = factor(modulus)
        .into_iter()
        .map(|(ell, e)| PrimeComponent::from_masses(ell, e, n, |x| masses[x as usize].clone()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(finite_level(&comps, n, modulus)?)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AdelicProjection {
    pub level: u64,
    pub numeric: Vec<PadicNumber>,
    pub exact: Vec<PadicNumber>,
    pub effective_prec: i64,
    pub holds: bool,
}

/// The masses of the cosets `x + p^t Z_p` computed from the moments agree
/// with the finite-level masses of `x + p^t Ẑ`.
pub fn adelic_projection_check(ctx: &LpContext, t: u32) -> Result<AdelicProjection, LfunError> {
    let p = ctx.p();
    let n = ctx.prec() as i64;
    let level = p.pow(t);
    let mut numeric = Vec::with_capacity(level as usize);
    let mut exact = Vec::with_capacity(level as usize);
    let mut eff = n;
    let mut holds = true;
    for x in 0..level {
        let r = ctx
            .hat_table()
            .integrate_adaptive(indicator(x, t, p, n), p, n, ctx.adaptive_options(t, 0))?;
        let want = PadicNumber::from_rational_abs(
            &hurwitz_adelic_mass(ctx.a(), ctx.m(), ctx.c(), x, level),
            p,
            r.effective_prec,
        );
        holds &= r.value.eq_mod(&want, r.effective_prec);
        eff = eff.min(r.effective_prec);
        numeric.push(r.value);
        exact.push(want);
    }
    Ok(AdelicProjection { level, numeric, exact, effective_prec: eff, holds })
}
