use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use super::{omega_v, CohenError};
use crate::exact::rational::{int_valuation, rat, valuation};
use crate::exact::Rational;
use crate::lfun::{branch_space_contains, lp_beta, LfunError, LpContext};
use crate::padic::{angle, padic_power, structural, teichmuller, PadicNumber};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CohenValue {
    #[serde(with = "crate::exact::rational::serde_str")]
    pub x: Rational,
    pub p: u64,
    pub s: PadicNumber,
    pub beta: i64,
    pub value: PadicNumber,
    pub effective_prec: i64,
    /// Number of `ζ_p(s, a/m)` evaluations the value was assembled from.
    pub summands: usize,
}

/// `ζ_p(s, a/m)` for `q | m`, `p ∤ a`:
/// `-(ω_v(m) / ω(a)^β) (ω(m1)^(β-1) / m1^-s) L_p^[β](s; a, m)`.
///
/// On the branch space `s ∈ 1 - β + (q/p)Z_p` the middle factor is taken to
/// be `[m1]^s`. Without an explicit `beta`, `β = 0` for odd `p` and
/// `β ≡ 1 - s (mod 2)` for `p = 2`.
pub fn cohen_zeta_c(ctx: &LpContext, s: &PadicNumber, beta: Option<i64>) -> Result<CohenValue, CohenError> {
    let (p, q, e) = (ctx.p(), ctx.q() as i64, ctx.e() as i64);
    let (a, m) = (ctx.a(), ctx.m());
    if m % q != 0 {
        return Err(CohenError::Domain(format!("q = {q} must divide m = {m}")));
    }
    if !s.is_integral() {
        return Err(CohenError::Domain(format!("s = {s} is not in Z_{p}")));
    }
    let beta = match beta {
        Some(b) => b.rem_euclid(e),
        None if p == 2 => (1 - s.residue(1).to_i64().unwrap()).rem_euclid(2),
        None => 0,
    };
    if !branch_space_contains(ctx.structural(), beta, s) {
        return Err(LfunError::WrongBranch { beta, s: s.to_string() }.into());
    }
    let n = ctx.prec();
    let l = lp_beta(ctx, beta, s)?;
    let vm = int_valuation(&m.into(), p);
    let m1 = m / (p as i64).pow(vm);
    let wide = n + vm;
    let wm = omega_v(&PadicNumber::from_int(m, p, wide))?;
    let wa = teichmuller(&PadicNumber::from_int(a, p, wide))?.pow(-beta)?;
    let m1s = padic_power(&angle(&PadicNumber::from_int(m1, p, wide))?, &s.truncate(wide as i64))?;
    let value = -(&(&(&wm * &wa) * &m1s) * &l.value);
    Ok(CohenValue {
        x: rat(a, m),
        p,
        s: s.clone(),
        beta,
        effective_prec: value.abs_prec(),
        value,
        summands: 1,
    })
}

/// `ζ_p(s, x)` for `x ∈ qZ_p`, from
/// `p^v ζ_p(s, x) = sum_{0 <= j < p^v, p ∤ j} ζ_p(s, (x + j)/p^v)` with each
/// summand in the other domain. `level` defaults to the least valid `v`.
pub fn cohen_zeta_zp(
    s: &PadicNumber,
    x: &Rational,
    p: u64,
    prec: u32,
    level: Option<u32>,
) -> Result<CohenValue, CohenError> {
    let sc = structural(p)?;
    let tq = sc.q_valuation() as i64;
    let vx = valuation(x, p);
    if vx.is_some_and(|v| v < tq) {
        return Err(CohenError::Domain(format!("x = {x} must lie in {}Z_{p}", sc.q)));
    }
    let vmin = vx.map_or(tq, |v| v + 1) as u32;
    let v = level.unwrap_or(vmin);
    if v < vmin {
        return Err(CohenError::Domain(format!("level {v} below the least valid level {vmin}")));
    }
    let pv = (p as i64).checked_pow(v).ok_or_else(|| CohenError::Domain("level too large".into()))?;
    let (xn, xd) = (
        i64::try_from(x.numer()).map_err(|_| CohenError::Domain("x too large".into()))?,
        i64::try_from(x.denom()).map_err(|_| CohenError::Domain("x too large".into()))?,
    );
    let wide = prec + 2 * v;
    let parts = (1..pv)
        .into_par_iter()
        .filter(|j| j % p as i64 != 0)
        .map(|j| {
            let a = xn + j * xd;
            let m = xd * pv;
            let ctx = LpContext::new(p, a, m, 1 + m)?.with_prec(wide);
            Ok(cohen_zeta_c(&ctx, &s.truncate(wide as i64), None)?)
        })
        .collect::<Result<Vec<_>, CohenError>>()?;
    let sum = parts
        .iter()
        .fold(PadicNumber::zero(p, wide as i64 + v as i64), |acc, t| &acc + &t.value);
    let p_inv = PadicNumber::from_residue(p, -(v as i64), 1.into(), wide as i64);
    let value = (&sum * &p_inv).truncate(prec as i64);
    Ok(CohenValue {
        x: x.clone(),
        p,
        s: s.clone(),
        beta: parts.first().map_or(0, |t| t.beta),
        effective_prec: value.abs_prec(),
        value,
        summands: parts.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohen::{chi_bernoulli_exact, cohen2_closed_form};
    use crate::exact::bernoulli_poly;
    use crate::exact::rational::int;

    #[test]
    fn documented_value() {
        // p = 3, m = 3, a = 1, k = 2
        let ctx = LpContext::new(3, 1, 3, 4).unwrap().with_prec(8);
        let s = PadicNumber::from_int(-1, 3, 8);
        let v = cohen_zeta_c(&ctx, &s, None).unwrap();
        assert!(v.effective_prec >= 5);
        assert!(v.value.eq_mod(&PadicNumber::from_rational(&rat(1, 4), 3, 8), v.effective_prec));
    }

    #[test]
    fn interpolation_in_the_c_domain() {
        for (p, a, m) in [(3u64, 2i64, 6i64), (5, 7, 5), (2, 3, 8), (2, 1, 4)] {
            let ctx = LpContext::new(p, a, m, 1 + m).unwrap().with_prec(10);
            for k in 1..=4usize {
                let s = PadicNumber::from_int(1 - k as i64, p, 16);
                let v = cohen_zeta_c(&ctx, &s, None).unwrap();
                let wm = omega_v(&PadicNumber::from_int(m, p, 12)).unwrap();
                let wa = teichmuller(&PadicNumber::from_int(a, p, 12)).unwrap();
                let b = PadicNumber::from_rational(&(bernoulli_poly(k, &rat(a, m)) / int(k as i64)), p, 12);
                let want = -(&(&wm.pow(k as i64).unwrap() * &wa.pow(-(k as i64)).unwrap()) * &b);
                assert!(v.value.eq_mod(&want, v.effective_prec), "p={p} a={a} m={m} k={k}");
                assert!(v.effective_prec >= 5, "p={p} k={k} eff={}", v.effective_prec);
            }
        }
    }

    #[test]
    fn zp_domain_at_negative_integers() {
        let p = 3;
        for x in [int(0), rat(3, 5), rat(-9, 7)] {
            for k in [2usize, 4] {
                let s = PadicNumber::from_int(1 - k as i64, p, 8);
                let v = cohen_zeta_zp(&s, &x, p, 7, None).unwrap();
                let chi = chi_bernoulli_exact(k, &x, p).unwrap().unwrap();
                assert_eq!(chi, cohen2_closed_form(k, &x, p));
                let want = PadicNumber::from_rational(&(-chi / int(k as i64)), p, 10);
                assert!(v.effective_prec >= 5);
                assert!(v.value.eq_mod(&want, v.effective_prec), "x={x} k={k}");
            }
        }
        let bad = cohen_zeta_zp(&PadicNumber::from_int(-1, 3, 5), &rat(1, 5), 3, 5, None);
        assert!(matches!(bad, Err(CohenError::Domain(_))));
    }
}
