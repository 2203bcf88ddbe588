use num_bigint::BigInt;
use serde::Serialize;

use super::context::LpContext;
use super::moments::{hurwitz_moment, pzp_integral_closed_form, unit_integral_closed_form};
use super::LfunError;
use crate::measure::{MeasureError, Stabilization};
use crate::padic::PadicNumber;

/// Both sides of the unit-integral formula for `b^(k-1)`, plus the `pZ_p`
/// part that separates them.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Theorem1Check {
    pub k: usize,
    /// `m_{k-1}` minus the numerically integrated `pZ_p` part.
    pub computed: PadicNumber,
    pub predicted: PadicNumber,
    pub pzp_numeric: PadicNumber,
    pub pzp_closed: PadicNumber,
    pub effective_prec: i64,
    pub stabilization: Stabilization,
    pub holds: bool,
}

pub fn theorem1_unit_integral(ctx: &LpContext, k: usize) -> Result<Theorem1Check, LfunError> {
    if k == 0 {
        return Err(LfunError::InvalidContext("k >= 1 required".into()));
    }
    let p = ctx.p();
    let n = ctx.prec() as i64;
    let e = (k - 1) as u32;
    let f = move |i: u64| -> Result<PadicNumber, MeasureError> {
        Ok(if i % p == 0 {
            PadicNumber::from_bigint(&BigInt::from(i).pow(e), p, n as u32)
        } else {
            PadicNumber::zero(p, n)
        })
    };
    let pzp = ctx.hat_table().integrate_adaptive(f, p, n, ctx.adaptive_options(1, k - 1))?;
    let eff = pzp.effective_prec.min(n);
    let total = PadicNumber::from_rational_abs(&hurwitz_moment(ctx.a(), ctx.m(), ctx.c(), k), p, n);
    let computed = (&total - &pzp.value).truncate(eff);
    let predicted = PadicNumber::from_rational_abs(&unit_integral_closed_form(ctx, k), p, eff);
    let pzp_closed = PadicNumber::from_rational_abs(&pzp_integral_closed_form(ctx, k), p, eff);
    let holds = computed.eq_mod(&predicted, eff) && pzp.value.eq_mod(&pzp_closed, eff);
    Ok(Theorem1Check {
        k,
        computed,
        predicted,
        pzp_numeric: pzp.value.truncate(eff),
        pzp_closed,
        effective_prec: eff,
        stabilization: pzp.stabilization,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_branches() {
        for (p, a, m, c) in [(3, 1, 3, 7), (5, 1, 3, 7), (2, 1, 4, 5)] {
            let ctx = LpContext::new(p, a, m, c).unwrap().with_prec(6);
            for k in 1..=4 {
                let r = theorem1_unit_integral(&ctx, k).unwrap();
                assert!(r.holds, "p={p} a={a} m={m} c={c} k={k}: {r:?}");
                assert!(r.effective_prec >= 5);
            }
        }
    }

    #[test]
    fn degenerate_is_zero() {
        let ctx = LpContext::degenerate(3, 1, 3).unwrap().with_prec(4);
        let r = theorem1_unit_integral(&ctx, 2).unwrap();
        assert!(r.computed.is_zero() && r.predicted.is_zero());
    }
}
