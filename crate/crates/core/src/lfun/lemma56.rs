use num_bigint::BigInt;
use serde::Serialize;

use super::context::LpContext;
use super::moments::{boldzeta_moments, hurwitz_moments_raw};
use super::LfunError;
use crate::exact::rational::int;
use crate::measure::{affine_pullback, affine_pushforward, MeasureError, MomentMeasure};
use crate::padic::{ap_inverse_bracket, PadicNumber};

/// `a = p a1 + δ m` with `a1 = <a p^-1>`.
pub fn lemma56_decompose(a: i64, m: i64, p: u64) -> Result<(i64, i64), LfunError> {
    let a1 = ap_inverse_bracket(a, m, p)?;
    let rest = a - p as i64 * a1;
    debug_assert_eq!(rest % m, 0);
    Ok((a1, rest / m))
}

fn bold_raw(a: i64, m: i64, c: i64, k: usize) -> MomentMeasure {
    let hat = MomentMeasure::new(hurwitz_moments_raw(a, m, c, k)).expect("K >= 2");
    affine_pullback(&hat, &int(m), &int(a * c)).expect("m > 1")
}

/// Literal moment comparison of the measure for `a/m` with the image of the
/// measure for `a1/m` under `v -> p v - δc`, over all of Z_p.
///
/// The two sides have total masses `B_1(a/m)(1-c)` and `B_1(a1/m)(1-c)`,
/// so this is false whenever those differ; see
/// [`lemma56_restricted_check`] for the statement that does hold.
pub fn lemma56_check(a: i64, m: i64, p: u64, c: i64, k: usize) -> Result<bool, LfunError> {
    LpContext::new(p, a, m, c)?;
    let (a1, delta) = lemma56_decompose(a, m, p)?;
    let lhs = bold_raw(a, m, c, k.max(2));
    let rhs = affine_pushforward(&bold_raw(a1, m, c, k.max(2)), &int(p as i64), &int(-delta * c))?;
    Ok(lhs.moments() == rhs.moments())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Lemma56Restricted {
    pub a1: i64,
    pub delta: i64,
    /// The restriction is to `coset + pZ_p`.
    pub coset: u64,
    pub per_moment: Vec<bool>,
    pub effective_prec: i64,
    pub holds: bool,
}

/// Restricted to `-δc + pZ_p`, the measure for `a/m` has the same moments
/// as the image of the measure for `a1/m` under `v -> p v - δc`. The left
/// side is integrated numerically, the right side is exact.
pub fn lemma56_restricted_check(
    a: i64,
    m: i64,
    p: u64,
    c: i64,
    k: usize,
    prec: u32,
) -> Result<Lemma56Restricted, LfunError> {
    let ctx = LpContext::new(p, a, m, c)?.with_prec(prec);
    let (a1, delta) = lemma56_decompose(a, m, p)?;
    let ctx1 = LpContext::new(p, a1, m, c)?.with_moments(k.max(2));
    let pushed = affine_pushforward(&boldzeta_moments(&ctx1), &int(p as i64), &int(-delta * c))?;
    let coset = (-delta * c).rem_euclid(p as i64) as u64;
    let n = prec as i64;
    let mut eff = n;
    let mut per_moment = Vec::with_capacity(k);
    for j in 0..k {
        let f = move |i: u64| -> Result<PadicNumber, MeasureError> {
            Ok(if i % p == coset {
                PadicNumber::from_bigint(&BigInt::from(i).pow(j as u32), p, prec)
            } else {
                PadicNumber::zero(p, n)
            })
        };
        let r = ctx.bold_table().integrate_adaptive(f, p, n, ctx.adaptive_options(1, j))?;
        let want = PadicNumber::from_rational_abs(&pushed.moments()[j], p, r.effective_prec);
        eff = eff.min(r.effective_prec);
        per_moment.push(r.value.eq_mod(&want, r.effective_prec));
    }
    let holds = per_moment.iter().all(|&b| b);
    Ok(Lemma56Restricted { a1, delta, coset, per_moment, effective_prec: eff, holds })
}
