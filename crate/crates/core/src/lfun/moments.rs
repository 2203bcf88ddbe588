use std::sync::Mutex;

use num_traits::{One, Zero};

use super::context::{Branch, LpContext};
use crate::exact::rational::{binomial, int, rat};
use crate::exact::{bernoulli_poly, Rational};
use crate::measure::{affine_pullback, MeasureMeta, MomentMeasure};
use crate::padic::ap_inverse_bracket;

/// `M_k = (m^(k-1)/k) B_k(a/m) (1 - c^k)`, the integral of `b^(k-1)`.
pub fn hurwitz_moment(a: i64, m: i64, c: i64, k: usize) -> Rational {
    assert!(k >= 1, "moments are indexed from k = 1");
    if c == 1 {
        return Rational::zero();
    }
    let mk = num_traits::pow(int(m), k - 1);
    let ck = num_traits::pow(int(c), k);
    mk / int(k as i64) * bernoulli_poly(k, &rat(a, m)) * (Rational::one() - ck)
}

/// `m_0, ..., m_{K-1}` without any validation of `(a, m, c)`.
pub fn hurwitz_moments_raw(a: i64, m: i64, c: i64, k: usize) -> Vec<Rational> {
    (1..=k).map(|n| hurwitz_moment(a, m, c, n)).collect()
}

fn meta(kind: &str, ctx: &LpContext) -> MeasureMeta {
    MeasureMeta {
        kind: Some(kind.into()),
        a: Some(ctx.a()),
        m: Some(ctx.m()),
        c: Some(ctx.c()),
        notes: vec!["m_0 = B_1(a/m)(1-c) extends the k >= 2 moment formula to k = 1".into()],
    }
}

pub fn hurwitz_moments(ctx: &LpContext) -> MomentMeasure {
    let raw = hurwitz_moments_raw(ctx.a(), ctx.m(), ctx.c(), ctx.moment_count());
    MomentMeasure::new(raw).expect("K >= 2").with_meta(meta("hurwitz", ctx))
}

/// Moments of the measure whose image under `v -> m v + ac` is the Hurwitz
/// measure.
pub fn boldzeta_moments(ctx: &LpContext) -> MomentMeasure {
    let hat = hurwitz_moments(ctx);
    let s = int(ctx.a() * ctx.c());
    affine_pullback(&hat, &int(ctx.m()), &s)
        .expect("m > 1")
        .with_meta(meta("boldzeta", ctx))
}

/// Unbounded version of [`boldzeta_moments`] for Mahler tables.
pub(crate) fn boldzeta_generator(a: i64, m: i64, c: i64) -> impl Fn(usize) -> Rational + Send + Sync {
    let hat: Mutex<Vec<Rational>> = Mutex::new(Vec::new());
    let shift = rat(-a * c, m);
    let minv = rat(1, m);
    move |j| {
        let mut h = hat.lock().expect("moment cache poisoned");
        while h.len() <= j {
            let k = h.len() + 1;
            h.push(hurwitz_moment(a, m, c, k));
        }
        let mut acc = Rational::zero();
        let mut mi = Rational::one();
        for (i, hi) in h.iter().enumerate().take(j + 1) {
            if !hi.is_zero() {
                let coeff = Rational::from_integer(binomial(j as u32, i as u32));
                acc += coeff * num_traits::pow(shift.clone(), j - i) * &mi * hi;
            }
            mi *= &minv;
        }
        acc
    }
}

/// The Bernoulli value `L_p(1-k)` should interpolate, without the
/// `(1 - c^k)` factor: `(m^(k-1)/k) B_k(a/m)`, minus the Euler-type term
/// `p^(k-1) (m^(k-1)/k) B_k(<a p^-1>/m)` when `p ∤ m`.
pub fn interpolation_value(p: u64, a: i64, m: i64, k: usize) -> Rational {
    let mk = num_traits::pow(int(m), k - 1) / int(k as i64);
    let main = &mk * bernoulli_poly(k, &rat(a, m));
    if m % p as i64 == 0 {
        return main;
    }
    let a1 = ap_inverse_bracket(a, m, p).expect("p ∤ m and m ∤ a");
    let pk = num_traits::pow(int(p as i64), k - 1);
    main - pk * mk * bernoulli_poly(k, &rat(a1, m))
}

/// Closed form of the integral of `b^(k-1)` over the units.
pub fn unit_integral_closed_form(ctx: &LpContext, k: usize) -> Rational {
    let ck = num_traits::pow(int(ctx.c()), k);
    (Rational::one() - ck) * interpolation_value(ctx.p(), ctx.a(), ctx.m(), k)
}

/// Closed form of the integral of `b^(k-1)` over `pZ_p`: zero when `p | m`,
/// else `p^(k-1) (m^(k-1)/k) B_k(<a p^-1>/m) (1 - c^k)`.
pub fn pzp_integral_closed_form(ctx: &LpContext, k: usize) -> Rational {
    if ctx.branch() == Branch::PDividesM {
        return Rational::zero();
    }
    hurwitz_moment(ctx.a(), ctx.m(), ctx.c(), k) - unit_integral_closed_form(ctx, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::affine_pushforward;

    #[test]
    fn documented_values() {
        let ctx = LpContext::new(3, 1, 3, 4).unwrap();
        let h = hurwitz_moments(&ctx);
        assert_eq!(h.moments()[0], rat(1, 2));
        assert_eq!(h.moments()[1], rat(5, 4));
        let b = boldzeta_moments(&ctx);
        assert_eq!(b.moments()[0], rat(1, 2));
        assert_eq!(b.moments()[1], rat(-1, 4));
        let back = affine_pushforward(&b, &int(3), &int(4)).unwrap();
        assert_eq!(back.moments(), h.moments());
    }

    #[test]
    fn generator_matches_pullback() {
        let ctx = LpContext::new(5, 2, 3, 7).unwrap().with_moments(15);
        let b = boldzeta_moments(&ctx);
        let g = boldzeta_generator(2, 3, 7);
        for (j, x) in b.moments().iter().enumerate() {
            assert_eq!(&g(j), x);
        }
    }

    #[test]
    fn degenerate_moments_vanish() {
        let ctx = LpContext::degenerate(3, 1, 3).unwrap();
        assert!(hurwitz_moments(&ctx).moments().iter().all(Zero::is_zero));
    }

    #[test]
    fn euler_term() {
        // p = 5, m = 3, a = 1: <1 * 5^-1> = 2
        let k = 3;
        let expected = int(9) / int(3) * (bernoulli_poly(3, &rat(1, 3)) - int(25) * bernoulli_poly(3, &rat(2, 3)));
        assert_eq!(interpolation_value(5, 1, 3, k), expected);
    }
}
