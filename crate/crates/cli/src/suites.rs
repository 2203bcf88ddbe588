use adelic_hurwitz::cohen::{
    chi_bernoulli_exact, claim_r0, cohen2_closed_form, cohen_shiratani_bridge, cohen_zeta_zp,
};
use adelic_hurwitz::exact::rational::{int, rat, to_string, valuation};
use adelic_hurwitz::exact::TruncSeries;
use adelic_hurwitz::lfun::{
    boldzeta_moments, default_c, hurwitz_moments, hurwitz_moments_raw, interpolation_value,
    lemma56_check, lemma56_restricted_check, lp_beta, theorem1_unit_integral, LpContext,
};
use adelic_hurwitz::magnus::{
    dictionary_check, flat_to_log, genfunc_identity_check, genfunc_identity_holds, lemma53_check,
    log_to_flat, prop42_check, prop42_roundtrip,
};
use adelic_hurwitz::measure::{
    affine_pullback, affine_pushforward, cocycle_moment_check, integrality_report, involution,
    mahler_coefficients, MomentMeasure,
};
use adelic_hurwitz::padic::PadicNumber;
use adelic_hurwitz::{QYLinear, Rational};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::args::{Global, Suite, VerifyArgs};
use crate::error::CliError;
use crate::report::Report;

/// `1 + t m` prime to `p`; for `p = 2` prefers `c ≡ 5 mod 8`, which keeps
/// `v_2(1 - c^k)` at its minimum.
pub fn pick_c(p: u64, m: i64) -> i64 {
    if p == 2 {
        if let Some(c) = (1..=64).map(|t| 1 + t * m).find(|c| c.rem_euclid(8) == 5) {
            return c;
        }
    }
    default_c(p, m, false)
}

/// `(p, a, m)` on both branches for each prime.
fn grid(primes: &[u64]) -> Vec<(u64, i64, i64)> {
    let mut out = Vec::new();
    for &p in primes {
        let pi = p as i64;
        match p {
            2 => out.extend([(2, 1, 4), (2, 3, 4), (2, 1, 12)]),
            3 => out.extend([(3, 1, 3), (3, 2, 3), (3, 1, 6)]),
            _ => out.extend([(p, 2, pi), (p, 1, 2 * pi)]),
        }
        for (a, m) in [(1i64, 3i64), (2, 5), (1, 4)] {
            if m % pi != 0 {
                out.push((p, a, m));
            }
        }
    }
    out
}

fn ctx_for(p: u64, a: i64, m: i64, g: &Global) -> Result<LpContext, CliError> {
    Ok(LpContext::new(p, a, m, pick_c(p, m))?.with_prec(g.prec).with_mahler_cap(g.mahler_cap.max(512)))
}

/// Runs one check; a domain error at a single point is reported as a failed
/// line, while a non-stabilized integral still aborts the run.
fn attempt(
    r: &mut Report,
    name: String,
    f: impl FnOnce() -> Result<(bool, String), CliError>,
) -> Result<(), CliError> {
    match f() {
        Ok((pass, detail)) => r.check(name, pass, detail),
        Err(CliError::Usage(e)) => r.check(name, false, e),
        Err(e) => return Err(e),
    }
    Ok(())
}

fn label(ctx: &LpContext) -> String {
    format!("p={} a={} m={} c={}", ctx.p(), ctx.a(), ctx.m(), ctx.c())
}

fn required(g: &Global) -> i64 {
    (g.prec as i64 / 2).max(1)
}

fn primes_or(v: &VerifyArgs, default: &[u64]) -> Vec<u64> {
    if v.primes.is_empty() {
        default.to_vec()
    } else {
        v.primes.clone()
    }
}

pub fn run(v: &VerifyArgs, g: &Global) -> Result<Report, CliError> {
    let mut r = Report::new(&format!("verify {}", suite_name(v.suite)));
    r.param("N", g.prec).param("seed", v.seed);
    let mut rng = ChaCha8Rng::seed_from_u64(v.seed);
    match v.suite {
        Suite::Theorem1 => theorem1(&mut r, v, g)?,
        Suite::Interpolation => interpolation(&mut r, v, g)?,
        Suite::SigmaIndependence => sigma(&mut r, v, g)?,
        Suite::Lemma53 => {
            let kmax = v.kmax.unwrap_or(20);
            r.param("kmax", kmax);
            for k in 1..=kmax {
                r.check(format!("k={k}"), lemma53_check(k), "exact in Q[alpha, chi]");
            }
        }
        Suite::Lemma43 => lemma43(&mut r, v, &mut rng),
        Suite::Lemma56 => lemma56(&mut r, v, g)?,
        Suite::Cocycle => {
            let n = v.samples.unwrap_or(100);
            let kmax = v.kmax.unwrap_or(8);
            r.param("samples", n).param("kmax", kmax);
            for _ in 0..n {
                let m = rng.gen_range(2..40i64);
                let a = loop {
                    let a = rng.gen_range(-60..60i64);
                    if a % m != 0 {
                        break a;
                    }
                };
                let c1 = 1 + m * rng.gen_range(-5..6i64);
                let c2 = 1 + m * rng.gen_range(-5..6i64);
                r.check(format!("a={a} m={m} c1={c1} c2={c2}"), cocycle_moment_check(a, m, c1, c2, kmax), "M_k(c1 c2) = M_k(c1) + c1^k M_k(c2)");
            }
        }
        Suite::Pushforward => pushforward(&mut r, v, g, &mut rng)?,
        Suite::CohenBridge => cohen_bridge(&mut r, v, g)?,
        Suite::Claim => {
            let n = v.samples.unwrap_or(500);
            let primes = primes_or(v, &[2, 3, 5, 7, 11, 13]);
            r.param("samples", n);
            for _ in 0..n {
                let p = primes[rng.gen_range(0..primes.len())];
                let m = loop {
                    let m = rng.gen_range(2..1000i64);
                    if m % p as i64 != 0 {
                        break m;
                    }
                };
                let a = rng.gen_range(1..m);
                let c = claim_r0(a, m, p)?;
                r.check(format!("p={p} a={a} m={m}"), c.verified, format!("r0={} bracket={}", c.r0, c.bracket));
            }
        }
        Suite::Magnus => magnus(&mut r, v, &mut rng)?,
        Suite::Integrality => integrality(&mut r, v)?,
    }
    Ok(r)
}

pub fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::Theorem1 => "theorem1",
        Suite::Interpolation => "interpolation",
        Suite::SigmaIndependence => "sigma-independence",
        Suite::Lemma53 => "lemma53",
        Suite::Lemma43 => "lemma43",
        Suite::Lemma56 => "lemma56",
        Suite::Cocycle => "cocycle",
        Suite::Pushforward => "pushforward",
        Suite::CohenBridge => "cohen-bridge",
        Suite::Claim => "claim",
        Suite::Magnus => "magnus",
        Suite::Integrality => "integrality",
    }
}

fn theorem1(r: &mut Report, v: &VerifyArgs, g: &Global) -> Result<(), CliError> {
    let kmax = v.kmax.unwrap_or(8);
    r.param("kmax", kmax);
    let need = required(g);
    for (p, a, m) in grid(&primes_or(v, &[2, 3, 5])) {
        let ctx = ctx_for(p, a, m, g)?;
        for k in 1..=kmax {
            let t = theorem1_unit_integral(&ctx, k)?;
            r.check(
                format!("{} k={k}", label(&ctx)),
                t.holds && t.effective_prec >= need,
                format!("mod {p}^{}", t.effective_prec),
            );
        }
    }
    Ok(())
}

fn interpolation(r: &mut Report, v: &VerifyArgs, g: &Global) -> Result<(), CliError> {
    let kmax = v.kmax.unwrap_or(10);
    r.param("kmax", kmax);
    let need = required(g);
    for (p, a, m) in grid(&primes_or(v, &[2, 3, 5])) {
        let ctx = ctx_for(p, a, m, g)?;
        let e = ctx.e() as usize;
        for k in 1..=kmax {
            let beta = (k % e) as i64;
            let s = PadicNumber::from_int(1 - k as i64, p, 2 * g.prec + 4);
            let l = lp_beta(&ctx, beta, &s)?;
            let want = PadicNumber::from_rational_abs(&interpolation_value(p, a, m, k), p, l.effective_prec);
            r.check(
                format!("{} beta={beta} k={k}", label(&ctx)),
                l.value.eq_mod(&want, l.effective_prec) && l.effective_prec >= need,
                format!("mod {p}^{}", l.effective_prec),
            );
        }
    }
    Ok(())
}

/// Five points of `1 - β + (q/p) Z_p`, none equal to 1: the offsets are
/// negative or non-integral.
pub fn sample_points(p: u64, q: u64, beta: i64, prec: u32) -> Vec<PadicNumber> {
    [rat(-1, 1), rat(-3, 1), rat(1, 13), rat(-7, 17), rat(5, 19)]
        .iter()
        .filter(|r| valuation(r, p).is_some_and(|v| v >= 0))
        .map(|r| {
            let s = int(1 - beta) + rat(q as i64, p as i64) * r;
            PadicNumber::from_rational(&s, p, prec)
        })
        .collect()
}

fn sigma(r: &mut Report, v: &VerifyArgs, g: &Global) -> Result<(), CliError> {
    let need = required(g);
    for (p, a, m) in grid(&primes_or(v, &[2, 3, 5])) {
        let c1 = pick_c(p, m);
        let c2 = (2..)
            .map(|t| c1 + (t - 1) * m * if p == 2 { 8 } else { 1 })
            .find(|c| c % p as i64 != 0)
            .unwrap();
        let x = LpContext::new(p, a, m, c1)?.with_prec(g.prec).with_mahler_cap(g.mahler_cap.max(512));
        let y = LpContext::new(p, a, m, c2)?.with_prec(g.prec).with_mahler_cap(g.mahler_cap.max(512));
        for beta in 0..x.e() as i64 {
            for s in sample_points(p, x.q(), beta, 2 * g.prec + 4) {
                let name = format!("p={p} a={a} m={m} c={c1},{c2} beta={beta} s={}", to_string(&s.to_rational()));
                attempt(r, name, || {
                    let (lx, ly) = (lp_beta(&x, beta, &s)?, lp_beta(&y, beta, &s)?);
                    let eff = lx.effective_prec.min(ly.effective_prec);
                    Ok((lx.value.eq_mod(&ly.value, eff) && eff >= need, format!("mod {p}^{eff}")))
                })?;
            }
        }
    }
    Ok(())
}

fn random_rational(rng: &mut ChaCha8Rng, span: i64) -> Rational {
    rat(rng.gen_range(-span..=span), rng.gen_range(1..=span))
}

fn lemma43(r: &mut Report, v: &VerifyArgs, rng: &mut ChaCha8Rng) {
    let order = v.kmax.unwrap_or(20);
    let n = v.samples.unwrap_or(20);
    r.param("order", order).param("samples", n);
    for u0 in [int(0), int(1), rat(-3, 7), rat(5, 2)] {
        let tag = to_string(&u0);
        r.check(format!("genfunc u0={tag}"), genfunc_identity_check(&u0, order), format!("to T^{order}"));
        r.check(format!("prop42 rho={tag}"), prop42_check(&u0, order), format!("to order {order}"));
    }
    for i in 0..n {
        let u0 = random_rational(rng, 9);
        let u: Vec<Rational> = (0..order).map(|_| random_rational(rng, 30)).collect();
        let round = flat_to_log(&u0, &log_to_flat(&u0, &u)) == u && log_to_flat(&u0, &flat_to_log(&u0, &u)) == u;
        let ok = round && genfunc_identity_holds(&u0, &u) && prop42_roundtrip(&u0, &u) && dictionary_check(&u0, &u);
        r.check(format!("random #{i}"), ok, format!("u0={}", to_string(&u0)));
    }
}

fn lemma56(r: &mut Report, v: &VerifyArgs, g: &Global) -> Result<(), CliError> {
    let k = v.kmax.unwrap_or(6);
    r.param("moments", k);
    let triples: [(u64, i64, i64); 5] = [(5, 3, 1), (2, 3, 1), (3, 4, 1), (7, 5, 2), (11, 106, 3)];
    for (p, m, a) in triples {
        let c = pick_c(p, m);
        let t = lemma56_restricted_check(a, m, p, c, k, g.prec)?;
        r.check(
            format!("restricted p={p} m={m} a={a} c={c}"),
            t.holds && t.effective_prec >= required(g),
            format!("a1={} delta={} coset={} mod {p}^{}", t.a1, t.delta, t.coset, t.effective_prec),
        );
        if v.literal {
            r.check(format!("literal p={p} m={m} a={a} c={c}"), lemma56_check(a, m, p, c, k)?, "all of Z_p");
        }
    }
    Ok(())
}

fn random_measure(rng: &mut ChaCha8Rng, k: usize) -> MomentMeasure {
    MomentMeasure::new((0..k).map(|_| random_rational(rng, 50)).collect()).expect("k >= 2")
}

fn pushforward(r: &mut Report, v: &VerifyArgs, g: &Global, rng: &mut ChaCha8Rng) -> Result<(), CliError> {
    let n = v.samples.unwrap_or(100);
    let k = v.kmax.unwrap_or(10);
    r.param("samples", n).param("moments", k);
    let nonzero = |rng: &mut ChaCha8Rng| loop {
        let x = rng.gen_range(-12..=12i64);
        if x != 0 {
            break int(x);
        }
    };
    for i in 0..n {
        let mu = random_measure(rng, k);
        let (m1, m2) = (nonzero(rng), nonzero(rng));
        let (s1, s2) = (random_rational(rng, 20), random_rational(rng, 20));
        let lhs = affine_pushforward(&affine_pushforward(&mu, &m2, &s2)?, &m1, &s1)?;
        let rhs = affine_pushforward(&mu, &(&m1 * &m2), &(&m1 * &s2 + &s1))?;
        r.check(format!("functoriality #{i}"), lhs == rhs, "[m1,s1][m2,s2] = [m1 m2, m1 s2 + s1]");
        let a = involution(&affine_pushforward(&mu, &m1, &s1)?);
        let b = affine_pushforward(&involution(&mu), &m1, &-s1.clone())?;
        r.check(format!("involution #{i}"), a == b, "i [m,s] = [m,-s] i");
        let back = affine_pullback(&affine_pushforward(&mu, &m1, &s1)?, &m1, &s1)?;
        r.check(format!("pullback #{i}"), back == mu, "pullback undoes pushforward");
    }
    for (p, a, m) in grid(&[3, 5]) {
        let ctx = ctx_for(p, a, m, g)?.with_moments(k);
        let pushed = affine_pushforward(&boldzeta_moments(&ctx), &int(m), &int(a * ctx.c()))?;
        r.check(
            format!("translate {}", label(&ctx)),
            pushed.moments() == hurwitz_moments(&ctx).moments(),
            "[m, ac] carries the pullback back",
        );
    }
    Ok(())
}

fn cohen_bridge(r: &mut Report, v: &VerifyArgs, g: &Global) -> Result<(), CliError> {
    let kmax = v.kmax.unwrap_or(4);
    r.param("kmax", kmax);
    let need = required(g);
    for (p, a, m) in [(3u64, 1i64, 4i64), (3, 2, 5), (5, 1, 3), (5, 2, 7), (7, 3, 4)] {
        let ctx = LpContext::new(p, a, m, default_c(p, m, false))?.with_prec(g.prec);
        for k in 1..=kmax {
            let s = PadicNumber::from_int(1 - k as i64, p, 2 * g.prec + 4);
            let b = cohen_shiratani_bridge(&ctx, &s)?;
            r.check(
                format!("bridge {} k={k}", label(&ctx)),
                b.holds && b.effective_prec >= need,
                format!("r={} mod {p}^{}", b.r, b.effective_prec),
            );
        }
    }
    for p in [2u64, 3, 5] {
        let q = if p == 2 { 4 } else { p as i64 };
        for x in [int(0), rat(q, 7), rat(-2 * q, 11), rat(q * q, 13)] {
            for k in 1..=12usize {
                let Some(chi) = chi_bernoulli_exact(k, &x, p)? else { continue };
                r.check(
                    format!("cohen2 p={p} x={} k={k}", to_string(&x)),
                    chi == cohen2_closed_form(k, &x, p),
                    "exact",
                );
                if k <= kmax {
                    let s = PadicNumber::from_int(1 - k as i64, p, 2 * g.prec + 4);
                    let z = cohen_zeta_zp(&s, &x, p, g.prec, None)?;
                    let want = PadicNumber::from_rational_abs(&(-chi / int(k as i64)), p, z.effective_prec);
                    r.check(
                        format!("cohen p={p} x={} k={k}", to_string(&x)),
                        z.value.eq_mod(&want, z.effective_prec) && z.effective_prec >= need,
                        format!("mod {p}^{}", z.effective_prec),
                    );
                }
            }
        }
    }
    Ok(())
}

fn random_element(rng: &mut ChaCha8Rng, order: usize) -> QYLinear {
    QYLinear::new(
        random_rational(rng, 9),
        TruncSeries::new((0..order).map(|_| random_rational(rng, 20)).collect(), order),
    )
}

fn magnus(r: &mut Report, v: &VerifyArgs, rng: &mut ChaCha8Rng) -> Result<(), CliError> {
    let order = v.kmax.unwrap_or(12);
    let n = v.samples.unwrap_or(50);
    r.param("order", order).param("samples", n);
    for i in 0..n {
        let (a, b, c) = (random_element(rng, order), random_element(rng, order), random_element(rng, order));
        let assoc = a.mul(&b)?.mul(&c)? == a.mul(&b.mul(&c)?)?;
        let inv = a.mul(&a.inverse())?.is_identity() && a.inverse().mul(&a)?.is_identity();
        let unit = a.mul(&QYLinear::identity(order))? == a;
        r.check(format!("group #{i}"), assoc && inv && unit, "associativity, inverses, identity");
    }
    Ok(())
}

fn integrality(r: &mut Report, v: &VerifyArgs) -> Result<(), CliError> {
    let jmax = v.kmax.unwrap_or(40);
    r.param("jmax", jmax);
    for p in primes_or(v, &[2, 3, 5, 7, 11]) {
        let mut pairs = vec![(3i64, 1i64), (3, 2), (4, 1), (4, 3), (5, 2), (6, 1)];
        if p == 11 {
            pairs.push((106, 3));
        }
        for (m, a) in pairs {
            for c in [1 + m, 1 + 2 * m] {
                if c % p as i64 == 0 {
                    continue;
                }
                let mu = MomentMeasure::new(hurwitz_moments_raw(a, m, c, jmax + 1))?;
                let rep = integrality_report(&mahler_coefficients(&mu, jmax)?, p);
                r.check(
                    format!("p={p} m={m} a={a} c={c}"),
                    rep.integral,
                    format!("min valuation {:?}", rep.min_valuation),
                );
            }
        }
    }
    Ok(())
}
