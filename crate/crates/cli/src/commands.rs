use adelic_hurwitz::cohen::{
    chi_bernoulli_exact, chi_bernoulli_teich, claim_r0, cohen2_closed_form, cohen_shiratani_bridge,
    cohen_zeta_c, cohen_zeta_zp, example11, CohenDomain,
};
use adelic_hurwitz::exact::rational::{self, int_valuation, to_string, valuation};
use adelic_hurwitz::lfun::{
    adelic_table, boldzeta_moments, default_c, hurwitz_moments, lp_beta_route, shiratani_zeta, LValue,
    LpContext, Route,
};
use adelic_hurwitz::measure::integrality_report;
use adelic_hurwitz::padic::PadicNumber;
use adelic_hurwitz::Rational as Q;
use serde_json::json;

use crate::args::{CohenCmd, Ctx, Global, RouteArg};
use crate::error::CliError;
use crate::report::Report;

pub fn context(ctx: &Ctx, g: &Global) -> Result<LpContext, CliError> {
    let c = ctx.c.unwrap_or_else(|| default_c(ctx.p, ctx.m, false));
    let base = if c == 1 {
        LpContext::degenerate(ctx.p, ctx.a, ctx.m)?
    } else {
        LpContext::new(ctx.p, ctx.a, ctx.m, c)?
    };
    Ok(base.with_prec(g.prec).with_moments(g.moments).with_mahler_cap(g.mahler_cap))
}

/// Rational literals are exact, so they are expanded well past `N`.
pub fn parse_s(s: &str, p: u64, g: &Global) -> Result<PadicNumber, CliError> {
    Ok(PadicNumber::parse_literal(s, p, 2 * g.prec + 4)?)
}

pub fn parse_q(s: &str) -> Result<Q, CliError> {
    rational::parse(s).map_err(|e| CliError::Usage(e.to_string()))
}

fn context_params(r: &mut Report, ctx: &LpContext) {
    r.param("context", ctx.summary());
}

pub fn moments(ctx: &Ctx, bold: bool, g: &Global) -> Result<Report, CliError> {
    let lp = context(ctx, g)?;
    let mu = if bold { boldzeta_moments(&lp) } else { hurwitz_moments(&lp) };
    let mut r = Report::new(if bold { "moments-bold" } else { "moments" });
    context_params(&mut r, &lp);
    r.param("meta", &mu.meta);
    for (n, x) in mu.moments().iter().enumerate() {
        r.row(json!({"n": n, "moment": to_string(x)}));
    }
    Ok(r)
}

pub fn mahler(ctx: &Ctx, g: &Global) -> Result<Report, CliError> {
    let lp = context(ctx, g)?;
    let coeffs = lp.hat_table().coeffs(g.mahler_cap)?;
    let mut r = Report::new("mahler");
    context_params(&mut r, &lp);
    for (j, c) in coeffs.iter().enumerate() {
        r.row(json!({"j": j, "coeff": to_string(c), "valuation": valuation(c, lp.p())}));
    }
    let rep = integrality_report(&coeffs, lp.p());
    let detail = match rep.first_non_integral {
        Some(j) => format!("c_{j} has negative valuation"),
        None => format!("min valuation {:?} over j <= {}", rep.min_valuation, rep.j_max),
    };
    r.check("integrality", rep.integral, detail);
    r.param("integrality", rep);
    Ok(r)
}

pub fn mass(ctx: &Ctx, t: u32, g: &Global) -> Result<Report, CliError> {
    let lp = context(ctx, g)?;
    let (p, n) = (lp.p(), lp.prec() as i64);
    let level = p.checked_pow(t).filter(|&l| l <= 1 << 16).ok_or_else(|| CliError::Usage("level too large".into()))?;
    let mut r = Report::new("mass");
    context_params(&mut r, &lp);
    r.param("t", t);
    let vm = int_valuation(&lp.m().into(), p).min(t);
    let pv = p.pow(vm) as i64;
    let centre = (lp.a() * lp.c()).rem_euclid(pv);
    let mut total = PadicNumber::zero(p, n);
    let mut eff = n;
    let mut support_ok = true;
    for u in 0..level {
        let m = lp.hat_table().lock().coset_mass_adaptive(u, t, p, n, lp.adaptive_options(t, 0))?;
        if !m.stabilization.stabilized {
            return Err(CliError::NotStabilized(format!("coset {u} + {p}^{t}Z_{p}")));
        }
        eff = eff.min(m.effective_prec);
        if (u as i64) % pv != centre && !m.value.eq_mod(&PadicNumber::zero(p, n), m.effective_prec) {
            support_ok = false;
        }
        total = &total + &m.value;
        r.row(json!({"u": u, "mass": m.value.to_string(), "effective_prec": m.effective_prec, "J": m.stabilization.j}));
    }
    let want = PadicNumber::from_rational_abs(&hurwitz_moments(&lp).moments()[0], p, eff);
    r.check("total", total.eq_mod(&want, eff), format!("sum of masses vs total mass mod {p}^{eff}"));
    r.check("support", support_ok, format!("mass vanishes off {centre} + {p}^{vm}Z_{p}"));
    Ok(r)
}

fn lvalue_report(name: &str, v: LValue) -> Result<Report, CliError> {
    if !v.stabilized {
        return Err(CliError::NotStabilized(format!("{name}: Mahler sum at J = {}", v.j)));
    }
    let mut r = Report::new(name);
    r.param("context", &v.ctx);
    r.row(json!({
        "beta": v.beta,
        "s": v.s.to_string(),
        "value": v.value.to_string(),
        "padic": v.value,
        "effective_prec": v.effective_prec,
        "route": v.route,
        "J": v.j,
        "prefactor_valuation": v.prefactor_valuation,
    }));
    Ok(r)
}

pub fn lp(ctx: &Ctx, beta: i64, s: &str, route: Option<RouteArg>, g: &Global) -> Result<Report, CliError> {
    let lp = context(ctx, g)?;
    let s = parse_s(s, lp.p(), g)?;
    let route = match route {
        Some(RouteArg::Direct) => Route::Direct,
        Some(RouteArg::Pullback) => Route::Pullback,
        None => Route::default_for(lp.branch()),
    };
    lvalue_report("lp", lp_beta_route(&lp, beta, &s, route)?)
}

pub fn zeta_sh(ctx: &Ctx, s: &str, g: &Global) -> Result<Report, CliError> {
    let lp = context(ctx, g)?;
    let s = parse_s(s, lp.p(), g)?;
    lvalue_report("zeta-sh", shiratani_zeta(&lp, &s)?)
}

pub fn adelic(a: i64, m: i64, c: i64, n: u64, modulus: u64) -> Result<Report, CliError> {
    let t = adelic_table(a, m, c, n, modulus)?;
    let mut r = Report::new("adelic");
    r.param("a", a).param("m", m).param("c", c).param("N", n).param("M", modulus);
    for (x, v) in t.masses.iter().enumerate() {
        r.row(json!({"x": x, "mass": v}));
    }
    for d in (1..n).filter(|d| n % d == 0) {
        let coarse = adelic_table(a, m, c, d, modulus)?;
        r.check(format!("compatible N={d}"), t.refines(&coarse), format!("level {n} pushed to {d}"));
    }
    Ok(r)
}

pub fn cohen(cmd: &CohenCmd, g: &Global) -> Result<Report, CliError> {
    match cmd {
        CohenCmd::Example11 => {
            let ex = example11();
            let mut r = Report::new("cohen example11");
            r.param("p", ex.p).param("a", ex.a).param("m", ex.m);
            r.param("bracket", ex.bracket).param("r", ex.r).param("product", ex.product);
            for t in &ex.terms {
                r.row(json!({
                    "v": t.v,
                    "fraction": format!("{}/{}", t.numerator, t.denominator),
                    "unit": t.unit,
                }));
            }
            r.check("bracket", ex.bracket * ex.p as i64 == ex.product, format!("<3*11^-1> = {}", ex.bracket));
            r.check("claim", ex.claim_verified, format!("3 + 106*{} = {}*11", ex.r, ex.bracket));
            r.check("units", ex.terms.iter().all(|t| t.unit), format!("{} shifted terms", ex.terms.len()));
            Ok(r)
        }
        CohenCmd::C { ctx, s, beta } => {
            let lp = context(ctx, g)?;
            let s = parse_s(s, lp.p(), g)?;
            let v = cohen_zeta_c(&lp, &s, *beta)?;
            let mut r = Report::new("cohen c");
            context_params(&mut r, &lp);
            r.row(json!({"x": to_string(&v.x), "s": v.s.to_string(), "beta": v.beta, "value": v.value.to_string(),
                "padic": v.value, "effective_prec": v.effective_prec}));
            Ok(r)
        }
        CohenCmd::Zp { p, x, s, level } => {
            let x = parse_q(x)?;
            let s = parse_s(s, *p, g)?;
            let v = cohen_zeta_zp(&s, &x, *p, g.prec, *level)?;
            let mut r = Report::new("cohen zp");
            r.param("p", p).param("N", g.prec);
            r.row(json!({"x": to_string(&v.x), "s": v.s.to_string(), "value": v.value.to_string(), "padic": v.value,
                "effective_prec": v.effective_prec, "summands": v.summands}));
            Ok(r)
        }
        CohenCmd::Chi { p, k, x } => {
            let x = parse_q(x)?;
            let teich = chi_bernoulli_teich(*k, &x, *p, g.prec)?;
            let exact = chi_bernoulli_exact(*k, &x, *p)?;
            let closed = cohen2_closed_form(*k, &x, *p);
            let mut r = Report::new("cohen chi");
            r.param("p", p).param("k", k).param("x", to_string(&x));
            r.row(json!({"teichmuller": teich.to_string(), "exact": exact.as_ref().map(to_string),
                "closed_form": to_string(&closed)}));
            if let Some(e) = exact {
                r.check("closed form", e == closed, "exact sum vs B_k(x) - p^(k-1) B_k(x/p)");
                let want = PadicNumber::from_rational_abs(&e, *p, g.prec as i64);
                r.check("teichmuller", teich.eq_mod(&want, g.prec as i64), format!("mod {p}^{}", g.prec));
            }
            Ok(r)
        }
        CohenCmd::Classify { p, x } => {
            let x = parse_q(x)?;
            let mut r = Report::new("cohen classify");
            r.param("p", p).param("x", to_string(&x));
            match CohenDomain::classify(&x, *p) {
                Some(d) => r.row(json!({"classification": d.classification})),
                None => r.row(json!({"classification": null})),
            }
            Ok(r)
        }
        CohenCmd::Bridge { ctx, s } => {
            let lp = context(ctx, g)?;
            let s = parse_s(s, lp.p(), g)?;
            let b = cohen_shiratani_bridge(&lp, &s)?;
            let claim = claim_r0(lp.a(), lp.m(), lp.p())?;
            let mut r = Report::new("cohen bridge");
            context_params(&mut r, &lp);
            r.param("r", b.r).param("bracket", claim.bracket);
            r.row(json!({"lhs": b.lhs.to_string(), "rhs": b.rhs.to_string(), "effective_prec": b.effective_prec}));
            r.check("bridge", b.holds, format!("mod {}^{}", lp.p(), b.effective_prec));
            Ok(r)
        }
    }
}

