use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use super::{MahlerTable, MeasureError, MomentMeasure, SharedMahlerTable};
use crate::padic::{pow_p, PadicError, PadicNumber};

/// Values `f(0), ..., f(J)` of a continuous function on Z_p.
#[derive(Debug, Clone, PartialEq)]
pub struct MahlerStream {
    values: Vec<PadicNumber>,
    level_hint: Option<u32>,
}

impl MahlerStream {
    pub fn new(values: Vec<PadicNumber>) -> Self {
        Self { values, level_hint: None }
    }

    pub fn from_fn<E: Send>(
        j: usize,
        f: impl Fn(u64) -> Result<PadicNumber, E> + Sync + Send,
    ) -> Result<Self, E> {
        let values = (0..=j as u64).into_par_iter().map(f).collect::<Result<_, _>>()?;
        Ok(Self::new(values))
    }

    /// Records that the function is locally constant modulo `p^t` up to a
    /// polynomial factor. Informational only.
    pub fn with_level_hint(mut self, t: u32) -> Self {
        self.level_hint = Some(t);
        self
    }

    pub fn level_hint(&self) -> Option<u32> {
        self.level_hint
    }

    pub fn j(&self) -> usize {
        self.values.len().saturating_sub(1)
    }

    pub fn values(&self) -> &[PadicNumber] {
        &self.values
    }
}

/// Common precision of the first `len` values and their residues.
fn residues(values: &[PadicNumber], n: i64) -> Result<(i64, Vec<BigInt>), MeasureError> {
    let mut prec = n;
    for v in values {
        if !v.is_integral() {
            return Err(PadicError::NotIntegral(v.to_string()).into());
        }
        prec = prec.min(v.abs_prec());
    }
    let prec = prec.max(0);
    Ok((prec, values.iter().map(|v| v.residue(prec as u32)).collect()))
}

/// Iterated forward differences at 0: `a_j = sum_i (-1)^(j-i) binom(j,i) f(i)`.
pub(crate) fn mahler_differences(vals: &[BigInt], modulus: &BigInt) -> Vec<BigInt> {
    let mut d = vals.to_vec();
    let mut out = Vec::with_capacity(d.len());
    for len in (1..=d.len()).rev() {
        out.push(d[0].clone());
        for i in 0..len - 1 {
            d[i] = (&d[i + 1] - &d[i]).mod_floor(modulus);
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Stabilization {
    /// Truncation used for the reported value.
    pub j: usize,
    /// Truncation it was compared against.
    pub j_previous: usize,
    pub stabilized: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Integral {
    pub value: PadicNumber,
    pub effective_prec: i64,
    pub stabilization: Stabilization,
}

struct Partial {
    value: BigInt,
    value_prev: BigInt,
    l: u32,
    prec: i64,
}

fn partial_sums(
    coeffs: &mut impl FnMut(usize, u64, u32) -> Result<(u32, Vec<BigInt>), MeasureError>,
    values: &[PadicNumber],
    j_prev: usize,
    j: usize,
    p: u64,
    n: i64,
) -> Result<Partial, MeasureError> {
    let (prec, vals) = residues(&values[..=j], n)?;
    let modulus = pow_p(p, prec as u32);
    let diffs = mahler_differences(&vals, &modulus);
    let (l, cs) = coeffs(j, p, prec as u32)?;
    let mut acc = BigInt::zero();
    let mut value_prev = BigInt::zero();
    for (i, (a, c)) in diffs.iter().zip(&cs).enumerate() {
        acc += a * c;
        if i == j_prev {
            value_prev = acc.mod_floor(&modulus);
        }
    }
    Ok(Partial { value: acc.mod_floor(&modulus), value_prev, l, prec })
}

fn adaptive(
    mut coeffs: impl FnMut(usize, u64, u32) -> Result<(u32, Vec<BigInt>), MeasureError>,
    limit: Option<usize>,
    f: impl Fn(u64) -> Result<PadicNumber, MeasureError> + Sync,
    p: u64,
    n: i64,
    opts: AdaptiveOptions,
) -> Result<Integral, MeasureError> {
    let cap = limit.map_or(opts.cap, |lim| opts.cap.min(lim));
    let mut values: Vec<PadicNumber> = Vec::new();
    let mut j = opts.start.max(1).min(cap / 2).max(1);
    let mut last_prec = n;
    loop {
        let j2 = (2 * j).min(cap);
        if j2 == j {
            return Err(MeasureError::NotStabilized { cap, prec: last_prec });
        }
        let fresh = (values.len() as u64..=j2 as u64)
            .into_par_iter()
            .map(&f)
            .collect::<Result<Vec<_>, _>>()?;
        values.extend(fresh);
        let part = partial_sums(&mut coeffs, &values, j, j2, p, n)?;
        last_prec = part.prec - part.l as i64;
        if part.value == part.value_prev {
            return Ok(finish(p, &part, j2, j));
        }
        j = j2;
    }
}

fn finish(p: u64, part: &Partial, j: usize, j_previous: usize) -> Integral {
    let l = part.l as i64;
    let value = PadicNumber::from_residue(p, -l, part.value.clone(), part.prec - l);
    Integral {
        effective_prec: part.prec - l,
        value,
        stabilization: Stabilization { j, j_previous, stabilized: part.value == part.value_prev },
    }
}

impl MahlerTable {
    /// `sum_{j <= J} a_j(f) c_j` mod `p^N`, compared against the sum to `J/2`.
    pub fn integrate(
        &mut self,
        f: &MahlerStream,
        j: usize,
        p: u64,
        n: i64,
    ) -> Result<Integral, MeasureError> {
        if f.j() < j {
            return Err(MeasureError::ShortStream { needed: j, have: f.j() });
        }
        let part = partial_sums(&mut |j, p, n| self.scaled_residues(j, p, n), &f.values, j / 2, j, p, n)?;
        Ok(finish(p, &part, j, j / 2))
    }

    /// Doubles `J` until two successive truncations agree mod `p^N`.
    pub fn integrate_adaptive(
        &mut self,
        f: impl Fn(u64) -> Result<PadicNumber, MeasureError> + Sync,
        p: u64,
        n: i64,
        opts: AdaptiveOptions,
    ) -> Result<Integral, MeasureError> {
        let limit = self.limit();
        adaptive(|j, p, n| self.scaled_residues(j, p, n), limit, f, p, n, opts)
    }
}

impl SharedMahlerTable {
    /// Same as [`MahlerTable::integrate_adaptive`]; the lock is held only
    /// while coefficients are extended, not while `f` is evaluated.
    pub fn integrate_adaptive(
        &self,
        f: impl Fn(u64) -> Result<PadicNumber, MeasureError> + Sync,
        p: u64,
        n: i64,
        opts: AdaptiveOptions,
    ) -> Result<Integral, MeasureError> {
        let limit = self.lock().limit();
        adaptive(|j, p, n| self.lock().scaled_residues(j, p, n), limit, f, p, n, opts)
    }
}

/// Doubling schedule for adaptive integration: `J = start, 2 start, ...`
/// up to `cap`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AdaptiveOptions {
    pub start: usize,
    pub cap: usize,
}

impl Default for AdaptiveOptions {
    fn default() -> Self {
        Self { start: 8, cap: 512 }
    }
}

impl AdaptiveOptions {
    /// Start for an integrand that is a polynomial of degree `degree` on each
    /// coset of `p^t Z_p`. Such a function has `v_p(a_j) >= (j - degree)/p^t`,
    /// so the terms beyond `(n + 1) p^t + degree` are invisible mod `p^n`
    /// and the first comparison is already meaningful.
    pub fn for_level(p: u64, t: u32, degree: usize, n: i64, cap: usize) -> Self {
        let start = (n.max(0) as usize + 1) * p.pow(t) as usize + degree;
        Self { start, cap }
    }
}

pub fn integrate(
    mu: &MomentMeasure,
    f: &MahlerStream,
    j: usize,
    p: u64,
    n: i64,
) -> Result<Integral, MeasureError> {
    MahlerTable::from_measure(mu).integrate(f, j, p, n)
}

pub fn integrate_adaptive(
    mu: &MomentMeasure,
    f: impl Fn(u64) -> Result<PadicNumber, MeasureError> + Sync,
    p: u64,
    n: i64,
    opts: AdaptiveOptions,
) -> Result<Integral, MeasureError> {
    MahlerTable::from_measure(mu).integrate_adaptive(f, p, n, opts)
}

pub(crate) fn indicator(u: u64, t: u32, p: u64, n: i64) -> impl Fn(u64) -> Result<PadicNumber, MeasureError> + Sync {
    let pt = p.pow(t);
    move |i| {
        Ok(if i % pt == u {
            PadicNumber::one(p, n as u32)
        } else {
            PadicNumber::zero(p, n)
        })
    }
}

/// Mass of `u + p^t Z_p`.
pub fn coset_mass(
    mu: &MomentMeasure,
    u: u64,
    t: u32,
    j: usize,
    p: u64,
    n: i64,
) -> Result<Integral, MeasureError> {
    if u >= p.pow(t) {
        return Err(MeasureError::BadCoset { u, t });
    }
    let f = MahlerStream::from_fn(j, indicator(u, t, p, n))?.with_level_hint(t);
    integrate(mu, &f, j, p, n)
}

impl MahlerTable {
    pub fn coset_mass_adaptive(
        &mut self,
        u: u64,
        t: u32,
        p: u64,
        n: i64,
        opts: AdaptiveOptions,
    ) -> Result<Integral, MeasureError> {
        if u >= p.pow(t) {
            return Err(MeasureError::BadCoset { u, t });
        }
        let level = AdaptiveOptions::for_level(p, t, 0, n, opts.cap);
        let opts = AdaptiveOptions { start: opts.start.max(level.start), ..opts };
        self.integrate_adaptive(indicator(u, t, p, n), p, n, opts)
    }
}
