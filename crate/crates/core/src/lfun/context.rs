use std::sync::{Arc, OnceLock};

use num_integer::Integer;
use serde::Serialize;

use super::moments::{boldzeta_generator, hurwitz_moment};
use super::LfunError;
use crate::measure::{AdaptiveOptions, MahlerTable, SharedMahlerTable};
use crate::padic::{structural, StructuralConstants};

pub const DEFAULT_PREC: u32 = 10;
pub const DEFAULT_MOMENTS: usize = 24;
pub const DEFAULT_MAHLER_CAP: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// `p | m`: the measure lives on `ac + mZ_p`, inside the units.
    PDividesM,
    /// `p ∤ m`: the Euler-type correction `⟨a p^-1⟩` appears.
    PCoprimeM,
}

#[derive(Default)]
struct Tables {
    hat: OnceLock<SharedMahlerTable>,
    bold: OnceLock<SharedMahlerTable>,
}

/// Everything an L-value evaluation depends on. The integer `c` stands for
/// the cyclotomic character value of the Galois element.
#[derive(Clone)]
pub struct LpContext {
    sc: StructuralConstants,
    a: i64,
    m: i64,
    c: i64,
    prec: u32,
    moments: usize,
    j_cap: usize,
    tables: Arc<Tables>,
}

impl std::fmt::Debug for LpContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LpContext")
            .field("p", &self.sc.p)
            .field("a", &self.a)
            .field("m", &self.m)
            .field("c", &self.c)
            .field("N", &self.prec)
            .finish()
    }
}

impl PartialEq for LpContext {
    fn eq(&self, o: &Self) -> bool {
        (self.sc, self.a, self.m, self.c, self.prec, self.moments, self.j_cap)
            == (o.sc, o.a, o.m, o.c, o.prec, o.moments, o.j_cap)
    }
}

fn invalid(msg: impl Into<String>) -> LfunError {
    LfunError::InvalidContext(msg.into())
}

impl LpContext {
    pub fn new(p: u64, a: i64, m: i64, c: i64) -> Result<Self, LfunError> {
        let ctx = Self::build(p, a, m, c)?;
        if c.abs() == 1 {
            return Err(invalid(format!("|c| = 1 makes [c] = 1 (c = {c})")));
        }
        Ok(ctx)
    }

    /// The `c = 1` context, in which every moment vanishes. Only useful as a
    /// test fixture; L-values are undefined there.
    pub fn degenerate(p: u64, a: i64, m: i64) -> Result<Self, LfunError> {
        Self::build(p, a, m, 1)
    }

    fn build(p: u64, a: i64, m: i64, c: i64) -> Result<Self, LfunError> {
        let sc = structural(p)?;
        if m <= 1 {
            return Err(invalid(format!("m > 1 required (m = {m})")));
        }
        if a.rem_euclid(m) == 0 {
            return Err(invalid(format!("m must not divide a (a = {a}, m = {m})")));
        }
        if (c - 1).rem_euclid(m) != 0 {
            return Err(invalid(format!("c ≡ 1 mod m required (c = {c}, m = {m})")));
        }
        if c.rem_euclid(p as i64) == 0 {
            return Err(invalid(format!("gcd(c, p) = 1 required (c = {c}, p = {p})")));
        }
        if m % p as i64 == 0 {
            if a.rem_euclid(p as i64) == 0 {
                return Err(invalid(format!("p | m branch needs p ∤ a (a = {a}, p = {p})")));
            }
        } else if !(0 < a && a < m) {
            return Err(invalid(format!("p ∤ m branch needs 0 < a < m (a = {a}, m = {m})")));
        }
        Ok(Self {
            sc,
            a,
            m,
            c,
            prec: DEFAULT_PREC,
            moments: DEFAULT_MOMENTS,
            j_cap: DEFAULT_MAHLER_CAP,
            tables: Arc::new(Tables::default()),
        })
    }

    pub fn with_prec(mut self, n: u32) -> Self {
        self.prec = n;
        self
    }

    pub fn with_moments(mut self, k: usize) -> Self {
        self.moments = k.max(2);
        self
    }

    pub fn with_mahler_cap(mut self, j: usize) -> Self {
        self.j_cap = j;
        self
    }

    pub fn p(&self) -> u64 {
        self.sc.p
    }
    pub fn q(&self) -> u64 {
        self.sc.q
    }
    pub fn e(&self) -> u64 {
        self.sc.e
    }
    pub fn structural(&self) -> StructuralConstants {
        self.sc
    }
    pub fn a(&self) -> i64 {
        self.a
    }
    pub fn m(&self) -> i64 {
        self.m
    }
    pub fn c(&self) -> i64 {
        self.c
    }
    pub fn prec(&self) -> u32 {
        self.prec
    }
    pub fn moment_count(&self) -> usize {
        self.moments
    }
    pub fn mahler_cap(&self) -> usize {
        self.j_cap
    }

    pub fn is_degenerate(&self) -> bool {
        self.c == 1
    }

    pub fn branch(&self) -> Branch {
        if self.m % self.sc.p as i64 == 0 {
            Branch::PDividesM
        } else {
            Branch::PCoprimeM
        }
    }

    /// Mahler table of the Hurwitz measure on Z_p, extended on demand.
    pub fn hat_table(&self) -> &SharedMahlerTable {
        self.tables.hat.get_or_init(|| {
            let (a, m, c) = (self.a, self.m, self.c);
            SharedMahlerTable::new(MahlerTable::from_generator(move |n| hurwitz_moment(a, m, c, n + 1)))
        })
    }

    /// Mahler table of the measure pulled back along `v -> m v + ac`.
    pub fn bold_table(&self) -> &SharedMahlerTable {
        self.tables.bold.get_or_init(|| {
            SharedMahlerTable::new(MahlerTable::from_generator(boldzeta_generator(self.a, self.m, self.c)))
        })
    }

    /// Doubling schedule for integrands that are polynomials of the given
    /// degree on cosets of `p^t Z_p`, at the context precision.
    pub fn adaptive_options(&self, t: u32, degree: usize) -> AdaptiveOptions {
        AdaptiveOptions::for_level(self.sc.p, t, degree, self.prec as i64, self.j_cap)
    }

    pub fn summary(&self) -> ContextSummary {
        ContextSummary {
            p: self.sc.p,
            q: self.sc.q,
            e: self.sc.e,
            a: self.a,
            m: self.m,
            c: self.c,
            n: self.prec,
            k: self.moments,
            j: self.j_cap,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContextSummary {
    pub p: u64,
    pub q: u64,
    pub e: u64,
    pub a: i64,
    pub m: i64,
    pub c: i64,
    #[serde(rename = "N")]
    pub n: u32,
    #[serde(rename = "K")]
    pub k: usize,
    #[serde(rename = "J")]
    pub j: usize,
}

impl Serialize for LpContext {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.summary().serialize(s)
    }
}

/// The smallest admissible `c > 1` of the form `1 + t m`, skipping
/// multiples of `p` and, when `odd` is set, even values.
pub fn default_c(p: u64, m: i64, odd: bool) -> i64 {
    let mut t = 1;
    loop {
        let c = 1 + t * m;
        if c % p as i64 != 0 && (!odd || c.is_odd()) {
            return c;
        }
        t += 1;
    }
}
