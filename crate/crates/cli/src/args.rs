use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "ahz", version, about = "p-adic Hurwitz measures, L-values and identity checks")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Working p-adic precision N.
    #[arg(long = "prec", visible_alias = "N", env = "AHZ_PREC", default_value_t = 10, global = true)]
    pub prec: u32,
    /// Number of moments K.
    #[arg(long = "moments", visible_alias = "K", default_value_t = 24, global = true)]
    pub moments: usize,
    /// Largest Mahler truncation J.
    #[arg(long = "mahler-cap", visible_alias = "J", default_value_t = 128, global = true)]
    pub mahler_cap: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Args)]
pub struct Ctx {
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub a: i64,
    #[arg(long)]
    pub m: i64,
    /// Cyclotomic parameter; defaults to the least admissible `1 + t m`.
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    Direct,
    Pullback,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Moments of the Hurwitz measure (c = 1 gives the zero measure).
    Moments {
        #[command(flatten)]
        ctx: Ctx,
        /// Moments of the pullback to `a c + m Z_p` instead.
        #[arg(long)]
        bold: bool,
    },
    /// Exact Mahler coefficients c_0..c_J and an integrality report.
    Mahler {
        #[command(flatten)]
        ctx: Ctx,
    },
    /// Masses of the cosets `u + p^t Z_p`.
    Mass {
        #[command(flatten)]
        ctx: Ctx,
        #[arg(long, default_value_t = 1)]
        t: u32,
    },
    /// The branch-β L-value at `s`.
    Lp {
        #[command(flatten)]
        ctx: Ctx,
        #[arg(long, allow_hyphen_values = true)]
        beta: i64,
        /// Rational `n/d` or `digits:<base-p digits>`.
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long, value_enum)]
        route: Option<RouteArg>,
    },
    /// The Shiratani zeta value at `s`.
    ZetaSh {
        #[command(flatten)]
        ctx: Ctx,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
    },
    /// Cohen's p-adic Hurwitz zeta function and its companions.
    Cohen {
        #[command(subcommand)]
        cmd: CohenCmd,
    },
    /// Finite-level table of the adelic measure.
    Adelic {
        #[arg(long)]
        a: i64,
        #[arg(long)]
        m: i64,
        #[arg(long, allow_hyphen_values = true)]
        c: i64,
        /// Level: cosets of `n Ẑ`.
        #[arg(long)]
        n: u64,
        /// Values are taken modulo this.
        #[arg(long)]
        modulus: u64,
    },
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Subcommand)]
pub enum CohenCmd {
    /// The shifted terms for p = 11, a = 3, m = 106.
    Example11,
    /// `ζ_p(s, a/m)` with `q | m`.
    C {
        #[command(flatten)]
        ctx: Ctx,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<i64>,
    },
    /// `ζ_p(s, x)` with `x ∈ qZ_p`.
    Zp {
        #[arg(long)]
        p: u64,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long)]
        level: Option<u32>,
    },
    /// The character-twisted Bernoulli value at `x`.
    Chi {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        k: usize,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Which domain `x` belongs to.
    Classify {
        #[arg(long)]
        p: u64,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Both sides of the relation to the Shiratani zeta function.
    Bridge {
        #[command(flatten)]
        ctx: Ctx,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Theorem1,
    Interpolation,
    SigmaIndependence,
    Lemma53,
    Lemma43,
    Lemma56,
    Cocycle,
    Pushforward,
    CohenBridge,
    Claim,
    Magnus,
    Integrality,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    /// Largest k (or weight) checked.
    #[arg(long)]
    pub kmax: Option<usize>,
    /// Number of random instances.
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Comma-separated primes overriding the suite's grid.
    #[arg(long, value_delimiter = ',')]
    pub primes: Vec<u64>,
    /// Also report the literal whole-space form of lemma56.
    #[arg(long)]
    pub literal: bool,
}
