//! The Hurwitz measure attached to `(a, m, c)`, the two-branch unit
//! integrals, and the p-adic Hurwitz L-functions `L_p^[β](s; a, m)`.

mod adelic;
mod context;
mod lemma56;
mod lvalue;
mod moments;
mod theorem;

use thiserror::Error;

use crate::measure::MeasureError;
use crate::padic::PadicError;

pub use adelic::{adelic_projection_check, adelic_table, AdelicProjection};
pub use context::{
    default_c, Branch, ContextSummary, LpContext, DEFAULT_MAHLER_CAP, DEFAULT_MOMENTS,
    DEFAULT_PREC,
};
pub use lemma56::{lemma56_check, lemma56_decompose, lemma56_restricted_check, Lemma56Restricted};
pub use lvalue::{
    branch_space_contains, lp_beta, lp_beta_route, shiratani_zeta, LValue, Route,
};
pub use moments::{
    boldzeta_moments, hurwitz_moment, hurwitz_moments, hurwitz_moments_raw,
    interpolation_value, pzp_integral_closed_form, unit_integral_closed_form,
};
pub use theorem::{theorem1_unit_integral, Theorem1Check};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LfunError {
    #[error("invalid context: {0}")]
    InvalidContext(String),
    #[error("L_p^[0] has a pole at s = 1")]
    Pole,
    #[error("Euler prefactor vanishes mod p^{prec}")]
    VanishingPrefactor { prec: i64 },
    #[error("s = {s} is not in the branch space of beta = {beta}")]
    WrongBranch { beta: i64, s: String },
    #[error("{0}")]
    Unsupported(String),
    #[error(transparent)]
    Measure(#[from] MeasureError),
    #[error(transparent)]
    Padic(#[from] PadicError),
}
