//! The Y-linear quotient of the Magnus group in `X, Y`, the coordinate
//! changes between its logarithmic and flat normal forms, and the sign
//! conventions for path composition.

mod convention;
mod group;
mod lemma53;
mod transforms;

use thiserror::Error;

pub use convention::{convention_convert, ConventionKind, SIGN_DICTIONARY};
pub use group::YLinear;
pub use lemma53::{lemma53_check, lemma53_sides, BivarPoly};
pub use transforms::{
    dictionary_check, elli_from_li, flat_to_log, genfunc_identity_check, genfunc_identity_holds,
    li_from_elli, log_to_flat, prop42_check, prop42_roundtrip,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MagnusError {
    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("unknown convention {0:?}")]
    UnknownConvention(String),
    #[error("{kind} at k = {k} takes {want} value(s), got {got}")]
    Arity { kind: &'static str, k: usize, want: usize, got: usize },
    #[error("k >= 1 required")]
    ZeroIndex,
}
