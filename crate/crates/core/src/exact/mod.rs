//! Exact rational arithmetic, Bernoulli and Stirling numbers, dense
//! polynomials and truncated power series.

pub mod bernoulli;
pub mod poly;
pub mod rational;
pub mod scalar;
pub mod series;
pub mod stirling;

use thiserror::Error;

pub use bernoulli::{
    bernoulli_number, bernoulli_numbers, bernoulli_poly, bernoulli_poly_coeffs,
    verify_bernoulli_addition, verify_distribution,
};
pub use poly::Poly;
pub use rational::Rational;
pub use scalar::{ApproxEq, FieldScalar, Scalar};
pub use series::TruncSeries;
pub use stirling::{stirling_first_signed, stirling_second};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("cannot parse rational {0:?}")]
    Parse(String),
    #[error("zero denominator")]
    ZeroDenominator,
}
