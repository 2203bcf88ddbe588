//! Finite-precision p-adic numbers and the functions on units the
//! L-function code needs.

mod functions;
mod number;

use thiserror::Error;

pub use functions::{
    angle, ap_inverse_bracket, is_prime, padic_exp, padic_log, padic_power, structural,
    teichmuller, StructuralConstants,
};
pub use number::PadicNumber;
pub(crate) use number::pow_p;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PadicError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a p-adic unit")]
    NotUnit(String),
    #[error("{0} is not in 1 + qZ_p")]
    NotInOnePlusQ(String),
    #[error("{0} is not in Z_p")]
    NotIntegral(String),
    #[error("exp does not converge at {0}")]
    ExpDivergent(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("need {needed} digits of precision, have {have}")]
    InsufficientPrecision { needed: i64, have: i64 },
    #[error("modulus must exceed 1, got {0}")]
    BadModulus(i64),
    #[error("p = {p} divides m = {m}")]
    PDividesM { p: u64, m: i64 },
    #[error("m = {m} divides a = {a}")]
    MDividesA { a: i64, m: i64 },
    #[error("cannot parse p-adic literal {0:?}")]
    Parse(String),
}
