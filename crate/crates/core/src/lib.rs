pub mod cohen;
pub mod exact;
pub mod lfun;
pub mod magnus;
pub mod measure;
pub mod padic;

pub use exact::Rational;

/// Polynomials with rational coefficients.
pub type QPoly = exact::Poly<Rational>;
/// Truncated power series with rational coefficients.
pub type QSeries = exact::TruncSeries<Rational>;
/// Bivariate polynomials in `(α, χ)`.
pub type BivarPoly = magnus::BivarPoly;
/// Y-linear Magnus group elements with rational coefficients.
pub type QYLinear = magnus::YLinear<Rational>;
