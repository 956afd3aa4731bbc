//! Exact arithmetic for weight polynomials and truncated q-series.
//!
//! Everything is dense in `q` and sparse in the weights `t, w, v, x`.
//! Coefficients are `i64` with checked arithmetic: an overflow is reported as
//! [`Error::Overflow`](crate::Error::Overflow) rather than wrapping.

mod format;
mod monomial;
mod poly;
mod qpoly;
mod rational;
mod truncated;

pub use monomial::{Var, WeightMonomial};
pub use poly::{poly_add, poly_mul, WeightPolynomial};
pub use qpoly::QPoly;
pub use rational::{
    expand_inverse_factor, expand_rational_term, DenominatorFactor, RationalTerm, Substitution,
    WeightValue,
};
pub use truncated::{series_add, series_equal, series_mul, Discrepancy, SeriesComparison, TruncatedSeries};

/// Truncation order used when the caller does not pick one.
pub const DEFAULT_ORDER: usize = 60;
