//! Exact coefficient arithmetic.
//!
//! Four rings built on arbitrary-precision rationals, all with exact
//! operations:
//!
//! - [`LaurentPoly`]: sparse Laurent polynomials in `q`,
//! - [`RationalFunction`]: quotients of Laurent polynomials in canonical form,
//! - [`QSeries`]: power series in `q`, either exact polynomials or truncated
//!   at a stated order,
//! - [`XSeries`]: multivariate Laurent series in `x_1..x_n` over any
//!   coefficient ring implementing [`Ring`].
//!
//! [`products`] expands products of binomial factors `(1 - c q^j x^α)^{±1}`
//! (and the q-shifted factorials built from them) under a joint
//! `x`-degree / `q`-order budget.

pub mod laurent;
pub mod products;
pub mod qseries;
pub mod ratfun;
pub mod ring;
pub mod xseries;

pub use laurent::LaurentPoly;
pub use qseries::QSeries;
pub use ratfun::RationalFunction;
pub use ring::Ring;
pub use xseries::{VarImage, XSeries};

/// Arbitrary-precision rational scalar used throughout the crate.
pub type Rational = num_rational::BigRational;

use num_bigint::BigInt;

/// Shorthand for the rational `n/d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for the integer rational `n`.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parse a rational from `"p/q"` or `"p"` form.
pub fn parse_rational(s: &str) -> crate::Result<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| crate::Error::Parse(format!("bad rational {s:?}: {e}")))
}
