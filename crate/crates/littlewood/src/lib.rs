//! Exact-arithmetic verification of Littlewood-type Schur function identities.
//!
//! The crate machine-checks, over truncated formal power series with
//! arbitrary-precision rational coefficients, a family of summation
//! identities for Schur functions in which the sum ranges over partitions
//! with empty 2-core.  The pieces are
//!
//! - [`partitions`]: partitions, hooks, contents, 2-cores and the signed
//!   diagram statistic `b(λ)`,
//! - [`exactalg`]: the coefficient rings (rationals, Laurent polynomials in
//!   `q`, rational functions, truncated `q`-series, multivariate Laurent
//!   series),
//! - [`schur`]: Schur polynomials and expansion into the Schur basis,
//! - [`pfaffian`]: Pfaffians over the rational-function field and their
//!   closed-form evaluations,
//! - [`torus`]: constant-term evaluation of the torus integrals behind the
//!   identities,
//! - [`koornwinder`]: `BC_n` orbit sums and Koornwinder polynomials at
//!   `q = t` via Gram–Schmidt,
//! - [`verify`]: the identity suites and report generation,
//! - [`cli`]: the `littlewood` command-line front end.
//!
//! Everything is exact; a verification result is always qualified by the
//! truncation orders (`x`-degree `d`, `q`-order `D`) it was established at.
//!
//! See the `examples/` directory for one runnable walkthrough per subsystem.

pub mod cli;
pub mod error;
pub mod exactalg;
pub mod koornwinder;
pub mod partitions;
pub mod pfaffian;
pub mod schur;
pub mod torus;
pub mod verify;

pub use error::{Error, Result};
pub use exactalg::{LaurentPoly, QSeries, Rational, RationalFunction, XSeries};
pub use partitions::Partition;
