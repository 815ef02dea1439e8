//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cell ({0}, {1}) lies outside the Young diagram")]
    CellOutsideDiagram(usize, usize),

    #[error("partition length {len} exceeds the bound {bound}")]
    LengthExceedsBound { len: usize, bound: usize },

    #[error("partition has a nonempty 2-core")]
    NonEmptyTwoCore,

    #[error("skew matrix dimension {0} is odd")]
    OddDimension(usize),

    #[error("division by a non-unit (invertible constant term required)")]
    DivisionByNonUnit,

    #[error("Laurent object with negative q-exponents is not a power series")]
    NotAPowerSeries,

    #[error("denominator x_i + y_j vanishes")]
    SingularDenominator,

    #[error("polynomial is not symmetric in its variables")]
    NotSymmetric,

    #[error("Schur expansion did not terminate (asymmetric input or internal bug)")]
    NonTerminatingRemainder,

    #[error("Gram matrix is singular at q = 0")]
    GramSingularAtQ0,

    #[error("negative exponent remains after the (x_1...x_n)^m shift")]
    NegativeExponentRemains,

    #[error("series did not stabilize for any m <= {0}")]
    NoStabilization(usize),

    #[error("unsupported density family: {0}")]
    UnsupportedFamily(String),

    #[error("unknown identity id: {0}")]
    UnknownIdentity(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
