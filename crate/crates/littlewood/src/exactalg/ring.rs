//! Minimal commutative-ring interface shared by the coefficient types.

use num_traits::{One, Zero};

use super::Rational;

/// Commutative ring operations by reference, on top of the standard
/// `Zero`/`One` identities.
///
/// `zero`/`one` must be context-free, which is why [`super::QSeries`]
/// represents exact polynomials (truncation order "infinity") as a separate
/// state: the additive and multiplicative identities are exact.
pub trait Ring: Clone + PartialEq + std::fmt::Debug + Zero + One {
    fn add_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_ref(&rhs.neg_ref())
    }

    fn from_int(n: i64) -> Self;
}

impl Ring for Rational {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn neg_ref(&self) -> Self {
        -self
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn from_int(n: i64) -> Self {
        super::rat_int(n)
    }
}
