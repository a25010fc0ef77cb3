//! Scalars of semirings with a negation map.
//!
//! Every scalar type implements [`NegationSemiring`]: addition, multiplication,
//! the negation map `⊖`, the quasi-zero test and the surpassing relation `⊨`.

use std::fmt;

mod elt;
pub mod format;
mod natural;
mod rational;
mod supertropical;
mod sym;

pub use elt::EltScalar;
pub use natural::{Natural, Z2};
pub use rational::Rational;
pub(crate) use rational::cmp_ratio;
pub use supertropical::SupertropicalScalar;
pub use sym::{BaseSemiring, MaxPlus, SymPair};

/// A semiring equipped with a negation map.
///
/// Implementations must satisfy `⊖(a+b) = ⊖a + ⊖b`, `⊖(ab) = a(⊖b) = (⊖a)b`,
/// `⊖⊖a = a` and `⊖0 = 0`.
pub trait NegationSemiring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;

    /// Membership in the set of quasi-zeros `{a ⊖ a}` (together with zero).
    fn is_quasi_zero(&self) -> bool;

    /// `self ⊨ other`: `self = other + c` for some quasi-zero `c`.
    fn surpasses(&self, other: &Self) -> bool;

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    /// `self ⊖ rhs`
    fn minus(&self, rhs: &Self) -> Self {
        self.add(&rhs.negate())
    }

    /// `a° = a ⊖ a`
    fn circ(&self) -> Self {
        self.minus(self)
    }

    /// `a ∇ b` iff `a ⊖ b` is quasi-zero.
    fn nabla(&self, other: &Self) -> bool {
        self.minus(other).is_quasi_zero()
    }
}

/// Sum of an iterator of scalars, zero when empty.
pub fn sum<'a, S: NegationSemiring + 'a>(items: impl IntoIterator<Item = &'a S>) -> S {
    items.into_iter().fold(S::zero(), |acc, x| acc.add(x))
}

/// `n·a = a + … + a` (n copies), by doubling.
pub fn repeat_add<S: NegationSemiring>(a: &S, mut n: u64) -> S {
    let mut acc = S::zero();
    let mut base = a.clone();
    while n > 0 {
        if n & 1 == 1 {
            acc = acc.add(&base);
        }
        base = base.add(&base);
        n >>= 1;
    }
    acc
}

/// `(0, ±1)`-style sign: `one` or `⊖one`.
pub fn sign<S: NegationSemiring>(negative: bool) -> S {
    if negative {
        S::one().negate()
    } else {
        S::one()
    }
}
