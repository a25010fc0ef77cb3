use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::sym::BaseSemiring;
use super::NegationSemiring;

/// Natural numbers `ℕ₀`, usable as a base semiring or with the trivial negation map.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Natural(pub BigUint);

impl Natural {
    pub fn new(n: u64) -> Self {
        Natural(BigUint::from(n))
    }
}

impl fmt::Debug for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl BaseSemiring for Natural {
    fn zero() -> Self {
        Natural(BigUint::zero())
    }

    fn one() -> Self {
        Natural(BigUint::one())
    }

    fn add(&self, rhs: &Self) -> Self {
        Natural(&self.0 + &rhs.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Natural(&self.0 * &rhs.0)
    }

    fn common_summand(a1: &Self, b1: &Self, a2: &Self, b2: &Self) -> bool {
        a1 >= b1 && a2 >= b2 && &a1.0 - &b1.0 == &a2.0 - &b2.0
    }
}

/// Trivial negation: `⊖a = a`, so the quasi-zeros are the even numbers.
impl NegationSemiring for Natural {
    fn zero() -> Self {
        <Natural as BaseSemiring>::zero()
    }

    fn one() -> Self {
        <Natural as BaseSemiring>::one()
    }

    fn add(&self, rhs: &Self) -> Self {
        BaseSemiring::add(self, rhs)
    }

    fn mul(&self, rhs: &Self) -> Self {
        BaseSemiring::mul(self, rhs)
    }

    fn negate(&self) -> Self {
        self.clone()
    }

    fn is_quasi_zero(&self) -> bool {
        self.0.is_even()
    }

    fn surpasses(&self, other: &Self) -> bool {
        self >= other && (&self.0 - &other.0).is_even()
    }
}

/// The two-element ring `ℤ/2ℤ`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Z2(pub bool);

impl Z2 {
    pub fn add(self, rhs: Z2) -> Z2 {
        Z2(self.0 ^ rhs.0)
    }

    pub fn mul(self, rhs: Z2) -> Z2 {
        Z2(self.0 && rhs.0)
    }

    pub fn neg(self) -> Z2 {
        self
    }
}
