use std::fmt;

use super::{NegationSemiring, Rational};

/// Commutative semiring used as the base of a symmetrization.
pub trait BaseSemiring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;

    /// Whether a single `c` satisfies both `a1 = b1 + c` and `a2 = b2 + c`.
    fn common_summand(a1: &Self, b1: &Self, a2: &Self, b2: &Self) -> bool;
}

/// Max-plus semiring over ℚ with `−∞` as zero.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MaxPlus(pub Option<Rational>);

impl MaxPlus {
    pub fn finite(v: impl Into<Rational>) -> Self {
        MaxPlus(Some(v.into()))
    }

    pub fn neg_infinity() -> Self {
        MaxPlus(None)
    }
}

enum Summands {
    Empty,
    Exactly(MaxPlus),
    AtMost(MaxPlus),
}

fn summands(a: &MaxPlus, b: &MaxPlus) -> Summands {
    match a.cmp(b) {
        std::cmp::Ordering::Less => Summands::Empty,
        std::cmp::Ordering::Greater => Summands::Exactly(a.clone()),
        std::cmp::Ordering::Equal => Summands::AtMost(a.clone()),
    }
}

impl BaseSemiring for MaxPlus {
    fn zero() -> Self {
        MaxPlus(None)
    }

    fn one() -> Self {
        MaxPlus::finite(0)
    }

    fn add(&self, rhs: &Self) -> Self {
        if self >= rhs {
            self.clone()
        } else {
            rhs.clone()
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        match (&self.0, &rhs.0) {
            (Some(a), Some(b)) => MaxPlus(Some(a + b)),
            _ => MaxPlus(None),
        }
    }

    fn common_summand(a1: &Self, b1: &Self, a2: &Self, b2: &Self) -> bool {
        use Summands::*;
        match (summands(a1, b1), summands(a2, b2)) {
            (Empty, _) | (_, Empty) => false,
            (Exactly(x), Exactly(y)) => x == y,
            (Exactly(x), AtMost(y)) | (AtMost(y), Exactly(x)) => x <= y,
            (AtMost(_), AtMost(_)) => true,
        }
    }
}

/// Element of the symmetrization `R̂ = R × R` of a base semiring, with the
/// twist product and the swap negation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymPair<B> {
    pub pos: B,
    pub neg: B,
}

impl<B: BaseSemiring> SymPair<B> {
    pub fn new(pos: B, neg: B) -> Self {
        SymPair { pos, neg }
    }

    /// The natural injection `r ↦ (r, 0)`.
    pub fn embed(r: B) -> Self {
        SymPair {
            pos: r,
            neg: B::zero(),
        }
    }
}

impl<B: BaseSemiring> fmt::Debug for SymPair<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?},{:?})", self.pos, self.neg)
    }
}

impl<B: BaseSemiring> NegationSemiring for SymPair<B> {
    fn zero() -> Self {
        SymPair::new(B::zero(), B::zero())
    }

    fn one() -> Self {
        SymPair::new(B::one(), B::zero())
    }

    fn add(&self, rhs: &Self) -> Self {
        SymPair::new(self.pos.add(&rhs.pos), self.neg.add(&rhs.neg))
    }

    fn mul(&self, rhs: &Self) -> Self {
        SymPair::new(
            self.pos.mul(&rhs.pos).add(&self.neg.mul(&rhs.neg)),
            self.pos.mul(&rhs.neg).add(&self.neg.mul(&rhs.pos)),
        )
    }

    fn negate(&self) -> Self {
        SymPair::new(self.neg.clone(), self.pos.clone())
    }

    /// Quasi-zeros are the diagonal pairs `(c, c)`, since `(c, 0)° = (c, c)`.
    fn is_quasi_zero(&self) -> bool {
        self.pos == self.neg
    }

    fn surpasses(&self, other: &Self) -> bool {
        B::common_summand(&self.pos, &other.pos, &self.neg, &other.neg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar_core::Natural;

    fn p(a: u64, b: u64) -> SymPair<Natural> {
        SymPair::new(Natural::new(a), Natural::new(b))
    }

    #[test]
    fn twist_product() {
        assert_eq!(p(1, 2).mul(&p(3, 4)), p(11, 10));
        assert_eq!(p(5, 0).mul(&p(7, 0)), p(35, 0));
        assert_eq!(p(0, 1).mul(&p(8, 3)), p(3, 8));
    }

    #[test]
    fn circ_is_diagonal() {
        assert_eq!(p(4, 1).circ(), p(5, 5));
        assert!(p(5, 5).is_quasi_zero());
    }

    #[test]
    fn surpassing_over_naturals() {
        assert!(p(7, 4).surpasses(&p(4, 1)));
        assert!(!p(7, 4).surpasses(&p(4, 2)));
    }

    #[test]
    fn max_plus_base() {
        let m = |v: i64| MaxPlus::finite(v);
        let a = SymPair::new(m(3), m(3));
        assert!(a.is_quasi_zero());
        assert!(a.surpasses(&SymPair::new(m(3), m(1))));
        assert!(!SymPair::new(m(3), m(1)).surpasses(&SymPair::new(m(3), m(2))));
        assert!(SymPair::new(m(3), m(2)).surpasses(&SymPair::new(m(3), m(2))));
    }
}
