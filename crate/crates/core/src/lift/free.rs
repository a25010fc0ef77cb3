use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use crate::scalar_core::NegationSemiring;

/// Element `Σ n_i a_{α_i}` of the monoid ring `ℤ[A]` over `A = {a_α}`, where `α`
/// ranges over the non-quasi-zero scalars together with `0_R`.
///
/// The symbol `a_{0_R}` is identified with `0`, so keys are distinct non-quasi-zero
/// scalars and every coefficient is non-zero.
#[derive(Clone, PartialEq, Eq)]
pub struct FreeLiftElement<S: Ord> {
    terms: BTreeMap<S, BigInt>,
}

impl<S: NegationSemiring + Ord> FreeLiftElement<S> {
    pub fn zero() -> Self {
        FreeLiftElement {
            terms: BTreeMap::new(),
        }
    }

    /// `a_1`.
    pub fn one() -> Self {
        Self::symbol(&S::one()).expect("1 is not quasi-zero")
    }

    /// `a_α`. `None` for a quasi-zero `α ≠ 0_R`, which has no symbol.
    pub fn symbol(alpha: &S) -> Option<Self> {
        if alpha.is_zero() {
            return Some(Self::zero());
        }
        if alpha.is_quasi_zero() {
            return None;
        }
        Some(Self::from_terms([(alpha.clone(), BigInt::one())]))
    }

    /// `Σ n_i a_{α_i}`, collecting repeated symbols. Terms with a quasi-zero `α` are dropped.
    pub fn from_terms(terms: impl IntoIterator<Item = (S, BigInt)>) -> Self {
        let mut out = Self::zero();
        for (alpha, n) in terms {
            out.accumulate(alpha, n);
        }
        out
    }

    fn accumulate(&mut self, alpha: S, n: BigInt) {
        if alpha.is_quasi_zero() || n.is_zero() {
            return;
        }
        let entry = self.terms.entry(alpha.clone()).or_insert_with(BigInt::zero);
        *entry += n;
        if entry.is_zero() {
            self.terms.remove(&alpha);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&S, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (alpha, n) in &rhs.terms {
            out.accumulate(alpha.clone(), n.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        FreeLiftElement {
            terms: self.terms.iter().map(|(a, n)| (a.clone(), -n)).collect(),
        }
    }

    /// Bilinear extension of `a_α a_β = a_{αβ}`, collapsing to `a_{0_R}` when `αβ` is quasi-zero.
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (a, n) in &self.terms {
            for (b, m) in &rhs.terms {
                out.accumulate(a.mul(b), n * m);
            }
        }
        out
    }
}

/// `n·a` as an `n`-fold sum, by doubling.
fn repeat_add_big<S: NegationSemiring>(a: &S, n: &BigUint) -> S {
    let mut acc = S::zero();
    for i in (0..n.bits()).rev() {
        acc = acc.add(&acc);
        if n.bit(i) {
            acc = acc.add(a);
        }
    }
    acc
}

/// `φ̂(Σ n_i a_{α_i}) = Σ |n_i| (sign(n_i)·α_i)` with `(−1)·α = ⊖α`.
pub fn free_lift_map<S: NegationSemiring + Ord>(x: &FreeLiftElement<S>) -> S {
    x.terms.iter().fold(S::zero(), |acc, (alpha, n)| {
        let signed = if n.sign() == Sign::Minus {
            alpha.negate()
        } else {
            alpha.clone()
        };
        acc.add(&repeat_add_big(&signed, n.magnitude()))
    })
}

pub fn free_lift_mul<S: NegationSemiring + Ord>(
    x: &FreeLiftElement<S>,
    y: &FreeLiftElement<S>,
) -> FreeLiftElement<S> {
    x.mul(y)
}

impl<S: Ord + fmt::Display> fmt::Display for FreeLiftElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(a, n)| format!("{n}·a{a}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<S: Ord + fmt::Display> fmt::Debug for FreeLiftElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
