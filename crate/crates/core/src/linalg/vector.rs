use std::fmt;

use crate::error::{Error, Result};
use crate::scalar_core::NegationSemiring;

/// Element of the free module `R^n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector<S>(pub Vec<S>);

impl<S: NegationSemiring> Vector<S> {
    pub fn new(entries: Vec<S>) -> Self {
        Vector(entries)
    }

    pub fn zeros(n: usize) -> Self {
        Vector(vec![S::zero(); n])
    }

    /// Standard basis vector `e_i` (0-based).
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = S::one();
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[S] {
        &self.0
    }

    pub fn get(&self, i: usize) -> &S {
        &self.0[i]
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.len() == other.len() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!(
                "vector lengths {} and {}",
                self.len(),
                other.len()
            )))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(self.add(other))
    }

    /// Componentwise sum; panics on length mismatch.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a.add(b)).collect())
    }

    pub fn scale(&self, c: &S) -> Self {
        Vector(self.0.iter().map(|a| c.mul(a)).collect())
    }

    pub fn negate(&self) -> Self {
        Vector(self.0.iter().map(S::negate).collect())
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.add(&other.negate())
    }

    pub fn circ(&self) -> Self {
        self.minus(self)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(S::is_zero)
    }

    /// Membership in `zeroset(R^n)`: every entry quasi-zero.
    pub fn is_quasi_zero(&self) -> bool {
        self.0.iter().all(S::is_quasi_zero)
    }

    /// Componentwise `⊨`.
    pub fn surpasses(&self, other: &Self) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a.surpasses(b))
    }
}

/// `Σ α_i v_i`; zero vector of length `n` when the list is empty.
pub fn linear_combination<S: NegationSemiring>(n: usize, terms: &[(S, &Vector<S>)]) -> Vector<S> {
    terms
        .iter()
        .fold(Vector::zeros(n), |acc, (a, v)| acc.add(&v.scale(a)))
}

impl<S: fmt::Debug> fmt::Debug for Vector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.0).finish()
    }
}

impl<S: fmt::Display> fmt::Display for Vector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}
