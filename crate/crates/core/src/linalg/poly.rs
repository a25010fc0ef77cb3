use std::fmt;

use crate::scalar_core::{EltScalar, NegationSemiring};

/// Polynomial in one variable `λ` with ELT coefficients, indexed by degree.
///
/// Trailing bottom coefficients are trimmed, so the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EltPolynomial(Vec<EltScalar>);

impl EltPolynomial {
    pub fn new(mut coefficients: Vec<EltScalar>) -> Self {
        while coefficients.last().is_some_and(EltScalar::is_bottom) {
            coefficients.pop();
        }
        EltPolynomial(coefficients)
    }

    pub fn constant(c: EltScalar) -> Self {
        EltPolynomial::new(vec![c])
    }

    /// The monomial `λ`.
    pub fn variable() -> Self {
        EltPolynomial(vec![EltScalar::Bottom, EltScalar::one()])
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coefficients(&self) -> &[EltScalar] {
        &self.0
    }

    /// Coefficient of `λ^d`; bottom beyond the degree.
    pub fn coefficient(&self, d: usize) -> EltScalar {
        self.0.get(d).cloned().unwrap_or(EltScalar::Bottom)
    }
}

impl NegationSemiring for EltPolynomial {
    fn zero() -> Self {
        EltPolynomial(Vec::new())
    }

    fn one() -> Self {
        EltPolynomial(vec![EltScalar::one()])
    }

    fn add(&self, rhs: &Self) -> Self {
        let n = self.0.len().max(rhs.0.len());
        EltPolynomial::new((0..n).map(|d| self.coefficient(d).add(&rhs.coefficient(d))).collect())
    }

    fn mul(&self, rhs: &Self) -> Self {
        if self.0.is_empty() || rhs.0.is_empty() {
            return EltPolynomial::zero();
        }
        let mut out = vec![EltScalar::Bottom; self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_bottom() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        EltPolynomial::new(out)
    }

    fn negate(&self) -> Self {
        EltPolynomial(self.0.iter().map(EltScalar::negate).collect())
    }

    fn is_quasi_zero(&self) -> bool {
        self.0.iter().all(EltScalar::is_quasi_zero)
    }

    fn surpasses(&self, other: &Self) -> bool {
        let n = self.0.len().max(other.0.len());
        (0..n).all(|d| self.coefficient(d).surpasses(&other.coefficient(d)))
    }
}

impl fmt::Display for EltPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "bottom");
        }
        let mut first = true;
        for (d, c) in self.0.iter().enumerate().rev() {
            if c.is_bottom() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match d {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}λ")?,
                _ => write!(f, "{c}λ^{d}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for EltPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
