use std::str::FromStr;

use crate::error::{Error, ParseError, Result};
use crate::scalar_core::{EltScalar, NegationSemiring};

/// Finite search space of coefficients for the grid-bounded oracles.
///
/// A grid built with [`CoefficientGrid::new`] holds only non-quasi-zero scalars.
/// [`CoefficientGrid::with_quasi_zeros`] also admits quasi-zero coefficients; they
/// are used for span membership but skipped by the dependence search.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientGrid<S = EltScalar> {
    values: Vec<S>,
}

/// Named grid presets for ELT scalars.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GridSize {
    Small,
    Default,
    Large,
}

impl FromStr for GridSize {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "small" => Ok(GridSize::Small),
            "default" => Ok(GridSize::Default),
            "large" => Ok(GridSize::Large),
            other => Err(ParseError::new(format!(
                "unknown grid `{other}` (expected small, default or large)"
            ))),
        }
    }
}

impl<S: NegationSemiring> CoefficientGrid<S> {
    pub fn new(values: Vec<S>) -> Result<Self> {
        if let Some(q) = values.iter().find(|v| v.is_quasi_zero()) {
            return Err(Error::Precondition(format!(
                "coefficient grid may not contain the quasi-zero {q:?}"
            )));
        }
        Self::with_quasi_zeros(values)
    }

    pub fn with_quasi_zeros(values: Vec<S>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyGrid);
        }
        let mut distinct: Vec<S> = Vec::with_capacity(values.len());
        for v in values {
            if !distinct.contains(&v) {
                distinct.push(v);
            }
        }
        Ok(CoefficientGrid { values: distinct })
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Coefficients admissible in a dependence relation.
    pub fn dependence_values(&self) -> Vec<S> {
        self.values
            .iter()
            .filter(|v| !v.is_quasi_zero())
            .cloned()
            .collect()
    }
}

impl CoefficientGrid<EltScalar> {
    /// All `(t, ℓ)` with `t` and `ℓ` drawn from the given lists, `ℓ ≠ 0`.
    pub fn from_ranges(tangibles: &[i64], layers: &[i64]) -> Result<Self> {
        let mut values = Vec::new();
        for &t in tangibles {
            for &l in layers {
                values.push(EltScalar::new(t, l));
            }
        }
        CoefficientGrid::new(values)
    }

    /// `t ∈ {0, 1}`, `ℓ ∈ {−1, 1}`.
    pub fn small() -> Self {
        Self::from_ranges(&[0, 1], &[-1, 1]).expect("valid preset")
    }

    /// `t ∈ {−1, 0, 1}`, `ℓ ∈ {−2, −1, 1, 2}`.
    pub fn default_elt() -> Self {
        Self::from_ranges(&[-1, 0, 1], &[-2, -1, 1, 2]).expect("valid preset")
    }

    /// `t ∈ {−2, …, 2}`, `ℓ ∈ {−3, …, 3} \ {0}`.
    pub fn large() -> Self {
        Self::from_ranges(&[-2, -1, 0, 1, 2], &[-3, -2, -1, 1, 2, 3]).expect("valid preset")
    }

    pub fn preset(size: GridSize) -> Self {
        match size {
            GridSize::Small => Self::small(),
            GridSize::Default => Self::default_elt(),
            GridSize::Large => Self::large(),
        }
    }

    /// This grid plus the quasi-zero `(t, 0)` for every tangible `t` it uses.
    pub fn and_quasi_zeros(&self) -> Self {
        let mut values = self.values.clone();
        for v in &self.values {
            if let Some(t) = v.tangible() {
                values.push(EltScalar::new(t.clone(), 0));
            }
        }
        CoefficientGrid::with_quasi_zeros(values).expect("non-empty")
    }
}
