use std::collections::BTreeSet;
use std::fmt;

use crate::error::Result;
use crate::linalg::{EltPolynomial, Matrix};
use crate::scalar_core::{cmp_ratio, EltScalar, NegationSemiring, Rational};

/// `p_A(λ) = det(λI + (0,−1)A) = λⁿ + Σ α_i λ^{n−i}`.
#[derive(Clone, PartialEq, Eq)]
pub struct CharPoly {
    pub n: usize,
    pub poly: EltPolynomial,
}

impl CharPoly {
    /// `α_i`, the coefficient of `λ^{n−i}` (1-based, `α_0 = (0,1)`).
    pub fn alpha(&self, i: usize) -> EltScalar {
        assert!(i <= self.n, "α_{i} of a degree-{} polynomial", self.n);
        self.poly.coefficient(self.n - i)
    }

    /// `α_1, …, α_n`.
    pub fn alphas(&self) -> Vec<EltScalar> {
        (1..=self.n).map(|i| self.alpha(i)).collect()
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.poly, f)
    }
}

impl fmt::Debug for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.poly, f)
    }
}

/// Permutation expansion over polynomial entries.
pub fn char_poly(a: &Matrix<EltScalar>) -> Result<CharPoly> {
    if !a.is_square() {
        return Err(crate::Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let minus_one = EltScalar::new(0, -1);
    let lambda = Matrix::from_fn(n, n, |i, j| {
        let c = EltPolynomial::constant(minus_one.mul(a.get(i, j)));
        if i == j {
            c.add(&EltPolynomial::variable())
        } else {
            c
        }
    });
    Ok(CharPoly {
        n,
        poly: lambda.determinant()?,
    })
}

/// `L(A)`: the `ℓ` with `t(α_ℓ)/ℓ ≥ t(α_k)/k` for every `k` in `1..=n`.
/// Bottom coefficients never qualify and never constrain.
pub fn essential_indices(p: &CharPoly) -> BTreeSet<usize> {
    let present: Vec<(usize, Rational)> = (1..=p.n)
        .filter_map(|i| p.alpha(i).tangible().map(|t| (i, t.clone())))
        .collect();
    present
        .iter()
        .filter(|(l, tl)| {
            present
                .iter()
                .all(|(k, tk)| cmp_ratio(tl, *l as i64, tk, *k as i64).is_ge())
        })
        .map(|(l, _)| *l)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EssentialTrace {
    pub char_poly: CharPoly,
    /// `L(A)`, 1-based.
    pub indices: BTreeSet<usize>,
    /// `min L(A)`, `None` when every `α_i` is bottom.
    pub mu: Option<usize>,
    pub value: EltScalar,
    /// `1 ∈ L(A)`, so the value is `tr(A)`.
    pub used_trace_branch: bool,
}

/// `etr(A)`: `tr(A)` when `(0,−1)tr(A)` is essential, otherwise the layer-zero
/// scalar of tangible `t(α_μ)/μ`; bottom when no `α_i` survives.
pub fn essential_trace(a: &Matrix<EltScalar>) -> Result<EssentialTrace> {
    let p = char_poly(a)?;
    let indices = essential_indices(&p);
    let mu = indices.first().copied();
    let used_trace_branch = mu == Some(1);
    let value = match mu {
        Some(1) => a.trace()?,
        Some(m) => {
            let t = p.alpha(m).tangible().expect("essential index has a tangible").clone();
            EltScalar::new(&t / &Rational::from_integer(m as i64), 0)
        }
        None => EltScalar::Bottom,
    };
    Ok(EssentialTrace {
        char_poly: p,
        indices,
        mu,
        value,
        used_trace_branch,
    })
}

/// Smallest `k ≤ k_max` with `A^k` entrywise quasi-zero, if any.
pub fn is_elt_nilpotent(a: &Matrix<EltScalar>, k_max: usize) -> Result<Option<usize>> {
    if !a.is_square() {
        return Err(crate::Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let mut power = a.clone();
    for k in 1..=k_max {
        if power.is_quasi_zero() {
            return Ok(Some(k));
        }
        power = power.mat_mul(a)?;
    }
    Ok(None)
}
