use std::collections::{BTreeMap, BTreeSet};

use super::algebra::FreeLieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{span_membership_grid, CoefficientGrid, Vector};
use crate::scalar_core::{EltScalar, NegationSemiring};

/// Largest generator list a series step may carry before the search gives up.
pub const MAX_SERIES_GENERATORS: usize = 4096;

/// A submodule `Span(gens)` of a free Lie semialgebra, optionally enlarged by
/// the whole quasi-zero submodule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealGenerators {
    pub dim: usize,
    pub gens: Vec<Vector<EltScalar>>,
    pub contains_zeroset: bool,
}

/// Scales `v` so that its first non-bottom entry has tangible `0` and, when
/// invertible, layer `1`. The span is unchanged.
pub fn normalize_generator(v: &Vector<EltScalar>) -> Vector<EltScalar> {
    let Some(lead) = v.entries().iter().find(|a| !a.is_bottom()) else {
        return v.clone();
    };
    let factor = match lead.inverse() {
        Some(inv) => inv,
        None => EltScalar::new(-lead.tangible().expect("not bottom"), 1),
    };
    v.scale(&factor)
}

/// Normalized generators without repeats or zero vectors, sorted.
fn canonical(gens: impl IntoIterator<Item = Vector<EltScalar>>) -> Vec<Vector<EltScalar>> {
    gens.into_iter()
        .filter(|g| !g.is_zero())
        .map(|g| normalize_generator(&g))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

impl IdealGenerators {
    pub fn new(dim: usize, gens: Vec<Vector<EltScalar>>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.len() != dim) {
            return Err(Error::DimensionMismatch(format!(
                "generator of length {} in dimension {dim}",
                g.len()
            )));
        }
        Ok(IdealGenerators {
            dim,
            gens,
            contains_zeroset: false,
        })
    }

    /// `L` itself, generated by its base.
    pub fn whole(l: &FreeLieAlgebra) -> Self {
        IdealGenerators {
            dim: l.dim(),
            gens: canonical(l.basis_vectors()),
            contains_zeroset: false,
        }
    }

    /// The quasi-zero submodule, generated by the `(0,0)x_i`.
    pub fn zeroset(l: &FreeLieAlgebra) -> Self {
        let q = EltScalar::new(0, 0);
        IdealGenerators {
            dim: l.dim(),
            gens: l.basis_vectors().iter().map(|b| b.scale(&q)).collect(),
            contains_zeroset: true,
        }
    }

    pub fn with_zeroset(mut self) -> Self {
        self.contains_zeroset = true;
        self
    }

    pub fn all_quasi_zero(&self) -> bool {
        self.gens.iter().all(Vector::is_quasi_zero)
    }

    /// Membership of `x`, exact for the zero vector, quasi-zero vectors when
    /// the zeroset is included, and vectors supported on invertible monomial
    /// generators; otherwise a grid search for coefficients.
    pub fn contains(&self, x: &Vector<EltScalar>, grid: &CoefficientGrid<EltScalar>) -> Result<bool> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in dimension {}",
                x.len(),
                self.dim
            )));
        }
        if x.is_zero() || (self.contains_zeroset && x.is_quasi_zero()) {
            return Ok(true);
        }
        let mut monomial: BTreeMap<usize, &EltScalar> = BTreeMap::new();
        for g in &self.gens {
            let mut support = g.entries().iter().enumerate().filter(|(_, a)| !a.is_bottom());
            if let (Some((i, a)), None) = (support.next(), support.next()) {
                if !a.is_quasi_zero() {
                    monomial.entry(i).or_insert(a);
                }
            }
        }
        let covered = x
            .entries()
            .iter()
            .enumerate()
            .all(|(i, a)| a.is_bottom() || monomial.contains_key(&i));
        if covered {
            return Ok(true);
        }
        if self.gens.is_empty() {
            return Ok(false);
        }
        span_membership_grid(x, &self.gens, grid)
    }
}

/// `[I, J]`, generated by the brackets of generator pairs.
pub fn bracket_of_spans(
    l: &FreeLieAlgebra,
    i: &IdealGenerators,
    j: &IdealGenerators,
) -> Result<IdealGenerators> {
    if i.dim != l.dim() || j.dim != l.dim() {
        return Err(Error::DimensionMismatch(format!(
            "spans of dimension {} and {} in a {}-dimensional algebra",
            i.dim,
            j.dim,
            l.dim()
        )));
    }
    let gens = i
        .gens
        .iter()
        .flat_map(|x| j.gens.iter().map(move |y| l.bracket_unchecked(x, y)))
        .collect();
    Ok(IdealGenerators {
        dim: l.dim(),
        gens,
        contains_zeroset: false,
    })
}

fn canonical_bracket(l: &FreeLieAlgebra, i: &IdealGenerators, j: &IdealGenerators) -> IdealGenerators {
    let mut b = bracket_of_spans(l, i, j).expect("same ambient");
    b.gens = canonical(b.gens);
    b
}

/// Outcome of a bounded series search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// The condition holds at this step.
    Holds { step: usize },
    /// The generator set repeats at this step without the condition holding,
    /// so no later step can satisfy it.
    Never { stabilized_at: usize },
    /// Neither outcome within the step bound or the generator cap.
    Inconclusive { reached: usize },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds { .. })
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Series {
    Derived,
    LowerCentral,
}

/// Steps `0..=k_max` of a series starting at `start`, stopping early at the
/// generator cap or once a step repeats the previous one.
fn series(l: &FreeLieAlgebra, start: IdealGenerators, k_max: usize, kind: Series) -> Vec<IdealGenerators> {
    let mut out = vec![start.clone()];
    let mut current = start.clone();
    for _ in 0..k_max {
        let next = match kind {
            Series::Derived => canonical_bracket(l, &current, &current),
            Series::LowerCentral => canonical_bracket(l, &start, &current),
        };
        let repeated = next.gens == current.gens;
        let over = next.gens.len() > MAX_SERIES_GENERATORS;
        out.push(next.clone());
        if repeated || over {
            break;
        }
        current = next;
    }
    out
}

/// `L^(0) = L`, `L^(k) = [L^(k−1), L^(k−1)]`.
pub fn derived_series(l: &FreeLieAlgebra, k_max: usize) -> Vec<IdealGenerators> {
    series(l, IdealGenerators::whole(l), k_max, Series::Derived)
}

/// `L^0 = L`, `L^k = [L, L^(k−1)]`.
pub fn lower_central_series(l: &FreeLieAlgebra, k_max: usize) -> Vec<IdealGenerators> {
    series(l, IdealGenerators::whole(l), k_max, Series::LowerCentral)
}

/// Derived series of the subalgebra generated by an ideal's generators.
pub fn derived_series_of(l: &FreeLieAlgebra, i: &IdealGenerators, k_max: usize) -> Vec<IdealGenerators> {
    let start = IdealGenerators {
        dim: i.dim,
        gens: canonical(i.gens.iter().cloned()),
        contains_zeroset: false,
    };
    series(l, start, k_max, Series::Derived)
}

fn judge(
    steps: &[IdealGenerators],
    k_max: usize,
    mut inside: impl FnMut(&IdealGenerators) -> Result<bool>,
) -> Result<Verdict> {
    for (k, step) in steps.iter().enumerate().skip(1) {
        if inside(step)? {
            return Ok(Verdict::Holds { step: k });
        }
    }
    let last = steps.len() - 1;
    if last >= 1 && steps[last].gens == steps[last - 1].gens {
        return Ok(Verdict::Never { stabilized_at: last });
    }
    Ok(Verdict::Inconclusive {
        reached: last.min(k_max),
    })
}

/// Some `L^(k)` lies in the quasi-zero submodule.
pub fn is_solvable(l: &FreeLieAlgebra, k_max: usize) -> Verdict {
    judge(&derived_series(l, k_max), k_max, |s| Ok(s.all_quasi_zero())).expect("infallible")
}

/// Some `L^k` lies in the quasi-zero submodule.
pub fn is_nilpotent(l: &FreeLieAlgebra, k_max: usize) -> Verdict {
    judge(&lower_central_series(l, k_max), k_max, |s| Ok(s.all_quasi_zero())).expect("infallible")
}

/// The ideal's own derived series reaches the quasi-zero submodule.
pub fn is_solvable_ideal(l: &FreeLieAlgebra, i: &IdealGenerators, k_max: usize) -> Verdict {
    judge(&derived_series_of(l, i, k_max), k_max, |s| Ok(s.all_quasi_zero())).expect("infallible")
}

/// `[g, x_j] ∈ I` for every generator `g` and base element `x_j`.
pub fn certify_ideal(
    l: &FreeLieAlgebra,
    i: &IdealGenerators,
    grid: &CoefficientGrid<EltScalar>,
) -> Result<()> {
    if i.dim != l.dim() {
        return Err(Error::DimensionMismatch(format!(
            "ideal of dimension {} in a {}-dimensional algebra",
            i.dim,
            l.dim()
        )));
    }
    for (gi, g) in i.gens.iter().enumerate() {
        for j in 0..l.dim() {
            let b = l.bracket_unchecked(g, &l.basis(j));
            if !i.contains(&b, grid)? {
                return Err(Error::NonIdeal {
                    generator: gi,
                    basis: j,
                });
            }
        }
    }
    Ok(())
}

/// Some `L^(k)` has all generators in `I`; `I` must certify as an ideal first.
pub fn solvable_modulo(
    l: &FreeLieAlgebra,
    i: &IdealGenerators,
    k_max: usize,
    grid: &CoefficientGrid<EltScalar>,
) -> Result<Verdict> {
    certify_ideal(l, i, grid)?;
    judge(&derived_series(l, k_max), k_max, |s| {
        for g in &s.gens {
            if !i.contains(g, grid)? {
                return Ok(false);
            }
        }
        Ok(true)
    })
}

/// Some `L^k` has all generators in `I`; `I` must certify as an ideal first.
pub fn nilpotent_modulo(
    l: &FreeLieAlgebra,
    i: &IdealGenerators,
    k_max: usize,
    grid: &CoefficientGrid<EltScalar>,
) -> Result<Verdict> {
    certify_ideal(l, i, grid)?;
    judge(&lower_central_series(l, k_max), k_max, |s| {
        for g in &s.gens {
            if !i.contains(g, grid)? {
                return Ok(false);
            }
        }
        Ok(true)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pbw_example_is_solvable_and_nilpotent_at_step_two() {
        let l = FreeLieAlgebra::pbw_example();
        assert_eq!(is_solvable(&l, 6), Verdict::Holds { step: 2 });
        assert_eq!(is_nilpotent(&l, 6), Verdict::Holds { step: 2 });
    }

    #[test]
    fn sl2_is_not_solvable() {
        let l = FreeLieAlgebra::sl2_type();
        assert!(matches!(is_solvable(&l, 6), Verdict::Never { .. }));
    }

    #[test]
    fn normalization() {
        let v = Vector(vec![EltScalar::Bottom, EltScalar::new(2, -3), EltScalar::new(1, 1)]);
        assert_eq!(
            normalize_generator(&v),
            Vector(vec![
                EltScalar::Bottom,
                EltScalar::one(),
                EltScalar::new(-1, Rational::new(-1, 3))
            ])
        );
    }

    use crate::scalar_core::Rational;
}
