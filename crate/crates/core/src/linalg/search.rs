//! Grid-bounded oracles for dependence, span membership, criticality and
//! coordinates. A positive answer always comes with an explicit witness; a
//! negative one only means the grid holds no witness.

use std::collections::HashSet;
use std::ops::ControlFlow;

use super::{CoefficientGrid, Matrix, Vector};
use crate::error::{Error, Result};
use crate::scalar_core::{EltScalar, NegationSemiring};

/// Visits every non-empty selection `Σ_{i∈T} c_i v_i` with coefficients from `coeffs`.
/// The callback receives the chosen coefficient index per vector and the sum.
fn for_each_combination<S: NegationSemiring>(
    vectors: &[Vector<S>],
    coeffs: &[S],
    mut visit: impl FnMut(&[Option<usize>], &Vector<S>) -> ControlFlow<()>,
) {
    let Some(first) = vectors.first() else {
        return;
    };
    let n = first.len();
    let scaled: Vec<Vec<Vector<S>>> = vectors
        .iter()
        .map(|v| coeffs.iter().map(|c| v.scale(c)).collect())
        .collect();
    let mut choice = vec![None; vectors.len()];
    fn rec<S: NegationSemiring>(
        depth: usize,
        partial: &Vector<S>,
        any: bool,
        scaled: &[Vec<Vector<S>>],
        choice: &mut [Option<usize>],
        visit: &mut dyn FnMut(&[Option<usize>], &Vector<S>) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if depth == scaled.len() {
            return if any { visit(choice, partial) } else { ControlFlow::Continue(()) };
        }
        choice[depth] = None;
        rec(depth + 1, partial, any, scaled, choice, visit)?;
        for (k, term) in scaled[depth].iter().enumerate() {
            choice[depth] = Some(k);
            let next = partial.add(term);
            rec(depth + 1, &next, true, scaled, choice, visit)?;
        }
        choice[depth] = None;
        ControlFlow::Continue(())
    }
    let _ = rec(0, &Vector::zeros(n), false, &scaled, &mut choice, &mut visit);
}

fn coefficients_of<S: NegationSemiring>(choice: &[Option<usize>], coeffs: &[S]) -> Vec<S> {
    choice
        .iter()
        .map(|c| c.map_or_else(S::zero, |k| coeffs[k].clone()))
        .collect()
}

fn check_lengths<S: NegationSemiring>(vectors: &[Vector<S>], n: usize) -> Result<()> {
    match vectors.iter().find(|v| v.len() != n) {
        Some(v) => Err(Error::DimensionMismatch(format!(
            "vector of length {} among length-{n} vectors",
            v.len()
        ))),
        None => Ok(()),
    }
}

/// Coefficients (zero for unused vectors) of a grid relation `Σ α_i v_i ∈ zeroset`.
pub fn dependence_witness<S: NegationSemiring>(
    vectors: &[Vector<S>],
    grid: &CoefficientGrid<S>,
) -> Result<Option<Vec<S>>> {
    let coeffs = grid.dependence_values();
    if coeffs.is_empty() {
        return Err(Error::EmptyGrid);
    }
    let Some(first) = vectors.first() else {
        return Err(Error::Precondition("empty vector list".into()));
    };
    check_lengths(vectors, first.len())?;
    let mut found = None;
    for_each_combination(vectors, &coeffs, |choice, sum| {
        if sum.is_quasi_zero() {
            found = Some(coefficients_of(choice, &coeffs));
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    Ok(found)
}

/// One-sided dependence test: `true` is a certified relation.
pub fn is_dependent_grid<S: NegationSemiring>(
    vectors: &[Vector<S>],
    grid: &CoefficientGrid<S>,
) -> Result<bool> {
    Ok(dependence_witness(vectors, grid)?.is_some())
}

/// Coefficients (zero for unused generators) expressing `x` over `gens`.
pub fn span_witness<S: NegationSemiring>(
    x: &Vector<S>,
    gens: &[Vector<S>],
    grid: &CoefficientGrid<S>,
) -> Result<Option<Vec<S>>> {
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    check_lengths(gens, x.len())?;
    let coeffs = grid.values();
    let mut found = None;
    for_each_combination(gens, coeffs, |choice, sum| {
        if sum == x {
            found = Some(coefficients_of(choice, coeffs));
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    Ok(found)
}

/// One-sided span test: `true` means `x` is an explicit grid combination of `gens`.
pub fn span_membership_grid<S: NegationSemiring>(
    x: &Vector<S>,
    gens: &[Vector<S>],
    grid: &CoefficientGrid<S>,
) -> Result<bool> {
    Ok(span_witness(x, gens, grid)?.is_some())
}

/// Every grid combination of `gens`, without repetitions.
pub fn grid_span_elements<S: NegationSemiring + std::hash::Hash + Eq>(
    gens: &[Vector<S>],
    grid: &CoefficientGrid<S>,
) -> Vec<Vector<S>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for_each_combination(gens, grid.values(), |_, sum| {
        if seen.insert(sum.clone()) {
            out.push(sum.clone());
        }
        ControlFlow::Continue(())
    });
    out
}

/// Dependence via the determinant: `n` vectors of length `n` are dependent iff
/// the determinant of the matrix with these columns is quasi-zero.
pub fn is_dependent_det(vectors: &[Vector<EltScalar>]) -> Result<bool> {
    let n = vectors.len();
    if n == 0 || vectors.iter().any(|v| v.len() != n) {
        return Err(Error::DimensionMismatch(format!(
            "expected {n} vectors of length {n}"
        )));
    }
    Ok(Matrix::from_columns(vectors)?.determinant()?.is_quasi_zero())
}

/// `y = αx` for some invertible scalar `α`.
pub fn projectively_equivalent(x: &Vector<EltScalar>, y: &Vector<EltScalar>) -> bool {
    if x.len() != y.len() {
        return false;
    }
    let mut shift = None;
    let mut ratio = None;
    for (a, b) in x.entries().iter().zip(y.entries()) {
        match (a, b) {
            (EltScalar::Bottom, EltScalar::Bottom) => {}
            (
                EltScalar::Layered { tangible: ta, layer: la },
                EltScalar::Layered { tangible: tb, layer: lb },
            ) => {
                let d = tb - ta;
                if *shift.get_or_insert_with(|| d.clone()) != d {
                    return false;
                }
                if la.is_zero() {
                    if !lb.is_zero() {
                        return false;
                    }
                } else {
                    let r = lb / la;
                    if r.is_zero() || *ratio.get_or_insert_with(|| r.clone()) != r {
                        return false;
                    }
                }
            }
            _ => return false,
        }
    }
    true
}

/// Two lists are projectively equivalent bases: same size and each vector of one
/// is an invertible multiple of a distinct vector of the other.
pub fn projectively_equivalent_bases(b: &[Vector<EltScalar>], c: &[Vector<EltScalar>]) -> bool {
    if b.len() != c.len() {
        return false;
    }
    let mut used = vec![false; c.len()];
    b.iter().all(|x| {
        match (0..c.len()).find(|&j| !used[j] && projectively_equivalent(x, &c[j])) {
            Some(j) => {
                used[j] = true;
                true
            }
            None => false,
        }
    })
}

/// Criticality of `x` in the module spanned by `gens`: no grid-witnessed
/// decomposition `x = x1 + x2` with `x1`, `x2` outside the projective class of `x`.
pub fn is_critical(
    x: &Vector<EltScalar>,
    gens: &[Vector<EltScalar>],
    grid: &CoefficientGrid<EltScalar>,
) -> Result<bool> {
    if x.is_quasi_zero() {
        return Err(Error::QuasiZeroInput);
    }
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    check_lengths(gens, x.len())?;
    // A summand of x has bottom wherever x does and never a larger tangible.
    let below = |y: &Vector<EltScalar>| {
        x.entries().iter().zip(y.entries()).all(|(a, b)| match (a, b) {
            (EltScalar::Bottom, b) => b.is_bottom(),
            (a, b) => b.cmp_tangible(a) != std::cmp::Ordering::Greater,
        })
    };
    let parts: Vec<Vector<EltScalar>> = grid_span_elements(gens, grid)
        .into_iter()
        .filter(|y| below(y) && !projectively_equivalent(x, y))
        .collect();
    for (i, a) in parts.iter().enumerate() {
        for b in &parts[i..] {
            if &a.add(b) == x {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The single non-bottom position of `v`, if `v` is a monomial with an invertible entry.
fn monomial_support(v: &Vector<EltScalar>) -> Option<usize> {
    let mut support = v.entries().iter().enumerate().filter(|(_, a)| !a.is_bottom());
    let (i, a) = support.next()?;
    if support.next().is_some() || a.is_quasi_zero() {
        return None;
    }
    Some(i)
}

/// The coordinate vector `[x]_B`.
///
/// Bases made of monomials with distinct supports (the generalized permutation
/// bases of `ℛ^n`) are read off exactly. Any other list is searched over the
/// grid, and a second distinct representation is reported as ambiguity.
pub fn coordinate_vector(
    x: &Vector<EltScalar>,
    basis: &[Vector<EltScalar>],
    grid: &CoefficientGrid<EltScalar>,
) -> Result<Vector<EltScalar>> {
    if basis.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    check_lengths(basis, x.len())?;
    let supports: Option<Vec<usize>> = basis.iter().map(monomial_support).collect();
    if let Some(supports) = supports {
        let distinct: HashSet<usize> = supports.iter().copied().collect();
        if distinct.len() == supports.len() {
            let covered = (0..x.len()).all(|i| distinct.contains(&i) || x.get(i).is_bottom());
            if !covered {
                return Err(Error::NotInSpan);
            }
            let coords = basis
                .iter()
                .zip(&supports)
                .map(|(b, &i)| {
                    let inv = b.get(i).inverse().expect("monomial entry is invertible");
                    x.get(i).mul(&inv)
                })
                .collect();
            return Ok(Vector(coords));
        }
    }
    let coeffs = grid.values();
    let mut found: Vec<Vec<EltScalar>> = Vec::new();
    for_each_combination(basis, coeffs, |choice, sum| {
        if sum == x {
            let c = coefficients_of(choice, coeffs);
            if !found.contains(&c) {
                found.push(c);
            }
            if found.len() > 1 {
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    });
    match found.len() {
        0 => Err(Error::NotInSpan),
        1 => Ok(Vector(found.pop().unwrap())),
        _ => Err(Error::AmbiguousRepresentation {
            first: Vector(found[0].clone()).to_string(),
            second: Vector(found[1].clone()).to_string(),
        }),
    }
}

/// `[I]_B^C`: the matrix whose columns are `[b_i]_C`.
pub fn transformation_matrix(
    b: &[Vector<EltScalar>],
    c: &[Vector<EltScalar>],
    grid: &CoefficientGrid<EltScalar>,
) -> Result<Matrix<EltScalar>> {
    let columns = b
        .iter()
        .map(|v| coordinate_vector(v, c, grid))
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_columns(&columns)
}
