use itertools::Itertools;
use rayon::prelude::*;

use super::charpoly::essential_trace;
use crate::lie_core::{certify_ideal, FreeLieAlgebra, IdealGenerators};
use crate::linalg::{CoefficientGrid, Matrix, Vector};
use crate::scalar_core::EltScalar;

/// `κ(x, y) = tr(ad_x ∘ ad_y)`.
pub fn killing(l: &FreeLieAlgebra, x: &Vector<EltScalar>, y: &Vector<EltScalar>) -> crate::Result<EltScalar> {
    l.ad_matrix(x)?.mat_mul(&l.ad_matrix(y)?)?.trace()
}

/// `κ^es(x, y) = etr(ad_x ∘ ad_y)`.
pub fn essential_killing(
    l: &FreeLieAlgebra,
    x: &Vector<EltScalar>,
    y: &Vector<EltScalar>,
) -> crate::Result<EltScalar> {
    Ok(essential_trace(&l.ad_matrix(x)?.mat_mul(&l.ad_matrix(y)?)?)?.value)
}

/// Gram matrices of `κ` and `κ^es` on the base.
#[derive(Clone, Debug, PartialEq)]
pub struct KillingData {
    pub gram: Matrix<EltScalar>,
    pub essential_gram: Matrix<EltScalar>,
}

pub fn killing_form(l: &FreeLieAlgebra) -> KillingData {
    let n = l.dim();
    let ads: Vec<Matrix<EltScalar>> = (0..n)
        .map(|i| l.ad_matrix(&l.basis(i)).expect("base vector"))
        .collect();
    let products: Vec<Matrix<EltScalar>> = (0..n * n)
        .map(|k| ads[k / n].mat_mul(&ads[k % n]).expect("square"))
        .collect();
    let gram = Matrix::from_fn(n, n, |i, j| products[i * n + j].trace().expect("square"));
    let essential_gram = Matrix::from_fn(n, n, |i, j| {
        essential_trace(&products[i * n + j]).expect("square").value
    });
    KillingData {
        gram,
        essential_gram,
    }
}

/// Every vector whose entries are bottom or grid values, in lexicographic order.
pub fn grid_vectors(n: usize, grid: &CoefficientGrid<EltScalar>) -> Vec<Vector<EltScalar>> {
    let mut values = vec![EltScalar::Bottom];
    values.extend(grid.values().iter().cloned());
    (0..n)
        .map(|_| values.iter().cloned())
        .multi_cartesian_product()
        .map(Vector)
        .collect()
}

/// Result of scanning grid vectors for members of `SRad κ` outside the zeroset.
#[derive(Clone, Debug, PartialEq)]
pub struct RadicalProbe {
    /// Non-quasi-zero `x` tried.
    pub probed: usize,
    /// Test vectors `y`: the base followed by the grid vectors.
    pub test_vectors: usize,
    /// First probed `x` with `s(κ^es(x, y)) = 0` for every test `y`.
    pub witness: Option<Vector<EltScalar>>,
}

impl RadicalProbe {
    pub fn degenerate(&self) -> bool {
        self.witness.is_some()
    }
}

/// One-sided: a witness certifies degeneracy, its absence is evidence only.
pub fn probe_form_radical(l: &FreeLieAlgebra, grid: &CoefficientGrid<EltScalar>) -> RadicalProbe {
    let candidates: Vec<Vector<EltScalar>> = grid_vectors(l.dim(), grid)
        .into_iter()
        .filter(|x| !x.is_quasi_zero())
        .collect();
    let mut tests = l.basis_vectors();
    tests.extend(grid_vectors(l.dim(), grid));
    let test_ads: Vec<Matrix<EltScalar>> = tests
        .iter()
        .map(|y| l.ad_matrix(y).expect("grid vector"))
        .collect();
    let witness = candidates
        .par_iter()
        .find_first(|x| {
            let ad_x = l.ad_matrix(x).expect("grid vector");
            test_ads.iter().all(|ad_y| {
                let m = ad_x.mat_mul(ad_y).expect("square");
                essential_trace(&m).expect("square").value.layer_is_zero()
            })
        })
        .cloned();
    RadicalProbe {
        probed: candidates.len(),
        test_vectors: tests.len(),
        witness,
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CartanReport {
    pub radical: RadicalProbe,
    /// Candidate generator sets examined.
    pub candidates: usize,
    /// A certified abelian ideal not contained in the zeroset.
    pub abelian_ideal: Option<IdealGenerators>,
}

impl CartanReport {
    /// Whether the probe found no radical witness, so the criterion applies.
    pub fn applicable(&self) -> bool {
        !self.radical.degenerate()
    }

    /// A non-degenerate form together with a non-zeroset abelian ideal would
    /// contradict the criterion.
    pub fn consistent(&self) -> bool {
        !(self.applicable() && self.abelian_ideal.is_some())
    }
}

fn is_abelian_span(l: &FreeLieAlgebra, gens: &[Vector<EltScalar>]) -> bool {
    gens.iter()
        .all(|x| gens.iter().all(|y| l.bracket(x, y).expect("same dimension").is_quasi_zero()))
}

/// Probes `SRad κ`, then searches spans of one or two grid vectors, at most
/// `ideal_samples` of them, for an abelian ideal outside the zeroset.
pub fn cartan_check(l: &FreeLieAlgebra, grid: &CoefficientGrid<EltScalar>, ideal_samples: usize) -> CartanReport {
    let radical = probe_form_radical(l, grid);
    let span_grid = grid.and_quasi_zeros();
    let vectors: Vec<Vector<EltScalar>> = grid_vectors(l.dim(), grid)
        .into_iter()
        .filter(|x| !x.is_quasi_zero())
        .collect();
    let singles = vectors.iter().map(|x| vec![x.clone()]);
    let pairs = vectors
        .iter()
        .tuple_combinations()
        .map(|(x, y)| vec![x.clone(), y.clone()]);
    let candidates: Vec<Vec<Vector<EltScalar>>> = singles.chain(pairs).take(ideal_samples).collect();
    let abelian_ideal = candidates
        .par_iter()
        .find_first(|gens| {
            if !is_abelian_span(l, gens) {
                return false;
            }
            let ideal = IdealGenerators::new(l.dim(), gens.to_vec()).expect("same dimension");
            certify_ideal(l, &ideal, &span_grid).is_ok()
        })
        .map(|gens| IdealGenerators::new(l.dim(), gens.clone()).expect("same dimension"));
    CartanReport {
        radical,
        candidates: candidates.len(),
        abelian_ideal,
    }
}
