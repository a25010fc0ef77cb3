use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::scalar_core::{sum, EltScalar, NegationSemiring};

/// Full tensor `α_{i,j,ℓ}` with `[x_i, x_j] = Σ_ℓ α_{i,j,ℓ} x_ℓ`, indices 0-based.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StructureConstants {
    dim: usize,
    alpha: Vec<EltScalar>,
}

impl StructureConstants {
    /// All constants `0_R`.
    pub fn zero(dim: usize) -> Self {
        StructureConstants {
            dim,
            alpha: vec![EltScalar::Bottom; dim * dim * dim],
        }
    }

    pub fn from_fn(dim: usize, f: impl Fn(usize, usize, usize) -> EltScalar) -> Self {
        let mut alpha = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for l in 0..dim {
                    alpha.push(f(i, j, l));
                }
            }
        }
        StructureConstants { dim, alpha }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn index(&self, i: usize, j: usize, l: usize) -> usize {
        (i * self.dim + j) * self.dim + l
    }

    pub fn get(&self, i: usize, j: usize, l: usize) -> &EltScalar {
        &self.alpha[self.index(i, j, l)]
    }

    /// Sets one entry only.
    pub fn set(&mut self, i: usize, j: usize, l: usize, value: EltScalar) {
        let k = self.index(i, j, l);
        self.alpha[k] = value;
    }

    /// Sets `α_{i,j,ℓ} = a` and `α_{j,i,ℓ} = ⊖a`.
    pub fn set_antisymmetric(&mut self, i: usize, j: usize, l: usize, value: EltScalar) {
        self.set(j, i, l, value.negate());
        self.set(i, j, l, value);
    }

    /// `[x_i, x_j]` as a coordinate vector.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vector<EltScalar> {
        let start = self.index(i, j, 0);
        Vector(self.alpha[start..start + self.dim].to_vec())
    }

    /// `Σ_ℓ (α_{i,ℓ,m}α_{j,k,ℓ} + α_{k,ℓ,m}α_{i,j,ℓ} + α_{j,ℓ,m}α_{k,i,ℓ})`, the
    /// `m`-th coordinate of `[x_i,[x_j,x_k]] + [x_k,[x_i,x_j]] + [x_j,[x_k,x_i]]`.
    pub fn cyclic_sum(&self, i: usize, j: usize, k: usize, m: usize) -> EltScalar {
        let terms: Vec<EltScalar> = (0..self.dim)
            .flat_map(|l| {
                [
                    self.get(i, l, m).mul(self.get(j, k, l)),
                    self.get(k, l, m).mul(self.get(i, j, l)),
                    self.get(j, l, m).mul(self.get(k, i, l)),
                ]
            })
            .collect();
        sum(&terms)
    }
}

impl fmt::Debug for StructureConstants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_list();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for l in 0..self.dim {
                    let a = self.get(i, j, l);
                    if !a.is_bottom() {
                        list.entry(&format_args!("α({},{},{}) = {a}", i + 1, j + 1, l + 1));
                    }
                }
            }
        }
        list.finish()
    }
}

/// Cyclic sums `S_m` of one basis triple `i < j < k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicSums {
    pub triple: (usize, usize, usize),
    pub sums: Vec<EltScalar>,
}

/// Outcome of checking the axioms on basis elements. All indices are 0-based.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    /// `(i, j, ℓ)` with `α_{j,i,ℓ} ≠ ⊖α_{i,j,ℓ}`.
    pub antisymmetry: Vec<(usize, usize, usize)>,
    /// `(i, ℓ)` with `α_{i,i,ℓ}` not quasi-zero.
    pub alternating: Vec<(usize, usize)>,
    /// `(i, j, k, m)` whose Jacobi sum is not quasi-zero, with that sum.
    pub jacobi: Vec<((usize, usize, usize, usize), EltScalar)>,
    /// The cyclic sums of every triple of distinct indices in increasing order.
    pub cyclic_sums: Vec<CyclicSums>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.antisymmetry.is_empty() && self.alternating.is_empty() && self.jacobi.is_empty()
    }
}

/// Checks anticommutativity and alternation on the tensor and Jacobi's identity
/// on all basis triples. Jacobi is trilinear, so basis triples suffice.
pub fn verify_axioms(c: &StructureConstants) -> AxiomReport {
    let n = c.dim;
    let mut report = AxiomReport::default();
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                if *c.get(j, i, l) != c.get(i, j, l).negate() {
                    report.antisymmetry.push((i, j, l));
                }
            }
        }
        for l in 0..n {
            if !c.get(i, i, l).is_quasi_zero() {
                report.alternating.push((i, l));
            }
        }
    }
    report.jacobi = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            let mut bad = Vec::new();
            for j in 0..n {
                for k in 0..n {
                    for m in 0..n {
                        let s = c.cyclic_sum(i, j, k, m);
                        if !s.is_quasi_zero() {
                            bad.push(((i, j, k, m), s));
                        }
                    }
                }
            }
            bad
        })
        .collect();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                report.cyclic_sums.push(CyclicSums {
                    triple: (i, j, k),
                    sums: (0..n).map(|m| c.cyclic_sum(i, j, k, m)).collect(),
                });
            }
        }
    }
    report
}

/// A Lie semialgebra free on a labelled base, given by verified structure constants.
#[derive(Clone, Debug, PartialEq)]
pub struct FreeLieAlgebra {
    constants: StructureConstants,
    labels: Vec<String>,
}

impl FreeLieAlgebra {
    /// Verifies the axioms; on failure the error lists the first violations.
    pub fn new(constants: StructureConstants, labels: Vec<String>) -> Result<Self> {
        if labels.len() != constants.dim {
            return Err(Error::DimensionMismatch(format!(
                "{} labels for dimension {}",
                labels.len(),
                constants.dim
            )));
        }
        let report = verify_axioms(&constants);
        if !report.passed() {
            return Err(Error::InvalidConstants(describe_violations(&report)));
        }
        Ok(FreeLieAlgebra { constants, labels })
    }

    /// Labels `x1, …, xn`.
    pub fn with_default_labels(constants: StructureConstants) -> Result<Self> {
        let labels = (1..=constants.dim).map(|i| format!("x{i}")).collect();
        Self::new(constants, labels)
    }

    pub fn dim(&self) -> usize {
        self.constants.dim
    }

    pub fn constants(&self) -> &StructureConstants {
        &self.constants
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// The base vector `x_i` (0-based).
    pub fn basis(&self, i: usize) -> Vector<EltScalar> {
        Vector::unit(self.dim(), i)
    }

    pub fn basis_vectors(&self) -> Vec<Vector<EltScalar>> {
        (0..self.dim()).map(|i| self.basis(i)).collect()
    }

    fn check_len(&self, x: &Vector<EltScalar>) -> Result<()> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in a {}-dimensional algebra",
                x.len(),
                self.dim()
            )));
        }
        Ok(())
    }

    /// `[x, y]_ℓ = Σ_{i,j} x_i y_j α_{i,j,ℓ}`.
    pub fn bracket(&self, x: &Vector<EltScalar>, y: &Vector<EltScalar>) -> Result<Vector<EltScalar>> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &Vector<EltScalar>, y: &Vector<EltScalar>) -> Vector<EltScalar> {
        let n = self.dim();
        let mut out = vec![EltScalar::Bottom; n];
        for (i, xi) in x.entries().iter().enumerate() {
            if xi.is_bottom() {
                continue;
            }
            for (j, yj) in y.entries().iter().enumerate() {
                if yj.is_bottom() {
                    continue;
                }
                let c = xi.mul(yj);
                for (l, o) in out.iter_mut().enumerate() {
                    let a = self.constants.get(i, j, l);
                    if !a.is_bottom() {
                        *o = o.add(&c.mul(a));
                    }
                }
            }
        }
        Vector(out)
    }

    /// Matrix of `ad_x` in the base: column `j` is `[x, x_j]`.
    pub fn ad_matrix(&self, x: &Vector<EltScalar>) -> Result<Matrix<EltScalar>> {
        self.check_len(x)?;
        let columns: Vec<Vector<EltScalar>> = (0..self.dim())
            .map(|j| self.bracket_unchecked(x, &self.basis(j)))
            .collect();
        Matrix::from_columns(&columns)
    }

    /// The adjoint-algebra bracket `[ad_x, ad_y] = ad_{[x,y]}`.
    pub fn adjoint_bracket(&self, x: &Vector<EltScalar>, y: &Vector<EltScalar>) -> Result<Matrix<EltScalar>> {
        self.ad_matrix(&self.bracket(x, y)?)
    }

    /// `[x, x_j]` is quasi-zero for every base element, hence `[x, y]` for every `y`.
    pub fn in_center(&self, x: &Vector<EltScalar>) -> Result<bool> {
        self.check_len(x)?;
        Ok((0..self.dim()).all(|j| self.bracket_unchecked(x, &self.basis(j)).is_quasi_zero()))
    }

    /// Every bracket of base elements is quasi-zero.
    pub fn is_abelian(&self) -> bool {
        (0..self.dim()).all(|i| {
            (0..self.dim()).all(|j| self.constants.basis_bracket(i, j).is_quasi_zero())
        })
    }

    pub fn verify(&self) -> AxiomReport {
        verify_axioms(&self.constants)
    }

    /// `[e,f] = h`, `[h,e] = (0,2)e`, `[h,f] = (0,−2)f` on the base `e, f, h`.
    pub fn sl2_type() -> Self {
        let mut c = StructureConstants::zero(3);
        c.set_antisymmetric(0, 1, 2, EltScalar::one());
        c.set_antisymmetric(2, 0, 0, EltScalar::new(0, 2));
        c.set_antisymmetric(2, 1, 1, EltScalar::new(0, -2));
        FreeLieAlgebra::new(c, vec!["e".into(), "f".into(), "h".into()]).expect("valid constants")
    }

    /// The two-dimensional algebra with `[x_i, x_i] = (1,0)x_1 + (1,0)x_2` and
    /// `[x_1, x_2] = x_1 + x_2`.
    pub fn pbw_example() -> Self {
        let q = EltScalar::new(1, 0);
        construct_2dim(
            [q.clone(), q.clone()],
            [q.clone(), q],
            [EltScalar::one(), EltScalar::one()],
        )
        .expect("valid data")
    }
}

fn describe_violations(report: &AxiomReport) -> String {
    let mut parts = Vec::new();
    if let Some((i, j, l)) = report.antisymmetry.first() {
        parts.push(format!(
            "antisymmetry fails at (i,j,l) = ({},{},{})",
            i + 1,
            j + 1,
            l + 1
        ));
    }
    if let Some((i, l)) = report.alternating.first() {
        parts.push(format!(
            "alternating fails: α({},{},{}) is not quasi-zero",
            i + 1,
            i + 1,
            l + 1
        ));
    }
    if let Some(((i, j, k, m), s)) = report.jacobi.first() {
        parts.push(format!(
            "Jacobi fails at (i,j,k,m) = ({},{},{},{}) with sum {s}",
            i + 1,
            j + 1,
            k + 1,
            m + 1
        ));
    }
    parts.join("; ")
}

/// The algebra on `x_1, x_2` with `[x_1,x_1] = α_1x_1 + α_2x_2`,
/// `[x_2,x_2] = β_1x_1 + β_2x_2` and `[x_1,x_2] = ⊖[x_2,x_1] = γ_1x_1 + γ_2x_2`.
pub fn construct_2dim(
    alpha: [EltScalar; 2],
    beta: [EltScalar; 2],
    gamma: [EltScalar; 2],
) -> Result<FreeLieAlgebra> {
    if let Some(q) = alpha.iter().chain(&beta).find(|a| !a.is_quasi_zero()) {
        return Err(Error::Precondition(format!(
            "[x_i, x_i] coefficients must be quasi-zero, got {q}"
        )));
    }
    let mut c = StructureConstants::zero(2);
    for l in 0..2 {
        c.set(0, 0, l, alpha[l].clone());
        c.set(1, 1, l, beta[l].clone());
        c.set_antisymmetric(0, 1, l, gamma[l].clone());
    }
    FreeLieAlgebra::with_default_labels(c)
}

/// Accepts a 3-dimensional tensor when it is anticommutative, alternating, and
/// every cyclic sum `S_m` of `(1, 2, 3)` is quasi-zero.
pub fn construct_3dim(c: StructureConstants) -> Result<FreeLieAlgebra> {
    if c.dim != 3 {
        return Err(Error::InvalidSize(format!(
            "expected 3-dimensional constants, got {}",
            c.dim
        )));
    }
    let mut tensor_only = verify_axioms(&c);
    tensor_only.jacobi.clear();
    if !tensor_only.passed() {
        return Err(Error::InvalidConstants(describe_violations(&tensor_only)));
    }
    for m in 0..3 {
        let s = c.cyclic_sum(0, 1, 2, m);
        if !s.is_quasi_zero() {
            return Err(Error::CyclicSum {
                m: m + 1,
                value: s.to_string(),
            });
        }
    }
    FreeLieAlgebra::with_default_labels(c)
}
