use std::fmt;

use itertools::Itertools;

use super::Vector;
use crate::error::{Error, Result};
use crate::scalar_core::{sign, NegationSemiring};

/// Dense row-major matrix over a negation semiring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    entries: Vec<S>,
}

impl<S: NegationSemiring> Matrix<S> {
    pub fn new(rows: usize, cols: usize, entries: Vec<S>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Matrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|row| row.len() != c) {
            return Err(Error::DimensionMismatch(format!(
                "row {bad} has {} entries, expected {c}",
                rows[bad].len()
            )));
        }
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[Vector<S>]) -> Result<Self> {
        let c = columns.len();
        let r = columns.first().map_or(0, Vector::len);
        if columns.iter().any(|v| v.len() != r) {
            return Err(Error::DimensionMismatch("columns of unequal length".into()));
        }
        Ok(Matrix::from_fn(r, c, |i, j| columns[j].get(i).clone()))
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> S) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| S::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { S::one() } else { S::zero() })
    }

    /// Elementary matrix `e_{i,j}` (0-based) of size `n`.
    pub fn elementary(n: usize, i: usize, j: usize) -> Self {
        Matrix::from_fn(n, n, |a, b| {
            if (a, b) == (i, j) {
                S::one()
            } else {
                S::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: S) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> Vector<S> {
        Vector((0..self.cols).map(|j| self.get(i, j).clone()).collect())
    }

    pub fn column(&self, j: usize) -> Vector<S> {
        Vector((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn map<T: NegationSemiring>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if (self.rows, self.cols) == (other.rows, other.cols) {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(self.add(other))
    }

    /// Entrywise sum; panics on shape mismatch.
    pub fn add(&self, other: &Self) -> Self {
        assert!(
            self.rows == other.rows && self.cols == other.cols,
            "matrix shape mismatch"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map(|a| c.mul(a))
    }

    pub fn negate(&self) -> Self {
        self.map(S::negate)
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.add(&other.negate())
    }

    /// Semiring matrix product.
    pub fn mat_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(S::zero(), |acc, k| {
                acc.add(&self.get(i, k).mul(other.get(k, j)))
            })
        }))
    }

    pub fn mul_vector(&self, v: &Vector<S>) -> Result<Vector<S>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix applied to length {} vector",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok(Vector(
            (0..self.rows)
                .map(|i| {
                    (0..self.cols).fold(S::zero(), |acc, k| acc.add(&self.get(i, k).mul(v.get(k))))
                })
                .collect(),
        ))
    }

    /// `A^k` for square `A`, `k ≥ 0`.
    pub fn power(&self, k: u32) -> Result<Self> {
        self.require_square()?;
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..k {
            acc = acc.mat_mul(self)?;
        }
        Ok(acc)
    }

    pub fn trace(&self) -> Result<S> {
        self.require_square()?;
        Ok((0..self.rows).fold(S::zero(), |acc, i| acc.add(self.get(i, i))))
    }

    pub fn is_quasi_zero(&self) -> bool {
        self.entries.iter().all(S::is_quasi_zero)
    }

    pub fn surpasses(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(a, b)| a.surpasses(b))
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Permutation expansion `Σ_σ sgn(σ) Π A(i, σ(i))`, the sign realized as `one` or `⊖one`.
    pub fn determinant(&self) -> Result<S> {
        self.require_square()?;
        let n = self.rows;
        let mut total = S::zero();
        for perm in (0..n).permutations(n) {
            let mut term = sign::<S>(is_odd(&perm));
            for (i, &j) in perm.iter().enumerate() {
                term = term.mul(self.get(i, j));
                if term.is_zero() {
                    break;
                }
            }
            total = total.add(&term);
        }
        Ok(total)
    }
}

fn is_odd(perm: &[usize]) -> bool {
    let mut inversions = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}

impl<S: fmt::Display> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.entries[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl<S: fmt::Debug> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[S]> = self.entries.chunks(self.cols.max(1)).collect();
        f.debug_list().entries(rows).finish()
    }
}
