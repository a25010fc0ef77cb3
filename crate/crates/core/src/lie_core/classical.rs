use std::fmt;
use std::str::FromStr;

use crate::error::{Error, ParseError, Result};
use crate::linalg::Matrix;
use crate::scalar_core::{EltScalar, NegationSemiring};

/// `AB ⊖ BA`.
pub fn negated_commutator(a: &Matrix<EltScalar>, b: &Matrix<EltScalar>) -> Result<Matrix<EltScalar>> {
    if !a.is_square() || a.rows() != b.rows() || a.cols() != b.cols() {
        return Err(Error::DimensionMismatch(format!(
            "negated commutator of {}x{} and {}x{} matrices",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    Ok(a.mat_mul(b)?.minus(&b.mat_mul(a)?))
}

/// Involutions on square matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Involution {
    /// `A* = Aᵗ`.
    Transpose,
    /// `[[A, B], [C, D]]* = [[Dᵗ, ⊖Bᵗ], [⊖Cᵗ, Aᵗ]]` on `2n × 2n` matrices.
    Symplectic,
}

impl Involution {
    pub fn apply(self, m: &Matrix<EltScalar>) -> Result<Matrix<EltScalar>> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        match self {
            Involution::Transpose => Ok(m.transpose()),
            Involution::Symplectic => {
                let size = m.rows();
                if size % 2 != 0 {
                    return Err(Error::InvalidSize(format!(
                        "symplectic involution needs even size, got {size}"
                    )));
                }
                let n = size / 2;
                Ok(Matrix::from_fn(size, size, |i, j| {
                    let (bi, bj) = (i / n, j / n);
                    let (r, c) = (i % n, j % n);
                    // Block (bi, bj) of the image is the transpose of block (1-bj, 1-bi).
                    let src = m.get((1 - bj) * n + c, (1 - bi) * n + r).clone();
                    if bi == bj {
                        src
                    } else {
                        src.negate()
                    }
                }))
            }
        }
    }

    /// `x* = ⊖x`.
    pub fn is_skew(self, m: &Matrix<EltScalar>) -> bool {
        self.apply(m).is_ok_and(|s| s == m.negate())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassicalKind {
    Gl,
    A,
    B,
    C,
    D,
}

impl FromStr for ClassicalKind {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "gl" => Ok(ClassicalKind::Gl),
            "A" | "a" => Ok(ClassicalKind::A),
            "B" | "b" => Ok(ClassicalKind::B),
            "C" | "c" => Ok(ClassicalKind::C),
            "D" | "d" => Ok(ClassicalKind::D),
            other => Err(ParseError::new(format!(
                "unknown classical family `{other}` (expected gl, A, B, C or D)"
            ))),
        }
    }
}

impl fmt::Display for ClassicalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ClassicalKind::Gl => "gl",
            ClassicalKind::A => "A",
            ClassicalKind::B => "B",
            ClassicalKind::C => "C",
            ClassicalKind::D => "D",
        };
        f.write_str(s)
    }
}

/// A matrix Lie semialgebra given by a generating list and a membership predicate.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassicalAlgebra {
    pub kind: ClassicalKind,
    pub n: usize,
    /// Matrix size.
    pub size: usize,
    pub generators: Vec<Matrix<EltScalar>>,
    /// Human-readable names of the generators, 1-based indices.
    pub labels: Vec<String>,
}

impl ClassicalAlgebra {
    pub fn involution(&self) -> Option<Involution> {
        match self.kind {
            ClassicalKind::B | ClassicalKind::D => Some(Involution::Transpose),
            ClassicalKind::C => Some(Involution::Symplectic),
            ClassicalKind::Gl | ClassicalKind::A => None,
        }
    }

    /// Membership: any matrix for `gl`, `s(tr A) = 0` for `A_n`, skew-symmetry under
    /// the involution for `B_n`, `C_n`, `D_n`.
    pub fn contains(&self, m: &Matrix<EltScalar>) -> bool {
        if m.rows() != self.size || m.cols() != self.size {
            return false;
        }
        match self.kind {
            ClassicalKind::Gl => true,
            ClassicalKind::A => m.trace().is_ok_and(|t| t.is_quasi_zero()),
            _ => self.involution().is_some_and(|inv| inv.is_skew(m)),
        }
    }
}

/// `e_{i,j}` with 0-based indices.
fn e(size: usize, i: usize, j: usize) -> Matrix<EltScalar> {
    Matrix::elementary(size, i, j)
}

/// The listed generating set of `gl(n)`, `A_n`, `B_n`, `C_n` or `D_n`.
///
/// `A_n` lives in `gl(n+1)` and uses every diagonal index `1, …, n+1`. The `C_n`
/// list is returned as written, so `e_{i,n+j} + e_{j,n+i}` appears for both
/// orders of `i ≠ j`.
pub fn classical_algebra(kind: ClassicalKind, n: usize) -> Result<ClassicalAlgebra> {
    if n == 0 {
        return Err(Error::InvalidSize("classical algebras need n ≥ 1".into()));
    }
    let zero_layer = EltScalar::new(0, 0);
    let mut generators = Vec::new();
    let mut labels = Vec::new();
    let size = match kind {
        ClassicalKind::Gl => n,
        ClassicalKind::A => n + 1,
        ClassicalKind::B => 2 * n + 1,
        ClassicalKind::C | ClassicalKind::D => 2 * n,
    };
    match kind {
        ClassicalKind::Gl => {
            for i in 0..size {
                for j in 0..size {
                    generators.push(e(size, i, j));
                    labels.push(format!("e{},{}", i + 1, j + 1));
                }
            }
        }
        ClassicalKind::A => {
            for i in 0..size {
                for j in 0..size {
                    if i != j {
                        generators.push(e(size, i, j));
                        labels.push(format!("e{},{}", i + 1, j + 1));
                    }
                }
            }
            for i in 0..size {
                for j in i + 1..size {
                    generators.push(e(size, i, i).minus(&e(size, j, j)));
                    labels.push(format!("e{},{} ⊖ e{},{}", i + 1, i + 1, j + 1, j + 1));
                }
            }
            for i in 0..size {
                generators.push(e(size, i, i).scale(&zero_layer));
                labels.push(format!("(0,0)e{},{}", i + 1, i + 1));
            }
        }
        ClassicalKind::B | ClassicalKind::D => {
            for i in 0..size {
                for j in i + 1..size {
                    generators.push(e(size, i, j).minus(&e(size, j, i)));
                    labels.push(format!("e{},{} ⊖ e{},{}", i + 1, j + 1, j + 1, i + 1));
                }
            }
            for i in 0..size {
                generators.push(e(size, i, i).scale(&zero_layer));
                labels.push(format!("(0,0)e{},{}", i + 1, i + 1));
            }
        }
        ClassicalKind::C => {
            for i in 0..n {
                for j in 0..n {
                    generators.push(e(size, i, j).minus(&e(size, n + j, n + i)));
                    labels.push(format!("e{},{} ⊖ e{},{}", i + 1, j + 1, n + j + 1, n + i + 1));
                }
            }
            for i in 0..n {
                for j in 0..n {
                    generators.push(e(size, i, n + j).add(&e(size, j, n + i)));
                    labels.push(format!("e{},{} + e{},{}", i + 1, n + j + 1, j + 1, n + i + 1));
                }
            }
            for i in 0..n {
                for j in 0..n {
                    generators.push(e(size, n + i, j).add(&e(size, n + j, i)));
                    labels.push(format!("e{},{} + e{},{}", n + i + 1, j + 1, n + j + 1, i + 1));
                }
            }
        }
    }
    Ok(ClassicalAlgebra {
        kind,
        n,
        size,
        generators,
        labels,
    })
}
