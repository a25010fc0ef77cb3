//! Vectors, matrices and polynomials over negation semirings, the ELT
//! determinant, and grid-bounded oracles for dependence, spans and bases.

mod grid;
pub mod json;
mod matrix;
mod poly;
mod search;
mod vector;

pub use grid::{CoefficientGrid, GridSize};
pub use matrix::Matrix;
pub use poly::EltPolynomial;
pub use search::{
    coordinate_vector, dependence_witness, grid_span_elements, is_critical, is_dependent_det,
    is_dependent_grid, projectively_equivalent, projectively_equivalent_bases, span_membership_grid,
    span_witness, transformation_matrix,
};
pub use vector::{linear_combination, Vector};

use crate::scalar_core::EltScalar;

/// ELT determinant by permutation expansion with signs `(0, ±1)`.
pub fn elt_determinant(a: &Matrix<EltScalar>) -> crate::Result<EltScalar> {
    a.determinant()
}
