//! Lie semialgebras with a negation map.
//!
//! Free algebras are given by structure constants `α_{i,j,ℓ}` on a labelled base
//! (0-based in the API, 1-based in labels, reports and JSON). Matrix algebras use
//! the negated commutator `AB ⊖ BA`. Ideals and the derived and lower central
//! series are carried as generator lists.

mod algebra;
mod classical;
mod ideal;
mod jacobi;
pub mod json;

pub use algebra::{
    construct_2dim, construct_3dim, verify_axioms, AxiomReport, CyclicSums, FreeLieAlgebra,
    StructureConstants,
};
pub use classical::{
    classical_algebra, negated_commutator, ClassicalAlgebra, ClassicalKind, Involution,
};
pub use ideal::{
    bracket_of_spans, certify_ideal, derived_series, derived_series_of, is_nilpotent,
    is_solvable, is_solvable_ideal, lower_central_series, nilpotent_modulo, normalize_generator,
    solvable_modulo, IdealGenerators, Verdict, MAX_SERIES_GENERATORS,
};
pub use jacobi::{
    random_scalar, strong_jacobi_triple, verify_strong_jacobi, BracketProvider, GeneralLinear,
    JacobiFailure, StrongJacobiReport,
};
