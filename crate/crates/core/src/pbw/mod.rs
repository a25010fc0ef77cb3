//! Free associative words over ELT scalars with the negated commutator, and
//! the two-dimensional Lie semialgebra that embeds in no associative algebra.

mod counterexample;
mod words;

pub use counterexample::{embed, enveloping_relation, pbw_counterexample, PbwReport, PbwStep};
pub use words::{free_commutator, verify_strong_jacobi_free, word_mul, FreeWordElement, FreeWords, Word};
