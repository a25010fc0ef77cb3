//! Exact computer algebra for semirings with a negation map.
//!
//! The central scalar is the exploded layered tropical ([`EltScalar`]) number.
//! On top of it sit modules and matrices ([`linalg`]), lifts from Puiseux series
//! and free monoid rings ([`lift`]), Lie semialgebras given by structure constants
//! or matrices ([`lie_core`]), essential traces and Killing forms ([`cartan`]),
//! and free associative words ([`pbw`]).

pub mod cartan;
pub mod error;
pub mod lie_core;
pub mod lift;
pub mod linalg;
pub mod pbw;
pub mod scalar_core;

pub use error::{Error, ParseError, Result};
pub use scalar_core::{EltScalar, NegationSemiring, Rational};
