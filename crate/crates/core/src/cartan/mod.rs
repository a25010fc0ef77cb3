//! ELT characteristic polynomials, essential traces, Killing forms and a
//! harness that checks Cartan's criterion against grid-found abelian ideals.

mod charpoly;
mod killing;

pub use charpoly::{char_poly, essential_indices, essential_trace, is_elt_nilpotent, CharPoly, EssentialTrace};
pub use killing::{
    cartan_check, essential_killing, grid_vectors, killing, killing_form, probe_form_radical,
    CartanReport, KillingData, RadicalProbe,
};
