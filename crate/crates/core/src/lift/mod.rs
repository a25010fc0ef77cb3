//! Lifts of negation semirings and modules: truncated Puiseux series with
//! EL-tropicalization, the monoid-ring lift `ℤ[A]`, the lift-law checker, and
//! dependence certificates obtained by solving upstairs.

mod dependence;
mod free;
mod laws;
mod puiseux;

pub use dependence::{certify_dependence, dependence_via_lift, DependenceCertificate};
pub use free::{free_lift_map, free_lift_mul, FreeLiftElement};
pub use laws::{
    module_lift_map, verify_lift_laws, FreeLift, LawFailure, LiftLaw, LiftMap, LiftReport,
    ParityLift, PuiseuxLift,
};
pub use puiseux::{el_tropicalize, PuiseuxSeries};
