//! Exact computations with monomial ideals: Newton polyhedra, Rees
//! valuations, integral closures and adjoint (multiplier) ideals of powers,
//! plus constructive checks of subadditivity, Rees-valuation necessity,
//! Briançon–Skoda containment and projective equivalence.
//!
//! Everything runs on exponent vectors with exact integer and rational
//! arithmetic; there is no floating point anywhere.

pub mod closure_adjoint;
pub mod error;
pub mod exactgeom;
pub mod ideal;
pub mod polyhedron;
pub mod valuation;

pub use closure_adjoint::{
    adjoint, briancon_skoda_check, briancon_skoda_report, check_subadditivity,
    integral_closure, projective_equivalence, split_adjoint_factor, subadditivity_report,
    AdjointMethod, BrianconSkodaReport, EquivalenceResult, SubadditivityReport,
    SubadditivityWitness,
};
pub use error::{Error, Result};
pub use exactgeom::{hull_facets, lp_member, simplex_feasible, Facet, Rational};
pub use ideal::{Exponent, MonomialIdeal};
pub use polyhedron::NewtonPolyhedron;
pub use valuation::{
    check_rees_necessity, rees_valuations, MonomialValuation, NecessityWitness, ReesValuation,
};
