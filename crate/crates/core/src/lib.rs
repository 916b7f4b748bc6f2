//! Energy of vertex-disjoint bicyclic signed digraphs.
//!
//! The crate pairs trigonometric closed forms for cycle energies with an
//! independent spectral oracle (exact characteristic polynomials plus a
//! simultaneous-iteration root finder), and uses both to audit energy
//! orderings and extremal configurations by exhaustive enumeration.

pub mod analysis;
pub mod cli;
pub mod closed_form;
pub mod error;
pub mod graph;
pub mod numeric;
pub mod ordering;
pub mod report;
pub mod spectra;

pub use error::{Error, Result};
pub use graph::{
    build_adjacency, build_adjacency_placed, enumerate_class, strong_components, BicyclicConfig,
    ComponentList, CycleSpec, Sign, SignedDigraph,
};
