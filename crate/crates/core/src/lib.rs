//! Exact and brute-force verification toolkit for the minimum-degree
//! stability threshold `4n^2/45` of generalized-triangle-free 3-graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`] holds the immutable [`ThreeGraph`] and [`Graph`] value types
//!   together with shadows, links, degrees, independence numbers and
//!   3-partitions.
//! * [`detect`] finds the forbidden configurations `F5` and `K4^{3-}`,
//!   cliques and graph homomorphisms, and audits the link facts that hold
//!   in cancellative 3-graphs.
//! * [`construct`] builds Turán 3-graphs, wheel blowups, the `Γ_d` family
//!   and the seven-part `F5`-free witness whose shadow contains `K4`.
//! * [`algebra`] provides exact arithmetic over `Q(√5)` and exact matrices,
//!   and certifies the circulant matrix identities.
//! * [`feasibility`] certifies infeasibility of the two quadratic constraint
//!   systems, checks the vertex-extendability parameters and audits the
//!   scalar inequality catalog.
//! * [`search`] contains desk-scale exhaustive oracles.
//!
//! Data-parallel loops go through [`par`], which uses rayon when the
//! `parallel` feature is enabled and plain iterators otherwise.

pub mod algebra;
pub mod construct;
pub mod detect;
pub mod error;
pub mod feasibility;
pub mod graph;
pub mod io;
pub mod par;
pub mod report;
pub mod search;

pub use error::{Error, Result};
pub use graph::{DegreeProfile, Graph, ThreeGraph, VertexSet, Witness, WitnessKind};
pub use report::{Check, CertificateReport};
