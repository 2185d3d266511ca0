//! Exact crossing numbers of small multigraphs, and the machinery to scale
//! them through small edge cuts.
//!
//! A minimal edge cut of size at most three splits a graph into two factors
//! whose crossing numbers add up to the crossing number of the whole graph.
//! This crate provides the pieces around that fact: multigraph values,
//! planarity testing, an exact branch-and-bound solver with replayable
//! certificates, cut and bundle detection, zip products and their inverse,
//! a decomposition engine, crossing-critical graph tooling, and a
//! desk-scale minor crossing number search.
//!
//! The crate is `no_std` and only needs `alloc`. Wall-clock limits and
//! threads live in the companion `zipcross` crate; here a solver can be
//! stopped through the [`solver::Interrupt`] hook.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bundles;
pub mod canon;
pub mod critical;
pub mod cuts;
pub mod decompose;
pub mod families;
pub mod flow;
pub mod graph;
pub mod mcr;
pub mod planarity;
pub mod solver;
pub mod zip;

pub use canon::{canonical_key, CanonicalKey};
pub use graph::{Color, Edge, EdgeId, GraphError, MultiGraph, VertexId};
pub use planarity::{is_planar, KuratowskiWitness, Planarity};
pub use solver::{CrossingCertificate, Outcome, SolveResult, Solver, SolverConfig};
