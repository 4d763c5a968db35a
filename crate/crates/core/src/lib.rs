//! Certified spectral sufficient conditions for Hamiltonian cycles and paths.
//!
//! The crate builds the extremal graph families, computes spectral radii with
//! exact rational bounds, applies the spectral theorems, and checks every
//! verdict against an exact Hamiltonicity oracle on small graphs.

pub mod certifier;
pub mod closure;
pub mod graph;
pub mod oracle;
pub mod report;
pub mod spectral;
pub mod suite;
pub mod tightness;

pub use graph::{ExtremalSpec, Family, Graph, GraphError, Partition};
