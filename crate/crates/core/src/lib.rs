//! Exact-arithmetic toolkit for strongly regular graphs.
//!
//! Everything here is computed over `Q` or a real quadratic extension
//! `Q(√d)`; no floating point anywhere. The crate provides:
//!
//! - [`exactnum`]: arbitrary-precision rationals and quadratic irrationals
//!   with exact sign decisions,
//! - [`graphs`]: bitset-backed simple graphs, the graph6 codec, and
//!   combinatorial verification of strong regularity,
//! - [`params`]: parameter algebra for `(n, k, lambda, mu)`: spectra,
//!   multiplicities, complements, cosines, Hoffman and ratio bounds,
//! - [`certs`]: exact matrix certificates (cosine matrices, projector
//!   identities, theta primal/dual pairs, LDL^T positive-semidefiniteness),
//! - [`solvers`]: exact maximum clique / coclique / chromatic number and
//!   Hoffman-coloring recognition and enumeration,
//! - [`homs`]: homomorphism search, classification, core and hull
//!   computation,
//! - [`classify`]: type A/B/C/X classification and Hasse-diagram output,
//! - [`fixtures`]: deterministic constructions of the standard small
//!   strongly regular graphs used throughout the test suite.

pub mod bitset;
pub mod certs;
pub mod classify;
pub mod exactnum;
pub mod fixtures;
pub mod graphs;
pub mod homs;
pub mod params;
pub mod solvers;

pub use bitset::BitSet;
pub use certs::{ExactMatrix, HomMatrix, PsdOutcome, ThetaCert};
pub use exactnum::{QuadNum, Rational};
pub use graphs::{Graph, SrgCheckReport};
pub use homs::{Hom, HomKind, HullGraph};
pub use params::{Cosines, Spectrum, SrgParams};
pub use solvers::{CliqueResult, ColoringResult};
