//! Lattice polytopes `Q_P` built from finite posets.
//!
//! For a finite poset `P`, every edge of the Hasse diagram of `P` with a fresh
//! bottom and top adjoined gives one lattice vector; `Q_P` is their convex hull.
//! These polytopes are always terminal Gorenstein Fano polytopes. This crate
//! builds them, decides whether they are simplicial (equivalently smooth) from
//! the poset alone, cross-checks every answer against an exact facet
//! enumeration, and counts posets up to isomorphism and duality.

pub mod canonical;
pub mod classify;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod geometry;
pub mod linalg;
pub mod polytope;
pub mod poset;
pub mod rational;
pub mod walk;
pub mod witness;

pub use canonical::CanonicalKey;
pub use classify::{
    classify, classify_geometric, classify_with, ClassificationReport, ClassifyOptions, Method,
    Witness,
};
pub use error::{Error, Result};
pub use geometry::{enumerate_facets, Facet, Hull};
pub use polytope::{maximal_chain_vector_sum, rho, LatticeVector, PolytopeVertexSet};
pub use poset::{HatPoset, Poset};
pub use rational::Rational;
pub use walk::{enumerate_cycles, enumerate_special_paths, MuLabeling, Step, Walk, WalkKind};
pub use witness::witness_hyperplane;
