//! Solvers for the *minimum selective subset* (MSS) problem on vertex-colored
//! graphs.
//!
//! A subset `S` of the vertices is *selective* if every vertex `v` of color
//! `l` has a same-colored vertex among its nearest neighbors within
//! `S ∪ (V \ V_l)` under hop distance. The crate provides:
//!
//! - a colored-graph substrate with hop-distance queries ([`graph`]),
//! - decomposition into maximal monochromatic blocks and their boundary
//!   sets ([`blocks`]),
//! - definition-faithful validity checking and the boundary-cover
//!   characterization ([`validator`]),
//! - exact solvers (branch and bound plus an exhaustive oracle)
//!   ([`solvers`]),
//! - a (1+eps)-approximation built on local neighborhood expansion
//!   ([`ptas`]),
//! - a greedy covering baseline ([`greedy`]),
//! - geometric backends: unit disk graphs from points and circle graphs
//!   from chords, with seeded generators ([`geometry`]),
//! - dominating-set reductions as verifiable instance generators
//!   ([`reductions`]).
//!
//! With the default `parallel` feature, independent per-block solves and
//! batch runs use rayon; build with `--no-default-features` for a fully
//! sequential crate.

pub mod bitset;
pub mod blocks;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod greedy;
pub mod instance;
pub(crate) mod par;
pub mod ptas;
pub mod reductions;
pub mod solvers;
pub mod validator;

mod cover;

pub use error::Error;
pub use graph::ColoredGraph;
pub use instance::{Geometry, Instance};
pub use solvers::{Method, SolveResult};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
