//! Exact computation and verification of disjunctive domination numbers of
//! torus grid graphs `C_m x C_n`.
//!
//! * [`torus`]: dimensions, vertices, distances, spheres and vertex sets.
//! * [`domination`]: the 2DD-set check in definitional and linear form, and
//!   the counting weight function.
//! * [`constructions`]: explicit 2DD-sets and the folding map.
//! * [`sequence`]: column sequences, block decompositions and the column
//!   inequalities every 2DD-set satisfies.
//! * [`bounds`]: closed-form bounds and exact values.
//! * [`solver`]: brute force, column dynamic programming and branch and bound.

pub mod bounds;
pub mod constructions;
pub mod domination;
pub mod error;
pub mod sequence;
pub mod solver;
pub mod torus;

pub use error::{Error, Result};
pub use torus::{TorusDims, Vertex, VertexSet};
