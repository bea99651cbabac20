//! Shuriken graphs `Shu^t_n(G)`: construction from base graphs and from
//! finite rings, exact invariant solvers, degree-based indices, and an
//! audit that checks the closed-form invariant formulas against exact
//! ground truth on the built graphs.

pub mod error;
pub mod graph;
pub mod indices;
pub mod ring;
pub mod shuriken;
pub mod solvers;
pub mod theorems;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use shuriken::{build, LabeledShuriken, ShurikenParams, ShurikenVertex};
