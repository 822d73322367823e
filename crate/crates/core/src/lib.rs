//! Grinberg-set lower bounds and exact Hamiltonian numbers for embedded
//! planar graphs.

pub mod bounds;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod graph;
pub mod grinberg;
pub mod reduction;
pub mod walks;

pub use error::{Error, Result};
pub use graph::{Dart, DistanceMatrix, Face, FaceSet, PlanarEmbedding};
pub use grinberg::{FaceLengthVector, GrinbergSet};
pub use walks::{ClosedWalk, WalkStats};
