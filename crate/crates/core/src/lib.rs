//! Exact computations on metric Lie algebras and the pseudo-Riemannian
//! geometry of the corresponding simply connected Lie groups.

pub mod catalog;
pub mod checks;
pub mod cli;
pub mod error;
pub mod geodesics;
pub mod geometry;
pub mod io;
pub mod isometry;
pub mod liealg;
pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod spectral;

pub use error::{Error, Result};
pub use liealg::{MetricLieAlgebra, SplitAlgebra, Subspace};
pub use matrix::{LinearMap, Matrix, Vector};
pub use scalar::Scalar;
