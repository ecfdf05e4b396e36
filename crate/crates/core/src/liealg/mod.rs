//! Metric Lie algebras over `Q`: brackets, structural validation, centers,
//! subspaces and the splitting `n = v + z`.

mod algebra;
mod metric;
mod split;
mod subspace;

pub use algebra::{AlgebraBuilder, MetricLieAlgebra, ValidationReport};
pub use metric::{
    gram, orthogonal_basis, orthogonal_basis_with, orthogonal_complement, pseudo_orthonormal_basis,
    restrict_metric, signature, OrthogonalBasis, PivotOrder, PseudoOrthonormalBasis, RestrictedMetric,
};
pub use split::{split, split_with, SplitAlgebra};
pub use subspace::Subspace;
