use super::algebra::MetricLieAlgebra;
use super::metric::{orthogonal_complement, restrict_metric};
use super::subspace::Subspace;
use crate::error::{Error, Result};
use crate::matrix::{self, Matrix, Vector};
use crate::scalar::Scalar;

/// A metric Lie algebra together with its center `z` and a vector-space
/// complement `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitAlgebra {
    algebra: MetricLieAlgebra,
    center: Subspace,
    complement: Subspace,
    orthogonal: bool,
    center_nondegenerate: bool,
}

impl SplitAlgebra {
    /// `v = z^perp`. Fails when the center is degenerate.
    pub fn orthogonal(alg: &MetricLieAlgebra) -> Result<Self> {
        let center = alg.center();
        if !restrict_metric(alg, &center).nondegenerate {
            return Err(Error::DegenerateCenter("the orthogonal splitting n = v + z"));
        }
        let complement = orthogonal_complement(alg, &center);
        Ok(Self {
            algebra: alg.clone(),
            center,
            complement,
            orthogonal: true,
            center_nondegenerate: true,
        })
    }

    /// Arbitrary complement of the center.
    pub fn with_complement(alg: &MetricLieAlgebra, complement: Subspace) -> Result<Self> {
        let center = alg.center();
        if complement.ambient_dim() != alg.dim() {
            return Err(Error::DimensionMismatch {
                expected: alg.dim(),
                found: complement.ambient_dim(),
            });
        }
        if complement.dim() + center.dim() != alg.dim() || !complement.intersection(&center).is_zero() {
            return Err(Error::NotComplement);
        }
        let center_nondegenerate = restrict_metric(alg, &center).nondegenerate;
        let orthogonal = center_nondegenerate && orthogonal_complement(alg, &center) == complement;
        Ok(Self {
            algebra: alg.clone(),
            center,
            complement,
            orthogonal,
            center_nondegenerate,
        })
    }

    pub fn algebra(&self) -> &MetricLieAlgebra {
        &self.algebra
    }

    pub fn center(&self) -> &Subspace {
        &self.center
    }

    pub fn complement(&self) -> &Subspace {
        &self.complement
    }

    /// Non-degenerate center with `v = z^perp`.
    pub fn is_orthogonal(&self) -> bool {
        self.orthogonal
    }

    pub fn center_nondegenerate(&self) -> bool {
        self.center_nondegenerate
    }

    /// `dim v`
    pub fn m(&self) -> usize {
        self.complement.dim()
    }

    /// `dim z`
    pub fn p(&self) -> usize {
        self.center.dim()
    }

    /// Columns: echelon basis of `v`, then of `z`.
    pub fn adapted_basis(&self) -> Matrix {
        let mut cols: Vec<Vector> = self.complement.basis().to_vec();
        cols.extend(self.center.basis().iter().cloned());
        Matrix::from_columns(self.algebra.dim(), &cols)
    }

    /// Splits `x = v + z`, returning coordinates in the `v` and `z` bases.
    pub fn decompose(&self, x: &[Scalar]) -> (Vector, Vector) {
        let c = self
            .adapted_basis()
            .solve(x)
            .expect("v + z spans the algebra");
        let (a, b) = c.split_at(self.m());
        (a.to_vec(), b.to_vec())
    }

    pub fn v_vector(&self, coords: &[Scalar]) -> Vector {
        matrix::combine(coords, self.complement.basis(), self.algebra.dim())
    }

    pub fn z_vector(&self, coords: &[Scalar]) -> Vector {
        matrix::combine(coords, self.center.basis(), self.algebra.dim())
    }

    pub(crate) fn require_orthogonal(&self, what: &'static str) -> Result<()> {
        if !self.center_nondegenerate {
            return Err(Error::DegenerateCenter(what));
        }
        if !self.orthogonal {
            return Err(Error::NonOrthogonalComplement(what));
        }
        Ok(())
    }
}

/// Orthogonal splitting `v = z^perp`.
pub fn split(alg: &MetricLieAlgebra) -> Result<SplitAlgebra> {
    SplitAlgebra::orthogonal(alg)
}

/// Splitting with a caller-chosen complement of the center.
pub fn split_with(alg: &MetricLieAlgebra, complement: Subspace) -> Result<SplitAlgebra> {
    SplitAlgebra::with_complement(alg, complement)
}
