use num_traits::Zero;

use crate::matrix::{self, Matrix, Vector};
use crate::scalar::Scalar;

/// A linear subspace of `Q^n`, stored as the nonzero rows of its reduced
/// row echelon form. Equal subspaces therefore compare equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(ambient: usize, vectors: &[Vector]) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient);
        }
        for v in vectors {
            assert_eq!(v.len(), ambient, "vector length does not match ambient dimension");
        }
        let (r, pivots) = Matrix::from_rows(vectors.to_vec()).rref();
        let basis = (0..pivots.len()).map(|i| r.row(i)).collect();
        Self {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: vec![],
            pivots: vec![],
        }
    }

    pub fn full(ambient: usize) -> Self {
        let basis: Vec<Vector> = (0..ambient).map(|i| matrix::unit(ambient, i)).collect();
        Self {
            ambient,
            basis,
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Self {
        let vs: Vec<Vector> = indices.iter().map(|&i| matrix::unit(ambient, i)).collect();
        Self::span(ambient, &vs)
    }

    /// Kernel of `m` acting on `Q^{m.ncols()}`.
    pub fn kernel(m: &Matrix) -> Self {
        Self::span(m.ncols(), &m.nullspace())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Echelon basis.
    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is not in
    /// the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        let coords: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let back = matrix::combine(&coords, &self.basis, self.ambient);
        (back.as_slice() == v).then_some(coords)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Self::span(self.ambient, &vs)
    }

    /// Annihilator under the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        if self.is_zero() {
            return Self::full(self.ambient);
        }
        Self::kernel(&Matrix::from_rows(self.basis.clone()))
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        self.annihilator().sum(&other.annihilator()).annihilator()
    }

    /// Image of the subspace under `m`.
    pub fn image(&self, m: &Matrix) -> Subspace {
        let vs: Vec<Vector> = self.basis.iter().map(|v| m.mul_vec(v)).collect();
        Self::span(m.nrows(), &vs)
    }

    /// Whether `m` maps the subspace into itself.
    pub fn is_invariant(&self, m: &Matrix) -> bool {
        self.basis.iter().all(|v| self.contains(&m.mul_vec(v)))
    }

    /// Matrix with the basis vectors as columns.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_columns(self.ambient, &self.basis)
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.basis.iter().map(|v| matrix::vec_to_strings(v)).collect()
    }

    /// Whether a vector is nonzero and outside the subspace.
    pub fn escapes(&self, v: &[Scalar]) -> bool {
        v.iter().any(|x| !x.is_zero()) && !self.contains(v)
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} in {}) {:?}", self.dim(), self.ambient, self.to_strings())
    }
}
