//! Signature-aware linear algebra for symmetric bilinear forms.

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::algebra::MetricLieAlgebra;
use super::subspace::Subspace;
use crate::error::{Error, Result};
use crate::matrix::{self, Matrix, Vector};
use crate::scalar::{self, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictedMetric {
    pub gram: Matrix,
    pub nondegenerate: bool,
    /// `(p_plus, p_minus)` when non-degenerate.
    pub signature: Option<(usize, usize)>,
}

/// Mutually orthogonal vectors with exact squared norms. Vectors are given
/// in the coordinates of the Gram matrix they were computed from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthogonalBasis {
    pub vectors: Vec<Vector>,
    pub norms: Vec<Scalar>,
}

impl OrthogonalBasis {
    pub fn signs(&self) -> Vec<i32> {
        self.norms.iter().map(scalar::sign).collect()
    }

    pub fn signature(&self) -> (usize, usize) {
        let plus = self.norms.iter().filter(|q| q.is_positive()).count();
        (plus, self.norms.len() - plus)
    }
}

/// Unit-normalized basis; the square roots make it approximate.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PseudoOrthonormalBasis {
    pub vectors: Vec<Vec<f64>>,
    pub signs: Vec<i32>,
    pub approximate: bool,
}

/// Gram matrix of `<,>` on the echelon basis of `s`.
pub fn gram(alg: &MetricLieAlgebra, s: &Subspace) -> Matrix {
    let b = s.basis();
    Matrix::from_fn(b.len(), b.len(), |i, j| alg.inner(&b[i], &b[j]))
}

pub fn restrict_metric(alg: &MetricLieAlgebra, s: &Subspace) -> RestrictedMetric {
    let gram = gram(alg, s);
    let nondegenerate = !gram.determinant().is_zero();
    let signature = if nondegenerate {
        orthogonal_basis(&gram).ok().map(|b| b.signature())
    } else {
        None
    };
    RestrictedMetric {
        gram,
        nondegenerate,
        signature,
    }
}

/// `S^perp` for the algebra's metric.
pub fn orthogonal_complement(alg: &MetricLieAlgebra, s: &Subspace) -> Subspace {
    let n = alg.dim();
    if s.is_zero() {
        return Subspace::full(n);
    }
    let rows: Vec<Vector> = s.basis().iter().map(|b| alg.metric().mul_vec(b)).collect();
    Subspace::kernel(&Matrix::from_rows(rows))
}

fn form(g: &Matrix, x: &[Scalar], y: &[Scalar]) -> Scalar {
    let gy = g.mul_vec(y);
    x.iter().zip(&gy).fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
}

/// Exact orthogonalization by symmetric pivoting.
///
/// Picks the diagonal entry of largest magnitude as pivot; when every
/// remaining diagonal entry vanishes, a hyperbolic pair `(v_i, v_j)` with
/// `B(v_i, v_j) != 0` is replaced by `v_i + v_j, v_i - v_j`.
pub fn orthogonal_basis(g: &Matrix) -> Result<OrthogonalBasis> {
    orthogonal_basis_with(g, PivotOrder::LargestFirst)
}

/// Pivot order for [`orthogonal_basis_with`]. Different orders give
/// different exact bases of the same form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PivotOrder {
    LargestFirst,
    /// first nonzero diagonal entry in the current ordering, scanning from the end
    LastFirst,
}

pub fn orthogonal_basis_with(g: &Matrix, order: PivotOrder) -> Result<OrthogonalBasis> {
    if !g.is_symmetric() {
        return Err(Error::InvalidAlgebra("Gram matrix is not symmetric".into()));
    }
    let n = g.nrows();
    let mut remaining: Vec<Vector> = (0..n).map(|i| matrix::unit(n, i)).collect();
    let mut vectors = Vec::with_capacity(n);
    let mut norms = Vec::with_capacity(n);

    let project_out = |rest: &mut Vec<Vector>, p: &Vector, qp: &Scalar| {
        for r in rest.iter_mut() {
            let c = form(g, r, p) / qp;
            if !c.is_zero() {
                *r = matrix::vsub(r, &matrix::vscale(p, &c));
            }
        }
    };

    while !remaining.is_empty() {
        let diag: Vec<Scalar> = remaining.iter().map(|r| form(g, r, r)).collect();
        let pick = match order {
            PivotOrder::LargestFirst => diag
                .iter()
                .enumerate()
                .filter(|(_, d)| !d.is_zero())
                .fold(None::<(usize, Scalar)>, |best, (i, d)| match best {
                    Some((_, ref b)) if d.abs() <= *b => best,
                    _ => Some((i, d.abs())),
                })
                .map(|(i, _)| i),
            PivotOrder::LastFirst => diag.iter().rposition(|d| !d.is_zero()),
        };
        if let Some(i) = pick {
            let p = remaining.remove(i);
            let qp = diag[i].clone();
            project_out(&mut remaining, &p, &qp);
            vectors.push(p);
            norms.push(qp);
            continue;
        }
        // all remaining vectors are isotropic: look for a hyperbolic pair
        let mut pair = None;
        'outer: for a in 0..remaining.len() {
            for b in a + 1..remaining.len() {
                if !form(g, &remaining[a], &remaining[b]).is_zero() {
                    pair = Some((a, b));
                    break 'outer;
                }
            }
        }
        let Some((a, b)) = pair else {
            return Err(Error::DegenerateMetric);
        };
        let vb = remaining.remove(b);
        let va = remaining.remove(a);
        let plus = matrix::vadd(&va, &vb);
        let minus = matrix::vsub(&va, &vb);
        for p in [plus, minus] {
            let qp = form(g, &p, &p);
            project_out(&mut remaining, &p, &qp);
            vectors.push(p);
            norms.push(qp);
        }
    }
    Ok(OrthogonalBasis { vectors, norms })
}

/// `(p_plus, p_minus)` of a non-degenerate symmetric matrix.
pub fn signature(g: &Matrix) -> Result<(usize, usize)> {
    Ok(orthogonal_basis(g)?.signature())
}

/// Orthonormal basis `<b_i, b_j> = signs_i delta_ij`. The only inexact step
/// is the final division by `sqrt(|q_i|)`.
pub fn pseudo_orthonormal_basis(g: &Matrix) -> Result<PseudoOrthonormalBasis> {
    let ob = orthogonal_basis(g)?;
    let vectors = ob
        .vectors
        .iter()
        .zip(&ob.norms)
        .map(|(v, q)| {
            let s = scalar::to_f64(q).abs().sqrt();
            v.iter().map(|x| scalar::to_f64(x) / s).collect()
        })
        .collect();
    Ok(PseudoOrthonormalBasis {
        vectors,
        signs: ob.signs(),
        approximate: true,
    })
}
