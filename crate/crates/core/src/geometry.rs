//! Metric adjoints, j-maps, the Levi-Civita connection, curvature of
//! bi-invariant metrics, and the Ricci operator of 2-step algebras with
//! non-degenerate center.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::liealg::{gram, orthogonal_basis_with, MetricLieAlgebra, PivotOrder, SplitAlgebra};
use crate::matrix::{self, Matrix, Vector};
use crate::scalar::{q, Scalar};

fn check_len(alg: &MetricLieAlgebra, v: &[Scalar]) -> Result<()> {
    if v.len() == alg.dim() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: alg.dim(),
            found: v.len(),
        })
    }
}

fn metric_inverse(alg: &MetricLieAlgebra) -> Matrix {
    alg.metric().inverse().expect("metric is non-degenerate")
}

/// `ad*_u = g^{-1} ad_u^T g`, so that `<ad*_u w, v> = <w, [u, v]>`.
pub fn ad_star(alg: &MetricLieAlgebra, u: &[Scalar]) -> Result<Matrix> {
    check_len(alg, u)?;
    let g = alg.metric();
    Ok(&(&metric_inverse(alg) * &alg.ad(u).transpose()) * g)
}

/// j-maps `j(w): v -> v` for the center basis vectors, in the echelon
/// coordinates of `v` and `z` held by the split.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JFamily {
    split: SplitAlgebra,
    maps: Vec<Matrix>,
}

impl JFamily {
    pub fn split(&self) -> &SplitAlgebra {
        &self.split
    }

    /// `j(z_k)` for the echelon basis `z_k` of the center.
    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    /// `j(w)` for `w` given in center coordinates.
    pub fn j(&self, w_coords: &[Scalar]) -> Matrix {
        let m = self.split.m();
        self.maps
            .iter()
            .zip(w_coords)
            .filter(|(_, c)| !c.is_zero())
            .fold(Matrix::zeros(m, m), |acc, (jm, c)| &acc + &jm.scale(c))
    }

    /// `j(w)` for an ambient vector `w` of the center.
    pub fn j_of(&self, w: &[Scalar]) -> Result<Matrix> {
        check_len(self.split.algebra(), w)?;
        let c = self
            .split
            .center()
            .coordinates(w)
            .ok_or_else(|| Error::InvalidAlgebra("j(w) needs w in the center".into()))?;
        Ok(self.j(&c))
    }

    /// `j(w) u` for ambient `w` in `z` and `u` in `v`.
    pub fn apply(&self, w: &[Scalar], u: &[Scalar]) -> Result<Vector> {
        let jm = self.j_of(w)?;
        let uc = self
            .split
            .complement()
            .coordinates(u)
            .ok_or_else(|| Error::InvalidAlgebra("j(w)u needs u in v".into()))?;
        Ok(self.split.v_vector(&jm.mul_vec(&uc)))
    }
}

/// `j(w) u = ad*_u w` on `v = z^perp`.
pub fn j_family(split: &SplitAlgebra) -> Result<JFamily> {
    split.require_orthogonal("the j-maps")?;
    let alg = split.algebra();
    let vb = split.complement().basis();
    let maps = split
        .center()
        .basis()
        .iter()
        .map(|w| {
            let cols: Vec<Vector> = vb
                .iter()
                .map(|u| {
                    let image = ad_star(alg, u).expect("length checked").mul_vec(w);
                    split
                        .complement()
                        .coordinates(&image)
                        .expect("ad*_u w lies in z^perp")
                })
                .collect();
            Matrix::from_columns(vb.len(), &cols)
        })
        .collect();
    Ok(JFamily {
        split: split.clone(),
        maps,
    })
}

/// `2 nabla_u w = [u, w] - ad*_u w - ad*_w u`.
pub fn levi_civita(alg: &MetricLieAlgebra, u: &[Scalar], w: &[Scalar]) -> Result<Vector> {
    check_len(alg, u)?;
    check_len(alg, w)?;
    let ginv = metric_inverse(alg);
    let g = alg.metric();
    let star = |a: &[Scalar], b: &[Scalar]| (&ginv * &alg.ad(a).transpose()).mul_vec(&g.mul_vec(b));
    let sum = matrix::vsub(&matrix::vsub(&alg.br(u, w), &star(u, w)), &star(w, u));
    Ok(matrix::vscale(&sum, &q(1, 2)))
}

/// Connection of a 2-step algebra with `v = z^perp` by cases:
/// `1/2 [u, w]` on `v x v`, `-1/2 j(w) u` on `v x z` and `z x v`, zero on `z x z`.
pub fn connection_by_cases(jf: &JFamily, u: &[Scalar], w: &[Scalar]) -> Result<Vector> {
    let split = jf.split();
    let alg = split.algebra();
    check_len(alg, u)?;
    check_len(alg, w)?;
    let (uv, uz) = split.decompose(u);
    let (wv, wz) = split.decompose(w);
    let (uv, uz) = (split.v_vector(&uv), split.z_vector(&uz));
    let (wv, wz) = (split.v_vector(&wv), split.z_vector(&wz));
    let half = q(1, 2);
    let vv = matrix::vscale(&alg.br(&uv, &wv), &half);
    let vz = matrix::vscale(&jf.apply(&wz, &uv)?, &-half.clone());
    let zv = matrix::vscale(&jf.apply(&uz, &wv)?, &-half);
    Ok(matrix::vadd(&matrix::vadd(&vv, &vz), &zv))
}

/// [`levi_civita`] on a split algebra; in debug builds the result is
/// compared with [`connection_by_cases`] when that applies.
pub fn levi_civita_split(split: &SplitAlgebra, u: &[Scalar], w: &[Scalar]) -> Result<Vector> {
    let value = levi_civita(split.algebra(), u, w)?;
    if cfg!(debug_assertions) && split.is_orthogonal() && split.algebra().is_two_step() {
        let jf = j_family(split)?;
        debug_assert_eq!(value, connection_by_cases(&jf, u, w)?);
    }
    Ok(value)
}

/// `R(u, w) = -1/4 ad([u, w])` for an ad-invariant metric.
pub fn curvature_biinvariant(alg: &MetricLieAlgebra, u: &[Scalar], w: &[Scalar]) -> Result<Matrix> {
    check_len(alg, u)?;
    check_len(alg, w)?;
    if !alg.is_ad_invariant() {
        return Err(Error::NotBiInvariant("the curvature formula R(u,w) = -1/4 ad([u,w])"));
    }
    Ok(alg.ad(&alg.br(u, w)).scale(&q(-1, 4)))
}

/// Ricci operator `Rc`, form `Ric(u, w) = <Rc u, w>` (matrix `Rc^T g`) and
/// scalar curvature `tr Rc`, all in the standard basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RicciData {
    pub operator: Matrix,
    pub form: Matrix,
    pub scalar: Scalar,
    /// `Rc` restricted to `v`, in the echelon coordinates of `v`
    pub v_block: Matrix,
    /// `Rc` restricted to `z`, in the echelon coordinates of `z`
    pub z_block: Matrix,
}

pub fn ricci(split: &SplitAlgebra) -> Result<RicciData> {
    ricci_with(split, PivotOrder::LargestFirst)
}

/// `Rc|v = 1/2 sum_k j(c_k)^2 / q_k` over an exact orthogonal basis `c_k`
/// of `z` with `<c_k, c_k> = q_k`, and `Rc|z = Gz^{-1} F` with
/// `F_ab = -1/4 tr(j(z_a) j(z_b))`.
pub fn ricci_with(split: &SplitAlgebra, order: PivotOrder) -> Result<RicciData> {
    split.require_orthogonal("the Ricci operator")?;
    let alg = split.algebra();
    if !alg.is_two_step() {
        return Err(Error::NotTwoStep("the Ricci operator"));
    }
    let jf = j_family(split)?;
    let (m, p) = (split.m(), split.p());
    let gz = gram(alg, split.center());
    let ob = orthogonal_basis_with(&gz, order)?;

    let mut v_block = Matrix::zeros(m, m);
    for (c, qk) in ob.vectors.iter().zip(&ob.norms) {
        let jc = jf.j(c);
        v_block = &v_block + &(&jc * &jc).scale(&(q(1, 2) / qk));
    }
    let f = Matrix::from_fn(p, p, |a, b| (&jf.maps()[a] * &jf.maps()[b]).trace() * q(-1, 4));
    let z_block = &gz.inverse().expect("center is non-degenerate") * &f;

    let mut adapted = Matrix::zeros(m + p, m + p);
    for i in 0..m {
        for j in 0..m {
            adapted[(i, j)] = v_block[(i, j)].clone();
        }
    }
    for i in 0..p {
        for j in 0..p {
            adapted[(m + i, m + j)] = z_block[(i, j)].clone();
        }
    }
    let basis = split.adapted_basis();
    let operator = &(&basis * &adapted) * &basis.inverse().expect("v + z spans the algebra");
    let form = &operator.transpose() * alg.metric();
    let scalar = operator.trace();
    Ok(RicciData {
        operator,
        form,
        scalar,
        v_block,
        z_block,
    })
}
