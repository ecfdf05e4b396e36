use num_traits::Zero;
use serde::Serialize;

use super::subspace::Subspace;
use crate::error::{Error, Result};
use crate::matrix::{self, Matrix, Vector};
use crate::scalar::Scalar;

/// A finite-dimensional real Lie algebra with rational structure constants
/// and a non-degenerate symmetric bilinear form.
///
/// `[x_i, x_j] = sum_k c[i][j][k] x_k` and `g[i][j] = <x_i, x_j>`.
#[derive(Clone, PartialEq, Eq)]
pub struct MetricLieAlgebra {
    names: Vec<String>,
    /// flattened `c[i][j][k]` at `(i * n + j) * n + k`
    structure: Vec<Scalar>,
    metric: Matrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub jacobi_ok: bool,
    /// Smallest `s` with `C^{s+1} = 0` in the lower central series.
    pub nilpotency_step: Option<usize>,
    pub solvable: bool,
}

impl MetricLieAlgebra {
    /// Checks antisymmetry, metric symmetry and non-degeneracy. Jacobi is
    /// not enforced here; see [`MetricLieAlgebra::validate`].
    pub fn new(names: Vec<String>, structure: Vec<Vec<Vec<Scalar>>>, metric: Matrix) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::InvalidAlgebra("dimension must be positive".into()));
        }
        if structure.len() != n || structure.iter().any(|r| r.len() != n || r.iter().any(|c| c.len() != n)) {
            return Err(Error::InvalidAlgebra("structure constants must be n x n x n".into()));
        }
        if metric.nrows() != n || metric.ncols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: metric.nrows(),
            });
        }
        let flat: Vec<Scalar> = structure.into_iter().flatten().flatten().collect();
        let alg = Self {
            names,
            structure: flat,
            metric,
        };
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if alg.c(i, j, k) != &-alg.c(j, i, k).clone() {
                        return Err(Error::InvalidAlgebra(format!(
                            "structure constants not antisymmetric at ({}, {}, {})",
                            i + 1,
                            j + 1,
                            k + 1
                        )));
                    }
                }
            }
        }
        if !alg.metric.is_symmetric() {
            return Err(Error::InvalidAlgebra("metric matrix is not symmetric".into()));
        }
        if alg.metric.determinant().is_zero() {
            return Err(Error::DegenerateMetric);
        }
        Ok(alg)
    }

    pub fn builder(names: &[&str]) -> AlgebraBuilder {
        AlgebraBuilder::new(names.iter().map(|s| s.to_string()).collect())
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.names
    }

    /// Index of a named basis vector.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|s| s == name)
    }

    /// Standard basis vector by name. Panics if the name is unknown.
    pub fn e(&self, name: &str) -> Vector {
        let i = self
            .index_of(name)
            .unwrap_or_else(|| panic!("no basis vector named {name}"));
        matrix::unit(self.dim(), i)
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &Scalar {
        let n = self.dim();
        &self.structure[(i * n + j) * n + k]
    }

    pub fn metric(&self) -> &Matrix {
        &self.metric
    }

    /// Same brackets, different metric.
    pub fn with_metric(&self, metric: Matrix) -> Result<Self> {
        let n = self.dim();
        let structure = (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| self.c(i, j, k).clone()).collect()).collect())
            .collect();
        Self::new(self.names.clone(), structure, metric)
    }

    fn check_len(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        Ok(())
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vector> {
        self.check_len(u)?;
        self.check_len(v)?;
        Ok(self.br(u, v))
    }

    pub(crate) fn br(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = matrix::zero_vec(n);
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let w = ui * vj;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        *o += &w * c;
                    }
                }
            }
        }
        out
    }

    /// `[x_i, x_j]`
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        let n = self.dim();
        (0..n).map(|k| self.c(i, j, k).clone()).collect()
    }

    /// Matrix of `ad_u = [u, .]`.
    pub fn ad(&self, u: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.br(u, &matrix::unit(n, j))).collect();
        Matrix::from_columns(n, &cols)
    }

    pub fn inner(&self, u: &[Scalar], v: &[Scalar]) -> Scalar {
        let gv = self.metric.mul_vec(v);
        u.iter().zip(&gv).fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn is_abelian(&self) -> bool {
        self.structure.iter().all(Zero::is_zero)
    }

    /// `[S, T]` as a subspace.
    pub fn bracket_span(&self, s: &Subspace, t: &Subspace) -> Subspace {
        let mut vs = Vec::new();
        for a in s.basis() {
            for b in t.basis() {
                vs.push(self.br(a, b));
            }
        }
        Subspace::span(self.dim(), &vs)
    }

    /// `[g, g]`
    pub fn derived_algebra(&self) -> Subspace {
        let full = Subspace::full(self.dim());
        self.bracket_span(&full, &full)
    }

    pub fn jacobi_holds(&self) -> bool {
        let n = self.dim();
        let e = |i| matrix::unit(n, i);
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let a = self.br(&self.br(&e(i), &e(j)), &e(k));
                    let b = self.br(&self.br(&e(j), &e(k)), &e(i));
                    let c = self.br(&self.br(&e(k), &e(i)), &e(j));
                    if !matrix::is_zero_vec(&matrix::vadd(&matrix::vadd(&a, &b), &c)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Terms `C^1 = g, C^2 = [g, g], C^{k+1} = [g, C^k]` until they stabilize.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let full = Subspace::full(self.dim());
        let mut series = vec![full.clone()];
        loop {
            let next = self.bracket_span(&full, series.last().unwrap());
            let done = next == *series.last().unwrap();
            if done {
                break;
            }
            let zero = next.is_zero();
            series.push(next);
            if zero {
                break;
            }
        }
        series
    }

    pub fn derived_series(&self) -> Vec<Subspace> {
        let mut series = vec![Subspace::full(self.dim())];
        loop {
            let last = series.last().unwrap();
            let next = self.bracket_span(last, last);
            if next == *last {
                break;
            }
            let zero = next.is_zero();
            series.push(next);
            if zero {
                break;
            }
        }
        series
    }

    pub fn nilpotency_step(&self) -> Option<usize> {
        let lcs = self.lower_central_series();
        lcs.last().unwrap().is_zero().then(|| lcs.len() - 1)
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().is_zero()
    }

    /// At most 2-step nilpotent (abelian included).
    pub fn is_two_step(&self) -> bool {
        matches!(self.nilpotency_step(), Some(s) if s <= 2)
    }

    pub fn validate(&self) -> ValidationReport {
        ValidationReport {
            jacobi_ok: self.jacobi_holds(),
            nilpotency_step: self.nilpotency_step(),
            solvable: self.is_solvable(),
        }
    }

    /// Kernel of `u -> ([u, x_1], ..., [u, x_n])`.
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        // row (j, k) of the stacked system: sum_i u_i c[i][j][k]
        let rows: Vec<Vector> = (0..n)
            .flat_map(|j| (0..n).map(move |k| (j, k)))
            .map(|(j, k)| (0..n).map(|i| self.c(i, j, k).clone()).collect())
            .collect();
        Subspace::kernel(&Matrix::from_rows(rows))
    }

    /// `<[u, v], w> + <v, [u, w]> = 0` on all basis triples.
    pub fn is_ad_invariant(&self) -> bool {
        let n = self.dim();
        (0..n).all(|u| {
            let ad = self.ad(&matrix::unit(n, u));
            // g * ad_u must be antisymmetric
            let gad = &ad.transpose() * &self.metric;
            (&gad + &gad.transpose()).is_zero()
        })
    }
}

impl std::fmt::Debug for MetricLieAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let n = self.dim();
        writeln!(f, "MetricLieAlgebra {:?}", self.names)?;
        for i in 0..n {
            for j in i + 1..n {
                let b = self.bracket_basis(i, j);
                if !matrix::is_zero_vec(&b) {
                    writeln!(f, "  [{}, {}] = {:?}", self.names[i], self.names[j], matrix::vec_to_strings(&b))?;
                }
            }
        }
        write!(f, "  metric {:?}", self.metric)
    }
}

/// Incremental construction with 0-based indices; brackets are entered for
/// one ordering and completed antisymmetrically, metric entries are
/// completed symmetrically.
#[derive(Debug, Clone)]
pub struct AlgebraBuilder {
    names: Vec<String>,
    structure: Vec<Vec<Vec<Scalar>>>,
    metric: Matrix,
}

impl AlgebraBuilder {
    pub fn new(names: Vec<String>) -> Self {
        let n = names.len();
        Self {
            structure: vec![vec![matrix::zero_vec(n); n]; n],
            metric: Matrix::zeros(n, n),
            names,
        }
    }

    /// Sets `[x_i, x_j] = v` (and `[x_j, x_i] = -v`).
    pub fn bracket(mut self, i: usize, j: usize, v: Vector) -> Self {
        self.structure[j][i] = v.iter().map(|x| -x.clone()).collect();
        self.structure[i][j] = v;
        self
    }

    /// Sets `[x_i, x_j] = sum coeff * x_k` by names.
    pub fn bracket_named(self, a: &str, b: &str, terms: &[(&str, Scalar)]) -> Self {
        let idx = |s: &str| self.names.iter().position(|x| x == s).unwrap_or_else(|| panic!("unknown basis name {s}"));
        let (i, j) = (idx(a), idx(b));
        let mut v = matrix::zero_vec(self.names.len());
        for (k, c) in terms {
            v[idx(k)] += c;
        }
        self.bracket(i, j, v)
    }

    pub fn metric_entry(mut self, i: usize, j: usize, value: Scalar) -> Self {
        self.metric[(i, j)] = value.clone();
        self.metric[(j, i)] = value;
        self
    }

    pub fn metric_named(self, a: &str, b: &str, value: Scalar) -> Self {
        let idx = |s: &str| self.names.iter().position(|x| x == s).unwrap_or_else(|| panic!("unknown basis name {s}"));
        let (i, j) = (idx(a), idx(b));
        self.metric_entry(i, j, value)
    }

    pub fn metric(mut self, metric: Matrix) -> Self {
        self.metric = metric;
        self
    }

    pub fn build(self) -> Result<MetricLieAlgebra> {
        MetricLieAlgebra::new(self.names, self.structure, self.metric)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, one, q};

    fn h3(metric: &[i64]) -> MetricLieAlgebra {
        MetricLieAlgebra::builder(&["e1", "e2", "e3"])
            .bracket_named("e1", "e2", &[("e3", one())])
            .metric(Matrix::diagonal(&metric.iter().map(|&x| int(x)).collect::<Vec<_>>()))
            .build()
            .unwrap()
    }

    #[test]
    fn heisenberg_bracket_and_center() {
        let a = h3(&[1, 1, 1]);
        assert_eq!(a.bracket(&a.e("e1"), &a.e("e2")).unwrap(), a.e("e3"));
        assert_eq!(a.center(), Subspace::coordinate(3, &[2]));
        let r = a.validate();
        assert_eq!(
            r,
            ValidationReport {
                jacobi_ok: true,
                nilpotency_step: Some(2),
                solvable: true
            }
        );
    }

    #[test]
    fn bracket_dimension_mismatch() {
        let a = h3(&[1, 1, 1]);
        assert_eq!(
            a.bracket(&[int(1)], &a.e("e1")),
            Err(Error::DimensionMismatch { expected: 3, found: 1 })
        );
    }

    #[test]
    fn rejects_bad_input() {
        let n = vec!["a".to_string(), "b".to_string()];
        let mut s = vec![vec![matrix::zero_vec(2); 2]; 2];
        s[0][1][0] = one();
        assert!(matches!(
            MetricLieAlgebra::new(n.clone(), s, Matrix::identity(2)),
            Err(Error::InvalidAlgebra(_))
        ));
        let s = vec![vec![matrix::zero_vec(2); 2]; 2];
        assert_eq!(
            MetricLieAlgebra::new(n.clone(), s.clone(), Matrix::from_i64(&[&[1, 1], &[1, 1]])),
            Err(Error::DegenerateMetric)
        );
        assert!(matches!(
            MetricLieAlgebra::new(n, s, Matrix::from_i64(&[&[1, 2], &[0, 1]])),
            Err(Error::InvalidAlgebra(_))
        ));
    }

    #[test]
    fn abelian_center_is_everything() {
        let a = MetricLieAlgebra::builder(&["a", "b", "c", "d"])
            .metric(Matrix::identity(4))
            .build()
            .unwrap();
        assert!(a.center().is_full());
        assert_eq!(a.nilpotency_step(), Some(1));
        assert!(a.is_ad_invariant());
    }

    #[test]
    fn ad_invariance_fails_for_lorentz_h3() {
        // <[e1,e2],e3> = 1 while <e2,[e1,e3]> = 0
        assert!(!h3(&[-1, 1, 1]).is_ad_invariant());
    }

    #[test]
    fn half_metric_entry() {
        let a = MetricLieAlgebra::builder(&["n0", "e3"])
            .metric_named("n0", "e3", q(1, 2))
            .build()
            .unwrap();
        assert_eq!(a.inner(&a.e("n0"), &a.e("e3")), q(1, 2));
        assert_eq!(a.inner(&a.e("e3"), &a.e("e3")), int(0));
    }
}
