//! Coordinate-level checks: metrics on `R^n` charts, explicit diffeomorphisms
//! and pullback comparisons, all in `f64`.

use std::fmt;
use std::sync::Arc;

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};

/// Step of the centered finite-difference Jacobian.
pub const FD_STEP: f64 = 1e-6;
/// Pullback tolerance when the Jacobian comes from finite differences.
pub const FD_TOLERANCE: f64 = 1e-6;
/// Pullback tolerance for closed-form Jacobians.
pub const CLOSED_FORM_TOLERANCE: f64 = 1e-10;

type MetricFn = Arc<dyn Fn(&[f64]) -> DMatrix<f64> + Send + Sync>;
type PointFn = Arc<dyn Fn(&[f64]) -> Vec<f64> + Send + Sync>;
type JacobianFn = Arc<dyn Fn(&[f64]) -> DMatrix<f64> + Send + Sync>;

/// `R^n` with a metric given by its coefficient matrix at each point.
#[derive(Clone)]
pub struct CoordinateChart {
    name: String,
    dim: usize,
    metric: MetricFn,
}

impl CoordinateChart {
    pub fn new(
        name: impl Into<String>,
        dim: usize,
        metric: impl Fn(&[f64]) -> DMatrix<f64> + Send + Sync + 'static,
    ) -> Self {
        Self {
            name: name.into(),
            dim,
            metric: Arc::new(metric),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn metric_at(&self, p: &[f64]) -> DMatrix<f64> {
        (self.metric)(p)
    }
}

impl fmt::Debug for CoordinateChart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoordinateChart")
            .field("name", &self.name)
            .field("dim", &self.dim)
            .finish()
    }
}

/// A map `R^n -> R^n`, optionally with a closed-form Jacobian.
#[derive(Clone)]
pub struct SmoothMap {
    name: String,
    dim: usize,
    apply: PointFn,
    jacobian: Option<JacobianFn>,
}

impl SmoothMap {
    pub fn new(
        name: impl Into<String>,
        dim: usize,
        apply: impl Fn(&[f64]) -> Vec<f64> + Send + Sync + 'static,
    ) -> Self {
        Self {
            name: name.into(),
            dim,
            apply: Arc::new(apply),
            jacobian: None,
        }
    }

    pub fn with_jacobian(
        mut self,
        jacobian: impl Fn(&[f64]) -> DMatrix<f64> + Send + Sync + 'static,
    ) -> Self {
        self.jacobian = Some(Arc::new(jacobian));
        self
    }

    pub fn identity(dim: usize) -> Self {
        Self::new("id", dim, |p| p.to_vec()).with_jacobian(move |_| DMatrix::identity(dim, dim))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn apply(&self, p: &[f64]) -> Vec<f64> {
        (self.apply)(p)
    }

    pub fn has_closed_form_jacobian(&self) -> bool {
        self.jacobian.is_some()
    }

    pub fn jacobian_at(&self, p: &[f64]) -> DMatrix<f64> {
        match &self.jacobian {
            Some(j) => j(p),
            None => self.finite_difference_jacobian(p),
        }
    }

    /// Centered differences with step [`FD_STEP`].
    pub fn finite_difference_jacobian(&self, p: &[f64]) -> DMatrix<f64> {
        let n = self.dim;
        let mut jac = DMatrix::zeros(n, n);
        let mut x = p.to_vec();
        for j in 0..n {
            x[j] = p[j] + FD_STEP;
            let fp = self.apply(&x);
            x[j] = p[j] - FD_STEP;
            let fm = self.apply(&x);
            x[j] = p[j];
            for i in 0..n {
                jac[(i, j)] = (fp[i] - fm[i]) / (2.0 * FD_STEP);
            }
        }
        jac
    }
}

impl fmt::Debug for SmoothMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SmoothMap")
            .field("name", &self.name)
            .field("dim", &self.dim)
            .field("closed_form_jacobian", &self.jacobian.is_some())
            .finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PullbackReport {
    pub ok: bool,
    pub max_defect: f64,
    pub tolerance: f64,
}

/// Max entry of `J^T g(f(p)) J - g(p)` over the sample points.
pub fn pullback_isometry_check(
    chart: &CoordinateChart,
    f: &SmoothMap,
    points: &[Vec<f64>],
) -> Result<PullbackReport> {
    if chart.dim() != f.dim() {
        return Err(Error::DimensionMismatch {
            expected: chart.dim(),
            found: f.dim(),
        });
    }
    let tolerance = if f.has_closed_form_jacobian() {
        CLOSED_FORM_TOLERANCE
    } else {
        FD_TOLERANCE
    };
    let mut max_defect = 0.0f64;
    for p in points {
        if p.len() != chart.dim() {
            return Err(Error::DimensionMismatch {
                expected: chart.dim(),
                found: p.len(),
            });
        }
        let j = f.jacobian_at(p);
        let pulled = j.transpose() * chart.metric_at(&f.apply(p)) * &j;
        let defect = (pulled - chart.metric_at(p)).amax();
        max_defect = max_defect.max(defect);
    }
    Ok(PullbackReport {
        ok: max_defect <= tolerance,
        max_defect,
        tolerance,
    })
}

/// `f o g`, with Jacobian `Jf(g(p)) Jg(p)`. The composite has a closed-form
/// Jacobian only when both factors do.
pub fn compose_maps(f: &SmoothMap, g: &SmoothMap) -> Result<SmoothMap> {
    if f.dim() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: f.dim(),
            found: g.dim(),
        });
    }
    let name = format!("{} o {}", f.name(), g.name());
    let (fa, ga) = (f.clone(), g.clone());
    let composite = SmoothMap::new(name, f.dim(), move |p| fa.apply(&ga.apply(p)));
    if f.has_closed_form_jacobian() && g.has_closed_form_jacobian() {
        let (fj, gj) = (f.clone(), g.clone());
        Ok(composite.with_jacobian(move |p| fj.jacobian_at(&gj.apply(p)) * gj.jacobian_at(p)))
    } else {
        Ok(composite)
    }
}

/// Max absolute pointwise difference of two maps over the samples.
pub fn max_pointwise_difference(f: &SmoothMap, g: &SmoothMap, points: &[Vec<f64>]) -> f64 {
    points
        .iter()
        .flat_map(|p| {
            let (a, b) = (f.apply(p), g.apply(p));
            a.into_iter().zip(b).map(|(x, y)| (x - y).abs()).collect::<Vec<_>>()
        })
        .fold(0.0, f64::max)
}

/// `n` points with coordinates uniform in `[-scale, scale]`, reproducible
/// from `seed`.
pub fn sample_points(seed: u64, n: usize, dim: usize, scale: f64) -> Vec<Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| (0..dim).map(|_| rng.gen_range(-scale..=scale)).collect())
        .collect()
}
