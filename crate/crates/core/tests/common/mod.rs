#![allow(dead_code)]

use nilgeom::catalog;
use nilgeom::geometry::{j_family, levi_civita, ricci};
use nilgeom::liealg::{split, SplitAlgebra};
use nilgeom::matrix::{self, vadd, vsub};
use nilgeom::scalar::q;
use nilgeom::{Matrix, MetricLieAlgebra, Scalar, Vector};
use ode_solvers::{DVector, Dopri5, OutputType, System};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const PROPERTY_SAMPLES: usize = 100;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rational(rng: &mut impl Rng) -> Scalar {
    q(rng.gen_range(-12..=12), rng.gen_range(1..=7))
}

pub fn vector(rng: &mut impl Rng, n: usize) -> Vector {
    (0..n).map(|_| rational(rng)).collect()
}

/// Random element of a subspace, as an ambient vector.
pub fn element(rng: &mut impl Rng, basis: &[Vector], n: usize) -> Vector {
    let c = vector(rng, basis.len());
    matrix::combine(&c, basis, n)
}

pub fn all_algebras() -> Vec<(&'static str, MetricLieAlgebra)> {
    catalog::ALGEBRA_NAMES
        .iter()
        .map(|n| (*n, catalog::algebra(n).unwrap()))
        .collect()
}

/// Catalog algebras that are 2-step with non-degenerate center.
pub fn split_algebras() -> Vec<(&'static str, SplitAlgebra)> {
    all_algebras()
        .into_iter()
        .filter(|(_, a)| a.is_two_step())
        .filter_map(|(n, a)| split(&a).ok().map(|s| (n, s)))
        .collect()
}

// ---- criterion 9 property suites ----

/// `<j(w)u, u'> = <w, [u, u']>`, with `j` from the library and the right
/// side from brackets and metric.
pub fn j_identity_suite(s: &SplitAlgebra, seed: u64) -> Result<usize, String> {
    let alg = s.algebra();
    let jf = j_family(s).map_err(|e| e.to_string())?;
    let n = alg.dim();
    let mut r = rng(seed);
    for k in 0..PROPERTY_SAMPLES {
        let w = element(&mut r, s.center().basis(), n);
        let u = element(&mut r, s.complement().basis(), n);
        let u2 = element(&mut r, s.complement().basis(), n);
        let ju = jf.apply(&w, &u).map_err(|e| e.to_string())?;
        if alg.inner(&ju, &u2) != alg.inner(&w, &alg.bracket(&u, &u2).unwrap()) {
            return Err(format!("sample {k}: <j(w)u,u'> != <w,[u,u']>"));
        }
        if !s.complement().contains(&ju) {
            return Err(format!("sample {k}: j(w)u leaves v"));
        }
        if alg.inner(&ju, &u2) + alg.inner(&u, &jf.apply(&w, &u2).unwrap()) != Scalar::from_integer(0.into()) {
            return Err(format!("sample {k}: j(w) not skew"));
        }
    }
    Ok(PROPERTY_SAMPLES)
}

/// `<nabla_x y, z> + <y, nabla_x z> = 0` and `nabla_x y - nabla_y x = [x, y]`.
pub fn connection_suite(alg: &MetricLieAlgebra, seed: u64) -> Result<usize, String> {
    let n = alg.dim();
    let mut r = rng(seed);
    let nab = |a: &[Scalar], b: &[Scalar]| levi_civita(alg, a, b).map_err(|e| e.to_string());
    for k in 0..PROPERTY_SAMPLES {
        let (x, y, z) = (vector(&mut r, n), vector(&mut r, n), vector(&mut r, n));
        let lhs = alg.inner(&nab(&x, &y)?, &z) + alg.inner(&y, &nab(&x, &z)?);
        if lhs != Scalar::from_integer(0.into()) {
            return Err(format!("sample {k}: metric compatibility fails by {lhs}"));
        }
        if vsub(&nab(&x, &y)?, &nab(&y, &x)?) != alg.bracket(&x, &y).unwrap() {
            return Err(format!("sample {k}: torsion does not vanish"));
        }
    }
    Ok(PROPERTY_SAMPLES)
}

/// `Ric(u, w) = Ric(w, u)`, `Rc(v) ⊆ v`, `Rc(z) ⊆ z`.
pub fn ricci_suite(s: &SplitAlgebra, seed: u64) -> Result<usize, String> {
    let alg = s.algebra();
    let n = alg.dim();
    let rc = ricci(s).map_err(|e| e.to_string())?;
    let mut r = rng(seed);
    for k in 0..PROPERTY_SAMPLES {
        let (u, w) = (vector(&mut r, n), vector(&mut r, n));
        if alg.inner(&rc.operator.mul_vec(&u), &w) != alg.inner(&u, &rc.operator.mul_vec(&w)) {
            return Err(format!("sample {k}: Ric not symmetric"));
        }
        let v = element(&mut r, s.complement().basis(), n);
        if !s.complement().contains(&rc.operator.mul_vec(&v)) {
            return Err(format!("sample {k}: Rc(v) leaves v"));
        }
        let z = element(&mut r, s.center().basis(), n);
        if !s.center().contains(&rc.operator.mul_vec(&z)) {
            return Err(format!("sample {k}: Rc(z) leaves z"));
        }
    }
    Ok(PROPERTY_SAMPLES)
}

// ---- full-curvature Ricci oracle ----

/// Koszul formula, written out independently of the library:
/// `2<nabla_x y, z> = <[x,y],z> - <[y,z],x> + <[z,x],y>`.
pub fn koszul(alg: &MetricLieAlgebra, x: &[Scalar], y: &[Scalar]) -> Vector {
    let n = alg.dim();
    let ginv = alg.metric().inverse().unwrap();
    let rhs: Vector = (0..n)
        .map(|k| {
            let z = matrix::unit(n, k);
            let a = alg.inner(&alg.bracket(x, y).unwrap(), &z);
            let b = alg.inner(&alg.bracket(y, &z).unwrap(), x);
            let c = alg.inner(&alg.bracket(&z, x).unwrap(), y);
            (a - b + c) / Scalar::from_integer(2.into())
        })
        .collect();
    ginv.mul_vec(&rhs)
}

/// `R(x,y)z = nabla_x nabla_y z - nabla_y nabla_x z - nabla_[x,y] z`.
pub fn curvature(alg: &MetricLieAlgebra, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vector {
    let a = koszul(alg, x, &koszul(alg, y, z));
    let b = koszul(alg, y, &koszul(alg, x, z));
    let c = koszul(alg, &alg.bracket(x, y).unwrap(), z);
    vsub(&vsub(&a, &b), &c)
}

/// `Ric(y, z) = tr(x -> R(x, y) z)` as a matrix in the standard basis.
pub fn ricci_form_oracle(alg: &MetricLieAlgebra) -> Matrix {
    let n = alg.dim();
    Matrix::from_fn(n, n, |i, j| {
        let (ei, ej) = (matrix::unit(n, i), matrix::unit(n, j));
        (0..n)
            .map(|k| curvature(alg, &matrix::unit(n, k), &ei, &ej)[k].clone())
            .fold(Scalar::from_integer(0.into()), |a, b| a + b)
    })
}

// ---- adaptive Runge-Kutta geodesic oracle ----

/// Euler-Arnold form of the geodesic equation in exponential coordinates of
/// a 2-step group, in the standard basis: `sigma' = ad*_sigma sigma`,
/// `X' = sigma + 1/2 [X, sigma]`. State is `(X, sigma)`.
pub struct EulerArnold {
    n: usize,
    /// `c[i][j]` = `[x_i, x_j]` as floats
    c: Vec<Vec<Vec<f64>>>,
    g: nalgebra::DMatrix<f64>,
    ginv: nalgebra::DMatrix<f64>,
}

impl EulerArnold {
    pub fn new(alg: &MetricLieAlgebra) -> Self {
        let n = alg.dim();
        let c = (0..n)
            .map(|i| (0..n).map(|j| matrix::vec_to_f64(&alg.bracket_basis(i, j))).collect())
            .collect();
        let g = alg.metric().to_f64();
        let ginv = alg.metric().inverse().unwrap().to_f64();
        Self { n, c, g, ginv }
    }

    fn bracket(&self, x: &[f64], y: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                let xy = x[i] * y[j];
                if xy != 0.0 {
                    for (o, c) in out.iter_mut().zip(&self.c[i][j]) {
                        *o += xy * c;
                    }
                }
            }
        }
        out
    }

    /// `ad*_s s = g^{-1} ad_s^T g s`, i.e. `<ad*_s s, y> = <s, [s, y]>`.
    fn coadjoint(&self, s: &[f64]) -> Vec<f64> {
        let gs = &self.g * nalgebra::DVector::from_column_slice(s);
        let rhs: Vec<f64> = (0..self.n)
            .map(|k| {
                let mut e = vec![0.0; self.n];
                e[k] = 1.0;
                let b = self.bracket(s, &e);
                gs.iter().zip(&b).map(|(a, b)| a * b).sum()
            })
            .collect();
        (&self.ginv * nalgebra::DVector::from_vec(rhs)).iter().copied().collect()
    }
}

impl System<f64, DVector<f64>> for &EulerArnold {
    fn system(&self, _t: f64, y: &DVector<f64>, dy: &mut DVector<f64>) {
        let n = self.n;
        let x: Vec<f64> = y.rows(0, n).iter().copied().collect();
        let s: Vec<f64> = y.rows(n, n).iter().copied().collect();
        let xs = self.bracket(&x, &s);
        let ds = self.coadjoint(&s);
        for i in 0..n {
            dy[i] = s[i] + 0.5 * xs[i];
            dy[n + i] = ds[i];
        }
    }
}

/// `X(t)` at each time of `grid` (increasing, starting at 0) for the
/// geodesic with initial velocity `sigma0`, integrated interval by interval
/// with Dormand-Prince 5(4).
pub fn oracle_geodesic(alg: &MetricLieAlgebra, sigma0: &[f64], grid: &[f64]) -> Vec<Vec<f64>> {
    let sys = EulerArnold::new(alg);
    let n = alg.dim();
    let mut state = DVector::from_iterator(2 * n, std::iter::repeat_n(0.0, n).chain(sigma0.iter().copied()));
    let mut t0 = 0.0;
    let mut out = Vec::new();
    for &t in grid {
        if t > t0 {
            let h = t - t0;
            let mut stepper = Dopri5::from_param(
                &sys, t0, t, h, state.clone(), 1e-13, 1e-13, 0.9, 0.04, 0.2, 10.0, h, 0.0, 100_000, 1000,
                OutputType::Sparse,
            );
            stepper.integrate().expect("oracle integration");
            state = stepper.results().get().1.last().unwrap().clone();
            t0 = t;
        }
        out.push(state.rows(0, n).iter().copied().collect());
    }
    out
}

pub fn sum(a: &[Scalar], b: &[Scalar]) -> Vector {
    vadd(a, b)
}
