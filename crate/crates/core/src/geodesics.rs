//! Geodesics through the identity in exponential coordinates
//! `n = exp(b + a)`, `b` in `v`, `a` in `z`.
//!
//! For a 2-step algebra with non-degenerate center and `v = z^perp` the
//! geodesic with initial velocity `w + u` solves
//! `b'' = j(u) b'` and `a' + 1/2 [b', b] = u`, so `b'(t) = exp(t j(u)) w`.

use std::io::Write;

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::geometry::{j_family, levi_civita};
use crate::liealg::{gram, MetricLieAlgebra, SplitAlgebra};
use crate::matrix::{vec_to_f64, Vector};
use crate::scalar::Scalar;

/// Absolute tolerance of each adaptive Simpson step.
pub const QUADRATURE_TOLERANCE: f64 = 1e-11;
const MAX_DEPTH: u32 = 48;
/// Step of the 5-point derivative of `a` used by the conservation checks.
pub const DERIVATIVE_STEP: f64 = 1e-3;

fn simpson_step(f: &dyn Fn(f64) -> DVector<f64>, a: f64, fa: &DVector<f64>, b: f64, fb: &DVector<f64>) -> (f64, DVector<f64>, DVector<f64>) {
    let m = 0.5 * (a + b);
    let fm = f(m);
    let s = (fa + &fm * 4.0 + fb) * ((b - a) / 6.0);
    (m, fm, s)
}

#[allow(clippy::too_many_arguments)]
fn simpson_rec(
    f: &dyn Fn(f64) -> DVector<f64>,
    a: f64,
    fa: &DVector<f64>,
    b: f64,
    fb: &DVector<f64>,
    m: f64,
    fm: &DVector<f64>,
    whole: &DVector<f64>,
    tol: f64,
    depth: u32,
) -> DVector<f64> {
    let (lm, flm, left) = simpson_step(f, a, fa, m, fm);
    let (rm, frm, right) = simpson_step(f, m, fm, b, fb);
    let delta = &left + &right - whole;
    if depth == 0 || delta.amax() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    simpson_rec(f, a, fa, m, fm, lm, &flm, &left, tol / 2.0, depth - 1)
        + simpson_rec(f, m, fm, b, fb, rm, &frm, &right, tol / 2.0, depth - 1)
}

/// Adaptive Simpson quadrature of a vector-valued integrand.
pub fn adaptive_simpson(f: &dyn Fn(f64) -> DVector<f64>, a: f64, b: f64, tol: f64) -> DVector<f64> {
    let (fa, fb) = (f(a), f(b));
    if a == b {
        return fa * 0.0;
    }
    let (m, fm, whole) = simpson_step(f, a, &fa, b, &fb);
    simpson_rec(f, a, &fa, b, &fb, m, &fm, &whole, tol, MAX_DEPTH)
}

/// Float data of the geodesic system in the echelon coordinates of `v` and `z`.
#[derive(Debug, Clone)]
struct System {
    j: DMatrix<f64>,
    /// `brackets[c][(i, k)]` = `z`-coordinate `c` of `[v_i, v_k]`
    brackets: Vec<DMatrix<f64>>,
    gv: DMatrix<f64>,
    gz: DMatrix<f64>,
    w: DVector<f64>,
    u: DVector<f64>,
}

impl System {
    fn bracket(&self, x: &DVector<f64>, y: &DVector<f64>) -> DVector<f64> {
        DVector::from_iterator(self.brackets.len(), self.brackets.iter().map(|c| x.dot(&(c * y))))
    }

    fn b_dot(&self, t: f64) -> DVector<f64> {
        (&self.j * t).exp() * &self.w
    }

    /// `b(t) = int_0^t exp(s J) w ds` as the corner block of one exponential.
    fn b_closed(&self, t: f64) -> DVector<f64> {
        let m = self.w.len();
        let mut big = DMatrix::zeros(m + 1, m + 1);
        big.view_mut((0, 0), (m, m)).copy_from(&(&self.j * t));
        big.view_mut((0, m), (m, 1)).copy_from(&(&self.w * t));
        big.exp().view((0, m), (m, 1)).into_owned().column(0).into_owned()
    }

    fn a_dot(&self, t: f64) -> DVector<f64> {
        &self.u - self.bracket(&self.b_dot(t), &self.b_closed(t)) * 0.5
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeodesicSample {
    pub t: f64,
    pub b: Vec<f64>,
    pub a: Vec<f64>,
    /// finite-difference defect; `None` at the two end samples
    pub residual: Option<f64>,
}

/// Sampled geodesic through the identity with initial velocity `w + u`.
#[derive(Debug, Clone)]
pub struct GeodesicCurve {
    pub split: SplitAlgebra,
    pub w: Vector,
    pub u: Vector,
    pub samples: Vec<GeodesicSample>,
    /// `None` when fewer than 5 samples
    pub max_residual: Option<f64>,
    system: System,
}

fn coords_in(sub: &crate::liealg::Subspace, x: &[Scalar], what: &'static str) -> Result<Vector> {
    if x.len() != sub.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: sub.ambient_dim(),
            found: x.len(),
        });
    }
    sub.coordinates(x).ok_or(Error::NotInSubspace(what))
}

fn check_grid(t_grid: &[f64]) -> Result<()> {
    if t_grid.is_empty() {
        return Err(Error::InvalidGrid("no sample times"));
    }
    if t_grid.iter().any(|t| !t.is_finite()) {
        return Err(Error::InvalidGrid("non-finite sample time"));
    }
    if t_grid.windows(2).any(|p| p[1] <= p[0]) {
        return Err(Error::InvalidGrid("sample times must be strictly increasing"));
    }
    Ok(())
}

/// `samples` equally spaced times on `[0, t_max]`.
pub fn uniform_grid(t_max: f64, samples: usize) -> Vec<f64> {
    match samples {
        0 => Vec::new(),
        1 => vec![0.0],
        _ => (0..samples).map(|i| t_max * i as f64 / (samples - 1) as f64).collect(),
    }
}

/// Geodesic with `b'(0) = w` (in `v`) and `a'(0) = u` (in `z`), sampled on
/// `t_grid`.
pub fn geodesic(split: &SplitAlgebra, w: &[Scalar], u: &[Scalar], t_grid: &[f64]) -> Result<GeodesicCurve> {
    let alg = split.algebra();
    if !alg.is_two_step() {
        return Err(Error::NotTwoStep("the geodesic system"));
    }
    let jf = j_family(split)?;
    check_grid(t_grid)?;
    let wc = coords_in(split.complement(), w, "the complement v")?;
    let uc = coords_in(split.center(), u, "the center z")?;
    let (v, z) = (split.complement(), split.center());
    let brackets = (0..z.dim())
        .map(|c| {
            DMatrix::from_fn(v.dim(), v.dim(), |i, k| {
                let br = alg.br(&v.basis()[i], &v.basis()[k]);
                crate::scalar::to_f64(&z.coordinates(&br).expect("2-step bracket lies in z")[c])
            })
        })
        .collect();
    let system = System {
        j: jf.j(&uc).to_f64(),
        brackets,
        gv: gram(alg, v).to_f64(),
        gz: gram(alg, z).to_f64(),
        w: DVector::from_vec(vec_to_f64(&wc)),
        u: DVector::from_vec(vec_to_f64(&uc)),
    };
    let bd = |t: f64| system.b_dot(t);
    let ad = |t: f64| system.a_dot(t);
    let mut samples = Vec::with_capacity(t_grid.len());
    let (mut s, mut b, mut a) = (0.0, DVector::zeros(v.dim()), DVector::zeros(z.dim()));
    for &t in t_grid {
        b += adaptive_simpson(&bd, s, t, QUADRATURE_TOLERANCE);
        a += adaptive_simpson(&ad, s, t, QUADRATURE_TOLERANCE);
        s = t;
        samples.push(GeodesicSample {
            t,
            b: b.iter().copied().collect(),
            a: a.iter().copied().collect(),
            residual: None,
        });
    }
    let mut curve = GeodesicCurve {
        split: split.clone(),
        w: w.to_vec(),
        u: u.to_vec(),
        samples,
        max_residual: None,
        system,
    };
    if let Ok(r) = sample_residuals(&curve) {
        for (sample, ri) in curve.samples.iter_mut().zip(&r) {
            sample.residual = *ri;
        }
        curve.max_residual = r.iter().flatten().copied().reduce(f64::max);
    }
    Ok(curve)
}

fn sample_residuals(curve: &GeodesicCurve) -> Result<Vec<Option<f64>>> {
    let s = &curve.samples;
    if s.len() < 5 {
        return Err(Error::TooFewSamples(s.len()));
    }
    let sys = &curve.system;
    let vec = |x: &[f64]| DVector::from_column_slice(x);
    let mut out = vec![None; s.len()];
    for i in 1..s.len() - 1 {
        let (h0, h1) = (s[i].t - s[i - 1].t, s[i + 1].t - s[i].t);
        let (bm, b0, bp) = (vec(&s[i - 1].b), vec(&s[i].b), vec(&s[i + 1].b));
        let (am, ap) = (vec(&s[i - 1].a), vec(&s[i + 1].a));
        let b_dot = (&bp - &b0) * (h0 / (h1 * (h0 + h1))) + (&b0 - &bm) * (h1 / (h0 * (h0 + h1)));
        let b_ddot = ((&bp - &b0) / h1 - (&b0 - &bm) / h0) * (2.0 / (h0 + h1));
        let a_dot = (&ap - &am) / (h0 + h1);
        let first = (b_ddot - &sys.j * &b_dot).norm();
        let second = (a_dot + sys.bracket(&b_dot, &b0) * 0.5 - &sys.u).norm();
        out[i] = Some(first + second);
    }
    Ok(out)
}

/// Max over interior samples of `|b'' - j(u) b'| + |a' + 1/2 [b', b] - u|`,
/// derivatives by centered differences on the sample grid, Euclidean norm
/// in coordinates.
pub fn geodesic_residual(curve: &GeodesicCurve) -> Result<f64> {
    Ok(sample_residuals(curve)?.into_iter().flatten().fold(0.0, f64::max))
}

impl GeodesicCurve {
    pub fn m(&self) -> usize {
        self.system.w.len()
    }

    pub fn p(&self) -> usize {
        self.system.u.len()
    }

    /// `b'(t) = exp(t j(u)) w`.
    pub fn b_dot(&self, t: f64) -> Vec<f64> {
        self.system.b_dot(t).iter().copied().collect()
    }

    /// `(b, a)` at an arbitrary time, integrated from the nearest sample.
    pub fn eval(&self, t: f64) -> (Vec<f64>, Vec<f64>) {
        let near = self
            .samples
            .iter()
            .min_by(|x, y| (x.t - t).abs().total_cmp(&(y.t - t).abs()))
            .expect("curve has samples");
        let sys = &self.system;
        let db = adaptive_simpson(&|s| sys.b_dot(s), near.t, t, QUADRATURE_TOLERANCE);
        let da = adaptive_simpson(&|s| sys.a_dot(s), near.t, t, QUADRATURE_TOLERANCE);
        let add = |x: &[f64], d: DVector<f64>| x.iter().zip(d.iter()).map(|(p, q)| p + q).collect();
        (add(&near.b, db), add(&near.a, da))
    }

    /// `a'` at sample `i` by the 5-point centered difference of [`Self::eval`].
    pub fn a_dot_numeric(&self, i: usize) -> Vec<f64> {
        let (t, h) = (self.samples[i].t, DERIVATIVE_STEP);
        let a = |s: f64| DVector::from_vec(self.eval(s).1);
        let d = (a(t - 2.0 * h) - a(t + 2.0 * h) + (a(t + h) - a(t - h)) * 8.0) / (12.0 * h);
        d.iter().copied().collect()
    }

    /// `a' + 1/2 [b', b]` at sample `i`.
    pub fn first_integral(&self, i: usize) -> Vec<f64> {
        let sys = &self.system;
        let b = DVector::from_column_slice(&self.samples[i].b);
        let sigma_z = DVector::from_vec(self.a_dot_numeric(i)) + sys.bracket(&sys.b_dot(self.samples[i].t), &b) * 0.5;
        sigma_z.iter().copied().collect()
    }

    /// Max over samples of `|a' + 1/2 [b', b] - u|`.
    pub fn first_integral_defect(&self) -> f64 {
        (0..self.samples.len())
            .map(|i| (DVector::from_vec(self.first_integral(i)) - &self.system.u).norm())
            .fold(0.0, f64::max)
    }

    /// `<sigma, sigma>` at sample `i`, `sigma = b' + a' + 1/2 [b', b]`.
    pub fn speed(&self, i: usize) -> f64 {
        let sys = &self.system;
        let bd = sys.b_dot(self.samples[i].t);
        let sz = DVector::from_vec(self.first_integral(i));
        bd.dot(&(&sys.gv * &bd)) + sz.dot(&(&sys.gz * &sz))
    }

    /// Max deviation of [`Self::speed`] from its value at the first sample.
    pub fn speed_drift(&self) -> f64 {
        let s0 = self.speed(0);
        (0..self.samples.len()).map(|i| (self.speed(i) - s0).abs()).fold(0.0, f64::max)
    }

    /// Sample `i` as a vector `b + a` in the standard basis of the algebra.
    pub fn point(&self, i: usize) -> Vec<f64> {
        let n = self.split.algebra().dim();
        let mut x = vec![0.0; n];
        let s = &self.samples[i];
        for (sub, c) in [(self.split.complement(), &s.b), (self.split.center(), &s.a)] {
            for (basis, coef) in sub.basis().iter().zip(c.iter()) {
                for (xi, bi) in x.iter_mut().zip(basis) {
                    *xi += coef * crate::scalar::to_f64(bi);
                }
            }
        }
        x
    }

    /// CSV with header `t,b_1..b_m,a_1..a_p,residual`; 17 significant digits.
    pub fn write_csv(&self, out: &mut dyn Write) -> std::io::Result<()> {
        let mut header = vec!["t".to_string()];
        header.extend((1..=self.m()).map(|i| format!("b_{i}")));
        header.extend((1..=self.p()).map(|i| format!("a_{i}")));
        header.push("residual".into());
        writeln!(out, "{}", header.join(","))?;
        for s in &self.samples {
            let mut row: Vec<String> = std::iter::once(&s.t).chain(&s.b).chain(&s.a).map(|x| format!("{x:.16e}")).collect();
            row.push(s.residual.map_or_else(String::new, |r| format!("{r:.16e}")));
            writeln!(out, "{}", row.join(","))?;
        }
        Ok(())
    }
}

/// One-parameter subgroup `t -> t u` of a bi-invariant metric.
#[derive(Debug, Clone, PartialEq)]
pub struct Ray {
    pub u: Vector,
    pub samples: Vec<(f64, Vec<f64>)>,
    /// `nabla_u u`, computed exactly from the Koszul formula
    pub connection_defect: Vector,
}

impl Ray {
    pub fn is_geodesic(&self) -> bool {
        crate::matrix::is_zero_vec(&self.connection_defect)
    }
}

pub fn biinvariant_geodesic(alg: &MetricLieAlgebra, u: &[Scalar], t_grid: &[f64]) -> Result<Ray> {
    if !alg.is_ad_invariant() {
        return Err(Error::NotBiInvariant("geodesics as one-parameter subgroups"));
    }
    check_grid(t_grid)?;
    let connection_defect = levi_civita(alg, u, u)?;
    let uf = vec_to_f64(u);
    Ok(Ray {
        u: u.to_vec(),
        samples: t_grid.iter().map(|&t| (t, uf.iter().map(|x| t * x).collect())).collect(),
        connection_defect,
    })
}
