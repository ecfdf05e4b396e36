//! The 4-dimensional Lorentzian chart with its isometries, and the
//! 6-dimensional neutral chart with `F^tau`.
//!
//! Points of `M4` are `(t, x, y, z)` with `v = (x, y)`.

use nalgebra::DMatrix;
use serde::Serialize;

use super::manifold::{CoordinateChart, SmoothMap};

/// `J = [[0, 1], [-1, 0]]`, so `a^T J b = a_x b_y - a_y b_x`.
fn jform(a: [f64; 2], b: [f64; 2]) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

/// Rotation `R(t)` applied to `v`.
fn rot(t: f64, v: [f64; 2]) -> [f64; 2] {
    let (s, c) = t.sin_cos();
    [c * v[0] - s * v[1], s * v[0] + c * v[1]]
}

fn split4(p: &[f64]) -> (f64, [f64; 2], f64) {
    (p[0], [p[1], p[2]], p[3])
}

/// `g = dt (dz + y/2 dx - x/2 dy) + dx^2 + dy^2` with `dt dz = dt⊗dz + dz⊗dt`,
/// so `g(d_t, d_z) = 1` and the metric at the origin is the ad-invariant
/// metric of `oscillator4`. Under the half-weight reading `g(d_t, d_z) = 1/2`
/// the conjugations `chi_g` and `psi2`, `psi3` are not isometries.
pub fn chart_m4() -> CoordinateChart {
    chart_m4_weighted(1.0)
}

/// `chart_m4` with `g(d_t, d_z) = weight` (and the `dt dx`, `dt dy` terms
/// scaled alike).
pub fn chart_m4_weighted(weight: f64) -> CoordinateChart {
    CoordinateChart::new("chartM4", 4, move |p| {
        let (x, y) = (p[1], p[2]);
        let mut g = DMatrix::zeros(4, 4);
        g[(0, 3)] = weight;
        g[(0, 1)] = 0.5 * weight * y;
        g[(0, 2)] = -0.5 * weight * x;
        g[(1, 1)] = 1.0;
        g[(2, 2)] = 1.0;
        g.fill_lower_triangle_with_upper_triangle();
        g
    })
}

/// `g = dx1 dx6 + dx3 dx4 - dx2 dx5`, with `g(d_1, d_6) = 1` matching the
/// algebra metric of the free 2-step example.
pub fn chart_m6() -> CoordinateChart {
    CoordinateChart::new("chartM6", 6, |_| {
        let mut g = DMatrix::zeros(6, 6);
        for (i, j, v) in [(0, 5, 1.0), (2, 3, 1.0), (1, 4, -1.0)] {
            g[(i, j)] = v;
            g[(j, i)] = v;
        }
        g
    })
}

/// `L^N_{(t1,v1,z1)}(t,v,z) = (t1 + t, v1 + v, z1 + z + 1/2 v1^T J v)`.
pub fn left_n(t1: f64, v1: [f64; 2], z1: f64) -> SmoothMap {
    SmoothMap::new(format!("LN({t1},{},{},{z1})", v1[0], v1[1]), 4, move |p| {
        let (t, v, z) = split4(p);
        vec![t1 + t, v1[0] + v[0], v1[1] + v[1], z1 + z + 0.5 * jform(v1, v)]
    })
    .with_jacobian(move |_| {
        let mut j = DMatrix::identity(4, 4);
        j[(3, 1)] = -0.5 * v1[1];
        j[(3, 2)] = 0.5 * v1[0];
        j
    })
}

/// `L^G_{(t1,v1,z1)}(t,v,z) = (t1 + t, v1 + R(t1) v, z1 + z + 1/2 v1^T J R(t1) v)`.
pub fn left_g(t1: f64, v1: [f64; 2], z1: f64) -> SmoothMap {
    SmoothMap::new(format!("LG({t1},{},{},{z1})", v1[0], v1[1]), 4, move |p| {
        let (t, v, z) = split4(p);
        let rv = rot(t1, v);
        vec![t1 + t, v1[0] + rv[0], v1[1] + rv[1], z1 + z + 0.5 * jform(v1, rv)]
    })
    .with_jacobian(move |_| {
        let (s, c) = t1.sin_cos();
        let (x1, y1) = (v1[0], v1[1]);
        let mut j = DMatrix::identity(4, 4);
        j[(1, 1)] = c;
        j[(1, 2)] = -s;
        j[(2, 1)] = s;
        j[(2, 2)] = c;
        j[(3, 1)] = 0.5 * (x1 * s - y1 * c);
        j[(3, 2)] = 0.5 * (x1 * c + y1 * s);
        j
    })
}

/// Conjugation `chi_g(x) = g x g^{-1}` on the oscillator group, `g = (t0, v0, z0)`.
pub fn chi(t0: f64, v0: [f64; 2], z0: f64) -> SmoothMap {
    SmoothMap::new(format!("chi({t0},{},{},{z0})", v0[0], v0[1]), 4, move |p| {
        let (t, v, z) = split4(p);
        let r0v = rot(t0, v);
        let rtv0 = rot(t, v0);
        let vv = [v0[0] + r0v[0] - rtv0[0], v0[1] + r0v[1] - rtv0[1]];
        let zz = z + 0.5 * jform(v0, r0v) - 0.5 * jform(v0, rtv0) - 0.5 * jform(r0v, rtv0);
        vec![t, vv[0], vv[1], zz]
    })
}

/// `psi1(t, v, z) = (-t, S v, -z)` with `S(x, y) = (-x, y)`.
pub fn psi1() -> SmoothMap {
    SmoothMap::new("psi1", 4, |p| vec![-p[0], -p[1], p[2], -p[3]])
}

/// `psi2(t, v, z) = (-t, R(-t) v, -z)`.
pub fn psi2() -> SmoothMap {
    SmoothMap::new("psi2", 4, |p| {
        let (t, v, z) = split4(p);
        let rv = rot(-t, v);
        vec![-t, rv[0], rv[1], -z]
    })
}

/// `psi3(t, v, z) = (t, S R(-t) v, z)`.
pub fn psi3() -> SmoothMap {
    SmoothMap::new("psi3", 4, |p| {
        let (t, v, z) = split4(p);
        let rv = rot(-t, v);
        vec![t, -rv[0], rv[1], z]
    })
}

/// The hyperbolic rotation `F^tau` of the neutral chart.
pub fn ftau(tau: f64) -> SmoothMap {
    let (ch, sh) = (tau.cosh(), tau.sinh());
    SmoothMap::new(format!("Ftau({tau})"), 6, move |x| {
        vec![
            ch * x[0] + sh * x[2],
            x[1],
            sh * x[0] + ch * x[2],
            ch * x[3] - sh * x[5],
            x[4],
            -sh * x[3] + ch * x[5],
        ]
    })
    .with_jacobian(move |_| {
        let mut j = DMatrix::zeros(6, 6);
        j[(0, 0)] = ch;
        j[(0, 2)] = sh;
        j[(2, 0)] = sh;
        j[(2, 2)] = ch;
        j[(1, 1)] = 1.0;
        j[(4, 4)] = 1.0;
        j[(3, 3)] = ch;
        j[(3, 5)] = -sh;
        j[(5, 3)] = -sh;
        j[(5, 5)] = ch;
        j
    })
}

/// Generator `L^G_{(0,w,z)} o chi_{(0,v,0)}` of the nilradical of the
/// isometry group.
pub fn nilradical_generator(w: [f64; 2], z: f64, v: [f64; 2]) -> SmoothMap {
    let (lg, ch) = (left_g(0.0, w, z), chi(0.0, v, 0.0));
    SmoothMap::new(format!("{} o {}", lg.name(), ch.name()), 4, move |p| lg.apply(&ch.apply(p)))
}

/// Parameters `(w, z, v)` of one nilradical generator.
pub type GeneratorParams = ([f64; 2], f64, [f64; 2]);

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OrbitReport {
    pub ok: bool,
    /// max `|t' - t|` over generator/point pairs
    pub max_t_defect: f64,
    /// max distance between a target and the image of `(t0, 0, 0)` under the
    /// generator solved for that target
    pub max_target_defect: f64,
    pub targets: usize,
}

/// Generator with prescribed `v` sending `(t0, 0, 0)` to `(t0, v*, z*)`:
/// `chi_{(0,v,0)}(t0, 0, 0) = (t0, u, -1/2 v^T J R(t0) v)` with
/// `u = v - R(t0) v`, so `w = v* - u` and `z = z* + 1/2 v^T J R(t0) v - 1/2 w^T J u`.
pub fn solve_generator_for(target: &[f64], v: [f64; 2]) -> GeneratorParams {
    let (t0, vs, zs) = split4(target);
    let rv = rot(t0, v);
    let u = [v[0] - rv[0], v[1] - rv[1]];
    let w = [vs[0] - u[0], vs[1] - u[1]];
    let z = zs + 0.5 * jform(v, rv) - 0.5 * jform(w, u);
    (w, z, v)
}

/// Every generator fixes the `t`-coordinate of every point, and every
/// point is reached from `(t, 0, 0)` by a generator solved from the affine
/// formulas (one target per point, cycling through the generators' `v`).
pub fn nilradical_orbit_check(points: &[Vec<f64>], generators: &[GeneratorParams]) -> OrbitReport {
    const TOL: f64 = 1e-12;
    let mut max_t_defect = 0.0f64;
    for &(w, z, v) in generators {
        let g = nilradical_generator(w, z, v);
        for p in points {
            max_t_defect = max_t_defect.max((g.apply(p)[0] - p[0]).abs());
        }
    }
    let mut max_target_defect = 0.0f64;
    for (k, target) in points.iter().enumerate() {
        let v = generators.get(k % generators.len().max(1)).map_or([0.0, 0.0], |g| g.2);
        let (w, z, v) = solve_generator_for(target, v);
        let image = nilradical_generator(w, z, v).apply(&[target[0], 0.0, 0.0, 0.0]);
        let d = image
            .iter()
            .zip(target)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        max_target_defect = max_target_defect.max(d);
    }
    OrbitReport {
        ok: max_t_defect <= TOL && max_target_defect <= 1e-9,
        max_t_defect,
        max_target_defect,
        targets: points.len(),
    }
}
