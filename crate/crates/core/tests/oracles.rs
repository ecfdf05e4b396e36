mod common;

use nilgeom::catalog;
use nilgeom::geodesics::{geodesic, uniform_grid};
use nilgeom::geometry::ricci;
use nilgeom::liealg::split;
use nilgeom::matrix::{self, vec_to_f64};
use nilgeom::scalar::q;

fn max_oracle_gap(name: &str, wc: &[i64], uc: &[i64]) -> f64 {
    let alg = catalog::algebra(name).unwrap();
    let s = split(&alg).unwrap();
    let n = alg.dim();
    let wq: Vec<_> = wc.iter().map(|&c| q(c, 2)).collect();
    let uq: Vec<_> = uc.iter().map(|&c| q(c, 3)).collect();
    let w = matrix::combine(&wq, s.complement().basis(), n);
    let u = matrix::combine(&uq, s.center().basis(), n);
    let grid = uniform_grid(5.0, 51);
    let curve = geodesic(&s, &w, &u, &grid).unwrap();
    let sigma0 = vec_to_f64(&matrix::vadd(&w, &u));
    let oracle = common::oracle_geodesic(&alg, &sigma0, &grid);
    (0..grid.len())
        .map(|i| {
            curve
                .point(i)
                .iter()
                .zip(&oracle[i])
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max)
        })
        .fold(0.0, f64::max)
}

#[test]
fn closed_form_matches_runge_kutta() {
    let cases: &[(&str, &[i64], &[i64])] = &[
        ("h3_riemannian", &[2, 1], &[3]),
        ("h3_lorentz", &[2, -1], &[2]),
        ("h3_lorentz", &[1, 3], &[-1]),
        ("h3_pseudo_htype", &[1, 1, -1, 2], &[1, 2]),
        ("htype6", &[1, -1, 2, 1], &[2, -3]),
        ("rxh3", &[2, 1], &[1, -2]),
    ];
    for (name, w, u) in cases {
        let gap = max_oracle_gap(name, w, u);
        assert!(gap <= 1e-8, "{name}: closed form differs from the ODE oracle by {gap:e}");
    }
}

#[test]
fn oracle_reproduces_heisenberg_circle() {
    let alg = catalog::h3_riemannian();
    let grid = uniform_grid(5.0, 11);
    let x = common::oracle_geodesic(&alg, &[1.0, 0.0, 1.0], &grid);
    for (t, p) in grid.iter().zip(&x) {
        assert!((p[0] - t.sin()).abs() < 1e-10);
        assert!((p[1] - (1.0 - t.cos())).abs() < 1e-10);
    }
}

#[test]
fn ricci_form_matches_full_curvature() {
    for (name, s) in common::split_algebras() {
        let rc = ricci(&s).unwrap();
        assert_eq!(rc.form, common::ricci_form_oracle(s.algebra()), "{name}");
    }
}
