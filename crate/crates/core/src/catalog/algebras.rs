//! Exact metric Lie algebras of the worked examples.

use crate::error::{Error, Result};
use crate::liealg::{MetricLieAlgebra, Subspace};
use crate::matrix::{self, Matrix, Vector};
use crate::scalar::{int, one, q, Scalar};

/// Names accepted by [`algebra`].
pub const ALGEBRA_NAMES: &[&str] = &[
    "h3_riemannian",
    "h3_lorentz",
    "h3_pseudo_htype",
    "htype6",
    "rxh3",
    "oscillator4",
    "iso7",
    "free3_neutral",
];

pub fn algebra(name: &str) -> Result<MetricLieAlgebra> {
    match name {
        "h3_riemannian" => Ok(h3_riemannian()),
        "h3_lorentz" => Ok(h3_lorentz()),
        "h3_pseudo_htype" => Ok(h3_pseudo_htype()),
        "htype6" => Ok(htype6()),
        "rxh3" => Ok(rxh3()),
        "oscillator4" => Ok(oscillator4()),
        "iso7" => Ok(iso7()),
        "free3_neutral" => Ok(free3_neutral()),
        other => Err(Error::UnknownBuiltin(other.to_string())),
    }
}

fn h3_with(diag: [i64; 3]) -> MetricLieAlgebra {
    MetricLieAlgebra::builder(&["e1", "e2", "e3"])
        .bracket_named("e1", "e2", &[("e3", one())])
        .metric(Matrix::diagonal(&diag.map(int)))
        .build()
        .expect("heisenberg constants are valid")
}

/// Heisenberg algebra with the standard inner product.
pub fn h3_riemannian() -> MetricLieAlgebra {
    h3_with([1, 1, 1])
}

/// Heisenberg algebra with `-<e1,e1> = <e2,e2> = <e3,e3> = 1`.
pub fn h3_lorentz() -> MetricLieAlgebra {
    h3_with([-1, 1, 1])
}

/// Heisenberg algebra with `-<e1,e1> = <e2,e2> = -<e3,e3> = 1`; here
/// `j(e3)^2 = I = -<e3,e3> I`, an indefinite pseudo-H-type example.
pub fn h3_pseudo_htype() -> MetricLieAlgebra {
    h3_with([-1, 1, -1])
}

/// H-type algebra of dimension 6 with 2-dimensional center: `j(z1), j(z2)`
/// act on `v = R^4` as left multiplication by the quaternions `i` and `j`.
pub fn htype6() -> MetricLieAlgebra {
    MetricLieAlgebra::builder(&["e1", "e2", "e3", "e4", "z1", "z2"])
        .bracket_named("e1", "e2", &[("z1", one())])
        .bracket_named("e3", "e4", &[("z1", one())])
        .bracket_named("e1", "e3", &[("z2", one())])
        .bracket_named("e2", "e4", &[("z2", int(-1))])
        .metric(Matrix::identity(6))
        .build()
        .expect("H-type constants are valid")
}

/// `R x h3` with `<n0,e3> = 1/2`, `<e1,e1> = <e2,e2> = 1`: the Lorentzian
/// metric `dt (dz + y/2 dx - x/2 dy) + dx^2 + dy^2` at the identity, with
/// `dt dz` read as a symmetric product.
pub fn rxh3() -> MetricLieAlgebra {
    MetricLieAlgebra::builder(&["n0", "e1", "e2", "e3"])
        .bracket_named("e1", "e2", &[("e3", one())])
        .metric_named("n0", "e3", q(1, 2))
        .metric_named("e1", "e1", one())
        .metric_named("e2", "e2", one())
        .build()
        .expect("R x H3 constants are valid")
}

/// Oscillator algebra `[f0,e1] = e2, [f0,e2] = -e1, [e1,e2] = e3` with the
/// ad-invariant metric `<f0,e3> = 1, <e1,e1> = <e2,e2> = 1`.
pub fn oscillator4() -> MetricLieAlgebra {
    MetricLieAlgebra::builder(&["f0", "e1", "e2", "e3"])
        .bracket_named("f0", "e1", &[("e2", one())])
        .bracket_named("f0", "e2", &[("e1", int(-1))])
        .bracket_named("e1", "e2", &[("e3", one())])
        .metric_named("f0", "e3", one())
        .metric_named("e1", "e1", one())
        .metric_named("e2", "e2", one())
        .build()
        .expect("oscillator constants are valid")
}

/// Isometry algebra of the 4-dimensional Lorentzian example: the oscillator
/// algebra `e0..e3` extended by its inner derivations `f0 = ad e0`,
/// `f1 = ad e1`, `f2 = ad e2`. Besides the relations of [`iso7_table`] this
/// needs `[f1,e0] = -e2` and `[f2,e0] = e1`, without which Jacobi fails on
/// `(f1,e0,e1)` and `(f2,e0,e2)`. No metric enters the structural checks;
/// the identity is a placeholder.
pub fn iso7() -> MetricLieAlgebra {
    iso7_builder()
        .bracket_named("f1", "e0", &[("e2", int(-1))])
        .bracket_named("f2", "e0", &[("e1", one())])
        .build()
        .expect("iso7 constants are valid")
}

/// The nine relations of the published bracket table alone. This is not a
/// Lie algebra: see [`iso7`].
pub fn iso7_table() -> MetricLieAlgebra {
    iso7_builder().build().expect("antisymmetric table")
}

fn iso7_builder() -> crate::liealg::AlgebraBuilder {
    MetricLieAlgebra::builder(&["f0", "f1", "f2", "e0", "e1", "e2", "e3"])
        .bracket_named("f0", "f1", &[("f2", one())])
        .bracket_named("f0", "f2", &[("f1", int(-1))])
        .bracket_named("f0", "e1", &[("e2", one())])
        .bracket_named("f0", "e2", &[("e1", int(-1))])
        .bracket_named("f1", "e2", &[("e3", one())])
        .bracket_named("f2", "e1", &[("e3", int(-1))])
        .bracket_named("e0", "e1", &[("e2", one())])
        .bracket_named("e0", "e2", &[("e1", int(-1))])
        .bracket_named("e1", "e2", &[("e3", one())])
        .metric(Matrix::identity(7))
}

/// `n = span{f0 - e0, e1, e2, e3}` inside `iso7`.
pub fn iso7_nil_subalgebra() -> Subspace {
    let a = iso7();
    let f0_minus_e0 = matrix::vsub(&a.e("f0"), &a.e("e0"));
    Subspace::span(7, &[f0_minus_e0, a.e("e1"), a.e("e2"), a.e("e3")])
}

/// Free 2-step nilpotent algebra on three generators,
/// `[e1,e2] = e4, [e1,e3] = e5, [e2,e3] = e6`, with the neutral ad-invariant
/// metric `<e1,e6> = <e3,e4> = -<e2,e5> = 1`.
pub fn free3_neutral() -> MetricLieAlgebra {
    MetricLieAlgebra::builder(&["e1", "e2", "e3", "e4", "e5", "e6"])
        .bracket_named("e1", "e2", &[("e4", one())])
        .bracket_named("e1", "e3", &[("e5", one())])
        .bracket_named("e2", "e3", &[("e6", one())])
        .metric_named("e1", "e6", one())
        .metric_named("e3", "e4", one())
        .metric_named("e2", "e5", int(-1))
        .build()
        .expect("free 2-step constants are valid")
}

/// Abelian `R^{p+q}` with `diag(+1 x p, -1 x q)`.
pub fn abelian(p: usize, q: usize) -> MetricLieAlgebra {
    let names: Vec<String> = (1..=p + q).map(|i| format!("x{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let diag: Vec<Scalar> = (0..p + q).map(|i| if i < p { one() } else { int(-1) }).collect();
    MetricLieAlgebra::builder(&refs)
        .metric(Matrix::diagonal(&diag))
        .build()
        .expect("abelian algebra is valid")
}

/// Differential at the identity of `F^tau` on the free 2-step group, with
/// `(cosh tau, sinh tau) = ((1 + s^2) / (1 - s^2), 2s / (1 - s^2))`,
/// `s = tanh(tau / 2)`, so that the matrix is exact for rational `s` in `(-1, 1)`.
pub fn ftau_differential(s: &Scalar) -> Matrix {
    let den = one() - s * s;
    let ch = (one() + s * s) / &den;
    let sh = (int(2) * s) / &den;
    let mut m = Matrix::zeros(6, 6);
    m[(0, 0)] = ch.clone();
    m[(0, 2)] = sh.clone();
    m[(2, 0)] = sh.clone();
    m[(2, 2)] = ch.clone();
    m[(1, 1)] = one();
    m[(4, 4)] = one();
    m[(3, 3)] = ch.clone();
    m[(3, 5)] = -sh.clone();
    m[(5, 3)] = -sh;
    m[(5, 5)] = ch;
    m
}

/// Differential at `e` of `psi1(t, v, z) = (-t, Sv, -z)` on `rxh3`
/// (basis `n0 = d/dt, e1 = d/dx, e2 = d/dy, e3 = d/dz`).
pub fn psi1_differential() -> Matrix {
    Matrix::diagonal(&[int(-1), int(-1), one(), int(-1)])
}

/// Differential at `e` of `psi2(t, v, z) = (-t, R(-t) v, -z)` on `rxh3`.
pub fn psi2_differential() -> Matrix {
    Matrix::diagonal(&[int(-1), one(), one(), int(-1)])
}

/// A vector of the given length from small integers.
pub fn ivec(xs: &[i64]) -> Vector {
    xs.iter().map(|&x| int(x)).collect()
}
