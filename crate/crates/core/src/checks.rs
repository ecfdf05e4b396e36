//! Runtime verification blocks for the worked examples, used by the
//! `check-example` subcommand.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::catalog::{self, GeneratorParams};
use crate::error::{Error, Result};
use crate::geodesics::{geodesic, uniform_grid};
use crate::geometry::ricci;
use crate::isometry;
use crate::liealg::{restrict_metric, split, split_with, Subspace};
use crate::matrix::{self, Matrix, Vector};
use crate::scalar::{format, int, q, Scalar};
use crate::spectral::{self, Conclusion, Membership};

pub const EXAMPLE_NAMES: &[&str] = &[
    "h3_lorentz",
    "htype",
    "rxh3",
    "free3_neutral",
    "iso7",
    "oscillator4",
    "manifold",
    "geodesics",
];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub label: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExampleReport {
    pub example: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl ExampleReport {
    pub fn to_text(&self) -> String {
        let mut s = format!("{}: {}\n", self.example, if self.passed { "PASS" } else { "FAIL" });
        for c in &self.checks {
            s += &format!("  [{}] {}: {}\n", if c.pass { "ok" } else { "FAIL" }, c.label, c.detail);
        }
        s
    }
}

fn check(label: &str, pass: bool, detail: impl Into<String>) -> Check {
    Check {
        label: label.into(),
        pass,
        detail: detail.into(),
    }
}

/// `p/q` with `|p| <= 9`, `1 <= q <= 5`.
pub fn random_rational(rng: &mut impl Rng) -> Scalar {
    q(rng.gen_range(-9..=9), rng.gen_range(1..=5))
}

pub fn random_vector(rng: &mut impl Rng, n: usize) -> Vector {
    (0..n).map(|_| random_rational(rng)).collect()
}

pub fn check_example(name: &str, seed: u64) -> Result<ExampleReport> {
    let checks = match name {
        "h3_lorentz" => h3_lorentz()?,
        "htype" => htype()?,
        "rxh3" => rxh3()?,
        "free3_neutral" => free3_neutral(seed)?,
        "iso7" => iso7()?,
        "oscillator4" => oscillator4()?,
        "manifold" => manifold(seed)?,
        "geodesics" => geodesics()?,
        _ => return Err(Error::UnknownBuiltin(name.into())),
    };
    Ok(ExampleReport {
        example: name.into(),
        passed: checks.iter().all(|c| c.pass),
        checks,
    })
}

fn scaled_identity(n: usize, s: Scalar) -> Matrix {
    Matrix::identity(n).scale(&s)
}

fn h3_lorentz() -> Result<Vec<Check>> {
    let a = catalog::h3_lorentz();
    let s = split(&a)?;
    let rc = ricci(&s)?;
    let crit = spectral::splitting_criterion(&s)?;
    let e3 = a.e("e3");
    Ok(vec![
        check("Rc on v is I/2", rc.v_block == scaled_identity(2, q(1, 2)), format!("{:?}", rc.v_block.to_strings())),
        check(
            "Rc e3 = -e3/2",
            rc.operator.mul_vec(&e3) == matrix::vscale(&e3, &q(-1, 2)),
            format!("{:?}", matrix::vec_to_strings(&rc.operator.mul_vec(&e3))),
        ),
        check("s = 1/2", rc.scalar == q(1, 2), format(&rc.scalar)),
        check("splitting criterion holds", crit.holds, format!("{:?}", crit.assignment.iter().map(|x| x.1).collect::<Vec<_>>())),
        check("not pseudo-H-type", !spectral::is_pseudo_h_type(&s)?, ""),
    ])
}

fn htype() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (name, alg) in [("h3_riemannian", catalog::h3_riemannian()), ("htype6", catalog::htype6())] {
        let s = split(&alg)?;
        let (m, p) = (s.m(), s.p());
        let rc = ricci(&s)?;
        let (pi, mi) = (int(p as i64), int(m as i64));
        let report = spectral::classify(&alg);
        out.push(check(
            &format!("{name}: Rc on v is -(p/2) I"),
            rc.v_block == scaled_identity(m, -&pi / int(2)),
            format!("{:?}", rc.v_block.to_strings()),
        ));
        out.push(check(
            &format!("{name}: Rc on z is (m/4) I"),
            rc.z_block == scaled_identity(p, &mi / int(4)),
            format!("{:?}", rc.z_block.to_strings()),
        ));
        out.push(check(
            &format!("{name}: s = -pm/4"),
            rc.scalar == -(&pi * &mi) / int(4),
            format(&rc.scalar),
        ));
        out.push(check(
            &format!("{name}: splitting criterion holds"),
            report.splitting_criterion_holds == Some(true),
            "",
        ));
        out.push(check(
            &format!("{name}: ISO_EQ_AUT and NEGATIVE_SCALAR"),
            report.has(Conclusion::IsoEqAut) && report.has(Conclusion::NegativeScalar),
            format!("{:?}", report.structural_conclusions),
        ));
    }
    Ok(out)
}

fn rxh3() -> Result<Vec<Check>> {
    let a = catalog::rxh3();
    let s = split(&a)?;
    let rc = ricci(&s)?;
    let crit = spectral::splitting_criterion(&s)?;
    let mixed_x = crit
        .assignment
        .iter()
        .any(|(f, m)| f.linear_root() == Some(Scalar::zero()) && *m == Membership::Mixed);
    let der = isometry::skew_derivations(&a);
    let der_ok = der.dimension() == 1 && {
        let d = &der.basis[0][0];
        let eta = d.mul_vec(&a.e("e1"))[a.index_of("e2").expect("e2")].clone();
        !eta.is_zero()
            && d.mul_vec(&a.e("e1")) == matrix::vscale(&a.e("e2"), &eta)
            && d.mul_vec(&a.e("e2")) == matrix::vscale(&a.e("e1"), &-eta)
    };
    let iso = isometry::isotropy_algebra(&s)?;
    Ok(vec![
        check("Rc nonzero", !rc.operator.is_zero(), ""),
        check("Rc^2 = 0", rc.operator.pow(2).is_zero(), ""),
        check("s = 0", rc.scalar.is_zero(), format(&rc.scalar)),
        check("splitting criterion fails with x mixed", !crit.holds && mixed_x, ""),
        check("skew derivations: D e1 = e2, D e2 = -e1", der_ok, format!("dimension {}", der.dimension())),
        check("isotropy algebra has dimension 1", iso.dimension() == 1 && iso.verified, format!("dimension {}", iso.dimension())),
    ])
}

/// `span{x + c(x)}` over `x` in `span{e1, e2, e3}` with `c` a random map into `z`.
pub fn random_complement(rng: &mut impl Rng, alg: &crate::liealg::MetricLieAlgebra) -> Subspace {
    let n = alg.dim();
    let z = alg.center();
    let vectors: Vec<Vector> = Subspace::coordinate(n, &[0, 1, 2])
        .basis()
        .iter()
        .map(|b| {
            let coeffs = random_vector(rng, z.dim());
            matrix::vadd(b, &matrix::combine(&coeffs, z.basis(), n))
        })
        .collect();
    Subspace::span(n, &vectors)
}

fn free3_neutral(seed: u64) -> Result<Vec<Check>> {
    let a = catalog::free3_neutral();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ahc = isometry::ahc_isotropy_algebra(&a)?;
    let z = a.center();
    let mut always_fails = true;
    let mut trials = 0;
    for _ in 0..10 {
        let s = split_with(&a, random_complement(&mut rng, &a))?;
        for _ in 0..100 {
            let w = loop {
                let w = random_vector(&mut rng, 6);
                if !z.contains(&w) {
                    break w;
                }
            };
            trials += 1;
            always_fails &= !isometry::ad_splitting_test(&s, &w)?.preserves;
        }
    }
    let mut ahc_ok = true;
    let mut aut_fails = true;
    for _ in 0..10 {
        let s = loop {
            let s = q(rng.gen_range(-19..=19), 20);
            if !s.is_zero() {
                break s;
            }
        };
        let d = catalog::ftau_differential(&s);
        ahc_ok &= isometry::ahc_isometry_check(&a, &d)?;
        aut_fails &= !isometry::is_isometric_automorphism_differential(&a, &d)?;
    }
    Ok(vec![
        check("ad-invariant", a.is_ad_invariant(), ""),
        check("center degenerate", !restrict_metric(&a, &z).nondegenerate, ""),
        check("AHC isotropy algebra has dimension 15", ahc.dimension() == 15 && ahc.verified, format!("dimension {}", ahc.dimension())),
        check(
            "Ad(exp w) never preserves a complement",
            always_fails,
            format!("{trials} (w, complement) pairs"),
        ),
        check("dF^tau passes the AHC check", ahc_ok, "10 values of tanh(tau/2)"),
        check(
            "dF^tau is not an isometric automorphism",
            aut_fails,
            "dF^tau preserves the metric and the bracket, so it is an isometric automorphism",
        ),
    ])
}

fn iso7() -> Result<Vec<Check>> {
    let a = catalog::iso7();
    let nr = isometry::nilradical(&a)?;
    let idx: Vec<usize> = ["f1", "f2", "e1", "e2", "e3"].iter().map(|n| a.index_of(n).expect("iso7 name")).collect();
    let n = catalog::iso7_nil_subalgebra();
    Ok(vec![
        check("nilradical = span{f1,f2,e1,e2,e3}", nr == Subspace::coordinate(7, &idx), format!("{:?}", nr.to_strings())),
        check("n not inside the nilradical", !isometry::contains_subalgebra(&a, &nr, &n), ""),
        check("n not inside [iso, iso]", !isometry::contains_subalgebra(&a, &a.derived_algebra(), &n), ""),
    ])
}

fn oscillator4() -> Result<Vec<Check>> {
    let a = catalog::oscillator4();
    let v = a.validate();
    let ahc = isometry::ahc_isotropy_algebra(&a)?;
    Ok(vec![
        check("solvable, not nilpotent", v.jacobi_ok && v.solvable && v.nilpotency_step.is_none(), format!("{v:?}")),
        check("ad-invariant", a.is_ad_invariant(), ""),
        check("AHC isotropy algebra has dimension 3", ahc.dimension() == 3 && ahc.verified, format!("dimension {}", ahc.dimension())),
    ])
}

fn manifold(seed: u64) -> Result<Vec<Check>> {
    let pts4 = catalog::sample_points(seed, 50, 4, 3.0);
    let pts6 = catalog::sample_points(seed, 50, 6, 3.0);
    let m4 = catalog::chart_m4();
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let mut params = || -> (f64, [f64; 2], f64) {
        (rng.gen_range(-3.0..3.0), [rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0)], rng.gen_range(-3.0..3.0))
    };
    let (t, v, z) = params();
    let maps = [
        catalog::left_g(t, v, z),
        catalog::left_n(t, v, z),
        catalog::chi(t, v, z),
        catalog::psi1(),
        catalog::psi2(),
        catalog::psi3(),
    ];
    for f in &maps {
        let r = catalog::pullback_isometry_check(&m4, f, &pts4)?;
        out.push(check(&format!("{} isometry of chartM4", f.name()), r.ok, format!("max defect {:e}", r.max_defect)));
    }
    let r = catalog::pullback_isometry_check(&catalog::chart_m6(), &catalog::ftau(0.7), &pts6)?;
    out.push(check("Ftau(0.7) isometry of chartM6", r.ok, format!("max defect {:e}", r.max_defect)));
    let pts100 = catalog::sample_points(seed.wrapping_add(1), 100, 4, 3.0);
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let (t1, v1, z1) = params();
        let rhs = catalog::compose_maps(&catalog::left_n(t1, v1, z1), &catalog::chi(t1, [0.0, 0.0], 0.0))?;
        worst = worst.max(catalog::max_pointwise_difference(&catalog::left_g(t1, v1, z1), &rhs, &pts100));
    }
    out.push(check("LG = LN o chi", worst <= 1e-12, format!("max difference {worst:e}")));
    let c = catalog::compose_maps(&catalog::psi1(), &catalog::psi2())?;
    let d = catalog::max_pointwise_difference(&catalog::psi3(), &c, &pts100);
    out.push(check("psi3 = psi1 o psi2", d <= 1e-12, format!("max difference {d:e}")));
    let gens: Vec<GeneratorParams> = (0..100)
        .map(|_| {
            let (a, w, b) = params();
            (w, a, [b, -a])
        })
        .collect();
    let targets = catalog::sample_points(seed.wrapping_add(2), 20, 4, 3.0);
    let o = catalog::nilradical_orbit_check(&targets, &gens);
    out.push(check(
        "nilradical orbits are the slices t = const",
        o.ok,
        format!("t defect {:e}, target defect {:e}, {} targets", o.max_t_defect, o.max_target_defect, o.targets),
    ));
    Ok(out)
}

fn geodesics() -> Result<Vec<Check>> {
    let grid = uniform_grid(5.0, 501);
    let mut out = Vec::new();
    let a = catalog::h3_riemannian();
    let c = geodesic(&split(&a)?, &a.e("e1"), &a.e("e3"), &grid)?;
    let circle = c
        .samples
        .iter()
        .map(|s| (s.b[0] - s.t.sin()).abs().max((s.b[1] - (1.0 - s.t.cos())).abs()))
        .fold(0.0, f64::max);
    out.push(check("h3_riemannian: circle", circle <= 1e-8, format!("max error {circle:e}")));
    let l = catalog::h3_lorentz();
    let c = geodesic(&split(&l)?, &l.e("e1"), &l.e("e3"), &grid)?;
    let hyperbola = c
        .samples
        .iter()
        .map(|s| (s.b[0] - s.t.sinh()).abs().max((s.b[1] - (s.t.cosh() - 1.0)).abs()))
        .fold(0.0, f64::max);
    out.push(check("h3_lorentz: hyperbola", hyperbola <= 1e-8, format!("max error {hyperbola:e}")));
    for (name, alg) in [("h3_riemannian", a), ("h3_lorentz", l), ("rxh3", catalog::rxh3())] {
        let s = split(&alg)?;
        let w = matrix::combine(&[int(1), q(1, 2)], &s.complement().basis()[..2], alg.dim());
        let u = s.center().basis()[0].clone();
        let c = geodesic(&s, &w, &u, &grid)?;
        let fi = c.first_integral_defect();
        let sp = c.speed_drift();
        out.push(check(&format!("{name}: first integral"), fi <= 1e-9, format!("{fi:e}")));
        out.push(check(&format!("{name}: constant speed"), sp <= 1e-9, format!("{sp:e}")));
    }
    let ab = catalog::abelian(2, 2);
    let s = split(&ab)?;
    let u: Vector = vec![int(1), q(-1, 2), int(2), Scalar::one()];
    let c = geodesic(&s, &matrix::zero_vec(4), &u, &grid)?;
    let uc = crate::matrix::vec_to_f64(&s.center().coordinates(&u).expect("center is everything"));
    let straight = c
        .samples
        .iter()
        .all(|smp| smp.a.iter().zip(&uc).all(|(x, y)| x == &(smp.t * y)));
    out.push(check("abelian: exact straight lines", straight, ""));
    Ok(out)
}
