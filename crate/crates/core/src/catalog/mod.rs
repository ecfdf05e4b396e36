//! Built-in constants of the worked examples: exact metric Lie algebras,
//! coordinate charts, and the explicit maps between them.

mod algebras;
mod charts;
mod manifold;

pub use algebras::*;
pub use charts::*;
pub use manifold::*;

use crate::error::{Error, Result};
use crate::liealg::{split_with, SplitAlgebra, Subspace};

/// Anything [`builtin`] can return.
#[derive(Debug, Clone)]
pub enum Builtin {
    Algebra(crate::liealg::MetricLieAlgebra),
    Split(SplitAlgebra),
    Chart(CoordinateChart),
    Map(SmoothMap),
}

/// Names of non-algebra builtins. Map families take their parameters in
/// parentheses, e.g. `LG(1,2,3,4)` or `Ftau(0.7)`.
pub const OTHER_NAMES: &[&str] = &[
    "free3_neutral_split",
    "chartM4",
    "chartM6",
    "LG(t,x,y,z)",
    "LN(t,x,y,z)",
    "chi(t,x,y,z)",
    "psi1",
    "psi2",
    "psi3",
    "Ftau(tau)",
];

/// `free3_neutral` with complement `v = span{e1, e2, e3}`.
pub fn free3_neutral_split() -> SplitAlgebra {
    let alg = free3_neutral();
    let v = Subspace::coordinate(6, &[0, 1, 2]);
    split_with(&alg, v).expect("span{e1,e2,e3} complements the center")
}

fn parse_call(name: &str) -> Result<(&str, Vec<f64>)> {
    let Some(open) = name.find('(') else {
        return Ok((name, Vec::new()));
    };
    let inner = name[open + 1..]
        .strip_suffix(')')
        .ok_or_else(|| Error::Parse(format!("unbalanced parentheses in `{name}`")))?;
    let args = inner
        .split(',')
        .map(|a| {
            a.trim()
                .parse::<f64>()
                .map_err(|_| Error::Parse(format!("bad argument `{a}` in `{name}`")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((&name[..open], args))
}

fn arity(name: &str, args: &[f64], n: usize) -> Result<()> {
    if args.len() == n {
        Ok(())
    } else {
        Err(Error::Parse(format!("`{name}` takes {n} arguments, got {}", args.len())))
    }
}

pub fn builtin(name: &str) -> Result<Builtin> {
    if ALGEBRA_NAMES.contains(&name) {
        return algebra(name).map(Builtin::Algebra);
    }
    let (head, args) = parse_call(name)?;
    let four = |f: fn(f64, [f64; 2], f64) -> SmoothMap| -> Result<Builtin> {
        arity(head, &args, 4)?;
        Ok(Builtin::Map(f(args[0], [args[1], args[2]], args[3])))
    };
    match head {
        "free3_neutral_split" => Ok(Builtin::Split(free3_neutral_split())),
        "chartM4" => Ok(Builtin::Chart(chart_m4())),
        "chartM6" => Ok(Builtin::Chart(chart_m6())),
        "LG" => four(left_g),
        "LN" => four(left_n),
        "chi" => four(chi),
        "psi1" => Ok(Builtin::Map(psi1())),
        "psi2" => Ok(Builtin::Map(psi2())),
        "psi3" => Ok(Builtin::Map(psi3())),
        "Ftau" => {
            arity(head, &args, 1)?;
            Ok(Builtin::Map(ftau(args[0])))
        }
        _ => Err(Error::UnknownBuiltin(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, one, q};

    #[test]
    fn iso7_brackets() {
        let a = iso7();
        assert_eq!(a.bracket(&a.e("f0"), &a.e("f1")).unwrap(), a.e("f2"));
        assert_eq!(a.bracket(&a.e("e1"), &a.e("e2")).unwrap(), a.e("e3"));
        assert!(a.jacobi_holds());
        assert!(!iso7_table().jacobi_holds());
    }

    #[test]
    fn free3_metric_entries() {
        let a = free3_neutral();
        let g = a.metric();
        assert_eq!(g[(0, 5)], one());
        assert_eq!(g[(2, 3)], one());
        assert_eq!(g[(1, 4)], int(-1));
        assert!(a.is_ad_invariant());
    }

    #[test]
    fn chart_m4_at_origin() {
        let g = chart_m4().metric_at(&[0.0; 4]);
        assert_eq!(g[(0, 3)], 1.0);
        assert_eq!(g[(3, 0)], 1.0);
        assert_eq!(g[(1, 1)], 1.0);
        assert_eq!(g[(2, 2)], 1.0);
        assert_eq!(g[(0, 0)], 0.0);
        let alg = oscillator4();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(g[(i, j)], crate::scalar::to_f64(&alg.metric()[(i, j)]));
            }
        }
        assert_eq!(rxh3().metric()[(0, 3)], q(1, 2));
    }

    #[test]
    fn half_weight_chart_breaks_conjugation() {
        let pts = sample_points(11, 20, 4, 3.0);
        let half = chart_m4_weighted(0.5);
        assert!(!pullback_isometry_check(&half, &chi(0.7, [1.0, -0.5], 2.0), &pts).unwrap().ok);
        assert!(!pullback_isometry_check(&half, &psi2(), &pts).unwrap().ok);
        assert!(pullback_isometry_check(&half, &left_g(1.0, [2.0, 3.0], 4.0), &pts).unwrap().ok);
    }

    #[test]
    fn builtin_names_resolve() {
        for n in ALGEBRA_NAMES {
            assert!(matches!(builtin(n), Ok(Builtin::Algebra(_))));
        }
        assert!(matches!(builtin("LG(1,2,3,4)"), Ok(Builtin::Map(_))));
        assert!(matches!(builtin("Ftau(0.7)"), Ok(Builtin::Map(_))));
        assert!(matches!(builtin("chartM6"), Ok(Builtin::Chart(_))));
        assert!(matches!(builtin("free3_neutral_split"), Ok(Builtin::Split(_))));
        assert!(matches!(builtin("nope"), Err(Error::UnknownBuiltin(_))));
        assert!(matches!(builtin("LG(1,2)"), Err(Error::Parse(_))));
    }

    #[test]
    fn left_translations_are_isometries() {
        let pts = sample_points(7, 50, 4, 3.0);
        let chart = chart_m4();
        for m in [left_g(1.0, [2.0, 3.0], 4.0), left_n(1.0, [2.0, 3.0], 4.0)] {
            let r = pullback_isometry_check(&chart, &m, &pts).unwrap();
            assert!(r.ok, "{}: {}", m.name(), r.max_defect);
        }
    }

    #[test]
    fn closed_form_and_fd_jacobians_agree() {
        let pts = sample_points(3, 20, 4, 2.0);
        for m in [left_g(0.3, [1.0, -2.0], 0.5), left_n(-1.0, [0.5, 0.25], 2.0)] {
            for p in &pts {
                let d = (m.jacobian_at(p) - m.finite_difference_jacobian(p)).amax();
                assert!(d <= 1e-6, "{d}");
            }
        }
    }

    #[test]
    fn conjugations_and_psis_are_isometries() {
        let pts = sample_points(11, 50, 4, 3.0);
        let chart = chart_m4();
        for m in [chi(0.7, [1.0, -0.5], 2.0), psi1(), psi2(), psi3()] {
            let r = pullback_isometry_check(&chart, &m, &pts).unwrap();
            assert!(r.ok, "{}: {}", m.name(), r.max_defect);
        }
    }

    #[test]
    fn ftau_isometry_on_m6() {
        let pts = sample_points(5, 50, 6, 3.0);
        let r = pullback_isometry_check(&chart_m6(), &ftau(0.7), &pts).unwrap();
        assert!(r.ok && r.max_defect <= 1e-12);
    }

    #[test]
    fn lg_factors_through_ln_and_chi() {
        let pts = sample_points(13, 100, 4, 3.0);
        let (t1, v1, z1) = (0.9, [1.5, -0.5], 2.0);
        let lhs = left_g(t1, v1, z1);
        let rhs = compose_maps(&left_n(t1, v1, z1), &chi(t1, [0.0, 0.0], 0.0)).unwrap();
        assert!(max_pointwise_difference(&lhs, &rhs, &pts) <= 1e-12);
        let rv = rot(-t1, v1);
        let rhs2 = compose_maps(&chi(t1, [0.0, 0.0], 0.0), &left_n(t1, rv, z1)).unwrap();
        assert!(max_pointwise_difference(&lhs, &rhs2, &pts) <= 1e-12);
    }

    fn rot(t: f64, v: [f64; 2]) -> [f64; 2] {
        let (s, c) = t.sin_cos();
        [c * v[0] - s * v[1], s * v[0] + c * v[1]]
    }

    #[test]
    fn psi3_is_psi1_after_psi2() {
        let pts = sample_points(17, 100, 4, 3.0);
        let c = compose_maps(&psi1(), &psi2()).unwrap();
        assert!(max_pointwise_difference(&psi3(), &c, &pts) <= 1e-12);
        let id = compose_maps(&psi3(), &SmoothMap::identity(4)).unwrap();
        assert_eq!(max_pointwise_difference(&psi3(), &id, &pts), 0.0);
    }

    #[test]
    fn nilradical_orbits_keep_t() {
        let pts = sample_points(19, 20, 4, 2.0);
        let gens: Vec<GeneratorParams> = sample_points(23, 100, 5, 2.0)
            .into_iter()
            .map(|g| ([g[0], g[1]], g[2], [g[3], g[4]]))
            .collect();
        let r = nilradical_orbit_check(&pts, &gens);
        assert!(r.ok, "{r:?}");
    }

    #[test]
    fn ftau_differential_matches_float_map() {
        let s = q(1, 3);
        let tau = 2.0 * (1.0f64 / 3.0).atanh();
        let exact = ftau_differential(&s);
        let float = ftau(tau).jacobian_at(&[0.0; 6]);
        assert!((exact.to_f64() - float).amax() <= 1e-12);
    }
}
