mod common;

use nilgeom::catalog;
use nilgeom::geometry::{ricci, ricci_with};
use nilgeom::isometry::{self, is_skew};
use nilgeom::liealg::{orthogonal_complement, split, split_with, AlgebraBuilder, PivotOrder, Subspace};
use nilgeom::matrix;
use nilgeom::scalar::{int, q};
use nilgeom::spectral::{self, Conclusion, Membership};
use nilgeom::{Matrix, MetricLieAlgebra, Scalar, Vector};
use num_traits::Zero;
use proptest::prelude::*;
use rand::Rng;

fn small(rng: &mut impl Rng, lo: i64, hi: i64) -> Scalar {
    int(rng.gen_range(lo..=hi))
}

/// Random `g = L^T D L` with `L` unit lower triangular and `D` a random
/// signed diagonal, so `g` is non-degenerate by construction.
fn random_metric(rng: &mut impl Rng, n: usize) -> Matrix {
    let l = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => int(1),
        std::cmp::Ordering::Greater => small(rng, -1, 1),
        std::cmp::Ordering::Less => Scalar::zero(),
    });
    let d = Matrix::from_fn(n, n, |i, j| {
        if i == j {
            let s = if rng.gen_bool(0.5) { 1 } else { -1 };
            q(s * rng.gen_range(1..=3), rng.gen_range(1..=2))
        } else {
            Scalar::zero()
        }
    });
    &(&l.transpose() * &d) * &l
}

/// Random 2-step algebra on `x_1..x_m, z_1..z_p` with `[x_i, x_j]` in
/// `span{z}`; `None` if all brackets vanish.
fn random_two_step(seed: u64, m: usize, p: usize) -> Option<MetricLieAlgebra> {
    let mut r = common::rng(seed);
    let n = m + p;
    let names: Vec<String> = (1..=m).map(|i| format!("x{i}")).chain((1..=p).map(|k| format!("z{k}"))).collect();
    let mut b = AlgebraBuilder::new(names);
    for i in 0..m {
        for j in (i + 1)..m {
            let mut v = matrix::zero_vec(n);
            for k in 0..p {
                v[m + k] = small(&mut r, -2, 2);
            }
            b = b.bracket(i, j, v);
        }
    }
    let alg = b.metric(random_metric(&mut r, n)).build().ok()?;
    alg.is_two_step().then_some(alg)
}

/// The same metric Lie algebra written in the basis given by the columns of `p`.
fn transport(alg: &MetricLieAlgebra, p: &Matrix) -> Option<MetricLieAlgebra> {
    let pinv = p.inverse()?;
    let n = alg.dim();
    let cols = p.columns();
    let structure: Vec<Vec<Vector>> = (0..n)
        .map(|i| (0..n).map(|j| pinv.mul_vec(&alg.bracket(&cols[i], &cols[j]).unwrap())).collect())
        .collect();
    let g = &(&p.transpose() * alg.metric()) * p;
    MetricLieAlgebra::new(alg.basis_names().to_vec(), structure, g).ok()
}

/// Unit upper triangular with entries in `-1..=1`: determinant 1 and an
/// integer inverse, so transported constants stay small.
fn random_unimodular(seed: u64, n: usize) -> Matrix {
    let mut r = common::rng(seed);
    Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => int(1),
        std::cmp::Ordering::Less => small(&mut r, -1, 1),
        std::cmp::Ordering::Greater => Scalar::zero(),
    })
}

fn block_diag(a: &Matrix, b: &Matrix) -> Matrix {
    let k = a.nrows();
    Matrix::from_fn(k + b.nrows(), k + b.ncols(), |i, j| match (i < k, j < k) {
        (true, true) => a[(i, j)].clone(),
        (false, false) => b[(i - k, j - k)].clone(),
        _ => Scalar::zero(),
    })
}

fn catalog_algebra() -> impl Strategy<Value = (&'static str, MetricLieAlgebra)> {
    prop::sample::select(catalog::ALGEBRA_NAMES.to_vec()).prop_map(|n| (n, catalog::algebra(n).unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bracket_antisymmetric_and_center_kills((_, alg) in catalog_algebra(), seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let n = alg.dim();
        let (x, y) = (common::vector(&mut r, n), common::vector(&mut r, n));
        let xy = alg.bracket(&x, &y).unwrap();
        let yx = alg.bracket(&y, &x).unwrap();
        prop_assert_eq!(matrix::vadd(&xy, &yx), matrix::zero_vec(n));
        let z = alg.center();
        if !z.is_zero() {
            let c = common::element(&mut r, z.basis(), n);
            prop_assert_eq!(alg.bracket(&c, &x).unwrap(), matrix::zero_vec(n));
        }
    }

    #[test]
    fn orthogonal_complement_dimension((_, alg) in catalog_algebra(), seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let n = alg.dim();
        let k = r.gen_range(1..=n);
        let vs: Vec<Vector> = (0..k).map(|_| common::vector(&mut r, n)).collect();
        let s = Subspace::span(n, &vs);
        let perp = orthogonal_complement(&alg, &s);
        prop_assert_eq!(perp.dim() + s.dim(), n);
        for a in s.basis() {
            for b in perp.basis() {
                prop_assert!(alg.inner(a, b).is_zero());
            }
        }
    }

    #[test]
    fn ad_invariant_means_totally_antisymmetric((_, alg) in catalog_algebra(), seed in any::<u64>()) {
        prop_assume!(alg.is_ad_invariant());
        let mut r = common::rng(seed);
        let n = alg.dim();
        let (x, y, z) = (common::vector(&mut r, n), common::vector(&mut r, n), common::vector(&mut r, n));
        let a = alg.inner(&alg.bracket(&x, &y).unwrap(), &z);
        let b = alg.inner(&x, &alg.bracket(&y, &z).unwrap());
        let c = alg.inner(&alg.bracket(&y, &x).unwrap(), &z);
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a, -c);
    }

    #[test]
    fn ricci_independent_of_pivot_order(seed in any::<u64>(), m in 2usize..=4, p in 1usize..=2) {
        let alg = random_two_step(seed, m, p);
        prop_assume!(alg.is_some());
        let s = split(&alg.unwrap());
        prop_assume!(s.is_ok());
        let s = s.unwrap();
        let a = ricci_with(&s, PivotOrder::LargestFirst).unwrap();
        let b = ricci_with(&s, PivotOrder::LastFirst).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn primary_decomposition_is_consistent(seed in any::<u64>(), m in 2usize..=4, p in 1usize..=2) {
        let alg = random_two_step(seed, m, p);
        prop_assume!(alg.is_some());
        let s = split(&alg.unwrap());
        prop_assume!(s.is_ok());
        let s = s.unwrap();
        let rc = ricci(&s).unwrap().operator;
        let d = spectral::primary_decomposition(&rc).unwrap();
        prop_assert_eq!(d.dims().iter().sum::<usize>(), s.algebra().dim());
        let all = d.components.iter().fold(Subspace::zero(rc.nrows()), |acc, c| acc.sum(&c.subspace));
        prop_assert!(all.is_full());
        for c in &d.components {
            let killer = c.factor.pow(c.multiplicity).eval_matrix(&rc);
            prop_assert!(c.subspace.basis().iter().all(|v| matrix::is_zero_vec(&killer.mul_vec(v))));
            prop_assert!(c.subspace.is_invariant(&rc));
        }
    }

    #[test]
    fn splitting_criterion_bookkeeping(seed in any::<u64>(), m in 2usize..=4, p in 1usize..=2) {
        let alg = random_two_step(seed, m, p);
        prop_assume!(alg.is_some());
        let alg = alg.unwrap();
        let s = split(&alg);
        prop_assume!(s.is_ok());
        let s = s.unwrap();
        let crit = spectral::splitting_criterion(&s).unwrap();
        prop_assert_eq!(crit.assignment.len(), crit.decomposition.components.len());
        for ((f, mem), c) in crit.assignment.iter().zip(&crit.decomposition.components) {
            prop_assert_eq!(f, &c.factor);
            let expected = if s.complement().contains_subspace(&c.subspace) {
                Membership::V
            } else if s.center().contains_subspace(&c.subspace) {
                Membership::Z
            } else {
                Membership::Mixed
            };
            prop_assert_eq!(*mem, expected);
        }
        prop_assert_eq!(crit.holds, crit.assignment.iter().all(|(_, m)| *m != Membership::Mixed));
        let report = spectral::classify(&alg);
        prop_assert_eq!(report.splitting_criterion_holds, Some(crit.holds));
        if !crit.holds {
            prop_assert!(!report.has(Conclusion::IsoEqSplit));
        }
    }

    #[test]
    fn pseudo_h_type_ricci_law(
        name in prop::sample::select(vec!["h3_riemannian", "h3_pseudo_htype", "htype6"]),
        seed in any::<u64>(),
    ) {
        let base = catalog::algebra(name).unwrap();
        let alg = transport(&base, &random_unimodular(seed, base.dim())).unwrap();
        let s = split(&alg).unwrap();
        prop_assert!(spectral::is_pseudo_h_type(&s).unwrap());
        let (m, p) = (s.m() as i64, s.p() as i64);
        let rc = ricci(&s).unwrap();
        prop_assert_eq!(&rc.v_block, &Matrix::identity(s.m()).scale(&q(-p, 2)));
        prop_assert_eq!(&rc.z_block, &Matrix::identity(s.p()).scale(&q(m, 4)));
        prop_assert_eq!(&rc.scalar, &q(-p * m, 4));
        let report = spectral::classify(&alg);
        prop_assert!(report.has(Conclusion::IsoEqAut) && report.has(Conclusion::NegativeScalar));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn solution_spaces_verified(seed in any::<u64>(), m in 2usize..=3, p in 1usize..=2) {
        let alg = random_two_step(seed, m, p);
        prop_assume!(alg.is_some());
        let alg = alg.unwrap();
        prop_assert!(isometry::skew_derivations(&alg).verified);
        if let Ok(s) = split(&alg) {
            prop_assert!(isometry::isotropy_algebra(&s).unwrap().verified);
        }
    }

    #[test]
    fn ahc_of_bi_invariant_two_step_is_full_so(seed in any::<u64>()) {
        let alg = transport(&catalog::free3_neutral(), &random_unimodular(seed, 6)).unwrap();
        prop_assert!(alg.is_ad_invariant());
        let n = alg.dim();
        let ahc = isometry::ahc_isotropy_algebra(&alg).unwrap();
        prop_assert!(ahc.verified);
        prop_assert_eq!(ahc.dimension(), n * (n - 1) / 2);
    }

    #[test]
    fn isotropy_solutions_are_skew_full_maps(seed in any::<u64>(), m in 2usize..=3, p in 1usize..=2) {
        let alg = random_two_step(seed, m, p);
        prop_assume!(alg.is_some());
        let s = split(&alg.unwrap());
        prop_assume!(s.is_ok());
        let s = s.unwrap();
        let basis = s.adapted_basis();
        let inv = basis.inverse().unwrap();
        for pair in &isometry::isotropy_algebra(&s).unwrap().basis {
            let (a, b) = (&pair[0], &pair[1]);
            let full = &(&basis * &block_diag(b, a)) * &inv;
            prop_assert!(is_skew(s.algebra().metric(), &full));
        }
    }

    #[test]
    fn skew_derivations_inside_isotropy(seed in any::<u64>(), m in 2usize..=3, p in 1usize..=2) {
        let alg = random_two_step(seed, m, p);
        prop_assume!(alg.is_some());
        let alg = alg.unwrap();
        let s = split(&alg);
        prop_assume!(s.is_ok());
        let s = s.unwrap();
        let iso = isometry::isotropy_algebra(&s).unwrap();
        let flat = |a: &Matrix, b: &Matrix| -> Vector {
            let mut v = a.flatten();
            v.extend(b.flatten());
            v
        };
        let len = s.p() * s.p() + s.m() * s.m();
        let span = Subspace::span(len, &iso.basis.iter().map(|x| flat(&x[0], &x[1])).collect::<Vec<_>>());
        for d in &isometry::skew_derivations(&alg).basis {
            let (phi, t) = isometry::isotropy_blocks(&s, &d[0]).unwrap().expect("derivations preserve z and z-perp");
            prop_assert!(span.contains(&flat(&phi, &t)));
        }
    }

    #[test]
    fn ad_splitting_fails_on_free3_neutral(seed in any::<u64>()) {
        let alg = catalog::free3_neutral();
        let mut r = common::rng(seed);
        let s = split_with(&alg, nilgeom::checks::random_complement(&mut r, &alg)).unwrap();
        let z = alg.center();
        let w = loop {
            let w = common::vector(&mut r, 6);
            if !z.contains(&w) {
                break w;
            }
        };
        let res = isometry::ad_splitting_test(&s, &w).unwrap();
        prop_assert!(!res.preserves);
        let witness = res.witness.expect("failure has a witness");
        prop_assert!(s.complement().contains(&witness));
    }
}
