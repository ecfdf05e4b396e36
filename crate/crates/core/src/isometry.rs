//! Exact solvers and checkers for isometry-related groups and algebras:
//! the AHC criterion of bi-invariant metrics, the isotropy system of
//! non-degenerate-center algebras, skew derivations, the Ad-splitting test
//! and the nilradical.

use serde::ser::{Serialize, SerializeMap, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::geometry::{j_family, JFamily};
use crate::liealg::{gram, MetricLieAlgebra, SplitAlgebra, Subspace};
use crate::matrix::{self, Matrix, Vector};
use crate::scalar::{int, q, Scalar};

/// Basis of the kernel of a linear system whose unknowns are one or more
/// matrices ("blocks").
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSpace {
    pub blocks: Vec<(String, usize, usize)>,
    pub basis: Vec<Vec<Matrix>>,
    /// every basis element re-checked against an independent predicate
    pub verified: bool,
}

impl SolutionSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Block `b` of every basis element.
    pub fn block(&self, b: usize) -> Vec<&Matrix> {
        self.basis.iter().map(|e| &e[b]).collect()
    }
}

struct NamedBlocks<'a>(&'a [(String, usize, usize)], &'a [Matrix]);

impl Serialize for NamedBlocks<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for ((name, _, _), mat) in self.0.iter().zip(self.1) {
            m.serialize_entry(name, &mat.to_strings())?;
        }
        m.end()
    }
}

impl Serialize for SolutionSpace {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let names: Vec<&str> = self.blocks.iter().map(|b| b.0.as_str()).collect();
        let basis: Vec<NamedBlocks<'_>> = self.basis.iter().map(|e| NamedBlocks(&self.blocks, e)).collect();
        let mut st = s.serialize_struct("SolutionSpace", 4)?;
        st.serialize_field("dimension", &self.dimension())?;
        st.serialize_field("blocks", &names)?;
        st.serialize_field("basis", &basis)?;
        st.serialize_field("verified", &self.verified)?;
        st.end()
    }
}

/// Kernel of the linear map `unknowns -> constraint(unknowns)`, assembled
/// column by column from the unit matrices.
fn solve_blocks(
    blocks: &[(&str, usize, usize)],
    constraint: impl Fn(&[Matrix]) -> Vec<Scalar>,
    check: impl Fn(&[Matrix]) -> bool,
) -> SolutionSpace {
    let sizes: Vec<usize> = blocks.iter().map(|(_, r, c)| r * c).collect();
    let total: usize = sizes.iter().sum();
    let unflatten = |x: &[Scalar]| -> Vec<Matrix> {
        let mut off = 0;
        blocks
            .iter()
            .map(|(_, r, c)| {
                let m = Matrix::from_flat(*r, *c, x[off..off + r * c].to_vec());
                off += r * c;
                m
            })
            .collect()
    };
    let columns: Vec<Vector> = (0..total)
        .map(|k| constraint(&unflatten(&matrix::unit(total, k))))
        .collect();
    let rows = columns.first().map_or(0, Vec::len);
    let basis: Vec<Vec<Matrix>> = if rows == 0 {
        (0..total).map(|k| unflatten(&matrix::unit(total, k))).collect()
    } else {
        Matrix::from_columns(rows, &columns)
            .nullspace()
            .iter()
            .map(|x| unflatten(x))
            .collect()
    };
    let verified = basis.iter().all(|e| check(e));
    SolutionSpace {
        blocks: blocks.iter().map(|(n, r, c)| (n.to_string(), *r, *c)).collect(),
        basis,
        verified,
    }
}

fn require_square(alg: &MetricLieAlgebra, a: &Matrix) -> Result<()> {
    if a.nrows() == alg.dim() && a.ncols() == alg.dim() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: alg.dim(),
            found: a.nrows(),
        })
    }
}

fn require_invertible(a: &Matrix) -> Result<Matrix> {
    a.inverse().ok_or(Error::NotInvertible)
}

fn require_ad_invariant(alg: &MetricLieAlgebra, what: &'static str) -> Result<()> {
    if alg.is_ad_invariant() {
        Ok(())
    } else {
        Err(Error::NotBiInvariant(what))
    }
}

/// `A^T g A = g`.
pub fn preserves_metric(g: &Matrix, a: &Matrix) -> bool {
    &(&a.transpose() * g) * a == *g
}

/// `a^T g + g a = 0`.
pub fn is_skew(g: &Matrix, a: &Matrix) -> bool {
    (&(&a.transpose() * g) + &(g * a)).is_zero()
}

/// `<Au, Aw> = <u, w>` and `A[[u,v],w] = [[Au,Av],Aw]` on all basis triples.
pub fn ahc_isometry_check(alg: &MetricLieAlgebra, a: &Matrix) -> Result<bool> {
    require_ad_invariant(alg, "the AHC isometry criterion")?;
    require_square(alg, a)?;
    require_invertible(a)?;
    if !preserves_metric(alg.metric(), a) {
        return Ok(false);
    }
    let n = alg.dim();
    let cols = a.columns();
    for i in 0..n {
        for j in 0..n {
            let ij = alg.bracket_basis(i, j);
            let aij = alg.br(&cols[i], &cols[j]);
            for k in 0..n {
                let lhs = a.mul_vec(&alg.br(&ij, &matrix::unit(n, k)));
                if lhs != alg.br(&aij, &cols[k]) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn triple_derivation_defect(alg: &MetricLieAlgebra, a: &Matrix) -> Vec<Scalar> {
    let n = alg.dim();
    let cols = a.columns();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let ij = alg.bracket_basis(i, j);
            let a_ij = matrix::vadd(&alg.br(&cols[i], &matrix::unit(n, j)), &alg.br(&matrix::unit(n, i), &cols[j]));
            for k in 0..n {
                let ek = matrix::unit(n, k);
                let lhs = a.mul_vec(&alg.br(&ij, &ek));
                let rhs = matrix::vadd(&alg.br(&a_ij, &ek), &alg.br(&ij, &cols[k]));
                out.extend(matrix::vsub(&lhs, &rhs));
            }
        }
    }
    out
}

/// Skew `a` with `a[[u,v],w] = [[au,v],w] + [[u,av],w] + [[u,v],aw]`: the
/// Lie algebra of the isotropy group of a bi-invariant metric.
pub fn ahc_isotropy_algebra(alg: &MetricLieAlgebra) -> Result<SolutionSpace> {
    require_ad_invariant(alg, "the AHC isotropy algebra")?;
    let n = alg.dim();
    let g = alg.metric();
    let constraint = |x: &[Matrix]| {
        let a = &x[0];
        let mut out = (&(&a.transpose() * g) + &(g * a)).flatten();
        out.extend(triple_derivation_defect(alg, a));
        out
    };
    let check = |x: &[Matrix]| {
        let a = &x[0];
        if !is_skew(g, a) {
            return false;
        }
        (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| {
                    let (ei, ej, ek) = (matrix::unit(n, i), matrix::unit(n, j), matrix::unit(n, k));
                    let lhs = a.mul_vec(&alg.br(&alg.br(&ei, &ej), &ek));
                    let t1 = alg.br(&alg.br(&a.mul_vec(&ei), &ej), &ek);
                    let t2 = alg.br(&alg.br(&ei, &a.mul_vec(&ej)), &ek);
                    let t3 = alg.br(&alg.br(&ei, &ej), &a.mul_vec(&ek));
                    lhs == matrix::vadd(&matrix::vadd(&t1, &t2), &t3)
                })
            })
        })
    };
    Ok(solve_blocks(&[("a", n, n)], constraint, check))
}

fn j_conjugation_holds(jf: &JFamily, phi: &Matrix, t: &Matrix, tinv: &Matrix) -> bool {
    let p = jf.maps().len();
    (0..p).all(|k| &(t * &jf.maps()[k]) * tinv == jf.j(&phi.column(k)))
}

/// `phi` on `z`, `T` on `v` (echelon coordinates of the split): both
/// preserve the metric and `T j(w) T^{-1} = j(phi w)` for all `w` in `z`.
pub fn isotropy_pair_check(split: &SplitAlgebra, phi: &Matrix, t: &Matrix) -> Result<bool> {
    let jf = j_family(split)?;
    let (m, p) = (split.m(), split.p());
    if phi.nrows() != p || phi.ncols() != p {
        return Err(Error::DimensionMismatch {
            expected: p,
            found: phi.nrows(),
        });
    }
    if t.nrows() != m || t.ncols() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: t.nrows(),
        });
    }
    require_invertible(phi)?;
    let tinv = require_invertible(t)?;
    let alg = split.algebra();
    let gz = gram(alg, split.center());
    let gv = gram(alg, split.complement());
    Ok(preserves_metric(&gz, phi) && preserves_metric(&gv, t) && j_conjugation_holds(&jf, phi, t, &tinv))
}

/// Blocks `(phi, T)` of a full `n x n` map preserving `z` and `v`, or `None`.
pub fn isotropy_blocks(split: &SplitAlgebra, a: &Matrix) -> Result<Option<(Matrix, Matrix)>> {
    require_square(split.algebra(), a)?;
    if !split.center().is_invariant(a) || !split.complement().is_invariant(a) {
        return Ok(None);
    }
    let block = |s: &Subspace| {
        let cols: Vec<Vector> = s
            .basis()
            .iter()
            .map(|b| s.coordinates(&a.mul_vec(b)).expect("invariant"))
            .collect();
        Matrix::from_columns(s.dim(), &cols)
    };
    Ok(Some((block(split.center()), block(split.complement()))))
}

/// [`isotropy_pair_check`] for a full matrix; false unless it preserves
/// both `z` and `v`.
pub fn isotropy_check_full(split: &SplitAlgebra, a: &Matrix) -> Result<bool> {
    match isotropy_blocks(split, a)? {
        Some((phi, t)) => isotropy_pair_check(split, &phi, &t),
        None => Ok(false),
    }
}

/// Pairs `(A, B)`, `A` skew on `z`, `B` skew on `v`, with `[B, j(w)] = j(Aw)`.
pub fn isotropy_algebra(split: &SplitAlgebra) -> Result<SolutionSpace> {
    let jf = j_family(split)?;
    let (m, p) = (split.m(), split.p());
    let alg = split.algebra();
    let gz = gram(alg, split.center());
    let gv = gram(alg, split.complement());
    let maps = jf.maps();
    let constraint = |x: &[Matrix]| {
        let (a, b) = (&x[0], &x[1]);
        let mut out = (&(&a.transpose() * &gz) + &(&gz * a)).flatten();
        out.extend((&(&b.transpose() * &gv) + &(&gv * b)).flatten());
        for k in 0..p {
            out.extend((&b.commutator(&maps[k]) - &jf.j(&a.column(k))).flatten());
        }
        out
    };
    let check = |x: &[Matrix]| {
        let (a, b) = (&x[0], &x[1]);
        is_skew(&gz, a)
            && is_skew(&gv, b)
            && split.center().basis().iter().enumerate().all(|(k, w)| {
                // recompute j(w) and j(Aw) from brackets and metric
                let aw = split.z_vector(&a.column(k));
                split.complement().basis().iter().enumerate().all(|(i, u)| {
                    let bu = split.v_vector(&b.column(i));
                    let j_w_u = jf.apply(w, u).expect("center vector");
                    let lhs = matrix::vsub(
                        &split.v_vector(&b.mul_vec(&split.complement().coordinates(&j_w_u).expect("in v"))),
                        &jf.apply(w, &bu).expect("center vector"),
                    );
                    lhs == jf.apply(&aw, u).expect("center vector")
                })
            })
    };
    Ok(solve_blocks(&[("A", p, p), ("B", m, m)], constraint, check))
}

fn derivation_defect(alg: &MetricLieAlgebra, d: &Matrix) -> Vec<Scalar> {
    let n = alg.dim();
    let cols = d.columns();
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let lhs = d.mul_vec(&alg.bracket_basis(i, j));
            let rhs = matrix::vadd(&alg.br(&cols[i], &matrix::unit(n, j)), &alg.br(&matrix::unit(n, i), &cols[j]));
            out.extend(matrix::vsub(&lhs, &rhs));
        }
    }
    out
}

/// `D[u, v] = [Du, v] + [u, Dv]`.
pub fn is_derivation(alg: &MetricLieAlgebra, d: &Matrix) -> bool {
    let n = alg.dim();
    (0..n).all(|i| {
        (0..n).all(|j| {
            let (ei, ej) = (matrix::unit(n, i), matrix::unit(n, j));
            d.mul_vec(&alg.br(&ei, &ej))
                == matrix::vadd(&alg.br(&d.mul_vec(&ei), &ej), &alg.br(&ei, &d.mul_vec(&ej)))
        })
    })
}

/// Derivations that are skew for the metric.
pub fn skew_derivations(alg: &MetricLieAlgebra) -> SolutionSpace {
    let n = alg.dim();
    let g = alg.metric();
    let constraint = |x: &[Matrix]| {
        let d = &x[0];
        let mut out = (&(&d.transpose() * g) + &(g * d)).flatten();
        out.extend(derivation_defect(alg, d));
        out
    };
    let check = |x: &[Matrix]| is_skew(g, &x[0]) && is_derivation(alg, &x[0]);
    solve_blocks(&[("D", n, n)], constraint, check)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdSplitting {
    pub preserves: bool,
    /// a basis vector of `v` whose image leaves `v`
    pub witness: Option<Vector>,
    pub witness_image: Option<Vector>,
}

/// Whether `Ad(exp w) = I + 1/2 ad_w` maps `v` into itself.
pub fn ad_splitting_test(split: &SplitAlgebra, w: &[Scalar]) -> Result<AdSplitting> {
    let alg = split.algebra();
    if w.len() != alg.dim() {
        return Err(Error::DimensionMismatch {
            expected: alg.dim(),
            found: w.len(),
        });
    }
    if !alg.is_two_step() {
        return Err(Error::NotTwoStep("the Ad-splitting test"));
    }
    let ad = &Matrix::identity(alg.dim()) + &alg.ad(w).scale(&q(1, 2));
    for b in split.complement().basis() {
        let image = ad.mul_vec(b);
        if !split.complement().contains(&image) {
            return Ok(AdSplitting {
                preserves: false,
                witness: Some(b.clone()),
                witness_image: Some(image),
            });
        }
    }
    Ok(AdSplitting {
        preserves: true,
        witness: None,
        witness_image: None,
    })
}

/// `A[u, v] = [Au, Av]` on basis pairs and `A^T g A = g`.
pub fn is_isometric_automorphism_differential(alg: &MetricLieAlgebra, a: &Matrix) -> Result<bool> {
    require_square(alg, a)?;
    require_invertible(a)?;
    Ok(preserves_metric(alg.metric(), a) && is_automorphism(alg, a))
}

pub fn is_automorphism(alg: &MetricLieAlgebra, a: &Matrix) -> bool {
    let n = alg.dim();
    let cols = a.columns();
    (0..n).all(|i| (i + 1..n).all(|j| a.mul_vec(&alg.bracket_basis(i, j)) == alg.br(&cols[i], &cols[j])))
}

/// `[S, n] ⊆ S`.
pub fn is_ideal(alg: &MetricLieAlgebra, s: &Subspace) -> bool {
    let n = alg.dim();
    s.basis()
        .iter()
        .all(|b| (0..n).all(|j| s.contains(&alg.br(b, &matrix::unit(n, j)))))
}

/// The associative algebra generated by `ad(S)` is nilpotent, i.e. the
/// chain `V_0 = n`, `V_{i+1} = sum_s ad_s V_i` reaches zero.
pub fn acts_nilpotently(alg: &MetricLieAlgebra, s: &Subspace) -> bool {
    let ads: Vec<Matrix> = s.basis().iter().map(|b| alg.ad(b)).collect();
    let mut v = Subspace::full(alg.dim());
    loop {
        if v.is_zero() {
            return true;
        }
        let images: Vec<Vector> = ads
            .iter()
            .flat_map(|a| v.basis().iter().map(move |x| a.mul_vec(x)))
            .collect();
        let next = Subspace::span(alg.dim(), &images);
        if next == v {
            return false;
        }
        v = next;
    }
}

/// Maximal nilpotent ideal of a solvable algebra.
///
/// Every ad-nilpotent `x` satisfies `tr(ad_x ad_y^k) = 0` for all `y`, `k`;
/// for generic `y` these functionals cut out exactly the ad-nilpotent
/// elements. Probes `y = sum_i s^i x_i`, `s = 1, 2, ...` are added until the
/// common kernel is an ideal acting nilpotently, which then is the
/// nilradical.
pub fn nilradical(alg: &MetricLieAlgebra) -> Result<Subspace> {
    if !alg.jacobi_holds() {
        return Err(Error::InvalidAlgebra("Jacobi identity fails".into()));
    }
    if !alg.is_solvable() {
        return Err(Error::NotSolvable);
    }
    let n = alg.dim();
    let ads: Vec<Matrix> = (0..n).map(|i| alg.ad(&matrix::unit(n, i))).collect();
    let bound = n * (n + 1) / 2 * n.saturating_sub(1) + 1;
    let mut rows: Vec<Vector> = Vec::new();
    for s in 1..=bound as i64 {
        let y: Vector = (1..=n as u32).map(|i| int(s).pow(i as i32)).collect();
        let ady = alg.ad(&y);
        let mut power = Matrix::identity(n);
        for _ in 1..=n {
            power = &power * &ady;
            rows.push(ads.iter().map(|a| (a * &power).trace()).collect());
        }
        let candidate = Subspace::kernel(&Matrix::from_rows(rows.clone()));
        if is_ideal(alg, &candidate) && acts_nilpotently(alg, &candidate) {
            return Ok(candidate);
        }
    }
    unreachable!("some probe separates all weights within the bound")
}

/// `candidate ⊆ container`, both subspaces of `amb`.
pub fn contains_subalgebra(amb: &MetricLieAlgebra, container: &Subspace, candidate: &Subspace) -> bool {
    container.ambient_dim() == amb.dim()
        && candidate.ambient_dim() == amb.dim()
        && container.contains_subspace(candidate)
}

/// `span{[x, y]}` for `x, y` in `s` is inside `s`.
pub fn is_subalgebra(alg: &MetricLieAlgebra, s: &Subspace) -> bool {
    let b = s.basis();
    b.iter().all(|x| b.iter().all(|y| s.contains(&alg.br(x, y))))
}
