//! Exact primary decomposition of the Ricci operator and the structural
//! classifiers built on it.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{j_family, ricci, RicciData};
use crate::liealg::{gram, restrict_metric, split, MetricLieAlgebra, SplitAlgebra, Subspace};
use crate::matrix::Matrix;
use crate::poly::{characteristic_polynomial, factor, minimal_polynomial, Poly};
use crate::scalar::{self, int, Scalar};

/// Characteristic and minimal polynomial with their factorizations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharMin {
    pub characteristic: Poly,
    pub minimal: Poly,
    pub characteristic_factors: Vec<(Poly, usize)>,
    pub minimal_factors: Vec<(Poly, usize)>,
}

/// `(x - 1/2)^2 (x + 1/2)` style rendering.
pub fn format_factored(factors: &[(Poly, usize)]) -> String {
    if factors.is_empty() {
        return "1".into();
    }
    factors
        .iter()
        .map(|(p, k)| {
            let base = if p.degree() == Some(1) && p.coeffs()[0].is_zero() {
                "x".to_string()
            } else {
                format!("({p})")
            };
            if *k == 1 {
                base
            } else {
                format!("{base}^{k}")
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn require_square(t: &Matrix) -> Result<()> {
    if t.is_square() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: t.nrows(),
            found: t.ncols(),
        })
    }
}

pub fn char_min_polynomials(t: &Matrix) -> Result<CharMin> {
    require_square(t)?;
    let characteristic = characteristic_polynomial(t);
    let minimal = minimal_polynomial(t);
    let characteristic_factors = factor(&characteristic)?;
    let minimal_factors = factor(&minimal)?;
    Ok(CharMin {
        characteristic,
        minimal,
        characteristic_factors,
        minimal_factors,
    })
}

/// One primary component `V_i = ker p_i(T)^{r_i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimaryComponent {
    /// monic irreducible factor `p_i`
    pub factor: Poly,
    /// exponent `r_i` of `p_i` in the minimal polynomial
    pub multiplicity: usize,
    pub subspace: Subspace,
    /// the root of `p_i` when it is linear
    pub eigenvalue: Option<Scalar>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimaryDecomposition {
    pub characteristic: Poly,
    pub minimal: Poly,
    pub components: Vec<PrimaryComponent>,
}

impl PrimaryDecomposition {
    pub fn dims(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.subspace.dim()).collect()
    }

    /// The component of a rational eigenvalue.
    pub fn eigenspace(&self, lambda: &Scalar) -> Option<&Subspace> {
        self.components
            .iter()
            .find(|c| c.eigenvalue.as_ref() == Some(lambda))
            .map(|c| &c.subspace)
    }

    pub fn digest(&self) -> EigenSummary {
        EigenSummary {
            characteristic: format_factored(&factor(&self.characteristic).unwrap_or_default()),
            minimal: format_factored(&factor(&self.minimal).unwrap_or_default()),
            components: self
                .components
                .iter()
                .map(|c| ComponentDigest {
                    factor: c.factor.to_string(),
                    eigenvalue: c.eigenvalue.as_ref().map(scalar::format),
                    multiplicity: c.multiplicity,
                    dimension: c.subspace.dim(),
                    assignment: None,
                })
                .collect(),
        }
    }
}

/// Complex-conjugate eigenvalue pairs appear as irreducible quadratic
/// factors whose kernel is the real form of the pair.
pub fn primary_decomposition(t: &Matrix) -> Result<PrimaryDecomposition> {
    let cm = char_min_polynomials(t)?;
    let components = cm
        .minimal_factors
        .iter()
        .map(|(p, r)| PrimaryComponent {
            factor: p.clone(),
            multiplicity: *r,
            subspace: Subspace::kernel(&p.pow(*r).eval_matrix(t)),
            eigenvalue: p.linear_root(),
        })
        .collect();
    Ok(PrimaryDecomposition {
        characteristic: cm.characteristic,
        minimal: cm.minimal,
        components,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Membership {
    V,
    Z,
    Mixed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplittingCriterion {
    pub holds: bool,
    pub assignment: Vec<(Poly, Membership)>,
    pub decomposition: PrimaryDecomposition,
    pub ricci: RicciData,
}

/// Whether every primary component of `Rc` lies in `v` or in `z`.
pub fn splitting_criterion(split: &SplitAlgebra) -> Result<SplittingCriterion> {
    let ricci = ricci(split)?;
    let decomposition = primary_decomposition(&ricci.operator)?;
    let assignment: Vec<(Poly, Membership)> = decomposition
        .components
        .iter()
        .map(|c| {
            let m = if split.complement().contains_subspace(&c.subspace) {
                Membership::V
            } else if split.center().contains_subspace(&c.subspace) {
                Membership::Z
            } else {
                Membership::Mixed
            };
            (c.factor.clone(), m)
        })
        .collect();
    let holds = assignment.iter().all(|(_, m)| *m != Membership::Mixed);
    Ok(SplittingCriterion {
        holds,
        assignment,
        decomposition,
        ricci,
    })
}

/// `j(u) j(w) + j(w) j(u) = -2 <u, w> I` on all pairs of center basis vectors.
pub fn is_pseudo_h_type(split: &SplitAlgebra) -> Result<bool> {
    let jf = j_family(split)?;
    let gz = gram(split.algebra(), split.center());
    let id = Matrix::identity(split.m());
    let maps = jf.maps();
    for a in 0..maps.len() {
        for b in a..maps.len() {
            let anti = &(&maps[a] * &maps[b]) + &(&maps[b] * &maps[a]);
            if anti != id.scale(&(int(-2) * &gz[(a, b)])) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Conclusion {
    /// non-degenerate center: splitting-preserving isometries at `e` are
    /// exactly the isometric automorphisms
    SplitEqAut,
    /// every primary component lies in `v` or `z`: every isometry preserves
    /// the splitting (sufficient condition only)
    IsoEqSplit,
    /// pseudo-H-type: all three groups coincide
    IsoEqAut,
    /// pseudo-H-type: negative scalar curvature
    NegativeScalar,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentDigest {
    pub factor: String,
    pub eigenvalue: Option<String>,
    pub multiplicity: usize,
    pub dimension: usize,
    pub assignment: Option<Membership>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EigenSummary {
    pub characteristic: String,
    pub minimal: String,
    pub components: Vec<ComponentDigest>,
}

/// Fields that do not apply to the input are `None` (`null` in JSON) and
/// the reason is recorded in `notes`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub dim: usize,
    pub two_step: bool,
    pub center_dim: usize,
    pub center_nondegenerate: bool,
    pub pseudo_h_type: Option<bool>,
    pub splitting_criterion_holds: Option<bool>,
    pub ricci_nilpotent: Option<bool>,
    pub scalar_curvature: Option<String>,
    pub ricci_operator: Option<Vec<Vec<String>>>,
    pub ricci_v_block: Option<Vec<Vec<String>>>,
    pub ricci_z_block: Option<Vec<Vec<String>>>,
    pub eigen_summary: Option<EigenSummary>,
    pub structural_conclusions: Vec<Conclusion>,
    pub consistent: bool,
    pub notes: Vec<String>,
}

impl ClassificationReport {
    pub fn has(&self, c: Conclusion) -> bool {
        self.structural_conclusions.contains(&c)
    }

    pub fn to_text(&self) -> String {
        let show = |o: &Option<bool>| o.map_or("n/a".to_string(), |b| b.to_string());
        let mut s = String::new();
        s.push_str(&format!("dimension              {}\n", self.dim));
        s.push_str(&format!("2-step nilpotent       {}\n", self.two_step));
        s.push_str(&format!(
            "center                 dim {}, {}\n",
            self.center_dim,
            if self.center_nondegenerate { "non-degenerate" } else { "degenerate" }
        ));
        s.push_str(&format!("pseudo-H-type          {}\n", show(&self.pseudo_h_type)));
        s.push_str(&format!("splitting criterion    {}\n", show(&self.splitting_criterion_holds)));
        s.push_str(&format!("Ricci nilpotent        {}\n", show(&self.ricci_nilpotent)));
        s.push_str(&format!(
            "scalar curvature       {}\n",
            self.scalar_curvature.as_deref().unwrap_or("n/a")
        ));
        if let Some(e) = &self.eigen_summary {
            s.push_str(&format!("char poly              {}\n", e.characteristic));
            s.push_str(&format!("min poly               {}\n", e.minimal));
            for c in &e.components {
                s.push_str(&format!(
                    "  {:<20} mult {} dim {} in {}\n",
                    c.factor,
                    c.multiplicity,
                    c.dimension,
                    c.assignment
                        .map_or("-", |m| match m {
                            Membership::V => "v",
                            Membership::Z => "z",
                            Membership::Mixed => "mixed",
                        })
                ));
            }
        }
        let tags: Vec<String> = self
            .structural_conclusions
            .iter()
            .map(|c| serde_json::to_value(c).expect("enum").as_str().unwrap_or_default().to_string())
            .collect();
        s.push_str(&format!("conclusions            [{}]\n", tags.join(", ")));
        for n in &self.notes {
            s.push_str(&format!("note: {n}\n"));
        }
        s
    }
}

pub fn classify(alg: &MetricLieAlgebra) -> ClassificationReport {
    let center = alg.center();
    let center_nondegenerate = !center.is_zero() && restrict_metric(alg, &center).nondegenerate;
    let mut report = ClassificationReport {
        dim: alg.dim(),
        two_step: alg.is_two_step(),
        center_dim: center.dim(),
        center_nondegenerate,
        pseudo_h_type: None,
        splitting_criterion_holds: None,
        ricci_nilpotent: None,
        scalar_curvature: None,
        ricci_operator: None,
        ricci_v_block: None,
        ricci_z_block: None,
        eigen_summary: None,
        structural_conclusions: Vec::new(),
        consistent: true,
        notes: Vec::new(),
    };
    if !report.two_step {
        report
            .notes
            .push("not 2-step nilpotent: the Ricci formulas and classifiers need [n,n] inside the center".into());
        return report;
    }
    if !center_nondegenerate {
        report
            .notes
            .push("center degenerate: the Ricci operator and j-maps need a non-degenerate center".into());
        return report;
    }
    report.structural_conclusions.push(Conclusion::SplitEqAut);
    let s = split(alg).expect("center checked non-degenerate");
    let crit = match splitting_criterion(&s) {
        Ok(c) => c,
        Err(e) => {
            report.notes.push(e.to_string());
            return report;
        }
    };
    let pseudo_h = is_pseudo_h_type(&s).expect("center checked non-degenerate");
    let r = &crit.ricci;
    report.pseudo_h_type = Some(pseudo_h);
    report.splitting_criterion_holds = Some(crit.holds);
    report.ricci_nilpotent = Some(crit.decomposition.minimal == Poly::x().pow(crit.decomposition.minimal.degree().unwrap_or(0)));
    report.scalar_curvature = Some(scalar::format(&r.scalar));
    report.ricci_operator = Some(r.operator.to_strings());
    report.ricci_v_block = Some(r.v_block.to_strings());
    report.ricci_z_block = Some(r.z_block.to_strings());
    let mut summary = crit.decomposition.digest();
    for (c, (_, m)) in summary.components.iter_mut().zip(&crit.assignment) {
        c.assignment = Some(*m);
    }
    report.eigen_summary = Some(summary);
    if crit.holds {
        report.structural_conclusions.push(Conclusion::IsoEqSplit);
    }
    if pseudo_h {
        report.structural_conclusions.push(Conclusion::IsoEqAut);
        if r.scalar.is_negative() {
            report.structural_conclusions.push(Conclusion::NegativeScalar);
        }
        let (m, p) = (s.m() as i64, s.p() as i64);
        let expected = scalar::q(-p * m, 4);
        report.consistent = crit.holds && r.scalar == expected && r.scalar.is_negative();
        if !report.consistent {
            report
                .notes
                .push("inconsistent: pseudo-H-type must give the splitting criterion and s = -pm/4 < 0".into());
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::scalar::q;

    fn p(coeffs: &[Scalar]) -> Poly {
        Poly::new(coeffs.to_vec())
    }

    #[test]
    fn lorentz_ricci_polynomials() {
        let a = catalog::h3_lorentz();
        let r = ricci(&split(&a).unwrap()).unwrap();
        let cm = char_min_polynomials(&r.operator).unwrap();
        let xm = Poly::linear(&q(1, 2));
        let xp = Poly::linear(&q(-1, 2));
        assert_eq!(cm.characteristic, &xm.pow(2) * &xp);
        assert_eq!(cm.minimal, &xm * &xp);
        assert_eq!(format_factored(&cm.characteristic_factors), "(x + 1/2) (x - 1/2)^2");
    }

    #[test]
    fn nilpotent_and_identity_polynomials() {
        let a = catalog::rxh3();
        let r = ricci(&split(&a).unwrap()).unwrap();
        let cm = char_min_polynomials(&r.operator).unwrap();
        assert_eq!(cm.minimal, Poly::x().pow(2));
        assert_eq!(cm.characteristic, Poly::x().pow(4));
        let id = char_min_polynomials(&Matrix::identity(3)).unwrap();
        assert_eq!(id.characteristic, Poly::linear(&int(1)).pow(3));
        assert_eq!(id.minimal, Poly::linear(&int(1)));
    }

    #[test]
    fn primary_components_of_examples() {
        let a = catalog::h3_lorentz();
        let r = ricci(&split(&a).unwrap()).unwrap();
        let d = primary_decomposition(&r.operator).unwrap();
        assert_eq!(d.eigenspace(&q(1, 2)).unwrap(), &Subspace::coordinate(3, &[0, 1]));
        assert_eq!(d.eigenspace(&q(-1, 2)).unwrap(), &Subspace::coordinate(3, &[2]));

        let b = catalog::rxh3();
        let r = ricci(&split(&b).unwrap()).unwrap();
        let d = primary_decomposition(&r.operator).unwrap();
        assert_eq!(d.components.len(), 1);
        assert!(d.eigenspace(&int(0)).unwrap().is_full());

        let h = catalog::htype6();
        let r = ricci(&split(&h).unwrap()).unwrap();
        let d = primary_decomposition(&r.operator).unwrap();
        assert_eq!(d.eigenspace(&int(-1)).unwrap(), &Subspace::coordinate(6, &[0, 1, 2, 3]));
        assert_eq!(d.eigenspace(&int(1)).unwrap(), &Subspace::coordinate(6, &[4, 5]));
    }

    #[test]
    fn rotation_gives_quadratic_component() {
        let t = Matrix::from_i64(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 2]]);
        let d = primary_decomposition(&t).unwrap();
        assert_eq!(d.components.len(), 2);
        assert_eq!(d.components[1].factor, p(&[int(1), int(0), int(1)]));
        assert_eq!(d.components[1].subspace, Subspace::coordinate(3, &[0, 1]));
        assert_eq!(d.components[1].eigenvalue, None);
    }

    #[test]
    fn criterion_on_examples() {
        let s = split(&catalog::h3_lorentz()).unwrap();
        assert!(splitting_criterion(&s).unwrap().holds);
        let s = split(&catalog::rxh3()).unwrap();
        let c = splitting_criterion(&s).unwrap();
        assert!(!c.holds);
        assert_eq!(c.assignment, vec![(Poly::x(), Membership::Mixed)]);
        for a in [catalog::h3_riemannian(), catalog::htype6(), catalog::h3_pseudo_htype()] {
            assert!(splitting_criterion(&split(&a).unwrap()).unwrap().holds);
        }
    }

    #[test]
    fn pseudo_h_type_examples() {
        assert!(is_pseudo_h_type(&split(&catalog::h3_riemannian()).unwrap()).unwrap());
        assert!(is_pseudo_h_type(&split(&catalog::h3_pseudo_htype()).unwrap()).unwrap());
        assert!(is_pseudo_h_type(&split(&catalog::htype6()).unwrap()).unwrap());
        assert!(!is_pseudo_h_type(&split(&catalog::h3_lorentz()).unwrap()).unwrap());
        assert!(matches!(
            is_pseudo_h_type(&catalog::free3_neutral_split()),
            Err(Error::DegenerateCenter(_))
        ));
    }

    #[test]
    fn classify_lorentz() {
        let r = classify(&catalog::h3_lorentz());
        assert_eq!(r.pseudo_h_type, Some(false));
        assert_eq!(r.splitting_criterion_holds, Some(true));
        assert_eq!(r.scalar_curvature.as_deref(), Some("1/2"));
        assert_eq!(r.structural_conclusions, vec![Conclusion::SplitEqAut, Conclusion::IsoEqSplit]);
        assert!(r.consistent);
    }

    #[test]
    fn classify_rxh3() {
        let r = classify(&catalog::rxh3());
        assert_eq!(r.splitting_criterion_holds, Some(false));
        assert_eq!(r.ricci_nilpotent, Some(true));
        assert_eq!(r.scalar_curvature.as_deref(), Some("0"));
        assert_eq!(r.structural_conclusions, vec![Conclusion::SplitEqAut]);
    }

    #[test]
    fn classify_riemannian_heisenberg() {
        let r = classify(&catalog::h3_riemannian());
        assert_eq!(r.pseudo_h_type, Some(true));
        assert_eq!(r.scalar_curvature.as_deref(), Some("-1/2"));
        for c in [
            Conclusion::IsoEqAut,
            Conclusion::IsoEqSplit,
            Conclusion::SplitEqAut,
            Conclusion::NegativeScalar,
        ] {
            assert!(r.has(c));
        }
        assert!(r.consistent);
    }

    #[test]
    fn indefinite_pseudo_h_type_has_negative_scalar() {
        // p = 1, m = 2 for every pseudo-H-type Heisenberg metric
        let r = classify(&catalog::h3_pseudo_htype());
        assert_eq!(r.scalar_curvature.as_deref(), Some("-1/2"));
        assert!(r.has(Conclusion::NegativeScalar) && r.consistent);
    }

    #[test]
    fn classify_not_applicable() {
        let r = classify(&catalog::free3_neutral());
        assert!(!r.center_nondegenerate);
        assert_eq!(r.pseudo_h_type, None);
        assert!(r.structural_conclusions.is_empty());
        let r = classify(&catalog::oscillator4());
        assert!(!r.two_step);
        assert_eq!(r.scalar_curvature, None);
    }

    #[test]
    fn json_schema_field_names() {
        let v = serde_json::to_value(classify(&catalog::h3_riemannian())).unwrap();
        for k in [
            "center_nondegenerate",
            "pseudo_h_type",
            "splitting_criterion_holds",
            "ricci_nilpotent",
            "scalar_curvature",
            "eigen_summary",
            "structural_conclusions",
        ] {
            assert!(v.get(k).is_some(), "{k}");
        }
        assert_eq!(v["structural_conclusions"][0], "SPLIT_EQ_AUT");
    }
}
