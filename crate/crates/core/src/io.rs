//! Algebra definition files.
//!
//! ```json
//! {
//!   "dim": 3,
//!   "basis": ["e1", "e2", "e3"],
//!   "brackets": [{"i": 1, "j": 2, "coeffs": {"3": "1"}}],
//!   "metric": [{"i": 1, "j": 1, "value": "-1"}, {"i": 2, "j": 2, "value": "1"}, {"i": 3, "j": 3, "value": "1"}],
//!   "complement": [["1", "0", "0"], ["0", "1", "0"]]
//! }
//! ```
//!
//! Indices are 1-based, rationals are `"p/q"` strings, the metric gets its
//! symmetric closure, and anything unspecified is zero.

use std::collections::BTreeMap;
use std::path::Path;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::liealg::{split, split_with, AlgebraBuilder, MetricLieAlgebra, SplitAlgebra, Subspace};
use crate::matrix::{self, Matrix};
use crate::scalar::{self, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: BTreeMap<usize, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetricEntry {
    pub i: usize,
    pub j: usize,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
    #[serde(default)]
    pub metric: Vec<MetricEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complement: Option<Vec<Vec<String>>>,
}

/// A parsed definition: the algebra and the optional complement of its center.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoadedAlgebra {
    pub algebra: MetricLieAlgebra,
    pub complement: Option<Subspace>,
}

impl LoadedAlgebra {
    /// `split_with` the given complement, otherwise the orthogonal split.
    pub fn split(&self) -> Result<SplitAlgebra> {
        match &self.complement {
            Some(v) => split_with(&self.algebra, v.clone()),
            None => split(&self.algebra),
        }
    }
}

fn index(k: usize, dim: usize, what: &str) -> Result<usize> {
    if (1..=dim).contains(&k) {
        Ok(k - 1)
    } else {
        Err(Error::InvalidAlgebra(format!("{what} index {k} outside 1..={dim}")))
    }
}

impl AlgebraFile {
    pub fn to_algebra(&self) -> Result<LoadedAlgebra> {
        let n = self.dim;
        if self.basis.len() != n {
            return Err(Error::InvalidAlgebra(format!("dim is {n} but {} basis names given", self.basis.len())));
        }
        let mut structure: BTreeMap<(usize, usize), Vec<Scalar>> = BTreeMap::new();
        for e in &self.brackets {
            let (i, j) = (index(e.i, n, "bracket")?, index(e.j, n, "bracket")?);
            let mut v = matrix::zero_vec(n);
            for (&k, c) in &e.coeffs {
                v[index(k, n, "bracket coefficient")?] = scalar::parse(c)?;
            }
            if i == j {
                if matrix::is_zero_vec(&v) {
                    continue;
                }
                return Err(Error::InvalidAlgebra(format!("[x{0}, x{0}] must vanish", e.i)));
            }
            let (key, v) = if i < j { ((i, j), v) } else { ((j, i), v.iter().map(|x| -x).collect()) };
            if structure.insert(key, v).is_some() {
                return Err(Error::InvalidAlgebra(format!("bracket of x{} and x{} given twice", e.i, e.j)));
            }
        }
        let mut g: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
        for e in &self.metric {
            let (i, j) = (index(e.i, n, "metric")?, index(e.j, n, "metric")?);
            let value = scalar::parse(&e.value)?;
            let key = (i.min(j), i.max(j));
            if let Some(old) = g.insert(key, value.clone()) {
                if old != value {
                    return Err(Error::InvalidAlgebra(format!("conflicting metric entries at ({}, {})", e.i, e.j)));
                }
            }
        }
        let mut b = AlgebraBuilder::new(self.basis.clone());
        for ((i, j), v) in structure {
            b = b.bracket(i, j, v);
        }
        for ((i, j), v) in g {
            b = b.metric_entry(i, j, v);
        }
        let algebra = b.build()?;
        let complement = match &self.complement {
            None => None,
            Some(rows) => {
                let vectors = rows
                    .iter()
                    .map(|r| {
                        if r.len() != n {
                            return Err(Error::DimensionMismatch { expected: n, found: r.len() });
                        }
                        r.iter().map(|x| scalar::parse(x)).collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                let s = Subspace::span(n, &vectors);
                if s.dim() != vectors.len() {
                    return Err(Error::InvalidAlgebra("complement vectors are linearly dependent".into()));
                }
                Some(s)
            }
        };
        Ok(LoadedAlgebra { algebra, complement })
    }

    pub fn from_algebra(alg: &MetricLieAlgebra, complement: Option<&Subspace>) -> Self {
        let n = alg.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let coeffs: BTreeMap<usize, String> = alg
                    .bracket_basis(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k + 1, scalar::format(c)))
                    .collect();
                if !coeffs.is_empty() {
                    brackets.push(BracketEntry { i: i + 1, j: j + 1, coeffs });
                }
            }
        }
        let g: &Matrix = alg.metric();
        let mut metric = Vec::new();
        for i in 0..n {
            for j in i..n {
                if !g[(i, j)].is_zero() {
                    metric.push(MetricEntry {
                        i: i + 1,
                        j: j + 1,
                        value: scalar::format(&g[(i, j)]),
                    });
                }
            }
        }
        AlgebraFile {
            dim: n,
            basis: alg.basis_names().to_vec(),
            brackets,
            metric,
            complement: complement.map(|s| s.to_strings()),
        }
    }
}

pub fn parse_algebra(json: &str) -> Result<LoadedAlgebra> {
    serde_json::from_str::<AlgebraFile>(json)?.to_algebra()
}

pub fn load_algebra(path: &Path) -> Result<LoadedAlgebra> {
    parse_algebra(&std::fs::read_to_string(path)?)
}

pub fn dump_algebra(alg: &MetricLieAlgebra, complement: Option<&Subspace>) -> String {
    serde_json::to_string_pretty(&AlgebraFile::from_algebra(alg, complement)).expect("plain data serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::scalar::q;

    const H3_LORENTZ: &str = r#"{
        "dim": 3,
        "basis": ["e1", "e2", "e3"],
        "brackets": [{"i": 1, "j": 2, "coeffs": {"3": "1"}}],
        "metric": [{"i": 1, "j": 1, "value": "-1"}, {"i": 2, "j": 2, "value": "1"}, {"i": 3, "j": 3, "value": "1"}]
    }"#;

    #[test]
    fn parses_documented_example() {
        let l = parse_algebra(H3_LORENTZ).unwrap();
        assert_eq!(l.algebra, catalog::h3_lorentz());
        assert!(l.complement.is_none());
    }

    #[test]
    fn round_trips_every_builtin() {
        for name in catalog::ALGEBRA_NAMES {
            let a = catalog::algebra(name).unwrap();
            let back = parse_algebra(&dump_algebra(&a, None)).unwrap();
            assert_eq!(back.algebra, a, "{name}");
        }
        let s = catalog::free3_neutral_split();
        let text = dump_algebra(s.algebra(), Some(s.complement()));
        let back = parse_algebra(&text).unwrap();
        assert_eq!(back.split().unwrap().complement(), s.complement());
    }

    #[test]
    fn reversed_indices_and_fractions() {
        let json = r#"{"dim": 3, "basis": ["a", "b", "c"],
            "brackets": [{"i": 2, "j": 1, "coeffs": {"3": "-1/2"}}],
            "metric": [{"i": 1, "j": 3, "value": "1/2"}, {"i": 2, "j": 2, "value": "1"}]}"#;
        let a = parse_algebra(json).unwrap().algebra;
        assert_eq!(a.bracket(&a.e("a"), &a.e("b")).unwrap(), vec![q(0, 1), q(0, 1), q(1, 2)]);
        assert_eq!(a.metric()[(2, 0)], q(1, 2));
    }

    #[test]
    fn rejects_bad_files() {
        let bad = |s: &str| parse_algebra(s).unwrap_err();
        assert!(matches!(bad("{"), Error::Parse(_)));
        assert!(matches!(bad(r#"{"dim": 2, "basis": ["a"]}"#), Error::InvalidAlgebra(_)));
        assert!(matches!(
            bad(r#"{"dim": 1, "basis": ["a"], "metric": [{"i": 2, "j": 1, "value": "1"}]}"#),
            Error::InvalidAlgebra(_)
        ));
        assert!(matches!(bad(r#"{"dim": 1, "basis": ["a"], "metric": [{"i": 1, "j": 1, "value": "x"}]}"#), Error::Parse(_)));
        assert_eq!(bad(r#"{"dim": 2, "basis": ["a", "b"], "metric": [{"i": 1, "j": 1, "value": "1"}]}"#), Error::DegenerateMetric);
        let twice = r#"{"dim": 2, "basis": ["a", "b"], "brackets": [{"i": 1, "j": 2, "coeffs": {}}, {"i": 2, "j": 1, "coeffs": {}}],
            "metric": [{"i": 1, "j": 1, "value": "1"}, {"i": 2, "j": 2, "value": "1"}]}"#;
        assert!(matches!(bad(twice), Error::InvalidAlgebra(_)));
        let dependent = r#"{"dim": 2, "basis": ["a", "b"], "metric": [{"i": 1, "j": 1, "value": "1"}, {"i": 2, "j": 2, "value": "1"}],
            "complement": [["1", "0"], ["2", "0"]]}"#;
        assert!(matches!(bad(dependent), Error::InvalidAlgebra(_)));
    }
}
