//! JSON instance files. Rationals travel as `"p/q"` strings; basis and
//! coframe indices are 1-based.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{format_rational, parse_rational, Matrix, Scalar};
use crate::hkt::{QuatHermMetric, TwoZeroForm};
use crate::lie::{Bracket, InvariantForm, LieAlgebra};
use crate::quat::HypercomplexStructure;

pub const FORMAT_VERSION: u32 = 1;
pub const DEFAULT_MAX_DIM: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    /// `k -> c^k_ij`
    pub coeffs: BTreeMap<usize, String>,
}

/// One coefficient of `Omega` on `theta_a ^ theta_b`; indices `1..=m` are
/// `theta_1..theta_m`, indices `m+1..=2m` are their conjugates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaTerm {
    pub indices: [usize; 2],
    pub re: String,
    #[serde(default = "zero_string", skip_serializing_if = "is_zero_string")]
    pub im: String,
}

fn zero_string() -> String {
    "0".to_string()
}

fn is_zero_string(s: &String) -> bool {
    s == "0"
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub format: u32,
    #[serde(default)]
    pub name: String,
    #[serde(default)]
    pub description: String,
    pub dim: usize,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
    #[serde(rename = "I")]
    pub i: Vec<Vec<String>>,
    #[serde(rename = "J")]
    pub j: Vec<Vec<String>>,
    #[serde(rename = "K")]
    pub k: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metric: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<Vec<OmegaTerm>>,
}

/// A parsed instance. The Jacobi identity is not enforced here so that the
/// structure suite can report a witness for it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub name: String,
    pub description: String,
    pub algebra: LieAlgebra,
    pub structure: HypercomplexStructure,
    pub metric: Option<QuatHermMetric>,
    pub omega: Option<TwoZeroForm>,
}

/// `HC_MAX_DIM`, defaulting to 12.
pub fn max_dim() -> usize {
    std::env::var("HC_MAX_DIM")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_DIM)
}

fn parse_err(field: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse { field: field.into(), message: message.into() }
}

fn rational_field(field: &str, s: &str) -> Result<crate::exact::Rational> {
    parse_rational(s).map_err(|e| parse_err(field, e.to_string()))
}

fn matrix_field(field: &str, rows: &[Vec<String>], dim: usize) -> Result<Matrix> {
    if rows.len() != dim {
        return Err(parse_err(field, format!("expected {dim} rows, found {}", rows.len())));
    }
    let mut m = Matrix::zeros(dim, dim);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != dim {
            return Err(parse_err(format!("{field}[{r}]"), format!("expected {dim} entries, found {}", row.len())));
        }
        for (c, s) in row.iter().enumerate() {
            m[(r, c)] = Scalar::real(rational_field(&format!("{field}[{r}][{c}]"), s)?);
        }
    }
    Ok(m)
}

fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|r| m.row(r).iter().map(|s| format_rational(&s.re)).collect()).collect()
}

impl InstanceFile {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn parse(&self) -> Result<Instance> {
        if self.format != FORMAT_VERSION {
            return Err(parse_err("format", format!("unsupported format {}", self.format)));
        }
        let dim = self.dim;
        if dim == 0 {
            return Err(parse_err("dim", "dimension must be positive"));
        }
        let cap = max_dim();
        if dim > cap {
            return Err(Error::DimensionCap { dim, cap });
        }
        let mut brackets = Vec::with_capacity(self.brackets.len());
        for (idx, b) in self.brackets.iter().enumerate() {
            let field = format!("brackets[{idx}]");
            let one_based = |x: usize, name: &str| {
                if x == 0 || x > dim {
                    Err(parse_err(format!("{field}.{name}"), format!("index {x} outside 1..={dim}")))
                } else {
                    Ok(x - 1)
                }
            };
            let (i, j) = (one_based(b.i, "i")?, one_based(b.j, "j")?);
            let mut coeffs = Vec::new();
            for (k, s) in &b.coeffs {
                let kk = one_based(*k, &format!("coeffs.{k}"))?;
                coeffs.push((kk, rational_field(&format!("{field}.coeffs.{k}"), s)?));
            }
            brackets.push(Bracket::new(i, j, coeffs));
        }
        let algebra = LieAlgebra::new_unchecked(dim, &brackets).map_err(|e| parse_err("brackets", e.to_string()))?;
        let i = matrix_field("I", &self.i, dim)?;
        let j = matrix_field("J", &self.j, dim)?;
        let k = matrix_field("K", &self.k, dim)?;
        let structure = HypercomplexStructure::new(i, j, k).map_err(|e| parse_err("I/J/K", e.to_string()))?;
        let metric = match &self.metric {
            Some(rows) => Some(
                QuatHermMetric::new(matrix_field("metric", rows, dim)?, &structure)
                    .map_err(|e| parse_err("metric", e.to_string()))?,
            ),
            None => None,
        };
        let omega = match &self.omega {
            Some(terms) => Some(parse_omega(terms, &structure)?),
            None => None,
        };
        Ok(Instance {
            name: self.name.clone(),
            description: self.description.clone(),
            algebra,
            structure,
            metric,
            omega,
        })
    }
}

fn parse_omega(terms: &[OmegaTerm], hs: &HypercomplexStructure) -> Result<TwoZeroForm> {
    let n = hs.dim();
    let mut parsed = Vec::new();
    for (idx, t) in terms.iter().enumerate() {
        let field = format!("omega[{idx}]");
        let [a, b] = t.indices;
        if a == 0 || b == 0 || a > n || b > n || a >= b {
            return Err(parse_err(
                format!("{field}.indices"),
                format!("need 1 <= a < b <= {n}, found ({a}, {b})"),
            ));
        }
        let re = rational_field(&format!("{field}.re"), &t.re)?;
        let im = rational_field(&format!("{field}.im"), &t.im)?;
        parsed.push((vec![a - 1, b - 1], Scalar::new(re, im)));
    }
    let form = InvariantForm::from_terms(hs.coframe_tag(), n, 2, parsed);
    TwoZeroForm::new(form, hs).map_err(|e| parse_err("omega", e.to_string()))
}

impl Instance {
    pub fn to_file(&self) -> InstanceFile {
        let brackets = self
            .algebra
            .brackets()
            .into_iter()
            .map(|b| BracketEntry {
                i: b.i + 1,
                j: b.j + 1,
                coeffs: b.coeffs.iter().map(|(k, c)| (k + 1, format_rational(c))).collect(),
            })
            .collect();
        let omega = self.omega.as_ref().map(|o| {
            o.form()
                .terms()
                .map(|(m, c)| OmegaTerm {
                    indices: [m[0] + 1, m[1] + 1],
                    re: format_rational(&c.re),
                    im: format_rational(&c.im),
                })
                .collect()
        });
        InstanceFile {
            format: FORMAT_VERSION,
            name: self.name.clone(),
            description: self.description.clone(),
            dim: self.algebra.dim(),
            brackets,
            i: matrix_strings(self.structure.i()),
            j: matrix_strings(self.structure.j()),
            k: matrix_strings(self.structure.k()),
            metric: self.metric.as_ref().map(|g| matrix_strings(g.gram())),
            omega,
        }
    }

    pub fn to_json(&self) -> Result<String> {
        self.to_file().to_json()
    }
}

pub fn parse_instance_str(text: &str) -> Result<Instance> {
    InstanceFile::from_json(text)?.parse()
}

pub fn parse_instance(path: &Path) -> Result<Instance> {
    parse_instance_str(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{all, catalog};

    #[test]
    fn catalog_round_trips() {
        for inst in all() {
            let text = inst.to_json().unwrap();
            assert_eq!(parse_instance_str(&text).unwrap(), inst);
            assert_eq!(parse_instance_str(&text).unwrap().to_json().unwrap(), text);
        }
    }

    #[test]
    fn zero_denominator_names_field() {
        let mut file = catalog("abelian_h1").unwrap().to_file();
        file.i[2][3] = "1/0".into();
        match file.parse() {
            Err(Error::Parse { field, .. }) => assert_eq!(field, "I[2][3]"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn missing_field_is_reported() {
        let err = parse_instance_str(r#"{"format": 1, "dim": 4}"#).unwrap_err();
        assert!(err.to_string().contains("missing field"), "{err}");
    }

    #[test]
    fn dimension_mismatch_in_matrix() {
        let mut file = catalog("abelian_h1").unwrap().to_file();
        file.j.pop();
        assert!(matches!(file.parse(), Err(Error::Parse { field, .. }) if field == "J"));
    }

    #[test]
    fn bracket_index_range() {
        let mut file = catalog("abelian_h1").unwrap().to_file();
        file.brackets.push(BracketEntry { i: 1, j: 5, coeffs: BTreeMap::new() });
        assert!(matches!(file.parse(), Err(Error::Parse { field, .. }) if field == "brackets[0].j"));
    }
}
