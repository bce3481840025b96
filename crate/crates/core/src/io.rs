//! JSON file formats for algebras, group tables and reports.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::HopfAlgebraSpec;
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::linalg::{CMat, CVec, C64, ZERO};
use crate::report::Report;

pub const ALGEBRA_SCHEMA: &str = "cqg-algebra/1";
pub const GROUP_SCHEMA: &str = "cqg-group/1";
pub const REPORT_SCHEMA: &str = "cqg-report/1";

/// Structure constants of an algebra. Rank-3 tensors are sparse
/// `[i, j, k, re, im]` lists; matrices are dense rows of `[re, im]`.
///
/// `mult`: `a_j a_k` has coefficient `re + i im` on `a_l` for `[j, k, l, ..]`.
/// `comult`: `Δ(a_l)` has that coefficient on `a_j ⊗ a_k` for `[l, j, k, ..]`.
/// `antipode[j][k]`: coefficient of `a_k` in `S(a_j)`.
/// `star[j][k]`: coefficient of `a_k` in `a_j*`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub schema: String,
    pub label: String,
    pub dim: usize,
    pub mult: Vec<(usize, usize, usize, f64, f64)>,
    pub comult: Vec<(usize, usize, usize, f64, f64)>,
    pub antipode: Vec<Vec<[f64; 2]>>,
    pub star: Vec<Vec<[f64; 2]>>,
    pub counit: Vec<[f64; 2]>,
    pub unit: Vec<[f64; 2]>,
}

fn pair(z: C64) -> [f64; 2] {
    [z.re, z.im]
}

fn cz(p: [f64; 2]) -> C64 {
    C64::new(p[0], p[1])
}

fn dense(m: &CMat) -> Vec<Vec<[f64; 2]>> {
    (0..m.nrows()).map(|j| (0..m.ncols()).map(|k| pair(m[(j, k)])).collect()).collect()
}

fn from_dense(rows: &[Vec<[f64; 2]>], n: usize, what: &str) -> Result<CMat> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::Format(format!("{what} must be {n} x {n}")));
    }
    Ok(CMat::from_fn(n, n, |j, k| cz(rows[j][k])))
}

fn from_vector(v: &[[f64; 2]], n: usize, what: &str) -> Result<CVec> {
    if v.len() != n {
        return Err(Error::Format(format!("{what} must have length {n}")));
    }
    Ok(CVec::from_iterator(n, v.iter().copied().map(cz)))
}

impl AlgebraFile {
    pub fn from_spec(spec: &HopfAlgebraSpec) -> Self {
        let n = spec.dim();
        let mut mult = Vec::new();
        let mut comult = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let m = spec.mult(a, b, c);
                    if m != ZERO {
                        mult.push((a, b, c, m.re, m.im));
                    }
                    let d = spec.comult(a, b, c);
                    if d != ZERO {
                        comult.push((a, b, c, d.re, d.im));
                    }
                }
            }
        }
        AlgebraFile {
            schema: ALGEBRA_SCHEMA.into(),
            label: spec.label.clone(),
            dim: n,
            mult,
            comult,
            antipode: dense(spec.antipode_matrix()),
            star: dense(spec.star_matrix()),
            counit: spec.counit_vector().iter().copied().map(pair).collect(),
            unit: spec.unit_vector().iter().copied().map(pair).collect(),
        }
    }

    pub fn to_spec(&self) -> Result<HopfAlgebraSpec> {
        if self.schema != ALGEBRA_SCHEMA {
            return Err(Error::Format(format!("schema {:?}, expected {ALGEBRA_SCHEMA:?}", self.schema)));
        }
        let n = self.dim;
        if n == 0 {
            return Err(Error::Format("dim must be positive".into()));
        }
        let fill = |list: &[(usize, usize, usize, f64, f64)], what: &str| -> Result<Vec<C64>> {
            let mut t = vec![ZERO; n * n * n];
            for &(a, b, c, re, im) in list {
                if a >= n || b >= n || c >= n {
                    return Err(Error::Format(format!("{what} index ({a}, {b}, {c}) out of range for dim {n}")));
                }
                t[(a * n + b) * n + c] += C64::new(re, im);
            }
            Ok(t)
        };
        let mult = fill(&self.mult, "mult")?;
        let comult = fill(&self.comult, "comult")?;
        HopfAlgebraSpec::new(
            self.label.clone(),
            n,
            &mult,
            &comult,
            from_dense(&self.antipode, n, "antipode")?,
            from_vector(&self.counit, n, "counit")?,
            from_vector(&self.unit, n, "unit")?,
            from_dense(&self.star, n, "star")?,
        )
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupTableFile {
    pub schema: String,
    pub name: String,
    pub order: usize,
    /// `table[a][b]` is the index of `ab`; index 0 is the identity.
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl GroupTableFile {
    pub fn from_group(g: &GroupTable) -> Self {
        GroupTableFile {
            schema: GROUP_SCHEMA.into(),
            name: g.name.clone(),
            order: g.order(),
            table: g.rows().to_vec(),
            labels: Some(g.labels.clone()),
        }
    }

    pub fn to_group(&self) -> Result<GroupTable> {
        if self.schema != GROUP_SCHEMA {
            return Err(Error::Format(format!("schema {:?}, expected {GROUP_SCHEMA:?}", self.schema)));
        }
        if self.table.len() != self.order {
            return Err(Error::Format(format!("table has {} rows for order {}", self.table.len(), self.order)));
        }
        GroupTable::new(self.name.clone(), self.table.clone(), self.labels.clone())
    }
}

/// Machine-readable result of one CLI pipeline.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportFile {
    pub schema: String,
    pub operation: String,
    pub inputs: serde_json::Map<String, serde_json::Value>,
    pub tolerance: f64,
    pub seed: u64,
    pub conventions: Vec<String>,
    pub passed: bool,
    pub sections: Vec<Report>,
    #[serde(default)]
    pub data: serde_json::Value,
}

impl ReportFile {
    pub fn new(operation: impl Into<String>, tolerance: f64, seed: u64) -> Self {
        ReportFile {
            schema: REPORT_SCHEMA.into(),
            operation: operation.into(),
            inputs: serde_json::Map::new(),
            tolerance,
            seed,
            conventions: Vec::new(),
            passed: true,
            sections: Vec::new(),
            data: serde_json::Value::Null,
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<serde_json::Value>) {
        self.inputs.insert(key.into(), value.into());
    }

    pub fn section(&mut self, rep: Report) {
        self.passed &= rep.passed();
        self.sections.push(rep);
    }

    /// Rows `section, check, residual, tolerance, passed`.
    pub fn rows(&self) -> Vec<[String; 5]> {
        self.sections
            .iter()
            .flat_map(|s| {
                s.checks.iter().map(move |c| {
                    [s.title.clone(), c.name.clone(), format!("{:e}", c.residual), format!("{:e}", c.tolerance), c.passed.to_string()]
                })
            })
            .collect()
    }
}

fn check_schema(v: &serde_json::Value, want: &str) -> Result<()> {
    match v.get("schema").and_then(|s| s.as_str()) {
        Some(s) if s == want => Ok(()),
        Some(s) => Err(Error::Format(format!("schema {s:?}, expected {want:?}"))),
        None => Err(Error::Format("missing \"schema\" field".into())),
    }
}

fn load_json<T: for<'de> Deserialize<'de>>(path: &Path, schema: &str) -> Result<T> {
    let text = std::fs::read_to_string(path)?;
    let v: serde_json::Value = serde_json::from_str(&text)?;
    check_schema(&v, schema)?;
    Ok(serde_json::from_value(v)?)
}

fn save_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}

pub fn load_algebra(path: &Path) -> Result<HopfAlgebraSpec> {
    load_json::<AlgebraFile>(path, ALGEBRA_SCHEMA)?.to_spec()
}

pub fn save_algebra(path: &Path, spec: &HopfAlgebraSpec) -> Result<()> {
    save_json(path, &AlgebraFile::from_spec(spec))
}

pub fn load_group(path: &Path) -> Result<GroupTable> {
    load_json::<GroupTableFile>(path, GROUP_SCHEMA)?.to_group()
}

pub fn save_group(path: &Path, g: &GroupTable) -> Result<()> {
    save_json(path, &GroupTableFile::from_group(g))
}

pub fn load_report(path: &Path) -> Result<ReportFile> {
    load_json(path, REPORT_SCHEMA)
}

pub fn save_report(path: &Path, rep: &ReportFile) -> Result<()> {
    save_json(path, rep)
}
