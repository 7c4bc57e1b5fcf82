//! JSON interchange formats.
//!
//! Scalars travel as strings (`"3/4"` over the rationals, `"5"` over a
//! prime field) so that files are exact. Reports and files are written
//! with sorted keys, which makes output byte-identical across runs.

use std::collections::BTreeMap;

use hopfhom_core::field::Field;
use hopfhom_core::group::FiniteGroup;
use hopfhom_core::hopf::{check_hopf_surjection, Algebra, Coalgebra, Component, FinHopfAlgebra, HopfSurjection};
use hopfhom_core::linalg::{Matrix, Subspace};
use serde::{Deserialize, Serialize};
use std::sync::Arc;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported schema_version {0}, expected {SCHEMA_VERSION}")]
    Version(u32),
    #[error("file is over {found}, expected {expected}")]
    FieldMismatch { expected: String, found: String },
    #[error("cannot parse scalar {0:?}")]
    Scalar(String),
    #[error("{0}")]
    Shape(String),
    #[error(transparent)]
    Core(#[from] hopfhom_core::Error),
}

type Result<T> = std::result::Result<T, FormatError>;

/// `[i, j, k, value]`
pub type SparseEntry = (usize, usize, usize, String);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfFileV1 {
    pub schema_version: u32,
    pub name: String,
    /// `"Q"` or `"GF(p)"`
    pub field: String,
    pub dim: usize,
    pub basis_labels: Vec<String>,
    /// `[i, j, k, c]`: `e_i e_j` has coefficient `c` at `e_k`.
    pub mult: Vec<SparseEntry>,
    pub unit: Vec<String>,
    /// `[i, j, k, c]`: `Δ(e_i)` has coefficient `c` at `e_j ⊗ e_k`.
    pub comult: Vec<SparseEntry>,
    pub counit: Vec<String>,
    /// Row `i`, column `j`: coefficient of `e_i` in `S(e_j)`.
    pub antipode: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurjectionFileV1 {
    pub schema_version: u32,
    pub field: String,
    /// Name of the source Hopf algebra, checked against the `P` file.
    pub source: String,
    pub target: HopfFileV1,
    /// `dim H` rows of `dim P` entries.
    pub matrix: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFileV1 {
    pub schema_version: u32,
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    /// `cayley[a][b]` is the index of `ab`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cayley: Option<Vec<Vec<usize>>>,
    /// Permutations of `0..n` generating the group.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<Vec<usize>>>,
}

/// A subspace given by spanning vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubspaceFileV1 {
    pub schema_version: u32,
    pub field: String,
    pub ambient: usize,
    pub basis: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckV1 {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl From<&hopfhom_core::check::Check> for CheckV1 {
    fn from(c: &hopfhom_core::check::Check) -> Self {
        CheckV1 { name: c.name.clone(), passed: c.passed, witness: c.witness.clone(), detail: c.detail.clone() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportV1 {
    pub schema_version: u32,
    pub command: String,
    pub field: String,
    pub passed: bool,
    pub checks: Vec<CheckV1>,
    /// Command-specific results.
    pub data: BTreeMap<String, serde_json::Value>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl ReportV1 {
    pub fn new(command: &str, field: String) -> Self {
        ReportV1 {
            schema_version: SCHEMA_VERSION,
            command: command.into(),
            field,
            passed: true,
            checks: Vec::new(),
            data: BTreeMap::new(),
            warnings: Vec::new(),
        }
    }

    pub fn push(&mut self, c: &hopfhom_core::check::Check) {
        self.passed &= c.passed;
        self.checks.push(c.into());
    }

    pub fn extend(&mut self, r: &hopfhom_core::check::Report) {
        for c in &r.checks {
            self.push(c);
        }
    }

    pub fn set(&mut self, key: &str, value: impl Serialize) {
        self.data.insert(key.into(), serde_json::to_value(value).expect("serializable"));
    }
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    // `serde_json::Value` keeps object keys in a sorted map.
    let v = serde_json::to_value(value).expect("serializable");
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

fn check_version(v: u32) -> Result<()> {
    if v == SCHEMA_VERSION {
        Ok(())
    } else {
        Err(FormatError::Version(v))
    }
}

fn check_field<F: Field>(name: &str) -> Result<()> {
    if name == F::name() {
        Ok(())
    } else {
        Err(FormatError::FieldMismatch { expected: F::name(), found: name.into() })
    }
}

fn scalar<F: Field>(s: &str) -> Result<F> {
    F::parse(s).ok_or_else(|| FormatError::Scalar(s.into()))
}

fn scalars<F: Field>(v: &[String]) -> Result<Vec<F>> {
    v.iter().map(|s| scalar(s)).collect()
}

fn strings<F: Field>(v: &[F]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

pub fn matrix_to_rows<F: Field>(m: &Matrix<F>) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| m[(i, j)].to_string()).collect()).collect()
}

pub fn matrix_from_rows<F: Field>(rows: &[Vec<String>], cols: usize, what: &str) -> Result<Matrix<F>> {
    let parsed = rows
        .iter()
        .map(|r| {
            if r.len() != cols {
                return Err(FormatError::Shape(format!("{what}: row of length {}, expected {cols}", r.len())));
            }
            scalars(r)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_rows_with_cols(parsed, Some(cols)))
}

fn sparse<F: Field>(h: &FinHopfAlgebra<F>, c: Component) -> Vec<SparseEntry> {
    let n = h.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = h.entry(c, &[i, j, k]);
                if !v.is_zero() {
                    out.push((i, j, k, v.to_string()));
                }
            }
        }
    }
    out
}

impl HopfFileV1 {
    pub fn from_hopf<F: Field>(h: &FinHopfAlgebra<F>) -> Self {
        HopfFileV1 {
            schema_version: SCHEMA_VERSION,
            name: h.name().into(),
            field: F::name(),
            dim: h.dim(),
            basis_labels: h.labels().to_vec(),
            mult: sparse(h, Component::Mult),
            unit: strings(h.unit()),
            comult: sparse(h, Component::Comult),
            counit: strings(h.counit()),
            antipode: matrix_to_rows(h.antipode()),
        }
    }

    /// Parses the structure constants. The axioms are not checked here.
    pub fn to_hopf<F: Field>(&self) -> Result<FinHopfAlgebra<F>> {
        check_version(self.schema_version)?;
        check_field::<F>(&self.field)?;
        let n = self.dim;
        let shape = |what: &str, len: usize| {
            if len == n {
                Ok(())
            } else {
                Err(FormatError::Shape(format!("{what} has length {len}, expected {n}")))
            }
        };
        shape("basis_labels", self.basis_labels.len())?;
        shape("unit", self.unit.len())?;
        shape("counit", self.counit.len())?;
        shape("antipode", self.antipode.len())?;
        let mut mult = Matrix::zeros(n, n * n);
        let mut comult = Matrix::zeros(n * n, n);
        for (what, entries) in [("mult", &self.mult), ("comult", &self.comult)] {
            for (i, j, k, v) in entries {
                if *i >= n || *j >= n || *k >= n {
                    return Err(FormatError::Shape(format!("{what} index [{i}, {j}, {k}] out of range")));
                }
                let v: F = scalar(v)?;
                if what == "mult" {
                    mult[(*k, i * n + j)] = v;
                } else {
                    comult[(j * n + k, *i)] = v;
                }
            }
        }
        let algebra = Algebra::new(mult, scalars(&self.unit)?)?;
        let coalgebra = Coalgebra::new(comult, scalars(&self.counit)?)?;
        let antipode = matrix_from_rows(&self.antipode, n, "antipode")?;
        Ok(FinHopfAlgebra::new(self.name.clone(), self.basis_labels.clone(), algebra, coalgebra, antipode)?)
    }

    pub fn parse(json: &str) -> Result<Self> {
        Ok(serde_json::from_str(json)?)
    }
}

impl SurjectionFileV1 {
    pub fn from_surjection<F: Field>(s: &HopfSurjection<F>) -> Self {
        SurjectionFileV1 {
            schema_version: SCHEMA_VERSION,
            field: F::name(),
            source: s.source().name().into(),
            target: HopfFileV1::from_hopf(s.target()),
            matrix: matrix_to_rows(s.matrix()),
        }
    }

    /// Parses the target and the matrix and certifies the surjection
    /// against `p`.
    pub fn to_surjection<F: Field>(&self, p: Arc<FinHopfAlgebra<F>>) -> Result<HopfSurjection<F>> {
        if self.source != p.name() {
            return Err(FormatError::Shape(format!("surjection is from {:?}, not {:?}", self.source, p.name())));
        }
        let (h, m) = self.to_parts(&p)?;
        Ok(check_hopf_surjection(p, Arc::new(h), m)?)
    }

    /// The target and the matrix, without certifying the surjection.
    pub fn to_parts<F: Field>(&self, p: &FinHopfAlgebra<F>) -> Result<(FinHopfAlgebra<F>, Matrix<F>)> {
        check_version(self.schema_version)?;
        check_field::<F>(&self.field)?;
        let h = self.target.to_hopf::<F>()?;
        if self.matrix.len() != h.dim() {
            return Err(FormatError::Shape(format!("matrix has {} rows, expected {}", self.matrix.len(), h.dim())));
        }
        let m = matrix_from_rows(&self.matrix, p.dim(), "matrix")?;
        Ok((h, m))
    }

    pub fn parse(json: &str) -> Result<Self> {
        Ok(serde_json::from_str(json)?)
    }
}

impl GroupFileV1 {
    pub fn from_group(name: &str, g: &FiniteGroup) -> Self {
        GroupFileV1 {
            schema_version: SCHEMA_VERSION,
            name: name.into(),
            labels: Some(g.labels().to_vec()),
            cayley: Some(g.table().to_vec()),
            generators: None,
        }
    }

    pub fn to_group(&self) -> Result<FiniteGroup> {
        check_version(self.schema_version)?;
        match (&self.cayley, &self.generators) {
            (Some(t), None) => Ok(FiniteGroup::from_cayley(t.clone(), self.labels.clone())?),
            (None, Some(g)) => Ok(FiniteGroup::from_permutations(g, 1 << 12)?),
            _ => Err(FormatError::Shape("exactly one of cayley and generators is required".into())),
        }
    }

    pub fn parse(json: &str) -> Result<Self> {
        Ok(serde_json::from_str(json)?)
    }
}

impl SubspaceFileV1 {
    pub fn from_subspace<F: Field>(s: &Subspace<F>) -> Self {
        SubspaceFileV1 {
            schema_version: SCHEMA_VERSION,
            field: F::name(),
            ambient: s.ambient(),
            basis: matrix_to_rows(s.basis()),
        }
    }

    pub fn to_subspace<F: Field>(&self) -> Result<Subspace<F>> {
        check_version(self.schema_version)?;
        check_field::<F>(&self.field)?;
        let rows = matrix_from_rows::<F>(&self.basis, self.ambient, "basis")?;
        Ok(Subspace::row_space(&rows))
    }

    pub fn parse(json: &str) -> Result<Self> {
        Ok(serde_json::from_str(json)?)
    }
}
