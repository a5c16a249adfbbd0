//! TOML instance files: the on-disk format consumed by the `maxmin` binary
//! and the runnable examples.
//!
//! ```toml
//! top = 10
//! matrix = [
//!   [4, 4, 4, 5],
//!   [2, 2, 7, 2],
//!   [3, 8, 3, 3],
//!   [7, 3, 3, 3],
//! ]
//! lower = [2, 3, 2, 4]   # optional, defaults to all 0
//! upper = [7, 9, 6, 5]   # optional, defaults to all top
//! vector = [7, 9, 6, 5]  # optional start/test vector
//! b = [5, 6, 6, 5]       # optional right-hand side
//! ```
//!
//! Integers only; every value must lie in `[0, top]`. Parse errors carry
//! line/column positions (syntax) or field paths (range and shape checks).

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{IntervalVector, Matrix, Vector};

/// Raw file schema before validation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub top: u32,
    pub matrix: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lower: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub upper: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vector: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<Vec<u32>>,
}

/// A validated instance: the matrix, the box (full by default), and the
/// optional vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub matrix: Matrix,
    pub bounds: IntervalVector,
    pub vector: Option<Vector>,
    pub rhs: Option<Vector>,
    /// Whether the file spelled out `lower`/`upper`.
    pub explicit_bounds: bool,
}

fn check_range(field: &str, index: usize, value: u32, top: u32) -> Result<()> {
    if value > top {
        return Err(Error::Instance(format!(
            "{field}[{index}] = {value} is outside the chain [0, {top}]"
        )));
    }
    Ok(())
}

fn vector_field(name: &str, ticks: &[u32], n: usize, top: u32) -> Result<Vector> {
    if ticks.len() != n {
        return Err(Error::Instance(format!(
            "{name} has {} entries, expected {n}",
            ticks.len()
        )));
    }
    for (j, &v) in ticks.iter().enumerate() {
        check_range(name, j, v, top)?;
    }
    Ok(Vector::from_ticks(ticks.to_vec(), top).expect("range checked"))
}

impl InstanceFile {
    /// Validate the raw fields into typed values.
    pub fn validate(&self) -> Result<Instance> {
        if self.top == 0 {
            return Err(Error::Instance("top must be at least 1".into()));
        }
        let n = self.matrix.len();
        if n == 0 {
            return Err(Error::Instance("matrix must have at least one row".into()));
        }
        for (i, row) in self.matrix.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Instance(format!(
                    "matrix is not square: {n} rows but row {i} has {} entries",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v > self.top {
                    return Err(Error::Instance(format!(
                        "matrix[{i}][{j}] = {v} is outside the chain [0, {}]",
                        self.top
                    )));
                }
            }
        }
        let matrix = Matrix::from_rows(self.matrix.clone(), self.top).expect("checked above");
        let lower = match &self.lower {
            Some(t) => vector_field("lower", t, n, self.top)?,
            None => Vector::constant(n, crate::scalar::Scalar::zero(self.top)),
        };
        let upper = match &self.upper {
            Some(t) => vector_field("upper", t, n, self.top)?,
            None => Vector::constant(n, crate::scalar::Scalar::one(self.top)),
        };
        let bounds = IntervalVector::new(lower, upper).map_err(|e| match e {
            Error::InvertedBounds { index, lower, upper } => Error::Instance(format!(
                "lower[{index}] = {lower} exceeds upper[{index}] = {upper}"
            )),
            other => other,
        })?;
        let vector = match &self.vector {
            Some(t) => Some(vector_field("vector", t, n, self.top)?),
            None => None,
        };
        let rhs = match &self.b {
            Some(t) => Some(vector_field("b", t, n, self.top)?),
            None => None,
        };
        Ok(Instance {
            matrix,
            bounds,
            vector,
            rhs,
            explicit_bounds: self.lower.is_some() || self.upper.is_some(),
        })
    }
}

impl Instance {
    /// The raw file form of this instance, e.g. for dumping a failing case.
    pub fn to_file(&self) -> InstanceFile {
        InstanceFile {
            top: self.matrix.top(),
            matrix: (0..self.matrix.n())
                .map(|i| self.matrix.row_ticks(i).to_vec())
                .collect(),
            lower: self
                .explicit_bounds
                .then(|| self.bounds.lower().ticks().to_vec()),
            upper: self
                .explicit_bounds
                .then(|| self.bounds.upper().ticks().to_vec()),
            vector: self.vector.as_ref().map(|v| v.ticks().to_vec()),
            b: self.rhs.as_ref().map(|v| v.ticks().to_vec()),
        }
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(&self.to_file()).expect("plain data serializes")
    }
}

/// Parse and validate an instance from TOML text.
pub fn parse_instance_str(text: &str) -> Result<Instance> {
    let raw: InstanceFile =
        toml::from_str(text).map_err(|e| Error::Instance(e.to_string().trim().to_string()))?;
    raw.validate()
}

/// Parse and validate an instance file.
pub fn parse_instance(path: impl AsRef<Path>) -> Result<Instance> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Instance(format!("cannot read {}: {e}", path.display())))?;
    parse_instance_str(&text)
}
