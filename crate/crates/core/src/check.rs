//! Pass/fail records for identity checks.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::field::Field;
use crate::linalg::{Composite, Matrix};

/// Outcome of one named identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Basis indices of the first input on which the identity fails, one
    /// per tensor factor of the input. Empty when the failing input is the
    /// unit or a scalar.
    pub witness: Option<Vec<usize>>,
    pub detail: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check { name: name.into(), passed: true, witness: None, detail: None }
    }

    pub fn fail(name: impl Into<String>, witness: Vec<usize>) -> Self {
        Check { name: name.into(), passed: false, witness: Some(witness), detail: None }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    /// Compares two maps with domain `input_dims[0] ⊗ ...` column by column.
    pub fn compare<F: Field>(name: impl Into<String>, lhs: &Matrix<F>, rhs: &Matrix<F>, input_dims: &[usize]) -> Self {
        let name = name.into();
        if lhs.dims() != rhs.dims() {
            return Check::fail(name, Vec::new()).with_detail(alloc::format!(
                "shape {:?} vs {:?}",
                lhs.dims(),
                rhs.dims()
            ));
        }
        match lhs.first_difference(rhs) {
            None => Check::pass(name),
            Some(col) => {
                let mut idx = vec![0; input_dims.len()];
                crate::linalg::decode(col, input_dims, &mut idx);
                Check::fail(name, idx)
            }
        }
    }

    /// Like [`Check::compare`] for maps kept in factored form.
    pub fn compare_maps<F: Field>(
        name: impl Into<String>,
        lhs: &Composite<F>,
        rhs: &Composite<F>,
        input_dims: &[usize],
    ) -> Self {
        let name = name.into();
        if lhs.input_dim() != rhs.input_dim() || lhs.output_dim() != rhs.output_dim() {
            return Check::fail(name, Vec::new()).with_detail(alloc::format!(
                "shape {}x{} vs {}x{}",
                lhs.output_dim(),
                lhs.input_dim(),
                rhs.output_dim(),
                rhs.input_dim()
            ));
        }
        match lhs.first_difference(rhs) {
            None => Check::pass(name),
            Some(col) => {
                let mut idx = vec![0; input_dims.len()];
                crate::linalg::decode(col, input_dims, &mut idx);
                Check::fail(name, idx)
            }
        }
    }

    /// Both checks must pass; the first failure is kept.
    pub fn and(self, other: Check) -> Check {
        if self.passed {
            Check { name: self.name, ..other }
        } else {
            self
        }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool) -> Self {
        if ok {
            Check::pass(name)
        } else {
            Check::fail(name, Vec::new())
        }
    }

    pub fn into_result(self) -> Result<(), Error> {
        if self.passed {
            Ok(())
        } else {
            Err(Error::law(self.name.clone(), self.witness_string()))
        }
    }

    pub fn witness_string(&self) -> String {
        match (&self.witness, &self.detail) {
            (Some(w), Some(d)) => alloc::format!("basis {w:?} ({d})"),
            (Some(w), None) => alloc::format!("basis {w:?}"),
            (None, Some(d)) => d.clone(),
            (None, None) => String::new(),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            write!(f, "PASS {}", self.name)
        } else {
            write!(f, "FAIL {} at {}", self.name, self.witness_string())
        }
    }
}

/// A list of checks.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn failed_names(&self) -> Vec<&str> {
        self.failures().iter().map(|c| c.name.as_str()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// The first failure as an error.
    pub fn into_result(self) -> Result<(), Error> {
        match self.checks.into_iter().find(|c| !c.passed) {
            None => Ok(()),
            Some(c) => c.into_result(),
        }
    }
}

impl FromIterator<Check> for Report {
    fn from_iter<I: IntoIterator<Item = Check>>(iter: I) -> Self {
        Report { checks: iter.into_iter().collect() }
    }
}
