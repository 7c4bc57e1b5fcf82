use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch { context: &'static str, expected: usize, found: usize },
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("group closure exceeded {0} elements")]
    GroupTooLarge(usize),
    #[error("identity {law} fails at {witness}")]
    LawFailed { law: String, witness: String },
    #[error("map is not surjective: rank {rank} < {target}")]
    NotSurjective { rank: usize, target: usize },
    #[error("subspace is not stable under {0}")]
    NotStable(String),
    #[error("enumeration cap of {0} subspaces exceeded")]
    CapExceeded(usize),
    #[error("{context}: failed {}", .failures.join(", "))]
    ChecksFailed { context: String, failures: alloc::vec::Vec<String> },
    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn checks(context: impl Into<String>, report: &crate::check::Report) -> Self {
        Error::ChecksFailed {
            context: context.into(),
            failures: report.failures().iter().map(|c| alloc::format!("{} at {}", c.name, c.witness_string())).collect(),
        }
    }

    pub(crate) fn law(law: impl Into<String>, witness: impl Into<String>) -> Self {
        Error::LawFailed { law: law.into(), witness: witness.into() }
    }
}
