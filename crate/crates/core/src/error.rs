use thiserror::Error;

use crate::model::ValidationReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A parameter lies outside the domain of the function being evaluated.
    #[error("domain error: {0}")]
    Domain(String),

    /// The couplings/branch combination failed validation.
    #[error("parameters rejected: {}", .0.summary())]
    Rejected(ValidationReport),

    /// `beta + D_lmn <= 0`: the hyperradial barrier is not repulsive enough
    /// for the standard treatment.
    #[error("centrifugal collapse: beta + D = {value} <= 0 for (l, m, n) = ({l}, {m}, {n})")]
    CentrifugalCollapse { value: f64, l: u32, m: u32, n: u32 },

    /// A numerical procedure did not reach the requested accuracy.
    #[error("accuracy error in {what}: relative change {change:e} exceeds {limit:e}")]
    Accuracy {
        what: String,
        change: f64,
        limit: f64,
    },

    /// Operation not available for this mode or branch.
    #[error("unsupported: {0}")]
    Unsupported(String),
}
