use alloc::string::String;

use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("malformed tree: {0}")]
    MalformedTree(String),

    #[error("vertex {vertex} has degree {degree}, exceeding the bound {bound}")]
    DegreeViolation {
        vertex: usize,
        degree: usize,
        bound: usize,
    },

    #[error("malformed drawing: {0}")]
    MalformedDrawing(String),

    #[error("drawing has no ply disks (every vertex is isolated)")]
    NoDisks,

    #[error(
        "sampling grid needs {cells} cells but the budget is {budget}; use a coarser grid step"
    )]
    GridBudget { cells: u64, budget: u64 },

    #[error("disk of vertex {vertex} is not contained in the enclosing disk")]
    NotContained { vertex: usize },

    #[error("layout scale factor {0:e} overflows double precision")]
    ScaleOverflow(f64),

    #[error("layout dynamic range {range:e} exceeds the precision budget {budget:e}")]
    PrecisionLoss { range: f64, budget: f64 },

    #[error("drawing does not match the instance: {0}")]
    InstanceMismatch(String),
}

impl Error {
    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}
