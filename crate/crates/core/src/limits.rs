use serde::{Deserialize, Serialize};

/// Caps on exhaustive searches. Inputs beyond a cap are rejected with
/// [`crate::Error::SizeLimitExceeded`], never approximated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Limits {
    /// Maximum arc count for Eulerian subdigraph counting.
    pub max_arcs: usize,
    /// Maximum vertex count for choosability and extension checks.
    pub max_vertices: usize,
    /// Maximum number of canonical list assignments examined per check.
    pub max_assignments: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_arcs: 30,
            max_vertices: 10,
            max_assignments: 50_000_000,
        }
    }
}
