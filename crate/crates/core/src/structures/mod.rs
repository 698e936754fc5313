//! Cycle conditions, trios with vertex roles, and fixed configurations.

mod conditions;
mod cycles;
mod patterns;
mod trio;

pub use conditions::{check_all_conditions, check_condition, ConditionId, ConditionReport};
pub use cycles::{cycle_edges, enumerate_cycles};
pub use patterns::{
    find_fixed_configs, match_pattern, ConfigMatch, DegreeConstraint, FixedConfig, Pattern,
    DOMINO_EDGES, DOMINO_LABELS, HOUSE_EDGES, HOUSE_LABELS, TRIO_EDGES, TRIO_LABELS,
};
pub use trio::{classify_role, classify_role_among, find_trios, TrioOccurrence, VertexRole};
pub(crate) use trio::sorted as sorted_triple;
