//! Checks for list-coloring arguments on plane graphs: cycle conditions and
//! trio roles, Alon–Tarsi certificates, reducible configurations, and an
//! exact discharging engine.

pub mod alon_tarsi;
pub mod choosability;
pub mod discharging;
pub mod embedding;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod graph6;
mod limits;
pub mod orientation;
pub mod repro;
pub mod structures;

pub use alon_tarsi::{count_eulerian, find_certificate, verify_at_applicable, AtCertificate, EulerianCount};
pub use choosability::{
    check_extension, check_extension_with_rechoice, is_k_choosable, l_color, verify_min_degree,
    ChoosabilityVerdict, ListAssignment, ReducibleConfig,
};
pub use discharging::{apply_rules, final_report, initial_charges, Charge, ChargeLedger, RuleSet};
pub use embedding::{faces_of, Face, PlaneGraph};
pub use error::{Error, Result};
pub use graph::Graph;
pub use limits::Limits;
pub use orientation::{orientations_with_max_outdegree, Orientation};
