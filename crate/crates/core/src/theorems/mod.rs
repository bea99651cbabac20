//! Closed forms for shuriken invariants, the constructions behind them, and
//! an audit that checks both against exact computation.

pub mod audit;
pub mod coloring;
pub mod corpus;
pub mod formulas;
pub mod hamilton;

pub use audit::{run_audit, AuditConfig, AuditEntry, AuditReport, Check, CheckFamily, InvariantBundle, Status, Summary};
pub use coloring::{
    a_sets, all_optimal_colorings, chromatic_lower_bound, phi, shuriken_coloring, BaseColoring, ColoringArtifacts,
};
pub use corpus::{builtin, builtin_with_null, default_params, null_graphs, parse_params, NamedGraph};
pub use formulas::*;
pub use hamilton::{cycle_from_path, hamiltonian_construct};
