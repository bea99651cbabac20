//! Exact solvers for the invariants the audit compares against.
//!
//! All searches are deterministic: candidate order and tie-breaking are by
//! ascending vertex id, so identical inputs always give identical witnesses.
//! NP-hard searches run under a [`SolverBudget`] and return [`Timeout`]
//! rather than a possibly wrong answer when it runs out.

mod clique;
mod coloring;
mod domination;
mod euler;
mod hamilton;

pub use clique::{max_clique, max_independent_set};
pub use coloring::{chromatic_number, is_proper_coloring, Coloring};
pub use domination::{is_dominating_set, min_dominating_set};
pub use euler::{eulerian_circuit, is_eulerian_circuit, satisfies_euler_condition};
pub use hamilton::{hamiltonian_cycle, hamiltonian_path, is_hamiltonian_cycle, is_hamiltonian_path};

use std::time::{Duration, Instant};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverBudget {
    pub max_nodes: u64,
    pub wall_limit: Duration,
}

impl SolverBudget {
    pub fn new(max_nodes: u64, wall_limit_ms: u64) -> Self {
        SolverBudget {
            max_nodes,
            wall_limit: Duration::from_millis(wall_limit_ms),
        }
    }
}

impl Default for SolverBudget {
    fn default() -> Self {
        SolverBudget::new(200_000_000, 60_000)
    }
}

#[derive(Clone, Copy, Debug, Error, PartialEq, Eq)]
#[error("solver budget exhausted after {nodes} search nodes")]
pub struct Timeout {
    pub nodes: u64,
}

/// A maximum (or minimum) set together with the vertices realising it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witnessed {
    pub value: usize,
    pub witness: Vec<usize>,
}

/// Per-invocation node counter and clock against a budget.
pub(crate) struct Meter {
    budget: SolverBudget,
    start: Instant,
    nodes: u64,
}

impl Meter {
    pub(crate) fn new(budget: &SolverBudget) -> Self {
        Meter {
            budget: *budget,
            start: Instant::now(),
            nodes: 0,
        }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<(), Timeout> {
        self.nodes += 1;
        let over_nodes = self.nodes > self.budget.max_nodes;
        let over_time = self.nodes % 1024 == 1 && self.start.elapsed() > self.budget.wall_limit;
        if over_nodes || over_time {
            Err(Timeout { nodes: self.nodes })
        } else {
            Ok(())
        }
    }
}
