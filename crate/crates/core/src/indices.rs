//! Degree-based topological indices computed directly from a graph.

use crate::graph::Graph;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IndexValues {
    pub m1: u64,
    pub m2: u64,
}

impl IndexValues {
    pub fn of(g: &Graph) -> Self {
        IndexValues {
            m1: m1_direct(g),
            m2: m2_direct(g),
        }
    }
}

/// First Zagreb index, the sum of squared degrees.
pub fn m1_direct(g: &Graph) -> u64 {
    g.degrees().iter().map(|&d| (d * d) as u64).sum()
}

/// Second Zagreb index, the sum over edges of endpoint degree products.
pub fn m2_direct(g: &Graph) -> u64 {
    let deg = g.degrees();
    g.edges().iter().map(|&(u, v)| (deg[u] * deg[v]) as u64).sum()
}
