//! Simple undirected graphs on contiguous vertex ids.
//!
//! A [`Graph`] is immutable once built. Adjacency is held twice: as one
//! bitset row per vertex (what the solvers consume) and as a sorted edge
//! list with `u < v` (what iteration and serialization consume). Both are
//! derived from the same builder state, so they never disagree.

mod bitset;
pub mod generators;
pub mod io;

pub use bitset::VertexSet;
pub use generators::{generator, Family};

use crate::error::{Error, Result};
use std::collections::VecDeque;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    rows: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
    labels: Option<Vec<String>>,
}

/// Single-owner accumulator for edges; duplicates collapse.
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    rows: Vec<VertexSet>,
}

impl GraphBuilder {
    pub fn new(order: usize) -> Self {
        GraphBuilder {
            rows: (0..order).map(|_| VertexSet::new(order)).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let order = self.rows.len();
        if u >= order || v >= order {
            return Err(Error::VertexOutOfRange { u, v, order });
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.rows[u].insert(v);
        self.rows[v].insert(u);
        Ok(())
    }

    pub fn build(self) -> Graph {
        let edges = self
            .rows
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect();
        Graph {
            rows: self.rows,
            edges,
            labels: None,
        }
    }
}

impl Graph {
    /// Graph on `order` vertices with the symmetric closure of `edges`.
    pub fn from_edge_list(order: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut b = GraphBuilder::new(order);
        for &(u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    /// Edgeless graph on `order` vertices.
    pub fn null(order: usize) -> Graph {
        GraphBuilder::new(order).build()
    }

    /// Attach display labels, one per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph> {
        if labels.len() != self.order() {
            return Err(Error::Precondition(format!(
                "{} labels given for {} vertices",
                labels.len(),
                self.order()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Graph {
        self.labels = None;
        self
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().and_then(|l| l.get(v)).map(String::as_str)
    }

    /// Label if present, otherwise the decimal id.
    pub fn display_name(&self, v: usize) -> String {
        self.label(v).map_or_else(|| v.to_string(), str::to_owned)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.rows[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.rows[v].len())
    }

    /// Degree of every vertex, indexed by id.
    pub fn degrees(&self) -> Vec<usize> {
        self.rows.iter().map(VertexSet::len).collect()
    }

    pub fn is_null(&self) -> bool {
        self.edges.is_empty()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order() {
            Err(Error::NoSuchVertex {
                vertex: v,
                order: self.order(),
            })
        } else {
            Ok(())
        }
    }

    /// Breadth-first reachability from vertex 0. The graph on zero
    /// vertices is connected; a single vertex is connected.
    pub fn is_connected(&self) -> bool {
        if self.order() == 0 {
            return true;
        }
        self.reachable_from(0).len() == self.order()
    }

    pub(crate) fn reachable_from(&self, start: usize) -> VertexSet {
        let mut seen = VertexSet::new(self.order());
        let mut queue = VecDeque::from([start]);
        seen.insert(start);
        while let Some(u) = queue.pop_front() {
            for w in self.rows[u].iter() {
                if !seen.contains(w) {
                    seen.insert(w);
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Subgraph induced by `vertices`; the i-th listed vertex becomes id i.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        for &v in vertices {
            self.check_vertex(v)?;
        }
        let mut b = GraphBuilder::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if u == v {
                    return Err(Error::Precondition(format!("vertex {u} listed twice")));
                }
                if self.has_edge(u, v) {
                    b.add_edge(i, j)?;
                }
            }
        }
        let mut g = b.build();
        if let Some(labels) = &self.labels {
            g.labels = Some(vertices.iter().map(|&v| labels[v].clone()).collect());
        }
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let mut b = GraphBuilder::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    b.rows[u].insert(v);
                    b.rows[v].insert(u);
                }
            }
        }
        let mut g = b.build();
        g.labels = self.labels.clone();
        g
    }

    /// `G ∪ H`: ids of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        self.combine(other, false)
    }

    /// `G + H`: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        self.combine(other, true)
    }

    fn combine(&self, other: &Graph, cross: bool) -> Graph {
        let offset = self.order();
        let mut b = GraphBuilder::new(offset + other.order());
        let shifted = other.edges.iter().map(|&(u, v)| (u + offset, v + offset));
        for (u, v) in self.edges.iter().copied().chain(shifted) {
            b.rows[u].insert(v);
            b.rows[v].insert(u);
        }
        if cross {
            for u in 0..offset {
                for v in offset..offset + other.order() {
                    b.rows[u].insert(v);
                    b.rows[v].insert(u);
                }
            }
        }
        let mut g = b.build();
        if self.labels.is_some() || other.labels.is_some() {
            let names = (0..self.order())
                .map(|v| self.display_name(v))
                .chain((0..other.order()).map(|v| other.display_name(v)));
            g.labels = Some(names.collect());
        }
        g
    }
}
