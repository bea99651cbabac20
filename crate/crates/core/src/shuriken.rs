//! The (t, n)-shuriken construction and its counting formulas.
//!
//! `Shu^t_n(G)` takes `n` copies of `G` plus one extra vertex `z` each.
//! Copies `1..=t` are completed into cliques; for `t < i <= (n+t)/2` copy
//! `i` is fully joined to its partner copy `n+t+1-i`; and every base edge
//! `xy` is replicated as `x_i y_j` for all copy indices `i, j` (including
//! `i = j`).
//!
//! Vertex ids are copy-major with `z` last in each copy:
//! `id(x_i) = (i-1)(v+1) + x` and `id(z_i) = (i-1)(v+1) + v`.

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShurikenParams {
    t: usize,
    n: usize,
}

impl ShurikenParams {
    pub fn new(t: usize, n: usize) -> Result<Self> {
        let reason = if t == 0 {
            Some("t must be at least 1")
        } else if n < t {
            Some("n must be at least t")
        } else if !(n - t).is_multiple_of(2) {
            Some("n - t must be even")
        } else {
            None
        };
        match reason {
            Some(reason) => Err(Error::InvalidParams { t, n, reason }),
            None => Ok(ShurikenParams { t, n }),
        }
    }

    pub fn t(self) -> usize {
        self.t
    }

    pub fn n(self) -> usize {
        self.n
    }

    /// Last index of the lower half of the paired copies, `(n+t)/2`.
    pub fn half(self) -> usize {
        (self.n + self.t) / 2
    }

    pub fn is_complete_copy(self, i: usize) -> bool {
        (1..=self.t).contains(&i)
    }

    /// Partner copy `n+t+1-i` of a paired copy `t < i <= n`.
    pub fn partner(self, i: usize) -> Result<usize> {
        if i <= self.t || i > self.n {
            return Err(Error::Unpaired {
                i,
                t: self.t,
                n: self.n,
            });
        }
        Ok(self.n + self.t + 1 - i)
    }
}

impl fmt::Display for ShurikenParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.t, self.n)
    }
}

/// Provenance of a shuriken vertex. Copy indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ShurikenVertex {
    Base { x: usize, copy: usize },
    Z { copy: usize },
}

impl ShurikenVertex {
    pub fn copy(self) -> usize {
        match self {
            ShurikenVertex::Base { copy, .. } | ShurikenVertex::Z { copy } => copy,
        }
    }
}

#[derive(Clone, Debug)]
pub struct LabeledShuriken {
    pub graph: Graph,
    pub params: ShurikenParams,
    pub base_order: usize,
}

impl LabeledShuriken {
    pub fn id_of(&self, vertex: ShurikenVertex) -> usize {
        let stride = self.base_order + 1;
        match vertex {
            ShurikenVertex::Base { x, copy } => (copy - 1) * stride + x,
            ShurikenVertex::Z { copy } => (copy - 1) * stride + self.base_order,
        }
    }

    pub fn vertex_of(&self, id: usize) -> ShurikenVertex {
        let stride = self.base_order + 1;
        let copy = id / stride + 1;
        match id % stride {
            x if x == self.base_order => ShurikenVertex::Z { copy },
            x => ShurikenVertex::Base { x, copy },
        }
    }

    /// All vertices in id order.
    pub fn vertices(&self) -> impl Iterator<Item = ShurikenVertex> + '_ {
        (0..self.graph.order()).map(|id| self.vertex_of(id))
    }
}

/// Materializes `Shu^t_n(base)` with labels `x@i` and `z@i`.
pub fn build(base: &Graph, params: ShurikenParams) -> LabeledShuriken {
    let v = base.order();
    let n = params.n();
    let stride = v + 1;
    let copy_ids = |i: usize| (i - 1) * stride..i * stride;
    let mut b = GraphBuilder::new(n * stride);
    let mut add = |a: usize, c: usize| b.add_edge(a, c).expect("shuriken ids are in range");

    // Base edges across and within all copies.
    for &(x, y) in base.edges() {
        for i in 1..=n {
            for j in 1..=n {
                add((i - 1) * stride + x, (j - 1) * stride + y);
            }
        }
    }
    // Complete copies.
    for i in 1..=params.t() {
        let ids: Vec<usize> = copy_ids(i).collect();
        for (k, &a) in ids.iter().enumerate() {
            for &c in &ids[k + 1..] {
                add(a, c);
            }
        }
    }
    // Paired copies.
    for i in params.t() + 1..=params.half() {
        let j = params.partner(i).expect("paired range");
        for a in copy_ids(i) {
            for c in copy_ids(j) {
                add(a, c);
            }
        }
    }

    let labels = (0..n * stride)
        .map(|id| {
            let copy = id / stride + 1;
            match id % stride {
                x if x == v => format!("z@{copy}"),
                x => format!("{}@{copy}", base.display_name(x)),
            }
        })
        .collect();
    let graph = b
        .build()
        .with_labels(labels)
        .expect("one label per vertex");
    LabeledShuriken {
        graph,
        params,
        base_order: v,
    }
}

/// `n(v+1)`.
pub fn expected_order(params: ShurikenParams, base_order: usize) -> usize {
    params.n() * (base_order + 1)
}

/// The size expression exactly as printed:
/// `((n v^2 + (2n - t) v + n - t) / 2) + (n - 1) e`.
pub fn paper_size(params: ShurikenParams, base_order: usize, base_size: usize) -> u64 {
    let (t, n) = (params.t() as u64, params.n() as u64);
    let (v, e) = (base_order as u64, base_size as u64);
    (n * v * v + (2 * n - t) * v + n - t) / 2 + (n - 1) * e
}

/// Edge count of the constructed graph:
/// `t v(v+1)/2 + (n-t)(v+1)^2/2 + n(n-1) e`.
pub fn corrected_size(params: ShurikenParams, base_order: usize, base_size: usize) -> u64 {
    let (t, n) = (params.t() as u64, params.n() as u64);
    let (v, e) = (base_order as u64, base_size as u64);
    t * v * (v + 1) / 2 + (n - t) * (v + 1) * (v + 1) / 2 + n * (n - 1) * e
}

/// Degree predicted for `vertex` of `Shu^t_n(base)`.
pub fn expected_degree(vertex: ShurikenVertex, base: &Graph, params: ShurikenParams) -> usize {
    let v = base.order();
    let bump = usize::from(!params.is_complete_copy(vertex.copy()));
    match vertex {
        ShurikenVertex::Base { x, .. } => base.neighbors(x).len() * (params.n() - 1) + v + bump,
        ShurikenVertex::Z { .. } => v + bump,
    }
}
