//! Finite rings with identity, their idempotent and clean graphs, and the
//! identification of the clean graph with a shuriken graph of the
//! idempotent graph.
//!
//! Elements are the integers `0..order`. For `Z_m` they are the residues;
//! for a table ring they index the rows of the operation tables.

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::shuriken::{build, LabeledShuriken, ShurikenParams, ShurikenVertex};
use serde::{Deserialize, Serialize};

/// Axioms of table rings are checked at load only up to this order.
pub const TABLE_AXIOM_CHECK_LIMIT: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingTable {
    pub order: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub zero: usize,
    pub one: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiniteRing {
    Modular(usize),
    Table(RingTable),
}

impl FiniteRing {
    pub fn modular(m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidRing(format!("modulus must be at least 2, got {m}")));
        }
        Ok(FiniteRing::Modular(m))
    }

    /// Validates shapes, element ranges and, for small orders, the ring axioms.
    pub fn from_table(table: RingTable) -> Result<Self> {
        let n = table.order;
        if n == 0 {
            return Err(Error::InvalidRing("order must be positive".into()));
        }
        for (name, op) in [("add", &table.add), ("mul", &table.mul)] {
            if op.len() != n || op.iter().any(|row| row.len() != n) {
                return Err(Error::InvalidRing(format!("`{name}` must be a {n}x{n} table")));
            }
            if op.iter().flatten().any(|&x| x >= n) {
                return Err(Error::InvalidRing(format!("`{name}` has an entry outside 0..{n}")));
            }
        }
        if table.zero >= n || table.one >= n {
            return Err(Error::InvalidRing("`zero` and `one` must be elements".into()));
        }
        if n <= TABLE_AXIOM_CHECK_LIMIT {
            check_axioms(&table)?;
        }
        Ok(FiniteRing::Table(table))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::from_table(serde_json::from_str(text)?)
    }

    pub fn order(&self) -> usize {
        match self {
            FiniteRing::Modular(m) => *m,
            FiniteRing::Table(t) => t.order,
        }
    }

    pub fn zero(&self) -> usize {
        match self {
            FiniteRing::Modular(_) => 0,
            FiniteRing::Table(t) => t.zero,
        }
    }

    pub fn one(&self) -> usize {
        match self {
            FiniteRing::Modular(_) => 1,
            FiniteRing::Table(t) => t.one,
        }
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match self {
            FiniteRing::Modular(m) => ((a as u128 * b as u128) % *m as u128) as usize,
            FiniteRing::Table(t) => t.mul[a][b],
        }
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        match self {
            FiniteRing::Modular(m) => ((a as u128 + b as u128) % *m as u128) as usize,
            FiniteRing::Table(t) => t.add[a][b],
        }
    }

    fn annihilate(&self, a: usize, b: usize) -> bool {
        let z = self.zero();
        self.mul(a, b) == z && self.mul(b, a) == z
    }

    /// Two-sided inverse of `u`, if any.
    pub fn inverse(&self, u: usize) -> Option<usize> {
        match self {
            FiniteRing::Modular(m) => {
                let (mut r0, mut r1) = (*m as i128, u as i128);
                let (mut s0, mut s1) = (0i128, 1i128);
                while r1 != 0 {
                    let q = r0 / r1;
                    (r0, r1) = (r1, r0 - q * r1);
                    (s0, s1) = (s1, s0 - q * s1);
                }
                (r0 == 1).then(|| s0.rem_euclid(*m as i128) as usize)
            }
            FiniteRing::Table(_) => (0..self.order()).find(|&v| self.mutually_inverse(u, v)),
        }
    }

    fn mutually_inverse(&self, a: usize, b: usize) -> bool {
        let one = self.one();
        self.mul(a, b) == one && self.mul(b, a) == one
    }
}

fn check_axioms(t: &RingTable) -> Result<()> {
    let n = t.order;
    let bad = |what: &str| Err(Error::InvalidRing(format!("table fails {what}")));
    for a in 0..n {
        if t.add[t.zero][a] != a || t.add[a][t.zero] != a {
            return bad("additive identity");
        }
        if t.mul[t.one][a] != a || t.mul[a][t.one] != a {
            return bad("multiplicative identity");
        }
        if !(0..n).any(|b| t.add[a][b] == t.zero) {
            return bad("additive inverses");
        }
        for b in 0..n {
            if t.add[a][b] != t.add[b][a] {
                return bad("additive commutativity");
            }
            for c in 0..n {
                if t.add[t.add[a][b]][c] != t.add[a][t.add[b][c]] {
                    return bad("additive associativity");
                }
                if t.mul[t.mul[a][b]][c] != t.mul[a][t.mul[b][c]] {
                    return bad("multiplicative associativity");
                }
                if t.mul[a][t.add[b][c]] != t.add[t.mul[a][b]][t.mul[a][c]]
                    || t.mul[t.add[a][b]][c] != t.add[t.mul[a][c]][t.mul[b][c]]
                {
                    return bad("distributivity");
                }
            }
        }
    }
    Ok(())
}

/// All `x` with `x^2 = x`, ascending.
pub fn idempotents(r: &FiniteRing) -> Vec<usize> {
    (0..r.order()).filter(|&x| r.mul(x, x) == x).collect()
}

/// Idempotents other than `0` and `1`, ascending.
pub fn nontrivial_idempotents(r: &FiniteRing) -> Vec<usize> {
    let (zero, one) = (r.zero(), r.one());
    idempotents(r).into_iter().filter(|&x| x != zero && x != one).collect()
}

/// Units laid out like the copies of a shuriken graph: the `t` self-inverse
/// units first, then inverse pairs placed so that the unit at 1-based index
/// `i > t` has its inverse at index `n + t + 1 - i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnitOrdering {
    pub units: Vec<usize>,
    /// `inverses[k]` is the inverse of `units[k]`.
    pub inverses: Vec<usize>,
    pub t: usize,
}

impl UnitOrdering {
    pub fn n(&self) -> usize {
        self.units.len()
    }

    pub fn params(&self) -> Result<ShurikenParams> {
        ShurikenParams::new(self.t, self.n())
    }

    /// 0-based position of a unit.
    pub fn index_of(&self, u: usize) -> Option<usize> {
        self.units.iter().position(|&x| x == u)
    }
}

pub fn units(r: &FiniteRing) -> UnitOrdering {
    let mut self_inverse = Vec::new();
    let mut pairs = Vec::new();
    for u in 0..r.order() {
        match r.inverse(u) {
            Some(v) if v == u => self_inverse.push(u),
            Some(v) if u < v => pairs.push((u, v)),
            _ => {}
        }
    }
    let t = self_inverse.len();
    let n = t + 2 * pairs.len();
    let mut units = vec![0; n];
    units[..t].copy_from_slice(&self_inverse);
    for (k, &(lo, hi)) in pairs.iter().enumerate() {
        units[t + k] = lo;
        units[n - 1 - k] = hi;
    }
    let inverses = units
        .iter()
        .map(|&u| r.inverse(u).expect("collected units are invertible"))
        .collect();
    UnitOrdering { units, inverses, t }
}

/// `I(R)`: nontrivial idempotents, `x ~ y` iff `xy = yx = 0`. Vertex `k` is
/// the `k`-th nontrivial idempotent and is labeled with its element.
pub fn idempotent_graph(r: &FiniteRing) -> Graph {
    let ids = nontrivial_idempotents(r);
    let mut b = GraphBuilder::new(ids.len());
    for i in 0..ids.len() {
        for j in i + 1..ids.len() {
            if r.annihilate(ids[i], ids[j]) {
                b.add_edge(i, j).expect("indices in range");
            }
        }
    }
    b.build()
        .with_labels(ids.iter().map(|e| e.to_string()).collect())
        .expect("one label per vertex")
}

#[derive(Clone, Debug, PartialEq)]
pub struct CleanGraph {
    pub graph: Graph,
    /// `(idempotent, unit)` of each vertex.
    pub vertices: Vec<(usize, usize)>,
}

/// `Cl_2(R)`: pairs `(e, u)` with `e` a nonzero idempotent and `u` a unit;
/// distinct pairs are adjacent iff `ef = fe = 0` or `uv = vu = 1`.
/// Vertices are ordered by idempotent, then by the unit ordering.
pub fn clean_graph(r: &FiniteRing) -> CleanGraph {
    let zero = r.zero();
    let us = units(r);
    let vertices: Vec<(usize, usize)> = idempotents(r)
        .into_iter()
        .filter(|&e| e != zero)
        .flat_map(|e| us.units.iter().map(move |&u| (e, u)))
        .collect();
    let mut b = GraphBuilder::new(vertices.len());
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            let ((e, u), (f, v)) = (vertices[i], vertices[j]);
            if r.annihilate(e, f) || r.mutually_inverse(u, v) {
                b.add_edge(i, j).expect("indices in range");
            }
        }
    }
    let labels = vertices.iter().map(|(e, u)| format!("({e},{u})")).collect();
    CleanGraph {
        graph: b.build().with_labels(labels).expect("one label per vertex"),
        vertices,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BijectionPair {
    pub idempotent: usize,
    pub unit: usize,
    pub clean_id: usize,
    pub shuriken_id: usize,
    pub shuriken_label: String,
}

#[derive(Clone, Debug)]
pub struct Correspondence {
    pub matched: bool,
    pub params: ShurikenParams,
    pub base: Graph,
    pub clean: CleanGraph,
    pub shuriken: LabeledShuriken,
    pub bijection: Vec<BijectionPair>,
    /// Clean-graph edges whose image is not a shuriken edge.
    pub missing: usize,
    /// Shuriken edges that are not the image of a clean-graph edge.
    pub extra: usize,
}

/// Compares `Cl_2(R)` with `Shu^t_n(I(R))` under `(e, u_i) -> x_i` for
/// nontrivial `e` and `(1, u_i) -> z_i`.
pub fn clean_as_shuriken(r: &FiniteRing) -> Result<Correspondence> {
    let us = units(r);
    let params = us.params()?;
    let base = idempotent_graph(r);
    let nontrivial = nontrivial_idempotents(r);
    let shuriken = build(&base, params);
    let clean = clean_graph(r);
    let one = r.one();
    let bijection: Vec<BijectionPair> = clean
        .vertices
        .iter()
        .enumerate()
        .map(|(clean_id, &(e, u))| {
            let copy = us.index_of(u).expect("clean vertices use units") + 1;
            let sv = if e == one {
                ShurikenVertex::Z { copy }
            } else {
                let x = nontrivial.binary_search(&e).expect("nonzero idempotent");
                ShurikenVertex::Base { x, copy }
            };
            let shuriken_id = shuriken.id_of(sv);
            BijectionPair {
                idempotent: e,
                unit: u,
                clean_id,
                shuriken_id,
                shuriken_label: shuriken.graph.display_name(shuriken_id),
            }
        })
        .collect();
    let image = |a: usize| bijection[a].shuriken_id;
    let mut mapped: Vec<(usize, usize)> = clean
        .graph
        .edges()
        .iter()
        .map(|&(a, b)| (image(a).min(image(b)), image(a).max(image(b))))
        .collect();
    mapped.sort_unstable();
    let target = shuriken.graph.edges();
    let missing = mapped.iter().filter(|e| target.binary_search(e).is_err()).count();
    let extra = target.iter().filter(|e| mapped.binary_search(e).is_err()).count();
    let mut ids: Vec<usize> = bijection.iter().map(|p| p.shuriken_id).collect();
    ids.sort_unstable();
    ids.dedup();
    let bijective = ids.len() == shuriken.graph.order() && clean.graph.order() == shuriken.graph.order();
    Ok(Correspondence {
        matched: bijective && missing == 0 && extra == 0,
        params,
        base,
        clean,
        shuriken,
        bijection,
        missing,
        extra,
    })
}
