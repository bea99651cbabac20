use crate::error::Result;
use crate::graph::{generator, Family, Graph};
use crate::shuriken::ShurikenParams;

#[derive(Clone, Debug)]
pub struct NamedGraph {
    pub name: String,
    pub graph: Graph,
}

impl NamedGraph {
    pub fn new(name: impl Into<String>, graph: Graph) -> Self {
        NamedGraph {
            name: name.into(),
            graph,
        }
    }
}

fn named(name: &str, family: Family, order: usize) -> NamedGraph {
    NamedGraph::new(name, generator(family, order).expect("valid builtin generator"))
}

/// Triangle `0 1 2` with a pendant `3` on vertex 0.
pub fn paw() -> Graph {
    Graph::from_edge_list(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]).expect("valid paw")
}

/// Paths P2–P5, cycles C3–C5, complete K2–K4, the star K1,3, the paw and P3 ∪ K1.
pub fn builtin() -> Vec<NamedGraph> {
    let mut corpus = Vec::new();
    for v in 2..=5 {
        corpus.push(named(&format!("P{v}"), Family::Path, v));
    }
    for v in 3..=5 {
        corpus.push(named(&format!("C{v}"), Family::Cycle, v));
    }
    for v in 2..=4 {
        corpus.push(named(&format!("K{v}"), Family::Complete, v));
    }
    corpus.push(named("K1,3", Family::Star, 4));
    corpus.push(NamedGraph::new("paw", paw()));
    let p3 = generator(Family::Path, 3).expect("P3");
    corpus.push(NamedGraph::new("P3uK1", p3.disjoint_union(&Graph::null(1))));
    corpus
}

/// Edgeless graphs N1–N3.
pub fn null_graphs() -> Vec<NamedGraph> {
    (1..=3).map(|v| NamedGraph::new(format!("N{v}"), Graph::null(v))).collect()
}

pub fn builtin_with_null() -> Vec<NamedGraph> {
    let mut corpus = builtin();
    corpus.extend(null_graphs());
    corpus
}

/// `(1,1) (2,2) (3,3) (1,3) (2,4) (4,4) (2,6)`.
pub fn default_params() -> Vec<ShurikenParams> {
    [(1, 1), (2, 2), (3, 3), (1, 3), (2, 4), (4, 4), (2, 6)]
        .into_iter()
        .map(|(t, n)| ShurikenParams::new(t, n).expect("valid default params"))
        .collect()
}

/// Parses `"t,n;t,n;..."`.
pub fn parse_params(text: &str) -> Result<Vec<ShurikenParams>> {
    let mut out = Vec::new();
    for (idx, chunk) in text.split(';').enumerate() {
        let chunk = chunk.trim();
        if chunk.is_empty() {
            continue;
        }
        let bad = || crate::Error::Parse {
            line: idx + 1,
            msg: format!("expected `t,n`, got `{chunk}`"),
        };
        let (t, n) = chunk.split_once(',').ok_or_else(bad)?;
        let t = t.trim().parse().map_err(|_| bad())?;
        let n = n.trim().parse().map_err(|_| bad())?;
        out.push(ShurikenParams::new(t, n)?);
    }
    if out.is_empty() {
        return Err(crate::Error::Parse {
            line: 0,
            msg: "no parameter pairs given".into(),
        });
    }
    Ok(out)
}
