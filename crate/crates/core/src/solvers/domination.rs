use super::{Meter, SolverBudget, Timeout, Witnessed};
use crate::graph::{Graph, VertexSet};

pub fn is_dominating_set(g: &Graph, set: &[usize]) -> bool {
    let mut covered = VertexSet::new(g.order());
    for &v in set {
        if v >= g.order() {
            return false;
        }
        covered.insert(v);
        covered.union_with(g.neighbors(v));
    }
    covered.len() == g.order()
}

/// Minimum dominating set.
///
/// Target sizes are tried in ascending order from a counting lower bound up
/// to one less than a greedy solution. Each attempt branches on the closed
/// neighborhood of the smallest undominated vertex, pruning when the
/// remaining picks cannot cover what is left even at maximum coverage.
pub fn min_dominating_set(g: &Graph, budget: &SolverBudget) -> Result<Witnessed, Timeout> {
    let n = g.order();
    let closed: Vec<VertexSet> = (0..n)
        .map(|v| {
            let mut s = g.neighbors(v).clone();
            s.insert(v);
            s
        })
        .collect();
    let greedy = greedy_dominating_set(&closed, n);
    let max_closed = closed.iter().map(VertexSet::len).max().unwrap_or(1);
    let lower = n.div_ceil(max_closed);
    let mut search = DomSearch {
        closed: &closed,
        meter: Meter::new(budget),
        chosen: Vec::new(),
    };
    for k in lower..greedy.len() {
        if search.extend(VertexSet::new(n), k)? {
            let mut witness = search.chosen;
            witness.sort_unstable();
            return Ok(Witnessed { value: k, witness });
        }
    }
    Ok(Witnessed {
        value: greedy.len(),
        witness: greedy,
    })
}

fn greedy_dominating_set(closed: &[VertexSet], n: usize) -> Vec<usize> {
    let mut covered = VertexSet::new(n);
    let mut picked = Vec::new();
    while covered.len() < n {
        let mut best = (0, 0);
        for (v, nb) in closed.iter().enumerate() {
            let gain = nb.len() - nb.intersection_len(&covered);
            if gain > best.1 {
                best = (v, gain);
            }
        }
        picked.push(best.0);
        covered.union_with(&closed[best.0]);
    }
    picked.sort_unstable();
    picked
}

struct DomSearch<'a> {
    closed: &'a [VertexSet],
    meter: Meter,
    chosen: Vec<usize>,
}

impl DomSearch<'_> {
    fn extend(&mut self, covered: VertexSet, picks_left: usize) -> Result<bool, Timeout> {
        self.meter.tick()?;
        let n = self.closed.len();
        let missing = n - covered.len();
        if missing == 0 {
            return Ok(true);
        }
        if picks_left == 0 {
            return Ok(false);
        }
        let max_gain = self
            .closed
            .iter()
            .map(|nb| nb.len() - nb.intersection_len(&covered))
            .max()
            .unwrap_or(0);
        if missing > picks_left * max_gain {
            return Ok(false);
        }
        let mut undominated = VertexSet::full(n);
        undominated.difference_with(&covered);
        let u = undominated.first().expect("something is undominated");
        for w in self.closed[u].iter() {
            let mut next = covered.clone();
            next.union_with(&self.closed[w]);
            self.chosen.push(w);
            if self.extend(next, picks_left - 1)? {
                return Ok(true);
            }
            self.chosen.pop();
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generator, Family};
    use crate::shuriken::{build, ShurikenParams};

    fn gamma(g: &Graph) -> usize {
        let w = min_dominating_set(g, &SolverBudget::default()).unwrap();
        assert!(is_dominating_set(g, &w.witness));
        assert_eq!(w.witness.len(), w.value);
        w.value
    }

    #[test]
    fn small_families() {
        assert_eq!(gamma(&generator(Family::Star, 4).unwrap()), 1);
        assert_eq!(gamma(&generator(Family::Path, 3).unwrap()), 1);
        assert_eq!(gamma(&generator(Family::Path, 4).unwrap()), 2);
        assert_eq!(gamma(&generator(Family::Cycle, 5).unwrap()), 2);
        assert_eq!(gamma(&Graph::null(3)), 3);
    }

    #[test]
    fn shuriken_p3() {
        let s = build(&generator(Family::Path, 3).unwrap(), ShurikenParams::new(2, 4).unwrap());
        assert_eq!(gamma(&s.graph), 3);
        // x0 of copy 1, centre of copy 2, z of copy 3
        assert!(is_dominating_set(&s.graph, &[0, 5, 11]));
        assert!(!is_dominating_set(&s.graph, &[3, 7, 9]));
    }
}
