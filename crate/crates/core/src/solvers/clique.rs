use super::{Meter, SolverBudget, Timeout, Witnessed};
use crate::graph::{Graph, VertexSet};

/// Maximum clique by branch and bound with greedy-coloring upper bounds.
pub fn max_clique(g: &Graph, budget: &SolverBudget) -> Result<Witnessed, Timeout> {
    let mut search = CliqueSearch {
        g,
        meter: Meter::new(budget),
        best: Vec::new(),
    };
    if g.order() > 0 {
        search.expand(&mut Vec::new(), VertexSet::full(g.order()))?;
    }
    let mut witness = search.best;
    witness.sort_unstable();
    Ok(Witnessed {
        value: witness.len(),
        witness,
    })
}

/// Maximum independent set, i.e. a maximum clique of the complement.
pub fn max_independent_set(g: &Graph, budget: &SolverBudget) -> Result<Witnessed, Timeout> {
    max_clique(&g.complement(), budget)
}

struct CliqueSearch<'a> {
    g: &'a Graph,
    meter: Meter,
    best: Vec<usize>,
}

impl CliqueSearch<'_> {
    fn expand(&mut self, clique: &mut Vec<usize>, mut cand: VertexSet) -> Result<(), Timeout> {
        self.meter.tick()?;
        let (order, bounds) = self.color_classes(&cand);
        for k in (0..order.len()).rev() {
            // bounds are non-decreasing, so nothing earlier can do better
            if clique.len() + bounds[k] <= self.best.len() {
                return Ok(());
            }
            let v = order[k];
            clique.push(v);
            let next = cand.intersection(self.g.neighbors(v));
            if next.is_empty() {
                if clique.len() > self.best.len() {
                    self.best = clique.clone();
                }
            } else {
                self.expand(clique, next)?;
            }
            clique.pop();
            cand.remove(v);
        }
        Ok(())
    }

    /// Sequential greedy coloring of `cand`; returns the vertices ordered by
    /// color and, for each, the number of colors used up to it.
    fn color_classes(&self, cand: &VertexSet) -> (Vec<usize>, Vec<usize>) {
        let mut order = Vec::with_capacity(cand.len());
        let mut bounds = Vec::with_capacity(cand.len());
        let mut uncolored = cand.clone();
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut avail = uncolored.clone();
            while let Some(v) = avail.first() {
                avail.remove(v);
                avail.difference_with(self.g.neighbors(v));
                uncolored.remove(v);
                order.push(v);
                bounds.push(color);
            }
        }
        (order, bounds)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generator, Family};
    use crate::shuriken::{build, ShurikenParams};

    fn budget() -> SolverBudget {
        SolverBudget::default()
    }

    fn is_clique(g: &Graph, s: &[usize]) -> bool {
        s.iter()
            .enumerate()
            .all(|(i, &u)| s[i + 1..].iter().all(|&v| g.has_edge(u, v)))
    }

    #[test]
    fn small_families() {
        assert_eq!(max_clique(&generator(Family::Complete, 5).unwrap(), &budget()).unwrap().value, 5);
        assert_eq!(max_clique(&generator(Family::Cycle, 5).unwrap(), &budget()).unwrap().value, 2);
        assert_eq!(max_clique(&Graph::null(3), &budget()).unwrap().value, 1);
        assert_eq!(max_clique(&Graph::null(0), &budget()).unwrap().value, 0);
    }

    #[test]
    fn independence_examples() {
        let p3 = generator(Family::Path, 3).unwrap();
        assert_eq!(max_independent_set(&p3, &budget()).unwrap().witness, vec![0, 2]);
        assert_eq!(max_independent_set(&generator(Family::Complete, 4).unwrap(), &budget()).unwrap().value, 1);
    }

    #[test]
    fn shuriken_p3() {
        let s = build(&generator(Family::Path, 3).unwrap(), ShurikenParams::new(2, 4).unwrap());
        let w = max_clique(&s.graph, &budget()).unwrap();
        assert_eq!(w.value, 4);
        assert!(is_clique(&s.graph, &w.witness));
        assert_eq!(max_independent_set(&s.graph, &budget()).unwrap().value, 5);
    }

    #[test]
    fn node_budget_yields_timeout() {
        let s = build(&generator(Family::Path, 3).unwrap(), ShurikenParams::new(2, 4).unwrap());
        let tiny = SolverBudget::new(1, 1000);
        assert!(max_clique(&s.graph, &tiny).is_err());
    }
}
