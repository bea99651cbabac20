use super::{max_clique, Meter, SolverBudget, Timeout};
use crate::graph::{Graph, VertexSet};

/// An optimal proper coloring; `colors[v]` is in `1..=value`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub value: usize,
    pub colors: Vec<usize>,
}

pub fn is_proper_coloring(g: &Graph, colors: &[usize]) -> bool {
    colors.len() == g.order() && g.edges().iter().all(|&(u, v)| colors[u] != colors[v])
}

/// Exact chromatic number by saturation-degree branch and bound.
///
/// A maximum clique is pre-colored with distinct colors; this is both the
/// lower bound and the symmetry break. The search closes as soon as a
/// coloring meets the clique bound, otherwise it is exhausted below the
/// best known coloring.
pub fn chromatic_number(g: &Graph, budget: &SolverBudget) -> Result<Coloring, Timeout> {
    let n = g.order();
    if n == 0 {
        return Ok(Coloring {
            value: 0,
            colors: Vec::new(),
        });
    }
    let clique = max_clique(g, budget)?;
    let mut search = Dsatur {
        g,
        meter: Meter::new(budget),
        color: vec![None; n],
        classes: Vec::new(),
        lower: clique.value,
        best: n + 1,
        best_colors: Vec::new(),
    };
    for (c, &v) in clique.witness.iter().enumerate() {
        search.assign(v, c);
    }
    search.run(clique.value)?;
    let colors = search.best_colors.iter().map(|c| c + 1).collect();
    Ok(Coloring {
        value: search.best,
        colors,
    })
}

struct Dsatur<'a> {
    g: &'a Graph,
    meter: Meter,
    color: Vec<Option<usize>>,
    classes: Vec<VertexSet>,
    lower: usize,
    best: usize,
    best_colors: Vec<usize>,
}

impl Dsatur<'_> {
    fn assign(&mut self, v: usize, c: usize) {
        if c == self.classes.len() {
            self.classes.push(VertexSet::new(self.g.order()));
        }
        self.classes[c].insert(v);
        self.color[v] = Some(c);
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v].take().expect("vertex was colored");
        self.classes[c].remove(v);
        if c + 1 == self.classes.len() && self.classes[c].is_empty() {
            self.classes.pop();
        }
    }

    fn done(&self) -> bool {
        self.best == self.lower
    }

    /// Uncolored vertex with the most distinct neighbor colors; ties go to
    /// the most uncolored neighbors, then the smallest id.
    fn pick(&self) -> Option<usize> {
        let mut uncolored = VertexSet::full(self.g.order());
        for (v, c) in self.color.iter().enumerate() {
            if c.is_some() {
                uncolored.remove(v);
            }
        }
        let mut pick: Option<(usize, usize, usize)> = None;
        for v in uncolored.iter() {
            let nb = self.g.neighbors(v);
            let sat = self.classes.iter().filter(|cls| cls.intersects(nb)).count();
            let deg = nb.intersection_len(&uncolored);
            if pick.is_none_or(|(_, s, d)| (sat, deg) > (s, d)) {
                pick = Some((v, sat, deg));
            }
        }
        pick.map(|(v, _, _)| v)
    }

    fn run(&mut self, used: usize) -> Result<(), Timeout> {
        self.meter.tick()?;
        let Some(v) = self.pick() else {
            self.best = used;
            self.best_colors = self.color.iter().map(|c| c.expect("all colored")).collect();
            return Ok(());
        };
        let nb = self.g.neighbors(v).clone();
        for c in 0..used {
            if !self.classes[c].intersects(&nb) {
                self.assign(v, c);
                self.run(used)?;
                self.unassign(v);
                if self.done() {
                    return Ok(());
                }
            }
        }
        if used + 1 < self.best {
            self.assign(v, used);
            self.run(used + 1)?;
            self.unassign(v);
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generator, Family};
    use crate::shuriken::{build, ShurikenParams};

    fn chi(g: &Graph) -> usize {
        let c = chromatic_number(g, &SolverBudget::default()).unwrap();
        assert!(is_proper_coloring(g, &c.colors));
        assert_eq!(c.colors.iter().copied().max().unwrap_or(0), c.value);
        c.value
    }

    #[test]
    fn small_families() {
        assert_eq!(chi(&generator(Family::Cycle, 5).unwrap()), 3);
        assert_eq!(chi(&generator(Family::Cycle, 4).unwrap()), 2);
        assert_eq!(chi(&generator(Family::Complete, 4).unwrap()), 4);
        assert_eq!(chi(&Graph::null(3)), 1);
        assert_eq!(chi(&Graph::null(0)), 0);
    }

    #[test]
    fn shuriken_k2_equal_case() {
        let s = build(&generator(Family::Complete, 2).unwrap(), ShurikenParams::new(2, 2).unwrap());
        assert_eq!(chi(&s.graph), 3);
    }

    #[test]
    fn chi_above_clique_number() {
        // C5 join C5: omega 4, chi 6
        let c5 = generator(Family::Cycle, 5).unwrap();
        assert_eq!(chi(&c5.join(&c5)), 6);
    }
}
