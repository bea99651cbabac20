use super::{Meter, SolverBudget, Timeout};
use crate::graph::{Graph, VertexSet};

fn is_permutation(n: usize, seq: &[usize]) -> bool {
    let mut seen = VertexSet::new(n);
    seq.len() == n
        && seq.iter().all(|&v| {
            let fresh = v < n && !seen.contains(v);
            if fresh {
                seen.insert(v);
            }
            fresh
        })
}

pub fn is_hamiltonian_path(g: &Graph, seq: &[usize]) -> bool {
    is_permutation(g.order(), seq) && seq.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

pub fn is_hamiltonian_cycle(g: &Graph, seq: &[usize]) -> bool {
    seq.len() >= 3
        && is_hamiltonian_path(g, seq)
        && g.has_edge(seq[seq.len() - 1], seq[0])
}

/// Hamiltonian cycle starting at vertex 0, or `None` once the search is
/// exhausted. Graphs with fewer than three vertices have no cycle.
pub fn hamiltonian_cycle(g: &Graph, budget: &SolverBudget) -> Result<Option<Vec<usize>>, Timeout> {
    if g.order() < 3 {
        return Ok(None);
    }
    let mut s = PathSearch::new(g, budget, true);
    s.visit(0);
    Ok(if s.extend()? { Some(s.path) } else { None })
}

/// Hamiltonian path, trying start vertices in ascending order.
pub fn hamiltonian_path(g: &Graph, budget: &SolverBudget) -> Result<Option<Vec<usize>>, Timeout> {
    if g.order() <= 1 {
        return Ok(Some((0..g.order()).collect()));
    }
    let mut s = PathSearch::new(g, budget, false);
    for start in 0..g.order() {
        s.visit(start);
        if s.extend()? {
            return Ok(Some(s.path));
        }
        s.leave();
    }
    Ok(None)
}

struct PathSearch<'a> {
    g: &'a Graph,
    meter: Meter,
    closed: bool,
    path: Vec<usize>,
    unvisited: VertexSet,
}

impl<'a> PathSearch<'a> {
    fn new(g: &'a Graph, budget: &SolverBudget, closed: bool) -> Self {
        PathSearch {
            g,
            meter: Meter::new(budget),
            closed,
            path: Vec::with_capacity(g.order()),
            unvisited: VertexSet::full(g.order()),
        }
    }

    fn visit(&mut self, v: usize) {
        self.path.push(v);
        self.unvisited.remove(v);
    }

    fn leave(&mut self) {
        let v = self.path.pop().expect("non-empty path");
        self.unvisited.insert(v);
    }

    /// Every unvisited vertex still needs enough usable neighbors: two
    /// for a cycle, and for a path at most one of them may be a dead end.
    fn feasible(&self) -> bool {
        let last = *self.path.last().expect("non-empty path");
        let mut usable = self.unvisited.clone();
        usable.insert(last);
        if self.closed {
            usable.insert(self.path[0]);
        }
        let mut dead_ends = 0;
        for u in self.unvisited.iter() {
            match self.g.neighbors(u).intersection_len(&usable) {
                0 => return false,
                1 if self.closed => return false,
                1 => dead_ends += 1,
                _ => {}
            }
        }
        dead_ends <= 1
    }

    fn extend(&mut self) -> Result<bool, Timeout> {
        self.meter.tick()?;
        let last = *self.path.last().expect("non-empty path");
        if self.unvisited.is_empty() {
            return Ok(!self.closed || self.g.has_edge(last, self.path[0]));
        }
        if !self.feasible() {
            return Ok(false);
        }
        let next = self.g.neighbors(last).intersection(&self.unvisited);
        for w in next.iter() {
            self.visit(w);
            if self.extend()? {
                return Ok(true);
            }
            self.leave();
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generator, Family};

    fn budget() -> SolverBudget {
        SolverBudget::default()
    }

    #[test]
    fn cycle_examples() {
        let c5 = generator(Family::Cycle, 5).unwrap();
        let cyc = hamiltonian_cycle(&c5, &budget()).unwrap().unwrap();
        assert!(is_hamiltonian_cycle(&c5, &cyc));
        let star = generator(Family::Star, 4).unwrap();
        assert!(hamiltonian_cycle(&star, &budget()).unwrap().is_none());
        assert!(hamiltonian_path(&star, &budget()).unwrap().is_none());
    }

    #[test]
    fn path_but_no_cycle() {
        let p3 = generator(Family::Path, 3).unwrap();
        let path = hamiltonian_path(&p3, &budget()).unwrap().unwrap();
        assert!(is_hamiltonian_path(&p3, &path));
        assert!(hamiltonian_cycle(&p3, &budget()).unwrap().is_none());
    }

    #[test]
    fn validators_reject_bad_sequences() {
        let c4 = generator(Family::Cycle, 4).unwrap();
        assert!(is_hamiltonian_cycle(&c4, &[0, 1, 2, 3]));
        assert!(!is_hamiltonian_cycle(&c4, &[0, 2, 1, 3]));
        assert!(!is_hamiltonian_cycle(&c4, &[0, 1, 2]));
        assert!(!is_hamiltonian_path(&c4, &[0, 1, 1, 2]));
    }

    #[test]
    fn disconnected_graph_has_neither() {
        let g = generator(Family::Path, 3).unwrap().disjoint_union(&Graph::null(1));
        assert!(hamiltonian_path(&g, &budget()).unwrap().is_none());
        assert!(hamiltonian_cycle(&g, &budget()).unwrap().is_none());
    }
}
