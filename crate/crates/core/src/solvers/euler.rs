use crate::graph::Graph;

/// Every degree is even and all non-isolated vertices lie in one component.
pub fn satisfies_euler_condition(g: &Graph) -> bool {
    if g.degrees().iter().any(|d| d % 2 != 0) {
        return false;
    }
    let Some(&(start, _)) = g.edges().first() else {
        return true;
    };
    let reach = g.reachable_from(start);
    (0..g.order()).all(|v| g.neighbors(v).is_empty() || reach.contains(v))
}

/// `circuit` is a closed trail using every edge of `g` exactly once.
pub fn is_eulerian_circuit(g: &Graph, circuit: &[(usize, usize)]) -> bool {
    if circuit.len() != g.size() {
        return false;
    }
    let mut used = std::collections::HashSet::with_capacity(circuit.len());
    let chained = circuit.windows(2).all(|w| w[0].1 == w[1].0);
    let closed = circuit.first().zip(circuit.last()).is_none_or(|(a, b)| a.0 == b.1);
    chained
        && closed
        && circuit
            .iter()
            .all(|&(u, v)| g.has_edge(u, v) && used.insert((u.min(v), u.max(v))))
}

/// Eulerian circuit by Hierholzer's algorithm, as a sequence of edges
/// `(from, to)` where each edge starts where the previous one ended.
///
/// Returns `None` when no circuit exists. Isolated vertices are ignored; an
/// edgeless graph has the empty circuit.
pub fn eulerian_circuit(g: &Graph) -> Option<Vec<(usize, usize)>> {
    if g.degrees().iter().any(|d| d % 2 != 0) {
        return None;
    }
    let Some(&(start, _)) = g.edges().first() else {
        return Some(Vec::new());
    };
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); g.order()];
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        adj[u].push((v, id));
        adj[v].push((u, id));
    }
    let mut used = vec![false; g.size()];
    let mut next = vec![0usize; g.order()];
    let mut stack = vec![start];
    let mut walk = Vec::with_capacity(g.size() + 1);
    while let Some(&v) = stack.last() {
        while next[v] < adj[v].len() && used[adj[v][next[v]].1] {
            next[v] += 1;
        }
        if let Some(&(w, id)) = adj[v].get(next[v]) {
            used[id] = true;
            stack.push(w);
        } else {
            stack.pop();
            walk.push(v);
        }
    }
    if walk.len() != g.size() + 1 {
        // edges outside the start component
        return None;
    }
    walk.reverse();
    Some(walk.windows(2).map(|w| (w[0], w[1])).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generator, Family};

    #[test]
    fn cycle_and_path() {
        let c4 = generator(Family::Cycle, 4).unwrap();
        let circuit = eulerian_circuit(&c4).unwrap();
        assert_eq!(circuit.len(), 4);
        assert_eq!(circuit.first().unwrap().0, circuit.last().unwrap().1);
        assert!(is_eulerian_circuit(&c4, &circuit));
        assert!(!is_eulerian_circuit(&c4, &circuit[..3]));
        assert!(eulerian_circuit(&generator(Family::Path, 3).unwrap()).is_none());
    }

    #[test]
    fn two_triangles_are_not_one_circuit() {
        let c3 = generator(Family::Cycle, 3).unwrap();
        let g = c3.disjoint_union(&c3);
        assert!(!satisfies_euler_condition(&g));
        assert!(eulerian_circuit(&g).is_none());
    }

    #[test]
    fn isolated_vertices_are_ignored() {
        let g = generator(Family::Cycle, 3).unwrap().disjoint_union(&Graph::null(2));
        assert!(satisfies_euler_condition(&g));
        assert_eq!(eulerian_circuit(&g).unwrap().len(), 3);
        assert_eq!(eulerian_circuit(&Graph::null(3)), Some(Vec::new()));
    }
}
