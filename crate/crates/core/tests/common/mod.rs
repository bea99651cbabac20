//! Independent oracles: direct readings of the definitions, exhaustive
//! searches, no shared code with the library solvers.
#![allow(dead_code)]

use shuriken_core::Graph;

/// Dense adjacency matrix.
pub type Matrix = Vec<Vec<bool>>;

pub fn matrix(g: &Graph) -> Matrix {
    let n = g.order();
    (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect()
}

/// A vertex of the shuriken graph as `(base vertex or None for z, copy)`.
pub type Slot = (Option<usize>, usize);

/// Adjacency in `Shu^t_n(G)` read straight off the definition.
pub fn shuriken_adjacent(base: &Matrix, t: usize, n: usize, a: Slot, b: Slot) -> bool {
    if a == b {
        return false;
    }
    let ((xa, i), (xb, j)) = (a, b);
    // base edges are replicated between every pair of copies
    if let (Some(x), Some(y)) = (xa, xb) {
        if base[x][y] {
            return true;
        }
    }
    if i == j && i <= t {
        return true;
    }
    i > t && j > t && i + j == n + t + 1
}

pub fn slot_id(v: usize, slot: Slot) -> usize {
    let (x, i) = slot;
    (i - 1) * (v + 1) + x.unwrap_or(v)
}

pub fn shuriken_matrix(base: &Matrix, t: usize, n: usize) -> Matrix {
    let v = base.len();
    let slots: Vec<Slot> = (1..=n)
        .flat_map(|i| (0..=v).map(move |x| (if x < v { Some(x) } else { None }, i)))
        .collect();
    let mut m = vec![vec![false; slots.len()]; slots.len()];
    for &a in &slots {
        for &b in &slots {
            m[slot_id(v, a)][slot_id(v, b)] = shuriken_adjacent(base, t, n, a, b);
        }
    }
    m
}

pub fn edge_count(m: &Matrix) -> usize {
    m.iter().map(|row| row.iter().filter(|&&b| b).count()).sum::<usize>() / 2
}

pub fn degrees(m: &Matrix) -> Vec<usize> {
    m.iter().map(|row| row.iter().filter(|&&b| b).count()).collect()
}

fn mask_ok<F: Fn(usize, usize) -> bool>(mask: u64, n: usize, pair_ok: F) -> bool {
    (0..n).filter(|&u| mask >> u & 1 == 1).all(|u| {
        (u + 1..n)
            .filter(|&v| mask >> v & 1 == 1)
            .all(|v| pair_ok(u, v))
    })
}

/// Largest clique by scanning every subset.
pub fn brute_clique(m: &Matrix) -> usize {
    let n = m.len();
    assert!(n <= 24, "subset scan is for small graphs");
    (0u64..1 << n)
        .filter(|&s| mask_ok(s, n, |u, v| m[u][v]))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Largest independent set by scanning every subset.
pub fn brute_independence(m: &Matrix) -> usize {
    let n = m.len();
    assert!(n <= 24, "subset scan is for small graphs");
    (0u64..1 << n)
        .filter(|&s| mask_ok(s, n, |u, v| !m[u][v]))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Smallest dominating set by scanning every subset.
pub fn brute_domination(m: &Matrix) -> usize {
    let n = m.len();
    assert!(n <= 24, "subset scan is for small graphs");
    let closed: Vec<u64> = (0..n)
        .map(|u| (0..n).filter(|&v| v == u || m[u][v]).fold(0, |acc, v| acc | 1 << v))
        .collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    (0u64..1 << n)
        .filter(|&s| (0..n).filter(|&u| s >> u & 1 == 1).fold(0, |acc, u| acc | closed[u]) == all)
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

fn colorable(m: &Matrix, k: usize, colors: &mut Vec<usize>) -> bool {
    let v = colors.len();
    if v == m.len() {
        return true;
    }
    // colors are interchangeable, so a new color is only ever the next unused one
    let fresh = colors.iter().max().map_or(0, |&c| c + 1);
    for c in 0..k.min(fresh + 1) {
        if (0..v).all(|u| !m[u][v] || colors[u] != c) {
            colors.push(c);
            if colorable(m, k, colors) {
                return true;
            }
            colors.pop();
        }
    }
    false
}

/// Smallest `k` for which some assignment of `k` colors is proper, trying
/// every assignment in vertex order.
pub fn brute_chromatic(m: &Matrix) -> usize {
    (0..=m.len())
        .find(|&k| colorable(m, k, &mut Vec::new()))
        .expect("n colors always suffice")
}

fn extend_path(m: &Matrix, path: &mut Vec<usize>, used: &mut [bool], close: bool) -> bool {
    let n = m.len();
    if path.len() == n {
        return !close || m[path[n - 1]][path[0]];
    }
    let last = *path.last().expect("path is non-empty");
    for w in 0..n {
        if !used[w] && m[last][w] {
            used[w] = true;
            path.push(w);
            if (!close || cycle_still_possible(m, used, w, path[0])) && extend_path(m, path, used, close) {
                return true;
            }
            path.pop();
            used[w] = false;
        }
    }
    false
}

/// Every unvisited vertex still needs two neighbors among the unvisited
/// vertices and the two path ends.
fn cycle_still_possible(m: &Matrix, used: &[bool], end: usize, start: usize) -> bool {
    (0..m.len()).filter(|&u| !used[u]).all(|u| {
        let ends = usize::from(m[u][end]) + usize::from(m[u][start] && start != end);
        ends + (0..m.len()).filter(|&x| !used[x] && m[u][x]).count() >= 2
    })
}

/// Hamiltonian cycle existence by backtracking from vertex 0.
pub fn brute_hamiltonian_cycle(m: &Matrix) -> bool {
    let n = m.len();
    if n < 3 {
        return false;
    }
    let mut used = vec![false; n];
    used[0] = true;
    extend_path(m, &mut vec![0], &mut used, true)
}

/// Hamiltonian path existence by backtracking from every start.
pub fn brute_hamiltonian_path(m: &Matrix) -> bool {
    let n = m.len();
    n <= 1
        || (0..n).any(|s| {
            let mut used = vec![false; n];
            used[s] = true;
            extend_path(m, &mut vec![s], &mut used, false)
        })
}

/// `sum over edges of d(u) d(v)` by iterating matrix entries.
pub fn m2_by_edges(m: &Matrix) -> u64 {
    let d = degrees(m);
    let mut total = 0;
    for u in 0..m.len() {
        for v in u + 1..m.len() {
            if m[u][v] {
                total += (d[u] * d[v]) as u64;
            }
        }
    }
    total
}

pub fn m1_by_degrees(m: &Matrix) -> u64 {
    degrees(m).iter().map(|&d| (d * d) as u64).sum()
}

pub fn is_connected(m: &Matrix) -> bool {
    let n = m.len();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if m[u][v] && !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.into_iter().all(|s| s)
}
