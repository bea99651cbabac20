//! Colorings of shuriken graphs derived from an optimal coloring of the base.
//!
//! Copies `t+1..=(n+t)/2` reuse the base coloring `f` with `z` colored 1;
//! their partners use `f + chi` with `z` colored `chi + 1`. Complete copies
//! are colored class by class:
//!
//! * singleton classes ("type 1") keep `f`;
//! * two-element classes ("type 2") give `f` to the lower id and `f + chi`
//!   to the other;
//! * larger classes are sorted by base degree (descending, ties by id).
//!   The first two members get `f` and `f + chi`. Every later member takes
//!   `f(b) + chi` for the smallest-id unused type-1 vertex `b` it is not
//!   adjacent to; failing that, the third member gets `2 chi + 1` and
//!   later members get `max(2 chi + 1, 1 + max color so far in the class)`.
//!
//! `z` in a complete copy gets the least color not used by its copy.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::shuriken::{build, LabeledShuriken, ShurikenParams, ShurikenVertex};
use crate::solvers::{chromatic_number, is_proper_coloring, SolverBudget};

/// A proper coloring of a base graph using exactly `chi` colors `1..=chi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseColoring {
    colors: Vec<usize>,
    chi: usize,
}

impl BaseColoring {
    /// Checks that `colors` is proper and surjective onto `1..=chi`. The
    /// caller vouches that `chi` is the chromatic number.
    pub fn new(g: &Graph, colors: Vec<usize>, chi: usize) -> Result<Self> {
        if !is_proper_coloring(g, &colors) {
            return Err(Error::Precondition("base coloring is not proper".into()));
        }
        let mut seen = vec![false; chi + 1];
        for &c in &colors {
            if c == 0 || c > chi {
                return Err(Error::Precondition(format!("color {c} outside 1..={chi}")));
            }
            seen[c] = true;
        }
        if seen[1..].iter().any(|s| !s) {
            return Err(Error::Precondition(format!(
                "base coloring does not use all {chi} colors"
            )));
        }
        Ok(BaseColoring { colors, chi })
    }

    /// Like [`BaseColoring::new`] but computes the chromatic number, so a
    /// coloring with more colors than necessary is rejected.
    pub fn optimal(g: &Graph, colors: Vec<usize>, budget: &SolverBudget) -> Result<Self> {
        let chi = chromatic_number(g, budget)?.value;
        let used = colors.iter().copied().max().unwrap_or(0);
        if used > chi {
            return Err(Error::Precondition(format!(
                "base coloring uses {used} colors, chromatic number is {chi}"
            )));
        }
        Self::new(g, colors, chi)
    }

    pub fn from_solver(g: &Graph, budget: &SolverBudget) -> Result<Self> {
        let c = chromatic_number(g, budget)?;
        Self::new(g, c.colors, c.value)
    }

    pub fn chi(&self) -> usize {
        self.chi
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Members of class `k`, ascending.
    fn class(&self, k: usize) -> Vec<usize> {
        (0..self.colors.len()).filter(|&x| self.colors[x] == k).collect()
    }
}

/// Every proper coloring of `g` onto exactly `1..=chi`, in lexicographic
/// order of the color vectors. Exponential; meant for bases of ≤ 6 vertices.
pub fn all_optimal_colorings(g: &Graph, chi: usize) -> Vec<BaseColoring> {
    fn rec(g: &Graph, chi: usize, colors: &mut Vec<usize>, out: &mut Vec<BaseColoring>) {
        let v = colors.len();
        if v == g.order() {
            if let Ok(c) = BaseColoring::new(g, colors.clone(), chi) {
                out.push(c);
            }
            return;
        }
        for c in 1..=chi {
            if (0..v).all(|u| !g.has_edge(u, v) || colors[u] != c) {
                colors.push(c);
                rec(g, chi, colors, out);
                colors.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(g, chi, &mut Vec::with_capacity(g.order()), &mut out);
    out
}

/// `A_k`: members of class `k` adjacent to every vertex outside class `k`.
pub fn a_sets(g: &Graph, f: &BaseColoring) -> Vec<Vec<usize>> {
    (1..=f.chi)
        .map(|k| {
            f.class(k)
                .into_iter()
                .filter(|&x| (0..g.order()).all(|y| f.colors[y] == k || g.has_edge(x, y)))
                .collect()
        })
        .collect()
}

/// Sum of `|A_k| - 2` over the classes with `|A_k| > 2`.
pub fn phi(a_sets: &[Vec<usize>]) -> usize {
    a_sets.iter().map(|a| a.len().saturating_sub(2)).sum()
}

/// `max(v+1, 2 chi(G) + phi)` for `n > t`.
pub fn chromatic_lower_bound(g: &Graph, f: &BaseColoring, params: ShurikenParams) -> Result<usize> {
    if params.n() == params.t() {
        return Err(Error::Precondition(format!(
            "chromatic lower bound applies to n > t, got {params}"
        )));
    }
    Ok((g.order() + 1).max(2 * f.chi + phi(&a_sets(g, f))))
}

#[derive(Clone, Debug)]
pub struct ColoringArtifacts {
    pub f: BaseColoring,
    pub a_sets: Vec<Vec<usize>>,
    pub phi: usize,
    /// Color of every vertex of the built shuriken graph, indexed by id.
    pub colors: Vec<usize>,
    pub shuriken: LabeledShuriken,
}

impl ColoringArtifacts {
    pub fn color_of(&self, vertex: ShurikenVertex) -> usize {
        self.colors[self.shuriken.id_of(vertex)]
    }

    pub fn colors_used(&self) -> usize {
        let mut c = self.colors.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    }

    pub fn is_proper(&self) -> bool {
        is_proper_coloring(&self.shuriken.graph, &self.colors)
    }
}

/// Colors of one complete copy: base vertices by id, then `z`.
fn complete_copy_colors(g: &Graph, f: &BaseColoring) -> (Vec<usize>, usize) {
    let chi = f.chi;
    let v = g.order();
    let mut col = vec![0usize; v];
    let type1: Vec<usize> = (1..=chi)
        .filter_map(|k| match f.class(k).as_slice() {
            [x] => Some(*x),
            _ => None,
        })
        .collect();
    let mut used = vec![false; v];
    let take_type1 = |a: usize, used: &mut Vec<bool>| {
        let b = type1
            .iter()
            .copied()
            .find(|&b| !used[b] && !g.has_edge(a, b))?;
        used[b] = true;
        Some(f.colors[b] + chi)
    };
    for k in 1..=chi {
        let mut class = f.class(k);
        match class.len() {
            1 => col[class[0]] = k,
            2 => {
                col[class[0]] = k;
                col[class[1]] = k + chi;
            }
            _ => {
                class.sort_by_key(|&x| (std::cmp::Reverse(g.neighbors(x).len()), x));
                col[class[0]] = k;
                col[class[1]] = k + chi;
                for j in 2..class.len() {
                    let a = class[j];
                    col[a] = match take_type1(a, &mut used) {
                        Some(c) => c,
                        None if j == 2 => 2 * chi + 1,
                        None => {
                            let prev = class[..j].iter().map(|&x| col[x]).max().unwrap_or(0);
                            (2 * chi + 1).max(prev + 1)
                        }
                    };
                }
            }
        }
    }
    let z = (1..).find(|c| !col.contains(c)).expect("some color is free");
    (col, z)
}

/// Builds `Shu^t_n(g)` and colors it from `f`.
pub fn shuriken_coloring(g: &Graph, f: &BaseColoring, params: ShurikenParams) -> Result<ColoringArtifacts> {
    if f.colors.len() != g.order() {
        return Err(Error::Precondition("base coloring length differs from base order".into()));
    }
    if g.order() == 0 {
        return Err(Error::Precondition("base graph has no vertices".into()));
    }
    let chi = f.chi;
    let shuriken = build(g, params);
    let (complete, complete_z) = complete_copy_colors(g, f);
    let colors = shuriken
        .vertices()
        .map(|sv| {
            let i = sv.copy();
            match sv {
                ShurikenVertex::Base { x, .. } if i <= params.t() => complete[x],
                ShurikenVertex::Z { .. } if i <= params.t() => complete_z,
                ShurikenVertex::Base { x, .. } if i <= params.half() => f.colors[x],
                ShurikenVertex::Z { .. } if i <= params.half() => 1,
                ShurikenVertex::Base { x, .. } => f.colors[x] + chi,
                ShurikenVertex::Z { .. } => chi + 1,
            }
        })
        .collect();
    let a = a_sets(g, f);
    Ok(ColoringArtifacts {
        f: f.clone(),
        phi: phi(&a),
        a_sets: a,
        colors,
        shuriken,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generator, Family};

    fn p(t: usize, n: usize) -> ShurikenParams {
        ShurikenParams::new(t, n).unwrap()
    }

    fn star4() -> (Graph, BaseColoring) {
        let g = generator(Family::Star, 4).unwrap();
        let f = BaseColoring::new(&g, vec![2, 1, 1, 1], 2).unwrap();
        (g, f)
    }

    #[test]
    fn base_coloring_validation() {
        let p3 = generator(Family::Path, 3).unwrap();
        assert!(BaseColoring::new(&p3, vec![1, 1, 2], 2).is_err());
        assert!(BaseColoring::new(&p3, vec![1, 2, 3], 3).is_ok());
        assert!(BaseColoring::new(&p3, vec![1, 2, 1], 3).is_err());
        let budget = SolverBudget::default();
        assert!(BaseColoring::optimal(&p3, vec![1, 2, 3], &budget).is_err());
        assert!(BaseColoring::optimal(&p3, vec![2, 1, 2], &budget).is_ok());
    }

    #[test]
    fn a_sets_and_bounds() {
        let p3 = generator(Family::Path, 3).unwrap();
        let f = BaseColoring::new(&p3, vec![1, 2, 1], 2).unwrap();
        assert_eq!(a_sets(&p3, &f), vec![vec![0, 2], vec![1]]);
        assert_eq!(chromatic_lower_bound(&p3, &f, p(2, 4)).unwrap(), 4);
        assert!(chromatic_lower_bound(&p3, &f, p(2, 2)).is_err());

        let k3 = generator(Family::Complete, 3).unwrap();
        let f = BaseColoring::new(&k3, vec![1, 2, 3], 3).unwrap();
        assert_eq!(phi(&a_sets(&k3, &f)), 0);
        assert_eq!(chromatic_lower_bound(&k3, &f, p(1, 3)).unwrap(), 6);

        let (star, f) = star4();
        let a = a_sets(&star, &f);
        assert_eq!(a, vec![vec![1, 2, 3], vec![0]]);
        assert_eq!(phi(&a), 1);
        assert_eq!(chromatic_lower_bound(&star, &f, p(1, 3)).unwrap(), 5);
    }

    #[test]
    fn p3_two_four_colors() {
        let p3 = generator(Family::Path, 3).unwrap();
        let f = BaseColoring::new(&p3, vec![1, 2, 1], 2).unwrap();
        let art = shuriken_coloring(&p3, &f, p(2, 4)).unwrap();
        let base = |x, copy| ShurikenVertex::Base { x, copy };
        assert_eq!(art.color_of(base(0, 1)), 1);
        assert_eq!(art.color_of(base(2, 1)), 3);
        assert_eq!(art.color_of(base(1, 1)), 2);
        assert_eq!(art.color_of(ShurikenVertex::Z { copy: 1 }), 4);
        for x in 0..3 {
            assert_eq!(art.color_of(base(x, 3)), f.colors()[x]);
            assert_eq!(art.color_of(base(x, 4)), f.colors()[x] + 2);
        }
        assert_eq!(art.color_of(ShurikenVertex::Z { copy: 3 }), 1);
        assert_eq!(art.color_of(ShurikenVertex::Z { copy: 4 }), 3);
        assert!(art.is_proper());
    }

    #[test]
    fn k3_single_copy() {
        let k3 = generator(Family::Complete, 3).unwrap();
        let f = BaseColoring::new(&k3, vec![1, 2, 3], 3).unwrap();
        let art = shuriken_coloring(&k3, &f, p(1, 1)).unwrap();
        assert_eq!(art.colors, vec![1, 2, 3, 4]);
        assert!(art.is_proper());
    }

    #[test]
    fn star_large_class_falls_back() {
        let (star, f) = star4();
        let art = shuriken_coloring(&star, &f, p(1, 3)).unwrap();
        let c = |x| art.color_of(ShurikenVertex::Base { x, copy: 1 });
        // leaves all have degree 1, so they are taken in id order
        assert_eq!((c(1), c(2), c(3)), (1, 3, 5));
        assert_eq!(c(0), 2);
        assert_eq!(art.color_of(ShurikenVertex::Z { copy: 1 }), 4);
        assert!(art.is_proper());
    }

    #[test]
    fn type1_vertex_reused_only_once() {
        // path 0-1-2-3 plus isolated 4 and 5; f puts {0,2,4} in class 1,
        // {1,3} in class 2 and 5 alone: 5 is the only type-1 vertex.
        let g = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let f = BaseColoring::new(&g, vec![1, 2, 1, 2, 1, 3], 3).unwrap();
        let art = shuriken_coloring(&g, &f, p(1, 1)).unwrap();
        let c = |x| art.color_of(ShurikenVertex::Base { x, copy: 1 });
        // class 1 by degree: 2 (deg 2), 0, 4; the third takes f(5) + chi
        assert_eq!((c(2), c(0), c(4)), (1, 4, 6));
        assert!(art.is_proper());
    }

    #[test]
    fn two_large_classes_can_collide() {
        // K_{3,3}: both classes fall back to 2 chi + 1 in the same complete copy
        let g = Graph::from_edge_list(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        )
        .unwrap();
        let f = BaseColoring::new(&g, vec![1, 1, 1, 2, 2, 2], 2).unwrap();
        let art = shuriken_coloring(&g, &f, p(1, 1)).unwrap();
        assert_eq!(art.color_of(ShurikenVertex::Base { x: 2, copy: 1 }), 5);
        assert_eq!(art.color_of(ShurikenVertex::Base { x: 5, copy: 1 }), 5);
        assert!(!art.is_proper());
    }

    #[test]
    fn enumerates_all_optimal_colorings() {
        let p3 = generator(Family::Path, 3).unwrap();
        let all = all_optimal_colorings(&p3, 2);
        assert_eq!(all.len(), 2);
        let c5 = generator(Family::Cycle, 5).unwrap();
        // 3-colorings of C5 onto all three colors: chromatic polynomial at 3 is 30
        assert_eq!(all_optimal_colorings(&c5, 3).len(), 30);
    }
}
