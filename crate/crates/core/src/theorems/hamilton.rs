use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::shuriken::{ShurikenParams, ShurikenVertex};
use crate::solvers::{hamiltonian_path, is_hamiltonian_path, SolverBudget};

/// Hamiltonian cycle of `Shu^t_n(G)` assembled from a Hamiltonian path
/// `v1 .. vk` of `G`.
///
/// Copy `i <= t` contributes `v1_i, z_i, vk_i, ..., v2_i`; a paired copy
/// `i > t` contributes the same with `z` borrowed from the partner copy
/// `n+t+1-i`. Consecutive segments join along the base edge `v2 v1`, and
/// the last segment closes back onto `v1` of copy 1.
pub fn cycle_from_path(path: &[usize], params: ShurikenParams) -> Result<Vec<ShurikenVertex>> {
    if path.len() < 2 {
        return Err(Error::Precondition(
            "Hamiltonian construction needs a base path on at least two vertices".into(),
        ));
    }
    let mut cycle = Vec::with_capacity(params.n() * (path.len() + 1));
    for i in 1..=params.n() {
        let z_copy = if params.is_complete_copy(i) {
            i
        } else {
            params.partner(i)?
        };
        cycle.push(ShurikenVertex::Base { x: path[0], copy: i });
        cycle.push(ShurikenVertex::Z { copy: z_copy });
        cycle.extend(
            path[1..]
                .iter()
                .rev()
                .map(|&x| ShurikenVertex::Base { x, copy: i }),
        );
    }
    Ok(cycle)
}

/// Finds a Hamiltonian path of `base` and expands it with [`cycle_from_path`].
pub fn hamiltonian_construct(
    base: &Graph,
    params: ShurikenParams,
    budget: &SolverBudget,
) -> Result<Vec<ShurikenVertex>> {
    if base.order() < 2 {
        return Err(Error::Precondition(
            "Hamiltonian construction needs at least two base vertices".into(),
        ));
    }
    let path = hamiltonian_path(base, budget)?
        .ok_or_else(|| Error::Precondition("base graph has no Hamiltonian path".into()))?;
    debug_assert!(is_hamiltonian_path(base, &path));
    cycle_from_path(&path, params)
}
