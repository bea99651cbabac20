//! Closed-form predictions for invariants of `Shu^t_n(G)` in terms of `G`.
//!
//! Every function here is pure integer arithmetic; the audit compares
//! each result with an exact computation on the built graph.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::shuriken::ShurikenParams;
use crate::solvers::eulerian_circuit;
use serde::Serialize;

/// `v+1` when `n = t`, otherwise `max(v+1, 2 omega(G))`.
pub fn clique_formula(params: ShurikenParams, base_order: usize, omega_g: usize) -> usize {
    if params.n() == params.t() {
        base_order + 1
    } else {
        (base_order + 1).max(2 * omega_g)
    }
}

/// Chromatic number in the equal case `n = t`, which is `v+1`.
pub fn chromatic_case_equal(params: ShurikenParams, base_order: usize) -> Result<usize> {
    if params.n() != params.t() {
        return Err(Error::Precondition(format!(
            "equal-case chromatic formula needs n = t, got {params}"
        )));
    }
    Ok(base_order + 1)
}

/// `t + (n-t)/2 * (alpha(G) + 1)`.
pub fn independence_formula(params: ShurikenParams, alpha_g: usize) -> usize {
    params.t() + (params.n() - params.t()) / 2 * (alpha_g + 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum DominationPrediction {
    Exact(usize),
    Interval([usize; 2]),
}

impl DominationPrediction {
    pub fn admits(self, gamma: usize) -> bool {
        match self {
            DominationPrediction::Exact(x) => gamma == x,
            DominationPrediction::Interval([lo, hi]) => (lo..=hi).contains(&gamma),
        }
    }
}

/// `(n+t)/2` exactly when `gamma(G) <= t`, otherwise the interval
/// `[(n+t)/2, gamma(G) + (n-t)/2]`. At `gamma(G) = t` the two clauses agree.
pub fn domination_prediction(params: ShurikenParams, gamma_g: usize) -> DominationPrediction {
    let half = params.half();
    if gamma_g <= params.t() {
        DominationPrediction::Exact(half)
    } else {
        DominationPrediction::Interval([half, gamma_g + (params.n() - params.t()) / 2])
    }
}

fn euler_rule(params: ShurikenParams, base: &Graph, base_is_eulerian: bool) -> bool {
    params.t() == params.n() && base.order().is_multiple_of(2) && (base_is_eulerian || !params.n().is_multiple_of(2))
}

fn reject_null(base: &Graph) -> Result<()> {
    if base.is_null() {
        Err(Error::Precondition(
            "Eulerian characterization needs a base graph with at least one edge".into(),
        ))
    } else {
        Ok(())
    }
}

/// `t = n`, `v` even, and (`G` has only even degrees or `n` odd).
pub fn eulerian_characterization(base: &Graph, params: ShurikenParams) -> Result<bool> {
    reject_null(base)?;
    let even = base.degrees().iter().all(|d| d % 2 == 0);
    Ok(euler_rule(params, base, even))
}

/// Same rule with "G is Eulerian" read as "G has an Eulerian circuit",
/// which additionally requires the edges of `G` to be connected.
pub fn eulerian_characterization_circuit_reading(base: &Graph, params: ShurikenParams) -> Result<bool> {
    reject_null(base)?;
    Ok(euler_rule(params, base, eulerian_circuit(base).is_some()))
}

fn ints(params: ShurikenParams, v: usize, e: usize) -> (i128, i128, i128, i128) {
    (params.t() as i128, params.n() as i128, v as i128, e as i128)
}

/// First Zagreb index of the shuriken graph: `(printed, corrected)`.
///
/// The printed form carries `4(n-t)v` where the expansion of the degree
/// sum gives `3(n-t)v`, so the two differ by exactly `(n-t)v`.
pub fn zagreb_m1_closed(params: ShurikenParams, v: usize, e: usize, m1: u64) -> (i128, i128) {
    let (t, n, v, e) = ints(params, v, e);
    let m1 = m1 as i128;
    let printed = n * (n - 1) * (n - 1) * m1
        + n * v * v * v
        + (3 * n - 2 * t) * v * v
        + 4 * (n - t) * v
        + (n - t)
        + 4 * (n - 1) * e * (n * v + (n - t));
    let corrected = n * (n - 1) * (n - 1) * m1
        + 4 * e * (n - 1) * (n * v + n - t)
        + (v + 1) * (t * v * v + (n - t) * (v + 1) * (v + 1));
    (printed, corrected)
}

/// Second Zagreb index of the shuriken graph, exactly as printed.
pub fn zagreb_m2_closed(params: ShurikenParams, v: usize, e: usize, m1: u64, m2: u64) -> i128 {
    let (t, n, v, e) = ints(params, v, e);
    let (m1, m2) = (m1 as i128, m2 as i128);
    // n - t is even, so the two halved terms are exact
    let half = (n - t) / 2;
    2 * e * e * (n - 1) * (n - 1) * (n - t)
        + 2 * e * t * v * (n - 1)
        + 2 * e * v * (n - 1) * (n - t) * (v + 1)
        + 4 * e * v * (n - 1) * (v - 1)
        + 2 * e * (n - 1) * (n - t) * (v + 1)
        - e * (n - t) * (2 * v + 1) * (-n + t + 1)
        - m1 * (n - 1) * (n - t) * (-n + t + 1)
        + t * v * v * v
        + t * (4 * e * e - m1) * (n - 1) * (n - 1)
        + v * v * v * (v - 1)
        + half * v * v * (v + 1) * (v + 1)
        + v * (n - t) * (v + 1) * (v + 1)
        + half * (v + 1) * (v + 1)
        + (e * v * v + m1 * v * (n - 1) + m2 * (n - 1) * (n - 1)) * (n * n - 2 * n * t - n + 2 * t * t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generator, Family};

    fn p(t: usize, n: usize) -> ShurikenParams {
        ShurikenParams::new(t, n).unwrap()
    }

    #[test]
    fn clique_examples() {
        assert_eq!(clique_formula(p(2, 2), 3, 2), 4);
        assert_eq!(clique_formula(p(2, 4), 3, 2), 4);
        assert_eq!(clique_formula(p(1, 3), 3, 3), 6);
    }

    #[test]
    fn chromatic_equal_examples() {
        assert_eq!(chromatic_case_equal(p(2, 2), 2).unwrap(), 3);
        assert_eq!(chromatic_case_equal(p(1, 1), 3).unwrap(), 4);
        assert_eq!(chromatic_case_equal(p(3, 3), 3).unwrap(), 4);
        assert!(chromatic_case_equal(p(2, 4), 3).is_err());
    }

    #[test]
    fn independence_examples() {
        assert_eq!(independence_formula(p(2, 4), 2), 5);
        for a in 0..5 {
            assert_eq!(independence_formula(p(3, 3), a), 3);
        }
        assert_eq!(independence_formula(p(2, 4), 1), 4);
    }

    #[test]
    fn domination_examples() {
        assert_eq!(domination_prediction(p(2, 4), 1), DominationPrediction::Exact(3));
        assert_eq!(domination_prediction(p(2, 2), 1), DominationPrediction::Exact(2));
        assert_eq!(domination_prediction(p(1, 3), 2), DominationPrediction::Interval([2, 3]));
        // boundary gamma = t is the exact case
        assert_eq!(domination_prediction(p(2, 4), 2), DominationPrediction::Exact(3));
        assert!(DominationPrediction::Interval([2, 3]).admits(3));
        assert!(!DominationPrediction::Interval([2, 3]).admits(4));
    }

    #[test]
    fn euler_examples() {
        let c4 = generator(Family::Cycle, 4).unwrap();
        let p3 = generator(Family::Path, 3).unwrap();
        assert!(eulerian_characterization(&c4, p(2, 2)).unwrap());
        assert!(!eulerian_characterization(&p3, p(2, 4)).unwrap());
        assert!(!eulerian_characterization(&p3, p(3, 3)).unwrap());
        assert!(eulerian_characterization(&Graph::null(2), p(1, 1)).is_err());
    }

    #[test]
    fn euler_readings_diverge_on_disconnected_even_base() {
        let c3 = generator(Family::Cycle, 3).unwrap();
        let two_c3 = c3.disjoint_union(&c3);
        assert!(eulerian_characterization(&two_c3, p(2, 2)).unwrap());
        assert!(!eulerian_characterization_circuit_reading(&two_c3, p(2, 2)).unwrap());
    }

    #[test]
    fn m1_examples() {
        assert_eq!(zagreb_m1_closed(p(2, 4), 3, 2, 6), (758, 752));
        for (v, e, m1) in [(3, 2, 6), (4, 4, 16), (2, 1, 2)] {
            let (printed, corrected) = zagreb_m1_closed(p(3, 3), v, e, m1);
            assert_eq!(printed, corrected);
        }
    }

    #[test]
    fn m2_printed_values() {
        // whatever the printed form gives, evaluation itself is fixed
        assert_eq!(zagreb_m2_closed(p(1, 1), 3, 2, 6, 4), 81);
        assert_eq!(zagreb_m2_closed(p(2, 4), 3, 2, 6, 4), 1784);
        assert_eq!(zagreb_m2_closed(p(3, 3), 2, 1, 2, 1), 192);
    }
}
