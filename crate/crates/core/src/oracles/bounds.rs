use serde::Serialize;

use super::{oracle_values_with, SolverConfig};
use crate::error::Result;
use crate::graph::{min_degree, Graph};

/// Upper bound on `gamma_t` in terms of `mu*` and the minimum degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub min_degree: usize,
    pub gamma_t: usize,
    pub mu_star: usize,
    /// `2 mu*` when the minimum degree is at most 2, else `2 mu* - delta + 2`.
    pub bound: i64,
    pub holds: bool,
    pub slack: i64,
}

impl BoundReport {
    pub fn bound_for(min_degree: usize, mu_star: usize) -> i64 {
        let two_mu = 2 * mu_star as i64;
        if min_degree <= 2 {
            two_mu
        } else {
            two_mu - min_degree as i64 + 2
        }
    }
}

/// Solve both numbers exactly and compare against the degree-dependent bound.
/// A violated bound means a solver bug, not a property of the input.
pub fn check_proposition1(g: &Graph) -> Result<BoundReport> {
    check_proposition1_with(g, &SolverConfig::default())
}

pub fn check_proposition1_with(g: &Graph, cfg: &SolverConfig) -> Result<BoundReport> {
    let delta = min_degree(g)?;
    let values = oracle_values_with(g, cfg)?;
    let bound = BoundReport::bound_for(delta, values.mu_star);
    let slack = bound - values.gamma_t as i64;
    Ok(BoundReport {
        min_degree: delta,
        gamma_t: values.gamma_t,
        mu_star: values.mu_star,
        bound,
        holds: slack >= 0,
        slack,
    })
}
