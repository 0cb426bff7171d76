//! Exact exponential solvers for the total domination number and the minimum
//! maximal matching number, plus the validators they are checked against.
//!
//! Both solvers work component by component on `u64` vertex masks, so the
//! vertex limit can never exceed 64.

mod bounds;
mod domination;
mod min_maximal;

use std::collections::BTreeSet;
use std::time::Duration;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{connected_components, induced_subgraph, Edge, Graph};
use crate::matching::Matching;

pub use bounds::{check_proposition1, check_proposition1_with, BoundReport};
pub use domination::{total_domination_number, total_domination_number_with};
pub use min_maximal::{minimum_maximal_matching, minimum_maximal_matching_with};

/// Environment variable overriding [`SolverConfig::vertex_limit`].
pub const VERTEX_LIMIT_ENV: &str = "TOTDOM_VERTEX_LIMIT";

const MASK_BITS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Largest vertex count the exact solvers accept.
    pub vertex_limit: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { vertex_limit: 24 }
    }
}

impl SolverConfig {
    /// Default config, with the limit overridden by `TOTDOM_VERTEX_LIMIT` when set.
    pub fn from_env() -> Result<Self> {
        let mut cfg = Self::default();
        if let Ok(raw) = std::env::var(VERTEX_LIMIT_ENV) {
            let limit: usize = raw.trim().parse().map_err(|_| {
                Error::InvalidParameter(format!("{VERTEX_LIMIT_ENV}=`{raw}` is not an integer"))
            })?;
            if limit > MASK_BITS {
                return Err(Error::InvalidParameter(format!(
                    "{VERTEX_LIMIT_ENV}={limit} exceeds the supported maximum of {MASK_BITS}"
                )));
            }
            cfg.vertex_limit = limit;
        }
        Ok(cfg)
    }

    pub(crate) fn admit(&self, g: &Graph) -> Result<()> {
        let limit = self.vertex_limit.min(MASK_BITS);
        if g.vertex_count() > limit {
            return Err(Error::ResourceLimit {
                what: "solver vertex",
                found: g.vertex_count(),
                limit,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Search-tree nodes visited, summed over components and feasibility probes.
    pub nodes: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverResult<W> {
    pub value: usize,
    pub witness: W,
    pub stats: SearchStats,
}

/// Iterate over the set bits of a mask, lowest first.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

/// Connected components as induced subgraphs, each with its original ids.
pub(crate) fn component_subgraphs(g: &Graph) -> Result<Vec<(Graph, Vec<usize>)>> {
    connected_components(g)
        .into_iter()
        .map(|c| induced_subgraph(g, &c).map(|s| (s.graph, s.original)))
        .collect()
}

/// Every vertex has a neighbor in `s`. Fails on isolated vertices.
pub fn is_total_dominating(g: &Graph, s: &BTreeSet<usize>) -> Result<bool> {
    g.require_no_isolated()?;
    if let Some(&bad) = s.iter().find(|&&v| !g.has_vertex(v)) {
        return Err(Error::UnknownVertex(bad));
    }
    Ok(g.vertices()
        .all(|v| g.neighbors(v).iter().any(|w| s.contains(w))))
}

/// Every edge outside `d` shares an endpoint with an edge of `d`.
pub fn is_edge_dominating_set(g: &Graph, d: &[Edge]) -> Result<bool> {
    if let Some(e) = d.iter().find(|e| !g.contains_edge(e)) {
        return Err(Error::EdgeNotInGraph(*e));
    }
    Ok(g.edges()
        .iter()
        .filter(|f| !d.contains(f))
        .all(|f| d.iter().any(|e| e.shares_endpoint(f))))
}

/// Edge domination test for a matching; coincides with maximality.
pub fn edge_domination_check(g: &Graph, m: &Matching) -> Result<bool> {
    is_edge_dominating_set(g, &m.edge_vec())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OracleValues {
    pub gamma_t: usize,
    pub mu_star: usize,
}

impl OracleValues {
    pub fn is_extremal(&self) -> bool {
        self.gamma_t == 2 * self.mu_star
    }
}

/// `gamma_t` and `mu*`, each summed over connected components.
pub fn oracle_values(g: &Graph) -> Result<OracleValues> {
    oracle_values_with(g, &SolverConfig::default())
}

pub fn oracle_values_with(g: &Graph, cfg: &SolverConfig) -> Result<OracleValues> {
    let gamma_t = total_domination_number_with(g, cfg)?.value;
    let mu_star = minimum_maximal_matching_with(g, cfg)?.value;
    Ok(OracleValues { gamma_t, mu_star })
}

/// Brute-force decision of `gamma_t(G) = 2 mu*(G)`.
pub fn is_gamma_t_2mu_graph_oracle(g: &Graph) -> Result<bool> {
    Ok(oracle_values(g)?.is_extremal())
}

pub fn is_gamma_t_2mu_graph_oracle_with(g: &Graph, cfg: &SolverConfig) -> Result<bool> {
    Ok(oracle_values_with(g, cfg)?.is_extremal())
}
