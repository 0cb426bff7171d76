use std::collections::BTreeSet;

use super::require_maximal;
use crate::error::{Error, Result};
use crate::graph::{min_degree, Graph};
use crate::matching::Matching;

/// Total dominating set of size at most `2|M| - delta + 2` built from a
/// maximal matching `M` of a graph with minimum degree `delta >= 3`.
///
/// With an unmatched vertex `x` (least id) and `A` the `delta - 1` least
/// neighbors of `x`, the set is `(V(M) \ partners(A)) ∪ {x}`. When `M` is
/// perfect, the `delta - 1` greatest vertices are dropped instead.
pub fn tds_from_matching_high_degree(g: &Graph, m: &Matching) -> Result<BTreeSet<usize>> {
    let delta = min_degree(g)?;
    if delta < 3 {
        return Err(Error::MinDegree {
            found: delta,
            expected: ">=3",
        });
    }
    require_maximal(g, m)?;
    let covered = m.vertices();
    match g.vertices().find(|v| !covered.contains(v)) {
        Some(x) => {
            // Maximality puts every neighbor of x inside V(M).
            let a: Vec<usize> = g.neighbors(x).iter().copied().take(delta - 1).collect();
            let dropped = m.partners_of(&a);
            let mut s: BTreeSet<usize> = covered.difference(&dropped).copied().collect();
            s.insert(x);
            Ok(s)
        }
        None => Ok(g.vertices().rev().skip(delta - 1).collect()),
    }
}
