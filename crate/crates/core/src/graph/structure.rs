//! Structural queries: degrees, components, girth, support classes.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Graph, GraphBuilder};
use crate::error::{Error, Result};

/// Length of a shortest cycle, or `Infinite` for forests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn is_at_most(self, bound: usize) -> bool {
        matches!(self, Girth::Finite(g) if g <= bound)
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("infinite"),
        }
    }
}

/// Support vertices split by whether they touch another support vertex.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SupportClassification {
    pub sup: BTreeSet<usize>,
    pub s_plus: BTreeSet<usize>,
    pub s_minus: BTreeSet<usize>,
}

/// An induced subgraph together with the original id of each of its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub original: Vec<usize>,
}

pub fn min_degree(g: &Graph) -> Result<usize> {
    g.vertices()
        .map(|v| g.degree(v))
        .min()
        .ok_or(Error::EmptyGraph)
}

pub fn degree_two_vertices(g: &Graph) -> BTreeSet<usize> {
    g.vertices().filter(|&v| g.degree(v) == 2).collect()
}

pub fn support_classification(g: &Graph) -> SupportClassification {
    let sup: BTreeSet<usize> = g
        .vertices()
        .filter(|&v| g.neighbors(v).iter().any(|&w| g.degree(w) == 1))
        .collect();
    let (s_plus, s_minus) = sup
        .iter()
        .partition(|&&v| g.neighbors(v).iter().any(|w| sup.contains(w)));
    SupportClassification {
        sup,
        s_plus,
        s_minus,
    }
}

/// Components ordered by their smallest vertex.
pub fn connected_components(g: &Graph) -> Vec<BTreeSet<usize>> {
    let mut seen = vec![false; g.vertex_count()];
    let mut out = Vec::new();
    for s in g.vertices() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = BTreeSet::from([s]);
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    comp.insert(y);
                    queue.push_back(y);
                }
            }
        }
        out.push(comp);
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    connected_components(g).len() <= 1
}

/// Shortest cycle length via a BFS from every vertex, O(V·E).
pub fn girth(g: &Graph) -> Girth {
    let n = g.vertex_count();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for s in g.vertices() {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            // Nothing reachable from here can beat the current best.
            if 2 * dist[x] >= best {
                break;
            }
            for &y in g.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    best = best.min(dist[x] + dist[y] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

/// Subgraph induced by `s`; vertices keep their labels and are ordered by original id.
pub fn induced_subgraph(g: &Graph, s: &BTreeSet<usize>) -> Result<InducedSubgraph> {
    if let Some(&bad) = s.iter().find(|&&v| !g.has_vertex(v)) {
        return Err(Error::UnknownVertex(bad));
    }
    let original: Vec<usize> = s.iter().copied().collect();
    let mut local = vec![usize::MAX; g.vertex_count()];
    let mut b = GraphBuilder::new();
    for (i, &v) in original.iter().enumerate() {
        local[v] = i;
        b.add_labeled_vertex(g.label(v))?;
    }
    for (i, &v) in original.iter().enumerate() {
        for &w in g.neighbors(v).range(v + 1..) {
            if local[w] != usize::MAX {
                b.add_edge(i, local[w])?;
            }
        }
    }
    Ok(InducedSubgraph {
        graph: b.build(),
        original,
    })
}

/// True iff `g` is the cycle `C_n`.
pub fn is_cycle_of_length(g: &Graph, n: usize) -> bool {
    n >= 3 && g.vertex_count() == n && g.vertices().all(|v| g.degree(v) == 2) && is_connected(g)
}

/// The parameter `n` if `g` is `n` triangles sharing one common edge.
pub fn k_family_parameter(g: &Graph) -> Option<usize> {
    let total = g.vertex_count();
    if total < 3 || !is_connected(g) {
        return None;
    }
    let n = total - 2;
    let spine = g.edges().into_iter().find(|e| {
        g.degree(e.u) == n + 1
            && g.degree(e.v) == n + 1
            && g.vertices()
                .filter(|&w| !e.contains(w))
                .all(|w| g.degree(w) == 2 && g.has_edge(w, e.u) && g.has_edge(w, e.v))
    });
    spine.map(|_| n)
}
