//! Simple undirected graphs on dense vertex ids `0..n`.
//!
//! A [`Graph`] is immutable once built. Construction goes through
//! [`GraphBuilder`] (or the edge-list parser), which rejects self-loops and
//! silently collapses parallel edges.

mod edge_list;
mod structure;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use edge_list::{parse_edge_list, parse_edge_set, serialize_edge_list};
pub use structure::{
    connected_components, degree_two_vertices, girth, induced_subgraph, is_connected,
    is_cycle_of_length, k_family_parameter, min_degree, support_classification, Girth,
    InducedSubgraph, SupportClassification,
};

/// An undirected edge stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Canonical edge between `a` and `b`.
    ///
    /// Panics if `a == b`; use [`Edge::try_new`] for untrusted input.
    pub fn new(a: usize, b: usize) -> Self {
        Self::try_new(a, b).expect("self-loop edge")
    }

    pub fn try_new(a: usize, b: usize) -> Option<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Some(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn contains(&self, w: usize) -> bool {
        self.u == w || self.v == w
    }

    /// The endpoint opposite to `w`, if `w` is an endpoint.
    pub fn other(&self, w: usize) -> Option<usize> {
        if w == self.u {
            Some(self.v)
        } else if w == self.v {
            Some(self.u)
        } else {
            None
        }
    }

    pub fn shares_endpoint(&self, other: &Edge) -> bool {
        self.contains(other.u) || self.contains(other.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<BTreeSet<usize>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `n` unlabeled vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![BTreeSet::new(); n],
            labels: None,
        }
    }

    /// Unlabeled graph from an edge list over `0..n`.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut b = GraphBuilder::with_vertices(n);
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.vertex_count()
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_vertex(&self, v: usize) -> bool {
        v < self.vertex_count()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.has_vertex(u) && self.adjacency[u].contains(&v)
    }

    pub fn contains_edge(&self, e: &Edge) -> bool {
        self.has_edge(e.u, e.v)
    }

    /// All edges in canonical sorted order.
    pub fn edges(&self) -> Vec<Edge> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.range(u + 1..).map(move |&v| Edge { u, v }))
            .collect()
    }

    pub fn has_labels(&self) -> bool {
        self.labels.is_some()
    }

    /// Label of `v`, falling back to the decimal id.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(ls) => ls[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        match &self.labels {
            Some(ls) => ls.iter().position(|l| l == label),
            None => label.parse().ok().filter(|&v| self.has_vertex(v)),
        }
    }

    pub fn edge_label(&self, e: &Edge) -> String {
        format!("{} {}", self.label(e.u), self.label(e.v))
    }

    pub fn isolated_vertex(&self) -> Option<usize> {
        self.vertices().find(|&v| self.degree(v) == 0)
    }

    pub fn require_no_isolated(&self) -> Result<()> {
        match self.isolated_vertex() {
            Some(v) => Err(Error::IsolatedVertex(v)),
            None => Ok(()),
        }
    }

    /// Neighborhood of every vertex as a bitmask. Only valid for `n <= 64`.
    pub(crate) fn neighbor_masks(&self) -> Vec<u64> {
        debug_assert!(self.vertex_count() <= 64);
        self.adjacency
            .iter()
            .map(|ns| ns.iter().fold(0u64, |m, &w| m | (1 << w)))
            .collect()
    }

    /// Copy of this graph with the same edges and fresh labels.
    pub fn with_labels(&self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.vertex_count() {
            return Err(Error::InvalidParameter(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.vertex_count()
            )));
        }
        let mut b = GraphBuilder::new();
        for l in labels {
            b.add_labeled_vertex(l)?;
        }
        for e in self.edges() {
            b.add_edge(e.u, e.v)?;
        }
        Ok(b.build())
    }

    /// Relabel vertex ids: vertex `v` becomes `perm[v]`. Labels move with their vertex.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.vertex_count());
        let mut adjacency = vec![BTreeSet::new(); self.vertex_count()];
        for e in self.edges() {
            adjacency[perm[e.u]].insert(perm[e.v]);
            adjacency[perm[e.v]].insert(perm[e.u]);
        }
        let labels = self.labels.as_ref().map(|ls| {
            let mut out = vec![String::new(); ls.len()];
            for (v, l) in ls.iter().enumerate() {
                out[perm[v]] = l.clone();
            }
            out
        });
        Graph { adjacency, labels }
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Self {
        let shift = self.vertex_count();
        let mut adjacency = self.adjacency.clone();
        adjacency.extend(
            other
                .adjacency
                .iter()
                .map(|ns| ns.iter().map(|&w| w + shift).collect::<BTreeSet<_>>()),
        );
        let labels = if self.has_labels() || other.has_labels() {
            let mut ls: Vec<String> = self.vertices().map(|v| self.label(v)).collect();
            let mut taken: BTreeSet<String> = ls.iter().cloned().collect();
            for v in other.vertices() {
                let mut l = other.label(v);
                while taken.contains(&l) {
                    l.push('\'');
                }
                taken.insert(l.clone());
                ls.push(l);
            }
            Some(ls)
        } else {
            None
        };
        Graph { adjacency, labels }
    }
}

/// Incremental construction of a [`Graph`].
#[derive(Debug, Default, Clone)]
pub struct GraphBuilder {
    adjacency: Vec<BTreeSet<usize>>,
    labels: Vec<Option<String>>,
    by_label: HashMap<String, usize>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_vertices(n: usize) -> Self {
        GraphBuilder {
            adjacency: vec![BTreeSet::new(); n],
            labels: vec![None; n],
            by_label: HashMap::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adjacency.push(BTreeSet::new());
        self.labels.push(None);
        self.adjacency.len() - 1
    }

    /// Add a vertex with a fresh label. Fails if the label is taken or not a valid token.
    pub fn add_labeled_vertex(&mut self, label: impl Into<String>) -> Result<usize> {
        let label = label.into();
        validate_label(&label)?;
        if self.by_label.contains_key(&label) {
            return Err(Error::InvalidParameter(format!(
                "duplicate label `{label}`"
            )));
        }
        let v = self.add_vertex();
        self.by_label.insert(label.clone(), v);
        self.labels[v] = Some(label);
        Ok(v)
    }

    /// Vertex with this label, created on first use.
    pub fn vertex_for_label(&mut self, label: &str) -> Result<usize> {
        match self.by_label.get(label) {
            Some(&v) => Ok(v),
            None => self.add_labeled_vertex(label),
        }
    }

    /// Add `uv`. Returns `false` if the edge was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        let n = self.vertex_count();
        for w in [u, v] {
            if w >= n {
                return Err(Error::UnknownVertex(w));
            }
        }
        if u == v {
            return Err(Error::Precondition(format!("self-loop at vertex {u}")));
        }
        let fresh = self.adjacency[u].insert(v);
        self.adjacency[v].insert(u);
        Ok(fresh)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency.get(u).is_some_and(|ns| ns.contains(&v))
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adjacency[v]
    }

    pub fn build(self) -> Graph {
        let labels = if self.labels.iter().any(Option::is_some) {
            Some(
                self.labels
                    .into_iter()
                    .enumerate()
                    .map(|(v, l)| l.unwrap_or_else(|| v.to_string()))
                    .collect(),
            )
        } else {
            None
        };
        Graph {
            adjacency: self.adjacency,
            labels,
        }
    }
}

pub(crate) fn validate_label(label: &str) -> Result<()> {
    if label.is_empty()
        || label.contains(char::is_whitespace)
        || label.contains('#')
        || label.ends_with(':')
    {
        return Err(Error::InvalidParameter(format!(
            "label `{label}` must be a non-empty token without whitespace, '#' or a trailing ':'"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_is_canonical() {
        assert_eq!(Edge::new(5, 2), Edge { u: 2, v: 5 });
        assert!(Edge::try_new(3, 3).is_none());
        assert_eq!(Edge::new(1, 4).other(4), Some(1));
        assert_eq!(Edge::new(1, 4).other(2), None);
    }

    #[test]
    fn builder_collapses_duplicates_and_rejects_loops() {
        let mut b = GraphBuilder::with_vertices(3);
        assert!(b.add_edge(0, 1).unwrap());
        assert!(!b.add_edge(1, 0).unwrap());
        assert!(b.add_edge(2, 2).is_err());
        assert!(matches!(b.add_edge(0, 7), Err(Error::UnknownVertex(7))));
        let g = b.build();
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(1, 0));
        assert_eq!(g.isolated_vertex(), Some(2));
    }

    #[test]
    fn permutation_moves_labels() {
        let mut b = GraphBuilder::new();
        let a = b.add_labeled_vertex("a").unwrap();
        let c = b.add_labeled_vertex("c").unwrap();
        let d = b.add_labeled_vertex("d").unwrap();
        b.add_edge(a, c).unwrap();
        b.add_edge(c, d).unwrap();
        let g = b.build();
        let p = g.permuted(&[2, 0, 1]);
        assert_eq!(p.label(0), "c");
        assert!(p.has_edge(2, 0));
        assert!(p.has_edge(0, 1));
        assert_eq!(p.vertex_by_label("a"), Some(2));
    }

    #[test]
    fn disjoint_union_shifts_ids() {
        let a = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let b = Graph::from_edges(2, [(0, 1)]).unwrap();
        let u = a.disjoint_union(&b);
        assert_eq!(u.vertex_count(), 5);
        assert_eq!(u.edge_count(), 4);
        assert!(u.has_edge(3, 4));
    }
}
