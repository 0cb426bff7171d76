//! Matchings with partner lookup.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// A set of pairwise vertex-disjoint edges.
///
/// `partner(w)` is defined exactly on the covered vertices and is an
/// involution there.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Edge>", into = "Vec<Edge>")]
pub struct Matching {
    edges: BTreeSet<Edge>,
    partner: BTreeMap<usize, usize>,
}

impl Matching {
    /// Fails with [`Error::NotAMatching`] if two edges share an endpoint.
    pub fn new(edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let edges: BTreeSet<Edge> = edges.into_iter().collect();
        let mut partner = BTreeMap::new();
        let mut owner: BTreeMap<usize, Edge> = BTreeMap::new();
        for &e in &edges {
            for w in [e.u, e.v] {
                if let Some(&prev) = owner.get(&w) {
                    return Err(Error::NotAMatching(prev, e));
                }
                owner.insert(w, e);
            }
            partner.insert(e.u, e.v);
            partner.insert(e.v, e.u);
        }
        Ok(Matching { edges, partner })
    }

    /// Like [`Matching::new`], but also checks every edge exists in `g`.
    pub fn in_graph(g: &Graph, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let m = Self::new(edges)?;
        if let Some(e) = m.edges.iter().find(|e| !g.contains_edge(e)) {
            return Err(Error::EdgeNotInGraph(*e));
        }
        Ok(m)
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = &Edge> + '_ {
        self.edges.iter()
    }

    pub fn edge_vec(&self) -> Vec<Edge> {
        self.edges.iter().copied().collect()
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.edges.contains(e)
    }

    pub fn partner(&self, w: usize) -> Option<usize> {
        self.partner.get(&w).copied()
    }

    pub fn covers(&self, w: usize) -> bool {
        self.partner.contains_key(&w)
    }

    /// `V(M)`.
    pub fn vertices(&self) -> BTreeSet<usize> {
        self.partner.keys().copied().collect()
    }

    /// Partners of the covered members of `set`.
    pub fn partners_of<'a>(&self, set: impl IntoIterator<Item = &'a usize>) -> BTreeSet<usize> {
        set.into_iter().filter_map(|&v| self.partner(v)).collect()
    }

    /// First edge of `g` with no endpoint covered, if any.
    pub fn undominated_edge(&self, g: &Graph) -> Option<Edge> {
        g.edges()
            .into_iter()
            .find(|e| !self.covers(e.u) && !self.covers(e.v))
    }

    pub fn is_maximal_in(&self, g: &Graph) -> bool {
        self.undominated_edge(g).is_none()
    }
}

impl TryFrom<Vec<Edge>> for Matching {
    type Error = Error;

    fn try_from(edges: Vec<Edge>) -> Result<Self> {
        Self::new(edges)
    }
}

impl From<Matching> for Vec<Edge> {
    fn from(m: Matching) -> Self {
        m.edges.into_iter().collect()
    }
}

fn check_edges_in_graph(g: &Graph, m: &[Edge]) -> Result<()> {
    match m.iter().find(|e| !g.contains_edge(e)) {
        Some(e) => Err(Error::EdgeNotInGraph(*e)),
        None => Ok(()),
    }
}

/// Edges pairwise disjoint.
pub fn is_matching(g: &Graph, m: &[Edge]) -> Result<bool> {
    check_edges_in_graph(g, m)?;
    let mut seen = BTreeSet::new();
    Ok(m.iter()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .all(|e| seen.insert(e.u) && seen.insert(e.v)))
}

/// A matching that dominates every edge of `g`.
pub fn is_maximal_matching(g: &Graph, m: &[Edge]) -> Result<bool> {
    if !is_matching(g, m)? {
        return Ok(false);
    }
    let covered: BTreeSet<usize> = m.iter().flat_map(|e| [e.u, e.v]).collect();
    Ok(g.edges()
        .iter()
        .all(|e| covered.contains(&e.u) || covered.contains(&e.v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, path};

    #[test]
    fn partner_is_involution() {
        let m = Matching::new([Edge::new(0, 1), Edge::new(3, 2)]).unwrap();
        for w in m.vertices() {
            assert_eq!(m.partner(m.partner(w).unwrap()), Some(w));
        }
        assert_eq!(m.vertices().len(), 2 * m.len());
        assert_eq!(m.partner(4), None);
        assert_eq!(m.partners_of(&[0, 2, 4]), BTreeSet::from([1, 3]));
    }

    #[test]
    fn rejects_shared_endpoints() {
        assert!(matches!(
            Matching::new([Edge::new(0, 1), Edge::new(1, 2)]),
            Err(Error::NotAMatching(..))
        ));
        let c4 = cycle(4).unwrap();
        assert!(matches!(
            Matching::in_graph(&c4, [Edge::new(0, 2)]),
            Err(Error::EdgeNotInGraph(_))
        ));
    }

    #[test]
    fn c4_matchings() {
        let c4 = cycle(4).unwrap();
        let single = [Edge::new(0, 1)];
        assert!(is_matching(&c4, &single).unwrap());
        assert!(!is_maximal_matching(&c4, &single).unwrap());
        let perfect = [Edge::new(0, 1), Edge::new(2, 3)];
        assert!(is_maximal_matching(&c4, &perfect).unwrap());
        assert!(!is_matching(&c4, &[Edge::new(0, 1), Edge::new(1, 2)]).unwrap());
        assert!(is_matching(&c4, &[Edge::new(0, 2)]).is_err());
    }

    #[test]
    fn middle_edge_of_p4_is_maximal() {
        let p4 = path(4).unwrap();
        assert!(is_maximal_matching(&p4, &[Edge::new(1, 2)]).unwrap());
        let m = Matching::new([Edge::new(1, 2)]).unwrap();
        assert!(m.is_maximal_in(&p4));
    }
}
