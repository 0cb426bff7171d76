//! Polynomial-time recognition of extremal graphs with minimum degree two.
//!
//! A connected graph with minimum degree two is extremal iff it is a book of
//! triangles, the 6-cycle, or the candidate matching built from induced
//! 6-cycles through pairs of degree-2 vertices is a maximal matching meeting
//! the two degree-2 conditions. Disconnected graphs are decided component by
//! component.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::characterization::{
    check_pair_witnesses, check_unique_partner, ConditionId, ConditionReport, ConditionSet,
};
use crate::error::{Error, Result};
use crate::graph::{
    connected_components, degree_two_vertices, girth, induced_subgraph, is_connected,
    is_cycle_of_length, k_family_parameter, min_degree, Edge, Graph,
};
use crate::matching::Matching;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "kebab-case")]
pub enum Refutation {
    /// The candidate edge set has two edges sharing an endpoint.
    MNotMatching { first: Edge, second: Edge },
    /// `edge` is not dominated by the candidate matching.
    MNotMaximal { edge: Edge, empty: bool },
    /// `u` is matched and adjacent to the matched vertex `v` that is not its partner.
    ConditionIViolated { u: usize, v: usize },
    /// `u` and `v` share a neighbor, but no vertex has neighborhood `{partner(u), partner(v)}`.
    ConditionIiViolated { u: usize, v: usize },
}

impl Refutation {
    pub fn describe(&self, g: &Graph) -> String {
        match self {
            Refutation::MNotMatching { first, second } => format!(
                "script-M is not a matching: {} and {} share an endpoint",
                g.edge_label(first),
                g.edge_label(second)
            ),
            Refutation::MNotMaximal { empty: true, .. } => "script-M empty, not maximal".into(),
            Refutation::MNotMaximal { edge, .. } => format!(
                "script-M not maximal: edge {} is not dominated",
                g.edge_label(edge)
            ),
            Refutation::ConditionIViolated { u, v } => format!(
                "condition (i) violated: {} has matched neighbor {} besides its partner",
                g.label(*u),
                g.label(*v)
            ),
            Refutation::ConditionIiViolated { u, v } => format!(
                "condition (ii) violated: {} and {} share a neighbor but no vertex has the partner pair as neighborhood",
                g.label(*u),
                g.label(*v)
            ),
        }
    }

    fn map_ids(&self, original: &[usize]) -> Self {
        let e = |e: &Edge| Edge::new(original[e.u], original[e.v]);
        match self {
            Refutation::MNotMatching { first, second } => Refutation::MNotMatching {
                first: e(first),
                second: e(second),
            },
            Refutation::MNotMaximal { edge, empty } => Refutation::MNotMaximal {
                edge: e(edge),
                empty: *empty,
            },
            Refutation::ConditionIViolated { u, v } => Refutation::ConditionIViolated {
                u: original[*u],
                v: original[*v],
            },
            Refutation::ConditionIiViolated { u, v } => Refutation::ConditionIiViolated {
                u: original[*u],
                v: original[*v],
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    /// `n` triangles sharing one edge.
    ExceptionalK {
        n: usize,
    },
    ExceptionalC6,
    CertifyingMatching {
        matching: Matching,
    },
    Refutation {
        refutation: Refutation,
    },
}

impl Certificate {
    pub fn describe(&self, g: &Graph) -> String {
        match self {
            Certificate::ExceptionalK { n } => format!("exceptional family K, n={n}"),
            Certificate::ExceptionalC6 => "exceptional cycle C6".into(),
            Certificate::CertifyingMatching { matching } => {
                let edges: Vec<String> = matching.edges().map(|e| g.edge_label(e)).collect();
                format!("certifying matching script-M = {{{}}}", edges.join(", "))
            }
            Certificate::Refutation { refutation } => refutation.describe(g),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentOutcome {
    /// Original ids of the component's vertices, ascending.
    pub vertices: Vec<usize>,
    pub verdict: bool,
    pub certificate: Certificate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecognitionOutcome {
    pub verdict: bool,
    pub components: Vec<ComponentOutcome>,
}

impl RecognitionOutcome {
    /// Certifying matchings of all components, merged.
    pub fn certifying_matching(&self) -> Option<Matching> {
        let edges: Vec<Edge> = self
            .components
            .iter()
            .filter_map(|c| match &c.certificate {
                Certificate::CertifyingMatching { matching } => Some(matching.edge_vec()),
                _ => None,
            })
            .flatten()
            .collect();
        if edges.is_empty() {
            None
        } else {
            Matching::new(edges).ok()
        }
    }

    /// On a yes verdict, a maximal matching of the whole graph meeting the
    /// degree-2 conditions. Exceptional components contribute the shared
    /// edge of the triangle book, or two opposite edges of the 6-cycle.
    pub fn full_matching(&self, g: &Graph) -> Option<Matching> {
        if !self.verdict {
            return None;
        }
        let mut edges = Vec::new();
        for c in &self.components {
            match &c.certificate {
                Certificate::CertifyingMatching { matching } => edges.extend(matching.edges()),
                Certificate::ExceptionalK { .. } => {
                    let mut by_degree = c.vertices.clone();
                    by_degree.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
                    edges.push(Edge::new(by_degree[0], by_degree[1]));
                }
                Certificate::ExceptionalC6 => {
                    let mut order = vec![c.vertices[0]];
                    while order.len() < 6 {
                        let last = *order.last().unwrap();
                        let next = g
                            .neighbors(last)
                            .iter()
                            .copied()
                            .find(|w| !order.contains(w))?;
                        order.push(next);
                    }
                    edges.push(Edge::new(order[0], order[1]));
                    edges.push(Edge::new(order[3], order[4]));
                }
                Certificate::Refutation { .. } => return None,
            }
        }
        Matching::new(edges).ok()
    }
}

fn require_min_degree_two(g: &Graph) -> Result<()> {
    let delta = min_degree(g)?;
    if delta != 2 {
        return Err(Error::MinDegree {
            found: delta,
            expected: "2",
        });
    }
    Ok(())
}

/// Middle edges of every induced 6-cycle `N(x) ∪ N(y) ∪ {x, y}` over pairs
/// of degree-2 vertices `x, y`.
pub fn build_script_m(g: &Graph) -> Result<BTreeSet<Edge>> {
    require_min_degree_two(g)?;
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    if k_family_parameter(g).is_some() || is_cycle_of_length(g, 6) {
        return Err(Error::Precondition(
            "script-M is undefined for triangle books and the 6-cycle".into(),
        ));
    }
    let d2: Vec<usize> = degree_two_vertices(g).into_iter().collect();
    let mut out = BTreeSet::new();
    for (i, &x) in d2.iter().enumerate() {
        for &y in &d2[i + 1..] {
            let mut s: BTreeSet<usize> = g.neighbors(x).union(g.neighbors(y)).copied().collect();
            s.insert(x);
            s.insert(y);
            if s.len() != 6 {
                continue;
            }
            let sub = induced_subgraph(g, &s)?;
            if !is_cycle_of_length(&sub.graph, 6) {
                continue;
            }
            for e in sub.graph.edges() {
                let (a, b) = (sub.original[e.u], sub.original[e.v]);
                if ![a, b].contains(&x) && ![a, b].contains(&y) {
                    out.insert(Edge::new(a, b));
                }
            }
        }
    }
    Ok(out)
}

/// Maximality plus the two degree-2 conditions for a matching.
pub fn check_corollary2_conditions(g: &Graph, m: &Matching) -> Result<ConditionReport> {
    require_min_degree_two(g)?;
    if let Some(e) = m.edges().find(|e| !g.contains_edge(e)) {
        return Err(Error::EdgeNotInGraph(*e));
    }
    let mut report = ConditionReport::new(
        ConditionSet::MinDegreeTwo,
        &[ConditionId::Maximal, ConditionId::I, ConditionId::II],
    );
    if let Some(e) = m.undominated_edge(g) {
        report.violate(
            ConditionId::Maximal,
            vec![e.u, e.v],
            vec![e],
            "edge is not dominated by the matching",
        );
    }
    let vm = m.vertices();
    check_unique_partner(g, m, &vm, ConditionId::I, &mut report);
    check_pair_witnesses(g, m, &vm, ConditionId::II, &mut report);
    Ok(report)
}

/// Decide a connected graph with minimum degree two.
pub fn recognize_component(g: &Graph) -> Result<ComponentOutcome> {
    require_min_degree_two(g)?;
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let vertices: Vec<usize> = g.vertices().collect();
    let yes = |certificate| ComponentOutcome {
        vertices: vertices.clone(),
        verdict: true,
        certificate,
    };
    if let Some(n) = k_family_parameter(g) {
        return Ok(yes(Certificate::ExceptionalK { n }));
    }
    if is_cycle_of_length(g, 6) {
        return Ok(yes(Certificate::ExceptionalC6));
    }

    let script_m = build_script_m(g)?;
    let no = |refutation| ComponentOutcome {
        vertices: vertices.clone(),
        verdict: false,
        certificate: Certificate::Refutation { refutation },
    };
    let m = match Matching::new(script_m.iter().copied()) {
        Ok(m) => m,
        Err(Error::NotAMatching(first, second)) => {
            return Ok(no(Refutation::MNotMatching { first, second }))
        }
        Err(e) => return Err(e),
    };
    let report = check_corollary2_conditions(g, &m)?;
    if let Some(v) = report.first_violation(ConditionId::Maximal) {
        return Ok(no(Refutation::MNotMaximal {
            edge: v.edges[0],
            empty: m.is_empty(),
        }));
    }
    if let Some(v) = report.first_violation(ConditionId::I) {
        return Ok(no(Refutation::ConditionIViolated {
            u: v.vertices[0],
            v: v.vertices[1],
        }));
    }
    if let Some(v) = report.first_violation(ConditionId::II) {
        return Ok(no(Refutation::ConditionIiViolated {
            u: v.vertices[0],
            v: v.vertices[1],
        }));
    }
    Ok(yes(Certificate::CertifyingMatching { matching: m }))
}

/// Decide a graph with minimum degree two, one component at a time.
pub fn recognize(g: &Graph) -> Result<RecognitionOutcome> {
    require_min_degree_two(g)?;
    let mut components = Vec::new();
    for comp in connected_components(g) {
        let sub = induced_subgraph(g, &comp)?;
        let local = recognize_component(&sub.graph)?;
        let certificate = match local.certificate {
            Certificate::CertifyingMatching { matching } => Certificate::CertifyingMatching {
                matching: Matching::new(
                    matching
                        .edges()
                        .map(|e| Edge::new(sub.original[e.u], sub.original[e.v])),
                )?,
            },
            Certificate::Refutation { refutation } => Certificate::Refutation {
                refutation: refutation.map_ids(&sub.original),
            },
            other => other,
        };
        components.push(ComponentOutcome {
            vertices: sub.original,
            verdict: local.verdict,
            certificate,
        });
    }
    Ok(RecognitionOutcome {
        verdict: components.iter().all(|c| c.verdict),
        components,
    })
}

/// Girth at most six, which every extremal graph of minimum degree two has.
pub fn girth_bound_check(g: &Graph) -> bool {
    girth(g).is_at_most(6)
}
