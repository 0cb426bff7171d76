//! Matching-based characterization of graphs with `gamma_t = 2 mu*` for
//! minimum degree one or two.
//!
//! A maximal matching `M` is split by the support status of its endpoints into
//! `M+` (both endpoints are support vertices), `M-` (exactly one) and `M*`
//! (none). The graph is extremal exactly when some maximal matching satisfies
//! four conditions:
//!
//! 1. `M+` perfectly matches the subgraph induced by `S+`.
//! 2. `S-` is covered by `M-`, and every `M-` edge joins `S-` to a non-support vertex.
//! 3. Every `v` in `S- ∪ V(M*)` has its partner as its only neighbor inside `V(M)`.
//! 4. Any two distinct `u, v` in `S- ∪ V(M*)` with a common neighbor admit a
//!    vertex whose neighborhood is exactly `{partner(u), partner(v)}`.
//!
//! The same search doubles as a membership test for the constructive family
//! built in [`crate::generators::family_f_from_recipe`].

mod enumerate;
mod high_degree;

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::ops::ControlFlow;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{min_degree, support_classification, Edge, Graph, SupportClassification};
use crate::matching::Matching;

pub use enumerate::{for_each_maximal_matching, maximal_matchings, EnumerationConfig};
pub use high_degree::tds_from_matching_high_degree;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct MatchingPartition {
    pub m_plus: BTreeSet<Edge>,
    pub m_minus: BTreeSet<Edge>,
    pub m_star: BTreeSet<Edge>,
}

impl MatchingPartition {
    pub fn vertices_of(edges: &BTreeSet<Edge>) -> BTreeSet<usize> {
        edges.iter().flat_map(|e| [e.u, e.v]).collect()
    }
}

/// Which family of conditions a report was produced against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConditionSet {
    /// Conditions (i)–(iv) for minimum degree one or two.
    Theorem1,
    /// The two conditions for minimum degree two, plus maximality.
    MinDegreeTwo,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ConditionId {
    Maximal,
    I,
    II,
    III,
    IV,
}

impl fmt::Display for ConditionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConditionId::Maximal => "maximal",
            ConditionId::I => "(i)",
            ConditionId::II => "(ii)",
            ConditionId::III => "(iii)",
            ConditionId::IV => "(iv)",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub condition: ConditionId,
    pub vertices: Vec<usize>,
    pub edges: Vec<Edge>,
    pub explanation: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub set: ConditionSet,
    pub verdicts: BTreeMap<ConditionId, bool>,
    pub violations: Vec<Violation>,
}

impl ConditionReport {
    pub(crate) fn new(set: ConditionSet, ids: &[ConditionId]) -> Self {
        ConditionReport {
            set,
            verdicts: ids.iter().map(|&c| (c, true)).collect(),
            violations: Vec::new(),
        }
    }

    pub(crate) fn violate(
        &mut self,
        condition: ConditionId,
        vertices: Vec<usize>,
        edges: Vec<Edge>,
        explanation: impl Into<String>,
    ) {
        self.verdicts.insert(condition, false);
        self.violations.push(Violation {
            condition,
            vertices,
            edges,
            explanation: explanation.into(),
        });
    }

    pub fn holds(&self) -> bool {
        self.verdicts.values().all(|&v| v)
    }

    pub fn verdict(&self, c: ConditionId) -> Option<bool> {
        self.verdicts.get(&c).copied()
    }

    pub fn first_violation(&self, c: ConditionId) -> Option<&Violation> {
        self.violations.iter().find(|v| v.condition == c)
    }
}

/// Split a maximal matching by how many endpoints are support vertices.
pub fn partition_matching(g: &Graph, m: &Matching) -> Result<MatchingPartition> {
    partition_with(m, &support_classification(g), g)
}

fn partition_with(
    m: &Matching,
    sc: &SupportClassification,
    g: &Graph,
) -> Result<MatchingPartition> {
    require_maximal(g, m)?;
    let mut p = MatchingPartition::default();
    for &e in m.edges() {
        let (a, b) = (sc.sup.contains(&e.u), sc.sup.contains(&e.v));
        match (a, b) {
            (true, true) => {
                if sc.s_minus.contains(&e.u) || sc.s_minus.contains(&e.v) {
                    return Err(Error::Classification(e));
                }
                p.m_plus.insert(e);
            }
            (false, false) => {
                p.m_star.insert(e);
            }
            _ => {
                p.m_minus.insert(e);
            }
        }
    }
    Ok(p)
}

pub(crate) fn require_maximal(g: &Graph, m: &Matching) -> Result<()> {
    if let Some(e) = m.edges().find(|e| !g.contains_edge(e)) {
        return Err(Error::EdgeNotInGraph(*e));
    }
    match m.undominated_edge(g) {
        Some(e) => Err(Error::NotMaximal(e)),
        None => Ok(()),
    }
}

/// Unordered vertex pairs `{a, b}` that are the exact neighborhood of some vertex.
pub(crate) fn neighborhood_pairs(g: &Graph) -> HashSet<(usize, usize)> {
    g.vertices()
        .filter(|&x| g.degree(x) == 2)
        .map(|x| {
            let mut it = g.neighbors(x).iter();
            let a = *it.next().unwrap();
            let b = *it.next().unwrap();
            (a, b)
        })
        .collect()
}

/// Every `v` in `targets` has its partner as its only neighbor inside `V(M)`.
pub(crate) fn check_unique_partner(
    g: &Graph,
    m: &Matching,
    targets: &BTreeSet<usize>,
    id: ConditionId,
    report: &mut ConditionReport,
) {
    for &v in targets {
        let Some(p) = m.partner(v) else {
            report.violate(id, vec![v], vec![], "vertex is not covered by the matching");
            continue;
        };
        let extra: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| w != p && m.covers(w))
            .collect();
        if !extra.is_empty() {
            let mut vertices = vec![v];
            vertices.extend(extra);
            report.violate(
                id,
                vertices,
                vec![Edge::new(v, p)],
                "vertex has a matched neighbor other than its partner",
            );
        }
    }
}

/// Distinct `u, v` in `targets` sharing a neighbor need a vertex whose
/// neighborhood is exactly `{partner(u), partner(v)}`.
pub(crate) fn check_pair_witnesses(
    g: &Graph,
    m: &Matching,
    targets: &BTreeSet<usize>,
    id: ConditionId,
    report: &mut ConditionReport,
) {
    let pairs = neighborhood_pairs(g);
    let covered: Vec<usize> = targets.iter().copied().filter(|&v| m.covers(v)).collect();
    for (i, &u) in covered.iter().enumerate() {
        for &v in &covered[i + 1..] {
            if g.neighbors(u).is_disjoint(g.neighbors(v)) {
                continue;
            }
            let (pu, pv) = (m.partner(u).unwrap(), m.partner(v).unwrap());
            let key = (pu.min(pv), pu.max(pv));
            if !pairs.contains(&key) {
                report.violate(
                    id,
                    vec![u, v, pu, pv],
                    vec![],
                    "common neighbor but no vertex with neighborhood {partner(u), partner(v)}",
                );
            }
        }
    }
}

/// Check conditions (i)–(iv) for a maximal matching of a graph with minimum
/// degree one or two.
pub fn check_theorem1_conditions(g: &Graph, m: &Matching) -> Result<ConditionReport> {
    let delta = min_degree(g)?;
    if !(1..=2).contains(&delta) {
        return Err(Error::MinDegree {
            found: delta,
            expected: "1..=2",
        });
    }
    let sc = support_classification(g);
    let p = partition_with(m, &sc, g)?;
    Ok(conditions_for_partition(g, m, &sc, &p))
}

fn conditions_for_partition(
    g: &Graph,
    m: &Matching,
    sc: &SupportClassification,
    p: &MatchingPartition,
) -> ConditionReport {
    use ConditionId::*;
    let mut report = ConditionReport::new(ConditionSet::Theorem1, &[I, II, III, IV]);

    let plus_vertices = MatchingPartition::vertices_of(&p.m_plus);
    for &v in &sc.s_plus {
        if !plus_vertices.contains(&v) {
            report.violate(I, vec![v], vec![], "S+ vertex not covered by M+");
        }
    }

    let minus_vertices = MatchingPartition::vertices_of(&p.m_minus);
    for &v in &sc.s_minus {
        if !minus_vertices.contains(&v) {
            report.violate(II, vec![v], vec![], "S- vertex not covered by M-");
        }
    }
    for &e in &p.m_minus {
        let joins = (sc.s_minus.contains(&e.u) && !sc.sup.contains(&e.v))
            || (sc.s_minus.contains(&e.v) && !sc.sup.contains(&e.u));
        if !joins {
            let sup_end = if sc.sup.contains(&e.u) { e.u } else { e.v };
            report.violate(
                II,
                vec![sup_end],
                vec![e],
                "M- edge does not join S- to a non-support vertex",
            );
        }
    }

    let mut targets: BTreeSet<usize> = sc.s_minus.clone();
    targets.extend(MatchingPartition::vertices_of(&p.m_star));
    check_unique_partner(g, m, &targets, III, &mut report);
    check_pair_witnesses(g, m, &targets, IV, &mut report);
    report
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem1Certificate {
    pub matching: Matching,
    pub partition: MatchingPartition,
    pub report: ConditionReport,
}

/// First maximal matching (in enumeration order) that satisfies (i)–(iv).
pub fn find_theorem1_matching(g: &Graph) -> Result<Option<Theorem1Certificate>> {
    find_theorem1_matching_with(g, &EnumerationConfig::default())
}

pub fn find_theorem1_matching_with(
    g: &Graph,
    cfg: &EnumerationConfig,
) -> Result<Option<Theorem1Certificate>> {
    let delta = min_degree(g)?;
    if !(1..=2).contains(&delta) {
        return Err(Error::MinDegree {
            found: delta,
            expected: "1..=2",
        });
    }
    let sc = support_classification(g);
    let mut found = None;
    for_each_maximal_matching(g, cfg, |edges| {
        let m = Matching::new(edges.iter().copied()).expect("enumerator yields matchings");
        let Ok(partition) = partition_with(&m, &sc, g) else {
            return ControlFlow::Continue(());
        };
        let report = conditions_for_partition(g, &m, &sc, &partition);
        if report.holds() {
            found = Some(Theorem1Certificate {
                matching: m,
                partition,
                report,
            });
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(found)
}
