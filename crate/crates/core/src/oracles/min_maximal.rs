use std::time::Instant;

use super::{component_subgraphs, SearchStats, SolverConfig, SolverResult};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::matching::Matching;

/// Minimum maximal matching of `g`.
///
/// Iterative deepening on the matching size. Each level branches on the most
/// constrained undominated edge `uv`: some chosen edge must touch `u` or `v`.
/// The witness is the lexicographically least minimum matching under the
/// sorted edge order.
pub fn minimum_maximal_matching(g: &Graph) -> Result<SolverResult<Matching>> {
    minimum_maximal_matching_with(g, &SolverConfig::default())
}

pub fn minimum_maximal_matching_with(
    g: &Graph,
    cfg: &SolverConfig,
) -> Result<SolverResult<Matching>> {
    if g.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    cfg.admit(g)?;
    let start = Instant::now();
    let mut edges = Vec::new();
    let mut nodes = 0;
    for (sub, original) in component_subgraphs(g)? {
        if sub.edge_count() == 0 {
            continue;
        }
        let mut search = MatchingSearch::new(&sub);
        for i in search.solve() {
            let e = search.edges[i];
            edges.push(Edge::new(original[e.u], original[e.v]));
        }
        nodes += search.nodes;
    }
    let witness = Matching::new(edges)?;
    Ok(SolverResult {
        value: witness.len(),
        witness,
        stats: SearchStats {
            nodes,
            elapsed: start.elapsed(),
        },
    })
}

struct MatchingSearch {
    edges: Vec<Edge>,
    ends: Vec<u64>,
    /// Edge ids incident to each vertex.
    incident: Vec<Vec<usize>>,
    forbidden: Vec<bool>,
    nodes: u64,
}

impl MatchingSearch {
    fn new(g: &Graph) -> Self {
        let edges = g.edges();
        let ends = edges
            .iter()
            .map(|e| (1u64 << e.u) | (1u64 << e.v))
            .collect();
        let mut incident = vec![Vec::new(); g.vertex_count()];
        for (i, e) in edges.iter().enumerate() {
            incident[e.u].push(i);
            incident[e.v].push(i);
        }
        MatchingSearch {
            forbidden: vec![false; edges.len()],
            edges,
            ends,
            incident,
            nodes: 0,
        }
    }

    fn solve(&mut self) -> Vec<usize> {
        let k = (1..=self.edges.len())
            .find(|&k| self.feasible(&[], k))
            .expect("a maximum matching is maximal");
        self.lex_least(k)
    }

    fn feasible(&mut self, forced: &[usize], budget: usize) -> bool {
        let covered = forced.iter().fold(0, |c, &i| c | self.ends[i]);
        let mut chosen = forced.to_vec();
        self.extend(&mut chosen, covered, budget)
    }

    fn lex_least(&mut self, k: usize) -> Vec<usize> {
        let mut chosen: Vec<usize> = Vec::with_capacity(k);
        let mut covered = 0u64;
        let mut next = 0;
        for _ in 0..k {
            let c = (next..self.edges.len())
                .find(|&c| {
                    if self.ends[c] & covered != 0 {
                        return false;
                    }
                    for (i, f) in self.forbidden.iter_mut().enumerate() {
                        *f = i < c && !chosen.contains(&i);
                    }
                    let mut probe = chosen.clone();
                    probe.push(c);
                    self.feasible(&probe, k)
                })
                .expect("a size-k solution exists");
            chosen.push(c);
            covered |= self.ends[c];
            next = c + 1;
        }
        self.forbidden.fill(false);
        chosen
    }

    fn extend(&mut self, chosen: &mut Vec<usize>, covered: u64, budget: usize) -> bool {
        self.nodes += 1;
        let free = |i: usize| self.ends[i] & covered == 0;
        let open: Vec<usize> = (0..self.edges.len()).filter(|&i| free(i)).collect();
        if open.is_empty() {
            return true;
        }
        if chosen.len() >= budget {
            return false;
        }

        // A greedy matching among open edges; each new edge dominates at most two of them.
        let mut greedy_cover = 0u64;
        let mut greedy: usize = 0;
        for &i in &open {
            if self.ends[i] & greedy_cover == 0 {
                greedy_cover |= self.ends[i];
                greedy += 1;
            }
        }
        if greedy.div_ceil(2) > budget - chosen.len() {
            return false;
        }

        let mut pick: Vec<usize> = Vec::new();
        let mut fewest = usize::MAX;
        for &i in &open {
            let e = self.edges[i];
            let mut cands: Vec<usize> = self.incident[e.u]
                .iter()
                .chain(&self.incident[e.v])
                .copied()
                .filter(|&j| !self.forbidden[j] && free(j))
                .collect();
            cands.sort_unstable();
            cands.dedup();
            if cands.is_empty() {
                return false;
            }
            if cands.len() < fewest {
                fewest = cands.len();
                pick = cands;
            }
        }

        let mut blocked = Vec::new();
        let mut found = false;
        for j in pick {
            chosen.push(j);
            if self.extend(chosen, covered | self.ends[j], budget) {
                found = true;
                break;
            }
            chosen.pop();
            self.forbidden[j] = true;
            blocked.push(j);
        }
        for j in blocked {
            self.forbidden[j] = false;
        }
        found
    }
}
