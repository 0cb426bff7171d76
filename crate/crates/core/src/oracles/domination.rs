use std::collections::BTreeSet;
use std::time::Instant;

use super::{bits, component_subgraphs, SearchStats, SolverConfig, SolverResult};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Minimum total dominating set of `g`.
///
/// Sizes are tried in increasing order; each size is a depth-first search
/// that branches on how the most constrained undominated vertex gets its
/// dominator. The witness is the lexicographically least minimum set.
pub fn total_domination_number(g: &Graph) -> Result<SolverResult<BTreeSet<usize>>> {
    total_domination_number_with(g, &SolverConfig::default())
}

pub fn total_domination_number_with(
    g: &Graph,
    cfg: &SolverConfig,
) -> Result<SolverResult<BTreeSet<usize>>> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    g.require_no_isolated()?;
    cfg.admit(g)?;
    let start = Instant::now();
    let mut witness = BTreeSet::new();
    let mut nodes = 0;
    for (sub, original) in component_subgraphs(g)? {
        let mut search = TdsSearch::new(&sub);
        let mask = search.solve();
        nodes += search.nodes;
        witness.extend(bits(mask).map(|v| original[v]));
    }
    Ok(SolverResult {
        value: witness.len(),
        witness,
        stats: SearchStats {
            nodes,
            elapsed: start.elapsed(),
        },
    })
}

struct TdsSearch {
    nbr: Vec<u64>,
    all: u64,
    forbidden: u64,
    nodes: u64,
}

impl TdsSearch {
    fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        TdsSearch {
            nbr: g.neighbor_masks(),
            all: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
            forbidden: 0,
            nodes: 0,
        }
    }

    fn n(&self) -> usize {
        self.nbr.len()
    }

    fn solve(&mut self) -> u64 {
        let n = self.n() as u32;
        let k = (1..=n)
            .find(|&k| self.feasible(0, k))
            .expect("the full vertex set totally dominates a graph without isolated vertices");
        self.lex_least(k)
    }

    fn feasible(&mut self, forced: u64, budget: u32) -> bool {
        let dominated = bits(forced).fold(0, |d, v| d | self.nbr[v]);
        self.extend(forced, dominated, budget).is_some()
    }

    /// Pick members one slot at a time, smallest id first, keeping a
    /// completion of size `k` possible.
    fn lex_least(&mut self, k: u32) -> u64 {
        let mut chosen = 0u64;
        let mut next = 0;
        for _ in 0..k {
            let c = (next..self.n())
                .find(|&c| {
                    // Everything skipped so far stays out of the solution.
                    self.forbidden = ((1u64 << c) - 1) & !chosen;
                    self.feasible(chosen | (1 << c), k)
                })
                .expect("a size-k solution exists");
            chosen |= 1 << c;
            next = c + 1;
        }
        self.forbidden = 0;
        chosen
    }

    fn extend(&mut self, chosen: u64, dominated: u64, budget: u32) -> Option<u64> {
        self.nodes += 1;
        let undominated = self.all & !dominated;
        if undominated == 0 {
            return Some(chosen);
        }
        let size = chosen.count_ones();
        if size >= budget {
            return None;
        }
        let allowed = self.all & !chosen & !self.forbidden;
        let best_gain = bits(allowed)
            .map(|w| (self.nbr[w] & undominated).count_ones())
            .max()
            .unwrap_or(0);
        if best_gain == 0 || undominated.count_ones() > (budget - size) * best_gain {
            return None;
        }

        // Most constrained undominated vertex.
        let mut pick = 0u64;
        let mut fewest = u32::MAX;
        for v in bits(undominated) {
            let cands = self.nbr[v] & allowed;
            let c = cands.count_ones();
            if c == 0 {
                return None;
            }
            if c < fewest {
                fewest = c;
                pick = cands;
            }
        }

        let saved = self.forbidden;
        let mut found = None;
        for w in bits(pick) {
            if let Some(s) = self.extend(chosen | (1 << w), dominated | self.nbr[w], budget) {
                found = Some(s);
                break;
            }
            // Later siblings never use w: those sets were covered by this branch.
            self.forbidden |= 1 << w;
        }
        self.forbidden = saved;
        found
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, k_family, path, spider, subdivided_grid};
    use crate::oracles::is_total_dominating;

    /// Independent check: smallest total dominating subset by plain enumeration.
    fn brute_force(g: &Graph) -> (usize, BTreeSet<usize>) {
        let n = g.vertex_count();
        let mut best: Option<Vec<usize>> = None;
        for mask in 0u32..(1 << n) {
            let s: BTreeSet<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if !is_total_dominating(g, &s).unwrap() {
                continue;
            }
            let list: Vec<usize> = s.iter().copied().collect();
            best = match best {
                Some(b) if (b.len(), &b) <= (list.len(), &list) => Some(b),
                _ => Some(list),
            };
        }
        let b = best.unwrap();
        (b.len(), b.into_iter().collect())
    }

    #[test]
    fn small_family_values() {
        assert_eq!(
            total_domination_number(&spider(3).unwrap()).unwrap().value,
            6
        );
        assert_eq!(
            total_domination_number(&subdivided_grid(2).unwrap())
                .unwrap()
                .value,
            6
        );
        assert_eq!(total_domination_number(&path(2).unwrap()).unwrap().value, 2);
    }

    #[test]
    fn witness_is_lexicographically_least() {
        for g in [
            cycle(6).unwrap(),
            cycle(7).unwrap(),
            k_family(3).unwrap(),
            spider(2).unwrap(),
            subdivided_grid(2).unwrap(),
            path(5).unwrap(),
        ] {
            let r = total_domination_number(&g).unwrap();
            let (value, witness) = brute_force(&g);
            assert_eq!(r.value, value);
            assert_eq!(r.witness, witness);
            assert!(is_total_dominating(&g, &r.witness).unwrap());
        }
    }

    #[test]
    fn components_add_up() {
        let g = cycle(6).unwrap().disjoint_union(&path(3).unwrap());
        let r = total_domination_number(&g).unwrap();
        assert_eq!(r.value, 4 + 2);
        assert_eq!(r.witness, total_domination_number(&g).unwrap().witness);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            total_domination_number(&Graph::empty(3)),
            Err(Error::IsolatedVertex(0))
        ));
        assert_eq!(
            total_domination_number(&Graph::empty(0)),
            Err(Error::EmptyGraph)
        );
    }
}
