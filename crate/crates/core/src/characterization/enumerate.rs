use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationConfig {
    /// Maximal matchings visited before giving up with a resource error.
    pub max_matchings: usize,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        EnumerationConfig {
            max_matchings: 1_000_000,
        }
    }
}

/// Visit every maximal matching of `g` exactly once.
///
/// Order is a depth-first include/exclude walk over the sorted edge list,
/// including before excluding. Returns the number of matchings visited.
pub fn for_each_maximal_matching<F>(g: &Graph, cfg: &EnumerationConfig, visit: F) -> Result<usize>
where
    F: FnMut(&[Edge]) -> ControlFlow<()>,
{
    if g.vertex_count() > 64 {
        return Err(Error::ResourceLimit {
            what: "enumeration vertex",
            found: g.vertex_count(),
            limit: 64,
        });
    }
    let edges = g.edges();
    let mut last_edge = vec![None; g.vertex_count()];
    for (i, e) in edges.iter().enumerate() {
        last_edge[e.u] = Some(i);
        last_edge[e.v] = Some(i);
    }
    // Vertices whose final incident edge is edge i.
    let mut finishing = vec![Vec::new(); edges.len()];
    for (v, last) in last_edge.iter().enumerate() {
        if let Some(i) = last {
            finishing[*i].push(v);
        }
    }
    let mut walk = Walk {
        g,
        edges,
        last_edge,
        finishing,
        chosen: Vec::new(),
        visited: 0,
        limit: cfg.max_matchings,
        visit,
    };
    let _ = walk.step(0, 0)?;
    Ok(walk.visited)
}

/// All maximal matchings, in enumeration order.
pub fn maximal_matchings(g: &Graph, cfg: &EnumerationConfig) -> Result<Vec<Vec<Edge>>> {
    let mut out = Vec::new();
    for_each_maximal_matching(g, cfg, |m| {
        out.push(m.to_vec());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

struct Walk<'g, F> {
    g: &'g Graph,
    edges: Vec<Edge>,
    last_edge: Vec<Option<usize>>,
    finishing: Vec<Vec<usize>>,
    chosen: Vec<Edge>,
    visited: usize,
    limit: usize,
    visit: F,
}

impl<F> Walk<'_, F>
where
    F: FnMut(&[Edge]) -> ControlFlow<()>,
{
    /// `Ok(Break)` stops the whole walk.
    fn step(&mut self, i: usize, covered: u64) -> Result<ControlFlow<()>> {
        if i == self.edges.len() {
            debug_assert!(self
                .edges
                .iter()
                .all(|e| covered >> e.u & 1 == 1 || covered >> e.v & 1 == 1));
            self.visited += 1;
            if self.visited > self.limit {
                return Err(Error::ResourceLimit {
                    what: "maximal matching enumeration",
                    found: self.visited,
                    limit: self.limit,
                });
            }
            return Ok((self.visit)(&self.chosen));
        }
        let e = self.edges[i];
        let ends = (1u64 << e.u) | (1u64 << e.v);
        if covered & ends == 0 {
            self.chosen.push(e);
            let flow = self.advance(i, covered | ends);
            self.chosen.pop();
            if flow?.is_break() {
                return Ok(ControlFlow::Break(()));
            }
        }
        self.advance(i, covered)
    }

    /// Move past edge `i`, pruning when a vertex with no edges left is
    /// uncovered next to another such vertex.
    fn advance(&mut self, i: usize, covered: u64) -> Result<ControlFlow<()>> {
        for &v in &self.finishing[i] {
            if covered >> v & 1 == 1 {
                continue;
            }
            let stranded = self
                .g
                .neighbors(v)
                .iter()
                .any(|&w| covered >> w & 1 == 0 && self.last_edge[w].is_some_and(|l| l <= i));
            if stranded {
                return Ok(ControlFlow::Continue(()));
            }
        }
        self.step(i + 1, covered)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, path, spider};
    use crate::matching::is_maximal_matching;

    /// Independent count by filtering all edge subsets.
    fn brute_force(g: &Graph) -> Vec<Vec<Edge>> {
        let edges = g.edges();
        (0u32..(1 << edges.len()))
            .map(|mask| {
                (0..edges.len())
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| edges[i])
                    .collect::<Vec<_>>()
            })
            .filter(|m| is_maximal_matching(g, m).unwrap())
            .collect()
    }

    #[test]
    fn matches_subset_filter() {
        for g in [
            cycle(4).unwrap(),
            cycle(6).unwrap(),
            cycle(7).unwrap(),
            path(5).unwrap(),
            spider(3).unwrap(),
            Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 4)]).unwrap(),
        ] {
            let mut got = maximal_matchings(&g, &EnumerationConfig::default()).unwrap();
            let mut want = brute_force(&g);
            got.sort();
            want.sort();
            assert_eq!(got, want);
        }
    }

    #[test]
    fn c4_has_two_maximal_matchings() {
        let all = maximal_matchings(&cycle(4).unwrap(), &EnumerationConfig::default()).unwrap();
        assert_eq!(
            all,
            vec![
                vec![Edge::new(0, 1), Edge::new(2, 3)],
                vec![Edge::new(0, 3), Edge::new(1, 2)],
            ]
        );
    }

    #[test]
    fn budget_is_enforced() {
        let cfg = EnumerationConfig { max_matchings: 2 };
        let err = maximal_matchings(&cycle(7).unwrap(), &cfg).unwrap_err();
        assert!(err.is_resource());
    }

    #[test]
    fn break_stops_early() {
        let mut seen = 0;
        let n =
            for_each_maximal_matching(&cycle(7).unwrap(), &EnumerationConfig::default(), |_| {
                seen += 1;
                ControlFlow::Break(())
            })
            .unwrap();
        assert_eq!((seen, n), (1, 1));
    }
}
