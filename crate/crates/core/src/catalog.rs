//! All graphs of a given order up to isomorphism, by vertex extension and
//! canonical deduplication.
//!
//! Canonical forms come from colour refinement with individualization of the
//! first non-singleton cell, keeping the greatest adjacency code over all leaves.
//! No automorphism pruning is done, which is fine at catalog sizes.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{is_connected, Graph};

/// Largest order [`all_graphs`] and [`connected_graphs`] accept.
pub const CATALOG_MAX_ORDER: usize = 9;

/// Largest order [`canonical_code`] accepts (the code is an upper triangle in a `u128`).
pub const CANONICAL_MAX_ORDER: usize = 16;

type Code = u128;

fn refine(nbr: &[Vec<usize>], colors: &mut Vec<usize>) {
    let n = colors.len();
    let mut count = distinct(colors);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut s: Vec<usize> = nbr[v].iter().map(|&w| colors[w]).collect();
                s.sort_unstable();
                (colors[v], s)
            })
            .collect();
        let mut sorted: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
        sorted.sort();
        sorted.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| sorted.binary_search(&s).expect("present"))
            .collect();
        *colors = next;
        if sorted.len() == count {
            return;
        }
        count = sorted.len();
    }
}

fn distinct(colors: &[usize]) -> usize {
    colors.iter().collect::<HashSet<_>>().len()
}

fn code_of(nbr: &[Vec<usize>], position: &[usize]) -> Code {
    let n = position.len();
    let mut code: Code = 0;
    for (u, ns) in nbr.iter().enumerate() {
        for &w in ns {
            let (a, b) = (position[u].min(position[w]), position[u].max(position[w]));
            if a != b {
                // Row-major upper triangle, earlier rows in higher bits.
                let idx = a * n - a * (a + 1) / 2 + (b - a - 1);
                code |= 1 << (n * (n - 1) / 2 - 1 - idx);
            }
        }
    }
    code
}

fn search(nbr: &[Vec<usize>], colors: Vec<usize>, best: &mut Option<(Code, Vec<usize>)>) {
    let n = colors.len();
    let mut sizes = vec![0usize; n];
    for &c in &colors {
        sizes[c] += 1;
    }
    let Some(target) = (0..n).find(|&c| sizes[c] > 1) else {
        let code = code_of(nbr, &colors);
        if best.as_ref().is_none_or(|(b, _)| code > *b) {
            *best = Some((code, colors));
        }
        return;
    };
    for v in (0..n).filter(|&v| colors[v] == target) {
        let mut next: Vec<usize> = colors
            .iter()
            .enumerate()
            .map(|(w, &c)| 2 * c + usize::from(c == target && w != v))
            .collect();
        refine(nbr, &mut next);
        search(nbr, next, best);
    }
}

/// Canonical relabeling of `g`: `position[v]` is the new id of `v`.
/// Isomorphic graphs get identical codes.
pub fn canonical_labeling(g: &Graph) -> Result<(Code, Vec<usize>)> {
    let n = g.vertex_count();
    if n > CANONICAL_MAX_ORDER {
        return Err(Error::ResourceLimit {
            what: "canonical form vertex",
            found: n,
            limit: CANONICAL_MAX_ORDER,
        });
    }
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    let nbr: Vec<Vec<usize>> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    let mut colors = vec![0; n];
    refine(&nbr, &mut colors);
    let mut best = None;
    search(&nbr, colors, &mut best);
    Ok(best.expect("non-empty search"))
}

pub fn canonical_code(g: &Graph) -> Result<Code> {
    Ok(canonical_labeling(g)?.0)
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    Ok(a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && canonical_code(a)? == canonical_code(b)?)
}

/// `g` relabeled into canonical order.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let (_, position) = canonical_labeling(g)?;
    Ok(g.permuted(&position))
}

fn check_order(n: usize) -> Result<()> {
    if n > CATALOG_MAX_ORDER {
        return Err(Error::ResourceLimit {
            what: "catalog order",
            found: n,
            limit: CATALOG_MAX_ORDER,
        });
    }
    Ok(())
}

/// Every graph on `n` vertices, one per isomorphism class, in canonical form
/// and sorted by edge count then code.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    check_order(n)?;
    let mut layer = vec![Graph::empty(0)];
    for k in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &layer {
            for mask in 0u32..(1 << (k - 1)) {
                let edges = g.edges().into_iter().map(|e| (e.u, e.v)).chain(
                    (0..k - 1)
                        .filter(|i| mask >> i & 1 == 1)
                        .map(|i| (i, k - 1)),
                );
                let h = canonical_form(&Graph::from_edges(k, edges)?)?;
                if seen.insert(canonical_code(&h)?) {
                    next.push(h);
                }
            }
        }
        layer = next;
    }
    layer.sort_by_cached_key(|g| (g.edge_count(), canonical_code(g).unwrap_or(0)));
    Ok(layer)
}

/// Connected graphs on `n` vertices up to isomorphism.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(all_graphs(n)?.into_iter().filter(is_connected).collect())
}
