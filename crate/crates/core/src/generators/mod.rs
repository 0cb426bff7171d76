//! Constructors for the named graph families.
//!
//! Labeled families use readable vertex names; cycles, paths and the
//! Petersen graph use bare ids.

mod family_f;
mod random;

pub use family_f::{
    family_f_from_recipe, family_f_from_recipe_with, family_f_random, FInstance, FParams, FRecipe,
    DEFAULT_F_VERTEX_BUDGET,
};
pub use random::{random_connected, random_connected_min_degree};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, GraphBuilder};

/// Upper bound on `prop2_extremal` output size.
pub const PROP2_VERTEX_LIMIT: usize = 5_000;

fn at_least(name: &str, n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::InvalidParameter(format!(
            "{name} needs n >= {min}, got {n}"
        )));
    }
    Ok(())
}

/// `n` paths of length three sharing the end vertex `c`: legs `c-x_i-y_i-z_i`.
pub fn spider(n: usize) -> Result<Graph> {
    at_least("spider", n, 1)?;
    let mut b = GraphBuilder::new();
    let c = b.add_labeled_vertex("c")?;
    for i in 1..=n {
        let x = b.add_labeled_vertex(format!("x{i}"))?;
        let y = b.add_labeled_vertex(format!("y{i}"))?;
        let z = b.add_labeled_vertex(format!("z{i}"))?;
        b.add_edge(c, x)?;
        b.add_edge(x, y)?;
        b.add_edge(y, z)?;
    }
    Ok(b.build())
}

/// Two rows `u_1..u_{n+1}`, `v_1..v_{n+1}` joined by rungs `u_i v_i`; row
/// edges are subdivided by `a_i` (top) and `b_i` (bottom).
pub fn subdivided_grid(n: usize) -> Result<Graph> {
    at_least("subdivided_grid", n, 1)?;
    let mut b = GraphBuilder::new();
    let u: Vec<usize> = (1..=n + 1)
        .map(|i| b.add_labeled_vertex(format!("u{i}")))
        .collect::<Result<_>>()?;
    let v: Vec<usize> = (1..=n + 1)
        .map(|i| b.add_labeled_vertex(format!("v{i}")))
        .collect::<Result<_>>()?;
    for (row, name) in [(&u, "a"), (&v, "b")] {
        for i in 0..n {
            let s = b.add_labeled_vertex(format!("{name}{}", i + 1))?;
            b.add_edge(row[i], s)?;
            b.add_edge(s, row[i + 1])?;
        }
    }
    for i in 0..=n {
        b.add_edge(u[i], v[i])?;
    }
    Ok(b.build())
}

/// `n` triangles sharing the edge `uv`, with apexes `w_1..w_n`.
pub fn k_family(n: usize) -> Result<Graph> {
    at_least("k_family", n, 1)?;
    let mut b = GraphBuilder::new();
    let u = b.add_labeled_vertex("u")?;
    let v = b.add_labeled_vertex("v")?;
    b.add_edge(u, v)?;
    for i in 1..=n {
        let w = b.add_labeled_vertex(format!("w{i}"))?;
        b.add_edge(u, w)?;
        b.add_edge(v, w)?;
    }
    Ok(b.build())
}

/// Cycle `0-1-...-(n-1)-0`.
pub fn cycle(n: usize) -> Result<Graph> {
    at_least("cycle", n, 3)?;
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Path `0-1-...-(n-1)`.
pub fn path(n: usize) -> Result<Graph> {
    at_least("path", n, 2)?;
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("valid petersen edges")
}

/// Replace `e` by a path of length two through a new last vertex.
pub fn subdivide_edge(g: &Graph, e: Edge) -> Result<Graph> {
    if !g.contains_edge(&e) {
        return Err(Error::EdgeNotInGraph(e));
    }
    let mut b = GraphBuilder::new();
    for v in g.vertices() {
        if g.has_labels() {
            b.add_labeled_vertex(g.label(v))?;
        } else {
            b.add_vertex();
        }
    }
    let s = if g.has_labels() {
        let mut l = format!("s{}_{}", g.label(e.u), g.label(e.v));
        while g.vertex_by_label(&l).is_some() {
            l.push('\'');
        }
        b.add_labeled_vertex(l)?
    } else {
        b.add_vertex()
    };
    for f in g.edges() {
        if f != e {
            b.add_edge(f.u, f.v)?;
        }
    }
    b.add_edge(e.u, s)?;
    b.add_edge(s, e.v)?;
    Ok(b.build())
}

fn binomial(n: usize, k: usize) -> Option<usize> {
    let k = k.min(n.checked_sub(k)?);
    (0..k).try_fold(1usize, |acc, i| acc.checked_mul(n - i).map(|x| x / (i + 1)))
}

/// `n` base edges `u_i v_i` plus, for every `delta`-subset `A` of their
/// endpoints, a vertex adjacent exactly to `A`.
pub fn prop2_extremal(n: usize, delta: usize) -> Result<Graph> {
    if delta < 3 {
        return Err(Error::InvalidParameter(format!(
            "prop2 needs delta >= 3, got {delta}"
        )));
    }
    if 2 * n < delta + 1 {
        return Err(Error::InvalidParameter(format!(
            "prop2 needs n >= (delta+1)/2, got n={n}, delta={delta}"
        )));
    }
    let total = binomial(2 * n, delta)
        .and_then(|c| c.checked_add(2 * n))
        .unwrap_or(usize::MAX);
    if total > PROP2_VERTEX_LIMIT {
        return Err(Error::ResourceLimit {
            what: "prop2 vertex",
            found: total,
            limit: PROP2_VERTEX_LIMIT,
        });
    }
    let mut b = GraphBuilder::new();
    let mut base = Vec::with_capacity(2 * n);
    for i in 1..=n {
        let u = b.add_labeled_vertex(format!("u{i}"))?;
        let v = b.add_labeled_vertex(format!("v{i}"))?;
        b.add_edge(u, v)?;
        base.extend([u, v]);
    }
    let labels: Vec<String> = (1..=n)
        .flat_map(|i| [format!("u{i}"), format!("v{i}")])
        .collect();
    let mut subset: Vec<usize> = (0..delta).collect();
    loop {
        let name: Vec<&str> = subset.iter().map(|&i| labels[i].as_str()).collect();
        let s = b.add_labeled_vertex(format!("s{}", name.join(".")))?;
        for &i in &subset {
            b.add_edge(s, base[i])?;
        }
        // Next subset in lexicographic order.
        let Some(pos) = (0..delta).rev().find(|&i| subset[i] < 2 * n - delta + i) else {
            break;
        };
        subset[pos] += 1;
        for j in pos + 1..delta {
            subset[j] = subset[j - 1] + 1;
        }
    }
    Ok(b.build())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{girth, min_degree, Girth};

    fn counts(g: &Graph) -> (usize, usize) {
        (g.vertex_count(), g.edge_count())
    }

    #[test]
    fn small_family_sizes() {
        assert_eq!(counts(&spider(1).unwrap()), (4, 3));
        assert_eq!(counts(&spider(2).unwrap()), (7, 6));
        assert_eq!(counts(&subdivided_grid(1).unwrap()), (6, 6));
        assert_eq!(counts(&subdivided_grid(2).unwrap()), (10, 11));
        assert_eq!(counts(&k_family(3).unwrap()), (5, 7));
        assert_eq!(counts(&petersen()), (10, 15));
        assert_eq!(girth(&petersen()), Girth::Finite(5));
    }

    #[test]
    fn parameters_below_minimum() {
        assert!(spider(0).is_err());
        assert!(subdivided_grid(0).is_err());
        assert!(k_family(0).is_err());
        assert!(cycle(2).is_err());
        assert!(path(1).is_err());
        assert!(prop2_extremal(1, 3).is_err());
        assert!(prop2_extremal(3, 2).is_err());
        assert!(prop2_extremal(40, 20).unwrap_err().is_resource());
    }

    #[test]
    fn prop2_structure() {
        let g = prop2_extremal(2, 3).unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(min_degree(&g).unwrap(), 3);
        // Each base vertex lies in C(2n-1, delta-1) subsets, plus its partner.
        for i in 0..4 {
            assert_eq!(g.degree(i), 3 + 1);
        }
        let g = prop2_extremal(3, 3).unwrap();
        assert_eq!(g.vertex_count(), 26);
        assert_eq!(min_degree(&g).unwrap(), 3);
        assert_eq!(g.degree(0), 10 + 1);
    }

    #[test]
    fn subdivision() {
        let g = subdivide_edge(&petersen(), Edge::new(0, 1)).unwrap();
        assert_eq!(counts(&g), (11, 16));
        assert!(g.has_edge(0, 10) && g.has_edge(10, 1) && !g.has_edge(0, 1));
        assert!(subdivide_edge(&petersen(), Edge::new(0, 2)).is_err());
        let k = subdivide_edge(&k_family(1).unwrap(), Edge::new(0, 1)).unwrap();
        assert_eq!(k.label(3), "su_v");
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 3), Some(4));
        assert_eq!(binomial(6, 3), Some(20));
        assert_eq!(binomial(3, 4), None);
    }
}
