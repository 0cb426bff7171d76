use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

/// Random connected graph: a random recursive tree plus every other pair
/// independently with probability `p`.
pub fn random_connected<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "random_connected needs n >= 2, got {n}"
        )));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "probability {p} outside [0, 1]"
        )));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut b = GraphBuilder::with_vertices(n);
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        b.add_edge(order[i], parent)?;
    }
    for u in 0..n {
        for v in u + 1..n {
            if !b.has_edge(u, v) && rng.gen_bool(p) {
                b.add_edge(u, v)?;
            }
        }
    }
    Ok(b.build())
}

/// As [`random_connected`], then low-degree vertices gain random edges
/// until every degree is at least `min_degree`.
pub fn random_connected_min_degree<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    p: f64,
    min_degree: usize,
) -> Result<Graph> {
    if min_degree >= n {
        return Err(Error::InvalidParameter(format!(
            "minimum degree {min_degree} impossible on {n} vertices"
        )));
    }
    let g = random_connected(rng, n, p)?;
    let mut b = GraphBuilder::with_vertices(n);
    for e in g.edges() {
        b.add_edge(e.u, e.v)?;
    }
    for v in 0..n {
        while b.neighbors(v).len() < min_degree {
            let candidates: Vec<usize> = (0..n).filter(|&w| w != v && !b.has_edge(v, w)).collect();
            let w = *candidates
                .choose(rng)
                .expect("min_degree < n leaves a candidate");
            b.add_edge(v, w)?;
        }
    }
    Ok(b.build())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_connected, min_degree};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn connected_and_deterministic() {
        for seed in 0..30 {
            let g = random_connected(&mut ChaCha8Rng::seed_from_u64(seed), 9, 0.2).unwrap();
            let h = random_connected(&mut ChaCha8Rng::seed_from_u64(seed), 9, 0.2).unwrap();
            assert!(is_connected(&g));
            assert_eq!(g, h);
        }
    }

    #[test]
    fn degree_floor() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 3..12 {
            let g = random_connected_min_degree(&mut rng, n, 0.1, 2).unwrap();
            assert!(is_connected(&g));
            assert!(min_degree(&g).unwrap() >= 2);
        }
        assert!(random_connected_min_degree(&mut rng, 3, 0.1, 3).is_err());
        assert!(random_connected(&mut rng, 1, 0.1).is_err());
    }
}
