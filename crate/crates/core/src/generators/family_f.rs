//! The eight-step constructive family of extremal graphs.
//!
//! Vertex ids are laid out as `V(M)` first (`m0..`, with `m{2i}` matched to
//! `m{2i+1}`), then `A` (`a0..`), then closure witnesses (`w0..`), then
//! pendant leaves (`p0..`).

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt::Write as _;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{is_connected, support_classification, Edge, Graph, GraphBuilder};
use crate::matching::Matching;

/// Vertex budget used by [`family_f_from_recipe`].
pub const DEFAULT_F_VERTEX_BUDGET: usize = 64;

const MAX_SAMPLING_ATTEMPTS: usize = 10_000;

/// Parameters of one construction. Matched vertices are indexed `0..2*k2_count`
/// and `A` vertices `0..a_count`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct FRecipe {
    pub k2_count: usize,
    pub a_count: usize,
    pub marked: BTreeSet<usize>,
    /// Neighbors in `V(M)` of each `A` vertex.
    pub a_edges: Vec<Vec<usize>>,
    /// `(matched vertex, A index)` pairs joining leaves of `L` to `A`.
    pub l_leaf_edges: Vec<(usize, usize)>,
    /// Edges among matched vertices whose partner is marked.
    pub extra_vm_edges: Vec<(usize, usize)>,
    /// Leaves to hang on each marked vertex.
    pub pendant_counts: BTreeMap<usize, usize>,
}

fn partner(v: usize) -> usize {
    v ^ 1
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidRecipe(msg.into())
}

impl FRecipe {
    fn matched_count(&self) -> usize {
        2 * self.k2_count
    }

    /// Matched vertices whose partner is unmarked.
    pub fn l_set(&self) -> BTreeSet<usize> {
        (0..self.matched_count())
            .filter(|&v| !self.marked.contains(&partner(v)))
            .collect()
    }

    /// Structural checks that need no graph.
    pub fn validate(&self) -> Result<()> {
        let nv = self.matched_count();
        if self.k2_count == 0 {
            return Err(bad("k2_count must be positive"));
        }
        if let Some(v) = self.marked.iter().find(|&&v| v >= nv) {
            return Err(bad(format!("marked vertex {v} is not in V(M)")));
        }
        if self.a_edges.len() != self.a_count {
            return Err(bad(format!(
                "a_count is {} but {} a_edges lists were given",
                self.a_count,
                self.a_edges.len()
            )));
        }
        for (i, list) in self.a_edges.iter().enumerate() {
            let distinct: BTreeSet<usize> = list.iter().copied().collect();
            if distinct.len() < 2 || distinct.len() != list.len() {
                return Err(bad(format!(
                    "A vertex {i} needs at least two distinct neighbors in V(M)"
                )));
            }
            if let Some(v) = list.iter().find(|&&v| v >= nv) {
                return Err(bad(format!("A vertex {i} lists {v}, not in V(M)")));
            }
        }
        let l = self.l_set();
        for &(v, a) in &self.l_leaf_edges {
            if !l.contains(&v) {
                return Err(bad(format!("l_leaf_edge source {v} is not in L")));
            }
            if a >= self.a_count {
                return Err(bad(format!("l_leaf_edge target {a} is not in A")));
            }
        }
        for &(x, y) in &self.extra_vm_edges {
            if x >= nv || y >= nv || x == y {
                return Err(bad(format!("extra_vm_edge {x}-{y} is not inside V(M)")));
            }
            if l.contains(&x) || l.contains(&y) {
                return Err(bad(format!("extra_vm_edge {x}-{y} touches L")));
            }
            if partner(x) == y {
                return Err(bad(format!(
                    "extra_vm_edge {x}-{y} repeats a matching edge"
                )));
            }
        }
        if let Some(v) = self
            .pendant_counts
            .keys()
            .find(|v| !self.marked.contains(v))
        {
            return Err(bad(format!(
                "pendant leaves requested on unmarked vertex {v}"
            )));
        }
        Ok(())
    }

    /// Plain `key: values` text, one list item per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let join = |xs: &mut dyn Iterator<Item = usize>| {
            xs.map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
        };
        let _ = writeln!(out, "k2_count: {}", self.k2_count);
        let _ = writeln!(out, "a_count: {}", self.a_count);
        let _ = writeln!(out, "marked: {}", join(&mut self.marked.iter().copied()));
        for list in &self.a_edges {
            let _ = writeln!(out, "a_edges: {}", join(&mut list.iter().copied()));
        }
        for (v, a) in &self.l_leaf_edges {
            let _ = writeln!(out, "l_leaf_edge: {v} {a}");
        }
        for (x, y) in &self.extra_vm_edges {
            let _ = writeln!(out, "extra_vm_edge: {x} {y}");
        }
        for (v, c) in &self.pendant_counts {
            let _ = writeln!(out, "pendants: {v} {c}");
        }
        out
    }
}

impl FromStr for FRecipe {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut r = FRecipe::default();
        let mut a_count = None;
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, rest) = line
                .split_once(':')
                .ok_or_else(|| Error::format(line_no, "expected `key: values`"))?;
            let nums: Vec<usize> = rest
                .split_whitespace()
                .map(|t| {
                    t.parse()
                        .map_err(|_| Error::format(line_no, format!("`{t}` is not an integer")))
                })
                .collect::<Result<_>>()?;
            let want = |n: usize| {
                if nums.len() == n {
                    Ok(())
                } else {
                    Err(Error::format(line_no, format!("`{key}` takes {n} values")))
                }
            };
            match key.trim() {
                "k2_count" => {
                    want(1)?;
                    r.k2_count = nums[0];
                }
                "a_count" => {
                    want(1)?;
                    a_count = Some(nums[0]);
                }
                "marked" => r.marked.extend(nums),
                "a_edges" => r.a_edges.push(nums),
                "l_leaf_edge" => {
                    want(2)?;
                    r.l_leaf_edges.push((nums[0], nums[1]));
                }
                "extra_vm_edge" => {
                    want(2)?;
                    r.extra_vm_edges.push((nums[0], nums[1]));
                }
                "pendants" => {
                    want(2)?;
                    r.pendant_counts.insert(nums[0], nums[1]);
                }
                other => return Err(Error::format(line_no, format!("unknown key `{other}`"))),
            }
        }
        r.a_count = a_count.unwrap_or(r.a_edges.len());
        Ok(r)
    }
}

fn check_budget(b: &GraphBuilder, extra: usize, budget: usize) -> Result<()> {
    let found = b.vertex_count() + extra;
    if found > budget {
        return Err(Error::ResourceLimit {
            what: "family-F vertex",
            found,
            limit: budget,
        });
    }
    Ok(())
}

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Build the graph and its matching with the default vertex budget.
pub fn family_f_from_recipe(r: &FRecipe) -> Result<(Graph, Matching)> {
    family_f_from_recipe_with(r, DEFAULT_F_VERTEX_BUDGET)
}

pub fn family_f_from_recipe_with(r: &FRecipe, budget: usize) -> Result<(Graph, Matching)> {
    r.validate()?;
    let nv = r.matched_count();
    let mut b = GraphBuilder::new();
    check_budget(&b, nv + r.a_count, budget)?;

    for v in 0..nv {
        b.add_labeled_vertex(format!("m{v}"))?;
    }
    for v in (0..nv).step_by(2) {
        b.add_edge(v, v + 1)?;
    }
    let a_ids: Vec<usize> = (0..r.a_count)
        .map(|i| b.add_labeled_vertex(format!("a{i}")))
        .collect::<Result<_>>()?;
    for (i, list) in r.a_edges.iter().enumerate() {
        for &v in list {
            b.add_edge(a_ids[i], v)?;
        }
    }

    let l = r.l_set();
    let leaves: BTreeSet<usize> = l
        .iter()
        .copied()
        .filter(|&v| b.neighbors(v).len() == 1)
        .collect();
    for &(v, a) in &r.l_leaf_edges {
        if !leaves.contains(&v) {
            return Err(bad(format!(
                "l_leaf_edge source {v} is not a leaf of L after step 3"
            )));
        }
        b.add_edge(v, a_ids[a])?;
    }
    for &(x, y) in &r.extra_vm_edges {
        b.add_edge(x, y)?;
    }

    // Witness closure. Only vertices outside V(M) can have a neighborhood
    // that some demand asks for, and their neighborhoods no longer change.
    let mut present: HashSet<(usize, usize)> = a_ids
        .iter()
        .filter(|&&a| b.neighbors(a).len() == 2)
        .map(|&a| {
            let mut it = b.neighbors(a).iter();
            key(*it.next().unwrap(), *it.next().unwrap())
        })
        .collect();
    let l: Vec<usize> = l.into_iter().collect();
    let mut witnesses = 0;
    loop {
        let meets =
            |b: &GraphBuilder, x: usize, y: usize| !b.neighbors(x).is_disjoint(b.neighbors(y));
        let mut demands = BTreeSet::new();
        for (i, &u) in l.iter().enumerate() {
            for &v in &l[i + 1..] {
                let (pu, pv) = (partner(u), partner(v));
                if r.marked.contains(&u) || r.marked.contains(&v) {
                    if meets(&b, u, v) {
                        demands.insert(key(pu, pv));
                    }
                } else if meets(&b, u, v) || meets(&b, pu, pv) {
                    demands.insert(key(u, v));
                    demands.insert(key(pu, pv));
                }
            }
        }
        let missing: Vec<(usize, usize)> = demands
            .into_iter()
            .filter(|p| !present.contains(p))
            .collect();
        if missing.is_empty() {
            break;
        }
        check_budget(&b, missing.len(), budget)?;
        for (x, y) in missing {
            let w = b.add_labeled_vertex(format!("w{witnesses}"))?;
            witnesses += 1;
            b.add_edge(w, x)?;
            b.add_edge(w, y)?;
            present.insert((x, y));
        }
    }

    let mut pendants = 0;
    for &v in &r.marked {
        let count = r.pendant_counts.get(&v).copied().unwrap_or(0);
        let is_support = b.neighbors(v).iter().any(|&w| b.neighbors(w).len() == 1);
        if count == 0 && !is_support {
            return Err(bad(format!(
                "marked vertex {v} is not a support vertex and gets no pendant leaf"
            )));
        }
        check_budget(&b, count, budget)?;
        for _ in 0..count {
            let p = b.add_labeled_vertex(format!("p{pendants}"))?;
            pendants += 1;
            b.add_edge(v, p)?;
        }
    }

    let g = b.build();
    let sup = support_classification(&g).sup;
    if sup != r.marked {
        let show =
            |s: &BTreeSet<usize>| s.iter().map(|&v| g.label(v)).collect::<Vec<_>>().join(" ");
        return Err(bad(format!(
            "support vertices [{}] differ from the marked set [{}]",
            show(&sup),
            show(&r.marked)
        )));
    }
    let m = Matching::new((0..nv).step_by(2).map(|v| Edge::new(v, v + 1)))?;
    Ok((g, m))
}

/// Bounds for [`family_f_random`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FParams {
    /// The number of base edges is drawn from `1..=max_k2`.
    pub max_k2: usize,
    /// `|A|` is drawn from `0..=max_a`.
    pub max_a: usize,
    pub edge_probability: f64,
    /// Zero gives minimum degree two.
    pub mark_probability: f64,
    /// Leaves per marked vertex are drawn from `1..=max_pendants`.
    pub max_pendants: usize,
    /// Instances larger than this are redrawn.
    pub max_vertices: usize,
    pub require_connected: bool,
}

impl Default for FParams {
    fn default() -> Self {
        FParams {
            max_k2: 3,
            max_a: 3,
            edge_probability: 0.4,
            mark_probability: 0.3,
            max_pendants: 2,
            max_vertices: 16,
            require_connected: false,
        }
    }
}

impl FParams {
    pub fn unmarked() -> Self {
        FParams {
            mark_probability: 0.0,
            ..Self::default()
        }
    }

    fn validate(&self) -> Result<()> {
        let prob = |p: f64| (0.0..=1.0).contains(&p);
        if self.max_k2 == 0 || self.max_pendants == 0 || self.max_vertices < 2 {
            return Err(Error::InvalidParameter(
                "max_k2 and max_pendants must be positive and max_vertices at least 2".into(),
            ));
        }
        if !prob(self.edge_probability) || !prob(self.mark_probability) {
            return Err(Error::InvalidParameter(
                "probabilities must lie in [0, 1]".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct FInstance {
    pub recipe: FRecipe,
    pub graph: Graph,
    pub matching: Matching,
}

fn sample_recipe(rng: &mut ChaCha8Rng, p: &FParams) -> FRecipe {
    let k2 = rng.gen_range(1..=p.max_k2);
    let nv = 2 * k2;
    let a_count = rng.gen_range(0..=p.max_a);
    let marked: BTreeSet<usize> = (0..nv)
        .filter(|_| rng.gen_bool(p.mark_probability))
        .collect();

    let mut a_edges = Vec::with_capacity(a_count);
    for _ in 0..a_count {
        let mut list: Vec<usize> = (0..nv)
            .filter(|_| rng.gen_bool(p.edge_probability))
            .collect();
        while list.len() < 2 {
            let v = rng.gen_range(0..nv);
            if !list.contains(&v) {
                list.push(v);
            }
        }
        list.sort_unstable();
        a_edges.push(list);
    }

    let mut r = FRecipe {
        k2_count: k2,
        a_count,
        marked,
        a_edges,
        ..FRecipe::default()
    };
    let mut degree = vec![1usize; nv];
    for &v in r.a_edges.iter().flatten() {
        degree[v] += 1;
    }
    if a_count > 0 {
        for v in r.l_set() {
            if degree[v] != 1 {
                continue;
            }
            let mut targets: Vec<usize> = (0..a_count)
                .filter(|_| rng.gen_bool(p.edge_probability))
                .collect();
            if targets.is_empty() {
                targets.push(rng.gen_range(0..a_count));
            }
            r.l_leaf_edges.extend(targets.into_iter().map(|a| (v, a)));
        }
    }
    let l = r.l_set();
    let outside: Vec<usize> = (0..nv).filter(|v| !l.contains(v)).collect();
    for (i, &x) in outside.iter().enumerate() {
        for &y in &outside[i + 1..] {
            if partner(x) != y && rng.gen_bool(p.edge_probability) {
                r.extra_vm_edges.push((x, y));
            }
        }
    }
    for &v in &r.marked {
        r.pendant_counts
            .insert(v, rng.gen_range(1..=p.max_pendants));
    }
    r
}

/// Seeded random member of the family. Draws that violate a recipe rule,
/// exceed `max_vertices` or (when asked) are disconnected are redrawn from
/// the same stream, so the result depends only on `seed` and `params`.
pub fn family_f_random(seed: u64, params: &FParams) -> Result<FInstance> {
    params.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_SAMPLING_ATTEMPTS {
        let recipe = sample_recipe(&mut rng, params);
        match family_f_from_recipe_with(&recipe, params.max_vertices) {
            Ok((graph, matching)) => {
                if params.require_connected && !is_connected(&graph) {
                    continue;
                }
                return Ok(FInstance {
                    recipe,
                    graph,
                    matching,
                });
            }
            Err(Error::InvalidRecipe(_)) | Err(Error::ResourceLimit { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::ResourceLimit {
        what: "family-F sampling attempt",
        found: MAX_SAMPLING_ATTEMPTS,
        limit: MAX_SAMPLING_ATTEMPTS,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characterization::{check_theorem1_conditions, find_theorem1_matching};
    use crate::graph::{min_degree, serialize_edge_list};
    use crate::oracles::oracle_values;

    fn one_a_star() -> FRecipe {
        FRecipe {
            k2_count: 3,
            a_count: 1,
            a_edges: vec![vec![0, 2, 4]],
            ..FRecipe::default()
        }
    }

    fn nbhd_count(g: &Graph, a: usize, b: usize) -> usize {
        g.vertices()
            .filter(|&x| g.neighbors(x).iter().copied().eq([a.min(b), a.max(b)]))
            .count()
    }

    #[test]
    fn star_recipe_closes_and_is_extremal() {
        let (g, m) = family_f_from_recipe(&one_a_star()).unwrap();
        // Three pairs sharing a, each needing two witnesses.
        assert_eq!(g.vertex_count(), 6 + 1 + 6);
        assert_eq!(min_degree(&g).unwrap(), 2);
        let vals = oracle_values(&g).unwrap();
        assert_eq!((vals.gamma_t, vals.mu_star), (6, 3));
        assert!(check_theorem1_conditions(&g, &m).unwrap().holds());
    }

    #[test]
    fn both_marked_single_edge_gives_p4() {
        let r = FRecipe {
            k2_count: 1,
            marked: BTreeSet::from([0, 1]),
            pendant_counts: BTreeMap::from([(0, 1), (1, 1)]),
            ..FRecipe::default()
        };
        let (g, m) = family_f_from_recipe(&r).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 3));
        assert_eq!(g.degree(2) + g.degree(3), 2);
        assert!(check_theorem1_conditions(&g, &m).unwrap().holds());
    }

    fn mixed_recipe() -> FRecipe {
        // m0 marked with unmarked partner, m2 m3 both marked, m4..m7 unmarked.
        FRecipe {
            k2_count: 4,
            a_count: 3,
            marked: BTreeSet::from([0, 2, 3]),
            a_edges: vec![vec![0, 4], vec![4, 6, 1], vec![3, 7]],
            l_leaf_edges: vec![(5, 1)],
            extra_vm_edges: vec![(1, 2)],
            pendant_counts: BTreeMap::from([(0, 1), (2, 1), (3, 2)]),
        }
    }

    #[test]
    fn mixed_recipe_passes_condition_check() {
        let (g, m) = family_f_from_recipe(&mixed_recipe()).unwrap();
        assert!(g.vertex_count() <= 24);
        assert!(check_theorem1_conditions(&g, &m).unwrap().holds());
        assert!(find_theorem1_matching(&g).unwrap().is_some());
        assert!(oracle_values(&g).unwrap().is_extremal());
    }

    #[test]
    fn partner_pair_gets_one_witness() {
        let r = FRecipe {
            k2_count: 2,
            a_count: 1,
            a_edges: vec![vec![0, 2, 3]],
            ..FRecipe::default()
        };
        let (g, m) = family_f_from_recipe(&r).unwrap();
        assert_eq!(nbhd_count(&g, 2, 3), 1);
        // m0 and m1 never share a neighbor, so they need no witness.
        assert_eq!(nbhd_count(&g, 0, 1), 0);
        assert!(check_theorem1_conditions(&g, &m).unwrap().holds());
    }

    #[test]
    fn invalid_recipes() {
        let mut r = one_a_star();
        r.a_edges[0] = vec![0];
        assert!(matches!(
            family_f_from_recipe(&r),
            Err(Error::InvalidRecipe(_))
        ));

        let mut r = mixed_recipe();
        r.extra_vm_edges.push((4, 6));
        assert!(matches!(
            family_f_from_recipe(&r),
            Err(Error::InvalidRecipe(_))
        ));

        let mut r = mixed_recipe();
        r.pendant_counts.insert(4, 1);
        assert!(matches!(
            family_f_from_recipe(&r),
            Err(Error::InvalidRecipe(_))
        ));

        let mut r = mixed_recipe();
        r.pendant_counts.remove(&0);
        assert!(matches!(
            family_f_from_recipe(&r),
            Err(Error::InvalidRecipe(_))
        ));

        // A lone unmarked edge has leaves whose partners are unmarked supports.
        let lone = FRecipe {
            k2_count: 1,
            ..FRecipe::default()
        };
        assert!(matches!(
            family_f_from_recipe(&lone),
            Err(Error::InvalidRecipe(_))
        ));
    }

    #[test]
    fn budget_is_enforced() {
        let err = family_f_from_recipe_with(&one_a_star(), 10).unwrap_err();
        assert!(err.is_resource());
    }

    #[test]
    fn text_round_trip() {
        for r in [one_a_star(), mixed_recipe()] {
            let parsed: FRecipe = r.to_text().parse().unwrap();
            assert_eq!(parsed, r);
        }
        assert!("k2_count 3".parse::<FRecipe>().is_err());
        assert!("colour: 3".parse::<FRecipe>().is_err());
    }

    #[test]
    fn random_is_deterministic() {
        let p = FParams::default();
        let a = family_f_random(1, &p).unwrap();
        let b = family_f_random(1, &p).unwrap();
        assert_eq!(serialize_edge_list(&a.graph), serialize_edge_list(&b.graph));
        assert_eq!(a.recipe, b.recipe);
        assert!(a.graph.vertex_count() <= p.max_vertices);
    }

    #[test]
    fn unmarked_random_has_min_degree_two() {
        for seed in 0..20 {
            let inst = family_f_random(seed, &FParams::unmarked()).unwrap();
            assert_eq!(min_degree(&inst.graph).unwrap(), 2);
        }
    }

    #[test]
    fn bad_params() {
        let p = FParams {
            edge_probability: 1.5,
            ..FParams::default()
        };
        assert!(family_f_random(0, &p).is_err());
    }
}
