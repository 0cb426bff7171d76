use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use totdom::characterization::{check_theorem1_conditions, find_theorem1_matching};
use totdom::generators::{family_f_random, random_connected, random_connected_min_degree, FParams};
use totdom::graph::{girth, min_degree, parse_edge_list, serialize_edge_list};
use totdom::matching::is_maximal_matching;
use totdom::oracles::{
    check_proposition1, is_total_dominating, minimum_maximal_matching, oracle_values,
    total_domination_number,
};
use totdom::recognizer::{check_corollary2_conditions, recognize};
use totdom::Graph;

fn graph(seed: u64, n: usize, p: f64) -> Graph {
    random_connected(&mut ChaCha8Rng::seed_from_u64(seed), n, p).unwrap()
}

fn deg2_graph(seed: u64, n: usize, p: f64) -> Graph {
    random_connected_min_degree(&mut ChaCha8Rng::seed_from_u64(seed), n, p, 2).unwrap()
}

fn permutation(seed: u64, n: usize) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn witnesses_are_valid(seed in any::<u64>(), n in 2usize..=11, p in 0.0f64..0.6) {
        let g = graph(seed, n, p);
        let gt = total_domination_number(&g).unwrap();
        prop_assert_eq!(gt.witness.len(), gt.value);
        prop_assert!(is_total_dominating(&g, &gt.witness).unwrap());
        let mm = minimum_maximal_matching(&g).unwrap();
        prop_assert_eq!(mm.witness.len(), mm.value);
        prop_assert!(is_maximal_matching(&g, &mm.witness.edge_vec()).unwrap());
    }

    #[test]
    fn values_are_relabeling_invariant(seed in any::<u64>(), n in 2usize..=10, p in 0.0f64..0.6) {
        let g = graph(seed, n, p);
        let h = g.permuted(&permutation(seed ^ 0x9e37, n));
        prop_assert_eq!(oracle_values(&g).unwrap(), oracle_values(&h).unwrap());
    }

    #[test]
    fn degree_bound_holds(seed in any::<u64>(), n in 2usize..=11, p in 0.0f64..0.9) {
        let report = check_proposition1(&graph(seed, n, p)).unwrap();
        prop_assert!(report.holds, "{:?}", report);
    }

    #[test]
    fn recognizer_matches_oracle(seed in any::<u64>(), n in 3usize..=11, p in 0.0f64..0.3) {
        let g = deg2_graph(seed, n, p);
        prop_assume!(min_degree(&g).unwrap() == 2);
        let out = recognize(&g).unwrap();
        let vals = oracle_values(&g).unwrap();
        prop_assert_eq!(out.verdict, vals.is_extremal());
        if out.verdict {
            prop_assert!(girth(&g).is_at_most(6));
        }
        if let Some(m) = out.full_matching(&g) {
            prop_assert!(check_corollary2_conditions(&g, &m).unwrap().holds());
        }
        if let Some(m) = out.certifying_matching() {
            prop_assert!(check_corollary2_conditions(&g, &m).unwrap().holds());
            prop_assert_eq!(m.len(), vals.mu_star);
        }
    }

    #[test]
    fn matching_search_matches_oracle(seed in any::<u64>(), n in 2usize..=10, p in 0.0f64..0.4) {
        let g = graph(seed, n, p);
        prop_assume!(min_degree(&g).unwrap() <= 2);
        let found = find_theorem1_matching(&g).unwrap();
        let vals = oracle_values(&g).unwrap();
        prop_assert_eq!(found.is_some(), vals.is_extremal());
        if let Some(cert) = found {
            prop_assert_eq!(cert.matching.len(), vals.mu_star);
            prop_assert!(check_theorem1_conditions(&g, &cert.matching).unwrap().holds());
        }
    }

    #[test]
    fn family_members_are_extremal(seed in any::<u64>()) {
        let inst = family_f_random(seed, &FParams::default()).unwrap();
        prop_assert!(inst.graph.vertex_count() <= 16);
        prop_assert!(oracle_values(&inst.graph).unwrap().is_extremal());
        prop_assert!(check_theorem1_conditions(&inst.graph, &inst.matching).unwrap().holds());
    }

    #[test]
    fn unmarked_family_members_are_recognized(seed in any::<u64>()) {
        let inst = family_f_random(seed, &FParams::unmarked()).unwrap();
        prop_assert_eq!(min_degree(&inst.graph).unwrap(), 2);
        prop_assert!(recognize(&inst.graph).unwrap().verdict);
    }

    #[test]
    fn edge_list_round_trip(seed in any::<u64>(), n in 2usize..=12, p in 0.0f64..0.5) {
        let g = graph(seed, n, p);
        let text = serialize_edge_list(&g);
        let back = parse_edge_list(&text).unwrap();
        prop_assert_eq!(serialize_edge_list(&back), text);
        prop_assert_eq!(back.edge_count(), g.edge_count());
    }
}
