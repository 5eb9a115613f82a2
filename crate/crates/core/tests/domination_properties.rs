mod common;

use ccteam::domination::{
    connected_k_dominating_set, coverage_radius, greedy_connected_dominating_set, is_induced_connected,
    is_k_dominating, is_less_dispersive,
};
use ccteam::graph::all_pairs_distances;
use ccteam::{Network, VertexSet};
use common::{connected_graph, reference_coverage, reference_less_dispersive};
use proptest::prelude::*;

fn subset(n: usize, bits: u64) -> VertexSet {
    let set: VertexSet = (0..n).filter(|&v| bits >> (v % 64) & 1 == 1).collect();
    if set.is_empty() {
        VertexSet::singleton((bits as usize) % n)
    } else {
        set
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn k_domination_is_domination_in_power(g in connected_graph(2, 16), bits in any::<u64>(), k in 1u32..5) {
        let set = subset(g.n(), bits);
        let direct = is_k_dominating(&all_pairs_distances(&g), &set, k).unwrap();
        let viapower = is_k_dominating(&all_pairs_distances(&g.power(k).unwrap()), &set, 1).unwrap();
        prop_assert_eq!(direct, viapower);
    }

    #[test]
    fn less_dispersive_implies_connected(g in connected_graph(2, 14), bits in any::<u64>()) {
        let net = Network::new(g.clone());
        let set = subset(g.n(), bits);
        let ev = is_less_dispersive(&net, &set).unwrap();
        prop_assert_eq!(ev.is_less_dispersive(), reference_less_dispersive(&g, &set));
        prop_assert_eq!(ev.induced_connected, is_induced_connected(&g, &set));
        if ev.is_less_dispersive() {
            prop_assert!(ev.induced_connected);
        }
    }

    #[test]
    fn coverage_matches_reference_and_diameter(g in connected_graph(1, 16), bits in any::<u64>()) {
        let net = Network::new(g.clone());
        let set = subset(g.n(), bits);
        let r = coverage_radius(net.distances(), &set).unwrap().finite().unwrap();
        prop_assert_eq!(r, reference_coverage(&g, &set));
        prop_assert!(r <= net.diameter().unwrap());
    }

    #[test]
    fn k_dominating_set_is_connected_and_covers(g in connected_graph(2, 30), k in 1u32..6) {
        let net = Network::new(g.clone());
        let k = k.min(net.diameter().unwrap());
        let set = connected_k_dominating_set(&net, k).unwrap();
        prop_assert!(is_induced_connected(&g, &set));
        prop_assert!(is_k_dominating(net.distances(), &set, k).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn greedy_cds_is_valid(g in connected_graph(1, 40)) {
        let set = greedy_connected_dominating_set(&g).unwrap();
        prop_assert!(is_induced_connected(&g, &set));
        prop_assert!(is_k_dominating(&all_pairs_distances(&g), &set, 1).unwrap());
    }
}
