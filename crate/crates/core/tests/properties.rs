mod common;

use bicomp::connectivity::{
    brute_force_edge_connectivity, brute_force_vertex_connectivity, edge_connectivity, is_connected,
    vertex_connectivity,
};
use bicomp::{io, BipartiteGraph, Vertex};
use common::{graph, graph_n2};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn complement_is_an_involution(g in graph(9)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn complement_conserves_edges(g in graph(9)) {
        let h = g.complement();
        prop_assert_eq!(g.edge_count() + h.edge_count(), g.left_size() * g.right_size());
        for (i, j) in g.edges() {
            prop_assert!(!h.has_edge(i, j));
        }
    }

    #[test]
    fn degrees_are_complementary(g in graph(9)) {
        let h = g.complement();
        for i in 1..=g.left_size() {
            prop_assert_eq!(g.degree(Vertex::X(i)) + h.degree(Vertex::X(i)), g.right_size());
        }
        for j in 1..=g.right_size() {
            prop_assert_eq!(g.degree(Vertex::Y(j)) + h.degree(Vertex::Y(j)), g.left_size());
        }
    }

    #[test]
    fn edge_list_round_trip(g in graph(9)) {
        let text = io::to_edge_list(&g);
        prop_assert_eq!(&io::from_edge_list(&text).unwrap(), &g);
        prop_assert_eq!(io::to_edge_list(&io::from_edge_list(&text).unwrap()), text);
    }

    #[test]
    fn json_round_trip(g in graph(9)) {
        prop_assert_eq!(io::from_json(&io::to_json(&g)).unwrap(), g);
    }

    #[test]
    fn whitney_chain(g in graph_n2(7)) {
        let k = vertex_connectivity(&g).unwrap().value;
        let l = edge_connectivity(&g).unwrap().value;
        prop_assert!(k <= l && l <= g.min_degree(), "kappa {} kappa' {} delta {}", k, l, g.min_degree());
    }

    #[test]
    fn deleting_an_edge_costs_at_most_one(g in graph_n2(6), pick in any::<prop::sample::Index>()) {
        prop_assume!(g.edge_count() > 0);
        let edges = g.edge_list();
        let (i, j) = edges[pick.index(edges.len())];
        let h = g.without_edge(i, j).unwrap();
        let (before, after) = (edge_connectivity(&g).unwrap().value, edge_connectivity(&h).unwrap().value);
        prop_assert!(after <= before && before <= after + 1);
    }

    #[test]
    fn max_flow_matches_brute_force(g in graph_n2(6)) {
        prop_assert_eq!(edge_connectivity(&g).unwrap().value, brute_force_edge_connectivity(&g).unwrap());
        prop_assert_eq!(vertex_connectivity(&g).unwrap().value, brute_force_vertex_connectivity(&g).unwrap());
    }

    #[test]
    fn certificates_validate(g in graph_n2(8)) {
        let e = edge_connectivity(&g).unwrap();
        let v = vertex_connectivity(&g).unwrap();
        prop_assert!(e.validates(&g), "{:?}", e);
        prop_assert!(v.validates(&g), "{:?}", v);
    }

    #[test]
    fn disconnected_means_zero(g in graph_n2(8)) {
        let connected = is_connected(&g).unwrap();
        prop_assert_eq!(edge_connectivity(&g).unwrap().value == 0, !connected);
    }
}

#[test]
fn too_small_graphs_are_rejected() {
    let one = BipartiteGraph::empty(1, 0);
    assert!(matches!(edge_connectivity(&one), Err(bicomp::Error::TooSmall { order: 1 })));
    assert!(matches!(vertex_connectivity(&one), Err(bicomp::Error::TooSmall { order: 1 })));
}
