//! Bundled networks and small synthetic graphs.

use crate::graph::{parse_edge_list_str, Graph};

pub const KITE_EDGE_LIST: &str = include_str!("../data/kite.txt");
pub const KARATE_EDGE_LIST: &str = include_str!("../data/karate.txt");

/// Krackhardt's kite network, 10 nodes and 18 edges.
pub fn kite() -> Graph {
    parse_edge_list_str(KITE_EDGE_LIST).expect("bundled kite parses").graph
}

/// Zachary's karate club, 34 nodes and 78 edges, labelled 1..=34.
pub fn karate() -> Graph {
    parse_edge_list_str(KARATE_EDGE_LIST).expect("bundled karate parses").graph
}

/// Looks up a bundled network by name.
pub fn builtin(name: &str) -> Option<Graph> {
    match name {
        "kite" => Some(kite()),
        "karate" => Some(karate()),
        _ => None,
    }
}

pub fn builtin_text(name: &str) -> Option<&'static str> {
    match name {
        "kite" => Some(KITE_EDGE_LIST),
        "karate" => Some(KARATE_EDGE_LIST),
        _ => None,
    }
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))
}

/// Star with center `0` and `leaves` leaves.
pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i)))
}
