//! Shared unit-test fixtures.

use crate::graph::Graph;

/// The Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes.
pub(crate) fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edge_list(10, &edges).unwrap()
}
