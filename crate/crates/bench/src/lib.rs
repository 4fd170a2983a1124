//! Shared graph builders for the benchmark targets.

use kegraph_core::graph::Graph;
use kegraph_core::search::erdos_renyi;

/// Deterministic benchmark inputs spanning sparse to dense.
pub fn bench_graphs() -> Vec<(&'static str, Graph)> {
    vec![
        ("cycle-15", Graph::cycle(15).unwrap()),
        ("sparse-14", erdos_renyi(14, 0.25, 11).unwrap()),
        ("medium-14", erdos_renyi(14, 0.5, 12).unwrap()),
        ("dense-14", erdos_renyi(14, 0.75, 13).unwrap()),
        ("medium-18", erdos_renyi(18, 0.5, 14).unwrap()),
    ]
}
