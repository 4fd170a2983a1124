//! Independent brute-force oracles. Everything here works from the edge
//! list alone with plain loops and recursion, deliberately sharing no code
//! with the enumeration kernels it cross-checks.

// each test binary uses its own subset of the oracles
#![allow(dead_code)]

use kegraph_core::graph::Graph;
use kegraph_core::set::VertexSet;

/// Adjacency lists rebuilt from the edge list.
fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.vertex_count()];
    for e in g.edges() {
        adj[e.u].push(e.v);
        adj[e.v].push(e.u);
    }
    adj
}

fn subset_is_independent(edges: &[(usize, usize)], bits: u64) -> bool {
    edges
        .iter()
        .all(|&(u, v)| bits & (1 << u) == 0 || bits & (1 << v) == 0)
}

fn edge_pairs(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().iter().map(|e| (e.u, e.v)).collect()
}

/// α(G) and the complete, sorted list of maximum independent sets by a
/// full 2^n scan.
pub fn brute_alpha_omega(g: &Graph) -> (usize, Vec<VertexSet>) {
    let n = g.vertex_count();
    assert!(n <= 24, "oracle scan is 2^n");
    let edges = edge_pairs(g);
    let mut alpha = 0usize;
    let mut best: Vec<u64> = vec![0];
    for bits in 1u64..(1 << n) {
        if !subset_is_independent(&edges, bits) {
            continue;
        }
        let size = bits.count_ones() as usize;
        match size.cmp(&alpha) {
            std::cmp::Ordering::Greater => {
                alpha = size;
                best = vec![bits];
            }
            std::cmp::Ordering::Equal => best.push(bits),
            std::cmp::Ordering::Less => {}
        }
    }
    best.sort_unstable();
    (alpha, best.into_iter().map(VertexSet::from_bits).collect())
}

/// μ(G) by enumerating matchings vertex by vertex.
pub fn brute_mu(g: &Graph) -> usize {
    let adj = adjacency(g);
    let mut used = vec![false; g.vertex_count()];
    let mut best = 0usize;
    fn rec(adj: &[Vec<usize>], used: &mut [bool], from: usize, size: usize, best: &mut usize) {
        *best = (*best).max(size);
        let free = used.iter().filter(|&&u| !u).count();
        if size + free / 2 <= *best {
            return;
        }
        let mut v = from;
        while v < adj.len() && used[v] {
            v += 1;
        }
        if v == adj.len() {
            *best = (*best).max(size);
            return;
        }
        used[v] = true;
        for &w in &adj[v] {
            if !used[w] {
                used[w] = true;
                rec(adj, used, v + 1, size + 1, best);
                used[w] = false;
            }
        }
        used[v] = false;
        rec(adj, used, v + 1, size, best);
    }
    rec(&adj, &mut used, 0, 0, &mut best);
    best
}

/// max d(X) over all 2^n subsets, with the neighborhood recomputed from
/// the edge list for each subset.
pub fn brute_difference_max(g: &Graph) -> i64 {
    let n = g.vertex_count();
    assert!(n <= 24, "oracle scan is 2^n");
    let edges = edge_pairs(g);
    let mut best = i64::MIN;
    for bits in 0u64..(1 << n) {
        let mut neighborhood = 0u64;
        for &(u, v) in &edges {
            if bits & (1 << u) != 0 {
                neighborhood |= 1 << v;
            }
            if bits & (1 << v) != 0 {
                neighborhood |= 1 << u;
            }
        }
        best = best.max(bits.count_ones() as i64 - neighborhood.count_ones() as i64);
    }
    best
}

/// max d(I) over independent sets only.
pub fn brute_difference_max_independent(g: &Graph) -> i64 {
    let n = g.vertex_count();
    assert!(n <= 24, "oracle scan is 2^n");
    let edges = edge_pairs(g);
    let mut best = i64::MIN;
    for bits in 0u64..(1 << n) {
        if !subset_is_independent(&edges, bits) {
            continue;
        }
        let mut neighborhood = 0u64;
        for &(u, v) in &edges {
            if bits & (1 << u) != 0 {
                neighborhood |= 1 << v;
            }
            if bits & (1 << v) != 0 {
                neighborhood |= 1 << u;
            }
        }
        best = best.max(bits.count_ones() as i64 - neighborhood.count_ones() as i64);
    }
    best
}

/// Hall's condition for saturating `a` inside the bipartite (a, b)
/// subgraph: every T ⊆ a needs |N(T) ∩ b| ≥ |T|.
pub fn hall_condition(g: &Graph, a: VertexSet, b: VertexSet) -> bool {
    let members: Vec<usize> = a.iter().collect();
    assert!(members.len() <= 16, "oracle scan is 2^|A|");
    let adj = adjacency(g);
    for mask in 1u64..(1 << members.len()) {
        let mut reach = 0u64;
        for (i, &v) in members.iter().enumerate() {
            if mask & (1 << i) != 0 {
                for &w in &adj[v] {
                    if b.contains(w) {
                        reach |= 1 << w;
                    }
                }
            }
        }
        if (reach.count_ones() as usize) < mask.count_ones() as usize {
            return false;
        }
    }
    true
}

/// The deterministic corpus used by the acceptance criteria: 200 seeded
/// random graphs on up to 10 vertices.
pub fn random_corpus() -> Vec<Graph> {
    let probabilities = [0.15, 0.3, 0.45, 0.6, 0.8];
    (0..200)
        .map(|i| {
            let n = 1 + i % 10;
            let p = probabilities[(i / 10) % probabilities.len()];
            kegraph_core::search::erdos_renyi(n, p, 0xC0FFEE + i as u64)
                .expect("corpus parameters are in range")
        })
        .collect()
}
