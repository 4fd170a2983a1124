//! Matchings: maximum matching in general graphs via augmenting paths with
//! blossom contraction, and saturating matchings between two disjoint
//! vertex sets decided by bipartite augmentation.

use crate::graph::{Edge, Graph};
use crate::set::VertexSet;
use std::collections::VecDeque;
use thiserror::Error;

const NONE: usize = usize::MAX;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatchingError {
    #[error("the two sides overlap in {overlap:?}")]
    SidesOverlap { overlap: VertexSet },
    #[error("edge {u}-{v} is not an edge of the graph")]
    NotAnEdge { u: usize, v: usize },
    #[error("vertex {v} is covered by more than one matching edge")]
    VertexReused { v: usize },
}

/// A set of pairwise non-incident edges with O(1) partner lookup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<Edge>,
    partner: Vec<usize>,
}

impl Matching {
    /// The empty matching on a graph with `n` vertices.
    pub fn empty(n: usize) -> Matching {
        Matching {
            edges: Vec::new(),
            partner: vec![NONE; n],
        }
    }

    /// Builds a matching from explicit edges, validating that they exist in
    /// `g` and are pairwise non-incident.
    pub fn from_edges(g: &Graph, edges: &[(usize, usize)]) -> Result<Matching, MatchingError> {
        let mut m = Matching::empty(g.vertex_count());
        for &(u, v) in edges {
            if u >= g.vertex_count() || v >= g.vertex_count() || !g.has_edge(u, v) {
                return Err(MatchingError::NotAnEdge { u, v });
            }
            if m.partner[u] != NONE {
                return Err(MatchingError::VertexReused { v: u });
            }
            if m.partner[v] != NONE {
                return Err(MatchingError::VertexReused { v });
            }
            m.partner[u] = v;
            m.partner[v] = u;
            m.edges.push(Edge::new(u, v));
        }
        m.edges.sort_unstable();
        Ok(m)
    }

    fn from_partner(partner: Vec<usize>) -> Matching {
        let mut edges = Vec::new();
        for (v, &p) in partner.iter().enumerate() {
            if p != NONE && v < p {
                edges.push(Edge { u: v, v: p });
            }
        }
        Matching { edges, partner }
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// The vertex matched with `x`, written M(x) in matching arguments.
    pub fn partner(&self, x: usize) -> Option<usize> {
        match self.partner.get(x) {
            Some(&p) if p != NONE => Some(p),
            _ => None,
        }
    }

    pub fn saturates(&self, x: usize) -> bool {
        self.partner(x).is_some()
    }

    /// V(M): every vertex covered by a matching edge.
    pub fn saturated_set(&self) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for e in &self.edges {
            s.insert(e.u);
            s.insert(e.v);
        }
        s
    }

    /// Checks the matching invariants against a graph: every edge exists
    /// and no vertex repeats.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        if self.partner.len() != g.vertex_count() {
            return false;
        }
        let mut seen = VertexSet::EMPTY;
        for e in &self.edges {
            if !g.has_edge(e.u, e.v) || seen.contains(e.u) || seen.contains(e.v) {
                return false;
            }
            seen.insert(e.u);
            seen.insert(e.v);
        }
        // partner map must mirror the edge list exactly
        for (v, &p) in self.partner.iter().enumerate() {
            if p != NONE && (p >= self.partner.len() || self.partner[p] != v) {
                return false;
            }
        }
        true
    }
}

/// Maximum matching of a general graph. Augmenting-path search with blossom
/// contraction; roots, neighbors and the BFS queue are all processed in
/// ascending order, so the result is deterministic.
pub fn maximum_matching(g: &Graph) -> Matching {
    let n = g.vertex_count();
    let mut mate = vec![NONE; n];

    // greedy seed cuts down the number of augmentation phases
    for v in 0..n {
        if mate[v] == NONE {
            for u in g.neighbors(v).iter() {
                if mate[u] == NONE {
                    mate[v] = u;
                    mate[u] = v;
                    break;
                }
            }
        }
    }

    for root in 0..n {
        if mate[root] == NONE {
            if let Some((leaf, parent)) = find_augmenting_path(g, root, &mate) {
                // flip matched/unmatched along the alternating path
                let mut v = leaf;
                while v != NONE {
                    let pv = parent[v];
                    let next = mate[pv];
                    mate[v] = pv;
                    mate[pv] = v;
                    v = next;
                }
            }
        }
    }
    Matching::from_partner(mate)
}

/// μ(G): the size of a maximum matching.
pub fn mu(g: &Graph) -> usize {
    maximum_matching(g).size()
}

struct PathState {
    parent: Vec<usize>,
    base: Vec<usize>,
}

/// BFS from an exposed root over the alternating forest, contracting odd
/// cycles onto their base; returns the exposed endpoint of an augmenting
/// path together with the parent links needed to flip it.
fn find_augmenting_path(g: &Graph, root: usize, mate: &[usize]) -> Option<(usize, Vec<usize>)> {
    let n = g.vertex_count();
    let mut st = PathState {
        parent: vec![NONE; n],
        base: (0..n).collect(),
    };
    let mut in_queue = vec![false; n];
    let mut queue = VecDeque::new();
    in_queue[root] = true;
    queue.push_back(root);

    while let Some(v) = queue.pop_front() {
        for to in g.neighbors(v).iter() {
            if st.base[v] == st.base[to] || mate[v] == to {
                continue;
            }
            if to == root || (mate[to] != NONE && st.parent[mate[to]] != NONE) {
                // odd cycle: contract the blossom at its base
                let cur_base = lowest_common_base(v, to, &st, mate);
                let mut in_blossom = vec![false; n];
                mark_blossom_path(v, cur_base, to, &mut in_blossom, &mut st, mate);
                mark_blossom_path(to, cur_base, v, &mut in_blossom, &mut st, mate);
                for i in 0..n {
                    if in_blossom[st.base[i]] {
                        st.base[i] = cur_base;
                        if !in_queue[i] {
                            in_queue[i] = true;
                            queue.push_back(i);
                        }
                    }
                }
            } else if st.parent[to] == NONE {
                st.parent[to] = v;
                if mate[to] == NONE {
                    return Some((to, st.parent));
                }
                if !in_queue[mate[to]] {
                    in_queue[mate[to]] = true;
                    queue.push_back(mate[to]);
                }
            }
        }
    }
    None
}

/// Walks both tentative blossom stems up through bases to find the first
/// common one.
fn lowest_common_base(a: usize, b: usize, st: &PathState, mate: &[usize]) -> usize {
    let mut used = vec![false; st.base.len()];
    let mut v = a;
    loop {
        v = st.base[v];
        used[v] = true;
        if mate[v] == NONE {
            break; // reached the root
        }
        v = st.parent[mate[v]];
    }
    let mut u = b;
    loop {
        u = st.base[u];
        if used[u] {
            return u;
        }
        u = st.parent[mate[u]];
    }
}

fn mark_blossom_path(
    mut v: usize,
    base: usize,
    mut child: usize,
    in_blossom: &mut [bool],
    st: &mut PathState,
    mate: &[usize],
) {
    while st.base[v] != base {
        in_blossom[st.base[v]] = true;
        in_blossom[st.base[mate[v]]] = true;
        st.parent[v] = child;
        child = mate[v];
        v = st.parent[mate[v]];
    }
}

/// Finds a matching that saturates every vertex of `a` using only edges
/// between `a` and `b`, or `None` when no such matching exists. Decided
/// exactly by bipartite augmentation on the (a, b) edges; augmentation
/// order is lexicographic, so the witness is deterministic.
pub fn matching_from_into(
    g: &Graph,
    a: VertexSet,
    b: VertexSet,
) -> Result<Option<Matching>, MatchingError> {
    if a.intersects(b) {
        return Err(MatchingError::SidesOverlap { overlap: a & b });
    }
    let n = g.vertex_count();
    let mut mate_of_b = vec![NONE; n];
    for x in a.iter() {
        let mut visited = VertexSet::EMPTY;
        if !try_augment_bipartite(g, x, b, &mut visited, &mut mate_of_b) {
            return Ok(None);
        }
    }
    let mut partner = vec![NONE; n];
    for y in b.iter() {
        if mate_of_b[y] != NONE {
            partner[y] = mate_of_b[y];
            partner[mate_of_b[y]] = y;
        }
    }
    Ok(Some(Matching::from_partner(partner)))
}

fn try_augment_bipartite(
    g: &Graph,
    x: usize,
    b: VertexSet,
    visited: &mut VertexSet,
    mate_of_b: &mut [usize],
) -> bool {
    for y in (g.neighbors(x) & b).iter() {
        if visited.contains(y) {
            continue;
        }
        visited.insert(y);
        if mate_of_b[y] == NONE || try_augment_bipartite(g, mate_of_b[y], b, visited, mate_of_b) {
            mate_of_b[y] = x;
            return true;
        }
    }
    false
}

/// True iff `m` is a perfect matching on `x`: every vertex of `x` is
/// saturated and every matching edge lies inside `x`.
pub fn is_perfect_on(g: &Graph, x: VertexSet, m: &Matching) -> Result<bool, MatchingError> {
    let mut seen = VertexSet::EMPTY;
    for e in m.edges() {
        if e.u >= g.vertex_count() || e.v >= g.vertex_count() || !g.has_edge(e.u, e.v) {
            return Err(MatchingError::NotAnEdge { u: e.u, v: e.v });
        }
        for v in [e.u, e.v] {
            if seen.contains(v) {
                return Err(MatchingError::VertexReused { v });
            }
            seen.insert(v);
        }
    }
    let inside = m.edges().iter().all(|e| x.contains(e.u) && x.contains(e.v));
    Ok(inside && x.is_subset_of(seen))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_mu(g: &Graph) -> usize {
        fn rec(edges: &[Edge], used: VertexSet, i: usize, size: usize, best: &mut usize) {
            *best = (*best).max(size);
            if i == edges.len() {
                return;
            }
            rec(edges, used, i + 1, size, best);
            let e = edges[i];
            if !used.contains(e.u) && !used.contains(e.v) {
                rec(edges, used.with(e.u).with(e.v), i + 1, size + 1, best);
            }
        }
        let mut best = 0;
        rec(&g.edges(), VertexSet::EMPTY, 0, 0, &mut best);
        best
    }

    #[test]
    fn mu_examples() {
        assert_eq!(mu(&Graph::edgeless(5).unwrap()), 0);
        assert_eq!(mu(&Graph::cycle(5).unwrap()), 2);
        for n in [2usize, 4, 6, 8] {
            assert_eq!(mu(&Graph::complete(n).unwrap()), n / 2);
        }
        // Petersen graph has a perfect matching
        let petersen = Graph::from_edge_list(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        )
        .unwrap();
        assert_eq!(mu(&petersen), 5);
    }

    #[test]
    fn blossom_handles_odd_structures() {
        // two triangles joined by a bridge: needs contraction to see mu = 3
        let g = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)])
            .unwrap();
        assert_eq!(mu(&g), 3);

        // flower: odd cycle with a stem
        let g = Graph::from_edge_list(
            7,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 5), (5, 6)],
        )
        .unwrap();
        assert_eq!(mu(&g), brute_force_mu(&g));
    }

    #[test]
    fn matches_brute_force_on_random_graphs() {
        // xorshift-style deterministic adjacency patterns
        let mut state = 0x243F6A8885A308D3u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for n in 4..=9usize {
            for _ in 0..30 {
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in (u + 1)..n {
                        if next() % 100 < 45 {
                            edges.push((u, v));
                        }
                    }
                }
                let g = Graph::from_edge_list(n, &edges).unwrap();
                let m = maximum_matching(&g);
                assert!(m.is_valid_for(&g));
                assert_eq!(m.size(), brute_force_mu(&g), "graph {g:?}");
            }
        }
    }

    #[test]
    fn maximum_matching_is_deterministic() {
        let g = Graph::cycle(9).unwrap();
        assert_eq!(maximum_matching(&g), maximum_matching(&g));
    }

    #[test]
    fn from_into_trivial_and_failing_cases() {
        let g = Graph::path(4).unwrap();
        // empty source side always succeeds with the empty matching
        let m = matching_from_into(&g, VertexSet::EMPTY, g.vertices())
            .unwrap()
            .unwrap();
        assert_eq!(m.size(), 0);

        // two pendant sources competing for one target
        let star = Graph::from_edge_list(3, &[(0, 1), (0, 2)]).unwrap();
        let a: VertexSet = [1, 2].into_iter().collect();
        assert!(matching_from_into(&star, a, VertexSet::singleton(0))
            .unwrap()
            .is_none());

        // overlap is an error
        assert!(matches!(
            matching_from_into(&g, [0, 1].into_iter().collect(), [1, 2].into_iter().collect()),
            Err(MatchingError::SidesOverlap { .. })
        ));
    }

    #[test]
    fn from_into_saturates_the_source() {
        let g = Graph::from_edge_list(6, &[(0, 3), (0, 4), (1, 3), (2, 5), (1, 5)]).unwrap();
        let a: VertexSet = [0, 1, 2].into_iter().collect();
        let b: VertexSet = [3, 4, 5].into_iter().collect();
        let m = matching_from_into(&g, a, b).unwrap().unwrap();
        assert_eq!(m.size(), 3);
        assert!(a.is_subset_of(m.saturated_set()));
        for e in m.edges() {
            assert!(a.contains(e.u) != a.contains(e.v));
        }
    }

    #[test]
    fn perfect_on_examples() {
        let c4 = Graph::cycle(4).unwrap();
        let m = Matching::from_edges(&c4, &[(0, 1), (2, 3)]).unwrap();
        assert!(is_perfect_on(&c4, c4.vertices(), &m).unwrap());
        assert!(is_perfect_on(&c4, VertexSet::EMPTY, &Matching::empty(4)).unwrap());

        let c5 = Graph::cycle(5).unwrap();
        let m = maximum_matching(&c5);
        assert!(!is_perfect_on(&c5, c5.vertices(), &m).unwrap());
    }

    #[test]
    fn invalid_matchings_are_rejected() {
        let c4 = Graph::cycle(4).unwrap();
        assert!(matches!(
            Matching::from_edges(&c4, &[(0, 2)]),
            Err(MatchingError::NotAnEdge { u: 0, v: 2 })
        ));
        assert!(matches!(
            Matching::from_edges(&c4, &[(0, 1), (1, 2)]),
            Err(MatchingError::VertexReused { v: 1 })
        ));
    }
}
