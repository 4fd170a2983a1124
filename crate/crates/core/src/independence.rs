//! Independent sets: the independence number, the family Ω(G) of all
//! maximum independent sets, its intersection core(G) and union corona(G),
//! and enumeration of Ind(G).

use crate::graph::Graph;
use crate::limits::{LimitError, DEFAULT_OMEGA_CAP, ENUMERATE_ALL_MAX_N};
use crate::set::VertexSet;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// True iff no edge of `g` has both endpoints in `s`. The empty set is
/// independent.
pub fn is_independent(g: &Graph, s: VertexSet) -> bool {
    s.iter().all(|v| !g.neighbors(v).intersects(s))
}

/// The independence number α(G), by branch and bound on the candidate
/// bitset.
pub fn alpha(g: &Graph) -> usize {
    let mut best = 0usize;
    alpha_rec(g.adjacency(), g.vertices().bits(), 0, &mut best);
    best
}

fn alpha_rec(adj: &[u64], mut cand: u64, mut size: usize, best: &mut usize) {
    loop {
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        if cand == 0 {
            *best = size;
            return;
        }
        // absorb vertices isolated within the candidate set, then branch on
        // a vertex of maximum residual degree
        let mut pivot = usize::MAX;
        let mut pivot_deg = 0;
        let mut scan = cand;
        let mut absorbed = false;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            let deg = (adj[v] & cand).count_ones() as usize;
            if deg == 0 {
                cand &= !(1u64 << v);
                size += 1;
                absorbed = true;
            } else if pivot == usize::MAX || deg > pivot_deg {
                pivot = v;
                pivot_deg = deg;
            }
        }
        if absorbed {
            continue;
        }
        let v = pivot;
        alpha_rec(adj, cand & !adj[v] & !(1u64 << v), size + 1, best);
        alpha_rec(adj, cand & !(1u64 << v), size, best);
        return;
    }
}

/// The family Ω(G) of all maximum independent sets, in canonical
/// (ascending bitset value) order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaFamily {
    alpha: usize,
    sets: Vec<VertexSet>,
}

impl OmegaFamily {
    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, s: VertexSet) -> bool {
        self.sets.binary_search(&s).is_ok()
    }

    /// core(G): the intersection of all maximum independent sets.
    pub fn core(&self) -> VertexSet {
        self.sets
            .iter()
            .copied()
            .reduce(|a, b| a & b)
            .unwrap_or(VertexSet::EMPTY)
    }

    /// corona(G): the union of all maximum independent sets.
    pub fn corona(&self) -> VertexSet {
        self.sets
            .iter()
            .copied()
            .fold(VertexSet::EMPTY, |a, b| a | b)
    }
}

/// Computes Ω(G) with the default materialization cap.
pub fn omega(g: &Graph) -> Result<OmegaFamily, LimitError> {
    omega_with_cap(g, DEFAULT_OMEGA_CAP)
}

/// Computes Ω(G), aborting with an error if more than `cap` sets exist.
pub fn omega_with_cap(g: &Graph, cap: usize) -> Result<OmegaFamily, LimitError> {
    let a = alpha(g);
    let mut sets = Vec::new();
    collect_of_size(
        g.adjacency(),
        g.vertices().bits(),
        0,
        0,
        a,
        cap,
        &mut sets,
    )?;
    sets.sort_unstable();
    Ok(OmegaFamily { alpha: a, sets })
}

fn collect_of_size(
    adj: &[u64],
    cand: u64,
    current: u64,
    size: usize,
    target: usize,
    cap: usize,
    out: &mut Vec<VertexSet>,
) -> Result<(), LimitError> {
    if size == target {
        if out.len() == cap {
            return Err(LimitError::CapExceeded {
                what: "family of maximum independent sets",
                cap,
            });
        }
        out.push(VertexSet::from_bits(current));
        return Ok(());
    }
    if size + (cand.count_ones() as usize) < target || cand == 0 {
        return Ok(());
    }
    let v = cand.trailing_zeros() as usize;
    let bit = 1u64 << v;
    collect_of_size(adj, cand & !adj[v] & !bit, current | bit, size + 1, target, cap, out)?;
    collect_of_size(adj, cand & !bit, current, size, target, cap, out)
}

/// core(G) computed from scratch.
pub fn core(g: &Graph) -> Result<VertexSet, LimitError> {
    Ok(omega(g)?.core())
}

/// corona(G) computed from scratch.
pub fn corona(g: &Graph) -> Result<VertexSet, LimitError> {
    Ok(omega(g)?.corona())
}

/// Visits every independent set of `g` exactly once, including the empty
/// set. Sets are built by ascending vertex insertion, so the visit order is
/// deterministic. The caller is responsible for sizing guards.
pub fn for_each_independent_set(g: &Graph, mut f: impl FnMut(VertexSet)) {
    fn rec(adj: &[u64], current: u64, cand: u64, f: &mut impl FnMut(VertexSet)) {
        f(VertexSet::from_bits(current));
        let mut c = cand;
        while c != 0 {
            let v = c.trailing_zeros() as usize;
            c &= c - 1;
            rec(adj, current | (1u64 << v), c & !adj[v], f);
        }
    }
    rec(g.adjacency(), 0, g.vertices().bits(), &mut f);
}

/// Enumeration mode for [`enumerate_independent_sets`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumMode {
    /// Every independent set including the empty set (guarded).
    All,
    /// Inclusion-maximal independent sets only.
    Maximal,
    /// `k` independent sets drawn by seeded random greedy fill.
    Sample { k: usize, seed: u64 },
}

/// Enumerates independent sets of `g` according to `mode`. `All` and
/// `Maximal` output in ascending bitset order; `Sample` output is
/// deterministic per seed (duplicates possible).
pub fn enumerate_independent_sets(
    g: &Graph,
    mode: EnumMode,
) -> Result<Vec<VertexSet>, LimitError> {
    match mode {
        EnumMode::All => {
            let n = g.vertex_count();
            if n > ENUMERATE_ALL_MAX_N {
                return Err(LimitError::TooLarge {
                    op: "enumerating all independent sets",
                    n,
                    max: ENUMERATE_ALL_MAX_N,
                });
            }
            let mut out = Vec::new();
            for_each_independent_set(g, |s| out.push(s));
            out.sort_unstable();
            Ok(out)
        }
        EnumMode::Maximal => {
            let mut out = Vec::new();
            maximal_rec(
                g.adjacency(),
                g.vertex_count(),
                0,
                g.vertices().bits(),
                0,
                &mut out,
            )?;
            out.sort_unstable();
            Ok(out)
        }
        EnumMode::Sample { k, seed } => Ok(sample_greedy(g, k, seed)),
    }
}

/// Bron-Kerbosch with pivoting, run on the complement implicitly: a clique
/// of the complement is an independent set of `g`.
fn maximal_rec(
    adj: &[u64],
    n: usize,
    r: u64,
    p: u64,
    x: u64,
    out: &mut Vec<VertexSet>,
) -> Result<(), LimitError> {
    if p == 0 && x == 0 {
        if out.len() == DEFAULT_OMEGA_CAP {
            return Err(LimitError::CapExceeded {
                what: "family of maximal independent sets",
                cap: DEFAULT_OMEGA_CAP,
            });
        }
        out.push(VertexSet::from_bits(r));
        return Ok(());
    }
    let full = VertexSet::full(n).bits();
    // pivot with the most complement-neighbors inside p
    let mut pivot = usize::MAX;
    let mut best = usize::MAX;
    let mut scan = p | x;
    while scan != 0 {
        let u = scan.trailing_zeros() as usize;
        scan &= scan - 1;
        let cn = full & !adj[u] & !(1u64 << u);
        let uncovered = (p & !cn).count_ones() as usize;
        if uncovered < best {
            best = uncovered;
            pivot = u;
        }
    }
    let pivot_cn = full & !adj[pivot] & !(1u64 << pivot);
    let mut cands = p & !pivot_cn;
    let mut p = p;
    let mut x = x;
    while cands != 0 {
        let v = cands.trailing_zeros() as usize;
        cands &= cands - 1;
        let bit = 1u64 << v;
        let cn = full & !adj[v] & !bit;
        maximal_rec(adj, n, r | bit, p & cn, x & cn, out)?;
        p &= !bit;
        x |= bit;
    }
    Ok(())
}

fn sample_greedy(g: &Graph, k: usize, seed: u64) -> Vec<VertexSet> {
    let n = g.vertex_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(k);
    let mut order: Vec<usize> = (0..n).collect();
    for _ in 0..k {
        // Fisher-Yates driven by the raw stream keeps the draw
        // platform-independent
        for i in (1..n).rev() {
            let j = (rng.next_u64() % (i as u64 + 1)) as usize;
            order.swap(i, j);
        }
        let mut s = VertexSet::EMPTY;
        for &v in &order {
            if !g.neighbors(v).intersects(s) {
                s.insert(v);
            }
        }
        out.push(s);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn independence_basics() {
        let k4 = Graph::complete(4).unwrap();
        assert!(is_independent(&k4, VertexSet::EMPTY));
        assert!(!is_independent(&k4, [0, 1].into_iter().collect()));
        assert!(is_independent(&k4, VertexSet::singleton(2)));
    }

    #[test]
    fn alpha_and_omega_on_c5() {
        // brute force over all 2^5 subsets gives alpha = 2 with 5 maximum sets
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(alpha(&c5), 2);
        let om = omega(&c5).unwrap();
        assert_eq!(om.len(), 5);
        assert!(om.sets().iter().all(|&s| s.len() == 2 && is_independent(&c5, s)));
        assert_eq!(om.core(), VertexSet::EMPTY);
        assert_eq!(om.corona(), c5.vertices());
    }

    #[test]
    fn omega_on_complete_graphs() {
        // K_{2n}: alpha = 1 and Omega is all 2n singletons
        for n in [2usize, 4, 6, 8] {
            let g = Graph::complete(n).unwrap();
            let om = omega(&g).unwrap();
            assert_eq!(om.alpha(), 1);
            assert_eq!(om.len(), n);
            assert_eq!(om.core(), VertexSet::EMPTY);
            assert_eq!(om.corona(), g.vertices());
        }
    }

    #[test]
    fn omega_of_edgeless_graph_is_the_whole_vertex_set() {
        let g = Graph::edgeless(6).unwrap();
        let om = omega(&g).unwrap();
        assert_eq!(om.alpha(), 6);
        assert_eq!(om.sets(), &[g.vertices()]);
        assert_eq!(om.core(), om.corona());
    }

    #[test]
    fn omega_is_sorted_and_duplicate_free() {
        let g = Graph::from_edge_list(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0)])
            .unwrap();
        let om = omega(&g).unwrap();
        for w in om.sets().windows(2) {
            assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn omega_cap_aborts() {
        // K_50 has 50 maximum independent sets
        let g = Graph::complete(50).unwrap();
        assert!(matches!(
            omega_with_cap(&g, 10),
            Err(LimitError::CapExceeded { cap: 10, .. })
        ));
    }

    #[test]
    fn enumerate_all_on_small_graphs() {
        let k3 = Graph::complete(3).unwrap();
        let all = enumerate_independent_sets(&k3, EnumMode::All).unwrap();
        assert_eq!(
            all,
            vec![
                VertexSet::EMPTY,
                VertexSet::singleton(0),
                VertexSet::singleton(1),
                VertexSet::singleton(2),
            ]
        );

        // 1 empty + 5 singletons + 5 pairs
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(enumerate_independent_sets(&c5, EnumMode::All).unwrap().len(), 11);
    }

    #[test]
    fn enumerate_all_guard() {
        let g = Graph::edgeless(21).unwrap();
        assert!(matches!(
            enumerate_independent_sets(&g, EnumMode::All),
            Err(LimitError::TooLarge { .. })
        ));
    }

    #[test]
    fn maximal_sets_of_c4_are_the_diagonals() {
        let c4 = Graph::cycle(4).unwrap();
        let maximal = enumerate_independent_sets(&c4, EnumMode::Maximal).unwrap();
        assert_eq!(
            maximal,
            vec![
                [0, 2].into_iter().collect::<VertexSet>(),
                [1, 3].into_iter().collect::<VertexSet>(),
            ]
        );
    }

    #[test]
    fn sampling_is_deterministic_and_independent() {
        let g = Graph::cycle(8).unwrap();
        let a = enumerate_independent_sets(&g, EnumMode::Sample { k: 10, seed: 42 }).unwrap();
        let b = enumerate_independent_sets(&g, EnumMode::Sample { k: 10, seed: 42 }).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 10);
        assert!(a.iter().all(|&s| is_independent(&g, s)));
        let c = enumerate_independent_sets(&g, EnumMode::Sample { k: 10, seed: 43 }).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn visitor_counts_match_enumeration() {
        let g = Graph::from_edge_list(6, &[(0, 1), (2, 3), (1, 4), (3, 5)]).unwrap();
        let mut count = 0usize;
        for_each_independent_set(&g, |_| count += 1);
        assert_eq!(
            count,
            enumerate_independent_sets(&g, EnumMode::All).unwrap().len()
        );
    }
}
