//! Exhaustive catalogs of pairwise non-isomorphic graphs on few vertices,
//! generated by extending smaller canonical graphs one vertex at a time and
//! deduplicating by canonical form.
//!
//! The canonical form of a graph is the minimum upper-triangle bit string
//! over all vertex orderings compatible with an iterated-refinement
//! coloring. The coloring is isomorphism-invariant, so two graphs receive
//! the same form exactly when they are isomorphic; the generated counts are
//! pinned against the known census in the tests.

use crate::graph::Graph;
use crate::limits::LimitError;
use rayon::prelude::*;

/// Catalog generation is quadratic in the census size; eight vertices
/// (12346 graphs) is where a desk run stops being instant.
pub const CATALOG_MAX_N: usize = 8;

/// All graphs on exactly `n` vertices up to isomorphism, one canonical
/// representative each, sorted by canonical form.
pub fn catalog(n: usize) -> Result<Vec<Graph>, LimitError> {
    if n == 0 || n > CATALOG_MAX_N {
        return Err(LimitError::TooLarge {
            op: "exhaustive catalog",
            n,
            max: CATALOG_MAX_N,
        });
    }
    let mut keys: Vec<u64> = vec![0]; // K1
    for k in 1..n {
        keys = extend_catalog(&keys, k);
    }
    Ok(keys.into_iter().map(|key| graph_from_key(key, n)).collect())
}

/// Catalogs for every size in `lo..=hi`, concatenated in ascending size.
pub fn catalog_range(lo: usize, hi: usize) -> Result<Vec<Graph>, LimitError> {
    let mut out = Vec::new();
    for n in lo..=hi {
        out.extend(catalog(n)?);
    }
    Ok(out)
}

/// Extends every canonical graph on `k` vertices by one vertex attached to
/// each possible neighborhood, then dedups canonically.
fn extend_catalog(keys: &[u64], k: usize) -> Vec<u64> {
    let n = k + 1;
    let mut extended: Vec<u64> = keys
        .par_iter()
        .flat_map_iter(|&key| {
            let base = adjacency_from_key(key, k);
            (0u64..(1u64 << k)).map(move |mask| {
                let mut adj = Vec::with_capacity(n);
                for (v, &row) in base.iter().enumerate() {
                    let mut row = row;
                    if mask >> v & 1 == 1 {
                        row |= 1u64 << k;
                    }
                    adj.push(row);
                }
                adj.push(mask);
                adj
            })
        })
        .map(|adj| canonical_key(&adj))
        .collect();
    extended.par_sort_unstable();
    extended.dedup();
    extended
}

/// Upper-triangle bits of `adj` in row-major pair order, most significant
/// first. Fits in a u64 for n <= 11.
fn triangle_key(adj: &[u64], perm: &[usize]) -> u64 {
    let n = adj.len();
    let mut key = 0u64;
    for i in 0..n {
        for j in (i + 1)..n {
            key = key << 1 | (adj[perm[i]] >> perm[j]) & 1;
        }
    }
    key
}

fn adjacency_from_key(key: u64, n: usize) -> Vec<u64> {
    let nbits = n * (n - 1) / 2;
    let mut adj = vec![0u64; n];
    let mut t = 0usize;
    for i in 0..n {
        for j in (i + 1)..n {
            if key >> (nbits - 1 - t) & 1 == 1 {
                adj[i] |= 1u64 << j;
                adj[j] |= 1u64 << i;
            }
            t += 1;
        }
    }
    adj
}

fn graph_from_key(key: u64, n: usize) -> Graph {
    Graph::from_adjacency(adjacency_from_key(key, n)).expect("catalog keys decode to valid graphs")
}

/// Canonical form: minimum triangle key over all vertex orderings grouped
/// by refined color classes.
pub(crate) fn canonical_key(adj: &[u64]) -> u64 {
    let n = adj.len();
    debug_assert!(n * (n - 1) / 2 <= 64);
    let colors = refine_colors(adj);

    // vertices grouped by color rank; positions are assigned block by block
    let max_color = colors.iter().copied().max().unwrap_or(0);
    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); max_color + 1];
    for (v, &c) in colors.iter().enumerate() {
        blocks[c].push(v);
    }
    blocks.retain(|b| !b.is_empty());

    let mut perm: Vec<usize> = Vec::with_capacity(n);
    let mut best = u64::MAX;
    permute_blocks(adj, &mut blocks, 0, &mut perm, &mut best);
    best
}

fn permute_blocks(
    adj: &[u64],
    blocks: &mut [Vec<usize>],
    block_index: usize,
    perm: &mut Vec<usize>,
    best: &mut u64,
) {
    if block_index == blocks.len() {
        *best = (*best).min(triangle_key(adj, perm));
        return;
    }
    permute_within(adj, blocks, block_index, 0, perm, best);
}

fn permute_within(
    adj: &[u64],
    blocks: &mut [Vec<usize>],
    block_index: usize,
    depth: usize,
    perm: &mut Vec<usize>,
    best: &mut u64,
) {
    let len = blocks[block_index].len();
    if depth == len {
        permute_blocks(adj, blocks, block_index + 1, perm, best);
        return;
    }
    for i in depth..len {
        blocks[block_index].swap(depth, i);
        perm.push(blocks[block_index][depth]);
        permute_within(adj, blocks, block_index, depth + 1, perm, best);
        perm.pop();
        blocks[block_index].swap(depth, i);
    }
}

/// Two rounds of neighborhood color refinement starting from degrees.
/// Returns a color rank per vertex; the ranks depend only on the
/// isomorphism class.
fn refine_colors(adj: &[u64]) -> Vec<usize> {
    let n = adj.len();
    let mut colors: Vec<usize> = adj.iter().map(|r| r.count_ones() as usize).collect();
    for _ in 0..2 {
        let mut signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut neigh: Vec<usize> = (0..n)
                    .filter(|&w| adj[v] >> w & 1 == 1)
                    .map(|w| colors[w])
                    .collect();
                neigh.sort_unstable();
                (colors[v], neigh)
            })
            .collect();
        let mut order: Vec<(usize, Vec<usize>)> = signatures.clone();
        order.sort_unstable();
        order.dedup();
        colors = signatures
            .drain(..)
            .map(|sig| order.binary_search(&sig).expect("signature present"))
            .collect();
    }
    colors
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::encode_graph6;

    #[test]
    fn census_counts_up_to_seven() {
        // unlabeled graph counts by vertex count
        let expected = [1usize, 2, 4, 11, 34, 156, 1044];
        for (i, &want) in expected.iter().enumerate() {
            let n = i + 1;
            assert_eq!(catalog(n).unwrap().len(), want, "n={n}");
        }
    }

    #[test]
    fn catalog_members_are_pairwise_distinct_as_graph6() {
        let mut lines: Vec<String> = catalog(6)
            .unwrap()
            .iter()
            .map(encode_graph6)
            .collect();
        let before = lines.len();
        lines.sort();
        lines.dedup();
        assert_eq!(lines.len(), before);
    }

    #[test]
    fn canonical_key_is_isomorphism_invariant() {
        // relabel a fixed graph arbitrarily and expect one key
        let g = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
            .unwrap();
        let base: Vec<u64> = (0..6).map(|v| g.neighbors(v).bits()).collect();
        let reference = canonical_key(&base);
        let perms = [
            [1, 2, 3, 4, 5, 0],
            [5, 4, 3, 2, 1, 0],
            [2, 0, 4, 1, 5, 3],
            [3, 5, 1, 0, 2, 4],
        ];
        for p in perms {
            let mut adj = vec![0u64; 6];
            for u in 0..6 {
                for v in 0..6 {
                    if base[u] >> v & 1 == 1 {
                        adj[p[u]] |= 1u64 << p[v];
                    }
                }
            }
            assert_eq!(canonical_key(&adj), reference);
        }
    }

    #[test]
    fn range_is_ordered_by_size() {
        let graphs = catalog_range(1, 4).unwrap();
        assert_eq!(graphs.len(), 1 + 2 + 4 + 11);
        let sizes: Vec<usize> = graphs.iter().map(|g| g.vertex_count()).collect();
        let mut sorted = sizes.clone();
        sorted.sort_unstable();
        assert_eq!(sizes, sorted);
    }

    #[test]
    fn out_of_range_is_refused() {
        assert!(matches!(catalog(0), Err(LimitError::TooLarge { .. })));
        assert!(matches!(catalog(9), Err(LimitError::TooLarge { .. })));
    }
}
