//! Simple undirected graphs on at most 64 vertices.
//!
//! Vertices are dense integer indices `0..n`; an optional label table maps
//! them to display names so fixture assertions can be written with the
//! names used in the source drawings. Adjacency is one bitset per vertex,
//! which keeps every neighborhood query a single word operation.

use crate::set::VertexSet;
use thiserror::Error;

/// Hard cap on the number of vertices: one machine word per [`VertexSet`].
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("{n} vertices exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices { n: usize },
    #[error("adjacency is not symmetric at ({u},{v})")]
    Asymmetric { u: usize, v: usize },
    #[error("label table has {got} entries for a graph on {n} vertices")]
    LabelCountMismatch { got: usize, n: usize },
}

/// An undirected edge with canonical endpoint order `u < v`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Creates an edge, normalizing the endpoint order.
    #[inline]
    pub fn new(a: usize, b: usize) -> Edge {
        debug_assert_ne!(a, b, "edges must join distinct vertices");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }
}

/// A finite simple graph. Immutable after construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are collapsed;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let mut adj = vec![0u64; n];
        for &(a, b) in edges {
            if a >= n {
                return Err(GraphError::VertexOutOfRange { v: a, n });
            }
            if b >= n {
                return Err(GraphError::VertexOutOfRange { v: b, n });
            }
            if a == b {
                return Err(GraphError::SelfLoop { v: a });
            }
            adj[a] |= 1u64 << b;
            adj[b] |= 1u64 << a;
        }
        Ok(Graph {
            n,
            adj,
            labels: None,
        })
    }

    /// Builds a graph directly from adjacency bitsets. Validates symmetry,
    /// self-loops and range.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Graph, GraphError> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let mask = VertexSet::full(n).bits();
        for (v, &row) in adj.iter().enumerate() {
            if row & !mask != 0 {
                let bad = (row & !mask).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { v: bad, n });
            }
            if row & (1u64 << v) != 0 {
                return Err(GraphError::SelfLoop { v });
            }
        }
        for u in 0..n {
            for v in (u + 1)..n {
                if adj[u] >> v & 1 != adj[v] >> u & 1 {
                    return Err(GraphError::Asymmetric { u, v });
                }
            }
        }
        Ok(Graph {
            n,
            adj,
            labels: None,
        })
    }

    /// The edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Result<Graph, GraphError> {
        Graph::from_edge_list(n, &[])
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let full = VertexSet::full(n).bits();
        let adj = (0..n).map(|v| full & !(1u64 << v)).collect();
        Ok(Graph {
            n,
            adj,
            labels: None,
        })
    }

    /// The cycle `C_n` (`n >= 3`).
    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges)
    }

    /// The path `P_n` on `n` vertices.
    pub fn path(n: usize) -> Result<Graph, GraphError> {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges)
    }

    /// Attaches display names to the vertices.
    pub fn with_labels<S: Into<String>>(
        mut self,
        labels: impl IntoIterator<Item = S>,
    ) -> Result<Graph, GraphError> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != self.n {
            return Err(GraphError::LabelCountMismatch {
                got: labels.len(),
                n: self.n,
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|b| b.count_ones() as usize).sum::<usize>() / 2
    }

    /// All edges in canonical `(u, v)` order, sorted.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u).iter() {
                if u < v {
                    out.push(Edge { u, v });
                }
            }
        }
        out
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.adj[u] & (1u64 << v) != 0
    }

    /// Neighborhood `N(v)` of a single vertex.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        debug_assert!(v < self.n);
        VertexSet::from_bits(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    /// The full vertex set `V(G)`.
    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Raw adjacency rows, for hot enumeration loops.
    #[inline]
    pub(crate) fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    /// Neighborhood `N(A) = {v : N(v) ∩ A ≠ ∅}`. May intersect `A`.
    pub fn neighborhood(&self, a: VertexSet) -> VertexSet {
        let mut out = 0u64;
        for v in a.iter() {
            out |= self.adj[v];
        }
        VertexSet::from_bits(out)
    }

    /// Closed neighborhood `N[A] = N(A) ∪ A`.
    pub fn closed_neighborhood(&self, a: VertexSet) -> VertexSet {
        self.neighborhood(a) | a
    }

    /// Subgraph induced by `x`, together with the map from new vertex
    /// indices to the original ones (`map[new] = old`). Labels carry over.
    pub fn induced_subgraph(&self, x: VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = x.iter().collect();
        let mut index_of = [usize::MAX; MAX_VERTICES];
        for (new, &old) in map.iter().enumerate() {
            index_of[old] = new;
        }
        let mut adj = vec![0u64; map.len()];
        for (new, &old) in map.iter().enumerate() {
            for w in (self.neighbors(old) & x).iter() {
                adj[new] |= 1u64 << index_of[w];
            }
        }
        let labels = self
            .labels
            .as_ref()
            .map(|ls| map.iter().map(|&old| ls[old].clone()).collect());
        (
            Graph {
                n: map.len(),
                adj,
                labels,
            },
            map,
        )
    }

    /// True iff the graph is connected. The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = VertexSet::singleton(0);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.neighborhood(frontier) - seen;
            seen |= next;
            frontier = next;
        }
        seen == self.vertices()
    }

    /// True iff the graph is connected with exactly one cycle (`|E| = |V|`).
    pub fn is_unicyclic(&self) -> bool {
        self.n > 0 && self.is_connected() && self.edge_count() == self.n
    }

    /// True iff the graph is 2-colorable.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![-1i8; self.n];
        for start in 0..self.n {
            if color[start] != -1 {
                continue;
            }
            color[start] = 0;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v).iter() {
                    if color[w] == -1 {
                        color[w] = 1 - color[v];
                        stack.push(w);
                    } else if color[w] == color[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|ls| ls[v].as_str())
    }

    pub fn has_labels(&self) -> bool {
        self.labels.is_some()
    }

    /// Display name of a vertex: its label if present, else its index.
    pub fn vertex_name(&self, v: usize) -> String {
        match self.label(v) {
            Some(l) => l.to_string(),
            None => v.to_string(),
        }
    }

    /// Finds the vertex with the given label.
    pub fn vertex_by_label(&self, name: &str) -> Option<usize> {
        let labels = self.labels.as_ref()?;
        labels.iter().position(|l| l == name)
    }

    /// Builds a vertex set from label names. Returns `None` when any name
    /// is unknown.
    pub fn set_of_labels(&self, names: &[&str]) -> Option<VertexSet> {
        let mut s = VertexSet::EMPTY;
        for name in names {
            s.insert(self.vertex_by_label(name)?);
        }
        Some(s)
    }

    /// Renders a vertex set with labels when available: `{a, c, d}`.
    pub fn set_to_string(&self, s: VertexSet) -> String {
        let mut names: Vec<String> = s.iter().map(|v| self.vertex_name(v)).collect();
        if self.labels.is_none() {
            // indices are already ascending
        } else {
            names.sort();
        }
        format!("{{{}}}", names.join(","))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges=[", self.n, self.edge_count())?;
        for (i, e) in self.edges().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}-{}", e.u, e.v)?;
        }
        write!(f, "])")
    }
}
