//! Undirected simple graphs on vertices `1..=n`.
//!
//! Adjacency is stored as one `u64` neighbour mask per vertex, where bit
//! `u - 1` of `adj[v - 1]` is set iff `{u, v}` is an edge. The edge list is
//! kept sorted lexicographically with `u < v` so that edge indices are stable
//! and can key per-edge data such as orientations.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("vertex {vertex} out of range 1..={n}")]
    OutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("{n} vertices exceeds the supported maximum of {max}")]
    TooLarge { n: usize, max: usize },
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    edges: Vec<(usize, usize)>,
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << (v - 1)
}

/// Iterates the 1-based vertices whose bits are set in `mask`.
pub(crate) fn vertices_of(mut mask: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize + 1;
            mask &= mask - 1;
            Some(v)
        }
    })
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either order)
    /// collapse to one edge.
    pub fn from_edges<I>(n: usize, pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in pairs {
            for w in [u, v] {
                if w < 1 || w > n {
                    return Err(GraphError::OutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            g.adj[u - 1] |= bit(v);
            g.adj[v - 1] |= bit(u);
        }
        g.rebuild_edges();
        Ok(g)
    }

    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge { n, max: MAX_VERTICES });
        }
        Ok(Self { n, adj: vec![0; n], edges: Vec::new() })
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let pairs = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)));
        Self::from_edges(n, pairs)
    }

    /// The cycle `1-2-…-n-1`. Requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::NoVertices);
        }
        Self::from_edges(n, (1..=n).map(|v| (v, v % n + 1)))
    }

    /// Builds a graph directly from neighbour masks. Masks must be symmetric
    /// and loop-free; asymmetric input is symmetrised.
    pub fn from_adjacency(adj: &[u64]) -> Result<Self, GraphError> {
        let n = adj.len();
        let mut g = Self::empty(n)?;
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        for (i, &m) in adj.iter().enumerate() {
            if m & !all != 0 {
                let w = (m & !all).trailing_zeros() as usize + 1;
                return Err(GraphError::OutOfRange { vertex: w, n });
            }
            if m & (1 << i) != 0 {
                return Err(GraphError::SelfLoop { vertex: i + 1 });
            }
            g.adj[i] |= m;
            for u in vertices_of(m) {
                g.adj[u - 1] |= 1 << i;
            }
        }
        g.rebuild_edges();
        Ok(g)
    }

    fn rebuild_edges(&mut self) {
        self.edges.clear();
        for u in 1..=self.n {
            let higher = self.adj[u - 1] >> u;
            for off in vertices_of(higher) {
                self.edges.push((u, u + off));
            }
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Neighbour masks, indexed by `v - 1`.
    #[inline]
    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v - 1]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        vertices_of(self.adj[v - 1])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && (1..=self.n).contains(&u) && (1..=self.n).contains(&v) && self.adj[u - 1] & bit(v) != 0
    }

    /// Position of `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (1..=self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (1..=self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * (self.n - 1) / 2
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = bit(1);
        let mut frontier = bit(1);
        while frontier != 0 {
            let mut next = 0;
            for v in vertices_of(frontier) {
                next |= self.adj[v - 1];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen.count_ones() as usize == self.n
    }

    /// Every 4-cycle `a-b-c-d-a`, reported once: `a` is the smallest vertex
    /// and `b < d` are its two neighbours on the cycle.
    pub fn four_cycles(&self) -> Vec<[usize; 4]> {
        let mut out = Vec::new();
        for a in 1..=self.n {
            let above = self.adj[a - 1] & !low_mask(a);
            for b in vertices_of(above) {
                for d in vertices_of(above & !low_mask(b)) {
                    let common = self.adj[b - 1] & self.adj[d - 1] & !low_mask(a);
                    for c in vertices_of(common) {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
        out
    }

    pub fn is_k4_free(&self) -> bool {
        for a in 1..=self.n {
            let na = self.adj[a - 1] & !low_mask(a);
            for b in vertices_of(na) {
                let nab = na & self.adj[b - 1] & !low_mask(b);
                for c in vertices_of(nab) {
                    if nab & self.adj[c - 1] != 0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Induced subgraph on the vertices of `keep`, relabelled to `1..=k`
    /// preserving order.
    pub fn induced(&self, keep: u64) -> Result<Self, GraphError> {
        let kept: Vec<usize> = vertices_of(keep).filter(|&v| v <= self.n).collect();
        let mut new_label = vec![0usize; self.n + 1];
        for (i, &v) in kept.iter().enumerate() {
            new_label[v] = i + 1;
        }
        let pairs = self
            .edges
            .iter()
            .filter(|&&(u, v)| new_label[u] != 0 && new_label[v] != 0)
            .map(|&(u, v)| (new_label[u], new_label[v]));
        Self::from_edges(kept.len(), pairs)
    }

    /// `G - v`, relabelled so vertices above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Self, GraphError> {
        if v < 1 || v > self.n {
            return Err(GraphError::OutOfRange { vertex: v, n: self.n });
        }
        self.induced(full_mask(self.n) & !bit(v))
    }

    /// Relabels vertex `i` as `perm[i - 1]`. `perm` must be a permutation of
    /// `1..=n`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self, GraphError> {
        debug_assert_eq!(perm.len(), self.n);
        Self::from_edges(self.n, self.edges.iter().map(|&(u, v)| (perm[u - 1], perm[v - 1])))
    }

    /// Colours vertices with at most `colors` colours by backtracking, if
    /// possible. Vertices are coloured in label order, smallest colour first.
    pub fn proper_coloring(&self, colors: u8) -> Option<VertexColoring> {
        fn go(g: &Graph, v: usize, colors: u8, col: &mut Vec<u8>) -> bool {
            if v > g.n {
                return true;
            }
            for c in 1..=colors {
                let clash = vertices_of(g.adj[v - 1] & low_mask(v)).any(|u| col[u - 1] == c);
                if !clash {
                    col[v - 1] = c;
                    if go(g, v + 1, colors, col) {
                        return true;
                    }
                }
            }
            col[v - 1] = 0;
            false
        }
        let mut col = vec![0u8; self.n];
        if go(self, 1, colors, &mut col) {
            Some(VertexColoring { colors: col })
        } else {
            None
        }
    }
}

/// Bits for vertices `1..=v` (i.e. `v` and everything below it).
#[inline]
pub(crate) fn low_mask(v: usize) -> u64 {
    if v >= 64 {
        u64::MAX
    } else {
        (1u64 << v) - 1
    }
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    low_mask(n)
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{u}{}{v}", if self.n > 9 { "-" } else { "" })?;
        }
        f.write_str("])")
    }
}

/// Assignment of a colour `1..=c` to every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexColoring {
    colors: Vec<u8>,
}

impl VertexColoring {
    /// `colors[i]` is the colour of vertex `i + 1`; colours start at 1.
    pub fn new(colors: Vec<u8>) -> Result<Self, GraphError> {
        if let Some(i) = colors.iter().position(|&c| c == 0) {
            return Err(GraphError::OutOfRange { vertex: i + 1, n: colors.len() });
        }
        Ok(Self { colors })
    }

    #[inline]
    pub fn color(&self, v: usize) -> u8 {
        self.colors[v - 1]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn num_colors(&self) -> usize {
        self.colors.iter().copied().max().unwrap_or(0) as usize
    }

    /// The first monochromatic edge, if any.
    pub fn monochromatic_edge(&self, g: &Graph) -> Option<(usize, usize)> {
        g.edges().iter().copied().find(|&(u, v)| self.color(u) == self.color(v))
    }
}
