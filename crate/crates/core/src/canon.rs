//! Canonical forms and isomorphism-class enumeration for small graphs.
//!
//! The code of a labelled graph is its upper-triangle adjacency read column
//! by column, `(1,2), (1,3), (2,3), (1,4), …, (n-1,n)`, most significant bit
//! first. The canonical form is the minimum code over all `n!` relabellings.
//! Column order means the vertex placed at position `j` fixes a contiguous
//! block of bits, so partial placements can be pruned against the best code
//! found so far without losing exactness.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{bit, Graph, GraphError};

/// Largest `n` accepted by [`canonical_form`].
pub const MAX_CANON_VERTICES: usize = 8;
/// Largest `n` accepted by [`enumerate_graphs`].
pub const MAX_ENUM_VERTICES: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: u8,
    code: u64,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// The adjacency bits as an integer, first pair most significant.
    pub fn code(&self) -> u64 {
        self.code
    }

    fn bits(&self) -> usize {
        pairs(self.n as usize)
    }

    /// Rebuilds the canonically labelled graph this code describes.
    pub fn to_graph(&self) -> Graph {
        let n = self.n as usize;
        let mut edges = Vec::new();
        let mut pos = self.bits();
        for j in 2..=n {
            for i in 1..j {
                pos -= 1;
                if self.code >> pos & 1 == 1 {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(n, edges).expect("code describes a valid graph")
    }

    /// Parses the `n:bits` form produced by `Display`.
    pub fn parse(s: &str) -> Option<Self> {
        let (n, bits) = s.split_once(':')?;
        let n: usize = n.parse().ok()?;
        if n == 0 || n > 11 || bits.len() != pairs(n) {
            return None;
        }
        let mut code = 0u64;
        for c in bits.bytes() {
            code = code << 1
                | match c {
                    b'0' => 0,
                    b'1' => 1,
                    _ => return None,
                };
        }
        Some(Self { n: n as u8, code })
    }
}

/// `n:b₁b₂…`, one character per vertex pair in column order.
impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.n)?;
        let bits = self.bits();
        let mut s = String::with_capacity(bits);
        for pos in (0..bits).rev() {
            s.push(if self.code >> pos & 1 == 1 { '1' } else { '0' });
        }
        f.write_str(&s)
    }
}

#[inline]
fn pairs(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Result of a full canonical labelling pass.
#[derive(Debug, Clone)]
pub struct Canonization {
    pub form: CanonicalForm,
    /// Number of automorphisms, i.e. relabellings that fix the graph.
    pub automorphisms: u64,
    /// `perm[p - 1]` is the original vertex placed at canonical position `p`.
    pub perm: Vec<usize>,
}

struct Canonizer<'a> {
    adj: &'a [u64],
    n: usize,
    placed: Vec<usize>,
    best: Option<u64>,
    best_perm: Vec<usize>,
    ties: u64,
}

impl Canonizer<'_> {
    fn search(&mut self, used: u64, prefix: u64) {
        let depth = self.placed.len();
        if depth == self.n {
            match self.best {
                Some(b) if prefix > b => {}
                Some(b) if prefix == b => self.ties += 1,
                _ => {
                    self.best = Some(prefix);
                    self.best_perm.clone_from(&self.placed);
                    self.ties = 1;
                }
            }
            return;
        }
        let pos = depth + 1;
        let remaining_bits = pairs(self.n) - pairs(pos);
        for v in 1..=self.n {
            if used & bit(v) != 0 {
                continue;
            }
            let mut code = prefix;
            for &u in &self.placed {
                code = code << 1 | (self.adj[v - 1] >> (u - 1) & 1);
            }
            if let Some(b) = self.best {
                if code > b >> remaining_bits {
                    continue;
                }
            }
            self.placed.push(v);
            self.search(used | bit(v), code);
            self.placed.pop();
        }
    }
}

/// Full canonical labelling: minimal code, automorphism count and a
/// minimising permutation.
pub fn canonize(g: &Graph) -> Result<Canonization, GraphError> {
    canonize_up_to(g, MAX_CANON_VERTICES)
}

/// [`canonize`] with a caller-chosen size limit, at most 11 (the code must
/// fit in 64 bits). Cost grows with `n!` in the worst case; sparse or
/// irregular graphs prune well.
pub fn canonize_up_to(g: &Graph, limit: usize) -> Result<Canonization, GraphError> {
    let n = g.n();
    let limit = limit.min(11);
    if n > limit {
        return Err(GraphError::TooLarge { n, max: limit });
    }
    let mut c =
        Canonizer { adj: g.adjacency(), n, placed: Vec::with_capacity(n), best: None, best_perm: Vec::new(), ties: 0 };
    c.search(0, 0);
    Ok(Canonization {
        form: CanonicalForm { n: n as u8, code: c.best.unwrap_or(0) },
        automorphisms: c.ties,
        perm: c.best_perm,
    })
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, GraphError> {
    canonize(g).map(|c| c.form)
}

/// One isomorphism class of `n`-vertex graphs.
#[derive(Debug, Clone)]
pub struct GraphClass {
    /// Canonically labelled representative.
    pub graph: Graph,
    pub form: CanonicalForm,
    pub automorphisms: u64,
}

impl GraphClass {
    /// Number of labelled graphs on `1..=n` in this class, `n! / |Aut|`.
    pub fn labelled_count(&self) -> u64 {
        factorial(self.graph.n()) / self.automorphisms
    }
}

pub(crate) fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// sorted by canonical code.
///
/// Classes at `n` are generated from classes at `n - 1` by attaching a new
/// vertex to every subset of the old vertices, then deduplicated by
/// canonical form. Every `n`-vertex graph arises this way from the class of
/// its subgraph with vertex `n` deleted.
pub fn enumerate_graphs(n: usize) -> Result<Vec<GraphClass>, GraphError> {
    if n == 0 {
        return Err(GraphError::NoVertices);
    }
    if n > MAX_ENUM_VERTICES {
        return Err(GraphError::TooLarge { n, max: MAX_ENUM_VERTICES });
    }
    let mut level: Vec<Graph> = vec![Graph::empty(1)?];
    for m in 2..=n {
        let mut next = BTreeSet::new();
        for g in &level {
            let mut adj: Vec<u64> = g.adjacency().to_vec();
            adj.push(0);
            for subset in 0..(1u64 << (m - 1)) {
                adj[m - 1] = subset;
                let h = Graph::from_adjacency(&adj)?;
                next.insert(canonical_form(&h)?);
            }
        }
        level = next.iter().map(CanonicalForm::to_graph).collect();
    }
    level
        .into_iter()
        .map(|graph| {
            let c = canonize(&graph)?;
            Ok(GraphClass { graph, form: c.form, automorphisms: c.automorphisms })
        })
        .collect()
}

/// An isomorphism `g → h` as `map[v - 1]`, found by backtracking over
/// degree-compatible images.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    fn go(v: usize, g: &Graph, h: &Graph, map: &mut Vec<usize>, used: u64) -> bool {
        if v > g.n() {
            return true;
        }
        for w in 1..=h.n() {
            if used & bit(w) != 0 || g.degree(v) != h.degree(w) {
                continue;
            }
            let consistent = (1..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u - 1], w));
            if consistent {
                map[v - 1] = w;
                if go(v + 1, g, h, map, used | bit(w)) {
                    return true;
                }
            }
        }
        false
    }
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    let mut map = vec![0; g.n()];
    go(1, g, h, &mut map, 0).then_some(map)
}

/// Relabels `g` by the canonical permutation, producing the graph that
/// [`CanonicalForm::to_graph`] would return.
pub fn canonical_graph(g: &Graph) -> Result<Graph, GraphError> {
    let c = canonize(g)?;
    let mut relabel = vec![0usize; g.n()];
    for (p, &v) in c.perm.iter().enumerate() {
        relabel[v - 1] = p + 1;
    }
    g.permuted(&relabel)
}
