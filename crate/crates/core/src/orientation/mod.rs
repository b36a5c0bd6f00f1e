//! Edge orientations, semi-transitivity, and the orientation search.
//!
//! An orientation assigns each edge `(u, v)` of a graph (stored with `u < v`)
//! one of [`Dir::Forward`] (`u → v`), [`Dir::Backward`] (`v → u`) or
//! [`Dir::Unassigned`]. A total orientation is semi-transitive when it is
//! acyclic and has no shortcut: no arc `u → v` together with a directed path
//! from `u` to `v` of three or more arcs whose vertices are not pairwise
//! adjacent.

mod propagate;
mod search;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{bit, vertices_of, Graph, VertexColoring};

pub use propagate::{lemma1_propagate, Propagation};
pub use search::{search, SearchMode, SearchOptions, SearchOutcome, SearchStats};

/// Most edges [`count_semi_transitive`] and the naive enumerators accept.
pub const MAX_COUNT_EDGES: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dir {
    /// `u → v` for the stored edge `(u, v)`, `u < v`.
    Forward,
    Backward,
    Unassigned,
}

impl Dir {
    pub fn flipped(self) -> Self {
        match self {
            Dir::Forward => Dir::Backward,
            Dir::Backward => Dir::Forward,
            Dir::Unassigned => Dir::Unassigned,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OrientationError {
    #[error("operation requires a total orientation")]
    PartialOrientation,
    #[error("operation requires an acyclic orientation")]
    CyclicInput,
    #[error("graph contains K4; the 4-cycle rule does not apply")]
    NotK4Free,
    #[error("edge {u}-{v} is monochromatic")]
    ImproperColoring { u: usize, v: usize },
    #[error("coloring uses {colors} colors, at most 3 allowed")]
    TooManyColors { colors: usize },
    #[error("coloring covers {got} vertices, graph has {expected}")]
    ColoringSize { expected: usize, got: usize },
    #[error("{edges} edges exceeds the limit of {max}")]
    TooManyEdges { edges: usize, max: usize },
    #[error("{u}-{v} is not an edge")]
    NotAnEdge { u: usize, v: usize },
    #[error("expected {expected} directions, got {got}")]
    LengthMismatch { expected: usize, got: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConflictKind {
    DirectedCycle,
    Shortcut,
    Lemma1Cycle,
}

/// A violation found in an orientation, with the vertices that witness it:
/// the cycle for [`ConflictKind::DirectedCycle`], the directed path
/// `v1 … vk` under the arc `v1 → vk` for [`ConflictKind::Shortcut`], and the
/// four cycle vertices in arc order for [`ConflictKind::Lemma1Cycle`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conflict {
    pub kind: ConflictKind,
    pub witness: Vec<usize>,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Orientation {
    base: Graph,
    dir: Vec<Dir>,
}

impl Orientation {
    pub fn unassigned(g: &Graph) -> Self {
        Self { base: g.clone(), dir: vec![Dir::Unassigned; g.edge_count()] }
    }

    /// Every edge `(u, v)` oriented `u → v`. On a complete graph this is the
    /// transitive tournament of the order `1 < 2 < … < n`.
    pub fn by_label_order(g: &Graph) -> Self {
        Self { base: g.clone(), dir: vec![Dir::Forward; g.edge_count()] }
    }

    pub fn from_dirs(g: &Graph, dir: Vec<Dir>) -> Result<Self, OrientationError> {
        if dir.len() != g.edge_count() {
            return Err(OrientationError::LengthMismatch { expected: g.edge_count(), got: dir.len() });
        }
        Ok(Self { base: g.clone(), dir })
    }

    /// Orients the listed arcs `from → to`; unlisted edges stay unassigned.
    pub fn from_arcs<I>(g: &Graph, arcs: I) -> Result<Self, OrientationError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut o = Self::unassigned(g);
        for (from, to) in arcs {
            o.orient(from, to)?;
        }
        Ok(o)
    }

    /// Total orientation where bit `i` of `mask` reverses edge `i`.
    pub fn from_mask(g: &Graph, mask: u64) -> Self {
        let dir = (0..g.edge_count()).map(|i| if mask >> i & 1 == 1 { Dir::Backward } else { Dir::Forward }).collect();
        Self { base: g.clone(), dir }
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn dirs(&self) -> &[Dir] {
        &self.dir
    }

    pub fn dir(&self, edge: usize) -> Dir {
        self.dir[edge]
    }

    pub fn set(&mut self, edge: usize, d: Dir) {
        self.dir[edge] = d;
    }

    /// Sets the edge between `from` and `to` to point `from → to`.
    pub fn orient(&mut self, from: usize, to: usize) -> Result<(), OrientationError> {
        let e = self.base.edge_index(from, to).ok_or(OrientationError::NotAnEdge { u: from, v: to })?;
        self.dir[e] = if from < to { Dir::Forward } else { Dir::Backward };
        Ok(())
    }

    pub fn is_total(&self) -> bool {
        !self.dir.contains(&Dir::Unassigned)
    }

    pub fn assigned_count(&self) -> usize {
        self.dir.iter().filter(|&&d| d != Dir::Unassigned).count()
    }

    /// The arc on edge `edge` as `(from, to)`, if assigned.
    pub fn arc(&self, edge: usize) -> Option<(usize, usize)> {
        let (u, v) = self.base.edges()[edge];
        match self.dir[edge] {
            Dir::Forward => Some((u, v)),
            Dir::Backward => Some((v, u)),
            Dir::Unassigned => None,
        }
    }

    /// Assigned arcs in stored edge order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.dir.len()).filter_map(|e| self.arc(e)).collect()
    }

    /// Out-neighbour masks over assigned arcs, indexed by `v - 1`.
    pub fn out_masks(&self) -> Vec<u64> {
        let mut out = vec![0u64; self.base.n()];
        for (from, to) in self.arcs() {
            out[from - 1] |= bit(to);
        }
        out
    }

    fn require_total(&self) -> Result<(), OrientationError> {
        if self.is_total() {
            Ok(())
        } else {
            Err(OrientationError::PartialOrientation)
        }
    }

    pub fn is_acyclic(&self) -> Result<bool, OrientationError> {
        Ok(self.directed_cycle()?.is_none())
    }

    /// Some directed cycle as its vertex sequence, if one exists.
    pub fn directed_cycle(&self) -> Result<Option<Vec<usize>>, OrientationError> {
        self.require_total()?;
        Ok(directed_cycle(&self.out_masks()))
    }

    /// The first shortcut in stored edge order, if any.
    pub fn find_shortcut(&self) -> Result<Option<Conflict>, OrientationError> {
        self.require_total()?;
        let out = self.out_masks();
        if directed_cycle(&out).is_some() {
            return Err(OrientationError::CyclicInput);
        }
        Ok(find_shortcut_path(&self.base, &out).map(|witness| Conflict { kind: ConflictKind::Shortcut, witness }))
    }

    pub fn is_semi_transitive(&self) -> Result<bool, OrientationError> {
        self.require_total()?;
        let out = self.out_masks();
        Ok(directed_cycle(&out).is_none() && find_shortcut_path(&self.base, &out).is_none())
    }

    /// Every arc flipped.
    pub fn reversed(&self) -> Result<Self, OrientationError> {
        self.require_total()?;
        Ok(Self { base: self.base.clone(), dir: self.dir.iter().map(|d| d.flipped()).collect() })
    }
}

/// `u v >` per assigned arc, `u v ?` per unassigned edge.
impl fmt::Debug for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Orientation[")?;
        for e in 0..self.dir.len() {
            if e > 0 {
                f.write_str(", ")?;
            }
            match self.arc(e) {
                Some((a, b)) => write!(f, "{a}>{b}")?,
                None => {
                    let (u, v) = self.base.edges()[e];
                    write!(f, "{u}?{v}")?
                }
            }
        }
        f.write_str("]")
    }
}

/// Whether `target` is reachable from `from` along arcs of `out`.
pub(crate) fn reaches(out: &[u64], from: usize, target: usize) -> bool {
    let goal = bit(target);
    let mut seen = bit(from);
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in vertices_of(frontier) {
            next |= out[v - 1];
        }
        if next & goal != 0 {
            return true;
        }
        frontier = next & !seen;
        seen |= next;
    }
    false
}

fn directed_cycle(out: &[u64]) -> Option<Vec<usize>> {
    // 0 = unvisited, 1 = on stack, 2 = done
    fn visit(v: usize, out: &[u64], state: &mut [u8], stack: &mut Vec<usize>) -> Option<Vec<usize>> {
        state[v - 1] = 1;
        stack.push(v);
        for w in vertices_of(out[v - 1]) {
            match state[w - 1] {
                1 => {
                    let start = stack.iter().position(|&x| x == w).expect("w is on the stack");
                    return Some(stack[start..].to_vec());
                }
                0 => {
                    if let Some(c) = visit(w, out, state, stack) {
                        return Some(c);
                    }
                }
                _ => {}
            }
        }
        stack.pop();
        state[v - 1] = 2;
        None
    }
    let mut state = vec![0u8; out.len()];
    let mut stack = Vec::new();
    for v in 1..=out.len() {
        if state[v - 1] == 0 {
            if let Some(c) = visit(v, out, &mut state, &mut stack) {
                return Some(c);
            }
        }
    }
    None
}

/// Searches an acyclic orientation for an arc `u → v` and a directed
/// `u ⇝ v` path of at least three arcs that is not a clique, returning the
/// path `u … v`.
///
/// Paths are grown from `u` only through vertices that still reach `v`. A
/// clique path is extended; the first non-clique prefix that can still reach
/// `v` is completed by any directed path and is a violation, since a
/// non-clique prefix already has three vertices.
pub(crate) fn find_shortcut_path(g: &Graph, out: &[u64]) -> Option<Vec<usize>> {
    let desc = descendants(out);
    let adj = g.adjacency();
    for &(a, b) in g.edges() {
        let (u, v) = if out[a - 1] & bit(b) != 0 { (a, b) } else { (b, a) };
        let mut path = vec![u];
        if let Some(p) = extend(u, v, bit(u), &mut path, out, adj, &desc) {
            return Some(p);
        }
    }
    None
}

fn extend(
    last: usize,
    target: usize,
    path_mask: u64,
    path: &mut Vec<usize>,
    out: &[u64],
    adj: &[u64],
    desc: &[u64],
) -> Option<Vec<usize>> {
    for w in vertices_of(out[last - 1]) {
        let toward = w == target || desc[w - 1] & bit(target) != 0;
        if !toward || (w == target && path.len() == 1) {
            continue;
        }
        let clique = adj[w - 1] & path_mask == path_mask;
        if !clique {
            let mut witness = path.clone();
            witness.push(w);
            if w != target {
                witness.extend(directed_path(out, w, target).into_iter().skip(1));
            }
            return Some(witness);
        }
        if w != target {
            path.push(w);
            let found = extend(w, target, path_mask | bit(w), path, out, adj, desc);
            path.pop();
            if found.is_some() {
                return found;
            }
        }
    }
    None
}

/// `desc[v - 1]`: vertices reachable from `v` by at least one arc.
fn descendants(out: &[u64]) -> Vec<u64> {
    let n = out.len();
    let mut desc = out.to_vec();
    loop {
        let mut changed = false;
        for v in 0..n {
            let mut d = desc[v];
            for w in vertices_of(desc[v]) {
                d |= desc[w - 1];
            }
            if d != desc[v] {
                desc[v] = d;
                changed = true;
            }
        }
        if !changed {
            return desc;
        }
    }
}

/// Some directed path `from ⇝ to`; caller guarantees one exists.
fn directed_path(out: &[u64], from: usize, to: usize) -> Vec<usize> {
    let mut parent = vec![0usize; out.len()];
    let mut seen = bit(from);
    let mut frontier = vec![from];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &v in &frontier {
            for w in vertices_of(out[v - 1] & !seen) {
                seen |= bit(w);
                parent[w - 1] = v;
                next.push(w);
            }
        }
        if seen & bit(to) != 0 {
            break;
        }
        frontier = next;
    }
    let mut path = vec![to];
    while *path.last().expect("nonempty") != from {
        let p = parent[path.last().expect("nonempty") - 1];
        path.push(p);
    }
    path.reverse();
    path
}

/// Orients every edge from the lower colour class to the higher one.
pub fn orient_by_coloring(g: &Graph, coloring: &VertexColoring) -> Result<Orientation, OrientationError> {
    if coloring.len() != g.n() {
        return Err(OrientationError::ColoringSize { expected: g.n(), got: coloring.len() });
    }
    let colors = coloring.num_colors();
    if colors > 3 {
        return Err(OrientationError::TooManyColors { colors });
    }
    if let Some((u, v)) = coloring.monochromatic_edge(g) {
        return Err(OrientationError::ImproperColoring { u, v });
    }
    let dir = g
        .edges()
        .iter()
        .map(|&(u, v)| if coloring.color(u) < coloring.color(v) { Dir::Forward } else { Dir::Backward })
        .collect();
    Ok(Orientation { base: g.clone(), dir })
}

/// A semi-transitive orientation of `g`, if one exists. Deterministic: the
/// first solution in lexicographic edge order with `Forward` tried first.
pub fn find_semi_transitive(g: &Graph) -> Option<Orientation> {
    search(g, SearchMode::First, &SearchOptions::default()).witness
}

/// Exact number of semi-transitive orientations of `g`.
pub fn count_semi_transitive(g: &Graph) -> Result<u64, OrientationError> {
    check_count_size(g)?;
    Ok(search(g, SearchMode::Count, &SearchOptions::counting()).count)
}

fn check_count_size(g: &Graph) -> Result<(), OrientationError> {
    if g.edge_count() > MAX_COUNT_EDGES {
        return Err(OrientationError::TooManyEdges { edges: g.edge_count(), max: MAX_COUNT_EDGES });
    }
    Ok(())
}

/// Counts semi-transitive orientations by testing all `2^m` total
/// orientations, with no pruning or propagation.
pub fn count_semi_transitive_naive(g: &Graph) -> Result<u64, OrientationError> {
    check_count_size(g)?;
    let mut count = 0;
    for mask in 0..1u64 << g.edge_count() {
        if Orientation::from_mask(g, mask).is_semi_transitive()? {
            count += 1;
        }
    }
    Ok(count)
}
