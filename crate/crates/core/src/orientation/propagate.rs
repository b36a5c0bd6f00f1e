//! The 4-cycle forcing rule.
//!
//! In a semi-transitive orientation of a K4-free graph no 4-cycle carries
//! three consecutively oriented edges. Read as a constraint: whenever two
//! edges among three consecutive positions of a 4-cycle already point the
//! same way along the cycle, the third must point the other way.

use alloc::vec;
use alloc::vec::Vec;

use super::{Conflict, ConflictKind, Dir, Orientation, OrientationError};
use crate::graph::Graph;

/// A 4-cycle `v0 v1 v2 v3` with the edge joining `v_i` and `v_{i+1}` at
/// position `i`.
#[derive(Debug, Clone)]
pub(crate) struct Cycle4 {
    verts: [usize; 4],
    edge: [usize; 4],
    /// `v_i < v_{i+1}`, so `Forward` on the stored edge runs along the cycle.
    aligned: [bool; 4],
}

pub(crate) enum Effect {
    Force { edge: usize, dir: Dir },
    Conflict(Conflict),
}

impl Cycle4 {
    /// `Some(true)` when position `i` points `v_i → v_{i+1}`.
    #[inline]
    fn along(&self, i: usize, dirs: &[Dir]) -> Option<bool> {
        match dirs[self.edge[i]] {
            Dir::Unassigned => None,
            d => Some((d == Dir::Forward) == self.aligned[i]),
        }
    }

    /// First forcing or violation on this cycle, scanning the four windows
    /// of three consecutive positions.
    pub(crate) fn examine(&self, dirs: &[Dir]) -> Option<Effect> {
        let s = [0, 1, 2, 3].map(|i| self.along(i, dirs));
        for t in 0..4 {
            let win = [t, (t + 1) % 4, (t + 2) % 4];
            let vals = win.map(|i| s[i]);
            match vals {
                [Some(a), Some(b), Some(c)] if a == b && b == c => {
                    let mut witness: Vec<usize> = (0..4).map(|k| self.verts[(t + k) % 4]).collect();
                    if !a {
                        witness.reverse();
                    }
                    return Some(Effect::Conflict(Conflict { kind: ConflictKind::Lemma1Cycle, witness }));
                }
                _ => {}
            }
            let assigned: Vec<bool> = vals.iter().flatten().copied().collect();
            if assigned.len() == 2 && assigned[0] == assigned[1] {
                let hole = win[vals.iter().position(Option::is_none).expect("one unassigned")];
                let want_along = !assigned[0];
                let dir = if want_along == self.aligned[hole] { Dir::Forward } else { Dir::Backward };
                return Some(Effect::Force { edge: self.edge[hole], dir });
            }
        }
        None
    }
}

/// All 4-cycles of a graph, indexed by the edges they contain.
#[derive(Debug, Clone)]
pub(crate) struct CycleTable {
    pub(crate) cycles: Vec<Cycle4>,
    pub(crate) by_edge: Vec<Vec<usize>>,
}

impl CycleTable {
    pub(crate) fn new(g: &Graph) -> Self {
        let mut by_edge = vec![Vec::new(); g.edge_count()];
        let cycles: Vec<Cycle4> = g
            .four_cycles()
            .into_iter()
            .map(|verts| {
                let mut edge = [0; 4];
                let mut aligned = [false; 4];
                for i in 0..4 {
                    let (a, b) = (verts[i], verts[(i + 1) % 4]);
                    edge[i] = g.edge_index(a, b).expect("cycle edges exist");
                    aligned[i] = a < b;
                }
                Cycle4 { verts, edge, aligned }
            })
            .collect();
        for (ci, c) in cycles.iter().enumerate() {
            for &e in &c.edge {
                by_edge[e].push(ci);
            }
        }
        Self { cycles, by_edge }
    }
}

/// Outcome of running the rule to a fixpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Propagation {
    /// No violation; `forced` lists the arcs `(from, to)` the rule added, in
    /// the order it added them.
    Fixpoint {
        orientation: Orientation,
        forced: Vec<(usize, usize)>,
    },
    Conflict(Conflict),
}

/// Applies the 4-cycle rule to a partial orientation until nothing changes.
///
/// Only sound on K4-free graphs; anything else is rejected. Acyclicity is
/// not checked here.
pub fn lemma1_propagate(o: &Orientation) -> Result<Propagation, OrientationError> {
    let g = o.base();
    if !g.is_k4_free() {
        return Err(OrientationError::NotK4Free);
    }
    let table = CycleTable::new(g);
    let mut result = o.clone();
    let mut forced = Vec::new();
    let mut queue: Vec<usize> = (0..table.cycles.len()).rev().collect();
    while let Some(ci) = queue.pop() {
        match table.cycles[ci].examine(result.dirs()) {
            None => {}
            Some(Effect::Conflict(c)) => return Ok(Propagation::Conflict(c)),
            Some(Effect::Force { edge, dir }) => {
                result.set(edge, dir);
                forced.push(result.arc(edge).expect("just assigned"));
                // re-examine this cycle last so any second forcing on it is found
                for &other in table.by_edge[edge].iter().rev() {
                    queue.push(other);
                }
                queue.push(ci);
            }
        }
    }
    Ok(Propagation::Fixpoint { orientation: result, forced })
}
