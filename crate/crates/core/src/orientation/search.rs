//! Backtracking search over edge orientations.
//!
//! Edges are branched in stored (lexicographic) order with `Forward` tried
//! first. Every assignment, branched or forced, is rejected on the spot if
//! it closes a directed cycle among assigned arcs. On K4-free graphs the
//! 4-cycle rule runs to a fixpoint after each branch. Total orientations that
//! survive are checked for shortcuts.
//!
//! A search can be pinned to a prefix of branch decisions, which is how the
//! parallel drivers split the tree: the prefixes `0…0, 0…1, …, 1…1` visited
//! in order reproduce the sequential visiting order exactly.

use alloc::vec::Vec;

use super::propagate::{CycleTable, Effect};
use super::{find_shortcut_path, reaches, Dir, Orientation};
use crate::graph::{bit, Graph};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Branch assignments tried.
    pub nodes: u64,
    /// Arcs forced by the 4-cycle rule.
    pub propagations: u64,
    /// Branches closed by a 4-cycle with three consecutive arcs.
    pub lemma1_conflicts: u64,
    /// Assignments rejected because they closed a directed cycle.
    pub cycle_rejections: u64,
    /// Total orientations checked for shortcuts.
    pub shortcut_checks: u64,
    /// Shortcut checks that found a shortcut.
    pub shortcut_rejections: u64,
}

impl SearchStats {
    pub fn merge(&mut self, other: &SearchStats) {
        self.nodes += other.nodes;
        self.propagations += other.propagations;
        self.lemma1_conflicts += other.lemma1_conflicts;
        self.cycle_rejections += other.cycle_rejections;
        self.shortcut_checks += other.shortcut_checks;
        self.shortcut_rejections += other.shortcut_rejections;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Stop at the first semi-transitive orientation.
    First,
    /// Count all of them.
    Count,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOptions {
    /// Use the 4-cycle rule when the graph is K4-free.
    pub propagate: bool,
    /// Fix the first branched edge to `Forward`. Sound for existence since
    /// reversing a semi-transitive orientation keeps it semi-transitive;
    /// ignored in [`SearchMode::Count`].
    pub symmetry: bool,
    /// Decisions for the first branch points. A leaf reached before the
    /// prefix is used up only counts when the unused decisions are all
    /// `Forward`, so distinct prefixes never report the same orientation.
    pub prefix: Vec<Dir>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self { propagate: true, symmetry: true, prefix: Vec::new() }
    }
}

impl SearchOptions {
    pub fn counting() -> Self {
        Self { symmetry: false, ..Self::default() }
    }

    pub fn with_prefix(mut self, prefix: Vec<Dir>) -> Self {
        self.prefix = prefix;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub witness: Option<Orientation>,
    /// Solutions seen; at most one in [`SearchMode::First`].
    pub count: u64,
    pub stats: SearchStats,
    /// Whether the 4-cycle rule was active.
    pub propagated: bool,
}

struct Engine<'a> {
    g: &'a Graph,
    mode: SearchMode,
    symmetry: bool,
    prefix: &'a [Dir],
    dir: Vec<Dir>,
    out: Vec<u64>,
    trail: Vec<usize>,
    table: Option<CycleTable>,
    queue: Vec<usize>,
    stats: SearchStats,
    count: u64,
    witness: Option<Vec<Dir>>,
}

impl Engine<'_> {
    fn assign(&mut self, e: usize, d: Dir) -> bool {
        let (u, v) = self.g.edges()[e];
        let (from, to) = if d == Dir::Forward { (u, v) } else { (v, u) };
        if reaches(&self.out, to, from) {
            self.stats.cycle_rejections += 1;
            return false;
        }
        self.dir[e] = d;
        self.out[from - 1] |= bit(to);
        self.trail.push(e);
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let e = self.trail.pop().expect("trail above mark");
            let (u, v) = self.g.edges()[e];
            let (from, to) = if self.dir[e] == Dir::Forward { (u, v) } else { (v, u) };
            self.out[from - 1] &= !bit(to);
            self.dir[e] = Dir::Unassigned;
        }
    }

    /// Runs the 4-cycle rule from the edges in the queue. False on conflict.
    fn propagate(&mut self) -> bool {
        let Some(table) = self.table.take() else {
            self.queue.clear();
            return true;
        };
        let ok = self.propagate_with(&table);
        self.table = Some(table);
        self.queue.clear();
        ok
    }

    fn propagate_with(&mut self, table: &CycleTable) -> bool {
        while let Some(e) = self.queue.pop() {
            for &ci in &table.by_edge[e] {
                loop {
                    match table.cycles[ci].examine(&self.dir) {
                        None => break,
                        Some(Effect::Conflict(_)) => {
                            self.stats.lemma1_conflicts += 1;
                            return false;
                        }
                        Some(Effect::Force { edge, dir }) => {
                            self.stats.propagations += 1;
                            if !self.assign(edge, dir) {
                                return false;
                            }
                            self.queue.push(edge);
                        }
                    }
                }
            }
        }
        true
    }

    fn leaf(&mut self, depth: usize) -> bool {
        if depth < self.prefix.len() && self.prefix[depth..].iter().any(|&d| d != Dir::Forward) {
            return false;
        }
        self.stats.shortcut_checks += 1;
        if find_shortcut_path(self.g, &self.out).is_some() {
            self.stats.shortcut_rejections += 1;
            return false;
        }
        self.count += 1;
        if self.mode == SearchMode::First {
            self.witness = Some(self.dir.clone());
            return true;
        }
        false
    }

    /// Returns true to stop the whole search.
    fn dfs(&mut self, depth: usize, cursor: usize) -> bool {
        let Some(e) = (cursor..self.dir.len()).find(|&e| self.dir[e] == Dir::Unassigned) else {
            return self.leaf(depth);
        };
        let choices: &[Dir] = match self.prefix.get(depth) {
            Some(Dir::Forward) => &[Dir::Forward],
            Some(Dir::Backward) => &[Dir::Backward],
            _ => &[Dir::Forward, Dir::Backward],
        };
        for &d in choices {
            if depth == 0 && self.symmetry && d == Dir::Backward {
                continue;
            }
            self.stats.nodes += 1;
            let mark = self.trail.len();
            let ok = self.assign(e, d) && {
                self.queue.push(e);
                self.propagate()
            };
            if ok && self.dfs(depth + 1, e + 1) {
                return true;
            }
            self.undo_to(mark);
        }
        false
    }
}

/// Runs the orientation search on `g`.
pub fn search(g: &Graph, mode: SearchMode, opts: &SearchOptions) -> SearchOutcome {
    let propagated = opts.propagate && g.is_k4_free();
    let mut engine = Engine {
        g,
        mode,
        symmetry: opts.symmetry && mode == SearchMode::First,
        prefix: &opts.prefix,
        dir: alloc::vec![Dir::Unassigned; g.edge_count()],
        out: alloc::vec![0; g.n()],
        trail: Vec::with_capacity(g.edge_count()),
        table: propagated.then(|| CycleTable::new(g)),
        queue: Vec::new(),
        stats: SearchStats::default(),
        count: 0,
        witness: None,
    };
    engine.dfs(0, 0);
    let witness = engine.witness.take().map(|dir| Orientation::from_dirs(g, dir).expect("one direction per edge"));
    SearchOutcome { witness, count: engine.count, stats: engine.stats, propagated }
}
