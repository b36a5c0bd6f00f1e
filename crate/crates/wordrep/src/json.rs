//! JSON views of results. Field names here are the stable output schema.

use serde::Serialize;
use wordrep_core::orientation::{Orientation, SearchStats};
use wordrep_core::{Decision, SpeedRow};

#[derive(Debug, Serialize)]
pub struct StatsJson {
    pub nodes: u64,
    pub propagations: u64,
    pub lemma1_conflicts: u64,
    pub cycle_rejections: u64,
    pub shortcut_checks: u64,
    pub shortcut_rejections: u64,
    pub propagated: bool,
    /// `null` when no clock was read.
    pub wall_time_us: Option<u64>,
}

impl StatsJson {
    pub fn new(s: &SearchStats, propagated: bool, wall_time_us: Option<u64>) -> Self {
        Self {
            nodes: s.nodes,
            propagations: s.propagations,
            lemma1_conflicts: s.lemma1_conflicts,
            cycle_rejections: s.cycle_rejections,
            shortcut_checks: s.shortcut_checks,
            shortcut_rejections: s.shortcut_rejections,
            propagated,
            wall_time_us,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct DecisionJson {
    pub verdict: &'static str,
    pub witness: Option<Vec<[usize; 2]>>,
    pub stats: StatsJson,
}

pub fn arcs(o: &Orientation) -> Vec<[usize; 2]> {
    o.arcs().into_iter().map(|(a, b)| [a, b]).collect()
}

impl From<&Decision> for DecisionJson {
    fn from(d: &Decision) -> Self {
        Self {
            verdict: d.verdict.as_str(),
            witness: d.witness.as_ref().map(arcs),
            stats: StatsJson::new(&d.stats, d.propagated, d.wall_time.map(|t| t.as_micros() as u64)),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SpeedRowJson {
    pub n: usize,
    pub a_n: u64,
    pub b_n: u64,
    pub classes: u64,
    pub labelled_total: u64,
    /// Rounded to 6 decimals; `null` for `n = 1`.
    pub entropy: Option<f64>,
    pub nonrep_classes: Vec<String>,
}

impl From<&SpeedRow> for SpeedRowJson {
    fn from(r: &SpeedRow) -> Self {
        Self {
            n: r.n,
            a_n: r.a_n,
            b_n: r.b_n,
            classes: r.classes,
            labelled_total: r.labelled_total,
            entropy: r.entropy.map(|e| (e * 1e6).round() / 1e6),
            nonrep_classes: r.nonrep_classes.iter().map(|f| f.to_string()).collect(),
        }
    }
}
