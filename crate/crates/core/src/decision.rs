//! Representability verdicts with checkable certificates.
//!
//! A graph is word-representable iff it has a semi-transitive orientation,
//! so a positive verdict carries one and a negative verdict carries the
//! statistics of the exhaustive orientation search that found none.

use core::time::Duration;

use crate::graph::Graph;
use crate::orientation::{
    count_semi_transitive_naive, search, Orientation, SearchMode, SearchOptions, SearchOutcome, SearchStats,
};

/// Largest edge count for which a negative verdict can be re-checked by
/// enumerating every orientation.
pub const MAX_VERIFY_EDGES: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Representable,
    NonRepresentable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Representable => "Representable",
            Verdict::NonRepresentable => "NonRepresentable",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "Representable" => Some(Verdict::Representable),
            "NonRepresentable" => Some(Verdict::NonRepresentable),
            _ => None,
        }
    }
}

impl core::fmt::Display for Verdict {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub verdict: Verdict,
    /// A semi-transitive orientation when representable.
    pub witness: Option<Orientation>,
    pub stats: SearchStats,
    /// Whether the 4-cycle rule took part in the search.
    pub propagated: bool,
    /// Set by callers that can read a clock.
    pub wall_time: Option<Duration>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecisionError {
    #[error("cannot re-check a negative verdict on {edges} edges (limit {max})")]
    TooLargeToVerify { edges: usize, max: usize },
}

impl Decision {
    pub fn is_representable(&self) -> bool {
        self.verdict == Verdict::Representable
    }

    pub fn from_outcome(outcome: SearchOutcome) -> Self {
        let verdict = if outcome.witness.is_some() { Verdict::Representable } else { Verdict::NonRepresentable };
        Self {
            verdict,
            witness: outcome.witness,
            stats: outcome.stats,
            propagated: outcome.propagated,
            wall_time: None,
        }
    }
}

/// Decides word-representability of `g`.
///
/// Complete graphs are answered directly with the transitive tournament of
/// the label order; everything else goes through the orientation search.
pub fn decide(g: &Graph) -> Decision {
    decide_with(g, &SearchOptions::default())
}

pub fn decide_with(g: &Graph, opts: &SearchOptions) -> Decision {
    if g.is_complete() {
        return Decision {
            verdict: Verdict::Representable,
            witness: Some(Orientation::by_label_order(g)),
            stats: SearchStats::default(),
            propagated: false,
            wall_time: None,
        };
    }
    Decision::from_outcome(search(g, SearchMode::First, opts))
}

/// Re-checks a decision independently of the search that produced it.
///
/// Positive verdicts are re-checked by testing the witness for
/// semi-transitivity. Negative verdicts are re-checked by testing all `2^m`
/// orientations, which is only done for `m <= 14`.
pub fn verify_certificate(g: &Graph, d: &Decision) -> Result<bool, DecisionError> {
    match d.verdict {
        Verdict::Representable => Ok(match &d.witness {
            Some(w) => w.base() == g && w.is_semi_transitive() == Ok(true),
            None => false,
        }),
        Verdict::NonRepresentable => {
            if d.witness.is_some() {
                return Ok(false);
            }
            if g.edge_count() > MAX_VERIFY_EDGES {
                return Err(DecisionError::TooLargeToVerify { edges: g.edge_count(), max: MAX_VERIFY_EDGES });
            }
            Ok(count_semi_transitive_naive(g).expect("edge count below limit") == 0)
        }
    }
}
