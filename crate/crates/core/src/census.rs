//! Counting representable graphs on `n` vertices.
//!
//! Each isomorphism class is decided once; its labelled multiplicity comes
//! from the orbit-stabiliser count `n! / |Aut|`.

use alloc::vec::Vec;

use crate::canon::{enumerate_graphs, CanonicalForm, GraphClass, MAX_ENUM_VERTICES};
use crate::decision::{decide, Verdict};
use crate::graph::GraphError;

/// Largest `n` for a census without opting into long runs.
pub const MAX_CENSUS_VERTICES: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CensusError {
    #[error("census for n = {n} is not supported (maximum {max})")]
    TooLarge { n: usize, max: usize },
    #[error("census for n = {n} is long-running and must be requested explicitly")]
    NeedsLongRun { n: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpeedRow {
    pub n: usize,
    /// Representable isomorphism classes.
    pub a_n: u64,
    /// Representable labelled graphs on `1..=n`.
    pub b_n: u64,
    /// All isomorphism classes on `n` vertices.
    pub classes: u64,
    /// `2^C(n,2)`.
    pub labelled_total: u64,
    /// `log2(b_n) / C(n,2)`, undefined for `n = 1`.
    pub entropy: Option<f64>,
    /// Canonical forms of the non-representable classes, ascending.
    pub nonrep_classes: Vec<CanonicalForm>,
}

impl SpeedRow {
    /// Aggregates per-class verdicts. Order of `verdicts` does not matter.
    pub fn from_verdicts<'a, I>(n: usize, verdicts: I) -> Self
    where
        I: IntoIterator<Item = (&'a GraphClass, Verdict)>,
    {
        let mut row = SpeedRow {
            n,
            a_n: 0,
            b_n: 0,
            classes: 0,
            labelled_total: 1u64 << pairs(n),
            entropy: None,
            nonrep_classes: Vec::new(),
        };
        for (class, verdict) in verdicts {
            row.classes += 1;
            match verdict {
                Verdict::Representable => {
                    row.a_n += 1;
                    row.b_n += class.labelled_count();
                }
                Verdict::NonRepresentable => row.nonrep_classes.push(class.form),
            }
        }
        row.nonrep_classes.sort_unstable();
        row.entropy = entropy(n, row.b_n);
        row
    }

    /// Labelled graphs outside the class, `2^C(n,2) - b_n`.
    pub fn deficit(&self) -> u64 {
        self.labelled_total - self.b_n
    }
}

fn pairs(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub fn entropy(n: usize, b_n: u64) -> Option<f64> {
    if n < 2 || b_n == 0 {
        return None;
    }
    Some(libm::log2(b_n as f64) / pairs(n) as f64)
}

/// Checks the size gate shared by [`census`] and [`entropy_table`].
pub fn check_census_size(n: usize, long_run: bool) -> Result<(), CensusError> {
    if n == 0 || n > MAX_ENUM_VERTICES {
        return Err(CensusError::TooLarge { n, max: MAX_ENUM_VERTICES });
    }
    if n > MAX_CENSUS_VERTICES && !long_run {
        return Err(CensusError::NeedsLongRun { n });
    }
    Ok(())
}

/// Exact counts for `n` vertices. `n = 7` needs `long_run`.
pub fn census(n: usize, long_run: bool) -> Result<SpeedRow, CensusError> {
    check_census_size(n, long_run)?;
    let classes = enumerate_graphs(n)?;
    Ok(SpeedRow::from_verdicts(n, classes.iter().map(|c| (c, decide(&c.graph).verdict))))
}

/// Rows for `n = 2..=n_max`.
pub fn entropy_table(n_max: usize, long_run: bool) -> Result<Vec<SpeedRow>, CensusError> {
    check_census_size(n_max, long_run)?;
    (2..=n_max).map(|n| census(n, long_run)).collect()
}
