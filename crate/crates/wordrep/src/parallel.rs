//! Multi-worker drivers with the same answers as the sequential core.
//!
//! Orientation searches are split on the first `d` branch decisions. Every
//! prefix subtree runs on its own; the success with the smallest prefix in
//! `Forward < Backward` order wins, which is exactly the witness the
//! sequential search reaches first. With one worker the core functions run
//! directly.
//!
//! Search statistics are summed over subtrees, so with more than one worker
//! they count the work actually done and may exceed the sequential figures.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use rayon::prelude::*;
use wordrep_core::census::{check_census_size, CensusError};
use wordrep_core::orientation::{
    search, Dir, Orientation, OrientationError, SearchMode, SearchOptions, SearchOutcome, SearchStats, MAX_COUNT_EDGES,
};
use wordrep_core::wordsearch::{search_k_uniform, WordSearchError, MAX_WORD_LEN};
use wordrep_core::{decide, enumerate_graphs, Decision, Graph, SpeedRow, Verdict, WordSearchResult};

use crate::results::{ResultsError, ResultsStore};

/// Longest prefix the drivers split on.
const MAX_SPLIT_DEPTH: usize = 10;

pub struct Workers {
    count: usize,
    pool: rayon::ThreadPool,
}

impl Workers {
    /// `0` means one worker per available CPU.
    pub fn new(count: usize) -> Result<Self, rayon::ThreadPoolBuildError> {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(count).build()?;
        Ok(Self { count: pool.current_num_threads(), pool })
    }

    pub fn count(&self) -> usize {
        self.count
    }

    fn split_depth(&self, g: &Graph) -> usize {
        let want = (4 * self.count).next_power_of_two().trailing_zeros() as usize + 1;
        want.min(MAX_SPLIT_DEPTH).min(g.edge_count())
    }

    /// Runs the search on every prefix of length `depth`; results are in
    /// prefix order. In `First` mode prefixes after a known success are
    /// skipped.
    fn split(&self, g: &Graph, mode: SearchMode, base: &SearchOptions, depth: usize) -> Vec<Option<SearchOutcome>> {
        let symmetric = base.symmetry && mode == SearchMode::First;
        let prefixes: Vec<Vec<Dir>> = (0..1usize << depth)
            .map(|bits| {
                (0..depth)
                    .map(|i| if bits >> (depth - 1 - i) & 1 == 1 { Dir::Backward } else { Dir::Forward })
                    .collect::<Vec<_>>()
            })
            .filter(|p| !(symmetric && p.first() == Some(&Dir::Backward)))
            .collect();
        let best = AtomicUsize::new(usize::MAX);
        self.pool.install(|| {
            prefixes
                .into_par_iter()
                .enumerate()
                .map(|(i, prefix)| {
                    if mode == SearchMode::First && i > best.load(Ordering::Relaxed) {
                        return None;
                    }
                    let out = search(g, mode, &base.clone().with_prefix(prefix));
                    if out.witness.is_some() {
                        best.fetch_min(i, Ordering::Relaxed);
                    }
                    Some(out)
                })
                .collect()
        })
    }

    /// Same result as sequential [`search`] in `First` mode.
    pub fn search_first(&self, g: &Graph, opts: &SearchOptions) -> SearchOutcome {
        if self.count == 1 || g.edge_count() == 0 {
            return search(g, SearchMode::First, opts);
        }
        let depth = self.split_depth(g);
        let mut merged = SearchOutcome { witness: None, count: 0, stats: SearchStats::default(), propagated: false };
        for out in self.split(g, SearchMode::First, opts, depth).into_iter().flatten() {
            merged.stats.merge(&out.stats);
            merged.propagated = out.propagated;
            if merged.witness.is_none() && out.witness.is_some() {
                merged.witness = out.witness;
                merged.count = 1;
            }
        }
        merged
    }

    pub fn find_semi_transitive(&self, g: &Graph) -> Option<Orientation> {
        self.search_first(g, &SearchOptions::default()).witness
    }

    pub fn count_semi_transitive(&self, g: &Graph) -> Result<u64, OrientationError> {
        if g.edge_count() > MAX_COUNT_EDGES {
            return Err(OrientationError::TooManyEdges { edges: g.edge_count(), max: MAX_COUNT_EDGES });
        }
        let opts = SearchOptions::counting();
        if self.count == 1 || g.edge_count() == 0 {
            return Ok(search(g, SearchMode::Count, &opts).count);
        }
        let depth = self.split_depth(g);
        Ok(self.split(g, SearchMode::Count, &opts, depth).into_iter().flatten().map(|o| o.count).sum())
    }

    /// [`decide`] with the search spread over the workers, timed.
    pub fn decide(&self, g: &Graph) -> Decision {
        let start = Instant::now();
        let mut d = if self.count == 1 || g.is_complete() {
            decide(g)
        } else {
            Decision::from_outcome(self.search_first(g, &SearchOptions::default()))
        };
        d.wall_time = Some(start.elapsed());
        d
    }

    /// Tries every `k` in `1..=k_max` concurrently and keeps the smallest
    /// success. `nodes` counts the searches up to and including that `k`.
    pub fn find_word(&self, g: &Graph, k_max: usize) -> Result<WordSearchResult, WordSearchError> {
        if k_max == 0 {
            return Err(WordSearchError::ZeroMultiplicity);
        }
        if g.n() * k_max > MAX_WORD_LEN {
            return Err(WordSearchError::TooLarge { n: g.n(), k: k_max, max: MAX_WORD_LEN });
        }
        if self.count == 1 {
            return wordrep_core::find_word(g, k_max);
        }
        let found = AtomicUsize::new(usize::MAX);
        let runs: Vec<_> = self.pool.install(|| {
            (1..=k_max)
                .into_par_iter()
                .map(|k| {
                    if k > found.load(Ordering::Relaxed) {
                        return None;
                    }
                    let r = search_k_uniform(g, k).expect("size checked");
                    if r.0.is_some() {
                        found.fetch_min(k, Ordering::Relaxed);
                    }
                    Some(r)
                })
                .collect()
        });
        let mut nodes = 0;
        for (i, run) in runs.into_iter().enumerate() {
            let (word, used) = run.expect("every k up to the first success runs");
            nodes += used;
            if word.is_some() {
                return Ok(WordSearchResult { word, k_tried: i + 1, nodes });
            }
        }
        Ok(WordSearchResult { word: None, k_tried: k_max, nodes })
    }

    /// Census with one task per isomorphism class. Classes already in
    /// `store` are not decided again; new verdicts are appended to it.
    pub fn census(
        &self,
        n: usize,
        long_run: bool,
        store: Option<&mut ResultsStore>,
    ) -> Result<SpeedRow, CensusRunError> {
        check_census_size(n, long_run)?;
        let classes = enumerate_graphs(n).map_err(CensusError::from)?;
        let known: Vec<Option<Verdict>> = match &store {
            Some(s) => classes.iter().map(|c| s.lookup(c)).collect::<Result<_, _>>()?,
            None => vec![None; classes.len()],
        };
        let fresh: Vec<Option<Verdict>> = self.pool.install(|| {
            classes
                .par_iter()
                .zip(&known)
                .map(|(c, k)| if k.is_some() { None } else { Some(decide(&c.graph).verdict) })
                .collect()
        });
        if let Some(s) = store {
            for (c, v) in classes.iter().zip(&fresh) {
                if let Some(v) = v {
                    s.record(c, *v)?;
                }
            }
        }
        let verdicts = known.iter().zip(&fresh).map(|(k, f)| k.or(*f).expect("decided or stored"));
        Ok(SpeedRow::from_verdicts(n, classes.iter().zip(verdicts)))
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CensusRunError {
    #[error(transparent)]
    Census(#[from] CensusError),
    #[error(transparent)]
    Results(#[from] ResultsError),
}
