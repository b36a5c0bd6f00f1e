//! Bounded search for k-uniform representing words.
//!
//! Words are built left to right, trying letters in increasing label order.
//! For each letter pair the search tracks whether the pair has stopped
//! alternating ("broken"). A branch dies as soon as an edge pair breaks, or
//! a non-edge pair can no longer break given the occurrences left: with `x`
//! the most recent of the two, the pair can still break iff `x` has an
//! occurrence left (`…xx`) or `y` has at least two (`…yy`).

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{bit, vertices_of, Graph};
use crate::word::Word;

/// Longest word the search will build.
pub const MAX_WORD_LEN: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WordSearchError {
    #[error("multiplicity must be at least 1")]
    ZeroMultiplicity,
    #[error("{n} letters x {k} occurrences exceeds the word length limit of {max}")]
    TooLarge { n: usize, k: usize, max: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordSearchResult {
    pub word: Option<Word>,
    /// Uniformity of `word` when found, otherwise the largest `k` tried.
    pub k_tried: usize,
    pub nodes: u64,
}

struct Engine<'a> {
    adj: &'a [u64],
    n: usize,
    k: usize,
    count: Vec<usize>,
    last: Vec<Option<usize>>,
    broken: Vec<u64>,
    word: Vec<usize>,
    nodes: u64,
}

impl Engine<'_> {
    fn dfs(&mut self) -> bool {
        let pos = self.word.len();
        if pos == self.n * self.k {
            return true;
        }
        for x in 1..=self.n {
            if self.count[x - 1] == self.k {
                continue;
            }
            self.nodes += 1;
            let mut newly = 0u64;
            if let Some(px) = self.last[x - 1] {
                for y in 1..=self.n {
                    if y != x && self.last[y - 1].is_none_or(|py| py < px) {
                        newly |= bit(y);
                    }
                }
                newly &= !self.broken[x - 1];
            }
            if newly & self.adj[x - 1] != 0 {
                continue;
            }

            let prev_last = self.last[x - 1];
            self.count[x - 1] += 1;
            self.last[x - 1] = Some(pos);
            self.broken[x - 1] |= newly;
            for y in vertices_of(newly) {
                self.broken[y - 1] |= bit(x);
            }
            self.word.push(x);

            let left_x = self.k - self.count[x - 1];
            let open = !self.adj[x - 1] & !self.broken[x - 1] & !bit(x) & crate::graph::full_mask(self.n);
            let dead = left_x == 0 && vertices_of(open).any(|y| self.k - self.count[y - 1] <= 1);

            if !dead && self.dfs() {
                return true;
            }

            self.word.pop();
            for y in vertices_of(newly) {
                self.broken[y - 1] &= !bit(x);
            }
            self.broken[x - 1] &= !newly;
            self.last[x - 1] = prev_last;
            self.count[x - 1] -= 1;
        }
        false
    }
}

/// [`find_k_uniform_word`] together with the number of search nodes.
pub fn search_k_uniform(g: &Graph, k: usize) -> Result<(Option<Word>, u64), WordSearchError> {
    if k == 0 {
        return Err(WordSearchError::ZeroMultiplicity);
    }
    let n = g.n();
    if n * k > MAX_WORD_LEN {
        return Err(WordSearchError::TooLarge { n, k, max: MAX_WORD_LEN });
    }
    let mut e = Engine {
        adj: g.adjacency(),
        n,
        k,
        count: vec![0; n],
        last: vec![None; n],
        broken: vec![0; n],
        word: Vec::with_capacity(n * k),
        nodes: 0,
    };
    let word = if e.dfs() { Some(Word::new(e.word).expect("letters are positive")) } else { None };
    Ok((word, e.nodes))
}

/// A word in which every vertex of `g` occurs exactly `k` times and whose
/// alternating pairs are exactly the edges of `g`, if one exists.
pub fn find_k_uniform_word(g: &Graph, k: usize) -> Result<Option<Word>, WordSearchError> {
    search_k_uniform(g, k).map(|(w, _)| w)
}

/// Tries `k = 1, 2, …, k_max` and returns the first success.
pub fn find_word(g: &Graph, k_max: usize) -> Result<WordSearchResult, WordSearchError> {
    if k_max == 0 {
        return Err(WordSearchError::ZeroMultiplicity);
    }
    if g.n() * k_max > MAX_WORD_LEN {
        return Err(WordSearchError::TooLarge { n: g.n(), k: k_max, max: MAX_WORD_LEN });
    }
    let mut nodes = 0;
    for k in 1..=k_max {
        let (word, used) = search_k_uniform(g, k)?;
        nodes += used;
        if word.is_some() {
            return Ok(WordSearchResult { word, k_tried: k, nodes });
        }
    }
    Ok(WordSearchResult { word: None, k_tried: k_max, nodes })
}
