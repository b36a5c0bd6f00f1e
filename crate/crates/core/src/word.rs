//! Words over vertex labels and the alternation relation.
//!
//! Two distinct letters alternate in a word when deleting every other letter
//! leaves `xyxy…` or `yxyx…`. A word over `{1..n}` represents the graph on
//! `1..=n` whose edges are exactly its alternating pairs.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::graph::{Graph, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WordError {
    #[error("empty word")]
    Empty,
    #[error("label 0 at column {column}; labels start at 1")]
    ZeroLabel { column: usize },
    #[error("unexpected {found:?} at column {column}")]
    Syntax { column: usize, found: char },
    #[error("unclosed parenthesis opened at column {column}")]
    UnclosedParen { column: usize },
    #[error("label too large at column {column}")]
    LabelOverflow { column: usize },
    #[error("letters must be distinct, got {0} twice")]
    SameLetter(usize),
    #[error("letter {0} does not occur in the word")]
    NotInAlphabet(usize),
    #[error("alphabet is not contiguous: {missing} is missing below {max}")]
    NonContiguousAlphabet { missing: usize, max: usize },
    #[error("word alphabet is {{1..{word}}} but the graph has {graph} vertices")]
    AlphabetMismatch { word: usize, graph: usize },
    #[error("alphabet of size {0} is too large")]
    TooLarge(usize),
}

/// A nonempty sequence of positive labels.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<usize>,
}

impl Word {
    pub fn new(letters: Vec<usize>) -> Result<Self, WordError> {
        if letters.is_empty() {
            return Err(WordError::Empty);
        }
        if let Some(i) = letters.iter().position(|&l| l == 0) {
            return Err(WordError::ZeroLabel { column: i + 1 });
        }
        Ok(Self { letters })
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Distinct letters, ascending.
    pub fn alphabet(&self) -> Vec<usize> {
        let mut a = self.letters.clone();
        a.sort_unstable();
        a.dedup();
        a
    }

    pub fn contains(&self, x: usize) -> bool {
        self.letters.contains(&x)
    }

    pub fn occurrences(&self, x: usize) -> usize {
        self.letters.iter().filter(|&&l| l == x).count()
    }

    /// Whether `x` and `y` alternate in this word.
    pub fn alternates(&self, x: usize, y: usize) -> Result<bool, WordError> {
        if x == y {
            return Err(WordError::SameLetter(x));
        }
        for l in [x, y] {
            if !self.contains(l) {
                return Err(WordError::NotInAlphabet(l));
            }
        }
        let mut prev = None;
        for &l in self.letters.iter().filter(|&&l| l == x || l == y) {
            if prev == Some(l) {
                return Ok(false);
            }
            prev = Some(l);
        }
        Ok(true)
    }

    /// The size `n` of the alphabet when it is exactly `{1..n}`.
    pub fn contiguous_alphabet(&self) -> Result<usize, WordError> {
        let alpha = self.alphabet();
        let max = *alpha.last().expect("word is nonempty");
        if let Some(missing) = (1..=max).zip(alpha.iter()).find(|(i, &l)| *i != l).map(|(i, _)| i) {
            return Err(WordError::NonContiguousAlphabet { missing, max });
        }
        Ok(max)
    }

    /// The graph whose edges are this word's alternating pairs.
    pub fn graph(&self) -> Result<Graph, WordError> {
        let n = self.contiguous_alphabet()?;
        if n > MAX_VERTICES {
            return Err(WordError::TooLarge(n));
        }
        // A pair stops alternating the first time one letter repeats without
        // the other in between, i.e. when x occurs again while its previous
        // occurrence is later than every occurrence of y so far.
        let mut last: Vec<Option<usize>> = vec![None; n];
        let mut broken = vec![0u64; n];
        for (pos, &x) in self.letters.iter().enumerate() {
            if let Some(px) = last[x - 1] {
                for y in 1..=n {
                    if y != x && last[y - 1].is_none_or(|py| py < px) {
                        broken[x - 1] |= 1 << (y - 1);
                        broken[y - 1] |= 1 << (x - 1);
                    }
                }
            }
            last[x - 1] = Some(pos);
        }
        let all = crate::graph::full_mask(n);
        let adj: Vec<u64> = (0..n).map(|i| !broken[i] & all & !(1 << i)).collect();
        Ok(Graph::from_adjacency(&adj).expect("masks are in range"))
    }

    /// Whether this word represents `g` exactly (labelled equality).
    pub fn represents(&self, g: &Graph) -> Result<bool, WordError> {
        let n = match self.contiguous_alphabet() {
            Ok(n) => n,
            Err(WordError::NonContiguousAlphabet { max, .. }) => {
                return Err(WordError::AlphabetMismatch { word: max, graph: g.n() })
            }
            Err(e) => return Err(e),
        };
        if n != g.n() {
            return Err(WordError::AlphabetMismatch { word: n, graph: g.n() });
        }
        Ok(self.graph()? == *g)
    }

    /// `Some(k)` when every letter occurs exactly `k` times.
    pub fn uniformity(&self) -> Option<usize> {
        let alpha = self.alphabet();
        let k = self.occurrences(alpha[0]);
        alpha[1..].iter().all(|&x| self.occurrences(x) == k).then_some(k)
    }

    pub fn reversed(&self) -> Self {
        let mut letters = self.letters.clone();
        letters.reverse();
        Self { letters }
    }

    /// Removes every occurrence of `x` and shifts larger labels down by one,
    /// so a word over `{1..n}` becomes a word over `{1..n-1}`.
    pub fn delete_letter(&self, x: usize) -> Result<Self, WordError> {
        let letters = self.letters.iter().filter(|&&l| l != x).map(|&l| if l > x { l - 1 } else { l }).collect();
        Self::new(letters)
    }

    /// Letter pairs `(x, y)`, `x < y`, that do not alternate.
    pub fn non_alternating_pairs(&self) -> Vec<(usize, usize)> {
        let alpha = self.alphabet();
        let mut out = Vec::new();
        for (i, &x) in alpha.iter().enumerate() {
            for &y in &alpha[i + 1..] {
                if !self.alternates(x, y).expect("both letters occur") {
                    out.push((x, y));
                }
            }
        }
        out
    }
}

/// Accepts whitespace- or comma-separated decimal tokens (`1 3 10 2`),
/// compact digit strings (`1213423`), and compact strings with
/// parenthesised multi-digit labels (`1387296(10)749`).
impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let separated = s.trim().contains(|c: char| c.is_whitespace() || c == ',');
        let mut letters = Vec::new();
        let mut chars = s.chars().enumerate().map(|(i, c)| (i + 1, c)).peekable();
        while let Some((col, c)) = chars.next() {
            match c {
                c if c.is_whitespace() || c == ',' => {}
                '(' => {
                    let mut value: Option<usize> = None;
                    loop {
                        match chars.next() {
                            Some((_, ')')) => break,
                            Some((_, d @ '0'..='9')) => value = Some(push_digit(value, d, col)?),
                            Some((c2, other)) => return Err(WordError::Syntax { column: c2, found: other }),
                            None => return Err(WordError::UnclosedParen { column: col }),
                        }
                    }
                    match value {
                        None => return Err(WordError::Syntax { column: col, found: ')' }),
                        Some(0) => return Err(WordError::ZeroLabel { column: col }),
                        Some(v) => letters.push(v),
                    }
                }
                d @ '0'..='9' => {
                    let mut value = push_digit(None, d, col)?;
                    if separated {
                        while let Some(&(_, d2 @ '0'..='9')) = chars.peek() {
                            value = push_digit(Some(value), d2, col)?;
                            chars.next();
                        }
                    }
                    if value == 0 {
                        return Err(WordError::ZeroLabel { column: col });
                    }
                    letters.push(value);
                }
                other => return Err(WordError::Syntax { column: col, found: other }),
            }
        }
        Self::new(letters)
    }
}

fn push_digit(acc: Option<usize>, d: char, column: usize) -> Result<usize, WordError> {
    let digit = d as usize - '0' as usize;
    acc.unwrap_or(0).checked_mul(10).and_then(|v| v.checked_add(digit)).ok_or(WordError::LabelOverflow { column })
}

/// Whitespace-separated decimal tokens.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}
