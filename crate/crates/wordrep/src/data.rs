//! Graphs and words bundled with the tool, so `verify-paper` runs offline.

use wordrep_core::{Graph, Word};

use crate::format::{parse_edge_list, parse_word_file, parse_word_lines};

pub const GRAPH_A: &str = include_str!("../data/A.edges");
pub const GRAPH_M: &str = include_str!("../data/M.edges");
pub const K4: &str = include_str!("../data/K4.edges");
pub const C4: &str = include_str!("../data/C4.edges");
pub const C5: &str = include_str!("../data/C5.edges");
pub const PETERSEN: &str = include_str!("../data/petersen.edges");
pub const M_WORD: &str = include_str!("../data/M.word");
pub const K4_WORDS: &str = include_str!("../data/K4.words");
pub const PETERSEN_WORD: &str = include_str!("../data/petersen.word");

fn graph(text: &str) -> Graph {
    parse_edge_list(text).expect("bundled edge list parses")
}

pub fn graph_a() -> Graph {
    graph(GRAPH_A)
}

pub fn graph_m() -> Graph {
    graph(GRAPH_M)
}

pub fn k4() -> Graph {
    graph(K4)
}

pub fn c4() -> Graph {
    graph(C4)
}

pub fn c5() -> Graph {
    graph(C5)
}

pub fn petersen() -> Graph {
    graph(PETERSEN)
}

pub fn m_word() -> Word {
    parse_word_file(M_WORD).expect("bundled word parses")
}

pub fn k4_words() -> Vec<Word> {
    parse_word_lines(K4_WORDS).expect("bundled words parse")
}

pub fn petersen_word() -> Word {
    parse_word_file(PETERSEN_WORD).expect("bundled word parses")
}
