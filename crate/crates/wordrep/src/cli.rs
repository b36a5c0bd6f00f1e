//! Command-line surface. Exit status: 0 yes or success, 1 a negative
//! answer to a yes/no question, 2 usage, input or size errors.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::json;
use wordrep_core::census::CensusError;
use wordrep_core::orientation::OrientationError;
use wordrep_core::wordsearch::WordSearchError;
use wordrep_core::{Graph, SpeedRow, Word, WordError};

use crate::format::{parse_edge_list, parse_word, parse_word_file, write_edge_list, write_orientation, ParseError};
use crate::json::{arcs, DecisionJson, SpeedRowJson};
use crate::parallel::{CensusRunError, Workers};
use crate::results::{ResultsError, ResultsStore};
use crate::verify;

#[derive(Debug, Parser)]
#[command(name = "wordrep", version, about = "Word-representability of small graphs")]
pub struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads; 0 uses every available CPU.
    #[arg(long, global = true, env = "WORDREP_WORKERS", default_value_t = 1)]
    pub workers: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether a graph is word-representable.
    Decide { graph: PathBuf },
    /// Check whether a word represents a graph.
    CheckWord {
        graph: PathBuf,
        #[command(flatten)]
        word: WordInput,
    },
    /// Print the graph a word represents.
    GraphOfWord {
        #[command(flatten)]
        word: WordInput,
    },
    /// Print a semi-transitive orientation.
    FindOrientation { graph: PathBuf },
    /// Count semi-transitive orientations.
    CountOrientations { graph: PathBuf },
    /// Search for a k-uniform representing word, k = 1..=k-max.
    FindWord {
        graph: PathBuf,
        #[arg(long, default_value_t = 3)]
        k_max: usize,
    },
    /// Count representable graphs on 1..=N vertices.
    Census {
        n: usize,
        /// Allow N = 7.
        #[arg(long)]
        long: bool,
        /// Append-only per-class results; classes already present are not
        /// decided again.
        #[arg(long)]
        results: Option<PathBuf>,
    },
    /// Re-check the bundled published examples.
    VerifyPaper,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct WordInput {
    /// Word given inline, e.g. 1213423 or "1 2 10 2".
    #[arg(long)]
    pub word: Option<String>,
    /// File whose first non-comment line is the word.
    #[arg(long)]
    pub word_file: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Answer {
    Yes,
    No,
}

impl Answer {
    fn from_bool(b: bool) -> Self {
        if b {
            Answer::Yes
        } else {
            Answer::No
        }
    }

    pub fn code(self) -> u8 {
        match self {
            Answer::Yes => 0,
            Answer::No => 1,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("{}: {source}", path.display())]
    Parse { path: PathBuf, source: ParseError },
    #[error("--word: {0}")]
    InlineWord(ParseError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Orientation(#[from] OrientationError),
    #[error(transparent)]
    WordSearch(#[from] WordSearchError),
    #[error(transparent)]
    Census(#[from] CensusError),
    #[error(transparent)]
    Results(#[from] ResultsError),
    #[error("cannot start workers: {0}")]
    Workers(#[from] rayon::ThreadPoolBuildError),
    #[error("writing output: {0}")]
    Output(io::Error),
}

impl From<CensusRunError> for CliError {
    fn from(e: CensusRunError) -> Self {
        match e {
            CensusRunError::Census(e) => CliError::Census(e),
            CensusRunError::Results(e) => CliError::Results(e),
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    parse_edge_list(&read(path)?).map_err(|source| CliError::Parse { path: path.to_path_buf(), source })
}

fn load_word(input: &WordInput) -> Result<Word, CliError> {
    match (&input.word, &input.word_file) {
        (Some(w), _) => parse_word(w).map_err(CliError::InlineWord),
        (None, Some(path)) => {
            parse_word_file(&read(path)?).map_err(|source| CliError::Parse { path: path.clone(), source })
        }
        (None, None) => unreachable!("clap requires one word input"),
    }
}

fn to_json(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn census_table(rows: &[SpeedRow]) -> String {
    let mut s = format!("{:>2} {:>6} {:>9} {:>7} {:>11} {:>9}\n", "n", "a_n", "b_n", "classes", "2^C(n,2)", "entropy");
    for r in rows {
        let entropy = r.entropy.map_or("-".to_string(), |e| format!("{e:.6}"));
        let _ = writeln!(
            s,
            "{:>2} {:>6} {:>9} {:>7} {:>11} {:>9}",
            r.n, r.a_n, r.b_n, r.classes, r.labelled_total, entropy
        );
    }
    if let Some(last) = rows.last() {
        let _ = writeln!(s, "non-representable classes on {} vertices: {}", last.n, last.nonrep_classes.len());
        for f in &last.nonrep_classes {
            let _ = writeln!(s, "{f}");
        }
    }
    s
}

/// Runs one command, writing its answer to `out`.
pub fn run(cli: &Cli, out: &mut impl Write) -> Result<Answer, CliError> {
    let workers = Workers::new(cli.workers)?;
    let (text, answer) = execute(cli, &workers)?;
    out.write_all(text.as_bytes()).map_err(CliError::Output)?;
    Ok(answer)
}

fn execute(cli: &Cli, workers: &Workers) -> Result<(String, Answer), CliError> {
    let json = cli.json;
    Ok(match &cli.command {
        Command::Decide { graph } => {
            let g = load_graph(graph)?;
            let d = workers.decide(&g);
            let text = if json {
                to_json(&DecisionJson::from(&d))
            } else {
                let mut s = format!("{}\n", d.verdict);
                if let Some(w) = &d.witness {
                    s.push_str(&write_orientation(w));
                }
                s
            };
            (text, Answer::from_bool(d.is_representable()))
        }
        Command::CheckWord { graph, word } => {
            let g = load_graph(graph)?;
            let w = load_word(word)?;
            let yes = w.represents(&g)?;
            let text = if json {
                to_json(&json!({
                    "represents": yes,
                    "uniformity": w.uniformity(),
                    "non_alternating_pairs": w.non_alternating_pairs(),
                }))
            } else {
                format!("represents: {yes}\n")
            };
            (text, Answer::from_bool(yes))
        }
        Command::GraphOfWord { word } => {
            let g = load_word(word)?.graph()?;
            let text = if json { to_json(&json!({ "n": g.n(), "edges": g.edges() })) } else { write_edge_list(&g) };
            (text, Answer::Yes)
        }
        Command::FindOrientation { graph } => {
            let g = load_graph(graph)?;
            let w = workers.find_semi_transitive(&g);
            let text = match (&w, json) {
                (_, true) => to_json(&json!({ "witness": w.as_ref().map(arcs) })),
                (Some(o), false) => write_orientation(o),
                (None, false) => "none\n".to_string(),
            };
            (text, Answer::from_bool(w.is_some()))
        }
        Command::CountOrientations { graph } => {
            let count = workers.count_semi_transitive(&load_graph(graph)?)?;
            let text = if json { to_json(&json!({ "count": count })) } else { format!("{count}\n") };
            (text, Answer::Yes)
        }
        Command::FindWord { graph, k_max } => {
            let g = load_graph(graph)?;
            let r = workers.find_word(&g, *k_max)?;
            let text = match (&r.word, json) {
                (_, true) => to_json(&json!({
                    "word": r.word.as_ref().map(|w| w.to_string()),
                    "k": r.k_tried,
                    "nodes": r.nodes,
                })),
                (Some(w), false) => format!("{w}\n"),
                (None, false) => format!("none with k <= {}\n", r.k_tried),
            };
            (text, Answer::from_bool(r.word.is_some()))
        }
        Command::Census { n, long, results } => {
            wordrep_core::census::check_census_size(*n, *long)?;
            let mut store = results.as_ref().map(ResultsStore::open).transpose()?;
            let rows = (1..=*n).map(|k| workers.census(k, *long, store.as_mut())).collect::<Result<Vec<_>, _>>()?;
            let text = if json {
                to_json(&rows.iter().map(SpeedRowJson::from).collect::<Vec<_>>())
            } else {
                census_table(&rows)
            };
            (text, Answer::Yes)
        }
        Command::VerifyPaper => {
            let checks = verify::run(workers);
            let all = checks.iter().all(|c| c.pass);
            let text = if json {
                to_json(&json!({
                    "checks": checks,
                    "passed": checks.iter().filter(|c| c.pass).count(),
                    "total": checks.len(),
                }))
            } else {
                verify::render(&checks)
            };
            (text, Answer::from_bool(all))
        }
    })
}
