//! Append-only census results, one class per line:
//!
//! ```text
//! <canonical form>\t<labelled count>\t<verdict>
//! ```
//!
//! Later lines for the same class must agree with earlier ones.

use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use wordrep_core::{CanonicalForm, GraphClass, Verdict};

use crate::format::ParseError;

#[derive(Debug, thiserror::Error)]
pub enum ResultsError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("{path}: class {form} stored with labelled count {stored}, expected {expected}")]
    CountMismatch { path: PathBuf, form: CanonicalForm, stored: u64, expected: u64 },
}

#[derive(Debug)]
pub struct ResultsStore {
    path: PathBuf,
    entries: BTreeMap<CanonicalForm, (u64, Verdict)>,
    file: File,
}

impl ResultsStore {
    /// Opens `path`, creating it if missing, and loads what it holds.
    pub fn open(path: impl AsRef<Path>) -> Result<Self, ResultsError> {
        let path = path.as_ref().to_path_buf();
        let io_err = |source| ResultsError::Io { path: path.clone(), source };
        let file = OpenOptions::new().create(true).read(true).append(true).open(&path).map_err(io_err)?;
        let mut entries = BTreeMap::new();
        for (i, line) in BufReader::new(&file).lines().enumerate() {
            let line = line.map_err(io_err)?;
            if line.trim().is_empty() {
                continue;
            }
            let (form, entry) =
                parse_line(i + 1, &line).map_err(|source| ResultsError::Parse { path: path.clone(), source })?;
            match entries.get(&form) {
                Some(old) if *old != entry => {
                    let source =
                        ParseError { line: i + 1, column: 1, message: format!("conflicting entry for {form}") };
                    return Err(ResultsError::Parse { path, source });
                }
                _ => {
                    entries.insert(form, entry);
                }
            }
        }
        Ok(Self { path, entries, file })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The stored verdict for `class`, after checking its labelled count.
    pub fn lookup(&self, class: &GraphClass) -> Result<Option<Verdict>, ResultsError> {
        match self.entries.get(&class.form) {
            None => Ok(None),
            Some(&(stored, verdict)) => {
                let expected = class.labelled_count();
                if stored != expected {
                    return Err(ResultsError::CountMismatch {
                        path: self.path.clone(),
                        form: class.form,
                        stored,
                        expected,
                    });
                }
                Ok(Some(verdict))
            }
        }
    }

    pub fn record(&mut self, class: &GraphClass, verdict: Verdict) -> Result<(), ResultsError> {
        let entry = (class.labelled_count(), verdict);
        if self.entries.get(&class.form) == Some(&entry) {
            return Ok(());
        }
        writeln!(self.file, "{}\t{}\t{}", class.form, entry.0, verdict)
            .and_then(|_| self.file.flush())
            .map_err(|source| ResultsError::Io { path: self.path.clone(), source })?;
        self.entries.insert(class.form, entry);
        Ok(())
    }
}

fn parse_line(line: usize, text: &str) -> Result<(CanonicalForm, (u64, Verdict)), ParseError> {
    let fields: Vec<&str> = text.split('\t').collect();
    if fields.len() != 3 {
        return Err(ParseError { line, column: 1, message: "expected three tab-separated fields".into() });
    }
    let col = |i: usize| fields[..i].iter().map(|f| f.chars().count() + 1).sum::<usize>() + 1;
    let form = CanonicalForm::parse(fields[0]).ok_or_else(|| ParseError {
        line,
        column: 1,
        message: format!("bad canonical form {:?}", fields[0]),
    })?;
    let count = fields[1].parse().map_err(|_| ParseError {
        line,
        column: col(1),
        message: format!("bad count {:?}", fields[1]),
    })?;
    let verdict = Verdict::parse(fields[2]).ok_or_else(|| ParseError {
        line,
        column: col(2),
        message: format!("bad verdict {:?}", fields[2]),
    })?;
    Ok((form, (count, verdict)))
}
