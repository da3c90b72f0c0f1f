//! `.sgp` table files and `.rel` graph files.
//!
//! `.sgp`: the first non-comment line holds `n`, the next `n` lines hold the
//! rows as 0-based indices. `#` starts a comment; `# labels: a b c` names
//! the elements.
//!
//! `.rel`: one `s t` pair per line. Optional directives `dom PATH` and
//! `cod PATH` name the semigroup files (relative to the `.rel` file) and
//! `closure` asks for the generated graph instead of a checked one.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use pointlike_core::{Error as CoreError, RelationalMorphism, Semigroup};

#[derive(Debug)]
pub enum FormatError {
    Io { path: PathBuf, message: String },
    Parse { line: usize, reason: String },
    Core(CoreError),
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormatError::Io { path, message } => write!(f, "{}: {message}", path.display()),
            FormatError::Parse { line, reason } => write!(f, "line {line}: {reason}"),
            FormatError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for FormatError {}

impl From<CoreError> for FormatError {
    fn from(e: CoreError) -> Self {
        FormatError::Core(e)
    }
}

fn parse_err(line: usize, reason: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        reason: reason.into(),
    }
}

/// Non-empty lines with comments stripped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((i + 1, body))
    })
}

pub fn parse_semigroup(text: &str) -> Result<Semigroup, FormatError> {
    let labels: Option<Vec<String>> = text.lines().find_map(|l| {
        l.trim()
            .strip_prefix('#')
            .and_then(|c| c.trim().strip_prefix("labels:"))
            .map(|rest| rest.split_whitespace().map(str::to_string).collect())
    });
    let mut lines = content_lines(text);
    let (first, header) = lines.next().ok_or_else(|| parse_err(1, "missing order line"))?;
    let n: usize = header
        .parse()
        .map_err(|_| parse_err(first, format!("expected the order, found `{header}`")))?;
    let mut rows = Vec::with_capacity(n);
    let mut last = first;
    for (line, body) in lines {
        if rows.len() == n {
            return Err(parse_err(line, "more rows than the order"));
        }
        let row = body
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| parse_err(line, format!("`{tok}` is not an index")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != n {
            return Err(parse_err(line, format!("expected {n} entries, found {}", row.len())));
        }
        rows.push(row);
        last = line;
    }
    if rows.len() != n {
        return Err(parse_err(last, format!("expected {n} rows, found {}", rows.len())));
    }
    let s = Semigroup::validate(n, &rows)?;
    match labels {
        Some(l) => Ok(s.with_labels(l)?),
        None => Ok(s),
    }
}

/// Canonical `.sgp` text; parsing it gives back the same semigroup.
pub fn write_semigroup(s: &Semigroup) -> String {
    let mut out = String::new();
    if let Some(l) = s.labels() {
        out.push_str("# labels: ");
        out.push_str(&l.join(" "));
        out.push('\n');
    }
    out.push_str(&format!("{}\n", s.order()));
    for row in s.rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// Contents of a `.rel` file before the semigroups are known.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RelFile {
    pub dom: Option<PathBuf>,
    pub cod: Option<PathBuf>,
    pub closure: bool,
    pub pairs: Vec<(usize, usize)>,
}

pub fn parse_rel(text: &str) -> Result<RelFile, FormatError> {
    let mut rel = RelFile::default();
    for (line, body) in content_lines(text) {
        let toks: Vec<&str> = body.split_whitespace().collect();
        match toks.as_slice() {
            ["closure"] => rel.closure = true,
            ["dom", path] => rel.dom = Some(PathBuf::from(path)),
            ["cod", path] => rel.cod = Some(PathBuf::from(path)),
            [a, b] => {
                let idx = |tok: &str| {
                    tok.parse::<usize>()
                        .map_err(|_| parse_err(line, format!("`{tok}` is not an index")))
                };
                rel.pairs.push((idx(a)?, idx(b)?));
            }
            _ => return Err(parse_err(line, format!("cannot read `{body}`"))),
        }
    }
    Ok(rel)
}

impl RelFile {
    /// Builds the relational morphism, closing the pairs when asked to.
    pub fn build(&self, dom: Semigroup, cod: Semigroup) -> Result<RelationalMorphism, FormatError> {
        let pairs = self.pairs.iter().copied();
        let rel = if self.closure {
            RelationalMorphism::generated(dom, cod, pairs)?
        } else {
            RelationalMorphism::new(dom, cod, pairs)?
        };
        Ok(rel)
    }
}

/// Canonical `.rel` text listing every pair of the graph.
pub fn write_rel(rel: &RelationalMorphism) -> String {
    rel.pairs()
        .into_iter()
        .map(|(s, t)| format!("{s} {t}\n"))
        .collect()
}

pub fn read_file(path: &Path) -> Result<String, FormatError> {
    fs::read_to_string(path).map_err(|e| FormatError::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}

pub fn load_semigroup(path: &Path) -> Result<Semigroup, FormatError> {
    parse_semigroup(&read_file(path)?)
}
