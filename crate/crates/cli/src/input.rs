//! Problem files: CSV or JSON decision matrices with optional embedded weights.
//!
//! Parsing happens in two stages. The text is first read into a [`RawProblem`]
//! of plain numbers, so that `validate` can report every bad cell at once;
//! [`build_matrix`] then applies the FNNN checks and the weight rules.

use std::fmt;
use std::path::Path;

use fnnn_core::{DecisionMatrix, FnnError, Fnnn, WeightVector};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum InputFormat {
    Csv,
    Json,
}

impl InputFormat {
    /// Guess from the file extension.
    pub fn from_path(path: &Path) -> Option<Self> {
        let ext = path.extension()?.to_str()?;
        if ext.eq_ignore_ascii_case("csv") {
            Some(Self::Csv)
        } else if ext.eq_ignore_ascii_case("json") {
            Some(Self::Json)
        } else {
            None
        }
    }
}

/// One cell as written in the file, before any FNNN checks.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawCell {
    pub eta: f64,
    pub xi: f64,
    pub t: f64,
    pub i: f64,
    pub f: f64,
}

impl From<&Fnnn> for RawCell {
    fn from(a: &Fnnn) -> Self {
        let [eta, xi, t, i, f] = a.components();
        RawCell { eta, xi, t, i, f }
    }
}

impl RawCell {
    pub fn to_fnnn(self) -> Result<Fnnn, FnnError> {
        Fnnn::new(self.eta, self.xi, self.t, self.i, self.f)
    }
}

/// A decision matrix as read from disk. Cells are row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct RawProblem {
    pub alternatives: Vec<String>,
    pub attributes: Vec<String>,
    pub cells: Vec<RawCell>,
    pub weights: Option<Vec<f64>>,
}

#[derive(Debug, thiserror::Error)]
pub enum ParseError {
    #[error("input is empty")]
    Empty,
    #[error("line {line}: {reason}")]
    Line { line: u64, reason: String },
    /// `row` and `col` are 1-based positions in the matrix body.
    #[error("row {row}, column {col}: {reason}")]
    Cell { row: usize, col: usize, reason: String },
    #[error("malformed CSV: {0}")]
    Csv(#[from] csv::Error),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Shape(String),
}

/// A cell that fails the FNNN checks.
#[derive(Debug, Clone, PartialEq)]
pub struct CellDiagnostic {
    /// Zero-based.
    pub row: usize,
    /// Zero-based.
    pub col: usize,
    pub alternative: String,
    pub attribute: String,
    pub error: FnnError,
}

impl fmt::Display for CellDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}/{} (row {}, column {}): {}",
            self.alternative,
            self.attribute,
            self.row + 1,
            self.col + 1,
            self.error
        )
    }
}

/// Accepts only finite numbers with a dot decimal separator.
fn number(text: &str) -> Result<f64, String> {
    let s = text.trim();
    if s.is_empty() {
        return Err("missing number".into());
    }
    let ok_chars = s.chars().all(|c| c.is_ascii_digit() || matches!(c, '.' | '-' | '+' | 'e' | 'E'));
    match s.parse::<f64>() {
        Ok(v) if ok_chars && v.is_finite() => Ok(v),
        _ => Err(format!("`{s}` is not a finite decimal number")),
    }
}

fn csv_cell(text: &str) -> Result<RawCell, String> {
    let parts: Vec<&str> = text.split(';').collect();
    if parts.len() != 5 {
        return Err(format!("expected 5 values `eta;xi;t;i;f`, found {}", parts.len()));
    }
    let mut v = [0.0; 5];
    for (slot, (name, part)) in v.iter_mut().zip(["eta", "xi", "t", "i", "f"].into_iter().zip(parts)) {
        *slot = number(part).map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(RawCell { eta: v[0], xi: v[1], t: v[2], i: v[3], f: v[4] })
}

/// Header `alt,<attr1>,…`, one row per alternative with `eta;xi;t;i;f` cells,
/// optionally a final `weights,<w1>,…` row.
pub fn parse_csv(text: &str) -> Result<RawProblem, ParseError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut records = reader.records();
    let header = match records.next() {
        None => return Err(ParseError::Empty),
        Some(r) => r?,
    };
    if header.iter().all(str::is_empty) {
        return Err(ParseError::Empty);
    }
    let attributes: Vec<String> = header.iter().skip(1).map(str::to_owned).collect();
    if attributes.is_empty() {
        return Err(ParseError::Line { line: 1, reason: "header names no attributes".into() });
    }
    let width = attributes.len() + 1;
    let mut alternatives = Vec::new();
    let mut cells = Vec::new();
    let mut weights: Option<Vec<f64>> = None;
    for record in records {
        let record = record?;
        let line = record.position().map_or(0, |p| p.line());
        if record.iter().all(str::is_empty) {
            continue;
        }
        if weights.is_some() {
            return Err(ParseError::Line { line, reason: "the weights row must be the last row".into() });
        }
        if record.len() != width {
            return Err(ParseError::Line {
                line,
                reason: format!("expected {width} fields, found {}", record.len()),
            });
        }
        let label = &record[0];
        if label.eq_ignore_ascii_case("weights") {
            let w = record
                .iter()
                .skip(1)
                .enumerate()
                .map(|(c, s)| {
                    number(s).map_err(|reason| ParseError::Line { line, reason: format!("weight {}: {reason}", c + 1) })
                })
                .collect::<Result<Vec<_>, _>>()?;
            weights = Some(w);
            continue;
        }
        let row = alternatives.len();
        for (col, text) in record.iter().skip(1).enumerate() {
            let cell = csv_cell(text).map_err(|reason| ParseError::Cell { row: row + 1, col: col + 1, reason })?;
            cells.push(cell);
        }
        alternatives.push(label.to_owned());
    }
    if alternatives.is_empty() {
        return Err(ParseError::Shape("no alternatives".into()));
    }
    Ok(RawProblem { alternatives, attributes, cells, weights })
}

#[derive(Deserialize)]
#[serde(untagged)]
enum JsonCells {
    Flat(Vec<RawCell>),
    Nested(Vec<Vec<RawCell>>),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonProblem {
    alternatives: Vec<String>,
    attributes: Vec<String>,
    #[serde(default)]
    weights: Option<Vec<f64>>,
    cells: JsonCells,
}

/// Object with `alternatives`, `attributes`, optional `weights` and `cells`,
/// the latter either row-major flat or as one array per alternative.
pub fn parse_json(text: &str) -> Result<RawProblem, ParseError> {
    if text.trim().is_empty() {
        return Err(ParseError::Empty);
    }
    let doc: JsonProblem = serde_json::from_str(text)?;
    let (n, m) = (doc.alternatives.len(), doc.attributes.len());
    if n == 0 || m == 0 {
        return Err(ParseError::Shape("no alternatives or no attributes".into()));
    }
    let cells = match doc.cells {
        JsonCells::Flat(cells) => {
            if cells.len() != n * m {
                return Err(ParseError::Shape(format!("expected {} cells ({n} × {m}), found {}", n * m, cells.len())));
            }
            cells
        }
        JsonCells::Nested(rows) => {
            if rows.len() != n {
                return Err(ParseError::Shape(format!("expected {n} rows of cells, found {}", rows.len())));
            }
            for (r, row) in rows.iter().enumerate() {
                if row.len() != m {
                    return Err(ParseError::Cell {
                        row: r + 1,
                        col: row.len().min(m) + 1,
                        reason: format!("expected {m} cells in this row, found {}", row.len()),
                    });
                }
            }
            rows.into_iter().flatten().collect()
        }
    };
    Ok(RawProblem { alternatives: doc.alternatives, attributes: doc.attributes, cells, weights: doc.weights })
}

pub fn parse_text(text: &str, format: InputFormat) -> Result<RawProblem, ParseError> {
    match format {
        InputFormat::Csv => parse_csv(text),
        InputFormat::Json => parse_json(text),
    }
}

/// Reads and parses a problem file; the format defaults to the extension.
pub fn read_problem(path: &Path, format: Option<InputFormat>) -> Result<RawProblem, CliError> {
    let format = format.or_else(|| InputFormat::from_path(path)).ok_or_else(|| {
        CliError::Usage(format!("cannot tell the format of {}; pass --input-format", path.display()))
    })?;
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })?;
    parse_text(&text, format).map_err(|source| CliError::Parse { path: path.to_owned(), source })
}

/// Every cell that fails the FNNN checks, in row-major order.
pub fn diagnose(raw: &RawProblem) -> Vec<CellDiagnostic> {
    let m = raw.attributes.len();
    raw.cells
        .iter()
        .enumerate()
        .filter_map(|(k, c)| {
            c.to_fnnn().err().map(|error| CellDiagnostic {
                row: k / m,
                col: k % m,
                alternative: raw.alternatives[k / m].clone(),
                attribute: raw.attributes[k % m].clone(),
                error,
            })
        })
        .collect()
}

/// Where the attribute weights come from.
#[derive(Debug, Clone, Default)]
pub struct WeightChoice {
    /// From `--weights`; takes precedence over weights in the file.
    pub explicit: Option<Vec<f64>>,
    /// Rescale to sum 1 instead of rejecting.
    pub renormalize: bool,
}

fn weight_vector(w: Vec<f64>, renormalize: bool) -> Result<WeightVector, CliError> {
    let result = if renormalize { WeightVector::renormalized(w) } else { WeightVector::new(w) };
    result.map_err(|e| CliError::Data(format!("attribute weights: {e}")))
}

/// Applies the FNNN checks and the weight rules.
pub fn build_matrix(raw: RawProblem, weights: &WeightChoice) -> Result<DecisionMatrix, CliError> {
    let m = raw.attributes.len();
    let w = match (&weights.explicit, raw.weights.clone()) {
        (Some(w), _) => {
            if w.len() != m {
                return Err(CliError::Usage(format!(
                    "--weights: {}",
                    FnnError::LengthMismatch { expected: m, found: w.len() }
                )));
            }
            w.clone()
        }
        (None, Some(w)) => {
            if w.len() != m {
                return Err(CliError::Data(format!(
                    "weights in file: {}",
                    FnnError::LengthMismatch { expected: m, found: w.len() }
                )));
            }
            w
        }
        (None, None) => {
            return Err(CliError::Data("no attribute weights: add a `weights` row or pass --weights".into()))
        }
    };
    let w = weight_vector(w, weights.renormalize)?;
    let bad = diagnose(&raw);
    if !bad.is_empty() {
        return Err(CliError::InvalidCells(bad));
    }
    let cells = raw.cells.iter().map(|c| c.to_fnnn()).collect::<Result<Vec<_>, _>>().map_err(|e| CliError::Data(e.to_string()))?;
    DecisionMatrix::new(raw.alternatives, raw.attributes, cells, w).map_err(|e| CliError::Data(e.to_string()))
}

/// Reads, parses and validates a problem file.
pub fn parse_problem(path: &Path, format: Option<InputFormat>, weights: &WeightChoice) -> Result<DecisionMatrix, CliError> {
    build_matrix(read_problem(path, format)?, weights)
}
