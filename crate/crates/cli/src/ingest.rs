use std::fs::File;
use std::io::Read;
use std::path::Path;

use chebelim_core::{
    parse_rational, Error as CoreError, Matrix, ParseRationalError, ProblemInstance, Rational,
};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed CSV: {0}")]
    Csv(#[from] csv::Error),
    /// Row and column are 1-based positions in the file.
    #[error("cell ({row},{column}) {text:?}: {source}")]
    Cell {
        row: usize,
        column: usize,
        text: String,
        #[source]
        source: ParseRationalError,
    },
    #[error("row {row} has {found} cells, expected {expected}")]
    Ragged {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("input has no data rows")]
    Empty,
    #[error("need at least one X column and the Y column, found {0} column(s)")]
    TooFewColumns(usize),
    #[error("column {column}{} is identically zero; drop it before solving", .name.as_ref().map(|n| format!(" ({n})")).unwrap_or_default())]
    ZeroColumn { column: usize, name: Option<String> },
    #[error(transparent)]
    Problem(CoreError),
}

pub fn ingest_csv(path: impl AsRef<Path>) -> Result<ProblemInstance<Rational>, IngestError> {
    let path = path.as_ref();
    let mut text = String::new();
    File::open(path)
        .and_then(|mut f| f.read_to_string(&mut text))
        .map_err(|source| IngestError::Io {
            path: path.display().to_string(),
            source,
        })?;
    parse_csv(&text)
}

/// Parses `M` data rows of `N + 1` cells; the last cell of each row is `Y`.
/// A first row in which no cell is a number is taken as a header.
pub fn parse_csv(text: &str) -> Result<ProblemInstance<Rational>, IngestError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());

    let mut header: Option<Vec<String>> = None;
    let mut width: Option<usize> = None;
    let mut x_data = Vec::new();
    let mut y = Vec::new();

    for (index, record) in reader.records().enumerate() {
        let record = record?;
        let row = index + 1;
        if index == 0 && record.iter().all(|cell| parse_rational(cell).is_err()) {
            header = Some(record.iter().map(str::to_string).collect());
            width = Some(record.len());
            continue;
        }
        let expected = *width.get_or_insert(record.len());
        if record.len() != expected {
            return Err(IngestError::Ragged {
                row,
                expected,
                found: record.len(),
            });
        }
        if expected < 2 {
            return Err(IngestError::TooFewColumns(expected));
        }
        for (c, cell) in record.iter().enumerate() {
            let value = parse_rational(cell).map_err(|source| IngestError::Cell {
                row,
                column: c + 1,
                text: cell.to_string(),
                source,
            })?;
            if c + 1 == expected {
                y.push(value);
            } else {
                x_data.push(value);
            }
        }
    }

    let width = width.ok_or(IngestError::Empty)?;
    if y.is_empty() {
        return Err(IngestError::Empty);
    }
    if width < 2 {
        return Err(IngestError::TooFewColumns(width));
    }
    let x = Matrix::from_vec(y.len(), width - 1, x_data).map_err(IngestError::Problem)?;
    ProblemInstance::new(x, y).map_err(|e| match e {
        CoreError::ZeroColumn { column } => IngestError::ZeroColumn {
            column,
            name: header.as_ref().and_then(|h| h.get(column - 1).cloned()),
        },
        other => IngestError::Problem(other),
    })
}
