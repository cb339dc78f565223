//! Tabular output: fixed column schemas written as CSV or JSON, and the
//! readers used to load them back.
//!
//! Floats are written with 17 significant digits (`{:.16e}`), which is
//! enough for every binary64 value to re-parse to the same bits.

use std::fs;
use std::io::{self, Write};
use std::path::Path;
use std::str::FromStr;

use clap::ValueEnum;
use serde_json::{Map, Number, Value};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl Format {
    pub fn from_path(path: &Path) -> Option<Format> {
        match path.extension()?.to_str()? {
            "csv" => Some(Format::Csv),
            "json" => Some(Format::Json),
            _ => None,
        }
    }
}

/// One output field.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Int(u64),
    Float(f64),
    Bool(bool),
    Empty,
}

impl Cell {
    fn to_field(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Int(n) => n.to_string(),
            Cell::Float(x) => format_float(*x),
            Cell::Bool(b) => b.to_string(),
            Cell::Empty => String::new(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Int(n) => Value::Number((*n).into()),
            Cell::Float(x) if x.is_finite() => {
                Value::Number(Number::from_string_unchecked(format_float(*x)))
            }
            Cell::Float(x) => Value::String(format_float(*x)),
            Cell::Bool(b) => Value::Bool(*b),
            Cell::Empty => Value::Null,
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Float(x)
    }
}

impl From<Option<f64>> for Cell {
    fn from(x: Option<f64>) -> Self {
        x.map_or(Cell::Empty, Cell::Float)
    }
}

impl From<u64> for Cell {
    fn from(n: u64) -> Self {
        Cell::Int(n)
    }
}

impl From<usize> for Cell {
    fn from(n: usize) -> Self {
        Cell::Int(n as u64)
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Bool(b)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_owned())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

/// 17 significant digits in scientific form; `NaN` and `inf` spelled the
/// way `f64::from_str` reads them.
pub fn format_float(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        x.to_string()
    }
}

/// A row type with a fixed column order.
pub trait Record: Sized {
    const COLUMNS: &'static [&'static str];

    fn cells(&self) -> Vec<Cell>;

    /// Rebuilds a row from its serialized fields, in column order.
    fn from_fields(fields: &[String]) -> Result<Self, CliError>;
}

/// Sequential field reader used by [`Record::from_fields`].
pub struct Fields<'a> {
    fields: &'a [String],
    next: usize,
}

impl<'a> Fields<'a> {
    pub fn new<R: Record>(fields: &'a [String]) -> Result<Self, CliError> {
        if fields.len() != R::COLUMNS.len() {
            return Err(CliError::Format(format!(
                "expected {} fields, found {}",
                R::COLUMNS.len(),
                fields.len()
            )));
        }
        Ok(Self { fields, next: 0 })
    }

    fn raw(&mut self) -> &'a str {
        let field = &self.fields[self.next];
        self.next += 1;
        field
    }

    fn parse<T: FromStr>(&mut self, what: &str) -> Result<T, CliError> {
        let raw = self.raw();
        raw.parse()
            .map_err(|_| CliError::Format(format!("cannot read {raw:?} as {what}")))
    }

    pub fn text(&mut self) -> Result<String, CliError> {
        Ok(self.raw().to_owned())
    }

    pub fn float(&mut self) -> Result<f64, CliError> {
        self.parse("a float")
    }

    pub fn opt_float(&mut self) -> Result<Option<f64>, CliError> {
        if self.fields[self.next].is_empty() {
            self.next += 1;
            return Ok(None);
        }
        self.float().map(Some)
    }

    pub fn int(&mut self) -> Result<u64, CliError> {
        self.parse("an integer")
    }

    pub fn opt_int(&mut self) -> Result<Option<u64>, CliError> {
        if self.fields[self.next].is_empty() {
            self.next += 1;
            return Ok(None);
        }
        self.int().map(Some)
    }

    pub fn boolean(&mut self) -> Result<bool, CliError> {
        self.parse("a boolean")
    }
}

pub fn render<R: Record>(rows: &[R], format: Format) -> Result<Vec<u8>, CliError> {
    match format {
        Format::Csv => render_csv(rows, true),
        Format::Json => render_json(rows.iter().map(|r| r.cells()).collect::<Vec<_>>(), R::COLUMNS),
    }
}

fn render_csv<R: Record>(rows: &[R], header: bool) -> Result<Vec<u8>, CliError> {
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let csv_err = |e: csv::Error| CliError::Format(e.to_string());
    if header {
        writer.write_record(R::COLUMNS).map_err(csv_err)?;
    }
    for row in rows {
        writer
            .write_record(row.cells().iter().map(Cell::to_field))
            .map_err(csv_err)?;
    }
    writer
        .into_inner()
        .map_err(|e| CliError::Format(e.to_string()))
}

fn render_json(rows: Vec<Vec<Cell>>, columns: &[&str]) -> Result<Vec<u8>, CliError> {
    let array: Vec<Value> = rows
        .into_iter()
        .map(|cells| json_object(columns, &cells))
        .collect();
    let mut text = serde_json::to_vec_pretty(&Value::Array(array))
        .map_err(|e| CliError::Format(e.to_string()))?;
    text.push(b'\n');
    Ok(text)
}

fn json_object(columns: &[&str], cells: &[Cell]) -> Value {
    let map: Map<String, Value> = columns
        .iter()
        .zip(cells)
        .map(|(name, cell)| ((*name).to_owned(), cell.to_json()))
        .collect();
    Value::Object(map)
}

/// Writes `rows` to `path`, replacing any existing file.
pub fn write_file<R: Record>(path: &Path, rows: &[R], format: Format) -> Result<(), CliError> {
    let bytes = render(rows, format)?;
    fs::write(path, bytes).map_err(|source| CliError::io(path, source))
}

/// Appends `rows` to `path`. A new CSV file gets the header; an existing one
/// must carry the same header. JSON files are re-read and rewritten with the
/// rows added to the array.
pub fn append_file<R: Record>(path: &Path, rows: &[R], format: Format) -> Result<(), CliError> {
    let existing = match fs::read_to_string(path) {
        Ok(text) => Some(text),
        Err(e) if e.kind() == io::ErrorKind::NotFound => None,
        Err(source) => return Err(CliError::io(path, source)),
    };
    let existing = existing.filter(|text| !text.trim().is_empty());
    match (format, existing) {
        (_, None) => write_file(path, rows, format),
        (Format::Csv, Some(text)) => {
            let header = text.lines().next().unwrap_or_default();
            if header != R::COLUMNS.join(",") {
                return Err(CliError::Format(format!(
                    "{} has a different header: {header}",
                    path.display()
                )));
            }
            let mut file = fs::OpenOptions::new()
                .append(true)
                .open(path)
                .map_err(|source| CliError::io(path, source))?;
            let mut bytes = render_csv(rows, false)?;
            if !text.ends_with('\n') {
                bytes.insert(0, b'\n');
            }
            file.write_all(&bytes).map_err(|source| CliError::io(path, source))
        }
        (Format::Json, Some(text)) => {
            let mut all = parse_json(&text, R::COLUMNS)?
                .iter()
                .map(|fields| R::from_fields(fields).map(|r| r.cells()))
                .collect::<Result<Vec<_>, _>>()?;
            all.extend(rows.iter().map(|r| r.cells()));
            let bytes = render_json(all, R::COLUMNS)?;
            fs::write(path, bytes).map_err(|source| CliError::io(path, source))
        }
    }
}

/// Raw fields of every data row, checking the header against `columns`.
pub fn parse_csv(text: &str, columns: &[&str]) -> Result<Vec<Vec<String>>, CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(text.as_bytes());
    let header = reader
        .headers()
        .map_err(|e| CliError::Format(e.to_string()))?;
    if !header.iter().eq(columns.iter().copied()) {
        return Err(CliError::Format(format!("unexpected header: {header:?}")));
    }
    reader
        .records()
        .map(|rec| {
            rec.map(|r| r.iter().map(str::to_owned).collect())
                .map_err(|e| CliError::Format(e.to_string()))
        })
        .collect()
}

/// Raw fields of every object in a JSON array, in `columns` order. Numbers
/// are returned as written, so no precision is lost on the way back.
pub fn parse_json(text: &str, columns: &[&str]) -> Result<Vec<Vec<String>>, CliError> {
    let value: Value = serde_json::from_str(text).map_err(|e| CliError::Format(e.to_string()))?;
    let Value::Array(items) = value else {
        return Err(CliError::Format("expected a JSON array".into()));
    };
    items
        .iter()
        .map(|item| {
            let obj = item
                .as_object()
                .ok_or_else(|| CliError::Format("expected an object per row".into()))?;
            if obj.len() != columns.len() {
                return Err(CliError::Format(format!("row has {} fields", obj.len())));
            }
            columns
                .iter()
                .map(|name| match obj.get(*name) {
                    Some(Value::String(s)) => Ok(s.clone()),
                    Some(Value::Number(n)) => Ok(n.to_string()),
                    Some(Value::Bool(b)) => Ok(b.to_string()),
                    Some(Value::Null) => Ok(String::new()),
                    _ => Err(CliError::Format(format!("missing or nested field {name}"))),
                })
                .collect()
        })
        .collect()
}

/// Parses serialized rows of type `R` in either format.
pub fn read_rows<R: Record>(text: &str, format: Format) -> Result<Vec<R>, CliError> {
    let raw = match format {
        Format::Csv => parse_csv(text, R::COLUMNS)?,
        Format::Json => parse_json(text, R::COLUMNS)?,
    };
    raw.iter().map(|fields| R::from_fields(fields)).collect()
}
