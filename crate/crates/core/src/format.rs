//! Cayley-table and homomorphism file formats.
//!
//! Text tables: optional `#` comment lines, then the order `n`, then `n` rows
//! of `n` whitespace-separated 0-based indices. JSON tables are one object
//! `{"order": n, "table": [[...], ...]}`. Homomorphism files are JSON objects
//! `{"source": T, "target": T, "map": [...]}` where each `T` is an inline
//! table object, a registry name `@NAME`, or a path to a table file.

use std::fs;
use std::path::{Path, PathBuf};

use serde_json::Value;
use thiserror::Error;

use crate::catalog;
use crate::semigroup::{check_homomorphism, validate_table, FiniteSemigroup, HomError, SemigroupHom, TableError};
use crate::subset::MAX_ORDER;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("input contains no table")]
    Empty,
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Table(#[from] TableError),
    #[error(transparent)]
    Hom(#[from] HomError),
    #[error("unknown named example `{0}`")]
    UnknownExample(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, message: message.into() }
}

/// Significant lines with their 1-based line numbers.
fn significant_lines(input: &str) -> impl Iterator<Item = (usize, &str)> {
    input.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_order(line: usize, text: &str) -> Result<usize, FormatError> {
    let n: usize = text.parse().map_err(|_| syntax(line, format!("expected table order, found `{text}`")))?;
    if n == 0 {
        return Err(TableError::ZeroOrder.into());
    }
    if n > MAX_ORDER {
        return Err(TableError::OrderTooLarge(n).into());
    }
    Ok(n)
}

fn parse_row(line: usize, text: &str) -> Result<Vec<usize>, FormatError> {
    text.split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| syntax(line, format!("expected an element index, found `{t}`"))))
        .collect()
}

fn next_record<'a, I>(lines: &mut std::iter::Peekable<I>) -> Result<Option<FiniteSemigroup>, FormatError>
where
    I: Iterator<Item = (usize, &'a str)>,
{
    let Some((line, head)) = lines.next() else {
        return Ok(None);
    };
    let n = parse_order(line, head)?;
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        match lines.next() {
            Some((line, text)) => rows.push(parse_row(line, text)?),
            None => break,
        }
    }
    Ok(Some(validate_table(n, &rows)?))
}

/// Parses exactly one table in the text format.
pub fn parse_table_text(input: &str) -> Result<FiniteSemigroup, FormatError> {
    let mut lines = significant_lines(input).peekable();
    let table = next_record(&mut lines)?.ok_or(FormatError::Empty)?;
    if let Some((line, _)) = lines.next() {
        return Err(syntax(line, "unexpected data after table"));
    }
    Ok(table)
}

/// Parses a sequence of text-format tables, as written by [`write_table_stream`].
pub fn parse_table_stream(input: &str) -> Result<Vec<FiniteSemigroup>, FormatError> {
    let mut lines = significant_lines(input).peekable();
    let mut out = Vec::new();
    while let Some(t) = next_record(&mut lines)? {
        out.push(t);
    }
    Ok(out)
}

pub fn parse_table_json(input: &str) -> Result<FiniteSemigroup, FormatError> {
    let value: Value = serde_json::from_str(input).map_err(|e| FormatError::Json(e.to_string()))?;
    table_from_value(&value)
}

fn table_from_value(value: &Value) -> Result<FiniteSemigroup, FormatError> {
    let obj = value.as_object().ok_or_else(|| FormatError::Json("table must be an object".into()))?;
    let order = obj
        .get("order")
        .and_then(Value::as_u64)
        .ok_or_else(|| FormatError::Json("missing integer field `order`".into()))?;
    let order = usize::try_from(order).unwrap_or(usize::MAX);
    if order == 0 {
        return Err(TableError::ZeroOrder.into());
    }
    if order > MAX_ORDER {
        return Err(TableError::OrderTooLarge(order).into());
    }
    let rows = obj
        .get("table")
        .and_then(Value::as_array)
        .ok_or_else(|| FormatError::Json("missing array field `table`".into()))?;
    let table = rows
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| FormatError::Json("table rows must be arrays".into()))?
                .iter()
                .map(|x| {
                    x.as_u64()
                        .map(|v| usize::try_from(v).unwrap_or(usize::MAX))
                        .ok_or_else(|| FormatError::Json("table entries must be non-negative integers".into()))
                })
                .collect::<Result<Vec<usize>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(validate_table(order, &table)?)
}

/// Parses either format, choosing JSON when the first non-space character is `{`.
pub fn parse_table(input: &str) -> Result<FiniteSemigroup, FormatError> {
    if input.trim_start().starts_with('{') {
        parse_table_json(input)
    } else {
        parse_table_text(input)
    }
}

pub fn write_table_text(s: &FiniteSemigroup) -> String {
    let mut out = format!("{}\n", s.order());
    for row in s.rows() {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// Tables separated by blank lines.
pub fn write_table_stream<'a, I: IntoIterator<Item = &'a FiniteSemigroup>>(tables: I) -> String {
    tables.into_iter().map(write_table_text).collect::<Vec<_>>().join("\n")
}

pub fn write_table_json(s: &FiniteSemigroup) -> String {
    serde_json::to_string(s).expect("tables serialize")
}

fn io_error(path: &Path, e: std::io::Error) -> FormatError {
    FormatError::Io { path: path.display().to_string(), message: e.to_string() }
}

/// Reads a table from `@NAME` or from a file in either format.
pub fn load_table(source: &str) -> Result<FiniteSemigroup, FormatError> {
    load_table_relative(source, Path::new("."))
}

fn load_table_relative(source: &str, base: &Path) -> Result<FiniteSemigroup, FormatError> {
    if let Some(name) = source.strip_prefix('@') {
        return catalog::lookup(name).map(|e| e.semigroup).ok_or_else(|| FormatError::UnknownExample(name.to_string()));
    }
    let path: PathBuf = base.join(source);
    let text = fs::read_to_string(&path).map_err(|e| io_error(&path, e))?;
    parse_table(&text)
}

/// Parses a homomorphism file; string table references are passed to `resolve`.
pub fn parse_hom_with<F>(input: &str, mut resolve: F) -> Result<SemigroupHom, FormatError>
where
    F: FnMut(&str) -> Result<FiniteSemigroup, FormatError>,
{
    let value: Value = serde_json::from_str(input).map_err(|e| FormatError::Json(e.to_string()))?;
    let obj = value.as_object().ok_or_else(|| FormatError::Json("homomorphism must be an object".into()))?;
    let mut side = |key: &str| -> Result<FiniteSemigroup, FormatError> {
        match obj.get(key) {
            Some(Value::String(s)) => resolve(s),
            Some(v @ Value::Object(_)) => table_from_value(v),
            _ => Err(FormatError::Json(format!("`{key}` must be a table object or a string reference"))),
        }
    };
    let source = side("source")?;
    let target = side("target")?;
    let map = obj
        .get("map")
        .and_then(Value::as_array)
        .ok_or_else(|| FormatError::Json("missing array field `map`".into()))?
        .iter()
        .map(|x| {
            x.as_u64()
                .map(|v| usize::try_from(v).unwrap_or(usize::MAX))
                .ok_or_else(|| FormatError::Json("map entries must be non-negative integers".into()))
        })
        .collect::<Result<Vec<usize>, _>>()?;
    Ok(check_homomorphism(&source, &target, &map)?)
}

/// Parses a homomorphism file whose string references may only be `@NAME`.
pub fn parse_hom(input: &str) -> Result<SemigroupHom, FormatError> {
    parse_hom_with(input, |r| match r.strip_prefix('@') {
        Some(name) => {
            catalog::lookup(name).map(|e| e.semigroup).ok_or_else(|| FormatError::UnknownExample(name.to_string()))
        }
        None => Err(FormatError::Io { path: r.to_string(), message: "file references are not allowed here".into() }),
    })
}

/// Reads a homomorphism file, resolving table paths against its directory.
pub fn load_hom(path: &Path) -> Result<SemigroupHom, FormatError> {
    let text = fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    let base = path.parent().unwrap_or(Path::new("."));
    parse_hom_with(&text, |r| load_table_relative(r, base))
}
