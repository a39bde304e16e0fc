//! Text formats: Cayley tables, table streams with a trailing summary line.
//!
//! A table is written as its order on one line followed by `n` rows of `n`
//! space-separated entries. Lines starting with `#` are comments. A stream is
//! a sequence of tables separated by blank lines, optionally closed by a
//! summary line `count_labeled=<n> count_iso=<m|-> exhausted=<bool>`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::table::{CayleyTable, MAX_ORDER};

fn format_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Format {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace-separated tokens of a line with their 1-based character column.
pub(crate) fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    for (col, (byte, ch)) in line.char_indices().enumerate() {
        match (ch.is_whitespace(), start) {
            (true, Some((s_col, s_byte))) => {
                out.push((s_col + 1, &line[s_byte..byte]));
                start = None;
            }
            (false, None) => start = Some((col, byte)),
            _ => {}
        }
    }
    if let Some((s_col, s_byte)) = start {
        out.push((s_col + 1, &line[s_byte..]));
    }
    out
}

fn is_comment(line: &str) -> bool {
    line.trim_start().starts_with('#')
}

fn parse_index(tok: &str, line: usize, column: usize) -> Result<usize> {
    if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format_err(
            line,
            column,
            format!("expected a non-negative integer, found {tok:?}"),
        ));
    }
    tok.parse::<usize>()
        .map_err(|_| format_err(line, column, format!("integer {tok:?} is too large")))
}

/// Parses one table from `(line_number, text)` pairs that are neither blank nor comments.
fn parse_table_lines(lines: &[(usize, &str)], last_line: usize) -> Result<CayleyTable> {
    let Some(&(header_no, header)) = lines.first() else {
        return Err(format_err(last_line + 1, 1, "expected the table order"));
    };
    let header_toks = tokens(header);
    let (col, tok) = header_toks[0];
    let order = parse_index(tok, header_no, col)?;
    if let Some(&(extra_col, _)) = header_toks.get(1) {
        return Err(format_err(
            header_no,
            extra_col,
            "the order line must hold a single integer",
        ));
    }
    if order == 0 {
        return Err(format_err(header_no, col, "order must be at least 1"));
    }
    if order > MAX_ORDER {
        return Err(format_err(
            header_no,
            col,
            format!("order {order} exceeds the maximum {MAX_ORDER}"),
        ));
    }

    let rows = &lines[1..];
    let mut entries = Vec::with_capacity(order * order);
    for (row_idx, &(line_no, text)) in rows.iter().enumerate() {
        if row_idx >= order {
            return Err(format_err(line_no, 1, format!("unexpected content after {order} rows")));
        }
        let toks = tokens(text);
        if toks.len() < order {
            let end = text.chars().count() + 1;
            return Err(format_err(
                line_no,
                end,
                format!("expected {order} entries, found {}", toks.len()),
            ));
        }
        if let Some(&(extra_col, _)) = toks.get(order) {
            return Err(format_err(
                line_no,
                extra_col,
                format!("expected {order} entries, found {}", toks.len()),
            ));
        }
        for (col, tok) in toks {
            let e = parse_index(tok, line_no, col)?;
            if e >= order {
                return Err(format_err(
                    line_no,
                    col,
                    format!("entry {e} out of range for order {order}"),
                ));
            }
            entries.push(e as u8);
        }
    }
    if rows.len() < order {
        let line = rows.last().map_or(header_no, |r| r.0) + 1;
        return Err(format_err(
            line,
            1,
            format!("expected {order} rows, found {}", rows.len()),
        ));
    }
    Ok(CayleyTable::from_raw(order, entries))
}

/// Parses exactly one table. Blank lines and `#` comments are ignored.
pub fn parse_table(text: &str) -> Result<CayleyTable> {
    let mut last = 0;
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| {
            last = i + 1;
            (i + 1, l)
        })
        .filter(|(_, l)| !l.trim().is_empty() && !is_comment(l))
        .collect();
    parse_table_lines(&lines, last)
}

impl FromStr for CayleyTable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_table(s)
    }
}

/// The closing line of an enumeration stream.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumSummary {
    pub count_labeled: u64,
    pub count_iso: Option<u64>,
    pub exhausted: bool,
}

impl fmt::Display for EnumSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "count_labeled={} count_iso=", self.count_labeled)?;
        match self.count_iso {
            Some(m) => write!(f, "{m}")?,
            None => f.write_str("-")?,
        }
        write!(f, " exhausted={}", self.exhausted)
    }
}

fn parse_summary(line_no: usize, text: &str) -> Result<EnumSummary> {
    let toks = tokens(text);
    let keys = ["count_labeled", "count_iso", "exhausted"];
    if toks.len() != keys.len() {
        let col = toks.get(keys.len()).map_or(1, |t| t.0);
        return Err(format_err(line_no, col, "summary line needs exactly three fields"));
    }
    let mut values = [""; 3];
    for (i, (&(col, tok), key)) in toks.iter().zip(keys).enumerate() {
        match tok.split_once('=') {
            Some((k, v)) if k == key => values[i] = v,
            _ => return Err(format_err(line_no, col, format!("expected {key}=<value>"))),
        }
    }
    let field_col = |i: usize| toks[i].0 + keys[i].len() + 1;
    let count_labeled = values[0]
        .parse()
        .map_err(|_| format_err(line_no, field_col(0), "count_labeled must be an integer"))?;
    let count_iso = match values[1] {
        "-" => None,
        v => Some(
            v.parse()
                .map_err(|_| format_err(line_no, field_col(1), "count_iso must be an integer or '-'"))?,
        ),
    };
    let exhausted = match values[2] {
        "true" => true,
        "false" => false,
        _ => return Err(format_err(line_no, field_col(2), "exhausted must be true or false")),
    };
    Ok(EnumSummary {
        count_labeled,
        count_iso,
        exhausted,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableStream {
    pub tables: Vec<CayleyTable>,
    pub summary: Option<EnumSummary>,
}

/// Parses blank-line separated tables, as written by the enumerator.
pub fn parse_table_stream(text: &str) -> Result<TableStream> {
    let mut blocks: Vec<Vec<(usize, &str)>> = vec![Vec::new()];
    let mut last = 0;
    for (i, line) in text.lines().enumerate() {
        last = i + 1;
        if is_comment(line) {
            continue;
        }
        if line.trim().is_empty() {
            if !blocks.last().unwrap().is_empty() {
                blocks.push(Vec::new());
            }
            continue;
        }
        blocks.last_mut().unwrap().push((i + 1, line));
    }
    blocks.retain(|b| !b.is_empty());

    let mut stream = TableStream {
        tables: Vec::new(),
        summary: None,
    };
    for block in &blocks {
        let (line_no, first) = block[0];
        if let Some(summary_line) = stream.summary.map(|_| line_no) {
            return Err(format_err(summary_line, 1, "content after the summary line"));
        }
        if first.trim_start().starts_with("count_labeled=") {
            if block.len() > 1 {
                return Err(format_err(block[1].0, 1, "content after the summary line"));
            }
            stream.summary = Some(parse_summary(line_no, first)?);
        } else {
            stream.tables.push(parse_table_lines(block, last)?);
        }
    }
    Ok(stream)
}

/// Writes tables separated by blank lines, then the summary line.
pub fn write_table_stream(tables: &[CayleyTable], summary: &EnumSummary) -> String {
    let mut out = String::new();
    for t in tables {
        out.push_str(&t.to_string());
        out.push('\n');
    }
    out.push_str(&summary.to_string());
    out.push('\n');
    out
}
