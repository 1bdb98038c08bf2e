//! Plain-text code files.
//!
//! ```text
//! q=3 n=4 kind=linear
//! 1011
//! 0112
//! ```
//!
//! Linear files list generator rows, explicit files list codewords. Each row
//! is `n` base-q digits (lowercase base-36 above 10), no inner whitespace.
//! `#` starts a comment.

use std::fmt::Write as _;

use super::{AnyCode, Code, LinearCode, Word};
use crate::algebra::{Field, Symbol};
use crate::error::{Error, Result};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn digit_char(s: Symbol) -> char {
    std::char::from_digit(s as u32, 36).expect("symbol below 36")
}

fn format_row(out: &mut String, w: &[Symbol]) {
    out.extend(w.iter().map(|&s| digit_char(s)));
    out.push('\n');
}

/// Serializes a code. Fails only for q > 36, which has no digit alphabet.
pub fn write_code(code: &AnyCode) -> Result<String> {
    let q = code.field().q();
    if q > 36 {
        return Err(Error::BadParams(format!(
            "q = {q} has no base-36 digit encoding"
        )));
    }
    let mut out = String::new();
    match code {
        AnyCode::Linear(c) => {
            writeln!(out, "q={q} n={} kind=linear", c.n()).unwrap();
            for r in 0..c.k() {
                format_row(&mut out, &c.generator().row(r));
            }
        }
        AnyCode::Explicit(c) => {
            writeln!(out, "q={q} n={} kind=explicit", c.n()).unwrap();
            for w in c.words() {
                format_row(&mut out, w);
            }
        }
    }
    Ok(out)
}

fn header_field<'a>(tokens: &[&'a str], key: &str) -> Result<&'a str> {
    tokens
        .iter()
        .find_map(|t| t.strip_prefix(key).and_then(|r| r.strip_prefix('=')))
        .ok_or_else(|| parse_err(1, format!("header is missing `{key}=`")))
}

pub fn parse_code(text: &str) -> Result<AnyCode> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "empty file"))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    let q: usize = header_field(&tokens, "q")?
        .parse()
        .map_err(|_| parse_err(hline, "q is not an integer"))?;
    let n: usize = header_field(&tokens, "n")?
        .parse()
        .map_err(|_| parse_err(hline, "n is not an integer"))?;
    let kind = header_field(&tokens, "kind")?;
    if q > 36 {
        return Err(parse_err(hline, format!("q = {q} exceeds base-36 digits")));
    }
    let field = Field::new(q)?;
    let mut rows: Vec<Word> = Vec::new();
    for (no, line) in lines {
        if line.chars().count() != n {
            return Err(parse_err(
                no,
                format!("expected {n} digits, found {}", line.chars().count()),
            ));
        }
        let row = line
            .chars()
            .map(|ch| match ch.to_digit(36) {
                Some(d) if (d as usize) < q && !ch.is_ascii_uppercase() => Ok(d as Symbol),
                _ => Err(parse_err(no, format!("`{ch}` is not a base-{q} digit"))),
            })
            .collect::<Result<Word>>()?;
        rows.push(row);
    }
    match kind {
        "linear" => Ok(AnyCode::Linear(LinearCode::from_rows(&field, n, &rows)?)),
        "explicit" => Ok(AnyCode::Explicit(Code::new(&field, n, rows)?)),
        other => Err(parse_err(hline, format!("unknown kind `{other}`"))),
    }
}

pub fn read_code(path: &std::path::Path) -> Result<AnyCode> {
    parse_code(&std::fs::read_to_string(path)?)
}
