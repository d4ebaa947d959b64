//! The `QEC1` text format for generator matrices.
//!
//! ```text
//! # comment
//! QEC1 n=2 rows=2 dim=3
//! 1 -1 | 0 0
//! 0 0 | 1 1
//! ```
//!
//! The header gives the register count, the row count and the local
//! dimension (an integer modulus, or `Z`). Each body line holds `2n` signed
//! integers with an optional `|` between the halves.

use crate::error::{Error, Result};
use crate::symplectic::{GeneratorMatrix, LocalDimension};

pub const MAGIC: &str = "QEC1";

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_dim(tag: &str, line: usize) -> Result<LocalDimension> {
    if tag == "Z" {
        return Ok(LocalDimension::Integers);
    }
    let q: i64 = tag
        .parse()
        .map_err(|_| parse_error(line, format!("bad dim `{tag}`")))?;
    LocalDimension::from_modulus(q).map_err(|e| parse_error(line, e.to_string()))
}

fn render_dim(dim: LocalDimension) -> Result<String> {
    match dim {
        LocalDimension::Integers => Ok("Z".into()),
        other => other
            .modulus()
            .map(|q| q.to_string())
            .ok_or_else(|| Error::Domain(format!("dimension {other} has no file tag"))),
    }
}

struct Header {
    n: usize,
    rows: usize,
    dim: LocalDimension,
}

fn parse_header(text: &str, line: usize) -> Result<Header> {
    let mut tokens = text.split_whitespace();
    if tokens.next() != Some(MAGIC) {
        return Err(parse_error(line, format!("expected `{MAGIC}` header")));
    }
    let (mut n, mut rows, mut dim) = (None, None, None);
    for token in tokens {
        let (key, value) = token
            .split_once('=')
            .ok_or_else(|| parse_error(line, format!("bad header field `{token}`")))?;
        let count = || -> Result<usize> {
            value
                .parse()
                .map_err(|_| parse_error(line, format!("bad {key} `{value}`")))
        };
        let slot_taken = match key {
            "n" => n.replace(count()?).is_some(),
            "rows" => rows.replace(count()?).is_some(),
            "dim" => dim.replace(parse_dim(value, line)?).is_some(),
            _ => return Err(parse_error(line, format!("unknown header field `{key}`"))),
        };
        if slot_taken {
            return Err(parse_error(line, format!("duplicate header field `{key}`")));
        }
    }
    let missing = |k: &str| parse_error(line, format!("header lacks `{k}`"));
    Ok(Header {
        n: n.ok_or_else(|| missing("n"))?,
        rows: rows.ok_or_else(|| missing("rows"))?,
        dim: dim.ok_or_else(|| missing("dim"))?,
    })
}

pub fn parse_code_file(text: &str) -> Result<GeneratorMatrix> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (header_line, header_text) = lines
        .next()
        .ok_or_else(|| parse_error(1, "empty file"))?;
    let header = parse_header(header_text, header_line)?;

    let mut body = Vec::with_capacity(header.rows);
    for (line, text) in lines {
        let mut row = Vec::with_capacity(2 * header.n);
        let mut bar_at = None;
        for token in text.split_whitespace() {
            if token == "|" {
                if bar_at.replace(row.len()).is_some() {
                    return Err(parse_error(line, "more than one `|`"));
                }
                continue;
            }
            row.push(
                token
                    .parse::<i64>()
                    .map_err(|_| parse_error(line, format!("bad integer `{token}`")))?,
            );
        }
        if row.len() != 2 * header.n {
            return Err(parse_error(
                line,
                format!("expected {} integers, found {}", 2 * header.n, row.len()),
            ));
        }
        if bar_at.is_some_and(|at| at != header.n) {
            return Err(parse_error(line, "`|` must split the row in half"));
        }
        body.push(row);
    }
    if body.len() != header.rows {
        return Err(parse_error(
            header_line,
            format!("header declares {} rows, body has {}", header.rows, body.len()),
        ));
    }
    GeneratorMatrix::from_rows(header.n, &body, header.dim)
}

pub fn render_code_file(m: &GeneratorMatrix) -> Result<String> {
    let n = m.n();
    let mut out = format!(
        "{MAGIC} n={n} rows={} dim={}\n",
        m.num_rows(),
        render_dim(m.dim())?
    );
    for row in m.rows() {
        let half = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(" ");
        out.push_str(&format!("{} | {}\n", half(row.x()), half(row.z())));
    }
    Ok(out)
}
