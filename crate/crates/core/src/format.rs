//! Poset file formats.
//!
//! Text: the first meaningful line is `d`; every further line `i j` states
//! `y_i < y_j`. Blank lines and lines starting with `#` are ignored.
//!
//! JSON: `{"d": 3, "relations": [[1, 2]]}`.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::Poset;

#[derive(Debug, Serialize, Deserialize)]
struct PosetJson {
    d: usize,
    relations: Vec<(usize, usize)>,
}

/// Parses either format; JSON is recognised by a leading `{`.
pub fn parse_poset(source: &str, origin: &str) -> Result<Poset> {
    if source.trim_start().starts_with('{') {
        parse_json(source, origin)
    } else {
        parse_text(source, origin)
    }
}

pub fn read_poset(path: &Path) -> Result<Poset> {
    let origin = path.display().to_string();
    let source = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        path: origin.clone(),
        line: 0,
        message: e.to_string(),
    })?;
    parse_poset(&source, &origin)
}

fn parse_error(origin: &str, line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        path: origin.to_string(),
        line,
        message: message.into(),
    }
}

fn parse_text(source: &str, origin: &str) -> Result<Poset> {
    let mut d = None;
    let mut pairs = Vec::new();
    let mut pair_lines = Vec::new();
    for (k, raw) in source.lines().enumerate() {
        let line_no = k + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let numbers = fields
            .iter()
            .map(|f| f.parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| {
                parse_error(origin, line_no, format!("expected integers, got `{line}`"))
            })?;
        match (d, numbers.as_slice()) {
            (None, &[n]) => d = Some(n),
            (None, _) => {
                return Err(parse_error(
                    origin,
                    line_no,
                    "first line must be the element count",
                ))
            }
            (Some(n), &[i, j]) => {
                for index in [i, j] {
                    if index == 0 || index > n {
                        return Err(parse_error(
                            origin,
                            line_no,
                            format!("element {index} outside 1..={n}"),
                        ));
                    }
                }
                pairs.push((i, j));
                pair_lines.push(line_no);
            }
            (Some(_), _) => return Err(parse_error(origin, line_no, "expected a relation `i j`")),
        }
    }
    let d = d.ok_or_else(|| parse_error(origin, 0, "empty poset file"))?;
    Poset::from_cover_relations(d, &pairs).map_err(|e| match e {
        Error::CycleInInput(i, j) => {
            let line = pairs
                .iter()
                .position(|&p| p == (i, j))
                .map_or(0, |k| pair_lines[k]);
            parse_error(origin, line, e.to_string())
        }
        other => parse_error(origin, 1, other.to_string()),
    })
}

fn parse_json(source: &str, origin: &str) -> Result<Poset> {
    let parsed: PosetJson =
        serde_json::from_str(source).map_err(|e| parse_error(origin, e.line(), e.to_string()))?;
    Poset::from_cover_relations(parsed.d, &parsed.relations)
        .map_err(|e| parse_error(origin, 1, e.to_string()))
}

/// Text format listing the cover relations.
pub fn to_text(p: &Poset) -> String {
    let mut out = format!("{}\n", p.d());
    for &(i, j) in p.covers() {
        writeln!(out, "{i} {j}").unwrap();
    }
    out
}

pub fn to_json(p: &Poset) -> String {
    serde_json::to_string(&PosetJson {
        d: p.d(),
        relations: p.covers().to_vec(),
    })
    .unwrap()
}
