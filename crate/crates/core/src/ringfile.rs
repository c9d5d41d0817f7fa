//! Line-oriented text format for rings.
//!
//! ```text
//! # E4
//! moduli: 2 2
//! c 1 1 : 1 0
//! c 1 2 : 1 0
//! c 2 1 : 0 1
//! c 2 2 : 0 1
//! ```
//!
//! `#` starts a comment, blank lines are ignored, indices are 1-based and
//! coordinates are reduced modulo the moduli when read.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::ring::{AdditiveGroupShape, FiniteRing, RingElement};

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_ints(line: usize, text: &str, what: &str) -> Result<Vec<i64>> {
    text.split_whitespace()
        .map(|t| {
            t.parse::<i64>()
                .map_err(|_| syntax(line, format!("bad {what} `{t}`")))
        })
        .collect()
}

pub fn parse_ring_file(text: &str) -> Result<FiniteRing> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(n, raw)| (n + 1, raw.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (first, header) = lines.next().ok_or_else(|| syntax(1, "empty ring file"))?;
    let moduli_text = header
        .strip_prefix("moduli:")
        .ok_or_else(|| syntax(first, "expected `moduli: d1 d2 ... dk`"))?;
    let moduli = parse_ints(first, moduli_text, "modulus")?;
    if moduli.is_empty() {
        return Err(syntax(first, "no moduli given"));
    }
    let moduli = moduli
        .into_iter()
        .map(|d| u32::try_from(d).map_err(|_| syntax(first, format!("bad modulus `{d}`"))))
        .collect::<Result<Vec<_>>>()?;
    let shape = AdditiveGroupShape::new(moduli).map_err(|e| match e {
        Error::InvalidModulus { .. } | Error::EmptyShape => syntax(first, e.to_string()),
        other => other,
    })?;
    let k = shape.rank();

    let mut table: Vec<Vec<Option<RingElement>>> = vec![vec![None; k]; k];
    let mut last = first;
    for (n, line) in lines {
        last = n;
        let body = line
            .strip_prefix('c')
            .filter(|rest| rest.starts_with(char::is_whitespace))
            .ok_or_else(|| syntax(n, "expected `c i j : a1 ... ak`"))?;
        let (lhs, rhs) = body
            .split_once(':')
            .ok_or_else(|| syntax(n, "missing `:`"))?;
        let idx = parse_ints(n, lhs, "index")?;
        let (i, j) = match idx[..] {
            [i, j] if (1..=k as i64).contains(&i) && (1..=k as i64).contains(&j) => {
                (i as usize - 1, j as usize - 1)
            }
            _ => return Err(syntax(n, format!("indices must be two integers in 1..={k}"))),
        };
        let coords = parse_ints(n, rhs, "coordinate")?;
        if coords.len() != k {
            return Err(syntax(
                n,
                format!("expected {k} coordinates, found {}", coords.len()),
            ));
        }
        if table[i][j].is_some() {
            return Err(syntax(n, format!("duplicate constant c {} {}", i + 1, j + 1)));
        }
        table[i][j] = Some(shape.reduce(&coords)?);
    }

    let mut constants = Vec::with_capacity(k);
    for (i, row) in table.into_iter().enumerate() {
        let mut out = Vec::with_capacity(k);
        for (j, c) in row.into_iter().enumerate() {
            out.push(c.ok_or_else(|| {
                syntax(last + 1, format!("missing constant c {} {}", i + 1, j + 1))
            })?);
        }
        constants.push(out);
    }
    FiniteRing::validate(shape, constants)
}

pub fn serialize_ring(ring: &FiniteRing) -> String {
    let mut out = String::from("moduli:");
    for d in ring.shape().moduli() {
        let _ = write!(out, " {d}");
    }
    out.push('\n');
    for (i, row) in ring.constants().iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            let _ = write!(out, "c {} {} :", i + 1, j + 1);
            for a in c.coords() {
                let _ = write!(out, " {a}");
            }
            out.push('\n');
        }
    }
    out
}
