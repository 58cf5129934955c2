//! The plain-text instance format.
//!
//! ```text
//! # comments run to end of line
//! m n
//! alpha beta
//! c_1 ... c_n
//! d_1 ... d_n
//! <m rows of n space-separated 0/1 entries>
//! ```
//!
//! Tokens are whitespace-separated. Each logical line must carry exactly
//! the expected number of tokens; anything after the last matrix row is
//! trailing garbage. All errors carry the offending (1-based) line number.

use crate::error::{Error, Result};
use crate::instance::Instance;
use std::fmt::Write as _;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_int(line: usize, token: &str, what: &str) -> Result<i64> {
    token
        .parse::<i64>()
        .map_err(|_| parse_err(line, format!("invalid {what} `{token}`")))
}

/// Parses an instance from the text format, validating as it goes.
pub fn parse_instance(input: &str) -> Result<Instance> {
    // logical lines: comment-stripped, non-empty, with their source line number
    let mut lines = input.lines().enumerate().filter_map(|(idx, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        if tokens.is_empty() {
            None
        } else {
            Some((idx + 1, tokens))
        }
    });

    let mut take = |what: &str, expected: Option<usize>| -> Result<(usize, Vec<String>)> {
        let (line, tokens) = lines
            .next()
            .ok_or_else(|| parse_err(0, format!("unexpected end of input, expected {what}")))?;
        if let Some(count) = expected {
            if tokens.len() != count {
                return Err(parse_err(
                    line,
                    format!("expected {count} tokens for {what}, found {}", tokens.len()),
                ));
            }
        }
        Ok((line, tokens.into_iter().map(str::to_owned).collect()))
    };

    let (line, header) = take("`m n`", Some(2))?;
    let m = parse_int(line, &header[0], "row count")?;
    let n = parse_int(line, &header[1], "column count")?;
    if m < 1 || n < 1 {
        return Err(parse_err(line, format!("dimensions must be positive, got m={m} n={n}")));
    }
    let (m, n) = (m as usize, n as usize);
    if n > Instance::MAX_COLUMNS {
        return Err(parse_err(
            line,
            format!("column count {n} exceeds the limit {}", Instance::MAX_COLUMNS),
        ));
    }

    let (line, ab) = take("`alpha beta`", Some(2))?;
    let alpha = parse_int(line, &ab[0], "alpha")?;
    let beta = parse_int(line, &ab[1], "beta")?;
    let beta_line = line;

    let (line, c_tokens) = take("cost vector", Some(n))?;
    let c: Vec<i64> = c_tokens
        .iter()
        .map(|t| parse_int(line, t, "cost"))
        .collect::<Result<_>>()?;
    let c_line = line;

    let (line, d_tokens) = take("weight vector", Some(n))?;
    let d: Vec<i64> = d_tokens
        .iter()
        .map(|t| parse_int(line, t, "weight"))
        .collect::<Result<_>>()?;
    let d_line = line;

    let mut a = Vec::with_capacity(m);
    let mut row_lines = Vec::with_capacity(m);
    for i in 0..m {
        let (line, row_tokens) = take(&format!("matrix row {}", i + 1), Some(n))?;
        let row: Vec<i64> = row_tokens
            .iter()
            .map(|t| parse_int(line, t, "matrix entry"))
            .collect::<Result<_>>()?;
        a.push(row);
        row_lines.push(line);
    }

    if let Some((line, tokens)) = lines.next() {
        return Err(parse_err(
            line,
            format!("trailing garbage `{}` after the last matrix row", tokens.join(" ")),
        ));
    }

    // attribute validation failures to the line that carries the bad value
    Instance::new(&a, &c, &d, alpha, beta).map_err(|e| match e {
        Error::NonPositiveBeta { .. } => parse_err(beta_line, e.to_string()),
        Error::NonBinaryMatrix { row, .. } => parse_err(row_lines[row], e.to_string()),
        Error::MagnitudeOverflow { ref what, .. } => {
            let line = if what.starts_with("c_") {
                c_line
            } else if what.starts_with("d_") {
                d_line
            } else {
                beta_line
            };
            parse_err(line, e.to_string())
        }
        other => other,
    })
}

/// Writes an instance in the canonical form `parse_instance` accepts.
pub fn write_instance(inst: &Instance) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", inst.m(), inst.n());
    let _ = writeln!(out, "{} {}", inst.alpha(), inst.beta());
    let join = |v: &[i64]| {
        v.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let _ = writeln!(out, "{}", join(inst.c()));
    let _ = writeln!(out, "{}", join(inst.d()));
    for i in 0..inst.m() {
        let row: Vec<String> = (0..inst.n()).map(|j| inst.entry(i, j).to_string()).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}
