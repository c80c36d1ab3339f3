//! Text, CSV and JSON formats.
//!
//! The matrix text format is one or more blocks, each an order `n` on its own
//! line followed by `n` rows of `n` whitespace-separated entries. Entries are
//! integers or rationals written `p/q`. Blank lines separate blocks and `#`
//! starts a comment.

use std::io::Read;
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{IntMatrix, Matrix, RatMatrix};

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((i + 1, body))
    })
}

fn parse_entry(tok: &str, line: usize) -> Result<BigRational> {
    let bad = |msg: String| Error::Parse { line, msg };
    match tok.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.parse().map_err(|_| bad(format!("bad numerator `{tok}`")))?;
            let q: BigInt = q.parse().map_err(|_| bad(format!("bad denominator `{tok}`")))?;
            if q == BigInt::from(0) {
                return Err(bad(format!("zero denominator `{tok}`")));
            }
            Ok(BigRational::new(p, q))
        }
        None => {
            let p: BigInt = tok.parse().map_err(|_| bad(format!("bad entry `{tok}`")))?;
            Ok(BigRational::from_integer(p))
        }
    }
}

/// Parses every block in `text`.
pub fn parse_rat_matrices(text: &str) -> Result<Vec<RatMatrix>> {
    let mut lines = content_lines(text);
    let mut out = Vec::new();
    while let Some((line, head)) = lines.next() {
        let n: usize = head.parse().map_err(|_| Error::Parse {
            line,
            msg: format!("expected matrix order, found `{head}`"),
        })?;
        if n == 0 {
            return Err(Error::Parse { line, msg: "order must be positive".into() });
        }
        let mut data = Vec::with_capacity(n * n);
        for r in 0..n {
            let (line, row) = lines.next().ok_or(Error::Parse {
                line,
                msg: format!("block ends after {r} of {n} rows"),
            })?;
            let toks: Vec<&str> = row.split_whitespace().collect();
            if toks.len() != n {
                return Err(Error::Parse {
                    line,
                    msg: format!("row has {} entries, expected {n}", toks.len()),
                });
            }
            for t in toks {
                data.push(parse_entry(t, line)?);
            }
        }
        out.push(Matrix::new(n, data)?);
    }
    Ok(out)
}

/// Parses every block, requiring integer entries.
pub fn parse_int_matrices(text: &str) -> Result<Vec<IntMatrix>> {
    parse_rat_matrices(text)?
        .into_iter()
        .enumerate()
        .map(|(k, m)| {
            m.scaled_to_int(&BigInt::one()).ok_or(Error::Parse {
                line: 0,
                msg: format!("block {} has non-integer entries", k + 1),
            })
        })
        .collect()
}

/// Parses exactly one integer matrix.
pub fn parse_int_matrix(text: &str) -> Result<IntMatrix> {
    let mut all = parse_int_matrices(text)?;
    match all.len() {
        1 => Ok(all.pop().expect("one block")),
        k => Err(Error::Parse { line: 0, msg: format!("expected one matrix, found {k}") }),
    }
}

/// Rows of floating-point numbers, comments and blank lines skipped.
pub fn parse_float_rows(text: &str) -> Result<Vec<Vec<f64>>> {
    content_lines(text)
        .map(|(line, body)| {
            body.split_whitespace()
                .map(|t| t.parse::<f64>().map_err(|_| Error::Parse { line, msg: format!("bad number `{t}`") }))
                .collect()
        })
        .collect()
}

/// Reads a file, or standard input when `path` is `-`.
pub fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

/// Several matrices as consecutive text blocks separated by blank lines.
pub fn format_blocks<T: std::fmt::Display>(ms: &[Matrix<T>]) -> String {
    ms.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n")
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize")
}

/// Row-major entries joined by single spaces, as used in CSV cells.
pub fn entry_string(m: &IntMatrix) -> String {
    m.entries().iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// Writes rows of string cells as CSV with a header.
pub fn write_csv<W: std::io::Write>(out: W, header: &[&str], rows: &[Vec<String>]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let map = |e: csv::Error| Error::Io(std::io::Error::other(e));
    w.write_record(header).map_err(map)?;
    for r in rows {
        w.write_record(r).map_err(map)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_blocks() {
        let a = IntMatrix::from_rows(&[&[1, 2], &[3, -4]]).unwrap();
        let b = IntMatrix::identity(3);
        let text = format_blocks(&[a.clone(), b.clone()]);
        assert_eq!(parse_int_matrices(&text).unwrap(), vec![a, b]);
    }

    #[test]
    fn rationals_and_comments() {
        let text = "# half-integers\n2\n1/2 -3/2\n  4 6/4 # trailing\n";
        let m = &parse_rat_matrices(text).unwrap()[0];
        assert_eq!(*m.get(2, 2), BigRational::new(3.into(), 2.into()));
        assert!(parse_int_matrices(text).is_err());
        assert_eq!(m.to_string(), "2\n1/2 -3/2\n4 3/2\n");
    }

    #[test]
    fn errors_carry_line_numbers() {
        match parse_rat_matrices("2\n1 2\n3\n") {
            Err(Error::Parse { line: 3, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_rat_matrices("2\n1 2\n").is_err());
        assert!(parse_rat_matrices("x\n").is_err());
        assert!(parse_rat_matrices("1\n1/0\n").is_err());
    }

    #[test]
    fn csv_output() {
        let mut buf = Vec::new();
        write_csv(&mut buf, &["a", "b"], &[vec!["1 2".into(), "x".into()]]).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "a,b\n1 2,x\n");
    }
}
