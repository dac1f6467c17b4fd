//! Text and JSON readers for matrices and digraphs.
//!
//! Matrix text: an optional `m n` header line, then one whitespace-separated
//! row per line. Blank lines and `#` comments are skipped. A leading `{` or
//! `[` switches to JSON (`{"rows","cols","entries"}` or a nested array).
//!
//! Digraph text: the vertex count, then one `tail head` line per edge
//! (1-based), then an optional `loops: v1 v2 ...` line.

use crate::digraph::LoopedDigraph;
use crate::error::{Error, Result};
use crate::matrix::SignMatrix;
use crate::polytope::{parse_rational, RationalMatrix};

/// Non-empty lines with comments removed, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(k, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((k + 1, line))
    })
}

/// Splits off a `m n` header when its shape matches the remaining rows.
fn table(text: &str) -> Result<(usize, usize, Vec<(usize, Vec<String>)>)> {
    let mut rows: Vec<(usize, Vec<String>)> = content_lines(text)
        .map(|(k, line)| (k, line.split([' ', '\t', ',']).filter(|t| !t.is_empty()).map(str::to_string).collect()))
        .collect();
    if rows.is_empty() {
        return Err(Error::Parse {
            line: 1,
            message: "no matrix rows".into(),
        });
    }
    let header = match rows[0].1.as_slice() {
        [a, b] => a.parse::<usize>().ok().zip(b.parse::<usize>().ok()),
        _ => None,
    };
    if let Some((m, n)) = header {
        if rows.len() == m + 1 && rows[1..].iter().all(|r| r.1.len() == n) {
            rows.remove(0);
        }
    }
    let cols = rows[0].1.len();
    for (line, r) in &rows {
        if r.len() != cols {
            return Err(Error::Parse {
                line: *line,
                message: format!("expected {cols} entries, found {}", r.len()),
            });
        }
    }
    Ok((rows.len(), cols, rows))
}

pub fn parse_sign_matrix(text: &str) -> Result<SignMatrix> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        return serde_json::from_str(trimmed).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        });
    }
    if trimmed.starts_with('[') {
        let rows: Vec<Vec<i64>> = serde_json::from_str(trimmed).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Parse {
                line: 1,
                message: "ragged rows".into(),
            });
        }
        let flat: Vec<i64> = rows.concat();
        return SignMatrix::from_i64(rows.len(), cols, &flat);
    }
    let (m, n, rows) = table(text)?;
    let mut flat = Vec::with_capacity(m * n);
    for (line, r) in rows {
        for tok in r {
            let v: i64 = tok.parse().map_err(|_| Error::Parse {
                line,
                message: format!("bad entry {tok:?}"),
            })?;
            flat.push(v);
        }
    }
    SignMatrix::from_i64(m, n, &flat)
}

/// Entries may be integers or `p/q`.
pub fn parse_rational_matrix(text: &str) -> Result<RationalMatrix> {
    let (m, n, rows) = table(text)?;
    let mut data = Vec::with_capacity(m * n);
    for (line, r) in rows {
        for tok in r {
            data.push(parse_rational(&tok).map_err(|message| Error::Parse { line, message })?);
        }
    }
    RationalMatrix::new(m, n, data)
}

pub fn parse_digraph(text: &str) -> Result<LoopedDigraph> {
    let mut lines = content_lines(text);
    let (first, head) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing vertex count".into(),
    })?;
    let n: usize = head.parse().map_err(|_| Error::Parse {
        line: first,
        message: format!("bad vertex count {head:?}"),
    })?;
    let mut edges = Vec::new();
    let mut loops = Vec::new();
    let vertex = |tok: &str, line: usize| -> Result<usize> {
        match tok.parse::<usize>() {
            Ok(v) if (1..=n).contains(&v) => Ok(v - 1),
            _ => Err(Error::Parse {
                line,
                message: format!("bad vertex {tok:?}"),
            }),
        }
    };
    for (line, body) in lines {
        if let Some(rest) = body.strip_prefix("loops:") {
            for tok in rest.split_whitespace() {
                loops.push(vertex(tok, line)?);
            }
            continue;
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        let [u, v] = toks.as_slice() else {
            return Err(Error::Parse {
                line,
                message: "expected `tail head`".into(),
            });
        };
        edges.push((vertex(u, line)?, vertex(v, line)?));
    }
    LoopedDigraph::new(n, edges, loops)
}

/// Comma- or space-separated integers, as in `2,0,1`.
pub fn parse_vector(text: &str) -> Result<Vec<i64>> {
    text.split([',', ' '])
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.trim().parse().map_err(|_| Error::Parse {
                line: 1,
                message: format!("bad integer {t:?}"),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_formats() {
        let expected = SignMatrix::from_rows(&[[0, 1], [1, -1]]).unwrap();
        assert_eq!(parse_sign_matrix("2 2\n0 1\n1 -1\n").unwrap(), expected);
        assert_eq!(parse_sign_matrix("# p\n0 1\n\n1 -1").unwrap(), expected);
        assert_eq!(parse_sign_matrix("[[0,1],[1,-1]]").unwrap(), expected);
        let json = serde_json::to_string(&expected).unwrap();
        assert_eq!(parse_sign_matrix(&json).unwrap(), expected);
        assert_eq!(parse_sign_matrix(&expected.to_string()).unwrap(), expected);
        // a 1x2 matrix whose only row looks like a header
        assert_eq!(parse_sign_matrix("1 1").unwrap().shape(), (1, 2));
        assert!(matches!(parse_sign_matrix("0 1\n1"), Err(Error::Parse { line: 2, .. })));
        assert!(parse_sign_matrix("2").is_err());
    }

    #[test]
    fn rationals() {
        let x = parse_rational_matrix("2 2\n1/2 1/2\n1/2 1/2").unwrap();
        assert_eq!(x.get(1, 1).to_string(), "1/2");
        assert!(parse_rational_matrix("1/0").is_err());
    }

    #[test]
    fn digraph_round_trip() {
        let d = parse_digraph("4\n1 2\n2 3\n# x\n1 4\nloops: 3 4\n").unwrap();
        assert_eq!(d.edges(), &[(0, 1), (1, 2), (0, 3)]);
        assert_eq!(d.loops(), &[2, 3]);
        assert_eq!(parse_digraph(&d.to_string()).unwrap(), d);
        assert!(parse_digraph("2\n1 3\n").is_err());
        assert_eq!(parse_vector("2,0, 1").unwrap(), vec![2, 0, 1]);
    }
}
