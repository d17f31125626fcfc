//! Plain and signed edge-list text formats.
//!
//! ```text
//! # family P 4 1        optional header comment
//! 8 12                  vertex count, edge count
//! 0 1                   one edge per line, 0-based
//! 0 4 -                 signed files add a sign column: + or -
//! ```
//!
//! Lines starting with `#` are comments; a `# family ...` comment before the
//! size line names the generating family. Blank lines are ignored. Writers
//! emit edges in canonical sorted order.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::families::Family;
use crate::graph::Graph;
use crate::signed::{Sign, SignedGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub family: Option<Family>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedSigned {
    pub signed: SignedGraph,
    pub family: Option<Family>,
}

impl ParsedGraph {
    pub fn rim_size(&self) -> Option<usize> {
        self.family.as_ref().and_then(Family::rim_size)
    }
}

impl ParsedSigned {
    pub fn rim_size(&self) -> Option<usize> {
        self.family.as_ref().and_then(Family::rim_size)
    }
}

pub fn parse_edge_list(text: &str) -> Result<ParsedGraph> {
    let (n, rows, family) = parse_rows(text, false)?;
    let graph = Graph::new(n, rows.iter().map(|r| (r.1, r.2))).map_err(|e| locate(e, &rows))?;
    Ok(ParsedGraph { graph, family })
}

/// Parses a signed edge list. A pair listed twice must carry the same sign.
pub fn parse_signed_edge_list(text: &str) -> Result<ParsedSigned> {
    let (n, rows, family) = parse_rows(text, true)?;
    let graph = Graph::new(n, rows.iter().map(|r| (r.1, r.2))).map_err(|e| locate(e, &rows))?;
    let mut signs: Vec<Option<Sign>> = vec![None; graph.edge_count()];
    for &(line, a, b, sign) in &rows {
        let sign = sign.expect("signed rows carry a sign");
        let e = graph.edge_index(a, b).expect("edge was inserted");
        match signs[e] {
            Some(prev) if prev != sign => {
                return Err(Error::parse(
                    line,
                    format!("edge {a} {b} listed with both signs"),
                ))
            }
            _ => signs[e] = Some(sign),
        }
    }
    let signs = signs
        .into_iter()
        .map(|s| s.expect("every edge signed"))
        .collect();
    Ok(ParsedSigned {
        signed: SignedGraph::new(graph, signs)?,
        family,
    })
}

pub fn write_edge_list(graph: &Graph, family: Option<&Family>) -> String {
    let mut out = String::new();
    if let Some(f) = family {
        out.push_str(&f.header());
        out.push('\n');
    }
    let _ = writeln!(out, "{} {}", graph.vertex_count(), graph.edge_count());
    for &(a, b) in graph.edges() {
        let _ = writeln!(out, "{a} {b}");
    }
    out
}

pub fn write_signed_edge_list(signed: &SignedGraph, family: Option<&Family>) -> String {
    let mut out = String::new();
    if let Some(f) = family {
        out.push_str(&f.header());
        out.push('\n');
    }
    let g = signed.graph();
    let _ = writeln!(out, "{} {}", g.vertex_count(), g.edge_count());
    for (a, b, s) in signed.signed_edges() {
        let _ = writeln!(out, "{a} {b} {s}");
    }
    out
}

type Row = (usize, usize, usize, Option<Sign>);

// Attach a line number to endpoint errors raised while building the graph.
fn locate(err: Error, rows: &[Row]) -> Error {
    let line_of = |pred: &dyn Fn(&Row) -> bool| rows.iter().find(|r| pred(r)).map(|r| r.0);
    let line = match &err {
        Error::SelfLoop(v) => line_of(&|r| r.1 == *v && r.2 == *v),
        Error::VertexOutOfRange { vertex, .. } => line_of(&|r| r.1 == *vertex || r.2 == *vertex),
        _ => None,
    };
    match line {
        Some(line) => Error::parse(line, err.to_string()),
        None => err,
    }
}

fn parse_rows(text: &str, signed: bool) -> Result<(usize, Vec<Row>, Option<Family>)> {
    let mut family = None;
    let mut header: Option<(usize, usize)> = None;
    let mut rows = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            let words: Vec<&str> = comment.split_whitespace().collect();
            if words.first() == Some(&"family") {
                if header.is_some() {
                    return Err(Error::parse(line, "family header after the size line"));
                }
                let f = Family::from_words(&words[1..])
                    .map_err(|e| Error::parse(line, e.to_string()))?;
                family = Some(f);
            }
            continue;
        }

        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        let number = |s: &str| -> Result<usize> {
            s.parse().map_err(|_| {
                Error::parse(line, format!("expected a non-negative integer, got {s:?}"))
            })
        };

        if header.is_none() {
            if fields.len() != 2 {
                return Err(Error::parse(line, "expected size line \"n m\""));
            }
            header = Some((number(fields[0])?, number(fields[1])?));
            continue;
        }

        let want = if signed { 3 } else { 2 };
        if fields.len() != want {
            return Err(Error::parse(
                line,
                if signed {
                    "expected edge line \"a b s\" with s in {+,-}"
                } else {
                    "expected edge line \"a b\""
                },
            ));
        }
        let (a, b) = (number(fields[0])?, number(fields[1])?);
        let sign = if signed {
            Some(match fields[2] {
                "+" => Sign::Positive,
                "-" => Sign::Negative,
                other => return Err(Error::parse(line, format!("bad sign {other:?}"))),
            })
        } else {
            None
        };
        rows.push((line, a, b, sign));
    }

    let (n, m) =
        header.ok_or_else(|| Error::parse(text.lines().count().max(1), "missing size line"))?;
    if rows.len() != m {
        return Err(Error::parse(
            text.lines().count().max(1),
            format!("size line declares {m} edges, found {}", rows.len()),
        ));
    }
    Ok((n, rows, family))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::petersen;

    #[test]
    fn parses_plain_list_with_header() {
        let text = "# family P 4 1\n# extra comment\n8 2\n\n0 1\n0 4\n";
        let p = parse_edge_list(text).unwrap();
        assert_eq!(p.family, Some(Family::Petersen { n: 4, k: 1 }));
        assert_eq!(p.graph.edges(), &[(0, 1), (0, 4)]);
        assert_eq!(p.rim_size(), Some(4));
    }

    #[test]
    fn line_numbered_errors() {
        let err = |t: &str| parse_edge_list(t).unwrap_err();
        assert!(matches!(err("3 1\n0 x\n"), Error::Parse { line: 2, .. }));
        assert!(matches!(err("3 1\n0 1 2\n"), Error::Parse { line: 2, .. }));
        assert!(matches!(
            err("3 2\n0 1\n1 1\n"),
            Error::Parse { line: 3, .. }
        ));
        assert!(matches!(err("3 1\n0 5\n"), Error::Parse { line: 2, .. }));
        assert!(matches!(err("3 2\n0 1\n"), Error::Parse { .. }));
        assert!(matches!(err("3\n"), Error::Parse { line: 1, .. }));
        assert!(matches!(err(""), Error::Parse { .. }));
        assert!(matches!(
            parse_signed_edge_list("2 1\n0 1 *\n").unwrap_err(),
            Error::Parse { line: 2, .. }
        ));
        assert!(matches!(
            parse_signed_edge_list("2 2\n0 1 +\n1 0 -\n").unwrap_err(),
            Error::Parse { line: 3, .. }
        ));
    }

    #[test]
    fn writer_output_is_canonical() {
        let g = Graph::new(3, [(2, 1), (1, 0)]).unwrap();
        assert_eq!(write_edge_list(&g, None), "3 2\n0 1\n1 2\n");
        let s = SignedGraph::with_negative_edges(g, [(1, 2)]).unwrap();
        assert_eq!(write_signed_edge_list(&s, None), "3 2\n0 1 +\n1 2 -\n");
    }

    #[test]
    fn family_round_trip() {
        let p = petersen(5, 2).unwrap();
        let f = p.family();
        let s = SignedGraph::random(p.graph, 7, 0.5).unwrap();
        let text = write_signed_edge_list(&s, Some(&f));
        assert!(text.starts_with("# family P 5 2\n10 15\n"));
        let back = parse_signed_edge_list(&text).unwrap();
        assert_eq!(back.signed, s);
        assert_eq!(back.family, Some(f));
    }
}
