//! Line-oriented text format for signed graphs.
//!
//! ```text
//! # positive quadrangle
//! n 4
//! e 0 1 +
//! e 1 2 +
//! e 2 3 +
//! e 0 3 +
//! ```
//!
//! The first non-comment line declares the order; each `e` line is one edge
//! with a `+` or `-` sign. Edges may come in any order and orientation. The
//! serializer writes edges sorted by `(u, v)`, so `serialize(parse(t))` is the
//! normal form of `t`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};

fn parse_error<T>(line: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        line,
        message: message.into(),
    })
}

fn parse_id(token: &str, line: usize) -> Result<usize> {
    token
        .parse()
        .or_else(|_| parse_error(line, format!("expected a vertex id, found `{token}`")))
}

pub fn parse(text: &str) -> Result<SignedGraph> {
    let mut order = None;
    let mut edges = Vec::new();
    let mut seen = HashSet::new();

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match (order, tokens.as_slice()) {
            (None, ["n", count]) => {
                order = Some(
                    count
                        .parse::<usize>()
                        .or_else(|_| parse_error(line, format!("expected a vertex count, found `{count}`")))?,
                );
            }
            (None, _) => return parse_error(line, "first line must be `n <count>`"),
            (Some(_), ["n", ..]) => return parse_error(line, "vertex count declared twice"),
            (Some(n), ["e", u, v, s]) => {
                let u = parse_id(u, line)?;
                let v = parse_id(v, line)?;
                for vertex in [u, v] {
                    if vertex >= n {
                        return parse_error(line, format!("vertex {vertex} out of range for n = {n}"));
                    }
                }
                if u == v {
                    return parse_error(line, format!("loop at vertex {u}"));
                }
                let sign = match *s {
                    "+" => Sign::Positive,
                    "-" => Sign::Negative,
                    other => return parse_error(line, format!("bad sign token `{other}`")),
                };
                if !seen.insert((u.min(v), u.max(v))) {
                    return parse_error(line, format!("duplicate edge {u}-{v}"));
                }
                edges.push((u, v, sign));
            }
            (Some(_), _) => return parse_error(line, format!("malformed line `{content}`")),
        }
    }

    let order = match order {
        Some(n) => n,
        None => return parse_error(text.lines().count().max(1), "missing `n <count>` line"),
    };
    SignedGraph::new(order, edges)
}

pub fn serialize(graph: &SignedGraph) -> String {
    graph.to_string()
}

impl fmt::Display for SignedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n {}", self.order())?;
        for e in self.edges() {
            writeln!(f, "e {} {} {}", e.u, e.v, e.sign)?;
        }
        Ok(())
    }
}

impl FromStr for SignedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<SignedGraph> {
        parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_positive_edge() {
        let g = parse("n 2\ne 0 1 +").unwrap();
        assert_eq!(g, SignedGraph::unsigned(2, [(0, 1)]).unwrap());
    }

    #[test]
    fn normalizes_on_round_trip() {
        let text = "# comment\n\nn 3\ne 2 1 -\n  e 0 2 +\n";
        let g = parse(text).unwrap();
        assert_eq!(serialize(&g), "n 3\ne 0 2 +\ne 1 2 -\n");
    }

    #[test]
    fn rejects_malformed_input() {
        let cases = [
            ("n 3\ne 0 5 +", 2),
            ("e 0 1 +", 1),
            ("n 3\ne 0 1 *", 2),
            ("n 3\ne 0 1 +\ne 1 0 +", 3),
            ("n 3\ne 0 0 +", 2),
            ("n 3\nn 3", 2),
            ("n x", 1),
            ("n 3\ne 0 1", 2),
            ("n 3\nf 0 1 +", 2),
        ];
        for (text, expected_line) in cases {
            match parse(text) {
                Err(Error::Parse { line, .. }) => assert_eq!(line, expected_line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
        assert!(matches!(parse("# nothing"), Err(Error::Parse { .. })));
    }

    fn arb_graph() -> impl Strategy<Value = SignedGraph> {
        (0usize..9).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let m = pairs.len();
            prop::collection::vec(0u8..3, m).prop_map(move |choice| {
                let edges = pairs.iter().zip(&choice).filter_map(|(&(u, v), &c)| match c {
                    1 => Some((u, v, Sign::Positive)),
                    2 => Some((u, v, Sign::Negative)),
                    _ => None,
                });
                SignedGraph::new(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn parse_inverts_serialize(g in arb_graph()) {
            prop_assert_eq!(parse(&serialize(&g)).unwrap(), g);
        }
    }
}
