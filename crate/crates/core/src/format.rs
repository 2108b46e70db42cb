//! Text formats: edge lists, vertex-pair files and DOT export.

use thiserror::Error;

use crate::graph::{Graph, GraphBuilder};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: self-loop at `{token}`")]
    SelfLoop { line: usize, token: String },
    #[error("line {line}: expected one or two tokens, found {count}")]
    Malformed { line: usize, count: usize },
    #[error("line {line}: expected exactly two tokens, found {count}")]
    NotAPair { line: usize, count: usize },
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

/// Reads an edge list: `u v` lines are edges, single tokens are vertices,
/// `#` starts a comment. Duplicate edges are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut b = GraphBuilder::new();
    for (line, tokens) in content_lines(text) {
        match tokens.as_slice() {
            [v] => {
                b.add_vertex(*v);
            }
            [u, v] => {
                if u == v {
                    return Err(ParseError::SelfLoop {
                        line,
                        token: u.to_string(),
                    });
                }
                b.add_edge(*u, *v).expect("distinct endpoints");
            }
            _ => {
                return Err(ParseError::Malformed {
                    line,
                    count: tokens.len(),
                })
            }
        }
    }
    Ok(b.build())
}

/// Edges in name order, then isolated vertices, one per line.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        out.push_str(g.name(u));
        out.push(' ');
        out.push_str(g.name(v));
        out.push('\n');
    }
    for v in g.vertices().filter(|&v| g.degree(v) == 0) {
        out.push_str(g.name(v));
        out.push('\n');
    }
    out
}

/// Reads `u v` pairs, one per line, as used for vertex maps and
/// permutations.
pub fn parse_pairs(text: &str) -> Result<Vec<(String, String)>, ParseError> {
    content_lines(text)
        .map(|(line, tokens)| match tokens.as_slice() {
            [u, v] => Ok((u.to_string(), v.to_string())),
            _ => Err(ParseError::NotAPair {
                line,
                count: tokens.len(),
            }),
        })
        .collect()
}

pub fn write_pairs<'a>(pairs: impl IntoIterator<Item = (&'a str, &'a str)>) -> String {
    pairs
        .into_iter()
        .map(|(u, v)| format!("{u} {v}\n"))
        .collect()
}

fn dot_id(token: &str) -> String {
    let plain = token
        .chars()
        .next()
        .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && token.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
    let numeral = {
        let t = token.strip_prefix('-').unwrap_or(token);
        !t.is_empty() && t.chars().all(|c| c.is_ascii_digit())
    };
    if plain || numeral {
        token.to_string()
    } else {
        format!("\"{}\"", token.replace('\\', "\\\\").replace('"', "\\\""))
    }
}

/// DOT document: edges in name order, then isolated vertices. Tokens that
/// are not plain DOT identifiers are quoted.
pub fn write_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for (u, v) in g.edges() {
        out.push_str(&format!(
            "  {} -- {};\n",
            dot_id(g.name(u)),
            dot_id(g.name(v))
        ));
    }
    for v in g.vertices().filter(|&v| g.degree(v) == 0) {
        out.push_str(&format!("  {};\n", dot_id(g.name(v))));
    }
    out.push('}');
    out
}
