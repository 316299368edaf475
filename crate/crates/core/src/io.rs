//! Line-based text formats for digraphs, bipartite graphs and undirected
//! graphs, and the headerless integer CSV used for cost tables.
//!
//! ```text
//! # a directed triangle
//! n 3
//! a 0 1
//! a 1 2
//! a 2 0
//! ```
//!
//! Digraphs may name vertices with `v <id> <name>`. Bipartite graphs use
//! `nw`, `nb` and `e <white> <black>`; undirected graphs use `n`,
//! `e <a> <b>` and optionally `color <v> <U|V|W>`.

use std::fmt::Write as _;

use crate::digraph::{BipartiteGraph, Digraph};
use crate::error::{GraphError, ParseError};
use crate::solver::CostMatrix;
use crate::ugraph::{Color, UGraph};

// Non-empty, non-comment lines as (1-based line number, fields).
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let content = line.split('#').next().unwrap_or("").trim();
        (!content.is_empty()).then(|| (i + 1, content.split_whitespace().collect()))
    })
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, message: message.into() }
}

fn number(line: usize, field: &str) -> Result<usize, ParseError> {
    field.parse().map_err(|_| syntax(line, format!("expected a non-negative integer, found `{field}`")))
}

fn expect_len(line: usize, fields: &[&str], len: usize) -> Result<(), ParseError> {
    if fields.len() != len {
        return Err(syntax(line, format!("`{}` takes {} argument(s)", fields[0], len - 1)));
    }
    Ok(())
}

fn graph_err(line: usize) -> impl Fn(GraphError) -> ParseError {
    move |source| ParseError::Graph { line, source }
}

fn set_once(slot: &mut Option<usize>, line: usize, fields: &[&str]) -> Result<(), ParseError> {
    expect_len(line, fields, 2)?;
    if slot.is_some() {
        return Err(syntax(line, format!("repeated `{}` header", fields[0])));
    }
    *slot = Some(number(line, fields[1])?);
    Ok(())
}

fn check_vertex(line: usize, v: usize, n: usize) -> Result<usize, ParseError> {
    if v >= n {
        return Err(ParseError::Graph { line, source: GraphError::VertexOutOfRange { vertex: v, n } });
    }
    Ok(v)
}

pub fn parse_digraph(text: &str) -> Result<Digraph, ParseError> {
    let mut n = None;
    let mut arcs = Vec::new();
    let mut names: Vec<(usize, usize, String)> = Vec::new();
    for (line, fields) in records(text) {
        match fields[0] {
            "n" => set_once(&mut n, line, &fields)?,
            "a" | "v" => {
                let count = n.ok_or(ParseError::MissingHeader("n"))?;
                expect_len(line, &fields, 3)?;
                let u = check_vertex(line, number(line, fields[1])?, count)?;
                if fields[0] == "a" {
                    arcs.push((line, u, check_vertex(line, number(line, fields[2])?, count)?));
                } else {
                    if names.iter().any(|&(_, w, _)| w == u) {
                        return Err(ParseError::Graph { line, source: GraphError::DuplicateVertex(u) });
                    }
                    names.push((line, u, fields[2].to_string()));
                }
            }
            other => return Err(syntax(line, format!("unknown record `{other}`"))),
        }
    }
    let n = n.ok_or(ParseError::MissingHeader("n"))?;
    // report the line of the first offending arc
    let mut seen = std::collections::HashSet::new();
    for &(line, u, v) in &arcs {
        if u == v {
            return Err(graph_err(line)(GraphError::Loop(u)));
        }
        if !seen.insert((u, v)) {
            return Err(graph_err(line)(GraphError::ParallelArc(u, v)));
        }
    }
    let d = Digraph::new(n, arcs.iter().map(|&(_, u, v)| (u, v))).map_err(graph_err(0))?;
    if names.is_empty() {
        return Ok(d);
    }
    let mut full: Vec<String> = (0..n).map(|v| v.to_string()).collect();
    for (_, v, name) in names {
        full[v] = name;
    }
    d.with_names(full).map_err(graph_err(0))
}

/// Canonical text: header, names (if any) in id order, arcs sorted.
pub fn write_digraph(d: &Digraph) -> String {
    let mut out = format!("n {}\n", d.n());
    if let Some(names) = d.names() {
        for (v, name) in names.iter().enumerate() {
            writeln!(out, "v {v} {name}").expect("write to string");
        }
    }
    for (u, v) in d.arcs() {
        writeln!(out, "a {u} {v}").expect("write to string");
    }
    out
}

pub fn parse_bipartite(text: &str) -> Result<BipartiteGraph, ParseError> {
    let (mut whites, mut blacks) = (None, None);
    let mut edges = Vec::new();
    for (line, fields) in records(text) {
        match fields[0] {
            "nw" => set_once(&mut whites, line, &fields)?,
            "nb" => set_once(&mut blacks, line, &fields)?,
            "e" => {
                let w = whites.ok_or(ParseError::MissingHeader("nw"))?;
                let b = blacks.ok_or(ParseError::MissingHeader("nb"))?;
                expect_len(line, &fields, 3)?;
                let white = check_vertex(line, number(line, fields[1])?, w)?;
                let black = check_vertex(line, number(line, fields[2])?, b)?;
                if edges.iter().any(|&(_, x, y)| (x, y) == (white, black)) {
                    return Err(graph_err(line)(GraphError::ParallelArc(white, black)));
                }
                edges.push((line, white, black));
            }
            other => return Err(syntax(line, format!("unknown record `{other}`"))),
        }
    }
    let whites = whites.ok_or(ParseError::MissingHeader("nw"))?;
    let blacks = blacks.ok_or(ParseError::MissingHeader("nb"))?;
    BipartiteGraph::new(whites, blacks, edges.into_iter().map(|(_, w, b)| (w, b))).map_err(graph_err(0))
}

pub fn write_bipartite(b: &BipartiteGraph) -> String {
    let mut out = format!("nw {}\nnb {}\n", b.whites(), b.blacks());
    for (w, k) in b.edges() {
        writeln!(out, "e {w} {k}").expect("write to string");
    }
    out
}

pub fn parse_ugraph(text: &str) -> Result<UGraph, ParseError> {
    let mut n = None;
    let mut edges = Vec::new();
    let mut colors: Vec<Option<Color>> = Vec::new();
    let mut any_color = false;
    for (line, fields) in records(text) {
        match fields[0] {
            "n" => {
                set_once(&mut n, line, &fields)?;
                colors = vec![None; n.expect("just set")];
            }
            "e" | "color" => {
                let count = n.ok_or(ParseError::MissingHeader("n"))?;
                expect_len(line, &fields, 3)?;
                let a = check_vertex(line, number(line, fields[1])?, count)?;
                if fields[0] == "e" {
                    let b = check_vertex(line, number(line, fields[2])?, count)?;
                    if a == b {
                        return Err(graph_err(line)(GraphError::Loop(a)));
                    }
                    if edges.iter().any(|&(_, x, y)| (x, y) == (a.min(b), a.max(b))) {
                        return Err(graph_err(line)(GraphError::ParallelArc(a.min(b), a.max(b))));
                    }
                    edges.push((line, a.min(b), a.max(b)));
                } else {
                    let color = match fields[2] {
                        "U" => Color::U,
                        "V" => Color::V,
                        "W" => Color::W,
                        other => return Err(syntax(line, format!("colour must be U, V or W, found `{other}`"))),
                    };
                    if colors[a].replace(color).is_some() {
                        return Err(graph_err(line)(GraphError::DuplicateVertex(a)));
                    }
                    any_color = true;
                }
            }
            other => return Err(syntax(line, format!("unknown record `{other}`"))),
        }
    }
    let n = n.ok_or(ParseError::MissingHeader("n"))?;
    let g = UGraph::new(n, edges.into_iter().map(|(_, a, b)| (a, b))).map_err(graph_err(0))?;
    if !any_color {
        return Ok(g);
    }
    let coloring: Option<Vec<Color>> = colors.into_iter().collect();
    let coloring = coloring.ok_or_else(|| syntax(0, "a colouring must cover every vertex"))?;
    g.with_coloring(coloring).map_err(|message| syntax(0, message))
}

pub fn write_ugraph(g: &UGraph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (a, b) in g.edges() {
        writeln!(out, "e {a} {b}").expect("write to string");
    }
    if let Some(coloring) = g.coloring() {
        for (v, c) in coloring.iter().enumerate() {
            writeln!(out, "color {v} {c:?}").expect("write to string");
        }
    }
    out
}

/// Headerless CSV of integers, one row per input vertex. Every row must
/// have the same number of cells; surrounding spaces are ignored.
pub fn parse_costs(text: &str) -> Result<CostMatrix, ParseError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut rows = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record?;
        let row = record
            .iter()
            .map(|cell| cell.parse::<i64>().map_err(|_| ParseError::Costs(format!("row {}: `{cell}` is not an integer", i + 1))))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    CostMatrix::from_rows(rows).map_err(|e| ParseError::Costs(e.to_string()))
}

pub fn write_costs(c: &CostMatrix) -> String {
    let mut writer = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    for row in c.rows() {
        writer.write_record(row.iter().map(i64::to_string)).expect("write to memory");
    }
    String::from_utf8(writer.into_inner().expect("flush to memory")).expect("ascii")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digraph_round_trip() {
        let text = "# triangle\nn 3\na 1 2\na 0 1 # first\n\na 2 0\n";
        let d = parse_digraph(text).unwrap();
        assert_eq!(d.arcs(), vec![(0, 1), (1, 2), (2, 0)]);
        let canonical = write_digraph(&d);
        assert_eq!(canonical, "n 3\na 0 1\na 1 2\na 2 0\n");
        assert_eq!(write_digraph(&parse_digraph(&canonical).unwrap()), canonical);

        let named = parse_digraph("n 2\nv 1 top\na 0 1\n").unwrap();
        assert_eq!(named.label(1), "top");
        assert_eq!(write_digraph(&named), "n 2\nv 0 0\nv 1 top\na 0 1\n");
    }

    #[test]
    fn digraph_errors_carry_lines() {
        assert!(matches!(parse_digraph("a 0 1\n"), Err(ParseError::MissingHeader("n"))));
        assert!(matches!(parse_digraph("n 2\na 0 2\n"), Err(ParseError::Graph { line: 2, .. })));
        assert!(matches!(parse_digraph("n 2\na 0 1\na 0 1\n"), Err(ParseError::Graph { line: 3, .. })));
        assert!(matches!(parse_digraph("n 2\na 1 1\n"), Err(ParseError::Graph { line: 2, .. })));
        assert!(matches!(parse_digraph("n 2\nx 0\n"), Err(ParseError::Syntax { line: 2, .. })));
        assert!(matches!(parse_digraph("n two\n"), Err(ParseError::Syntax { line: 1, .. })));
    }

    #[test]
    fn bipartite_and_ugraph_round_trip() {
        let b = parse_bipartite("nw 2\nnb 1\ne 1 0\ne 0 0\n").unwrap();
        assert_eq!(write_bipartite(&b), "nw 2\nnb 1\ne 0 0\ne 1 0\n");
        let g = parse_ugraph("n 3\ne 1 0\ne 1 2\ncolor 0 U\ncolor 1 V\ncolor 2 W\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(parse_ugraph(&write_ugraph(&g)).unwrap(), g);
        assert!(parse_ugraph("n 2\ne 0 1\ncolor 0 U\ncolor 1 U\n").is_err());
        assert!(parse_ugraph("n 2\ncolor 0 U\n").is_err());
    }

    #[test]
    fn costs_round_trip() {
        let c = parse_costs("1, -2,3\n4,5,6\n").unwrap();
        assert_eq!(c.rows(), &[vec![1, -2, 3], vec![4, 5, 6]]);
        assert_eq!(write_costs(&c), "1,-2,3\n4,5,6\n");
        assert!(parse_costs("1,2\n3\n").is_err());
        assert!(parse_costs("1,x\n").is_err());
    }
}
