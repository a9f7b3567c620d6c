//! Text file formats for the CLI: whitespace-tolerant on input (with `#`
//! comment lines), canonical on output.
//!
//! Graph files: a header `n m`, then m lines `u v` with 0-based endpoints,
//! written in ascending lexicographic edge order. Colouring files: a header
//! `n k`, then n lines `v c` with 1-based colours, every vertex exactly
//! once.

use crate::colouring::Colouring;
use crate::graph::Graph;
use crate::Error;

fn data_lines(input: &str) -> impl Iterator<Item = &str> {
    input
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

fn two_numbers(line: &str, what: &str) -> Result<(usize, usize), Error> {
    let mut parts = line.split_whitespace();
    let a = parts.next();
    let b = parts.next();
    match (a, b, parts.next()) {
        (Some(a), Some(b), None) => {
            let a = a
                .parse()
                .map_err(|_| Error::invalid_input(format!("bad {what} line: {line:?}")))?;
            let b = b
                .parse()
                .map_err(|_| Error::invalid_input(format!("bad {what} line: {line:?}")))?;
            Ok((a, b))
        }
        _ => Err(Error::invalid_input(format!(
            "expected two numbers on {what} line, got {line:?}"
        ))),
    }
}

pub fn parse_graph(input: &str) -> Result<Graph, Error> {
    let mut lines = data_lines(input);
    let header = lines
        .next()
        .ok_or_else(|| Error::invalid_input("empty graph file"))?;
    let (n, m) = two_numbers(header, "header")?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let line = lines
            .next()
            .ok_or_else(|| Error::invalid_input("graph file ends before all edges"))?;
        edges.push(two_numbers(line, "edge")?);
    }
    if lines.next().is_some() {
        return Err(Error::invalid_input("trailing content after edge list"));
    }
    Graph::from_edge_list(n, &edges)
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_colouring(input: &str) -> Result<Colouring, Error> {
    let mut lines = data_lines(input);
    let header = lines
        .next()
        .ok_or_else(|| Error::invalid_input("empty colouring file"))?;
    let (n, k) = two_numbers(header, "header")?;
    let k = u32::try_from(k).map_err(|_| Error::invalid_input("palette size too large"))?;
    let mut colours = vec![0u32; n];
    let mut seen = vec![false; n];
    for _ in 0..n {
        let line = lines
            .next()
            .ok_or_else(|| Error::invalid_input("colouring file ends before all vertices"))?;
        let (v, c) = two_numbers(line, "colour")?;
        if v >= n {
            return Err(Error::invalid_input(format!("vertex {v} out of range")));
        }
        if seen[v] {
            return Err(Error::invalid_input(format!("vertex {v} coloured twice")));
        }
        seen[v] = true;
        colours[v] =
            u32::try_from(c).map_err(|_| Error::invalid_input(format!("colour {c} too large")))?;
    }
    if lines.next().is_some() {
        return Err(Error::invalid_input("trailing content after colour list"));
    }
    Colouring::new(colours, k)
}

pub fn serialize_colouring(c: &Colouring) -> String {
    let mut out = format!("{} {}\n", c.len(), c.palette_size());
    for v in 0..c.len() {
        out.push_str(&format!("{v} {}\n", c.colour(v)));
    }
    out
}
