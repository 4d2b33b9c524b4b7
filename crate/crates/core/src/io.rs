//! Text codecs for posets, graphs, bipartite graphs, set families and CNF
//! formulas.
//!
//! Every reader reports malformed input as [`Error::Format`] with a 1-based
//! line number. Writers emit a canonical form: no comments, single spaces,
//! covers and edges sorted, labels only when they differ from the defaults.
//! Reading a canonical file and writing it again is byte-identical.

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Graph};
use crate::hardness::CnfFormula;
use crate::helly::SetFamily;
use crate::poset::Poset;

/// Grammar of every file format, as printed by the `formats` command.
pub const FORMAT_GRAMMAR: &str = "\
poset (.poset), '#' starts a comment line
  poset <n>
  labels <l0> <l1> ... <l(n-1)>        optional
  cover <a> <b>                        0-based, a < b; shortcut pairs allowed

graph (.col), DIMACS edge format, 'c' or '#' lines are comments
  p edge <n> <m>
  e <u> <v>                            1-based, exactly m lines
  v <u> <label>                        optional display label
  s <u> L|R                            bipartite files: side of every vertex

family (.family), '#' starts a comment line
  family <ground-size> <member-count>
  <i> <j> ...                          one line per member, 0-based; '-' if empty

cnf (.cnf), DIMACS CNF, 'c' lines are comments
  p cnf <vars> <clauses>
  <l1> <l2> <l3> 0                     literals +v / -v, exactly three per clause

trace (.trace), written next to every transform output
  # trace <scheme>
  <id> <role> <input ids, comma-separated, or ->
";

struct Line<'a> {
    no: usize,
    tokens: Vec<&'a str>,
}

/// Non-empty lines split into tokens, skipping lines that start with `#`
/// and, when `dimacs_comments` is set, lines whose first token is `c`.
fn lines(text: &str, dimacs_comments: bool) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let tokens: Vec<&str> = raw.split_whitespace().collect();
            let first = *tokens.first()?;
            if first.starts_with('#') || (dimacs_comments && first == "c") {
                return None;
            }
            Some(Line { no: i + 1, tokens })
        })
        .collect()
}

fn fmt_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Format { line, msg: msg.into() }
}

fn num(line: &Line, i: usize) -> Result<usize> {
    let tok = line
        .tokens
        .get(i)
        .ok_or_else(|| fmt_err(line.no, format!("missing field {}", i + 1)))?;
    tok.parse()
        .map_err(|_| fmt_err(line.no, format!("`{tok}` is not a non-negative integer")))
}

fn expect_len(line: &Line, n: usize) -> Result<()> {
    if line.tokens.len() != n {
        return Err(fmt_err(
            line.no,
            format!(
                "`{}` expects {} fields, found {}",
                line.tokens[0],
                n - 1,
                line.tokens.len() - 1
            ),
        ));
    }
    Ok(())
}

fn last_line(text: &str) -> usize {
    text.lines().count().max(1)
}

/// Replaces whitespace so a label survives as one token.
fn token(label: &str) -> String {
    label.split_whitespace().collect::<Vec<_>>().join("_")
}

pub fn read_poset(text: &str) -> Result<Poset> {
    let ls = lines(text, false);
    let Some(head) = ls.first() else {
        return Err(fmt_err(last_line(text), "empty poset file"));
    };
    if head.tokens[0] != "poset" {
        return Err(fmt_err(head.no, "expected `poset <n>`"));
    }
    expect_len(head, 2)?;
    let n = num(head, 1)?;
    let mut labels: Option<Vec<String>> = None;
    let mut pairs = Vec::new();
    for l in &ls[1..] {
        match l.tokens[0] {
            "labels" => {
                if labels.is_some() {
                    return Err(fmt_err(l.no, "duplicate `labels` line"));
                }
                if l.tokens.len() != n + 1 {
                    return Err(fmt_err(
                        l.no,
                        format!("expected {n} labels, found {}", l.tokens.len() - 1),
                    ));
                }
                labels = Some(l.tokens[1..].iter().map(|s| s.to_string()).collect());
            }
            "cover" => {
                expect_len(l, 3)?;
                let (a, b) = (num(l, 1)?, num(l, 2)?);
                if a >= n || b >= n {
                    return Err(fmt_err(l.no, format!("element {} out of range for {n}", a.max(b))));
                }
                pairs.push((a, b));
            }
            other => return Err(fmt_err(l.no, format!("unknown statement `{other}`"))),
        }
    }
    let p = Poset::new(n, &pairs)?;
    match labels {
        Some(ls) => p.with_labels(ls),
        None => Ok(p),
    }
}

pub fn write_poset(p: &Poset) -> String {
    let mut s = format!("poset {}\n", p.len());
    if !p.has_default_labels() {
        let ls: Vec<String> = p.labels().iter().map(|l| token(l)).collect();
        s.push_str(&format!("labels {}\n", ls.join(" ")));
    }
    let mut covers = p.covers().to_vec();
    covers.sort_unstable();
    for (a, b) in covers {
        s.push_str(&format!("cover {a} {b}\n"));
    }
    s
}

/// Graph file contents: the graph and, when present, the side of each vertex.
fn read_graph_parts(text: &str) -> Result<(Graph, Option<ElemSet>)> {
    let ls = lines(text, true);
    let Some(head) = ls.first() else {
        return Err(fmt_err(last_line(text), "empty graph file"));
    };
    if head.tokens[0] != "p" || head.tokens.get(1) != Some(&"edge") {
        return Err(fmt_err(head.no, "expected `p edge <n> <m>`"));
    }
    expect_len(head, 4)?;
    let (n, m) = (num(head, 2)?, num(head, 3)?);
    let mut g = Graph::new(n)?;
    let mut labels: Vec<Option<String>> = vec![None; n];
    let mut sides: Vec<Option<bool>> = vec![None; n];
    let mut any_side = false;
    let mut edge_lines = 0;
    let vertex = |l: &Line, i: usize| -> Result<usize> {
        let u = num(l, i)?;
        if u == 0 || u > n {
            return Err(fmt_err(l.no, format!("vertex {u} outside 1..={n}")));
        }
        Ok(u - 1)
    };
    for l in &ls[1..] {
        match l.tokens[0] {
            "e" => {
                expect_len(l, 3)?;
                let (u, v) = (vertex(l, 1)?, vertex(l, 2)?);
                if u == v {
                    return Err(fmt_err(l.no, format!("loop at vertex {}", u + 1)));
                }
                g.add_edge(u, v);
                edge_lines += 1;
            }
            "v" => {
                expect_len(l, 3)?;
                let u = vertex(l, 1)?;
                if labels[u].replace(l.tokens[2].to_string()).is_some() {
                    return Err(fmt_err(l.no, format!("vertex {} labelled twice", u + 1)));
                }
            }
            "s" => {
                expect_len(l, 3)?;
                let u = vertex(l, 1)?;
                let left = match l.tokens[2] {
                    "L" => true,
                    "R" => false,
                    other => return Err(fmt_err(l.no, format!("side must be L or R, found `{other}`"))),
                };
                if sides[u].replace(left).is_some() {
                    return Err(fmt_err(l.no, format!("side of vertex {} given twice", u + 1)));
                }
                any_side = true;
            }
            other => return Err(fmt_err(l.no, format!("unknown line type `{other}`"))),
        }
    }
    if edge_lines != m {
        return Err(fmt_err(
            head.no,
            format!("header declares {m} edges, found {edge_lines}"),
        ));
    }
    if labels.iter().any(Option::is_some) {
        let ls: Vec<String> = labels
            .into_iter()
            .enumerate()
            .map(|(i, l)| l.unwrap_or_else(|| i.to_string()))
            .collect();
        g = g.with_labels(ls)?;
    }
    let left = if any_side {
        if let Some(u) = sides.iter().position(Option::is_none) {
            return Err(fmt_err(last_line(text), format!("vertex {} has no `s` line", u + 1)));
        }
        Some((0..n).filter(|&u| sides[u] == Some(true)).collect())
    } else {
        None
    };
    Ok((g, left))
}

/// Reads a graph; `s` lines, if any, are validated and then ignored.
pub fn read_graph(text: &str) -> Result<Graph> {
    Ok(read_graph_parts(text)?.0)
}

/// Reads a bipartite graph. Without `s` lines the sides come from a
/// 2-colouring that puts the lowest vertex of each component on the left.
pub fn read_bipartite(text: &str) -> Result<BipartiteGraph> {
    let (g, left) = read_graph_parts(text)?;
    match left {
        Some(left) => BipartiteGraph::new(g, left),
        None => BipartiteGraph::from_graph(g),
    }
}

fn write_graph_body(g: &Graph, sides: Option<ElemSet>) -> String {
    let edges = g.edges();
    let mut s = format!("p edge {} {}\n", g.len(), edges.len());
    for (u, v) in edges {
        s.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    if !g.has_default_labels() {
        for (i, l) in g.labels().iter().enumerate() {
            s.push_str(&format!("v {} {}\n", i + 1, token(l)));
        }
    }
    if let Some(left) = sides {
        for u in 0..g.len() {
            s.push_str(&format!("s {} {}\n", u + 1, if left.contains(u) { "L" } else { "R" }));
        }
    }
    s
}

pub fn write_graph(g: &Graph) -> String {
    write_graph_body(g, None)
}

pub fn write_bipartite(b: &BipartiteGraph) -> String {
    write_graph_body(b.graph(), Some(b.left()))
}

pub fn read_family(text: &str) -> Result<SetFamily> {
    let ls = lines(text, false);
    let Some(head) = ls.first() else {
        return Err(fmt_err(last_line(text), "empty family file"));
    };
    if head.tokens[0] != "family" {
        return Err(fmt_err(head.no, "expected `family <ground-size> <member-count>`"));
    }
    expect_len(head, 3)?;
    let (ground, m) = (num(head, 1)?, num(head, 2)?);
    if ls.len() - 1 != m {
        return Err(fmt_err(
            head.no,
            format!("header declares {m} members, found {}", ls.len() - 1),
        ));
    }
    let mut members = Vec::with_capacity(m);
    for l in &ls[1..] {
        let mut s = ElemSet::EMPTY;
        if l.tokens != ["-"] {
            for i in 0..l.tokens.len() {
                let x = num(l, i)?;
                if x >= ground {
                    return Err(fmt_err(
                        l.no,
                        format!("element {x} out of range for ground size {ground}"),
                    ));
                }
                s.insert(x);
            }
        }
        members.push(s);
    }
    SetFamily::new(ground, members)
}

pub fn write_family(f: &SetFamily) -> String {
    let mut s = format!("family {} {}\n", f.ground(), f.len());
    for m in f.members() {
        if m.is_empty() {
            s.push_str("-\n");
        } else {
            let xs: Vec<String> = m.iter().map(|x| x.to_string()).collect();
            s.push_str(&format!("{}\n", xs.join(" ")));
        }
    }
    s
}

pub fn read_cnf(text: &str) -> Result<CnfFormula> {
    crate::hardness::parse_dimacs_cnf(text)
}

pub fn write_cnf(f: &CnfFormula) -> String {
    f.to_dimacs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poset_round_trip() {
        let text = "# sample\nposet 3\ncover 1 2\ncover 0 1\ncover 0 2\n";
        let p = read_poset(text).unwrap();
        assert_eq!(write_poset(&p), "poset 3\ncover 0 1\ncover 1 2\n");
        let again = read_poset(&write_poset(&p)).unwrap();
        assert_eq!(write_poset(&again), write_poset(&p));
    }

    #[test]
    fn poset_errors_carry_lines() {
        assert_eq!(
            read_poset("poset 2\ncover 0").unwrap_err(),
            Error::Format {
                line: 2,
                msg: "`cover` expects 2 fields, found 1".into()
            }
        );
        assert!(matches!(
            read_poset("poset 2\ncover 0 5"),
            Err(Error::Format { line: 2, .. })
        ));
        assert!(matches!(
            read_poset("poset 2\ncover 0 1\ncover 1 0"),
            Err(Error::Cycle(_))
        ));
        assert!(matches!(
            read_poset("poset 2\nlabels a"),
            Err(Error::Format { line: 2, .. })
        ));
    }

    #[test]
    fn graph_round_trip_and_edge_count() {
        let g = read_graph("c test\np edge 3 2\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(write_graph(&g), "p edge 3 2\ne 1 2\ne 2 3\n");
        assert!(matches!(
            read_graph("p edge 3 3\ne 1 2\ne 2 3\n"),
            Err(Error::Format { line: 1, .. })
        ));
        assert!(matches!(
            read_graph("p edge 2 1\ne 1 3\n"),
            Err(Error::Format { line: 2, .. })
        ));
    }

    #[test]
    fn bipartite_sides() {
        let b = read_bipartite("p edge 2 1\ne 1 2\ns 1 R\ns 2 L\n").unwrap();
        assert_eq!(b.left(), ElemSet::singleton(1));
        assert_eq!(write_bipartite(&b), "p edge 2 1\ne 1 2\ns 1 R\ns 2 L\n");
        assert!(matches!(
            read_bipartite("p edge 2 1\ne 1 2\ns 1 L\ns 2 L\n"),
            Err(Error::NotBipartite)
        ));
        assert!(matches!(
            read_bipartite("p edge 2 1\ne 1 2\ns 1 L\n"),
            Err(Error::Format { .. })
        ));
    }

    #[test]
    fn labels_round_trip() {
        let g = Graph::path(2).unwrap().with_labels(vec!["a", "b"]).unwrap();
        let text = write_graph(&g);
        assert_eq!(text, "p edge 2 1\ne 1 2\nv 1 a\nv 2 b\n");
        assert_eq!(read_graph(&text).unwrap().labels(), g.labels());
    }

    #[test]
    fn family_round_trip() {
        let f = read_family("family 3 2\n0 2\n-\n").unwrap();
        assert_eq!(f.members()[1], ElemSet::EMPTY);
        assert_eq!(write_family(&f), "family 3 2\n0 2\n-\n");
        assert!(matches!(
            read_family("family 3 1\n0 3\n"),
            Err(Error::Format { line: 2, .. })
        ));
    }
}
