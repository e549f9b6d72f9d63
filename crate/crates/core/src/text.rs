//! Line-oriented text formats.
//!
//! ```text
//! # bound quiver algebra
//! vertex 1 2 3
//! arrow a 1 2
//! arrow b 2 3
//! zero a b
//! commute a b = c d
//!
//! # poset
//! poset
//! elem x y z
//! le x y
//!
//! # trivial-extension presentation: a quiver plus
//! cycle a1 a2 a3
//! rel2 a1 a2
//!
//! # matrix instance
//! rels 2 cycles 2 arrows 3
//! 1 0 1 0
//! ```
//!
//! `#` starts a comment. Errors carry 1-based line numbers.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::algebra::BoundAlgebra;
use crate::error::{Error, Result};
use crate::matrix::MatrixInstance;
use crate::poset::Poset;
use crate::quiver::{Path, Quiver};
use crate::trivext::{complete_presentation, Rel2Diagnostic, TrivExtPresentation};

/// Any of the four file kinds.
#[derive(Clone, Debug)]
pub enum Document {
    Algebra(BoundAlgebra),
    Poset(Poset),
    TrivExt(TrivExtPresentation, Option<Rel2Diagnostic>),
    Matrix(MatrixInstance),
}

struct Line<'a> {
    number: usize,
    head: &'a str,
    rest: &'a str,
}

fn lines(src: &str) -> impl Iterator<Item = Line<'_>> {
    src.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            return None;
        }
        let (head, rest) = body.split_once(char::is_whitespace).unwrap_or((body, ""));
        Some(Line {
            number: i + 1,
            head,
            rest: rest.trim(),
        })
    })
}

/// Picks the parser from the first directive, or from the presence of `cycle` lines.
pub fn parse_document(src: &str) -> Result<Document> {
    let first = lines(src).next().map(|l| l.head);
    match first {
        Some("poset") => Ok(Document::Poset(parse_poset(src)?)),
        Some("rels") => Ok(Document::Matrix(parse_matrix(src)?)),
        _ if lines(src).any(|l| l.head == "cycle") => {
            let (t, d) = parse_trivext(src)?;
            Ok(Document::TrivExt(t, d))
        }
        _ => Ok(Document::Algebra(parse_algebra(src)?)),
    }
}

struct RawQuiver {
    vertices: Vec<String>,
    arrows: Vec<(String, String, String)>,
    quiver: Option<Quiver>,
}

impl RawQuiver {
    fn new() -> Self {
        RawQuiver {
            vertices: Vec::new(),
            arrows: Vec::new(),
            quiver: None,
        }
    }

    /// Handles `vertex` and `arrow` lines; false for other directives.
    fn take(&mut self, l: &Line) -> Result<bool> {
        match l.head {
            "vertex" => {
                for v in l.rest.split_whitespace() {
                    if self.vertices.iter().any(|w| w == v) {
                        return Err(Error::parse(l.number, format!("vertex {v} declared twice")));
                    }
                    self.vertices.push(v.to_string());
                }
            }
            "arrow" => {
                let parts: Vec<&str> = l.rest.split_whitespace().collect();
                let [name, s, t] = parts.as_slice() else {
                    return Err(Error::parse(l.number, "expected `arrow NAME SOURCE TARGET`"));
                };
                if self.arrows.iter().any(|a| a.0 == *name) {
                    return Err(Error::parse(l.number, format!("arrow {name} declared twice")));
                }
                self.arrows.push((name.to_string(), s.to_string(), t.to_string()));
            }
            _ => return Ok(false),
        }
        Ok(true)
    }

    fn quiver(&mut self, line: usize) -> Result<&Quiver> {
        if self.quiver.is_none() {
            let q = Quiver::from_arrows(self.vertices.clone(), self.arrows.clone())
                .map_err(|e| Error::parse(line, e.to_string()))?;
            self.quiver = Some(q);
        }
        Ok(self.quiver.as_ref().expect("just built"))
    }

    fn path(&mut self, line: usize, words: &str) -> Result<Path> {
        let names: Vec<&str> = words.split_whitespace().collect();
        if names.is_empty() {
            return Err(Error::parse(line, "empty path"));
        }
        let q = self.quiver(line)?;
        q.path_by_names(&names).map_err(|e| Error::parse(line, e.to_string()))
    }
}

pub fn parse_algebra(src: &str) -> Result<BoundAlgebra> {
    let mut raw = RawQuiver::new();
    let mut zeros: Vec<(usize, String)> = Vec::new();
    let mut comms: Vec<(usize, String, String)> = Vec::new();
    let mut last = 0;
    for l in lines(src) {
        last = l.number;
        if raw.take(&l)? {
            continue;
        }
        match l.head {
            "zero" => zeros.push((l.number, l.rest.to_string())),
            "commute" => {
                let Some((a, b)) = l.rest.split_once('=') else {
                    return Err(Error::parse(l.number, "expected `commute PATH = PATH`"));
                };
                comms.push((l.number, a.to_string(), b.to_string()));
            }
            other => return Err(Error::parse(l.number, format!("unknown directive `{other}`"))),
        }
    }
    let mut zero_paths = Vec::new();
    for (n, w) in &zeros {
        zero_paths.push(raw.path(*n, w)?);
    }
    let mut pairs = Vec::new();
    for (n, a, b) in &comms {
        pairs.push((raw.path(*n, a)?, raw.path(*n, b)?));
    }
    let q = raw.quiver(last.max(1))?.clone();
    BoundAlgebra::new(q, zero_paths, pairs)
}

pub fn parse_poset(src: &str) -> Result<Poset> {
    let mut elems: Vec<String> = Vec::new();
    let mut rel = Vec::new();
    let mut seen_header = false;
    for l in lines(src) {
        match l.head {
            "poset" if !seen_header && l.rest.is_empty() => seen_header = true,
            "elem" => {
                for e in l.rest.split_whitespace() {
                    if elems.iter().any(|x| x == e) {
                        return Err(Error::parse(l.number, format!("element {e} declared twice")));
                    }
                    elems.push(e.to_string());
                }
            }
            "le" => {
                let parts: Vec<&str> = l.rest.split_whitespace().collect();
                let [x, y] = parts.as_slice() else {
                    return Err(Error::parse(l.number, "expected `le X Y`"));
                };
                for e in [x, y] {
                    if !elems.iter().any(|z| z == e) {
                        return Err(Error::parse(l.number, format!("unknown element {e}")));
                    }
                }
                rel.push((x.to_string(), y.to_string()));
            }
            other => return Err(Error::parse(l.number, format!("unknown directive `{other}`"))),
        }
    }
    if !seen_header {
        return Err(Error::parse(1, "poset files start with `poset`"));
    }
    Poset::from_generating_relation(elems, rel)
}

pub fn parse_trivext(src: &str) -> Result<(TrivExtPresentation, Option<Rel2Diagnostic>)> {
    let mut raw = RawQuiver::new();
    let mut cycles: Vec<(usize, String)> = Vec::new();
    let mut rel2: Vec<(usize, String)> = Vec::new();
    let mut last = 0;
    for l in lines(src) {
        last = l.number;
        if raw.take(&l)? {
            continue;
        }
        match l.head {
            "cycle" => cycles.push((l.number, l.rest.to_string())),
            "rel2" => rel2.push((l.number, l.rest.to_string())),
            other => return Err(Error::parse(l.number, format!("unknown directive `{other}`"))),
        }
    }
    let q = raw.quiver(last.max(1))?.clone();
    let mut words = Vec::new();
    for (n, c) in &cycles {
        let ids = c
            .split_whitespace()
            .map(|a| {
                q.arrow_id(a)
                    .ok_or_else(|| Error::parse(*n, format!("unknown arrow {a}")))
            })
            .collect::<Result<Vec<_>>>()?;
        words.push(ids);
    }
    let supplied = if rel2.is_empty() {
        None
    } else {
        let mut ps = Vec::new();
        for (n, w) in &rel2 {
            ps.push(raw.path(*n, w)?);
        }
        Some(ps)
    };
    complete_presentation(q, words, supplied)
}

pub fn parse_matrix(src: &str) -> Result<MatrixInstance> {
    let mut it = lines(src);
    let header = it.next().ok_or_else(|| Error::parse(1, "empty matrix file"))?;
    let fields: Vec<&str> = std::iter::once(header.head)
        .chain(header.rest.split_whitespace())
        .collect();
    let (rels, cycles, arrows) = match fields.as_slice() {
        ["rels", r, "cycles", c, "arrows", n] => {
            let num = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| Error::parse(header.number, format!("`{s}` is not a count")))
            };
            (num(r)?, num(c)?, num(n)?)
        }
        _ => {
            return Err(Error::parse(
                header.number,
                "expected `rels R cycles C arrows N`",
            ))
        }
    };
    let mut rows = Vec::new();
    for l in it {
        let row = std::iter::once(l.head)
            .chain(l.rest.split_whitespace())
            .map(|d| match d {
                "0" => Ok(false),
                "1" => Ok(true),
                other => Err(Error::parse(l.number, format!("`{other}` is not 0 or 1"))),
            })
            .collect::<Result<Vec<bool>>>()?;
        if row.len() != rels + cycles {
            return Err(Error::parse(
                l.number,
                format!("row has {} entries, expected {}", row.len(), rels + cycles),
            ));
        }
        rows.push(row);
    }
    if rows.len() != arrows {
        return Err(Error::parse(
            header.number,
            format!("header announces {arrows} arrows but {} rows follow", rows.len()),
        ));
    }
    MatrixInstance::new(rels, cycles, rows)
}

fn emit_quiver(out: &mut String, q: &Quiver) {
    if q.vertex_count() > 0 {
        let _ = writeln!(out, "vertex {}", q.vertex_names().join(" "));
    }
    for a in q.arrows() {
        let _ = writeln!(out, "arrow {} {} {}", a.name, q.vertex_name(a.source), q.vertex_name(a.target));
    }
}

/// Normalized form: vertices and arrows in label order, relations sorted.
pub fn emit_algebra(a: &BoundAlgebra) -> String {
    let mut out = String::new();
    let q = a.quiver();
    emit_quiver(&mut out, q);
    for z in a.zero_paths() {
        let _ = writeln!(out, "zero {}", q.path_string(z));
    }
    for (p, r) in a.commutations() {
        let _ = writeln!(out, "commute {} = {}", q.path_string(p), q.path_string(r));
    }
    out
}

/// Elements and covering pairs.
pub fn emit_poset(p: &Poset) -> String {
    let mut out = String::from("poset\n");
    if !p.is_empty() {
        let _ = writeln!(out, "elem {}", p.elements().join(" "));
    }
    for (x, y) in p.covers() {
        let _ = writeln!(out, "le {x} {y}");
    }
    out
}

/// Quiver, cycles (each starting at its least arrow) and the type-2 relations.
pub fn emit_trivext(t: &TrivExtPresentation) -> String {
    let mut out = String::new();
    let q = t.quiver();
    emit_quiver(&mut out, q);
    for c in t.cycles() {
        let names: Vec<&str> = c.word().iter().map(|&a| q.arrow_name(a)).collect();
        let _ = writeln!(out, "cycle {}", names.join(" "));
    }
    for p in t.rel2() {
        let _ = writeln!(out, "rel2 {}", q.path_string(p));
    }
    out
}

pub fn emit_matrix(m: &MatrixInstance) -> String {
    let mut out = format!(
        "rels {} cycles {} arrows {}\n",
        m.n_rels(),
        m.n_cycles(),
        m.n_arrows()
    );
    let default_labels = m
        .labels()
        .iter()
        .enumerate()
        .all(|(i, l)| *l == format!("α{}", i + 1));
    for (row, label) in m.membership().iter().zip(m.labels()) {
        let digits: Vec<&str> = row.iter().map(|&b| if b { "1" } else { "0" }).collect();
        if default_labels {
            let _ = writeln!(out, "{}", digits.join(" "));
        } else {
            let _ = writeln!(out, "{}  # {label}", digits.join(" "));
        }
    }
    out
}

/// Graphviz text for a quiver, with `highlight` arrows dashed.
pub fn emit_dot(q: &Quiver, highlight: &BTreeSet<crate::quiver::ArrowId>) -> String {
    let mut out = String::from("digraph Q {\n");
    for v in q.vertex_names() {
        let _ = writeln!(out, "  \"{v}\";");
    }
    for a in q.arrow_ids() {
        let arr = q.arrow(a);
        let style = if highlight.contains(&a) { ", style=dashed" } else { "" };
        let _ = writeln!(
            out,
            "  \"{}\" -> \"{}\" [label=\"{}\"{style}];",
            q.vertex_name(arr.source),
            q.vertex_name(arr.target),
            arr.name
        );
    }
    out.push_str("}\n");
    out
}
