//! Bundled instances, embedded at compile time.
//!
//! Each entry is the raw text of a file under `corpus/`. Solution files are
//! reference algebras that cut quotients get matched against.

use crate::algebra::BoundAlgebra;
use crate::error::{Error, Result};
use crate::text::{parse_document, Document};

/// A bundled file.
#[derive(Clone, Copy, Debug)]
pub struct Entry {
    /// File name without the `.txt` suffix.
    pub name: &'static str,
    pub text: &'static str,
}

macro_rules! entries {
    ($($name:literal),* $(,)?) => {
        &[$(Entry { name: $name, text: include_str!(concat!("../corpus/", $name, ".txt")) }),*]
    };
}

pub const ENTRIES: &[Entry] = entries![
    "a2",
    "a2_trivext",
    "corte1_min_trivext",
    "d4til_matrix",
    "d4til_solution_01",
    "d4til_star",
    "d4til_trivext",
    "d5til_trivext",
    "diamond_poset",
    "e6til_fr6_trivext",
    "e6til_solution_01",
    "e6til_solution_02",
    "e7_matrix",
    "e7_solution_01",
    "e7_teoe7_sol1_trivext",
    "e7til_fr11_algebra",
    "e7til_fr11_trivext",
    "e7til_solution_01",
    "e8_solution_076",
    "e8_solution_077",
    "e8_trivext",
    "incidence_square",
];

/// Names of the reference solutions, in the order they are tried.
pub const SOLUTIONS: &[&str] = &[
    "d4til_solution_01",
    "e6til_solution_01",
    "e6til_solution_02",
    "e7_solution_01",
    "e7til_solution_01",
    "e8_solution_076",
    "e8_solution_077",
];

/// Looks a file up by name, with or without `.txt` and a leading `corpus/`.
pub fn get(name: &str) -> Option<&'static Entry> {
    let stem = name.strip_prefix("corpus/").unwrap_or(name);
    let stem = stem.strip_suffix(".txt").unwrap_or(stem);
    ENTRIES.iter().find(|e| e.name == stem)
}

pub fn document(name: &str) -> Result<Document> {
    let e = get(name).ok_or_else(|| Error::invalid("corpus", format!("no bundled file named {name}")))?;
    parse_document(e.text)
}

/// The reference solutions, parsed.
pub fn solutions() -> Result<Vec<(String, BoundAlgebra)>> {
    SOLUTIONS
        .iter()
        .map(|n| match document(n)? {
            Document::Algebra(a) => Ok((n.to_string(), a)),
            _ => Err(Error::invalid("corpus", format!("{n} is not an algebra file"))),
        })
        .collect()
}
