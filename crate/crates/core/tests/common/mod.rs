#![allow(dead_code)]

use std::collections::BTreeSet;

use phicut::corpus;
use phicut::cutting::{cut, CuttingSet};
use phicut::poset::Poset;
use phicut::text::Document;
use phicut::trivext::TrivExtPresentation;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Every bundled trivial extension.
pub fn corpus_trivexts() -> Vec<(&'static str, TrivExtPresentation)> {
    corpus::ENTRIES
        .iter()
        .filter_map(|e| match corpus::document(e.name).unwrap() {
            Document::TrivExt(t, _) => Some((e.name, t)),
            _ => None,
        })
        .collect()
}

pub fn trivext(name: &str) -> TrivExtPresentation {
    match corpus::document(name).unwrap() {
        Document::TrivExt(t, _) => t,
        _ => panic!("{name} is not a trivial extension"),
    }
}

pub fn algebra(name: &str) -> phicut::BoundAlgebra {
    match corpus::document(name).unwrap() {
        Document::Algebra(a) => a,
        _ => panic!("{name} is not an algebra"),
    }
}

/// Arrow-name sets of `sets`, sorted.
pub fn names(t: &TrivExtPresentation, sets: &[CuttingSet]) -> Vec<BTreeSet<String>> {
    let mut v: Vec<BTreeSet<String>> = sets.iter().map(|s| s.names(t.quiver()).into_iter().collect()).collect();
    v.sort();
    v
}

pub fn name_set(xs: &[&str]) -> BTreeSet<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

/// Cutting sets by checking every subset of arrows against every cycle.
pub fn oracle_cutting_sets(t: &TrivExtPresentation) -> Vec<BTreeSet<String>> {
    let q = t.quiver();
    let n = q.arrow_count();
    let cycles: Vec<BTreeSet<usize>> = t.cycles().iter().map(|c| c.word().iter().map(|a| a.0).collect()).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let chosen: BTreeSet<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        if cycles.iter().all(|c| c.intersection(&chosen).count() == 1) {
            out.push(chosen.iter().map(|&i| q.arrow_name(phicut::ArrowId(i)).to_string()).collect());
        }
    }
    out.sort();
    out
}

/// Cutting sets whose quotient is an incidence algebra, found by the subset oracle.
pub fn oracle_incidence_sets(t: &TrivExtPresentation) -> Vec<BTreeSet<String>> {
    oracle_cutting_sets(t)
        .into_iter()
        .filter(|s| {
            let v: Vec<&String> = s.iter().collect();
            let sigma = CuttingSet::from_names(t.quiver(), &v).unwrap();
            cut(t, &sigma).is_ok_and(|a| a.path_space().unwrap().is_incidence())
        })
        .collect()
}

/// A random poset on `n` elements, as the transitive closure of random
/// upward pairs.
pub fn random_poset(rng: &mut ChaCha8Rng, n: usize) -> Poset {
    let density: f64 = rng.gen_range(0.1..0.7);
    let mut rel = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                rel.push((format!("p{i}"), format!("p{j}")));
            }
        }
    }
    Poset::from_generating_relation((0..n).map(|i| format!("p{i}")), rel).unwrap()
}

/// Comparable pairs `x ⪯ y` by Warshall's closure of the cover list.
pub fn oracle_comparable_pairs(p: &Poset) -> usize {
    let el = p.elements();
    let n = el.len();
    let idx = |s: &str| el.iter().position(|e| e == s).unwrap();
    let mut r = vec![vec![false; n]; n];
    for (i, row) in r.iter_mut().enumerate() {
        row[i] = true;
    }
    for (a, b) in p.covers() {
        r[idx(&a)][idx(&b)] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if r[i][k] && r[k][j] {
                    r[i][j] = true;
                }
            }
        }
    }
    r.iter().flatten().filter(|&&x| x).count()
}
