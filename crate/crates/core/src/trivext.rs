//! Quiver-with-relations presentation of the trivial extension `T(A)` of a
//! schurian path-equal algebra.
//!
//! `T(A)` has the vertices and arrows of `A` plus one arrow `β_γ: t(γ) → s(γ)`
//! per class of maximal paths `γ`. Every path `p` equal to `γ` closes up to an
//! elementary cycle `β_γ p`, and the relations come in three kinds:
//!
//! 1. a full elementary cycle followed by its own first arrow again;
//! 2. minimal paths whose arrows lie in no single elementary cycle;
//! 3. differences `γ − γ'` of paths with a common supplement.

use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::BoundAlgebra;
use crate::error::{Error, Result};
use crate::iso::{find_quiver_isomorphism, Isomorphism};
use crate::names::split_index;
use crate::path_space::DEFAULT_PATH_CAP;
use crate::quiver::{ArrowId, Path, Quiver, VertexId};

/// Nonzero paths of `A` that vanish under every one-arrow extension, grouped by
/// equality in `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalPathClass {
    pub representative: Path,
    pub members: Vec<Path>,
    /// Label of the arrow `β_γ` added to `T(A)`.
    pub added_arrow: String,
}

/// A simple oriented cycle of `Q_{T(A)}`, stored as the rotation starting at its
/// least arrow.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementaryCycle {
    word: Vec<ArrowId>,
}

impl ElementaryCycle {
    fn new(q: &Quiver, word: Vec<ArrowId>) -> Result<Self> {
        if word.len() < 2 {
            return Err(Error::invalid("presentation", "elementary cycle of length < 2"));
        }
        let n = word.len();
        for i in 0..n {
            if q.target(word[i]) != q.source(word[(i + 1) % n]) {
                return Err(Error::invalid(
                    "presentation",
                    format!(
                        "cycle does not close: {} is not followed by {}",
                        q.arrow_name(word[i]),
                        q.arrow_name(word[(i + 1) % n])
                    ),
                ));
            }
        }
        let vs: BTreeSet<VertexId> = word.iter().map(|&a| q.source(a)).collect();
        if vs.len() != n {
            return Err(Error::invalid("presentation", "elementary cycle passes a vertex twice"));
        }
        Ok(ElementaryCycle {
            word: canonical_rotation(&word),
        })
    }

    pub fn word(&self) -> &[ArrowId] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn arrow_set(&self) -> BTreeSet<ArrowId> {
        self.word.iter().copied().collect()
    }

    pub fn contains(&self, a: ArrowId) -> bool {
        self.word.contains(&a)
    }

    /// The cyclic subword of `len` arrows starting at position `start`.
    fn segment(&self, q: &Quiver, start: usize, len: usize) -> Path {
        let n = self.word.len();
        if len == 0 {
            return Path::trivial(q.source(self.word[start % n]));
        }
        let arrows = (0..len).map(|i| self.word[(start + i) % n]).collect();
        Path::from_arrows(q, arrows).expect("cycle segments compose")
    }

    fn mapped(&self, amap: &[ArrowId]) -> ElementaryCycle {
        ElementaryCycle {
            word: canonical_rotation(&self.word.iter().map(|a| amap[a.0]).collect::<Vec<_>>()),
        }
    }
}

fn canonical_rotation(word: &[ArrowId]) -> Vec<ArrowId> {
    let k = (0..word.len()).min_by_key(|&i| word[i]).unwrap_or(0);
    word[k..].iter().chain(&word[..k]).copied().collect()
}

/// Supplied type-2 relations that disagree with the ones recomputed from the cycles.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Rel2Diagnostic {
    /// Supplied but not recomputed.
    pub unexpected: Vec<Path>,
    /// Recomputed but not supplied.
    pub missing: Vec<Path>,
}

impl Rel2Diagnostic {
    pub fn is_clean(&self) -> bool {
        self.unexpected.is_empty() && self.missing.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrivExtPresentation {
    quiver: Quiver,
    cycles: Vec<ElementaryCycle>,
    rel1: Vec<Path>,
    rel2: Vec<Path>,
    rel3: Vec<(Path, Path)>,
    origin: Option<BoundAlgebra>,
    classes: Vec<MaximalPathClass>,
}

/// The maximal-path classes of `a`.
///
/// Fails with an unsupported-input error unless `a` is schurian and
/// path-equal, and when `a` has an isolated vertex (whose trivial path would be
/// maximal and demand a loop).
pub fn maximal_paths(a: &BoundAlgebra) -> Result<Vec<MaximalPathClass>> {
    maximal_paths_with_cap(a, DEFAULT_PATH_CAP)
}

/// [`maximal_paths`] under an explicit path-count cap.
pub fn maximal_paths_with_cap(a: &BoundAlgebra, cap: usize) -> Result<Vec<MaximalPathClass>> {
    let q = a.quiver();
    let ps = a.path_space_with_cap(cap)?;
    if !ps.is_schurian() {
        return Err(Error::Unsupported("algebra is not schurian".into()));
    }
    if !ps.is_path_equal() {
        return Err(Error::Unsupported(
            "algebra has parallel nonzero paths that are not equal".into(),
        ));
    }
    if let Some(v) = q.vertices().find(|&v| q.in_degree(v) + q.out_degree(v) == 0) {
        return Err(Error::Unsupported(format!(
            "vertex {} is isolated; its trivial extension needs a loop",
            q.vertex_name(v)
        )));
    }
    let mut by_ends: BTreeMap<(VertexId, VertexId), Vec<Path>> = BTreeMap::new();
    for (_, block) in ps.blocks() {
        for p in block.basis() {
            if p.is_trivial() || ps.is_zero_path(p)? {
                continue;
            }
            let killed_left = q
                .arrows_to(p.source())
                .all(|x| ps.is_zero_path(&Path::arrow(q, x).compose(p).expect("composable")).unwrap_or(false));
            let killed_right = q
                .arrows_from(p.target())
                .all(|x| ps.is_zero_path(&p.compose(&Path::arrow(q, x)).expect("composable")).unwrap_or(false));
            if killed_left && killed_right {
                by_ends.entry((p.source(), p.target())).or_default().push(p.clone());
            }
        }
    }
    let mut classes: Vec<(Path, Vec<Path>)> = by_ends
        .into_values()
        .map(|mut ms| {
            ms.sort();
            (ms[0].clone(), ms)
        })
        .collect();
    classes.sort();
    let names = added_arrow_names(q, classes.len());
    Ok(classes
        .into_iter()
        .zip(names)
        .map(|((representative, members), added_arrow)| MaximalPathClass {
            representative,
            members,
            added_arrow,
        })
        .collect())
}

/// Continues `stem1 … stemN` numbering when every arrow label has the same
/// stem and an index; otherwise `β1, β2, …` skipping taken labels.
fn added_arrow_names(q: &Quiver, count: usize) -> Vec<String> {
    let split: Option<Vec<(&str, u64)>> = q.arrows().iter().map(|a| split_index(&a.name)).collect();
    let taken: BTreeSet<&str> = q.arrows().iter().map(|a| a.name.as_str()).collect();
    let (stem, mut next) = match split {
        Some(parts) if !parts.is_empty() && parts.iter().all(|(s, _)| *s == parts[0].0) => {
            (parts[0].0.to_string(), parts.iter().map(|p| p.1).max().unwrap_or(0) + 1)
        }
        _ => ("β".to_string(), 1),
    };
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let name = format!("{stem}{next}");
        next += 1;
        if !taken.contains(name.as_str()) {
            out.push(name);
        }
    }
    out
}

/// The presentation of `T(a)`.
pub fn trivial_extension(a: &BoundAlgebra) -> Result<TrivExtPresentation> {
    trivial_extension_with_cap(a, DEFAULT_PATH_CAP)
}

/// [`trivial_extension`] under an explicit path-count cap.
pub fn trivial_extension_with_cap(a: &BoundAlgebra, cap: usize) -> Result<TrivExtPresentation> {
    let classes = maximal_paths_with_cap(a, cap)?;
    let qa = a.quiver();
    let mut arrows: Vec<(String, String, String)> = qa
        .arrows()
        .iter()
        .map(|x| {
            (
                x.name.clone(),
                qa.vertex_name(x.source).to_string(),
                qa.vertex_name(x.target).to_string(),
            )
        })
        .collect();
    for c in &classes {
        let g = &c.representative;
        arrows.push((
            c.added_arrow.clone(),
            qa.vertex_name(g.target()).to_string(),
            qa.vertex_name(g.source()).to_string(),
        ));
    }
    let qt = Quiver::new(qa.vertex_names().to_vec(), arrows)?;
    let mut words = Vec::new();
    for c in &classes {
        let beta = qt.arrow_id(&c.added_arrow).expect("added arrow");
        for m in &c.members {
            let mut w = vec![beta];
            w.extend(m.arrows().iter().map(|&x| qt.arrow_id(qa.arrow_name(x)).expect("same label")));
            words.push(w);
        }
    }
    let mut t = build(qt, words)?;
    t.origin = Some(a.clone());
    t.classes = classes;
    Ok(t)
}

/// Fills in the relations of a directly supplied quiver and cycle list, and
/// compares an optional supplied type-2 list with the recomputed one.
pub fn complete_presentation(
    quiver: Quiver,
    cycles: Vec<Vec<ArrowId>>,
    rel2: Option<Vec<Path>>,
) -> Result<(TrivExtPresentation, Option<Rel2Diagnostic>)> {
    let t = build(quiver, cycles)?;
    let diag = rel2.map(|given| {
        let given: BTreeSet<Path> = given.into_iter().collect();
        let ours: BTreeSet<Path> = t.rel2.iter().cloned().collect();
        Rel2Diagnostic {
            unexpected: given.difference(&ours).cloned().collect(),
            missing: ours.difference(&given).cloned().collect(),
        }
    });
    Ok((t, diag))
}

fn build(quiver: Quiver, words: Vec<Vec<ArrowId>>) -> Result<TrivExtPresentation> {
    quiver.require_simple()?;
    let mut cycles = BTreeSet::new();
    for w in words {
        let c = ElementaryCycle::new(&quiver, w)?;
        if !cycles.insert(c) {
            return Err(Error::invalid("presentation", "elementary cycle listed twice"));
        }
    }
    let cycles: Vec<ElementaryCycle> = cycles.into_iter().collect();
    if cycles.is_empty() {
        return Err(Error::invalid("presentation", "no elementary cycles"));
    }
    for a in quiver.arrow_ids() {
        if !cycles.iter().any(|c| c.contains(a)) {
            return Err(Error::invalid(
                "presentation",
                format!("arrow {} lies in no elementary cycle", quiver.arrow_name(a)),
            ));
        }
    }
    let rel1 = relations_type1(&quiver, &cycles);
    let rel2 = relations_type2(&quiver, &cycles);
    let rel3 = relations_type3(&quiver, &cycles);
    Ok(TrivExtPresentation {
        quiver,
        cycles,
        rel1,
        rel2,
        rel3,
        origin: None,
        classes: Vec::new(),
    })
}

/// Each rotation of each cycle followed by its first arrow again.
pub fn relations_type1(q: &Quiver, cycles: &[ElementaryCycle]) -> Vec<Path> {
    let mut out = BTreeSet::new();
    for c in cycles {
        for i in 0..c.len() {
            out.insert(c.segment(q, i, c.len() + 1));
        }
    }
    out.into_iter().collect()
}

/// Paths `w·b` with `w` and `(w minus its first arrow)·b` inside some cycle,
/// but `w·b` inside none.
pub fn relations_type2(q: &Quiver, cycles: &[ElementaryCycle]) -> Vec<Path> {
    let sets: Vec<BTreeSet<ArrowId>> = cycles.iter().map(ElementaryCycle::arrow_set).collect();
    let inside = |p: &[ArrowId]| sets.iter().any(|s| p.iter().all(|a| s.contains(a)));
    let mut out = BTreeSet::new();
    for c in cycles {
        for start in 0..c.len() {
            for len in 1..=c.len() {
                let w = c.segment(q, start, len);
                for b in q.arrows_from(w.target()) {
                    let mut wb = w.arrows().to_vec();
                    wb.push(b);
                    if !inside(&wb) && inside(&wb[1..]) {
                        out.insert(Path::from_arrows(q, wb).expect("composable"));
                    }
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Unordered pairs of distinct paths sharing a supplement, trivial supplements
/// (full cycles through a common vertex) included.
pub fn relations_type3(q: &Quiver, cycles: &[ElementaryCycle]) -> Vec<(Path, Path)> {
    let mut by_supplement: BTreeMap<Path, BTreeSet<Path>> = BTreeMap::new();
    for c in cycles {
        let n = c.len();
        for start in 0..n {
            for len in 1..=n {
                let g = c.segment(q, start, len);
                let s = c.segment(q, start + len, n - len);
                by_supplement.entry(s).or_default().insert(g);
            }
        }
    }
    let mut out = BTreeSet::new();
    for gs in by_supplement.values() {
        let gs: Vec<&Path> = gs.iter().collect();
        for i in 0..gs.len() {
            for j in i + 1..gs.len() {
                out.insert((gs[i].clone(), gs[j].clone()));
            }
        }
    }
    out.into_iter().collect()
}

impl TrivExtPresentation {
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn cycles(&self) -> &[ElementaryCycle] {
        &self.cycles
    }

    pub fn rel1(&self) -> &[Path] {
        &self.rel1
    }

    pub fn rel2(&self) -> &[Path] {
        &self.rel2
    }

    pub fn rel3(&self) -> &[(Path, Path)] {
        &self.rel3
    }

    pub fn origin(&self) -> Option<&BoundAlgebra> {
        self.origin.as_ref()
    }

    /// Maximal-path classes behind the added arrows; empty when the
    /// presentation was supplied directly.
    pub fn classes(&self) -> &[MaximalPathClass] {
        &self.classes
    }

    pub fn cycle_words(&self) -> Vec<Vec<ArrowId>> {
        self.cycles.iter().map(|c| c.word.clone()).collect()
    }

    /// The complement of `g` in cycle number `cycle`, from `t(g)` to `s(g)`;
    /// trivial when `g` runs around the whole cycle.
    pub fn supplement(&self, g: &Path, cycle: usize) -> Result<Path> {
        let c = self
            .cycles
            .get(cycle)
            .ok_or_else(|| Error::Contract(format!("no cycle number {cycle}")))?;
        let n = c.len();
        if g.is_trivial() || g.len() > n {
            return Err(Error::Contract("path is not a subword of the cycle".into()));
        }
        for start in 0..n {
            if c.segment(&self.quiver, start, g.len()) == *g {
                return Ok(c.segment(&self.quiver, start + g.len(), n - g.len()));
            }
        }
        Err(Error::Contract("path is not a subword of the cycle".into()))
    }

    /// Indices of the cycles through arrow `a`.
    pub fn cycles_through(&self, a: ArrowId) -> Vec<usize> {
        (0..self.cycles.len()).filter(|&i| self.cycles[i].contains(a)).collect()
    }

    /// Arrows reversed; cycles and relations are read backwards.
    pub fn opposite(&self) -> TrivExtPresentation {
        let q = self.quiver.opposite();
        let words = self
            .cycles
            .iter()
            .map(|c| c.word.iter().rev().copied().collect())
            .collect();
        let mut t = build(q, words).expect("opposite of a valid presentation");
        t.origin = self.origin.as_ref().map(BoundAlgebra::opposite);
        t
    }

    /// A quiver isomorphism carrying cycles and relations of each type onto
    /// those of `other`.
    pub fn find_isomorphism(&self, other: &TrivExtPresentation) -> Result<Option<Isomorphism>> {
        if self.cycles.len() != other.cycles.len()
            || self.rel1.len() != other.rel1.len()
            || self.rel2.len() != other.rel2.len()
            || self.rel3.len() != other.rel3.len()
        {
            return Ok(None);
        }
        let cycles: BTreeSet<&ElementaryCycle> = other.cycles.iter().collect();
        let rel1: BTreeSet<&Path> = other.rel1.iter().collect();
        let rel2: BTreeSet<&Path> = other.rel2.iter().collect();
        let rel3: BTreeSet<&(Path, Path)> = other.rel3.iter().collect();
        find_quiver_isomorphism(&self.quiver, &other.quiver, |iso| {
            self.cycles.iter().all(|c| cycles.contains(&c.mapped(&iso.arrows)))
                && self.rel1.iter().all(|p| rel1.contains(&iso.map_path(p)))
                && self.rel2.iter().all(|p| rel2.contains(&iso.map_path(p)))
                && self.rel3.iter().all(|(p, r)| {
                    let (p, r) = (iso.map_path(p), iso.map_path(r));
                    rel3.contains(&if p <= r { (p, r) } else { (r, p) })
                })
        })
    }

    pub fn is_isomorphic_to(&self, other: &TrivExtPresentation) -> bool {
        matches!(self.find_isomorphism(other), Ok(Some(_)))
    }
}
