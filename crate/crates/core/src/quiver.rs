//! Finite quivers and the paths in them.
//!
//! Vertices and arrows are stored in natural label order, so two quivers built
//! from the same data in any order compare equal and share index assignments.
//! Paths compose left to right: `a₁a₂…a_k` requires `t(aᵢ) = s(aᵢ₊₁)`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::names::natural_cmp;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArrowId(pub usize);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
}

#[derive(Clone, Debug)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_index: HashMap<String, VertexId>,
    arrow_index: HashMap<String, ArrowId>,
}

impl PartialEq for Quiver {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.arrows == other.arrows
    }
}

impl Eq for Quiver {}

impl Quiver {
    /// Builds a quiver from declared vertices and `(name, source, target)` triples.
    /// Every arrow endpoint must be declared.
    pub fn new<V, A>(vertices: V, arrows: A) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        A: IntoIterator<Item = (String, String, String)>,
    {
        let mut names: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let unique: BTreeSet<&String> = names.iter().collect();
        if unique.len() != names.len() {
            return Err(Error::invalid("quiver", "duplicate vertex identifier"));
        }
        names.sort_by(|a, b| natural_cmp(a, b));
        let vertex_index: HashMap<String, VertexId> = names
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), VertexId(i)))
            .collect();

        let mut raw: Vec<(String, String, String)> = arrows.into_iter().collect();
        raw.sort_by(|a, b| natural_cmp(&a.0, &b.0));
        let mut arrows = Vec::with_capacity(raw.len());
        let mut arrow_index = HashMap::new();
        for (name, src, tgt) in raw {
            let source = *vertex_index.get(&src).ok_or_else(|| {
                Error::invalid("quiver", format!("arrow {name}: undeclared source vertex {src}"))
            })?;
            let target = *vertex_index.get(&tgt).ok_or_else(|| {
                Error::invalid("quiver", format!("arrow {name}: undeclared target vertex {tgt}"))
            })?;
            if arrow_index
                .insert(name.clone(), ArrowId(arrows.len()))
                .is_some()
            {
                return Err(Error::invalid("quiver", format!("duplicate arrow name {name}")));
            }
            arrows.push(Arrow {
                name,
                source,
                target,
            });
        }
        Ok(Quiver {
            vertices: names,
            arrows,
            vertex_index,
            arrow_index,
        })
    }

    /// Like [`Quiver::new`], but vertices mentioned only by arrows are added implicitly.
    pub fn from_arrows<V, A>(vertices: V, arrows: A) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        A: IntoIterator<Item = (String, String, String)>,
    {
        let arrows: Vec<_> = arrows.into_iter().collect();
        let mut seen = BTreeSet::new();
        let mut all = Vec::new();
        for v in vertices.into_iter().map(Into::into) {
            if !seen.insert(v.clone()) {
                return Err(Error::invalid("quiver", format!("duplicate vertex identifier {v}")));
            }
            all.push(v);
        }
        for (_, s, t) in &arrows {
            for v in [s, t] {
                if seen.insert(v.clone()) {
                    all.push(v.clone());
                }
            }
        }
        Quiver::new(all, arrows)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = VertexId> + '_ {
        (0..self.vertices.len()).map(VertexId)
    }

    pub fn arrow_ids(&self) -> impl ExactSizeIterator<Item = ArrowId> + '_ {
        (0..self.arrows.len()).map(ArrowId)
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: ArrowId) -> &Arrow {
        &self.arrows[a.0]
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.0]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrow_name(&self, a: ArrowId) -> &str {
        &self.arrows[a.0].name
    }

    pub fn vertex_id(&self, name: &str) -> Option<VertexId> {
        self.vertex_index.get(name).copied()
    }

    pub fn arrow_id(&self, name: &str) -> Option<ArrowId> {
        self.arrow_index.get(name).copied()
    }

    pub fn source(&self, a: ArrowId) -> VertexId {
        self.arrows[a.0].source
    }

    pub fn target(&self, a: ArrowId) -> VertexId {
        self.arrows[a.0].target
    }

    pub fn arrows_from(&self, v: VertexId) -> impl Iterator<Item = ArrowId> + '_ {
        self.arrow_ids().filter(move |&a| self.source(a) == v)
    }

    pub fn arrows_to(&self, v: VertexId) -> impl Iterator<Item = ArrowId> + '_ {
        self.arrow_ids().filter(move |&a| self.target(a) == v)
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.arrows_from(v).count()
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.arrows_to(v).count()
    }

    pub fn has_loops(&self) -> bool {
        self.arrows.iter().any(|a| a.source == a.target)
    }

    pub fn has_parallel_arrows(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.arrows.iter().any(|a| !seen.insert((a.source, a.target)))
    }

    /// Rejects loops and parallel arrows, which no algebraic operation accepts.
    pub fn require_simple(&self) -> Result<()> {
        if self.has_loops() {
            return Err(Error::Unsupported("quiver has a loop".into()));
        }
        if self.has_parallel_arrows() {
            return Err(Error::Unsupported("quiver has parallel arrows".into()));
        }
        Ok(())
    }

    /// True iff the quiver has no oriented cycle.
    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// Kahn's algorithm; `None` when an oriented cycle exists.
    pub fn topological_order(&self) -> Option<Vec<VertexId>> {
        let mut indeg: Vec<usize> = self.vertices().map(|v| self.in_degree(v)).collect();
        let mut ready: Vec<VertexId> = self.vertices().filter(|v| indeg[v.0] == 0).collect();
        ready.reverse();
        let mut order = Vec::with_capacity(self.vertex_count());
        while let Some(v) = ready.pop() {
            order.push(v);
            for a in self.arrows_from(v) {
                let t = self.target(a);
                indeg[t.0] -= 1;
                if indeg[t.0] == 0 {
                    ready.push(t);
                }
            }
        }
        (order.len() == self.vertex_count()).then_some(order)
    }

    pub(crate) fn require_acyclic(&self) -> Result<()> {
        if self.is_acyclic() {
            Ok(())
        } else {
            Err(Error::Unsupported("quiver has an oriented cycle".into()))
        }
    }

    /// Every path from `a` to `b`, including the trivial path when `a = b`.
    pub fn parallel_paths(&self, a: VertexId, b: VertexId) -> Result<Vec<Path>> {
        self.require_acyclic()?;
        let mut out: Vec<Path> = self
            .paths_from(a)
            .into_iter()
            .filter(|p| p.target == b)
            .collect();
        out.sort();
        Ok(out)
    }

    /// All paths starting at `a` (trivial path included). Caller guarantees acyclicity.
    pub(crate) fn paths_from(&self, a: VertexId) -> Vec<Path> {
        let mut out = vec![Path::trivial(a)];
        let mut i = 0;
        while i < out.len() {
            let p = out[i].clone();
            for arr in self.arrows_from(p.target) {
                let mut q = p.clone();
                q.arrows.push(arr);
                q.target = self.target(arr);
                out.push(q);
            }
            i += 1;
        }
        out
    }

    /// All pairs `(α, γ)` with `γ ≠ α` a path parallel to the arrow `α`.
    pub fn bypasses(&self) -> Result<Vec<(ArrowId, Path)>> {
        self.require_acyclic()?;
        let mut out = Vec::new();
        for a in self.arrow_ids() {
            for p in self.parallel_paths(self.source(a), self.target(a))? {
                if p.arrows != [a] {
                    out.push((a, p));
                }
            }
        }
        Ok(out)
    }

    /// Reverses every arrow; labels are kept.
    pub fn opposite(&self) -> Quiver {
        let arrows = self.arrows.iter().map(|a| Arrow {
            name: a.name.clone(),
            source: a.target,
            target: a.source,
        });
        Quiver {
            vertices: self.vertices.clone(),
            arrows: arrows.collect(),
            vertex_index: self.vertex_index.clone(),
            arrow_index: self.arrow_index.clone(),
        }
    }

    /// The quiver with the named arrows deleted; all vertices are kept.
    pub fn without_arrows(&self, removed: &BTreeSet<ArrowId>) -> Quiver {
        let arrows = self
            .arrow_ids()
            .filter(|a| !removed.contains(a))
            .map(|a| {
                let arr = self.arrow(a);
                (
                    arr.name.clone(),
                    self.vertex_name(arr.source).to_string(),
                    self.vertex_name(arr.target).to_string(),
                )
            });
        Quiver::new(self.vertices.clone(), arrows).expect("subquiver of a valid quiver")
    }

    /// Number of connected components of the underlying graph.
    pub fn component_count(&self) -> usize {
        let n = self.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for a in &self.arrows {
            let (x, y) = (find(&mut parent, a.source.0), find(&mut parent, a.target.0));
            if x != y {
                parent[x] = y;
            }
        }
        (0..n).filter(|&i| find(&mut parent, i) == i).count()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Builds a path from arrow names.
    pub fn path_by_names<S: AsRef<str>>(&self, names: &[S]) -> Result<Path> {
        let ids = names
            .iter()
            .map(|n| {
                self.arrow_id(n.as_ref()).ok_or_else(|| {
                    Error::Contract(format!("unknown arrow {}", n.as_ref()))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Path::from_arrows(self, ids)
    }

    /// Re-expresses a path of `other` in this quiver by arrow labels.
    pub fn translate_path(&self, other: &Quiver, p: &Path) -> Option<Path> {
        if p.is_trivial() {
            let v = self.vertex_id(other.vertex_name(p.source))?;
            return Some(Path::trivial(v));
        }
        let ids: Option<Vec<ArrowId>> = p
            .arrows
            .iter()
            .map(|&a| self.arrow_id(other.arrow_name(a)))
            .collect();
        Path::from_arrows(self, ids?).ok()
    }

    /// Space-separated arrow labels, or `e_v` for the trivial path at `v`.
    pub fn path_string(&self, p: &Path) -> String {
        if p.is_trivial() {
            format!("e_{}", self.vertex_name(p.source))
        } else {
            self.path_names(p).join(" ")
        }
    }

    pub fn path_names(&self, p: &Path) -> Vec<String> {
        p.arrows.iter().map(|&a| self.arrow_name(a).to_string()).collect()
    }
}

/// A path of a specific quiver; trivial when `arrows` is empty.
///
/// The derived order compares arrow sequences first, which is lexicographic
/// order on label sequences because arrows are indexed in label order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    arrows: Vec<ArrowId>,
    source: VertexId,
    target: VertexId,
}

impl Path {
    pub fn trivial(v: VertexId) -> Path {
        Path {
            arrows: Vec::new(),
            source: v,
            target: v,
        }
    }

    pub fn arrow(q: &Quiver, a: ArrowId) -> Path {
        Path {
            arrows: vec![a],
            source: q.source(a),
            target: q.target(a),
        }
    }

    /// A nonempty composable arrow sequence.
    pub fn from_arrows(q: &Quiver, arrows: Vec<ArrowId>) -> Result<Path> {
        let first = *arrows
            .first()
            .ok_or_else(|| Error::Contract("a path needs at least one arrow".into()))?;
        for w in arrows.windows(2) {
            if q.target(w[0]) != q.source(w[1]) {
                return Err(Error::Contract(format!(
                    "arrows {} and {} do not compose",
                    q.arrow_name(w[0]),
                    q.arrow_name(w[1])
                )));
            }
        }
        let last = *arrows.last().expect("nonempty");
        Ok(Path {
            source: q.source(first),
            target: q.target(last),
            arrows,
        })
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn target(&self) -> VertexId {
        self.target
    }

    pub fn arrows(&self) -> &[ArrowId] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_trivial()
    }

    pub fn is_parallel_to(&self, other: &Path) -> bool {
        self.source == other.source && self.target == other.target
    }

    pub fn contains(&self, a: ArrowId) -> bool {
        self.arrows.contains(&a)
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Path) -> Result<Path> {
        if self.target != other.source {
            return Err(Error::Contract(
                "path endpoints do not match for composition".into(),
            ));
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Ok(Path {
            arrows,
            source: self.source,
            target: other.target,
        })
    }

    /// The contiguous subpath `arrows[start..end]`; trivial at the right vertex when empty.
    pub fn subpath(&self, q: &Quiver, start: usize, end: usize) -> Path {
        if start == end {
            let v = if start == 0 {
                self.source
            } else {
                q.target(self.arrows[start - 1])
            };
            return Path::trivial(v);
        }
        Path {
            arrows: self.arrows[start..end].to_vec(),
            source: q.source(self.arrows[start]),
            target: q.target(self.arrows[end - 1]),
        }
    }

    /// The same arrows read backwards in the opposite quiver.
    pub fn reversed(&self) -> Path {
        let mut arrows = self.arrows.clone();
        arrows.reverse();
        Path {
            arrows,
            source: self.target,
            target: self.source,
        }
    }

    /// Image under an arrow/vertex relabelling.
    pub(crate) fn mapped(&self, vmap: &[VertexId], amap: &[ArrowId]) -> Path {
        Path {
            arrows: self.arrows.iter().map(|a| amap[a.0]).collect(),
            source: vmap[self.source.0],
            target: vmap[self.target.0],
        }
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v#{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(arrows: &[(&str, &str, &str)]) -> Quiver {
        Quiver::from_arrows(
            Vec::<String>::new(),
            arrows
                .iter()
                .map(|(n, s, t)| (n.to_string(), s.to_string(), t.to_string())),
        )
        .unwrap()
    }

    fn square() -> Quiver {
        q(&[("a", "0", "x"), ("b", "x", "1"), ("c", "0", "y"), ("d", "y", "1")])
    }

    fn e7_proof_quiver() -> Quiver {
        q(&[
            ("α1", "v1", "v3"),
            ("α2", "v3", "v4"),
            ("α3", "v4", "v7"),
            ("α4", "v5", "v3"),
            ("α5", "v4", "v2"),
            ("α6", "v2", "v1"),
            ("α7", "v6", "v5"),
            ("α8", "v7", "v6"),
        ])
    }

    #[test]
    fn compose_follows_arrows_left_to_right() {
        let q = e7_proof_quiver();
        let p = q.path_by_names(&["α1", "α2"]).unwrap();
        let r = q.path_by_names(&["α3"]).unwrap();
        let pr = p.compose(&r).unwrap();
        assert_eq!(q.path_string(&pr), "α1 α2 α3");
        assert_eq!(pr.len(), p.len() + r.len());
        let e = Path::trivial(p.source());
        assert_eq!(e.compose(&p).unwrap(), p);
        assert!(r.compose(&p).is_err());
        assert!(q.path_by_names(&["α2", "α1"]).is_err());
    }

    #[test]
    fn compose_is_associative() {
        let q = e7_proof_quiver();
        let a = q.path_by_names(&["α6"]).unwrap();
        let b = q.path_by_names(&["α1", "α2"]).unwrap();
        let c = q.path_by_names(&["α3", "α8"]).unwrap();
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn parallel_paths_in_square() {
        let q = square();
        let (s, t) = (q.vertex_id("0").unwrap(), q.vertex_id("1").unwrap());
        let ps = q.parallel_paths(s, t).unwrap();
        let strs: Vec<_> = ps.iter().map(|p| q.path_string(p)).collect();
        assert_eq!(strs, vec!["a b", "c d"]);
        assert_eq!(q.parallel_paths(s, s).unwrap(), vec![Path::trivial(s)]);
    }

    #[test]
    fn star_has_one_path_per_source() {
        let q = q(&[("α3", "TL", "C"), ("α2", "BL", "C"), ("α4", "BR", "C"), ("α1", "C", "TR")]);
        let tr = q.vertex_id("TR").unwrap();
        for src in ["TL", "BL", "BR"] {
            let ps = q.parallel_paths(q.vertex_id(src).unwrap(), tr).unwrap();
            assert_eq!(ps.len(), 1);
            assert_eq!(ps[0].len(), 2);
        }
    }

    #[test]
    fn acyclicity() {
        assert!(q(&[("a", "1", "2")]).is_acyclic());
        assert!(!q(&[("a", "1", "2"), ("b", "2", "1")]).is_acyclic());
        let t = e7_proof_quiver();
        assert!(!t.is_acyclic());
        assert!(t.parallel_paths(VertexId(0), VertexId(1)).is_err());
    }

    #[test]
    fn bypass_detection() {
        let tri = q(&[("ab", "a", "b"), ("bc", "b", "c"), ("ac", "a", "c")]);
        let bp = tri.bypasses().unwrap();
        assert_eq!(bp.len(), 1);
        assert_eq!(tri.arrow_name(bp[0].0), "ac");
        assert_eq!(tri.path_string(&bp[0].1), "ab bc");
        assert!(square().bypasses().unwrap().is_empty());
    }

    #[test]
    fn opposite_is_an_involution() {
        let t = e7_proof_quiver();
        assert_eq!(t.opposite().opposite(), t);
        let sq = square();
        let op = sq.opposite();
        assert_eq!(op.source(op.arrow_id("a").unwrap()), sq.vertex_id("x").unwrap());
    }

    #[test]
    fn construction_errors() {
        let dup = Quiver::new(
            vec!["1", "2"],
            vec![
                ("a".into(), "1".into(), "2".into()),
                ("a".into(), "2".into(), "1".into()),
            ],
        );
        assert!(matches!(dup, Err(Error::Invalid { .. })));
        let undeclared = Quiver::new(vec!["1"], vec![("a".into(), "1".into(), "2".into())]);
        assert!(undeclared.is_err());
        assert!(Quiver::new(vec!["1", "1"], Vec::new()).is_err());
    }

    #[test]
    fn order_of_declaration_is_irrelevant() {
        let a = q(&[("a", "1", "2"), ("b", "2", "3")]);
        let b = q(&[("b", "2", "3"), ("a", "1", "2")]);
        assert_eq!(a, b);
    }

    #[test]
    fn subpaths() {
        let q = e7_proof_quiver();
        let p = q.path_by_names(&["α6", "α1", "α2"]).unwrap();
        assert_eq!(q.path_string(&p.subpath(&q, 1, 3)), "α1 α2");
        assert_eq!(p.subpath(&q, 3, 3), Path::trivial(p.target()));
        assert_eq!(p.subpath(&q, 0, 0), Path::trivial(p.source()));
    }
}
