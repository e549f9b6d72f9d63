//! Isomorphisms of quivers and bound quiver algebras by backtracking.
//!
//! Only quivers without parallel arrows are handled: the arrow map is then
//! induced by the vertex map.

use std::collections::{BTreeSet, HashMap};

use crate::algebra::BoundAlgebra;
use crate::error::{Error, Result};
use crate::path_space::PathSpace;
use crate::quiver::{ArrowId, Path, Quiver, VertexId};

/// What "carries the relations onto each other" means.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum IsoMode {
    /// The generator sets are mapped onto each other exactly.
    #[default]
    Generators,
    /// Each mapped generator lies in the other ideal, in both directions, so
    /// different generating sets of the same ideal are identified.
    Ideal,
}

/// A vertex and arrow bijection from one quiver onto another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isomorphism {
    pub vertices: Vec<VertexId>,
    pub arrows: Vec<ArrowId>,
}

impl Isomorphism {
    pub fn map_path(&self, p: &Path) -> Path {
        p.mapped(&self.vertices, &self.arrows)
    }

    /// `(from, to)` label pairs, vertices first.
    pub fn describe(&self, x: &Quiver, y: &Quiver) -> (Vec<(String, String)>, Vec<(String, String)>) {
        let vs = x
            .vertices()
            .map(|v| (x.vertex_name(v).to_string(), y.vertex_name(self.vertices[v.0]).to_string()))
            .collect();
        let arr = x
            .arrow_ids()
            .map(|a| (x.arrow_name(a).to_string(), y.arrow_name(self.arrows[a.0]).to_string()))
            .collect();
        (vs, arr)
    }
}

/// Searches quiver isomorphisms `x → y` and returns the first accepted by `accept`.
pub fn find_quiver_isomorphism<F>(x: &Quiver, y: &Quiver, mut accept: F) -> Result<Option<Isomorphism>>
where
    F: FnMut(&Isomorphism) -> bool,
{
    if x.has_parallel_arrows() || y.has_parallel_arrows() {
        return Err(Error::Unsupported(
            "isomorphism search needs quivers without parallel arrows".into(),
        ));
    }
    let n = x.vertex_count();
    if n != y.vertex_count() || x.arrow_count() != y.arrow_count() {
        return Ok(None);
    }
    let xs = Adjacency::new(x);
    let ys = Adjacency::new(y);
    let mut xd: Vec<_> = (0..n).map(|v| xs.degree(v)).collect();
    let mut yd: Vec<_> = (0..n).map(|v| ys.degree(v)).collect();
    xd.sort_unstable();
    yd.sort_unstable();
    if xd != yd {
        return Ok(None);
    }
    let order = search_order(&xs, n);
    let mut state = Search {
        x,
        y,
        xs: &xs,
        ys: &ys,
        order: &order,
        map: vec![usize::MAX; n],
        used: vec![false; n],
    };
    Ok(state.run(0, &mut accept))
}

struct Adjacency {
    out: Vec<BTreeSet<usize>>,
    inn: Vec<BTreeSet<usize>>,
    arrow: HashMap<(usize, usize), ArrowId>,
}

impl Adjacency {
    fn new(q: &Quiver) -> Self {
        let n = q.vertex_count();
        let mut out = vec![BTreeSet::new(); n];
        let mut inn = vec![BTreeSet::new(); n];
        let mut arrow = HashMap::new();
        for a in q.arrow_ids() {
            let (s, t) = (q.source(a).0, q.target(a).0);
            out[s].insert(t);
            inn[t].insert(s);
            arrow.insert((s, t), a);
        }
        Adjacency { out, inn, arrow }
    }

    fn degree(&self, v: usize) -> (usize, usize) {
        (self.inn[v].len(), self.out[v].len())
    }
}

/// Breadth-first order over the underlying graph, so that most vertices are
/// placed next to an already mapped neighbour.
fn search_order(adj: &Adjacency, n: usize) -> Vec<usize> {
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut i = order.len();
        order.push(start);
        while i < order.len() {
            let v = order[i];
            for &u in adj.out[v].iter().chain(adj.inn[v].iter()) {
                if !seen[u] {
                    seen[u] = true;
                    order.push(u);
                }
            }
            i += 1;
        }
    }
    order
}

struct Search<'a> {
    x: &'a Quiver,
    y: &'a Quiver,
    xs: &'a Adjacency,
    ys: &'a Adjacency,
    order: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn run<F: FnMut(&Isomorphism) -> bool>(&mut self, depth: usize, accept: &mut F) -> Option<Isomorphism> {
        if depth == self.order.len() {
            let iso = self.witness();
            return accept(&iso).then_some(iso);
        }
        let v = self.order[depth];
        for w in 0..self.map.len() {
            if self.used[w] || self.xs.degree(v) != self.ys.degree(w) || !self.consistent(v, w) {
                continue;
            }
            self.map[v] = w;
            self.used[w] = true;
            if let Some(iso) = self.run(depth + 1, accept) {
                return Some(iso);
            }
            self.map[v] = usize::MAX;
            self.used[w] = false;
        }
        None
    }

    fn consistent(&self, v: usize, w: usize) -> bool {
        self.order.iter().all(|&u| {
            let m = self.map[u];
            m == usize::MAX
                || (self.xs.out[v].contains(&u) == self.ys.out[w].contains(&m)
                    && self.xs.inn[v].contains(&u) == self.ys.inn[w].contains(&m))
        })
    }

    fn witness(&self) -> Isomorphism {
        let vertices: Vec<VertexId> = self.map.iter().map(|&w| VertexId(w)).collect();
        let arrows = self
            .x
            .arrow_ids()
            .map(|a| {
                let (s, t) = (self.x.source(a).0, self.x.target(a).0);
                self.ys.arrow[&(self.map[s], self.map[t])]
            })
            .collect();
        debug_assert_eq!(self.y.vertex_count(), vertices.len());
        Isomorphism { vertices, arrows }
    }
}

/// An isomorphism of bound algebras `x → y` under `mode`, if one exists.
pub fn find_isomorphism(x: &BoundAlgebra, y: &BoundAlgebra, mode: IsoMode) -> Result<Option<Isomorphism>> {
    match mode {
        IsoMode::Generators => {
            if x.zero_paths().len() != y.zero_paths().len()
                || x.commutations().len() != y.commutations().len()
            {
                return Ok(None);
            }
            let zeros: BTreeSet<&Path> = y.zero_paths().iter().collect();
            let comms: BTreeSet<&(Path, Path)> = y.commutations().iter().collect();
            find_quiver_isomorphism(x.quiver(), y.quiver(), |iso| {
                x.zero_paths().iter().all(|p| zeros.contains(&iso.map_path(p)))
                    && x.commutations().iter().all(|(p, q)| {
                        let (p, q) = (iso.map_path(p), iso.map_path(q));
                        let pair = if p <= q { (p, q) } else { (q, p) };
                        comms.contains(&pair)
                    })
            })
        }
        IsoMode::Ideal => {
            let xs = x.path_space()?;
            let ys = y.path_space()?;
            find_quiver_isomorphism(x.quiver(), y.quiver(), |iso| {
                carried_into(x, iso, &ys) && {
                    let back = inverse(iso);
                    carried_into(y, &back, &xs)
                }
            })
        }
    }
}

fn carried_into(a: &BoundAlgebra, iso: &Isomorphism, target: &PathSpace) -> bool {
    a.zero_paths()
        .iter()
        .all(|p| target.is_zero_path(&iso.map_path(p)).unwrap_or(false))
        && a.commutations().iter().all(|(p, q)| {
            target
                .paths_equal(&iso.map_path(p), &iso.map_path(q))
                .unwrap_or(false)
        })
}

fn inverse(iso: &Isomorphism) -> Isomorphism {
    let mut vertices = vec![VertexId(0); iso.vertices.len()];
    for (i, v) in iso.vertices.iter().enumerate() {
        vertices[v.0] = VertexId(i);
    }
    let mut arrows = vec![ArrowId(0); iso.arrows.len()];
    for (i, a) in iso.arrows.iter().enumerate() {
        arrows[a.0] = ArrowId(i);
    }
    Isomorphism { vertices, arrows }
}

/// Isomorphism with generator sets carried onto each other.
pub fn are_isomorphic(x: &BoundAlgebra, y: &BoundAlgebra) -> bool {
    matches!(find_isomorphism(x, y, IsoMode::Generators), Ok(Some(_)))
}

/// `x ≅ y` or `x ≅ yᵒᵖ` in the given mode.
pub fn isomorphic_up_to_opposite(x: &BoundAlgebra, y: &BoundAlgebra, mode: IsoMode) -> Result<bool> {
    if find_isomorphism(x, y, mode)?.is_some() {
        return Ok(true);
    }
    Ok(find_isomorphism(x, &y.opposite(), mode)?.is_some())
}
