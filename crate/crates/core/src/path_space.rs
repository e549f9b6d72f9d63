//! Exact linear algebra on the path spaces `e_a KQ e_b` of an acyclic quiver.
//!
//! For each ordered vertex pair the relation subspace `I ∩ e_a KQ e_b` is the
//! span of all `u·r·v` with `r` a generator and `u`, `v` paths; it is kept in
//! reduced row-echelon form over the rationals.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::BoundAlgebra;
use crate::error::{Error, Result};
use crate::quiver::{Path, Quiver, VertexId};

/// Default cap on the total number of paths enumerated for one algebra.
pub const DEFAULT_PATH_CAP: usize = 200_000;

/// Environment variable overriding [`DEFAULT_PATH_CAP`] in the command-line tool.
pub const PATH_CAP_ENV: &str = "PHI_PATH_CAP";

type Vector = Vec<BigRational>;

/// Total number of paths, trivial ones included, saturating at `usize::MAX`.
/// The quiver must be acyclic.
pub fn path_count(q: &Quiver) -> usize {
    let order = q.topological_order().expect("acyclic quiver");
    let mut from = vec![1usize; q.vertex_count()];
    for &v in order.iter().rev() {
        for a in q.arrows_from(v) {
            from[v.0] = from[v.0].saturating_add(from[q.target(a).0]);
        }
    }
    from.iter().fold(0usize, |s, &x| s.saturating_add(x))
}

/// Basis and relation subspace for one vertex pair.
#[derive(Clone, Debug)]
pub struct PathBlock {
    basis: Vec<Path>,
    index: HashMap<Path, usize>,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl PathBlock {
    fn new(basis: Vec<Path>) -> Self {
        let index = basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        PathBlock {
            basis,
            index,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dimension(&self) -> usize {
        self.basis.len() - self.rows.len()
    }

    fn reduce(&self, v: &mut Vector) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let c = v[p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *x -= &c * r;
                    }
                }
            }
        }
    }

    fn contains(&self, v: &Vector) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        w.iter().all(Zero::is_zero)
    }

    /// Adds `v` to the span, keeping the rows fully reduced.
    fn insert(&mut self, mut v: Vector) {
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return;
        };
        let inv = v[p].recip();
        for x in v.iter_mut() {
            *x *= &inv;
        }
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = row[p].clone();
                for (x, y) in row.iter_mut().zip(&v) {
                    if !y.is_zero() {
                        *x -= &c * y;
                    }
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
    }

    fn unit(&self, p: &Path) -> Vector {
        let mut v = vec![BigRational::zero(); self.basis.len()];
        v[self.index[p]] = BigRational::one();
        v
    }
}

/// All path spaces of a bound algebra with their relation subspaces.
#[derive(Clone, Debug)]
pub struct PathSpace {
    quiver: Quiver,
    blocks: BTreeMap<(VertexId, VertexId), PathBlock>,
}

impl PathSpace {
    pub fn build(algebra: &BoundAlgebra, cap: usize) -> Result<Self> {
        let q = algebra.quiver();
        q.require_simple()?;
        q.require_acyclic()?;
        let total = path_count(q);
        if total > cap {
            return Err(Error::ResourceLimit(format!(
                "quiver has {total} paths, above the cap of {cap}"
            )));
        }
        let mut by_pair: BTreeMap<(VertexId, VertexId), Vec<Path>> = BTreeMap::new();
        for a in q.vertices() {
            for p in q.paths_from(a) {
                by_pair.entry((a, p.target())).or_default().push(p);
            }
        }
        let mut blocks: BTreeMap<(VertexId, VertexId), PathBlock> = by_pair
            .iter()
            .map(|(&k, ps)| {
                let mut ps = ps.clone();
                ps.sort();
                (k, PathBlock::new(ps))
            })
            .collect();

        let into = |x: VertexId| -> Vec<&Path> {
            by_pair
                .iter()
                .filter(|((_, t), _)| *t == x)
                .flat_map(|(_, ps)| ps.iter())
                .collect()
        };
        let out_of = |x: VertexId| -> Vec<&Path> {
            by_pair
                .range((x, VertexId(0))..=(x, VertexId(usize::MAX)))
                .flat_map(|(_, ps)| ps.iter())
                .collect()
        };

        // each generator as a signed combination of parallel paths
        let mut generators: Vec<Vec<(&Path, i8)>> = Vec::new();
        for z in algebra.zero_paths() {
            generators.push(vec![(z, 1)]);
        }
        for (p, r) in algebra.commutations() {
            generators.push(vec![(p, 1), (r, -1)]);
        }

        let mut seen: HashSet<Vec<(Path, i8)>> = HashSet::new();
        for g in &generators {
            let (s, t) = (g[0].0.source(), g[0].0.target());
            let lefts = into(s);
            let rights = out_of(t);
            for u in &lefts {
                for v in &rights {
                    let terms: Vec<(Path, i8)> = g
                        .iter()
                        .map(|(p, c)| {
                            let w = u.compose(p).and_then(|w| w.compose(v)).expect("composable");
                            (w, *c)
                        })
                        .collect();
                    if !seen.insert(terms.clone()) {
                        continue;
                    }
                    let block = blocks
                        .get_mut(&(u.source(), v.target()))
                        .expect("block exists for a realised path");
                    let mut vec = vec![BigRational::zero(); block.basis.len()];
                    for (w, c) in &terms {
                        vec[block.index[w]] += BigRational::from_integer((*c as i64).into());
                    }
                    block.insert(vec);
                }
            }
        }
        Ok(PathSpace {
            quiver: q.clone(),
            blocks,
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn block(&self, a: VertexId, b: VertexId) -> Option<&PathBlock> {
        self.blocks.get(&(a, b))
    }

    pub fn blocks(&self) -> impl Iterator<Item = ((VertexId, VertexId), &PathBlock)> {
        self.blocks.iter().map(|(&k, b)| (k, b))
    }

    /// `dim e_a A e_b`.
    pub fn dimension(&self, a: VertexId, b: VertexId) -> usize {
        self.block(a, b).map_or(0, PathBlock::dimension)
    }

    pub fn total_dimension(&self) -> usize {
        self.blocks.values().map(PathBlock::dimension).sum()
    }

    fn block_for(&self, p: &Path) -> Result<&PathBlock> {
        self.block(p.source(), p.target())
            .filter(|b| b.index.contains_key(p))
            .ok_or_else(|| Error::Contract("path does not belong to this quiver".into()))
    }

    /// True iff the class of `p` vanishes.
    pub fn is_zero_path(&self, p: &Path) -> Result<bool> {
        let b = self.block_for(p)?;
        Ok(b.contains(&b.unit(p)))
    }

    /// True iff `p − q` lies in the ideal.
    pub fn paths_equal(&self, p: &Path, q: &Path) -> Result<bool> {
        if !p.is_parallel_to(q) {
            return Err(Error::Contract("paths are not parallel".into()));
        }
        let b = self.block_for(p)?;
        self.block_for(q)?;
        let mut v = b.unit(p);
        v[b.index[q]] -= BigRational::one();
        Ok(b.contains(&v))
    }

    /// Membership of a signed combination of parallel paths in the ideal.
    pub fn contains_combination(&self, terms: &[(Path, i64)]) -> Result<bool> {
        let Some((first, _)) = terms.first() else {
            return Ok(true);
        };
        let b = self.block_for(first)?;
        let mut v = vec![BigRational::zero(); b.basis.len()];
        for (p, c) in terms {
            if !p.is_parallel_to(first) {
                return Err(Error::Contract("combination mixes vertex pairs".into()));
            }
            self.block_for(p)?;
            v[b.index[p]] += BigRational::from_integer((*c).into());
        }
        Ok(b.contains(&v))
    }

    /// Every `dim e_a A e_b ≤ 1`.
    pub fn is_schurian(&self) -> bool {
        self.blocks.values().all(|b| b.dimension() <= 1)
    }

    /// The relation subspace vanishes everywhere.
    pub fn is_hereditary(&self) -> bool {
        self.blocks.values().all(|b| b.rank() == 0)
    }

    /// Parallel nonzero paths are equal.
    pub fn is_path_equal(&self) -> bool {
        self.blocks.values().all(|b| {
            let nonzero: Vec<&Path> = b
                .basis
                .iter()
                .filter(|p| !b.contains(&b.unit(p)))
                .collect();
            nonzero.windows(2).all(|w| {
                let mut v = b.unit(w[0]);
                v[b.index[w[1]]] -= BigRational::one();
                b.contains(&v)
            })
        })
    }

    /// No bypass, and for every pair joined by a path all parallel paths are
    /// nonzero and pairwise equal.
    pub fn is_incidence(&self) -> bool {
        match self.quiver.bypasses() {
            Ok(b) if b.is_empty() => {}
            _ => return false,
        }
        self.blocks.values().all(|b| {
            let first = &b.basis[0];
            let e0 = b.unit(first);
            if b.contains(&e0) {
                return false;
            }
            b.basis[1..].iter().all(|p| {
                let mut v = e0.clone();
                v[b.index[p]] -= BigRational::one();
                b.contains(&v)
            })
        })
    }

    /// Number of classes of nonzero paths from `a` to `b` under equality in the algebra.
    pub fn nonzero_path_classes(&self, a: VertexId, b: VertexId) -> usize {
        let Some(blk) = self.block(a, b) else {
            return 0;
        };
        let mut reps: Vec<&Path> = Vec::new();
        for p in &blk.basis {
            let e = blk.unit(p);
            if blk.contains(&e) {
                continue;
            }
            let known = reps.iter().any(|r| {
                // equal up to a nonzero scalar
                let mut v = e.clone();
                let w = blk.unit(r);
                let mut red = w.clone();
                blk.reduce(&mut red);
                let mut rp = v.clone();
                blk.reduce(&mut rp);
                let Some(k) = rp.iter().position(|x| !x.is_zero()) else {
                    return false;
                };
                if red[k].is_zero() {
                    return false;
                }
                let scale = &rp[k] / &red[k];
                for (x, y) in v.iter_mut().zip(&w) {
                    *x -= &scale * y;
                }
                blk.contains(&v)
            });
            if !known {
                reps.push(p);
            }
        }
        reps.len()
    }

    /// Right and left multiplication by arrows maps every relation subspace into
    /// the relation subspace of the target pair.
    pub fn is_ideal_closed(&self) -> bool {
        let q = &self.quiver;
        for (&(a, b), blk) in &self.blocks {
            for row in &blk.rows {
                for arr in q.arrows_from(b) {
                    let tgt = &self.blocks[&(a, q.target(arr))];
                    let mut v = vec![BigRational::zero(); tgt.basis.len()];
                    for (p, c) in blk.basis.iter().zip(row) {
                        if !c.is_zero() {
                            let w = p.compose(&Path::arrow(q, arr)).expect("composable");
                            v[tgt.index[&w]] += c;
                        }
                    }
                    if !tgt.contains(&v) {
                        return false;
                    }
                }
                for arr in q.arrows_to(a) {
                    let tgt = &self.blocks[&(q.source(arr), b)];
                    let mut v = vec![BigRational::zero(); tgt.basis.len()];
                    for (p, c) in blk.basis.iter().zip(row) {
                        if !c.is_zero() {
                            let w = Path::arrow(q, arr).compose(p).expect("composable");
                            v[tgt.index[&w]] += c;
                        }
                    }
                    if !tgt.contains(&v) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Largest absolute numerator or denominator in the echelon rows; a sanity
    /// probe for coefficient growth.
    pub fn max_coefficient_bits(&self) -> u64 {
        self.blocks
            .values()
            .flat_map(|b| b.rows.iter().flatten())
            .map(|x| x.numer().abs().bits().max(x.denom().bits()))
            .max()
            .unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quiver(arrows: &[(&str, &str, &str)]) -> Quiver {
        Quiver::from_arrows(
            Vec::<String>::new(),
            arrows
                .iter()
                .map(|(n, s, t)| (n.to_string(), s.to_string(), t.to_string())),
        )
        .unwrap()
    }

    fn square() -> Quiver {
        quiver(&[("a", "0", "x"), ("b", "x", "1"), ("c", "0", "y"), ("d", "y", "1")])
    }

    fn corners(q: &Quiver) -> (VertexId, VertexId) {
        (q.vertex_id("0").unwrap(), q.vertex_id("1").unwrap())
    }

    #[test]
    fn hereditary_a3_has_no_relations() {
        let q = quiver(&[("a", "1", "2"), ("b", "2", "3")]);
        let ps = BoundAlgebra::hereditary(q.clone()).unwrap().path_space().unwrap();
        assert!(ps.is_hereditary());
        for a in q.vertices() {
            for b in q.vertices() {
                assert!(ps.dimension(a, b) <= 1);
            }
        }
        assert_eq!(ps.total_dimension(), 6);
    }

    #[test]
    fn commutative_square() {
        let q = square();
        let ab = q.path_by_names(&["a", "b"]).unwrap();
        let cd = q.path_by_names(&["c", "d"]).unwrap();
        let alg = BoundAlgebra::new(q.clone(), vec![], vec![(ab.clone(), cd.clone())]).unwrap();
        let ps = alg.path_space().unwrap();
        let (s, t) = corners(&q);
        assert_eq!(ps.dimension(s, t), 1);
        assert!(ps.paths_equal(&ab, &cd).unwrap());
        assert!(!ps.is_zero_path(&ab).unwrap());
        assert!(ps.is_schurian());
        assert!(ps.is_incidence());
        assert!(!ps.is_hereditary());
    }

    #[test]
    fn square_with_zero_path() {
        let q = square();
        let ab = q.path_by_names(&["a", "b"]).unwrap();
        let cd = q.path_by_names(&["c", "d"]).unwrap();
        let alg = BoundAlgebra::new(q.clone(), vec![ab.clone()], vec![]).unwrap();
        let ps = alg.path_space().unwrap();
        let (s, t) = corners(&q);
        assert_eq!(ps.dimension(s, t), 1);
        assert!(ps.is_zero_path(&ab).unwrap());
        assert!(!ps.is_zero_path(&cd).unwrap());
        assert!(!ps.paths_equal(&ab, &cd).unwrap());
        assert!(!ps.is_incidence());
        assert!(ps.is_schurian());
    }

    #[test]
    fn commutation_plus_zero_kills_both_sides() {
        let q = square();
        let ab = q.path_by_names(&["a", "b"]).unwrap();
        let cd = q.path_by_names(&["c", "d"]).unwrap();
        let alg =
            BoundAlgebra::new(q.clone(), vec![cd.clone()], vec![(ab.clone(), cd.clone())]).unwrap();
        let ps = alg.path_space().unwrap();
        assert!(ps.is_zero_path(&ab).unwrap());
        let (s, t) = corners(&q);
        assert_eq!(ps.dimension(s, t), 0);
    }

    #[test]
    fn free_square_is_not_schurian() {
        let q = square();
        let ps = BoundAlgebra::hereditary(q.clone()).unwrap().path_space().unwrap();
        let (s, t) = corners(&q);
        assert_eq!(ps.dimension(s, t), 2);
        assert!(!ps.is_schurian());
        assert!(!ps.is_incidence());
        assert!(!ps.is_path_equal());
    }

    #[test]
    fn triangle_with_bypass_is_not_incidence() {
        let q = quiver(&[("ab", "a", "b"), ("bc", "b", "c"), ("ac", "a", "c")]);
        let alg = BoundAlgebra::hereditary(q).unwrap();
        assert!(!alg.path_space().unwrap().is_incidence());
    }

    #[test]
    fn paths_equal_needs_parallel_paths() {
        let q = square();
        let ps = BoundAlgebra::hereditary(q.clone()).unwrap().path_space().unwrap();
        let a = q.path_by_names(&["a"]).unwrap();
        let c = q.path_by_names(&["c"]).unwrap();
        assert!(matches!(ps.paths_equal(&a, &c), Err(Error::Contract(_))));
    }

    #[test]
    fn path_cap_is_enforced() {
        let q = square();
        let alg = BoundAlgebra::hereditary(q).unwrap();
        assert!(matches!(alg.path_space_with_cap(5), Err(Error::ResourceLimit(_))));
        assert!(alg.path_space_with_cap(11).is_ok());
    }

    #[test]
    fn ideal_is_closed_under_arrows() {
        let q = quiver(&[
            ("a", "0", "x"),
            ("b", "x", "1"),
            ("c", "0", "y"),
            ("d", "y", "1"),
            ("e", "1", "2"),
            ("f", "z", "0"),
        ]);
        let ab = q.path_by_names(&["a", "b"]).unwrap();
        let cd = q.path_by_names(&["c", "d"]).unwrap();
        let de = q.path_by_names(&["d", "e"]).unwrap();
        let alg = BoundAlgebra::new(q, vec![de], vec![(ab, cd)]).unwrap();
        let ps = alg.path_space().unwrap();
        assert!(ps.is_ideal_closed());
        let q = alg.quiver();
        // f·a·b·e = f·c·d·e = 0
        let long = q.path_by_names(&["f", "a", "b", "e"]).unwrap();
        assert!(ps.is_zero_path(&long).unwrap());
        assert_eq!(ps.max_coefficient_bits(), 1);
    }
}
