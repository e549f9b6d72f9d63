//! Finite posets, their Hasse quivers and incidence algebras.

use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::BoundAlgebra;
use crate::error::{Error, Result};
use crate::names::natural_cmp;
use crate::quiver::{Path, Quiver};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    elements: Vec<String>,
    // leq[i][j] ⇔ elements[i] ⪯ elements[j]
    leq: Vec<Vec<bool>>,
}

impl Poset {
    /// Checks that `leq` is reflexive, antisymmetric and transitive on `elements`.
    pub fn new<E, R>(elements: E, leq: R) -> Result<Self>
    where
        E: IntoIterator,
        E::Item: Into<String>,
        R: IntoIterator<Item = (String, String)>,
    {
        let (elements, leq) = Self::matrix(elements, leq)?;
        let n = elements.len();
        for i in 0..n {
            if !leq[i][i] {
                return Err(Error::invalid(
                    "poset",
                    format!("not reflexive at {}", elements[i]),
                ));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(Error::invalid(
                        "poset",
                        format!("not antisymmetric: {} and {}", elements[i], elements[j]),
                    ));
                }
                for k in 0..n {
                    if leq[i][j] && leq[j][k] && !leq[i][k] {
                        return Err(Error::invalid(
                            "poset",
                            format!(
                                "not transitive: {} ⪯ {} ⪯ {}",
                                elements[i], elements[j], elements[k]
                            ),
                        ));
                    }
                }
            }
        }
        Ok(Poset { elements, leq })
    }

    /// The reflexive-transitive closure of `relation`; fails only when the
    /// closure is not antisymmetric.
    pub fn from_generating_relation<E, R>(elements: E, relation: R) -> Result<Self>
    where
        E: IntoIterator,
        E::Item: Into<String>,
        R: IntoIterator<Item = (String, String)>,
    {
        let (elements, mut leq) = Self::matrix(elements, relation)?;
        let n = elements.len();
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        let pairs: Vec<(String, String)> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| leq[i][j])
            .map(|(i, j)| (elements[i].clone(), elements[j].clone()))
            .collect();
        Poset::new(elements, pairs)
    }

    /// The reachability order of an acyclic quiver.
    pub fn from_quiver(q: &Quiver) -> Result<Self> {
        q.require_acyclic()?;
        let rel = q.arrows().iter().map(|a| {
            (
                q.vertex_name(a.source).to_string(),
                q.vertex_name(a.target).to_string(),
            )
        });
        Poset::from_generating_relation(q.vertex_names().to_vec(), rel)
    }

    fn matrix<E, R>(elements: E, leq: R) -> Result<(Vec<String>, Vec<Vec<bool>>)>
    where
        E: IntoIterator,
        E::Item: Into<String>,
        R: IntoIterator<Item = (String, String)>,
    {
        let mut elements: Vec<String> = elements.into_iter().map(Into::into).collect();
        elements.sort_by(|a, b| natural_cmp(a, b));
        if elements.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid("poset", "duplicate element"));
        }
        let index: BTreeMap<&str, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.as_str(), i))
            .collect();
        let n = elements.len();
        let mut m = vec![vec![false; n]; n];
        for (x, y) in leq {
            let look = |e: &str| {
                index
                    .get(e)
                    .copied()
                    .ok_or_else(|| Error::invalid("poset", format!("unknown element {e}")))
            };
            m[look(&x)?][look(&y)?] = true;
        }
        Ok((elements, m))
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    fn index(&self, x: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == x)
    }

    pub fn le(&self, x: &str, y: &str) -> bool {
        matches!((self.index(x), self.index(y)), (Some(i), Some(j)) if self.leq[i][j])
    }

    /// All pairs `x ⪯ y`, reflexive ones included.
    pub fn relation(&self) -> Vec<(String, String)> {
        let n = self.len();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.leq[i][j])
            .map(|(i, j)| (self.elements[i].clone(), self.elements[j].clone()))
            .collect()
    }

    /// The same elements with the order reversed.
    pub fn dual(&self) -> Poset {
        let n = self.len();
        Poset {
            elements: self.elements.clone(),
            leq: (0..n).map(|i| (0..n).map(|j| self.leq[j][i]).collect()).collect(),
        }
    }

    /// Pairs `x ≺ y` with nothing strictly between.
    pub fn covers(&self) -> Vec<(String, String)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j || !self.leq[i][j] {
                    continue;
                }
                let between = (0..n).any(|k| k != i && k != j && self.leq[i][k] && self.leq[k][j]);
                if !between {
                    out.push((self.elements[i].clone(), self.elements[j].clone()));
                }
            }
        }
        out
    }
}

/// One arrow `x → y` per cover `x ≺ y`, named `α1, α2, …` in cover order.
pub fn hasse(p: &Poset) -> Quiver {
    let arrows = p
        .covers()
        .into_iter()
        .enumerate()
        .map(|(k, (x, y))| (format!("α{}", k + 1), x, y));
    Quiver::new(p.elements().to_vec(), arrows).expect("covers of a valid poset")
}

/// The incidence algebra `KΔ` as the Hasse quiver bound by commutativity
/// relations.
///
/// Intervals are processed by increasing height; for each pair only the
/// relations not already forced by shorter intervals are added, so the
/// generating set is small but still spans all differences of parallel paths.
pub fn incidence_presentation(p: &Poset) -> BoundAlgebra {
    let q = hasse(p);
    let mut pairs: Vec<(usize, Vec<Path>)> = Vec::new();
    for a in q.vertices() {
        for b in q.vertices() {
            if a == b {
                continue;
            }
            let ps = q.parallel_paths(a, b).expect("Hasse quiver is acyclic");
            if ps.len() > 1 {
                let height = ps.iter().map(Path::len).max().unwrap_or(0);
                pairs.push((height, ps));
            }
        }
    }
    pairs.sort_by_key(|(h, _)| *h);
    let mut comms = Vec::new();
    for (_, ps) in pairs {
        // shorter intervals are already fully commutative, so paths sharing
        // a first or a last arrow are equal
        let mut class: Vec<usize> = (0..ps.len()).collect();
        fn root(c: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while c[r] != r {
                r = c[r];
            }
            c[x] = r;
            r
        }
        for i in 0..ps.len() {
            for j in i + 1..ps.len() {
                let (x, y) = (ps[i].arrows(), ps[j].arrows());
                if x[0] == y[0] || x[x.len() - 1] == y[y.len() - 1] {
                    let (ri, rj) = (root(&mut class, i), root(&mut class, j));
                    class[ri.max(rj)] = ri.min(rj);
                }
            }
        }
        let reps: BTreeSet<usize> = (0..ps.len()).map(|i| root(&mut class, i)).collect();
        let reps: Vec<usize> = reps.into_iter().collect();
        for &r in &reps[1..] {
            comms.push((ps[reps[0]].clone(), ps[r].clone()));
        }
    }
    BoundAlgebra::new(q, Vec::new(), comms).expect("Hasse quiver relations are admissible")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(v: &[(&str, &str)]) -> Vec<(String, String)> {
        v.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
    }

    fn diamond() -> Poset {
        Poset::from_generating_relation(
            ["0", "x", "y", "1"],
            pairs(&[("0", "x"), ("0", "y"), ("x", "1"), ("y", "1")]),
        )
        .unwrap()
    }

    #[test]
    fn validation() {
        let bad = Poset::new(["a", "b"], pairs(&[("a", "b")]));
        assert!(matches!(bad, Err(Error::Invalid { .. })));
        let cyc = Poset::from_generating_relation(["a", "b"], pairs(&[("a", "b"), ("b", "a")]));
        assert!(cyc.is_err());
        let intrans = Poset::new(
            ["a", "b", "c"],
            pairs(&[("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "c")]),
        );
        assert!(intrans.is_err());
    }

    #[test]
    fn chain_gives_a3() {
        let p = Poset::from_generating_relation(["1", "2", "3"], pairs(&[("1", "2"), ("2", "3")]))
            .unwrap();
        let q = hasse(&p);
        assert_eq!(q.arrow_count(), 2);
        assert!(p.le("1", "3"));
        assert!(incidence_presentation(&p).commutations().is_empty());
    }

    #[test]
    fn diamond_gives_commutative_square() {
        let p = diamond();
        let a = incidence_presentation(&p);
        assert_eq!(a.quiver().arrow_count(), 4);
        assert_eq!(a.commutations().len(), 1);
        let ps = a.path_space().unwrap();
        assert!(ps.is_incidence());
        assert!(!ps.is_hereditary());
    }

    #[test]
    fn antichain_has_no_arrows() {
        let p = Poset::from_generating_relation(["a", "b", "c"], Vec::new()).unwrap();
        assert_eq!(hasse(&p).arrow_count(), 0);
        assert_eq!(hasse(&p).vertex_count(), 3);
    }

    #[test]
    fn reachability_roundtrip() {
        let p = diamond();
        assert_eq!(Poset::from_quiver(&hasse(&p)).unwrap(), p);
    }

    #[test]
    fn three_paths_need_two_relations() {
        let p = Poset::from_generating_relation(
            ["t", "m1", "m2", "m3", "b"],
            pairs(&[
                ("t", "m1"),
                ("t", "m2"),
                ("t", "m3"),
                ("m1", "b"),
                ("m2", "b"),
                ("m3", "b"),
            ]),
        )
        .unwrap();
        let a = incidence_presentation(&p);
        assert_eq!(a.commutations().len(), 2);
        assert!(a.path_space().unwrap().is_incidence());
    }
}
