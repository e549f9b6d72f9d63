//! Bound quiver algebras `KQ/I` given by an acyclic quiver and relation generators.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::path_space::{PathSpace, DEFAULT_PATH_CAP};
use crate::quiver::{ArrowId, Path, Quiver};

/// `KQ/I` with `I` generated by zero-paths and differences of parallel paths.
///
/// Generators are normalized on construction: sorted, deduplicated, and each
/// commutativity pair stored with its smaller side first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundAlgebra {
    quiver: Quiver,
    zero_paths: Vec<Path>,
    commutations: Vec<(Path, Path)>,
}

impl BoundAlgebra {
    pub fn new(
        quiver: Quiver,
        zero_paths: Vec<Path>,
        commutations: Vec<(Path, Path)>,
    ) -> Result<Self> {
        quiver.require_simple()?;
        quiver.require_acyclic()?;
        for p in &zero_paths {
            if p.len() < 2 {
                return Err(Error::invalid(
                    "relation",
                    format!(
                        "zero-path {} has length < 2 (ideal would not be admissible)",
                        quiver.path_string(p)
                    ),
                ));
            }
        }
        let mut pairs = BTreeSet::new();
        for (p, q) in commutations {
            if !p.is_parallel_to(&q) {
                return Err(Error::invalid(
                    "relation",
                    format!(
                        "commutativity sides {} and {} are not parallel",
                        quiver.path_string(&p),
                        quiver.path_string(&q)
                    ),
                ));
            }
            if p == q {
                return Err(Error::invalid("relation", "commutativity pair with equal sides"));
            }
            if p.len() < 2 || q.len() < 2 {
                return Err(Error::invalid(
                    "relation",
                    "commutativity side of length < 2 (ideal would not be admissible)",
                ));
            }
            pairs.insert(if p <= q { (p, q) } else { (q, p) });
        }
        let zeros: BTreeSet<Path> = zero_paths.into_iter().collect();
        Ok(BoundAlgebra {
            quiver,
            zero_paths: zeros.into_iter().collect(),
            commutations: pairs.into_iter().collect(),
        })
    }

    /// The path algebra `KQ` itself.
    pub fn hereditary(quiver: Quiver) -> Result<Self> {
        BoundAlgebra::new(quiver, Vec::new(), Vec::new())
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn zero_paths(&self) -> &[Path] {
        &self.zero_paths
    }

    pub fn commutations(&self) -> &[(Path, Path)] {
        &self.commutations
    }

    pub fn generator_count(&self) -> usize {
        self.zero_paths.len() + self.commutations.len()
    }

    /// Arrows reversed, relations read backwards.
    pub fn opposite(&self) -> BoundAlgebra {
        let quiver = self.quiver.opposite();
        let zeros = self.zero_paths.iter().map(Path::reversed).collect();
        let comms = self
            .commutations
            .iter()
            .map(|(p, q)| (p.reversed(), q.reversed()))
            .collect();
        BoundAlgebra::new(quiver, zeros, comms).expect("opposite of a valid algebra")
    }

    pub fn path_space(&self) -> Result<PathSpace> {
        PathSpace::build(self, DEFAULT_PATH_CAP)
    }

    pub fn path_space_with_cap(&self, cap: usize) -> Result<PathSpace> {
        PathSpace::build(self, cap)
    }

    /// The four gentle conditions, checked on this presentation.
    pub fn is_gentle(&self) -> bool {
        let q = &self.quiver;
        if !self.commutations.is_empty() || self.zero_paths.iter().any(|p| p.len() != 2) {
            return false;
        }
        if q.vertices().any(|v| q.in_degree(v) > 2 || q.out_degree(v) > 2) {
            return false;
        }
        let killed: BTreeSet<(ArrowId, ArrowId)> = self
            .zero_paths
            .iter()
            .map(|p| (p.arrows()[0], p.arrows()[1]))
            .collect();
        for a in q.arrow_ids() {
            let after: Vec<ArrowId> = q.arrows_from(q.target(a)).collect();
            let before: Vec<ArrowId> = q.arrows_to(q.source(a)).collect();
            let after_killed = after.iter().filter(|&&b| killed.contains(&(a, b))).count();
            let before_killed = before.iter().filter(|&&c| killed.contains(&(c, a))).count();
            if after.len() - after_killed > 1 || before.len() - before_killed > 1 {
                return false;
            }
            if after_killed > 1 || before_killed > 1 {
                return false;
            }
        }
        true
    }
}
