//! Parameterised trivial-extension presentations.
//!
//! Chains of arrows are named `stem1 … stemk`; their interior vertices are
//! named after the arrow that enters them.

use crate::algebra::BoundAlgebra;
use crate::error::{Error, Result};
use crate::quiver::{ArrowId, Quiver};
use crate::trivext::{complete_presentation, trivial_extension, TrivExtPresentation};

#[derive(Default)]
struct Builder {
    arrows: Vec<(String, String, String)>,
}

impl Builder {
    fn arrow(&mut self, name: &str, from: &str, to: &str) -> Vec<String> {
        self.arrows.push((name.into(), from.into(), to.into()));
        vec![name.into()]
    }

    /// `len` arrows from `from` to `to`.
    fn chain(&mut self, stem: &str, from: &str, to: &str, len: usize) -> Vec<String> {
        self.chain_from(stem, 1, from, to, len)
    }

    /// Like `chain`, numbering from `first`.
    fn chain_from(&mut self, stem: &str, first: usize, from: &str, to: &str, len: usize) -> Vec<String> {
        assert!(len >= 1, "chain {stem} needs at least one arrow");
        let mut names = Vec::with_capacity(len);
        let mut at = from.to_string();
        let last = first + len - 1;
        for i in first..=last {
            let name = format!("{stem}{i}");
            let next = if i == last { to.to_string() } else { format!("t{name}") };
            self.arrows.push((name.clone(), at, next.clone()));
            names.push(name);
            at = next;
        }
        names
    }

    fn finish(self, cycles: &[Vec<String>]) -> Result<TrivExtPresentation> {
        let q = Quiver::from_arrows(Vec::<String>::new(), self.arrows)?;
        let words = cycles
            .iter()
            .map(|c| c.iter().map(|n| q.arrow_id(n).expect("declared")).collect())
            .collect();
        Ok(complete_presentation(q, words, None)?.0)
    }
}

fn cat(parts: &[&[String]]) -> Vec<String> {
    parts.iter().flat_map(|p| p.iter().cloned()).collect()
}

/// A trivial extension of a hereditary algebra of type `A_n`.
#[derive(Clone, Debug)]
pub struct AnInstance {
    /// `orientation[i]` is true when the i-th arrow points from `v{i+1}` to `v{i+2}`.
    pub orientation: Vec<bool>,
    pub algebra: BoundAlgebra,
    pub presentation: TrivExtPresentation,
    /// The outermost arrows of `A` at the left and right ends.
    pub left_end: ArrowId,
    pub right_end: ArrowId,
    /// The added arrows closing the cycles through those end arrows.
    pub left_added: ArrowId,
    pub right_added: ArrowId,
}

impl AnInstance {
    pub fn new(orientation: &[bool]) -> Result<AnInstance> {
        if orientation.is_empty() {
            return Err(Error::invalid("A_n orientation", "need at least one arrow"));
        }
        let n = orientation.len() + 1;
        let arrows = orientation.iter().enumerate().map(|(i, &right)| {
            let (a, b) = (format!("v{}", i + 1), format!("v{}", i + 2));
            let (s, t) = if right { (a, b) } else { (b, a) };
            (format!("a{}", i + 1), s, t)
        });
        let q = Quiver::new((1..=n).map(|i| format!("v{i}")), arrows)?;
        let algebra = BoundAlgebra::hereditary(q)?;
        let presentation = trivial_extension(&algebra)?;
        let qt = presentation.quiver();
        let left_end = qt.arrow_id("a1").expect("a1");
        let right_end = qt.arrow_id(&format!("a{}", n - 1)).expect("last arrow");
        let added = |end: ArrowId| {
            let c = presentation.cycles_through(end)[0];
            let w = presentation.cycles()[c].word();
            *w.iter()
                .find(|&&x| algebra.quiver().arrow_id(qt.arrow_name(x)).is_none())
                .expect("every cycle has an added arrow")
        };
        Ok(AnInstance {
            orientation: orientation.to_vec(),
            left_added: added(left_end),
            right_added: added(right_end),
            algebra,
            presentation,
            left_end,
            right_end,
        })
    }

    /// Every orientation of `A_n` with at least two maximal paths.
    pub fn all(n: usize) -> Result<Vec<AnInstance>> {
        let k = n.saturating_sub(1);
        let mut out = Vec::new();
        for mask in 0u64..(1u64 << k) {
            let o: Vec<bool> = (0..k).map(|i| mask >> i & 1 == 1).collect();
            if o.iter().all(|&b| b) || o.iter().all(|&b| !b) {
                continue;
            }
            out.push(AnInstance::new(&o)?);
        }
        Ok(out)
    }

    fn cycle_len(&self, a: ArrowId) -> usize {
        self.presentation.cycles()[self.presentation.cycles_through(a)[0]].len()
    }

    pub fn left_cycle_len(&self) -> usize {
        self.cycle_len(self.left_end)
    }

    pub fn right_cycle_len(&self) -> usize {
        self.cycle_len(self.right_end)
    }

    pub fn has_long_cycle(&self) -> bool {
        self.presentation.cycles().iter().any(|c| c.len() >= 3)
    }

    /// The added arrows, one per cycle.
    pub fn added_arrows(&self) -> Vec<ArrowId> {
        let qt = self.presentation.quiver();
        qt.arrow_ids()
            .filter(|&x| self.algebra.quiver().arrow_id(qt.arrow_name(x)).is_none())
            .collect()
    }
}

/// The D̃ family with a middle path of `k` arrows `β1 … βk` between `α1` and `α2`.
pub fn dn_tilde(k: usize) -> Result<TrivExtPresentation> {
    let mut b = Builder::default();
    let a4 = b.arrow("α4", "tl", "m1");
    let a3 = b.arrow("α3", "bl", "m1");
    let a1 = b.arrow("α1", "m1", "p0");
    let beta = if k == 0 {
        Vec::new()
    } else {
        b.chain("β", "p0", "pk", k)
    };
    let a2 = b.arrow("α2", if k == 0 { "p0" } else { "pk" }, "m4");
    let a5 = b.arrow("α5", "m4", "br");
    let a6 = b.arrow("α6", "m4", "tr");
    let a7 = b.arrow("α7", "tr", "tl");
    let a10 = b.arrow("α10", "tr", "bl");
    let a8 = b.arrow("α8", "br", "bl");
    let a9 = b.arrow("α9", "br", "tl");
    let spine = cat(&[&a1, &beta, &a2]);
    b.finish(&[
        cat(&[&a6, &a10, &a3, &spine]),
        cat(&[&a5, &a8, &a3, &spine]),
        cat(&[&a5, &a9, &a4, &spine]),
        cat(&[&a6, &a7, &a4, &spine]),
    ])
}

/// The hereditary algebra whose trivial extension is [`dn_tilde`]`(k)`.
pub fn dn_tilde_algebra(k: usize) -> Result<BoundAlgebra> {
    let mut b = Builder::default();
    b.arrow("α4", "tl", "m1");
    b.arrow("α3", "bl", "m1");
    b.arrow("α1", "m1", "p0");
    if k > 0 {
        b.chain("β", "p0", "pk", k);
    }
    b.arrow("α2", if k == 0 { "p0" } else { "pk" }, "m4");
    b.arrow("α5", "m4", "br");
    b.arrow("α6", "m4", "tr");
    BoundAlgebra::hereditary(Quiver::from_arrows(Vec::<String>::new(), b.arrows)?)
}

/// Path lengths of the four-cycle configuration through a vertex `h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FourCycleLengths {
    pub lambda: usize,
    pub theta: usize,
    pub mu: usize,
    pub delta: usize,
    pub gamma: usize,
    pub rho: usize,
    pub eta: usize,
    pub sigma: usize,
}

impl FourCycleLengths {
    pub const MINIMAL: FourCycleLengths = FourCycleLengths {
        lambda: 1,
        theta: 1,
        mu: 1,
        delta: 1,
        gamma: 1,
        rho: 1,
        eta: 1,
        sigma: 1,
    };
}

/// Four elementary cycles `αλθμβ′`, `αλδγα′`, `βηρμβ′`, `βησγα′` through `h`.
pub fn four_cycles(l: FourCycleLengths) -> Result<TrivExtPresentation> {
    let mut b = Builder::default();
    let alpha = b.arrow("α", "h", "x");
    let lambda = b.chain("λ", "x", "T", l.lambda);
    let theta = b.chain("θ", "T", "L", l.theta);
    let delta = b.chain("δ", "T", "R", l.delta);
    let mu = b.chain("μ", "L", "P", l.mu);
    let beta_p = b.arrow("β′", "P", "h");
    let gamma = b.chain("γ", "R", "Q", l.gamma);
    let alpha_p = b.arrow("α′", "Q", "h");
    let beta = b.arrow("β", "h", "y");
    let eta = b.chain("η", "y", "B", l.eta);
    let rho = b.chain("ρ", "B", "L", l.rho);
    let sigma = b.chain("σ", "B", "R", l.sigma);
    b.finish(&[
        cat(&[&alpha, &lambda, &theta, &mu, &beta_p]),
        cat(&[&alpha, &lambda, &delta, &gamma, &alpha_p]),
        cat(&[&beta, &eta, &rho, &mu, &beta_p]),
        cat(&[&beta, &eta, &sigma, &gamma, &alpha_p]),
    ])
}

/// Three cycles: `α1…αm λ` and `λ γ1…γn` share the path `λ`, and `θ β′ β`
/// meets the second at a vertex off `λ`.
///
/// Returns the presentation and the arrows of `λ`.
pub fn shared_path_with_pendant(m: usize, n: usize, lambda: usize, theta: usize) -> Result<(TrivExtPresentation, Vec<ArrowId>)> {
    if n < 2 {
        return Err(Error::invalid("pendant configuration", "the γ path needs at least two arrows"));
    }
    let mut b = Builder::default();
    let alpha = b.chain("α", "X", "R", m);
    let lam = b.chain("λ", "R", "X", lambda);
    let g1 = b.arrow("γ1", "X", "Y");
    let tail = b.chain_from("γ", 2, "Y", "R", n - 1);
    let beta = b.arrow("β", "Y", "V");
    let th = b.chain("θ", "V", "W", theta);
    let beta_p = b.arrow("β′", "W", "Y");
    let t = b.finish(&[
        cat(&[&alpha, &lam]),
        cat(&[&lam, &g1, &tail]),
        cat(&[&th, &beta_p, &beta]),
    ])?;
    let ids = lam.iter().map(|x| t.quiver().arrow_id(x).expect("λ")).collect();
    Ok((t, ids))
}
