//! Cutting sets of a trivial extension and the algebras they define.

use std::collections::BTreeSet;
use std::fmt;
use std::thread;

use crate::algebra::BoundAlgebra;
use crate::error::{Error, Result};
use crate::graph_type::{classify_graph, GraphType};
use crate::iso::{find_isomorphism, IsoMode};
use crate::path_space::DEFAULT_PATH_CAP;
use crate::quiver::{ArrowId, Path, Quiver};
use crate::trivext::{trivial_extension_with_cap, TrivExtPresentation};

/// Largest arrow count accepted by [`brute_force_cuts`].
pub const BRUTE_FORCE_MAX_ARROWS: usize = 20;

/// An arrow set meeting every elementary cycle exactly once.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CuttingSet(BTreeSet<ArrowId>);

impl CuttingSet {
    pub fn new(arrows: impl IntoIterator<Item = ArrowId>) -> Self {
        CuttingSet(arrows.into_iter().collect())
    }

    pub fn from_names<S: AsRef<str>>(q: &Quiver, names: &[S]) -> Result<Self> {
        names
            .iter()
            .map(|n| {
                q.arrow_id(n.as_ref())
                    .ok_or_else(|| Error::Contract(format!("unknown arrow {}", n.as_ref())))
            })
            .collect::<Result<BTreeSet<_>>>()
            .map(CuttingSet)
    }

    pub fn arrows(&self) -> &BTreeSet<ArrowId> {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, a: ArrowId) -> bool {
        self.0.contains(&a)
    }

    pub fn meets(&self, p: &Path) -> bool {
        p.arrows().iter().any(|a| self.0.contains(a))
    }

    pub fn names(&self, q: &Quiver) -> Vec<String> {
        self.0.iter().map(|&a| q.arrow_name(a).to_string()).collect()
    }

    /// `{α1, α4}`.
    pub fn display(&self, q: &Quiver) -> String {
        format!("{{{}}}", self.names(q).join(", "))
    }
}

impl Ord for CuttingSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.iter().cmp(other.0.iter()))
    }
}

impl PartialOrd for CuttingSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

pub fn is_cutting_set(t: &TrivExtPresentation, s: &CuttingSet) -> bool {
    t.cycles()
        .iter()
        .all(|c| c.word().iter().filter(|a| s.contains(**a)).count() == 1)
}

/// Cycles as arrow lists, smallest first, each in arrow order.
fn search_cycles(t: &TrivExtPresentation) -> Vec<Vec<ArrowId>> {
    let mut cs: Vec<Vec<ArrowId>> = t
        .cycles()
        .iter()
        .map(|c| c.arrow_set().into_iter().collect())
        .collect();
    cs.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    cs
}

struct Enumerator<'a> {
    cycles: &'a [Vec<ArrowId>],
    // cycle indices through each arrow
    through: Vec<Vec<usize>>,
}

impl<'a> Enumerator<'a> {
    fn new(t: &TrivExtPresentation, cycles: &'a [Vec<ArrowId>]) -> Self {
        let mut through = vec![Vec::new(); t.quiver().arrow_count()];
        for (i, c) in cycles.iter().enumerate() {
            for a in c {
                through[a.0].push(i);
            }
        }
        Enumerator { cycles, through }
    }

    fn can_take(&self, hits: &[usize], a: ArrowId) -> bool {
        self.through[a.0].iter().all(|&c| hits[c] == 0)
    }

    fn take(&self, hits: &mut [usize], a: ArrowId, delta: isize) {
        for &c in &self.through[a.0] {
            hits[c] = (hits[c] as isize + delta) as usize;
        }
    }

    fn run(&self, from: usize, hits: &mut Vec<usize>, chosen: &mut Vec<ArrowId>, out: &mut Vec<CuttingSet>) {
        let Some(i) = (from..self.cycles.len()).find(|&i| hits[i] == 0) else {
            out.push(CuttingSet::new(chosen.iter().copied()));
            return;
        };
        for &a in &self.cycles[i] {
            if self.can_take(hits, a) {
                self.take(hits, a, 1);
                chosen.push(a);
                self.run(i + 1, hits, chosen, out);
                chosen.pop();
                self.take(hits, a, -1);
            }
        }
    }
}

/// All cutting sets by backtracking over cycles ordered by size, in canonical order.
pub fn enumerate_cutting_sets(t: &TrivExtPresentation) -> Vec<CuttingSet> {
    enumerate_cutting_sets_with_workers(t, 1)
}

/// As [`enumerate_cutting_sets`], splitting the choices for the first cycle
/// among up to `workers` threads. The result does not depend on `workers`.
pub fn enumerate_cutting_sets_with_workers(t: &TrivExtPresentation, workers: usize) -> Vec<CuttingSet> {
    let cycles = search_cycles(t);
    let e = Enumerator::new(t, &cycles);
    let mut out = Vec::new();
    if cycles.is_empty() {
        out.push(CuttingSet::new([]));
        return out;
    }
    let branches: Vec<ArrowId> = cycles[0].clone();
    let workers = workers.clamp(1, branches.len());
    let branch = |a: ArrowId| {
        let mut hits = vec![0; cycles.len()];
        let mut local = Vec::new();
        e.take(&mut hits, a, 1);
        e.run(1, &mut hits, &mut vec![a], &mut local);
        local
    };
    if workers == 1 {
        for &a in &branches {
            out.extend(branch(a));
        }
    } else {
        let chunks: Vec<Vec<ArrowId>> = (0..workers)
            .map(|w| branches.iter().skip(w).step_by(workers).copied().collect())
            .collect();
        thread::scope(|s| {
            let handles: Vec<_> = chunks
                .iter()
                .map(|chunk| s.spawn(|| chunk.iter().flat_map(|&a| branch(a)).collect::<Vec<_>>()))
                .collect();
            for h in handles {
                out.extend(h.join().expect("enumeration worker panicked"));
            }
        });
    }
    out.sort();
    out
}

/// Every cutting set by scanning all `2^N` arrow subsets.
pub fn brute_force_cuts(t: &TrivExtPresentation) -> Result<Vec<CuttingSet>> {
    let n = t.quiver().arrow_count();
    if n > BRUTE_FORCE_MAX_ARROWS {
        return Err(Error::ResourceLimit(format!(
            "{n} arrows; the exhaustive scan is limited to {BRUTE_FORCE_MAX_ARROWS}"
        )));
    }
    let masks: Vec<u32> = t
        .cycles()
        .iter()
        .map(|c| c.word().iter().fold(0u32, |m, a| m | (1 << a.0)))
        .collect();
    let mut out: Vec<CuttingSet> = (0u32..(1u32 << n))
        .filter(|s| masks.iter().all(|m| (s & m).count_ones() == 1))
        .map(|s| CuttingSet::new((0..n).filter(|i| s >> i & 1 == 1).map(ArrowId)))
        .collect();
    out.sort();
    Ok(out)
}

/// `KQ_T / ⟨I_T ∪ Σ⟩` as a bound algebra on the remaining arrows.
///
/// Relations that meet `Σ` vanish; a type-3 difference with exactly one side
/// meeting `Σ` leaves the other side as a zero relation. Quotients that are not
/// acyclic, or keep a relation of length one, are unsupported.
pub fn cut(t: &TrivExtPresentation, s: &CuttingSet) -> Result<BoundAlgebra> {
    if !is_cutting_set(t, s) {
        return Err(Error::Contract("not a cutting set".into()));
    }
    debug_assert!(t.rel1().iter().all(|p| s.meets(p)));
    let qt = t.quiver();
    let q = qt.without_arrows(s.arrows());
    if !q.is_acyclic() {
        return Err(Error::Unsupported("quotient quiver has an oriented cycle".into()));
    }
    let tr = |p: &Path| -> Result<Path> {
        if p.len() < 2 {
            return Err(Error::Unsupported(format!(
                "quotient keeps the arrow {} as a relation",
                qt.path_string(p)
            )));
        }
        Ok(q.translate_path(qt, p).expect("path avoids the cut"))
    };
    let mut zeros = Vec::new();
    for p in t.rel2() {
        if !s.meets(p) {
            zeros.push(tr(p)?);
        }
    }
    let mut comms = Vec::new();
    for (a, b) in t.rel3() {
        match (s.meets(a), s.meets(b)) {
            (false, false) => comms.push((tr(a)?, tr(b)?)),
            (true, false) => zeros.push(tr(b)?),
            (false, true) => zeros.push(tr(a)?),
            (true, true) => {}
        }
    }
    BoundAlgebra::new(q, zeros, comms)
}

/// Type-3 pairs meeting `Σ` on exactly one side.
pub fn type3_pairing_violations(t: &TrivExtPresentation, s: &CuttingSet) -> Vec<(Path, Path)> {
    t.rel3()
        .iter()
        .filter(|(a, b)| s.meets(a) != s.meets(b))
        .cloned()
        .collect()
}

/// The acceptance test of the matrix program: every type-2 relation meets `Σ`.
pub fn program_accepts(t: &TrivExtPresentation, s: &CuttingSet) -> bool {
    t.rel2().iter().all(|p| s.meets(p))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DedupMode {
    None,
    Iso,
    #[default]
    IsoOp,
}

impl std::str::FromStr for DedupMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(DedupMode::None),
            "iso" => Ok(DedupMode::Iso),
            "iso-op" => Ok(DedupMode::IsoOp),
            other => Err(Error::Contract(format!("unknown dedup mode {other}"))),
        }
    }
}

impl fmt::Display for DedupMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DedupMode::None => "none",
            DedupMode::Iso => "iso",
            DedupMode::IsoOp => "iso-op",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RoundTrip {
    Holds,
    Fails,
    /// The quotient is not schurian path-equal, so `T(A')` is not defined here.
    NotApplicable,
}

impl fmt::Display for RoundTrip {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RoundTrip::Holds => "true",
            RoundTrip::Fails => "false",
            RoundTrip::NotApplicable => "not-applicable",
        })
    }
}

/// Whether `T(cut(t, s)) ≅ t`.
pub fn roundtrip(t: &TrivExtPresentation, s: &CuttingSet) -> Result<RoundTrip> {
    roundtrip_with_cap(t, s, DEFAULT_PATH_CAP)
}

/// [`roundtrip`] under an explicit path-count cap.
pub fn roundtrip_with_cap(t: &TrivExtPresentation, s: &CuttingSet, cap: usize) -> Result<RoundTrip> {
    let a = match cut(t, s) {
        Ok(a) => a,
        Err(Error::Unsupported(_)) => return Ok(RoundTrip::NotApplicable),
        Err(e) => return Err(e),
    };
    let back = match trivial_extension_with_cap(&a, cap) {
        Ok(b) => b,
        Err(Error::Unsupported(_)) => return Ok(RoundTrip::NotApplicable),
        Err(e) => return Err(e),
    };
    Ok(if back.find_isomorphism(t)?.is_some() {
        RoundTrip::Holds
    } else {
        RoundTrip::Fails
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Flags {
    pub incidence: bool,
    pub hereditary: bool,
    pub gentle: bool,
    pub schurian: bool,
    pub connected: bool,
}

impl Flags {
    pub fn of(a: &BoundAlgebra, cap: usize) -> Result<Flags> {
        let ps = a.path_space_with_cap(cap)?;
        Ok(Flags {
            incidence: ps.is_incidence(),
            hereditary: ps.is_hereditary(),
            gentle: a.is_gentle(),
            schurian: ps.is_schurian(),
            connected: a.quiver().is_connected(),
        })
    }
}

#[derive(Clone, Debug)]
pub struct CutReport {
    pub sigma: CuttingSet,
    pub quotient: BoundAlgebra,
    pub flags: Flags,
    pub graph_type: GraphType,
    /// Class index after deduplication, counted from 0 in report order.
    pub iso_class: usize,
    /// Name of the first reference algebra isomorphic to the quotient, with
    /// ` (opposite)` appended when only the opposite matches.
    pub matches: Option<String>,
    pub roundtrip: Option<RoundTrip>,
}

/// A cutting set where the matrix program's acceptance test and the incidence
/// test disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divergence {
    pub sigma: CuttingSet,
    pub program_accepts: bool,
    pub incidence: bool,
}

#[derive(Clone, Debug)]
pub struct CutOptions {
    pub include_hereditary: bool,
    pub dedup: DedupMode,
    pub workers: usize,
    pub path_cap: usize,
    pub roundtrip: bool,
}

impl Default for CutOptions {
    fn default() -> Self {
        CutOptions {
            include_hereditary: false,
            dedup: DedupMode::IsoOp,
            workers: 1,
            path_cap: DEFAULT_PATH_CAP,
            roundtrip: false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CutAnalysis {
    pub cutting_sets: Vec<CuttingSet>,
    /// Every incidence-defining cutting set, hereditary ones included.
    pub incidence_sets: Vec<CuttingSet>,
    /// Reports kept under the options, in canonical cutting-set order.
    pub reports: Vec<CutReport>,
    pub class_count: usize,
    pub divergences: Vec<Divergence>,
}

impl CutAnalysis {
    /// The first report of each isomorphism class.
    pub fn representatives(&self) -> Vec<&CutReport> {
        let mut seen = BTreeSet::new();
        self.reports.iter().filter(|r| seen.insert(r.iso_class)).collect()
    }
}

/// Enumerates cutting sets, keeps those defining incidence algebras, and
/// classifies and deduplicates them.
pub fn incidence_cuts(
    t: &TrivExtPresentation,
    opts: &CutOptions,
    references: &[(String, BoundAlgebra)],
) -> Result<CutAnalysis> {
    let cutting_sets = enumerate_cutting_sets_with_workers(t, opts.workers);
    let mut incidence_sets = Vec::new();
    let mut divergences = Vec::new();
    let mut kept: Vec<(CuttingSet, BoundAlgebra, Flags)> = Vec::new();
    for s in &cutting_sets {
        let quotient = match cut(t, s) {
            Ok(a) => Some(a),
            Err(Error::Unsupported(_)) => None,
            Err(e) => return Err(e),
        };
        let flags = match &quotient {
            Some(a) => Some(Flags::of(a, opts.path_cap)?),
            None => None,
        };
        let incidence = flags.is_some_and(|f| f.incidence);
        let accepted = program_accepts(t, s);
        if accepted != incidence {
            divergences.push(Divergence {
                sigma: s.clone(),
                program_accepts: accepted,
                incidence,
            });
        }
        if !incidence {
            continue;
        }
        incidence_sets.push(s.clone());
        let (a, f) = (quotient.expect("incidence"), flags.expect("incidence"));
        if f.hereditary && !opts.include_hereditary {
            continue;
        }
        kept.push((s.clone(), a, f));
    }

    let mut reps: Vec<BoundAlgebra> = Vec::new();
    let mut reports = Vec::with_capacity(kept.len());
    for (sigma, quotient, flags) in kept {
        let mut class = None;
        if opts.dedup != DedupMode::None {
            for (i, r) in reps.iter().enumerate() {
                if same_class(&quotient, r, opts.dedup)? {
                    class = Some(i);
                    break;
                }
            }
        }
        let iso_class = match class {
            Some(i) => i,
            None => {
                reps.push(quotient.clone());
                reps.len() - 1
            }
        };
        let matches = match_reference(&quotient, references)?;
        let rt = if opts.roundtrip {
            Some(roundtrip_with_cap(t, &sigma, opts.path_cap)?)
        } else {
            None
        };
        reports.push(CutReport {
            graph_type: classify_graph(quotient.quiver()),
            sigma,
            quotient,
            flags,
            iso_class,
            matches,
            roundtrip: rt,
        });
    }
    Ok(CutAnalysis {
        cutting_sets,
        incidence_sets,
        reports,
        class_count: reps.len(),
        divergences,
    })
}

fn same_class(x: &BoundAlgebra, y: &BoundAlgebra, mode: DedupMode) -> Result<bool> {
    if find_isomorphism(x, y, IsoMode::Ideal)?.is_some() {
        return Ok(true);
    }
    Ok(mode == DedupMode::IsoOp && find_isomorphism(x, &y.opposite(), IsoMode::Ideal)?.is_some())
}

fn match_reference(a: &BoundAlgebra, references: &[(String, BoundAlgebra)]) -> Result<Option<String>> {
    for (name, r) in references {
        if find_isomorphism(a, r, IsoMode::Ideal)?.is_some() {
            return Ok(Some(name.clone()));
        }
    }
    for (name, r) in references {
        if find_isomorphism(a, &r.opposite(), IsoMode::Ideal)?.is_some() {
            return Ok(Some(format!("{name} (opposite)")));
        }
    }
    Ok(None)
}
