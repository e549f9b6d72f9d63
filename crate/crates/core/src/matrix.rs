//! The 0/1 arrow-membership matrix of type-2 relations and elementary cycles,
//! and the arrow sets it accepts.
//!
//! [`solve`] returns every arrow set that meets each relation column at least
//! once and each cycle column exactly once. [`heuristic`] replays the search
//! of the original web program step by step, including its early stops; it
//! is kept as a diagnostic and is not authoritative.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::trivext::TrivExtPresentation;

pub const MAX_ARROWS: usize = 29;
pub const MAX_CYCLES: usize = 9;
pub const MAX_RELATIONS: usize = 49;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixInstance {
    n_rels: usize,
    n_cycles: usize,
    /// `membership[i][j]`: arrow `i` lies in relation `j` (`j < n_rels`) or in
    /// cycle `j - n_rels`.
    membership: Vec<Vec<bool>>,
    labels: Vec<String>,
}

impl MatrixInstance {
    pub fn new(n_rels: usize, n_cycles: usize, membership: Vec<Vec<bool>>) -> Result<Self> {
        let labels = (1..=membership.len()).map(|i| format!("α{i}")).collect();
        Self::with_labels(n_rels, n_cycles, membership, labels)
    }

    pub fn with_labels(
        n_rels: usize,
        n_cycles: usize,
        membership: Vec<Vec<bool>>,
        labels: Vec<String>,
    ) -> Result<Self> {
        let n = membership.len();
        if n == 0 || n > MAX_ARROWS || n_cycles == 0 || n_cycles > MAX_CYCLES || n_rels > MAX_RELATIONS {
            return Err(Error::invalid(
                "matrix",
                format!(
                    "Invalid information! ({n} arrows, {n_cycles} cycles, {n_rels} relations; \
                     need 1..={MAX_ARROWS} arrows, 1..={MAX_CYCLES} cycles, at most {MAX_RELATIONS} relations)"
                ),
            ));
        }
        if labels.len() != n {
            return Err(Error::invalid("matrix", "one label per arrow row"));
        }
        for (i, row) in membership.iter().enumerate() {
            if row.len() != n_rels + n_cycles {
                return Err(Error::invalid(
                    "matrix",
                    format!("row {} has {} entries, expected {}", i + 1, row.len(), n_rels + n_cycles),
                ));
            }
        }
        for c in 0..n_cycles {
            let ones = membership.iter().filter(|r| r[n_rels + c]).count();
            if ones < 2 {
                return Err(Error::invalid(
                    "matrix",
                    format!("cycle column c{} has {ones} arrows; cycles have length ≥ 2", c + 1),
                ));
            }
        }
        Ok(MatrixInstance {
            n_rels,
            n_cycles,
            membership,
            labels,
        })
    }

    pub fn n_rels(&self) -> usize {
        self.n_rels
    }

    pub fn n_cycles(&self) -> usize {
        self.n_cycles
    }

    pub fn n_arrows(&self) -> usize {
        self.membership.len()
    }

    pub fn membership(&self) -> &[Vec<bool>] {
        &self.membership
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn in_relation(&self, arrow: usize, rel: usize) -> bool {
        self.membership[arrow][rel]
    }

    pub fn in_cycle(&self, arrow: usize, cycle: usize) -> bool {
        self.membership[arrow][self.n_rels + cycle]
    }

    /// Whether `set` meets every relation and hits every cycle exactly once.
    pub fn accepts(&self, set: &BTreeSet<usize>) -> bool {
        (0..self.n_rels).all(|r| set.iter().any(|&a| self.in_relation(a, r)))
            && (0..self.n_cycles).all(|c| set.iter().filter(|&&a| self.in_cycle(a, c)).count() == 1)
    }

    pub fn describe(&self, set: &BTreeSet<usize>) -> String {
        let names: Vec<&str> = set.iter().map(|&a| self.labels[a].as_str()).collect();
        format!("{{{}}}", names.join(", "))
    }
}

/// Orders arrow sets by size, then lexicographically.
fn canonical(mut sets: Vec<BTreeSet<usize>>) -> Vec<BTreeSet<usize>> {
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.iter().cmp(b.iter())));
    sets
}

/// All accepted arrow sets in canonical order.
///
/// Cycle columns are covered by backtracking; arrows in no cycle are then
/// added in every combination.
pub fn solve(m: &MatrixInstance) -> Vec<BTreeSet<usize>> {
    let n = m.n_arrows();
    let cycle_arrows: Vec<Vec<usize>> = (0..m.n_cycles)
        .map(|c| (0..n).filter(|&a| m.in_cycle(a, c)).collect())
        .collect();
    let free: Vec<usize> = (0..n)
        .filter(|&a| (0..m.n_cycles).all(|c| !m.in_cycle(a, c)))
        .collect();
    let mut order: Vec<usize> = (0..m.n_cycles).collect();
    order.sort_by_key(|&c| cycle_arrows[c].len());

    fn cover(
        m: &MatrixInstance,
        cycle_arrows: &[Vec<usize>],
        order: &[usize],
        hits: &mut Vec<usize>,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let Some(&c) = order.iter().find(|&&c| hits[c] == 0) else {
            out.push(chosen.clone());
            return;
        };
        for &a in &cycle_arrows[c] {
            let touched: Vec<usize> = (0..m.n_cycles).filter(|&d| m.in_cycle(a, d)).collect();
            if touched.iter().all(|&d| hits[d] == 0) {
                touched.iter().for_each(|&d| hits[d] += 1);
                chosen.push(a);
                cover(m, cycle_arrows, order, hits, chosen, out);
                chosen.pop();
                touched.iter().for_each(|&d| hits[d] -= 1);
            }
        }
    }

    let mut covers = Vec::new();
    cover(m, &cycle_arrows, &order, &mut vec![0; m.n_cycles], &mut Vec::new(), &mut covers);
    let mut out = Vec::new();
    for base in covers {
        for mask in 0u64..(1u64 << free.len()) {
            let mut set: BTreeSet<usize> = base.iter().copied().collect();
            set.extend((0..free.len()).filter(|i| mask >> i & 1 == 1).map(|i| free[i]));
            if m.accepts(&set) {
                out.push(set);
            }
        }
    }
    canonical(out)
}

/// Exhaustive `2^N` scan of the same predicate; an oracle for [`solve`].
pub fn solve_by_scan(m: &MatrixInstance) -> Vec<BTreeSet<usize>> {
    let n = m.n_arrows();
    let out = (0u64..(1u64 << n))
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect::<BTreeSet<usize>>())
        .filter(|s| m.accepts(s))
        .collect();
    canonical(out)
}

/// The matrix of a presentation: rows are the arrows in the support of type-2
/// relations first, then the rest, each group in label order; columns are the
/// type-2 relations followed by the cycles.
pub fn encode(t: &TrivExtPresentation) -> Result<MatrixInstance> {
    let q = t.quiver();
    let support: BTreeSet<_> = t.rel2().iter().flat_map(|p| p.arrows().iter().copied()).collect();
    let mut rows: Vec<_> = support.iter().copied().collect();
    rows.extend(q.arrow_ids().filter(|a| !support.contains(a)));
    let membership = rows
        .iter()
        .map(|&a| {
            t.rel2()
                .iter()
                .map(|p| p.contains(a))
                .chain(t.cycles().iter().map(|c| c.contains(a)))
                .collect()
        })
        .collect();
    let labels = rows.iter().map(|&a| q.arrow_name(a).to_string()).collect();
    MatrixInstance::with_labels(t.rel2().len(), t.cycles().len(), membership, labels)
}

/// Everything the original program would have shown for one instance.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HeuristicRun {
    /// Each `Answer` alert, as row indices in the order the program listed them.
    /// An index may repeat when the reference arrow lies in no cycle.
    pub answers: Vec<Vec<usize>>,
    /// Other alerts.
    pub messages: Vec<String>,
    /// Set when the program would have stopped with a runtime exception.
    pub aborted: Option<String>,
}

impl HeuristicRun {
    /// Answers as sets, duplicates within an answer collapsed.
    pub fn answer_sets(&self) -> Vec<BTreeSet<usize>> {
        self.answers.iter().map(|a| a.iter().copied().collect()).collect()
    }
}

/// Replays the reference-arrow search of the original program, bound checks
/// included.
pub fn heuristic(m: &MatrixInstance) -> HeuristicRun {
    let (rels, cics, fls) = (m.n_rels, m.n_cycles, m.n_arrows());
    let mut run = HeuristicRun::default();
    if !(fls > 0 && fls < 30 && cics > 0 && cics < 10 && rels > 0 && rels < 50) {
        run.messages.push("Invalid information!".into());
        return run;
    }
    // a row is its 0/1 entries followed by its number of cycles
    let et_rows: Vec<Vec<i64>> = m
        .membership
        .iter()
        .map(|r| {
            let mut v: Vec<i64> = r.iter().map(|&b| b as i64).collect();
            v.push(r[rels..].iter().filter(|&&b| b).count() as i64);
            v
        })
        .collect();
    let mut et: Vec<Option<Vec<i64>>> = et_rows.into_iter().map(Some).collect();
    let mut tot: Vec<(usize, i64)> = (0..fls)
        .map(|i| (i, (0..rels).filter(|&j| m.membership[i][j]).count() as i64))
        .collect();
    // stable, descending by relation count
    tot.sort_by(|a, b| b.1.cmp(&a.1));

    // `mat` rows mirror `et`; `None` is 'fora'. The inherited enumerable
    // `add` property of every array shows up as one extra, phantom entry.
    let mut mat: Vec<Option<()>> = et.iter().map(|r| r.as_ref().map(|_| ())).collect();
    let mut phantom_live = true;

    let mut r = tot[0].0;
    let row = |et: &[Option<Vec<i64>>], i: usize| et[i].clone().expect("reference row is live");
    let mut corte = cics as i64 - row(&et, r)[rels + cics];
    let mut soma = row(&et, r);

    while cics as i64 * tot[0].1 >= rels as i64 {
        let refrow = row(&et, r);
        for j in rels..rels + cics {
            if refrow[j] != 0 {
                for i in 0..fls {
                    if mat[i].is_some() && et[i].as_ref().is_some_and(|v| v[j] != 0) {
                        mat[i] = None;
                    }
                }
                phantom_live = false;
            }
        }
        let is_solution = |s: &[i64]| {
            (0..rels).all(|i| s.get(i).is_none_or(|&v| v != 0))
                && (rels..rels + cics).all(|i| s.get(i) == Some(&1))
        };
        if corte == 0 {
            if is_solution(&soma) {
                run.answers.push(vec![r]);
            } else {
                run.messages.push("Some typing error".into());
            }
        } else {
            // None stands for the phantom 'alfaNaN'
            let mut x: Vec<Option<usize>> = (0..fls).filter(|&i| mat[i].is_some()).map(Some).collect();
            if phantom_live {
                x.push(None);
            }
            while corte > 0 {
                for combo in combinations(x.len(), corte as usize) {
                    let mut broken = false;
                    for &k in &combo {
                        if broken {
                            run.aborted = Some("Array lengths do not match.".into());
                            return run;
                        }
                        match x[k].and_then(|i| et[i].clone()) {
                            Some(v) if v.len() == soma.len() => {
                                soma = soma.iter().zip(&v).map(|(a, b)| a + b).collect();
                            }
                            Some(_) => {
                                run.aborted = Some("Array lengths do not match.".into());
                                return run;
                            }
                            None => {
                                soma = Vec::new();
                                broken = true;
                            }
                        }
                    }
                    if is_solution(&soma) {
                        let mut sol = vec![r];
                        sol.extend(combo.iter().map(|&k| x[k].expect("phantom never solves")));
                        run.answers.push(sol);
                    }
                    soma = row(&et, r);
                }
                corte -= 1;
            }
        }
        et[r] = None;
        mat = et.iter().map(|v| v.as_ref().map(|_| ())).collect();
        phantom_live = true;
        tot.remove(0);
        let Some(&(next, _)) = tot.first() else {
            run.aborted = Some("TypeError: TotRe2[0] is undefined".into());
            return run;
        };
        r = next;
        corte = cics as i64 - row(&et, r)[rels + cics];
        soma = row(&et, r);
        if tot.len() == 1 {
            break;
        }
    }
    run
}

/// Index combinations of size `k` from `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, right: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if right == 0 {
            out.push(cur.clone());
            return;
        }
        for i in left..=n.saturating_sub(right) {
            if n < right {
                break;
            }
            cur.push(i);
            rec(i + 1, right - 1, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, k, n, &mut Vec::new(), &mut out);
    }
    out
}
