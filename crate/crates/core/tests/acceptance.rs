//! One PASS/FAIL line per acceptance criterion, each with a pinned time limit.
//!
//! A criterion known to be unattainable as written still prints FAIL; the run
//! only fails when the facts recorded for it stop holding.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use phicut::corpus;
use phicut::cutting::{
    brute_force_cuts, cut, enumerate_cutting_sets, incidence_cuts, program_accepts, roundtrip,
    type3_pairing_violations, CutOptions, CuttingSet, DedupMode, RoundTrip, BRUTE_FORCE_MAX_ARROWS,
};
use phicut::families::{dn_tilde, four_cycles, shared_path_with_pendant, AnInstance, FourCycleLengths};
use phicut::graph_type::GraphType;
use phicut::iso::{find_isomorphism, IsoMode};
use phicut::matrix::{encode, solve};
use phicut::poset::{hasse, incidence_presentation};
use phicut::trivext::{relations_type2, trivial_extension, TrivExtPresentation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

mod common;

type Check = Result<String, String>;

enum Verdict {
    Pass(String),
    Fail(String),
    /// Fails as written; the string explains, the bool says whether the
    /// documented facts still hold.
    Known(String, bool),
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_incidence() -> CutOptions {
    CutOptions {
        include_hereditary: true,
        ..CutOptions::default()
    }
}

fn paths(t: &TrivExtPresentation, ps: &[phicut::Path]) -> BTreeSet<String> {
    ps.iter().map(|p| t.quiver().path_string(p)).collect()
}

fn strs(xs: &[&str]) -> BTreeSet<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

fn e7() -> Check {
    let built = trivial_extension(&common::algebra("e7_solution_01")).map_err(|e| e.to_string())?;
    let printed = common::trivext("e7_teoe7_sol1_trivext");
    let iso = built
        .find_isomorphism(&printed)
        .map_err(|e| e.to_string())?
        .ok_or("trivext is not isomorphic to the printed presentation")?;
    let rel2: Vec<_> = built.rel2().iter().map(|p| iso.map_path(p)).collect();
    ensure(paths(&printed, &rel2) == strs(&["α1 α2 α3", "α4 α2 α5"]), || format!("rel2 {:?}", paths(&printed, &rel2)))?;
    let cycles: BTreeSet<BTreeSet<String>> = built
        .cycles()
        .iter()
        .map(|c| c.word().iter().map(|&a| printed.quiver().arrow_name(iso.arrows[a.0]).to_string()).collect())
        .collect();
    let want: BTreeSet<BTreeSet<String>> =
        [strs(&["α1", "α2", "α5", "α6"]), strs(&["α4", "α2", "α3", "α8", "α7"])].into_iter().collect();
    ensure(cycles == want, || format!("cycles {cycles:?}"))?;

    let found = incidence_cuts(&printed, &all_incidence(), &corpus::solutions().map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let non: Vec<_> = found.reports.iter().filter(|r| !r.flags.hereditary).collect();
    let non_classes: BTreeSet<usize> = non.iter().map(|r| r.iso_class).collect();
    ensure(non_classes.len() == 1, || format!("{} non-hereditary classes", non_classes.len()))?;
    ensure(non[0].matches.as_deref() == Some("e7_solution_01"), || "no match with solution 1".into())?;
    let her: BTreeSet<BTreeSet<String>> = found
        .reports
        .iter()
        .filter(|r| r.flags.hereditary)
        .map(|r| r.sigma.names(printed.quiver()).into_iter().collect())
        .collect();
    let want_her: BTreeSet<BTreeSet<String>> = [strs(&["α1", "α4"]), strs(&["α3", "α5"])].into_iter().collect();
    ensure(her == want_her, || format!("hereditary {her:?}"))?;
    // brute force over all 2^8 arrow subsets
    let oracle: BTreeSet<BTreeSet<String>> = common::oracle_incidence_sets(&printed).into_iter().collect();
    let mut expected = want_her.clone();
    expected.insert(strs(&["α2"]));
    ensure(oracle == expected, || format!("oracle {oracle:?}"))?;
    let undeduped = incidence_cuts(
        &printed,
        &CutOptions {
            dedup: DedupMode::None,
            ..all_incidence()
        },
        &[],
    )
    .map_err(|e| e.to_string())?;
    let her_classes: BTreeSet<usize> = undeduped.reports.iter().filter(|r| r.flags.hereditary).map(|r| r.iso_class).collect();
    ensure(her_classes.len() == 2, || "hereditary sets collapsed without dedup".into())?;
    Ok("rel2 and cycles as printed; {α2} ≅ solution 1; hereditary {α1, α4}, {α3, α5} (one E7 class under iso-op)".into())
}

fn d4til() -> Check {
    let t = trivial_extension(&common::algebra("d4til_star")).map_err(|e| e.to_string())?;
    let found = incidence_cuts(&t, &all_incidence(), &corpus::solutions().map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let non: Vec<_> = found.reports.iter().filter(|r| !r.flags.hereditary).collect();
    ensure(non.len() == 1, || format!("{} non-hereditary sets", non.len()))?;
    ensure(non[0].matches.as_deref() == Some("d4til_solution_01"), || "no match with item 1".into())?;
    ensure(found.incidence_sets.len() == 3, || format!("{} incidence sets", found.incidence_sets.len()))?;
    ensure(common::oracle_incidence_sets(&t).len() == 3, || "oracle disagrees".into())?;
    Ok(format!("{} ≅ item 1; 3 incidence-defining sets", non[0].sigma.display(t.quiver())))
}

fn e8() -> Check {
    let t = common::trivext("e8_trivext");
    let rel2 = relations_type2(t.quiver(), t.cycles());
    let printed = strs(&[
        "α3 α8 α1 α5 α7",
        "α4 α8 α1 α5 α11",
        "α9 α4 α8 α1",
        "α7 α4 α8 α10",
        "α3 α8 α10",
        "α11 α3 α2",
        "α6 α3 α8",
        "α4 α2",
    ]);
    ensure(paths(&t, &rel2) == printed, || format!("rel2 {:?}", paths(&t, &rel2)))?;
    let found = incidence_cuts(&t, &CutOptions::default(), &corpus::solutions().map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let reps = found.representatives();
    ensure(reps.len() == 2, || format!("{} classes", reps.len()))?;
    let matched: BTreeSet<&str> = reps.iter().filter_map(|r| r.matches.as_deref()).collect();
    ensure(matched == ["e8_solution_076", "e8_solution_077"].into_iter().collect(), || format!("matches {matched:?}"))?;
    Ok("r1..r8 recomputed; two classes, solutions 76 and 77".into())
}

fn four_cycle_minimal() -> Verdict {
    let t = four_cycles(FourCycleLengths::MINIMAL).expect("builds");
    let bundled = common::trivext("corte1_min_trivext");
    let found = incidence_cuts(&t, &all_incidence(), &[]).expect("runs");
    let got: Vec<(String, bool)> = found
        .reports
        .iter()
        .map(|r| (r.sigma.display(t.quiver()), r.flags.hereditary))
        .collect();
    let third = found.reports.iter().find(|r| r.flags.hereditary);
    let facts = t.is_isomorphic_to(&bundled)
        && found.cutting_sets.len() == 17
        && got
            == [
                ("{α, β}".to_string(), false),
                ("{α′, β′}".to_string(), false),
                ("{δ1, θ1, ρ1, σ1}".to_string(), true),
            ]
        && third.is_some_and(|r| r.graph_type == GraphType::Other && r.quotient.quiver().is_connected())
        && common::oracle_incidence_sets(&t).len() == 3;
    if got.len() == 2 {
        return Verdict::Pass("exactly {α, β} and {α′, β′}".into());
    }
    Verdict::Known(
        format!(
            "3 incidence-defining sets, not 2: {{α, β}} and {{α′, β′}} (non-hereditary) plus the hereditary \
             {{δ1, θ1, ρ1, σ1}} whose quotient is a tree with four legs of length two; \
             the expected pair is exactly the non-hereditary ones ({} cutting sets in all)",
            found.cutting_sets.len()
        ),
        facts,
    )
}

fn roundtrip_all() -> Check {
    let mut n = 0;
    for (name, t) in common::corpus_trivexts() {
        let found = incidence_cuts(&t, &all_incidence(), &[]).map_err(|e| e.to_string())?;
        for s in &found.incidence_sets {
            let r = roundtrip(&t, s).map_err(|e| e.to_string())?;
            ensure(r == RoundTrip::Holds, || format!("{name} {}: {r}", s.display(t.quiver())))?;
            n += 1;
        }
    }
    Ok(format!("T(cut(T, Σ)) ≅ T for all {n} incidence-defining sets"))
}

fn oracle_instances() -> Vec<(String, TrivExtPresentation)> {
    let mut v: Vec<(String, TrivExtPresentation)> =
        common::corpus_trivexts().into_iter().map(|(n, t)| (n.to_string(), t)).collect();
    for k in 0..4 {
        v.push((format!("dn_tilde({k})"), dn_tilde(k).unwrap()));
    }
    v.push(("four_cycles".into(), four_cycles(FourCycleLengths::MINIMAL).unwrap()));
    for n in 4..=7 {
        for i in AnInstance::all(n).unwrap() {
            v.push((format!("A{n}{:?}", i.orientation), i.presentation));
        }
    }
    v.retain(|(_, t)| t.quiver().arrow_count() <= BRUTE_FORCE_MAX_ARROWS);
    v
}

fn oracles() -> Check {
    let instances = oracle_instances();
    for (name, t) in &instances {
        let fast = enumerate_cutting_sets(t);
        ensure(fast == brute_force_cuts(t).map_err(|e| e.to_string())?, || format!("{name}: enumeration"))?;
        ensure(common::names(t, &fast) == common::oracle_cutting_sets(t), || format!("{name}: subset oracle"))?;
        let m = encode(t).map_err(|e| e.to_string())?;
        let solved: BTreeSet<BTreeSet<String>> =
            solve(&m).into_iter().map(|s| s.iter().map(|&i| m.labels()[i].clone()).collect()).collect();
        let hit: BTreeSet<BTreeSet<String>> = fast
            .iter()
            .filter(|s| program_accepts(t, s))
            .map(|s| s.names(t.quiver()).into_iter().collect())
            .collect();
        ensure(solved == hit, || format!("{name}: matrix solver"))?;
    }
    Ok(format!("{} instances agree", instances.len()))
}

fn properties() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut gentle = 0;
    for _ in 0..500 {
        let n = rng.gen_range(1..=7);
        let p = common::random_poset(&mut rng, n);
        ensure(hasse(&p).bypasses().map_err(|e| e.to_string())?.is_empty(), || format!("bypass in {p:?}"))?;
        let a = incidence_presentation(&p);
        let ps = a.path_space().map_err(|e| e.to_string())?;
        ensure(ps.is_incidence(), || format!("not incidence: {p:?}"))?;
        if a.is_gentle() {
            gentle += 1;
            ensure(ps.is_hereditary(), || format!("gentle but not hereditary: {p:?}"))?;
        }
    }
    let mut sets = 0;
    for (name, t) in common::corpus_trivexts() {
        for s in enumerate_cutting_sets(&t) {
            for p in t.rel1() {
                ensure(s.meets(p), || format!("{name}: rel1 missed"))?;
            }
        }
        let found = incidence_cuts(&t, &all_incidence(), &[]).map_err(|e| e.to_string())?;
        for s in &found.incidence_sets {
            ensure(type3_pairing_violations(&t, s).is_empty(), || format!("{name}: type-3 pair split"))?;
            sets += 1;
        }
        let op = t.opposite();
        let found_op = incidence_cuts(&op, &all_incidence(), &[]).map_err(|e| e.to_string())?;
        ensure(
            common::names(&t, &found.incidence_sets) == common::names(&op, &found_op.incidence_sets),
            || format!("{name}: opposite cuts differ"),
        )?;
        for s in &found.incidence_sets {
            let names = s.names(t.quiver());
            let s_op = CuttingSet::from_names(op.quiver(), &names).map_err(|e| e.to_string())?;
            let x = cut(&t, s).map_err(|e| e.to_string())?.opposite();
            let y = cut(&op, &s_op).map_err(|e| e.to_string())?;
            ensure(
                find_isomorphism(&x, &y, IsoMode::Ideal).map_err(|e| e.to_string())?.is_some(),
                || format!("{name}: opposite quotient differs"),
            )?;
        }
        let a = t.origin().cloned().or_else(|| cut(&t, found.incidence_sets.first()?).ok());
        if let Some(a) = a {
            let lhs = trivial_extension(&a.opposite()).map_err(|e| e.to_string())?;
            ensure(lhs.is_isomorphic_to(&t.opposite()), || format!("{name}: T(A^op) ≇ T(A)^op"))?;
        }
    }
    Ok(format!("500 posets ({gentle} gentle); rel1, type-3 pairing and opposites on {sets} corpus cuts"))
}

fn lemmas() -> Check {
    let mut instances = 0;
    let mut literal = 0;
    for n in 4..=8 {
        for i in AnInstance::all(n).map_err(|e| e.to_string())? {
            if !i.has_long_cycle() {
                continue;
            }
            instances += 1;
            let found = incidence_cuts(&i.presentation, &all_incidence(), &[]).map_err(|e| e.to_string())?;
            let q = i.presentation.quiver();
            for r in &found.reports {
                let l = r.sigma.contains(i.left_end);
                let rt = r.sigma.contains(i.right_end);
                if l || rt {
                    literal += 1;
                }
                let forbidden = (l && i.left_cycle_len() >= 3) || (rt && i.right_cycle_len() >= 3);
                ensure(!forbidden, || format!("{:?}: {} is incidence", i.orientation, r.sigma.display(q)))?;
                if r.sigma.contains(i.left_added) || r.sigma.contains(i.right_added) {
                    ensure(r.graph_type == GraphType::A(n), || format!("{:?}: graph {}", i.orientation, r.graph_type))?;
                }
            }
            for d in [i.left_added, i.right_added] {
                ensure(found.reports.iter().any(|r| r.sigma.contains(d)), || {
                    format!("{:?}: no incidence set through {}", i.orientation, q.arrow_name(d))
                })?;
            }
            let back = cut(&i.presentation, &CuttingSet::new(i.added_arrows())).map_err(|e| e.to_string())?;
            ensure(
                find_isomorphism(&back, &i.algebra, IsoMode::Ideal).map_err(|e| e.to_string())?.is_some(),
                || format!("{:?}: cutting the added arrows does not give A", i.orientation),
            )?;
        }
    }
    let mut pendant = 0;
    for (m, n, l, th) in [(1, 2, 1, 1), (2, 2, 1, 1), (2, 3, 2, 1), (3, 2, 2, 2), (1, 4, 3, 2)] {
        let (t, lambda) = shared_path_with_pendant(m, n, l, th).map_err(|e| e.to_string())?;
        let found = incidence_cuts(&t, &all_incidence(), &[]).map_err(|e| e.to_string())?;
        for s in &found.incidence_sets {
            ensure(lambda.iter().all(|&a| !s.contains(a)), || format!("pendant ({m},{n},{l},{th}): λ cut"))?;
        }
        pendant += 1;
    }
    Ok(format!(
        "{instances} A_n instances: ends on cycles of ≥3 arrows never cut, added arrows give A_n \
         ({literal} incidence cuts take an end arrow whose cycle has 2 arrows); {pendant} pendant instances reject λ"
    ))
}

fn main() {
    let criteria: [(&str, Duration, Box<dyn Fn() -> Verdict>); 8] = [
        ("E7 instance", Duration::from_secs(1), Box::new(|| check(e7()))),
        ("D̃4 instance", Duration::from_secs(1), Box::new(|| check(d4til()))),
        ("E8 instance", Duration::from_secs(5), Box::new(|| check(e8()))),
        ("four-cycle minimal instance", Duration::from_secs(1), Box::new(four_cycle_minimal)),
        ("round trip", Duration::from_secs(30), Box::new(|| check(roundtrip_all()))),
        ("oracle equivalence", Duration::from_secs(60), Box::new(|| check(oracles()))),
        ("property suites", Duration::from_secs(60), Box::new(|| check(properties()))),
        ("lemma suites", Duration::from_secs(30), Box::new(|| check(lemmas()))),
    ];
    let mut broken = 0;
    for (i, (name, limit, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = f();
        let took = start.elapsed();
        let slow = took > *limit;
        let timing = format!("{:.3}s, limit {}s", took.as_secs_f64(), limit.as_secs());
        match verdict {
            Verdict::Pass(d) if !slow => println!("{} PASS {name}: {d} [{timing}]", i + 1),
            Verdict::Pass(d) => {
                broken += 1;
                println!("{} FAIL {name}: too slow; {d} [{timing}]", i + 1)
            }
            Verdict::Fail(d) => {
                broken += 1;
                println!("{} FAIL {name}: {d} [{timing}]", i + 1)
            }
            Verdict::Known(d, facts) => {
                if !facts || slow {
                    broken += 1;
                }
                let note = if facts { "documented deviation" } else { "documented facts no longer hold" };
                println!("{} FAIL {name} ({note}): {d} [{timing}]", i + 1)
            }
        }
    }
    if broken > 0 {
        eprintln!("{broken} criteria failed unexpectedly");
        std::process::exit(1);
    }
}

fn check(c: Check) -> Verdict {
    match c {
        Ok(d) => Verdict::Pass(d),
        Err(d) => Verdict::Fail(d),
    }
}
