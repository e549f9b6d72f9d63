use std::collections::BTreeSet;

use proptest::prelude::*;

use phicut::cutting::{brute_force_cuts, enumerate_cutting_sets, program_accepts, BRUTE_FORCE_MAX_ARROWS};
use phicut::families::{dn_tilde, four_cycles, shared_path_with_pendant, AnInstance, FourCycleLengths};
use phicut::matrix::{encode, heuristic, solve, solve_by_scan, MatrixInstance};
use phicut::text::Document;
use phicut::trivext::TrivExtPresentation;

mod common;

fn instances() -> Vec<(String, TrivExtPresentation)> {
    let mut v: Vec<(String, TrivExtPresentation)> =
        common::corpus_trivexts().into_iter().map(|(n, t)| (n.to_string(), t)).collect();
    for k in 0..3 {
        v.push((format!("dn_tilde({k})"), dn_tilde(k).unwrap()));
    }
    v.push(("four_cycles".into(), four_cycles(FourCycleLengths::MINIMAL).unwrap()));
    v.push(("pendant".into(), shared_path_with_pendant(2, 3, 2, 1).unwrap().0));
    for i in AnInstance::all(6).unwrap() {
        v.push((format!("A {:?}", i.orientation), i.presentation));
    }
    v.retain(|(_, t)| t.quiver().arrow_count() <= BRUTE_FORCE_MAX_ARROWS);
    v
}

#[test]
fn enumeration_matches_subset_scans() {
    for (name, t) in instances() {
        let fast = enumerate_cutting_sets(&t);
        assert_eq!(fast, brute_force_cuts(&t).unwrap(), "{name}");
        assert_eq!(common::names(&t, &fast), common::oracle_cutting_sets(&t), "{name}");
    }
}

#[test]
fn matrix_solutions_are_the_cuts_meeting_every_type2_relation() {
    for (name, t) in instances() {
        let m = encode(&t).unwrap();
        let solved: BTreeSet<BTreeSet<String>> = solve(&m)
            .into_iter()
            .map(|s| s.iter().map(|&i| m.labels()[i].clone()).collect())
            .collect();
        let expected: BTreeSet<BTreeSet<String>> = enumerate_cutting_sets(&t)
            .into_iter()
            .filter(|s| program_accepts(&t, s))
            .map(|s| s.names(t.quiver()).into_iter().collect())
            .collect();
        assert_eq!(solved, expected, "{name}");
    }
}

#[test]
fn encoding_lists_relation_arrows_first() {
    let t = common::trivext("e7_teoe7_sol1_trivext");
    let m = encode(&t).unwrap();
    assert_eq!((m.n_arrows(), m.n_rels(), m.n_cycles()), (8, 2, 2));
    let in_rel = |a: usize| (0..m.n_rels()).any(|r| m.in_relation(a, r));
    let first_free = (0..m.n_arrows()).find(|&a| !in_rel(a)).unwrap_or(m.n_arrows());
    assert!((first_free..m.n_arrows()).all(|a| !in_rel(a)));

    let m = encode(&common::trivext("e8_trivext")).unwrap();
    assert_eq!((m.n_arrows(), m.n_rels(), m.n_cycles()), (11, 8, 4));
    let m = encode(&common::trivext("a2_trivext")).unwrap();
    assert_eq!((m.n_arrows(), m.n_rels(), m.n_cycles()), (2, 0, 1));
}

fn bundled_matrix(name: &str) -> MatrixInstance {
    match phicut::corpus::document(name).unwrap() {
        Document::Matrix(m) => m,
        _ => panic!(),
    }
}

#[test]
fn bundled_matrices() {
    for (name, expected) in [
        ("e7_matrix", vec![vec!["α2"], vec!["α1", "α4"], vec!["α3", "α5"]]),
        ("d4til_matrix", vec![vec!["α1"], vec!["α2", "α3", "α4"], vec!["α5", "α6", "α7"]]),
    ] {
        let m = bundled_matrix(name);
        let got: Vec<Vec<String>> = solve(&m)
            .into_iter()
            .map(|s| s.iter().map(|&i| m.labels()[i].clone()).collect())
            .collect();
        assert_eq!(got, expected, "{name}");
        assert_eq!(solve(&m), solve_by_scan(&m), "{name}");
        let mut h = heuristic(&m).answer_sets();
        h.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.iter().cmp(b.iter())));
        assert_eq!(h, solve(&m), "{name}");
    }
}

#[test]
fn an_empty_relation_column_has_no_solution() {
    let rows = vec![vec![false, true], vec![false, true]];
    let m = MatrixInstance::new(1, 1, rows).unwrap();
    assert!(solve(&m).is_empty());
    assert!(solve_by_scan(&m).is_empty());
}

fn matrix_strategy() -> impl Strategy<Value = MatrixInstance> {
    (2usize..=10, 0usize..=4, 1usize..=4).prop_flat_map(|(n, r, c)| {
        prop::collection::vec(prop::collection::vec(any::<bool>(), r + c), n).prop_map(move |mut rows| {
            // every cycle needs two arrows
            for k in 0..c {
                rows[k % n][r + k] = true;
                rows[(k + 1) % n][r + k] = true;
            }
            MatrixInstance::new(r, c, rows).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn solve_agrees_with_the_scan(m in matrix_strategy()) {
        let s = solve(&m);
        prop_assert_eq!(&s, &solve_by_scan(&m));
        for x in &s {
            prop_assert!(m.accepts(x));
        }
    }

    #[test]
    fn solve_is_invariant_under_row_permutation(m in matrix_strategy(), seed in any::<u64>()) {
        let n = m.n_arrows();
        let mut perm: Vec<usize> = (0..n).collect();
        // a deterministic shuffle from the seed
        let mut x = seed | 1;
        for i in (1..n).rev() {
            x ^= x << 13; x ^= x >> 7; x ^= x << 17;
            perm.swap(i, (x % (i as u64 + 1)) as usize);
        }
        let rows: Vec<Vec<bool>> = perm.iter().map(|&p| m.membership()[p].clone()).collect();
        let pm = MatrixInstance::new(m.n_rels(), m.n_cycles(), rows).unwrap();
        let mapped: BTreeSet<BTreeSet<usize>> = solve(&pm).into_iter().map(|s| s.iter().map(|&i| perm[i]).collect()).collect();
        let direct: BTreeSet<BTreeSet<usize>> = solve(&m).into_iter().collect();
        prop_assert_eq!(mapped, direct);
    }
}
