use std::collections::BTreeSet;

use hecke_norms::catalan::park_poly;
use hecke_norms::coxeter::{all_coxeter_words, power_word, CoxeterSystem, GenSet, Sign};
use hecke_norms::deodhar::*;
use hecke_norms::poly::LaurentPoly;
use num_bigint::BigInt;
use proptest::prelude::*;

fn sys(t: &str) -> std::sync::Arc<CoxeterSystem> {
    CoxeterSystem::parse(t).unwrap()
}

/// Bruhat order by the subword property on a fixed reduced word of `y`.
fn bruhat_le(w: &CoxeterSystem, x: u32, y: u32) -> bool {
    let word = w.reduced_word(y);
    (0u32..1 << word.len()).any(|mask| {
        let sub: Vec<usize> = word.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &s)| s).collect();
        w.from_word(&sub) == x
    })
}

/// Every subword checked against the definition, with `(|d|, |e|)` recorded.
fn brute(w: &CoxeterSystem, v: u32, word: &[usize]) -> Vec<(Vec<bool>, usize, usize)> {
    let mut out = Vec::new();
    for mask in 0u32..1 << word.len() {
        let takes: Vec<bool> = (0..word.len()).map(|i| mask >> i & 1 == 1).collect();
        let mut x = v;
        let (mut d, mut e, mut ok) = (0, 0, true);
        for (&s, &t) in word.iter().zip(&takes) {
            let xs = w.rmul(x, s);
            let next = if t { xs } else { x };
            if !bruhat_le(w, next, xs) {
                ok = false;
                break;
            }
            if t && w.length(xs) < w.length(x) {
                d += 1;
            }
            if !t {
                e += 1;
            }
            x = next;
        }
        if ok && x == v {
            out.push((takes, d, e));
        }
    }
    out
}

#[test]
fn enumeration_matches_definition() {
    for t in ["A2", "B2"] {
        let w = sys(t);
        for word in [vec![0, 1, 0], vec![0, 1, 0, 1, 1, 0], vec![1, 0, 1, 0, 1, 0, 1]] {
            for v in w.elements() {
                let listed: BTreeSet<Vec<bool>> = enumerate(&w, v, &word).into_iter().map(|s| s.takes).collect();
                let oracle = brute(&w, v, &word);
                let expect: BTreeSet<Vec<bool>> = oracle.iter().map(|o| o.0.clone()).collect();
                assert_eq!(listed, expect, "{t} v={v} {word:?}");
                let counts = cell_counts(&w, v, &word);
                let mut table = vec![vec![0u64; word.len() + 1]; word.len() + 1];
                for (_, d, e) in oracle {
                    table[d][e] += 1;
                }
                assert_eq!(counts, table);
            }
        }
    }
}

#[test]
fn subword_fields() {
    let w = sys("A1");
    let subs = enumerate(&w, 0, &[0, 0]);
    // skip-skip and take-take
    assert_eq!(subs.len(), 2);
    assert_eq!(subs[0].e, vec![1, 2]);
    assert_eq!(subs[1].d, vec![2]);
    assert_eq!(subs[1].weight(), LaurentPoly::x());
    assert_eq!(cell_poly(&w, 0, &[0, 0]), LaurentPoly::x_minus_one().pow(2) + LaurentPoly::x());
    assert_eq!(cell_poly(&w, 1, &[0, 0]), LaurentPoly::x());
    assert_eq!(minimal_count(&w, 0, &[0, 0, 0]), 2);
    assert_eq!(minimal(&w, 0, &[0, 0, 0]).len(), 2);
}

#[test]
fn hecke_trace_identity() {
    for t in ["A1", "A2", "A3", "B2", "I2:5"] {
        let w = sys(t);
        for word in [vec![0], vec![1, 0, 1], vec![0, 1, 0, 1, 0], vec![1, 1, 0, 1]] {
            let word: Vec<usize> = word.into_iter().map(|s| s % w.rank()).collect();
            assert!(hecke_trace_mismatches(&w, &word).is_empty(), "{t} {word:?}");
        }
    }
}

#[test]
fn incremental_sweep() {
    for (t, len) in [("A2", 6), ("B2", 6), ("A3", 4), ("I2:5", 5)] {
        let w = sys(t);
        let rep = gltw_sweep(&w, len).unwrap();
        let r = w.rank() as u64;
        assert_eq!(rep.words_checked, (0..=len as u32).map(|k| r.pow(k)).sum::<u64>());
        assert!(rep.pass, "{t}: {:?}", rep.failures.first());
    }
    assert!(gltw_sweep(&sys("A1"), MAX_SWEEP_LEN + 1).is_err());
    assert_eq!(gltw_sweep(&sys("A1"), 0).unwrap().words_checked, 1);
}

#[test]
fn box_counts_and_parking() {
    for (t, p) in [("A2", 2), ("A2", 4), ("A3", 3), ("B2", 3)] {
        let w = sys(t);
        let r = w.rank();
        for c in all_coxeter_words(r) {
            let word = power_word(&c, p);
            let boxes = box_counts(&w, &word);
            let total: u64 = boxes.iter().sum();
            assert_eq!(total, (p as u64).pow(r as u32), "{t} p={p}");
            let full = GenSet::full(r);
            let cat = park_poly(&w, full, Sign::Plus, p as u32).unwrap().at_one();
            assert_eq!(BigInt::from(boxes[full.0 as usize]), cat);
            // minimal subwords give the value at X = 1 of the normalized cell sum
            for j in GenSet::all(r) {
                let sum = park_sum(&w, j, Sign::Plus, &word).unwrap();
                let supers: u64 = GenSet::all(r).filter(|i| i.is_superset(j)).map(|i| boxes[i.0 as usize]).sum();
                assert_eq!(sum.at_one(), BigInt::from(supers), "{t} p={p} {j}");
            }
        }
    }
}

#[test]
fn cell_polys_are_consistent() {
    let w = sys("A3");
    let word = power_word(&[0, 1, 2], 3);
    let all = all_cell_polys(&w, &word);
    for v in w.elements() {
        assert_eq!(all[v as usize], cell_poly(&w, v, &word));
        let from_list = enumerate(&w, v, &word).iter().fold(LaurentPoly::zero(), |acc, s| acc + s.weight());
        assert_eq!(from_list, all[v as usize]);
    }
}

#[test]
fn element_parsing() {
    let w = sys("A2");
    assert_eq!(parse_element(&w, "e").unwrap(), 0);
    assert_eq!(parse_element(&w, "").unwrap(), 0);
    assert_eq!(parse_element(&w, "w0").unwrap(), w.longest());
    assert_eq!(parse_element(&w, "1 2 1").unwrap(), w.longest());
    assert!(parse_element(&w, "3").is_err());
    assert!(require_nonempty(&[]).is_err());
    assert!(park_sum(&w, GenSet::empty(), Sign::Plus, &[0]).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cell_counts_match_enumeration(word in prop::collection::vec(0usize..3, 0..9), v in 0u32..24) {
        let w = sys("A3");
        let subs = enumerate(&w, v, &word);
        let counts = cell_counts(&w, v, &word);
        let total: u64 = counts.iter().flatten().sum();
        prop_assert_eq!(total as usize, subs.len());
        for s in &subs {
            prop_assert!(counts[s.d.len()][s.e.len()] > 0);
            // every descent is undone by a later ascent
            prop_assert!(s.e.len() + 2 * s.d.len() <= word.len());
        }
        prop_assert!(hecke_trace_mismatches(&w, &word).is_empty());
    }

    #[test]
    fn trace_identity_in_b2(word in prop::collection::vec(0usize..2, 0..9)) {
        prop_assert!(hecke_trace_mismatches(&sys("B2"), &word).is_empty());
    }
}
