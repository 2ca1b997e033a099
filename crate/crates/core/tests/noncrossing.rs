use std::collections::BTreeSet;

use hecke_norms::catalan::kirk_poly;
use hecke_norms::coxeter::{all_coxeter_words, CoxeterSystem, GenSet};
use hecke_norms::noncrossing::*;
use num_bigint::BigInt;

fn catalan(n: u64) -> u64 {
    (0..n).fold(1u64, |c, i| c * 2 * (2 * i + 1) / (i + 2))
}

fn a(n: usize) -> std::sync::Arc<CoxeterSystem> {
    CoxeterSystem::parse(&format!("A{}", n - 1)).unwrap()
}

fn std_c(n: usize) -> Vec<usize> {
    (0..n - 1).collect()
}

#[test]
fn s3_example() {
    let ncs = nc_enumerate(3, &[0, 1]).unwrap();
    let words: BTreeSet<Vec<usize>> = ncs.iter().map(|p| p.word.clone()).collect();
    let expect: BTreeSet<Vec<usize>> = [vec![], vec![1], vec![2], vec![1, 2, 1], vec![1, 2]].into_iter().collect();
    assert_eq!(words, expect);
    assert_eq!(nc_enumerate(2, &[0]).unwrap().len(), 2);

    let pf = nc_parking_functions(3, &[0, 1]).unwrap();
    assert_eq!(pf.len(), 16);
    let reps = |pi: Vec<usize>| -> BTreeSet<Vec<usize>> {
        let sys = a(3);
        let e = sys.from_word(&pi.iter().map(|s| s - 1).collect::<Vec<_>>());
        pf.iter().filter(|f| f.pi == e).map(|f| f.v_word.clone()).collect()
    };
    let set = |ws: &[&[usize]]| ws.iter().map(|w| w.to_vec()).collect::<BTreeSet<_>>();
    assert_eq!(reps(vec![]).len(), 6);
    assert_eq!(reps(vec![1]), set(&[&[], &[2], &[1, 2]]));
    assert_eq!(reps(vec![2]), set(&[&[], &[1], &[2, 1]]));
    assert_eq!(reps(vec![1, 2, 1]), set(&[&[], &[1], &[2]]));
    assert_eq!(reps(vec![1, 2]), set(&[&[]]));
}

#[test]
fn catalan_counts_for_every_coxeter_word() {
    for n in 2..=5usize {
        for c in all_coxeter_words(n - 1) {
            let ncs = nc_enumerate(n, &c).unwrap();
            assert_eq!(ncs.len() as u64, catalan(n as u64), "n={n} c={c:?}");
            let sys = a(n);
            let ce = sys.from_word(&c);
            for p in &ncs {
                let rest = absolute_length(&sys, sys.mul(sys.inverse(p.element), ce));
                assert_eq!(p.absolute_length + rest, n - 1);
            }
        }
    }
    assert_eq!(nc_enumerate(6, &std_c(6)).unwrap().len(), 132);
    assert_eq!(nc_enumerate(7, &std_c(7)).unwrap().len(), 429);
}

#[test]
fn standard_partitions_are_noncrossing() {
    for n in 2..=6usize {
        let ncs = nc_enumerate(n, &std_c(n)).unwrap();
        assert!(ncs.iter().all(is_noncrossing));
        let blocks: BTreeSet<_> = ncs.iter().map(|p| p.blocks.clone()).collect();
        assert_eq!(blocks.len(), ncs.len());
    }
}

#[test]
fn parking_counts() {
    for n in 2..=6usize {
        let total = nc_parking_functions(n, &std_c(n)).unwrap().len() as u64;
        assert_eq!(total, (n as u64 + 1).pow(n as u32 - 1), "n={n}");
    }
    let mut c = std_c(5);
    c.reverse();
    assert_eq!(nc_parking_functions(5, &c).unwrap().len(), 1296);
}

#[test]
fn coset_criterion_matches_minimal_length() {
    for n in 2..=4usize {
        let sys = a(n);
        for p in nc_enumerate(n, &std_c(n)).unwrap() {
            // W_π: permutations preserving every block
            let wpi: Vec<u32> = sys
                .elements()
                .filter(|&u| {
                    let m = sys.model(u);
                    p.blocks.iter().all(|b| b.iter().all(|&x| b.contains(&(m[x - 1] as usize))))
                })
                .collect();
            for v in sys.elements() {
                let min = wpi.iter().map(|&u| sys.length(sys.mul(v, u))).min().unwrap();
                assert_eq!(is_min_coset_rep(&sys, v, &p.blocks), sys.length(v) == min);
            }
        }
    }
}

#[test]
fn sorting_words() {
    let sys = a(3);
    assert_eq!(nc_sorting_word(&sys, &[0, 1]).unwrap(), vec![0, 1, 0]);
    assert_eq!(nc_sorting_word(&a(2), &[0]).unwrap(), vec![0]);
    for n in 2..=6usize {
        let sys = a(n);
        for c in all_coxeter_words(n - 1) {
            let w = nc_sorting_word(&sys, &c).unwrap();
            assert_eq!(w.len(), n * (n - 1) / 2);
            assert_eq!(sys.from_word(&w), sys.longest());
        }
    }
}

#[test]
fn associahedron_f_vectors() {
    assert_eq!(asso_f_vector(3, &[0, 1]).unwrap(), vec![5, 5, 1]);
    assert_eq!(asso_f_vector(4, &[0, 1, 2]).unwrap(), vec![14, 21, 9, 1]);
    for n in 2..=5usize {
        let c = std_c(n);
        let f = asso_f_vector(n, &c).unwrap();
        assert_eq!(f[0], nc_enumerate(n, &c).unwrap().len());
        for (k, &count) in f.iter().enumerate() {
            let kirk = kirk_poly(n, n as u32 + 1, k).unwrap();
            assert_eq!(kirk.at_one(), BigInt::from(count), "n={n} k={k}");
        }
    }
    for c in all_coxeter_words(3) {
        assert_eq!(asso_f_vector(4, &c).unwrap(), vec![14, 21, 9, 1]);
    }
}

#[test]
fn ak_sets() {
    let sys = a(3);
    let a1: BTreeSet<u32> = nc_ak_set(3, 1).unwrap().into_iter().collect();
    assert_eq!(a1, [sys.from_word(&[1, 0]), sys.from_word(&[1])].into_iter().collect());
    assert_eq!(nc_ak_set(4, 2).unwrap().len(), 3);
    for n in 2..=6usize {
        let sys = a(n);
        for k in 0..n {
            let mut listed = nc_ak_set(n, k).unwrap();
            assert_eq!(listed.len() as u64, binomial(n - 1, k));
            let ik = GenSet::from_gens(0..n - 1 - k);
            assert!(listed.iter().all(|&w| sys.left_ascents(w) == ik));
            listed.sort_unstable();
            assert_eq!(listed, ascent_class(n, k).unwrap());
        }
    }
}

#[test]
fn proposition_counts() {
    for n in 2..=5usize {
        for c in all_coxeter_words(n - 1) {
            let rep = nc_verify_prop(n, &c).unwrap();
            assert!(rep.pass, "n={n} c={c:?}");
            assert!(rep.direct_pass, "n={n} c={c:?}");
            assert_eq!(rep.rows.len(), catalan(n as u64) as usize * n);
        }
    }
    let rep = nc_verify_prop(6, &std_c(6)).unwrap();
    assert!(rep.pass && !rep.conjugated);
    // row sums over k are powers of two
    let mut sums = std::collections::BTreeMap::new();
    for r in &rep.rows {
        let e = sums.entry(r.pi_word.clone()).or_insert((0u64, r.absolute_length));
        e.0 += r.count;
    }
    for (_, (total, lt)) in sums {
        assert_eq!(total, 1 << (5 - lt));
    }
    // the identity and the Coxeter element
    let e_rows: Vec<_> = rep.rows.iter().filter(|r| r.pi_word.is_empty()).collect();
    assert!(e_rows.iter().all(|r| r.count == binomial(5, r.k)));
    let c_rows: Vec<_> = rep.rows.iter().filter(|r| r.absolute_length == 5).collect();
    assert!(c_rows.iter().all(|r| r.count == u64::from(r.k == 0)));
}

#[test]
fn limits() {
    assert!(nc_enumerate(9, &std_c(9)).is_err());
    assert!(nc_parking_functions(7, &std_c(7)).is_err());
    assert!(nc_asso_faces(6, &std_c(6), 0).is_err());
    assert!(nc_enumerate(3, &[0, 0]).is_err());
}
