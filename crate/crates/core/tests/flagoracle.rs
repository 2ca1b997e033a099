use hecke_norms::coxeter::{GenSet, Sign};
use hecke_norms::flagoracle::FqGroup;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

fn groups() -> Vec<FqGroup> {
    [(2, 2), (2, 3), (3, 2)].iter().map(|&(n, q)| FqGroup::build(n, q).unwrap()).collect()
}

#[test]
fn group_and_flag_counts() {
    for g in groups() {
        let (n, q) = (g.n(), g.q() as usize);
        let order: usize = (0..n).map(|i| q.pow(n as u32) - q.pow(i as u32)).product();
        assert_eq!(g.order(), order);
        assert_eq!(g.num_flags() * g.borel().len(), order);
        let borel = (q - 1).pow(n as u32) * q.pow((n * (n - 1) / 2) as u32);
        assert_eq!(g.borel().len(), borel);
    }
}

#[test]
fn positions() {
    for g in groups() {
        let sys = g.weyl().clone();
        let nf = g.num_flags();
        for f in 0..nf {
            assert_eq!(g.bruhat_position(f, f), 0);
        }
        let anti = g.permutation_flag(sys.longest());
        assert_eq!(g.bruhat_position(0, anti), sys.longest());
        // |O(w)| = |G/B| q^{l(w)}
        let mut sizes = vec![0usize; sys.order()];
        for a in 0..nf {
            for b in 0..nf {
                sizes[g.position(a, b) as usize] += 1;
            }
        }
        for w in sys.elements() {
            assert_eq!(sizes[w as usize], nf * (g.q() as usize).pow(sys.length(w)));
        }
        // the B-orbit of the permutation flag of w is exactly the position-w set
        for w in sys.elements() {
            let pf = g.permutation_flag(w);
            assert_eq!(g.position(0, pf), w);
            let mut orbit: Vec<usize> = g.borel().iter().map(|&b| g.act_flag(b, pf)).collect();
            orbit.sort_unstable();
            orbit.dedup();
            let expect: Vec<usize> = (0..nf).filter(|&f| g.position(0, f) == w).collect();
            assert_eq!(orbit, expect);
        }
    }
}

#[test]
fn springer_fiber_examples() {
    let g = FqGroup::build(3, 2).unwrap();
    let id = g.identity();
    assert_eq!(g.springer_fiber(GenSet::empty(), Sign::Minus, id), 21);
    let reg = g.from_matrix(&[vec![1, 1, 0], vec![0, 1, 1], vec![0, 0, 1]]).unwrap();
    assert_eq!(g.springer_fiber(GenSet::empty(), Sign::Minus, reg), 1);
    assert_eq!(g.springer_fiber(GenSet::empty(), Sign::Plus, reg), 1);
    // J = S: a single partial flag; minus needs u = 1, plus needs unipotence
    assert_eq!(g.springer_fiber(GenSet::full(2), Sign::Minus, id), 1);
    assert_eq!(g.springer_fiber(GenSet::full(2), Sign::Minus, reg), 0);
    assert_eq!(g.springer_fiber(GenSet::full(2), Sign::Plus, reg), 1);
}

/// Membership by conjugating into the standard parabolic block shape.
fn in_standard(g: &FqGroup, x: u32, dims: &[usize], sign: Sign) -> bool {
    let n = g.n();
    let block = |r: usize| dims.iter().filter(|&&d| d <= r).count();
    (0..n).all(|r| {
        (0..n).all(|c| {
            let m = g.entry(x, r, c);
            match sign {
                Sign::Minus => block(r) < block(c) || m == (r == c) as u32,
                Sign::Plus => block(r) <= block(c) || m == 0,
            }
        })
    }) && g.is_unipotent(x)
}

#[test]
fn springer_membership_matches_conjugation() {
    for (n, q) in [(2, 2), (3, 2)] {
        let g = FqGroup::build(n, q).unwrap();
        for j in GenSet::all(n - 1) {
            let pf = g.partial_flags(j);
            for (y, chain) in pf.chains.iter().enumerate() {
                let f = pf.refinement[y] as usize;
                let rep = (0..g.order() as u32).find(|&x| g.act_flag(x, 0) == f).unwrap();
                let inv = g.inverse(rep);
                for &u in g.unipotents() {
                    let conj = g.mul(g.mul(inv, u), rep);
                    for sign in [Sign::Minus, Sign::Plus] {
                        assert_eq!(g.in_springer(u, chain, sign), in_standard(&g, conj, &pf.dims, sign));
                    }
                }
            }
        }
    }
}

#[test]
fn pushforward_examples() {
    let g = FqGroup::build(2, 2).unwrap();
    assert_eq!(g.mult_pushforward(GenSet::empty(), Sign::Minus).unwrap(), vec![4, 1]);
    // w = e value is the fixed-point count of the definition
    for g in groups() {
        for j in GenSet::all(g.n() - 1) {
            let pf = g.partial_flags(j);
            let direct: usize = pf
                .chains
                .iter()
                .map(|c| g.unipotents().iter().filter(|&&u| g.act_flag(u, 0) == 0 && g.in_springer(u, c, Sign::Minus)).count())
                .sum();
            assert_eq!(g.mult_pushforward(j, Sign::Minus).unwrap()[0], direct as u64);
        }
    }
}

#[test]
fn pushforward_counts_match_norms() {
    for g in groups() {
        for j in GenSet::all(g.n() - 1) {
            for r in g.verify_main(j).unwrap() {
                assert!(r.pass, "{r:?}");
            }
        }
    }
}

#[test]
fn cell_and_trace_counts_hold() {
    let words2: Vec<Vec<usize>> = vec![vec![], vec![0], vec![0, 0], vec![0, 0, 0, 0]];
    let words3: Vec<Vec<usize>> = vec![vec![], vec![1], vec![0, 1], vec![0, 1, 0], vec![1, 1, 0]];
    for g in groups() {
        let words = if g.n() == 2 { &words2 } else { &words3 };
        for j in GenSet::all(g.n() - 1) {
            for w in words {
                for r in g.verify_cell(j, w).unwrap() {
                    assert!(r.pass, "{r:?}");
                }
            }
            for r in g.verify_trace(j).unwrap() {
                assert!(r.pass, "{r:?}");
            }
        }
    }
}

#[test]
fn word_length_cap() {
    let g = FqGroup::build(3, 2).unwrap();
    assert!(g.steinberg_count(GenSet::empty(), Sign::Plus, &[0; 5]).is_err());
}

#[test]
fn hc_transform_examples() {
    for g in groups() {
        let mut delta = vec![BigRational::zero(); g.order()];
        delta[g.identity() as usize] = BigRational::one();
        let hc = g.hc_transform(&delta).unwrap();
        assert!(hc[0].is_one());
        assert!(hc[1..].iter().all(|x| x.is_zero()));

        let ones = vec![BigRational::one(); g.order()];
        let hc = g.hc_transform(&ones).unwrap();
        let b = BigRational::from_integer(BigInt::from(g.borel().len()));
        assert!(hc.iter().all(|x| *x == b));

        let n = g.n();
        let mut m: Vec<Vec<u32>> = (0..n).map(|r| (0..n).map(|c| (r == c) as u32).collect()).collect();
        m[0][1] = 1;
        let mut bad = vec![BigRational::zero(); g.order()];
        bad[g.from_matrix(&m).unwrap() as usize] = BigRational::one();
        assert!(g.hc_transform(&bad).is_err());
    }
}

#[test]
fn hc_kernels_are_central() {
    for (n, q) in [(2, 2), (2, 3)] {
        let g = FqGroup::build(n, q).unwrap();
        for sign in [Sign::Minus, Sign::Plus] {
            let k = g.hc_kernel(&g.springer_class_function(GenSet::empty(), sign)).unwrap();
            assert!(g.kernel_is_central(&k));
        }
        // a non-central kernel is detected
        let nf = g.num_flags();
        let mut k = vec![BigRational::zero(); nf * nf];
        k[1] = BigRational::one();
        assert!(!g.kernel_is_central(&k));
    }
}
