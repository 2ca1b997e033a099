use hecke_norms::coxeter::{CoxeterSystem, Sign};
use hecke_norms::hecke::HeckeElt;
use hecke_norms::homfly::*;
use hecke_norms::poly::{BivarPoly, LaurentPoly, RatFunc};
use hecke_norms::Error;
use num_bigint::BigInt;
use proptest::prelude::*;

fn bw(n: usize, text: &str) -> BraidWord {
    BraidWord::parse(n, text).unwrap()
}

fn homfly(n: usize, text: &str) -> HomflyValue {
    bw_homfly(&bw(n, text)).unwrap()
}

/// Polynomial in `a` and `X^{1/2}` from `(a exponent, doubled X exponent, coefficient)`.
fn bivar(terms: &[(i64, i64, i64)]) -> BivarPoly {
    let mut p = BivarPoly::zero();
    for &(a, x, c) in terms {
        p.add_term(a, x, BigInt::from(c));
    }
    p
}

fn all_words(rank: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..rank).map(move |s| {
                    let mut v = w.clone();
                    v.push(s);
                    v
                })
            })
            .collect();
    }
    out
}

#[test]
fn braid_parsing() {
    let b = bw(3, "1 -2 1");
    assert_eq!(b.letters(), &[1, -2, 1]);
    assert_eq!(b.writhe(), 1);
    assert!(!b.is_positive());
    assert!(matches!(BraidWord::parse(3, "3"), Err(Error::InvalidInput(_))));
    assert!(matches!(BraidWord::parse(3, "0"), Err(Error::InvalidInput(_))));
    assert!(matches!(BraidWord::parse(3, "x"), Err(Error::InvalidInput(_))));
    assert!(matches!(bw_homfly(&bw(7, "1")), Err(Error::TooLarge(_))));
}

#[test]
fn braid_to_hecke_examples() {
    let sys = CoxeterSystem::parse("A1").unwrap();
    let h = bw_to_hecke(&bw(2, "1")).unwrap();
    assert_eq!(h, HeckeElt::basis(&sys, sys.generator(0)).scale(&LaurentPoly::monomial(1, -1)));
    assert_eq!(bw_to_hecke(&bw(2, "")).unwrap(), HeckeElt::one(&sys));
    assert_eq!(bw_to_hecke(&bw(2, "1 -1")).unwrap(), HeckeElt::one(&sys));
    let sys3 = CoxeterSystem::parse("A2").unwrap();
    assert_eq!(bw_to_hecke(&bw(3, "2 1 -1 -2")).unwrap(), HeckeElt::one(&sys3));
}

#[test]
fn unknot_presentations() {
    assert!(bw_homfly(&bw(1, "")).unwrap().is_one());
    for (n, text) in [(2, "1"), (2, "-1"), (3, "1 2"), (3, "-1 2"), (3, "2 -1"), (4, "1 2 3"), (4, "1 -2 3"), (4, "3 2 1")] {
        assert!(homfly(n, text).is_one(), "{text} on {n} strands");
    }
    let u = bw(2, "1");
    assert!(bw_homfly(&u.stabilize(Sign::Plus)).unwrap().is_one());
    assert!(bw_homfly(&u.stabilize(Sign::Minus).stabilize(Sign::Plus)).unwrap().is_one());
}

#[test]
fn known_links() {
    // trefoil: a^2 (X + X^{-1}) - a^4, with two a-degrees
    let trefoil = homfly(2, "1 1 1");
    assert_eq!(trefoil.numerator(), &bivar(&[(2, 2, 1), (2, -2, 1), (4, 0, -1)]));
    assert_eq!(trefoil.a_degrees(), vec![2, 4]);
    assert_eq!(homfly(2, "-1 -1 -1").numerator(), &bivar(&[(-2, 2, 1), (-2, -2, 1), (-4, 0, -1)]));
    // figure eight: a^2 + a^{-2} - X + 1 - X^{-1}
    assert_eq!(homfly(3, "1 -2 1 -2").numerator(), &bivar(&[(2, 0, 1), (-2, 0, 1), (0, 2, -1), (0, 0, 1), (0, -2, -1)]));
    // two-component unlink: (a - a^{-1}) / z
    let unlink = homfly(2, "");
    assert_eq!(unlink.z_power(), 1);
    assert_eq!(unlink.numerator(), &bivar(&[(1, 0, 1), (-1, 0, -1)]));
    // Hopf link from the skein relation on σ^2, σ^0 and σ
    let hopf = homfly(2, "1 1");
    let lhs = hopf.mul_a_pow(-1).add(&homfly(2, "").mul_a_pow(1).mul(&HomflyValue::new(-&BivarPoly::one(), 0)));
    let rhs = homfly(2, "1").mul_poly(&z_poly()).mul(&HomflyValue::new(-&BivarPoly::one(), 0));
    assert_eq!(lhs, rhs);
}

fn skein_holds(n: usize, before: &str, after: &str, gen: i32) {
    // a^{-1} P(β σ) - a P(β σ^{-1}) = -z P(β) with z = X^{1/2} - X^{-1/2}
    let b = bw(n, before);
    let c = bw(n, after);
    let plus = b.concat(&BraidWord::new(n, vec![gen]).unwrap()).unwrap().concat(&c).unwrap();
    let minus = b.concat(&BraidWord::new(n, vec![-gen]).unwrap()).unwrap().concat(&c).unwrap();
    let zero = b.concat(&c).unwrap();
    let neg = HomflyValue::new(-&BivarPoly::one(), 0);
    let lhs = bw_homfly(&plus).unwrap().mul_a_pow(-1).add(&bw_homfly(&minus).unwrap().mul_a_pow(1).mul(&neg));
    let rhs = bw_homfly(&zero).unwrap().mul_poly(&-z_poly());
    assert_eq!(lhs, rhs, "{before} | {gen} | {after}");
}

#[test]
fn skein_relation() {
    skein_holds(2, "1 1", "", 1);
    skein_holds(3, "1 2", "-1 2", 2);
    skein_holds(3, "1 1 2", "2 2", 1);
    skein_holds(4, "1 2 3", "-2 1", 3);
}

#[test]
fn slice_examples() {
    let h = bw_to_hecke(&bw(2, "1")).unwrap();
    let sys = CoxeterSystem::parse("A1").unwrap();
    let ts = HeckeElt::basis(&sys, sys.generator(0));
    assert!(mu_slice(&ts, 1, Route::Jm).unwrap().is_zero());
    assert_eq!(mu_slice(&ts, 0, Route::Jm).unwrap(), RatFunc::one());
    assert_eq!(mu_slice(&h, 0, Route::Tower).unwrap(), RatFunc::from_int(-1));
    assert!(matches!(mu_slice(&h, 2, Route::Jm), Err(Error::InvalidInput(_))));
    assert_eq!(bw_mu_slice(&bw(1, ""), 0, Route::Tower).unwrap(), RatFunc::one());
}

#[test]
fn zeta_and_jm_routes_agree() {
    for n in 2..=4usize {
        let sys = CoxeterSystem::parse(&format!("A{}", n - 1)).unwrap();
        let max_len = if n == 4 { 5 } else { 6 };
        for len in 0..=max_len {
            for w in all_words(n - 1, len) {
                let h = HeckeElt::from_word(&sys, &w);
                for k in 0..n {
                    assert_eq!(mu_slice(&h, k, Route::Zeta).unwrap(), mu_slice(&h, k, Route::Jm).unwrap(), "n={n} {w:?} k={k}");
                }
            }
        }
    }
}

#[test]
fn calibration_table() {
    for n in 1..=4usize {
        let cal = calibrate(n).unwrap();
        assert_eq!(cal.factors.len(), n);
        for f in &cal.factors {
            let sign = if (n - 1 - f.k) % 2 == 0 { 1 } else { -1 };
            assert_eq!((f.sign, f.x_half, f.z_pow), (sign, n as i64 - 1, 0), "n={n} k={}", f.k);
        }
    }
}

#[test]
fn calibrated_jm_matches_tower_on_twisted_braids() {
    for (n, text) in [(2, "1 1 1"), (3, "1 2 2 1 -2"), (3, "2 2 2 1"), (4, "1 3 2 -1 3")] {
        let cal = calibrate(n).unwrap();
        let b = bw(n, text).concat(&BraidWord::full_twist(n).unwrap()).unwrap();
        for f in &cal.factors {
            let jm = bw_mu_slice(&b, f.k, Route::Jm).unwrap();
            assert_eq!(bw_mu_slice(&b, f.k, Route::Tower).unwrap(), &jm * &f.to_ratfunc());
        }
    }
}

#[test]
fn kalman_identity() {
    assert!(bw_kalman_check(&bw(3, "")).unwrap());
    assert!(bw_kalman_check(&bw(3, "1 2")).unwrap());
    assert!(bw_kalman_check(&bw(4, "1 2 3 1 -2")).unwrap());
    assert!(bw_kalman_check(&bw(2, "-1 -1 -1")).unwrap());
}

fn include(h: &HeckeElt, big: &std::sync::Arc<CoxeterSystem>) -> HeckeElt {
    let small = h.system().clone();
    let mut out = HeckeElt::zero(big);
    for (w, c) in h.terms() {
        out.add_assign(&HeckeElt::from_word(big, &small.reduced_word(w)).scale(c));
    }
    out
}

#[test]
fn markov_conditions() {
    let a_step = HomflyValue::new(bivar(&[(-1, 1, -1)]), 0);
    let delta = HomflyValue::new(bivar(&[(1, 0, 1), (-1, 0, -1)]), 1);
    for n in 2..=4usize {
        let small = CoxeterSystem::parse(&format!("A{}", n - 1)).unwrap();
        let big = CoxeterSystem::parse(&format!("A{n}")).unwrap();
        for (i, w) in small.elements().enumerate().step_by(3) {
            // a sparse test element with varied coefficients
            let beta = HeckeElt::basis(&small, w)
                .scale(&LaurentPoly::from_coeffs(&[1, i as i64 % 3 - 1]))
                .add(&HeckeElt::basis(&small, small.inverse(w)).scale(&LaurentPoly::monomial(2, -1)))
                .unwrap();
            let mu = ocneanu_mu(&beta).unwrap();
            let up = include(&beta, &big);
            assert_eq!(ocneanu_mu(&up.rmul_gen(n - 1)).unwrap(), mu.mul(&a_step));
            assert_eq!(ocneanu_mu(&up).unwrap(), mu.mul(&delta));
            let inv = ocneanu_mu(&up.rmul_gen_inv(n - 1)).unwrap();
            assert_eq!(inv.mul(&a_step), mu);
        }
    }
}

#[test]
fn slices_from_cells() {
    for n in 2..=4usize {
        let max_len = if n == 4 { 4 } else { 5 };
        for len in 0..=max_len {
            for w in all_words(n - 1, len) {
                for k in 0..n {
                    let (lhs, rhs) = markov_cell_sides(n, &w, k).unwrap();
                    assert_eq!(lhs, rhs, "n={n} {w:?} k={k}");
                }
            }
        }
    }
}

fn braid_strategy() -> impl Strategy<Value = BraidWord> {
    (2usize..=4).prop_flat_map(|n| {
        prop::collection::vec((1..n as i32, any::<bool>()), 0..7)
            .prop_map(move |ls| BraidWord::new(n, ls.into_iter().map(|(g, p)| if p { g } else { -g }).collect()).unwrap())
    })
}

fn splice(b: &BraidWord, at: usize, insert: &[i32]) -> BraidWord {
    let at = at % (b.len() + 1);
    let mut ls = b.letters()[..at].to_vec();
    ls.extend_from_slice(insert);
    ls.extend_from_slice(&b.letters()[at..]);
    BraidWord::new(b.strands(), ls).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn invariant_under_free_reduction(b in braid_strategy(), at in 0usize..8, g in 1i32..4, pos in any::<bool>()) {
        let g = 1 + (g - 1) % (b.strands() as i32 - 1);
        let pair = if pos { [g, -g] } else { [-g, g] };
        prop_assert_eq!(bw_homfly(&splice(&b, at, &pair)).unwrap(), bw_homfly(&b).unwrap());
    }

    #[test]
    fn invariant_under_braid_relations(b in braid_strategy(), at in 0usize..8, g in 1i32..4) {
        prop_assume!(b.strands() >= 3);
        let g = 1 + (g - 1) % (b.strands() as i32 - 2);
        // inserting (σ_g σ_{g+1} σ_g)(σ_{g+1} σ_g σ_{g+1})^{-1} is the braid relation
        let rel = [g, g + 1, g, -(g + 1), -g, -(g + 1)];
        prop_assert_eq!(bw_homfly(&splice(&b, at, &rel)).unwrap(), bw_homfly(&b).unwrap());
        // far commutation
        if b.strands() >= 4 {
            let far = [1, 3, -1, -3];
            prop_assert_eq!(bw_homfly(&splice(&b, at, &far)).unwrap(), bw_homfly(&b).unwrap());
        }
    }

    #[test]
    fn invariant_under_conjugation(b in braid_strategy(), g in 1i32..4, pos in any::<bool>()) {
        let g = 1 + (g - 1) % (b.strands() as i32 - 1);
        let g = if pos { g } else { -g };
        let c = BraidWord::new(b.strands(), vec![g]).unwrap();
        let conj = c.concat(&b).unwrap().concat(&c.inverse()).unwrap();
        prop_assert_eq!(bw_homfly(&conj).unwrap(), bw_homfly(&b).unwrap());
        // cyclic rotation
        if !b.is_empty() {
            let mut ls = b.letters()[1..].to_vec();
            ls.push(b.letters()[0]);
            let rot = BraidWord::new(b.strands(), ls).unwrap();
            prop_assert_eq!(bw_homfly(&rot).unwrap(), bw_homfly(&b).unwrap());
        }
    }

    #[test]
    fn invariant_under_stabilization(b in braid_strategy(), pos in any::<bool>()) {
        prop_assume!(b.strands() <= 4);
        let s = b.stabilize(if pos { Sign::Plus } else { Sign::Minus });
        prop_assert_eq!(bw_homfly(&s).unwrap(), bw_homfly(&b).unwrap());
    }

    #[test]
    fn kalman_on_random_braids(b in braid_strategy()) {
        prop_assert!(bw_kalman_check(&b).unwrap());
    }

    #[test]
    fn a_degrees_have_parity_of_strands(b in braid_strategy()) {
        let n = b.strands() as i64;
        let mu = ocneanu_mu(&bw_to_hecke(&b).unwrap()).unwrap();
        for d in mu.a_degrees() {
            prop_assert!(d.abs() < n && (d + n - 1) % 2 == 0);
        }
    }
}
