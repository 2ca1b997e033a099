use hecke_norms::coxeter::Sign;
use hecke_norms::poly::{LaurentPoly, RatFunc};
use hecke_norms::symfunc::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec())
}

#[test]
fn orthogonality() {
    for n in 1..=6 {
        let parts = partitions(n);
        for a in &parts {
            for b in &parts {
                let mut acc = BigRational::zero();
                for mu in &parts {
                    let x = mn_character(a, mu).unwrap() * mn_character(b, mu).unwrap();
                    acc += BigRational::new(x, mu.z());
                }
                assert_eq!(acc, BigRational::from_integer(BigInt::from((a == b) as i32)));
            }
        }
    }
}

#[test]
fn trivial_and_sign_characters() {
    for n in 1..=6u32 {
        for mu in partitions(n) {
            let sign = if (n as usize - mu.len()).is_multiple_of(2) { 1 } else { -1 };
            assert_eq!(mn_character(&p(&[n]), &mu).unwrap(), BigInt::one());
            assert_eq!(mn_character(&Partition::new(vec![1; n as usize]), &mu).unwrap(), BigInt::from(sign));
            let len = class_rep_word(&mu).len() as i64;
            assert_eq!(qmn_character(&p(&[n]), &mu).unwrap(), LaurentPoly::x_pow(len));
            assert_eq!(qmn_character(&Partition::new(vec![1; n as usize]), &mu).unwrap(), LaurentPoly::constant(sign));
        }
    }
}

#[test]
fn q_characters_specialize() {
    for n in 1..=5 {
        for l in partitions(n) {
            for mu in partitions(n) {
                assert_eq!(qmn_character(&l, &mu).unwrap().at_one(), mn_character(&l, &mu).unwrap());
            }
        }
    }
    assert!(qmn_character(&p(&[8]), &p(&[8])).is_err());
}

#[test]
fn conversions_round_trip() {
    let bases = [Basis::Schur, Basis::Elementary, Basis::Homogeneous, Basis::PowerSum, Basis::Monomial];
    for n in 1..=5 {
        for l in partitions(n) {
            for &a in &bases {
                let f = SymFunc::basis_elt(a, l.clone());
                for &b in &bases {
                    assert_eq!(f.convert(b).unwrap().convert(a).unwrap(), f);
                }
            }
        }
    }
    // h_lambda in monomials has nonnegative integer (Kostka-type) coefficients; e_n = m_{1^n}
    let e3 = SymFunc::basis_elt(Basis::Elementary, p(&[3])).convert(Basis::Monomial).unwrap();
    assert_eq!(e3, SymFunc::basis_elt(Basis::Monomial, p(&[1, 1, 1])));
    assert!(SymFunc::basis_elt(Basis::Schur, p(&[9])).convert(Basis::PowerSum).is_err());
}

#[test]
fn hall_pairing_examples() {
    let s = |v: &[u32]| SymFunc::basis_elt(Basis::Schur, p(v));
    for n in 1..=5 {
        for l in partitions(n) {
            let f = SymFunc::basis_elt(Basis::Schur, l.clone());
            assert_eq!(hall_pair(&f, &f).unwrap(), RatFunc::one());
        }
    }
    let p2 = SymFunc::basis_elt(Basis::PowerSum, p(&[2]));
    assert_eq!(hall_pair(&p2, &p2).unwrap(), RatFunc::from_int(2));
    let e3 = SymFunc::basis_elt(Basis::Elementary, p(&[3]));
    assert_eq!(hall_pair(&e3, &s(&[1, 1, 1])).unwrap(), RatFunc::one());
    assert!(hall_pair(&e3, &s(&[2])).is_err());
}

#[test]
fn plethysm_examples() {
    let p1 = SymFunc::basis_elt(Basis::PowerSum, p(&[1]));
    let img = p1.plethysm_xq().unwrap();
    let expect = RatFunc::new(LaurentPoly::one(), LaurentPoly::x_minus_one()).unwrap();
    assert_eq!(img.coeff(&p(&[1])), expect);
    let t = lascoux_target(1, &[1], Sign::Minus).unwrap();
    assert_eq!(t, SymFunc::basis_elt(Basis::Schur, p(&[1])));
}

#[test]
fn plethysm_adjointness() {
    for n in 1..=5 {
        for l in partitions(n) {
            for nu in partitions(n) {
                let s = SymFunc::basis_elt(Basis::Schur, l.clone());
                let h = SymFunc::basis_elt(Basis::Homogeneous, nu.clone());
                let a = hall_pair(&s.plethysm_xq().unwrap(), &h).unwrap();
                let b = hall_pair(&s, &h.plethysm_xq().unwrap()).unwrap();
                assert_eq!(a, b);
            }
        }
    }
}

#[test]
fn composition_bijection() {
    use hecke_norms::coxeter::GenSet;
    assert_eq!(composition_to_j(3, &[3]).unwrap(), GenSet::full(2));
    assert_eq!(composition_to_j(3, &[1, 1, 1]).unwrap(), GenSet::empty());
    assert_eq!(composition_to_j(3, &[1, 2]).unwrap(), GenSet::from_gens([1]));
    assert_eq!(composition_to_j(4, &[2, 2]).unwrap(), GenSet::from_gens([0, 2]));
    assert!(composition_to_j(3, &[1, 1]).is_err());
    assert_eq!(compositions(4).len(), 8);
}

#[test]
fn lascoux_identities_small() {
    for n in 2..=4 {
        for nu in compositions(n) {
            for sign in [Sign::Minus, Sign::Plus] {
                let r = verify_lascoux(n, &nu, sign).unwrap();
                assert!(r.pass, "{r:?}");
            }
        }
    }
}

#[test]
fn tau_to_e_h_small() {
    for n in 2..=5 {
        for nu in compositions(n) {
            for sign in [Sign::Minus, Sign::Plus] {
                let r = verify_tau_to_e_h(n, &nu, sign).unwrap();
                assert!(r.pass, "{r:?}");
            }
        }
    }
}

#[test]
fn reflection_row_n4() {
    // traces on the 4-dim induced module minus the index character, computed by hand
    let parts = partitions(4);
    let expect = [
        LaurentPoly::from_coeffs(&[0, 0, -1]),
        LaurentPoly::from_coeffs(&[0, -1, 1]),
        LaurentPoly::from_coeffs(&[0, -2, 1]),
        LaurentPoly::from_coeffs(&[-1, 2]),
        LaurentPoly::from_coeffs(&[3]),
    ];
    for (mu, e) in parts.iter().zip(expect.iter()) {
        assert_eq!(&qmn_character(&p(&[3, 1]), mu).unwrap(), e, "{mu}");
    }
}
