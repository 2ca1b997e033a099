use hecke_norms::poly::{cyclotomic, BivarPoly, LaurentPoly, RatFunc};
use hecke_norms::Error;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn poly_strategy() -> impl Strategy<Value = LaurentPoly> {
    (prop::collection::vec(-5i64..=5, 0..6), -6i64..=6)
        .prop_map(|(cs, shift)| LaurentPoly::from_coeffs(&cs).shift(shift))
}

fn bivar_strategy() -> impl Strategy<Value = BivarPoly> {
    prop::collection::vec((-2i64..=2, -4i64..=4, -3i64..=3), 0..5).prop_map(|ts| {
        let mut p = BivarPoly::zero();
        for (a, x, c) in ts {
            p.add_term(a, x, BigInt::from(c));
        }
        p
    })
}

#[test]
fn basic_values() {
    let x = LaurentPoly::x();
    assert_eq!(&x * &x, LaurentPoly::x_pow(2));
    assert_eq!(LaurentPoly::x_minus_one(), &x - &LaurentPoly::one());
    assert_eq!(LaurentPoly::q_int(3), LaurentPoly::from_coeffs(&[1, 1, 1]));
    assert_eq!(LaurentPoly::q_int(0), LaurentPoly::zero());
    assert_eq!(LaurentPoly::q_int(-2), -LaurentPoly::from_coeffs(&[0, 1, 1]).shift(-6));
    assert_eq!(LaurentPoly::from_coeffs(&[1, 2, 3]).at_one(), BigInt::from(6));
    assert_eq!(LaurentPoly::from_coeffs(&[1, 0, 1]).to_pretty("X"), "X^2 + 1");
    // half-integer exponents
    let h = LaurentPoly::monomial(1, 1);
    assert_eq!(&h * &h, x);
    assert!(!h.is_integral());
}

#[test]
fn cyclotomic_factorization() {
    for n in 1..=12u32 {
        let mut prod = LaurentPoly::one();
        for d in (1..=n).filter(|d| n % d == 0) {
            prod = &prod * &cyclotomic(d);
        }
        assert_eq!(prod, LaurentPoly::x_pow(n as i64) - LaurentPoly::one());
    }
    assert_eq!(cyclotomic(6), LaurentPoly::from_coeffs(&[1, -1, 1]));
}

#[test]
fn exact_division() {
    let a = LaurentPoly::from_coeffs(&[1, 1, 1]);
    let b = LaurentPoly::x_minus_one();
    assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    assert_eq!(a.exact_div(&b), Err(Error::NonExactDivision));
    assert_eq!(a.exact_div(&LaurentPoly::zero()), Err(Error::NonExactDivision));
    assert_eq!(LaurentPoly::from_coeffs(&[2, 4]).div_scalar_exact(&BigInt::from(2)).unwrap(), LaurentPoly::from_coeffs(&[1, 2]));
}

#[test]
fn evaluation() {
    let p = LaurentPoly::from_coeffs(&[1, 0, 1]).shift(-2);
    assert_eq!(p.eval_int(2).unwrap(), BigRational::new(5.into(), 2.into()));
    let h = LaurentPoly::monomial(1, 1);
    assert_eq!(h.eval_int(4).unwrap(), BigRational::from_integer(2.into()));
    assert!(h.eval_int(2).is_err());
}

#[test]
fn ratfunc_canonical_form() {
    let num = LaurentPoly::x_pow(2) - LaurentPoly::one();
    let r = RatFunc::new(num.clone(), LaurentPoly::x_minus_one()).unwrap();
    assert_eq!(r.to_poly(), Some(LaurentPoly::from_coeffs(&[1, 1])));
    assert!(RatFunc::new(num, LaurentPoly::zero()).is_err());
    let half = RatFunc::new(LaurentPoly::one(), LaurentPoly::constant(2)).unwrap();
    assert_eq!(&half + &half, RatFunc::one());
    assert_eq!(RatFunc::from_int(3).recip().unwrap(), RatFunc::new(LaurentPoly::one(), LaurentPoly::constant(3)).unwrap());
}

#[test]
fn bivar_slices() {
    let mut p = BivarPoly::zero();
    p.add_term(2, 2, BigInt::from(1));
    p.add_term(2, -2, BigInt::from(1));
    p.add_term(4, 0, BigInt::from(-1));
    assert_eq!(p.a_degrees().into_iter().collect::<Vec<_>>(), vec![2, 4]);
    assert_eq!(p.a_slice(2), LaurentPoly::from_coeffs(&[0, 1]) + LaurentPoly::x_pow(-1));
    assert_eq!(p.at_a_one(), LaurentPoly::from_coeffs(&[-1, 1]) + LaurentPoly::x_pow(-1));
    assert_eq!(p.to_pretty(), "(-1)*a^4 + (X + X^-1)*a^2");
}

#[test]
fn serde_round_trip() {
    let p = LaurentPoly::from_coeffs(&[3, 0, -7]).shift(-3);
    let text = serde_json::to_string(&p).unwrap();
    let back: LaurentPoly = serde_json::from_str(&text).unwrap();
    assert_eq!(back, p);
    let mut b = BivarPoly::zero();
    b.add_term(-1, 3, BigInt::from(5));
    let text = serde_json::to_string(&b).unwrap();
    let back: BivarPoly = serde_json::from_str(&text).unwrap();
    assert_eq!(back, b);
}

proptest! {
    #[test]
    fn laurent_ring_axioms(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn laurent_division_inverts_multiplication(a in poly_strategy(), b in poly_strategy()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly_strategy(), b in poly_strategy(), r in 2i64..4) {
        let q = r * r;
        let (ea, eb) = (a.eval_int(q).unwrap(), b.eval_int(q).unwrap());
        prop_assert_eq!((&a * &b).eval_int(q).unwrap(), &ea * &eb);
        prop_assert_eq!((&a + &b).eval_int(q).unwrap(), ea + eb);
    }

    #[test]
    fn bivar_ring_axioms(a in bivar_strategy(), b in bivar_strategy(), c in bivar_strategy()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &BivarPoly::one(), a.clone());
    }

    #[test]
    fn ratfunc_field_operations(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        prop_assume!(!b.is_zero() && !c.is_zero());
        let r = RatFunc::new(a.clone(), b.clone()).unwrap();
        let s = RatFunc::new(c.clone(), b.clone()).unwrap();
        prop_assert_eq!(&r * &RatFunc::from_poly(b.clone()), RatFunc::from_poly(a.clone()));
        prop_assert_eq!(&r + &s, RatFunc::new(&a + &c, b.clone()).unwrap());
        let t = RatFunc::from_poly(c.clone());
        prop_assert_eq!((&r * &t).div(&t).unwrap(), r);
    }
}
