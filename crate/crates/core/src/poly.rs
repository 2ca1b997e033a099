//! Exact Laurent polynomials in `X^{1/2}`, bivariate polynomials in `a` and
//! `X^{1/2}`, and rational functions built from them.
//!
//! Exponents of `X` are stored doubled, so `X^{3/2}` has key `3` and `X^2`
//! has key `4`. Coefficients are arbitrary-precision integers and zero
//! coefficients are never stored, which makes structural equality the same
//! as mathematical equality.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * X^{dexp/2}`.
    pub fn monomial(c: impl Into<BigInt>, dexp: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(dexp, c);
        }
        Self { terms }
    }

    pub fn x() -> Self {
        Self::monomial(1, 2)
    }

    /// `X^k` for an integer `k`.
    pub fn x_pow(k: i64) -> Self {
        Self::monomial(1, 2 * k)
    }

    /// `X - 1`.
    pub fn x_minus_one() -> Self {
        Self::from_terms([(2, BigInt::one()), (0, -BigInt::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    /// Integer coefficients of `1, X, X^2, ...`.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(i, &c)| (2 * i as i64, BigInt::from(c))))
    }

    /// The quantum integer `[k]_X = (1 - X^k)/(1 - X)`, valid for every integer `k`.
    pub fn q_int(k: i64) -> Self {
        if k >= 0 {
            Self::from_terms((0..k).map(|i| (2 * i, BigInt::one())))
        } else {
            -(Self::q_int(-k).shift(2 * k))
        }
    }

    pub fn add_term(&mut self, dexp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(dexp).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&dexp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, dexp: i64) -> BigInt {
        self.terms.get(&dexp).cloned().unwrap_or_default()
    }

    pub fn min_dexp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_dexp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// True when every exponent is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 0)
    }

    /// Constant polynomial value, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// `(coefficient, doubled exponent)` when the polynomial is a single term.
    pub fn as_monomial(&self) -> Option<(BigInt, i64)> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            Some((c.clone(), *e))
        } else {
            None
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect() }
    }

    /// Multiply by `X^{dexp/2}`.
    pub fn shift(&self, dexp: i64) -> Self {
        Self { terms: self.terms.iter().map(|(e, v)| (e + dexp, v.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Replace `X` by `X^k` for a positive integer `k`.
    pub fn dilate(&self, k: i64) -> Self {
        Self { terms: self.terms.iter().map(|(e, v)| (e * k, v.clone())).collect() }
    }

    /// Greatest common divisor of the coefficients, zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn div_scalar_exact(&self, c: &BigInt) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::NonExactDivision);
        }
        let mut out = BTreeMap::new();
        for (e, v) in &self.terms {
            let (q, r) = v.div_rem(c);
            if !r.is_zero() {
                return Err(Error::NonExactDivision);
            }
            out.insert(*e, q);
        }
        Ok(Self { terms: out })
    }

    /// Exact division. Fails with [`Error::NonExactDivision`] when the divisor
    /// does not divide `self` in the Laurent ring with integer coefficients.
    pub fn exact_div(&self, d: &Self) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::NonExactDivision);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let d_lo = d.min_dexp().unwrap();
        let d_hi = d.max_dexp().unwrap();
        let lead = d.terms[&d_lo].clone();
        let hi_bound = self.max_dexp().unwrap() - d_hi;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((&e, c)) = rem.terms.iter().next() {
            let qe = e - d_lo;
            if qe > hi_bound {
                return Err(Error::NonExactDivision);
            }
            let (qc, r) = c.div_rem(&lead);
            if !r.is_zero() {
                return Err(Error::NonExactDivision);
            }
            for (de, dc) in &d.terms {
                rem.add_term(qe + de, -(dc * &qc));
            }
            quot.add_term(qe, qc);
        }
        Ok(quot)
    }

    /// Evaluate at a rational point. Half-integer exponents need a perfect
    /// square argument.
    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        let needs_root = self.terms.keys().any(|e| e % 2 != 0);
        let root = if needs_root { Some(rational_sqrt(x)?) } else { None };
        if x.is_zero() && self.terms.keys().any(|&e| e < 0) {
            return Err(Error::DomainError("negative power of zero".into()));
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let v = if e % 2 == 0 {
                rational_pow(x, e / 2)
            } else {
                rational_pow(root.as_ref().unwrap(), *e)
            };
            acc += v * BigRational::from_integer(c.clone());
        }
        Ok(acc)
    }

    pub fn eval_int(&self, q: i64) -> Result<BigRational> {
        self.eval(&BigRational::from_integer(BigInt::from(q)))
    }

    /// Value at `X = 1`.
    pub fn at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn to_pretty(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = fmt_monomial(var, *e);
            if mono.is_empty() {
                s.push_str(&a.to_string());
            } else if a.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&format!("{a}*{mono}"));
            }
        }
        s
    }
}

fn fmt_monomial(var: &str, dexp: i64) -> String {
    match dexp {
        0 => String::new(),
        2 => var.to_string(),
        e if e % 2 == 0 => format!("{var}^{}", e / 2),
        e => format!("{var}^({e}/2)"),
    }
}

fn rational_pow(x: &BigRational, k: i64) -> BigRational {
    if k >= 0 {
        num_traits::pow(x.clone(), k as usize)
    } else {
        num_traits::pow(x.recip(), (-k) as usize)
    }
}

fn rational_sqrt(x: &BigRational) -> Result<BigRational> {
    if x.is_negative() {
        return Err(Error::DomainError("square root of a negative number".into()));
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &(&n * &n) != x.numer() || &(&d * &d) != x.denom() {
        return Err(Error::DomainError(format!("{x} is not a perfect square")));
    }
    Ok(BigRational::new(n, d))
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pretty("X"))
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($t:ty, $($tr:ident :: $m:ident),*) => {$(
        impl $tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t { (&self).$m(&rhs) }
        }
        impl $tr<&$t> for $t {
            type Output = $t;
            fn $m(self, rhs: &$t) -> $t { (&self).$m(rhs) }
        }
        impl $tr<$t> for &$t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t { self.$m(&rhs) }
        }
    )*};
}

forward_owned!(LaurentPoly, Add::add, Sub::sub, Mul::mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&(e, c.to_string()))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<(i64, String)> = Vec::deserialize(d)?;
        let mut p = LaurentPoly::zero();
        for (e, c) in raw {
            let c: BigInt = c.parse().map_err(de::Error::custom)?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}

/// Polynomial in `a^{±1}` and `X^{±1/2}` with integer coefficients, keyed by
/// `(a exponent, doubled X exponent)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivarPoly {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_slice(0, &LaurentPoly::one())
    }

    /// `a^k * p(X)`.
    pub fn from_slice(a_exp: i64, p: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for (e, c) in p.terms() {
            out.add_term(a_exp, e, c.clone());
        }
        out
    }

    pub fn add_term(&mut self, a_exp: i64, dexp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((a_exp, dexp)).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(a_exp, dexp));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &BigInt)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn a_degrees(&self) -> BTreeSet<i64> {
        self.terms.keys().map(|k| k.0).collect()
    }

    /// The coefficient of `a^k`, a Laurent polynomial in `X^{1/2}`.
    pub fn a_slice(&self, a_exp: i64) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.terms.range((a_exp, i64::MIN)..=(a_exp, i64::MAX)).map(|(k, c)| (k.1, c.clone())),
        )
    }

    pub fn mul_a_pow(&self, k: i64) -> Self {
        Self { terms: self.terms.iter().map(|(&(a, x), c)| ((a + k, x), c.clone())).collect() }
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for (&(a, x), c) in &self.terms {
            for (e, d) in p.terms() {
                out.add_term(a, x + e, c * d);
            }
        }
        out
    }

    /// Divide every `a`-slice exactly by `p`.
    pub fn exact_div_poly(&self, p: &LaurentPoly) -> Result<Self> {
        let mut out = Self::zero();
        for a in self.a_degrees() {
            out += &Self::from_slice(a, &self.a_slice(a).exact_div(p)?);
        }
        Ok(out)
    }

    /// Substitute `a = 1`.
    pub fn at_a_one(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms.iter().map(|(k, c)| (k.1, c.clone())))
    }

    pub fn to_pretty(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for a in self.a_degrees().into_iter().rev() {
            let slice = self.a_slice(a);
            let am = match a {
                0 => String::new(),
                1 => "a".into(),
                k => format!("a^{k}"),
            };
            if am.is_empty() {
                parts.push(format!("({slice})"));
            } else {
                parts.push(format!("({slice})*{am}"));
            }
        }
        parts.join(" + ")
    }
}

impl AddAssign<&BivarPoly> for BivarPoly {
    fn add_assign(&mut self, rhs: &BivarPoly) {
        for (&(a, x), c) in &rhs.terms {
            self.add_term(a, x, c.clone());
        }
    }
}

impl SubAssign<&BivarPoly> for BivarPoly {
    fn sub_assign(&mut self, rhs: &BivarPoly) {
        for (&(a, x), c) in &rhs.terms {
            self.add_term(a, x, -c);
        }
    }
}

impl Add for &BivarPoly {
    type Output = BivarPoly;
    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &BivarPoly {
    type Output = BivarPoly;
    fn sub(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = BivarPoly::zero();
        for (&(a1, x1), c1) in &self.terms {
            for (&(a2, x2), c2) in &rhs.terms {
                out.add_term(a1 + a2, x1 + x2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        BivarPoly { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

forward_owned!(BivarPoly, Add::add, Sub::sub, Mul::mul);

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pretty())
    }
}

impl Serialize for BivarPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for ((a, x), c) in &self.terms {
            seq.serialize_element(&([a, x], c.to_string()))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for BivarPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<([i64; 2], String)> = Vec::deserialize(d)?;
        let mut p = BivarPoly::zero();
        for ([a, x], c) in raw {
            let c: BigInt = c.parse().map_err(de::Error::custom)?;
            p.add_term(a, x, c);
        }
        Ok(p)
    }
}

/// The `d`-th cyclotomic polynomial in `X`.
pub fn cyclotomic(d: u32) -> LaurentPoly {
    assert!(d >= 1);
    let mut p = LaurentPoly::x_pow(d as i64) - LaurentPoly::one();
    for e in 1..d {
        if d.is_multiple_of(e) {
            p = p.exact_div(&cyclotomic(e)).expect("cyclotomic factor divides X^d - 1");
        }
    }
    p
}

/// Quotient `num / den` of Laurent polynomials.
///
/// Values are kept in a canonical form: integer content removed, the
/// denominator starting at `X^0` with positive leading coefficient, and common
/// cyclotomic factors cancelled. Every denominator that arises in this crate is
/// a product of cyclotomic polynomials, so the canonical form is reduced.
/// Equality is decided by cross multiplication regardless.
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DomainError("zero denominator".into()));
        }
        let mut r = Self { num, den };
        r.canonicalize();
        Ok(r)
    }

    pub fn zero() -> Self {
        Self { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self { num: p, den: LaurentPoly::one() }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::new(LaurentPoly::constant(r.numer().clone()), LaurentPoly::constant(r.denom().clone()))
            .expect("nonzero denominator")
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial value when the denominator is a unit monomial.
    pub fn to_poly(&self) -> Option<LaurentPoly> {
        let (c, e) = self.den.as_monomial()?;
        if c.is_one() {
            Some(self.num.shift(-e))
        } else if (-&c).is_one() {
            Some(-self.num.shift(-e))
        } else {
            self.num.div_scalar_exact(&c).ok().map(|p| p.shift(-e))
        }
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    pub fn scale_poly(&self, p: &LaurentPoly) -> Self {
        Self::new(&self.num * p, self.den.clone()).expect("nonzero denominator")
    }

    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(x)?;
        if d.is_zero() {
            return Err(Error::DomainError(format!("pole at {x}")));
        }
        Ok(self.num.eval(x)? / d)
    }

    fn canonicalize(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentPoly::one();
            return;
        }
        let g = self.num.content().gcd(&self.den.content());
        if !g.is_one() {
            self.num = self.num.div_scalar_exact(&g).unwrap();
            self.den = self.den.div_scalar_exact(&g).unwrap();
        }
        let lo = self.den.min_dexp().unwrap();
        self.num = self.num.shift(-lo);
        self.den = self.den.shift(-lo);
        if self.den.is_integral() {
            let deg = self.den.max_dexp().unwrap() / 2;
            for d in 1..=deg.max(0) as u32 {
                let phi = cyclotomic(d);
                loop {
                    if self.den.max_dexp().unwrap() < phi.max_dexp().unwrap() {
                        break;
                    }
                    match (self.den.exact_div(&phi), self.num.exact_div(&phi)) {
                        (Ok(a), Ok(b)) => {
                            self.den = a;
                            self.num = b;
                        }
                        _ => break,
                    }
                }
            }
        }
        let hi = self.den.max_dexp().unwrap();
        if self.den.coeff(hi).is_negative() {
            self.num = -&self.num;
            self.den = -&self.den;
        }
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RatFunc {}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone()).unwrap();
        }
        RatFunc::new(&self.num * &rhs.den + &rhs.num * &self.den, &self.den * &rhs.den).unwrap()
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den).unwrap()
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

forward_owned!(RatFunc, Add::add, Sub::sub, Mul::mul);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl AddAssign<&RatFunc> for RatFunc {
    fn add_assign(&mut self, rhs: &RatFunc) {
        *self = &*self + rhs;
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Pair<'a> {
            den: &'a LaurentPoly,
            num: &'a LaurentPoly,
        }
        Pair { den: &self.den, num: &self.num }.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_example() {
        let num = LaurentPoly::from_coeffs(&[-1, 0, 1]);
        let den = LaurentPoly::from_coeffs(&[-1, 1]);
        assert_eq!(num.exact_div(&den).unwrap(), LaurentPoly::from_coeffs(&[1, 1]));
        let bad = LaurentPoly::from_coeffs(&[1, 0, 1]);
        assert_eq!(bad.exact_div(&den), Err(Error::NonExactDivision));
    }

    #[test]
    fn half_exponent_eval() {
        let p = LaurentPoly::monomial(1, 1);
        let four = BigRational::from_integer(4.into());
        assert_eq!(p.eval(&four).unwrap(), BigRational::from_integer(2.into()));
        assert!(p.eval(&BigRational::from_integer(2.into())).is_err());
    }

    #[test]
    fn cyclotomics() {
        assert_eq!(cyclotomic(1), LaurentPoly::from_coeffs(&[-1, 1]));
        assert_eq!(cyclotomic(4), LaurentPoly::from_coeffs(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), LaurentPoly::from_coeffs(&[1, -1, 1]));
    }

    #[test]
    fn ratfunc_reduces() {
        let r = RatFunc::new(LaurentPoly::from_coeffs(&[-1, 0, 1]), LaurentPoly::from_coeffs(&[-2, 2]))
            .unwrap();
        assert_eq!(r.num(), &LaurentPoly::from_coeffs(&[1, 1]));
        assert_eq!(r.den(), &LaurentPoly::constant(2));
    }

    #[test]
    fn json_shape() {
        let p = LaurentPoly::from_terms([(1, BigInt::from(3)), (-2, BigInt::from(-1))]);
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"[[-2,"-1"],[1,"3"]]"#);
        let back: LaurentPoly = serde_json::from_str(r#"[[-2,"-1"],[1,"3"]]"#).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn negative_q_integers() {
        assert_eq!(LaurentPoly::q_int(-2), -(LaurentPoly::x_pow(-2) + LaurentPoly::x_pow(-1)));
    }
}
