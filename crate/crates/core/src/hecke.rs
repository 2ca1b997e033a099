//! The Iwahori-Hecke algebra `H_W` over `Z[X^{±1/2}]` in the standard basis.
//!
//! Quadratic relation: `(T_s - X)(T_s + 1) = 0`, so
//! `T_s T_w = T_{sw}` if `l(sw) > l(w)` and `X T_{sw} + (X - 1) T_w` otherwise.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_rational::BigRational;
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::coxeter::{CoxeterSystem, Family, GenSet, Sign};
use crate::error::{Error, Result};
use crate::par;
use crate::poly::LaurentPoly;

#[derive(Clone, Debug)]
pub struct HeckeElt {
    sys: Arc<CoxeterSystem>,
    terms: BTreeMap<u32, LaurentPoly>,
}

impl PartialEq for HeckeElt {
    fn eq(&self, other: &Self) -> bool {
        self.sys == other.sys && self.terms == other.terms
    }
}

fn add_into(map: &mut BTreeMap<u32, LaurentPoly>, w: u32, c: &LaurentPoly) {
    if c.is_zero() {
        return;
    }
    let slot = map.entry(w).or_default();
    *slot += c;
    if slot.is_zero() {
        map.remove(&w);
    }
}

impl HeckeElt {
    pub fn zero(sys: &Arc<CoxeterSystem>) -> Self {
        Self { sys: sys.clone(), terms: BTreeMap::new() }
    }

    pub fn one(sys: &Arc<CoxeterSystem>) -> Self {
        Self::basis(sys, 0)
    }

    pub fn basis(sys: &Arc<CoxeterSystem>, w: u32) -> Self {
        Self::monomial(sys, w, LaurentPoly::one())
    }

    pub fn monomial(sys: &Arc<CoxeterSystem>, w: u32, c: LaurentPoly) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        Self { sys: sys.clone(), terms }
    }

    /// `T_{s_1} T_{s_2} ... T_{s_k}` for an arbitrary (not necessarily reduced) word.
    pub fn from_word(sys: &Arc<CoxeterSystem>, word: &[usize]) -> Self {
        word.iter().fold(Self::one(sys), |h, &s| h.rmul_gen(s))
    }

    pub fn system(&self) -> &Arc<CoxeterSystem> {
        &self.sys
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &LaurentPoly)> + '_ {
        self.terms.iter().map(|(w, c)| (*w, c))
    }

    pub fn coeff(&self, w: u32) -> LaurentPoly {
        self.terms.get(&w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.sys == other.sys {
            Ok(())
        } else {
            Err(Error::SystemMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            add_into(&mut out.terms, *w, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&LaurentPoly::constant(-1)))
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert!(self.sys == other.sys, "Hecke elements from different systems");
        for (w, c) in &other.terms {
            add_into(&mut self.terms, *w, c);
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero(&self.sys);
        for (w, v) in &self.terms {
            add_into(&mut out.terms, *w, &(v * c));
        }
        out
    }

    /// `T_s * self`.
    pub fn lmul_gen(&self, s: usize) -> Self {
        let sys = &self.sys;
        let mut out = BTreeMap::new();
        for (&w, c) in &self.terms {
            let sw = sys.lmul(s, w);
            if sys.length(sw) > sys.length(w) {
                add_into(&mut out, sw, c);
            } else {
                let xc = c.shift(2);
                add_into(&mut out, w, &(&xc - c));
                add_into(&mut out, sw, &xc);
            }
        }
        Self { sys: sys.clone(), terms: out }
    }

    /// `self * T_s`.
    pub fn rmul_gen(&self, s: usize) -> Self {
        let sys = &self.sys;
        let mut out = BTreeMap::new();
        for (&w, c) in &self.terms {
            let ws = sys.rmul(w, s);
            if sys.length(ws) > sys.length(w) {
                add_into(&mut out, ws, c);
            } else {
                let xc = c.shift(2);
                add_into(&mut out, w, &(&xc - c));
                add_into(&mut out, ws, &xc);
            }
        }
        Self { sys: sys.clone(), terms: out }
    }

    /// `self * T_s^{-1}`, using `T_s^{-1} = X^{-1} T_s + (X^{-1} - 1)`.
    pub fn rmul_gen_inv(&self, s: usize) -> Self {
        let a = self.rmul_gen(s).scale(&LaurentPoly::x_pow(-1));
        let b = self.scale(&(LaurentPoly::x_pow(-1) - LaurentPoly::one()));
        a.add(&b).unwrap()
    }

    /// `T_s^{-1} * self`.
    pub fn lmul_gen_inv(&self, s: usize) -> Self {
        let a = self.lmul_gen(s).scale(&LaurentPoly::x_pow(-1));
        let b = self.scale(&(LaurentPoly::x_pow(-1) - LaurentPoly::one()));
        a.add(&b).unwrap()
    }

    /// `T_w * self`.
    pub fn lmul_basis(&self, w: u32) -> Self {
        let word = self.sys.reduced_word(w);
        word.iter().rev().fold(self.clone(), |h, &s| h.lmul_gen(s))
    }

    /// `self * T_w`.
    pub fn rmul_basis(&self, w: u32) -> Self {
        let word = self.sys.reduced_word(w);
        word.iter().fold(self.clone(), |h, &s| h.rmul_gen(s))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(&self.sys);
        if self.terms.len() <= other.terms.len() {
            for (&w, c) in &self.terms {
                out.add_assign(&other.lmul_basis(w).scale(c));
            }
        } else {
            for (&w, c) in &other.terms {
                out.add_assign(&self.rmul_basis(w).scale(c));
            }
        }
        Ok(out)
    }

    /// The symmetrizing trace: the coefficient of `T_e`.
    pub fn tau(&self) -> LaurentPoly {
        self.coeff(0)
    }

    /// `tau(self * other)`, using `tau(T_x T_y) = delta_{x, y^{-1}} X^{l(x)}`.
    pub fn tau_product(&self, other: &Self) -> Result<LaurentPoly> {
        self.check(other)?;
        let mut acc = LaurentPoly::zero();
        for (&w, c) in &self.terms {
            if let Some(d) = other.terms.get(&self.sys.inverse(w)) {
                acc += &(c * d).shift(2 * self.sys.length(w) as i64);
            }
        }
        Ok(acc)
    }

    pub fn commutes_with_gen(&self, s: usize) -> bool {
        self.lmul_gen(s) == self.rmul_gen(s)
    }

    pub fn is_central(&self) -> bool {
        (0..self.sys.rank()).all(|s| self.commutes_with_gen(s))
    }

    /// Substitute `X = q` in every coefficient.
    pub fn specialize(&self, q: i64) -> Result<BTreeMap<u32, BigRational>> {
        let mut out = BTreeMap::new();
        for (&w, c) in &self.terms {
            out.insert(w, c.eval_int(q)?);
        }
        Ok(out)
    }
}

impl Serialize for HeckeElt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            coef: &'a LaurentPoly,
            word: Vec<usize>,
        }
        let mut rows: Vec<(u32, Vec<usize>, &LaurentPoly)> = self
            .terms
            .iter()
            .map(|(&w, c)| (self.sys.length(w), self.sys.reduced_word(w).iter().map(|s| s + 1).collect(), c))
            .collect();
        rows.sort();
        let mut seq = s.serialize_seq(Some(rows.len()))?;
        for (_, word, coef) in rows {
            seq.serialize_element(&Term { coef, word })?;
        }
        seq.end()
    }
}

/// `X^{-l(v)} T_{v^{-1}} T_v`.
pub fn norm_term(sys: &Arc<CoxeterSystem>, v: u32) -> HeckeElt {
    HeckeElt::basis(sys, v)
        .lmul_basis(sys.inverse(v))
        .scale(&LaurentPoly::x_pow(-(sys.length(v) as i64)))
}

fn sum_all(sys: &Arc<CoxeterSystem>, parts: Vec<HeckeElt>) -> HeckeElt {
    let mut out = HeckeElt::zero(sys);
    for p in parts {
        out.add_assign(&p);
    }
    out
}

/// `sum_{v in vs} X^{-l(v)} T_{v^{-1}} T_v`.
pub fn norm_sum(sys: &Arc<CoxeterSystem>, vs: &[u32]) -> HeckeElt {
    sum_all(sys, par::map(vs, |&v| norm_term(sys, v)))
}

/// Relative norm `N_J^S(alpha) = sum_{v in W^{J,-}} X^{-l(v)} T_{v^{-1}} alpha T_v`.
///
/// `alpha` must be supported on `W_J` and commute with `T_s` for `s` in `J`.
pub fn relative_norm(j: GenSet, alpha: &HeckeElt) -> Result<HeckeElt> {
    let sys = alpha.system().clone();
    let wj = sys.parabolic(j);
    if alpha.terms().any(|(w, _)| wj.binary_search(&w).is_err()) {
        return Err(Error::NotCentralInput);
    }
    if !j.iter().all(|s| alpha.commutes_with_gen(s)) {
        return Err(Error::NotCentralInput);
    }
    let reps = sys.coset_reps_minus(j);
    let parts = par::map(&reps, |&v| {
        alpha
            .rmul_basis(v)
            .lmul_basis(sys.inverse(v))
            .scale(&LaurentPoly::x_pow(-(sys.length(v) as i64)))
    });
    Ok(sum_all(&sys, parts))
}

/// `Sigma_{J,-}` sums over `W^{J,-}`, `Sigma_{J,+}` over `W^{J,+}`.
pub fn sigma(sys: &Arc<CoxeterSystem>, j: GenSet, sign: Sign) -> HeckeElt {
    let reps = match sign {
        Sign::Minus => sys.coset_reps_minus(j),
        Sign::Plus => sys.coset_reps_plus(j),
    };
    norm_sum(sys, &reps)
}

/// `zeta_I^-` sums over `Asc(v) = I`, `zeta_I^+` over `Des(v) = I`.
pub fn zeta(sys: &Arc<CoxeterSystem>, i: GenSet, sign: Sign) -> HeckeElt {
    let vs: Vec<u32> = sys
        .elements()
        .filter(|&v| match sign {
            Sign::Minus => sys.left_ascents(v) == i,
            Sign::Plus => sys.left_descents(v) == i,
        })
        .collect();
    norm_sum(sys, &vs)
}

/// The full twist `X^{-l(w_0)} T_{w_0}^2`.
pub fn full_twist(sys: &Arc<CoxeterSystem>) -> HeckeElt {
    norm_term(sys, sys.longest())
}

fn require_type_a(sys: &CoxeterSystem) -> Result<()> {
    if sys.ty().family == Family::A {
        Ok(())
    } else {
        Err(Error::Unsupported("Jucys-Murphy elements need type A".into()))
    }
}

/// `JM_k = X^{-k} T_{s_k ... s_1} T_{s_1 ... s_k}` for `1 <= k <= rank`.
pub fn jucys_murphy(sys: &Arc<CoxeterSystem>, k: usize) -> Result<HeckeElt> {
    require_type_a(sys)?;
    if k == 0 || k > sys.rank() {
        return Err(Error::InvalidInput(format!("JM index {k} out of range 1..={}", sys.rank())));
    }
    let mut word: Vec<usize> = (0..k).rev().collect();
    word.extend(0..k);
    Ok(HeckeElt::from_word(sys, &word).scale(&LaurentPoly::x_pow(-(k as i64))))
}

/// Elementary symmetric polynomials `e_0, ..., e_r` in `JM_1, ..., JM_r`.
pub fn jm_elementary_all(sys: &Arc<CoxeterSystem>) -> Result<Vec<HeckeElt>> {
    require_type_a(sys)?;
    let r = sys.rank();
    let mut e = vec![HeckeElt::zero(sys); r + 1];
    e[0] = HeckeElt::one(sys);
    for i in 1..=r {
        let jm = jucys_murphy(sys, i)?;
        for k in (1..=i).rev() {
            let t = e[k - 1].mul(&jm)?;
            e[k].add_assign(&t);
        }
    }
    Ok(e)
}

/// `e_k(JM_1, ..., JM_r)`.
pub fn jm_elementary(sys: &Arc<CoxeterSystem>, k: usize) -> Result<HeckeElt> {
    let all = jm_elementary_all(sys)?;
    all.get(k).cloned().ok_or_else(|| Error::InvalidInput(format!("degree {k} exceeds rank")))
}

/// `I_k = {s_1, ..., s_{r-k}}` (0-based: generators `0..r-k`).
pub fn initial_segment(rank: usize, k: usize) -> GenSet {
    GenSet::from_gens(0..rank.saturating_sub(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_norm_example() {
        let sys = CoxeterSystem::parse("A1").unwrap();
        let n = relative_norm(GenSet::empty(), &HeckeElt::one(&sys)).unwrap();
        assert_eq!(n.coeff(0), LaurentPoly::constant(2));
        assert_eq!(n.coeff(1), LaurentPoly::one() - LaurentPoly::x_pow(-1));
    }

    #[test]
    fn inverse_generator() {
        let sys = CoxeterSystem::parse("A2").unwrap();
        let h = HeckeElt::from_word(&sys, &[0, 1]);
        assert_eq!(h.rmul_gen(1).rmul_gen_inv(1), h);
        assert_eq!(h.lmul_gen_inv(0).lmul_gen(0), h);
    }

    #[test]
    fn mismatch_detected() {
        let a = HeckeElt::one(&CoxeterSystem::parse("A2").unwrap());
        let b = HeckeElt::one(&CoxeterSystem::parse("B2").unwrap());
        assert_eq!(a.mul(&b), Err(Error::SystemMismatch));
    }

    #[test]
    fn jm_rejects_other_types() {
        let b = CoxeterSystem::parse("B2").unwrap();
        assert!(matches!(jucys_murphy(&b, 1), Err(Error::Unsupported(_))));
    }
}
