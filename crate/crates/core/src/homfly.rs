//! Braid words, the `a`-graded slices of the Markov trace on `H_{S_n}`, and
//! the reduced HOMFLYPT polynomial of braid closures.
//!
//! A braid letter `σ_i` maps to `X^{-1/2} T_{s_i}` and `σ_i^{-1}` to
//! `X^{1/2} T_{s_i}^{-1}`. The Markov trace `μ_n` is determined by
//! `μ_1(1) = 1`, `μ_{n+1}(β T_{s_n}^{±1}) = (-a^{-1} X^{1/2})^{±1} μ_n(β)` and
//! `μ_{n+1}(β) = (a - a^{-1})/z · μ_n(β)` for `β` in `H_{S_n}`, where
//! `z = X^{1/2} - X^{-1/2}`.
//!
//! Slices of `μ_n` are computed three ways:
//! * `Tower`: the coefficient of `a^{-n+1+2k}` in `μ_n`.
//! * `Zeta`: `(X - 1)^{-(n-1)} τ(β ζ^+_{I_k})`.
//! * `Jm`: `(X - 1)^{-(n-1)} τ(β e_{n-1-k}(JM_1, ..., JM_{n-1}))`.
//!
//! The first differs from the other two by a monomial factor per `(n, k)`,
//! found by [`calibrate`].

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::coxeter::{CoxeterSystem, CoxeterType, Sign};
use crate::deodhar;
use crate::error::{Error, Result};
use crate::hecke::{self, HeckeElt};
use crate::par;
use crate::poly::{BivarPoly, LaurentPoly, RatFunc};

pub const MAX_STRANDS: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BraidWord {
    n: usize,
    /// Signed generator indices, 1-based.
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<i32>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("a braid needs at least one strand".into()));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= n {
                return Err(Error::InvalidInput(format!("braid letter {l} out of range for {n} strands")));
            }
        }
        Ok(Self { n, letters })
    }

    /// Positive braid from 0-based generator indices.
    pub fn positive(n: usize, word: &[usize]) -> Result<Self> {
        Self::new(n, word.iter().map(|&s| s as i32 + 1).collect())
    }

    /// Parses whitespace or comma separated letters such as `"1 -2 1"`.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let letters = text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i32>().map_err(|_| Error::InvalidInput(format!("bad braid letter '{t}'"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, letters)
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&l| l > 0)
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::InvalidInput("strand counts differ".into()));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self { n: self.n, letters })
    }

    pub fn inverse(&self) -> Self {
        Self { n: self.n, letters: self.letters.iter().rev().map(|&l| -l).collect() }
    }

    /// Adds a strand and appends `σ_n^{±1}`.
    pub fn stabilize(&self, sign: Sign) -> Self {
        let l = self.n as i32;
        let mut letters = self.letters.clone();
        letters.push(if sign == Sign::Plus { l } else { -l });
        Self { n: self.n + 1, letters }
    }

    /// The positive full twist `Δ²` on `n` strands.
    pub fn full_twist(n: usize) -> Result<Self> {
        let mut letters = Vec::new();
        for _ in 0..2 {
            for i in 1..n as i32 {
                for j in (i..n as i32).rev() {
                    letters.push(j);
                }
            }
        }
        Self::new(n, letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "[{}] on {} strands", parts.join(" "), self.n)
    }
}

fn system(n: usize) -> Result<Arc<CoxeterSystem>> {
    if n < 2 {
        return Err(Error::Unsupported("Hecke algebra of S_1".into()));
    }
    if n > MAX_STRANDS {
        return Err(Error::TooLarge(format!("{n} strands (limit {MAX_STRANDS})")));
    }
    CoxeterSystem::get(CoxeterType::a(n - 1))
}

/// `X^{-e/2}` times the product of `T_s^{±1}`; needs `n >= 2`.
pub fn bw_to_hecke(b: &BraidWord) -> Result<HeckeElt> {
    let sys = system(b.n)?;
    let mut h = HeckeElt::one(&sys);
    for &l in &b.letters {
        let s = l.unsigned_abs() as usize - 1;
        h = if l > 0 { h.rmul_gen(s) } else { h.rmul_gen_inv(s) };
    }
    Ok(h.scale(&LaurentPoly::x_pow(0).shift(-b.writhe())))
}

/// `z = X^{1/2} - X^{-1/2}`.
pub fn z_poly() -> LaurentPoly {
    LaurentPoly::from_terms([(1, BigInt::one()), (-1, -BigInt::one())])
}

/// `num / z^z_pow`, kept with the largest possible power of `z` cancelled.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomflyValue {
    num: BivarPoly,
    z_pow: u32,
}

impl HomflyValue {
    pub fn new(num: BivarPoly, z_pow: u32) -> Self {
        let mut v = Self { num, z_pow };
        v.reduce();
        v
    }

    pub fn zero() -> Self {
        Self { num: BivarPoly::zero(), z_pow: 0 }
    }

    pub fn one() -> Self {
        Self { num: BivarPoly::one(), z_pow: 0 }
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.z_pow = 0;
            return;
        }
        let z = z_poly();
        while self.z_pow > 0 {
            match self.num.exact_div_poly(&z) {
                Ok(q) => {
                    self.num = q;
                    self.z_pow -= 1;
                }
                Err(_) => break,
            }
        }
    }

    pub fn numerator(&self) -> &BivarPoly {
        &self.num
    }

    pub fn z_power(&self) -> u32 {
        self.z_pow
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.z_pow == 0 && self.num.is_one()
    }

    /// Whether the value is a polynomial in `a^{±1}` and `X^{±1/2}`.
    pub fn is_polynomial(&self) -> bool {
        self.z_pow == 0
    }

    pub fn a_degrees(&self) -> Vec<i64> {
        self.num.a_degrees().into_iter().collect()
    }

    fn lift(&self, z_pow: u32) -> BivarPoly {
        self.num.mul_poly(&z_poly().pow(z_pow - self.z_pow))
    }

    pub fn add(&self, other: &Self) -> Self {
        let p = self.z_pow.max(other.z_pow);
        Self::new(&self.lift(p) + &other.lift(p), p)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.num * &other.num, self.z_pow + other.z_pow)
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        Self::new(self.num.mul_poly(p), self.z_pow)
    }

    pub fn mul_a_pow(&self, k: i64) -> Self {
        Self { num: self.num.mul_a_pow(k), z_pow: self.z_pow }
    }

    /// The coefficient of `a^{a_exp}` as a rational function of `X`.
    pub fn slice(&self, a_exp: i64) -> RatFunc {
        let j = self.z_pow;
        // z^{-j} = X^{j/2} (X - 1)^{-j}
        let num = self.num.a_slice(a_exp).shift(j as i64);
        RatFunc::new(num, LaurentPoly::x_minus_one().pow(j)).expect("nonzero denominator")
    }

    pub fn to_pretty(&self) -> String {
        match self.z_pow {
            0 => self.num.to_pretty(),
            1 => format!("({}) / z", self.num.to_pretty()),
            j => format!("({}) / z^{j}", self.num.to_pretty()),
        }
    }
}

impl fmt::Display for HomflyValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pretty())
    }
}

/// `μ_m(T_w)` for every `w` in `S_n`, stored at the smallest `m` with `w` in `S_m`.
struct Tower {
    level: Vec<usize>,
    base: Vec<HomflyValue>,
    /// `δ^j` for `j = 0..n`, `δ = (a - a^{-1})/z`.
    delta_pows: Vec<HomflyValue>,
}

impl Tower {
    fn build(n: usize) -> Result<Self> {
        let sys = system(n)?;
        let mut delta = BivarPoly::zero();
        delta.add_term(1, 0, BigInt::one());
        delta.add_term(-1, 0, -BigInt::one());
        let delta = HomflyValue::new(delta, 1);
        let mut delta_pows = vec![HomflyValue::one()];
        for j in 1..n {
            delta_pows.push(delta_pows[j - 1].mul(&delta));
        }
        let level: Vec<usize> = sys
            .elements()
            .map(|w| sys.reduced_word(w).iter().max().map_or(1, |&s| s + 2))
            .collect();
        let mut order: Vec<u32> = sys.elements().collect();
        order.sort_by_key(|&w| (level[w as usize], sys.length(w)));
        let mut tower = Self { level, base: vec![HomflyValue::zero(); sys.order()], delta_pows };
        // -a^{-1} X^{1/2}
        let mut step = BivarPoly::zero();
        step.add_term(-1, 1, -BigInt::one());
        for w in order {
            let m1 = tower.level[w as usize];
            if m1 == 1 {
                tower.base[w as usize] = HomflyValue::one();
                continue;
            }
            let m = m1 - 1;
            // w = u c with u in S_m and c = s_m c' minimal in its coset
            let (mut u, mut c) = (0u32, w);
            'peel: loop {
                for s in 0..m - 1 {
                    let sc = sys.lmul(s, c);
                    if sys.length(sc) < sys.length(c) {
                        c = sc;
                        u = sys.rmul(u, s);
                        continue 'peel;
                    }
                }
                break;
            }
            let c_rest = sys.lmul(m - 1, c);
            debug_assert!(sys.length(c_rest) + 1 == sys.length(c));
            let h = HeckeElt::basis(&sys, c_rest).rmul_basis(u);
            let inner = tower.mu_at(&h, m);
            tower.base[w as usize] = inner.mul(&HomflyValue::new(step.clone(), 0));
        }
        Ok(tower)
    }

    /// `μ_m(h)` for `h` supported on `S_m`.
    fn mu_at(&self, h: &HeckeElt, m: usize) -> HomflyValue {
        let mut acc = HomflyValue::zero();
        for (w, c) in h.terms() {
            let lw = self.level[w as usize];
            debug_assert!(lw <= m);
            acc = acc.add(&self.base[w as usize].mul(&self.delta_pows[m - lw]).mul_poly(c));
        }
        acc
    }
}

struct Strands {
    n: usize,
    sys: Arc<CoxeterSystem>,
    tower: OnceLock<Tower>,
    jm: OnceLock<Vec<HeckeElt>>,
    zeta: OnceLock<Vec<HeckeElt>>,
}

impl Strands {
    fn get(n: usize) -> Result<Arc<Self>> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Strands>>>> = OnceLock::new();
        let sys = system(n)?;
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = cache.lock().unwrap();
        let entry = guard
            .entry(n)
            .or_insert_with(|| Arc::new(Strands { n, sys, tower: OnceLock::new(), jm: OnceLock::new(), zeta: OnceLock::new() }));
        Ok(entry.clone())
    }

    fn tower(&self) -> &Tower {
        self.tower.get_or_init(|| Tower::build(self.n).expect("strand count checked"))
    }

    fn jm(&self) -> &[HeckeElt] {
        self.jm.get_or_init(|| hecke::jm_elementary_all(&self.sys).expect("type A"))
    }

    fn zeta(&self) -> &[HeckeElt] {
        self.zeta.get_or_init(|| {
            let r = self.sys.rank();
            par::map_range(r + 1, |k| hecke::zeta(&self.sys, hecke::initial_segment(r, k), Sign::Plus))
        })
    }

    fn check(&self, h: &HeckeElt) -> Result<()> {
        if **h.system() == *self.sys {
            Ok(())
        } else {
            Err(Error::SystemMismatch)
        }
    }
}

fn strands_of(h: &HeckeElt) -> Result<Arc<Strands>> {
    let sys = h.system();
    if sys.ty().family != crate::coxeter::Family::A {
        return Err(Error::Unsupported("Markov traces need type A".into()));
    }
    let s = Strands::get(sys.rank() + 1)?;
    s.check(h)?;
    Ok(s)
}

/// `μ_n(h)` for `h` in `H_{S_n}`.
pub fn ocneanu_mu(h: &HeckeElt) -> Result<HomflyValue> {
    let s = strands_of(h)?;
    Ok(s.tower().mu_at(h, s.n))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    Zeta,
    Jm,
    Tower,
}

impl Route {
    pub const ALL: [Route; 3] = [Route::Zeta, Route::Jm, Route::Tower];
}

impl FromStr for Route {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "zeta" => Ok(Route::Zeta),
            "jm" => Ok(Route::Jm),
            "tower" => Ok(Route::Tower),
            _ => Err(Error::InvalidInput(format!("unknown route '{s}'"))),
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Zeta => "zeta",
            Route::Jm => "jm",
            Route::Tower => "tower",
        })
    }
}

/// Slice `k` of `μ_n(h)` by the given route.
pub fn mu_slice(h: &HeckeElt, k: usize, route: Route) -> Result<RatFunc> {
    let s = strands_of(h)?;
    let n = s.n;
    if k >= n {
        return Err(Error::InvalidInput(format!("slice index {k} out of range 0..{n}")));
    }
    let norm = LaurentPoly::x_minus_one().pow(n as u32 - 1);
    match route {
        Route::Tower => Ok(s.tower().mu_at(h, n).slice(-(n as i64) + 1 + 2 * k as i64)),
        Route::Jm => RatFunc::new(h.tau_product(&s.jm()[n - 1 - k])?, norm),
        Route::Zeta => RatFunc::new(h.tau_product(&s.zeta()[k])?, norm),
    }
}

pub fn bw_mu_slice(b: &BraidWord, k: usize, route: Route) -> Result<RatFunc> {
    if b.n == 1 {
        return if k == 0 { Ok(RatFunc::one()) } else { Err(Error::InvalidInput(format!("slice index {k} out of range 0..1"))) };
    }
    mu_slice(&bw_to_hecke(b)?, k, route)
}

/// `sign · X^{x_half/2} · z^{-z_pow}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CalFactor {
    pub k: usize,
    pub sign: i8,
    pub x_half: i64,
    pub z_pow: i64,
}

impl CalFactor {
    pub fn to_ratfunc(&self) -> RatFunc {
        let m = LaurentPoly::monomial(self.sign as i64, self.x_half);
        let zp = RatFunc::from_poly(z_poly());
        let mut out = RatFunc::from_poly(m);
        for _ in 0..self.z_pow.unsigned_abs() {
            out = if self.z_pow > 0 { out.div(&zp).unwrap() } else { &out * &zp };
        }
        out
    }

    fn from_ratio(k: usize, r: &RatFunc, max_z: i64) -> Option<Self> {
        for j in 0..=max_z {
            for zp in [j, -j] {
                // r z^{zp} = r X^{-zp/2} (X - 1)^{zp}
                let xm1 = LaurentPoly::x_minus_one();
                let cand = if zp >= 0 {
                    r.scale_poly(&xm1.pow(zp as u32).shift(-zp))
                } else {
                    RatFunc::new(r.num().shift(-zp), r.den() * &xm1.pow((-zp) as u32)).ok()?
                };
                if let Some((c, e)) = cand.to_poly().and_then(|p| p.as_monomial()) {
                    if c.abs().is_one() {
                        return Some(Self { k, sign: if c.is_positive() { 1 } else { -1 }, x_half: e, z_pow: zp });
                    }
                }
            }
        }
        None
    }
}

impl fmt::Display for CalFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.sign < 0 { "-" } else { "" };
        if self.x_half % 2 == 0 {
            write!(f, "{sign}X^{}", self.x_half / 2)?;
        } else {
            write!(f, "{sign}X^({}/2)", self.x_half)?;
        }
        if self.z_pow != 0 {
            write!(f, " z^({})", -self.z_pow)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Calibration {
    pub n: usize,
    pub factors: Vec<CalFactor>,
    pub braids_checked: usize,
}

/// Positive braids `X^{-l(w)/2} T_w` for every `w` in `S_n` (a basis of
/// `H_{S_n}`) plus a few longer words.
pub fn calibration_braids(n: usize) -> Result<Vec<HeckeElt>> {
    let sys = system(n)?;
    let mut out: Vec<HeckeElt> = sys
        .elements()
        .map(|w| bw_to_hecke(&BraidWord::positive(n, &sys.reduced_word(w)).unwrap()).unwrap())
        .collect();
    let mut extra = vec![vec![0usize; 3], vec![0; 4]];
    let mut long_word = sys.reduced_word(sys.longest());
    long_word.extend(sys.reduced_word(sys.longest()));
    extra.push(long_word);
    for w in extra {
        out.push(bw_to_hecke(&BraidWord::positive(n, &w)?)?);
    }
    Ok(out)
}

/// Factors `c_{n,k}` with tower slice `= c_{n,k} ·` jm slice on every
/// calibration braid.
pub fn calibrate(n: usize) -> Result<Calibration> {
    if n > 5 {
        return Err(Error::TooLarge(format!("calibration for {n} strands (limit 5)")));
    }
    if n == 1 {
        return Ok(Calibration { n, factors: vec![CalFactor { k: 0, sign: 1, x_half: 0, z_pow: 0 }], braids_checked: 1 });
    }
    let braids = calibration_braids(n)?;
    let mut factors = Vec::new();
    for k in 0..n {
        let rows = par::map(&braids, |h| -> Result<(RatFunc, RatFunc)> {
            Ok((mu_slice(h, k, Route::Tower)?, mu_slice(h, k, Route::Jm)?))
        });
        let rows = rows.into_iter().collect::<Result<Vec<_>>>()?;
        let mut factor: Option<(CalFactor, RatFunc)> = None;
        for (i, (tower, jm)) in rows.iter().enumerate() {
            if jm.is_zero() {
                if !tower.is_zero() {
                    return Err(Error::InconsistentCalibration(format!("n={n} k={k}: jm slice vanishes on braid {i} but tower slice does not")));
                }
                continue;
            }
            match &factor {
                None => {
                    let r = tower.div(jm)?;
                    let f = CalFactor::from_ratio(k, &r, n as i64).ok_or_else(|| {
                        Error::InconsistentCalibration(format!("n={n} k={k}: ratio {r} is not a monomial"))
                    })?;
                    factor = Some((f, r));
                }
                Some((_, r)) => {
                    if &(jm * r) != tower {
                        return Err(Error::InconsistentCalibration(format!("n={n} k={k}: ratio depends on braid {i}")));
                    }
                }
            }
        }
        let (f, _) = factor.ok_or_else(|| Error::InconsistentCalibration(format!("n={n} k={k}: slice vanishes identically")))?;
        factors.push(f);
    }
    Ok(Calibration { n, factors, braids_checked: braids.len() })
}

/// Reduced HOMFLYPT polynomial `(-a)^{e(β)} μ_n(β)` of the closure.
pub fn bw_homfly(b: &BraidWord) -> Result<HomflyValue> {
    if b.n == 1 {
        return Ok(HomflyValue::one());
    }
    let mu = ocneanu_mu(&bw_to_hecke(b)?)?;
    let e = b.writhe();
    let out = mu.mul_a_pow(e);
    Ok(if e % 2 == 0 { out } else { out.mul(&HomflyValue::new(-&BivarPoly::one(), 0)) })
}

/// `slice(β, 0) = slice(β Δ², n - 1)` by the jm route.
pub fn bw_kalman_check(b: &BraidWord) -> Result<bool> {
    if b.n == 1 {
        return Ok(true);
    }
    let twisted = b.concat(&BraidWord::full_twist(b.n)?)?;
    Ok(bw_mu_slice(b, 0, Route::Jm)? == bw_mu_slice(&twisted, b.n - 1, Route::Jm)?)
}

/// Jm slice `k` of `T_word` against `(X - 1)^{-(n-1)} Σ_{Asc(v) = I_k} cell_poly(v, word)`.
/// Returns both sides.
pub fn markov_cell_sides(n: usize, word: &[usize], k: usize) -> Result<(RatFunc, RatFunc)> {
    let sys = system(n)?;
    if let Some(&s) = word.iter().find(|&&s| s >= n - 1) {
        return Err(Error::InvalidInput(format!("generator {} out of range", s + 1)));
    }
    let lhs = mu_slice(&HeckeElt::from_word(&sys, word), k, Route::Jm)?;
    let ik = hecke::initial_segment(sys.rank(), k);
    let vs: Vec<u32> = sys.elements().filter(|&v| sys.left_ascents(v) == ik).collect();
    let mut total = LaurentPoly::zero();
    for p in par::map(&vs, |&v| deodhar::cell_poly(&sys, v, word)) {
        total += &p;
    }
    let rhs = RatFunc::new(total, LaurentPoly::x_minus_one().pow(n as u32 - 1))?;
    Ok((lhs, rhs))
}

/// Per-braid consistency checks used by the randomized sweeps.
#[derive(Clone, Debug, Serialize)]
pub struct BraidCheck {
    pub braid: String,
    pub strands: usize,
    /// Zeta and jm slices agree for every `k`.
    pub routes_agree: bool,
    /// Tower slices equal the calibrated jm slices for every `k`.
    pub calibrated: bool,
    pub kalman: bool,
    /// Invariance under conjugation by `σ_1`, both stabilizations and a braid relation.
    pub invariant: bool,
    pub pass: bool,
}

pub fn braid_checks(b: &BraidWord, cal: &Calibration) -> Result<BraidCheck> {
    let n = b.n;
    if cal.n != n {
        return Err(Error::InvalidInput("calibration is for a different strand count".into()));
    }
    let mut routes_agree = true;
    let mut calibrated = true;
    for f in &cal.factors {
        let jm = bw_mu_slice(b, f.k, Route::Jm)?;
        if n > 1 {
            routes_agree &= bw_mu_slice(b, f.k, Route::Zeta)? == jm;
        }
        calibrated &= bw_mu_slice(b, f.k, Route::Tower)? == &jm * &f.to_ratfunc();
    }
    let kalman = bw_kalman_check(b)?;
    let p = bw_homfly(b)?;
    let mut invariant = true;
    if n < MAX_STRANDS {
        invariant &= bw_homfly(&b.stabilize(Sign::Plus))? == p;
        invariant &= bw_homfly(&b.stabilize(Sign::Minus))? == p;
    }
    if n >= 2 {
        let s = BraidWord::new(n, vec![1])?;
        invariant &= bw_homfly(&s.concat(b)?.concat(&s.inverse())?)? == p;
    }
    if n >= 3 {
        let rel = BraidWord::new(n, vec![1, 2, 1, -2, -1, -2])?;
        invariant &= bw_homfly(&rel.concat(b)?)? == p;
    }
    let pass = routes_agree && calibrated && kalman && invariant;
    Ok(BraidCheck { braid: b.letters.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" "), strands: n, routes_agree, calibrated, kalman, invariant, pass })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z_cancels() {
        let v = HomflyValue::new(BivarPoly::from_slice(0, &z_poly().pow(2)), 3);
        assert_eq!(v.z_power(), 1);
        assert!(v.numerator().is_one());
    }

    #[test]
    fn full_twist_length() {
        assert_eq!(BraidWord::full_twist(3).unwrap().len(), 6);
        assert_eq!(BraidWord::full_twist(4).unwrap().len(), 12);
    }
}
