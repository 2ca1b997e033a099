//! Symmetric functions of fixed degree, symmetric-group characters, and the
//! Hecke-algebra (Tits deformed) characters of `S_n`.
//!
//! Every basis is expanded in power sums; conversions go through that hub.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::coxeter::{CoxeterSystem, CoxeterType, GenSet, Sign};
use crate::error::{Error, Result};
use crate::hecke::{self, HeckeElt};
use crate::par;
use crate::poly::{LaurentPoly, RatFunc};

pub const MAX_CONVERT_WEIGHT: u32 = 8;
pub const MAX_QMN_WEIGHT: u32 = 7;
pub const MAX_LASCOUX_N: u32 = 6;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Sorts the parts and drops zeros, so any composition is accepted.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }
    pub fn parts(&self) -> &[u32] {
        &self.0
    }
    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }
    pub fn len(&self) -> usize {
        self.0.len()
    }
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
    pub fn conjugate(&self) -> Self {
        let m = self.0.first().copied().unwrap_or(0);
        Partition((1..=m).map(|i| self.0.iter().filter(|&&p| p >= i).count() as u32).collect())
    }
    /// `z_mu = prod_i i^{m_i} m_i!`.
    pub fn z(&self) -> BigInt {
        let mut mult: BTreeMap<u32, u32> = BTreeMap::new();
        for &p in &self.0 {
            *mult.entry(p).or_default() += 1;
        }
        let mut z = BigInt::one();
        for (i, m) in mult {
            for k in 1..=m {
                z *= BigInt::from(i) * BigInt::from(k);
            }
        }
        z
    }
    fn union(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Partition::new(v)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        if t.is_empty() {
            return Ok(Partition(vec![]));
        }
        let parts: std::result::Result<Vec<u32>, _> = t.split(',').map(|p| p.trim().parse::<u32>()).collect();
        parts.map(Partition::new).map_err(|_| Error::InvalidInput(format!("bad partition '{s}'")))
    }
}

/// Partitions of `n` in reverse lexicographic order, starting with `(n)`.
pub fn partitions(n: u32) -> Vec<Partition> {
    fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Ribbon strips of size `k` removable from `lambda`: `(remainder, height)`.
fn remove_strips(lambda: &Partition, k: u32) -> Vec<(Partition, u32)> {
    let l = lambda.len() as i64;
    let beta: Vec<i64> = lambda.0.iter().enumerate().map(|(i, &p)| p as i64 + l - 1 - i as i64).collect();
    let k = k as i64;
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        let nb = b - k;
        if nb < 0 || beta.contains(&nb) {
            continue;
        }
        let height = beta.iter().filter(|&&x| x > nb && x < b).count() as u32;
        let mut next = beta.clone();
        next[i] = nb;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = next.iter().enumerate().map(|(j, &x)| (x - (l - 1 - j as i64)) as u32).collect();
        out.push((Partition::new(parts), height));
    }
    out
}

fn check_weights(lambda: &Partition, mu: &Partition) -> Result<()> {
    if lambda.weight() != mu.weight() {
        Err(Error::WeightMismatch)
    } else {
        Ok(())
    }
}

/// `chi^lambda` at cycle type `mu` (Murnaghan-Nakayama).
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    check_weights(lambda, mu)?;
    fn rec(l: &Partition, mu: &[u32], memo: &mut HashMap<(Partition, usize), BigInt>) -> BigInt {
        if mu.is_empty() {
            return BigInt::one();
        }
        if let Some(v) = memo.get(&(l.clone(), mu.len())) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for (rest, ht) in remove_strips(l, mu[0]) {
            let v = rec(&rest, &mu[1..], memo);
            if ht % 2 == 0 {
                total += v;
            } else {
                total -= v;
            }
        }
        memo.insert((l.clone(), mu.len()), total.clone());
        total
    }
    Ok(rec(lambda, &mu.0, &mut HashMap::new()))
}

/// Partitions `nu` inside `lambda` with `|lambda / nu| = k` and no 2x2 square
/// in `lambda / nu`, together with `(rows, columns, components)` of the skew shape.
fn broken_strips(lambda: &Partition, k: u32) -> Vec<(Partition, u32, u32, u32)> {
    let l = &lambda.0;
    let target = lambda.weight() - k;
    let mut out = Vec::new();
    let mut nu = vec![0u32; l.len()];
    fn rec(l: &[u32], i: usize, left: u32, nu: &mut Vec<u32>, out: &mut Vec<(Partition, u32, u32, u32)>) {
        if i == l.len() {
            if left == 0 {
                if let Some(stats) = skew_stats(l, nu) {
                    out.push((Partition::new(nu.clone()), stats.0, stats.1, stats.2));
                }
            }
            return;
        }
        let cap = if i == 0 { l[0] } else { l[i].min(nu[i - 1]) };
        for v in 0..=cap.min(left) {
            nu[i] = v;
            rec(l, i + 1, left - v, nu, out);
        }
        nu[i] = 0;
    }
    rec(l, 0, target, &mut nu, &mut out);
    out
}

fn skew_stats(l: &[u32], nu: &[u32]) -> Option<(u32, u32, u32)> {
    let inside = |r: usize, c: u32| r < l.len() && c >= nu[r] && c < l[r];
    let mut cells = Vec::new();
    for r in 0..l.len() {
        for c in nu[r]..l[r] {
            if inside(r + 1, c) && inside(r, c + 1) && inside(r + 1, c + 1) {
                return None;
            }
            cells.push((r, c));
        }
    }
    let rows = (0..l.len()).filter(|&r| l[r] > nu[r]).count() as u32;
    let mut cols: Vec<u32> = cells.iter().map(|&(_, c)| c).collect();
    cols.sort_unstable();
    cols.dedup();
    let mut seen = vec![false; cells.len()];
    let mut comps = 0;
    for start in 0..cells.len() {
        if seen[start] {
            continue;
        }
        comps += 1;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(x) = stack.pop() {
            let (r, c) = cells[x];
            for (y, &(r2, c2)) in cells.iter().enumerate() {
                if !seen[y] && r.abs_diff(r2) + c.abs_diff(c2) as usize == 1 {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    Some((rows, cols.len() as u32, comps))
}

/// `chi_X^lambda(T_{w_mu})` for the minimal-length element `w_mu` of cycle
/// type `mu` (Ram's rule). A broken border strip with `r` rows, `c` columns
/// and `cc` components weighs `(-1)^{r-cc} X^{c-cc} (X-1)^{cc-1}`.
pub fn qmn_character(lambda: &Partition, mu: &Partition) -> Result<LaurentPoly> {
    check_weights(lambda, mu)?;
    if lambda.weight() > MAX_QMN_WEIGHT {
        return Err(Error::Unsupported(format!("weight above {MAX_QMN_WEIGHT}")));
    }
    fn rec(l: &Partition, mu: &[u32], memo: &mut HashMap<(Partition, usize), LaurentPoly>) -> LaurentPoly {
        if mu.is_empty() {
            return LaurentPoly::one();
        }
        if let Some(v) = memo.get(&(l.clone(), mu.len())) {
            return v.clone();
        }
        // the last block of w_mu is peeled off first
        let (&k, head) = mu.split_last().unwrap();
        let mut total = LaurentPoly::zero();
        for (rest, r, c, cc) in broken_strips(l, k) {
            let sign = if (r - cc) % 2 == 0 { 1 } else { -1 };
            let w = LaurentPoly::monomial(sign, 2 * (c - cc) as i64) * LaurentPoly::x_minus_one().pow(cc - 1);
            total += &(w * rec(&rest, head, memo));
        }
        memo.insert((l.clone(), mu.len()), total.clone());
        total
    }
    Ok(rec(lambda, &mu.0, &mut HashMap::new()))
}

/// Minimal-length word (0-based letters) of cycle type `mu`: Coxeter
/// elements of consecutive blocks.
pub fn class_rep_word(mu: &Partition) -> Vec<usize> {
    let mut word = Vec::new();
    let mut start = 0usize;
    for &p in &mu.0 {
        word.extend(start..start + p as usize - 1);
        start += p as usize;
    }
    word
}

/// Cycle type of a permutation given in one-line notation (1-based).
pub fn cycle_type(line: &[i32]) -> Partition {
    let n = line.len();
    let mut seen = vec![false; n];
    let mut parts = Vec::new();
    for i in 0..n {
        if seen[i] {
            continue;
        }
        let mut len = 0;
        let mut j = i;
        while !seen[j] {
            seen[j] = true;
            j = line[j] as usize - 1;
            len += 1;
        }
        parts.push(len);
    }
    Partition::new(parts)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Schur,
    Elementary,
    Homogeneous,
    PowerSum,
    Monomial,
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "s" | "schur" => Ok(Basis::Schur),
            "e" | "elementary" => Ok(Basis::Elementary),
            "h" | "homogeneous" => Ok(Basis::Homogeneous),
            "p" | "powersum" | "power" => Ok(Basis::PowerSum),
            "m" | "monomial" => Ok(Basis::Monomial),
            _ => Err(Error::InvalidInput(format!("unknown basis '{s}'"))),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Basis::Schur => "s",
            Basis::Elementary => "e",
            Basis::Homogeneous => "h",
            Basis::PowerSum => "p",
            Basis::Monomial => "m",
        };
        f.write_str(s)
    }
}

type Matrix = Vec<Vec<BigRational>>;

fn rat(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

fn invert(m: &Matrix) -> Matrix {
    let k = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..k).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    for c in 0..k {
        let p = (c..k).find(|&r| !a[r][c].is_zero()).expect("transition matrix is invertible");
        a.swap(c, p);
        let inv = a[c][c].recip();
        for x in a[c].iter_mut() {
            *x *= &inv;
        }
        for r in 0..k {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for j in 0..2 * k {
                    let d = &f * &a[c][j];
                    a[r][j] -= d;
                }
            }
        }
    }
    a.into_iter().map(|r| r[k..].to_vec()).collect()
}

fn single_part_expansion(k: u32, signed: bool) -> BTreeMap<Partition, BigRational> {
    partitions(k)
        .into_iter()
        .map(|mu| {
            let sign = if signed && (k as usize - mu.len()) % 2 == 1 { -1 } else { 1 };
            let c = BigRational::new(BigInt::from(sign), mu.z());
            (mu, c)
        })
        .collect()
}

fn multiply_expansions(a: &BTreeMap<Partition, BigRational>, b: &BTreeMap<Partition, BigRational>) -> BTreeMap<Partition, BigRational> {
    let mut out: BTreeMap<Partition, BigRational> = BTreeMap::new();
    for (pa, ca) in a {
        for (pb, cb) in b {
            *out.entry(pa.union(pb)).or_insert_with(BigRational::zero) += ca * cb;
        }
    }
    out
}

/// Row `lambda` holds the power-sum coefficients of `b_lambda`.
fn to_power_sum(basis: Basis, n: u32) -> Arc<Matrix> {
    static CACHE: OnceLock<Mutex<HashMap<(Basis, u32), Arc<Matrix>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(m) = cache.lock().unwrap().get(&(basis, n)) {
        return m.clone();
    }
    let parts = partitions(n);
    let idx = |p: &Partition| parts.iter().position(|q| q == p).unwrap();
    let k = parts.len();
    let m: Matrix = match basis {
        Basis::PowerSum => (0..k).map(|i| (0..k).map(|j| rat((i == j) as i32)).collect()).collect(),
        Basis::Schur => parts
            .iter()
            .map(|l| parts.iter().map(|mu| BigRational::new(mn_character(l, mu).unwrap(), mu.z())).collect())
            .collect(),
        Basis::Homogeneous | Basis::Elementary => {
            let signed = basis == Basis::Elementary;
            parts
                .iter()
                .map(|l| {
                    let mut acc: BTreeMap<Partition, BigRational> = BTreeMap::from([(Partition(vec![]), BigRational::one())]);
                    for &p in &l.0 {
                        acc = multiply_expansions(&acc, &single_part_expansion(p, signed));
                    }
                    let mut row = vec![BigRational::zero(); k];
                    for (mu, c) in acc {
                        row[idx(&mu)] = c;
                    }
                    row
                })
                .collect()
        }
        Basis::Monomial => {
            // m is dual to h: H Z M^T = I
            let h = to_power_sum(Basis::Homogeneous, n);
            let hz: Matrix = h.iter().map(|row| row.iter().zip(&parts).map(|(c, mu)| c * rat(mu.z())).collect()).collect();
            let inv = invert(&hz);
            (0..k).map(|i| (0..k).map(|j| inv[j][i].clone()).collect()).collect()
        }
    };
    let m = Arc::new(m);
    cache.lock().unwrap().insert((basis, n), m.clone());
    m
}

fn from_power_sum(basis: Basis, n: u32) -> Arc<Matrix> {
    static CACHE: OnceLock<Mutex<HashMap<(Basis, u32), Arc<Matrix>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(m) = cache.lock().unwrap().get(&(basis, n)) {
        return m.clone();
    }
    let m = Arc::new(invert(&to_power_sum(basis, n)));
    cache.lock().unwrap().insert((basis, n), m.clone());
    m
}

/// A homogeneous symmetric function of degree `n` with coefficients in `Q(X)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymFunc {
    basis: Basis,
    n: u32,
    terms: BTreeMap<Partition, RatFunc>,
}

impl SymFunc {
    pub fn zero(basis: Basis, n: u32) -> Self {
        SymFunc { basis, n, terms: BTreeMap::new() }
    }

    pub fn basis_elt(basis: Basis, lambda: Partition) -> Self {
        let n = lambda.weight();
        SymFunc { basis, n, terms: BTreeMap::from([(lambda, RatFunc::one())]) }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }
    pub fn degree(&self) -> u32 {
        self.n
    }
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &RatFunc)> {
        self.terms.iter()
    }
    pub fn coeff(&self, lambda: &Partition) -> RatFunc {
        self.terms.get(lambda).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn add_term(&mut self, lambda: Partition, c: &RatFunc) -> Result<()> {
        if lambda.weight() != self.n {
            return Err(Error::WeightMismatch);
        }
        let slot = self.terms.entry(lambda.clone()).or_insert_with(RatFunc::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&lambda);
        }
        Ok(())
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        let mut out = SymFunc::zero(self.basis, self.n);
        if c.is_zero() {
            return out;
        }
        for (l, v) in &self.terms {
            out.terms.insert(l.clone(), v * c);
        }
        out
    }

    pub fn convert(&self, target: Basis) -> Result<SymFunc> {
        if self.n > MAX_CONVERT_WEIGHT {
            return Err(Error::Unsupported(format!("weight above {MAX_CONVERT_WEIGHT}")));
        }
        if target == self.basis {
            return Ok(self.clone());
        }
        let parts = partitions(self.n);
        let a = to_power_sum(self.basis, self.n);
        let b = from_power_sum(target, self.n);
        // coefficients in p, then in the target basis
        let mut in_p = vec![RatFunc::zero(); parts.len()];
        for (l, c) in &self.terms {
            let i = parts.iter().position(|p| p == l).unwrap();
            for (j, slot) in in_p.iter_mut().enumerate() {
                if !a[i][j].is_zero() {
                    *slot += &(c * &RatFunc::from_rational(&a[i][j]));
                }
            }
        }
        let mut out = SymFunc::zero(target, self.n);
        for (k, part) in parts.iter().enumerate() {
            let mut acc = RatFunc::zero();
            for (j, c) in in_p.iter().enumerate() {
                if !c.is_zero() && !b[j][k].is_zero() {
                    acc += &(c * &RatFunc::from_rational(&b[j][k]));
                }
            }
            if !acc.is_zero() {
                out.terms.insert(part.clone(), acc);
            }
        }
        Ok(out)
    }

    /// `f[X/(X-1)]`: the ring map `p_k -> p_k / (X^k - 1)`, returned in power sums.
    pub fn plethysm_xq(&self) -> Result<SymFunc> {
        let p = self.convert(Basis::PowerSum)?;
        let mut out = SymFunc::zero(Basis::PowerSum, self.n);
        for (mu, c) in &p.terms {
            let den = mu.0.iter().fold(LaurentPoly::one(), |acc, &k| acc * (LaurentPoly::x_pow(k as i64) - LaurentPoly::one()));
            out.terms.insert(mu.clone(), c * &RatFunc::new(LaurentPoly::one(), den)?);
        }
        Ok(out)
    }
}

impl Serialize for SymFunc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<(&Partition, &LaurentPoly, &LaurentPoly)> =
            self.terms.iter().map(|(l, c)| (l, c.num(), c.den())).collect();
        let mut st = s.serialize_struct("SymFunc", 2)?;
        st.serialize_field("basis", &self.basis)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

/// The Hall inner product, with `<p_lambda, p_mu> = delta z_lambda`.
pub fn hall_pair(f: &SymFunc, g: &SymFunc) -> Result<RatFunc> {
    if f.n != g.n {
        return Err(Error::WeightMismatch);
    }
    let fp = f.convert(Basis::PowerSum)?;
    let gp = g.convert(Basis::PowerSum)?;
    let mut acc = RatFunc::zero();
    for (mu, c) in &fp.terms {
        if let Some(d) = gp.terms.get(mu) {
            acc += &(&(c * d) * &RatFunc::from_poly(LaurentPoly::constant(mu.z())));
        }
    }
    Ok(acc)
}

/// `J = S \ {s_{nu_1}, s_{nu_1 + nu_2}, ...}` for a composition `nu` of `n`.
pub fn composition_to_j(n: u32, nu: &[u32]) -> Result<GenSet> {
    if nu.contains(&0) || nu.iter().sum::<u32>() != n {
        return Err(Error::InvalidInput(format!("not a composition of {n}")));
    }
    let mut j = GenSet::full(n as usize - 1);
    let mut acc = 0;
    for &p in &nu[..nu.len() - 1] {
        acc += p;
        j = GenSet::from_gens(j.iter().filter(|&s| s + 1 != acc as usize));
    }
    Ok(j)
}

fn sym_system(n: u32) -> Result<Arc<CoxeterSystem>> {
    if n < 2 {
        return Err(Error::InvalidInput("n must be at least 2".into()));
    }
    CoxeterSystem::get(CoxeterType::a(n as usize - 1))
}

/// `(X - 1)^n e_nu[X/(X-1)]` (minus) or `(X - 1)^n h_nu[X/(X-1)]` (plus), in Schur functions.
pub fn lascoux_target(n: u32, nu: &[u32], sign: Sign) -> Result<SymFunc> {
    let basis = match sign {
        Sign::Minus => Basis::Elementary,
        Sign::Plus => Basis::Homogeneous,
    };
    let f = SymFunc::basis_elt(basis, Partition::new(nu.to_vec()));
    let scale = RatFunc::from_poly(LaurentPoly::x_minus_one().pow(n));
    f.plethysm_xq()?.scale(&scale).convert(Basis::Schur)
}

/// Solves `A x = b` over `Q(X)` for a polynomial matrix by fraction-free
/// Gauss-Jordan elimination.
fn solve_poly_system(a: &[Vec<LaurentPoly>], b: &[LaurentPoly]) -> Result<Vec<RatFunc>> {
    let k = a.len();
    let mut m: Vec<Vec<LaurentPoly>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut prev = LaurentPoly::one();
    for c in 0..k {
        let p = (c..k).find(|&r| !m[r][c].is_zero()).ok_or(Error::NonExactDivision)?;
        m.swap(c, p);
        for r in 0..k {
            if r == c {
                continue;
            }
            for j in 0..=k {
                if j == c {
                    continue;
                }
                let v = &m[c][c] * &m[r][j] - &m[r][c] * &m[c][j];
                m[r][j] = v.exact_div(&prev)?;
            }
            m[r][c] = LaurentPoly::zero();
        }
        prev = m[c][c].clone();
    }
    (0..k).map(|i| RatFunc::new(m[i][k].clone(), m[i][i].clone())).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct CoordRow {
    pub lambda: Partition,
    pub computed: RatFunc,
    pub expected: RatFunc,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct LascouxReport {
    pub n: u32,
    pub nu: Vec<u32>,
    pub sign: String,
    pub rows: Vec<CoordRow>,
    pub pass: bool,
}

/// Expands the trace `tau[Sigma_{J,sign}]` in the characters `chi_X^lambda`
/// (from its values on minimal class representatives) and compares the
/// coordinates with the Schur coefficients of [`lascoux_target`].
pub fn verify_lascoux(n: u32, nu: &[u32], sign: Sign) -> Result<LascouxReport> {
    if n > MAX_LASCOUX_N {
        return Err(Error::Unsupported(format!("n above {MAX_LASCOUX_N}")));
    }
    let sys = sym_system(n)?;
    let j = composition_to_j(n, nu)?;
    let sigma = hecke::sigma(&sys, j, sign);
    let parts = partitions(n);
    let traces: Vec<LaurentPoly> = par::map(&parts, |mu| {
        let t = HeckeElt::from_word(&sys, &class_rep_word(mu));
        sigma.tau_product(&t).expect("same system")
    });
    // rows indexed by mu, columns by lambda
    let table: Vec<Vec<LaurentPoly>> = parts
        .iter()
        .map(|mu| parts.iter().map(|l| qmn_character(l, mu)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let coords = solve_poly_system(&table, &traces)?;
    let target = lascoux_target(n, nu, sign)?;
    let rows: Vec<CoordRow> = parts
        .iter()
        .zip(coords)
        .map(|(l, c)| {
            let e = target.coeff(l);
            CoordRow { lambda: l.clone(), ok: c == e, computed: c, expected: e }
        })
        .collect();
    let pass = rows.iter().all(|r| r.ok);
    Ok(LascouxReport { n, nu: nu.to_vec(), sign: sign.to_string(), rows, pass })
}

/// `det(X - w | F^n)` for a permutation of cycle type `mu`: `prod (X^k - 1)`.
pub fn perm_module_det(mu: &Partition) -> LaurentPoly {
    mu.0.iter().fold(LaurentPoly::one(), |acc, &k| acc * (LaurentPoly::x_pow(k as i64) - LaurentPoly::one()))
}

/// The class function `chi^lambda / det(X - . | V)` extended linearly to
/// `e_{J,sign}`, against `<s_lambda, e_nu[X/(X-1)]>` or `<s_lambda, h_nu[X/(X-1)]>`.
pub fn verify_tau_to_e_h(n: u32, nu: &[u32], sign: Sign) -> Result<LascouxReport> {
    if n > MAX_LASCOUX_N {
        return Err(Error::Unsupported(format!("n above {MAX_LASCOUX_N}")));
    }
    let sys = sym_system(n)?;
    let j = composition_to_j(n, nu)?;
    let wj = sys.parabolic(j);
    let basis = match sign {
        Sign::Minus => Basis::Elementary,
        Sign::Plus => Basis::Homogeneous,
    };
    let rhs_f = SymFunc::basis_elt(basis, Partition::new(nu.to_vec())).plethysm_xq()?;
    let mut by_type: BTreeMap<Partition, BigInt> = BTreeMap::new();
    for &w in &wj {
        let sgn = if sign == Sign::Minus && sys.length(w) % 2 == 1 { -1 } else { 1 };
        *by_type.entry(cycle_type(sys.model(w))).or_insert_with(BigInt::zero) += sgn;
    }
    let order = BigInt::from(wj.len());
    let mut rows = Vec::new();
    for l in partitions(n) {
        let mut lhs = RatFunc::zero();
        for (mu, cnt) in &by_type {
            let c = BigRational::new(cnt * mn_character(&l, mu)?, order.clone());
            lhs += &(&RatFunc::from_rational(&c) * &RatFunc::new(LaurentPoly::one(), perm_module_det(mu))?);
        }
        let rhs = hall_pair(&SymFunc::basis_elt(Basis::Schur, l.clone()), &rhs_f)?;
        rows.push(CoordRow { lambda: l, ok: lhs == rhs, computed: lhs, expected: rhs });
    }
    let pass = rows.iter().all(|r| r.ok);
    Ok(LascouxReport { n, nu: nu.to_vec(), sign: sign.to_string(), rows, pass })
}

/// All compositions of `n`.
pub fn compositions(n: u32) -> Vec<Vec<u32>> {
    (0..1u32 << (n - 1))
        .map(|mask| {
            let mut out = Vec::new();
            let mut cur = 1;
            for i in 0..n - 1 {
                if mask >> i & 1 == 1 {
                    out.push(cur);
                    cur = 1;
                } else {
                    cur += 1;
                }
            }
            out.push(cur);
            out
        })
        .collect()
}
