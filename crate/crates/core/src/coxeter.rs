//! Finite Coxeter systems of types A, B, D and I2 with fully tabulated
//! multiplication by simple generators.
//!
//! Elements are indexed `0..|W|` with `0` the identity. Generators are indexed
//! `0..rank` internally; text input and output use `1..=rank`.
//!
//! Ascent and descent sets are taken on the left:
//! `Asc(v) = { s : l(sv) > l(v) }`, `Des(v) = S \ Asc(v)`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::LaurentPoly;

pub const MAX_ORDER: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    B,
    D,
    I2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CoxeterType {
    pub family: Family,
    pub rank: usize,
    /// The dihedral parameter for `I2(m)`, zero otherwise.
    pub m: u32,
}

impl CoxeterType {
    pub fn a(n: usize) -> Self {
        Self { family: Family::A, rank: n, m: 0 }
    }
    pub fn b(n: usize) -> Self {
        Self { family: Family::B, rank: n, m: 0 }
    }
    pub fn d(n: usize) -> Self {
        Self { family: Family::D, rank: n, m: 0 }
    }
    pub fn i2(m: u32) -> Self {
        Self { family: Family::I2, rank: 2, m }
    }

    pub fn validate(&self) -> Result<()> {
        let ok = match self.family {
            Family::A => (1..=7).contains(&self.rank),
            Family::B => (2..=5).contains(&self.rank),
            Family::D => self.rank == 4,
            Family::I2 => self.rank == 2 && (2..=12).contains(&self.m),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Unsupported(format!("Coxeter type {self}")))
        }
    }

    pub fn degrees(&self) -> Vec<u32> {
        let n = self.rank as u32;
        match self.family {
            Family::A => (2..=n + 1).collect(),
            Family::B => (1..=n).map(|i| 2 * i).collect(),
            Family::D => {
                let mut d: Vec<u32> = (1..n).map(|i| 2 * i).collect();
                d.push(n);
                d.sort_unstable();
                d
            }
            Family::I2 => {
                let mut d = vec![2, self.m];
                d.sort_unstable();
                d
            }
        }
    }

    pub fn order(&self) -> u64 {
        self.degrees().iter().map(|&d| d as u64).product()
    }

    pub fn coxeter_number(&self) -> u32 {
        *self.degrees().iter().max().unwrap()
    }

    pub fn is_crystallographic(&self) -> bool {
        match self.family {
            Family::I2 => matches!(self.m, 2 | 3 | 4 | 6),
            _ => true,
        }
    }

    /// Number of positive roots, the length of the longest element.
    pub fn num_reflections(&self) -> u32 {
        self.degrees().iter().map(|d| d - 1).sum()
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A => write!(f, "A{}", self.rank),
            Family::B => write!(f, "B{}", self.rank),
            Family::D => write!(f, "D{}", self.rank),
            Family::I2 => write!(f, "I2:{}", self.m),
        }
    }
}

impl FromStr for CoxeterType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::InvalidInput(format!("cannot parse Coxeter type '{s}'"));
        if t.eq_ignore_ascii_case("G2") {
            return Ok(Self::i2(6));
        }
        let ty = if let Some(rest) = t.strip_prefix("I2") {
            let rest = rest.trim_start_matches([':', '(']).trim_end_matches(')');
            Self::i2(rest.parse().map_err(|_| bad())?)
        } else {
            let (f, n) = t.split_at(1.min(t.len()));
            let n: usize = n.parse().map_err(|_| bad())?;
            match f {
                "A" | "a" => Self::a(n),
                "B" | "b" => Self::b(n),
                "D" | "d" => Self::d(n),
                _ => return Err(bad()),
            }
        };
        ty.validate()?;
        Ok(ty)
    }
}

/// A set of simple generators as a bit mask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenSet(pub u32);

impl GenSet {
    pub fn empty() -> Self {
        Self(0)
    }
    pub fn full(rank: usize) -> Self {
        Self((1u32 << rank) - 1)
    }
    pub fn from_gens<I: IntoIterator<Item = usize>>(it: I) -> Self {
        Self(it.into_iter().fold(0, |m, s| m | (1 << s)))
    }
    /// Parse a 1-based list like `1,3`.
    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        let mut out = Self::empty();
        for tok in text.split([',', ' ']).filter(|t| !t.is_empty()) {
            let s: usize =
                tok.trim().parse().map_err(|_| Error::InvalidInput(format!("bad generator '{tok}'")))?;
            if s == 0 || s > rank {
                return Err(Error::InvalidInput(format!("generator {s} out of range 1..={rank}")));
            }
            out = out.with(s - 1);
        }
        Ok(out)
    }
    pub fn contains(&self, s: usize) -> bool {
        self.0 >> s & 1 == 1
    }
    pub fn with(&self, s: usize) -> Self {
        Self(self.0 | (1 << s))
    }
    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }
    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }
    pub fn is_superset(&self, other: GenSet) -> bool {
        self.0 & other.0 == other.0
    }
    pub fn complement(&self, rank: usize) -> Self {
        Self(!self.0 & Self::full(rank).0)
    }
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..32).filter(move |s| self.contains(*s))
    }
    /// All subsets of the first `rank` generators, in increasing mask order.
    pub fn all(rank: usize) -> impl Iterator<Item = GenSet> {
        (0..(1u32 << rank)).map(GenSet)
    }
    /// 1-based generator labels.
    pub fn labels(&self) -> Vec<usize> {
        self.iter().map(|s| s + 1).collect()
    }
}

impl fmt::Display for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l: Vec<String> = self.labels().iter().map(|s| s.to_string()).collect();
        write!(f, "{{{}}}", l.join(","))
    }
}

/// Conjugacy data of an element acting on the reflection representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CycleData {
    /// Cycle lengths of a permutation of `rank + 1` points; the reflection
    /// representation is the permutation module minus the trivial summand.
    Perm(Vec<usize>),
    /// Cycles of a signed permutation, flagged when the product of signs is negative.
    Signed(Vec<(usize, bool)>),
    /// Rotation through `2*pi*k/m`.
    Rotation(u32),
    Reflection,
}

pub struct CoxeterSystem {
    ty: CoxeterType,
    order: usize,
    models: Vec<Vec<i32>>,
    lengths: Vec<u32>,
    rmul: Vec<u32>,
    lmul: Vec<u32>,
    inverse: Vec<u32>,
    longest: u32,
    coxeter_matrix: Vec<Vec<u32>>,
}

impl fmt::Debug for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoxeterSystem({})", self.ty)
    }
}

impl PartialEq for CoxeterSystem {
    fn eq(&self, other: &Self) -> bool {
        self.ty == other.ty
    }
}

fn cache() -> &'static Mutex<HashMap<CoxeterType, Arc<CoxeterSystem>>> {
    static CACHE: OnceLock<Mutex<HashMap<CoxeterType, Arc<CoxeterSystem>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

impl CoxeterSystem {
    /// Build (or fetch a cached copy of) the system of the given type.
    pub fn get(ty: CoxeterType) -> Result<Arc<Self>> {
        ty.validate()?;
        if let Some(sys) = cache().lock().unwrap().get(&ty) {
            return Ok(sys.clone());
        }
        let sys = Arc::new(Self::build(ty)?);
        cache().lock().unwrap().insert(ty, sys.clone());
        Ok(sys)
    }

    pub fn parse(text: &str) -> Result<Arc<Self>> {
        Self::get(text.parse()?)
    }

    fn identity_model(ty: CoxeterType) -> Vec<i32> {
        match ty.family {
            Family::A => (1..=ty.rank as i32 + 1).collect(),
            Family::B | Family::D => (1..=ty.rank as i32).collect(),
            Family::I2 => vec![0, 1],
        }
    }

    /// Right multiplication by a generator in the concrete model.
    fn model_rmul(ty: CoxeterType, w: &[i32], s: usize) -> Vec<i32> {
        let mut v = w.to_vec();
        let n = ty.rank;
        match ty.family {
            Family::A => v.swap(s, s + 1),
            Family::B => {
                if s + 1 < n {
                    v.swap(s, s + 1);
                } else {
                    v[n - 1] = -v[n - 1];
                }
            }
            Family::D => {
                if s + 1 < n {
                    v.swap(s, s + 1);
                } else {
                    let (a, b) = (v[n - 2], v[n - 1]);
                    v[n - 2] = -b;
                    v[n - 1] = -a;
                }
            }
            Family::I2 => {
                // element x -> eps*x + k stored as [k, eps]; s1: x -> -x, s2: x -> 1 - x
                let m = ty.m as i32;
                let (k, eps) = (v[0], v[1]);
                let ks = if s == 0 { 0 } else { 1 };
                v[0] = (eps * ks + k).rem_euclid(m);
                v[1] = -eps;
            }
        }
        v
    }

    fn build(ty: CoxeterType) -> Result<Self> {
        let order = ty.order();
        if order > MAX_ORDER {
            return Err(Error::TooLarge(format!("|W| = {order} exceeds {MAX_ORDER}")));
        }
        let r = ty.rank;
        let mut index: HashMap<Vec<i32>, u32> = HashMap::new();
        let mut models = vec![Self::identity_model(ty)];
        let mut lengths = vec![0u32];
        index.insert(models[0].clone(), 0);
        let mut queue = VecDeque::from([0u32]);
        let mut rmul_rows: Vec<Vec<u32>> = Vec::new();
        while let Some(w) = queue.pop_front() {
            let mut row = vec![0u32; r];
            for (s, slot) in row.iter_mut().enumerate() {
                let next = Self::model_rmul(ty, &models[w as usize], s);
                let id = match index.get(&next) {
                    Some(&id) => id,
                    None => {
                        let id = models.len() as u32;
                        index.insert(next.clone(), id);
                        models.push(next);
                        lengths.push(lengths[w as usize] + 1);
                        queue.push_back(id);
                        id
                    }
                };
                *slot = id;
            }
            if rmul_rows.len() <= w as usize {
                rmul_rows.resize(w as usize + 1, Vec::new());
            }
            rmul_rows[w as usize] = row;
        }
        if models.len() as u64 != order {
            return Err(Error::InvalidInput(format!("model of {ty} has {} elements", models.len())));
        }
        let n = models.len();
        let mut rmul = vec![0u32; r * n];
        for (w, row) in rmul_rows.iter().enumerate() {
            for s in 0..r {
                rmul[s * n + w] = row[s];
            }
        }
        // inverse via reduced words: w = s1...sk  =>  w^{-1} = sk...s1
        let mut inverse = vec![0u32; n];
        let mut word_of: Vec<Vec<u8>> = vec![Vec::new(); n];
        let mut order_by_len: Vec<u32> = (0..n as u32).collect();
        order_by_len.sort_by_key(|&w| lengths[w as usize]);
        for &w in &order_by_len {
            if w == 0 {
                continue;
            }
            let (s, prev) = (0..r)
                .map(|s| (s, rmul[s * n + w as usize]))
                .find(|&(_, p)| lengths[p as usize] < lengths[w as usize])
                .unwrap();
            let mut word = word_of[prev as usize].clone();
            word.push(s as u8);
            word_of[w as usize] = word;
        }
        for w in 0..n {
            let mut x = 0u32;
            for &s in word_of[w].iter().rev() {
                x = rmul[s as usize * n + x as usize];
            }
            inverse[w] = x;
        }
        let mut lmul = vec![0u32; r * n];
        for s in 0..r {
            for w in 0..n {
                // s*w = (w^{-1} s)^{-1}
                lmul[s * n + w] = inverse[rmul[s * n + inverse[w] as usize] as usize];
            }
        }
        let longest = (0..n as u32).max_by_key(|&w| lengths[w as usize]).unwrap();
        let mut coxeter_matrix = vec![vec![1u32; r]; r];
        for s in 0..r {
            for t in 0..r {
                if s == t {
                    continue;
                }
                let mut x = 0u32;
                let mut k = 0;
                loop {
                    x = rmul[s * n + x as usize];
                    x = rmul[t * n + x as usize];
                    k += 1;
                    if x == 0 {
                        break;
                    }
                }
                coxeter_matrix[s][t] = k;
            }
        }
        Ok(Self { ty, order: n, models, lengths, rmul, lmul, inverse, longest, coxeter_matrix })
    }

    pub fn ty(&self) -> CoxeterType {
        self.ty
    }
    pub fn rank(&self) -> usize {
        self.ty.rank
    }
    pub fn order(&self) -> usize {
        self.order
    }
    pub fn elements(&self) -> std::ops::Range<u32> {
        0..self.order as u32
    }
    pub fn identity(&self) -> u32 {
        0
    }
    pub fn longest(&self) -> u32 {
        self.longest
    }
    pub fn length(&self, w: u32) -> u32 {
        self.lengths[w as usize]
    }
    pub fn inverse(&self, w: u32) -> u32 {
        self.inverse[w as usize]
    }
    /// `w * s`.
    pub fn rmul(&self, w: u32, s: usize) -> u32 {
        self.rmul[s * self.order + w as usize]
    }
    /// `s * w`.
    pub fn lmul(&self, s: usize, w: u32) -> u32 {
        self.lmul[s * self.order + w as usize]
    }
    pub fn coxeter_matrix(&self) -> &[Vec<u32>] {
        &self.coxeter_matrix
    }
    /// The concrete model: one-line notation for A, signed one-line notation
    /// for B and D, `[k, eps]` for `x -> eps*x + k` in I2.
    pub fn model(&self, w: u32) -> &[i32] {
        &self.models[w as usize]
    }

    pub fn generator(&self, s: usize) -> u32 {
        self.rmul(0, s)
    }

    pub fn mul(&self, x: u32, y: u32) -> u32 {
        let mut out = x;
        for s in self.reduced_word(y) {
            out = self.rmul(out, s);
        }
        out
    }

    /// Element from a word of 0-based generator indices.
    pub fn from_word(&self, word: &[usize]) -> u32 {
        word.iter().fold(0, |w, &s| self.rmul(w, s))
    }

    /// Lexicographically smallest reduced word, 0-based.
    pub fn reduced_word(&self, w: u32) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.length(w) as usize);
        let mut x = w;
        while x != 0 {
            let s = (0..self.rank()).find(|&s| self.length(self.lmul(s, x)) < self.length(x)).unwrap();
            out.push(s);
            x = self.lmul(s, x);
        }
        out
    }

    pub fn left_ascents(&self, w: u32) -> GenSet {
        GenSet::from_gens((0..self.rank()).filter(|&s| self.length(self.lmul(s, w)) > self.length(w)))
    }

    pub fn left_descents(&self, w: u32) -> GenSet {
        self.left_ascents(w).complement(self.rank())
    }

    pub fn right_descents(&self, w: u32) -> GenSet {
        GenSet::from_gens((0..self.rank()).filter(|&s| self.length(self.rmul(w, s)) < self.length(w)))
    }

    /// Elements of the standard parabolic subgroup `W_J`.
    pub fn parabolic(&self, j: GenSet) -> Vec<u32> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut out = vec![0u32];
        let mut i = 0;
        while i < out.len() {
            let w = out[i];
            for s in j.iter() {
                let x = self.rmul(w, s);
                if !seen[x as usize] {
                    seen[x as usize] = true;
                    out.push(x);
                }
            }
            i += 1;
        }
        out.sort_unstable();
        out
    }

    pub fn longest_in(&self, j: GenSet) -> u32 {
        self.parabolic(j).into_iter().max_by_key(|&w| self.length(w)).unwrap()
    }

    /// Minimal representatives `W^{J,-} = { v : Asc(v) contains J }`.
    pub fn coset_reps_minus(&self, j: GenSet) -> Vec<u32> {
        self.elements().filter(|&v| self.left_ascents(v).is_superset(j)).collect()
    }

    /// Maximal representatives `W^{J,+} = { v : Des(v) contains J }`.
    pub fn coset_reps_plus(&self, j: GenSet) -> Vec<u32> {
        self.elements().filter(|&v| self.left_descents(v).is_superset(j)).collect()
    }

    /// Connected components of `J` in the Coxeter graph.
    pub fn components(&self, j: GenSet) -> Vec<GenSet> {
        let mut left = j;
        let mut out = Vec::new();
        while !left.is_empty() {
            let s = left.0.trailing_zeros() as usize;
            let mut comp = GenSet::empty().with(s);
            let mut stack = vec![s];
            while let Some(a) = stack.pop() {
                for b in j.iter() {
                    if !comp.contains(b) && self.coxeter_matrix[a][b] >= 3 {
                        comp = comp.with(b);
                        stack.push(b);
                    }
                }
            }
            left = GenSet(left.0 & !comp.0);
            out.push(comp);
        }
        out
    }

    fn component_degrees(&self, comp: GenSet) -> Vec<u32> {
        let k = comp.len() as u32;
        let gens: Vec<usize> = comp.iter().collect();
        if k == 1 {
            return vec![2];
        }
        if k == 2 {
            let m = self.coxeter_matrix[gens[0]][gens[1]];
            let mut d = vec![2, m];
            d.sort_unstable();
            return d;
        }
        let has_four = gens.iter().any(|&a| gens.iter().any(|&b| self.coxeter_matrix[a][b] == 4));
        let branch = gens.iter().any(|&a| gens.iter().filter(|&&b| self.coxeter_matrix[a][b] == 3).count() >= 3);
        if has_four {
            (1..=k).map(|i| 2 * i).collect()
        } else if branch {
            let mut d: Vec<u32> = (1..k).map(|i| 2 * i).collect();
            d.push(k);
            d.sort_unstable();
            d
        } else {
            (2..=k + 1).collect()
        }
    }

    /// Degrees of `W_J`, padded with `1` up to the rank.
    pub fn parabolic_degrees(&self, j: GenSet) -> Vec<u32> {
        let mut d: Vec<u32> = self.components(j).into_iter().flat_map(|c| self.component_degrees(c)).collect();
        d.sort_unstable();
        let mut out = vec![1; self.rank() - d.len()];
        out.extend(d);
        out
    }

    /// Exponents of `W_J` on the reflection representation twisted by `p`,
    /// padded with `0`, listed so that entry `i` pairs with
    /// `parabolic_degrees(j)[i]`.
    pub fn parabolic_exponents(&self, j: GenSet, p: u32) -> Vec<u32> {
        let degs = self.parabolic_degrees(j);
        if self.ty.family == Family::I2 && j == GenSet::full(2) {
            let m = self.ty.m;
            let mut t = p % m;
            if t > m / 2 {
                t = m - t;
            }
            let mut e = vec![t, m - t];
            e.sort_unstable();
            return e;
        }
        degs.iter().map(|d| d - 1).collect()
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.ty.degrees()
    }

    pub fn coxeter_number(&self) -> u32 {
        self.ty.coxeter_number()
    }

    /// `sum_w X^{l(w)}`.
    pub fn poincare(&self) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for w in self.elements() {
            p.add_term(2 * self.length(w) as i64, BigInt::one());
        }
        p
    }

    pub fn cycle_data(&self, w: u32) -> CycleData {
        let m = self.model(w);
        match self.ty.family {
            Family::A => {
                let n = m.len();
                let mut seen = vec![false; n];
                let mut cyc = Vec::new();
                for i in 0..n {
                    if seen[i] {
                        continue;
                    }
                    let mut len = 0;
                    let mut j = i;
                    while !seen[j] {
                        seen[j] = true;
                        j = (m[j] - 1) as usize;
                        len += 1;
                    }
                    cyc.push(len);
                }
                cyc.sort_unstable();
                CycleData::Perm(cyc)
            }
            Family::B | Family::D => {
                let n = m.len();
                let mut seen = vec![false; n];
                let mut cyc = Vec::new();
                for i in 0..n {
                    if seen[i] {
                        continue;
                    }
                    let mut len = 0;
                    let mut neg = false;
                    let mut j = i;
                    while !seen[j] {
                        seen[j] = true;
                        neg ^= m[j] < 0;
                        j = (m[j].unsigned_abs() - 1) as usize;
                        len += 1;
                    }
                    cyc.push((len, neg));
                }
                cyc.sort_unstable();
                CycleData::Signed(cyc)
            }
            Family::I2 => {
                if m[1] == 1 {
                    CycleData::Rotation(m[0] as u32)
                } else {
                    CycleData::Reflection
                }
            }
        }
    }

    /// `det(1 - t w | V)` as a polynomial in `t` with integer coefficients,
    /// when it is rational (always, except rotations in non-crystallographic
    /// dihedral groups).
    pub fn det_one_minus(&self, w: u32) -> Option<Vec<BigInt>> {
        let mut poly = vec![BigInt::one()];
        let mul = |poly: &mut Vec<BigInt>, len: usize, sign: i64| {
            // times (1 + sign * t^len)
            let mut out = vec![BigInt::zero(); poly.len() + len];
            for (i, c) in poly.iter().enumerate() {
                out[i] += c;
                out[i + len] += c * sign;
            }
            *poly = out;
        };
        match self.cycle_data(w) {
            CycleData::Perm(cyc) => {
                for l in cyc {
                    mul(&mut poly, l, -1);
                }
                // divide by (1 - t)
                let mut q = vec![BigInt::zero(); poly.len() - 1];
                let mut acc = BigInt::zero();
                for i in 0..q.len() {
                    acc += &poly[i];
                    q[i] = acc.clone();
                }
                poly = q;
            }
            CycleData::Signed(cyc) => {
                for (l, neg) in cyc {
                    mul(&mut poly, l, if neg { 1 } else { -1 });
                }
            }
            CycleData::Reflection => {
                poly = vec![BigInt::one(), BigInt::zero(), -BigInt::one()];
            }
            CycleData::Rotation(k) => {
                let m = self.ty.m;
                let tr: i64 = match (k * 12 / m, (k * 12) % m == 0) {
                    (0, true) | (12, true) => 2,
                    (2, true) | (10, true) => 1,
                    (3, true) | (9, true) => 0,
                    (4, true) | (8, true) => -1,
                    (6, true) => -2,
                    _ => return None,
                };
                poly = vec![BigInt::one(), BigInt::from(-tr), BigInt::one()];
            }
        }
        while poly.len() > 1 && poly.last().unwrap().is_zero() {
            poly.pop();
        }
        Some(poly)
    }

    /// `(1/|W_J|) sum_{w in W_J} (sign)^{l(w)} w`.
    pub fn symmetrizer(&self, j: GenSet, sign: Sign) -> GroupAlgebraElt {
        let elems = self.parabolic(j);
        let inv = BigRational::new(BigInt::one(), BigInt::from(elems.len()));
        let mut out = GroupAlgebraElt::default();
        for w in elems {
            let c = if sign == Sign::Minus && self.length(w) % 2 == 1 { -inv.clone() } else { inv.clone() };
            out.terms.insert(w, c);
        }
        out
    }

    /// The idempotent projecting onto `wedge^k V`: the `(-t)^k` coefficient of
    /// `(1/|W|) sum_w det(1 - t w|V) w`.
    pub fn wedge_idempotent(&self, k: usize) -> Result<GroupAlgebraElt> {
        let inv = BigRational::new(BigInt::one(), BigInt::from(self.order));
        let mut out = GroupAlgebraElt::default();
        for w in self.elements() {
            let det = self
                .det_one_minus(w)
                .ok_or_else(|| Error::Unsupported(format!("irrational character values in {}", self.ty)))?;
            let mut c = det.get(k).cloned().unwrap_or_default();
            if k % 2 == 1 {
                c = -c;
            }
            if !c.is_zero() {
                out.terms.insert(w, BigRational::from_integer(c) * &inv);
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl FromStr for Sign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+" | "plus" | "p" => Ok(Sign::Plus),
            "-" | "minus" | "m" => Ok(Sign::Minus),
            other => Err(Error::InvalidInput(format!("sign must be + or -, got '{other}'"))),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Element of the rational group algebra `Q[W]`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupAlgebraElt {
    pub terms: std::collections::BTreeMap<u32, BigRational>,
}

impl GroupAlgebraElt {
    pub fn basis(w: u32) -> Self {
        let mut terms = std::collections::BTreeMap::new();
        terms.insert(w, BigRational::one());
        Self { terms }
    }

    pub fn coeff(&self, w: u32) -> BigRational {
        self.terms.get(&w).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn mul(&self, sys: &CoxeterSystem, rhs: &Self) -> Self {
        let mut out = std::collections::BTreeMap::<u32, BigRational>::new();
        for (&x, a) in &self.terms {
            for (&y, b) in &rhs.terms {
                let e = out.entry(sys.mul(x, y)).or_insert_with(BigRational::zero);
                *e += a * b;
            }
        }
        out.retain(|_, c| !c.is_zero());
        Self { terms: out }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.terms.clone();
        for (&w, c) in &rhs.terms {
            *out.entry(w).or_insert_with(BigRational::zero) += c;
        }
        out.retain(|_, c| !c.is_zero());
        Self { terms: out }
    }
}

/// Parse a 1-based word such as `1 2 3` or `1,2,3`.
pub fn parse_word(text: &str, rank: usize) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for tok in text.split([',', ' ']).filter(|t| !t.is_empty()) {
        let s: usize = tok.parse().map_err(|_| Error::InvalidInput(format!("bad letter '{tok}'")))?;
        if s == 0 || s > rank {
            return Err(Error::InvalidInput(format!("letter {s} out of range 1..={rank}")));
        }
        out.push(s - 1);
    }
    Ok(out)
}

/// The standard Coxeter word `s_1 s_2 ... s_r`, 0-based.
pub fn standard_coxeter_word(rank: usize) -> Vec<usize> {
    (0..rank).collect()
}

/// All orderings of the simple generators.
pub fn all_coxeter_words(rank: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for s in 0..used.len() {
            if !used[s] {
                used[s] = true;
                prefix.push(s);
                rec(prefix, used, out);
                prefix.pop();
                used[s] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; rank], &mut out);
    out
}

/// `word` repeated `p` times.
pub fn power_word(word: &[usize], p: usize) -> Vec<usize> {
    word.iter().copied().cycle().take(word.len() * p).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_longest() {
        for t in ["A1", "A3", "B3", "D4", "I2:5", "G2"] {
            let w = CoxeterSystem::parse(t).unwrap();
            assert_eq!(w.order() as u64, w.ty().order(), "{t}");
            assert_eq!(w.length(w.longest()), w.ty().num_reflections(), "{t}");
        }
    }

    #[test]
    fn coxeter_matrices() {
        let b = CoxeterSystem::parse("B3").unwrap();
        assert_eq!(b.coxeter_matrix()[1][2], 4);
        assert_eq!(b.coxeter_matrix()[0][1], 3);
        assert_eq!(b.coxeter_matrix()[0][2], 2);
        let d = CoxeterSystem::parse("D4").unwrap();
        assert_eq!(d.coxeter_matrix()[1][3], 3);
        assert_eq!(d.coxeter_matrix()[2][3], 2);
        let i = CoxeterSystem::parse("I2:7").unwrap();
        assert_eq!(i.coxeter_matrix()[0][1], 7);
    }

    #[test]
    fn cap_rejects_large() {
        assert!(CoxeterSystem::parse("A8").is_err());
        assert!(CoxeterSystem::parse("I2:13").is_err());
    }
}
