//! Brute-force point counts for the flag variety of `GL_n(F_q)`.
//!
//! Vectors of `F_q^n` are encoded as integers `0..q^n` (base-`q` digits are
//! the coordinates), and a subspace is the bit mask of its vectors, which is
//! canonical. A group element is stored as the images of the basis vectors
//! together with its action on all of `F_q^n`.
//!
//! Flag positions follow `hB -> gB` iff `h^{-1} g` lies in `BwB`, where the
//! permutation matrix of `w` sends `e_a` to `e_{w(a)}`.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::coxeter::{CoxeterSystem, CoxeterType, GenSet, Sign};
use crate::deodhar;
use crate::error::{Error, Result};
use crate::hecke::{self, HeckeElt};
use crate::par;

/// Largest group the oracle will enumerate.
pub const MAX_GROUP_ORDER: u64 = 20_000_000;

pub struct FqGroup {
    n: usize,
    q: u32,
    sys: Arc<CoxeterSystem>,
    nvec: usize,
    add: Vec<u8>,
    neg: Vec<u8>,
    smul: Vec<u8>,
    /// Basis images, `n` per element.
    cols: Vec<u8>,
    /// Full vector maps, `nvec` per element.
    vmaps: Vec<u8>,
    elem_index: HashMap<Vec<u8>, u32>,
    identity: u32,
    unipotents: Vec<u32>,
    borel: Vec<u32>,
    flags: Vec<Vec<u64>>,
    flag_index: HashMap<Vec<u64>, u32>,
    pos: Vec<u32>,
    perm_index: HashMap<Vec<i32>, u32>,
}

/// `G/P_J` as partial flags keeping the subspaces of dimension `i` with `s_i` not in `J`.
pub struct PartialFlags {
    pub j: GenSet,
    pub dims: Vec<usize>,
    /// Each partial flag as the chain `0 = W_0 < W_1 < ... < W_k = F_q^n`.
    pub chains: Vec<Vec<u64>>,
    /// Projection of each full flag.
    pub of_full: Vec<u32>,
    /// One full flag refining each partial flag.
    pub refinement: Vec<u32>,
}

pub fn group_order(n: usize, q: u32) -> u64 {
    let qn = (q as u64).pow(n as u32);
    (0..n).map(|i| qn - (q as u64).pow(i as u32)).product()
}

fn is_prime(q: u32) -> bool {
    q >= 2 && (2..q).all(|d| !q.is_multiple_of(d))
}

impl FqGroup {
    pub fn build(n: usize, q: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidInput("n must be at least 2".into()));
        }
        if !is_prime(q) {
            return Err(Error::Unsupported(format!("q = {q}: only prime fields are implemented")));
        }
        let order = if n <= 6 { group_order(n, q) } else { u64::MAX };
        let nvec = (q as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
        if order > MAX_GROUP_ORDER || nvec > 64 || n > 4 || (n == 4 && q != 2) {
            return Err(Error::TooLarge(format!("GL_{n}(F_{q}) is beyond the enumeration limit")));
        }
        let nvec = nvec as usize;
        let sys = CoxeterSystem::get(CoxeterType::a(n - 1))?;
        let digits = |v: usize| -> Vec<u32> { (0..n).map(|i| (v / (q as usize).pow(i as u32)) as u32 % q).collect() };
        let undigits = |d: &[u32]| -> usize { d.iter().rev().fold(0usize, |acc, &x| acc * q as usize + x as usize) };
        let mut add = vec![0u8; nvec * nvec];
        let mut neg = vec![0u8; nvec];
        let mut smul = vec![0u8; q as usize * nvec];
        for a in 0..nvec {
            let da = digits(a);
            for b in 0..nvec {
                let db = digits(b);
                let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % q).collect();
                add[a * nvec + b] = undigits(&s) as u8;
            }
            let m: Vec<u32> = da.iter().map(|x| (q - x) % q).collect();
            neg[a] = undigits(&m) as u8;
            for c in 0..q {
                let m: Vec<u32> = da.iter().map(|x| x * c % q).collect();
                smul[c as usize * nvec + a] = undigits(&m) as u8;
            }
        }
        let mut g = FqGroup {
            n,
            q,
            sys,
            nvec,
            add,
            neg,
            smul,
            cols: Vec::new(),
            vmaps: Vec::new(),
            elem_index: HashMap::new(),
            identity: 0,
            unipotents: Vec::new(),
            borel: Vec::new(),
            flags: Vec::new(),
            flag_index: HashMap::new(),
            pos: Vec::new(),
            perm_index: HashMap::new(),
        };
        g.enumerate_elements();
        if g.order() as u64 != order {
            return Err(Error::DomainError("group order mismatch".into()));
        }
        let id: Vec<u8> = (0..n).map(|i| (q as usize).pow(i as u32) as u8).collect();
        g.identity = g.elem_index[&id];
        g.enumerate_flags();
        g.unipotents = (0..g.order() as u32).filter(|&x| g.is_unipotent(x)).collect();
        let std = g.std_flag_index();
        g.borel = (0..g.order() as u32).filter(|&x| g.act_flag(x, std) == std).collect();
        for w in g.sys.elements() {
            g.perm_index.insert(g.sys.model(w).to_vec(), w);
        }
        let nf = g.flags.len();
        let pos = par::map_range(nf * nf, |k| g.bruhat_position(k / nf, k % nf));
        g.pos = pos;
        Ok(g)
    }

    fn enumerate_elements(&mut self) {
        let mut stack: Vec<(Vec<u8>, u64)> = vec![(Vec::new(), 1)];
        let mut all = Vec::new();
        while let Some((cols, span)) = stack.pop() {
            if cols.len() == self.n {
                all.push(cols);
                continue;
            }
            for v in (0..self.nvec).rev() {
                if span >> v & 1 == 0 {
                    let mut c = cols.clone();
                    c.push(v as u8);
                    stack.push((c, self.span_with(span, v)));
                }
            }
        }
        for (i, c) in all.iter().enumerate() {
            self.elem_index.insert(c.clone(), i as u32);
            self.cols.extend_from_slice(c);
            let vm = self.vmap_from_cols(c);
            self.vmaps.extend_from_slice(&vm);
        }
    }

    fn vadd(&self, a: usize, b: usize) -> usize {
        self.add[a * self.nvec + b] as usize
    }

    fn vsub(&self, a: usize, b: usize) -> usize {
        self.vadd(a, self.neg[b] as usize)
    }

    fn vscale(&self, c: u32, a: usize) -> usize {
        self.smul[c as usize * self.nvec + a] as usize
    }

    /// The span of a subspace (as a mask) and one more vector.
    fn span_with(&self, mask: u64, v: usize) -> u64 {
        let mut out = mask;
        for x in bits(mask) {
            for c in 1..self.q {
                out |= 1u64 << self.vadd(x, self.vscale(c, v));
            }
        }
        out
    }

    fn vmap_from_cols(&self, cols: &[u8]) -> Vec<u8> {
        let mut out = vec![0u8; self.nvec];
        let qu = self.q as usize;
        for (v, slot) in out.iter_mut().enumerate() {
            let mut acc = 0usize;
            let mut rest = v;
            for &c in cols {
                acc = self.vadd(acc, self.vscale((rest % qu) as u32, c as usize));
                rest /= qu;
            }
            *slot = acc as u8;
        }
        out
    }

    fn enumerate_flags(&mut self) {
        let std: Vec<u64> = (1..self.n).map(|i| self.std_subspace(i)).collect();
        self.flags.push(std.clone());
        self.flag_index.insert(std.clone(), 0);
        for x in 0..self.order() as u32 {
            let img: Vec<u64> = std.iter().map(|&m| self.act_subspace(x, m)).collect();
            if !self.flag_index.contains_key(&img) {
                self.flag_index.insert(img.clone(), self.flags.len() as u32);
                self.flags.push(img);
            }
        }
    }

    fn std_subspace(&self, i: usize) -> u64 {
        let size = (self.q as usize).pow(i as u32);
        if size == 64 {
            u64::MAX
        } else {
            (1u64 << size) - 1
        }
    }

    fn full_space(&self) -> u64 {
        self.std_subspace(self.n)
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn q(&self) -> u32 {
        self.q
    }
    pub fn weyl(&self) -> &Arc<CoxeterSystem> {
        &self.sys
    }
    pub fn order(&self) -> usize {
        self.cols.len() / self.n
    }
    pub fn identity(&self) -> u32 {
        self.identity
    }
    pub fn num_flags(&self) -> usize {
        self.flags.len()
    }
    pub fn flag(&self, f: usize) -> &[u64] {
        &self.flags[f]
    }
    /// The standard flag `span(e_1) < span(e_1, e_2) < ...`, fixed by `B`.
    pub fn std_flag_index(&self) -> usize {
        0
    }
    pub fn unipotents(&self) -> &[u32] {
        &self.unipotents
    }
    pub fn borel(&self) -> &[u32] {
        &self.borel
    }

    /// Entry `(r, c)` of the matrix of `x`.
    pub fn entry(&self, x: u32, r: usize, c: usize) -> u32 {
        let col = self.cols[x as usize * self.n + c] as u32;
        col / self.q.pow(r as u32) % self.q
    }

    pub fn matrix(&self, x: u32) -> Vec<Vec<u32>> {
        (0..self.n).map(|r| (0..self.n).map(|c| self.entry(x, r, c)).collect()).collect()
    }

    pub fn from_matrix(&self, m: &[Vec<u32>]) -> Option<u32> {
        let cols: Vec<u8> = (0..self.n)
            .map(|c| (0..self.n).rev().fold(0u32, |acc, r| acc * self.q + m[r][c] % self.q) as u8)
            .collect();
        self.elem_index.get(&cols).copied()
    }

    fn vmap(&self, x: u32) -> &[u8] {
        &self.vmaps[x as usize * self.nvec..(x as usize + 1) * self.nvec]
    }

    pub fn mul(&self, x: u32, y: u32) -> u32 {
        let vm = self.vmap(x);
        let cols: Vec<u8> = self.cols[y as usize * self.n..(y as usize + 1) * self.n]
            .iter()
            .map(|&c| vm[c as usize])
            .collect();
        self.elem_index[&cols]
    }

    pub fn inverse(&self, x: u32) -> u32 {
        let vm = self.vmap(x);
        let cols: Vec<u8> = (0..self.n)
            .map(|i| {
                let e = (self.q as usize).pow(i as u32) as u8;
                vm.iter().position(|&y| y == e).unwrap() as u8
            })
            .collect();
        self.elem_index[&cols]
    }

    /// `(x - 1)^n = 0`.
    pub fn is_unipotent(&self, x: u32) -> bool {
        let vm = self.vmap(x);
        (0..self.nvec).all(|v| {
            let mut y = v;
            for _ in 0..self.n {
                y = self.vsub(vm[y] as usize, y);
            }
            y == 0
        })
    }

    pub fn act_subspace(&self, x: u32, mask: u64) -> u64 {
        let vm = self.vmap(x);
        bits(mask).fold(0u64, |acc, v| acc | 1u64 << vm[v])
    }

    /// Image of the subspace under `x - 1`.
    fn nil_image(&self, x: u32, mask: u64) -> u64 {
        let vm = self.vmap(x);
        bits(mask).fold(0u64, |acc, v| acc | 1u64 << self.vsub(vm[v] as usize, v))
    }

    pub fn act_flag(&self, x: u32, f: usize) -> usize {
        let img: Vec<u64> = self.flags[f].iter().map(|&m| self.act_subspace(x, m)).collect();
        self.flag_index[&img] as usize
    }

    fn dim(&self, mask: u64) -> usize {
        let mut size = mask.count_ones() as u64;
        let mut d = 0;
        while size > 1 {
            size /= self.q as u64;
            d += 1;
        }
        d
    }

    fn subspace(&self, f: usize, i: usize) -> u64 {
        if i == 0 {
            1
        } else if i == self.n {
            self.full_space()
        } else {
            self.flags[f][i - 1]
        }
    }

    /// Relative position from the rank matrix `dim(F_i cap F'_j)`.
    pub fn bruhat_position(&self, f1: usize, f2: usize) -> u32 {
        let n = self.n;
        let r = |i: usize, j: usize| self.dim(self.subspace(f1, i) & self.subspace(f2, j)) as i64;
        let mut line = vec![0i32; n];
        for j in 1..=n {
            for i in 1..=n {
                if r(i, j) - r(i - 1, j) - r(i, j - 1) + r(i - 1, j - 1) == 1 {
                    line[j - 1] = i as i32;
                }
            }
        }
        self.perm_index[&line]
    }

    /// Cached position of a pair of flags.
    pub fn position(&self, f1: usize, f2: usize) -> u32 {
        self.pos[f1 * self.flags.len() + f2]
    }

    /// The flag `w B` (the image of the standard flag under the permutation matrix of `w`).
    pub fn permutation_flag(&self, w: u32) -> usize {
        let cols: Vec<u8> = self
            .sys
            .model(w)
            .iter()
            .map(|&a| (self.q as usize).pow(a as u32 - 1) as u8)
            .collect();
        self.act_flag(self.elem_index[&cols], 0)
    }

    pub fn partial_flags(&self, j: GenSet) -> PartialFlags {
        let dims: Vec<usize> = (1..self.n).filter(|&i| !j.contains(i - 1)).collect();
        let mut index: HashMap<Vec<u64>, u32> = HashMap::new();
        let mut chains = Vec::new();
        let mut of_full = Vec::with_capacity(self.flags.len());
        let mut refinement = Vec::new();
        for f in 0..self.flags.len() {
            let mut chain = vec![1u64];
            chain.extend(dims.iter().map(|&i| self.flags[f][i - 1]));
            chain.push(self.full_space());
            let id = *index.entry(chain.clone()).or_insert_with(|| {
                chains.push(chain);
                refinement.push(f as u32);
                chains.len() as u32 - 1
            });
            of_full.push(id);
        }
        PartialFlags { j, dims, chains, of_full, refinement }
    }

    /// `u` lies in `y U_J y^{-1}` (minus) or `y V_J y^{-1}` (plus) for the
    /// partial flag `chain` of `y P_J`.
    pub fn in_springer(&self, u: u32, chain: &[u64], sign: Sign) -> bool {
        match sign {
            Sign::Minus => chain.windows(2).all(|w| self.nil_image(u, w[1]) & !w[0] == 0),
            Sign::Plus => {
                self.is_unipotent(u)
                    && chain[1..chain.len() - 1].iter().all(|&m| self.act_subspace(u, m) == m)
            }
        }
    }

    /// `|Spr_{J,u}^sign|`.
    pub fn springer_fiber(&self, j: GenSet, sign: Sign, u: u32) -> usize {
        self.partial_flags(j).chains.iter().filter(|c| self.in_springer(u, c, sign)).count()
    }

    /// For every unipotent (in the order of [`Self::unipotents`]), the partial
    /// flags of its Springer fiber.
    pub fn springer_members(&self, pf: &PartialFlags, sign: Sign) -> Vec<Vec<u32>> {
        par::map(&self.unipotents, |&u| {
            (0..pf.chains.len() as u32).filter(|&y| self.in_springer(u, &pf.chains[y as usize], sign)).collect()
        })
    }

    /// Minimal element of the left coset `W_J w`.
    pub fn min_left_coset(&self, j: GenSet, w: u32) -> u32 {
        let sys = &self.sys;
        let mut x = w;
        while let Some(s) = j.iter().find(|&s| sys.length(sys.lmul(s, x)) < sys.length(x)) {
            x = sys.lmul(s, x);
        }
        x
    }

    /// Stratum `v` of a partial flag relative to the standard flag:
    /// `P_J y^{-1} B = P_J v B`.
    pub fn stratum(&self, pf: &PartialFlags, y: u32) -> u32 {
        let f = pf.refinement[y as usize] as usize;
        self.min_left_coset(pf.j, self.position(f, 0))
    }

    /// Sums `weight(u)` over unipotents into the flag `u B`, then reads off a
    /// value per Weyl element, checking constancy on each `B`-orbit.
    fn per_position(&self, weights: &[u64]) -> Result<(Vec<u64>, Vec<u64>)> {
        let mut by_flag = vec![0u64; self.flags.len()];
        for (k, &u) in self.unipotents.iter().enumerate() {
            by_flag[self.act_flag(u, 0)] += weights[k];
        }
        let mut by_w: Vec<Option<u64>> = vec![None; self.sys.order()];
        for (f, &val) in by_flag.iter().enumerate() {
            let w = self.position(0, f) as usize;
            match by_w[w] {
                None => by_w[w] = Some(val),
                Some(prev) if prev != val => {
                    return Err(Error::DomainError(format!("pushforward not constant on O({w})")))
                }
                _ => {}
            }
        }
        Ok((by_w.into_iter().map(|v| v.unwrap_or(0)).collect(), by_flag))
    }

    /// `mult_! 1_{E_J^sign}` on each `O(w)`, indexed by Weyl element.
    pub fn mult_pushforward(&self, j: GenSet, sign: Sign) -> Result<Vec<u64>> {
        let pf = self.partial_flags(j);
        let members = self.springer_members(&pf, sign);
        let weights: Vec<u64> = members.iter().map(|m| m.len() as u64).collect();
        Ok(self.per_position(&weights)?.0)
    }

    /// `mult_! 1_{E_{J,v}^sign}` on each `O(w)`, for `v` in `W^{J,-}`.
    pub fn mult_pushforward_stratum(&self, j: GenSet, sign: Sign, v: u32) -> Result<Vec<u64>> {
        Ok(self.per_position(&self.stratum_weights(j, sign, v)?)?.0)
    }

    fn stratum_weights(&self, j: GenSet, sign: Sign, v: u32) -> Result<Vec<u64>> {
        if !self.sys.left_ascents(v).is_superset(j) {
            return Err(Error::InvalidInput("v must be a minimal coset representative".into()));
        }
        let pf = self.partial_flags(j);
        let strata: Vec<u32> = (0..pf.chains.len() as u32).map(|y| self.stratum(&pf, y)).collect();
        let members = self.springer_members(&pf, sign);
        Ok(members.iter().map(|m| m.iter().filter(|&&y| strata[y as usize] == v).count() as u64).collect())
    }

    fn max_word_len(&self) -> usize {
        match self.n {
            2 => 6,
            3 => 4,
            _ => 3,
        }
    }

    /// Number of flag chains `F_0 -> F_1 -> ... -> F_l` along `word`
    /// (0-based letters) starting from each flag with weight `init`.
    fn chain_counts(&self, init: &[u128], word: &[usize]) -> Result<Vec<u128>> {
        if word.len() > self.max_word_len() {
            return Err(Error::TooLarge(format!(
                "word length {} exceeds {} for n = {}",
                word.len(),
                self.max_word_len(),
                self.n
            )));
        }
        if let Some(&s) = word.iter().find(|&&s| s + 1 >= self.n) {
            return Err(Error::InvalidInput(format!("letter {} out of range", s + 1)));
        }
        let nf = self.flags.len();
        let mut cur = init.to_vec();
        for &s in word {
            let g = self.sys.generator(s);
            let next = par::map_range(nf, |b| {
                (0..nf).filter(|&a| self.position(a, b) == g).map(|a| cur[a]).sum::<u128>()
            });
            cur = next;
        }
        Ok(cur)
    }

    fn std_indicator(&self) -> Vec<u128> {
        let mut v = vec![0u128; self.flags.len()];
        v[0] = 1;
        v
    }

    /// `|Z_J^sign(word)|`: chains along `word` with `u g_0 B = g_l B` and
    /// `(u, y P_J)` in the partial Springer resolution. `G` acts transitively on
    /// `g_0`, so the count is `|G/B|` times the count with `g_0 = B`.
    pub fn steinberg_count(&self, j: GenSet, sign: Sign, word: &[usize]) -> Result<u128> {
        let pf = self.partial_flags(j);
        let members = self.springer_members(&pf, sign);
        let weights: Vec<u64> = members.iter().map(|m| m.len() as u64).collect();
        self.weighted_steinberg(&weights, word)
    }

    /// `|Z_{J,v}^sign(word)|` for `v` in `W^{J,-}`.
    pub fn steinberg_count_stratum(&self, j: GenSet, sign: Sign, word: &[usize], v: u32) -> Result<u128> {
        self.weighted_steinberg(&self.stratum_weights(j, sign, v)?, word)
    }

    fn weighted_steinberg(&self, weights: &[u64], word: &[usize]) -> Result<u128> {
        let chains = self.chain_counts(&self.std_indicator(), word)?;
        let (_, by_flag) = self.per_position(weights)?;
        let inner: u128 = chains.iter().zip(&by_flag).map(|(&c, &m)| c * m as u128).sum();
        Ok(inner * self.flags.len() as u128)
    }

    /// `|X^{(v w_0)}(word)|`: chains along `word` together with a flag `x`
    /// with `x -> g_0` and `x -> g_l` both in position `v`.
    pub fn x_count(&self, word: &[usize], v: u32) -> Result<u128> {
        let init: Vec<u128> =
            (0..self.flags.len()).map(|f| (self.position(0, f) == v) as u128).collect();
        let chains = self.chain_counts(&init, word)?;
        let inner: u128 = chains.iter().zip(&init).map(|(&c, &i)| c * i).sum();
        Ok(inner * self.flags.len() as u128)
    }

    /// `|O(w)_u|` for every unipotent `u` and Weyl element `w`.
    fn orbit_counts(&self) -> Vec<Vec<u64>> {
        let nf = self.flags.len();
        par::map(&self.unipotents, |&u| {
            let mut row = vec![0u64; self.sys.order()];
            for f in 0..nf {
                row[self.position(f, self.act_flag(u, f)) as usize] += 1;
            }
            row
        })
    }

    /// The bitrace `tau_G(e_{J,sign} (x) 1_w)` for every `w`, with
    /// `chi_u(e_{J,+}) = |Spr^+_{J,u}|` and `chi_u(e_{J,-}) = q^{l(w_J)} |Spr^-_{J,u}|`.
    pub fn tau_g(&self, j: GenSet, sign: Sign) -> Vec<BigRational> {
        let pf = self.partial_flags(j);
        let members = self.springer_members(&pf, sign);
        let orbits = self.orbit_counts();
        let twist = match sign {
            Sign::Minus => BigInt::from(self.q).pow(self.sys.length(self.sys.longest_in(j))),
            Sign::Plus => BigInt::one(),
        };
        let order = BigInt::from(self.order());
        (0..self.sys.order())
            .map(|w| {
                let total: u64 = orbits.iter().zip(&members).map(|(o, m)| o[w] * m.len() as u64).sum();
                BigRational::new(BigInt::from(total) * &twist, order.clone())
            })
            .collect()
    }

    /// `f(g x g^{-1}) = f(x)` for a generating set of conjugators.
    pub fn check_class_function(&self, f: &[BigRational]) -> Result<()> {
        if f.len() != self.order() {
            return Err(Error::InvalidInput("class function has the wrong length".into()));
        }
        for g in self.generators() {
            let gi = self.inverse(g);
            for x in 0..self.order() as u32 {
                if f[self.mul(self.mul(g, x), gi) as usize] != f[x as usize] {
                    return Err(Error::NotClassFunction);
                }
            }
        }
        Ok(())
    }

    /// Adjacent elementary transvections and a diagonal generator of `F_q^*`.
    fn generators(&self) -> Vec<u32> {
        let n = self.n;
        let ident = |_: ()| -> Vec<Vec<u32>> {
            (0..n).map(|r| (0..n).map(|c| (r == c) as u32).collect()).collect()
        };
        let mut out = Vec::new();
        for i in 0..n - 1 {
            let mut m = ident(());
            m[i][i + 1] = 1;
            out.push(m);
            let mut m = ident(());
            m[i + 1][i] = 1;
            out.push(m);
        }
        let prim = (2..self.q).find(|&a| (1..self.q - 1).all(|k| a.pow(k) % self.q != 1)).unwrap_or(1);
        let mut m = ident(());
        m[0][0] = prim;
        out.push(m);
        out.iter().map(|m| self.from_matrix(m).unwrap()).collect()
    }

    /// `pr_{1,!} 1_{Spr_J^sign}` as a function on `G`.
    pub fn springer_class_function(&self, j: GenSet, sign: Sign) -> Vec<BigRational> {
        let pf = self.partial_flags(j);
        let members = self.springer_members(&pf, sign);
        let mut f = vec![BigRational::zero(); self.order()];
        for (k, &u) in self.unipotents.iter().enumerate() {
            f[u as usize] = BigRational::from_integer(BigInt::from(members[k].len()));
        }
        f
    }

    /// `HC_!(f)(hB, gB) = sum_{z : z h B = g B} f(z)` on each `O(w)`.
    pub fn hc_transform(&self, f: &[BigRational]) -> Result<Vec<BigRational>> {
        self.check_class_function(f)?;
        let nf = self.flags.len();
        let mut by_flag = vec![BigRational::zero(); nf];
        for z in 0..self.order() as u32 {
            if !f[z as usize].is_zero() {
                by_flag[self.act_flag(z, 0)] += &f[z as usize];
            }
        }
        let mut by_w: Vec<Option<BigRational>> = vec![None; self.sys.order()];
        for (g, val) in by_flag.into_iter().enumerate() {
            let w = self.position(0, g) as usize;
            match &by_w[w] {
                None => by_w[w] = Some(val),
                Some(prev) if *prev != val => {
                    return Err(Error::DomainError(format!("transform not constant on O({w})")))
                }
                _ => {}
            }
        }
        Ok(by_w.into_iter().map(|v| v.unwrap_or_else(BigRational::zero)).collect())
    }

    /// The full kernel of `HC_!(f)` on pairs of flags, row-major.
    pub fn hc_kernel(&self, f: &[BigRational]) -> Result<Vec<BigRational>> {
        self.check_class_function(f)?;
        let nf = self.flags.len();
        if nf > 64 {
            return Err(Error::TooLarge("kernel has more than 64 flags".into()));
        }
        let mut k = vec![BigRational::zero(); nf * nf];
        for z in 0..self.order() as u32 {
            if f[z as usize].is_zero() {
                continue;
            }
            for h in 0..nf {
                k[h * nf + self.act_flag(z, h)] += &f[z as usize];
            }
        }
        Ok(k)
    }

    /// Whether a kernel commutes under convolution with every `1_s`.
    pub fn kernel_is_central(&self, k: &[BigRational]) -> bool {
        let nf = self.flags.len();
        (0..self.n - 1).all(|s| {
            let g = self.sys.generator(s);
            (0..nf).all(|a| {
                (0..nf).all(|c| {
                    let left: BigRational =
                        (0..nf).filter(|&b| self.position(a, b) == g).map(|b| k[b * nf + c].clone()).sum();
                    let right: BigRational =
                        (0..nf).filter(|&b| self.position(b, c) == g).map(|b| k[a * nf + b].clone()).sum();
                    left == right
                })
            })
        })
    }

    fn q_pow(&self, e: i64) -> BigRational {
        let q = BigRational::from_integer(BigInt::from(self.q));
        if e >= 0 {
            num_traits::pow(q, e as usize)
        } else {
            num_traits::pow(q.recip(), (-e) as usize)
        }
    }

    fn specialize(&self, h: &HeckeElt) -> Result<Vec<BigRational>> {
        let map = h.specialize(self.q as i64)?;
        Ok((0..self.sys.order() as u32).map(|w| map.get(&w).cloned().unwrap_or_else(BigRational::zero)).collect())
    }

    fn label(&self, w: u32) -> String {
        word_label(&self.sys, w)
    }

    fn table_report(&self, name: String, j: GenSet, sign: Option<Sign>, observed: &[BigRational], expected: &[BigRational]) -> CheckReport {
        let rows: Vec<CountRow> = self
            .sys
            .elements()
            .map(|w| {
                let (o, e) = (&observed[w as usize], &expected[w as usize]);
                CountRow { key: self.label(w), observed: o.to_string(), expected: e.to_string(), ok: o == e }
            })
            .collect();
        CheckReport::new(name, self, j, sign, rows)
    }

    /// Compares `mult_! 1_{E_J^-}` with `q^{l_S - l_J} N_J^S(1)` and
    /// `mult_! 1_{E_J^+}` with `q^{l_S} Sigma_{J,+}`, and both strata forms.
    pub fn verify_main(&self, j: GenSet) -> Result<Vec<CheckReport>> {
        let sys = &self.sys;
        let ls = sys.length(sys.longest()) as i64;
        let wj = sys.longest_in(j);
        let lj = sys.length(wj) as i64;
        let mut out = Vec::new();
        let norm = hecke::relative_norm(j, &HeckeElt::one(sys))?;
        let plus = hecke::sigma(sys, j, Sign::Plus);
        for (sign, elt, e) in [(Sign::Minus, norm, ls - lj), (Sign::Plus, plus, ls)] {
            let observed = to_rationals(&self.mult_pushforward(j, sign)?);
            let expected: Vec<BigRational> = self.specialize(&elt)?.into_iter().map(|c| c * self.q_pow(e)).collect();
            out.push(self.table_report("main".into(), j, Some(sign), &observed, &expected));
        }
        let twj2 = HeckeElt::basis(sys, wj).rmul_basis(wj);
        for v in sys.coset_reps_minus(j) {
            let u = ls - lj - sys.length(v) as i64;
            let minus = HeckeElt::basis(sys, v).lmul_basis(sys.inverse(v));
            let plus = twj2.rmul_basis(v).lmul_basis(sys.inverse(v));
            for (sign, elt) in [(Sign::Minus, minus), (Sign::Plus, plus)] {
                let observed = to_rationals(&self.mult_pushforward_stratum(j, sign, v)?);
                let expected: Vec<BigRational> =
                    self.specialize(&elt)?.into_iter().map(|c| c * self.q_pow(u)).collect();
                out.push(self.table_report(format!("main-v[{}]", self.label(v)), j, Some(sign), &observed, &expected));
            }
        }
        Ok(out)
    }

    /// Steinberg counts against Deodhar cell sums, in total and per stratum,
    /// plus the bitrace and `X`-count trace formulas for the same word.
    pub fn verify_cell(&self, j: GenSet, word: &[usize]) -> Result<Vec<CheckReport>> {
        let sys = &self.sys;
        let q = BigRational::from_integer(BigInt::from(self.q));
        let order = BigRational::from_integer(BigInt::from(self.order()));
        let qm1n = num_traits::pow(&q - BigRational::one(), self.n);
        let lj = sys.length(sys.longest_in(j)) as i64;
        let w0 = sys.longest();
        let cell = |v: u32| -> Result<BigRational> { deodhar::cell_poly(sys, v, word).eval(&q) };
        let mut out = Vec::new();

        for sign in [Sign::Minus, Sign::Plus] {
            let z = BigRational::from_integer(BigInt::from(self.steinberg_count(j, sign, word)?)) / &order;
            let (reps, scale) = match sign {
                Sign::Minus => (sys.coset_reps_plus(j), self.q_pow(-lj) / &qm1n),
                Sign::Plus => (sys.coset_reps_minus(j), BigRational::one() / &qm1n),
            };
            let mut sum = BigRational::zero();
            for v in reps {
                sum += cell(v)?;
            }
            let expected = sum * scale;
            let rows = vec![CountRow::new(word_text(word), &z, &expected)];
            out.push(CheckReport::new("cell".into(), self, j, Some(sign), rows));

            // per stratum: v in W^{J,-} pairs with the cell sum of w_0 v
            let mut rows = Vec::new();
            for v in sys.coset_reps_minus(j) {
                let zv = BigRational::from_integer(BigInt::from(self.steinberg_count_stratum(j, sign, word, v)?)) / &order;
                let x = match sign {
                    Sign::Minus => sys.mul(w0, v),
                    Sign::Plus => sys.mul(w0, sys.mul(sys.longest_in(j), v)),
                };
                let scale = match sign {
                    Sign::Minus => self.q_pow(-lj) / &qm1n,
                    Sign::Plus => BigRational::one() / &qm1n,
                };
                rows.push(CountRow::new(self.label(v), &zv, &(cell(x)? * scale)));
            }
            out.push(CheckReport::new("cell-strata".into(), self, j, Some(sign), rows));

            // bitrace against the Steinberg count
            let tw = self.specialize(&HeckeElt::from_word(sys, word))?;
            let tg = self.tau_g(j, sign);
            let lhs: BigRational = tw.iter().zip(&tg).map(|(a, b)| a * b).sum();
            let twist = match sign {
                Sign::Minus => self.q_pow(lj),
                Sign::Plus => BigRational::one(),
            };
            let rows = vec![CountRow::new(word_text(word), &lhs, &(z * twist))];
            out.push(CheckReport::new("z-trace".into(), self, j, Some(sign), rows));
        }

        let borel = BigRational::from_integer(BigInt::from(self.borel.len()));
        let tw = HeckeElt::from_word(sys, word);
        let mut rows = Vec::new();
        for v in sys.elements() {
            let prod = HeckeElt::basis(sys, v).lmul_basis(sys.inverse(v));
            let tr = tw.tau_product(&prod)?.eval(&q)? / &borel;
            let x = BigRational::from_integer(BigInt::from(self.x_count(word, v)?)) / &order;
            rows.push(CountRow::new(self.label(v), &x, &tr));
        }
        out.push(CheckReport::new("x-trace".into(), self, j, None, rows));
        Ok(out)
    }

    /// Trace identities against the bitrace for every `w`, and the
    /// Harish-Chandra transform of the Springer function against `mult_!`.
    pub fn verify_trace(&self, j: GenSet) -> Result<Vec<CheckReport>> {
        let sys = &self.sys;
        let wj = sys.longest_in(j);
        let lj = sys.length(wj) as i64;
        let q = BigRational::from_integer(BigInt::from(self.q));
        let torus = num_traits::pow(&q - BigRational::one(), self.n);
        let borel_j = &torus * self.q_pow(lj);
        let mut out = Vec::new();
        let norm1 = hecke::relative_norm(j, &HeckeElt::one(sys))?;
        let twj2 = HeckeElt::basis(sys, wj).rmul_basis(wj);
        let norm2 = hecke::relative_norm(j, &twj2)?;
        for (sign, elt, factor) in [(Sign::Minus, norm1, torus.clone()), (Sign::Plus, norm2, borel_j)] {
            let tg = self.tau_g(j, sign);
            let mut observed = Vec::new();
            let mut expected = Vec::new();
            for w in sys.elements() {
                observed.push(elt.tau_product(&HeckeElt::basis(sys, w))?.eval(&q)?);
                expected.push(&factor * &tg[w as usize]);
            }
            out.push(self.table_report("trace-geo".into(), j, Some(sign), &observed, &expected));
        }
        for sign in [Sign::Minus, Sign::Plus] {
            let hc = self.hc_transform(&self.springer_class_function(j, sign))?;
            let mult = to_rationals(&self.mult_pushforward(j, sign)?);
            out.push(self.table_report("hc-springer".into(), j, Some(sign), &hc, &mult));
        }
        Ok(out)
    }
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

fn to_rationals(v: &[u64]) -> Vec<BigRational> {
    v.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()
}

/// Reduced word with 1-based letters, or `e`.
pub fn word_label(sys: &CoxeterSystem, w: u32) -> String {
    word_text(&sys.reduced_word(w))
}

fn word_text(word: &[usize]) -> String {
    if word.is_empty() {
        "e".into()
    } else {
        word.iter().map(|s| (s + 1).to_string()).collect::<Vec<_>>().join(",")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CountRow {
    pub key: String,
    pub observed: String,
    pub expected: String,
    pub ok: bool,
}

impl CountRow {
    fn new(key: String, observed: &BigRational, expected: &BigRational) -> Self {
        CountRow { key, observed: observed.to_string(), expected: expected.to_string(), ok: observed == expected }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub n: usize,
    pub q: u32,
    pub j: Vec<usize>,
    pub sign: Option<String>,
    pub rows: Vec<CountRow>,
    pub pass: bool,
}

impl CheckReport {
    fn new(check: String, g: &FqGroup, j: GenSet, sign: Option<Sign>, rows: Vec<CountRow>) -> Self {
        let pass = rows.iter().all(|r| r.ok);
        CheckReport { check, n: g.n, q: g.q, j: j.labels(), sign: sign.map(|s| s.to_string()), rows, pass }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        for (n, q, order, flags) in [(2, 2, 6, 3), (3, 2, 168, 21), (2, 3, 48, 4)] {
            let g = FqGroup::build(n, q).unwrap();
            assert_eq!(g.order(), order);
            assert_eq!(g.num_flags(), flags);
            assert_eq!(g.unipotents().len(), (q as usize).pow((n * (n - 1)) as u32));
        }
    }

    #[test]
    fn limits() {
        assert!(matches!(FqGroup::build(4, 3), Err(Error::TooLarge(_))));
        assert!(matches!(FqGroup::build(2, 4), Err(Error::Unsupported(_))));
    }

    #[test]
    fn gl2_pushforward() {
        let g = FqGroup::build(2, 2).unwrap();
        let m = g.mult_pushforward(GenSet::empty(), Sign::Minus).unwrap();
        assert_eq!(m, vec![4, 1]);
    }
}
