//! Distinguished subwords and their cell polynomials.
//!
//! For a word `s^(1) ... s^(l)` and `v` in `W`, a subword `omega` picks at each
//! position either the letter ("take") or the identity ("skip"). Writing
//! `omega_(i)` for the product of the first `i` choices, `omega` is
//! `v`-distinguished when `v omega_(i) <= v omega_(i-1) s^(i)` for every `i`,
//! which only constrains skips: a skip at `i` is allowed exactly when
//! `l(v omega_(i-1) s^(i)) > l(v omega_(i-1))`. The set `D^(v)` collects the
//! distinguished subwords with `omega_(l) = e`.

use std::sync::Arc;

use num_bigint::BigInt;
use serde::Serialize;

use crate::coxeter::{CoxeterSystem, GenSet, Sign};
use crate::error::{Error, Result};
use crate::hecke::HeckeElt;
use crate::par;
use crate::poly::LaurentPoly;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Subword {
    /// `true` where the letter is taken.
    pub takes: Vec<bool>,
    /// Skipped positions, 1-based.
    pub e: Vec<usize>,
    /// Positions where `v omega` goes down, 1-based.
    pub d: Vec<usize>,
}

impl Subword {
    pub fn weight(&self) -> LaurentPoly {
        LaurentPoly::x_pow(self.d.len() as i64) * (LaurentPoly::x_minus_one()).pow(self.e.len() as u32)
    }
}

/// All subwords in `D^(v)(word)`, in lexicographic order with skip before take.
pub fn enumerate(sys: &CoxeterSystem, v: u32, word: &[usize]) -> Vec<Subword> {
    let mut out = Vec::new();
    let mut takes = Vec::with_capacity(word.len());
    dfs(sys, v, word, v, 0, &mut takes, &mut out);
    out
}

fn dfs(sys: &CoxeterSystem, v: u32, word: &[usize], x: u32, i: usize, takes: &mut Vec<bool>, out: &mut Vec<Subword>) {
    let remaining = word.len() - i;
    // omega_(i) = v^{-1} x must be undone by the remaining letters
    let omega = sys.mul(sys.inverse(v), x);
    if sys.length(omega) as usize > remaining {
        return;
    }
    if remaining == 0 {
        if x == v {
            out.push(finish(sys, v, word, takes));
        }
        return;
    }
    let s = word[i];
    let xs = sys.rmul(x, s);
    if sys.length(xs) > sys.length(x) {
        takes.push(false);
        dfs(sys, v, word, x, i + 1, takes, out);
        takes.pop();
    }
    takes.push(true);
    dfs(sys, v, word, xs, i + 1, takes, out);
    takes.pop();
}

fn finish(sys: &CoxeterSystem, v: u32, word: &[usize], takes: &[bool]) -> Subword {
    let mut x = v;
    let mut e = Vec::new();
    let mut d = Vec::new();
    for (i, (&s, &t)) in word.iter().zip(takes).enumerate() {
        if t {
            let xs = sys.rmul(x, s);
            if sys.length(xs) < sys.length(x) {
                d.push(i + 1);
            }
            x = xs;
        } else {
            e.push(i + 1);
        }
    }
    Subword { takes: takes.to_vec(), e, d }
}

/// Counts of subwords in `D^(v)(word)` by `(|d|, |e|)`; entry `[d][e]`.
///
/// Computed by dynamic programming over the state `v omega_(i)`, independent
/// of [`enumerate`].
pub fn cell_counts(sys: &CoxeterSystem, v: u32, word: &[usize]) -> Vec<Vec<u64>> {
    let l = word.len();
    let n = sys.order();
    let width = (l + 1) * (l + 1);
    let mut cur: Vec<Option<Vec<u64>>> = vec![None; n];
    let mut init = vec![0u64; width];
    init[0] = 1;
    cur[v as usize] = Some(init);
    for &s in word {
        let mut next: Vec<Option<Vec<u64>>> = vec![None; n];
        for (x, tab) in cur.iter().enumerate() {
            let Some(tab) = tab else { continue };
            let x = x as u32;
            let xs = sys.rmul(x, s);
            let up = sys.length(xs) > sys.length(x);
            // take
            {
                let slot = next[xs as usize].get_or_insert_with(|| vec![0; width]);
                for (k, &c) in tab.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    let (d, e) = (k / (l + 1), k % (l + 1));
                    let d2 = if up { d } else { d + 1 };
                    slot[d2 * (l + 1) + e] += c;
                }
            }
            if up {
                let slot = next[x as usize].get_or_insert_with(|| vec![0; width]);
                for (k, &c) in tab.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    let (d, e) = (k / (l + 1), k % (l + 1));
                    slot[d * (l + 1) + e + 1] += c;
                }
            }
        }
        cur = next;
    }
    let mut out = vec![vec![0u64; l + 1]; l + 1];
    if let Some(tab) = &cur[v as usize] {
        for (k, &c) in tab.iter().enumerate() {
            out[k / (l + 1)][k % (l + 1)] = c;
        }
    }
    out
}

fn counts_to_poly(counts: &[Vec<u64>]) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    let xm1 = LaurentPoly::x_minus_one();
    for (d, row) in counts.iter().enumerate() {
        for (e, &c) in row.iter().enumerate() {
            if c > 0 {
                out += &(xm1.pow(e as u32).shift(2 * d as i64).scale(&BigInt::from(c)));
            }
        }
    }
    out
}

/// `sum_{omega in D^(v)(word)} X^{|d|} (X - 1)^{|e|}`.
pub fn cell_poly(sys: &CoxeterSystem, v: u32, word: &[usize]) -> LaurentPoly {
    counts_to_poly(&cell_counts(sys, v, word))
}

/// `|M^(v)(word)|`: subwords in `D^(v)` with exactly `rank` skips.
pub fn minimal_count(sys: &CoxeterSystem, v: u32, word: &[usize]) -> u64 {
    let r = sys.rank();
    cell_counts(sys, v, word).iter().map(|row| row.get(r).copied().unwrap_or(0)).sum()
}

/// Subwords in `M^(v)(word)`.
pub fn minimal(sys: &CoxeterSystem, v: u32, word: &[usize]) -> Vec<Subword> {
    enumerate(sys, v, word).into_iter().filter(|w| w.e.len() == sys.rank()).collect()
}

/// Cell polynomials of every element, indexed by element.
pub fn all_cell_polys(sys: &CoxeterSystem, word: &[usize]) -> Vec<LaurentPoly> {
    par::map_range(sys.order(), |v| cell_poly(sys, v as u32, word))
}

/// `(X - 1)^{-r} sum_v cell_poly(v, word)` with `v` over `W^{J,-}` for the
/// `+` sign and over `W^{J,+}` for the `-` sign.
pub fn park_sum(sys: &CoxeterSystem, j: GenSet, sign: Sign, word: &[usize]) -> Result<LaurentPoly> {
    let reps = match sign {
        Sign::Plus => sys.coset_reps_minus(j),
        Sign::Minus => sys.coset_reps_plus(j),
    };
    let parts = par::map(&reps, |&v| cell_poly(sys, v, word));
    let mut total = LaurentPoly::zero();
    for p in &parts {
        total += p;
    }
    total.exact_div(&LaurentPoly::x_minus_one().pow(sys.rank() as u32))
}

/// `sum_{Asc(v) = I} |M^(v)(word)|` for every `I`, indexed by the bit mask of `I`.
pub fn box_counts(sys: &CoxeterSystem, word: &[usize]) -> Vec<u64> {
    let counts = par::map_range(sys.order(), |v| minimal_count(sys, v as u32, word));
    let mut out = vec![0u64; 1 << sys.rank()];
    for v in sys.elements() {
        out[sys.left_ascents(v).0 as usize] += counts[v as usize];
    }
    out
}

/// Checks `X^{-l(v)} tau(T_word T_{v^{-1}} T_v) = cell_poly(w_0 v, word)` for
/// every `v`; returns the elements where it fails.
pub fn hecke_trace_mismatches(sys: &Arc<CoxeterSystem>, word: &[usize]) -> Vec<u32> {
    let tw = HeckeElt::from_word(sys, word);
    let w0 = sys.longest();
    let bad = par::map_range(sys.order(), |v| {
        let v = v as u32;
        let nv = crate::hecke::norm_term(sys, v);
        let lhs = tw.tau_product(&nv).unwrap();
        let rhs = cell_poly(sys, sys.mul(w0, v), word);
        if lhs == rhs {
            None
        } else {
            Some(v)
        }
    });
    bad.into_iter().flatten().collect()
}

pub fn parse_element(sys: &CoxeterSystem, text: &str) -> Result<u32> {
    let t = text.trim();
    if t.is_empty() || t == "e" {
        return Ok(0);
    }
    if t == "w0" {
        return Ok(sys.longest());
    }
    let word = crate::coxeter::parse_word(t, sys.rank())?;
    Ok(sys.from_word(&word))
}

pub fn require_nonempty(word: &[usize]) -> Result<()> {
    if word.is_empty() {
        Err(Error::InvalidInput("empty word".into()))
    } else {
        Ok(())
    }
}

/// Longest words accepted by [`gltw_sweep`].
pub const MAX_SWEEP_LEN: usize = 12;

#[derive(Clone, Debug, Serialize)]
pub struct SweepFailure {
    /// 1-based word.
    pub word: Vec<usize>,
    pub v: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct GltwSweep {
    pub coxeter_type: String,
    pub max_len: usize,
    pub words_checked: u64,
    pub failures: Vec<SweepFailure>,
    pub pass: bool,
}

/// Integer polynomial in `X` by ascending degree.
type IntPoly = Vec<i64>;

fn int_poly_add(acc: &mut IntPoly, p: &IntPoly, times_x: bool, minus_self: bool) {
    // acc += p * X (times_x), p * (X - 1) (times_x and minus_self), or p
    let need = p.len() + usize::from(times_x);
    if acc.len() < need {
        acc.resize(need, 0);
    }
    for (i, &c) in p.iter().enumerate() {
        if times_x {
            acc[i + 1] += c;
            if minus_self {
                acc[i] -= c;
            }
        } else {
            acc[i] += c;
        }
    }
}

struct SweepState {
    word: Vec<usize>,
    hecke: HeckeElt,
    /// `cells[v][x]`: weighted count of distinguished prefixes from `v` now at `x`.
    cells: Vec<Vec<IntPoly>>,
}

impl SweepState {
    fn push(&self, sys: &CoxeterSystem, s: usize) -> Self {
        let n = sys.order();
        let mut cells = vec![vec![IntPoly::new(); n]; n];
        for (v, row) in self.cells.iter().enumerate() {
            for (x, p) in row.iter().enumerate() {
                if p.iter().all(|&c| c == 0) {
                    continue;
                }
                let x = x as u32;
                let xs = sys.rmul(x, s);
                let up = sys.length(xs) > sys.length(x);
                int_poly_add(&mut cells[v][xs as usize], p, !up, false);
                if up {
                    int_poly_add(&mut cells[v][x as usize], p, true, true);
                }
            }
        }
        let mut word = self.word.clone();
        word.push(s);
        SweepState { word, hecke: self.hecke.rmul_gen(s), cells }
    }
}

/// Checks `X^{-l(v)} tau(T_word T_{v^{-1}} T_v) = cell_poly(w_0 v, word)` for every
/// `v` and every word of length at most `max_len`, extending words one letter
/// at a time.
pub fn gltw_sweep(sys: &Arc<CoxeterSystem>, max_len: usize) -> Result<GltwSweep> {
    if max_len > MAX_SWEEP_LEN {
        return Err(Error::TooLarge(format!("words of length {max_len} (limit {MAX_SWEEP_LEN})")));
    }
    let n = sys.order();
    let r = sys.rank();
    let w0 = sys.longest();
    let norms: Vec<HeckeElt> = par::map_range(n, |v| crate::hecke::norm_term(sys, v as u32));
    let mut cells = vec![vec![IntPoly::new(); n]; n];
    for (v, row) in cells.iter_mut().enumerate() {
        row[v] = vec![1];
    }
    let root = SweepState { word: Vec::new(), hecke: HeckeElt::one(sys), cells };

    let check = |st: &SweepState, fails: &mut Vec<SweepFailure>| {
        for v in sys.elements() {
            let x = sys.mul(w0, v) as usize;
            let p = &st.cells[x][x];
            let cell = LaurentPoly::from_terms(p.iter().enumerate().map(|(i, &c)| (2 * i as i64, BigInt::from(c))));
            if st.hecke.tau_product(&norms[v as usize]).expect("same system") != cell {
                fails.push(SweepFailure {
                    word: st.word.iter().map(|s| s + 1).collect(),
                    v: crate::flagoracle::word_label(sys, v),
                });
            }
        }
    };

    fn dfs(
        sys: &CoxeterSystem,
        st: &SweepState,
        max_len: usize,
        check: &(dyn Fn(&SweepState, &mut Vec<SweepFailure>) + Sync),
        count: &mut u64,
        fails: &mut Vec<SweepFailure>,
    ) {
        check(st, fails);
        *count += 1;
        if st.word.len() == max_len {
            return;
        }
        for s in 0..sys.rank() {
            dfs(sys, &st.push(sys, s), max_len, check, count, fails);
        }
    }

    // the empty word and the single letters here, longer words in parallel by first letter
    let mut words_checked = 1;
    let mut failures = Vec::new();
    check(&root, &mut failures);
    if max_len > 0 {
        let parts = par::map_range(r, |s| {
            let (mut count, mut fails) = (0u64, Vec::new());
            dfs(sys, &root.push(sys, s), max_len, &check, &mut count, &mut fails);
            (count, fails)
        });
        for (c, f) in parts {
            words_checked += c;
            failures.extend(f);
        }
    }
    Ok(GltwSweep {
        coxeter_type: sys.ty().to_string(),
        max_len,
        words_checked,
        pass: failures.is_empty(),
        failures,
    })
}
