//! Noncrossing partitions, noncrossing parking functions and the associahedron
//! as a subword complex, in type `A_{n-1}`.
//!
//! Permutations are elements of the Coxeter system `A_{n-1}` and are read in
//! one-line notation. A Coxeter word is an ordering of the simple generators,
//! 0-based.

use std::sync::Arc;

use serde::Serialize;

use crate::coxeter::{CoxeterSystem, CoxeterType, GenSet};
use crate::error::{Error, Result};
use crate::par;

pub const MAX_NC_N: usize = 8;
pub const MAX_PARKING_N: usize = 6;
pub const MAX_FACES_N: usize = 5;

fn system(n: usize, limit: usize) -> Result<Arc<CoxeterSystem>> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("need n >= 2, got {n}")));
    }
    if n > limit {
        return Err(Error::TooLarge(format!("n = {n} (limit {limit})")));
    }
    CoxeterSystem::get(CoxeterType::a(n - 1))
}

/// Checks that `c` lists every simple generator of `A_{n-1}` once.
pub fn check_coxeter_word(n: usize, c: &[usize]) -> Result<()> {
    let mut seen = vec![false; n - 1];
    for &s in c {
        if s >= n - 1 || seen[s] {
            return Err(Error::InvalidInput(format!("{c:?} is not a Coxeter word of A{}", n - 1)));
        }
        seen[s] = true;
    }
    if seen.iter().all(|&b| b) {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("{c:?} is not a Coxeter word of A{}", n - 1)))
    }
}

fn one_line(sys: &CoxeterSystem, w: u32) -> Vec<usize> {
    sys.model(w).iter().map(|&x| x as usize).collect()
}

/// Cycles of a permutation of `1..=n` as sorted blocks, ordered by least element.
fn blocks_of(perm: &[usize]) -> Vec<Vec<usize>> {
    let n = perm.len();
    let mut seen = vec![false; n + 1];
    let mut out = Vec::new();
    for start in 1..=n {
        if seen[start] {
            continue;
        }
        let mut block = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            block.push(x);
            x = perm[x - 1];
        }
        block.sort_unstable();
        out.push(block);
    }
    out
}

/// Absolute length `n - #cycles`.
pub fn absolute_length(sys: &CoxeterSystem, w: u32) -> usize {
    let perm = one_line(sys, w);
    perm.len() - blocks_of(&perm).len()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NcPartition {
    pub element: u32,
    /// 1-based reduced word of the element.
    pub word: Vec<usize>,
    pub blocks: Vec<Vec<usize>>,
    pub absolute_length: usize,
}

fn blocks_noncrossing(blocks: &[Vec<usize>]) -> bool {
    for (i, a) in blocks.iter().enumerate() {
        for b in &blocks[i + 1..] {
            for &a1 in a {
                for &a2 in a {
                    if a1 >= a2 {
                        continue;
                    }
                    for &b1 in b {
                        for &b2 in b {
                            if a1 < b1 && b1 < a2 && a2 < b2 || b1 < a1 && a1 < b2 && b2 < a2 {
                                return false;
                            }
                        }
                    }
                }
            }
        }
    }
    true
}

/// `{π : l_T(π) + l_T(π^{-1} c) = n - 1}`, ordered by element index.
pub fn nc_enumerate(n: usize, c: &[usize]) -> Result<Vec<NcPartition>> {
    let sys = system(n, MAX_NC_N)?;
    check_coxeter_word(n, c)?;
    let ce = sys.from_word(c);
    let hits = par::map_range(sys.order(), |w| {
        let w = w as u32;
        let lt = absolute_length(&sys, w);
        if lt + absolute_length(&sys, sys.mul(sys.inverse(w), ce)) != n - 1 {
            return None;
        }
        Some(NcPartition {
            element: w,
            word: sys.reduced_word(w).iter().map(|s| s + 1).collect(),
            blocks: blocks_of(&one_line(&sys, w)),
            absolute_length: lt,
        })
    });
    Ok(hits.into_iter().flatten().collect())
}

/// Whether the blocks are pairwise noncrossing in the cyclic order `1 < 2 < ... < n`.
pub fn is_noncrossing(p: &NcPartition) -> bool {
    blocks_noncrossing(&p.blocks)
}

/// Whether `v` is the minimal element of `v W_π`, where `W_π` permutes each block.
pub fn is_min_coset_rep(sys: &CoxeterSystem, v: u32, blocks: &[Vec<usize>]) -> bool {
    let perm = one_line(sys, v);
    blocks.iter().all(|b| b.windows(2).all(|p| perm[p[0] - 1] < perm[p[1] - 1]))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParkingFunction {
    pub pi: u32,
    pub v: u32,
    /// 1-based reduced word of the coset representative.
    pub v_word: Vec<usize>,
    pub blocks: Vec<Vec<usize>>,
}

/// All cosets `v W_π` with `π` noncrossing and `v` a minimal representative.
pub fn nc_parking_functions(n: usize, c: &[usize]) -> Result<Vec<ParkingFunction>> {
    let sys = system(n, MAX_PARKING_N)?;
    let ncs = nc_enumerate(n, c)?;
    let per = par::map(&ncs, |p| {
        sys.elements()
            .filter(|&v| is_min_coset_rep(&sys, v, &p.blocks))
            .map(|v| ParkingFunction {
                pi: p.element,
                v,
                v_word: sys.reduced_word(v).iter().map(|s| s + 1).collect(),
                blocks: p.blocks.clone(),
            })
            .collect::<Vec<_>>()
    });
    Ok(per.into_iter().flatten().collect())
}

/// The `c`-sorting word of `w_0`: scan `c c c ...` and keep each letter that
/// lengthens the product, until the product is `w_0`. 0-based.
pub fn nc_sorting_word(sys: &CoxeterSystem, c: &[usize]) -> Result<Vec<usize>> {
    if c.is_empty() {
        return Err(Error::InvalidInput("empty Coxeter word".into()));
    }
    let mut x = sys.identity();
    let mut out = Vec::new();
    let w0 = sys.longest();
    for &s in c.iter().cycle() {
        if x == w0 {
            break;
        }
        if s >= sys.rank() {
            return Err(Error::InvalidInput(format!("generator {} out of range", s + 1)));
        }
        let xs = sys.rmul(x, s);
        if sys.length(xs) > sys.length(x) {
            out.push(s);
            x = xs;
        }
    }
    Ok(out)
}

/// Demazure product of a word.
pub fn demazure(sys: &CoxeterSystem, word: &[usize]) -> u32 {
    word.iter().fold(sys.identity(), |x, &s| {
        let xs = sys.rmul(x, s);
        if sys.length(xs) > sys.length(x) {
            xs
        } else {
            x
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplexFace {
    /// Removed positions of the word `c w_0(c)`, 1-based.
    pub positions: Vec<usize>,
    /// Dimension of the dual face of the associahedron.
    pub dim: usize,
}

/// The word `c w_0(c)` on which the subword complex lives, 0-based.
pub fn asso_word(n: usize, c: &[usize]) -> Result<Vec<usize>> {
    let sys = system(n, MAX_NC_N)?;
    check_coxeter_word(n, c)?;
    let mut q = c.to_vec();
    q.extend(nc_sorting_word(&sys, c)?);
    Ok(q)
}

/// Subsets of positions of `c w_0(c)` whose complement contains a reduced word
/// for `w_0`, with `r - k` elements; these are dual to the `k`-dimensional
/// faces of the associahedron.
pub fn nc_asso_faces(n: usize, c: &[usize], k: usize) -> Result<Vec<ComplexFace>> {
    let sys = system(n, MAX_FACES_N)?;
    let r = n - 1;
    if k > r {
        return Err(Error::InvalidInput(format!("face dimension {k} exceeds {r}")));
    }
    let q = asso_word(n, c)?;
    let size = r - k;
    let m = q.len();
    let w0 = sys.longest();
    let masks: Vec<u32> = (0u32..1 << m).filter(|x| x.count_ones() as usize == size).collect();
    let hits = par::map(&masks, |&mask| {
        let rest: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 0).map(|i| q[i]).collect();
        if demazure(&sys, &rest) == w0 {
            Some(ComplexFace { positions: (0..m).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect(), dim: k })
        } else {
            None
        }
    });
    Ok(hits.into_iter().flatten().collect())
}

/// Face counts by dimension `k = 0..=r`.
pub fn asso_f_vector(n: usize, c: &[usize]) -> Result<Vec<usize>> {
    (0..n).map(|k| nc_asso_faces(n, c, k).map(|f| f.len())).collect()
}

/// `w_j = s_r s_{r-1} ... s_j`, `j` 1-based.
pub fn ak_factor(sys: &CoxeterSystem, j: usize) -> u32 {
    let r = sys.rank();
    let word: Vec<usize> = (j - 1..r).rev().collect();
    sys.from_word(&word)
}

/// `A_k = {w : Asc(w) = I_k}` as the products `w_{j_1} ... w_{j_k}` over
/// `j_1 < ... < j_k`, listed in lexicographic order of the subsets.
pub fn nc_ak_set(n: usize, k: usize) -> Result<Vec<u32>> {
    let sys = system(n, MAX_NC_N)?;
    let r = n - 1;
    if k > r {
        return Err(Error::InvalidInput(format!("k = {k} exceeds {r}")));
    }
    let mut out = Vec::new();
    for subset in k_subsets(r, k) {
        out.push(subset.iter().fold(sys.identity(), |x, &j| sys.mul(x, ak_factor(&sys, j))));
    }
    Ok(out)
}

/// `k`-subsets of `{1..=r}` in lexicographic order.
fn k_subsets(r: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, r: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for j in start..=r {
            cur.push(j);
            rec(j + 1, r, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, r, k, &mut Vec::new(), &mut out);
    out
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

#[derive(Clone, Debug, Serialize)]
pub struct NcRow {
    pub pi_word: Vec<usize>,
    pub blocks: Vec<Vec<usize>>,
    pub absolute_length: usize,
    pub k: usize,
    pub count: u64,
    pub expected: u64,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct NcReport {
    pub n: usize,
    /// 1-based Coxeter word.
    pub c: Vec<usize>,
    /// Whether the partitions were conjugated to those of `s_1 s_2 ... s_r`.
    pub conjugated: bool,
    pub rows: Vec<NcRow>,
    pub pass: bool,
    /// The same counts for the partitions of `c` itself, without conjugating.
    pub direct_pass: bool,
}

/// A permutation `g` with `g c' g^{-1} = c` where `c = s_1 ... s_r`.
fn conjugator(sys: &CoxeterSystem, n: usize, c_prime: u32) -> u32 {
    let std = one_line(sys, sys.from_word(&(0..n - 1).collect::<Vec<_>>()));
    let other = one_line(sys, c_prime);
    // g sends other^i(1) to std^i(1)
    let mut g = vec![0usize; n];
    let (mut x, mut y) = (1usize, 1usize);
    for _ in 0..n {
        g[x - 1] = y;
        x = other[x - 1];
        y = std[y - 1];
    }
    element_of(sys, &g)
}

fn element_of(sys: &CoxeterSystem, perm: &[usize]) -> u32 {
    sys.elements().find(|&w| sys.model(w).iter().zip(perm).all(|(&a, &b)| a as usize == b)).expect("permutation")
}

/// Counts `|W^π ∩ A_k|` against `binom(n - 1 - l_T(π), k)` for every
/// noncrossing `π` and every `k`.
pub fn nc_verify_prop(n: usize, c: &[usize]) -> Result<NcReport> {
    let sys = system(n, MAX_PARKING_N)?;
    check_coxeter_word(n, c)?;
    let standard: Vec<usize> = (0..n - 1).collect();
    let conjugated = c != standard.as_slice();
    let mut ncs = nc_enumerate(n, c)?;
    let aks: Vec<Vec<u32>> = (0..n).map(|k| nc_ak_set(n, k)).collect::<Result<_>>()?;
    let rows_for = |ncs: &[NcPartition]| -> Vec<NcRow> {
        let rows = par::map(ncs, |p| {
            aks.iter()
                .enumerate()
                .map(|(k, ak)| {
                    let count = ak.iter().filter(|&&v| is_min_coset_rep(&sys, v, &p.blocks)).count() as u64;
                    let expected = binomial(n - 1 - p.absolute_length, k);
                    NcRow {
                        pi_word: p.word.clone(),
                        blocks: p.blocks.clone(),
                        absolute_length: p.absolute_length,
                        k,
                        count,
                        expected,
                        ok: count == expected,
                    }
                })
                .collect::<Vec<_>>()
        });
        rows.into_iter().flatten().collect()
    };
    let direct_pass = rows_for(&ncs).iter().all(|r| r.ok);
    if conjugated {
        let g = conjugator(&sys, n, sys.from_word(c));
        let gi = sys.inverse(g);
        for p in &mut ncs {
            let e = sys.mul(sys.mul(g, p.element), gi);
            p.element = e;
            p.word = sys.reduced_word(e).iter().map(|s| s + 1).collect();
            p.blocks = blocks_of(&one_line(&sys, e));
        }
        ncs.sort_by_key(|p| p.element);
    }
    let rows = rows_for(&ncs);
    let pass = rows.iter().all(|r| r.ok);
    Ok(NcReport { n, c: c.iter().map(|s| s + 1).collect(), conjugated, rows, pass, direct_pass })
}

/// The set `{w : Asc(w) = I_k}` by direct filtering.
pub fn ascent_class(n: usize, k: usize) -> Result<Vec<u32>> {
    let sys = system(n, MAX_NC_N)?;
    let ik = GenSet::from_gens(0..(n - 1).saturating_sub(k));
    Ok(sys.elements().filter(|&w| sys.left_ascents(w) == ik).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blocks_and_crossings() {
        assert_eq!(blocks_of(&[2, 1, 3]), vec![vec![1, 2], vec![3]]);
        assert!(!blocks_noncrossing(&[vec![1, 3], vec![2, 4]]));
        assert!(blocks_noncrossing(&[vec![1, 4], vec![2, 3]]));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(binomial(0, 0), 1);
    }
}
