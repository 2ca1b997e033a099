//! Parabolic parking polynomials, graded characters of the rational Cherednik
//! quotient `L_{p/h}`, and Kirkman polynomials.
//!
//! Graded traces are computed as truncated power series in `X`. Each term
//! `det(1 - X^p w | V_p) / det(1 - X w | V)` has a denominator dividing
//! `prod_i (1 - X^{d_i})`, so once the series vanishes on a window of length
//! `sum_i d_i` past every possible numerator degree, it is a polynomial.
//!
//! Rotations of a non-crystallographic dihedral group have irrational traces.
//! They are handled with a formal eigenvalue `u` and summed over each Galois
//! class with Ramanujan sums, which is exact.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::coxeter::{all_coxeter_words, power_word, CoxeterSystem, CoxeterType, CycleData, Family, GenSet, GroupAlgebraElt, Sign};
use crate::deodhar;
use crate::error::{Error, Result};
use crate::par;
use crate::poly::{LaurentPoly, RatFunc};

pub fn require_coprime(sys: &CoxeterSystem, p: u32) -> Result<()> {
    let h = sys.coxeter_number();
    if p == 0 || p.gcd(&h) != 1 {
        return Err(Error::InvalidInput(format!("p = {p} is not coprime to the Coxeter number {h}")));
    }
    Ok(())
}

/// `prod_i [p ± e_i]_X / [d_i]_X` over the padded degrees and exponents of `W_J`,
/// times `X^{sum_i e_i}` for the minus sign.
pub fn park_poly(sys: &CoxeterSystem, j: GenSet, sign: Sign, p: u32) -> Result<LaurentPoly> {
    require_coprime(sys, p)?;
    let degs = sys.parabolic_degrees(j);
    let exps = sys.parabolic_exponents(j, p);
    let mut num = LaurentPoly::one();
    let mut den = LaurentPoly::one();
    for (d, e) in degs.iter().zip(&exps) {
        let k = match sign {
            Sign::Plus => p as i64 + *e as i64,
            Sign::Minus => p as i64 - *e as i64,
        };
        num = &num * &LaurentPoly::q_int(k);
        den = &den * &LaurentPoly::q_int(*d as i64);
    }
    if sign == Sign::Minus {
        num = num.shift(2 * exps.iter().map(|&e| e as i64).sum::<i64>());
    }
    num.exact_div(&den)
}

/// Laurent polynomial in the formal eigenvalue `u`.
type UPoly = BTreeMap<i64, BigRational>;

fn up_const(c: BigRational) -> UPoly {
    let mut m = UPoly::new();
    if !c.is_zero() {
        m.insert(0, c);
    }
    m
}

fn up_add(a: &mut UPoly, b: &UPoly) {
    for (e, c) in b {
        let s = a.entry(*e).or_insert_with(BigRational::zero);
        *s += c;
        if s.is_zero() {
            a.remove(e);
        }
    }
}

fn up_mul(a: &UPoly, b: &UPoly) -> UPoly {
    let mut out = UPoly::new();
    for (e1, c1) in a {
        for (e2, c2) in b {
            let s = out.entry(e1 + e2).or_insert_with(BigRational::zero);
            *s += c1 * c2;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Power series (or polynomial) with `UPoly` coefficients, truncated at `len`.
fn ser_mul(a: &[UPoly], b: &[UPoly], len: usize) -> Vec<UPoly> {
    let mut out = vec![UPoly::new(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_empty() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if i + j >= len {
                break;
            }
            if y.is_empty() {
                continue;
            }
            let prod = up_mul(x, y);
            up_add(&mut out[i + j], &prod);
        }
    }
    out
}

fn int_poly_to_ser(p: &[BigInt], stride: usize, len: usize) -> Vec<UPoly> {
    let mut out = vec![UPoly::new(); len];
    for (i, c) in p.iter().enumerate() {
        if i * stride < len {
            out[i * stride] = up_const(BigRational::from_integer(c.clone()));
        }
    }
    out
}

/// Inverse of an integer power series with constant term 1.
fn int_series_inverse(p: &[BigInt], len: usize) -> Vec<UPoly> {
    let mut inv = vec![BigInt::zero(); len];
    if len > 0 {
        inv[0] = BigInt::one();
    }
    for n in 1..len {
        let mut acc = BigInt::zero();
        for k in 1..p.len().min(n + 1) {
            acc -= &p[k] * &inv[n - k];
        }
        inv[n] = acc;
    }
    inv.into_iter().map(|c| up_const(BigRational::from_integer(c))).collect()
}

fn rotation_class_order(m: u32, k: u32) -> u32 {
    m / m.gcd(&k)
}

fn mobius(n: u32) -> i64 {
    let mut n = n;
    let mut res = 1;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            res = -res;
        }
        d += 1;
    }
    if n > 1 {
        res = -res;
    }
    res
}

/// Sum of `u^j` over the primitive `e`-th roots of unity.
fn ramanujan(e: u32, j: i64) -> i64 {
    let g = (j.unsigned_abs() as u32).gcd(&e);
    let g = if j == 0 { e } else { g };
    (1..=g).filter(|d| g % d == 0).map(|d| mobius(e / d) * d as i64).sum()
}

fn prim_sum(e: u32, f: &UPoly) -> BigRational {
    f.iter().map(|(j, c)| c * BigRational::from_integer(BigInt::from(ramanujan(e, *j)))).sum()
}

/// How an element enters the graded sums.
enum ElementKind {
    /// Rational eigen-data: `det(1 - t w | V)` as integer coefficients.
    Rational(Vec<BigInt>),
    /// Rotation whose eigenvalue `u` is a primitive `e`-th root of unity.
    Rotation { e: u32 },
}

fn element_kind(sys: &CoxeterSystem, w: u32) -> ElementKind {
    if sys.ty().family == Family::I2 {
        if let CycleData::Rotation(k) = sys.cycle_data(w) {
            if k != 0 {
                return ElementKind::Rotation { e: rotation_class_order(sys.ty().m, k) };
            }
        }
    }
    ElementKind::Rational(sys.det_one_minus(w).expect("rational eigen-data"))
}

/// `det(1 - X^p w | V_p) / det(1 - X w | V)` truncated at `len`.
fn element_series(sys: &CoxeterSystem, kind: &ElementKind, p: u32, len: usize) -> Vec<UPoly> {
    match kind {
        ElementKind::Rational(det) => {
            let num = int_poly_to_ser(det, p as usize, len);
            let inv = int_series_inverse(det, len);
            ser_mul(&num, &inv, len)
        }
        ElementKind::Rotation { .. } => {
            let _ = sys;
            let one = BigRational::one();
            let mut num = vec![UPoly::new(); len];
            num[0] = up_const(one.clone());
            let pp = p as usize;
            if pp < len {
                let mut mid = UPoly::new();
                mid.insert(p as i64, -one.clone());
                mid.insert(-(p as i64), -one.clone());
                num[pp] = mid;
            }
            if 2 * pp < len {
                num[2 * pp] = up_const(one.clone());
            }
            let inv: Vec<UPoly> = (0..len as i64)
                .map(|i| {
                    let mut m = UPoly::new();
                    for a in 0..=i {
                        *m.entry(i - 2 * a).or_insert_with(BigRational::zero) += &one;
                    }
                    m
                })
                .collect();
            ser_mul(&num, &inv, len)
        }
    }
}

/// `det(1 + t w | V)` as a polynomial in `t` with `UPoly` coefficients.
fn det_one_plus(kind: &ElementKind) -> Vec<UPoly> {
    match kind {
        ElementKind::Rational(det) => det
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let c = if i % 2 == 1 { -c.clone() } else { c.clone() };
                up_const(BigRational::from_integer(c))
            })
            .collect(),
        ElementKind::Rotation { .. } => {
            let one = BigRational::one();
            let mut mid = UPoly::new();
            mid.insert(1, one.clone());
            mid.insert(-1, one.clone());
            vec![up_const(one.clone()), mid, up_const(one)]
        }
    }
}

struct Bounds {
    len: usize,
    top: usize,
}

fn bounds(sys: &CoxeterSystem, p: u32) -> Bounds {
    let r = sys.rank();
    let sum_d: usize = sys.degrees().iter().map(|&d| d as usize).sum();
    let top = (p as usize - 1) * r;
    Bounds { len: p as usize * r + 2 * sum_d + 3, top }
}

/// Collapse a `UPoly`-valued series to rationals. `classes` lists, for each
/// rotation class, the series already multiplied by its weight.
fn certify(series: &[BigRational], b: &Bounds) -> Result<RatFunc> {
    if series.iter().skip(b.top + 1).any(|c| !c.is_zero()) {
        return Err(Error::InvalidInput("graded trace failed the polynomial certificate".into()));
    }
    let den = series.iter().take(b.top + 1).fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let num = LaurentPoly::from_terms(
        series
            .iter()
            .take(b.top + 1)
            .enumerate()
            .map(|(i, c)| (2 * i as i64, (c * BigRational::from_integer(den.clone())).to_integer())),
    );
    RatFunc::new(num, LaurentPoly::constant(den))
}

/// Graded trace `sum_w z_w det(1 - X^p w|V_p^*) / det(1 - X w|V^*)` of `z` on `L_{p/h}`.
///
/// For a non-crystallographic dihedral group the coefficients of `z` must be
/// constant on each Galois class of rotations.
pub fn graded_char(sys: &CoxeterSystem, z: &GroupAlgebraElt, p: u32) -> Result<RatFunc> {
    require_coprime(sys, p)?;
    let b = bounds(sys, p);
    let mut total = vec![BigRational::zero(); b.len];
    let mut class_coeff: BTreeMap<u32, (BigRational, usize)> = BTreeMap::new();
    for w in sys.elements() {
        let c = z.coeff(w);
        let kind = element_kind(sys, w);
        match kind {
            ElementKind::Rational(_) => {
                if c.is_zero() {
                    continue;
                }
                let ser = element_series(sys, &kind, p, b.len);
                for (i, f) in ser.iter().enumerate() {
                    total[i] += f.get(&0).cloned().unwrap_or_else(BigRational::zero) * &c;
                }
            }
            ElementKind::Rotation { e } => {
                let entry = class_coeff.entry(e).or_insert((c.clone(), 0));
                if entry.0 != c {
                    return Err(Error::InvalidInput("coefficients are not constant on a Galois class of rotations".into()));
                }
                entry.1 += 1;
            }
        }
    }
    for (e, (c, _)) in class_coeff {
        if c.is_zero() {
            continue;
        }
        let ser = element_series(sys, &ElementKind::Rotation { e }, p, b.len);
        for (i, f) in ser.iter().enumerate() {
            total[i] += prim_sum(e, f) * &c;
        }
    }
    certify(&total, &b)
}

/// The Kirkman polynomial: coefficient of `t^k` in
/// `(1/|W|) sum_w det(1 + t w|V^*) det(1 - X^p w|V_p^*) / det(1 - X w|V^*)`.
pub fn kirk_poly_in(sys: &CoxeterSystem, p: u32, k: usize) -> Result<LaurentPoly> {
    require_coprime(sys, p)?;
    if k > sys.rank() {
        return Err(Error::InvalidInput(format!("k = {k} exceeds the rank {}", sys.rank())));
    }
    let b = bounds(sys, p);
    let inv_order = BigRational::new(BigInt::one(), BigInt::from(sys.order()));
    let mut seen_classes = std::collections::BTreeSet::new();
    let parts = par::map_range(sys.order(), |w| {
        let kind = element_kind(sys, w as u32);
        let weight = det_one_plus(&kind).get(k).cloned().unwrap_or_default();
        (kind, weight)
    });
    let mut total = vec![BigRational::zero(); b.len];
    for (kind, weight) in parts {
        if weight.is_empty() {
            continue;
        }
        let ser = element_series(sys, &kind, p, b.len);
        match kind {
            ElementKind::Rational(_) => {
                let c = weight.get(&0).cloned().unwrap_or_else(BigRational::zero);
                for (i, f) in ser.iter().enumerate() {
                    total[i] += f.get(&0).cloned().unwrap_or_else(BigRational::zero) * &c * &inv_order;
                }
            }
            ElementKind::Rotation { e } => {
                if !seen_classes.insert(e) {
                    continue;
                }
                for (i, f) in ser.iter().enumerate() {
                    total[i] += prim_sum(e, &up_mul(f, &weight)) * &inv_order;
                }
            }
        }
    }
    let r = certify(&total, &b)?;
    r.to_poly().ok_or_else(|| Error::InvalidInput("Kirkman polynomial has non-integral coefficients".into()))
}

/// `Kirk^{(k)}_{n,p}` for the symmetric group `S_n` acting on its
/// `(n-1)`-dimensional reflection representation.
pub fn kirk_poly(n: usize, p: u32, k: usize) -> Result<LaurentPoly> {
    if n < 2 {
        return Err(Error::InvalidInput("n must be at least 2".into()));
    }
    let sys = CoxeterSystem::get(CoxeterType::a(n - 1))?;
    kirk_poly_in(&sys, p, k)
}

/// `(X - 1)^{-(n-1)} sum_{Asc(v) = I_k} cell_poly(v, c^p)` with `c` the
/// standard Coxeter word and `I_k = {s_1, ..., s_{n-1-k}}`.
pub fn kirk_from_cells(n: usize, p: u32, k: usize) -> Result<LaurentPoly> {
    let sys = CoxeterSystem::get(CoxeterType::a(n - 1))?;
    let r = sys.rank();
    if k > r {
        return Err(Error::InvalidInput(format!("k = {k} exceeds the rank {r}")));
    }
    let word = power_word(&crate::coxeter::standard_coxeter_word(r), p as usize);
    let ik = crate::hecke::initial_segment(r, k);
    let vs: Vec<u32> = sys.elements().filter(|&v| sys.left_ascents(v) == ik).collect();
    let parts = par::map(&vs, |&v| deodhar::cell_poly(&sys, v, &word));
    let mut total = LaurentPoly::zero();
    for q in &parts {
        total += q;
    }
    total.exact_div(&LaurentPoly::x_minus_one().pow(r as u32))
}

#[derive(Clone, Debug, Serialize)]
pub struct ParkingCase {
    pub coxeter_type: String,
    pub p: u32,
    pub word: Vec<usize>,
    pub j: Vec<usize>,
    pub sign: String,
    pub product: LaurentPoly,
    pub cells: Option<LaurentPoly>,
    pub pass: bool,
}

/// Compare `park_poly` with `deodhar::park_sum` over every Coxeter word,
/// both signs and every `J`.
pub fn verify_parking(sys: &CoxeterSystem, p: u32) -> Result<Vec<ParkingCase>> {
    require_coprime(sys, p)?;
    let r = sys.rank();
    let mut cases = Vec::new();
    for c in all_coxeter_words(r) {
        let word = power_word(&c, p as usize);
        let cells = deodhar::all_cell_polys(sys, &word);
        for j in GenSet::all(r) {
            for sign in [Sign::Plus, Sign::Minus] {
                let product = park_poly(sys, j, sign, p)?;
                let reps = match sign {
                    Sign::Plus => sys.coset_reps_minus(j),
                    Sign::Minus => sys.coset_reps_plus(j),
                };
                let mut total = LaurentPoly::zero();
                for v in reps {
                    total += &cells[v as usize];
                }
                let quot = total.exact_div(&LaurentPoly::x_minus_one().pow(r as u32)).ok();
                let pass = quot.as_ref() == Some(&product);
                cases.push(ParkingCase {
                    coxeter_type: sys.ty().to_string(),
                    p,
                    word: c.iter().map(|s| s + 1).collect(),
                    j: j.labels(),
                    sign: sign.to_string(),
                    product,
                    cells: quot,
                    pass,
                });
            }
        }
    }
    Ok(cases)
}

#[derive(Clone, Debug, Serialize)]
pub struct BoxRow {
    /// 1-based labels of `J`.
    pub j: Vec<usize>,
    /// `sum_{Asc(v) = J} |M^(v)(c^p)|`.
    pub box_count: u64,
    /// Sum of the box counts over all supersets of `J`.
    pub superset_sum: u64,
    /// `park_poly(J, +)` at `X = 1`.
    pub park_plus: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoxTable {
    pub coxeter_type: String,
    pub p: u32,
    /// 1-based Coxeter word.
    pub word: Vec<usize>,
    /// Ordered by `|J|`, then by decreasing labels.
    pub rows: Vec<BoxRow>,
    /// Type A only: box counts at `J = I_k` for `k = 0..=r`.
    pub kirk_boxes: Vec<u64>,
    /// Type A only: `kirk_poly(n, p, k)` at `X = 1`.
    pub kirk_values: Vec<i64>,
}

fn small(x: BigInt) -> Result<i64> {
    x.to_i64().ok_or_else(|| Error::TooLarge(format!("{x} does not fit in 64 bits")))
}

/// Box counts of minimal distinguished subwords of `c^p` grouped by ascent set.
pub fn box_table(sys: &CoxeterSystem, c: &[usize], p: u32) -> Result<BoxTable> {
    require_coprime(sys, p)?;
    let r = sys.rank();
    let mut sorted = c.to_vec();
    sorted.sort_unstable();
    if sorted != (0..r).collect::<Vec<_>>() {
        return Err(Error::InvalidInput(format!("{c:?} is not a Coxeter word")));
    }
    let boxes = deodhar::box_counts(sys, &power_word(c, p as usize));
    let mut sets: Vec<GenSet> = GenSet::all(r).collect();
    sets.sort_by_key(|j| (j.len(), std::cmp::Reverse(j.labels())));
    let mut rows = Vec::new();
    for j in sets {
        let superset_sum = GenSet::all(r).filter(|i| i.is_superset(j)).map(|i| boxes[i.0 as usize]).sum();
        rows.push(BoxRow {
            j: j.labels(),
            box_count: boxes[j.0 as usize],
            superset_sum,
            park_plus: small(park_poly(sys, j, Sign::Plus, p)?.at_one())?,
        });
    }
    let (mut kirk_boxes, mut kirk_values) = (Vec::new(), Vec::new());
    if sys.ty().family == Family::A {
        for k in 0..=r {
            kirk_boxes.push(boxes[crate::hecke::initial_segment(r, k).0 as usize]);
            kirk_values.push(small(kirk_poly_in(sys, p, k)?.at_one())?);
        }
    }
    Ok(BoxTable {
        coxeter_type: sys.ty().to_string(),
        p,
        word: c.iter().map(|s| s + 1).collect(),
        rows,
        kirk_boxes,
        kirk_values,
    })
}
