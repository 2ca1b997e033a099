use std::sync::Arc;

use hecke_norms::catalan::{box_table, kirk_from_cells, kirk_poly, park_poly, verify_parking};
use hecke_norms::coxeter::{all_coxeter_words, parse_word, standard_coxeter_word, CoxeterSystem, GenSet, Sign};
use hecke_norms::deodhar::{cell_poly, enumerate, minimal, parse_element, require_nonempty};
use hecke_norms::flagoracle::{word_label, CheckReport, FqGroup};
use hecke_norms::hecke::{self, relative_norm, HeckeElt};
use hecke_norms::homfly::{braid_checks, bw_homfly, calibrate, mu_slice, BraidWord, Route};
use hecke_norms::noncrossing::{asso_f_vector, nc_asso_faces, nc_enumerate, nc_parking_functions, nc_verify_prop};
use hecke_norms::symfunc::{compositions, verify_lascoux, verify_tau_to_e_h};
use hecke_norms::{Error, Result};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::{json, Value};

use crate::output::Report;
use crate::{Alpha, FieldArgs, GroupArgs, NcAction, NcArgs, Suite};

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn system(group: &GroupArgs) -> Result<Arc<CoxeterSystem>> {
    CoxeterSystem::parse(&group.ty)
}

fn type_a(n: usize) -> Result<Arc<CoxeterSystem>> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("n = {n}; need n >= 2")));
    }
    CoxeterSystem::parse(&format!("A{}", n - 1))
}

fn word_arg(parts: &[String], rank: usize) -> Result<Vec<usize>> {
    parse_word(&parts.join(" "), rank)
}

fn labels(word: &[usize]) -> Vec<usize> {
    word.iter().map(|s| s + 1).collect()
}

/// Values for `S_4`, `c = s1 s2 s3`, `p = 3`: box counts and parking values by `J`
/// in the order of [`GenSet::all`], then Kirkman values for `k = 0..3`.
const FIGURE_BOXES: [u64; 8] = [0, 1, 3, 1, 5, 7, 5, 5];
const FIGURE_PARK: [i64; 8] = [27, 18, 18, 18, 10, 12, 10, 5];
const FIGURE_KIRKMAN: [i64; 4] = [5, 5, 1, 0];

pub fn figure_a3p3() -> Result<Report> {
    let sys = CoxeterSystem::parse("A3")?;
    let t = box_table(&sys, &[0, 1, 2], 3)?;
    let mut witnesses = Vec::new();
    let mut rows = Vec::new();
    for (i, row) in t.rows.iter().enumerate() {
        let ok = row.box_count == FIGURE_BOXES[i] && row.park_plus == FIGURE_PARK[i] && row.superset_sum as i64 == row.park_plus;
        if !ok {
            witnesses.push(format!("J={:?}: box {} park {} superset {}", row.j, row.box_count, row.park_plus, row.superset_sum));
        }
        rows.push(json!({
            "J": row.j,
            "box_count": row.box_count,
            "expected_box_count": FIGURE_BOXES[i],
            "superset_sum": row.superset_sum,
            "park_plus": row.park_plus,
            "expected_park_plus": FIGURE_PARK[i],
            "ok": ok,
        }));
    }
    if t.kirk_values != FIGURE_KIRKMAN || t.kirk_boxes.iter().map(|&b| b as i64).ne(FIGURE_KIRKMAN) {
        witnesses.push(format!("kirkman {:?} boxes {:?}", t.kirk_values, t.kirk_boxes));
    }
    let result = json!({
        "rows": rows,
        "kirkman_values": t.kirk_values,
        "kirkman_boxes": t.kirk_boxes,
        "expected_kirkman": FIGURE_KIRKMAN,
    });
    Ok(Report::verify("figure-a3p3", json!({"type": "A3", "c": [1, 2, 3], "p": 3}), result, witnesses))
}

fn check_reports(command: &str, params: Value, reports: Vec<CheckReport>) -> Report {
    let witnesses = reports
        .iter()
        .filter(|r| !r.pass)
        .map(|r| {
            let bad = r.rows.iter().find(|row| !row.ok);
            let detail = bad.map(|b| format!("{}: {} vs {}", b.key, b.observed, b.expected)).unwrap_or_default();
            format!("{} J={:?} sign={:?} {detail}", r.check, r.j, r.sign)
        })
        .collect();
    Report::verify(command, params, to_value(&reports), witnesses)
}

fn field_group(field: &FieldArgs) -> Result<FqGroup> {
    FqGroup::build(field.n, field.q)
}

fn all_words(rank: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut layer: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                (0..rank).map(move |s| {
                    let mut x = w.clone();
                    x.push(s);
                    x
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

pub fn verify(suite: Suite) -> Result<Report> {
    match suite {
        Suite::Main { field } => {
            let g = field_group(&field)?;
            let mut reports = Vec::new();
            for j in GenSet::all(g.weyl().rank()) {
                reports.extend(g.verify_main(j)?);
            }
            Ok(check_reports("verify main", json!({"n": field.n, "q": field.q}), reports))
        }
        Suite::Cell { field, word, max_len } => {
            let g = field_group(&field)?;
            let r = g.weyl().rank();
            let words = if word.is_empty() { all_words(r, max_len) } else { vec![word_arg(&word, r)?] };
            let mut reports = Vec::new();
            for w in &words {
                for j in GenSet::all(r) {
                    reports.extend(g.verify_cell(j, w)?);
                }
            }
            let params = json!({"n": field.n, "q": field.q, "words": words.len(), "max_len": max_len});
            Ok(check_reports("verify cell", params, reports))
        }
        Suite::Trace { field } => {
            let g = field_group(&field)?;
            let mut reports = Vec::new();
            for j in GenSet::all(g.weyl().rank()) {
                reports.extend(g.verify_trace(j)?);
            }
            Ok(check_reports("verify trace", json!({"n": field.n, "q": field.q}), reports))
        }
        Suite::Parking { group, p } => {
            let sys = system(&group)?;
            let cases = verify_parking(&sys, p)?;
            let witnesses = cases
                .iter()
                .filter(|c| !c.pass)
                .map(|c| format!("c={:?} J={:?} {}: {} vs {:?}", c.word, c.j, c.sign, c.product, c.cells.as_ref().map(|x| x.to_string())))
                .collect();
            let rows: Vec<Value> = cases
                .iter()
                .map(|c| {
                    json!({
                        "c": c.word,
                        "J": c.j,
                        "sign": c.sign,
                        "product": c.product.to_string(),
                        "cells": c.cells.as_ref().map(|x| x.to_string()),
                        "ok": c.pass,
                    })
                })
                .collect();
            Ok(Report::verify("verify parking", json!({"type": sys.ty().to_string(), "p": p}), json!({"rows": rows}), witnesses))
        }
        Suite::Jm { n } => {
            let sys = type_a(n)?;
            let r = n - 1;
            let e = hecke::jm_elementary_all(&sys)?;
            let mut rows = Vec::new();
            let mut witnesses = Vec::new();
            for k in 0..=r {
                let ok = e[r - k] == hecke::zeta(&sys, hecke::initial_segment(r, k), Sign::Plus);
                if !ok {
                    witnesses.push(format!("e_{} differs from the descent sum for k={k}", r - k));
                }
                rows.push(json!({"k": k, "degree": r - k, "ok": ok}));
            }
            Ok(Report::verify("verify jm", json!({"n": n}), json!({"rows": rows}), witnesses))
        }
        Suite::Lascoux { n } => {
            let mut rows = Vec::new();
            let mut witnesses = Vec::new();
            for nu in compositions(n) {
                for sign in [Sign::Plus, Sign::Minus] {
                    for (check, rep) in [("lascoux", verify_lascoux(n, &nu, sign)?), ("tau-to-e-h", verify_tau_to_e_h(n, &nu, sign)?)] {
                        if !rep.pass {
                            witnesses.push(format!("{check} nu={nu:?} {sign}"));
                        }
                        rows.push(json!({"check": check, "nu": nu, "sign": sign.to_string(), "coordinates": rep.rows.len(), "ok": rep.pass}));
                    }
                }
            }
            Ok(Report::verify("verify lascoux", json!({"n": n}), json!({"rows": rows}), witnesses))
        }
        Suite::Kirkman { n, p } => {
            let mut rows = Vec::new();
            let mut witnesses = Vec::new();
            let word = hecke_norms::coxeter::power_word(&standard_coxeter_word(n.saturating_sub(1)), p as usize);
            let h = HeckeElt::from_word(&type_a(n)?, &word);
            for k in 0..n {
                let poly = kirk_poly(n, p, k)?;
                let cells = kirk_from_cells(n, p, k)?;
                let expected = hecke_norms::poly::RatFunc::from_poly(poly.clone());
                let jm = mu_slice(&h, k, Route::Jm)?;
                let zeta = mu_slice(&h, k, Route::Zeta)?;
                let ok = poly == cells && jm == expected && zeta == expected;
                if !ok {
                    witnesses.push(format!("k={k}: {poly} / cells {cells} / jm {jm} / zeta {zeta}"));
                }
                rows.push(json!({"k": k, "polynomial": poly.to_string(), "value_at_1": poly.at_one().to_string(), "ok": ok}));
            }
            Ok(Report::verify("verify kirkman", json!({"n": n, "p": p}), json!({"rows": rows}), witnesses))
        }
        Suite::Noncrossing { n } => {
            let mut rows = Vec::new();
            let mut witnesses = Vec::new();
            if n < 2 {
                return Err(Error::InvalidInput(format!("n = {n}; need n >= 2")));
            }
            for c in all_coxeter_words(n - 1) {
                let rep = nc_verify_prop(n, &c)?;
                let partitions = nc_enumerate(n, &c)?.len();
                if !rep.pass || !rep.direct_pass {
                    witnesses.push(format!("c={:?} conjugated {} direct {}", labels(&c), rep.pass, rep.direct_pass));
                }
                rows.push(json!({
                    "c": labels(&c),
                    "partitions": partitions,
                    "pass": rep.pass,
                    "direct_pass": rep.direct_pass,
                }));
            }
            Ok(Report::verify("verify noncrossing", json!({"n": n}), json!({"rows": rows}), witnesses))
        }
        Suite::Homfly { strands, braid, count, max_len, seed } => {
            let braids = match (strands, braid) {
                (Some(n), Some(text)) => vec![BraidWord::parse(n, &text)?],
                (None, None) => {
                    let mut rng = StdRng::seed_from_u64(seed);
                    let len_cap = max_len.max(1);
                    (0..count)
                        .map(|_| {
                            let n = rng.gen_range(2..=4usize);
                            let len = rng.gen_range(1..=len_cap);
                            let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..n - 1)).collect();
                            BraidWord::positive(n, &word)
                        })
                        .collect::<Result<_>>()?
                }
                _ => return Err(Error::InvalidInput("--strands and --braid go together".into())),
            };
            let mut cals = std::collections::BTreeMap::new();
            let mut checks = Vec::new();
            for b in &braids {
                let n = b.strands();
                if let std::collections::btree_map::Entry::Vacant(e) = cals.entry(n) {
                    e.insert(calibrate(n)?);
                }
                checks.push(braid_checks(b, &cals[&n])?);
            }
            let witnesses = checks.iter().filter(|c| !c.pass).map(|c| format!("{} on {} strands", c.braid, c.strands)).collect();
            let calibration: Vec<String> =
                cals.values().flat_map(|c| c.factors.iter().map(move |f| format!("n={} {f}", c.n))).collect();
            let params = json!({"strands": strands, "count": braids.len(), "max_len": max_len, "seed": seed});
            Ok(Report::verify("verify homfly", params, json!({"rows": to_value(&checks), "calibration": calibration}), witnesses))
        }
    }
}

pub fn park(group: &GroupArgs, p: u32, j: &str, sign: &str) -> Result<Report> {
    let sys = system(group)?;
    let jset = GenSet::parse(j, sys.rank())?;
    let sign: Sign = sign.parse()?;
    let poly = park_poly(&sys, jset, sign, p)?;
    let params = json!({"type": sys.ty().to_string(), "p": p, "J": jset.labels(), "sign": sign.to_string()});
    let result = json!({
        "spec": format!("park[{}, p={p}, J={jset}, {sign}]", sys.ty()),
        "polynomial": poly.to_string(),
        "value_at_1": poly.at_one().to_string(),
    });
    Ok(Report::compute("park", params, result))
}

pub fn kirk(n: usize, p: u32, k: Option<usize>) -> Result<Report> {
    let ks: Vec<usize> = match k {
        Some(k) => vec![k],
        None => (0..n.max(1)).collect(),
    };
    let rows = ks
        .iter()
        .map(|&k| {
            let poly = kirk_poly(n, p, k)?;
            Ok(json!({"k": k, "polynomial": poly.to_string(), "value_at_1": poly.at_one().to_string()}))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Report::compute("kirk", json!({"n": n, "p": p, "k": k}), json!({"rows": rows})))
}

pub fn deodhar(group: &GroupArgs, v: &str, word: &[String], only_minimal: bool) -> Result<Report> {
    let sys = system(group)?;
    let w = word_arg(word, sys.rank())?;
    require_nonempty(&w)?;
    let v_elt = parse_element(&sys, v)?;
    let subs = if only_minimal { minimal(&sys, v_elt, &w) } else { enumerate(&sys, v_elt, &w) };
    let rows: Vec<Value> = subs
        .iter()
        .map(|s| {
            let pattern: String = s.takes.iter().map(|&t| if t { '1' } else { '0' }).collect();
            json!({"takes": pattern, "e": s.e, "d": s.d, "weight": s.weight().to_string()})
        })
        .collect();
    let params = json!({"type": sys.ty().to_string(), "v": word_label(&sys, v_elt), "word": labels(&w), "minimal": only_minimal});
    let result = json!({"rows": rows, "count": subs.len(), "cell_polynomial": cell_poly(&sys, v_elt, &w).to_string()});
    Ok(Report::compute("deodhar", params, result))
}

pub fn homfly(strands: usize, braid: &str) -> Result<Report> {
    let b = BraidWord::parse(strands, braid)?;
    let value = bw_homfly(&b)?;
    let slices: Vec<Value> = value
        .a_degrees()
        .into_iter()
        .map(|a| json!({"a": a, "coefficient": value.slice(a).to_string()}))
        .collect();
    let params = json!({"strands": strands, "braid": b.to_string()});
    let result = json!({"polynomial": value.to_pretty(), "slices": slices, "writhe": b.writhe()});
    Ok(Report::compute("homfly", params, result))
}

pub fn norm(group: &GroupArgs, j: &str, alpha: Alpha) -> Result<Report> {
    let sys = system(group)?;
    let jset = GenSet::parse(j, sys.rank())?;
    let a = match alpha {
        Alpha::One => HeckeElt::basis(&sys, 0),
        Alpha::Twist => {
            let wj = sys.longest_in(jset);
            HeckeElt::basis(&sys, wj).rmul_basis(wj)
        }
    };
    let n = relative_norm(jset, &a)?;
    let terms: Vec<Value> = n
        .terms()
        .map(|(w, c)| json!({"w": word_label(&sys, w), "coefficient": c.to_string()}))
        .collect();
    let alpha_name = match alpha {
        Alpha::One => "one",
        Alpha::Twist => "twist",
    };
    let params = json!({"type": sys.ty().to_string(), "J": jset.labels(), "alpha": alpha_name});
    Ok(Report::compute("norm", params, json!({"rows": terms, "central": n.is_central()})))
}

fn nc_word(args: &NcArgs) -> Result<Vec<usize>> {
    if args.n < 2 {
        return Err(Error::InvalidInput(format!("n = {}; need n >= 2", args.n)));
    }
    if args.c.is_empty() {
        Ok(standard_coxeter_word(args.n - 1))
    } else {
        word_arg(&args.c, args.n - 1)
    }
}

pub fn nc(action: NcAction) -> Result<Report> {
    match action {
        NcAction::Enumerate { args } => {
            let c = nc_word(&args)?;
            let parts = nc_enumerate(args.n, &c)?;
            Ok(Report::compute("nc enumerate", json!({"n": args.n, "c": labels(&c)}), to_value(&parts)))
        }
        NcAction::Parking { args } => {
            let c = nc_word(&args)?;
            let pfs = nc_parking_functions(args.n, &c)?;
            Ok(Report::compute("nc parking", json!({"n": args.n, "c": labels(&c)}), to_value(&pfs)))
        }
        NcAction::Faces { args, k } => {
            let c = nc_word(&args)?;
            let params = json!({"n": args.n, "c": labels(&c), "k": k});
            match k {
                Some(k) => Ok(Report::compute("nc faces", params, to_value(&nc_asso_faces(args.n, &c, k)?))),
                None => {
                    let f = asso_f_vector(args.n, &c)?;
                    let rows: Vec<Value> = f.iter().enumerate().map(|(k, count)| json!({"k": k, "faces": count})).collect();
                    Ok(Report::compute("nc faces", params, json!({"rows": rows, "f_vector": f})))
                }
            }
        }
        NcAction::Verify { args } => {
            let c = nc_word(&args)?;
            let rep = nc_verify_prop(args.n, &c)?;
            let witnesses = rep
                .rows
                .iter()
                .filter(|r| !r.ok)
                .map(|r| format!("pi={:?} k={}: {} vs {}", r.pi_word, r.k, r.count, r.expected))
                .collect();
            Ok(Report::verify("nc verify", json!({"n": args.n, "c": labels(&c)}), to_value(&rep), witnesses))
        }
    }
}
