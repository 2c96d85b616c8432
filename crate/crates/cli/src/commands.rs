//! One function per subcommand. Each returns the outputs for the report.

use std::path::Path;
use std::time::Instant;

use gl11::alexander::{conway, delta_c, delta_weighted, ConwayCache};
use gl11::algebra::{RatFunc, Value};
use gl11::checks::{self, Check};
use gl11::lens::{classify_lens, lens_invariant_table, CellStatus, LensSpec};
use gl11::linkdiag::{parse_link, LinkDiagram};
use gl11::manifold::{
    delta_kirby, delta_refined, enumerate_omega, Multiplicities, OmegaClass, PaletteGroup, SurgeryPresentation,
};
use gl11::torsion::torsion_relation_check;
use gl11::{Error, ErrorKind, Result};
use rayon::prelude::*;
use serde_json::{json, Value as Json};

use crate::omega::{build_omega, parse_assignments};
use crate::report::{cell, Outcome, Status, Table};

pub fn read_link(path: &Path) -> Result<LinkDiagram> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    parse_link(&text)
}

fn component_vars(r: usize) -> Vec<String> {
    (1..=r).map(|i| format!("t{i}")).collect()
}

fn symbolic(f: RatFunc) -> Json {
    let vars = component_vars(f.nvars());
    Value::RatFunc { vars, f }.to_json()
}

pub fn parse_ints(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|x| x.trim().parse().map_err(|_| Error::Parse(format!("{x:?} is not an integer"))))
        .collect()
}

pub fn link(file: &Path, colors: Option<&str>) -> Result<Outcome> {
    let d = read_link(file)?;
    let cache = ConwayCache::new();
    let mut out = json!({
        "components": d.components(),
        "linking_matrix": d.linking_numbers()?,
        "conway": symbolic(conway(&d, &cache)?),
        "delta_c": symbolic(delta_c(&d, &cache)?),
    });
    if let Some(c) = colors {
        let w = delta_weighted(&d, &parse_ints(c)?, &cache)?;
        out["weights"] = json!(parse_ints(c)?);
        out["delta_weighted"] = symbolic(w.to_ratfunc());
    }
    Ok(Outcome::ok(out))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Refined,
    Kirby,
    Both,
}

pub struct OmegaArgs<'a> {
    pub omega: &'a [String],
    pub torsion_order: Option<u64>,
    pub symbolic: bool,
}

impl OmegaArgs<'_> {
    fn class(&self, p: &SurgeryPresentation) -> Result<Option<OmegaClass>> {
        if self.omega.is_empty() {
            return Ok(None);
        }
        build_omega(p, &parse_assignments(self.omega)?, self.torsion_order).map(Some)
    }

    fn at<'w>(&self, w: Option<&'w OmegaClass>) -> Multiplicities<'w> {
        match w {
            None => Multiplicities::Generic,
            Some(w) if self.symbolic => Multiplicities::Symbolic(w),
            Some(w) => Multiplicities::auto(w),
        }
    }
}

fn presentation_json(p: &SurgeryPresentation) -> Json {
    json!({
        "components": p.components(),
        "linking_matrix": p.linking_numbers(),
        "sigma_plus": p.sigma_plus(),
        "h1": p.h1().to_string(),
    })
}

fn omega_json(w: &OmegaClass) -> Json {
    json!({
        "group": w.group().to_string(),
        "images": w.images().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        "text": w.to_string(),
    })
}

/// The requested values, and whether the two methods agree under `Both`.
fn values(p: &SurgeryPresentation, at: Multiplicities<'_>, method: Method, cache: &ConwayCache) -> Result<(Json, bool)> {
    let mut out = json!({});
    let refined = matches!(method, Method::Refined | Method::Both)
        .then(|| delta_refined(p, at, cache))
        .transpose()?;
    let kirby = matches!(method, Method::Kirby | Method::Both)
        .then(|| delta_kirby(p, at, cache))
        .transpose()?;
    let mut agree = true;
    if let (Some(a), Some(b)) = (&refined, &kirby) {
        agree = a == b;
        out["equal"] = json!(agree);
    }
    if let Some(v) = refined {
        out["refined"] = v.to_json();
    }
    if let Some(v) = kirby {
        out["kirby"] = v.to_json();
    }
    Ok((out, agree))
}

pub fn manifold(file: &Path, om: &OmegaArgs<'_>, method: Method) -> Result<Outcome> {
    let p = SurgeryPresentation::new(read_link(file)?)?;
    let cache = ConwayCache::new();
    let w = om.class(&p)?;
    let mut out = presentation_json(&p);
    if let Some(w) = &w {
        out["omega"] = omega_json(w);
    }
    let (vals, agree) = values(&p, om.at(w.as_ref()), method, &cache)?;
    out["delta"] = vals;
    let status = if agree { Status::Ok } else { Status::InternalError };
    Ok(Outcome::ok(out).with_status(status))
}

pub fn manifold_enumerate(file: &Path, m: u64, symbolic: bool, method: Method) -> Result<Outcome> {
    let p = SurgeryPresentation::new(read_link(file)?)?;
    let cache = ConwayCache::new();
    let classes = enumerate_omega(&p, &PaletteGroup::new(1, m)?)?;
    let results: Vec<Result<(Json, bool)>> = classes
        .par_iter()
        .map(|w| {
            let at = if symbolic { Multiplicities::Symbolic(w) } else { Multiplicities::Cyclotomic(w) };
            values(&p, at, method, &cache)
        })
        .collect();
    let mut rows = Vec::new();
    let mut table = Table {
        header: vec!["omega", "status", "refined", "kirby", "equal"],
        rows: Vec::new(),
    };
    let mut all_agree = true;
    for (w, r) in classes.iter().zip(results) {
        let mut row = json!({ "omega": omega_json(w) });
        match r {
            Ok((vals, agree)) => {
                all_agree &= agree;
                row["status"] = json!("ok");
                row["delta"] = vals;
            }
            Err(e) if e.kind() == ErrorKind::NotComputable => {
                row["status"] = json!("not-computable");
                row["error"] = json!(e.to_string());
            }
            Err(e) => return Err(e),
        }
        let get = |k: &str| row.get("delta").and_then(|d| d.get(k)).map(cell).unwrap_or_default();
        table.rows.push(vec![
            w.to_string(),
            cell(&row["status"]),
            get("refined"),
            get("kirby"),
            get("equal"),
        ]);
        rows.push(row);
    }
    let mut out = presentation_json(&p);
    out["torsion_order"] = json!(m);
    out["classes"] = Json::Array(rows);
    let status = if all_agree { Status::Ok } else { Status::InternalError };
    Ok(Outcome::ok(out).with_table(table).with_status(status))
}

pub fn torsion(file: &Path, om: &OmegaArgs<'_>, charge: &str) -> Result<Outcome> {
    let p = SurgeryPresentation::new(read_link(file)?)?;
    let k = parse_ints(charge)?;
    let w = om.class(&p)?;
    let r = torsion_relation_check(&p, om.at(w.as_ref()), &k, &ConwayCache::new())?;
    let mut out = presentation_json(&p);
    if let Some(w) = &w {
        out["omega"] = omega_json(w);
    }
    out["charge"] = json!(k);
    out["tau"] = r.tau.to_json();
    out["rhs"] = r.rhs.to_json();
    out["holds"] = json!(r.holds);
    let status = if r.holds { Status::Ok } else { Status::InternalError };
    Ok(Outcome::ok(out).with_status(status))
}

fn odd_part(mut p: u64) -> u64 {
    while p > 1 && p % 2 == 0 {
        p /= 2;
    }
    p
}

pub fn lens(p: i64, q: Option<i64>, m: Option<u64>) -> Result<Outcome> {
    let only = q.map(|q| LensSpec::new(p, q)).transpose()?.map(|s| s.q());
    if p < 2 {
        return Err(Error::InvalidLensSpec { p, q: q.unwrap_or(0) });
    }
    let m = m.unwrap_or_else(|| odd_part(p as u64));
    let t = lens_invariant_table(p, m, &ConwayCache::new())?;
    let mut table = Table {
        header: vec!["p", "q", "k", "closed_value", "surgery_value", "equal"],
        rows: Vec::new(),
    };
    let mut cells = Vec::new();
    for c in t.cells.iter().filter(|c| only.is_none_or(|q| c.q == q)) {
        let surgery = c.surgery.as_ref().map(Value::to_json).unwrap_or(Json::Null);
        let (status, mer) = match c.status {
            CellStatus::Equal => ("equal", Json::Null),
            CellStatus::NotComputable { meridian } => ("not-computable", json!(meridian)),
        };
        table.rows.push(vec![
            p.to_string(),
            c.q.to_string(),
            c.k.to_string(),
            c.closed.to_json().to_string(),
            if surgery.is_null() { String::new() } else { surgery.to_string() },
            if surgery.is_null() { String::new() } else { "true".into() },
        ]);
        cells.push(json!({
            "q": c.q,
            "k": c.k,
            "closed_value": c.closed.to_json(),
            "surgery_value": surgery,
            "status": status,
            "trivial_meridian": mer,
        }));
    }
    let out = json!({
        "p": p,
        "torsion_order": m,
        "cells": cells,
        "reason": t.reason,
    });
    Ok(Outcome::ok(out).with_table(table))
}

pub fn classify(p: i64) -> Result<Outcome> {
    let c = classify_lens(p)?;
    let class_of = |parts: &[Vec<i64>], q: i64| parts.iter().position(|x| x.contains(&q)).expect("partition") + 1;
    let rows = gl11::lens::coprime_residues(p)
        .into_iter()
        .map(|q| {
            vec![
                q.to_string(),
                class_of(&c.invariant, q).to_string(),
                class_of(&c.arithmetic, q).to_string(),
            ]
        })
        .collect();
    let out = json!({
        "p": c.p,
        "torsion_order": c.m,
        "invariant": c.invariant,
        "arithmetic": c.arithmetic,
        "matches_arithmetic": c.matches_arithmetic(),
        "merged": c.merged,
        "power_of_two": c.power_of_two,
    });
    let table = Table {
        header: vec!["q", "invariant_class", "arithmetic_class"],
        rows,
    };
    Ok(Outcome::ok(out).with_table(table))
}

fn check_json(c: &Check, timing: bool) -> Json {
    let mut j = json!({
        "id": c.id,
        "name": c.name,
        "passed": c.passed,
        "detail": c.detail,
        "limit_seconds": c.limit,
    });
    if timing {
        j["seconds"] = json!(c.seconds);
    }
    j
}

pub fn selftest(skip: &[u32], timing: bool) -> Result<Outcome> {
    let start = Instant::now();
    let results: Vec<Check> = checks::CRITERIA
        .iter()
        .enumerate()
        .filter(|(i, _)| !skip.contains(&(*i as u32 + 1)))
        .map(|(_, f)| f())
        .collect();
    for c in &results {
        eprintln!("{}", c.line());
    }
    let passed = results.iter().all(|c| c.passed);
    let table = Table {
        header: vec!["id", "name", "passed", "detail"],
        rows: results
            .iter()
            .map(|c| vec![c.id.to_string(), c.name.to_string(), c.passed.to_string(), c.detail.clone()])
            .collect(),
    };
    let mut out = json!({
        "checks": results.iter().map(|c| check_json(c, timing)).collect::<Vec<_>>(),
        "skipped": skip,
        "passed": passed,
    });
    if timing {
        out["seconds"] = json!(start.elapsed().as_secs_f64());
    }
    let status = if passed { Status::Ok } else { Status::InternalError };
    Ok(Outcome::ok(out).with_table(table).with_status(status))
}
