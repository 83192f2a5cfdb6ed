//! One function per subcommand.

use num_bigint::BigInt;
use serde_json::{json, Value};

use sdgamma_core::complex::{barycentric_subdivision, subdivision_vertices};
use sdgamma_core::constructions::{all_certificates, theorem_bary_witness, verify_certificate, verify_gineq};
use sdgamma_core::eulerian::{
    eulerian_poly, gamma_nj, gamma_sd_from_h, h_sd_from_h, primed_range, table, table_by_enumeration,
    table_by_recurrence, unprimed_range, verify_gamma_recurrences, ENUMERATION_CAP,
};
use sdgamma_core::ffk::{ffk_closure, r, rank, unrank};
use sdgamma_core::transforms::{f_from_h, g_from_h, gamma_from_symmetric};
use sdgamma_core::{CountVector, Role};

use crate::input::{decimals, parse_inline_vector, Input};
use crate::render::Table;
use crate::witness::{verify_witness, WitnessDocument};
use crate::{CliError, Outcome};

fn dec(v: &CountVector) -> Value {
    json!(decimals(v))
}

fn opt_dec(v: &Option<CountVector>) -> Value {
    v.as_ref().map_or(Value::Null, dec)
}

fn columns(vs: &[&CountVector]) -> usize {
    vs.iter().map(|v| v.len()).max().unwrap_or(0)
}

fn notes_text(notes: &[String]) -> String {
    notes.iter().map(|n| format!("note: {n}\n")).collect()
}

/// `γ(sd)` when `h` is symmetric and nonnegative, otherwise a note.
fn sd_gamma(h: &CountVector, notes: &mut Vec<String>) -> Option<CountVector> {
    match gamma_sd_from_h(h) {
        Ok(g) => Some(g),
        Err(e) => {
            notes.push(format!("gamma(sd) omitted: {e}"));
            None
        }
    }
}

pub fn vectors(input: &Input) -> Result<Outcome, CliError> {
    let h = input.h_vector();
    let d = h.len() - 1;
    let (kind, f) = match input {
        Input::Complex(c) => ("complex", c.f_vector()),
        Input::H(h) => ("h", f_from_h(h, d)?),
    };
    let g = g_from_h(&h);
    let mut notes = Vec::new();
    let gamma = match h.first_asymmetry() {
        None => Some(gamma_from_symmetric(&h.to_polynomial(), d)?),
        Some(i) => {
            notes.push(format!("h is not symmetric (h_{i} != h_{}); gamma omitted", d - i));
            None
        }
    };
    let h_sd = h_sd_from_h(&h)?;
    let gamma_sd = sd_gamma(&h, &mut notes);

    let mut shown: Vec<(&str, &CountVector)> = vec![("f", &f), ("h", &h), ("g", &g)];
    if let Some(gm) = &gamma {
        shown.push(("gamma", gm));
    }
    shown.push(("h(sd)", &h_sd));
    if let Some(gs) = &gamma_sd {
        shown.push(("gamma(sd)", gs));
    }
    let mut table = Table::indexed(columns(&shown.iter().map(|(_, v)| *v).collect::<Vec<_>>()));
    for (label, v) in &shown {
        table.vector(*label, v);
    }
    let text = format!("{}{}", table.render(), notes_text(&notes));
    let json = json!({
        "format": 1,
        "command": "vectors",
        "input": kind,
        "f": dec(&f),
        "h": dec(&h),
        "g": dec(&g),
        "gamma": opt_dec(&gamma),
        "h_sd": dec(&h_sd),
        "gamma_sd": opt_dec(&gamma_sd),
        "notes": notes,
    });
    Ok(Outcome { text, json, success: true })
}

fn factorial_sum(sizes: impl Iterator<Item = usize>) -> BigInt {
    sizes.map(|k| (1..=k).map(BigInt::from).product::<BigInt>()).sum()
}

pub fn subdivide(input: &Input, cap: usize) -> Result<Outcome, CliError> {
    let h = input.h_vector();
    let h_sd = h_sd_from_h(&h)?;
    let mut notes = Vec::new();
    let gamma_sd = sd_gamma(&h, &mut notes);
    let mut text = String::new();
    let mut json = json!({ "format": 1, "command": "subdivide", "h_sd": dec(&h_sd), "gamma_sd": opt_dec(&gamma_sd) });

    if let Input::Complex(c) = input {
        let facets = factorial_sum(c.facets().iter().map(|f| f.len()));
        if facets > BigInt::from(cap) {
            return Err(CliError::Input(format!("the subdivision has {facets} facets, above the cap {cap}")));
        }
        let sd = barycentric_subdivision(c);
        if sd.h_vector() != h_sd {
            return Err(CliError::Verification(format!(
                "h of the explicit subdivision is {}, the transfer formula gives {h_sd}",
                sd.h_vector()
            )));
        }
        let labels = subdivision_vertices(c);
        let f_sd = sd.f_vector();
        let mut table = Table::indexed(f_sd.len());
        table.vector("f(sd)", &f_sd).vector("h(sd)", &h_sd);
        if let Some(g) = &gamma_sd {
            table.vector("gamma(sd)", g);
        }
        text.push_str(&table.render());
        text.push_str("vertices:\n");
        for (k, face) in labels.iter().enumerate() {
            text.push_str(&format!("  {k}: {:?}\n", face.vertices()));
        }
        text.push_str("facets:\n");
        for facet in sd.facets() {
            text.push_str(&format!("  {:?}\n", facet.vertices()));
        }
        json["f_sd"] = dec(&f_sd);
        json["vertices"] = json!(labels.iter().map(|f| f.vertices()).collect::<Vec<_>>());
        json["facets"] = json!(sd.facets().iter().map(|f| f.vertices()).collect::<Vec<_>>());
    } else {
        let mut table = Table::indexed(h_sd.len());
        table.vector("h(sd)", &h_sd);
        if let Some(g) = &gamma_sd {
            table.vector("gamma(sd)", g);
        }
        text.push_str(&table.render());
        notes.push("the input is an h-vector; faces of the subdivision are not listed".into());
    }
    text.push_str(&notes_text(&notes));
    json["notes"] = json!(notes);
    Ok(Outcome { text, json, success: true })
}

pub fn eulerian(n: usize, cap: usize) -> Result<Outcome, CliError> {
    if n == 0 {
        return Err(CliError::Input("n must be at least 1".into()));
    }
    if n > cap {
        return Err(CliError::Input(format!("n = {n} exceeds the cap {cap}")));
    }
    let t = table(n);
    let rows: Vec<Vec<BigInt>> = (1..=n).map(|j| (0..n).map(|i| t.get(i, j)).collect()).collect();
    let total = CountVector::new(Role::H, eulerian_poly(n).coeffs().to_vec()).padded(n);
    let family = |primed: bool| -> Result<Vec<(usize, CountVector)>, CliError> {
        let range = if primed { primed_range(n) } else { unprimed_range(n) };
        range.map(|j| Ok((j, gamma_nj(n, j, primed)?.vector))).collect()
    };
    let unprimed = family(false)?;
    let primed = family(true)?;

    let mut grid = Table::new();
    grid.row("", (0..n).map(|i| format!("i={i}")).collect());
    for (j, row) in (1..=n).zip(&rows) {
        grid.row(format!("A({n},i,{j})"), row.iter().map(ToString::to_string).collect());
    }
    grid.vector(format!("A_{n}"), &total);
    let mut gammas = Table::new();
    for (j, v) in &unprimed {
        gammas.vector(format!("gamma({n},{j})"), v);
    }
    for (j, v) in &primed {
        gammas.vector(format!("gamma'({n},{j})"), v);
    }
    let text = format!("{}\n{}", grid.render(), gammas.render());
    let fam = |vs: &[(usize, CountVector)]| -> Value {
        json!(vs.iter().map(|(j, v)| json!({ "j": j, "vector": dec(v) })).collect::<Vec<_>>())
    };
    let json = json!({
        "format": 1,
        "command": "eulerian",
        "n": n,
        "table": rows.iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "eulerian": dec(&total),
        "gamma": fam(&unprimed),
        "gamma_primed": fam(&primed),
    });
    Ok(Outcome { text, json, success: true })
}

pub fn ffk_check(f: &str, d: usize) -> Result<Outcome, CliError> {
    let f = CountVector::new(Role::F, parse_inline_vector("--f", f)?);
    let violation = ffk_closure(&f, d)?;
    let (text, v) = match &violation {
        None => (format!("{f} is the f-vector of a {d}-colored complex\n"), Value::Null),
        Some(v) => (
            format!("{f} is not the f-vector of a {d}-colored complex: compressed face {} lacks {}\n", v.face, v.missing),
            json!({ "face": v.face.elements(), "missing": v.missing.elements() }),
        ),
    };
    let json = json!({ "format": 1, "command": "ffk-check", "f": dec(&f), "d": d, "ffk": violation.is_none(), "violation": v });
    Ok(Outcome { text, json, success: violation.is_none() })
}

pub fn witness(input: &Input, cap: usize) -> Result<Outcome, CliError> {
    let h = input.h_vector();
    let gamma = gamma_sd_from_h(&h)?;
    let faces: BigInt = gamma.entries().iter().sum();
    if faces > BigInt::from(cap) {
        return Err(CliError::Input(format!("the witness has {faces} faces, above the cap {cap}")));
    }
    let w = theorem_bary_witness(&h)?;
    let doc = WitnessDocument::from_witness(&w);
    let mut table = Table::indexed(h.len());
    table.vector("h", &h).vector("gamma(sd)", &w.gamma);
    let mut text = table.render();
    text.push_str(&format!("closure test: pass\ncolors: {}\nvertices (id: color):\n", w.d));
    for v in &doc.vertices {
        text.push_str(&format!("  {}: {}\n", v.id, v.color));
    }
    text.push_str("facets:\n");
    for f in &doc.facets {
        text.push_str(&format!("  {f:?}\n"));
    }
    let json = serde_json::to_value(&doc).expect("witness documents serialize");
    Ok(Outcome { text, json, success: true })
}

pub fn verify_witness_document(doc: &WitnessDocument) -> Result<Outcome, CliError> {
    let failures = verify_witness(doc)?;
    let text = if failures.is_empty() {
        "witness verified\n".to_string()
    } else {
        failures.iter().map(|f| format!("FAIL: {f}\n")).collect()
    };
    let json = json!({ "format": 1, "command": "verify", "witness": true, "failures": failures, "passed": failures.is_empty() });
    Ok(Outcome { text, json, success: failures.is_empty() })
}

struct Suite {
    name: &'static str,
    checked: usize,
    failures: Vec<String>,
}

fn suite_tables(n_max: usize) -> Result<Suite, CliError> {
    let top = n_max.min(ENUMERATION_CAP);
    let mut failures = Vec::new();
    for n in 1..=top {
        if table_by_recurrence(n) != table_by_enumeration(n)? {
            failures.push(format!("n = {n}: recurrence and enumeration differ"));
        }
    }
    Ok(Suite { name: "restricted Eulerian tables", checked: top, failures })
}

fn suite_recurrences(n_max: usize) -> Result<Suite, CliError> {
    let mut s = Suite { name: "gamma recurrences", checked: 0, failures: Vec::new() };
    for n in 1..=n_max {
        let report = verify_gamma_recurrences(n)?;
        s.checked += report.checks.len();
        for c in report.checks.iter().filter(|c| !c.holds) {
            s.failures.push(format!("n = {n}, part {}, j = {}: {} != {}", c.part, c.j, c.lhs, c.rhs));
        }
    }
    Ok(s)
}

fn suite_shift_bound(n_max: usize) -> Result<Suite, CliError> {
    let mut s = Suite { name: "shift bound and ranking", checked: 0, failures: Vec::new() };
    for d in 2..=n_max.min(6) {
        for k in 0..d {
            let top = if k == 0 { 1 } else { 50 };
            for a in 1..=top {
                let v = r(d, k, a)?;
                s.checked += 1;
                if v > (k as u64 + 1) * a {
                    s.failures.push(format!("r({d},{k},{a}) = {v}"));
                }
                let back = rank(&unrank(d, k, a)?)?;
                if back != a {
                    s.failures.push(format!("rank(unrank({d},{k},{a})) = {back}"));
                }
            }
        }
    }
    Ok(s)
}

fn suite_gineq(n_max: usize) -> Result<Suite, CliError> {
    let report = verify_gineq(n_max, Some(8))?;
    let mut failures: Vec<String> = report
        .rows
        .iter()
        .filter(|r| !r.holds)
        .map(|r| format!("n = {}, i = {}: {} > {}", r.n, r.i, r.lhs, r.rhs))
        .collect();
    failures.extend(
        report
            .insertion
            .iter()
            .filter(|c| !c.injective)
            .map(|c| format!("insertion n = {}, i = {}: {} images of {}", c.n, c.i, c.images, c.expected)),
    );
    Ok(Suite { name: "gamma inequality", checked: report.rows.len() + report.insertion.len(), failures })
}

fn suite_certificates(n_max: usize) -> Result<(Suite, Vec<String>), CliError> {
    let certs = all_certificates(n_max)?;
    let mut failures = Vec::new();
    let mut notes = Vec::new();
    for c in &certs {
        let report = verify_certificate(c);
        failures.extend(report.violations.iter().map(|v| format!("{:?}: {:?}", v.at, v.kind)));
        notes.extend(report.notes);
    }
    notes.sort();
    notes.dedup();
    Ok((Suite { name: "goodness certificates", checked: certs.len(), failures }, notes))
}

pub fn verify(n_max: usize, cap: usize) -> Result<Outcome, CliError> {
    if n_max > cap {
        return Err(CliError::Input(format!("n_max = {n_max} exceeds the cap {cap}")));
    }
    let (certs, notes) = suite_certificates(n_max)?;
    let suites =
        [suite_tables(n_max)?, suite_recurrences(n_max)?, suite_shift_bound(n_max)?, suite_gineq(n_max)?, certs];
    let passed = suites.iter().all(|s| s.failures.is_empty());
    let mut table = Table::new();
    for s in &suites {
        let verdict = if s.failures.is_empty() { "pass" } else { "FAIL" };
        table.row(s.name, vec![s.checked.to_string(), verdict.to_string()]);
    }
    let mut text = table.render();
    for s in &suites {
        for f in &s.failures {
            text.push_str(&format!("{}: {f}\n", s.name));
        }
    }
    text.push_str(&notes_text(&notes));
    text.push_str(if passed { "all checks passed\n" } else { "some checks failed\n" });
    let json = json!({
        "format": 1,
        "command": "verify",
        "n_max": n_max,
        "suites": suites
            .iter()
            .map(|s| json!({ "name": s.name, "checked": s.checked, "failures": s.failures }))
            .collect::<Vec<_>>(),
        "notes": notes,
        "passed": passed,
    });
    Ok(Outcome { text, json, success: passed })
}
