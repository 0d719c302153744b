//! Plain-text tables. Every table is built from the same payload the JSON
//! output serializes.

use std::fmt::Write;

use cdeg::corpus::VerificationReport;
use cdeg::families::FamilyRow;
use cdeg::idealization::{IdealizationComponents, IndexExperiment};
use cdeg::{InvariantReport, PropertyCheckResult, Rootset};
use serde_json::Value;

/// Left-aligned columns separated by two spaces.
pub fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: Vec<&str>| {
        let mut l = String::new();
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i > 0 {
                l.push_str("  ");
            }
            let pad = w - cell.chars().count();
            l.push_str(cell);
            l.extend(std::iter::repeat_n(' ', pad));
        }
        out.push_str(l.trim_end());
        out.push('\n');
    };
    line(headers.to_vec());
    let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
    line(rule.iter().map(String::as_str).collect());
    for row in rows {
        line(row.iter().map(String::as_str).collect());
    }
    out
}

fn key_values(pairs: &[(&str, String)]) -> String {
    let rows: Vec<Vec<String>> = pairs
        .iter()
        .map(|(k, v)| vec![k.to_string(), v.clone()])
        .collect();
    table(&["quantity", "value"], &rows)
}

pub fn gens(g: &[i64]) -> String {
    let inner: Vec<String> = g.iter().map(i64::to_string).collect();
    format!("<{}>", inner.join(","))
}

fn set<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    let inner: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

pub fn invariants(rep: &InvariantReport) -> String {
    let mut out = key_values(&[
        ("generators", gens(&rep.generators)),
        ("multiplicity", rep.multiplicity.to_string()),
        ("frobenius", rep.frobenius.to_string()),
        ("conductor", rep.conductor.to_string()),
        ("genus", rep.genus.to_string()),
        ("type", rep.type_number.to_string()),
        ("cdeg", rep.cdeg.to_string()),
        ("canonical_index", rep.canonical_index.to_string()),
        ("e0_c", rep.e0_c.to_string()),
        ("e1_c", rep.e1_c.to_string()),
        ("sally_s0", rep.sally_s0.to_string()),
        ("almost_gorenstein", rep.almost_gorenstein.to_string()),
        ("gorenstein", rep.gorenstein.to_string()),
        ("cdeg_star", rep.cdeg_star.to_string()),
    ]);
    if let Some(note) = &rep.note {
        let _ = writeln!(out, "note: {note}");
    }
    out
}

pub fn roots(generators: &[i64], roots: &Rootset) -> String {
    let mut out = format!(
        "monomial rootset of {}: {}\ncandidates examined: {}\n\n",
        gens(generators),
        set(&roots.exponents),
        roots.candidates
    );
    let rows: Vec<Vec<String>> = roots
        .witnesses
        .iter()
        .map(|w| {
            vec![
                w.tau.to_string(),
                set(&w.ideal.generators),
                w.red_l.to_string(),
                w.closed.to_string(),
            ]
        })
        .collect();
    out.push_str(&table(
        &["tau", "witness L (generators)", "red(L)", "closed"],
        &rows,
    ));
    out
}

fn value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

pub fn family(rows: &[FamilyRow]) -> String {
    let Some(first) = rows.first() else {
        return "no rows\n".into();
    };
    let params: Vec<&String> = first.params.keys().collect();
    let keys: Vec<&String> = first.computed.keys().collect();
    let mut headers: Vec<String> = params.iter().map(|p| p.to_string()).collect();
    headers.push("generators".into());
    headers.extend(keys.iter().map(|k| format!("{k} (claim)")));
    headers.push("verdict".into());
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            let mut row: Vec<String> = params.iter().map(|p| r.params[*p].to_string()).collect();
            row.push(gens(&r.generators));
            for k in &keys {
                row.push(format!(
                    "{} ({})",
                    value(&r.computed[*k]),
                    value(&r.claimed[*k])
                ));
            }
            row.push(r.verdict().into());
            row
        })
        .collect();
    let headers: Vec<&str> = headers.iter().map(String::as_str).collect();
    table(&headers, &body)
}

fn failure_line(f: &PropertyCheckResult) -> String {
    let payload = serde_json::to_string(&f.payload).unwrap_or_default();
    format!("FAIL {} {} {}", f.property_id, gens(&f.generators), payload)
}

pub fn verify(rep: &VerificationReport, full: bool) -> String {
    let mut out = format!(
        "semigroups of genus <= {}: {}\nchecks: {} pass, {} fail, {} skipped\n\n",
        rep.max_genus, rep.semigroups, rep.totals.pass, rep.totals.fail, rep.totals.skipped
    );
    let rows: Vec<Vec<String>> = rep
        .per_property
        .iter()
        .map(|(id, c)| {
            vec![
                id.clone(),
                c.pass.to_string(),
                c.fail.to_string(),
                c.skipped.to_string(),
            ]
        })
        .collect();
    out.push_str(&table(&["property", "pass", "fail", "skipped"], &rows));
    if !rep.experiment.is_empty() {
        let equal = rep.experiment.iter().filter(|r| r.equal).count();
        let _ = writeln!(
            out,
            "\nrho(R) = rho(R x m) on {equal} of {} rings",
            rep.experiment.len()
        );
        if full {
            out.push_str(&experiment_table(&rep.experiment));
        }
    }
    if !rep.failures.is_empty() {
        out.push('\n');
        for f in &rep.failures {
            out.push_str(&failure_line(f));
            out.push('\n');
        }
    }
    out
}

fn experiment_table(rows: &[IndexExperiment]) -> String {
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                gens(&r.gens),
                r.rho_r.to_string(),
                r.rho_a.to_string(),
                r.equal.to_string(),
            ]
        })
        .collect();
    table(&["generators", "rho_R", "rho_A", "equal"], &body)
}

pub fn idealize(
    generators: &[i64],
    comp: &IdealizationComponents,
    checks: &[PropertyCheckResult],
    row: &IndexExperiment,
) -> String {
    let mut out = format!(
        "idealization of {} by its maximal ideal\n\n",
        gens(generators)
    );
    out.push_str(&key_values(&[
        ("cdeg_A", comp.cdeg_a.to_string()),
        ("r_A", comp.r_a.to_string()),
        ("rho_A", comp.rho_a.to_string()),
        ("rho_R", row.rho_r.to_string()),
        ("length(L/C)", comp.colon_over_canonical.to_string()),
        ("mL = mC", comp.ml_equals_mc.to_string()),
    ]));
    out.push('\n');
    for c in checks {
        let status = match &c.status {
            cdeg::CheckStatus::Pass => "pass".to_string(),
            cdeg::CheckStatus::Fail => "FAIL".to_string(),
            cdeg::CheckStatus::Skipped(why) => format!("skipped ({why})"),
        };
        let _ = writeln!(out, "{}: {status}", c.property_id);
    }
    out
}
