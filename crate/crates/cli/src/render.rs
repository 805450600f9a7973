//! Output assembly for every subcommand and format.
//!
//! Machine formats follow two hard rules: big integers are always decimal
//! strings (never floats), and JSON documents are canonical — keys sorted,
//! `serde_json::to_string_pretty` plus a trailing newline — so that parsing
//! and re-serializing a document reproduces it byte for byte.

use std::fmt::Write as _;

use gen_euler::congruences::CongruenceReport;
use gen_euler::euler::{CrosscheckReport, EulerTable, MethodOutcome};
use gen_euler::mobius::InversionReport;
use gen_euler::partitions::InvolutionAudit;
use serde_json::{json, Value};

/// Canonical serialization: pretty, sorted keys, trailing newline.
pub fn to_canonical_json(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("JSON tree serializes");
    text.push('\n');
    text
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn yes_no(flag: bool) -> &'static str {
    if flag {
        "yes"
    } else {
        "no"
    }
}

// ------------------------------------------------------------- compute

pub fn table_text(table: &EulerTable) -> String {
    let mut out = format!(
        "# generalized Euler numbers, d = {}, method = {}\n",
        table.d(),
        table.method()
    );
    for (n, value) in table.values().iter().enumerate() {
        let _ = writeln!(out, "{n} {value}");
    }
    out
}

pub fn table_csv(table: &EulerTable) -> String {
    let mut out = String::from("n,value\n");
    for (n, value) in table.values().iter().enumerate() {
        let _ = writeln!(out, "{n},{value}");
    }
    out
}

/// Sequence-database format: bare "index value" lines.
pub fn table_bfile(table: &EulerTable) -> String {
    let mut out = String::new();
    for (n, value) in table.values().iter().enumerate() {
        let _ = writeln!(out, "{n} {value}");
    }
    out
}

pub fn table_json(table: &EulerTable, cap: u64, elapsed_ms: u128) -> String {
    let values: Vec<Value> = table
        .values()
        .iter()
        .enumerate()
        .map(|(n, value)| json!({ "n": n, "value": value.to_string() }))
        .collect();
    to_canonical_json(&json!({
        "command": "compute",
        "d": table.d(),
        "n_max": table.n_max(),
        "method": table.method().name(),
        "cap": cap,
        "elapsed_ms": elapsed_ms as u64,
        "values": values,
    }))
}

// ---------------------------------------------------------- crosscheck

fn outcome_cell(outcome: &MethodOutcome) -> String {
    match outcome {
        MethodOutcome::Value(v) => v.to_string(),
        MethodOutcome::Skipped { .. } => String::from("skipped"),
    }
}

pub fn crosscheck_text(report: &CrosscheckReport) -> String {
    let mut out = format!("# crosscheck, d = {}, n_max = {}\n", report.d, report.n_max);
    out.push('n');
    for method in &report.methods {
        let _ = write!(out, " {method}");
    }
    out.push_str(" agree\n");
    for row in &report.rows {
        let _ = write!(out, "{}", row.n);
        for outcome in &row.outcomes {
            let _ = write!(out, " {}", outcome_cell(outcome));
        }
        let _ = writeln!(out, " {}", yes_no(row.agree));
    }
    let _ = writeln!(out, "all methods agree: {}", yes_no(report.all_agree));
    out
}

pub fn crosscheck_csv(report: &CrosscheckReport) -> String {
    let mut out = String::from("n");
    for method in &report.methods {
        let _ = write!(out, ",{method}");
    }
    out.push_str(",agree\n");
    for row in &report.rows {
        let _ = write!(out, "{}", row.n);
        for outcome in &row.outcomes {
            let _ = write!(out, ",{}", outcome_cell(outcome));
        }
        let _ = writeln!(out, ",{}", yes_no(row.agree));
    }
    out
}

pub fn crosscheck_json(report: &CrosscheckReport, cap: u64, elapsed_ms: u128) -> String {
    let methods: Vec<Value> = report
        .methods
        .iter()
        .map(|m| Value::from(m.name()))
        .collect();
    let rows: Vec<Value> = report
        .rows
        .iter()
        .map(|row| {
            let outcomes: Vec<Value> = row
                .outcomes
                .iter()
                .map(|outcome| match outcome {
                    MethodOutcome::Value(v) => json!({ "value": v.to_string() }),
                    MethodOutcome::Skipped { required, cap } => json!({
                        "skipped": { "required": required.to_string(), "cap": cap }
                    }),
                })
                .collect();
            json!({ "n": row.n, "outcomes": outcomes, "agree": row.agree })
        })
        .collect();
    to_canonical_json(&json!({
        "command": "crosscheck",
        "d": report.d,
        "n_max": report.n_max,
        "cap": cap,
        "elapsed_ms": elapsed_ms as u64,
        "methods": methods,
        "rows": rows,
        "all_agree": report.all_agree,
    }))
}

// ---------------------------------------------------------- involution

pub fn involution_text(audit: &InvolutionAudit) -> String {
    let mut out = format!("# involution audit, d = {}, n = {}\n", audit.d, audit.n);
    let _ = writeln!(out, "partitions: {}", audit.partition_count);
    let _ = writeln!(out, "fixed points: {}", audit.fixed_count);
    let _ = writeln!(out, "involution law: {}", yes_no(audit.involution_ok));
    let _ = writeln!(out, "sign reversal: {}", yes_no(audit.sign_reversing_ok));
    let _ = writeln!(out, "signed sum: {}", audit.signed_sum);
    let _ = writeln!(
        out,
        "signed sum identity: {}",
        yes_no(audit.signed_sum_identity_ok)
    );
    if let Some(pairs) = &audit.pairs {
        out.push_str("pairs:\n");
        for (a, b) in pairs {
            let _ = writeln!(out, "  {a} <-> {b}");
        }
    }
    if let Some(fixed) = &audit.fixed {
        out.push_str("fixed:\n");
        for pi in fixed {
            let _ = writeln!(out, "  {pi}");
        }
    }
    let _ = writeln!(out, "verdict: {}", verdict(audit.pass()));
    out
}

pub fn involution_json(audit: &InvolutionAudit, cap: u64, elapsed_ms: u128) -> String {
    let mut doc = json!({
        "command": "involution",
        "d": audit.d,
        "n": audit.n,
        "cap": cap,
        "elapsed_ms": elapsed_ms as u64,
        "partitions": audit.partition_count,
        "fixed_points": audit.fixed_count,
        "involution_ok": audit.involution_ok,
        "sign_reversing_ok": audit.sign_reversing_ok,
        "signed_sum": audit.signed_sum.to_string(),
        "signed_sum_identity_ok": audit.signed_sum_identity_ok,
        "pass": audit.pass(),
    });
    let object = doc.as_object_mut().expect("document is an object");
    if let Some(pairs) = &audit.pairs {
        let rendered: Vec<Value> = pairs
            .iter()
            .map(|(a, b)| json!([a.to_string(), b.to_string()]))
            .collect();
        object.insert(String::from("pairs"), Value::from(rendered));
    }
    if let Some(fixed) = &audit.fixed {
        let rendered: Vec<Value> = fixed.iter().map(|pi| Value::from(pi.to_string())).collect();
        object.insert(String::from("fixed"), Value::from(rendered));
    }
    to_canonical_json(&doc)
}

// ---------------------------------------------------------- congruence

pub fn congruence_text(report: &CongruenceReport) -> String {
    let mut out = format!(
        "# congruence {}, param = {}, n_max = {}\n",
        report.kind, report.param, report.n_max
    );
    out.push_str("n modulus observed expected pass\n");
    for c in &report.checks {
        let _ = writeln!(
            out,
            "{} {} {} {} {}",
            c.n,
            c.modulus,
            c.observed,
            c.expected,
            yes_no(c.pass)
        );
    }
    let _ = writeln!(out, "all congruences hold: {}", yes_no(report.pass()));
    out
}

pub fn congruence_csv(report: &CongruenceReport) -> String {
    let mut out = String::from("n,modulus,observed,expected,pass\n");
    for c in &report.checks {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            c.n,
            c.modulus,
            c.observed,
            c.expected,
            yes_no(c.pass)
        );
    }
    out
}

pub fn congruence_json(report: &CongruenceReport, elapsed_ms: u128) -> String {
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| {
            json!({
                "n": c.n,
                "modulus": c.modulus.to_string(),
                "observed": c.observed.to_string(),
                "expected": c.expected.to_string(),
                "pass": c.pass,
            })
        })
        .collect();
    to_canonical_json(&json!({
        "command": "congruence",
        "name": report.kind.name(),
        "param": report.param,
        "n_max": report.n_max,
        "elapsed_ms": elapsed_ms as u64,
        "checks": checks,
        "pass": report.pass(),
    }))
}

// -------------------------------------------------------------- mobius

pub fn mobius_text(report: &InversionReport) -> String {
    let mut out = format!("# mobius inversion, p = {}, n = {}\n", report.p, report.n);
    let _ = writeln!(out, "partitions: {}", report.partition_count);
    out.push_str("subgroup mu alpha beta\n");
    for row in &report.rows {
        let _ = writeln!(
            out,
            "{} {} {} {}",
            row.subgroup, row.mu, row.alpha, row.beta
        );
    }
    out.push_str("checks:\n");
    for c in &report.checks {
        let _ = writeln!(out, "  {}: {} ({})", c.name, yes_no(c.pass), c.detail);
    }
    let _ = writeln!(out, "verdict: {}", verdict(report.pass()));
    out
}

pub fn mobius_json(report: &InversionReport, cap: u64, elapsed_ms: u128) -> String {
    let rows: Vec<Value> = report
        .rows
        .iter()
        .map(|row| {
            json!({
                "subgroup": row.subgroup.to_string(),
                "mu": row.mu,
                "alpha": row.alpha.to_string(),
                "beta": row.beta.to_string(),
            })
        })
        .collect();
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| json!({ "name": c.name, "pass": c.pass, "detail": c.detail }))
        .collect();
    to_canonical_json(&json!({
        "command": "mobius",
        "p": report.p,
        "n": report.n,
        "cap": cap,
        "elapsed_ms": elapsed_ms as u64,
        "partitions": report.partition_count,
        "subgroups": rows,
        "checks": checks,
        "pass": report.pass(),
    }))
}
