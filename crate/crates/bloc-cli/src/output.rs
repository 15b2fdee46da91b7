//! Canonical JSON documents and human-readable text rendering.
//!
//! JSON output is byte-stable for fixed inputs: objects are built in a
//! fixed field order (`preserve_order`), graded-character terms follow the
//! lexicographic weight order, and polynomial keys are ascending
//! exponents.  Coefficients are emitted as JSON numbers when they fit in
//! 64 bits and as decimal strings beyond that.

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use bloc_core::bchar::{DualityReport, GradedCharacter};
use bloc_core::lie::Weight;
use bloc_core::partitions::Partition;
use bloc_core::poly::LaurentPolynomial;
use bloc_core::symgroup::CharacterTable;

pub fn big_to_value(n: &BigInt) -> Value {
    if let Ok(v) = i64::try_from(n) {
        Value::from(v)
    } else if let Ok(v) = u64::try_from(n) {
        Value::from(v)
    } else {
        Value::from(n.to_string())
    }
}

pub fn partition_value(p: &Partition) -> Value {
    Value::from(p.parts().to_vec())
}

pub fn weight_value(w: &Weight) -> Value {
    Value::from(w.coords().to_vec())
}

/// `{ "exp": coeff, … }` with exponent keys ascending.
pub fn poly_value(p: &LaurentPolynomial) -> Value {
    let mut map = Map::new();
    for (e, c) in p.terms() {
        map.insert(e.to_string(), big_to_value(c));
    }
    Value::Object(map)
}

/// The canonical graded-character document.
pub fn character_value(ch: &GradedCharacter, m: usize, gamma: &Partition) -> Value {
    let terms: Vec<Value> = ch
        .terms()
        .map(|(w, p)| {
            json!({
                "weight": weight_value(w),
                "poly": poly_value(p),
            })
        })
        .collect();
    json!({
        "type": ch.rs().label().as_char().to_string(),
        "rank": ch.rs().rank(),
        "m": m,
        "gamma": partition_value(gamma),
        "terms": terms,
        "truncated_at": ch.truncated_at(),
    })
}

pub fn duality_value(report: &DualityReport, m: usize, gamma: &Partition) -> Value {
    let diffs: Vec<Value> = report
        .differences
        .iter()
        .map(|(w, a, b)| {
            json!({
                "weight": weight_value(w),
                "lhs": poly_value(a),
                "rhs": poly_value(b),
            })
        })
        .collect();
    json!({
        "holds": report.holds,
        "shift": report.shift,
        "lhs": character_value(&report.lhs, m, gamma),
        "rhs": character_value(&report.rhs, m, &gamma.conjugate()),
        "differences": diffs,
    })
}

pub fn table_value(table: &CharacterTable) -> Value {
    let labels: Vec<Value> = table.partitions().iter().map(partition_value).collect();
    let sizes: Vec<Value> = table.class_sizes().iter().map(big_to_value).collect();
    let values: Vec<Value> = table
        .values()
        .iter()
        .map(|row| Value::from(row.iter().map(big_to_value).collect::<Vec<_>>()))
        .collect();
    json!({
        "m": table.m(),
        "labels": labels,
        "class_sizes": sizes,
        "values": values,
    })
}

/// Text rendering of a graded character in orbit-sum notation.
pub fn character_text(ch: &GradedCharacter) -> String {
    if ch.is_empty() {
        return "0".to_string();
    }
    let mut lines = Vec::new();
    for (w, p) in ch.terms() {
        lines.push(format!("  ({p}) e(O({w}))"));
    }
    let mut out = lines.join("\n+\n");
    if let Some(d) = ch.truncated_at() {
        out.push_str(&format!("\n  (truncated above u^{d})"));
    }
    out
}

pub fn table_text(table: &CharacterTable) -> String {
    let labels: Vec<String> = table
        .partitions()
        .iter()
        .map(|p| p.to_string())
        .collect();
    let width = labels
        .iter()
        .map(String::len)
        .chain(
            table
                .values()
                .iter()
                .flatten()
                .map(|v| v.to_string().len()),
        )
        .max()
        .unwrap_or(1)
        + 2;
    let mut out = String::new();
    out.push_str(&" ".repeat(width));
    for l in &labels {
        out.push_str(&format!("{l:>width$}"));
    }
    out.push('\n');
    out.push_str(&" ".repeat(width));
    for s in table.class_sizes() {
        out.push_str(&format!("{:>width$}", format!("|{s}|")));
    }
    out.push('\n');
    for (label, row) in labels.iter().zip(table.values()) {
        out.push_str(&format!("{label:>width$}"));
        for v in row {
            out.push_str(&format!("{v:>width$}"));
        }
        out.push('\n');
    }
    out
}
