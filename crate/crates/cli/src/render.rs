//! JSON, CSV and plain-text output.
//!
//! JSON documents carry `kind` and `schema_version` and follow
//! `schema/report.json`. Integers beyond 2^53 in magnitude are written as
//! decimal strings. CSV rows never contain run metadata.

use std::fmt::Write as _;

use serde_json::{json, Map, Value as Json};

use grepunit::{Error, Int, Limits, Report};

use crate::checks::{Check, Value, VerifyOutcome};
use crate::sweep::{SweepSpec, Summary};

pub const SCHEMA_VERSION: u32 = 1;
const SAFE_INT: Int = 1 << 53;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

pub fn json_int(x: Int) -> Json {
    if x.abs() <= SAFE_INT {
        json!(x as i64)
    } else {
        json!(x.to_string())
    }
}

fn json_ints(xs: &[Int]) -> Json {
    Json::Array(xs.iter().copied().map(json_int).collect())
}

fn json_value(v: &Option<Value>) -> Json {
    match v {
        None => Json::Null,
        Some(Value::Int(x)) => json_int(*x),
        Some(Value::Bool(b)) => json!(b),
        Some(Value::List(xs)) => json_ints(xs),
    }
}

fn list(xs: &[Int]) -> String {
    xs.iter().map(Int::to_string).collect::<Vec<_>>().join(" ")
}

fn pretty(doc: &Json) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn limits_json(l: &Limits) -> Json {
    json!({ "apery": l.apery, "sieve_bits": l.sieve_bits, "factorization": l.factorization })
}

const REPORT_COLUMNS: [&str; 12] = [
    "a",
    "b",
    "n",
    "source",
    "generators",
    "frobenius",
    "genus",
    "pseudo_frobenius",
    "type",
    "apery_sum",
    "n_of_s",
    "wilf_ok",
];

pub fn render_report(r: &Report, format: Format) -> String {
    let p = &r.params;
    match format {
        Format::Json => pretty(&json!({
            "kind": "report",
            "schema_version": SCHEMA_VERSION,
            "a": json_int(*p.a()),
            "b": json_int(*p.b()),
            "n": p.n(),
            "source": r.source.to_string(),
            "generators": json_ints(&r.generators),
            "frobenius": json_int(r.frobenius),
            "genus": json_int(r.genus),
            "pseudo_frobenius": json_ints(&r.pseudo_frobenius),
            "type": r.type_,
            "apery_sum": json_int(r.apery_sum),
            "n_of_s": json_int(r.n_of_s),
            "wilf_ok": r.wilf_ok,
        })),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(REPORT_COLUMNS).unwrap();
            w.write_record([
                p.a().to_string(),
                p.b().to_string(),
                p.n().to_string(),
                r.source.to_string(),
                list(&r.generators),
                r.frobenius.to_string(),
                r.genus.to_string(),
                list(&r.pseudo_frobenius),
                r.type_.to_string(),
                r.apery_sum.to_string(),
                r.n_of_s.to_string(),
                r.wilf_ok.to_string(),
            ])
            .unwrap();
            String::from_utf8(w.into_inner().unwrap()).unwrap()
        }
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "S_a(b,n) with a={} b={} n={} ({})", p.a(), p.b(), p.n(), r.source).unwrap();
            let lines: [(&str, String); 8] = [
                ("generators", list(&r.generators)),
                ("frobenius", r.frobenius.to_string()),
                ("genus", r.genus.to_string()),
                ("pseudo-frobenius", list(&r.pseudo_frobenius)),
                ("type", r.type_.to_string()),
                ("apery sum", r.apery_sum.to_string()),
                ("n(S)", r.n_of_s.to_string()),
                ("wilf", r.wilf_ok.to_string()),
            ];
            for (k, v) in lines {
                writeln!(s, "  {k:<17}{v}").unwrap();
            }
            s
        }
    }
}

/// Structured rendering of a validation, capacity, usage or I/O failure.
pub fn render_error(kind: &str, message: &str, gcd: Option<&str>, format: Format) -> String {
    match format {
        Format::Json => {
            let mut doc = Map::new();
            doc.insert("kind".into(), json!("error"));
            doc.insert("schema_version".into(), json!(SCHEMA_VERSION));
            doc.insert("error".into(), json!(kind));
            doc.insert("message".into(), json!(message));
            if let Some(g) = gcd {
                doc.insert("gcd".into(), g.parse::<Int>().map_or_else(|_| json!(g), json_int));
            }
            pretty(&Json::Object(doc))
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["error", "message"]).unwrap();
            w.write_record([kind, message]).unwrap();
            String::from_utf8(w.into_inner().unwrap()).unwrap()
        }
        Format::Text => format!("error ({kind}): {message}\n"),
    }
}

/// The `gcd` reported by a coprimality failure, if that is what `err` is.
pub fn error_gcd(err: &Error) -> Option<&str> {
    match err {
        Error::NotCoprime { gcd, .. } => Some(gcd),
        _ => None,
    }
}

fn row_json(o: &VerifyOutcome) -> Json {
    let mut row = Map::new();
    row.insert("a".into(), json_int(o.a));
    row.insert("b".into(), json_int(o.b));
    row.insert("n".into(), json!(o.n));
    row.insert("check".into(), json!(o.check.name()));
    row.insert("closed".into(), json_value(&o.closed));
    row.insert("oracle".into(), json_value(&o.oracle));
    row.insert("status".into(), json!(o.status.name()));
    if let Some(d) = &o.detail {
        row.insert("detail".into(), json!(d));
    }
    Json::Object(row)
}

fn summary_json(s: &Summary) -> Json {
    json!({
        "triples": s.triples,
        "invalid_triples": s.invalid_triples,
        "rows": s.rows,
        "match": s.matches,
        "mismatch": s.mismatches,
        "skipped_capacity": s.skipped_capacity,
        "invalid_params": s.invalid_params,
        "not_applicable": s.not_applicable,
    })
}

const ROW_COLUMNS: [&str; 7] = ["a", "b", "n", "check", "closed", "oracle", "status"];

fn rows_csv(rows: &[VerifyOutcome]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(ROW_COLUMNS).unwrap();
    let show = |v: &Option<Value>| v.as_ref().map(ToString::to_string).unwrap_or_default();
    for o in rows {
        w.write_record([
            o.a.to_string(),
            o.b.to_string(),
            o.n.to_string(),
            o.check.name().to_string(),
            show(&o.closed),
            show(&o.oracle),
            o.status.name().to_string(),
        ])
        .unwrap();
    }
    String::from_utf8(w.into_inner().unwrap()).unwrap()
}

fn rows_text(rows: &[VerifyOutcome]) -> String {
    let mut s = String::new();
    for o in rows {
        let show = |v: &Option<Value>| v.as_ref().map_or_else(|| "-".to_string(), ToString::to_string);
        write!(
            s,
            "({}, {}, {}) {:<12} {:<16}",
            o.a,
            o.b,
            o.n,
            o.check.name(),
            o.status.name()
        )
        .unwrap();
        match o.status {
            crate::checks::Status::Match => writeln!(s, "{}", abbreviate(&show(&o.closed))).unwrap(),
            _ => {
                write!(s, "closed={} oracle={}", show(&o.closed), show(&o.oracle)).unwrap();
                if let Some(d) = &o.detail {
                    write!(s, " ({d})").unwrap();
                }
                s.push('\n');
            }
        }
    }
    s
}

fn abbreviate(s: &str) -> String {
    const MAX: usize = 60;
    if s.len() <= MAX {
        s.to_string()
    } else {
        format!("{} ... ({} chars)", &s[..MAX], s.len())
    }
}

pub fn render_summary_text(s: &Summary) -> String {
    format!(
        "{} rows over {} triples ({} invalid): {} match, {} mismatch, {} skipped-capacity, {} invalid-params, {} not-applicable\n",
        s.rows,
        s.triples,
        s.invalid_triples,
        s.matches,
        s.mismatches,
        s.skipped_capacity,
        s.invalid_params,
        s.not_applicable
    )
}

pub fn render_verify(
    triple: (Int, Int, usize),
    checks: &[Check],
    limits: &Limits,
    rows: &[VerifyOutcome],
    format: Format,
) -> String {
    let summary = Summary {
        triples: 1,
        ..Summary::tally(rows)
    };
    match format {
        Format::Json => pretty(&json!({
            "kind": "verify",
            "schema_version": SCHEMA_VERSION,
            "meta": {
                "tool": "grepunit",
                "version": env!("CARGO_PKG_VERSION"),
                "a": json_int(triple.0),
                "b": json_int(triple.1),
                "n": triple.2,
                "checks": checks.iter().map(|c| c.name()).collect::<Vec<_>>(),
                "limits": limits_json(limits),
            },
            "rows": rows.iter().map(row_json).collect::<Vec<_>>(),
            "summary": summary_json(&summary),
        })),
        Format::Csv => rows_csv(rows),
        Format::Text => rows_text(rows) + &render_summary_text(&summary),
    }
}

pub fn render_sweep(spec: &SweepSpec, limits: &Limits, rows: &[VerifyOutcome], summary: &Summary, format: Format) -> String {
    match format {
        Format::Json => pretty(&json!({
            "kind": "sweep",
            "schema_version": SCHEMA_VERSION,
            "meta": {
                "tool": "grepunit",
                "version": env!("CARGO_PKG_VERSION"),
                "a": spec.a.to_string(),
                "b": spec.b.to_string(),
                "n": spec.n.to_string(),
                "skip_invalid": spec.skip_invalid,
                "checks": spec.checks.iter().map(|c| c.name()).collect::<Vec<_>>(),
                "limits": limits_json(limits),
            },
            "rows": rows.iter().map(row_json).collect::<Vec<_>>(),
            "summary": summary_json(summary),
        })),
        Format::Csv => rows_csv(rows),
        Format::Text => rows_text(rows) + &render_summary_text(summary),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_integers_become_strings() {
        assert_eq!(json_int(19), json!(19));
        assert_eq!(json_int(1 << 53), json!(9007199254740992i64));
        assert_eq!(json_int((1 << 53) + 1), json!("9007199254740993"));
        assert_eq!(json_int(-(1 << 60)), json!("-1152921504606846976"));
    }

    #[test]
    fn long_values_are_abbreviated_in_text() {
        let s = "1 ".repeat(100);
        assert!(abbreviate(&s).ends_with("(200 chars)"));
        assert_eq!(abbreviate("13 19"), "13 19");
    }
}
