//! Markdown, CSV and JSON rendering of reports.
//!
//! JSON and CSV emit flat per-row records with a fixed key order. Nothing
//! here reads the clock or any other ambient state, so equal reports render to
//! identical bytes.

use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::{Map, Value};

use super::errata::ErrataEntry;
use super::sweep::SweepReport;
use super::table::{CellStatus, TableReport};
use crate::bounds::BoundResult;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Md,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "md" => Ok(Format::Md),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(format!("unknown format '{s}' (expected md, csv or json)")),
        }
    }
}

fn status_str(s: CellStatus) -> &'static str {
    match s {
        CellStatus::Match => "match",
        CellStatus::Mismatch => "mismatch",
        CellStatus::Undecided => "undecided",
        CellStatus::Unchecked => "unchecked",
    }
}

fn table_records(report: &TableReport) -> Vec<Map<String, Value>> {
    report
        .rows
        .iter()
        .map(|row| {
            let mut rec = Map::new();
            rec.insert("table".into(), report.table_id.as_str().into());
            rec.insert("n".into(), row.n.into());
            for cell in &row.cells {
                let key = cell.column;
                rec.insert(key.into(), cell.rendered.clone().map_or(Value::Null, Value::from));
                rec.insert(
                    format!("{key}_expected"),
                    cell.expected.clone().map_or(Value::Null, Value::from),
                );
                rec.insert(format!("{key}_status"), status_str(cell.status).into());
                rec.insert(format!("{key}_known_erratum"), cell.known_erratum.into());
            }
            rec
        })
        .collect()
}

fn records_to_csv(records: &[Map<String, Value>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    if let Some(first) = records.first() {
        w.write_record(first.keys()).expect("in-memory write");
    }
    for rec in records {
        let fields = rec.values().map(|v| match v {
            Value::Null => String::new(),
            Value::String(s) => s.clone(),
            other => other.to_string(),
        });
        w.write_record(fields).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

pub fn render_table(report: &TableReport, format: Format) -> String {
    match format {
        Format::Json => to_json(&table_records(report)),
        Format::Csv => records_to_csv(&table_records(report)),
        Format::Md => {
            let cols = report.table_id.columns();
            let mut out = String::new();
            let _ = writeln!(
                out,
                "## {} ({} significant digits)\n",
                report.table_id, report.digits
            );
            let _ = writeln!(out, "| n | {} | {} | {} | status |", cols[0].1, cols[1].1, cols[2].1);
            let _ = writeln!(out, "|---|---|---|---|---|");
            for row in &report.rows {
                let values: Vec<&str> = row
                    .cells
                    .iter()
                    .map(|c| c.rendered.as_deref().unwrap_or("?"))
                    .collect();
                let notes: Vec<String> = row
                    .cells
                    .iter()
                    .filter(|c| !matches!(c.status, CellStatus::Match))
                    .map(|c| match (&c.status, &c.expected) {
                        (CellStatus::Mismatch, Some(e)) if c.known_erratum => {
                            format!("{}: printed {e} (known erratum)", c.column)
                        }
                        (CellStatus::Mismatch, Some(e)) => format!("{}: expected {e}", c.column),
                        (s, _) => format!("{}: {}", c.column, status_str(*s)),
                    })
                    .collect();
                let status = if notes.is_empty() { "match".to_string() } else { notes.join("; ") };
                let _ = writeln!(
                    out,
                    "| {} | {} | {} | {} | {status} |",
                    row.n, values[0], values[1], values[2]
                );
            }
            let _ = writeln!(
                out,
                "\nmatch: {}, mismatch: {}, undecided: {}, unchecked: {}, failures: {}",
                report.count(CellStatus::Match),
                report.count(CellStatus::Mismatch),
                report.count(CellStatus::Undecided),
                report.count(CellStatus::Unchecked),
                report.failures()
            );
            out
        }
    }
}

fn sweep_records(report: &SweepReport) -> Vec<Map<String, Value>> {
    report
        .checks
        .iter()
        .map(|(name, c)| {
            let mut rec = Map::new();
            rec.insert("check".into(), name.clone().into());
            rec.insert("proved".into(), c.proved.into());
            rec.insert("failed".into(), c.failed.into());
            rec.insert("undecided".into(), c.undecided.into());
            rec
        })
        .collect()
}

pub fn render_sweep(report: &SweepReport, format: Format) -> String {
    match format {
        Format::Json => to_json(report),
        Format::Csv => records_to_csv(&sweep_records(report)),
        Format::Md => {
            let mut out = String::new();
            let orders: Vec<String> = report.orders.iter().map(u32::to_string).collect();
            let _ = writeln!(
                out,
                "## verify n = {}..{} (orders {}; precision {}..{} bits)\n",
                report.min_n,
                report.max_n,
                orders.join(","),
                report.precision_initial,
                report.precision_max
            );
            let _ = writeln!(out, "| check | proved | failed | undecided |");
            let _ = writeln!(out, "|---|---|---|---|");
            for (name, c) in &report.checks {
                let _ = writeln!(out, "| {name} | {} | {} | {} |", c.proved, c.failed, c.undecided);
            }
            let t = &report.totals;
            let _ = writeln!(out, "| total | {} | {} | {} |", t.proved, t.failed, t.undecided);
            let _ = writeln!(out);
            match report.worst_relative_width_log2 {
                Some(w) => {
                    let _ = writeln!(out, "worst relative width: 2^{w}");
                }
                None => {
                    let _ = writeln!(out, "worst relative width: 0");
                }
            }
            let _ = writeln!(out, "max precision used: {} bits", report.max_precision_used);
            for p in &report.problems {
                let _ = writeln!(out, "{:?}: {} at n = {}", p.outcome, p.check, p.n);
            }
            if let Some(ms) = report.wall_time_ms {
                let _ = writeln!(out, "wall time: {ms} ms");
            }
            out
        }
    }
}

fn errata_records(entries: &[ErrataEntry]) -> Vec<Map<String, Value>> {
    entries
        .iter()
        .map(|e| match serde_json::to_value(e).expect("serializable") {
            Value::Object(m) => m,
            _ => unreachable!("struct serializes to an object"),
        })
        .collect()
}

pub fn render_errata(entries: &[ErrataEntry], format: Format) -> String {
    match format {
        Format::Json => to_json(&errata_records(entries)),
        Format::Csv => records_to_csv(&errata_records(entries)),
        Format::Md => {
            let mut out = String::from("## errata\n\n");
            for e in entries {
                let class = serde_json::to_value(e.classification).expect("serializable");
                let _ = writeln!(out, "- **{}** ({})", e.location, class.as_str().unwrap_or(""));
                let _ = writeln!(out, "  - printed: `{}`", e.printed_value);
                let _ = writeln!(out, "  - computed: `{}`", e.computed_value);
                let _ = writeln!(out, "  - evidence: {}", e.evidence);
            }
            out
        }
    }
}

/// One bound evaluation, already rendered to a decimal string.
pub fn render_bound(result: &BoundResult, value: &str, format: Format) -> String {
    let mut rec = Map::new();
    rec.insert(
        "bound".into(),
        serde_json::to_value(result.name).expect("serializable"),
    );
    if let Value::Object(params) = serde_json::to_value(&result.params).expect("serializable") {
        rec.extend(params);
    }
    rec.insert("value".into(), value.into());
    rec.insert("exponent".into(), result.exponent.to_string().into());
    match format {
        Format::Json => to_json(&rec),
        Format::Csv => records_to_csv(&[rec]),
        Format::Md => {
            let mut out = String::new();
            for (k, v) in rec {
                let v = match v {
                    Value::String(s) => s,
                    other => other.to_string(),
                };
                let _ = writeln!(out, "{k}: {v}");
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::sasvari_pair;

    #[test]
    fn formats_parse() {
        assert_eq!("csv".parse::<Format>(), Ok(Format::Csv));
        assert!("xml".parse::<Format>().is_err());
    }

    #[test]
    fn bound_text_and_json() {
        let b = sasvari_pair(1, 64).unwrap().1;
        let text = render_bound(&b, "2.001982123", Format::Md);
        assert_eq!(text, "bound: SasvariUpper\nn: 1\norder: 2\nvalue: 2.001982123\nexponent: -23/192\n");
        let json: Value = serde_json::from_str(&render_bound(&b, "2.001982123", Format::Json)).unwrap();
        assert_eq!(json["exponent"], "-23/192");
        let csv = render_bound(&b, "2.001982123", Format::Csv);
        assert_eq!(csv, "bound,n,order,value,exponent\nSasvariUpper,1,2,2.001982123,-23/192\n");
    }
}
