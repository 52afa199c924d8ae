use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::{Outcome, VerificationReport};
use crate::graph::graph6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    Json,
    Text,
}

pub fn render(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("reports serialize"),
        Format::Text => render_text(report),
    }
}

fn value(v: Option<u64>) -> String {
    v.map_or("-".into(), |v| v.to_string())
}

/// A fixed-width table, one line per row, witnesses in graph6.
pub fn render_text(report: &VerificationReport) -> String {
    let mut out = String::new();
    let s = &report.summary;
    let _ = writeln!(out, "{}  [{:?}]", report.theorem_key, report.mode);
    let _ = writeln!(out, "  {}", report.claim);
    let cells: Vec<[String; 6]> = report
        .rows
        .iter()
        .map(|r| {
            let params = r.params.iter().map(|(k, v)| format!("{k}={}", v.to_string().trim_matches('"'))).collect::<Vec<_>>();
            let formula = match r.formula_upper {
                Some(u) if Some(u) != r.formula => format!("{}..{u}", value(r.formula)),
                _ => value(r.formula),
            };
            let outcome = match r.outcome {
                Outcome::Match => "match",
                Outcome::Mismatch => "MISMATCH",
                Outcome::Recorded => "recorded",
                Outcome::Skipped => "skipped",
            };
            let witnesses = r.witnesses.iter().map(graph6::encode).collect::<Vec<_>>().join(",");
            [params.join(" "), formula, value(r.observed), outcome.into(), r.note.clone().unwrap_or_default(), witnesses]
        })
        .collect();
    let header = ["params", "formula", "observed", "outcome", "note", "witnesses"];
    let mut width = header.map(str::len);
    for c in &cells {
        for (w, x) in width.iter_mut().zip(c).take(5) {
            *w = (*w).max(x.chars().count());
        }
    }
    let line = |out: &mut String, c: [&str; 6]| {
        let mut l = String::from("  ");
        for (i, x) in c.iter().enumerate() {
            if i < 5 {
                let _ = write!(l, "{x:<w$}  ", w = width[i]);
            } else {
                l.push_str(x);
            }
        }
        let _ = writeln!(out, "{}", l.trim_end());
    };
    if cells.is_empty() {
        let _ = writeln!(out, "  no cells evaluated");
    } else {
        line(&mut out, header);
        for c in &cells {
            line(&mut out, [&c[0], &c[1], &c[2], &c[3], &c[4], &c[5]]);
        }
    }
    let _ = writeln!(
        out,
        "  verdict: {}  (match {}, mismatch {}, recorded {}, skipped {}; {} cells, {} graphs explored)",
        serde_json::to_value(s.verdict).unwrap().as_str().unwrap(),
        s.matched,
        s.mismatched,
        s.recorded,
        s.skipped,
        report.stats.cells,
        report.stats.explored
    );
    for t in &s.thresholds {
        match t.from_n {
            Some(n) => {
                let _ = writeln!(out, "  {}: agreement from n = {n}", t.series);
            }
            None => {
                let _ = writeln!(out, "  {}: no agreement at the top of the range", t.series);
            }
        }
    }
    for n in &s.notes {
        let _ = writeln!(out, "  note: {n}");
    }
    out
}
