//! Theorem-by-theorem verification runs and their reports.
//!
//! Each registry key names one claim, a default parameter grid, and how rows are
//! judged. Rows hold a formula value and an observed value (oracle or
//! construction) plus graph6 witnesses, so a passing row can be replayed
//! without searching again. Reports carry no timings; the `explored` counts of
//! the oracle searches stand in for runtime.

mod checks;
mod render;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::CachedOracle;

pub use render::{render, render_text, Format};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Every row must match.
    Equality,
    /// A construction attains the formula and avoids the forbidden graph.
    LowerBoundOnly,
    /// The claim holds for large `n`: the top row of each series must match,
    /// and the smallest `n` from which all rows match is reported.
    ThresholdObserved,
    /// Values are recorded, never judged.
    Experiment,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Match,
    Mismatch,
    Recorded,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    /// Rows with the same series form one `n`-sequence for threshold reporting.
    pub series: String,
    pub params: BTreeMap<String, Value>,
    pub formula: Option<u64>,
    /// Upper end when the claim is a range `formula <= observed <= formula_upper`.
    pub formula_upper: Option<u64>,
    pub observed: Option<u64>,
    pub outcome: Outcome,
    /// Skip reason, failed sub-check, or an annotation.
    pub note: Option<String>,
    pub witnesses: Vec<Graph>,
    pub explored: Option<u64>,
}

impl Row {
    fn new(series: impl Into<String>) -> Self {
        Row {
            series: series.into(),
            params: BTreeMap::new(),
            formula: None,
            formula_upper: None,
            observed: None,
            outcome: Outcome::Recorded,
            note: None,
            witnesses: vec![],
            explored: None,
        }
    }

    fn param(mut self, name: &str, value: impl Into<Value>) -> Self {
        self.params.insert(name.to_string(), value.into());
        self
    }

    fn n(&self) -> Option<u64> {
        self.params.get("n").and_then(Value::as_u64)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    /// Nothing failed but some cells were skipped.
    Skipped,
    /// Experiment: values recorded only.
    Recorded,
    #[serde(rename = "no cells evaluated")]
    Empty,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Threshold {
    pub series: String,
    /// Smallest `n` from which every evaluated row of the series matches.
    pub from_n: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub verdict: Verdict,
    pub matched: usize,
    pub mismatched: usize,
    pub recorded: usize,
    pub skipped: usize,
    pub thresholds: Vec<Threshold>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    pub cells: usize,
    /// Sum of oracle `explored` counts over the rows.
    pub explored: u64,
}

/// Overrides for a key's default grid. Unset fields take the key's defaults;
/// the report echoes the grid actually used.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridParams {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k_max: Option<usize>,
    /// Base graphs in the notation of [`crate::graph::notation`].
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bases: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem_key: String,
    pub claim: String,
    pub mode: Mode,
    pub grid: GridParams,
    pub rows: Vec<Row>,
    pub summary: Summary,
    pub stats: Stats,
}

pub struct RegistryEntry {
    pub key: &'static str,
    pub claim: &'static str,
    pub mode: Mode,
    run: fn(&CachedOracle, &GridParams) -> Result<Partial>,
}

/// What a check returns before judging.
struct Partial {
    grid: GridParams,
    rows: Vec<Row>,
    notes: Vec<String>,
}

pub fn registry() -> &'static [RegistryEntry] {
    checks::REGISTRY
}

pub fn lookup(key: &str) -> Result<&'static RegistryEntry> {
    registry().iter().find(|e| e.key == key).ok_or_else(|| {
        let known: Vec<&str> = registry().iter().map(|e| e.key).collect();
        Error::Parameter(format!("unknown theorem key `{key}` (known: {})", known.join(", ")))
    })
}

pub fn run_verification(key: &str, params: &GridParams, oracle: &CachedOracle) -> Result<VerificationReport> {
    let entry = lookup(key)?;
    let partial = (entry.run)(oracle, params)?;
    Ok(assemble(entry, partial))
}

fn assemble(entry: &RegistryEntry, partial: Partial) -> VerificationReport {
    let Partial { grid, rows, notes } = partial;
    let count = |o: Outcome| rows.iter().filter(|r| r.outcome == o).count();
    let (matched, mismatched, recorded, skipped) =
        (count(Outcome::Match), count(Outcome::Mismatch), count(Outcome::Recorded), count(Outcome::Skipped));

    let mut series: Vec<&str> = vec![];
    for r in &rows {
        if !series.contains(&r.series.as_str()) {
            series.push(&r.series);
        }
    }
    let judged = |r: &&Row| matches!(r.outcome, Outcome::Match | Outcome::Mismatch);
    let mut thresholds = vec![];
    let mut failed = false;
    for name in series {
        let mut evaluated: Vec<&Row> = rows.iter().filter(|r| r.series == name).filter(judged).collect();
        if evaluated.is_empty() {
            continue;
        }
        evaluated.sort_by_key(|r| r.n());
        match entry.mode {
            Mode::ThresholdObserved => {
                let tail = evaluated.iter().rev().take_while(|r| r.outcome == Outcome::Match).count();
                let from_n = (tail > 0).then(|| evaluated[evaluated.len() - tail].n()).flatten();
                failed |= tail == 0;
                thresholds.push(Threshold {
                    series: name.to_string(),
                    from_n,
                });
            }
            _ => failed |= evaluated.iter().any(|r| r.outcome == Outcome::Mismatch),
        }
    }

    let verdict = if rows.is_empty() {
        Verdict::Empty
    } else if failed {
        Verdict::Fail
    } else if skipped > 0 {
        Verdict::Skipped
    } else if matched == 0 {
        Verdict::Recorded
    } else {
        Verdict::Pass
    };
    let mut notes = notes;
    if rows.is_empty() {
        notes.push("no cells evaluated".into());
    }
    let explored = rows.iter().filter_map(|r| r.explored).sum();
    VerificationReport {
        theorem_key: entry.key.to_string(),
        claim: entry.claim.to_string(),
        mode: entry.mode,
        grid,
        stats: Stats {
            cells: rows.len(),
            explored,
        },
        summary: Summary {
            verdict,
            matched,
            mismatched,
            recorded,
            skipped,
            thresholds,
            notes,
        },
        rows,
    }
}

/// Process exit code for a batch of reports: 1 if any failed, 2 if nothing
/// failed but cells were skipped, 0 otherwise.
pub fn exit_code<'a>(reports: impl IntoIterator<Item = &'a VerificationReport>) -> i32 {
    let mut code = 0;
    for r in reports {
        match r.summary.verdict {
            Verdict::Fail => return 1,
            Verdict::Skipped => code = 2,
            _ => {}
        }
    }
    code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entry(mode: Mode) -> RegistryEntry {
        RegistryEntry {
            key: "test",
            claim: "",
            mode,
            run: |_, _| unreachable!(),
        }
    }

    fn row(n: u64, outcome: Outcome) -> Row {
        let mut r = Row::new("a").param("n", n);
        r.outcome = outcome;
        r
    }

    fn judge(mode: Mode, rows: Vec<Row>) -> Summary {
        assemble(
            &entry(mode),
            Partial {
                grid: GridParams::default(),
                rows,
                notes: vec![],
            },
        )
        .summary
    }

    #[test]
    fn threshold_takes_the_matching_tail() {
        use Outcome::*;
        let s = judge(Mode::ThresholdObserved, vec![row(9, Match), row(6, Mismatch), row(7, Match), row(8, Match)]);
        assert_eq!(s.verdict, Verdict::Pass);
        assert_eq!(s.thresholds[0].from_n, Some(7));
        let s = judge(Mode::ThresholdObserved, vec![row(6, Match), row(7, Mismatch)]);
        assert_eq!(s.verdict, Verdict::Fail);
        assert_eq!(s.thresholds[0].from_n, None);
        assert_eq!(judge(Mode::Equality, vec![row(6, Match), row(7, Mismatch)]).verdict, Verdict::Fail);
    }

    #[test]
    fn verdicts() {
        use Outcome::*;
        assert_eq!(judge(Mode::Equality, vec![]).verdict, Verdict::Empty);
        assert_eq!(judge(Mode::Equality, vec![]).notes, vec!["no cells evaluated".to_string()]);
        assert_eq!(judge(Mode::Equality, vec![row(1, Match), row(2, Skipped)]).verdict, Verdict::Skipped);
        assert_eq!(judge(Mode::Experiment, vec![row(1, Recorded)]).verdict, Verdict::Recorded);
        assert_eq!(judge(Mode::Equality, vec![row(1, Match)]).verdict, Verdict::Pass);
    }

    #[test]
    fn exit_codes() {
        let r = |v| VerificationReport {
            theorem_key: String::new(),
            claim: String::new(),
            mode: Mode::Equality,
            grid: GridParams::default(),
            rows: vec![],
            summary: Summary {
                verdict: v,
                matched: 0,
                mismatched: 0,
                recorded: 0,
                skipped: 0,
                thresholds: vec![],
                notes: vec![],
            },
            stats: Stats { cells: 0, explored: 0 },
        };
        assert_eq!(exit_code(&[r(Verdict::Pass), r(Verdict::Recorded)]), 0);
        assert_eq!(exit_code(&[r(Verdict::Skipped), r(Verdict::Pass)]), 2);
        assert_eq!(exit_code(&[r(Verdict::Skipped), r(Verdict::Fail)]), 1);
    }

    #[test]
    fn unknown_key() {
        assert!(matches!(lookup("thm-nope"), Err(Error::Parameter(_))));
        assert_eq!(registry().len(), 15);
    }
}
