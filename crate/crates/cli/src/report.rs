//! Sweep records, their NDJSON/CSV encodings, and the sweep summary.

use std::collections::BTreeMap;
use std::io::Write;
use std::time::Duration;

use hypergruss::inequality::IneqReport;
use hypergruss::ParamSet;
use serde::Serialize;
use serde_json::value::RawValue;

use crate::fmt17;

pub const SCHEMA_VERSION: u32 = 1;

/// Argument columns, in output order.
pub const ARG_NAMES: [&str; 7] = ["z", "z0", "z1", "z2", "z3", "t", "n"];

pub const PARAM_NAMES: [&str; 6] = ["a", "b", "c", "alpha", "beta", "p"];

/// One inequality instance, or one grid point whose evaluation errored.
#[derive(Debug, Clone, PartialEq)]
pub struct Record {
    pub checker: &'static str,
    pub point: usize,
    pub name: &'static str,
    pub params: Option<ParamSet>,
    pub args: Vec<(&'static str, f64)>,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub err: f64,
    pub holds: bool,
    pub uncertain: bool,
    pub error: Option<String>,
}

impl Record {
    pub fn from_report(checker: &'static str, point: usize, r: &IneqReport) -> Self {
        Self {
            checker,
            point,
            name: r.name,
            params: r.inputs.params,
            args: r.inputs.args.clone(),
            lhs: r.lhs,
            rhs: r.rhs,
            slack: r.slack,
            err: r.err,
            holds: r.holds,
            uncertain: r.uncertain,
            error: None,
        }
    }

    /// A point the evaluators could not finish. It counts as uncertain.
    pub fn from_error(
        checker: &'static str,
        point: usize,
        params: Option<ParamSet>,
        args: Vec<(&'static str, f64)>,
        msg: String,
    ) -> Self {
        Self {
            checker,
            point,
            name: checker,
            params,
            args,
            lhs: f64::NAN,
            rhs: f64::NAN,
            slack: f64::NAN,
            err: f64::NAN,
            holds: false,
            uncertain: true,
            error: Some(msg),
        }
    }

    pub fn certain_failure(&self) -> bool {
        !self.holds && !self.uncertain
    }

    fn param_values(&self) -> [Option<f64>; 6] {
        match self.params {
            Some(ps) => ps.fields().map(|(_, v)| Some(v)),
            None => [None; 6],
        }
    }

    fn arg_values(&self) -> [Option<f64>; 7] {
        ARG_NAMES.map(|n| self.args.iter().find(|(k, _)| *k == n).map(|&(_, v)| v))
    }

    /// Compact `name=value` list of the inputs, for summaries.
    pub fn inputs_string(&self) -> String {
        let named = PARAM_NAMES
            .iter()
            .zip(self.param_values())
            .chain(ARG_NAMES.iter().zip(self.arg_values()));
        named
            .filter_map(|(n, v)| v.map(|v| format!("{n}={v}")))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Real as a JSON number with 17 significant digits; null when not finite.
fn json_num(v: Option<f64>) -> Option<Box<RawValue>> {
    v.filter(|v| v.is_finite())
        .map(|v| RawValue::from_string(fmt17(v)).expect("formatted float is valid JSON"))
}

#[derive(Serialize)]
struct JsonRecord<'a> {
    schema_version: u32,
    checker: &'a str,
    point: usize,
    name: &'a str,
    params: BTreeMap<&'static str, Option<Box<RawValue>>>,
    args: BTreeMap<&'static str, Option<Box<RawValue>>>,
    lhs: Option<Box<RawValue>>,
    rhs: Option<Box<RawValue>>,
    slack: Option<Box<RawValue>>,
    err: Option<Box<RawValue>>,
    holds: bool,
    uncertain: bool,
    error: Option<&'a str>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

pub const CSV_HEADER: [&str; 24] = [
    "schema_version", "checker", "point", "name", "a", "b", "c", "alpha", "beta", "p", "z", "z0", "z1", "z2",
    "z3", "t", "n", "lhs", "rhs", "slack", "err", "holds", "uncertain", "error",
];

/// Write all records in order.
pub fn write_records<W: Write>(out: W, format: Format, records: &[Record]) -> std::io::Result<()> {
    match format {
        Format::Json => write_ndjson(out, records),
        Format::Csv => write_csv(out, records),
    }
}

fn write_ndjson<W: Write>(mut out: W, records: &[Record]) -> std::io::Result<()> {
    for r in records {
        let present = |names: &[&'static str], vals: &[Option<f64>]| {
            names
                .iter()
                .zip(vals)
                .filter(|(_, v)| v.is_some())
                .map(|(&n, &v)| (n, json_num(v)))
                .collect::<BTreeMap<_, _>>()
        };
        let rec = JsonRecord {
            schema_version: SCHEMA_VERSION,
            checker: r.checker,
            point: r.point,
            name: r.name,
            params: present(&PARAM_NAMES, &r.param_values()),
            args: present(&ARG_NAMES, &r.arg_values()),
            lhs: json_num(Some(r.lhs)),
            rhs: json_num(Some(r.rhs)),
            slack: json_num(Some(r.slack)),
            err: json_num(Some(r.err)),
            holds: r.holds,
            uncertain: r.uncertain,
            error: r.error.as_deref(),
        };
        serde_json::to_writer(&mut out, &rec)?;
        out.write_all(b"\n")?;
    }
    out.flush()
}

fn csv_num(v: Option<f64>) -> String {
    match v {
        Some(v) if v.is_finite() => fmt17(v),
        Some(v) => v.to_string(),
        None => String::new(),
    }
}

fn write_csv<W: Write>(out: W, records: &[Record]) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in records {
        let mut row = vec![
            SCHEMA_VERSION.to_string(),
            r.checker.to_string(),
            r.point.to_string(),
            r.name.to_string(),
        ];
        row.extend(r.param_values().into_iter().map(csv_num));
        row.extend(r.arg_values().into_iter().map(csv_num));
        row.extend([r.lhs, r.rhs, r.slack, r.err].map(|v| csv_num(Some(v))));
        row.push(r.holds.to_string());
        row.push(r.uncertain.to_string());
        row.push(r.error.clone().unwrap_or_default());
        w.write_record(&row)?;
    }
    w.flush()
}

/// Pass/uncertain/fail tallies.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub passed: usize,
    pub uncertain: usize,
    pub failed: usize,
}

impl Tally {
    fn add(&mut self, r: &Record) {
        if r.certain_failure() {
            self.failed += 1;
        } else if r.uncertain {
            self.uncertain += 1;
        } else {
            self.passed += 1;
        }
    }
}

/// Outcome of one sweep. A point counts as failed if any of its records is
/// a certain failure, else uncertain if any record is uncertain.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepReport {
    pub checker: &'static str,
    pub grid_size: usize,
    pub skipped: usize,
    pub total: usize,
    pub passed: usize,
    pub uncertain: usize,
    pub failed: usize,
    pub errors: usize,
    /// Smallest slack over all records, with that record's inputs.
    pub worst_slack: Option<(f64, &'static str, String)>,
    pub per_inequality: BTreeMap<&'static str, Tally>,
    pub wall_time: Duration,
}

impl SweepReport {
    /// Summarize `records`, which must be grouped by point index.
    pub fn summarize(
        checker: &'static str,
        grid_size: usize,
        skipped: usize,
        records: &[Record],
        wall_time: Duration,
    ) -> Self {
        let mut per_inequality: BTreeMap<&'static str, Tally> = BTreeMap::new();
        let mut points: BTreeMap<usize, Tally> = BTreeMap::new();
        let mut worst: Option<&Record> = None;
        let mut errors = 0;
        for r in records {
            per_inequality.entry(r.name).or_default().add(r);
            points.entry(r.point).or_default().add(r);
            if r.error.is_some() {
                errors += 1;
            }
            if r.slack.is_finite() && worst.is_none_or(|w| r.slack < w.slack) {
                worst = Some(r);
            }
        }
        let mut overall = Tally::default();
        for t in points.values() {
            if t.failed > 0 {
                overall.failed += 1;
            } else if t.uncertain > 0 {
                overall.uncertain += 1;
            } else {
                overall.passed += 1;
            }
        }
        Self {
            checker,
            grid_size,
            skipped,
            total: points.len(),
            passed: overall.passed,
            uncertain: overall.uncertain,
            failed: overall.failed,
            errors,
            worst_slack: worst.map(|w| (w.slack, w.name, w.inputs_string())),
            per_inequality,
            wall_time,
        }
    }

    /// Human-readable summary for stdout.
    pub fn render(&self) -> String {
        let mut s = format!(
            "checker {}: {} points evaluated ({} skipped of {}), passed {}, uncertain {}, failed {}\n",
            self.checker, self.total, self.skipped, self.grid_size, self.passed, self.uncertain, self.failed
        );
        if self.errors > 0 {
            s += &format!("  evaluation errors (counted uncertain): {}\n", self.errors);
        }
        for (name, t) in &self.per_inequality {
            s += &format!("  {name}: passed {}, uncertain {}, failed {}\n", t.passed, t.uncertain, t.failed);
        }
        if let Some((slack, name, inputs)) = &self.worst_slack {
            s += &format!("  worst slack {} ({name}) at {inputs}\n", fmt17(*slack));
        }
        s += &format!("  wall time {:.3} s\n", self.wall_time.as_secs_f64());
        s
    }
}
