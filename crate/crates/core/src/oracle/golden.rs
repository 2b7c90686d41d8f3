//! Versioned plain-text store of oracle reference values.
//!
//! One record per line, `kind | params | z | resolution | value | bound`,
//! every real in 17 significant digits. `bound` is the discretization
//! bound 2|v_N − v_{N/2}| + 4ε|v_N| of the oracle at resolution N.

use std::fmt::Write as _;

use super::{oracle_quad, oracle_series, QuadKind, SeriesKind, DEFAULT_QUAD_NODES, DEFAULT_SERIES_TERMS};
use crate::error::{HgError, Result};
use crate::params::ParamSet;
use crate::quadrature::{
    gauss_2f1_integral, gchf_integral, gen_beta, gghf_integral, kummer_1f1_integral, GenBetaEngine, QuadConfig,
};
use crate::series::{gauss_2f1, gchf_series, gghf_series, kummer_1f1, EvalConfig};

pub const HEADER: &str = "# hypergruss-golden v1";

/// Midpoint nodes for kinds whose integrand contains the kernel.
pub const KERNEL_QUAD_NODES: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GoldenKind {
    Series(SeriesKind),
    Quad(QuadKind),
}

impl GoldenKind {
    pub const ALL: [GoldenKind; 9] = [
        GoldenKind::Series(SeriesKind::Gauss2F1),
        GoldenKind::Series(SeriesKind::Kummer1F1),
        GoldenKind::Series(SeriesKind::Gghf),
        GoldenKind::Series(SeriesKind::Gchf),
        GoldenKind::Quad(QuadKind::Gauss2F1Int),
        GoldenKind::Quad(QuadKind::Kummer1F1Int),
        GoldenKind::Quad(QuadKind::GenBeta),
        GoldenKind::Quad(QuadKind::GghfInt),
        GoldenKind::Quad(QuadKind::GchfInt),
    ];

    pub fn token(self) -> &'static str {
        match self {
            GoldenKind::Series(SeriesKind::Gauss2F1) => "series:2F1",
            GoldenKind::Series(SeriesKind::Kummer1F1) => "series:1F1",
            GoldenKind::Series(SeriesKind::Gghf) => "series:GGHF",
            GoldenKind::Series(SeriesKind::Gchf) => "series:GCHF",
            GoldenKind::Quad(QuadKind::Gauss2F1Int) => "quad:2F1",
            GoldenKind::Quad(QuadKind::Kummer1F1Int) => "quad:1F1",
            GoldenKind::Quad(QuadKind::GenBeta) => "quad:genbeta",
            GoldenKind::Quad(QuadKind::GghfInt) => "quad:GGHF",
            GoldenKind::Quad(QuadKind::GchfInt) => "quad:GCHF",
        }
    }

    pub fn from_token(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.token() == s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GoldenEntry {
    pub kind: GoldenKind,
    pub params: ParamSet,
    pub z: f64,
    pub resolution: u64,
    pub value: f64,
    pub bound: f64,
}

/// A golden to mint: everything except the value and its bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GoldenSpec {
    pub kind: GoldenKind,
    pub params: ParamSet,
    pub z: f64,
    pub resolution: u64,
}

impl From<&GoldenEntry> for GoldenSpec {
    fn from(e: &GoldenEntry) -> Self {
        GoldenSpec { kind: e.kind, params: e.params, z: e.z, resolution: e.resolution }
    }
}

/// Evaluate the oracle for one record at an arbitrary resolution.
pub fn oracle_value(kind: GoldenKind, ps: &ParamSet, z: f64, resolution: u64) -> Result<f64> {
    Ok(match kind {
        GoldenKind::Series(k) => oracle_series(k, ps, z, resolution)?.value,
        GoldenKind::Quad(k) => oracle_quad(k, ps, z, resolution)?.value,
    })
}

/// Discretization bound from halving the resolution.
fn discretization_bound(v_full: f64, v_half: f64) -> f64 {
    2.0 * (v_full - v_half).abs() + 4.0 * f64::EPSILON * v_full.abs()
}

pub fn mint(spec: &GoldenSpec) -> Result<GoldenEntry> {
    let value = oracle_value(spec.kind, &spec.params, spec.z, spec.resolution)?;
    let half = oracle_value(spec.kind, &spec.params, spec.z, spec.resolution / 2)?;
    Ok(GoldenEntry {
        kind: spec.kind,
        params: spec.params,
        z: spec.z,
        resolution: spec.resolution,
        value,
        bound: discretization_bound(value, half),
    })
}

/// The shipped golden set.
pub fn default_specs() -> Vec<GoldenSpec> {
    use GoldenKind::{Quad, Series};
    let cls = |a, b, c| ParamSet::new(a, b, c, 1.0, 1.0, 0.0);
    let gen = |a, b, c, alpha, beta, p| ParamSet::new(a, b, c, alpha, beta, p);
    let spec = |kind, params, z, resolution| GoldenSpec { kind, params, z, resolution };
    vec![
        spec(Series(SeriesKind::Gauss2F1), cls(1.0, 1.0, 2.0), 0.5, DEFAULT_SERIES_TERMS),
        spec(Series(SeriesKind::Gauss2F1), cls(0.5, 1.0, 3.0), 0.3, DEFAULT_SERIES_TERMS),
        spec(Series(SeriesKind::Gauss2F1), cls(2.0, 1.5, 3.0), -0.7, DEFAULT_SERIES_TERMS),
        spec(Series(SeriesKind::Kummer1F1), cls(0.0, 1.0, 2.0), 1.0, DEFAULT_SERIES_TERMS),
        spec(Series(SeriesKind::Kummer1F1), cls(0.0, 2.0, 5.0), -3.0, DEFAULT_SERIES_TERMS),
        spec(Series(SeriesKind::Kummer1F1), cls(0.0, 0.5, 1.5), 12.0, DEFAULT_SERIES_TERMS),
        spec(Quad(QuadKind::Gauss2F1Int), cls(1.0, 1.0, 2.0), 0.5, DEFAULT_QUAD_NODES),
        spec(Quad(QuadKind::Gauss2F1Int), cls(2.0, 1.5, 3.0), 0.7, DEFAULT_QUAD_NODES),
        spec(Quad(QuadKind::Kummer1F1Int), cls(0.0, 1.0, 2.0), 1.0, DEFAULT_QUAD_NODES),
        spec(Quad(QuadKind::Kummer1F1Int), cls(0.0, 2.0, 5.0), -3.0, DEFAULT_QUAD_NODES),
        spec(Quad(QuadKind::GenBeta), gen(0.0, 1.0, 2.0, 1.0, 2.0, 0.1), 0.0, KERNEL_QUAD_NODES),
        spec(Quad(QuadKind::GenBeta), gen(0.0, 1.5, 2.5, 0.5, 1.5, 0.3), 0.0, KERNEL_QUAD_NODES),
        spec(Quad(QuadKind::GenBeta), gen(0.0, 2.0, 3.0, 1.0, 1.0, 0.05), 0.0, KERNEL_QUAD_NODES),
        spec(Quad(QuadKind::GghfInt), gen(1.0, 1.0, 2.0, 1.0, 2.0, 0.1), 0.5, KERNEL_QUAD_NODES),
        spec(Quad(QuadKind::GghfInt), gen(1.0, 1.0, 2.0, 1.0, 2.0, 0.1), 0.3, KERNEL_QUAD_NODES),
        spec(Quad(QuadKind::GchfInt), gen(0.0, 1.0, 2.0, 1.0, 2.0, 0.1), 1.0, KERNEL_QUAD_NODES),
        spec(Quad(QuadKind::GchfInt), gen(0.0, 1.0, 2.0, 1.0, 2.0, 0.1), 0.5, KERNEL_QUAD_NODES),
        spec(Series(SeriesKind::Gghf), gen(1.0, 1.0, 2.0, 1.0, 2.0, 0.1), 0.5, KERNEL_QUAD_NODES),
        spec(Series(SeriesKind::Gchf), gen(0.0, 1.0, 2.0, 1.0, 2.0, 0.1), 1.0, KERNEL_QUAD_NODES),
    ]
}

/// Production evaluation of the same quantity at tight tolerances:
/// (value, error estimate).
pub fn production_value(kind: GoldenKind, ps: &ParamSet, z: f64) -> Result<(f64, f64)> {
    let ecfg = EvalConfig { rel_tol: 1e-13, ..EvalConfig::default() };
    let qcfg = QuadConfig { max_level: 14, ..QuadConfig::default() }.with_tol(1e-12);
    let r = match kind {
        GoldenKind::Series(SeriesKind::Gauss2F1) => gauss_2f1(ps.a, ps.b, ps.c, z, &ecfg)?,
        GoldenKind::Series(SeriesKind::Kummer1F1) => kummer_1f1(ps.b, ps.c, z, &ecfg)?,
        GoldenKind::Series(SeriesKind::Gghf) => gghf_series(ps, z, &GenBetaEngine::for_params(ps, &qcfg)?, &ecfg)?,
        GoldenKind::Series(SeriesKind::Gchf) => gchf_series(ps, z, &GenBetaEngine::for_params(ps, &qcfg)?, &ecfg)?,
        GoldenKind::Quad(QuadKind::Gauss2F1Int) => gauss_2f1_integral(ps.a, ps.b, ps.c, z, &qcfg)?,
        GoldenKind::Quad(QuadKind::Kummer1F1Int) => kummer_1f1_integral(ps.b, ps.c, z, &qcfg)?,
        GoldenKind::Quad(QuadKind::GenBeta) => {
            let g = gen_beta(ps.b, ps.c - ps.b, ps.alpha, ps.beta, ps.p, &qcfg)?;
            return Ok((g.raw, g.err_estimate));
        }
        GoldenKind::Quad(QuadKind::GghfInt) => gghf_integral(ps, z, &qcfg)?,
        GoldenKind::Quad(QuadKind::GchfInt) => gchf_integral(ps, z, &qcfg)?,
    };
    Ok((r.value, r.err_estimate))
}

fn fmt_real(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn format_entries(entries: &[GoldenEntry]) -> String {
    let mut out = String::new();
    out.push_str(HEADER);
    out.push('\n');
    out.push_str("# kind | params | z | resolution | value | bound\n");
    for e in entries {
        let params: Vec<String> = e.params.fields().iter().map(|(k, v)| format!("{k}={}", fmt_real(*v))).collect();
        let _ = writeln!(
            out,
            "{} | {} | {} | {} | {} | {}",
            e.kind.token(),
            params.join(","),
            fmt_real(e.z),
            e.resolution,
            fmt_real(e.value),
            fmt_real(e.bound)
        );
    }
    out
}

fn bad(line: usize, msg: impl std::fmt::Display) -> HgError {
    HgError::Golden(format!("line {line}: {msg}"))
}

fn parse_real(line: usize, s: &str) -> Result<f64> {
    s.trim().parse::<f64>().map_err(|e| bad(line, format!("bad number {s:?}: {e}")))
}

pub fn parse_entries(text: &str) -> Result<Vec<GoldenEntry>> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, h)) if h.trim() == HEADER => {}
        _ => return Err(HgError::Golden(format!("missing header {HEADER:?}"))),
    }
    let mut entries = Vec::new();
    for (i, raw) in lines {
        let line = i + 1;
        let raw = raw.trim();
        if raw.is_empty() || raw.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = raw.split('|').map(str::trim).collect();
        let [kind, params, z, res, value, bound] = fields[..] else {
            return Err(bad(line, format!("expected 6 fields, found {}", fields.len())));
        };
        let kind = GoldenKind::from_token(kind).ok_or_else(|| bad(line, format!("unknown kind {kind:?}")))?;
        let mut ps = ParamSet::new(0.0, 0.0, 0.0, 0.0, 0.0, 0.0);
        for pair in params.split(',') {
            let (k, v) = pair.split_once('=').ok_or_else(|| bad(line, format!("bad parameter {pair:?}")))?;
            let v = parse_real(line, v)?;
            match k.trim() {
                "a" => ps.a = v,
                "b" => ps.b = v,
                "c" => ps.c = v,
                "alpha" => ps.alpha = v,
                "beta" => ps.beta = v,
                "p" => ps.p = v,
                other => return Err(bad(line, format!("unknown parameter {other:?}"))),
            }
        }
        entries.push(GoldenEntry {
            kind,
            params: ps,
            z: parse_real(line, z)?,
            resolution: res.parse().map_err(|e| bad(line, format!("bad resolution {res:?}: {e}")))?,
            value: parse_real(line, value)?,
            bound: parse_real(line, bound)?,
        });
    }
    Ok(entries)
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyOutcome {
    pub entry: GoldenEntry,
    pub recomputed: f64,
    /// Production value and error estimate.
    pub production: (f64, f64),
    pub reproduces: bool,
    pub agrees: bool,
}

impl VerifyOutcome {
    pub fn ok(&self) -> bool {
        self.reproduces && self.agrees
    }
}

/// Recompute one record at its stored resolution and compare with both
/// the stored value and the production evaluator.
pub fn verify_entry(e: &GoldenEntry) -> Result<VerifyOutcome> {
    let recomputed = oracle_value(e.kind, &e.params, e.z, e.resolution)?;
    let production = production_value(e.kind, &e.params, e.z)?;
    let reproduces = (recomputed - e.value).abs() <= 4.0 * f64::EPSILON * e.value.abs();
    let agrees = (production.0 - e.value).abs() <= 10.0 * (production.1 + e.bound);
    Ok(VerifyOutcome { entry: *e, recomputed, production, reproduces, agrees })
}

/// Look up a shipped record by kind, parameters and argument.
pub fn find<'a>(entries: &'a [GoldenEntry], kind: GoldenKind, ps: &ParamSet, z: f64) -> Option<&'a GoldenEntry> {
    entries.iter().find(|e| e.kind == kind && e.params == *ps && e.z == z)
}

/// The golden file shipped with the crate.
pub const SHIPPED: &str = include_str!("../../goldens/goldens.txt");

pub fn shipped() -> Result<Vec<GoldenEntry>> {
    parse_entries(SHIPPED)
}
