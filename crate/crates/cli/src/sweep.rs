//! Parallel evaluation of one checker over a parameter grid.

use std::time::Instant;

use hypergruss::inequality::{
    check_corollaries_p0, check_corollary_prop, check_prop_bounds_grid, check_thm_a, check_thm_b, check_thm_c,
    check_thm_i0, default_t_grid, gruss_check, CheckConfig, CorollaryArgs, GrussInstance, IneqReport,
};
use hypergruss::{HgError, ParamSet};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::grid::{product, Range};
use crate::report::{Record, SweepReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Checker {
    Prop,
    CorollaryProp,
    ThmA,
    ThmI0,
    ThmB,
    ThmC,
    CorollariesP0,
    GrussRandom,
}

impl Checker {
    pub const ALL: [Checker; 8] = [
        Checker::Prop,
        Checker::CorollaryProp,
        Checker::ThmA,
        Checker::ThmI0,
        Checker::ThmB,
        Checker::ThmC,
        Checker::CorollariesP0,
        Checker::GrussRandom,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Checker::Prop => "prop",
            Checker::CorollaryProp => "corollary-prop",
            Checker::ThmA => "thm-a",
            Checker::ThmI0 => "thm-i0",
            Checker::ThmB => "thm-b",
            Checker::ThmC => "thm-c",
            Checker::CorollariesP0 => "corollaries-p0",
            Checker::GrussRandom => "gruss-random",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name() == s)
    }
}

/// Per-axis ranges. `None` falls back to the checker's default.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct GridArgs {
    pub a: Option<Range>,
    pub b: Option<Range>,
    pub c_offset: Option<Range>,
    pub alpha: Option<Range>,
    pub beta_offset: Option<Range>,
    pub p: Option<Range>,
    pub z: Option<Range>,
    pub z0: Option<Range>,
    pub z1: Option<Range>,
    pub z2: Option<Range>,
    pub z3: Option<Range>,
    pub t: Option<Range>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GrussArgs {
    /// Largest sequence length.
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
}

impl Default for GrussArgs {
    fn default() -> Self {
        Self { n: 200, trials: 1000, seed: 42 }
    }
}

fn r(lo: f64, hi: f64, steps: usize) -> Option<Range> {
    Some(Range { lo, hi, steps })
}

/// Default grid of each checker. Axes a checker does not read are pinned.
pub fn default_grid(checker: Checker) -> GridArgs {
    let theorem = GridArgs {
        a: r(1.0, 1.0, 1),
        b: r(0.5, 5.0, 5),
        c_offset: r(0.5, 3.0, 4),
        alpha: r(1.0, 3.0, 3),
        beta_offset: r(1.0, 2.0, 2),
        p: r(0.0, 2.0, 5),
        z: r(0.1, 0.9, 5),
        z0: r(0.1, 0.9, 5),
        z1: r(0.0, 1.0, 3),
        z2: r(0.0, 1.0, 3),
        z3: r(0.0, 3.0, 4),
        t: None,
    };
    let prop = GridArgs {
        a: r(0.5, 3.0, 4),
        b: r(1.0, 4.0, 4),
        c_offset: r(1.0, 3.0, 3),
        alpha: r(1.0, 3.0, 3),
        beta_offset: r(1.0, 2.0, 2),
        p: r(0.1, 2.0, 3),
        z: r(-0.9, 0.9, 4),
        ..GridArgs::default()
    };
    match checker {
        Checker::Prop | Checker::CorollaryProp => prop,
        Checker::ThmA | Checker::ThmB => theorem,
        Checker::ThmI0 => GridArgs { a: r(0.5, 3.0, 3), ..theorem },
        Checker::ThmC => GridArgs { a: r(0.5, 3.0, 3), z3: r(0.0, 0.9, 4), ..theorem },
        Checker::CorollariesP0 => GridArgs {
            a: r(0.5, 3.0, 3),
            alpha: r(1.0, 1.0, 1),
            beta_offset: r(1.0, 1.0, 1),
            p: r(0.0, 0.0, 1),
            z3: r(0.0, 0.9, 4),
            ..theorem
        },
        Checker::GrussRandom => GridArgs::default(),
    }
}

impl GridArgs {
    /// `self` with unset axes taken from `defaults`.
    pub fn or(&self, defaults: &GridArgs) -> GridArgs {
        let pick = |x: Option<Range>, d: Option<Range>| x.or(d);
        GridArgs {
            a: pick(self.a, defaults.a),
            b: pick(self.b, defaults.b),
            c_offset: pick(self.c_offset, defaults.c_offset),
            alpha: pick(self.alpha, defaults.alpha),
            beta_offset: pick(self.beta_offset, defaults.beta_offset),
            p: pick(self.p, defaults.p),
            z: pick(self.z, defaults.z),
            z0: pick(self.z0, defaults.z0),
            z1: pick(self.z1, defaults.z1),
            z2: pick(self.z2, defaults.z2),
            z3: pick(self.z3, defaults.z3),
            t: pick(self.t, defaults.t),
        }
    }
}

/// Which inequality family one grid point belongs to.
#[derive(Debug, Clone, Copy, PartialEq)]
enum Work {
    Prop { z: f64 },
    CorollaryProp { z: f64 },
    ThmA { z: f64, z0: f64 },
    ThmI0 { z: f64, z0: f64 },
    ThmB { z1: f64, z2: f64, z3: f64 },
    ThmC { z1: f64, z2: f64, z3: f64 },
    Corollary(CorollaryArgs),
    Gruss { trial: usize },
}

impl Work {
    fn args(&self) -> Vec<(&'static str, f64)> {
        match *self {
            Work::Prop { z } | Work::CorollaryProp { z } => vec![("z", z)],
            Work::ThmA { z, z0 } | Work::ThmI0 { z, z0 } => vec![("z", z), ("z0", z0)],
            Work::Corollary(CorollaryArgs::A { z, z0 } | CorollaryArgs::I0 { z, z0 }) => vec![("z", z), ("z0", z0)],
            Work::ThmB { z1, z2, z3 }
            | Work::ThmC { z1, z2, z3 }
            | Work::Corollary(CorollaryArgs::B { z1, z2, z3 } | CorollaryArgs::C { z1, z2, z3 }) => {
                vec![("z1", z1), ("z2", z2), ("z3", z3)]
            }
            Work::Gruss { .. } => Vec::new(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Point {
    params: Option<ParamSet>,
    work: Work,
}

fn values(r: Option<Range>) -> Vec<f64> {
    r.map(|r| r.values()).unwrap_or_default()
}

fn param_sets(g: &GridArgs) -> Vec<ParamSet> {
    let axes = [g.a, g.b, g.c_offset, g.alpha, g.beta_offset, g.p].map(values);
    product(&axes)
        .into_iter()
        .map(|v| ParamSet::new(v[0], v[1], v[1] + v[2], v[3], v[3] + v[4], v[5]))
        .collect()
}

fn cross<F>(sets: &[ParamSet], zs: &[Vec<f64>], mut make: F) -> Vec<Point>
where
    F: FnMut(&[f64]) -> Work,
{
    let zgrid = product(zs);
    let mut out = Vec::with_capacity(sets.len() * zgrid.len());
    for ps in sets {
        for z in &zgrid {
            out.push(Point { params: Some(*ps), work: make(z) });
        }
    }
    out
}

fn points(checker: Checker, g: &GridArgs, gruss: &GrussArgs) -> Vec<Point> {
    if checker == Checker::GrussRandom {
        return (0..gruss.trials).map(|trial| Point { params: None, work: Work::Gruss { trial } }).collect();
    }
    let sets = param_sets(g);
    let pair = [values(g.z), values(g.z0)];
    let triple = [values(g.z1), values(g.z2), values(g.z3)];
    match checker {
        Checker::Prop => cross(&sets, &[values(g.z)], |v| Work::Prop { z: v[0] }),
        Checker::CorollaryProp => cross(&sets, &[values(g.z)], |v| Work::CorollaryProp { z: v[0] }),
        Checker::ThmA => cross(&sets, &pair, |v| Work::ThmA { z: v[0], z0: v[1] }),
        Checker::ThmI0 => cross(&sets, &pair, |v| Work::ThmI0 { z: v[0], z0: v[1] }),
        Checker::ThmB => cross(&sets, &triple, |v| Work::ThmB { z1: v[0], z2: v[1], z3: v[2] }),
        Checker::ThmC => cross(&sets, &triple, |v| Work::ThmC { z1: v[0], z2: v[1], z3: v[2] }),
        Checker::CorollariesP0 => {
            let mut out = cross(&sets, &pair, |v| Work::Corollary(CorollaryArgs::A { z: v[0], z0: v[1] }));
            out.extend(cross(&sets, &pair, |v| Work::Corollary(CorollaryArgs::I0 { z: v[0], z0: v[1] })));
            out.extend(cross(&sets, &triple, |v| {
                Work::Corollary(CorollaryArgs::B { z1: v[0], z2: v[1], z3: v[2] })
            }));
            out.extend(cross(&sets, &triple, |v| {
                Work::Corollary(CorollaryArgs::C { z1: v[0], z2: v[1], z3: v[2] })
            }));
            out
        }
        Checker::GrussRandom => unreachable!(),
    }
}

const TRIAL_MIX: u64 = 0x9E37_79B9_7F4A_7C15;

/// Random Grüss instance number `trial` of the stream selected by `seed`.
///
/// Every fifth trial uses a constant x, every fifth a constant y, and two in
/// five carry zero weights. Bounds are tight half the time and widened
/// otherwise.
pub fn gruss_instance(seed: u64, trial: usize, n_max: usize) -> GrussInstance {
    let mut rng = StdRng::seed_from_u64(seed ^ (trial as u64).wrapping_mul(TRIAL_MIX));
    let n = rng.gen_range(1..=n_max.max(1));
    let shape = trial % 5;
    let sx = 10f64.powf(rng.gen_range(-3.0..3.0));
    let sy = 10f64.powf(rng.gen_range(-3.0..3.0));
    let shift = rng.gen_range(-1.0..1.0);
    let draw = |scale: f64, constant: bool, rng: &mut StdRng| -> Vec<f64> {
        if constant {
            vec![scale * shift; n]
        } else {
            (0..n).map(|_| scale * (shift + rng.gen_range(-1.0..1.0))).collect()
        }
    };
    let x = draw(sx, shape == 0, &mut rng);
    let y = draw(sy, shape == 1, &mut rng);
    let m: Vec<f64> = (0..n)
        .map(|k| match shape {
            2 if rng.gen_bool(0.5) => 0.0,
            3 if k > 0 => 0.0,
            _ => rng.gen_range(0.0..10.0),
        })
        .collect();
    let mut inst = GrussInstance::tight(x, y, m);
    if rng.gen_bool(0.5) {
        let widen = |lo: &mut f64, hi: &mut f64, u: f64, v: f64| {
            let span = (*hi - *lo).max(hi.abs()).max(1e-300);
            *lo -= u * span;
            *hi += v * span;
        };
        let (u, v, w, q) = (rng.gen::<f64>(), rng.gen::<f64>(), rng.gen::<f64>(), rng.gen::<f64>());
        widen(&mut inst.gamma_lo, &mut inst.gamma_hi, u, v);
        widen(&mut inst.phi_lo, &mut inst.phi_hi, w, q);
    }
    inst
}

fn evaluate(p: &Point, ts: &[f64], gruss: &GrussArgs, cfg: &CheckConfig) -> hypergruss::Result<Vec<IneqReport>> {
    let ps = p.params.as_ref();
    let ps = || ps.expect("parametric point");
    match p.work {
        Work::Prop { z } => check_prop_bounds_grid(ps(), z, ts, cfg),
        Work::CorollaryProp { z } => check_corollary_prop(ps(), z, cfg),
        Work::ThmA { z, z0 } => check_thm_a(ps(), z, z0, cfg),
        Work::ThmI0 { z, z0 } => check_thm_i0(ps(), z, z0, cfg),
        Work::ThmB { z1, z2, z3 } => Ok(vec![check_thm_b(ps(), z1, z2, z3, cfg)?]),
        Work::ThmC { z1, z2, z3 } => Ok(vec![check_thm_c(ps(), z1, z2, z3, cfg)?]),
        Work::Corollary(args) => check_corollaries_p0(ps(), args, cfg),
        Work::Gruss { trial } => Ok(vec![gruss_check(&gruss_instance(gruss.seed, trial, gruss.n))?]),
    }
}

enum Outcome {
    Skipped,
    Done(Vec<IneqReport>),
    Failed(HgError),
}

#[derive(Debug, Clone)]
pub struct SweepOutput {
    pub records: Vec<Record>,
    pub report: SweepReport,
}

/// Evaluate `checker` on every point of the grid. Records come back in grid
/// order whatever the pool size.
pub fn run_sweep(checker: Checker, grid: &GridArgs, gruss: &GrussArgs, cfg: &CheckConfig) -> SweepOutput {
    let start = Instant::now();
    let g = grid.or(&default_grid(checker));
    let ts = g.t.map(|r| r.values()).unwrap_or_else(default_t_grid);
    let pts = points(checker, &g, gruss);
    let outcomes: Vec<Outcome> = pts
        .par_iter()
        .map(|p| match evaluate(p, &ts, gruss, cfg) {
            Ok(reports) => Outcome::Done(reports),
            Err(HgError::Hypothesis { .. }) => Outcome::Skipped,
            Err(e) => Outcome::Failed(e),
        })
        .collect();

    let name = checker.name();
    let mut records = Vec::new();
    let mut skipped = 0;
    for (i, (p, o)) in pts.iter().zip(outcomes).enumerate() {
        match o {
            Outcome::Skipped => skipped += 1,
            Outcome::Done(reports) => records.extend(reports.iter().map(|r| Record::from_report(name, i, r))),
            Outcome::Failed(e) => records.push(Record::from_error(name, i, p.params, p.work.args(), e.to_string())),
        }
    }
    let report = SweepReport::summarize(name, pts.len(), skipped, &records, start.elapsed());
    SweepOutput { records, report }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checker_names_round_trip() {
        for c in Checker::ALL {
            assert_eq!(Checker::from_name(c.name()), Some(c));
        }
        assert_eq!(Checker::from_name("thm-z"), None);
    }

    #[test]
    fn offsets_build_parameters() {
        let g = GridArgs {
            a: r(1.0, 1.0, 1),
            b: r(1.0, 2.0, 2),
            c_offset: r(0.5, 0.5, 1),
            alpha: r(1.0, 1.0, 1),
            beta_offset: r(1.0, 2.0, 2),
            p: r(0.0, 0.0, 1),
            ..GridArgs::default()
        };
        let sets = param_sets(&g);
        assert_eq!(sets.len(), 4);
        assert_eq!(sets[3], ParamSet::new(1.0, 2.0, 2.5, 1.0, 3.0, 0.0));
    }

    #[test]
    fn single_point_grid() {
        let one = |v| r(v, v, 1);
        let g = GridArgs {
            a: one(1.0),
            b: one(1.0),
            c_offset: one(1.0),
            alpha: one(1.0),
            beta_offset: one(1.0),
            p: one(0.5),
            z: one(0.2),
            z0: one(0.6),
            ..GridArgs::default()
        };
        let out = run_sweep(Checker::ThmA, &g, &GrussArgs::default(), &CheckConfig::default());
        assert_eq!(out.report.grid_size, 1);
        assert_eq!(out.report.total, 1);
        assert_eq!(out.records.len(), 2);
    }

    #[test]
    fn hypothesis_violations_are_skipped() {
        let g = GridArgs { z: r(0.1, 0.9, 3), z0: r(0.1, 0.9, 3), p: r(0.5, 0.5, 1), ..GridArgs::default() };
        let out = run_sweep(Checker::ThmA, &g, &GrussArgs::default(), &CheckConfig::default());
        let d = out.report;
        assert_eq!(d.skipped + d.total, d.grid_size);
        // z > z0 on three of nine (z, z0) pairs.
        assert_eq!(d.skipped * 3, d.grid_size);
        assert_eq!(d.passed + d.uncertain + d.failed, d.total);
    }

    #[test]
    fn gruss_instances_are_reproducible_and_valid() {
        for trial in 0..50 {
            let a = gruss_instance(7, trial, 30);
            assert_eq!(a, gruss_instance(7, trial, 30));
            a.validate().unwrap();
            assert!((1..=30).contains(&a.x.len()));
        }
        assert_ne!(gruss_instance(7, 1, 30), gruss_instance(8, 1, 30));
    }
}
