//! The p = 0 corollaries, evaluated with the classical functions directly.

use super::theorems::{require_b_args, require_c_args, thm_a_sides, thm_b_sides, thm_c_sides, thm_i0_sides};
use super::{from_eval, require, require_all_finite, CheckConfig, IneqInputs, IneqReport};
use crate::approx::Approx;
use crate::error::Result;
use crate::params::ParamSet;
use crate::series::{gauss_2f1, kummer_1f1};

const C: &str = "corollaries-p0";

/// Arguments of one corollary instance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CorollaryArgs {
    A { z: f64, z0: f64 },
    I0 { z: f64, z0: f64 },
    B { z1: f64, z2: f64, z3: f64 },
    C { z1: f64, z2: f64, z3: f64 },
}

/// Corollary evaluation without hypothesis checks.
pub fn corollaries_core(ps: &ParamSet, args: CorollaryArgs, cfg: &CheckConfig) -> Result<Vec<IneqReport>> {
    let ps = ps.with_p(0.0);
    let f11 = |z: f64| -> Result<Approx> { Ok(from_eval(kummer_1f1(ps.b, ps.c, z, &cfg.series)?)) };
    let f21 = |z: f64| -> Result<Approx> { Ok(from_eval(gauss_2f1(ps.a, ps.b, ps.c, z, &cfg.series)?)) };
    let one = Approx::exact(1.0);
    let pair = |names: [&'static str; 2], sides: [(Approx, Approx); 2], inputs: IneqInputs| {
        let [(l1, r1), (l2, r2)] = sides;
        vec![
            IneqReport::from_sides(names[0], l1, r1, inputs.clone()),
            IneqReport::from_sides(names[1], l2, r2, inputs),
        ]
    };
    Ok(match args {
        CorollaryArgs::A { z, z0 } => pair(
            ["corollary-a-1", "corollary-a-2"],
            thm_a_sides(f11(z)?, f11(z0)?, z, z0),
            IneqInputs::new(ps, &[("z", z), ("z0", z0)]),
        ),
        CorollaryArgs::I0 { z, z0 } => pair(
            ["corollary-i0-1", "corollary-i0-2"],
            thm_i0_sides(f21(z)?, f21(z0)?, ps.a, z, z0),
            IneqInputs::new(ps, &[("z", z), ("z0", z0)]),
        ),
        CorollaryArgs::B { z1, z2, z3 } => {
            let inputs = IneqInputs::new(ps, &[("z1", z1), ("z2", z2), ("z3", z3)]);
            let (inner, outer) = (f11(z1 * z2 * z3)?, f11(z1 * z3)?);
            let (l, r) = thm_b_sides(inner, outer, z2, z3, one);
            // the corollary as printed has e^{(z1−1) z3} in place of e^{(z2−1) z3}
            let (lp, rp) = thm_b_sides(inner, outer, z1, z3, one);
            vec![
                IneqReport::from_sides("corollary-b", l, r, inputs.clone()),
                IneqReport::from_sides("corollary-b-printed", lp, rp, inputs),
            ]
        }
        CorollaryArgs::C { z1, z2, z3 } => {
            let (l, r) = thm_c_sides(f21(z1 * z2 * z3)?, f21(z1 * z3)?, ps.a, z2, z3, one);
            vec![IneqReport::from_sides(
                "corollary-c",
                l,
                r,
                IneqInputs::new(ps, &[("z1", z1), ("z2", z2), ("z3", z3)]),
            )]
        }
    })
}

/// The corollaries of the four theorems at p = 0. The parameter set's p is
/// ignored and reported as 0; α and β play no role.
pub fn check_corollaries_p0(ps: &ParamSet, args: CorollaryArgs, cfg: &CheckConfig) -> Result<Vec<IneqReport>> {
    require_all_finite(C, &[("a", ps.a), ("b", ps.b), ("c", ps.c)])?;
    require(C, 0.0 < ps.b && ps.b < ps.c, || format!("0 < b < c (b={}, c={})", ps.b, ps.c))?;
    match args {
        CorollaryArgs::A { z, z0 } => {
            require_all_finite(C, &[("z", z), ("z0", z0)])?;
            require(C, 0.0 < z && z <= z0, || format!("0 < z <= z0 (z={z}, z0={z0})"))?;
        }
        CorollaryArgs::I0 { z, z0 } => {
            require_all_finite(C, &[("z", z), ("z0", z0)])?;
            require(C, ps.a > 0.0, || format!("a > 0 (a={})", ps.a))?;
            require(C, 0.0 < z && z <= z0 && z0 < 1.0, || format!("0 < z <= z0 < 1 (z={z}, z0={z0})"))?;
        }
        CorollaryArgs::B { z1, z2, z3 } => require_b_args(C, z1, z2, z3)?,
        CorollaryArgs::C { z1, z2, z3 } => {
            require(C, ps.a > 0.0, || format!("a > 0 (a={})", ps.a))?;
            require_c_args(C, z1, z2, z3)?;
        }
    }
    corollaries_core(ps, args, cfg)
}
