//! Numerical certification of the bounds and Grüss-type inequalities.
//!
//! Every checker validates its own hypothesis set, evaluates both sides with
//! propagated error bounds and returns [`IneqReport`]s. A report is marked
//! uncertain when the slack is within ten times the combined error, so a
//! near-tie is never silently counted as a pass or a failure.

mod corollaries;
mod family;
mod gruss;
mod proposition;
mod theorems;

pub use corollaries::{check_corollaries_p0, CorollaryArgs};
pub use family::{ratio_1r1, ratio_2r1};
pub use gruss::{gruss_check, GrussInstance};
pub use proposition::{check_corollary_prop, check_prop_bounds, check_prop_bounds_grid, default_t_grid};
pub use theorems::{check_thm_a, check_thm_b, check_thm_c, check_thm_i0};

use crate::approx::Approx;
use crate::error::{HgError, Result};
use crate::params::ParamSet;
use crate::quadrature::QuadConfig;
use crate::series::{EvalConfig, EvalResult};

/// Reports are uncertain when |slack| ≤ this factor × combined error.
pub const UNCERTAINTY_FACTOR: f64 = 10.0;

/// Evaluator settings shared by all checkers.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct CheckConfig {
    pub quad: QuadConfig,
    pub series: EvalConfig,
}

/// Parameters and arguments an inequality instance was evaluated at.
#[derive(Debug, Clone, PartialEq)]
pub struct IneqInputs {
    pub params: Option<ParamSet>,
    pub args: Vec<(&'static str, f64)>,
}

impl IneqInputs {
    pub fn new(params: ParamSet, args: &[(&'static str, f64)]) -> Self {
        Self { params: Some(params), args: args.to_vec() }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IneqReport {
    pub name: &'static str,
    pub lhs: f64,
    pub rhs: f64,
    /// rhs − lhs.
    pub slack: f64,
    /// Combined absolute error of both sides.
    pub err: f64,
    pub holds: bool,
    pub uncertain: bool,
    pub inputs: IneqInputs,
}

impl IneqReport {
    pub(crate) fn from_sides(name: &'static str, lhs: Approx, rhs: Approx, inputs: IneqInputs) -> Self {
        let slack = rhs.value - lhs.value;
        let err = lhs.err + rhs.err + f64::EPSILON * slack.abs();
        let finite = slack.is_finite() && err.is_finite();
        Self {
            name,
            lhs: lhs.value,
            rhs: rhs.value,
            slack,
            err,
            holds: finite && slack >= 0.0,
            uncertain: !finite || slack.abs() <= UNCERTAINTY_FACTOR * err,
            inputs,
        }
    }

    /// False and not explained by numerical error.
    pub fn certain_failure(&self) -> bool {
        !self.holds && !self.uncertain
    }
}

fn from_eval(r: EvalResult) -> Approx {
    Approx::new(r.value, r.err_estimate)
}

/// Fails with a named hypothesis error unless `ok`.
fn require(checker: &'static str, ok: bool, condition: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(HgError::Hypothesis { checker, condition: condition() })
    }
}

fn require_all_finite(checker: &'static str, vals: &[(&str, f64)]) -> Result<()> {
    for (name, v) in vals {
        require(checker, v.is_finite(), || format!("{name} must be finite, got {v}"))?;
    }
    Ok(())
}

/// Hypotheses shared by the theorems: 0 < b < c, α, β > 0, p ≥ 0.
fn require_theorem_params(checker: &'static str, ps: &ParamSet) -> Result<()> {
    require_all_finite(checker, &ps.fields())?;
    require(checker, 0.0 < ps.b && ps.b < ps.c, || format!("0 < b < c (b={}, c={})", ps.b, ps.c))?;
    require(checker, ps.alpha > 0.0, || format!("alpha > 0 (alpha={})", ps.alpha))?;
    require(checker, ps.beta > 0.0, || format!("beta > 0 (beta={})", ps.beta))?;
    require(checker, ps.p >= 0.0, || format!("p >= 0 (p={})", ps.p))
}

/// Checker cores without hypothesis validation, for probing boundary and
/// out-of-hypothesis inputs. Reports from here certify nothing.
pub mod exploratory {
    pub use super::corollaries::corollaries_core;
    pub use super::theorems::{thm_a_core, thm_b_core, thm_c_core, thm_i0_core};
}
