//! The four Grüss-type theorems for ₁R₁, ₂R₁ and the generalized functions.

use super::family::GenFamily;
use super::{require, require_all_finite, require_theorem_params, CheckConfig, IneqInputs, IneqReport};
use crate::approx::Approx;
use crate::error::{domain, Result};
use crate::params::ParamSet;

/// e^x − 1 to a couple of ulps.
pub(super) fn expm1(x: f64) -> Approx {
    Approx::computed(x.exp_m1())
}

pub(super) fn exp(x: f64) -> Approx {
    Approx::computed(x.exp())
}

/// (1 − z)^e through ln(1 − z), with the error of the logarithm carried.
pub(super) fn pow_one_minus(z: f64, e: f64) -> Approx {
    let l = (-z).ln_1p();
    let v = (e * l).exp();
    Approx::new(v, 2.0 * f64::EPSILON * v * (1.0 + (e * l).abs()))
}

/// (1 − z)^{−a} − 1 without cancellation for small z.
pub(super) fn pow_one_minus_m1(z: f64, a: f64) -> Approx {
    let e = -a * (-z).ln_1p();
    let v = e.exp_m1();
    Approx::new(v, 2.0 * f64::EPSILON * (v.abs() + e.exp() * e.abs()))
}

/// The two sides of the first inequality of Theorem A given R(z), R(z0).
pub(super) fn thm_a_sides(r: Approx, r0: Approx, z: f64, z0: f64) -> [(Approx, Approx); 2] {
    let (e, e0) = (expm1(z), expm1(z0));
    let lhs1 = (e0 * (r - 1.0) - e * (r0 - 1.0)).abs();
    let rhs1 = e0 * e0 * 0.25 * (Approx::exact(z) / z0);
    let lhs2 = (r - exp(z - z0) * r0).abs();
    let rhs2 = exp(z0) * 0.25;
    [(lhs1, rhs1), (lhs2, rhs2)]
}

pub(super) fn thm_i0_sides(r: Approx, r0: Approx, a: f64, z: f64, z0: f64) -> [(Approx, Approx); 2] {
    let (m, m0) = (pow_one_minus_m1(z, a), pow_one_minus_m1(z0, a));
    let lhs1 = (m0 * (r - 1.0) - m * (r0 - 1.0)).abs();
    let rhs1 = m0 * m0 * (z / 4.0);
    let (q, q0) = (pow_one_minus(z, a), pow_one_minus(z0, a));
    let lhs2 = (q * r - q0 * r0).abs();
    let rhs2 = q / q0 * (z / 4.0);
    [(lhs1, rhs1), (lhs2, rhs2)]
}

/// |F(z1 z2 z3) − e^{(s−1) z3} F(z1 z3)| against ¼ e^{z3} scale, with s the
/// variable in the exponential factor.
pub(super) fn thm_b_sides(f_inner: Approx, f_outer: Approx, s: f64, z3: f64, scale: Approx) -> (Approx, Approx) {
    let lhs = (f_inner - exp((s - 1.0) * z3) * f_outer).abs();
    (lhs, exp(z3) * 0.25 * scale)
}

pub(super) fn thm_c_sides(f_inner: Approx, f_outer: Approx, a: f64, z2: f64, z3: f64, scale: Approx) -> (Approx, Approx) {
    let q_inner = pow_one_minus(z2 * z3, a);
    let q_outer = pow_one_minus(z3, a);
    let lhs = (q_inner * f_inner - q_outer * f_outer).abs();
    (lhs, q_inner / q_outer * 0.25 * scale)
}

fn require_z_pair(checker: &'static str, z: f64, z0: f64) -> Result<()> {
    require_all_finite(checker, &[("z", z), ("z0", z0)])?;
    require(checker, 0.0 < z && z <= z0, || format!("0 < z <= z0 (z={z}, z0={z0})"))
}

fn require_unit(checker: &'static str, name: &str, v: f64) -> Result<()> {
    require(checker, (0.0..=1.0).contains(&v), || format!("0 <= {name} <= 1 ({name}={v})"))
}

pub(super) fn require_b_args(checker: &'static str, z1: f64, z2: f64, z3: f64) -> Result<()> {
    require_all_finite(checker, &[("z1", z1), ("z2", z2), ("z3", z3)])?;
    require_unit(checker, "z1", z1)?;
    require_unit(checker, "z2", z2)?;
    require(checker, z3 >= 0.0, || format!("z3 >= 0 (z3={z3})"))
}

pub(super) fn require_c_args(checker: &'static str, z1: f64, z2: f64, z3: f64) -> Result<()> {
    require_all_finite(checker, &[("z1", z1), ("z2", z2), ("z3", z3)])?;
    require_unit(checker, "z1", z1)?;
    require_unit(checker, "z2", z2)?;
    require(checker, (0.0..1.0).contains(&z3), || format!("0 <= z3 < 1 (z3={z3})"))
}

fn reports(names: [&'static str; 2], sides: [(Approx, Approx); 2], inputs: IneqInputs) -> Vec<IneqReport> {
    let [(l1, r1), (l2, r2)] = sides;
    vec![
        IneqReport::from_sides(names[0], l1, r1, inputs.clone()),
        IneqReport::from_sides(names[1], l2, r2, inputs),
    ]
}

/// Theorem A without hypothesis checks: needs only a valid parameter set
/// and z0 ≠ 0.
pub fn thm_a_core(ps: &ParamSet, z: f64, z0: f64, cfg: &CheckConfig) -> Result<Vec<IneqReport>> {
    if z0 == 0.0 {
        return Err(domain("theorem A needs z0 != 0"));
    }
    let fam = GenFamily::new(ps, cfg)?;
    let (r, r0) = (fam.r1(z)?, fam.r1(z0)?);
    Ok(reports(["thm-a-1", "thm-a-2"], thm_a_sides(r, r0, z, z0), IneqInputs::new(*ps, &[("z", z), ("z0", z0)])))
}

/// Theorem A: bounds on ₁R₁(z) against ₁R₁(z0) for 0 < z ≤ z0.
pub fn check_thm_a(ps: &ParamSet, z: f64, z0: f64, cfg: &CheckConfig) -> Result<Vec<IneqReport>> {
    const C: &str = "thm-a";
    require_theorem_params(C, ps)?;
    require_z_pair(C, z, z0)?;
    thm_a_core(ps, z, z0, cfg)
}

pub fn thm_i0_core(ps: &ParamSet, z: f64, z0: f64, cfg: &CheckConfig) -> Result<Vec<IneqReport>> {
    if z.abs() >= 1.0 || z0.abs() >= 1.0 {
        return Err(domain("theorem I0 needs |z|, |z0| < 1"));
    }
    let fam = GenFamily::new(ps, cfg)?;
    let (r, r0) = (fam.r2(z)?, fam.r2(z0)?);
    Ok(reports(
        ["thm-i0-1", "thm-i0-2"],
        thm_i0_sides(r, r0, ps.a, z, z0),
        IneqInputs::new(*ps, &[("z", z), ("z0", z0)]),
    ))
}

/// Theorem I0: bounds on ₂R₁(z) against ₂R₁(z0) for 0 < z ≤ z0 < 1.
pub fn check_thm_i0(ps: &ParamSet, z: f64, z0: f64, cfg: &CheckConfig) -> Result<Vec<IneqReport>> {
    const C: &str = "thm-i0";
    require_theorem_params(C, ps)?;
    require(C, ps.a > 0.0, || format!("a > 0 (a={})", ps.a))?;
    require_z_pair(C, z, z0)?;
    require(C, z0 < 1.0, || format!("z0 < 1 (z0={z0})"))?;
    thm_i0_core(ps, z, z0, cfg)
}

pub fn thm_b_core(ps: &ParamSet, z1: f64, z2: f64, z3: f64, cfg: &CheckConfig) -> Result<IneqReport> {
    let fam = GenFamily::new(ps, cfg)?;
    let (lhs, rhs) = thm_b_sides(fam.gchf(z1 * z2 * z3)?, fam.gchf(z1 * z3)?, z2, z3, fam.normalized_beta()?);
    Ok(IneqReport::from_sides("thm-b", lhs, rhs, IneqInputs::new(*ps, &[("z1", z1), ("z2", z2), ("z3", z3)])))
}

/// Theorem B for ₁F₁^{(α,β;p)}.
pub fn check_thm_b(ps: &ParamSet, z1: f64, z2: f64, z3: f64, cfg: &CheckConfig) -> Result<IneqReport> {
    const C: &str = "thm-b";
    require_theorem_params(C, ps)?;
    require_b_args(C, z1, z2, z3)?;
    thm_b_core(ps, z1, z2, z3, cfg)
}

pub fn thm_c_core(ps: &ParamSet, z1: f64, z2: f64, z3: f64, cfg: &CheckConfig) -> Result<IneqReport> {
    if (z1 * z3).abs() >= 1.0 || z3 >= 1.0 {
        return Err(domain("theorem C needs |z1 z3| < 1 and z3 < 1"));
    }
    let fam = GenFamily::new(ps, cfg)?;
    let (lhs, rhs) = thm_c_sides(
        fam.gghf(z1 * z2 * z3)?,
        fam.gghf(z1 * z3)?,
        ps.a,
        z2,
        z3,
        fam.normalized_beta()?,
    );
    Ok(IneqReport::from_sides("thm-c", lhs, rhs, IneqInputs::new(*ps, &[("z1", z1), ("z2", z2), ("z3", z3)])))
}

/// Theorem C for ₂F₁^{(α,β;p)}.
pub fn check_thm_c(ps: &ParamSet, z1: f64, z2: f64, z3: f64, cfg: &CheckConfig) -> Result<IneqReport> {
    const C: &str = "thm-c";
    require_theorem_params(C, ps)?;
    require(C, ps.a > 0.0, || format!("a > 0 (a={})", ps.a))?;
    require_c_args(C, z1, z2, z3)?;
    thm_c_core(ps, z1, z2, z3, cfg)
}
