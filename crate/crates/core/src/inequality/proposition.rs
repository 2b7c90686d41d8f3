//! Elementary upper bounds for ₁F₁, ₂F₁, the kernel and B_p^{(α,β)}, and
//! the corollary comparing generalized with classical functions.

use super::family::GenFamily;
use super::{from_eval, require, require_all_finite, CheckConfig, IneqInputs, IneqReport};
use crate::approx::Approx;
use crate::error::Result;
use crate::params::ParamSet;
use crate::quadrature::kernel;
use crate::scalar::beta_with_err;
use crate::series::{gauss_2f1, kummer_1f1};

const CHECKER: &str = "prop";
const COROLLARY: &str = "corollary-prop";

/// t = 0.05, 0.10, …, 0.95.
pub fn default_t_grid() -> Vec<f64> {
    (1..=19).map(|k| k as f64 / 20.0).collect()
}

fn require_prop(checker: &'static str, ps: &ParamSet, z: f64) -> Result<()> {
    require_all_finite(checker, &ps.fields())?;
    require_all_finite(checker, &[("z", z)])?;
    require(checker, ps.a > 0.0, || format!("a > 0 (a={})", ps.a))?;
    require(checker, ps.a != 1.0, || "a != 1".into())?;
    require(checker, ps.b >= 1.0, || format!("b >= 1 (b={})", ps.b))?;
    require(checker, ps.c >= ps.b + 1.0, || format!("c >= b + 1 (b={}, c={})", ps.b, ps.c))?;
    require(checker, ps.alpha >= 1.0, || format!("alpha >= 1 (alpha={})", ps.alpha))?;
    require(checker, ps.beta >= ps.alpha + 1.0, || {
        format!("beta >= alpha + 1 (alpha={}, beta={})", ps.alpha, ps.beta)
    })?;
    require(checker, ps.p > 0.0, || format!("p > 0 (p={})", ps.p))?;
    require(checker, z != 0.0, || "z != 0".into())?;
    require(checker, z.abs() < 1.0, || format!("|z| < 1 (z={z})"))
}

/// λ_{x,y} with a relative error proportional to the size of its logarithm.
fn lambda(x: f64, y: f64) -> Approx {
    let xl = |v: f64| if v == 0.0 { 0.0 } else { v * v.ln() };
    let ln = xl(x) + xl(y) - xl(x + y);
    let v = ln.exp();
    let scale = 1.0 + xl(x).abs() + xl(y).abs() + xl(x + y).abs();
    Approx::new(v, 4.0 * f64::EPSILON * scale * v)
}

fn beta(x: f64, y: f64) -> Result<Approx> {
    let (v, rel) = beta_with_err(x, y)?;
    Ok(Approx::new(v, rel * v))
}

/// λ_{α−1,β−α−1} / (4 p B(α, β−α)): the uniform bound on the kernel.
fn kernel_bound(ps: &ParamSet) -> Result<Approx> {
    Ok(lambda(ps.alpha - 1.0, ps.beta - ps.alpha - 1.0) / (beta(ps.alpha, ps.beta - ps.alpha)? * (4.0 * ps.p)))
}

/// λ_{b−1,c−b−1} / B(b, c−b).
fn density_bound(ps: &ParamSet) -> Result<Approx> {
    Ok(lambda(ps.b - 1.0, ps.c - ps.b - 1.0) / beta(ps.b, ps.c - ps.b)?)
}

/// The kernel-dependent bounds at one t.
fn kernel_reports(ps: &ParamSet, z: f64, t: f64, kb: Approx) -> Result<Vec<IneqReport>> {
    require(CHECKER, t > 0.0 && t < 1.0, || format!("t in (0, 1) (t={t})"))?;
    let omt = 1.0 - t;
    let inputs = IneqInputs::new(*ps, &[("z", z), ("t", t)]);
    let (k, k_err) = kernel(ps.alpha, ps.beta, ps.p, t, omt)?;
    let k = Approx::new(k, k_err);
    let tt = Approx::computed(t * omt);
    let w = Approx::exact(ps.p) / tt;
    // (1 − e^{−w}) / p · t(1−t)
    let d = -(-w.value).exp_m1();
    let decay = Approx::new(d, 2.0 * f64::EPSILON * d + (-w.value).exp() * w.err);
    let xx = lambda(ps.alpha - 1.0, ps.beta - ps.alpha - 1.0) / beta(ps.alpha, ps.beta - ps.alpha)? * decay / ps.p * tt;
    Ok(vec![
        IneqReport::from_sides("prop-15", k, kb, inputs.clone()),
        IneqReport::from_sides("prop-xx", k, xx, inputs),
    ])
}

/// The t-independent bounds prop-14, prop-16 and prop-17 once, then prop-15
/// and prop-xx at each t of `ts`.
pub fn check_prop_bounds_grid(ps: &ParamSet, z: f64, ts: &[f64], cfg: &CheckConfig) -> Result<Vec<IneqReport>> {
    require_prop(CHECKER, ps, z)?;
    for &t in ts {
        require(CHECKER, t > 0.0 && t < 1.0, || format!("t in (0, 1) (t={t})"))?;
    }
    let inputs = IneqInputs::new(*ps, &[("z", z)]);
    let db = density_bound(ps)?;
    let kb = kernel_bound(ps)?;
    let mut out = Vec::with_capacity(3 + 2 * ts.len());

    let f11 = from_eval(kummer_1f1(ps.b, ps.c, z, &cfg.series)?);
    let growth = Approx::computed(z.exp_m1()) / z;
    out.push(IneqReport::from_sides("prop-14", f11, db * growth, inputs.clone()));

    let fam = GenFamily::new(ps, cfg)?;
    let gb = fam.generalized_beta()?;
    let theta = lambda(ps.b, ps.c - ps.b) * kb;
    out.push(IneqReport::from_sides("prop-16", gb, theta, inputs.clone()));

    let f21 = from_eval(gauss_2f1(ps.a, ps.b, ps.c, z, &cfg.series)?);
    // (1 − (1−z)^{1−a}) / ((1−a) z)
    let one_a = 1.0 - ps.a;
    let ln1mz = Approx::computed((-z).ln_1p());
    let e = one_a * ln1mz.value;
    let num = Approx::new(-e.exp_m1(), 2.0 * f64::EPSILON * e.exp_m1().abs() + e.exp() * (one_a * ln1mz.err).abs());
    let growth2 = num / (one_a * z);
    out.push(IneqReport::from_sides("prop-17", f21, db * growth2, inputs));

    for &t in ts {
        out.extend(kernel_reports(ps, z, t, kb)?);
    }
    Ok(out)
}

/// The five bounds at a single t.
pub fn check_prop_bounds(ps: &ParamSet, z: f64, t: f64, cfg: &CheckConfig) -> Result<Vec<IneqReport>> {
    check_prop_bounds_grid(ps, z, &[t], cfg)
}

/// ₁F₁^{(α,β;p)} ≤ K ₁F₁ and ₂F₁^{(α,β;p)} ≤ K ₂F₁ with K the kernel bound.
pub fn check_corollary_prop(ps: &ParamSet, z: f64, cfg: &CheckConfig) -> Result<Vec<IneqReport>> {
    require_prop(COROLLARY, ps, z)?;
    let inputs = IneqInputs::new(*ps, &[("z", z)]);
    let kb = kernel_bound(ps)?;
    let fam = GenFamily::new(ps, cfg)?;
    let f11 = from_eval(kummer_1f1(ps.b, ps.c, z, &cfg.series)?);
    let f21 = from_eval(gauss_2f1(ps.a, ps.b, ps.c, z, &cfg.series)?);
    Ok(vec![
        IneqReport::from_sides("corollary-prop-gchf", fam.gchf(z)?, kb * f11, inputs.clone()),
        IneqReport::from_sides("corollary-prop-gghf", fam.gghf(z)?, kb * f21, inputs),
    ])
}
