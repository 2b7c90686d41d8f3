//! Generalized functions of one parameter set, sharing one kernel table.

use std::cell::Cell;

use super::CheckConfig;
use crate::approx::Approx;
use crate::error::{domain, Result};
use crate::params::ParamSet;
use crate::quadrature::{one_minus_zt, GenBetaEngine};
use crate::scalar::beta_with_err;
use crate::series::{EvalResult, Method};

/// Smallest |normalized generalized beta| a ratio may divide by. The value
/// is negative for some α > β, where the kernel changes sign.
const MIN_NORMALIZER: f64 = 1e-300;

pub(crate) struct GenFamily {
    ps: ParamSet,
    engine: GenBetaEngine,
    rel_tol: f64,
    /// B(b, c−b).
    beta_bc: Approx,
    /// B_p^{(α,β)}(b, c−b), filled on first use.
    raw0: Cell<Option<Approx>>,
    converged: Cell<bool>,
    nodes: Cell<usize>,
}

impl GenFamily {
    pub(crate) fn new(ps: &ParamSet, cfg: &CheckConfig) -> Result<Self> {
        let (b, rel) = beta_with_err(ps.b, ps.c - ps.b)?;
        Ok(Self {
            ps: *ps,
            engine: GenBetaEngine::for_params(ps, &cfg.quad)?,
            rel_tol: cfg.quad.rel_tol,
            beta_bc: Approx::new(b, rel * b),
            raw0: Cell::new(None),
            converged: Cell::new(true),
            nodes: Cell::new(0),
        })
    }

    /// ∫ t^{b−1}(1−t)^{c−b−1} K(t) g(t) dt; a non-converged quadrature is
    /// kept with its (large) error estimate.
    fn raw(&self, g: impl Fn(f64, f64) -> f64) -> Result<Approx> {
        let out = self.engine.integrate(self.ps.b, self.ps.c - self.ps.b, g, self.rel_tol)?;
        self.converged.set(self.converged.get() && out.converged);
        self.nodes.set(self.nodes.get() + out.nodes);
        Ok(Approx::new(out.value, out.err_estimate))
    }

    fn raw0(&self) -> Result<Approx> {
        if let Some(v) = self.raw0.get() {
            return Ok(v);
        }
        let v = self.raw(|_, _| 1.0)?;
        if !((v.value / self.beta_bc.value).abs() > MIN_NORMALIZER) {
            return Err(domain(format!(
                "normalized generalized beta {:e} is too small to divide by",
                v.value / self.beta_bc.value
            )));
        }
        self.raw0.set(Some(v));
        Ok(v)
    }

    fn raw_exp(&self, z: f64) -> Result<Approx> {
        if z == 0.0 {
            return self.raw0();
        }
        self.raw(|t, _| (z * t).exp())
    }

    fn raw_pow(&self, z: f64) -> Result<Approx> {
        if z == 0.0 {
            return self.raw0();
        }
        let a = self.ps.a;
        self.raw(|t, omt| one_minus_zt(z, t, omt).powf(-a))
    }

    /// B_p^{(α,β)}(b, c−b).
    pub(crate) fn generalized_beta(&self) -> Result<Approx> {
        self.raw0()
    }

    /// B^{(α,β;p)}(b, c−b).
    pub(crate) fn normalized_beta(&self) -> Result<Approx> {
        Ok(self.raw0()? / self.beta_bc)
    }

    pub(crate) fn gchf(&self, z: f64) -> Result<Approx> {
        Ok(self.raw_exp(z)? / self.beta_bc)
    }

    pub(crate) fn gghf(&self, z: f64) -> Result<Approx> {
        Ok(self.raw_pow(z)? / self.beta_bc)
    }

    /// ₁R₁ = GCHF / normalized beta; both carry 1/B(b,c−b), which cancels.
    pub(crate) fn r1(&self, z: f64) -> Result<Approx> {
        if z == 0.0 {
            self.raw0()?;
            return Ok(Approx::exact(1.0));
        }
        Ok(self.raw_exp(z)? / self.raw0()?)
    }

    pub(crate) fn r2(&self, z: f64) -> Result<Approx> {
        if z == 0.0 {
            self.raw0()?;
            return Ok(Approx::exact(1.0));
        }
        Ok(self.raw_pow(z)? / self.raw0()?)
    }

    fn result(&self, v: Approx) -> EvalResult {
        EvalResult {
            value: v.value,
            err_estimate: v.err,
            terms_used: self.nodes.get(),
            method: Method::Quadrature,
            converged: self.converged.get(),
            cancellation: false,
        }
    }
}

fn ratio_domain(ps: &ParamSet, with_a: bool, z: f64) -> Result<()> {
    ps.require_generalized(with_a)?;
    if !z.is_finite() {
        return Err(domain(format!("z must be finite, got {z}")));
    }
    if with_a && z.abs() >= 1.0 {
        return Err(domain(format!("ratio_2r1 requires |z| < 1, got {z}")));
    }
    Ok(())
}

/// ₁R₁^{(α,β;p)}(b; c; z) = ₁F₁^{(α,β;p)}(b; c; z) / B^{(α,β;p)}(b, c−b).
pub fn ratio_1r1(ps: &ParamSet, z: f64, cfg: &CheckConfig) -> Result<EvalResult> {
    ratio_domain(ps, false, z)?;
    let fam = GenFamily::new(ps, cfg)?;
    let v = fam.r1(z)?;
    Ok(fam.result(v))
}

/// ₂R₁^{(α,β;p)}(a, b; c; z) = ₂F₁^{(α,β;p)}(a, b; c; z) / B^{(α,β;p)}(b, c−b).
pub fn ratio_2r1(ps: &ParamSet, z: f64, cfg: &CheckConfig) -> Result<EvalResult> {
    ratio_domain(ps, true, z)?;
    let fam = GenFamily::new(ps, cfg)?;
    let v = fam.r2(z)?;
    Ok(fam.result(v))
}
