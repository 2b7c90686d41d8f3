//! Double-exponential quadrature on (0, 1) and the integral forms of the
//! hypergeometric families.
//!
//! Nodes come from t = 1/(1 + e^{−π sinh u}) on a uniform u-grid over
//! [−U, U], where U puts the outermost node at t ≈ 1e−300. Both t and 1 − t
//! are produced directly from u, so neither endpoint is ever evaluated and
//! (1−t)^{y−1} keeps full precision near t = 1. Level L has step U/2^L and
//! reuses every node of level L−1.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{domain, require_finite, HgError, Result};
use crate::params::ParamSet;
use crate::scalar::{beta_with_err, log_gamma_unchecked};
use crate::series::{check_z_cap_for_quadrature, kummer_1f1, EvalConfig, EvalResult, GenBetaSource, Method};

/// Deepest refinement level supported by the node tables.
pub const MAX_LEVEL: u32 = 16;

/// π sinh(U) at the outermost node.
const EDGE_EXPONENT: f64 = 690.0;

/// Beyond this |w| the kernel ₁F₁(α; β; −w) switches to its algebraic
/// large-argument expansion whenever the dropped e^{−w} part is below f64
/// resolution; past 700 that always holds.
pub const KERNEL_ASYMPTOTIC_W: f64 = 30.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadConfig {
    pub base_level: u32,
    pub max_level: u32,
    pub rel_tol: f64,
}

impl Default for QuadConfig {
    fn default() -> Self {
        Self { base_level: 6, max_level: 12, rel_tol: 1e-11 }
    }
}

impl QuadConfig {
    pub fn validate(&self) -> Result<()> {
        if self.base_level == 0 || self.base_level > self.max_level || self.max_level > MAX_LEVEL {
            return Err(domain(format!(
                "quadrature levels must satisfy 1 <= base ({}) <= max ({}) <= {MAX_LEVEL}",
                self.base_level, self.max_level
            )));
        }
        if !(self.rel_tol > 0.0 && self.rel_tol < 1.0) {
            return Err(domain(format!("quadrature rel_tol must lie in (0,1), got {}", self.rel_tol)));
        }
        Ok(())
    }

    pub fn with_tol(self, rel_tol: f64) -> Self {
        Self { rel_tol, ..self }
    }
}

/// A quadrature node: t, 1 − t and the Jacobian dt/du.
#[derive(Debug, Clone, Copy)]
pub struct Node {
    pub t: f64,
    pub omt: f64,
    pub weight: f64,
}

fn u_max() -> f64 {
    (EDGE_EXPONENT / PI).asinh()
}

fn node_at(u: f64) -> Node {
    let s = PI * u.sinh();
    // t itself rounds to 1 near the right edge; keep it strictly inside
    // and let callers take 1 − t from `omt`
    const BELOW_ONE: f64 = 1.0 - f64::EPSILON / 2.0;
    let t = (1.0 / (1.0 + (-s).exp())).min(BELOW_ONE);
    let omt = (1.0 / (1.0 + s.exp())).min(BELOW_ONE);
    Node { t, omt, weight: PI * u.cosh() * t * omt }
}

/// Nodes first introduced at `level`.
pub fn level_nodes(level: u32) -> &'static [Node] {
    static TABLES: OnceLock<Vec<OnceLock<Vec<Node>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| (0..=MAX_LEVEL).map(|_| OnceLock::new()).collect());
    tables[level as usize].get_or_init(|| {
        let um = u_max();
        if level == 0 {
            return vec![node_at(-um), node_at(0.0), node_at(um)];
        }
        let m = 1i64 << level;
        let h = um / m as f64;
        (-m + 1..m).step_by(2).map(|k| node_at(k as f64 * h)).collect()
    })
}

fn step(level: u32) -> f64 {
    u_max() / (1u64 << level) as f64
}

/// Full result of a quadrature run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadOutcome {
    pub value: f64,
    pub err_estimate: f64,
    /// Error estimate at the base level, before refinement.
    pub initial_err: f64,
    pub level: u32,
    pub nodes: usize,
    pub converged: bool,
}

fn check_exponents(exps: (f64, f64)) -> Result<()> {
    let (x, y) = exps;
    if !(x > -1.0 && y > -1.0) {
        return Err(domain(format!(
            "endpoint exponents must exceed -1 for integrability, got ({x}, {y})"
        )));
    }
    Ok(())
}

/// Core refinement loop. `f(level, index, node)` returns (integrand value,
/// absolute error of that value).
pub(crate) fn de_integrate(
    mut f: impl FnMut(u32, usize, &Node) -> (f64, f64),
    exps: (f64, f64),
    cfg: &QuadConfig,
) -> Result<QuadOutcome> {
    cfg.validate()?;
    check_exponents(exps)?;
    let mut sum = 0.0f64;
    let mut abs_sum = 0.0f64;
    let mut value_err_sum = 0.0f64;
    let mut nodes = 0usize;
    let mut prev = f64::NAN;
    let mut tail = 0.0f64;
    let mut initial_err = f64::NAN;
    let mut last = QuadOutcome {
        value: f64::NAN,
        err_estimate: f64::INFINITY,
        initial_err: f64::NAN,
        level: 0,
        nodes: 0,
        converged: false,
    };
    for level in 0..=cfg.max_level {
        for (i, node) in level_nodes(level).iter().enumerate() {
            let (v, e) = f(level, i, node);
            if !v.is_finite() {
                return Err(domain(format!(
                    "integrand is not finite at t = {:e} (1 - t = {:e})",
                    node.t, node.omt
                )));
            }
            let wv = v * node.weight;
            sum += wv;
            abs_sum += wv.abs();
            value_err_sum += e * node.weight;
            nodes += 1;
            if level == 0 && i != 1 {
                // missed mass beyond the outermost node, f ~ C t^x there
                let (edge, x) = if i == 0 { (node.t, exps.0) } else { (node.omt, exps.1) };
                tail += v.abs() * edge / (x + 1.0);
            }
        }
        let h = step(level);
        let value = h * sum;
        if level >= cfg.base_level {
            let diff = (value - prev).abs();
            let err = diff + tail + h * value_err_sum + 8.0 * f64::EPSILON * h * abs_sum;
            if level == cfg.base_level {
                initial_err = err;
            }
            let converged = err <= cfg.rel_tol * value.abs();
            last = QuadOutcome { value, err_estimate: err, initial_err, level, nodes, converged };
            if converged {
                return Ok(last);
            }
        }
        prev = value;
    }
    Ok(last)
}

fn into_pair(out: QuadOutcome, what: &'static str) -> Result<(f64, f64)> {
    if out.converged {
        Ok((out.value, out.err_estimate))
    } else {
        Err(HgError::NonConvergence { what, value: out.value, err: out.err_estimate })
    }
}

/// ∫₀¹ f(t, 1−t) dt where |f| ≲ t^x (1−t)^y near the endpoints for the
/// declared `sing_exponents` (x, y). Returns (value, error estimate).
pub fn integrate01(
    f: impl Fn(f64, f64) -> f64,
    sing_exponents: (f64, f64),
    cfg: &QuadConfig,
) -> Result<(f64, f64)> {
    into_pair(integrate01_detailed(f, sing_exponents, cfg)?, "double-exponential quadrature")
}

/// As [`integrate01`] but returns the full outcome, converged or not.
pub fn integrate01_detailed(
    f: impl Fn(f64, f64) -> f64,
    sing_exponents: (f64, f64),
    cfg: &QuadConfig,
) -> Result<QuadOutcome> {
    de_integrate(|_, _, n| (f(n.t, n.omt), 0.0), sing_exponents, cfg)
}

/// ln |Γ(x)| and sign Γ(x) for any non-integer-pole x, used only for the
/// kernel's large-argument coefficient 1/Γ(β−α).
fn ln_abs_gamma_signed(x: f64) -> (f64, f64) {
    if x > 0.0 {
        return (log_gamma_unchecked(x), 1.0);
    }
    // Γ(x) Γ(1−x) = π / sin(πx)
    let s = (PI * x).sin();
    let lg = PI.ln() - s.abs().ln() - log_gamma_unchecked(1.0 - x);
    (lg, s.signum())
}

/// ₁F₁(α; β; −w) for w > KERNEL_ASYMPTOTIC_W:
/// Γ(β)/Γ(β−α) · w^{−α} · Σ_s (α)_s (α−β+1)_s / s! · w^{−s}.
fn kernel_asymptotic(alpha: f64, beta: f64, w: f64) -> Option<(f64, f64)> {
    let d = beta - alpha;
    if d <= 0.0 && d == d.floor() {
        // 1/Γ(β−α) = 0: only the e^{−w} part remains
        return (w > 745.0).then_some((0.0, 0.0));
    }
    let (lg_d, sign_d) = ln_abs_gamma_signed(d);
    // e^{−w} w^{α−β} Γ(β)/Γ(α) relative to the algebraic part
    let dropped = -w + (2.0 * alpha - beta) * w.ln() + lg_d - log_gamma_unchecked(alpha);
    if dropped > -40.0 {
        return None;
    }
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    let mut converged = false;
    for s in 0..200 {
        let sf = s as f64;
        let next = term * (alpha + sf) * (alpha - beta + 1.0 + sf) / ((sf + 1.0) * w);
        if next.abs() > term.abs() && s > 0 {
            break;
        }
        sum += next;
        term = next;
        if term.abs() <= f64::EPSILON * sum.abs() {
            converged = true;
            break;
        }
    }
    if !converged {
        return None;
    }
    let log_mag = log_gamma_unchecked(beta) - lg_d - alpha * w.ln();
    let v = sign_d * log_mag.exp() * sum;
    Some((v, 8.0 * f64::EPSILON * (1.0 + log_mag.abs()) * v.abs()))
}

/// The generalized-beta kernel ₁F₁(α; β; −p/(t(1−t))) with its error.
pub fn kernel(alpha: f64, beta: f64, p: f64, t: f64, omt: f64) -> Result<(f64, f64)> {
    if p == 0.0 {
        return Ok((1.0, 0.0));
    }
    let w = p / (t * omt);
    if w > KERNEL_ASYMPTOTIC_W {
        if let Some(v) = kernel_asymptotic(alpha, beta, w) {
            return Ok(v);
        }
    }
    let r = kummer_1f1(alpha, beta, -w, &EvalConfig { rel_tol: 1e-15, ..EvalConfig::default() })?;
    Ok((r.value, r.err_estimate))
}

/// Kernel values at every node, filled one level at a time on first use.
pub struct KernelTable {
    alpha: f64,
    beta: f64,
    p: f64,
    levels: Vec<OnceLock<Vec<(f64, f64)>>>,
}

impl KernelTable {
    fn new(alpha: f64, beta: f64, p: f64) -> Self {
        Self {
            alpha,
            beta,
            p,
            levels: (0..=MAX_LEVEL).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn level(&self, level: u32) -> &[(f64, f64)] {
        self.levels[level as usize].get_or_init(|| {
            level_nodes(level)
                .iter()
                .map(|n| kernel(self.alpha, self.beta, self.p, n.t, n.omt).unwrap_or((f64::NAN, f64::INFINITY)))
                .collect()
        })
    }
}

const CACHE_CAPACITY: usize = 1024;

/// Shared table for (α, β, p); identical keys always map to identical values,
/// so concurrent fills are harmless.
pub fn kernel_table(alpha: f64, beta: f64, p: f64) -> Arc<KernelTable> {
    static CACHE: OnceLock<Mutex<HashMap<(u64, u64, u64), Arc<KernelTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (alpha.to_bits(), beta.to_bits(), p.to_bits());
    let mut map = cache.lock().unwrap_or_else(|e| e.into_inner());
    if let Some(t) = map.get(&key) {
        return Arc::clone(t);
    }
    if map.len() >= CACHE_CAPACITY {
        map.clear();
    }
    let t = Arc::new(KernelTable::new(alpha, beta, p));
    map.insert(key, Arc::clone(&t));
    t
}

/// B_p^{(α,β)}(x,y) in raw and normalized (÷ B(x,y)) form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenBetaValue {
    pub raw: f64,
    pub normalized: f64,
    pub err_estimate: f64,
}

/// Quadrature engine for integrals weighted by the kernel of one (α, β, p).
#[derive(Clone)]
pub struct GenBetaEngine {
    table: Arc<KernelTable>,
    cfg: QuadConfig,
}

impl GenBetaEngine {
    pub fn new(alpha: f64, beta: f64, p: f64, cfg: &QuadConfig) -> Result<Self> {
        for (name, v) in [("alpha", alpha), ("beta", beta), ("p", p)] {
            require_finite(name, v)?;
        }
        if alpha <= 0.0 || beta <= 0.0 {
            return Err(domain(format!("requires alpha, beta > 0, got ({alpha}, {beta})")));
        }
        if p < 0.0 {
            return Err(domain(format!("requires p >= 0, got {p}")));
        }
        cfg.validate()?;
        Ok(Self { table: kernel_table(alpha, beta, p), cfg: *cfg })
    }

    pub fn for_params(ps: &ParamSet, cfg: &QuadConfig) -> Result<Self> {
        Self::new(ps.alpha, ps.beta, ps.p, cfg)
    }

    pub fn config(&self) -> &QuadConfig {
        &self.cfg
    }

    /// ∫₀¹ t^{x−1} (1−t)^{y−1} K(t) g(t, 1−t) dt for a bounded factor g.
    pub fn integrate(
        &self,
        x: f64,
        y: f64,
        g: impl Fn(f64, f64) -> f64,
        rel_tol: f64,
    ) -> Result<QuadOutcome> {
        if x <= 0.0 || y <= 0.0 {
            return Err(domain(format!("generalized beta requires x, y > 0, got ({x}, {y})")));
        }
        let cfg = self.cfg.with_tol(rel_tol);
        de_integrate(
            |level, i, n| {
                let (k, ke) = self.table.level(level)[i];
                let base = n.t.powf(x - 1.0) * n.omt.powf(y - 1.0) * g(n.t, n.omt);
                (base * k, (base * ke).abs())
            },
            (x - 1.0, y - 1.0),
            &cfg,
        )
    }

    pub fn gen_beta(&self, x: f64, y: f64) -> Result<GenBetaValue> {
        let out = self.integrate(x, y, |_, _| 1.0, self.cfg.rel_tol)?;
        let (raw, err) = into_pair(out, "generalized beta quadrature")?;
        let (bxy, _) = beta_with_err(x, y)?;
        let normalized = raw / bxy;
        Ok(GenBetaValue { raw, normalized, err_estimate: err })
    }
}

impl GenBetaSource for GenBetaEngine {
    fn gen_beta_raw(&self, x: f64, y: f64, rel_tol: f64) -> Result<(f64, f64)> {
        let out = self.integrate(x, y, |_, _| 1.0, rel_tol)?;
        Ok((out.value, out.err_estimate))
    }
}

/// B_p^{(α,β)}(x, y) = ∫₀¹ t^{x−1}(1−t)^{y−1} ₁F₁(α; β; −p/(t(1−t))) dt.
pub fn gen_beta(x: f64, y: f64, alpha: f64, beta: f64, p: f64, cfg: &QuadConfig) -> Result<GenBetaValue> {
    require_finite("x", x)?;
    require_finite("y", y)?;
    GenBetaEngine::new(alpha, beta, p, cfg)?.gen_beta(x, y)
}

/// 1 − z t, formed from whichever of t and 1 − t is small.
pub(crate) fn one_minus_zt(z: f64, t: f64, omt: f64) -> f64 {
    if t < 0.5 {
        1.0 - z * t
    } else {
        (1.0 - z) + z * omt
    }
}

fn finish_integral(out: QuadOutcome, b: f64, c: f64, what: &'static str) -> Result<EvalResult> {
    if !out.converged {
        return Err(HgError::NonConvergence { what, value: out.value, err: out.err_estimate });
    }
    let (bb, brel) = beta_with_err(b, c - b)?;
    let value = out.value / bb;
    let err = out.err_estimate / bb + value.abs() * brel;
    Ok(EvalResult {
        value,
        err_estimate: err,
        terms_used: out.nodes,
        method: Method::Quadrature,
        converged: true,
        cancellation: false,
    })
}

fn classical_check(b: f64, c: f64, z: f64) -> Result<()> {
    for (name, v) in [("b", b), ("c", c), ("z", z)] {
        require_finite(name, v)?;
    }
    if !(0.0 < b && b < c) {
        return Err(domain(format!("integral form requires 0 < b < c, got b={b}, c={c}")));
    }
    Ok(())
}

/// ₂F₁(a,b;c;z) = (1/B(b,c−b)) ∫₀¹ t^{b−1}(1−t)^{c−b−1}(1−zt)^{−a} dt.
pub fn gauss_2f1_integral(a: f64, b: f64, c: f64, z: f64, cfg: &QuadConfig) -> Result<EvalResult> {
    classical_check(b, c, z)?;
    require_finite("a", a)?;
    if a <= 0.0 {
        return Err(domain(format!("gauss_2f1_integral requires a > 0, got {a}")));
    }
    check_z_cap_for_quadrature(z)?;
    let out = integrate01_detailed(
        |t, omt| t.powf(b - 1.0) * omt.powf(c - b - 1.0) * one_minus_zt(z, t, omt).powf(-a),
        (b - 1.0, c - b - 1.0),
        cfg,
    )?;
    finish_integral(out, b, c, "2F1 integral")
}

/// ₁F₁(b;c;z) = (1/B(b,c−b)) ∫₀¹ u^{b−1}(1−u)^{c−b−1} e^{zu} du.
pub fn kummer_1f1_integral(b: f64, c: f64, z: f64, cfg: &QuadConfig) -> Result<EvalResult> {
    classical_check(b, c, z)?;
    let out = integrate01_detailed(
        |t, omt| t.powf(b - 1.0) * omt.powf(c - b - 1.0) * (z * t).exp(),
        (b - 1.0, c - b - 1.0),
        cfg,
    )?;
    finish_integral(out, b, c, "1F1 integral")
}

/// Integral form of ₂F₁^{(α,β;p)}(a, b; c; z).
pub fn gghf_integral(ps: &ParamSet, z: f64, cfg: &QuadConfig) -> Result<EvalResult> {
    ps.require_generalized(true)?;
    require_finite("z", z)?;
    check_z_cap_for_quadrature(z)?;
    let engine = GenBetaEngine::for_params(ps, cfg)?;
    let a = ps.a;
    let out = engine.integrate(ps.b, ps.c - ps.b, |t, omt| one_minus_zt(z, t, omt).powf(-a), cfg.rel_tol)?;
    finish_integral(out, ps.b, ps.c, "GGHF integral")
}

/// Integral form of ₁F₁^{(α,β;p)}(b; c; z).
pub fn gchf_integral(ps: &ParamSet, z: f64, cfg: &QuadConfig) -> Result<EvalResult> {
    ps.require_generalized(false)?;
    require_finite("z", z)?;
    let engine = GenBetaEngine::for_params(ps, cfg)?;
    let out = engine.integrate(ps.b, ps.c - ps.b, |t, _| (z * t).exp(), cfg.rel_tol)?;
    finish_integral(out, ps.b, ps.c, "GCHF integral")
}
