//! Power-series evaluation of ₂F₁, ₁F₁, their beta-function expansions and
//! the generalized series built from B_p^{(α,β)} coefficients.
//!
//! Every summation stops only once `consecutive_small` successive terms are
//! below `rel_tol` of the partial sum *and* the geometric tail bound
//! `|last| / (1 − r)` fits in the tolerance, where `r` is the larger of the
//! observed term ratio and the ratio's limit as n → ∞.

use crate::error::{domain, require_finite, HgError, Result};
use crate::params::ParamSet;
use crate::scalar::beta_with_err;

/// Largest |z| accepted for ₂F₁-type series.
pub const Z_CAP: f64 = 1.0 - 1e-6;

const RESCALE_ABOVE: f64 = 1e280;
const RESCALE_BY: f64 = 1e-280;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalConfig {
    pub rel_tol: f64,
    pub max_terms: usize,
    pub consecutive_small: usize,
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-12,
            max_terms: 1_000_000,
            consecutive_small: 3,
        }
    }
}

impl EvalConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.rel_tol < 1.0) {
            return Err(domain(format!("rel_tol must lie in (0,1), got {}", self.rel_tol)));
        }
        if self.max_terms == 0 || self.consecutive_small == 0 {
            return Err(domain("max_terms and consecutive_small must be >= 1"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Series,
    BetaSeries,
    Quadrature,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Series => "series",
            Method::BetaSeries => "beta_series",
            Method::Quadrature => "quadrature",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: f64,
    /// Absolute error estimate.
    pub err_estimate: f64,
    /// Series terms summed, or integrand evaluations for quadrature.
    pub terms_used: usize,
    pub method: Method,
    pub converged: bool,
    /// Set when Σ|term| exceeded the result by more than [`CANCELLATION_FACTOR`].
    pub cancellation: bool,
}

pub const CANCELLATION_FACTOR: f64 = 1e3;

impl EvalResult {
    pub(crate) fn finish(
        value: f64,
        err: f64,
        terms_used: usize,
        method: Method,
        truncated_ok: bool,
        abs_sum: f64,
        rel_tol: f64,
    ) -> Self {
        let within = if value == 0.0 { err <= rel_tol } else { err <= rel_tol * value.abs() };
        Self {
            value,
            err_estimate: err,
            terms_used,
            method,
            converged: truncated_ok && within,
            cancellation: abs_sum > CANCELLATION_FACTOR * value.abs(),
        }
    }
}

/// Raw outcome of a summation loop before scaling back.
struct Summed {
    sum: f64,
    abs_sum: f64,
    /// Σ (n+1)|t_n|: a term built by n recurrence steps carries ~n ulps.
    weighted_abs: f64,
    tail: f64,
    terms: usize,
    stopped: bool,
    /// The true sum is `sum * RESCALE_ABOVE^rescales`.
    rescales: i32,
}

impl Summed {
    /// exp(log_prefactor) · 1e280^rescales, without overflowing either factor.
    fn scale(&self, log_prefactor: f64) -> f64 {
        if self.rescales == 0 {
            log_prefactor.exp()
        } else {
            (log_prefactor - self.rescales as f64 * RESCALE_BY.ln()).exp()
        }
    }

    fn rounding(&self) -> f64 {
        2.0 * f64::EPSILON * self.weighted_abs + f64::EPSILON * self.sum.abs()
    }
}

/// Truncation test only: rounding error does not shrink with more terms,
/// so it enters the reported error but never keeps the loop running.
fn tail_ok(tail: f64, sum: f64, rel_tol: f64) -> bool {
    tail <= rel_tol * sum.abs()
}

/// Sums Σ t_n with t_0 = 1 and t_{n+1} = t_n · ratio(n).
fn sum_by_ratio(mut ratio: impl FnMut(usize) -> f64, limit_ratio: f64, cfg: &EvalConfig) -> Summed {
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    let mut abs_sum = 1.0f64;
    let mut weighted_abs = 1.0f64;
    let mut rescales = 0i32;
    let mut small = 0usize;
    let mut terms = 1usize;
    let all_positive = limit_ratio >= 0.0;
    let mut monotone = true;
    while terms < cfg.max_terms {
        let r = ratio(terms - 1);
        let next = term * r;
        let prev_sum = sum;
        sum += next;
        abs_sum += next.abs();
        weighted_abs += next.abs() * (terms + 1) as f64;
        terms += 1;
        if next < 0.0 {
            monotone = false;
        }
        if all_positive && monotone {
            debug_assert!(sum >= prev_sum, "partial sums of a positive series must not decrease");
        }
        if next.abs() <= cfg.rel_tol * sum.abs() {
            small += 1;
        } else {
            small = 0;
        }
        if small >= cfg.consecutive_small {
            let rb = r.abs().max(limit_ratio.abs());
            if rb < 1.0 {
                let tail = if next == 0.0 && r == 0.0 { 0.0 } else { next.abs() / (1.0 - rb) };
                if tail_ok(tail, sum, cfg.rel_tol) {
                    return Summed { sum, abs_sum, weighted_abs, tail, terms, stopped: true, rescales };
                }
            }
        }
        term = next;
        if sum.abs() > RESCALE_ABOVE || term.abs() > RESCALE_ABOVE {
            sum *= RESCALE_BY;
            term *= RESCALE_BY;
            abs_sum *= RESCALE_BY;
            weighted_abs *= RESCALE_BY;
            rescales += 1;
        }
    }
    let tail = term.abs();
    Summed { sum, abs_sum, weighted_abs, tail, terms, stopped: false, rescales }
}

fn check_z_cap(z: f64) -> Result<()> {
    if z.abs() >= 1.0 {
        return Err(domain(format!("series requires |z| < 1, got {z}")));
    }
    if z.abs() > Z_CAP {
        return Err(HgError::NonConvergence {
            what: "hypergeometric series with |z| > 1 - 1e-6",
            value: f64::NAN,
            err: f64::INFINITY,
        });
    }
    Ok(())
}

/// Integral forms accept |z| ≤ 1 − 1e−6 and treat anything beyond as a
/// domain violation.
pub(crate) fn check_z_cap_for_quadrature(z: f64) -> Result<()> {
    if z.abs() > Z_CAP {
        return Err(domain(format!("integral form requires |z| <= 1 - 1e-6, got {z}")));
    }
    Ok(())
}

/// ₂F₁(a, b; c; z) by power series, through the Pfaff transformation when
/// z < 0 and c > b.
pub fn gauss_2f1(a: f64, b: f64, c: f64, z: f64, cfg: &EvalConfig) -> Result<EvalResult> {
    cfg.validate()?;
    for (name, v) in [("a", a), ("b", b), ("c", c), ("z", z)] {
        require_finite(name, v)?;
    }
    if a <= 0.0 || b <= 0.0 || c <= 0.0 {
        return Err(domain(format!("gauss_2f1 requires a, b, c > 0, got ({a}, {b}, {c})")));
    }
    check_z_cap(z)?;
    if z == 0.0 {
        return Ok(EvalResult::finish(1.0, 0.0, 1, Method::Series, true, 1.0, cfg.rel_tol));
    }
    // Pfaff: ₂F₁(a, b; c; z) = (1−z)^{−a} ₂F₁(a, c−b; c; z/(z−1)) replaces
    // the alternating series by one with argument in (0, ½).
    let (b, arg, log_pre) = if z < 0.0 && c > b { (c - b, z / (z - 1.0), -a * (-z).ln_1p()) } else { (b, z, 0.0) };
    let s = sum_by_ratio(
        |n| {
            let n = n as f64;
            (a + n) * (b + n) / ((c + n) * (n + 1.0)) * arg
        },
        arg.abs(),
        cfg,
    );
    let scale = s.scale(log_pre);
    let value = s.sum * scale;
    let pre_err = if log_pre == 0.0 { 0.0 } else { (2.0 + log_pre.abs()) * f64::EPSILON * value.abs() };
    let err = (s.tail + s.rounding()) * scale + pre_err;
    Ok(EvalResult::finish(value, err, s.terms, Method::Series, s.stopped, s.abs_sum * scale, cfg.rel_tol))
}

/// ₁F₁(b; c; z). Negative arguments go through
/// ₁F₁(b; c; z) = e^z ₁F₁(c−b; c; −z).
pub fn kummer_1f1(b: f64, c: f64, z: f64, cfg: &EvalConfig) -> Result<EvalResult> {
    cfg.validate()?;
    for (name, v) in [("b", b), ("c", c), ("z", z)] {
        require_finite(name, v)?;
    }
    if b <= 0.0 || c <= 0.0 {
        return Err(domain(format!("kummer_1f1 requires b, c > 0, got ({b}, {c})")));
    }
    if z == 0.0 {
        return Ok(EvalResult::finish(1.0, 0.0, 1, Method::Series, true, 1.0, cfg.rel_tol));
    }
    let (num, arg, prefactor) = if z > 0.0 { (b, z, 0.0) } else { (c - b, -z, z) };
    let s = sum_by_ratio(
        |n| {
            let n = n as f64;
            (num + n) / ((c + n) * (n + 1.0)) * arg
        },
        0.0,
        cfg,
    );
    let scale = s.scale(prefactor);
    if !scale.is_finite() || (s.sum * scale).is_infinite() {
        return Err(HgError::Overflow(format!("1F1({b}; {c}; {z}) exceeds f64 range")));
    }
    let value = s.sum * scale;
    let exp_err = if s.rescales == 0 { 2.0 } else { 2.0 + prefactor.abs() + 700.0 * s.rescales as f64 };
    let err = (s.tail + s.rounding()) * scale + value.abs() * f64::EPSILON * exp_err;
    let mut res = EvalResult::finish(value, err, s.terms, Method::Series, s.stopped, s.abs_sum * scale, cfg.rel_tol);
    res.cancellation = s.abs_sum > CANCELLATION_FACTOR * s.sum.abs();
    Ok(res)
}

/// Error-tracked term generator for series whose terms are computed
/// individually rather than by a ratio recurrence.
struct TermSum {
    sum: f64,
    abs_sum: f64,
    term_err: f64,
    /// Largest |partial sum| seen so far; scales per-term error budgets.
    scale: f64,
}

/// Sums t_0 + t_1 + … where `term(n, scale)` returns (t_n, abs err of t_n)
/// and `scale` is the running magnitude of the partial sums.
fn sum_terms(
    mut term: impl FnMut(usize, f64) -> Result<(f64, f64)>,
    limit_ratio: f64,
    cfg: &EvalConfig,
) -> Result<(TermSum, f64, usize, bool)> {
    // Term errors may use half of rel_tol, so truncation gets a quarter.
    let trunc_tol = 0.25 * cfg.rel_tol;
    let (t0, e0) = term(0, 0.0)?;
    let mut st = TermSum { sum: t0, abs_sum: t0.abs(), term_err: e0, scale: t0.abs() };
    let mut prev = t0;
    let mut small = 0usize;
    let mut n = 1usize;
    while n < cfg.max_terms {
        let (t, e) = term(n, st.scale)?;
        st.sum += t;
        st.abs_sum += t.abs();
        st.term_err += e;
        st.scale = st.scale.max(st.sum.abs());
        n += 1;
        if t.abs() <= trunc_tol * st.sum.abs() {
            small += 1;
        } else {
            small = 0;
        }
        if small >= cfg.consecutive_small {
            let observed = if prev != 0.0 { (t / prev).abs() } else { 0.0 };
            let rb = observed.max(limit_ratio.abs());
            if rb < 1.0 {
                let tail = t.abs() / (1.0 - rb);
                if tail_ok(tail, st.sum, trunc_tol) {
                    return Ok((st, tail, n, true));
                }
            }
        }
        prev = t;
    }
    let tail = prev.abs();
    Ok((st, tail, n, false))
}

fn finish_terms(st: TermSum, tail: f64, n: usize, stopped: bool, method: Method, cfg: &EvalConfig) -> EvalResult {
    let err = tail + st.term_err + 2.0 * f64::EPSILON * st.abs_sum;
    EvalResult::finish(st.sum, err, n, method, stopped, st.abs_sum, cfg.rel_tol)
}

/// ₂F₁ via (1/B(b,c−b)) Σ (a)_n B(b+n, c−b) zⁿ/n!, with each beta value
/// taken from the log-gamma route rather than a ratio recurrence.
pub fn gauss_2f1_beta_expansion(a: f64, b: f64, c: f64, z: f64, cfg: &EvalConfig) -> Result<EvalResult> {
    cfg.validate()?;
    for (name, v) in [("a", a), ("b", b), ("c", c), ("z", z)] {
        require_finite(name, v)?;
    }
    if a <= 0.0 || !(0.0 < b && b < c) {
        return Err(domain(format!(
            "gauss_2f1_beta_expansion requires a > 0 and 0 < b < c, got ({a}, {b}, {c})"
        )));
    }
    check_z_cap(z)?;
    let (b0, b0_rel) = beta_with_err(b, c - b)?;
    let mut coef = 1.0f64;
    let (st, tail, n, stopped) = sum_terms(
        |n, _| {
            if n > 0 {
                coef *= (a + (n - 1) as f64) * z / n as f64;
            }
            if coef == 0.0 {
                return Ok((0.0, 0.0));
            }
            let (bn, bn_rel) = beta_with_err(b + n as f64, c - b)?;
            let t = coef * (bn / b0);
            Ok((t, t.abs() * (bn_rel + b0_rel + (n as f64 + 2.0) * f64::EPSILON)))
        },
        z.abs(),
        cfg,
    )?;
    Ok(finish_terms(st, tail, n, stopped, Method::BetaSeries, cfg))
}

/// ₁F₁ via (1/B(b,c−b)) Σ B(b+n, c−b) zⁿ/n!.
pub fn kummer_1f1_beta_expansion(b: f64, c: f64, z: f64, cfg: &EvalConfig) -> Result<EvalResult> {
    cfg.validate()?;
    for (name, v) in [("b", b), ("c", c), ("z", z)] {
        require_finite(name, v)?;
    }
    if !(0.0 < b && b < c) {
        return Err(domain(format!("kummer_1f1_beta_expansion requires 0 < b < c, got ({b}, {c})")));
    }
    let (b0, b0_rel) = beta_with_err(b, c - b)?;
    let mut coef = 1.0f64;
    let (st, tail, n, stopped) = sum_terms(
        |n, _| {
            if n > 0 {
                coef *= z / n as f64;
            }
            if coef == 0.0 {
                return Ok((0.0, 0.0));
            }
            let (bn, bn_rel) = beta_with_err(b + n as f64, c - b)?;
            let t = coef * (bn / b0);
            Ok((t, t.abs() * (bn_rel + b0_rel + (n as f64 + 2.0) * f64::EPSILON)))
        },
        0.0,
        cfg,
    )?;
    Ok(finish_terms(st, tail, n, stopped, Method::BetaSeries, cfg))
}

/// Supplies B_p^{(α,β)}(x, y) for one fixed (α, β, p).
pub trait GenBetaSource {
    /// Returns (value, absolute error) with relative accuracy near `rel_tol`.
    fn gen_beta_raw(&self, x: f64, y: f64, rel_tol: f64) -> Result<(f64, f64)>;
}

impl<F> GenBetaSource for F
where
    F: Fn(f64, f64, f64) -> Result<(f64, f64)>,
{
    fn gen_beta_raw(&self, x: f64, y: f64, rel_tol: f64) -> Result<(f64, f64)> {
        self(x, y, rel_tol)
    }
}

/// Smallest relative tolerance requested from a generalized-beta source.
pub const MIN_TERM_TOL: f64 = 1e-14;
const MAX_TERM_TOL: f64 = 1e-3;

/// Per-term tolerance: term n may contribute at most
/// ½·rel_tol·scale/(n+2)² of absolute error, which sums to below
/// rel_tol·scale over all n.
fn term_tolerance(n: usize, estimate: f64, scale: f64, rel_tol: f64) -> f64 {
    let k = (n + 2) as f64;
    if n == 0 || scale == 0.0 {
        return (0.5 * rel_tol / (k * k)).clamp(MIN_TERM_TOL, MAX_TERM_TOL);
    }
    if estimate == 0.0 {
        return MAX_TERM_TOL;
    }
    (0.5 * rel_tol * scale / (k * k * estimate)).clamp(MIN_TERM_TOL, MAX_TERM_TOL)
}

fn generalized_series(
    ps: &ParamSet,
    z: f64,
    source: &dyn GenBetaSource,
    cfg: &EvalConfig,
    with_a: bool,
    limit_ratio: f64,
) -> Result<EvalResult> {
    let (b, c) = (ps.b, ps.c);
    let (b0, b0_rel) = beta_with_err(b, c - b)?;
    let mut coef = 1.0f64;
    let mut last_raw = f64::NAN;
    let (st, tail, n, stopped) = sum_terms(
        |n, scale| {
            if n > 0 {
                let grow = if with_a { ps.a + (n - 1) as f64 } else { 1.0 };
                coef *= grow * z / n as f64;
            }
            if coef == 0.0 || (n > 0 && z == 0.0) {
                return Ok((0.0, 0.0));
            }
            let estimate = if last_raw.is_finite() { (coef * last_raw / b0).abs() } else { 0.0 };
            let tol = term_tolerance(n, estimate, scale, cfg.rel_tol);
            let (raw, raw_err) = source.gen_beta_raw(b + n as f64, c - b, tol)?;
            last_raw = raw;
            let t = coef * raw / b0;
            let err = (coef / b0).abs() * raw_err + t.abs() * (b0_rel + (n as f64 + 2.0) * f64::EPSILON);
            Ok((t, err))
        },
        limit_ratio,
        cfg,
    )?;
    Ok(finish_terms(st, tail, n, stopped, Method::Series, cfg))
}

/// Generalized Gauss hypergeometric function
/// ₂F₁^{(α,β;p)}(a, b; c; z) = (1/B(b,c−b)) Σ (a)_n B_p^{(α,β)}(b+n, c−b) zⁿ/n!.
/// Negative z is summed as (1−z)^{−a} ₂F₁^{(α,β;p)}(a, c−b; c; z/(z−1)).
pub fn gghf_series(ps: &ParamSet, z: f64, source: &dyn GenBetaSource, cfg: &EvalConfig) -> Result<EvalResult> {
    cfg.validate()?;
    ps.require_generalized(true)?;
    require_finite("z", z)?;
    check_z_cap(z)?;
    if z >= 0.0 {
        return generalized_series(ps, z, source, cfg, true, z.abs());
    }
    // Pfaff's transformation, valid because the kernel is symmetric.
    let reflected = ParamSet { b: ps.c - ps.b, ..*ps };
    let w = z / (z - 1.0);
    let r = generalized_series(&reflected, w, source, cfg, true, w)?;
    let log_pre = -ps.a * (-z).ln_1p();
    let pre = log_pre.exp();
    let value = pre * r.value;
    Ok(EvalResult {
        value,
        err_estimate: pre * r.err_estimate + (2.0 + log_pre.abs()) * f64::EPSILON * value.abs(),
        ..r
    })
}

/// Generalized confluent function
/// ₁F₁^{(α,β;p)}(b; c; z) = (1/B(b,c−b)) Σ B_p^{(α,β)}(b+n, c−b) zⁿ/n!.
/// Negative z is summed as e^z ₁F₁^{(α,β;p)}(c−b; c; −z).
pub fn gchf_series(ps: &ParamSet, z: f64, source: &dyn GenBetaSource, cfg: &EvalConfig) -> Result<EvalResult> {
    cfg.validate()?;
    ps.require_generalized(false)?;
    require_finite("z", z)?;
    if z >= 0.0 {
        return generalized_series(ps, z, source, cfg, false, 0.0);
    }
    // The kernel is symmetric under t ↔ 1−t, so Kummer's transformation
    // carries over and the alternating series is never summed.
    let reflected = ParamSet { b: ps.c - ps.b, ..*ps };
    let r = generalized_series(&reflected, -z, source, cfg, false, 0.0)?;
    let ez = z.exp();
    let value = ez * r.value;
    Ok(EvalResult {
        value,
        err_estimate: ez * r.err_estimate + 2.0 * f64::EPSILON * (1.0 + z.abs()) * value.abs(),
        ..r
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{beta, ln_pochhammer};

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    /// Exact B(x,y) as a stand-in generalized-beta source (the p = 0 case).
    fn classical_source(x: f64, y: f64, _tol: f64) -> Result<(f64, f64)> {
        let (v, r) = beta_with_err(x, y)?;
        Ok((v, v * r))
    }

    #[test]
    fn gauss_examples() {
        let r = gauss_2f1(1.3, 0.4, 2.2, 0.0, &cfg()).unwrap();
        assert_eq!(r.value, 1.0);
        let r = gauss_2f1(1.0, 1.0, 2.0, 0.5, &cfg()).unwrap();
        assert!(r.converged);
        assert!(rel(r.value, 2.0 * 2f64.ln()) < 1e-12);
        assert!((r.value - 2.0 * 2f64.ln()).abs() <= r.err_estimate);
        let r = gauss_2f1(0.5, 2.0, 2.0, 0.25, &cfg()).unwrap();
        assert!(rel(r.value, 0.75f64.powf(-0.5)) < 1e-13);
    }

    #[test]
    fn gauss_errors() {
        assert!(matches!(gauss_2f1(0.0, 1.0, 1.0, 0.1, &cfg()), Err(HgError::Domain(_))));
        assert!(matches!(gauss_2f1(1.0, 1.0, 1.0, 1.0, &cfg()), Err(HgError::Domain(_))));
        assert!(matches!(
            gauss_2f1(1.0, 1.0, 2.0, 1.0 - 1e-7, &cfg()),
            Err(HgError::NonConvergence { .. })
        ));
        let tight = EvalConfig { max_terms: 5, ..cfg() };
        let r = gauss_2f1(1.0, 1.0, 2.0, 0.9, &tight).unwrap();
        assert!(!r.converged);
        assert!(r.terms_used <= 5);
    }

    #[test]
    fn gauss_negative_z() {
        // 2F1(1,1;2;z) = -ln(1-z)/z
        let z = -0.8;
        let r = gauss_2f1(1.0, 1.0, 2.0, z, &cfg()).unwrap();
        assert!(rel(r.value, -(1.0 - z).ln() / z) < 1e-13);
    }

    #[test]
    fn term_recurrence_matches_direct_terms() {
        let (a, b, c, z) = (0.7f64, 1.9f64, 2.6f64, 0.83f64);
        for &n in &[1u64, 10, 100] {
            let mut t = 1.0f64;
            for k in 0..n {
                let k = k as f64;
                t *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
            }
            let direct = (ln_pochhammer(a, n).unwrap() + ln_pochhammer(b, n).unwrap()
                - ln_pochhammer(c, n).unwrap()
                - ln_pochhammer(1.0, n).unwrap()
                + n as f64 * z.ln())
            .exp();
            assert!(rel(t, direct) < 1e-12, "n={n}");
        }
    }

    #[test]
    fn kummer_examples() {
        assert_eq!(kummer_1f1(2.0, 3.0, 0.0, &cfg()).unwrap().value, 1.0);
        let r = kummer_1f1(2.0, 2.0, 1.0, &cfg()).unwrap();
        assert!(rel(r.value, std::f64::consts::E) < 1e-14);
        let r = kummer_1f1(1.0, 2.0, 1.0, &cfg()).unwrap();
        assert!(rel(r.value, std::f64::consts::E - 1.0) < 1e-13);
        assert!(kummer_1f1(0.0, 2.0, 1.0, &cfg()).is_err());
    }

    #[test]
    fn kummer_large_negative_argument() {
        // 1F1(1;2;-w) = (1 - e^{-w})/w
        for &w in &[0.5, 4.0, 30.0, 200.0, 700.0, 2000.0] {
            let r = kummer_1f1(1.0, 2.0, -w, &cfg()).unwrap();
            let exact = -(-w).exp_m1() / w;
            assert!(rel(r.value, exact) < 1e-12, "w={w}: {} vs {exact}", r.value);
            assert!((r.value - exact).abs() <= r.err_estimate, "w={w}");
            // ~w ulps accumulate through the recurrence
            assert_eq!(r.converged, w <= 200.0, "w={w}");
            assert!(!r.cancellation);
        }
        // b = c: e^z exactly
        let r = kummer_1f1(1.5, 1.5, -40.0, &cfg()).unwrap();
        assert!(rel(r.value, (-40f64).exp()) < 1e-13);
    }

    #[test]
    fn kummer_negative_with_b_above_c() {
        // 1F1(3;1;z) = e^z (1 + 2|z|... ) Laguerre: 1F1(-2;1;x) = 1 - 2x + x²/2
        let z = -2.5f64;
        let x = -z;
        let expected = z.exp() * (1.0 - 2.0 * x + x * x / 2.0);
        let r = kummer_1f1(3.0, 1.0, z, &cfg()).unwrap();
        assert!((r.value - expected).abs() < 1e-14, "{} vs {expected}", r.value);
    }

    #[test]
    fn beta_expansion_matches_direct() {
        let a = gauss_2f1(1.0, 1.0, 2.0, 0.5, &cfg()).unwrap();
        let b = gauss_2f1_beta_expansion(1.0, 1.0, 2.0, 0.5, &cfg()).unwrap();
        assert!((a.value - b.value).abs() <= 10.0 * (a.err_estimate + b.err_estimate));
        let a = gauss_2f1(0.5, 1.0, 3.0, 0.3, &cfg()).unwrap();
        let b = gauss_2f1_beta_expansion(0.5, 1.0, 3.0, 0.3, &cfg()).unwrap();
        assert!((a.value - b.value).abs() <= 10.0 * (a.err_estimate + b.err_estimate));
        assert_eq!(gauss_2f1_beta_expansion(2.0, 1.0, 3.0, 0.0, &cfg()).unwrap().value, 1.0);
        let k = kummer_1f1(1.5, 4.0, -3.0, &cfg()).unwrap();
        let kb = kummer_1f1_beta_expansion(1.5, 4.0, -3.0, &cfg()).unwrap();
        assert!((k.value - kb.value).abs() <= 10.0 * (k.err_estimate + kb.err_estimate));
    }

    #[test]
    fn generalized_with_classical_source_reduces() {
        let ps = ParamSet::new(1.7, 0.8, 2.1, 1.0, 2.0, 0.0);
        for &z in &[-0.6, 0.0, 0.4, 0.9] {
            let g = gghf_series(&ps, z, &classical_source, &cfg()).unwrap();
            let f = gauss_2f1(ps.a, ps.b, ps.c, z, &cfg()).unwrap();
            assert!(rel(g.value, f.value) < 1e-12, "z={z}");
        }
        for &z in &[-3.0, 0.0, 1.0, 6.0] {
            let g = gchf_series(&ps, z, &classical_source, &cfg()).unwrap();
            let f = kummer_1f1(ps.b, ps.c, z, &cfg()).unwrap();
            assert!(rel(g.value, f.value) < 1e-11, "z={z}");
        }
    }

    #[test]
    fn generalized_at_zero_is_normalized_beta() {
        let ps = ParamSet::new(1.0, 1.2, 3.0, 1.0, 2.0, 0.3);
        let src = |x: f64, y: f64, _t: f64| Ok((0.5 * beta(x, y)?, 0.0));
        let g = gchf_series(&ps, 0.0, &src, &cfg()).unwrap();
        assert_eq!(g.value, 0.5 * beta(1.2, 1.8).unwrap() / beta(1.2, 1.8).unwrap());
        assert_eq!(g.terms_used, 1.max(g.terms_used));
    }

    #[test]
    fn generalized_rejects_bad_params() {
        let bad = ParamSet::new(1.0, 2.0, 2.0, 1.0, 2.0, 0.1);
        assert!(gchf_series(&bad, 0.5, &classical_source, &cfg()).is_err());
        let neg_p = ParamSet::new(1.0, 1.0, 2.0, 1.0, 2.0, -0.1);
        assert!(gghf_series(&neg_p, 0.5, &classical_source, &cfg()).is_err());
    }

    #[test]
    fn reflected_generalized_series_match_integrals() {
        use crate::quadrature::{gchf_integral, gghf_integral, GenBetaEngine, QuadConfig};
        let q = QuadConfig::default();
        let ps = ParamSet::new(2.3, 3.1, 4.0, 0.8, 2.6, 0.7);
        let eng = GenBetaEngine::for_params(&ps, &q).unwrap();
        for &z in &[-0.95, -0.5, -0.05] {
            let s = gghf_series(&ps, z, &eng, &cfg()).unwrap();
            let i = gghf_integral(&ps, z, &q).unwrap();
            assert!(s.converged && rel(s.value, i.value) < 1e-11, "z={z}: {s:?} {i:?}");
        }
        for &z in &[-40.0, -8.0, -0.3] {
            let s = gchf_series(&ps, z, &eng, &cfg()).unwrap();
            let i = gchf_integral(&ps, z, &q).unwrap();
            assert!(s.converged && rel(s.value, i.value) < 1e-10, "z={z}: {s:?} {i:?}");
        }
    }
}
