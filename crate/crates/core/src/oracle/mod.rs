//! Slow, independent reference evaluators.
//!
//! Nothing here shares an evaluation path with the production modules:
//! series terms are rebuilt from log-domain Pochhammer symbols on every
//! index with no ratio recurrence, and every integral is a composite
//! midpoint rule on (0, 1). Goldens minted from these live in [`golden`].

pub mod golden;

use rayon::prelude::*;

use crate::error::{domain, HgError, Result};
use crate::params::ParamSet;
use crate::scalar::{beta, ln_pochhammer, log_gamma};
use crate::sum::CompensatedSum;

pub const DEFAULT_SERIES_TERMS: u64 = 100_000;
pub const DEFAULT_QUAD_NODES: u64 = 10_000_000;

/// Largest ln|term| accepted before reporting overflow.
const LN_MAX: f64 = 709.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    Gauss2F1,
    Kummer1F1,
    Gghf,
    Gchf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuadKind {
    Gauss2F1Int,
    Kummer1F1Int,
    /// B_p^{(α,β)}(b, c−b): the (x, y) pair is read from (b, c − b).
    GenBeta,
    GghfInt,
    GchfInt,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleResult {
    pub value: f64,
    pub method_note: String,
    /// Terms summed or midpoint nodes used.
    pub resolution: u64,
}

fn ln_term_checked(ln: f64) -> Result<f64> {
    if ln > LN_MAX {
        return Err(HgError::Overflow(format!("oracle term e^{ln:.1} exceeds f64 range")));
    }
    Ok(ln.exp())
}

fn ln_factorial(n: u64) -> f64 {
    if n < 2 {
        0.0
    } else {
        log_gamma(n as f64 + 1.0).unwrap_or(f64::NAN)
    }
}

/// Σ_{n<N} (a)_n (b)_n/(c)_n zⁿ/n!, each term formed independently.
fn plain_2f1(a: f64, b: f64, c: f64, z: f64, n_terms: u64) -> Result<f64> {
    let mut s = CompensatedSum::new();
    let lz = z.abs().ln();
    for n in 0..n_terms {
        if z == 0.0 && n > 0 {
            break;
        }
        let ln = ln_pochhammer(a, n)? + ln_pochhammer(b, n)? - ln_pochhammer(c, n)? - ln_factorial(n)
            + if n == 0 { 0.0 } else { n as f64 * lz };
        let sign = if z < 0.0 && n % 2 == 1 { -1.0 } else { 1.0 };
        s.add(sign * ln_term_checked(ln)?);
    }
    Ok(s.value())
}

/// Σ_{n<N} (b)_n/(c)_n xⁿ/n! e^{shift} for x ≥ 0, each term in the log domain.
fn plain_1f1_nonneg(b: f64, c: f64, x: f64, shift: f64, n_terms: u64) -> Result<f64> {
    let mut s = CompensatedSum::new();
    let lx = x.ln();
    for n in 0..n_terms {
        if x == 0.0 && n > 0 {
            break;
        }
        let ln = shift + ln_pochhammer(b, n)? - ln_pochhammer(c, n)? - ln_factorial(n)
            + if n == 0 { 0.0 } else { n as f64 * lx };
        s.add(ln_term_checked(ln)?);
    }
    Ok(s.value())
}

/// ₁F₁(b; c; z), summing e^z ₁F₁(c−b; c; −z) when z < 0.
fn plain_1f1(b: f64, c: f64, z: f64, n_terms: u64) -> Result<f64> {
    if z >= 0.0 {
        return plain_1f1_nonneg(b, c, z, 0.0, n_terms);
    }
    let q = c - b;
    if q == 0.0 {
        return Ok(z.exp());
    }
    if q < 0.0 {
        return Err(domain("oracle 1F1 with z < 0 needs c >= b"));
    }
    plain_1f1_nonneg(q, c, -z, z, n_terms)
}

const KERNEL_TABLE_LEN: usize = 1 << 14;

/// The kernel ₁F₁(α; β; −w) by the Kummer-safe log-domain series
/// e^{−w} Σ (β−α)_n/(β)_n wⁿ/n!, summed over the window of indices whose
/// terms lie within e^{−50} of the peak. ln (β−α)_n − ln (β)_n − ln n! is
/// tabulated once per parameter pair for small n.
struct OracleKernel {
    beta: f64,
    q: f64,
    lg_q: f64,
    lg_b: f64,
    table: Vec<f64>,
}

impl OracleKernel {
    fn new(alpha: f64, beta_: f64) -> Self {
        let q = beta_ - alpha;
        let lg_q = if q > 0.0 { log_gamma(q).unwrap_or(f64::NAN) } else { 0.0 };
        let lg_b = log_gamma(beta_).unwrap_or(f64::NAN);
        let mut k = OracleKernel { beta: beta_, q, lg_q, lg_b, table: Vec::new() };
        if q > 0.0 {
            k.table = (0..KERNEL_TABLE_LEN as u64).map(|n| k.ln_coef_direct(n)).collect();
        }
        k
    }

    fn ln_coef_direct(&self, n: u64) -> f64 {
        let nf = n as f64;
        (log_gamma(self.q + nf).unwrap_or(f64::NAN) - self.lg_q)
            - (log_gamma(self.beta + nf).unwrap_or(f64::NAN) - self.lg_b)
            - ln_factorial(n)
    }

    fn eval(&self, w: f64) -> f64 {
        if w == 0.0 {
            return 1.0;
        }
        let (q, beta_) = (self.q, self.beta);
        if q == 0.0 {
            return (-w).exp();
        }
        // peak: smallest n with (q+n) w ≤ (β+n)(n+1)
        let bq = beta_ + 1.0 - w;
        let disc = bq * bq - 4.0 * (beta_ - q * w);
        let peak = if disc > 0.0 { ((-bq + disc.sqrt()) / 2.0).max(0.0) } else { 0.0 };
        let half = 12.0 * (peak + w).sqrt() + 60.0;
        let lo = (peak - half).max(0.0) as u64;
        let hi = (peak + half) as u64 + 1;
        let lw = w.ln();
        let mut s = 0.0f64;
        let mut comp = 0.0f64;
        for n in lo..=hi {
            let coef = match self.table.get(n as usize) {
                Some(&c) => c,
                None => self.ln_coef_direct(n),
            };
            let ln = -w + coef + if n == 0 { 0.0 } else { n as f64 * lw };
            let v = ln.exp();
            let t = s + v;
            comp += if s.abs() >= v.abs() { (s - t) + v } else { (v - t) + s };
            s = t;
        }
        s + comp
    }
}

#[cfg(test)]
fn oracle_kernel(alpha: f64, beta_: f64, w: f64) -> f64 {
    OracleKernel::new(alpha, beta_).eval(w)
}

const CHUNK: u64 = 1 << 16;

/// Composite midpoint rule for ∫₀¹ f(t) dt with n nodes, summed in fixed
/// chunks so the result does not depend on the thread count.
fn midpoint(n: u64, f: impl Fn(f64) -> f64 + Sync) -> Result<f64> {
    if n == 0 {
        return Err(domain("midpoint rule needs at least one node"));
    }
    let h = 1.0 / n as f64;
    let chunks: Vec<u64> = (0..n.div_ceil(CHUNK)).collect();
    let partial: Vec<(f64, bool)> = chunks
        .par_iter()
        .map(|&k| {
            let mut s = CompensatedSum::new();
            let mut finite = true;
            for i in k * CHUNK..((k + 1) * CHUNK).min(n) {
                let v = f((i as f64 + 0.5) * h);
                finite &= v.is_finite();
                s.add(v);
            }
            (s.value(), finite)
        })
        .collect();
    if partial.iter().any(|(_, ok)| !ok) {
        return Err(domain("oracle integrand not finite at a midpoint node"));
    }
    let total: CompensatedSum = partial.into_iter().map(|(v, _)| v).collect();
    Ok(total.value() * h)
}

fn need_beta_split(ps: &ParamSet) -> Result<()> {
    if !(0.0 < ps.b && ps.b < ps.c) {
        return Err(domain(format!("oracle needs 0 < b < c, got b={}, c={}", ps.b, ps.c)));
    }
    Ok(())
}

fn need_kernel_params(ps: &ParamSet) -> Result<()> {
    if ps.alpha <= 0.0 || ps.beta < ps.alpha || ps.p < 0.0 {
        return Err(domain("oracle kernel needs 0 < alpha <= beta and p >= 0"));
    }
    Ok(())
}

fn kernel_at(k: &OracleKernel, ps: &ParamSet, t: f64) -> f64 {
    if ps.p == 0.0 {
        1.0
    } else {
        k.eval(ps.p / (t * (1.0 - t)))
    }
}

/// Coefficients (a)_n zⁿ/n! (or zⁿ/n! without a) down to 1e−22 relative.
fn generalized_coefficients(a: Option<f64>, z: f64) -> Result<Vec<f64>> {
    let mut coefs = Vec::new();
    let lz = z.abs().ln();
    let mut peak = 0.0f64;
    for n in 0u64..200_000 {
        if z == 0.0 && n > 0 {
            break;
        }
        let ln_a = match a {
            Some(a) => ln_pochhammer(a, n)?,
            None => 0.0,
        };
        let ln = ln_a - ln_factorial(n) + if n == 0 { 0.0 } else { n as f64 * lz };
        let sign = if z < 0.0 && n % 2 == 1 { -1.0 } else { 1.0 };
        let v = sign * ln_term_checked(ln)?;
        peak = peak.max(v.abs());
        coefs.push(v);
        if n > 10 && v.abs() < 1e-22 * peak {
            break;
        }
    }
    Ok(coefs)
}

/// Reference sum of the defining series of `kind`.
///
/// For `Gghf`/`Gchf` every coefficient B_p^{(α,β)}(b+n, c−b) is a midpoint
/// integral with `resolution` nodes; the term count then follows from the
/// decay of (a)_n zⁿ/n!. For the classical kinds `resolution` is the
/// number of terms.
pub fn oracle_series(kind: SeriesKind, ps: &ParamSet, z: f64, resolution: u64) -> Result<OracleResult> {
    match kind {
        SeriesKind::Gauss2F1 => {
            if z.abs() >= 1.0 {
                return Err(domain("oracle 2F1 series needs |z| < 1"));
            }
            Ok(OracleResult {
                value: plain_2f1(ps.a, ps.b, ps.c, z, resolution)?,
                method_note: "direct sum, log-domain pochhammer per term".into(),
                resolution,
            })
        }
        SeriesKind::Kummer1F1 => Ok(OracleResult {
            value: plain_1f1(ps.b, ps.c, z, resolution)?,
            method_note: "direct sum, log-domain pochhammer per term, e^z 1F1(c-b;c;-z) for z<0".into(),
            resolution,
        }),
        SeriesKind::Gghf | SeriesKind::Gchf => {
            need_beta_split(ps)?;
            need_kernel_params(ps)?;
            let with_a = kind == SeriesKind::Gghf;
            if with_a && z.abs() >= 1.0 {
                return Err(domain("oracle GGHF series needs |z| < 1"));
            }
            let coefs = generalized_coefficients(with_a.then_some(ps.a), z)?;
            let kern = OracleKernel::new(ps.alpha, ps.beta);
            let (b, d) = (ps.b, ps.c - ps.b);
            // Σ_n coef_n ∫ t^{b+n-1}(1-t)^{d-1} K dt, accumulated node by node
            let raw = midpoint(resolution, |t| {
                let weight = t.powf(b - 1.0) * (1.0 - t).powf(d - 1.0) * kernel_at(&kern, ps, t);
                let mut s = CompensatedSum::new();
                let mut tn = 1.0f64;
                for c in &coefs {
                    s.add(c * tn);
                    tn *= t;
                    if tn == 0.0 {
                        break;
                    }
                }
                weight * s.value()
            })?;
            Ok(OracleResult {
                value: raw / beta(b, d)?,
                method_note: format!(
                    "{} coefficients, each generalized beta by midpoint rule",
                    coefs.len()
                ),
                resolution,
            })
        }
    }
}

/// Reference midpoint-rule value of the integral representation `kind`.
pub fn oracle_quad(kind: QuadKind, ps: &ParamSet, z: f64, n_nodes: u64) -> Result<OracleResult> {
    need_beta_split(ps)?;
    let (a, b, d) = (ps.a, ps.b, ps.c - ps.b);
    let base = move |t: f64| t.powf(b - 1.0) * (1.0 - t).powf(d - 1.0);
    let norm = beta(b, d)?;
    let kern = OracleKernel::new(ps.alpha, ps.beta);
    let (value, note) = match kind {
        QuadKind::Gauss2F1Int => {
            if z.abs() >= 1.0 {
                return Err(domain("oracle 2F1 integral needs |z| < 1"));
            }
            (midpoint(n_nodes, |t| base(t) * (1.0 - z * t).powf(-a))? / norm, "midpoint, 2F1 Euler integral")
        }
        QuadKind::Kummer1F1Int => (midpoint(n_nodes, |t| base(t) * (z * t).exp())? / norm, "midpoint, 1F1 Euler integral"),
        QuadKind::GenBeta => {
            need_kernel_params(ps)?;
            (midpoint(n_nodes, |t| base(t) * kernel_at(&kern, ps, t))?, "midpoint, generalized beta (x=b, y=c-b)")
        }
        QuadKind::GghfInt => {
            need_kernel_params(ps)?;
            if z.abs() >= 1.0 {
                return Err(domain("oracle GGHF integral needs |z| < 1"));
            }
            (
                midpoint(n_nodes, |t| base(t) * (1.0 - z * t).powf(-a) * kernel_at(&kern, ps, t))? / norm,
                "midpoint, GGHF integral",
            )
        }
        QuadKind::GchfInt => {
            need_kernel_params(ps)?;
            (
                midpoint(n_nodes, |t| base(t) * (z * t).exp() * kernel_at(&kern, ps, t))? / norm,
                "midpoint, GCHF integral",
            )
        }
    };
    Ok(OracleResult { value, method_note: note.into(), resolution: n_nodes })
}

/// Both sides of the discrete Grüss inequality by double loops, with the
/// bounds taken as the extremes of the sequences:
/// lhs = ½|Σ_i Σ_j m_i m_j (x_i − x_j)(y_i − y_j)|,
/// rhs = ¼ (Σ_i Σ_j m_i m_j)(max x − min x)(max y − min y).
pub fn oracle_gruss(x: &[f64], y: &[f64], m: &[f64]) -> Result<(f64, f64)> {
    if x.len() != y.len() || x.len() != m.len() {
        return Err(domain(format!(
            "sequence lengths differ: x {}, y {}, m {}",
            x.len(),
            y.len(),
            m.len()
        )));
    }
    if x.is_empty() {
        return Err(domain("sequences must be non-empty"));
    }
    let span = |v: &[f64]| {
        let lo = v.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = v.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        hi - lo
    };
    let mut cross = CompensatedSum::new();
    let mut mass = CompensatedSum::new();
    for i in 0..x.len() {
        for j in 0..x.len() {
            let mm = m[i] * m[j];
            cross.add(mm * (x[i] - x[j]) * (y[i] - y[j]));
            mass.add(mm);
        }
    }
    Ok((0.5 * cross.value().abs(), 0.25 * mass.value() * span(x) * span(y)))
}
