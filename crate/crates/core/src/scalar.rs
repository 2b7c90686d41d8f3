//! Gamma, beta, Pochhammer and the envelope constants λ and θ.
//!
//! `log_gamma` shifts its argument above [`STIRLING_MIN`] with the upward
//! recurrence and then applies Stirling's series with seven Bernoulli
//! corrections. Near the zeros of ln Γ at 1 and 2 a Taylor expansion in
//! ζ(k) is used instead so the result keeps full relative accuracy.

use crate::error::{domain, require_finite, Result};

const STIRLING_MIN: f64 = 10.0;

/// ½ ln(2π)
const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// B_{2k} / (2k (2k-1)) for k = 1..=7.
const STIRLING_COEFFS: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
];

/// ζ(k) for k = 2..=30.
const ZETA: [f64; 29] = [
    1.644_934_066_848_226_4,
    1.202_056_903_159_594_3,
    1.082_323_233_711_138_2,
    1.036_927_755_143_370_0,
    1.017_343_061_984_449_1,
    1.008_349_277_381_922_8,
    1.004_077_356_197_944_3,
    1.002_008_392_826_082_2,
    1.000_994_575_127_818_1,
    1.000_494_188_604_119_5,
    1.000_246_086_553_308_0,
    1.000_122_713_347_578_5,
    1.000_061_248_135_058_7,
    1.000_030_588_236_307_0,
    1.000_015_282_259_408_7,
    1.000_007_637_197_637_9,
    1.000_003_817_293_265_0,
    1.000_001_908_212_716_6,
    1.000_000_953_962_033_9,
    1.000_000_476_932_986_8,
    1.000_000_238_450_502_7,
    1.000_000_119_219_925_9,
    1.000_000_059_608_189_1,
    1.000_000_029_803_503_5,
    1.000_000_014_901_554_8,
    1.000_000_007_450_711_8,
    1.000_000_003_725_334_0,
    1.000_000_001_862_659_7,
    1.000_000_000_931_327_4,
];

const TAYLOR_RADIUS: f64 = 0.25;

/// ln Γ(1 + e) for |e| ≤ TAYLOR_RADIUS.
fn log_gamma_1p(e: f64) -> f64 {
    let mut sum = 0.0;
    let mut pow = e;
    let mut sign = 1.0;
    for (i, z) in ZETA.iter().enumerate() {
        let k = (i + 2) as f64;
        pow *= e;
        sum += sign * z / k * pow;
        sign = -sign;
    }
    -EULER_GAMMA * e + sum
}

fn stirling(x: f64) -> f64 {
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut corr = 0.0;
    for c in STIRLING_COEFFS.iter().rev() {
        corr = corr * inv2 + c;
    }
    (x - 0.5) * x.ln() - x + HALF_LN_2PI + corr * inv
}

/// ln Γ(x) for x > 0.
pub fn log_gamma(x: f64) -> Result<f64> {
    require_finite("x", x)?;
    if x <= 0.0 {
        return Err(domain(format!("log_gamma requires x > 0, got {x}")));
    }
    Ok(log_gamma_unchecked(x))
}

pub(crate) fn log_gamma_unchecked(x: f64) -> f64 {
    if (x - 1.0).abs() <= TAYLOR_RADIUS {
        return log_gamma_1p(x - 1.0);
    }
    if (x - 2.0).abs() <= TAYLOR_RADIUS {
        let e = x - 2.0;
        return log_gamma_1p(e) + e.ln_1p();
    }
    if x >= STIRLING_MIN {
        return stirling(x);
    }
    let mut shifted = x;
    let mut prod = 1.0;
    while shifted < STIRLING_MIN {
        prod *= shifted;
        shifted += 1.0;
    }
    stirling(shifted) - prod.ln()
}

/// Absolute error scale of `log_gamma_unchecked(x)`.
fn log_gamma_abs_err(x: f64) -> f64 {
    8.0 * f64::EPSILON * (1.0 + log_gamma_unchecked(x).abs() + x.ln().abs())
}

/// B(x, y) = Γ(x)Γ(y)/Γ(x+y), evaluated in the log domain.
pub fn beta(x: f64, y: f64) -> Result<f64> {
    beta_with_err(x, y).map(|(v, _)| v)
}

/// B(x, y) together with a relative error bound.
pub fn beta_with_err(x: f64, y: f64) -> Result<(f64, f64)> {
    require_finite("x", x)?;
    require_finite("y", y)?;
    if x <= 0.0 || y <= 0.0 {
        return Err(domain(format!("beta requires x, y > 0, got ({x}, {y})")));
    }
    let s = x + y;
    let lb = log_gamma_unchecked(x) + log_gamma_unchecked(y) - log_gamma_unchecked(s);
    let rel = log_gamma_abs_err(x) + log_gamma_abs_err(y) + log_gamma_abs_err(s);
    Ok((lb.exp(), rel + 2.0 * f64::EPSILON))
}

/// Above this many factors the rising factorial switches to the log domain.
const POCHHAMMER_DIRECT_MAX: u64 = 1000;

/// Rising factorial (λ)_n = λ(λ+1)…(λ+n−1), with (λ)_0 = 1.
pub fn pochhammer(lam: f64, n: u64) -> Result<f64> {
    require_finite("lambda", lam)?;
    if lam <= 0.0 {
        return Err(domain(format!("pochhammer requires lambda > 0, got {lam}")));
    }
    if n <= POCHHAMMER_DIRECT_MAX {
        let mut prod = 1.0;
        for k in 0..n {
            prod *= lam + k as f64;
        }
        return Ok(prod);
    }
    Ok(ln_pochhammer_unchecked(lam, n).exp())
}

/// ln (λ)_n via a log-gamma difference.
pub fn ln_pochhammer(lam: f64, n: u64) -> Result<f64> {
    require_finite("lambda", lam)?;
    if lam <= 0.0 {
        return Err(domain(format!("pochhammer requires lambda > 0, got {lam}")));
    }
    Ok(ln_pochhammer_unchecked(lam, n))
}

fn ln_pochhammer_unchecked(lam: f64, n: u64) -> f64 {
    if n == 0 {
        return 0.0;
    }
    log_gamma_unchecked(lam + n as f64) - log_gamma_unchecked(lam)
}

/// x ln x with the convention 0 ln 0 = 0.
fn xlnx(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x * x.ln()
    }
}

/// λ_{x,y} = x^x y^y / (x+y)^{x+y}, the maximum of t^x (1−t)^y on (0,1).
pub fn lambda_envelope(x: f64, y: f64) -> Result<f64> {
    require_finite("x", x)?;
    require_finite("y", y)?;
    if x < 0.0 || y < 0.0 {
        return Err(domain(format!(
            "lambda_envelope requires x, y >= 0, got ({x}, {y})"
        )));
    }
    Ok((xlnx(x) + xlnx(y) - xlnx(x + y)).exp())
}

/// θ_p^{α,β}(b,c) = λ_{b,c−b} λ_{α−1,β−α−1} / (4 p B(α, β−α)).
pub fn theta_envelope(b: f64, c: f64, alpha: f64, beta_: f64, p: f64) -> Result<f64> {
    for (name, v) in [("b", b), ("c", c), ("alpha", alpha), ("beta", beta_), ("p", p)] {
        require_finite(name, v)?;
    }
    if !(0.0 < b && b < c) {
        return Err(domain(format!("theta_envelope requires 0 < b < c, got b={b}, c={c}")));
    }
    if alpha < 1.0 {
        return Err(domain(format!("theta_envelope requires alpha >= 1, got {alpha}")));
    }
    if beta_ < alpha + 1.0 {
        return Err(domain(format!(
            "theta_envelope requires beta >= alpha + 1, got alpha={alpha}, beta={beta_}"
        )));
    }
    if p <= 0.0 {
        return Err(domain(format!("theta_envelope requires p > 0, got {p}")));
    }
    let lam_bc = lambda_envelope(b, c - b)?;
    let lam_ab = lambda_envelope(alpha - 1.0, beta_ - alpha - 1.0)?;
    Ok(lam_bc * lam_ab / (4.0 * p * beta(alpha, beta_ - alpha)?))
}
