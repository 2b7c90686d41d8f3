use super::{IneqInputs, IneqReport};
use crate::approx::Approx;
use crate::error::{domain, Result};
use crate::sum::CompensatedSum;

/// Data of the weighted discrete Grüss inequality.
#[derive(Debug, Clone, PartialEq)]
pub struct GrussInstance {
    pub x: Vec<f64>,
    pub y: Vec<f64>,
    pub m: Vec<f64>,
    pub gamma_lo: f64,
    pub gamma_hi: f64,
    pub phi_lo: f64,
    pub phi_hi: f64,
}

impl GrussInstance {
    /// An instance whose bounds are the extremes of the sequences.
    pub fn tight(x: Vec<f64>, y: Vec<f64>, m: Vec<f64>) -> Self {
        let lo = |v: &[f64]| v.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = |v: &[f64]| v.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        Self { gamma_lo: lo(&x), gamma_hi: hi(&x), phi_lo: lo(&y), phi_hi: hi(&y), x, y, m }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.x.len();
        if n == 0 || self.y.len() != n || self.m.len() != n {
            return Err(domain(format!(
                "sequences must share one non-zero length, got x {}, y {}, m {}",
                n,
                self.y.len(),
                self.m.len()
            )));
        }
        for (k, ((&x, &y), &m)) in self.x.iter().zip(&self.y).zip(&self.m).enumerate() {
            if !(m >= 0.0 && m.is_finite()) {
                return Err(domain(format!("weight m[{k}] = {m} must be finite and >= 0")));
            }
            if !(self.gamma_lo <= x && x <= self.gamma_hi) {
                return Err(domain(format!(
                    "x[{k}] = {x} outside [{}, {}]",
                    self.gamma_lo, self.gamma_hi
                )));
            }
            if !(self.phi_lo <= y && y <= self.phi_hi) {
                return Err(domain(format!("y[{k}] = {y} outside [{}, {}]", self.phi_lo, self.phi_hi)));
            }
        }
        Ok(())
    }
}

/// Σ v_k compensated, with an error bound covering the per-term products.
fn sum_approx(vals: impl Iterator<Item = f64>) -> Approx {
    let s: CompensatedSum = vals.collect();
    Approx::new(s.value(), 3.0 * f64::EPSILON * s.abs_total() + f64::EPSILON * s.value().abs())
}

/// |Σm Σmxy − Σmx Σmy| against ¼ (Σm)² (Γ−γ)(Φ−φ).
pub fn gruss_check(inst: &GrussInstance) -> Result<IneqReport> {
    inst.validate()?;
    let (x, y, m) = (&inst.x, &inst.y, &inst.m);
    let sm = sum_approx(m.iter().cloned());
    let smx = sum_approx(m.iter().zip(x).map(|(m, x)| m * x));
    let smy = sum_approx(m.iter().zip(y).map(|(m, y)| m * y));
    let smxy = sum_approx(m.iter().zip(x).zip(y).map(|((m, x), y)| m * x * y));
    let lhs = (sm * smxy - smx * smy).abs();
    let span_x = Approx::exact(inst.gamma_hi) - Approx::exact(inst.gamma_lo);
    let span_y = Approx::exact(inst.phi_hi) - Approx::exact(inst.phi_lo);
    let rhs = sm * sm * span_x * span_y * 0.25;
    Ok(IneqReport::from_sides(
        "gruss",
        lhs,
        rhs,
        IneqInputs { params: None, args: vec![("n", x.len() as f64)] },
    ))
}
