//! Linear parameter ranges and their cartesian products.

use std::fmt;
use std::str::FromStr;

/// `lo:hi:steps` with linear spacing. A bare number is a one-point range.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Range {
    pub lo: f64,
    pub hi: f64,
    pub steps: usize,
}

impl Range {
    pub fn new(lo: f64, hi: f64, steps: usize) -> Result<Self, String> {
        if !(lo.is_finite() && hi.is_finite()) {
            return Err(format!("range bounds must be finite, got {lo}:{hi}"));
        }
        if lo > hi {
            return Err(format!("range needs lo <= hi, got {lo}:{hi}"));
        }
        if steps == 0 {
            return Err("range needs steps >= 1".into());
        }
        if steps == 1 && lo != hi {
            return Err(format!("a one-step range needs lo == hi, got {lo}:{hi}"));
        }
        Ok(Self { lo, hi, steps })
    }

    pub fn point(v: f64) -> Self {
        Self { lo: v, hi: v, steps: 1 }
    }

    pub fn values(&self) -> Vec<f64> {
        if self.steps == 1 {
            return vec![self.lo];
        }
        let last = (self.steps - 1) as f64;
        (0..self.steps)
            .map(|i| {
                // Hit both ends exactly.
                if i + 1 == self.steps {
                    self.hi
                } else {
                    self.lo + (self.hi - self.lo) * (i as f64 / last)
                }
            })
            .collect()
    }
}

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| t.trim().parse::<f64>().map_err(|_| format!("bad number {t:?} in range {s:?}"));
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            [v] => {
                let v = num(v)?;
                Range::new(v, v, 1)
            }
            [lo, hi, steps] => {
                let steps = steps
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| format!("bad step count {steps:?} in range {s:?}"))?;
                Range::new(num(lo)?, num(hi)?, steps)
            }
            _ => Err(format!("expected lo:hi:steps or a single value, got {s:?}")),
        }
    }
}

impl fmt::Display for Range {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.steps == 1 {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}:{}:{}", self.lo, self.hi, self.steps)
        }
    }
}

/// Every combination of the axis values, last axis varying fastest.
pub fn product(axes: &[Vec<f64>]) -> Vec<Vec<f64>> {
    if axes.iter().any(Vec::is_empty) {
        return Vec::new();
    }
    let total: usize = axes.iter().map(Vec::len).product();
    let mut out = Vec::with_capacity(total);
    let mut idx = vec![0usize; axes.len()];
    for _ in 0..total {
        out.push(idx.iter().zip(axes).map(|(&i, ax)| ax[i]).collect());
        for k in (0..axes.len()).rev() {
            idx[k] += 1;
            if idx[k] < axes[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
    out
}
