use crate::error::{domain, require_finite, Result};

/// The real parameters (a, b, c, α, β, p) shared by every function family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamSet {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub alpha: f64,
    pub beta: f64,
    pub p: f64,
}

impl ParamSet {
    pub fn new(a: f64, b: f64, c: f64, alpha: f64, beta: f64, p: f64) -> Self {
        Self { a, b, c, alpha, beta, p }
    }

    pub fn with_p(self, p: f64) -> Self {
        Self { p, ..self }
    }

    pub(crate) fn require_finite(&self) -> Result<()> {
        for (name, v) in self.fields() {
            require_finite(name, v)?;
        }
        Ok(())
    }

    pub fn fields(&self) -> [(&'static str, f64); 6] {
        [
            ("a", self.a),
            ("b", self.b),
            ("c", self.c),
            ("alpha", self.alpha),
            ("beta", self.beta),
            ("p", self.p),
        ]
    }

    /// Domain of the generalized functions: 0 < b < c, α, β > 0, p ≥ 0,
    /// and a > 0 when `with_a`.
    pub(crate) fn require_generalized(&self, with_a: bool) -> Result<()> {
        self.require_finite()?;
        if with_a && self.a <= 0.0 {
            return Err(domain(format!("a must be > 0, got {}", self.a)));
        }
        if !(0.0 < self.b && self.b < self.c) {
            return Err(domain(format!("requires 0 < b < c, got b={}, c={}", self.b, self.c)));
        }
        if self.alpha <= 0.0 || self.beta <= 0.0 {
            return Err(domain(format!(
                "requires alpha, beta > 0, got ({}, {})",
                self.alpha, self.beta
            )));
        }
        if self.p < 0.0 {
            return Err(domain(format!("requires p >= 0, got {}", self.p)));
        }
        Ok(())
    }
}
