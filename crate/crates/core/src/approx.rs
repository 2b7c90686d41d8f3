//! A value carried with an absolute error bound, propagated to first order.

use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Approx {
    pub value: f64,
    pub err: f64,
}

fn round(v: f64) -> f64 {
    f64::EPSILON * v.abs()
}

impl Approx {
    pub fn new(value: f64, err: f64) -> Self {
        Self { value, err: err.abs() }
    }

    pub fn exact(value: f64) -> Self {
        Self { value, err: 0.0 }
    }

    /// A value computed by a libm-style routine, good to a few ulps.
    pub fn computed(value: f64) -> Self {
        Self { value, err: 2.0 * round(value) }
    }

    pub fn abs(self) -> Self {
        Self { value: self.value.abs(), err: self.err }
    }
}

impl Add for Approx {
    type Output = Approx;
    fn add(self, o: Approx) -> Approx {
        let v = self.value + o.value;
        Approx { value: v, err: self.err + o.err + round(v) }
    }
}

impl Sub for Approx {
    type Output = Approx;
    fn sub(self, o: Approx) -> Approx {
        let v = self.value - o.value;
        Approx { value: v, err: self.err + o.err + round(v) }
    }
}

impl Mul for Approx {
    type Output = Approx;
    fn mul(self, o: Approx) -> Approx {
        let v = self.value * o.value;
        Approx {
            value: v,
            err: self.err * o.value.abs() + o.err * self.value.abs() + self.err * o.err + round(v),
        }
    }
}

impl Div for Approx {
    type Output = Approx;
    fn div(self, o: Approx) -> Approx {
        let v = self.value / o.value;
        let denom = o.value.abs();
        Approx {
            value: v,
            err: (self.err + v.abs() * o.err) / denom + round(v),
        }
    }
}

impl Neg for Approx {
    type Output = Approx;
    fn neg(self) -> Approx {
        Approx { value: -self.value, err: self.err }
    }
}

impl Add<f64> for Approx {
    type Output = Approx;
    fn add(self, o: f64) -> Approx {
        self + Approx::exact(o)
    }
}

impl Sub<f64> for Approx {
    type Output = Approx;
    fn sub(self, o: f64) -> Approx {
        self - Approx::exact(o)
    }
}

impl Mul<f64> for Approx {
    type Output = Approx;
    fn mul(self, o: f64) -> Approx {
        self * Approx::exact(o)
    }
}

impl Div<f64> for Approx {
    type Output = Approx;
    fn div(self, o: f64) -> Approx {
        self / Approx::exact(o)
    }
}
