use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::rational::{self, Rational};

/// A float with an absolute error bound: the true value lies in
/// `[value - bound, value + bound]` up to rounding in the bound itself.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundedValue {
    pub value: f64,
    pub bound: f64,
}

impl BoundedValue {
    pub fn new(value: f64, bound: f64) -> Self {
        assert!(bound >= 0.0, "error bound must be nonnegative");
        BoundedValue { value, bound }
    }

    pub fn exact(value: f64) -> Self {
        BoundedValue { value, bound: 0.0 }
    }

    pub fn zero() -> Self {
        Self::exact(0.0)
    }

    pub fn one() -> Self {
        Self::exact(1.0)
    }

    pub fn from_rational(r: &Rational) -> Self {
        let (value, bound) = rational::to_f64_bounded(r);
        BoundedValue { value, bound }
    }

    pub fn lower(&self) -> f64 {
        self.value - self.bound
    }

    pub fn upper(&self) -> f64 {
        self.value + self.bound
    }

    pub fn powi(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc * *self)
    }

    /// True if the intervals of `self` and `other` intersect.
    pub fn agrees_with(&self, other: &BoundedValue) -> bool {
        (self.value - other.value).abs() <= self.bound + other.bound
    }

    /// Inflate the bound by one rounding of the value.
    fn rounded(self) -> Self {
        BoundedValue { value: self.value, bound: self.bound + self.value.abs() * f64::EPSILON }
    }
}

impl Add for BoundedValue {
    type Output = BoundedValue;
    fn add(self, rhs: BoundedValue) -> BoundedValue {
        BoundedValue { value: self.value + rhs.value, bound: self.bound + rhs.bound }.rounded()
    }
}

impl Sub for BoundedValue {
    type Output = BoundedValue;
    fn sub(self, rhs: BoundedValue) -> BoundedValue {
        self + (-rhs)
    }
}

impl Neg for BoundedValue {
    type Output = BoundedValue;
    fn neg(self) -> BoundedValue {
        BoundedValue { value: -self.value, bound: self.bound }
    }
}

impl Mul for BoundedValue {
    type Output = BoundedValue;
    fn mul(self, rhs: BoundedValue) -> BoundedValue {
        let bound = self.value.abs() * rhs.bound + rhs.value.abs() * self.bound + self.bound * rhs.bound;
        BoundedValue { value: self.value * rhs.value, bound }.rounded()
    }
}

impl fmt::Display for BoundedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.12} ± {:.1e}", self.value, self.bound)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn propagation_rules() {
        let a = BoundedValue::new(2.0, 0.1);
        let b = BoundedValue::new(-3.0, 0.01);
        let s = a + b;
        assert_eq!(s.value, -1.0);
        assert!(s.bound >= 0.11 && s.bound < 0.11 + 1e-15);
        let p = a * b;
        assert_eq!(p.value, -6.0);
        let expected = 2.0 * 0.01 + 3.0 * 0.1 + 0.1 * 0.01;
        assert!(p.bound >= expected && p.bound < expected + 1e-14);
        assert_eq!(BoundedValue::zero() + BoundedValue::zero(), BoundedValue::zero());
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(BoundedValue::new(1.5, 0.25)).unwrap();
        assert_eq!(v, serde_json::json!({"value": 1.5, "bound": 0.25}));
    }
}
