//! Numeric values of the ring generators γ, π², ζ(3), ζ(5), ….

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::error::Result;
use crate::zeta::Generator;

use super::{mzv, BoundedValue};

/// Euler–Mascheroni constant, 50 significant digits.
pub const EULER_GAMMA_DIGITS: &str = "0.57721566490153286060651209008240243104215933593992";
/// π, 50 significant digits.
pub const PI_DIGITS: &str = "3.1415926535897932384626433832795028841971693993751";
const PI_SQUARED_DIGITS: &str = "9.8696044010893586188344909998761511353136994072408";

/// Odd zeta values are tabulated up to this argument; larger ones are
/// summed on demand.
const TABULATED_ODD_ZETA: u32 = 41;
const ODD_ZETA_TOL: f64 = 1e-12;

#[derive(Clone, Debug)]
pub struct GeneratorValues {
    pub gamma: BoundedValue,
    pub pi: BoundedValue,
    pub pi_squared: BoundedValue,
    pub odd_zeta: BTreeMap<u32, BoundedValue>,
}

impl GeneratorValues {
    pub fn value(&self, g: Generator) -> Result<BoundedValue> {
        match g {
            Generator::Gamma => Ok(self.gamma),
            Generator::PiSquared => Ok(self.pi_squared),
            Generator::OddZeta(k) => match self.odd_zeta.get(&k) {
                Some(v) => Ok(*v),
                None => mzv(&[k], ODD_ZETA_TOL),
            },
        }
    }
}

fn stored(digits: &str) -> BoundedValue {
    let v: f64 = digits.parse().expect("valid float literal");
    // Correct rounding of the literal is within half an ulp.
    BoundedValue::new(v, v.abs() * f64::EPSILON)
}

/// Shared generator values: stored γ and π, summed odd zetas.
pub fn generator_values() -> &'static GeneratorValues {
    static VALUES: OnceLock<GeneratorValues> = OnceLock::new();
    VALUES.get_or_init(|| GeneratorValues {
        gamma: stored(EULER_GAMMA_DIGITS),
        pi: stored(PI_DIGITS),
        pi_squared: stored(PI_SQUARED_DIGITS),
        odd_zeta: (3..=TABULATED_ODD_ZETA)
            .step_by(2)
            .map(|k| (k, mzv(&[k], ODD_ZETA_TOL).expect("odd zeta summation fits the budget")))
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_against_harmonic_limit() {
        let n = 1_000_000u32;
        let h: f64 = (1..=n).rev().map(|k| 1.0 / f64::from(k)).sum();
        let approx = h - f64::from(n).ln() - 0.5 / f64::from(n);
        let g = generator_values().gamma;
        assert!((approx - g.value).abs() < 1e-7);
        assert!((g.value - 0.5772156649).abs() < 1e-10);
    }

    #[test]
    fn pi_squared_against_basel_sum() {
        let n = 1_000_000u32;
        let s: f64 = (1..=n).rev().map(|k| 1.0 / (f64::from(k) * f64::from(k))).sum();
        // Tail Σ_{k>n} k^{-2} ≈ 1/n - 1/(2n²).
        let nf = f64::from(n);
        let approx = 6.0 * (s + 1.0 / nf - 0.5 / (nf * nf));
        let v = generator_values().pi_squared;
        assert!((approx - v.value).abs() < 1e-9);
        assert!((v.value - 9.8696044011).abs() < 1e-10);
        let pi = generator_values().pi;
        assert!(((pi * pi).value - v.value).abs() <= (pi * pi).bound + v.bound);
    }

    #[test]
    fn zeta_three() {
        let z3 = generator_values().value(Generator::OddZeta(3)).unwrap();
        assert!(z3.bound <= 1e-12);
        assert!((z3.value - 1.2020569032).abs() < 1e-10);
        let z43 = generator_values().value(Generator::OddZeta(43)).unwrap();
        assert!((z43.value - 1.0).abs() < 1e-12);
    }
}
