//! Taylor coefficients of `1/Γ(1+z)` and an independent product evaluation.
//!
//! From the Weierstrass product `1/Γ(1+z) = e^{γz} Π_n (1 + z/n) e^{-z/n}`,
//! `log(1/Γ(1+z)) = γz + Σ_{k≥2} (-1)^{k+1} ζ(k) z^k / k`, and the
//! coefficients follow from the power-series exponential recurrence
//! `n g_n = Σ_{k=1}^{n} k a_k g_{n-k}`.

use serde::Serialize;

use crate::error::Result;

use super::{generator_values, mzv, BoundedValue};

const LOG_SERIES_ZETA_TOL: f64 = 1e-12;
const PRODUCT_FACTORS: u64 = 100_000;

/// Points where the truncated Taylor series is checked against the product.
pub const VALIDATION_POINTS: [f64; 5] = [-0.4, -0.2, 0.1, 0.3, 0.5];

/// `g_0, …, g_n` with `1/Γ(1+z) = Σ g_i z^i`.
pub fn gamma_recip_coeffs(n: usize) -> Result<Vec<BoundedValue>> {
    let values = generator_values();
    // a_k: coefficients of the log series.
    let mut log_coeffs = vec![BoundedValue::zero(); n + 1];
    if n >= 1 {
        log_coeffs[1] = values.gamma;
    }
    for (k, slot) in log_coeffs.iter_mut().enumerate().skip(2) {
        let z = mzv(&[k as u32], LOG_SERIES_ZETA_TOL)?;
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        *slot = z * BoundedValue::exact(sign / k as f64) + BoundedValue::new(0.0, z.value.abs() * f64::EPSILON / k as f64);
    }
    let mut g = Vec::with_capacity(n + 1);
    g.push(BoundedValue::one());
    for m in 1..=n {
        let mut acc = BoundedValue::zero();
        for k in 1..=m {
            acc = acc + BoundedValue::exact(k as f64) * log_coeffs[k] * g[m - k];
        }
        let inv = 1.0 / m as f64;
        g.push(acc * BoundedValue::new(inv, inv * f64::EPSILON));
    }
    Ok(g)
}

/// `Σ_{i≤n} g_i z^i` plus a rigorous bound for the omitted terms.
///
/// On `|z| = R`, `|1/Γ(1+z)| ≤ exp(γR + ζ(2)R²/2)` (from
/// `|(1+w)e^{-w}| ≤ e^{|w|²/2}`), so Cauchy's estimate bounds every `g_i`
/// and the tail is a geometric series. `R` is chosen from a grid.
pub fn recip_gamma_series(coeffs: &[BoundedValue], z: f64) -> BoundedValue {
    let mut total = BoundedValue::zero();
    let mut power = BoundedValue::one();
    let zb = BoundedValue::exact(z);
    for c in coeffs {
        total = total + *c * power;
        power = power * zb;
    }
    let tail = cauchy_tail(coeffs.len() as i32, z.abs());
    BoundedValue::new(total.value, total.bound + tail)
}

fn cauchy_tail(first_omitted: i32, r_z: f64) -> f64 {
    let gamma = generator_values().gamma.upper();
    let zeta2 = generator_values().pi_squared.upper() / 6.0;
    let mut best = f64::INFINITY;
    let mut r = (2.0 * r_z).max(0.25);
    while r < 20.0 {
        let q = r_z / r;
        if q < 1.0 {
            let m = (gamma * r + 0.5 * zeta2 * r * r).exp();
            best = best.min(m * q.powi(first_omitted) / (1.0 - q));
        }
        r += 0.05;
    }
    best
}

/// `1/Γ(1+z)` for real `|z| < 1` from the truncated Weierstrass product.
///
/// With `M` factors, the neglected logarithm `Σ_{n>M} [ln(1+z/n) - z/n]` is
/// `-z²/2 · Σ_{n>M} n^{-2}` up to `|z|³ Σ_{n>M} n^{-3} / (3(1 - |z|/M))`.
pub fn recip_gamma_product(z: f64) -> BoundedValue {
    assert!(z.abs() < 1.0, "product evaluation is set up for |z| < 1");
    let m = PRODUCT_FACTORS;
    let gamma = generator_values().gamma;
    let mut log_sum = 0.0f64;
    for n in (1..=m).rev() {
        let w = z / n as f64;
        log_sum += w.ln_1p() - w;
    }
    let mf = m as f64;
    let tail2 = 1.0 / mf - 0.5 / (mf * mf) + 1.0 / (6.0 * mf * mf * mf);
    let tail2_err = 1.0 / (30.0 * mf.powi(5));
    let tail3 = 0.5 / (mf * mf);
    let log_value = gamma.value * z + log_sum - 0.5 * z * z * tail2;
    let log_err = gamma.bound * z.abs()
        + 0.5 * z * z * tail2_err
        + z.abs().powi(3) * tail3 / (3.0 * (1.0 - z.abs() / mf))
        + 4.0 * mf * f64::EPSILON * (log_sum.abs() + 1.0);
    let value = log_value.exp();
    BoundedValue::new(value, value * (log_err.exp() - 1.0) + value * f64::EPSILON)
}

#[derive(Clone, Debug, Serialize)]
pub struct SampleCheck {
    pub z: f64,
    pub series: BoundedValue,
    pub product: BoundedValue,
    pub difference: f64,
}

impl SampleCheck {
    /// Both evaluations agree within their bounds and within `tol`.
    pub fn passes(&self, tol: f64) -> bool {
        self.difference <= self.series.bound + self.product.bound && self.difference <= tol
    }
}

/// Compare the degree-`n` Taylor polynomial with the product at every
/// point of [`VALIDATION_POINTS`].
pub fn validate_recip_gamma_series(n: usize) -> Result<Vec<SampleCheck>> {
    let coeffs = gamma_recip_coeffs(n)?;
    Ok(VALIDATION_POINTS
        .iter()
        .map(|&z| {
            let series = recip_gamma_series(&coeffs, z);
            let product = recip_gamma_product(z);
            SampleCheck { z, series, product, difference: (series.value - product.value).abs() }
        })
        .collect())
}
