//! Multiple zeta values
//! `ζ(i_1, …, i_k) = Σ_{n_1 > ⋯ > n_k ≥ 1} n_1^{-i_1} ⋯ n_k^{-i_k}`
//! by truncated nested summation.
//!
//! Only the outermost index is truncated: for `n_1 ≤ N` the inner sums are
//! complete. Writing `S(n)` for the inner sum over `n > n_2 > ⋯`, the
//! neglected tail `Σ_{n>N} n^{-s} S(n-1)` is enclosed between
//! `S(N) · Σ_{n>N} n^{-s}` and the same plus a growth term for `S`, and the
//! reported value is the midpoint of that enclosure.

use crate::error::{Error, Result};
use crate::zeta::join_args;

use super::BoundedValue;

/// Default ceiling on the outer cutoff `N`.
pub const DEFAULT_CUTOFF_BUDGET: u64 = 50_000_000;

const MIN_CUTOFF: u64 = 16;

#[derive(Clone, Debug, PartialEq)]
pub struct MzvEvaluation {
    pub value: BoundedValue,
    pub cutoff: u64,
}

/// `ζ(args)` with `bound ≤ tol`, using [`DEFAULT_CUTOFF_BUDGET`].
pub fn mzv(args: &[u32], tol: f64) -> Result<BoundedValue> {
    Ok(mzv_with_budget(args, tol, DEFAULT_CUTOFF_BUDGET)?.value)
}

pub fn mzv_with_budget(args: &[u32], tol: f64, budget: u64) -> Result<MzvEvaluation> {
    validate(args)?;
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidTolerance(tol));
    }
    let plan = TailPlan::new(args);
    let mut n = plan.min_cutoff();
    while plan.a_priori_bound(n) > tol {
        n *= 2;
        if n > budget {
            return Err(Error::CutoffBudgetExceeded { args: join_args(args), tol, budget });
        }
    }
    let value = plan.evaluate(n);
    debug_assert!(value.bound <= tol);
    Ok(MzvEvaluation { value, cutoff: n })
}

/// Evaluate with an explicit outer cutoff (at least the internal minimum).
pub fn mzv_with_cutoff(args: &[u32], cutoff: u64) -> Result<MzvEvaluation> {
    validate(args)?;
    let plan = TailPlan::new(args);
    let n = cutoff.max(plan.min_cutoff());
    Ok(MzvEvaluation { value: plan.evaluate(n), cutoff: n })
}

fn validate(args: &[u32]) -> Result<()> {
    match args.first() {
        None => Err(Error::EmptyComposition),
        Some(&i1) if i1 < 2 => Err(Error::Divergent { args: join_args(args) }),
        _ if args.contains(&0) => Err(Error::ZeroLetter),
        _ => Ok(()),
    }
}

struct TailPlan<'a> {
    args: &'a [u32],
    s: f64,
    weight: u32,
}

impl<'a> TailPlan<'a> {
    fn new(args: &'a [u32]) -> Self {
        TailPlan { args, s: f64::from(args[0]), weight: args.iter().sum() }
    }

    /// Letters equal to 1 beyond the second position, which make the
    /// majorant of the innermost sums grow like a power of `log n`.
    fn deep_ones(&self) -> u32 {
        self.args.iter().skip(2).filter(|&&i| i == 1).count() as u32
    }

    fn min_cutoff(&self) -> u64 {
        // The log-power majorant must be decreasing beyond the cutoff.
        let a = f64::from(self.deep_ones());
        MIN_CUTOFF.max(a.exp().ceil() as u64)
    }

    /// Upper bound for `Σ_{m<n} m^{-i}`: `1 + ln n` when i = 1, `i/(i-1)` otherwise.
    fn letter_majorant(i: u32, n: f64) -> f64 {
        if i == 1 {
            1.0 + n.ln()
        } else {
            f64::from(i) / f64::from(i - 1)
        }
    }

    /// Bound on the inner sum `S(N)` from the letters after the first.
    fn inner_majorant(&self, n: f64) -> f64 {
        self.args[1..].iter().map(|&i| Self::letter_majorant(i, n)).product()
    }

    /// Bound on `Σ_{n>N} n^{-s} (S(n-1) - S(N))`.
    ///
    /// `S(n-1) - S(N) ≤ Σ_{N<m<n} m^{-i_2} U(m)` with `U` the majorant of the
    /// sums below level two, and `Σ_{n>m} n^{-s} ≤ m^{1-s}/(s-1)`.
    fn growth_term(&self, n: f64) -> f64 {
        if self.args.len() < 2 {
            return 0.0;
        }
        let i2 = f64::from(self.args[1]);
        let constant: f64 = self.args[2..]
            .iter()
            .filter(|&&i| i >= 2)
            .map(|&i| Self::letter_majorant(i, n))
            .product();
        let e = self.s + i2 - 1.0;
        constant / (self.s - 1.0) * log_power_tail(e, self.deep_ones(), n)
    }

    /// Enclosure of `Σ_{n>N} n^{-s}` from Euler–Maclaurin through the `B_2`
    /// term; the remainder is bounded by the first omitted term.
    fn power_tail(&self, n: f64) -> (f64, f64) {
        let s = self.s;
        let est = n.powf(1.0 - s) / (s - 1.0) - 0.5 * n.powf(-s) + s * n.powf(-s - 1.0) / 12.0;
        let r = s * (s + 1.0) * (s + 2.0) * n.powf(-s - 3.0) / 720.0;
        (est - r, est + r)
    }

    fn rounding(&self, n: u64, magnitude: f64) -> f64 {
        let ops = n as f64 + 4.0 * f64::from(self.weight) + 2.0 * self.args.len() as f64;
        2.0 * ops * f64::EPSILON * magnitude
    }

    fn a_priori_bound(&self, n: u64) -> f64 {
        let nf = n as f64;
        let (lo, hi) = self.power_tail(nf);
        let inner = self.inner_majorant(nf);
        let half_width = 0.5 * (inner * (hi - lo) + self.growth_term(nf));
        let magnitude = self.s / (self.s - 1.0) * inner;
        half_width + self.rounding(n, magnitude)
    }

    fn evaluate(&self, n: u64) -> BoundedValue {
        let k = self.args.len();
        // level[j] = Σ over n_{j+1} ≤ current n of the j-th nested sum.
        let mut level = vec![0.0f64; k];
        let mut previous_outer = 0.0f64;
        for m in 1..=n {
            let x = 1.0 / m as f64;
            for j in 0..k {
                let inner = if j + 1 == k { 1.0 } else { level[j + 1] };
                level[j] += x.powi(self.args[j] as i32) * inner;
            }
            assert!(level[0] >= previous_outer, "partial sums of positive terms must not decrease");
            previous_outer = level[0];
        }
        let nf = n as f64;
        let inner_at_cutoff = if k == 1 { 1.0 } else { level[1] };
        let (lo, hi) = self.power_tail(nf);
        let lower = level[0] + inner_at_cutoff * lo;
        let upper = level[0] + inner_at_cutoff * hi + self.growth_term(nf);
        BoundedValue::new(0.5 * (lower + upper), 0.5 * (upper - lower) + self.rounding(n, upper))
    }
}

/// `∫_N^∞ x^{-e} (1 + ln x)^a dx` in closed form (e > 1).
fn log_power_tail(e: f64, a: u32, n: f64) -> f64 {
    let c = e - 1.0;
    let l1 = 1.0 + n.ln();
    let mut sum = 0.0;
    let mut falling = 1.0; // a! / (a-j)!
    for j in 0..=a {
        sum += falling * l1.powi((a - j) as i32) / c.powi(j as i32 + 1);
        falling *= f64::from(a - j);
    }
    n.powf(-c) * sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn zeta_two() {
        let v = mzv(&[2], 1e-8).unwrap();
        assert!(v.bound <= 1e-8);
        assert!((v.value - PI * PI / 6.0).abs() <= v.bound + 1e-15);
        assert!((v.value - 1.64493407).abs() < 1e-8);
    }

    #[test]
    fn zeta_two_two() {
        let v = mzv(&[2, 2], 1e-6).unwrap();
        let target = 0.75 * PI.powi(4) / 90.0;
        assert!((v.value - target).abs() <= v.bound + 1e-15);
        assert!((v.value - 0.81174243).abs() < 1e-6);
    }

    #[test]
    fn euler_identity_for_zeta_two_one() {
        // ζ(2,1) = ζ(3)
        let a = mzv(&[2, 1], 1e-6).unwrap();
        let b = mzv(&[3], 1e-12).unwrap();
        assert!(a.agrees_with(&b), "{a} vs {b}");
    }

    #[test]
    fn errors() {
        assert!(matches!(mzv(&[1, 2], 1e-6), Err(Error::Divergent { .. })));
        assert!(matches!(mzv(&[], 1e-6), Err(Error::EmptyComposition)));
        assert!(matches!(mzv(&[2], 0.0), Err(Error::InvalidTolerance(_))));
        assert!(matches!(mzv(&[2], -1.0), Err(Error::InvalidTolerance(_))));
        assert!(matches!(mzv(&[2, 1, 1], 1e-12), Err(Error::CutoffBudgetExceeded { .. })));
    }

    #[test]
    fn log_power_tail_against_quadrature() {
        // Trapezoid rule on a substituted integral, x = N e^u.
        for &(e, a, n) in &[(2.0, 0u32, 20.0), (2.0, 2, 50.0), (3.5, 1, 16.0)] {
            let f = |u: f64| {
                let x: f64 = n * u.exp();
                x.powf(-e) * (1.0 + x.ln()).powi(a as i32) * x
            };
            let h = 1e-3;
            let mut q = 0.5 * f(0.0);
            let mut u = h;
            while u < 60.0 {
                q += f(u);
                u += h;
            }
            q *= h;
            let closed = log_power_tail(e, a, n);
            assert!((q - closed).abs() < 1e-6 * closed, "{e} {a} {n}: {q} vs {closed}");
        }
    }
}
