//! Floating-point evaluation with absolute error bounds.

mod bounded;
mod constants;
mod eval;
mod gamma;
mod mzv;

pub use bounded::BoundedValue;
pub use constants::{generator_values, GeneratorValues, EULER_GAMMA_DIGITS, PI_DIGITS};
pub use eval::{eval_mzv_terms, eval_qsym, eval_zeta_poly, eval_zeta_poly_with};
pub use gamma::{
    gamma_recip_coeffs, recip_gamma_product, recip_gamma_series, validate_recip_gamma_series, SampleCheck,
    VALIDATION_POINTS,
};
pub use mzv::{mzv, mzv_with_budget, mzv_with_cutoff, MzvEvaluation, DEFAULT_CUTOFF_BUDGET};
