//! Exact and numeric machinery for the multiplicative sequence `{Q_i}` of
//! the power series `1/Γ(1+z)`.
//!
//! The coefficient of `c_λ` in `Q_i(c_1, …, c_i)` is `ζ(m_λ)`, where ζ is
//! the homomorphism from symmetric functions with `p_1 ↦ γ` and
//! `p_i ↦ ζ(i)`. The crate builds that homomorphism from the ground up:
//!
//! - [`partition`], [`sym`], [`multipoly`]: partitions, the m/e/p bases of
//!   symmetric functions, and a brute-force expansion oracle.
//! - [`words`], [`lyndon`]: the stuffle algebra H¹ and its Lyndon generators.
//! - [`zeta`]: the graded ring `Q[γ, π², ζ(3), ζ(5), …]` and the ζ maps.
//! - [`numeric`]: multiple zeta values and ring elements as floats with
//!   rigorous error bounds, plus the Taylor coefficients of `1/Γ(1+z)`.
//! - [`genus`]: `Q_i` itself, its Calabi–Yau (`c_1 = 0`) specialization,
//!   and a direct expansion of the generating product as a cross-check.
//! - [`verify`]: the self-check suites behind `mzv-genus verify`.

pub mod error;
pub mod genus;
pub mod lyndon;
pub mod multipoly;
pub mod numeric;
pub mod partition;
pub mod rational;
pub mod sym;
pub mod verify;
pub mod words;
pub mod zeta;

pub use error::{Error, Result};
pub use genus::{
    mzv_expansion, q_genus, q_genus_cy, q_genus_cy_with_budget, q_genus_oracle, q_genus_with_budget, CyGenusPolynomial,
    GenusPolynomial, DEFAULT_DEGREE_BUDGET,
};
pub use lyndon::{is_lyndon, lyndon_decompose, lyndon_factorize, lyndon_words, LyndonPoly};
pub use numeric::{eval_zeta_poly, gamma_recip_coeffs, generator_values, mzv, BoundedValue};
pub use partition::{partitions_of, Partition};
pub use rational::Rational;
pub use sym::{e_to_m_matrix, expand_in_vars, Basis, SymPoly};
pub use words::{stuffle, sym_to_words, QsymPoly, Word};
pub use zeta::{bernoulli, zeta_even, zeta_gen, zeta_hom, zeta_word, MzvTerm, Notation, ZetaPoly};
