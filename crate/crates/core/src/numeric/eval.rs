use crate::error::Result;
use crate::words::QsymPoly;
use crate::zeta::{MzvTerm, ZetaPoly};

use super::{generator_values, mzv, BoundedValue, GeneratorValues};

/// Numeric value of a ring element with propagated error bound.
pub fn eval_zeta_poly(p: &ZetaPoly) -> BoundedValue {
    eval_zeta_poly_with(p, generator_values()).expect("generator values are available")
}

pub fn eval_zeta_poly_with(p: &ZetaPoly, values: &GeneratorValues) -> Result<BoundedValue> {
    let mut total = BoundedValue::zero();
    for (monomial, c) in p.terms() {
        let mut term = BoundedValue::one();
        for (&g, &e) in monomial.exponents() {
            term = term * values.value(g)?.powi(e);
        }
        // Coefficients are converted from exact rationals last.
        total = total + term * BoundedValue::from_rational(c);
    }
    Ok(total)
}

/// Sum of rational multiples of multiple zeta values, each summed to `tol`.
pub fn eval_mzv_terms(terms: &[MzvTerm], tol: f64) -> Result<BoundedValue> {
    let mut total = BoundedValue::zero();
    for t in terms {
        total = total + mzv(&t.args, tol)? * BoundedValue::from_rational(&t.coeff);
    }
    Ok(total)
}

/// ζ of a combination of convergent words (the empty word counts as 1).
pub fn eval_qsym(q: &QsymPoly, tol: f64) -> Result<BoundedValue> {
    let mut total = BoundedValue::zero();
    for (w, c) in q.terms() {
        let v = if w.is_empty() { BoundedValue::one() } else { mzv(w.letters(), tol)? };
        total = total + v * BoundedValue::from_rational(c);
    }
    Ok(total)
}
