//! With c_1 = 0 only partitions without 1s survive, and each coefficient is a
//! plain sum of convergent multiple zeta values. Each sum is evaluated and
//! compared with the closed form from the ring.

use mzv_genus::numeric::eval_mzv_terms;
use mzv_genus::{eval_zeta_poly, q_genus_cy, zeta_hom, Basis, Notation, SymPoly};

fn main() -> mzv_genus::Result<()> {
    for i in 2..=8 {
        let q = q_genus_cy(i)?;
        println!("{q}");
        for (lambda, terms) in q.coeffs() {
            let closed = zeta_hom(&SymPoly::element(Basis::Monomial, lambda.clone()));
            let summed = eval_mzv_terms(terms, 1e-8)?;
            let exact = eval_zeta_poly(&closed);
            println!(
                "    c{lambda}: {} = {}   ({} vs {}, agree: {})",
                terms.iter().map(|t| t.render(Notation::Unicode)).collect::<Vec<_>>().join(" + "),
                closed,
                summed,
                exact,
                summed.agrees_with(&exact)
            );
        }
    }
    Ok(())
}
