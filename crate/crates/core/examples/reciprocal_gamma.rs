//! Taylor coefficients of 1/Γ(1+z) against ζ(e_i), and the truncated series
//! against the Weierstrass product.

use mzv_genus::numeric::{validate_recip_gamma_series, VALIDATION_POINTS};
use mzv_genus::{eval_zeta_poly, gamma_recip_coeffs, zeta_hom, Basis, SymPoly};

fn main() -> mzv_genus::Result<()> {
    let coeffs = gamma_recip_coeffs(10)?;
    for (i, g) in coeffs.iter().enumerate() {
        // e_0 = 1
        let symbolic = if i == 0 { SymPoly::one(Basis::Elementary) } else { SymPoly::e(&[i as u32]) };
        let symbolic = zeta_hom(&symbolic);
        let value = eval_zeta_poly(&symbolic);
        println!("g_{i:<2} = {g}   agree: {}   ζ(e_{i}) = {symbolic}", g.agrees_with(&value));
    }

    println!("\nsample points {VALIDATION_POINTS:?}");
    for c in validate_recip_gamma_series(12)? {
        println!("z = {:>5}: series {}  product {}  |Δ| = {:.1e}", c.z, c.series, c.product, c.difference);
    }
    Ok(())
}
