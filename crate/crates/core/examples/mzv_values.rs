//! Multiple zeta values with rigorous error bounds, and two identities
//! checked numerically.

use mzv_genus::numeric::mzv_with_budget;
use mzv_genus::numeric::DEFAULT_CUTOFF_BUDGET;
use mzv_genus::{eval_zeta_poly, mzv, rational::rat, zeta_even};

fn main() -> mzv_genus::Result<()> {
    for args in [&[2][..], &[3], &[2, 1], &[3, 2], &[2, 2], &[4, 2, 1]] {
        let e = mzv_with_budget(args, 1e-6, DEFAULT_CUTOFF_BUDGET)?;
        let joined: Vec<String> = args.iter().map(u32::to_string).collect();
        println!("ζ({}) = {}   (cutoff {})", joined.join(","), e.value, e.cutoff);
    }

    let lhs = mzv(&[2, 2], 1e-7)?;
    let rhs = eval_zeta_poly(&zeta_even(4)?.scale(&rat(3, 4)));
    println!("\nζ(2,2) = {lhs}\n¾ζ(4)  = {rhs}\nagree: {}", lhs.agrees_with(&rhs));

    let lhs = mzv(&[6, 2], 1e-8)? + mzv(&[2, 6], 1e-8)?;
    let rhs = eval_zeta_poly(&zeta_even(8)?.scale(&rat(2, 3)));
    println!("\nζ(6,2)+ζ(2,6) = {lhs}\n⅔ζ(8)         = {rhs}\nagree: {}", lhs.agrees_with(&rhs));

    match mzv(&[1, 2], 1e-6) {
        Err(e) => println!("\nζ(1,2): {e}"),
        Ok(v) => println!("\nζ(1,2) = {v}"),
    }
    Ok(())
}
