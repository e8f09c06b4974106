//! Q_i computed two ways: from ζ(m_λ), and by expanding Π_j 1/Γ(1+t_j)
//! directly and changing basis.

use std::time::Instant;

use mzv_genus::{q_genus, q_genus_oracle};

fn main() -> mzv_genus::Result<()> {
    for i in 1..=6 {
        let t = Instant::now();
        let direct = q_genus(i)?;
        let t_direct = t.elapsed();
        let t = Instant::now();
        let oracle = q_genus_oracle(i)?;
        let t_oracle = t.elapsed();
        println!(
            "Q_{i}: equal = {:<5}  terms = {:>2}  theorem {:>9.2?}  expansion {:>9.2?}",
            direct == oracle,
            direct.coeffs().len(),
            t_direct,
            t_oracle
        );
    }
    Ok(())
}
