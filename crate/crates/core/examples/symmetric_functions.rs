//! Basis changes between m, e and p, and the symmetric e-to-m matrix.

use mzv_genus::{e_to_m_matrix, expand_in_vars, Basis, SymPoly};

fn main() -> mzv_genus::Result<()> {
    let m21 = SymPoly::m(&[2, 1]);
    for basis in Basis::ALL {
        println!("m_21 in {}: {}", basis.tag(), serde_json::to_string(&m21.to_basis(basis)).unwrap());
    }

    let e2 = SymPoly::e(&[2]);
    println!("e_2 in three variables: {} monomials", expand_in_vars(&e2, 3)?.len());

    let (parts, matrix) = e_to_m_matrix(4);
    println!("\ne_λ = Σ M_λμ m_μ for |λ| = 4");
    print!("{:>10}", "");
    for mu in &parts {
        print!("{:>10}", mu.to_string());
    }
    println!();
    for (lambda, row) in parts.iter().zip(&matrix) {
        print!("{:>10}", lambda.to_string());
        for x in row {
            print!("{x:>10}");
        }
        println!();
    }
    let symmetric = (0..parts.len()).all(|i| (0..parts.len()).all(|j| matrix[i][j] == matrix[j][i]));
    println!("symmetric: {symmetric}");
    Ok(())
}
