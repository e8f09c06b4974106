//! Print Q_1..Q_N, optionally in ASCII.
//!
//! ```bash
//! cargo run --example genus_table -- 6 ascii
//! ```

use mzv_genus::{q_genus, Notation};

fn main() -> mzv_genus::Result<()> {
    let mut args = std::env::args().skip(1);
    let max: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(5);
    let notation = if args.next().as_deref() == Some("ascii") { Notation::Ascii } else { Notation::Unicode };

    for i in 1..=max {
        let q = q_genus(i)?;
        println!("{}", q.render(notation));
        println!("    {} terms, homogeneous of weight {i}: {}", q.coeffs().len(), q.is_graded());
    }
    Ok(())
}
