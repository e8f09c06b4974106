//! Stuffle products, Lyndon words and the Lyndon decomposition of a word.

use mzv_genus::{lyndon_decompose, lyndon_factorize, lyndon_words, stuffle, zeta_word, Notation, QsymPoly, Word};

fn main() -> mzv_genus::Result<()> {
    let z2 = QsymPoly::word(Word::letter(2));
    let z6 = QsymPoly::word(Word::letter(6));
    println!("z_2 * z_6 = {}", stuffle(&z2, &z6));

    for weight in 1..=5 {
        let words: Vec<String> = lyndon_words(weight).iter().map(Word::to_string).collect();
        println!("Lyndon words of weight {weight}: {}", words.join(", "));
    }

    let w = Word::parse("1,1,3,2")?;
    let factors: Vec<String> = lyndon_factorize(&w)?.iter().map(Word::to_string).collect();
    println!("\n{w} factors as {}", factors.join(" · "));

    for literal in ["1,2", "2,1", "1,1,2"] {
        let w = Word::parse(literal)?;
        let q = QsymPoly::word(w.clone());
        println!("{w} = {}", lyndon_decompose(&q));
        println!("    ζ({w}) = {}", zeta_word(&w).render(Notation::Unicode));
    }
    Ok(())
}
