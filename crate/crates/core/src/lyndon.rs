//! Lyndon words over `z_1 > z_2 > ⋯` and the generation of H¹ by them.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::words::{stuffle, QsymPoly, Word};

/// True iff every proper nonempty suffix of `w` is greater than `w`.
pub fn is_lyndon(w: &Word) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok((1..w.depth()).all(|k| w.suffix(k) > *w))
}

/// All words of the given weight, every composition of `weight` once.
pub fn words_of_weight(weight: u32) -> Vec<Word> {
    fn rec(remaining: u32, cur: &mut Vec<u32>, out: &mut Vec<Word>) {
        if remaining == 0 {
            out.push(Word::from_vec(cur.clone()));
            return;
        }
        for i in 1..=remaining {
            cur.push(i);
            rec(remaining - i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(weight, &mut Vec::new(), &mut out);
    out
}

/// Lyndon words of the given weight, in descending word order.
pub fn lyndon_words(weight: u32) -> Vec<Word> {
    let mut out: Vec<Word> = words_of_weight(weight)
        .into_iter()
        .filter(|w| !w.is_empty() && is_lyndon(w).unwrap_or(false))
        .collect();
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Unique factorization of `w` into a weakly decreasing sequence of Lyndon
/// words (Duval's algorithm under the `z_1 > z_2 > ⋯` order).
pub fn lyndon_factorize(w: &Word) -> Result<Vec<Word>> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    // Duval compares letters; a letter is "smaller" when its subscript is larger.
    let s = w.letters();
    let key = |x: u32| std::cmp::Reverse(x);
    let n = s.len();
    let mut factors = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        let mut k = i;
        while j < n && key(s[k]) <= key(s[j]) {
            if key(s[k]) < key(s[j]) {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        while i <= k {
            factors.push(Word::from_vec(s[i..i + j - k].to_vec()));
            i += j - k;
        }
    }
    Ok(factors)
}

/// A commutative polynomial in Lyndon-word generators. Each monomial is a
/// weakly decreasing list of Lyndon words (repeats allowed).
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LyndonPoly {
    terms: BTreeMap<Vec<Word>, Rational>,
}

impl LyndonPoly {
    pub fn terms(&self) -> &BTreeMap<Vec<Word>, Rational> {
        &self.terms
    }

    fn add_term(&mut self, mut monomial: Vec<Word>, c: Rational) {
        if c.is_zero() {
            return;
        }
        monomial.sort_by(|a, b| b.cmp(a));
        let e = self.terms.entry(monomial).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// Multiply out each monomial with the stuffle product.
    pub fn expand(&self) -> QsymPoly {
        let mut out = QsymPoly::zero();
        for (monomial, c) in &self.terms {
            out = out.add(&stuffle_all(monomial).scale(c));
        }
        out
    }
}

impl fmt::Debug for LyndonPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LyndonPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (monomial, c)) in self.terms.iter().rev().enumerate() {
            let neg = c < &Rational::zero();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let a = rational::abs_pretty(c);
            if a != "1" {
                write!(f, "{a}·")?;
            }
            if monomial.is_empty() {
                write!(f, "1")?;
            }
            for (k, w) in monomial.iter().enumerate() {
                if k > 0 {
                    write!(f, "·")?;
                }
                write!(f, "{w}")?;
            }
        }
        Ok(())
    }
}

/// Stuffle product of a list of words (the empty list gives the unit).
pub fn stuffle_all(words: &[Word]) -> QsymPoly {
    words
        .iter()
        .fold(QsymPoly::one(), |acc, w| stuffle(&acc, &QsymPoly::word(w.clone())))
}

/// Writes `q` as a polynomial in Lyndon words under the stuffle product.
///
/// Repeatedly takes the largest remaining word, factors it into Lyndon words
/// `l_1 ≥ ⋯ ≥ l_r`, and subtracts the matching multiple of `l_1 * ⋯ * l_r`,
/// whose largest word is the concatenation `l_1 ⋯ l_r` itself. The leading
/// word strictly decreases within each weight, so the loop terminates.
pub fn lyndon_decompose(q: &QsymPoly) -> LyndonPoly {
    let mut out = LyndonPoly::default();
    for weight in q.weights() {
        let mut rest = q.homogeneous_part(weight);
        let mut last: Option<Word> = None;
        while let Some((w, c)) = rest.leading() {
            let (w, c) = (w.clone(), c.clone());
            if let Some(prev) = &last {
                assert!(w < *prev, "leading word must strictly decrease");
            }
            let factors = if w.is_empty() { Vec::new() } else { lyndon_factorize(&w).expect("nonempty") };
            let product = stuffle_all(&factors);
            let lead = product.coefficient(&w);
            assert!(
                !lead.is_zero() && product.leading().map(|(x, _)| x) == Some(&w),
                "stuffle of the Lyndon factors of {w} must lead with {w}"
            );
            let coeff = &c / &lead;
            rest = rest.sub(&product.scale(&coeff));
            out.add_term(factors, coeff);
            last = Some(w);
        }
    }
    out
}

/// Convenience: the constant polynomial one.
pub fn unit() -> LyndonPoly {
    let mut p = LyndonPoly::default();
    p.add_term(Vec::new(), Rational::one());
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn w(letters: &[u32]) -> Word {
        Word::new(letters.to_vec()).unwrap()
    }

    #[test]
    fn lyndon_predicate() {
        assert!(is_lyndon(&w(&[1])).unwrap());
        assert!(!is_lyndon(&w(&[1, 2])).unwrap());
        assert!(is_lyndon(&w(&[2, 1])).unwrap());
        assert!(!is_lyndon(&w(&[1, 1])).unwrap());
        assert!(!is_lyndon(&w(&[2, 2])).unwrap());
        assert_eq!(is_lyndon(&Word::empty()), Err(Error::EmptyWord));
    }

    #[test]
    fn small_weights() {
        assert_eq!(lyndon_words(1), vec![w(&[1])]);
        assert_eq!(lyndon_words(2), vec![w(&[2])]);
        assert_eq!(lyndon_words(3), vec![w(&[2, 1]), w(&[3])]);
        // Exhaustive filter oracle: 2^(n-1) compositions of n.
        assert_eq!(words_of_weight(3).len(), 4);
    }

    #[test]
    fn factorization_examples() {
        assert_eq!(lyndon_factorize(&w(&[2])).unwrap(), vec![w(&[2])]);
        assert_eq!(lyndon_factorize(&w(&[1, 2])).unwrap(), vec![w(&[1]), w(&[2])]);
        assert_eq!(lyndon_factorize(&w(&[2, 1])).unwrap(), vec![w(&[2, 1])]);
        assert_eq!(lyndon_factorize(&w(&[1, 1, 3, 2])).unwrap(), vec![w(&[1]), w(&[1]), w(&[3, 2])]);
        assert_eq!(lyndon_factorize(&w(&[2, 2, 3])).unwrap(), vec![w(&[2]), w(&[2]), w(&[3])]);
        assert_eq!(lyndon_factorize(&Word::empty()), Err(Error::EmptyWord));
    }

    #[test]
    fn decomposition_examples() {
        let d = lyndon_decompose(&QsymPoly::word(w(&[2])));
        assert_eq!(d.terms().len(), 1);
        assert_eq!(d.terms()[&vec![w(&[2])]], int(1));

        let d = lyndon_decompose(&QsymPoly::word(w(&[1, 2])));
        let expected: BTreeMap<Vec<Word>, Rational> = [
            (vec![w(&[1]), w(&[2])], int(1)),
            (vec![w(&[2, 1])], int(-1)),
            (vec![w(&[3])], int(-1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(d.terms(), &expected);
        assert_eq!(d.to_string(), "z_1·z_2 - z_2z_1 - z_3");

        let d = lyndon_decompose(&QsymPoly::word(w(&[1, 1])));
        let expected: BTreeMap<Vec<Word>, Rational> =
            [(vec![w(&[1]), w(&[1])], rat(1, 2)), (vec![w(&[2])], rat(-1, 2))].into_iter().collect();
        assert_eq!(d.terms(), &expected);
    }

    #[test]
    fn decomposition_of_unit_and_zero() {
        assert_eq!(lyndon_decompose(&QsymPoly::one()), unit());
        assert!(lyndon_decompose(&QsymPoly::zero()).terms().is_empty());
    }
}
