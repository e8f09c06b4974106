//! Words in the letters `z_1, z_2, …` and the stuffle (quasi-shuffle) product.

use std::cmp::{Ordering, Reverse};
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::sym::{Basis, SymPoly};

/// A word `z_{i_1} z_{i_2} ⋯ z_{i_k}`, stored as its subscripts.
///
/// Words are ordered letter by letter with `z_1 > z_2 > z_3 > ⋯`; a proper
/// prefix is smaller than any of its extensions.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "Vec<u32>", try_from = "Vec<u32>")]
pub struct Word(Vec<u32>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::ZeroLetter);
        }
        Ok(Word(letters))
    }

    /// Single-letter word `z_i`.
    pub fn letter(i: u32) -> Self {
        assert!(i > 0, "letters are z_1, z_2, …");
        Word(vec![i])
    }

    pub(crate) fn from_vec(letters: Vec<u32>) -> Self {
        debug_assert!(!letters.contains(&0));
        Word(letters)
    }

    /// Parses a comma-separated subscript list: `"6,2"` is `z_6 z_2`, `""` the empty word.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::empty());
        }
        let letters = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad word letter {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        Word::new(letters)
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// First subscript at least 2, so the corresponding multiple zeta value converges.
    pub fn is_convergent(&self) -> bool {
        self.0.first().is_some_and(|&i| i >= 2)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn suffix(&self, from: usize) -> Word {
        Word(self.0[from..].to_vec())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.iter().map(Reverse).cmp(other.0.iter().map(Reverse))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Word> for Vec<u32> {
    fn from(w: Word) -> Self {
        w.0
    }
}

impl TryFrom<Vec<u32>> for Word {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Word::new(v)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for i in &self.0 {
            write!(f, "z_{i}")?;
        }
        Ok(())
    }
}

/// A rational linear combination of words: an element of H¹.
#[derive(Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(into = "Vec<QsymTermWire>", try_from = "Vec<QsymTermWire>")]
pub struct QsymPoly {
    terms: BTreeMap<Word, Rational>,
}

impl QsymPoly {
    pub fn zero() -> Self {
        QsymPoly::default()
    }

    pub fn one() -> Self {
        Self::word(Word::empty())
    }

    pub fn word(w: Word) -> Self {
        let mut out = Self::zero();
        out.add_term(w, Rational::one());
        out
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Rational)>) -> Self {
        let mut out = Self::zero();
        for (w, c) in terms {
            out.add_term(w, c);
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<Word, Rational> {
        &self.terms
    }

    pub fn coefficient(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest word with a nonzero coefficient.
    pub fn leading(&self) -> Option<(&Word, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&w) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(w, s);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add(&self, other: &QsymPoly) -> QsymPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &QsymPoly) -> QsymPoly {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> QsymPoly {
        QsymPoly::from_terms(self.terms.iter().map(|(w, x)| (w.clone(), x * c)))
    }

    pub fn homogeneous_part(&self, weight: u32) -> QsymPoly {
        QsymPoly::from_terms(
            self.terms
                .iter()
                .filter(|(w, _)| w.weight() == weight)
                .map(|(w, c)| (w.clone(), c.clone())),
        )
    }

    pub fn weights(&self) -> Vec<u32> {
        let mut ws: Vec<u32> = self.terms.keys().map(Word::weight).collect();
        ws.sort_unstable();
        ws.dedup();
        ws
    }

    pub fn stuffle(&self, other: &QsymPoly) -> QsymPoly {
        stuffle(self, other)
    }
}

impl fmt::Debug for QsymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QsymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().rev().enumerate() {
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
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
pub(crate) struct QsymTermWire {
    word: Word,
    #[serde(with = "rational::serde_wire")]
    coeff: Rational,
}

impl From<QsymPoly> for Vec<QsymTermWire> {
    fn from(q: QsymPoly) -> Self {
        q.terms.into_iter().rev().map(|(word, coeff)| QsymTermWire { word, coeff }).collect()
    }
}

impl TryFrom<Vec<QsymTermWire>> for QsymPoly {
    type Error = Error;

    fn try_from(v: Vec<QsymTermWire>) -> Result<Self> {
        Ok(QsymPoly::from_terms(v.into_iter().map(|t| (t.word, t.coeff))))
    }
}

/// Bilinear stuffle product, with
/// `z_i u * z_j v = z_i (u * z_j v) + z_j (z_i u * v) + z_{i+j} (u * v)`
/// and the empty word as unit.
pub fn stuffle(a: &QsymPoly, b: &QsymPoly) -> QsymPoly {
    let mut out = QsymPoly::zero();
    for (wa, ca) in &a.terms {
        for (wb, cb) in &b.terms {
            let coeff = ca * cb;
            for (w, n) in stuffle_words(wa.letters(), wb.letters()) {
                out.add_term(Word(w), &coeff * Rational::from_integer(n.into()));
            }
        }
    }
    out
}

/// Stuffle of two words with integer multiplicities, by dynamic programming
/// over suffix pairs.
pub(crate) fn stuffle_words(a: &[u32], b: &[u32]) -> HashMap<Vec<u32>, u64> {
    let (la, lb) = (a.len(), b.len());
    // table[i][j] = a[i..] * b[j..]
    let mut table: Vec<Vec<HashMap<Vec<u32>, u64>>> = vec![vec![HashMap::new(); lb + 1]; la + 1];
    for i in (0..=la).rev() {
        for j in (0..=lb).rev() {
            let cell = if i == la {
                HashMap::from([(b[j..].to_vec(), 1)])
            } else if j == lb {
                HashMap::from([(a[i..].to_vec(), 1)])
            } else {
                let mut cell = HashMap::new();
                prepend_into(&mut cell, a[i], &table[i + 1][j]);
                prepend_into(&mut cell, b[j], &table[i][j + 1]);
                prepend_into(&mut cell, a[i] + b[j], &table[i + 1][j + 1]);
                cell
            };
            table[i][j] = cell;
        }
    }
    std::mem::take(&mut table[0][0])
}

fn prepend_into(target: &mut HashMap<Vec<u32>, u64>, letter: u32, source: &HashMap<Vec<u32>, u64>) {
    for (w, n) in source {
        let mut v = Vec::with_capacity(w.len() + 1);
        v.push(letter);
        v.extend_from_slice(w);
        *target.entry(v).or_insert(0) += n;
    }
}

/// All distinct rearrangements of `items`, in lexicographic order of the
/// sorted-ascending start.
pub fn distinct_permutations<T: Ord + Clone>(items: &[T]) -> Vec<Vec<T>> {
    let mut cur: Vec<T> = items.to_vec();
    cur.sort();
    let mut out = vec![cur.clone()];
    while next_permutation(&mut cur) {
        out.push(cur.clone());
    }
    out
}

fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Embeds Sym into H¹: `m_λ` goes to the sum of the distinct words whose
/// letters are a rearrangement of λ.
pub fn sym_to_words(f: &SymPoly) -> QsymPoly {
    let m = f.to_basis(Basis::Monomial);
    let mut out = QsymPoly::zero();
    for (lambda, c) in m.terms() {
        for perm in distinct_permutations(lambda.parts()) {
            out.add_term(Word(perm), c.clone());
        }
    }
    out
}
