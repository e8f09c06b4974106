//! The coefficient ring `Q[γ, π², ζ(3), ζ(5), …]` and the ζ homomorphisms
//! from Sym and from H¹.
//!
//! Even zeta values are normalized to rational multiples of powers of π²;
//! γ and the odd zeta values are independent atoms. Multiple zeta values
//! coming out of [`zeta_word`] stay symbolic.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lyndon::{lyndon_decompose, stuffle_all};
use crate::partition::Partition;
use crate::rational::{self, binomial, factorial, Rational};
use crate::sym::{Basis, SymPoly};
use crate::words::{distinct_permutations, QsymPoly, Word};

/// A generator of the coefficient ring, in its fixed order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Gamma,
    PiSquared,
    /// ζ(k) for odd k ≥ 3.
    OddZeta(u32),
}

impl Generator {
    pub fn weight(self) -> u32 {
        match self {
            Generator::Gamma => 1,
            Generator::PiSquared => 2,
            Generator::OddZeta(k) => k,
        }
    }

    pub fn key(self) -> String {
        match self {
            Generator::Gamma => "gamma".into(),
            Generator::PiSquared => "pi2".into(),
            Generator::OddZeta(k) => format!("zeta{k}"),
        }
    }

    pub fn from_key(s: &str) -> Result<Self> {
        match s {
            "gamma" => Ok(Generator::Gamma),
            "pi2" => Ok(Generator::PiSquared),
            _ => {
                let k = s
                    .strip_prefix("zeta")
                    .and_then(|k| k.parse::<u32>().ok())
                    .filter(|k| k % 2 == 1 && *k >= 3)
                    .ok_or_else(|| Error::Parse(format!("unknown ring generator {s:?}")))?;
                Ok(Generator::OddZeta(k))
            }
        }
    }
}

/// A monomial in the generators: generator → positive exponent.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ZetaMonomial(BTreeMap<Generator, u32>);

impl ZetaMonomial {
    pub fn one() -> Self {
        ZetaMonomial::default()
    }

    pub fn generator(g: Generator, exp: u32) -> Self {
        let mut m = BTreeMap::new();
        if exp > 0 {
            m.insert(g, exp);
        }
        ZetaMonomial(m)
    }

    pub fn exponents(&self) -> &BTreeMap<Generator, u32> {
        &self.0
    }

    pub fn exponent(&self, g: Generator) -> u32 {
        self.0.get(&g).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().map(|(g, e)| g.weight() * e).sum()
    }

    pub fn mul(&self, other: &ZetaMonomial) -> ZetaMonomial {
        let mut out = self.0.clone();
        for (g, e) in &other.0 {
            *out.entry(*g).or_insert(0) += e;
        }
        ZetaMonomial(out)
    }
}

impl Serialize for ZetaMonomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (g, e) in &self.0 {
            map.serialize_entry(&g.key(), e)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for ZetaMonomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = ZetaMonomial;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map from generator names to exponents")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut a: A) -> std::result::Result<ZetaMonomial, A::Error> {
                let mut out = BTreeMap::new();
                while let Some((k, e)) = a.next_entry::<String, u32>()? {
                    let g = Generator::from_key(&k).map_err(de::Error::custom)?;
                    if e > 0 {
                        *out.entry(g).or_insert(0) += e;
                    }
                }
                Ok(ZetaMonomial(out))
            }
        }
        d.deserialize_map(V)
    }
}

/// Text rendering style for ring elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Notation {
    #[default]
    Unicode,
    Ascii,
}

impl Notation {
    pub(crate) fn times(self) -> &'static str {
        match self {
            Notation::Unicode => "·",
            Notation::Ascii => "*",
        }
    }

    pub(crate) fn power(self, base: &str, exp: u32) -> String {
        if exp == 1 {
            return base.to_string();
        }
        match self {
            Notation::Unicode => format!("{base}{}", superscript(exp)),
            Notation::Ascii => format!("{base}^{exp}"),
        }
    }

    pub(crate) fn gamma(self) -> &'static str {
        match self {
            Notation::Unicode => "γ",
            Notation::Ascii => "gamma",
        }
    }

    pub(crate) fn zeta(self, args: &[u32]) -> String {
        let inner = args.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        match self {
            Notation::Unicode => format!("ζ({inner})"),
            Notation::Ascii => format!("zeta({inner})"),
        }
    }
}

fn superscript(n: u32) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().chars().map(|c| DIGITS[c.to_digit(10).unwrap() as usize]).collect()
}

impl ZetaMonomial {
    pub fn render(&self, notation: Notation) -> String {
        let factors: Vec<String> = self
            .0
            .iter()
            .map(|(g, &e)| match g {
                Generator::Gamma => notation.power(notation.gamma(), e),
                Generator::PiSquared => match notation {
                    Notation::Unicode => format!("π{}", superscript(2 * e)),
                    Notation::Ascii => format!("pi^{}", 2 * e),
                },
                Generator::OddZeta(k) => notation.power(&notation.zeta(&[*k]), e),
            })
            .collect();
        if factors.is_empty() {
            "1".into()
        } else {
            factors.join(notation.times())
        }
    }
}

/// Exact-rational polynomial in the ring generators.
#[derive(Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(into = "Vec<ZetaTermWire>", try_from = "Vec<ZetaTermWire>")]
pub struct ZetaPoly {
    terms: BTreeMap<ZetaMonomial, Rational>,
}

impl ZetaPoly {
    pub fn constant(c: Rational) -> Self {
        Self::term(ZetaMonomial::one(), c)
    }

    pub fn term(m: ZetaMonomial, c: Rational) -> Self {
        let mut out = ZetaPoly::default();
        out.add_term(m, c);
        out
    }

    pub fn generator(g: Generator) -> Self {
        Self::term(ZetaMonomial::generator(g, 1), Rational::one())
    }

    pub fn gamma() -> Self {
        Self::generator(Generator::Gamma)
    }

    pub fn pi_squared() -> Self {
        Self::generator(Generator::PiSquared)
    }

    pub fn terms(&self) -> &BTreeMap<ZetaMonomial, Rational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &ZetaMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, m: ZetaMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(m, s);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> ZetaPoly {
        let mut out = ZetaPoly::default();
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x * c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> ZetaPoly {
        (0..e).fold(ZetaPoly::one(), |acc, _| &acc * self)
    }

    /// Distinct weights of the monomials present, ascending.
    pub fn weights(&self) -> Vec<u32> {
        let mut ws: Vec<u32> = self.terms.keys().map(ZetaMonomial::weight).collect();
        ws.sort_unstable();
        ws.dedup();
        ws
    }

    /// True when every monomial has weight `w` (vacuously true for zero).
    pub fn is_homogeneous_of_weight(&self, w: u32) -> bool {
        self.terms.keys().all(|m| m.weight() == w)
    }

    pub fn render(&self, notation: Notation) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        // Highest weight first, then larger powers of earlier generators first.
        let mut items: Vec<(&ZetaMonomial, &Rational)> = self.terms.iter().collect();
        items.sort_by(|a, b| {
            b.0.weight().cmp(&a.0.weight()).then_with(|| {
                let gens: std::collections::BTreeSet<Generator> =
                    a.0 .0.keys().chain(b.0 .0.keys()).copied().collect();
                gens.into_iter()
                    .map(|g| b.0.exponent(g).cmp(&a.0.exponent(g)))
                    .find(|o| o.is_ne())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
        });
        for (i, (m, c)) in items.into_iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let a = rational::abs_pretty(c);
            let mono = m.render(notation);
            if mono == "1" {
                out.push_str(&a);
            } else if a == "1" {
                out.push_str(&mono);
            } else {
                out.push_str(&a);
                out.push_str(notation.times());
                out.push_str(&mono);
            }
        }
        out
    }
}

impl fmt::Debug for ZetaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(Notation::Unicode))
    }
}

impl fmt::Display for ZetaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(Notation::Unicode))
    }
}

impl<'a> Add<&'a ZetaPoly> for &'a ZetaPoly {
    type Output = ZetaPoly;
    fn add(self, rhs: &ZetaPoly) -> ZetaPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a ZetaPoly> for &'a ZetaPoly {
    type Output = ZetaPoly;
    fn sub(self, rhs: &ZetaPoly) -> ZetaPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a ZetaPoly> for &'a ZetaPoly {
    type Output = ZetaPoly;
    fn mul(self, rhs: &ZetaPoly) -> ZetaPoly {
        let mut out = ZetaPoly::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Add for ZetaPoly {
    type Output = ZetaPoly;
    fn add(self, rhs: ZetaPoly) -> ZetaPoly {
        &self + &rhs
    }
}

impl Sub for ZetaPoly {
    type Output = ZetaPoly;
    fn sub(self, rhs: ZetaPoly) -> ZetaPoly {
        &self - &rhs
    }
}

impl Mul for ZetaPoly {
    type Output = ZetaPoly;
    fn mul(self, rhs: ZetaPoly) -> ZetaPoly {
        &self * &rhs
    }
}

impl Neg for ZetaPoly {
    type Output = ZetaPoly;
    fn neg(self) -> ZetaPoly {
        self.scale(&-Rational::one())
    }
}

impl Zero for ZetaPoly {
    fn zero() -> Self {
        ZetaPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for ZetaPoly {
    fn one() -> Self {
        ZetaPoly::constant(Rational::one())
    }
}

#[derive(Serialize, Deserialize)]
pub(crate) struct ZetaTermWire {
    monomial: ZetaMonomial,
    #[serde(with = "rational::serde_wire")]
    coeff: Rational,
}

impl From<ZetaPoly> for Vec<ZetaTermWire> {
    fn from(p: ZetaPoly) -> Self {
        p.terms.into_iter().map(|(monomial, coeff)| ZetaTermWire { monomial, coeff }).collect()
    }
}

impl TryFrom<Vec<ZetaTermWire>> for ZetaPoly {
    type Error = Error;
    fn try_from(v: Vec<ZetaTermWire>) -> Result<Self> {
        let mut out = ZetaPoly::default();
        for t in v {
            out.add_term(t.monomial, t.coeff);
        }
        Ok(out)
    }
}

/// Bernoulli number `B_n` with `B_1 = -1/2`, from
/// `Σ_{j=0}^{n} C(n+1, j) B_j = 0`, `B_0 = 1`.
pub fn bernoulli(n: u32) -> Rational {
    bernoulli_table(n).pop().expect("table has n + 1 entries")
}

fn bernoulli_table(n: u32) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(n as usize + 1);
    b.push(Rational::one());
    for m in 1..=n {
        let mut s = Rational::zero();
        for (j, bj) in b.iter().enumerate() {
            s += Rational::from_integer(binomial(m + 1, j as u32)) * bj;
        }
        b.push(-s / Rational::from_integer(BigInt::from(m + 1)));
    }
    b
}

/// `ζ(2k) = (-1)^{k+1} B_{2k} (2π)^{2k} / (2 (2k)!)`, as a multiple of `(π²)^k`.
pub fn zeta_even(two_k: u32) -> Result<ZetaPoly> {
    if two_k < 2 || two_k % 2 == 1 {
        return Err(Error::NotEvenZetaArgument(two_k));
    }
    let k = two_k / 2;
    let b = bernoulli(two_k);
    let sign = if k % 2 == 1 { Rational::one() } else { -Rational::one() };
    let two_pow = Rational::from_integer(BigInt::from(2u32).pow(two_k));
    let c = sign * b * two_pow / Rational::from_integer(BigInt::from(2) * factorial(two_k));
    debug_assert!(c.is_positive());
    Ok(ZetaPoly::term(ZetaMonomial::generator(Generator::PiSquared, k), c))
}

/// ζ(i) as a ring element: normalized when i is even, an atom when odd.
pub fn zeta_gen(i: u32) -> Result<ZetaPoly> {
    match i {
        0 | 1 => Err(Error::ZetaArgumentTooSmall(i)),
        _ if i.is_multiple_of(2) => zeta_even(i),
        _ => Ok(ZetaPoly::generator(Generator::OddZeta(i))),
    }
}

/// The image of `p_i`: γ for `i = 1`, ζ(i) otherwise.
pub fn zeta_of_power_sum(i: u32) -> ZetaPoly {
    if i == 1 {
        ZetaPoly::gamma()
    } else {
        zeta_gen(i).expect("i >= 2")
    }
}

/// The ring homomorphism `Sym → Q[γ, π², ζ(3), …]` with `p_1 ↦ γ`, `p_i ↦ ζ(i)`.
pub fn zeta_hom(f: &SymPoly) -> ZetaPoly {
    let p = f.to_basis(Basis::PowerSum);
    let mut cache: BTreeMap<u32, ZetaPoly> = BTreeMap::new();
    let mut out = ZetaPoly::default();
    for (lambda, c) in p.terms() {
        let mut term = ZetaPoly::constant(c.clone());
        for &part in lambda.parts() {
            let z = cache.entry(part).or_insert_with(|| zeta_of_power_sum(part));
            term = &term * z;
        }
        out = &out + &term;
    }
    out
}

/// A rational multiple of a convergent multiple zeta value `ζ(i_1, …, i_k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MzvTerm {
    pub args: Vec<u32>,
    #[serde(with = "rational::serde_wire")]
    pub coeff: Rational,
}

impl MzvTerm {
    pub fn new(args: Vec<u32>, coeff: Rational) -> Result<Self> {
        match args.first() {
            None => Err(Error::EmptyComposition),
            Some(&i1) if i1 < 2 => Err(Error::Divergent { args: join_args(&args) }),
            _ if args.contains(&0) => Err(Error::ZeroLetter),
            _ => Ok(MzvTerm { args, coeff }),
        }
    }

    pub fn weight(&self) -> u32 {
        self.args.iter().sum()
    }

    pub fn depth(&self) -> usize {
        self.args.len()
    }

    pub fn render(&self, notation: Notation) -> String {
        let a = rational::pretty(&self.coeff);
        let z = notation.zeta(&self.args);
        if a == "1" {
            z
        } else {
            format!("{a}{}{z}", notation.times())
        }
    }
}

pub(crate) fn join_args(args: &[u32]) -> String {
    args.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

/// Value of ζ on an element of H¹: a polynomial in γ whose coefficients are
/// rational combinations of convergent multiple zeta values, kept symbolic.
///
/// Keys are `(power of γ, convergent word)`; the empty word stands for 1.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct WordZeta {
    terms: BTreeMap<(u32, Word), Rational>,
}

impl WordZeta {
    pub fn terms(&self) -> &BTreeMap<(u32, Word), Rational> {
        &self.terms
    }

    fn add_term(&mut self, key: (u32, Word), c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(key).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &WordZeta) -> WordZeta {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    /// Terms free of multiple zeta symbols, as a ring element in γ.
    pub fn zeta_part(&self) -> ZetaPoly {
        let mut out = ZetaPoly::default();
        for ((g, w), c) in &self.terms {
            if w.is_empty() {
                out.add_term(ZetaMonomial::generator(Generator::Gamma, *g), c.clone());
            }
        }
        out
    }

    /// The γ-free multiple zeta terms.
    pub fn mzv_terms(&self) -> Vec<MzvTerm> {
        self.terms
            .iter()
            .rev()
            .filter(|((g, w), _)| *g == 0 && !w.is_empty())
            .map(|((_, w), c)| MzvTerm { args: w.letters().to_vec(), coeff: c.clone() })
            .collect()
    }

    /// True when no term carries a power of γ.
    pub fn is_gamma_free(&self) -> bool {
        self.terms.keys().all(|(g, _)| *g == 0)
    }

    pub fn render(&self, notation: Notation) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, ((g, w), c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            let a = rational::abs_pretty(c);
            if a != "1" {
                factors.push(a);
            }
            if *g > 0 {
                factors.push(notation.power(notation.gamma(), *g));
            }
            if !w.is_empty() {
                factors.push(notation.zeta(w.letters()));
            }
            if factors.is_empty() {
                factors.push("1".into());
            }
            out.push_str(&factors.join(notation.times()));
        }
        out
    }
}

impl fmt::Debug for WordZeta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(Notation::Unicode))
    }
}

impl fmt::Display for WordZeta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(Notation::Unicode))
    }
}

/// ζ on a single word: decompose into Lyndon generators, send `z_1 ↦ γ` and
/// every other Lyndon word to its multiple zeta value.
///
/// Products of the convergent generators are folded back into single
/// multiple zeta values with the stuffle product, which ζ respects; for a
/// word with first subscript > 1 this returns exactly `ζ(i_1, …, i_k)`.
pub fn zeta_word(w: &Word) -> WordZeta {
    zeta_qsym(&QsymPoly::word(w.clone()))
}

/// Linear extension of [`zeta_word`] to H¹.
pub fn zeta_qsym(q: &QsymPoly) -> WordZeta {
    let decomposition = lyndon_decompose(q);
    let mut out = WordZeta::default();
    for (monomial, c) in decomposition.terms() {
        let gamma_power = monomial.iter().filter(|l| l.letters() == [1]).count() as u32;
        let rest: Vec<Word> = monomial.iter().filter(|l| l.letters() != [1]).cloned().collect();
        for (word, k) in stuffle_all(&rest).terms() {
            debug_assert!(word.is_empty() || word.is_convergent());
            out.add_term((gamma_power, word.clone()), c * k);
        }
    }
    out
}

/// Closed form of a full symmetric orbit sum of multiple zeta values.
///
/// For parts `λ` (all ≥ 2) the sum of `ζ(w)` over the distinct
/// rearrangements `w` of λ equals
/// `(1 / Π m_j!) Σ_P (-1)^{k-|P|} Π_{B∈P} (|B|-1)! ζ(Σ_{j∈B} λ_j)`
/// over set partitions `P` of the `k` positions; the identity follows from
/// the stuffle product alone.
pub fn symmetric_orbit_sum(lambda: &Partition) -> Result<ZetaPoly> {
    if lambda.has_part_one() {
        return Err(Error::PartitionHasOne(lambda.parts().to_vec()));
    }
    let parts = lambda.parts();
    let k = parts.len();
    let mut total = ZetaPoly::default();
    for blocks in set_partitions(k) {
        let sign = if (k - blocks.len()).is_multiple_of(2) { Rational::one() } else { -Rational::one() };
        let mut term = ZetaPoly::constant(sign);
        for b in &blocks {
            let s: u32 = b.iter().map(|&j| parts[j]).sum();
            let f = Rational::from_integer(factorial(b.len() as u32 - 1));
            term = &term * &zeta_gen(s)?.scale(&f);
        }
        total = &total + &term;
    }
    let sym: BigInt = lambda.multiplicities().iter().map(|&(_, m)| factorial(m as u32)).product();
    Ok(total.scale(&Rational::new(BigInt::one(), sym)))
}

fn set_partitions(k: usize) -> Vec<Vec<Vec<usize>>> {
    fn rec(j: usize, k: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if j == k {
            out.push(cur.clone());
            return;
        }
        for b in 0..cur.len() {
            cur[b].push(j);
            rec(j + 1, k, cur, out);
            cur[b].pop();
        }
        cur.push(vec![j]);
        rec(j + 1, k, cur, out);
        cur.pop();
    }
    let mut out = Vec::new();
    rec(0, k, &mut Vec::new(), &mut out);
    out
}

/// Replaces every complete symmetric orbit among `terms` by its closed form.
/// Returns `None` if the terms do not split into whole orbits with a common
/// coefficient per orbit.
pub fn reduce_symmetric_orbits(terms: &[MzvTerm]) -> Option<ZetaPoly> {
    let mut orbits: BTreeMap<Partition, Vec<&MzvTerm>> = BTreeMap::new();
    for t in terms {
        let lambda = Partition::new(t.args.clone()).ok()?;
        orbits.entry(lambda).or_default().push(t);
    }
    let mut out = ZetaPoly::default();
    for (lambda, members) in orbits {
        let c = &members[0].coeff;
        if members.iter().any(|t| &t.coeff != c) {
            return None;
        }
        let mut got: Vec<Vec<u32>> = members.iter().map(|t| t.args.clone()).collect();
        got.sort();
        got.dedup();
        if got != distinct_permutations(lambda.parts()) {
            return None;
        }
        out = &out + &symmetric_orbit_sum(&lambda).ok()?.scale(c);
    }
    Some(out)
}
