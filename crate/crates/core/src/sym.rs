//! Symmetric functions in the monomial, elementary and power-sum bases.
//!
//! Conversions between bases are computed, not tabulated: every basis element
//! of degree `d` is expanded into monomials in `d` variables, the resulting
//! transition matrix to the monomial basis is inverted exactly, and the
//! matrices are cached per `(basis, degree)`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multipoly::MultiPoly;
use crate::partition::{partitions_of, Partition};
use crate::rational::{self, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "m")]
    Monomial,
    #[serde(rename = "e")]
    Elementary,
    #[serde(rename = "p")]
    PowerSum,
}

impl Basis {
    pub const ALL: [Basis; 3] = [Basis::Monomial, Basis::Elementary, Basis::PowerSum];

    pub fn tag(self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::Elementary => "e",
            Basis::PowerSum => "p",
        }
    }
}

/// An exact-rational linear combination of basis elements `b_λ` of one basis.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "SymPolyWire", try_from = "SymPolyWire")]
pub struct SymPoly {
    basis: Basis,
    terms: BTreeMap<Partition, Rational>,
}

impl SymPoly {
    pub fn zero(basis: Basis) -> Self {
        SymPoly { basis, terms: BTreeMap::new() }
    }

    pub fn one(basis: Basis) -> Self {
        Self::element(basis, Partition::empty())
    }

    pub fn element(basis: Basis, lambda: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, Rational::one());
        SymPoly { basis, terms }
    }

    pub fn m(parts: &[u32]) -> Self {
        Self::element(Basis::Monomial, Partition::new(parts.to_vec()).expect("positive parts"))
    }

    pub fn e(parts: &[u32]) -> Self {
        Self::element(Basis::Elementary, Partition::new(parts.to_vec()).expect("positive parts"))
    }

    pub fn p(parts: &[u32]) -> Self {
        Self::element(Basis::PowerSum, Partition::new(parts.to_vec()).expect("positive parts"))
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (Partition, Rational)>) -> Self {
        let mut out = Self::zero(basis);
        for (lambda, c) in terms {
            out.add_term(lambda, c);
        }
        out
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Rational> {
        &self.terms
    }

    pub fn coefficient(&self, lambda: &Partition) -> Rational {
        self.terms.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, lambda: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(lambda).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// The set of weights carrying a nonzero term.
    pub fn degrees(&self) -> BTreeSet<usize> {
        self.terms.keys().map(Partition::weight).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().next_back().unwrap_or(0)
    }

    pub fn homogeneous_part(&self, d: usize) -> Self {
        SymPoly {
            basis: self.basis,
            terms: self.terms.iter().filter(|(l, _)| l.weight() == d).map(|(l, c)| (l.clone(), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.basis, self.terms.iter().map(|(l, x)| (l.clone(), x * c)))
    }

    /// Sum, expressed in the basis of `self`.
    pub fn add(&self, other: &SymPoly) -> Self {
        let other = other.to_basis(self.basis);
        let mut out = self.clone();
        for (l, c) in other.terms {
            out.add_term(l, c);
        }
        out
    }

    pub fn sub(&self, other: &SymPoly) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Product, expressed in the basis of `self`.
    ///
    /// In the e and p bases a product of basis elements is the basis element
    /// of the union partition. Monomial-basis products go through the p basis;
    /// [`mul_via_expansion`] is the independent route.
    pub fn mul(&self, other: &SymPoly) -> Self {
        match self.basis {
            Basis::Elementary | Basis::PowerSum => {
                let other = other.to_basis(self.basis);
                let mut out = Self::zero(self.basis);
                for (la, ca) in &self.terms {
                    for (lb, cb) in &other.terms {
                        out.add_term(la.union(lb), ca * cb);
                    }
                }
                out
            }
            Basis::Monomial => self
                .to_basis(Basis::PowerSum)
                .mul(other)
                .to_basis(Basis::Monomial),
        }
    }

    /// Re-express in `target`. Exact; conversions are total.
    pub fn to_basis(&self, target: Basis) -> SymPoly {
        if target == self.basis {
            return self.clone();
        }
        let mut out = SymPoly::zero(target);
        for d in self.degrees() {
            let m_coeffs = self.homogeneous_part(d).monomial_coefficients(d);
            if target == Basis::Monomial {
                for (l, c) in m_coeffs {
                    out.add_term(l, c);
                }
                continue;
            }
            let table = transition(target, d);
            // x = m · T⁻¹, where rows of T expand target elements in m.
            let mvec: Vec<Rational> = table
                .partitions
                .iter()
                .map(|l| m_coeffs.get(l).cloned().unwrap_or_else(Rational::zero))
                .collect();
            for (j, mu) in table.partitions.iter().enumerate() {
                let mut x = Rational::zero();
                for (i, mi) in mvec.iter().enumerate() {
                    if !mi.is_zero() && !table.from_m[i][j].is_zero() {
                        x += mi * &table.from_m[i][j];
                    }
                }
                out.add_term(mu.clone(), x);
            }
        }
        out
    }

    /// Coefficients in the m basis of a homogeneous degree-`d` polynomial.
    fn monomial_coefficients(&self, d: usize) -> BTreeMap<Partition, Rational> {
        if self.basis == Basis::Monomial {
            return self.terms.clone();
        }
        let table = transition(self.basis, d);
        let mut out: BTreeMap<Partition, Rational> = BTreeMap::new();
        for (lambda, c) in &self.terms {
            let i = table.index[lambda];
            for (j, mu) in table.partitions.iter().enumerate() {
                let t = &table.to_m[i][j];
                if !t.is_zero() {
                    *out.entry(mu.clone()).or_insert_with(Rational::zero) += c * t;
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }
}

impl fmt::Debug for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (l, c)) in self.terms.iter().enumerate() {
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
            write!(f, "{}{}", self.basis.tag(), l)?;
        }
        Ok(())
    }
}

/// Expand `f` as an explicit polynomial in `t_1, …, t_n`.
///
/// Uses only the defining formulas: `m_λ` is the sum over the distinct
/// rearrangements of λ, `e_k` the sum of square-free degree-k monomials and
/// `p_k = Σ t_j^k`; `e_λ` and `p_λ` are products.
pub fn expand_in_vars(f: &SymPoly, n: usize) -> Result<MultiPoly<Rational>> {
    let needed = f.max_degree();
    if n < needed || n == 0 {
        return Err(Error::TooFewVariables { needed: needed.max(1), given: n });
    }
    Ok(expand_truncated(f, n))
}

/// Like [`expand_in_vars`] but without the variable-count guard: the image
/// of `f` under setting `t_j = 0` for `j > n`. Basis elements with more parts
/// than variables may vanish here.
pub fn expand_truncated(f: &SymPoly, n: usize) -> MultiPoly<Rational> {
    let mut out = MultiPoly::zero(n);
    for (lambda, c) in f.terms() {
        let term = match f.basis() {
            Basis::Monomial => monomial_function(lambda, n),
            Basis::Elementary => lambda
                .parts()
                .iter()
                .fold(MultiPoly::one(n), |acc, &k| acc.mul(&elementary_function(k as usize, n))),
            Basis::PowerSum => lambda
                .parts()
                .iter()
                .fold(MultiPoly::one(n), |acc, &k| acc.mul(&power_sum_function(k, n))),
        };
        out = out.add(&term.scale(c));
    }
    out
}

fn monomial_function(lambda: &Partition, n: usize) -> MultiPoly<Rational> {
    let mut out = MultiPoly::zero(n);
    if lambda.len() > n {
        return out;
    }
    let mut exps = lambda.parts().to_vec();
    exps.resize(n, 0);
    for perm in crate::words::distinct_permutations(&exps) {
        out.add_term(perm, Rational::one());
    }
    out
}

fn elementary_function(k: usize, n: usize) -> MultiPoly<Rational> {
    let mut out = MultiPoly::zero(n);
    for subset in k_subsets(n, k) {
        let mut exps = vec![0; n];
        for j in subset {
            exps[j] = 1;
        }
        out.add_term(exps, Rational::one());
    }
    out
}

fn power_sum_function(k: u32, n: usize) -> MultiPoly<Rational> {
    let mut out = MultiPoly::zero(n);
    for j in 0..n {
        let mut exps = vec![0; n];
        exps[j] = k;
        out.add_term(exps, Rational::one());
    }
    out
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for j in start..n {
            if n - j < k - cur.len() {
                break;
            }
            cur.push(j);
            rec(j + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Re-collect a symmetric polynomial into the m basis, reading off `t^λ`
/// for every partition of every degree up to `max_degree`.
pub fn collect_monomial_basis(poly: &MultiPoly<Rational>, max_degree: usize) -> SymPoly {
    let mut out = SymPoly::zero(Basis::Monomial);
    for d in 0..=max_degree {
        for lambda in partitions_of(d) {
            let c = poly.m_coefficient(&lambda);
            out.add_term(lambda, c);
        }
    }
    out
}

/// Product computed by expanding both factors in explicit variables,
/// multiplying there, and re-collecting in the m basis.
pub fn mul_via_expansion(f: &SymPoly, g: &SymPoly) -> SymPoly {
    let d = f.max_degree() + g.max_degree();
    let n = d.max(1);
    let pf = expand_in_vars(f, n).expect("n covers the degree");
    let pg = expand_in_vars(g, n).expect("n covers the degree");
    collect_monomial_basis(&pf.mul(&pg), d)
}

/// The matrix `M` with `e_λ = Σ_μ M_{λμ} m_μ`, rows and columns over the
/// partitions of `n` in the fixed order.
pub fn e_to_m_matrix(n: usize) -> (Vec<Partition>, Vec<Vec<Rational>>) {
    let t = transition(Basis::Elementary, n);
    (t.partitions.clone(), t.to_m.clone())
}

pub(crate) struct Transition {
    pub partitions: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    pub to_m: Vec<Vec<Rational>>,
    pub from_m: Vec<Vec<Rational>>,
}

type TransitionCache = Mutex<HashMap<(Basis, usize), Arc<Transition>>>;

pub(crate) fn transition(basis: Basis, d: usize) -> Arc<Transition> {
    static CACHE: OnceLock<TransitionCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().expect("cache poisoned").get(&(basis, d)) {
        return Arc::clone(t);
    }
    let t = Arc::new(build_transition(basis, d));
    cache.lock().expect("cache poisoned").entry((basis, d)).or_insert(t).clone()
}

fn build_transition(basis: Basis, d: usize) -> Transition {
    let partitions = partitions_of(d);
    let index: HashMap<Partition, usize> = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let size = partitions.len();
    let to_m: Vec<Vec<Rational>> = match basis {
        Basis::Monomial => identity(size),
        _ => partitions
            .iter()
            .map(|lambda| {
                let counts = integer_m_expansion(basis, lambda, d);
                partitions
                    .iter()
                    .map(|mu| Rational::from_integer(BigInt::from(counts.get(mu.parts()).copied().unwrap_or(0))))
                    .collect()
            })
            .collect(),
    };
    let from_m = rational::invert(&to_m).expect("basis transition matrices are invertible");
    Transition { partitions, index, to_m, from_m }
}

fn identity(n: usize) -> Vec<Vec<Rational>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect()
}

/// m-coefficients of `e_λ` or `p_λ` (weight `d`) by expanding in `d`
/// variables with integer coefficients.
///
/// An intermediate monomial `t^α` can only reach a final monomial `t^μ` with
/// μ weakly decreasing if `Σ_i max_{j≥i} α_j ≤ d`; all others are dropped.
/// Returns a map from the (trailing-zero-stripped) decreasing exponent vector
/// to its coefficient.
fn integer_m_expansion(basis: Basis, lambda: &Partition, d: usize) -> HashMap<Vec<u32>, i64> {
    let n = d;
    let mut acc: HashMap<Vec<u8>, i64> = HashMap::new();
    acc.insert(vec![0u8; n], 1);
    for &k in lambda.parts() {
        let factor: Vec<Vec<u8>> = match basis {
            Basis::Elementary => k_subsets(n, k as usize)
                .into_iter()
                .map(|s| {
                    let mut e = vec![0u8; n];
                    for j in s {
                        e[j] = 1;
                    }
                    e
                })
                .collect(),
            Basis::PowerSum => (0..n)
                .map(|j| {
                    let mut e = vec![0u8; n];
                    e[j] = k as u8;
                    e
                })
                .collect(),
            Basis::Monomial => unreachable!("m basis needs no expansion"),
        };
        let mut next: HashMap<Vec<u8>, i64> = HashMap::with_capacity(acc.len() * 2);
        for (a, c) in &acc {
            for f in &factor {
                let e: Vec<u8> = a.iter().zip(f).map(|(x, y)| x + y).collect();
                if suffix_max_weight(&e) > d {
                    continue;
                }
                *next.entry(e).or_insert(0) += c;
            }
        }
        acc = next;
    }
    acc.into_iter()
        .filter(|(e, c)| *c != 0 && e.windows(2).all(|w| w[0] >= w[1]))
        .map(|(e, c)| (e.into_iter().filter(|&x| x > 0).map(u32::from).collect(), c))
        .collect()
}

fn suffix_max_weight(e: &[u8]) -> usize {
    let mut best = 0u8;
    let mut total = 0usize;
    for &x in e.iter().rev() {
        best = best.max(x);
        total += best as usize;
    }
    total
}

#[derive(Serialize, Deserialize)]
struct SymPolyWire {
    basis: Basis,
    terms: Vec<SymTermWire>,
}

#[derive(Serialize, Deserialize)]
struct SymTermWire {
    partition: Partition,
    #[serde(with = "rational::serde_wire")]
    coeff: Rational,
}

impl From<SymPoly> for SymPolyWire {
    fn from(p: SymPoly) -> Self {
        SymPolyWire {
            basis: p.basis,
            terms: p.terms.into_iter().map(|(partition, coeff)| SymTermWire { partition, coeff }).collect(),
        }
    }
}

impl TryFrom<SymPolyWire> for SymPoly {
    type Error = Error;

    fn try_from(w: SymPolyWire) -> Result<Self> {
        Ok(SymPoly::from_terms(w.basis, w.terms.into_iter().map(|t| (t.partition, t.coeff))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn mono(exps: &[u32], c: i64) -> MultiPoly<Rational> {
        MultiPoly::monomial(exps.to_vec(), int(c))
    }

    #[test]
    fn expansion_definitions() {
        assert_eq!(expand_in_vars(&SymPoly::e(&[2]), 2).unwrap(), mono(&[1, 1], 1));
        let p2 = expand_in_vars(&SymPoly::p(&[2]), 3).unwrap();
        assert_eq!(p2, mono(&[2, 0, 0], 1).add(&mono(&[0, 2, 0], 1)).add(&mono(&[0, 0, 2], 1)));
        let m21 = expand_truncated(&SymPoly::m(&[2, 1]), 2);
        assert_eq!(m21, mono(&[2, 1], 1).add(&mono(&[1, 2], 1)));
    }

    #[test]
    fn expansion_rejects_too_few_variables() {
        assert!(expand_in_vars(&SymPoly::m(&[2, 1]), 2).is_err());
        assert!(matches!(
            expand_in_vars(&SymPoly::p(&[3]), 2),
            Err(Error::TooFewVariables { needed: 3, given: 2 })
        ));
    }

    #[test]
    fn e2_in_power_sums() {
        // Frozen from a brute-force solve in two variables:
        // t1 t2 = a (t1 + t2)^2 + b (t1^2 + t2^2) gives a = 1/2, b = -1/2.
        let e2 = SymPoly::e(&[2]).to_basis(Basis::PowerSum);
        let expected = SymPoly::from_terms(Basis::PowerSum, [(part(&[1, 1]), rat(1, 2)), (part(&[2]), rat(-1, 2))]);
        assert_eq!(e2, expected);
    }

    #[test]
    fn monomials_in_power_sums() {
        assert_eq!(SymPoly::m(&[2]).to_basis(Basis::PowerSum), SymPoly::p(&[2]));
        // Frozen from expansion in three variables: p21 = m3 + m21, p3 = m3.
        let expected = SymPoly::from_terms(Basis::PowerSum, [(part(&[2, 1]), int(1)), (part(&[3]), int(-1))]);
        assert_eq!(SymPoly::m(&[2, 1]).to_basis(Basis::PowerSum), expected);
    }

    #[test]
    fn small_e_to_m_matrices() {
        let (ps, m1) = e_to_m_matrix(1);
        assert_eq!(ps, vec![part(&[1])]);
        assert_eq!(m1, vec![vec![int(1)]]);
        let (_, m2) = e_to_m_matrix(2);
        assert_eq!(m2, vec![vec![int(0), int(1)], vec![int(1), int(2)]]);
    }

    #[test]
    fn pruned_expansion_matches_full_expansion() {
        for d in 1..=6 {
            for basis in [Basis::Elementary, Basis::PowerSum] {
                let table = transition(basis, d);
                for (i, lambda) in table.partitions.iter().enumerate() {
                    let full = expand_in_vars(&SymPoly::element(basis, lambda.clone()), d).unwrap();
                    for (j, mu) in table.partitions.iter().enumerate() {
                        assert_eq!(table.to_m[i][j], full.m_coefficient(mu), "{basis:?} {lambda} {mu}");
                    }
                }
            }
        }
    }

    #[test]
    fn degree_zero_is_the_unit() {
        let one = SymPoly::one(Basis::Elementary);
        assert_eq!(one.to_basis(Basis::PowerSum), SymPoly::one(Basis::PowerSum));
        assert_eq!(one.to_basis(Basis::Monomial), SymPoly::one(Basis::Monomial));
    }

    #[test]
    fn inhomogeneous_and_mixed_arithmetic() {
        let f = SymPoly::p(&[1]).add(&SymPoly::e(&[2]));
        assert_eq!(f.degrees().into_iter().collect::<Vec<_>>(), vec![1, 2]);
        let back = f.to_basis(Basis::Monomial).to_basis(Basis::PowerSum);
        assert_eq!(back, f);
        assert!(f.sub(&f).is_zero());
    }

    #[test]
    fn json_shape() {
        let f = SymPoly::e(&[2]).to_basis(Basis::PowerSum);
        let js = serde_json::to_value(&f).unwrap();
        assert_eq!(
            js,
            serde_json::json!({"basis":"p","terms":[{"partition":[2],"coeff":"-1/2"},{"partition":[1,1],"coeff":"1/2"}]})
        );
        let back: SymPoly = serde_json::from_value(js).unwrap();
        assert_eq!(back, f);
    }
}
