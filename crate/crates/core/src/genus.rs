//! The multiplicative sequence `Q_i(c_1, …, c_i)` of `1/Γ(1+z)`.
//!
//! [`q_genus`] uses the closed form: the coefficient of `c_λ` is `ζ(m_λ)`.
//! [`q_genus_oracle`] expands the generating product
//! `Π_j Σ_d ζ(e_d) t_j^d` directly and solves for the e-basis expression,
//! which must give the same polynomials.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multipoly::MultiPoly;
use crate::partition::{partitions_of, Partition};
use crate::rational::{self, Rational};
use crate::sym::{e_to_m_matrix, SymPoly};
use crate::words::distinct_permutations;
use crate::zeta::{zeta_hom, MzvTerm, Notation, ZetaPoly};

/// Largest degree [`q_genus`] accepts by default.
pub const DEFAULT_DEGREE_BUDGET: usize = 12;
/// Largest degree accepted by the exponential-cost [`q_genus_oracle`].
pub const ORACLE_DEGREE_BUDGET: usize = 6;

/// `Q_i = Σ_{λ ⊢ i} coeff(λ) · c_λ` with `c_λ = c_{λ_1} c_{λ_2} ⋯`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "GenusWire", try_from = "GenusWire")]
pub struct GenusPolynomial {
    degree: usize,
    coeffs: BTreeMap<Partition, ZetaPoly>,
}

impl GenusPolynomial {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, ZetaPoly> {
        &self.coeffs
    }

    pub fn coefficient(&self, lambda: &Partition) -> ZetaPoly {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    /// Every key has weight `degree` and every coefficient is homogeneous of that weight.
    pub fn is_graded(&self) -> bool {
        self.coeffs
            .iter()
            .all(|(l, c)| l.weight() == self.degree && c.is_homogeneous_of_weight(self.degree as u32))
    }

    pub fn render(&self, notation: Notation) -> String {
        let terms = self.coeffs.iter().map(|(l, c)| (l, render_coefficient(c, notation)));
        format!("Q_{} = {}", self.degree, join_terms(terms, notation))
    }
}

impl fmt::Debug for GenusPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(Notation::Unicode))
    }
}

impl fmt::Display for GenusPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(Notation::Unicode))
    }
}

/// `Q_i` at `c_1 = 0`: only partitions without a part 1 survive, and each
/// coefficient is a sum of convergent multiple zeta values.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "CyGenusWire", try_from = "CyGenusWire")]
pub struct CyGenusPolynomial {
    degree: usize,
    coeffs: BTreeMap<Partition, Vec<MzvTerm>>,
}

impl CyGenusPolynomial {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, Vec<MzvTerm>> {
        &self.coeffs
    }

    pub fn render(&self, notation: Notation) -> String {
        let terms = self.coeffs.iter().map(|(l, ts)| {
            let parts: Vec<String> = ts.iter().map(|t| t.render(notation)).collect();
            let c = if parts.len() == 1 { parts[0].clone() } else { format!("({})", parts.join(" + ")) };
            (l, Signed { negative: false, text: c })
        });
        let body = if self.coeffs.is_empty() { "0".to_string() } else { join_terms(terms, notation) };
        format!("Q_{}|c1=0 = {}", self.degree, body)
    }
}

impl fmt::Debug for CyGenusPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(Notation::Unicode))
    }
}

impl fmt::Display for CyGenusPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(Notation::Unicode))
    }
}

struct Signed {
    negative: bool,
    text: String,
}

fn render_coefficient(c: &ZetaPoly, notation: Notation) -> Signed {
    if c.len() == 1 {
        let s = c.render(notation);
        match s.strip_prefix('-') {
            Some(rest) => Signed { negative: true, text: rest.to_string() },
            None => Signed { negative: false, text: s },
        }
    } else {
        Signed { negative: false, text: format!("({})", c.render(notation)) }
    }
}

/// `c2·c1²` style rendering of `c_λ`.
pub fn render_chern_monomial(lambda: &Partition, notation: Notation) -> String {
    lambda
        .multiplicities()
        .iter()
        .map(|&(part, m)| notation.power(&format!("c{part}"), m as u32))
        .collect::<Vec<_>>()
        .join(notation.times())
}

fn join_terms<'a>(terms: impl Iterator<Item = (&'a Partition, Signed)>, notation: Notation) -> String {
    let mut out = String::new();
    for (i, (lambda, coeff)) in terms.enumerate() {
        if i == 0 {
            if coeff.negative {
                out.push('-');
            }
        } else {
            out.push_str(if coeff.negative { " - " } else { " + " });
        }
        let mono = render_chern_monomial(lambda, notation);
        if coeff.text == "1" {
            out.push_str(&mono);
        } else {
            out.push_str(&coeff.text);
            out.push_str(notation.times());
            out.push_str(&mono);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn q_genus(i: usize) -> Result<GenusPolynomial> {
    q_genus_with_budget(i, DEFAULT_DEGREE_BUDGET)
}

/// `Q_i` with `coeff(λ) = ζ(m_λ)` for every λ ⊢ i.
pub fn q_genus_with_budget(i: usize, budget: usize) -> Result<GenusPolynomial> {
    if i == 0 || i > budget {
        return Err(Error::DegreeOutOfBudget { degree: i, budget });
    }
    let coeffs = partitions_of(i)
        .into_iter()
        .map(|lambda| {
            let c = zeta_hom(&SymPoly::element(crate::sym::Basis::Monomial, lambda.clone()));
            (lambda, c)
        })
        .collect();
    Ok(GenusPolynomial { degree: i, coeffs })
}

/// `Q_i` from the generating product, for `1 ≤ i ≤ 6`.
///
/// Expands `Π_{j=1}^{i} Σ_{d≤i} G_d t_j^d` with `G_d = ζ(e_d)` in `i`
/// variables, keeps total degree `i`, reads off the m-basis coefficients
/// `A_λ`, and solves `A = X · M` for the e-basis coefficients `X`, where `M`
/// is the e-to-m transition matrix.
pub fn q_genus_oracle(i: usize) -> Result<GenusPolynomial> {
    if i == 0 || i > ORACLE_DEGREE_BUDGET {
        return Err(Error::DegreeOutOfBudget { degree: i, budget: ORACLE_DEGREE_BUDGET });
    }
    let g: Vec<ZetaPoly> = (0..=i as u32)
        .map(|d| if d == 0 { ZetaPoly::one() } else { zeta_hom(&SymPoly::e(&[d])) })
        .collect();
    let mut product: MultiPoly<ZetaPoly> = MultiPoly::one(i);
    for j in 0..i {
        let mut factor = MultiPoly::zero(i);
        for (d, gd) in g.iter().enumerate() {
            let mut e = vec![0u32; i];
            e[j] = d as u32;
            factor.add_term(e, gd.clone());
        }
        product = product.mul_truncated(&factor, i as u32);
    }
    let top = product.homogeneous_part(i as u32);
    debug_assert!(top.is_symmetric());

    let (partitions, m) = e_to_m_matrix(i);
    let m_inv = rational::invert(&m).expect("e-to-m matrix is unimodular");
    let a: Vec<ZetaPoly> = partitions.iter().map(|l| top.m_coefficient(l)).collect();
    let mut coeffs = BTreeMap::new();
    for (col, mu) in partitions.iter().enumerate() {
        let mut x = ZetaPoly::zero();
        for (row, a_row) in a.iter().enumerate() {
            let f: &Rational = &m_inv[row][col];
            if !f.is_zero() && !a_row.is_zero() {
                x = &x + &a_row.scale(f);
            }
        }
        coeffs.insert(mu.clone(), x);
    }
    Ok(GenusPolynomial { degree: i, coeffs })
}

/// `ζ(m_λ)` for λ without parts equal to 1: one `ζ(w)` per distinct
/// rearrangement `w` of λ, listed in decreasing lexicographic order.
pub fn mzv_expansion(lambda: &Partition) -> Result<Vec<MzvTerm>> {
    if lambda.is_empty() || lambda.has_part_one() {
        return Err(Error::PartitionHasOne(lambda.parts().to_vec()));
    }
    let mut perms = distinct_permutations(lambda.parts());
    perms.reverse();
    perms.into_iter().map(|args| MzvTerm::new(args, Rational::one())).collect()
}

pub fn q_genus_cy(i: usize) -> Result<CyGenusPolynomial> {
    q_genus_cy_with_budget(i, DEFAULT_DEGREE_BUDGET)
}

/// The `c_1 = 0` specialization of `Q_i` (`i ≥ 2`), with coefficients given
/// as sums of convergent multiple zeta values.
pub fn q_genus_cy_with_budget(i: usize, budget: usize) -> Result<CyGenusPolynomial> {
    if i < 2 || i > budget {
        return Err(Error::DegreeOutOfBudget { degree: i, budget });
    }
    let coeffs = partitions_of(i)
        .into_iter()
        .filter(|l| !l.has_part_one())
        .map(|l| mzv_expansion(&l).map(|t| (l, t)))
        .collect::<Result<_>>()?;
    Ok(CyGenusPolynomial { degree: i, coeffs })
}

#[derive(Serialize, Deserialize)]
struct GenusWire {
    degree: usize,
    terms: Vec<GenusTermWire>,
}

#[derive(Serialize, Deserialize)]
struct GenusTermWire {
    c_partition: Partition,
    coeff: ZetaPoly,
}

impl From<GenusPolynomial> for GenusWire {
    fn from(g: GenusPolynomial) -> Self {
        GenusWire {
            degree: g.degree,
            terms: g.coeffs.into_iter().map(|(c_partition, coeff)| GenusTermWire { c_partition, coeff }).collect(),
        }
    }
}

impl TryFrom<GenusWire> for GenusPolynomial {
    type Error = Error;
    fn try_from(w: GenusWire) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for t in w.terms {
            if t.c_partition.weight() != w.degree {
                return Err(Error::Parse(format!("partition {} has wrong weight", t.c_partition)));
            }
            coeffs.insert(t.c_partition, t.coeff);
        }
        Ok(GenusPolynomial { degree: w.degree, coeffs })
    }
}

#[derive(Serialize, Deserialize)]
struct CyGenusWire {
    degree: usize,
    terms: Vec<CyTermWire>,
}

#[derive(Serialize, Deserialize)]
struct CyTermWire {
    c_partition: Partition,
    mzv_terms: Vec<MzvTerm>,
}

impl From<CyGenusPolynomial> for CyGenusWire {
    fn from(g: CyGenusPolynomial) -> Self {
        CyGenusWire {
            degree: g.degree,
            terms: g.coeffs.into_iter().map(|(c_partition, mzv_terms)| CyTermWire { c_partition, mzv_terms }).collect(),
        }
    }
}

impl TryFrom<CyGenusWire> for CyGenusPolynomial {
    type Error = Error;
    fn try_from(w: CyGenusWire) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for t in w.terms {
            if t.c_partition.has_part_one() {
                return Err(Error::PartitionHasOne(t.c_partition.parts().to_vec()));
            }
            for m in &t.mzv_terms {
                MzvTerm::new(m.args.clone(), m.coeff.clone())?;
            }
            coeffs.insert(t.c_partition, t.mzv_terms);
        }
        Ok(CyGenusPolynomial { degree: w.degree, coeffs })
    }
}
