//! Sparse multivariate polynomials in `t_1, …, t_n`.
//!
//! Used as the brute-force oracle: symmetric functions are expanded into
//! explicit monomials here and re-collected afterwards.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg};

use num_traits::{One, Zero};

use crate::partition::Partition;

/// Coefficient ring for [`MultiPoly`].
pub trait Coeff: Clone + PartialEq + Zero + One + Add<Output = Self> + Mul<Output = Self> + Neg<Output = Self> {}

impl<T> Coeff for T where T: Clone + PartialEq + Zero + One + Add<Output = T> + Mul<Output = T> + Neg<Output = T> {}

#[derive(Clone, Debug, PartialEq)]
pub struct MultiPoly<C> {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, C>,
}

impl<C: Coeff> MultiPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The monomial `c · t^exps`.
    pub fn monomial(exps: Vec<u32>, c: C) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, C> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: C) {
        assert_eq!(exps.len(), self.nvars, "exponent vector length mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&exps) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(exps, s);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn coefficient(&self, exps: &[u32]) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, x) in &self.terms {
            out.add_term(e.clone(), x.clone() * c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.mul_truncated(other, u32::MAX)
    }

    /// Product with every monomial of total degree above `max_degree` dropped.
    pub fn mul_truncated(&self, other: &Self, max_degree: u32) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            let da: u32 = ea.iter().sum();
            for (eb, cb) in &other.terms {
                let db: u32 = eb.iter().sum();
                if da.saturating_add(db) > max_degree {
                    continue;
                }
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        out
    }

    /// Terms of total degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// True when the coefficient of every monomial depends only on its sorted exponents.
    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(e, c)| {
            let mut sorted = e.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            self.coefficient(&sorted) == *c
        })
    }

    /// Coefficient of `m_λ`, read off the monomial `t^λ` (λ padded with zeros).
    /// Returns zero when λ has more parts than there are variables.
    pub fn m_coefficient(&self, lambda: &Partition) -> C {
        if lambda.len() > self.nvars {
            return C::zero();
        }
        let mut e = lambda.parts().to_vec();
        e.resize(self.nvars, 0);
        self.coefficient(&e)
    }
}
