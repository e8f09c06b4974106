//! Integer partitions and their fixed enumeration order.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Partitions are ordered by weight first; within one weight the order is
/// reverse-lexicographic, so `(n)` comes first and `(1, …, 1)` last. Every
/// matrix and table in the crate is indexed in this order.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "Vec<u32>", try_from = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Sorts the given parts into a partition; zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn has_part_one(&self) -> bool {
        self.0.last() == Some(&1)
    }

    /// Union of parts (the index of a product `b_λ · b_μ` in the e and p bases).
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=first)
                .map(|k| self.0.iter().filter(|&&p| p >= k).count() as u32)
                .collect(),
        )
    }

    /// Multiplicities `m_1, m_2, …` of each distinct part.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("partition {parts:?} is not weakly decreasing")));
        }
        Partition::new(parts)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n`, in the fixed order: `(n)` first, `(1^n)` last.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(n as u32, n as u32, &mut current, &mut out);
    out
}

fn descend(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        current.push(part);
        descend(remaining - part, part, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn small_cases() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(1), vec![p(&[1])]);
        assert_eq!(
            partitions_of(4),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
    }

    // Brute force: every weakly decreasing vector in [1..n]^k for k ≤ n, filtered by sum.
    fn brute_force_count(n: u32) -> usize {
        let mut seen = BTreeSet::new();
        fn rec(n: u32, acc: &mut Vec<u32>, seen: &mut BTreeSet<Vec<u32>>) {
            let s: u32 = acc.iter().sum();
            if s == n {
                let mut v = acc.clone();
                v.sort_unstable_by(|a, b| b.cmp(a));
                seen.insert(v);
                return;
            }
            for x in 1..=(n - s) {
                acc.push(x);
                rec(n, acc, seen);
                acc.pop();
            }
        }
        rec(n, &mut Vec::new(), &mut seen);
        seen.len()
    }

    #[test]
    fn counts_match_brute_force() {
        for n in 0..=10u32 {
            assert_eq!(partitions_of(n as usize).len(), brute_force_count(n), "n = {n}");
        }
        assert_eq!(partitions_of(10).len(), 42);
    }

    #[test]
    fn enumeration_is_sorted_and_unique() {
        for n in 1..=9 {
            let ps = partitions_of(n);
            assert!(ps.windows(2).all(|w| w[0] < w[1]));
            assert!(ps.iter().all(|q| q.weight() == n));
        }
    }

    #[test]
    fn conjugate_and_multiplicities() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 2, 1]).multiplicities(), vec![(2, 2), (1, 1)]);
        assert!(Partition::try_from(vec![1, 2]).is_err());
        assert!(Partition::new(vec![0, 1]).is_err());
    }
}
