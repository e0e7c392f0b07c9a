//! Finite posets as dense relation matrices.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// A finite poset on `0..len`, stored as a row-major `len x len` matrix
/// where `leq[a * len + b]` means `a <= b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    len: usize,
    leq: Vec<bool>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PosetViolation {
    NotReflexive(usize),
    NotAntisymmetric(usize, usize),
    NotTransitive(usize, usize, usize),
}

impl Poset {
    /// Validating constructor.
    pub fn new(len: usize, leq: Vec<bool>) -> Result<Self> {
        if leq.len() != len * len {
            return Err(Error::InvalidParameter(format!(
                "relation has {} entries, expected {}",
                leq.len(),
                len * len
            )));
        }
        let p = Self { len, leq };
        match p.check_axioms() {
            Ok(()) => Ok(p),
            Err(v) => Err(Error::InvalidParameter(format!("not a partial order: {v:?}"))),
        }
    }

    /// Builds from a closure, validating the result.
    pub fn from_fn(len: usize, f: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let mut leq = vec![false; len * len];
        for a in 0..len {
            for b in 0..len {
                leq[a * len + b] = f(a, b);
            }
        }
        Self::new(len, leq)
    }

    /// Builds from a relation that is a partial order by construction
    /// (containment of sets, divisibility, ...). Checked in debug builds.
    pub(crate) fn from_relation(len: usize, leq: Vec<bool>) -> Self {
        let p = Self { len, leq };
        debug_assert_eq!(p.check_axioms(), Ok(()));
        p
    }

    /// Builds the reflexive-transitive closure of a cover relation.
    pub fn from_covers(len: usize, covers: &[(usize, usize)]) -> Result<Self> {
        let mut leq = vec![false; len * len];
        for a in 0..len {
            leq[a * len + a] = true;
        }
        for &(a, b) in covers {
            if a >= len || b >= len {
                return Err(Error::InvalidParameter(format!("cover ({a}, {b}) out of range")));
            }
            leq[a * len + b] = true;
        }
        // Floyd-Warshall style closure.
        for k in 0..len {
            for a in 0..len {
                if leq[a * len + k] {
                    for b in 0..len {
                        if leq[k * len + b] {
                            leq[a * len + b] = true;
                        }
                    }
                }
            }
        }
        Self::new(len, leq)
    }

    pub fn check_axioms(&self) -> core::result::Result<(), PosetViolation> {
        let n = self.len;
        for a in 0..n {
            if !self.leq(a, a) {
                return Err(PosetViolation::NotReflexive(a));
            }
            for b in 0..n {
                if a != b && self.leq(a, b) && self.leq(b, a) {
                    return Err(PosetViolation::NotAntisymmetric(a, b));
                }
                if self.leq(a, b) {
                    for c in 0..n {
                        if self.leq(b, c) && !self.leq(a, c) {
                            return Err(PosetViolation::NotTransitive(a, b, c));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.len + b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    pub fn relation(&self) -> &[bool] {
        &self.leq
    }

    /// Number of elements below or equal to `a`.
    pub fn down_size(&self, a: usize) -> usize {
        (0..self.len).filter(|&b| self.leq(b, a)).count()
    }

    /// Number of elements above or equal to `a`.
    pub fn up_size(&self, a: usize) -> usize {
        (0..self.len).filter(|&b| self.leq(a, b)).count()
    }

    /// Cover pairs `(a, b)`, meaning `a < b` with nothing strictly between,
    /// in lexicographic order. This is the Hasse diagram: every strict pair
    /// that is implied through an intermediate element is dropped.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len;
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.lt(a, b) && !(0..n).any(|c| self.lt(a, c) && self.lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn is_chain(&self) -> bool {
        (0..self.len).all(|a| (0..self.len).all(|b| self.comparable(a, b)))
    }

    pub fn bottom(&self) -> Option<usize> {
        (0..self.len).find(|&a| (0..self.len).all(|b| self.leq(a, b)))
    }

    pub fn top(&self) -> Option<usize> {
        (0..self.len).find(|&a| (0..self.len).all(|b| self.leq(b, a)))
    }

    /// Greatest lower bound, if it exists.
    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        let lower: Vec<usize> = (0..self.len)
            .filter(|&c| self.leq(c, a) && self.leq(c, b))
            .collect();
        lower
            .iter()
            .copied()
            .find(|&m| lower.iter().all(|&c| self.leq(c, m)))
    }

    /// Least upper bound, if it exists.
    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        let upper: Vec<usize> = (0..self.len)
            .filter(|&c| self.leq(a, c) && self.leq(b, c))
            .collect();
        upper
            .iter()
            .copied()
            .find(|&j| upper.iter().all(|&c| self.leq(j, c)))
    }

    /// Maximal common lower bounds of `a` and `b`.
    pub fn maximal_lower_bounds(&self, a: usize, b: usize) -> Vec<usize> {
        let lower: Vec<usize> = (0..self.len)
            .filter(|&c| self.leq(c, a) && self.leq(c, b))
            .collect();
        lower
            .iter()
            .copied()
            .filter(|&m| !lower.iter().any(|&c| self.lt(m, c)))
            .collect()
    }

    /// Minimal common upper bounds of `a` and `b`.
    pub fn minimal_upper_bounds(&self, a: usize, b: usize) -> Vec<usize> {
        let upper: Vec<usize> = (0..self.len)
            .filter(|&c| self.leq(a, c) && self.leq(b, c))
            .collect();
        upper
            .iter()
            .copied()
            .filter(|&m| !upper.iter().any(|&c| self.lt(c, m)))
            .collect()
    }

    /// The subposet induced on `elements`, reindexed in the given order.
    pub fn induced(&self, elements: &[usize]) -> Poset {
        let k = elements.len();
        let mut leq = vec![false; k * k];
        for (i, &a) in elements.iter().enumerate() {
            for (j, &b) in elements.iter().enumerate() {
                leq[i * k + j] = self.leq(a, b);
            }
        }
        Poset::from_relation(k, leq)
    }

    /// Same poset with element `i` renamed to `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Poset> {
        let n = self.len;
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || core::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidParameter("relabeling is not a permutation".into()));
        }
        let mut leq = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                leq[perm[a] * n + perm[b]] = self.leq(a, b);
            }
        }
        Ok(Poset::from_relation(n, leq))
    }
}
