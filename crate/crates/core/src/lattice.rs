//! Finite lattices and the classical property checks.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::poset::Poset;
use crate::{Error, Result};

/// A poset together with total meet and join tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    poset: Poset,
    meet: Vec<usize>,
    join: Vec<usize>,
    bottom: usize,
    top: usize,
}

/// Why a poset failed to be a lattice: a pair whose bound set has no
/// greatest (resp. least) element, with the competing maximal (resp.
/// minimal) bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotLattice {
    pub a: usize,
    pub b: usize,
    pub missing: BoundKind,
    pub candidates: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Meet,
    Join,
}

impl BoundKind {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundKind::Meet => "meet",
            BoundKind::Join => "join",
        }
    }
}

/// Five elements `x <= z`, `y` with `x ∨ (y ∧ z) != (x ∨ y) ∧ z`, or a
/// distributivity failure `x ∧ (y ∨ z) != (x ∧ y) ∨ (x ∧ z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Triple {
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

/// A five-element sublattice `{bottom, a, b, c, top}`.
///
/// For `N5`, `bottom < a < b < top` and `c` is incomparable to `a` and `b`.
/// For `M3`, `a`, `b`, `c` are pairwise incomparable atoms of the
/// sublattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FiveElementWitness {
    pub bottom: usize,
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub top: usize,
}

impl FiveElementWitness {
    pub fn elements(&self) -> [usize; 5] {
        [self.bottom, self.a, self.b, self.c, self.top]
    }
}

impl Lattice {
    /// Computes meet and join for every pair, or reports the first pair
    /// (in lexicographic order) lacking one.
    pub fn from_poset(poset: &Poset) -> core::result::Result<Lattice, NotLattice> {
        let n = poset.len();
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                match poset.meet(a, b) {
                    Some(m) => meet[a * n + b] = m,
                    None => {
                        return Err(NotLattice {
                            a,
                            b,
                            missing: BoundKind::Meet,
                            candidates: poset.maximal_lower_bounds(a, b),
                        })
                    }
                }
                match poset.join(a, b) {
                    Some(j) => join[a * n + b] = j,
                    None => {
                        return Err(NotLattice {
                            a,
                            b,
                            missing: BoundKind::Join,
                            candidates: poset.minimal_upper_bounds(a, b),
                        })
                    }
                }
            }
        }
        let bottom = poset.bottom();
        let top = poset.top();
        match (bottom, top) {
            (Some(bottom), Some(top)) => Ok(Lattice {
                poset: poset.clone(),
                meet,
                join,
                bottom,
                top,
            }),
            // Only the empty poset has all pairwise bounds but no bottom.
            _ => Err(NotLattice {
                a: 0,
                b: 0,
                missing: BoundKind::Meet,
                candidates: Vec::new(),
            }),
        }
    }

    /// Wraps externally computed tables after checking that they are the
    /// greatest lower and least upper bounds of `poset`.
    pub fn from_tables(poset: Poset, meet: Vec<usize>, join: Vec<usize>) -> Result<Lattice> {
        let n = poset.len();
        if meet.len() != n * n || join.len() != n * n {
            return Err(Error::InvalidParameter("table size mismatch".into()));
        }
        for a in 0..n {
            for b in 0..n {
                let m = meet[a * n + b];
                let j = join[a * n + b];
                let ok_meet = m < n
                    && poset.leq(m, a)
                    && poset.leq(m, b)
                    && (0..n).all(|c| !(poset.leq(c, a) && poset.leq(c, b)) || poset.leq(c, m));
                let ok_join = j < n
                    && poset.leq(a, j)
                    && poset.leq(b, j)
                    && (0..n).all(|c| !(poset.leq(a, c) && poset.leq(b, c)) || poset.leq(j, c));
                if !ok_meet {
                    return Err(Error::NotALattice(a, b, "meet"));
                }
                if !ok_join {
                    return Err(Error::NotALattice(a, b, "join"));
                }
            }
        }
        let bottom = poset.bottom().ok_or(Error::InvalidParameter("empty lattice".into()))?;
        let top = poset.top().ok_or(Error::InvalidParameter("empty lattice".into()))?;
        Ok(Lattice {
            poset,
            meet,
            join,
            bottom,
            top,
        })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.poset.leq(a, b)
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b]
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b]
    }

    pub fn meet_table(&self) -> &[usize] {
        &self.meet
    }

    pub fn join_table(&self) -> &[usize] {
        &self.join
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn is_chain(&self) -> bool {
        self.poset.is_chain()
    }

    /// Checks `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)` on every triple.
    pub fn is_distributive(&self) -> core::result::Result<(), Triple> {
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = self.meet(x, self.join(y, z));
                    let rhs = self.join(self.meet(x, y), self.meet(x, z));
                    if lhs != rhs {
                        return Err(Triple { x, y, z });
                    }
                }
            }
        }
        Ok(())
    }

    /// Checks `x <= z  =>  x ∨ (y ∧ z) = (x ∨ y) ∧ z` on every triple.
    pub fn is_modular(&self) -> core::result::Result<(), Triple> {
        let n = self.len();
        for x in 0..n {
            for z in (0..n).filter(|&z| self.leq(x, z)) {
                for y in 0..n {
                    if self.join(x, self.meet(y, z)) != self.meet(self.join(x, y), z) {
                        return Err(Triple { x, y, z });
                    }
                }
            }
        }
        Ok(())
    }

    /// Complement of `a`, if any: some `b` with `a ∧ b = 0`, `a ∨ b = 1`.
    pub fn complement_of(&self, a: usize) -> Option<usize> {
        (0..self.len()).find(|&b| self.meet(a, b) == self.bottom && self.join(a, b) == self.top)
    }

    /// `Err(a)` names the first element with no complement.
    pub fn is_complemented(&self) -> core::result::Result<(), usize> {
        match (0..self.len()).find(|&a| self.complement_of(a).is_none()) {
            Some(a) => Err(a),
            None => Ok(()),
        }
    }

    /// Searches for a pentagon sublattice. Candidates are enumerated as
    /// `a < b` and `c` incomparable to both with `a ∧ c = b ∧ c` and
    /// `a ∨ c = b ∨ c`; those five elements are then closed under meet and
    /// join. The lexicographically least `(a, b, c)` wins.
    pub fn find_n5(&self) -> Option<FiveElementWitness> {
        let n = self.len();
        for a in 0..n {
            for b in (0..n).filter(|&b| self.poset.lt(a, b)) {
                for c in 0..n {
                    if self.poset.comparable(a, c) || self.poset.comparable(b, c) {
                        continue;
                    }
                    let bottom = self.meet(a, c);
                    let top = self.join(a, c);
                    if self.meet(b, c) == bottom && self.join(b, c) == top {
                        let w = FiveElementWitness { bottom, a, b, c, top };
                        debug_assert!(self.is_sublattice(&w.elements()));
                        return Some(w);
                    }
                }
            }
        }
        None
    }

    /// Searches for a diamond sublattice: pairwise incomparable `a < b < c`
    /// (by index) sharing one pairwise meet and one pairwise join.
    pub fn find_m3(&self) -> Option<FiveElementWitness> {
        let n = self.len();
        for a in 0..n {
            for b in (a + 1..n).filter(|&b| !self.poset.comparable(a, b)) {
                let bottom = self.meet(a, b);
                let top = self.join(a, b);
                for c in (b + 1..n).filter(|&c| !self.poset.comparable(a, c) && !self.poset.comparable(b, c)) {
                    if self.meet(a, c) == bottom
                        && self.meet(b, c) == bottom
                        && self.join(a, c) == top
                        && self.join(b, c) == top
                    {
                        let w = FiveElementWitness { bottom, a, b, c, top };
                        debug_assert!(self.is_sublattice(&w.elements()));
                        return Some(w);
                    }
                }
            }
        }
        None
    }

    /// True iff `elements` is closed under this lattice's meet and join.
    pub fn is_sublattice(&self, elements: &[usize]) -> bool {
        elements.iter().all(|&x| {
            elements
                .iter()
                .all(|&y| elements.contains(&self.meet(x, y)) && elements.contains(&self.join(x, y)))
        })
    }

    /// Direct product with another lattice, elements `(i, j)` at
    /// `i * other.len() + j`.
    pub fn product(&self, other: &Lattice) -> Lattice {
        let (n, k) = (self.len(), other.len());
        let idx = |i: usize, j: usize| i * k + j;
        let total = n * k;
        let mut leq = vec![false; total * total];
        let mut meet = vec![0; total * total];
        let mut join = vec![0; total * total];
        for a in 0..total {
            for b in 0..total {
                let (a1, a2) = (a / k, a % k);
                let (b1, b2) = (b / k, b % k);
                leq[a * total + b] = self.leq(a1, b1) && other.leq(a2, b2);
                meet[a * total + b] = idx(self.meet(a1, b1), other.meet(a2, b2));
                join[a * total + b] = idx(self.join(a1, b1), other.join(a2, b2));
            }
        }
        Lattice {
            poset: Poset::from_relation(total, leq),
            meet,
            join,
            bottom: idx(self.bottom, other.bottom),
            top: idx(self.top, other.top),
        }
    }
}

impl core::fmt::Display for NotLattice {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "{} and {} have no {} (competing bounds {:?})",
            self.a,
            self.b,
            self.missing.as_str(),
            self.candidates
        )
    }
}

/// Adds a fresh top element above every element of `lattice`.
pub fn with_new_top(lattice: &Lattice) -> Result<Lattice> {
    let n = lattice.len();
    let poset = Poset::from_fn(n + 1, |a, b| b == n || (a < n && b < n && lattice.leq(a, b)))?;
    Lattice::from_poset(&poset).map_err(|e| Error::InvalidParameter(format!("{e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog, CatalogKind};

    fn lat(kind: CatalogKind) -> Lattice {
        Lattice::from_poset(catalog(kind).unwrap().poset()).unwrap()
    }

    #[test]
    fn diamond_and_pentagon() {
        let m3 = lat(CatalogKind::M3);
        let n5 = lat(CatalogKind::N5);
        assert!(m3.is_distributive().is_err());
        assert!(m3.is_modular().is_ok());
        assert!(m3.find_m3().is_some());
        assert!(m3.find_n5().is_none());
        assert!(n5.is_distributive().is_err());
        assert!(n5.is_modular().is_err());
        let w = n5.find_n5().unwrap();
        let mut els = w.elements();
        els.sort_unstable();
        assert_eq!(els, [0, 1, 2, 3, 4]);
        assert!(n5.find_m3().is_none());
    }

    #[test]
    fn pentagon_under_new_top() {
        let n5 = lat(CatalogKind::N5);
        let bigger = with_new_top(&n5).unwrap();
        assert_eq!(bigger.len(), 6);
        let w = bigger.find_n5().unwrap();
        assert!(bigger.is_sublattice(&w.elements()));
        assert!(!w.elements().contains(&5));
    }

    #[test]
    fn distributivity_witness_is_real() {
        let m3 = lat(CatalogKind::M3);
        let Triple { x, y, z } = m3.is_distributive().unwrap_err();
        assert_ne!(m3.meet(x, m3.join(y, z)), m3.join(m3.meet(x, y), m3.meet(x, z)));
    }

    #[test]
    fn complemented() {
        assert!(lat(CatalogKind::Boolean(3)).is_complemented().is_ok());
        let c3 = lat(CatalogKind::Chain(3));
        assert_eq!(c3.is_complemented(), Err(1));
        assert!(lat(CatalogKind::M2).is_complemented().is_ok());
        assert!(lat(CatalogKind::Chain(1)).is_complemented().is_ok());
    }

    #[test]
    fn not_a_lattice() {
        let bowtie = Poset::from_covers(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let e = Lattice::from_poset(&bowtie).unwrap_err();
        assert_eq!((e.a, e.b), (0, 1));
        assert_eq!(e.missing, BoundKind::Meet);
    }

    #[test]
    fn product_of_chains_is_distributive() {
        let p = lat(CatalogKind::Chain(3)).product(&lat(CatalogKind::Chain(2)));
        assert_eq!(p.len(), 6);
        assert!(p.is_distributive().is_ok());
        let recomputed = Lattice::from_poset(p.poset()).unwrap();
        assert_eq!(recomputed, p);
    }

    #[test]
    fn from_tables_rejects_wrong_meet() {
        let c3 = lat(CatalogKind::Chain(3));
        let mut meet = c3.meet_table().to_vec();
        meet[2] = 2;
        assert!(Lattice::from_tables(c3.poset().clone(), meet, c3.join_table().to_vec()).is_err());
    }
}
