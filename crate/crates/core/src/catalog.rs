//! Named reference posets.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::arith::divisors;
use crate::poset::Poset;
use crate::{Error, Result};

/// Largest `k` accepted for `Boolean(k)`.
pub const MAX_BOOLEAN_RANK: u32 = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CatalogKind {
    /// `k` totally ordered elements.
    Chain(usize),
    /// Bottom, top and two incomparable middle elements.
    M2,
    /// Bottom, top and three pairwise incomparable middle elements.
    M3,
    /// The pentagon `0 < a < b < 1`, `0 < c < 1`.
    N5,
    /// Divisors of `n` under divisibility.
    Divisor(u64),
    /// Subsets of a `k`-set under inclusion.
    Boolean(u32),
    /// `0 < {a, b} < c < 1` with `a`, `b` incomparable.
    Figure9,
}

impl core::fmt::Display for CatalogKind {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CatalogKind::Chain(k) => write!(f, "chain({k})"),
            CatalogKind::M2 => f.write_str("M2"),
            CatalogKind::M3 => f.write_str("M3"),
            CatalogKind::N5 => f.write_str("N5"),
            CatalogKind::Divisor(n) => write!(f, "divisor({n})"),
            CatalogKind::Boolean(k) => write!(f, "boolean({k})"),
            CatalogKind::Figure9 => f.write_str("figure9"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogPoset {
    kind: CatalogKind,
    labels: Vec<String>,
    poset: Poset,
}

impl CatalogPoset {
    pub fn kind(&self) -> CatalogKind {
        self.kind
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
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
}

fn labelled(kind: CatalogKind, labels: &[&str], covers: &[(usize, usize)]) -> Result<CatalogPoset> {
    Ok(CatalogPoset {
        kind,
        labels: labels.iter().map(|s| s.to_string()).collect(),
        poset: Poset::from_covers(labels.len(), covers)?,
    })
}

pub fn catalog(kind: CatalogKind) -> Result<CatalogPoset> {
    match kind {
        CatalogKind::Chain(k) => {
            if k == 0 {
                return Err(Error::InvalidParameter("chain needs at least one element".into()));
            }
            Ok(CatalogPoset {
                kind,
                labels: (0..k).map(|i| i.to_string()).collect(),
                poset: Poset::from_fn(k, |a, b| a <= b)?,
            })
        }
        CatalogKind::M2 => labelled(kind, &["0", "a", "b", "1"], &[(0, 1), (0, 2), (1, 3), (2, 3)]),
        CatalogKind::M3 => labelled(
            kind,
            &["0", "a", "b", "c", "1"],
            &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
        ),
        CatalogKind::N5 => labelled(
            kind,
            &["0", "a", "b", "c", "1"],
            &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)],
        ),
        CatalogKind::Figure9 => labelled(
            kind,
            &["0", "a", "b", "c", "1"],
            &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)],
        ),
        CatalogKind::Divisor(n) => {
            if n == 0 {
                return Err(Error::InvalidParameter("divisor lattice of 0".into()));
            }
            let d = divisors(n);
            Ok(CatalogPoset {
                kind,
                labels: d.iter().map(|v| v.to_string()).collect(),
                poset: Poset::from_fn(d.len(), |a, b| d[b].is_multiple_of(d[a]))?,
            })
        }
        CatalogKind::Boolean(k) => {
            if k > MAX_BOOLEAN_RANK {
                return Err(Error::InvalidParameter(format!(
                    "boolean rank {k} exceeds {MAX_BOOLEAN_RANK}"
                )));
            }
            let size = 1usize << k;
            let labels = (0..size)
                .map(|mask| {
                    let items: Vec<String> = (0..k as usize)
                        .filter(|i| mask >> i & 1 == 1)
                        .map(|i| (i + 1).to_string())
                        .collect();
                    format!("{{{}}}", items.join(","))
                })
                .collect();
            Ok(CatalogPoset {
                kind,
                labels,
                poset: Poset::from_fn(size, |a, b| a & b == a)?,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_and_covers() {
        assert_eq!(catalog(CatalogKind::Chain(1)).unwrap().len(), 1);
        assert!(catalog(CatalogKind::Chain(0)).is_err());
        assert!(catalog(CatalogKind::Chain(4)).unwrap().poset().is_chain());
        let d12 = catalog(CatalogKind::Divisor(12)).unwrap();
        assert_eq!(d12.len(), 6);
        assert_eq!(d12.labels(), ["1", "2", "3", "4", "6", "12"]);
        let f9 = catalog(CatalogKind::Figure9).unwrap();
        assert_eq!(f9.len(), 5);
        assert_eq!(f9.poset().covers().len(), 5);
        assert!(!f9.poset().comparable(1, 2));
        let m2 = catalog(CatalogKind::M2).unwrap();
        assert_eq!(m2.poset().covers().len(), 4);
        let b3 = catalog(CatalogKind::Boolean(3)).unwrap();
        assert_eq!(b3.len(), 8);
        assert_eq!(b3.labels()[0], "{}");
        assert_eq!(b3.labels()[7], "{1,2,3}");
        assert_eq!(b3.poset().covers().len(), 12);
        assert_eq!(catalog(CatalogKind::N5).unwrap().poset().covers().len(), 5);
        assert_eq!(catalog(CatalogKind::M3).unwrap().poset().covers().len(), 6);
    }

    #[test]
    fn all_are_lattices() {
        for kind in [
            CatalogKind::Chain(3),
            CatalogKind::M2,
            CatalogKind::M3,
            CatalogKind::N5,
            CatalogKind::Divisor(360),
            CatalogKind::Boolean(4),
            CatalogKind::Figure9,
        ] {
            let c = catalog(kind).unwrap();
            assert!(crate::lattice::Lattice::from_poset(c.poset()).is_ok(), "{kind}");
        }
    }
}
