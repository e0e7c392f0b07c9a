//! Symbolic models of `AutCl(D_n)` and `AutCl(Q_4m)`, the chain
//! classification predicate, and the Heisenberg shape check.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::arith::{divisors, factorize, gcd, lcm, prime_power};
use crate::autcl::{build_autcl_with, ClassPoset, Strategy};
use crate::bitset::ElementSet;
use crate::catalog::{catalog, CatalogKind};
use crate::group::{FiniteGroup, Limits};
use crate::iso::poset_isomorphic;
use crate::lattice::Lattice;
use crate::poset::Poset;
use crate::{Error, Result};

/// A divisor `d` of an ambient modulus written as exponents over the
/// modulus' primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentVector {
    pub primes: Vec<u64>,
    pub exps: Vec<u32>,
    pub bounds: Vec<u32>,
}

impl ExponentVector {
    pub fn of(d: u64, modulus: u64) -> Result<Self> {
        if d == 0 || !modulus.is_multiple_of(d) {
            return Err(Error::InvalidParameter(format!("{d} does not divide {modulus}")));
        }
        let f = factorize(modulus);
        let mut exps = Vec::with_capacity(f.len());
        for &(p, _) in &f {
            let mut e = 0;
            let mut x = d;
            while x.is_multiple_of(p) {
                x /= p;
                e += 1;
            }
            exps.push(e);
        }
        Ok(Self {
            primes: f.iter().map(|&(p, _)| p).collect(),
            bounds: f.iter().map(|&(_, t)| t).collect(),
            exps,
        })
    }

    pub fn value(&self) -> u64 {
        self.primes.iter().zip(&self.exps).map(|(&p, &e)| p.pow(e)).product()
    }

    fn combine(&self, other: &Self, pick: fn(u32, u32) -> u32) -> Self {
        debug_assert_eq!(self.primes, other.primes);
        Self {
            primes: self.primes.clone(),
            bounds: self.bounds.clone(),
            exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| pick(a, b)).collect(),
        }
    }

    /// Componentwise minimum, i.e. the gcd.
    pub fn min(&self, other: &Self) -> Self {
        self.combine(other, u32::min)
    }

    /// Componentwise maximum, i.e. the lcm.
    pub fn max(&self, other: &Self) -> Self {
        self.combine(other, u32::max)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SymbolicKind {
    /// `[<r^d>]` or `[<x^d>]`.
    Cyc,
    /// `[<r^d, s>]`.
    Dih,
    /// `[<x^d, y>]`.
    Dic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymbolicClass {
    pub kind: SymbolicKind,
    pub divisor: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelFamily {
    Dihedral(u64),
    Dicyclic(u64),
}

/// The symbolic lattice: Cyc classes by decreasing divisor (bottom first),
/// then the other kind by decreasing divisor (top last).
#[derive(Debug, Clone)]
pub struct SymbolicLattice {
    family: ModelFamily,
    classes: Vec<SymbolicClass>,
    labels: Vec<String>,
    lattice: Lattice,
}

fn power_label(base: &str, d: u64, modulus: u64) -> Option<String> {
    if d == modulus {
        None
    } else if d == 1 {
        Some(String::from(base))
    } else {
        Some(format!("{base}^{d}"))
    }
}

impl SymbolicLattice {
    fn build(family: ModelFamily) -> Result<Self> {
        let (cyc_mod, other_mod, other_kind) = match family {
            ModelFamily::Dihedral(n) => (n, n, SymbolicKind::Dih),
            ModelFamily::Dicyclic(m) => (2 * m, m, SymbolicKind::Dic),
        };
        let mut classes = Vec::new();
        for d in divisors(cyc_mod).into_iter().rev() {
            classes.push(SymbolicClass {
                kind: SymbolicKind::Cyc,
                divisor: d,
            });
        }
        for d in divisors(other_mod).into_iter().rev() {
            classes.push(SymbolicClass {
                kind: other_kind,
                divisor: d,
            });
        }
        let k = classes.len();
        let leq: Vec<bool> = (0..k * k)
            .map(|ab| Self::formula_leq(classes[ab / k], classes[ab % k]))
            .collect();
        let poset = Poset::new(k, leq)?;
        let pos = |c: SymbolicClass| classes.iter().position(|&x| x == c).expect("formula stays in range");
        let mut meet = Vec::with_capacity(k * k);
        let mut join = Vec::with_capacity(k * k);
        for a in 0..k {
            for b in 0..k {
                meet.push(pos(Self::formula_meet(classes[a], classes[b])));
                join.push(pos(Self::formula_join(classes[a], classes[b])));
            }
        }
        // Rejects the tables unless they really are the lattice operations.
        let lattice = Lattice::from_tables(poset, meet, join)?;
        let (a, b) = match family {
            ModelFamily::Dihedral(_) => ("r", "s"),
            ModelFamily::Dicyclic(_) => ("x", "y"),
        };
        let labels = classes
            .iter()
            .map(|c| match c.kind {
                SymbolicKind::Cyc => match power_label(a, c.divisor, cyc_mod) {
                    Some(g) => format!("[<{g}>]"),
                    None => String::from("[<e>]"),
                },
                _ => match power_label(a, c.divisor, cyc_mod) {
                    Some(g) => format!("[<{g}, {b}>]"),
                    None => format!("[<{b}>]"),
                },
            })
            .collect();
        Ok(Self {
            family,
            classes,
            labels,
            lattice,
        })
    }

    fn formula_leq(a: SymbolicClass, b: SymbolicClass) -> bool {
        match (a.kind, b.kind) {
            (SymbolicKind::Cyc, SymbolicKind::Cyc) => a.divisor.is_multiple_of(b.divisor),
            (SymbolicKind::Cyc, _) => a.divisor.is_multiple_of(b.divisor),
            (_, SymbolicKind::Cyc) => false,
            _ => a.divisor.is_multiple_of(b.divisor),
        }
    }

    /// gcd of the divisors (minimum exponents); a reflection-type operand
    /// makes the result reflection-type.
    fn formula_join(a: SymbolicClass, b: SymbolicClass) -> SymbolicClass {
        let kind = if a.kind == SymbolicKind::Cyc { b.kind } else { a.kind };
        SymbolicClass {
            kind,
            divisor: gcd(a.divisor, b.divisor),
        }
    }

    /// lcm of the divisors (maximum exponents); reflection-type only when
    /// both operands are.
    fn formula_meet(a: SymbolicClass, b: SymbolicClass) -> SymbolicClass {
        let kind = if a.kind == SymbolicKind::Cyc { a.kind } else { b.kind };
        SymbolicClass {
            kind,
            divisor: lcm(a.divisor, b.divisor),
        }
    }

    pub fn family(&self) -> ModelFamily {
        self.family
    }

    pub fn classes(&self) -> &[SymbolicClass] {
        &self.classes
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn poset(&self) -> &Poset {
        self.lattice.poset()
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn index_of(&self, c: SymbolicClass) -> Option<usize> {
        self.classes.iter().position(|&x| x == c)
    }

    /// Order of the subgroups in the class.
    pub fn subgroup_order(&self, i: usize) -> u64 {
        let c = self.classes[i];
        let cyc_mod = match self.family {
            ModelFamily::Dihedral(n) => n,
            ModelFamily::Dicyclic(m) => 2 * m,
        };
        match c.kind {
            SymbolicKind::Cyc => cyc_mod / c.divisor,
            _ => 2 * cyc_mod / c.divisor,
        }
    }

    /// `0` for Cyc classes, `1` for the others.
    pub fn colours(&self) -> Vec<u32> {
        self.classes.iter().map(|c| (c.kind != SymbolicKind::Cyc) as u32).collect()
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.lattice.meet(a, b)
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.lattice.join(a, b)
    }
}

/// The model for `D_n`, `n >= 3`: `2 τ(n)` classes.
pub fn autcl_dihedral_model(n: u64) -> Result<SymbolicLattice> {
    if n < 3 {
        return Err(Error::BelowValidityBound {
            what: "dihedral model",
            min: 3,
            got: n,
        });
    }
    SymbolicLattice::build(ModelFamily::Dihedral(n))
}

/// The model for `Q_4m`, `m >= 3`: `τ(2m) + τ(m)` classes.
pub fn autcl_dicyclic_model(m: u64) -> Result<SymbolicLattice> {
    if m < 3 {
        return Err(Error::BelowValidityBound {
            what: "dicyclic model",
            min: 3,
            got: m,
        });
    }
    SymbolicLattice::build(ModelFamily::Dicyclic(m))
}

/// Which of the chain shapes a group was recognised as.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainClass {
    Trivial,
    CyclicPrimePower { p: u64, k: u32 },
    ElementaryAbelian { p: u64, k: u32 },
    Quaternion8,
    NotChain,
}

impl core::fmt::Display for ChainClass {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ChainClass::Trivial => f.write_str("trivial"),
            ChainClass::CyclicPrimePower { p, k } => write!(f, "cyclic {p}-group of order {p}^{k}"),
            ChainClass::ElementaryAbelian { p, k } => write!(f, "elementary abelian of order {p}^{k}"),
            ChainClass::Quaternion8 => f.write_str("quaternion of order 8"),
            ChainClass::NotChain => f.write_str("none"),
        }
    }
}

/// Predicts whether `AutCl(G)` is a chain from the isomorphism type alone:
/// yes exactly for cyclic groups of prime-power order, elementary abelian
/// groups and `Q_8`.
pub fn predict_chain(group: &FiniteGroup) -> (bool, ChainClass) {
    let n = group.order() as u64;
    if n == 1 {
        return (true, ChainClass::Trivial);
    }
    let cyclic = group.exponent() == group.order();
    if let Some((p, k)) = prime_power(n) {
        if cyclic {
            return (true, ChainClass::CyclicPrimePower { p, k });
        }
        if group.is_abelian() && group.exponent() as u64 == p {
            return (true, ChainClass::ElementaryAbelian { p, k });
        }
        let involutions = group.element_orders().iter().filter(|&&o| o == 2).count();
        if n == 8 && !group.is_abelian() && involutions == 1 {
            return (true, ChainClass::Quaternion8);
        }
    }
    (false, ChainClass::NotChain)
}

/// An atom (class covering the bottom) of a computed class poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomInfo {
    pub class: usize,
    pub label: String,
    pub subgroup_order: usize,
    pub orbit_size: usize,
    pub central: bool,
    pub normal: bool,
}

#[derive(Debug, Clone)]
pub struct HeisenbergReport {
    pub p: u64,
    pub poset: ClassPoset,
    /// Isomorphism onto the reference shape, if any.
    pub mapping: Option<Vec<usize>>,
    pub atoms: Vec<AtomInfo>,
}

impl HeisenbergReport {
    pub fn isomorphic(&self) -> bool {
        self.mapping.is_some()
    }
}

pub fn is_normal(group: &FiniteGroup, members: &ElementSet) -> bool {
    (0..group.order()).all(|g| {
        let gi = group.inv(g);
        members.iter().all(|h| members.contains(group.mul(group.mul(g, h), gi)))
    })
}

/// Builds `AutCl(Heis(Z_p))` by brute force and compares it with the
/// five-element shape `0 < {a, b} < c < 1`.
pub fn check_heisenberg_conjecture(p: u64, limits: &Limits) -> Result<HeisenbergReport> {
    let group = FiniteGroup::heisenberg(p)?;
    let poset = build_autcl_with(&group, Strategy::BruteForce, limits)?;
    let reference = catalog(CatalogKind::Figure9)?;
    let mapping = poset_isomorphic(poset.poset(), reference.poset());
    let center = group.center();
    let atoms = poset
        .hasse()
        .iter()
        .filter(|&&(a, _)| a == poset.bottom())
        .map(|&(_, c)| {
            let class = &poset.classes()[c];
            let members = poset.subgroups().get(class.canonical()).members();
            AtomInfo {
                class: c,
                label: poset.labels()[c].clone(),
                subgroup_order: class.subgroup_order(),
                orbit_size: class.len(),
                central: members.is_subset(&center),
                normal: is_normal(&group, members),
            }
        })
        .collect();
    Ok(HeisenbergReport {
        p,
        poset,
        mapping,
        atoms,
    })
}
