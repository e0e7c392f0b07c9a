//! Automorphism groups: generic search and the dihedral/dicyclic formulas.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::gcd;
use crate::bitset::ElementSet;
use crate::group::{Family, FiniteGroup, GroupId, Limits};
use crate::subgroup::Subgroup;
use crate::{Error, Result};

/// A bijective homomorphism stored as the image of every element index.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Automorphism {
    group: GroupId,
    perm: Vec<usize>,
}

impl Automorphism {
    pub fn identity(group: &FiniteGroup) -> Self {
        Self {
            group: group.id(),
            perm: (0..group.order()).collect(),
        }
    }

    /// Validates `perm` against `group` exhaustively.
    pub fn from_perm(group: &FiniteGroup, perm: Vec<usize>) -> Result<Self> {
        let a = Self {
            group: group.id(),
            perm,
        };
        if !a.is_automorphism_of(group) {
            return Err(Error::InvalidParameter("permutation is not an automorphism".into()));
        }
        Ok(a)
    }

    pub fn group_id(&self) -> GroupId {
        self.group
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    #[inline]
    pub fn apply(&self, g: usize) -> usize {
        self.perm[g]
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            group: self.group,
            perm: other.perm.iter().map(|&g| self.perm[g]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p] = i;
        }
        Self {
            group: self.group,
            perm: inv,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// Bijective, fixes the identity, and `f(ab) = f(a)f(b)` for every pair.
    pub fn is_automorphism_of(&self, group: &FiniteGroup) -> bool {
        let n = group.order();
        if self.group != group.id() || self.perm.len() != n {
            return false;
        }
        let mut hit = vec![false; n];
        for &p in &self.perm {
            if p >= n || core::mem::replace(&mut hit[p], true) {
                return false;
            }
        }
        if self.perm[group.identity()] != group.identity() {
            return false;
        }
        (0..n).all(|a| (0..n).all(|b| self.perm[group.mul(a, b)] == group.mul(self.perm[a], self.perm[b])))
    }
}

/// A set of automorphisms of one group, sorted by permutation array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomorphismGroup {
    group: GroupId,
    group_order: usize,
    elements: Vec<Automorphism>,
}

impl AutomorphismGroup {
    fn from_unsorted(group: &FiniteGroup, mut elements: Vec<Automorphism>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        Self {
            group: group.id(),
            group_order: group.order(),
            elements,
        }
    }

    pub fn group_id(&self) -> GroupId {
        self.group
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Automorphism] {
        &self.elements
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Automorphism> {
        self.elements.iter()
    }

    pub fn contains(&self, f: &Automorphism) -> bool {
        self.elements.binary_search(f).is_ok()
    }

    pub fn contains_identity(&self) -> bool {
        self.elements.iter().any(Automorphism::is_identity)
    }
}

impl<'a> IntoIterator for &'a AutomorphismGroup {
    type Item = &'a Automorphism;
    type IntoIter = core::slice::Iter<'a, Automorphism>;
    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

/// Extends `gens[i] -> images[i]` along the Cayley graph of `gens`. Returns
/// the full permutation if the assignment extends to a well-defined
/// injective map; that map is then a homomorphism because it satisfies
/// `f(g s) = f(g) f(s)` on every edge.
fn extend(group: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let n = group.order();
    const UNSET: usize = usize::MAX;
    let mut perm = vec![UNSET; n];
    let mut used = vec![false; n];
    let e = group.identity();
    perm[e] = e;
    used[e] = true;
    let mut queue = VecDeque::from([e]);
    let mut seen = 1;
    while let Some(g) = queue.pop_front() {
        let fg = perm[g];
        for (&s, &t) in gens.iter().zip(images) {
            let h = group.mul(g, s);
            let fh = group.mul(fg, t);
            if perm[h] == UNSET {
                if used[fh] {
                    return None;
                }
                perm[h] = fh;
                used[fh] = true;
                seen += 1;
                queue.push_back(h);
            } else if perm[h] != fh {
                return None;
            }
        }
    }
    (seen == n).then_some(perm)
}

/// Every automorphism, by trying all order-preserving images of a small
/// generating set.
pub fn automorphisms_bruteforce(group: &FiniteGroup, limits: &Limits) -> Result<AutomorphismGroup> {
    limits.check(group.order())?;
    let gens = group.greedy_generators(&ElementSet::full(group.order()));
    let orders = group.element_orders();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| (0..group.order()).filter(|&h| orders[h] == orders[g]).collect())
        .collect();
    let mut found = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    let mut images = vec![0usize; gens.len()];
    // Odometer over the candidate lists.
    'outer: loop {
        for (k, &c) in choice.iter().enumerate() {
            images[k] = candidates[k][c];
        }
        if let Some(perm) = extend(group, &gens, &images) {
            found.push(Automorphism {
                group: group.id(),
                perm,
            });
        }
        for k in (0..gens.len()).rev() {
            choice[k] += 1;
            if choice[k] < candidates[k].len() {
                continue 'outer;
            }
            choice[k] = 0;
        }
        break;
    }
    Ok(AutomorphismGroup::from_unsorted(group, found))
}

fn units(modulus: u64) -> impl Iterator<Item = u64> {
    (1..=modulus).filter(move |&a| gcd(a, modulus) == 1)
}

/// `r^i -> r^(ai)`, `r^i s -> r^(ai+b) s` for `a` a unit mod `n` and any
/// `b`. Valid for `n >= 3`.
pub fn aut_dihedral_closed_form(group: &FiniteGroup) -> Result<AutomorphismGroup> {
    let n = match group.family() {
        Family::Dihedral(n) => *n,
        f => return Err(Error::UnsupportedFamily(alloc::format!("dihedral automorphisms requested for {f}"))),
    };
    if n < 3 {
        return Err(Error::BelowValidityBound {
            what: "dihedral automorphism formula",
            min: 3,
            got: n,
        });
    }
    Ok(AutomorphismGroup::from_unsorted(group, affine_family(group, n, n)))
}

/// `x^i -> x^(ai)`, `x^i y -> x^(ai+b) y` for `a` a unit mod `2m` and any
/// `b`. Valid for `m >= 3`.
pub fn aut_dicyclic_closed_form(group: &FiniteGroup) -> Result<AutomorphismGroup> {
    let m = match group.family() {
        Family::Dicyclic(m) => *m,
        f => return Err(Error::UnsupportedFamily(alloc::format!("dicyclic automorphisms requested for {f}"))),
    };
    if m < 3 {
        return Err(Error::BelowValidityBound {
            what: "dicyclic automorphism formula",
            min: 3,
            got: m,
        });
    }
    Ok(AutomorphismGroup::from_unsorted(group, affine_family(group, 2 * m, 2 * m)))
}

/// Both families index `a^i` at `i` and `a^i b` at `rot + i`.
fn affine_family(group: &FiniteGroup, rot: u64, shift_mod: u64) -> Vec<Automorphism> {
    let r = rot as usize;
    let mut out = Vec::new();
    for a in units(rot) {
        for b in 0..shift_mod {
            let mut perm = vec![0; group.order()];
            for i in 0..r {
                let ai = (a as usize * i) % r;
                perm[i] = ai;
                perm[r + i] = r + (ai + b as usize) % r;
            }
            let f = Automorphism {
                group: group.id(),
                perm,
            };
            debug_assert!(f.is_automorphism_of(group));
            out.push(f);
        }
    }
    out
}

/// Closed form where it is valid, brute force otherwise.
pub fn automorphisms_auto(group: &FiniteGroup, limits: &Limits) -> Result<AutomorphismGroup> {
    limits.check(group.order())?;
    match group.family() {
        Family::Dihedral(n) if *n >= 3 => aut_dihedral_closed_form(group),
        Family::Dicyclic(m) if *m >= 3 => aut_dicyclic_closed_form(group),
        _ => automorphisms_bruteforce(group, limits),
    }
}

/// `f(H)`. The image of a subgroup under an automorphism is a subgroup of
/// the same order, so no closure step is needed.
pub fn apply_automorphism(f: &Automorphism, h: &Subgroup) -> Result<Subgroup> {
    if f.group != h.group_id() {
        return Err(Error::ParentMismatch);
    }
    let members = image_set(f, h.members());
    debug_assert_eq!(members.len(), h.order());
    let generators = h.generators().iter().map(|&g| f.apply(g)).collect();
    Ok(Subgroup::from_parts(h.group_id(), members, generators))
}

pub(crate) fn image_set(f: &Automorphism, set: &ElementSet) -> ElementSet {
    ElementSet::from_indices(set.universe(), set.iter().map(|g| f.apply(g)))
}
