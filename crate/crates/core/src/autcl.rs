//! The poset of automorphism orbits of subgroups.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::aut::{
    aut_dicyclic_closed_form, aut_dihedral_closed_form, automorphisms_auto, automorphisms_bruteforce,
    image_set, AutomorphismGroup,
};
use crate::group::{Family, FiniteGroup, GroupId, Limits};
use crate::lattice::{Lattice, NotLattice};
use crate::poset::Poset;
use crate::subgroup::{
    all_subgroups, dicyclic_subgroups_closed_form, dihedral_subgroups_closed_form, subgroups_auto,
    SubgroupLattice,
};
use crate::{Error, Result};

/// How subgroups and automorphisms are obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Closed-form listings and formulas where the family and validity
    /// bounds allow them, search otherwise.
    #[default]
    Auto,
    /// Closed forms only; fails outside their range.
    ClosedForm,
    /// Generic search for everything.
    BruteForce,
}

/// One orbit of subgroups. Members are indices into the owning
/// [`SubgroupLattice`], ascending; the first is the canonical member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutClass {
    members: Vec<usize>,
    subgroup_order: usize,
}

impl AutClass {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    /// The member with the least element set.
    pub fn canonical(&self) -> usize {
        self.members[0]
    }

    pub fn subgroup_order(&self) -> usize {
        self.subgroup_order
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Orbits of `lattice` under `auts`, sorted by canonical member.
pub fn class_orbits(lattice: &SubgroupLattice, auts: &AutomorphismGroup) -> Result<Vec<AutClass>> {
    if lattice.group_id() != auts.group_id() {
        return Err(Error::ParentMismatch);
    }
    let n = lattice.len();
    let mut assigned = vec![false; n];
    let mut classes = Vec::new();
    for i in 0..n {
        if assigned[i] {
            continue;
        }
        let h = lattice.get(i).members();
        let mut members = Vec::new();
        for f in auts {
            let j = lattice
                .index_of(&image_set(f, h))
                .expect("automorphic image of a subgroup is a listed subgroup");
            if !assigned[j] {
                assigned[j] = true;
                members.push(j);
            }
        }
        members.sort_unstable();
        debug_assert_eq!(members[0], i);
        classes.push(AutClass {
            members,
            subgroup_order: lattice.get(i).order(),
        });
    }
    Ok(classes)
}

/// `[H] <= [K]` iff some automorphism maps the canonical `H` into the
/// canonical `K`.
pub fn class_leq(lattice: &SubgroupLattice, c1: &AutClass, c2: &AutClass, auts: &AutomorphismGroup) -> bool {
    representatives_leq(lattice, c1.canonical(), c2.canonical(), auts)
}

/// Whether some automorphism maps subgroup `h` into subgroup `k`.
pub fn representatives_leq(lattice: &SubgroupLattice, h: usize, k: usize, auts: &AutomorphismGroup) -> bool {
    let (hs, ks) = (lattice.get(h), lattice.get(k));
    if ks.order() % hs.order() != 0 {
        return false;
    }
    auts.iter().any(|f| hs.members().iter().all(|g| ks.contains(f.apply(g))))
}

/// The poset of automorphic classes.
#[derive(Debug, Clone)]
pub struct ClassPoset {
    group: GroupId,
    group_order: usize,
    subgroups: SubgroupLattice,
    classes: Vec<AutClass>,
    class_of: Vec<usize>,
    labels: Vec<String>,
    poset: Poset,
    hasse: Vec<(usize, usize)>,
    lattice: core::result::Result<Lattice, NotLattice>,
    automorphism_count: usize,
}

/// Broken structural invariant of a [`ClassPoset`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassPosetViolation {
    Axiom(crate::poset::PosetViolation),
    BottomNotTrivial,
    TopNotWholeGroup,
    UnequalOrders(usize),
    OrderNotDividing(usize, usize),
}

/// Pair of subgroup indices `(h, k)` from complementary classes that are
/// not complements in `L(G)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComplementFailure {
    pub h: usize,
    pub k: usize,
}

impl ClassPoset {
    /// Assembles the poset from a subgroup lattice and the full
    /// automorphism group.
    pub fn new(group: &FiniteGroup, subgroups: SubgroupLattice, auts: &AutomorphismGroup) -> Result<Self> {
        if subgroups.group_id() != group.id() {
            return Err(Error::ParentMismatch);
        }
        let classes = class_orbits(&subgroups, auts)?;
        let mut class_of = vec![0; subgroups.len()];
        for (c, class) in classes.iter().enumerate() {
            for &m in &class.members {
                class_of[m] = c;
            }
        }
        // {f(H) : f in Aut(G)} is exactly the orbit of H, so "some f maps H
        // into K" means "some orbit member of H lies in K".
        let k = classes.len();
        let mut leq = vec![false; k * k];
        for a in 0..k {
            for b in 0..k {
                let target = classes[b].canonical();
                leq[a * k + b] = classes[a].members.iter().any(|&h| subgroups.leq(h, target));
            }
        }
        let poset = Poset::new(k, leq)?;
        let hasse = poset.covers();
        let lattice = Lattice::from_poset(&poset);
        let labels = classes
            .iter()
            .map(|c| subgroup_label(group, &subgroups, c.canonical()))
            .collect();
        Ok(Self {
            group: group.id(),
            group_order: group.order(),
            subgroups,
            classes,
            class_of,
            labels,
            poset,
            hasse,
            lattice,
            automorphism_count: auts.len(),
        })
    }

    pub fn group_id(&self) -> GroupId {
        self.group
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn subgroups(&self) -> &SubgroupLattice {
        &self.subgroups
    }

    pub fn classes(&self) -> &[AutClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Class index of subgroup `i`.
    pub fn class_of(&self, subgroup: usize) -> usize {
        self.class_of[subgroup]
    }

    /// Labels such as `[<r^2, s>]`, from a greedy generating set of the
    /// canonical member.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.poset.leq(a, b)
    }

    pub fn hasse(&self) -> &[(usize, usize)] {
        &self.hasse
    }

    pub fn automorphism_count(&self) -> usize {
        self.automorphism_count
    }

    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        match &self.lattice {
            Ok(l) => Some(l.meet(a, b)),
            Err(_) => self.poset.meet(a, b),
        }
    }

    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        match &self.lattice {
            Ok(l) => Some(l.join(a, b)),
            Err(_) => self.poset.join(a, b),
        }
    }

    /// The lattice structure, or the first pair lacking a bound.
    pub fn lattice(&self) -> core::result::Result<&Lattice, &NotLattice> {
        self.lattice.as_ref()
    }

    pub fn is_lattice(&self) -> bool {
        self.lattice.is_ok()
    }

    pub fn is_chain(&self) -> bool {
        self.poset.is_chain()
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.classes.len() - 1
    }

    /// `1` for classes whose canonical member has an element satisfying
    /// `outside`, `0` otherwise.
    pub fn colours_by(&self, outside: impl Fn(usize) -> bool) -> Vec<u32> {
        self.classes
            .iter()
            .map(|c| self.subgroups.get(c.canonical()).members().iter().any(&outside) as u32)
            .collect()
    }

    /// Poset axioms, bottom `[{e}]`, top `[G]`, equal orders within a class
    /// and divisibility of orders along the order.
    pub fn check_invariants(&self) -> core::result::Result<(), ClassPosetViolation> {
        self.poset.check_axioms().map_err(ClassPosetViolation::Axiom)?;
        if self.classes[self.bottom()].subgroup_order != 1 || self.poset.bottom() != Some(self.bottom()) {
            return Err(ClassPosetViolation::BottomNotTrivial);
        }
        let top = &self.classes[self.top()];
        if top.subgroup_order != self.group_order || top.len() != 1 || self.poset.top() != Some(self.top()) {
            return Err(ClassPosetViolation::TopNotWholeGroup);
        }
        for (c, class) in self.classes.iter().enumerate() {
            if class.members.iter().any(|&m| self.subgroups.get(m).order() != class.subgroup_order) {
                return Err(ClassPosetViolation::UnequalOrders(c));
            }
        }
        for a in 0..self.len() {
            for b in 0..self.len() {
                if self.leq(a, b) && !self.classes[b].subgroup_order.is_multiple_of(self.classes[a].subgroup_order) {
                    return Err(ClassPosetViolation::OrderNotDividing(a, b));
                }
            }
        }
        Ok(())
    }

    /// If `[H] ∧ [K]` is the bottom class and `[H] ∨ [K]` the top class,
    /// then every `H` in `[H]` and `K` in `[K]` are complements in `L(G)`.
    /// Checks this for every such pair of classes. Requires the lattice
    /// structure; returns `Ok` vacuously otherwise.
    pub fn check_complement_transfer(&self, group: &FiniteGroup) -> Result<core::result::Result<(), ComplementFailure>> {
        if group.id() != self.group {
            return Err(Error::ParentMismatch);
        }
        let Ok(lat) = &self.lattice else {
            return Ok(Ok(()));
        };
        let (bot, top) = (self.subgroups.bottom(), self.subgroups.top());
        for a in 0..self.len() {
            for b in 0..self.len() {
                if lat.meet(a, b) != lat.bottom() || lat.join(a, b) != lat.top() {
                    continue;
                }
                for &h in &self.classes[a].members {
                    for &k in &self.classes[b].members {
                        if self.subgroups.meet(h, k) != bot || self.subgroups.join(group, h, k)? != top {
                            return Ok(Err(ComplementFailure { h, k }));
                        }
                    }
                }
            }
        }
        Ok(Ok(()))
    }
}

/// `[<g1, g2, ...>]` for subgroup `i`, or `[<e>]` for the trivial one.
pub fn subgroup_label(group: &FiniteGroup, subgroups: &SubgroupLattice, i: usize) -> String {
    let gens = group.greedy_generators(subgroups.get(i).members());
    if gens.is_empty() {
        return String::from("[<e>]");
    }
    let names: Vec<&str> = gens.iter().map(|&g| group.element_name(g)).collect();
    format!("[<{}>]", names.join(", "))
}

/// `AutCl(G)` with [`Strategy::Auto`].
pub fn build_autcl(group: &FiniteGroup, limits: &Limits) -> Result<ClassPoset> {
    build_autcl_with(group, Strategy::Auto, limits)
}

pub fn build_autcl_with(group: &FiniteGroup, strategy: Strategy, limits: &Limits) -> Result<ClassPoset> {
    limits.check(group.order())?;
    let (subgroups, auts) = match strategy {
        Strategy::Auto => (subgroups_auto(group, limits)?, automorphisms_auto(group, limits)?),
        Strategy::BruteForce => (all_subgroups(group, limits)?, automorphisms_bruteforce(group, limits)?),
        Strategy::ClosedForm => match group.family() {
            Family::Dihedral(_) => (dihedral_subgroups_closed_form(group)?, aut_dihedral_closed_form(group)?),
            Family::Dicyclic(_) => (dicyclic_subgroups_closed_form(group)?, aut_dicyclic_closed_form(group)?),
            f => return Err(Error::UnsupportedFamily(format!("no closed form for {f}"))),
        },
    };
    ClassPoset::new(group, subgroups, &auts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::tau;

    fn autcl(g: &FiniteGroup) -> ClassPoset {
        build_autcl(g, &Limits::default()).unwrap()
    }

    #[test]
    fn cyclic_classes_are_singletons() {
        for n in [1, 6, 12, 30] {
            let p = autcl(&FiniteGroup::cyclic(n).unwrap());
            assert_eq!(p.len() as u64, tau(n));
            assert!(p.classes().iter().all(|c| c.len() == 1));
        }
    }

    #[test]
    fn klein_and_quaternion() {
        let k4 = autcl(&FiniteGroup::elementary_abelian(2, 2).unwrap());
        assert_eq!(k4.len(), 3);
        assert_eq!(k4.classes()[1].len(), 3);
        assert!(k4.is_chain());
        let q8 = autcl(&FiniteGroup::dicyclic(2).unwrap());
        assert_eq!(q8.len(), 4);
        assert_eq!(q8.classes()[2].len(), 3);
        assert!(q8.is_chain());
    }

    #[test]
    fn dihedral_three() {
        let g = FiniteGroup::dihedral(3).unwrap();
        let p = autcl(&g);
        assert_eq!(p.len(), 4);
        assert_eq!(p.labels(), ["[<e>]", "[<s>]", "[<r>]", "[<r, s>]"]);
        assert!(!p.poset().comparable(1, 2));
        let auts = automorphisms_auto(&g, &Limits::default()).unwrap();
        let (c1, c2) = (&p.classes()[1], &p.classes()[2]);
        assert!(!class_leq(p.subgroups(), c1, c2, &auts));
        assert!(!class_leq(p.subgroups(), c2, c1, &auts));
        assert!(class_leq(p.subgroups(), &p.classes()[0], c2, &auts));
        assert_eq!(p.hasse(), [(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn dihedral_six_bounds() {
        let g = FiniteGroup::dihedral(6).unwrap();
        let p = autcl(&g);
        let find = |label: &str| p.labels().iter().position(|l| l == label).unwrap();
        let r2 = find("[<r^2>]");
        let r3 = find("[<r^3>]");
        let r2s = find("[<r^2, s>]");
        let r3s = find("[<r^3, s>]");
        let s = find("[<s>]");
        assert_eq!(p.meet(r2, r3s), Some(p.bottom()));
        assert_eq!(p.meet(r2s, r3s), Some(s));
        assert_eq!(p.join(r3, s), Some(r3s));
        assert_eq!(p.meet(r2, p.bottom()), Some(p.bottom()));
        assert_eq!(p.join(r2, p.top()), Some(p.top()));
    }

    #[test]
    fn dicyclic_twelve_join() {
        let g = FiniteGroup::dicyclic(3).unwrap();
        let p = autcl(&g);
        let find = |label: &str| p.labels().iter().position(|l| l == label).unwrap();
        // <x^3, y> = <y> in Q_12.
        assert_eq!(p.join(find("[<x^2>]"), find("[<y>]")), Some(p.top()));
    }

    #[test]
    fn strategies_agree() {
        for g in [
            FiniteGroup::dihedral(12).unwrap(),
            FiniteGroup::dicyclic(4).unwrap(),
            FiniteGroup::dihedral(2).unwrap(),
        ] {
            let a = build_autcl_with(&g, Strategy::Auto, &Limits::default()).unwrap();
            let b = build_autcl_with(&g, Strategy::BruteForce, &Limits::default()).unwrap();
            assert_eq!(a.poset(), b.poset());
            assert_eq!(a.labels(), b.labels());
        }
        let d2 = FiniteGroup::dihedral(2).unwrap();
        assert!(build_autcl_with(&d2, Strategy::ClosedForm, &Limits::default()).is_err());
        let z4 = FiniteGroup::cyclic(4).unwrap();
        assert!(build_autcl_with(&z4, Strategy::ClosedForm, &Limits::default()).is_err());
    }

    #[test]
    fn invariants_and_complements() {
        for g in [
            FiniteGroup::dihedral(15).unwrap(),
            FiniteGroup::heisenberg(3).unwrap(),
            FiniteGroup::elementary_abelian(3, 2).unwrap(),
        ] {
            let p = autcl(&g);
            assert_eq!(p.check_invariants(), Ok(()));
            assert_eq!(p.check_complement_transfer(&g).unwrap(), Ok(()));
        }
        let p = autcl(&FiniteGroup::dihedral(15).unwrap());
        assert_eq!(p.len(), 8);
        assert!(p.lattice().unwrap().is_complemented().is_ok());
    }

    #[test]
    fn cap_is_enforced() {
        let g = FiniteGroup::cyclic(600).unwrap();
        assert!(matches!(
            build_autcl(&g, &Limits::default()),
            Err(Error::OrderCapExceeded { order: 600, cap: 512 })
        ));
        assert!(build_autcl(&g, &Limits::with_max_order(600)).is_ok());
    }
}
