//! Subgroups and the subgroup lattice `L(G)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::divisors;
use crate::bitset::ElementSet;
use crate::group::{Family, FiniteGroup, GroupId, Limits};
use crate::lattice::Lattice;
use crate::poset::Poset;
use crate::{Error, Result};

/// Subgroup lattices up to this size get eager meet/join tables.
pub const EAGER_TABLE_LIMIT: usize = 128;

/// A subgroup, identified by its member set. The stored generators are only
/// a convenience for computing joins.
#[derive(Debug, Clone)]
pub struct Subgroup {
    group: GroupId,
    members: ElementSet,
    generators: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    /// Wraps a member set that is already known to be a subgroup.
    pub(crate) fn from_members(group: &FiniteGroup, members: ElementSet, generators: Vec<usize>) -> Self {
        debug_assert!(is_subgroup(group, &members));
        Self {
            group: group.id(),
            members,
            generators,
        }
    }

    pub(crate) fn from_parts(group: GroupId, members: ElementSet, generators: Vec<usize>) -> Self {
        Self {
            group,
            members,
            generators,
        }
    }

    pub fn group_id(&self) -> GroupId {
        self.group
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.contains(g)
    }

    pub fn is_subgroup_of(&self, other: &Self) -> bool {
        self.members.is_subset(&other.members)
    }
}

/// True iff `members` contains the identity and is closed under products and
/// inverses.
pub fn is_subgroup(group: &FiniteGroup, members: &ElementSet) -> bool {
    if members.universe() != group.order() || !members.contains(group.identity()) {
        return false;
    }
    members.iter().all(|a| {
        members.contains(group.inv(a)) && members.iter().all(|b| members.contains(group.mul(a, b)))
    })
}

/// Least subgroup containing `seed`.
pub fn generated_subgroup(group: &FiniteGroup, seed: &[usize]) -> Result<Subgroup> {
    for &g in seed {
        group.check_element(g)?;
    }
    let mut gens: Vec<usize> = seed.iter().copied().filter(|&g| g != group.identity()).collect();
    gens.sort_unstable();
    gens.dedup();
    let members = group.span(&gens);
    Ok(Subgroup::from_members(group, members, gens))
}

/// Position of a subgroup in one of the closed-form listings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ListingTag {
    /// `<r^d>` with `d | n` in `D_n`, or `<x^d>` with `d | 2m` in `Q_4m`.
    Type1 { d: u64 },
    /// `<r^d, r^i s>` with `d | n`, or `<x^d, x^i y>` with `d | m`;
    /// `0 <= i < d`.
    Type2 { d: u64, i: u64 },
}

/// All subgroups of a group in canonical order (by size, then by member
/// set), with the containment order and, when small enough, full meet and
/// join tables.
#[derive(Debug, Clone)]
pub struct SubgroupLattice {
    group: GroupId,
    group_order: usize,
    subgroups: Vec<Subgroup>,
    tags: Option<Vec<ListingTag>>,
    index: BTreeMap<ElementSet, usize>,
    leq: Vec<bool>,
    meet: Option<Vec<usize>>,
    join: Option<Vec<usize>>,
}

impl SubgroupLattice {
    fn build(
        group: &FiniteGroup,
        subgroups: Vec<Subgroup>,
        tags: Option<Vec<ListingTag>>,
    ) -> Result<Self> {
        let mut entries: Vec<(Subgroup, Option<ListingTag>)> = match tags {
            Some(t) => subgroups.into_iter().zip(t.into_iter().map(Some)).collect(),
            None => subgroups.into_iter().map(|s| (s, None)).collect(),
        };
        entries.sort_by(|(a, _), (b, _)| {
            a.order().cmp(&b.order()).then_with(|| a.members.cmp(&b.members))
        });
        let has_tags = entries.first().is_some_and(|(_, t)| t.is_some());
        let (subgroups, tags): (Vec<Subgroup>, Vec<Option<ListingTag>>) = entries.into_iter().unzip();
        let mut index = BTreeMap::new();
        for (i, s) in subgroups.iter().enumerate() {
            if index.insert(s.members.clone(), i).is_some() {
                return Err(Error::InvalidParameter(format!(
                    "subgroup {:?} listed twice",
                    s.members
                )));
            }
        }
        let n = subgroups.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                leq[i * n + j] = subgroups[i].members.is_subset(&subgroups[j].members);
            }
        }
        let mut lattice = Self {
            group: group.id(),
            group_order: group.order(),
            subgroups,
            tags: has_tags.then(|| tags.into_iter().map(|t| t.expect("all tagged")).collect()),
            index,
            leq,
            meet: None,
            join: None,
        };
        if n <= EAGER_TABLE_LIMIT {
            let mut meet = vec![0; n * n];
            let mut join = vec![0; n * n];
            for i in 0..n {
                for j in 0..n {
                    meet[i * n + j] = lattice.compute_meet(i, j);
                    join[i * n + j] = lattice.compute_join(group, i, j);
                }
            }
            lattice.meet = Some(meet);
            lattice.join = Some(join);
        }
        Ok(lattice)
    }

    fn compute_meet(&self, i: usize, j: usize) -> usize {
        let m = self.subgroups[i].members.intersection(&self.subgroups[j].members);
        self.index[&m]
    }

    fn compute_join(&self, group: &FiniteGroup, i: usize, j: usize) -> usize {
        if self.leq(i, j) {
            return j;
        }
        if self.leq(j, i) {
            return i;
        }
        let mut gens = self.subgroups[i].generators.clone();
        gens.extend_from_slice(&self.subgroups[j].generators);
        self.index[&group.span(&gens)]
    }

    pub fn group_id(&self) -> GroupId {
        self.group
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn get(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    /// Closed-form listing tags, aligned with [`Self::subgroups`], when the
    /// lattice came from a listing.
    pub fn tags(&self) -> Option<&[ListingTag]> {
        self.tags.as_deref()
    }

    pub fn index_of(&self, members: &ElementSet) -> Option<usize> {
        self.index.get(members).copied()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.len() + j]
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.len() - 1
    }

    /// Index of `H_i ∩ H_j`.
    pub fn meet(&self, i: usize, j: usize) -> usize {
        match &self.meet {
            Some(t) => t[i * self.len() + j],
            None => self.compute_meet(i, j),
        }
    }

    /// Index of `<H_i ∪ H_j>`. Needs the group when tables were not built
    /// eagerly.
    pub fn join(&self, group: &FiniteGroup, i: usize, j: usize) -> Result<usize> {
        if group.id() != self.group {
            return Err(Error::ParentMismatch);
        }
        Ok(match &self.join {
            Some(t) => t[i * self.len() + j],
            None => self.compute_join(group, i, j),
        })
    }

    pub fn has_tables(&self) -> bool {
        self.join.is_some()
    }

    pub fn poset(&self) -> Poset {
        Poset::from_relation(self.len(), self.leq.clone())
    }

    /// `L(G)` as a [`Lattice`], with intersection as meet and generated
    /// subgroup as join.
    pub fn to_lattice(&self, group: &FiniteGroup) -> Result<Lattice> {
        if group.id() != self.group {
            return Err(Error::ParentMismatch);
        }
        let n = self.len();
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                meet[i * n + j] = self.meet(i, j);
                join[i * n + j] = self.join(group, i, j)?;
            }
        }
        Lattice::from_tables(self.poset(), meet, join)
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }
}

/// Every subgroup of `group`, by saturating the set of cyclic subgroups
/// under pairwise joins.
pub fn all_subgroups(group: &FiniteGroup, limits: &Limits) -> Result<SubgroupLattice> {
    limits.check(group.order())?;
    let mut list: Vec<Subgroup> = Vec::new();
    let mut seen: BTreeMap<ElementSet, ()> = BTreeMap::new();
    for g in 0..group.order() {
        let s = generated_subgroup(group, &[g])?;
        if seen.insert(s.members.clone(), ()).is_none() {
            list.push(s);
        }
    }
    let mut i = 0;
    while i < list.len() {
        for j in 0..i {
            let (a, b) = (&list[i], &list[j]);
            if a.is_subgroup_of(b) || b.is_subgroup_of(a) {
                continue;
            }
            let mut gens = a.generators.clone();
            gens.extend_from_slice(&b.generators);
            let s = generated_subgroup(group, &gens)?;
            if seen.insert(s.members.clone(), ()).is_none() {
                list.push(s);
            }
        }
        i += 1;
    }
    SubgroupLattice::build(group, list, None)
}

fn expect_family(group: &FiniteGroup, want: &'static str) -> Result<u64> {
    match (group.family(), want) {
        (Family::Dihedral(n), "dihedral") if group.order() as u64 == 2 * n => Ok(*n),
        (Family::Dicyclic(m), "dicyclic") if group.order() as u64 == 4 * m => Ok(*m),
        (f, _) => Err(Error::UnsupportedFamily(format!("{want} listing requested for {f}"))),
    }
}

/// Emits a two-part listing: `<a^d>` for `d | cyclic_modulus`, and
/// `<a^d, a^i b>` for `d | mixed_modulus`, `0 <= i < d`. `rot` is the size
/// of the rotation part (elements `0..rot`), coset elements are `rot + k`.
fn two_part_listing(
    group: &FiniteGroup,
    rot: usize,
    cyclic_modulus: u64,
    mixed_modulus: u64,
    names: (usize, usize),
) -> Result<SubgroupLattice> {
    let order = group.order();
    let (a_gen, b_gen) = names;
    let mut subgroups = Vec::new();
    let mut tags = Vec::new();
    for d in divisors(cyclic_modulus) {
        let du = d as usize;
        let members = ElementSet::from_indices(order, (0..rot).step_by(du));
        let gens = if du.is_multiple_of(rot) { vec![] } else { vec![group.pow(a_gen, du)] };
        subgroups.push(Subgroup::from_members(group, members, gens));
        tags.push(ListingTag::Type1 { d });
    }
    for d in divisors(mixed_modulus) {
        let du = d as usize;
        for i in 0..du {
            let rotations = (0..rot).step_by(du);
            let cosets = (0..rot).step_by(du).map(|k| rot + (k + i) % rot);
            let members = ElementSet::from_indices(order, rotations.chain(cosets));
            let mut gens = vec![group.mul(group.pow(a_gen, i), b_gen)];
            if !du.is_multiple_of(rot) {
                gens.insert(0, group.pow(a_gen, du));
            }
            subgroups.push(Subgroup::from_members(group, members, gens));
            tags.push(ListingTag::Type2 { d, i: i as u64 });
        }
    }
    SubgroupLattice::build(group, subgroups, Some(tags))
}

/// Subgroups of `D_n` straight from the listing `<r^d>` (`d | n`) and
/// `<r^d, r^i s>` (`d | n`, `0 <= i < d`).
pub fn dihedral_subgroups_closed_form(group: &FiniteGroup) -> Result<SubgroupLattice> {
    let n = expect_family(group, "dihedral")?;
    let r = group.generator("r").expect("dihedral has r");
    let s = group.generator("s").expect("dihedral has s");
    two_part_listing(group, n as usize, n, n, (r, s))
}

/// Subgroups of `Q_4m` from the listing `<x^d>` (`d | 2m`) and
/// `<x^d, x^i y>` (`d | m`, `0 <= i < d`).
pub fn dicyclic_subgroups_closed_form(group: &FiniteGroup) -> Result<SubgroupLattice> {
    let m = expect_family(group, "dicyclic")?;
    let x = group.generator("x").expect("dicyclic has x");
    let y = group.generator("y").expect("dicyclic has y");
    two_part_listing(group, 2 * m as usize, 2 * m, m, (x, y))
}

/// Closed-form listing when the family has one, brute force otherwise.
pub fn subgroups_auto(group: &FiniteGroup, limits: &Limits) -> Result<SubgroupLattice> {
    limits.check(group.order())?;
    match group.family() {
        Family::Dihedral(_) => dihedral_subgroups_closed_form(group),
        Family::Dicyclic(_) => dicyclic_subgroups_closed_form(group),
        _ => all_subgroups(group, limits),
    }
}
