//! Serde documents for groups, subgroup lattices, automorphism groups and
//! class posets. Field order is fixed by the struct definitions, so output
//! is byte-stable.

use autcl_core::aut::AutomorphismGroup;
use autcl_core::lattice::Lattice;
use autcl_core::model::SymbolicLattice;
use autcl_core::subgroup::{ListingTag, SubgroupLattice};
use autcl_core::{ClassPoset, Family, FiniteGroup};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorDoc {
    pub name: String,
    pub index: usize,
}

/// `{"family", "order", "generators", "table"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDoc {
    pub family: String,
    pub order: usize,
    pub generators: Vec<GeneratorDoc>,
    pub table: Vec<Vec<usize>>,
}

impl GroupDoc {
    pub fn from_group(g: &FiniteGroup) -> Self {
        Self {
            family: g.family().to_string(),
            order: g.order(),
            generators: g
                .generators()
                .iter()
                .map(|(name, index)| GeneratorDoc {
                    name: name.clone(),
                    index: *index,
                })
                .collect(),
            table: g.table().chunks(g.order()).map(<[usize]>::to_vec).collect(),
        }
    }

    /// Rebuilds and validates the group. The family string is not
    /// interpreted; the result is tagged [`Family::Adhoc`].
    pub fn to_group(&self) -> autcl_core::Result<FiniteGroup> {
        let table = self.table.iter().flatten().copied().collect();
        let gens = self.generators.iter().map(|g| (g.name.clone(), g.index)).collect();
        FiniteGroup::from_table(self.order, table, gens, Family::Adhoc)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SubgroupDoc {
    pub order: usize,
    pub generators: Vec<String>,
    pub members: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub listing: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SubgroupLatticeDoc {
    pub group: String,
    pub count: usize,
    pub subgroups: Vec<SubgroupDoc>,
    pub leq: Vec<Vec<u8>>,
    pub hasse: Vec<(usize, usize)>,
}

fn matrix(n: usize, f: impl Fn(usize, usize) -> bool) -> Vec<Vec<u8>> {
    (0..n).map(|a| (0..n).map(|b| f(a, b) as u8).collect()).collect()
}

fn tag_string(t: &ListingTag) -> String {
    match t {
        ListingTag::Type1 { d } => format!("type1 d={d}"),
        ListingTag::Type2 { d, i } => format!("type2 d={d} i={i}"),
    }
}

impl SubgroupLatticeDoc {
    pub fn new(g: &FiniteGroup, l: &SubgroupLattice) -> Self {
        let tags = l.tags();
        let subgroups = l
            .subgroups()
            .iter()
            .enumerate()
            .map(|(i, s)| SubgroupDoc {
                order: s.order(),
                generators: g
                    .greedy_generators(s.members())
                    .iter()
                    .map(|&x| g.element_name(x).to_string())
                    .collect(),
                members: s.members().to_vec(),
                listing: tags.map(|t| tag_string(&t[i])),
            })
            .collect();
        let poset = l.poset();
        Self {
            group: g.family().to_string(),
            count: l.len(),
            subgroups,
            leq: matrix(l.len(), |a, b| l.leq(a, b)),
            hasse: poset.covers(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AutomorphismsDoc {
    pub group: String,
    pub count: usize,
    /// Image of each generator, per automorphism, in generator order.
    pub generator_names: Vec<String>,
    pub generator_images: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub permutations: Option<Vec<Vec<usize>>>,
}

impl AutomorphismsDoc {
    pub fn new(g: &FiniteGroup, a: &AutomorphismGroup, with_permutations: bool) -> Self {
        let gens: Vec<usize> = g.generators().iter().map(|(_, i)| *i).collect();
        Self {
            group: g.family().to_string(),
            count: a.len(),
            generator_names: g.generators().iter().map(|(n, _)| n.clone()).collect(),
            generator_images: a
                .iter()
                .map(|f| gens.iter().map(|&x| g.element_name(f.apply(x)).to_string()).collect())
                .collect(),
            permutations: with_permutations.then(|| a.iter().map(|f| f.perm().to_vec()).collect()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassDoc {
    pub label: String,
    pub subgroup_order: usize,
    pub size: usize,
    pub canonical: Vec<usize>,
    pub members: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct LatticeTablesDoc {
    pub meet: Vec<Vec<usize>>,
    pub join: Vec<Vec<usize>>,
}

impl LatticeTablesDoc {
    pub fn new(l: &Lattice) -> Self {
        let n = l.len();
        Self {
            meet: (0..n).map(|a| (0..n).map(|b| l.meet(a, b)).collect()).collect(),
            join: (0..n).map(|a| (0..n).map(|b| l.join(a, b)).collect()).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct NotLatticeDoc {
    pub pair: (usize, usize),
    pub missing: &'static str,
    pub candidates: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassPosetDoc {
    pub group: String,
    pub automorphisms: usize,
    pub subgroups: usize,
    pub classes: Vec<ClassDoc>,
    pub leq: Vec<Vec<u8>>,
    pub hasse: Vec<(usize, usize)>,
    pub is_lattice: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lattice: Option<LatticeTablesDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub not_lattice: Option<NotLatticeDoc>,
}

impl ClassPosetDoc {
    pub fn new(g: &FiniteGroup, p: &ClassPoset) -> Self {
        let member_list = |i: usize| p.subgroups().get(i).members().to_vec();
        Self {
            group: g.family().to_string(),
            automorphisms: p.automorphism_count(),
            subgroups: p.subgroups().len(),
            classes: p
                .classes()
                .iter()
                .zip(p.labels())
                .map(|(c, label)| ClassDoc {
                    label: label.clone(),
                    subgroup_order: c.subgroup_order(),
                    size: c.len(),
                    canonical: member_list(c.canonical()),
                    members: c.members().iter().map(|&m| member_list(m)).collect(),
                })
                .collect(),
            leq: matrix(p.len(), |a, b| p.leq(a, b)),
            hasse: p.hasse().to_vec(),
            is_lattice: p.is_lattice(),
            lattice: p.lattice().ok().map(LatticeTablesDoc::new),
            not_lattice: p.lattice().err().map(|e| NotLatticeDoc {
                pair: (e.a, e.b),
                missing: e.missing.as_str(),
                candidates: e.candidates.clone(),
            }),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SymbolicClassDoc {
    pub label: String,
    pub kind: String,
    pub divisor: u64,
    pub subgroup_order: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SymbolicLatticeDoc {
    pub classes: Vec<SymbolicClassDoc>,
    pub leq: Vec<Vec<u8>>,
    pub hasse: Vec<(usize, usize)>,
    pub lattice: LatticeTablesDoc,
}

impl SymbolicLatticeDoc {
    pub fn new(m: &SymbolicLattice) -> Self {
        Self {
            classes: m
                .classes()
                .iter()
                .enumerate()
                .map(|(i, c)| SymbolicClassDoc {
                    label: m.labels()[i].clone(),
                    kind: format!("{:?}", c.kind),
                    divisor: c.divisor,
                    subgroup_order: m.subgroup_order(i),
                })
                .collect(),
            leq: matrix(m.len(), |a, b| m.poset().leq(a, b)),
            hasse: m.poset().covers(),
            lattice: LatticeTablesDoc::new(m.lattice()),
        }
    }
}

pub fn to_pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("documents serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_round_trip() {
        let g = FiniteGroup::dicyclic(3).unwrap();
        let doc = GroupDoc::from_group(&g);
        assert_eq!(doc.family, "Q_12");
        assert_eq!(doc.table.len(), 12);
        let text = serde_json::to_string(&doc).unwrap();
        let back: GroupDoc = serde_json::from_str(&text).unwrap();
        let h = back.to_group().unwrap();
        assert_eq!(h.table(), g.table());
        assert_eq!(h.generators(), g.generators());
    }

    #[test]
    fn bad_table_is_rejected() {
        let g = FiniteGroup::cyclic(3).unwrap();
        let mut doc = GroupDoc::from_group(&g);
        doc.table[1][1] = 1;
        assert!(doc.to_group().is_err());
    }
}
