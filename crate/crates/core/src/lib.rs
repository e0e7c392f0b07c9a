//! Automorphic classes of subgroups of small finite groups.
//!
//! Groups are explicit multiplication tables over element indices. On top of
//! them the crate enumerates subgroups, computes automorphism groups, forms
//! the poset of `Aut(G)`-orbits of subgroups and runs lattice-theoretic
//! checks (distributivity, modularity, forbidden `N5`/`M3` sublattices,
//! complementation, chain-ness, order isomorphism). Closed-form models for
//! dihedral and dicyclic groups are provided alongside the brute-force
//! constructions so that each can be checked against the other.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod arith;
pub mod aut;
pub mod autcl;
pub mod bitset;
pub mod catalog;
pub mod error;
pub mod group;
pub mod iso;
pub mod lattice;
pub mod model;
pub mod poset;
pub mod subgroup;

pub use aut::{Automorphism, AutomorphismGroup};
pub use autcl::{build_autcl, build_autcl_with, AutClass, ClassPoset, Strategy};
pub use bitset::ElementSet;
pub use catalog::{catalog, CatalogKind, CatalogPoset};
pub use error::Error;
pub use group::{Family, FiniteGroup, GroupId, Limits};
pub use lattice::Lattice;
pub use poset::Poset;
pub use subgroup::{ListingTag, Subgroup, SubgroupLattice};

pub type Result<T, E = Error> = core::result::Result<T, E>;
