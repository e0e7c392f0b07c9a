use autcl_core::arith::{sigma, tau, totient};
use autcl_core::aut::{
    apply_automorphism, aut_dicyclic_closed_form, aut_dihedral_closed_form, automorphisms_auto,
    automorphisms_bruteforce,
};
use autcl_core::autcl::{class_leq, representatives_leq};
use autcl_core::group::verify_group_axioms;
use autcl_core::iso::{poset_isomorphic, poset_isomorphic_coloured, verify};
use autcl_core::lattice::Lattice;
use autcl_core::model::{autcl_dicyclic_model, autcl_dihedral_model};
use autcl_core::subgroup::{all_subgroups, dicyclic_subgroups_closed_form, dihedral_subgroups_closed_form};
use autcl_core::{build_autcl, build_autcl_with, catalog, CatalogKind, FiniteGroup, Limits, Strategy};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn battery() -> Vec<FiniteGroup> {
    let mut v = Vec::new();
    for n in [1, 2, 3, 4, 6, 8, 9, 12] {
        v.push(FiniteGroup::cyclic(n).unwrap());
    }
    for n in [1, 2, 3, 4, 6, 10, 12] {
        v.push(FiniteGroup::dihedral(n).unwrap());
    }
    for m in [1, 2, 3, 4, 6] {
        v.push(FiniteGroup::dicyclic(m).unwrap());
    }
    v.push(FiniteGroup::elementary_abelian(2, 2).unwrap());
    v.push(FiniteGroup::elementary_abelian(2, 3).unwrap());
    v.push(FiniteGroup::elementary_abelian(3, 2).unwrap());
    v.push(FiniteGroup::heisenberg(3).unwrap());
    let z4 = FiniteGroup::cyclic(4).unwrap();
    let z2 = FiniteGroup::cyclic(2).unwrap();
    v.push(FiniteGroup::direct_product(&z4, &z2).unwrap());
    v
}

#[test]
fn class_posets_satisfy_invariants() {
    for g in battery() {
        let p = build_autcl(&g, &Limits::default()).unwrap();
        assert_eq!(p.check_invariants(), Ok(()), "{}", g.family());
    }
}

#[test]
fn orbits_are_closed() {
    for g in battery() {
        let p = build_autcl(&g, &Limits::default()).unwrap();
        let auts = automorphisms_auto(&g, &Limits::default()).unwrap();
        for class in p.classes() {
            for &m in class.members() {
                for f in auts.iter() {
                    let img = apply_automorphism(f, p.subgroups().get(m)).unwrap();
                    assert_eq!(img.order(), class.subgroup_order());
                    let j = p.subgroups().index_of(img.members()).unwrap();
                    assert!(class.members().contains(&j));
                }
            }
        }
    }
}

#[test]
fn representative_choice_does_not_matter() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for g in battery() {
        let p = build_autcl(&g, &Limits::default()).unwrap();
        let auts = automorphisms_auto(&g, &Limits::default()).unwrap();
        for _ in 0..100 {
            let a = rng.gen_range(0..p.len());
            let b = rng.gen_range(0..p.len());
            let (ca, cb) = (&p.classes()[a], &p.classes()[b]);
            let h = ca.members()[rng.gen_range(0..ca.len())];
            let k = cb.members()[rng.gen_range(0..cb.len())];
            let expected = p.leq(a, b);
            assert_eq!(class_leq(p.subgroups(), ca, cb, &auts), expected);
            assert_eq!(representatives_leq(p.subgroups(), h, k, &auts), expected, "{}", g.family());
        }
    }
}

#[test]
fn mutual_comparability_means_equal_class() {
    for g in battery() {
        let p = build_autcl(&g, &Limits::default()).unwrap();
        for a in 0..p.len() {
            for b in 0..p.len() {
                if p.leq(a, b) && p.leq(b, a) {
                    assert_eq!(a, b);
                }
            }
        }
    }
}

fn witness_lattices() -> Vec<Lattice> {
    let mut v = Vec::new();
    for kind in [
        CatalogKind::M3,
        CatalogKind::N5,
        CatalogKind::M2,
        CatalogKind::Chain(4),
        CatalogKind::Boolean(3),
        CatalogKind::Divisor(60),
        CatalogKind::Figure9,
    ] {
        v.push(Lattice::from_poset(catalog(kind).unwrap().poset()).unwrap());
    }
    for g in battery() {
        let l = all_subgroups(&g, &Limits::default()).unwrap();
        v.push(l.to_lattice(&g).unwrap());
        if let Ok(lat) = build_autcl(&g, &Limits::default()).unwrap().lattice() {
            v.push(lat.clone());
        }
    }
    v
}

#[test]
fn birkhoff_and_dedekind_cross_checks() {
    for l in witness_lattices() {
        let distributive = l.is_distributive().is_ok();
        let modular = l.is_modular().is_ok();
        let n5 = l.find_n5();
        let m3 = l.find_m3();
        assert_eq!(distributive, n5.is_none() && m3.is_none());
        assert_eq!(modular, n5.is_none());
        assert!(!distributive || modular);
        for w in n5.iter().chain(m3.iter()) {
            assert!(l.is_sublattice(&w.elements()));
        }
    }
}

#[test]
fn isomorphism_is_reflexive_and_symmetric() {
    let posets: Vec<_> = battery()
        .iter()
        .map(|g| build_autcl(g, &Limits::default()).unwrap().poset().clone())
        .collect();
    for p in &posets {
        let m = poset_isomorphic(p, p).unwrap();
        assert!(verify(p, p, &m));
        for q in &posets {
            assert_eq!(poset_isomorphic(p, q).is_some(), poset_isomorphic(q, p).is_some());
        }
    }
}

#[test]
fn models_match_oracle_including_operations() {
    let limits = Limits::default();
    for n in 3..=16u64 {
        let g = FiniteGroup::dihedral(n).unwrap();
        let oracle = build_autcl_with(&g, Strategy::BruteForce, &limits).unwrap();
        let model = autcl_dihedral_model(n).unwrap();
        let colours = oracle.colours_by(|e| e >= n as usize);
        let map = poset_isomorphic_coloured(model.poset(), oracle.poset(), &model.colours(), &colours)
            .unwrap_or_else(|| panic!("D_{n}"));
        for i in 0..model.len() {
            assert_eq!(model.subgroup_order(i) as usize, oracle.classes()[map[i]].subgroup_order());
            for j in 0..model.len() {
                assert_eq!(Some(map[model.meet(i, j)]), oracle.meet(map[i], map[j]));
                assert_eq!(Some(map[model.join(i, j)]), oracle.join(map[i], map[j]));
            }
        }
    }
    for m in 3..=8u64 {
        let g = FiniteGroup::dicyclic(m).unwrap();
        let oracle = build_autcl_with(&g, Strategy::BruteForce, &limits).unwrap();
        let model = autcl_dicyclic_model(m).unwrap();
        let colours = oracle.colours_by(|e| e >= 2 * m as usize);
        let map = poset_isomorphic_coloured(model.poset(), oracle.poset(), &model.colours(), &colours)
            .unwrap_or_else(|| panic!("Q_{}", 4 * m));
        for i in 0..model.len() {
            assert_eq!(model.subgroup_order(i) as usize, oracle.classes()[map[i]].subgroup_order());
            for j in 0..model.len() {
                assert_eq!(Some(map[model.meet(i, j)]), oracle.meet(map[i], map[j]));
                assert_eq!(Some(map[model.join(i, j)]), oracle.join(map[i], map[j]));
            }
        }
    }
}

#[test]
fn listing_counts() {
    for n in 1..=20u64 {
        let g = FiniteGroup::dihedral(n).unwrap();
        assert_eq!(dihedral_subgroups_closed_form(&g).unwrap().len() as u64, tau(n) + sigma(n));
    }
    for m in 1..=10u64 {
        let g = FiniteGroup::dicyclic(m).unwrap();
        assert_eq!(dicyclic_subgroups_closed_form(&g).unwrap().len() as u64, tau(2 * m) + sigma(m));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn constructors_pass_axioms(kind in 0u8..5, a in 1u64..20, b in 1u32..4) {
        let g = match kind {
            0 => FiniteGroup::cyclic(a).unwrap(),
            1 => FiniteGroup::dihedral(a).unwrap(),
            2 => FiniteGroup::dicyclic(a).unwrap(),
            3 => FiniteGroup::elementary_abelian([2, 3, 5][a as usize % 3], b).unwrap(),
            _ => FiniteGroup::direct_product(
                &FiniteGroup::cyclic(a).unwrap(),
                &FiniteGroup::dihedral(b as u64).unwrap(),
            ).unwrap(),
        };
        let r = verify_group_axioms(&g);
        prop_assert!(r.passed(), "{:?}", r.violation);
    }

    #[test]
    fn automorphism_groups_are_closed(n in 3u64..15, seed in any::<u64>()) {
        let g = FiniteGroup::dihedral(n).unwrap();
        let a = aut_dihedral_closed_form(&g).unwrap();
        prop_assert_eq!(a.len() as u64, n * totient(n));
        prop_assert!(a.contains_identity());
        let mut rng = StdRng::seed_from_u64(seed);
        for _ in 0..20 {
            let f = &a.elements()[rng.gen_range(0..a.len())];
            let h = &a.elements()[rng.gen_range(0..a.len())];
            prop_assert!(a.contains(&f.compose(h)));
            prop_assert!(a.contains(&f.inverse()));
            prop_assert!(f.is_automorphism_of(&g));
        }
    }

    #[test]
    fn dicyclic_closed_form_is_exact(m in 3u64..9) {
        let g = FiniteGroup::dicyclic(m).unwrap();
        let cf = aut_dicyclic_closed_form(&g).unwrap();
        let bf = automorphisms_bruteforce(&g, &Limits::default()).unwrap();
        prop_assert_eq!(cf, bf);
    }

    #[test]
    fn images_preserve_order(n in 1u64..13, pick in any::<prop::sample::Index>()) {
        let g = FiniteGroup::dihedral(n).unwrap();
        let l = dihedral_subgroups_closed_form(&g).unwrap();
        let a = automorphisms_auto(&g, &Limits::default()).unwrap();
        let h = l.get(pick.index(l.len()));
        for f in a.iter() {
            prop_assert_eq!(apply_automorphism(f, h).unwrap().order(), h.order());
        }
    }
}
