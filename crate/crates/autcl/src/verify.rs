//! The verification registry: named checks over families of groups, run
//! by scope and reported in id order.

use std::fmt::Write;

use autcl_core::arith::{sigma, tau, totient};
use autcl_core::aut::{aut_dicyclic_closed_form, aut_dihedral_closed_form, automorphisms_bruteforce};
use autcl_core::iso::{poset_isomorphic, poset_isomorphic_coloured};
use autcl_core::lattice::Lattice;
use autcl_core::model::{autcl_dicyclic_model, autcl_dihedral_model, check_heisenberg_conjecture, predict_chain};
use autcl_core::subgroup::{all_subgroups, dicyclic_subgroups_closed_form, dihedral_subgroups_closed_form};
use autcl_core::{build_autcl, catalog, CatalogKind, ClassPoset, Error, FiniteGroup, Limits};
use serde::Serialize;

pub const DEFAULT_DIHEDRAL_BOUND: u64 = 30;
pub const DEFAULT_DICYCLIC_BOUND: u64 = 12;
pub const AUT_DIHEDRAL_BOUND: u64 = 20;
pub const AUT_DICYCLIC_BOUND: u64 = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremCase {
    pub id: String,
    pub description: String,
    pub expected: String,
    pub actual: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scope {
    /// Everything, at the default bounds, with the `p = 3` shape check.
    Theorems,
    Dihedral(u64),
    Dicyclic(u64),
    Conjecture(Vec<u64>),
}

impl std::fmt::Display for Scope {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Scope::Theorems => f.write_str("theorems"),
            Scope::Dihedral(n) => write!(f, "dihedral {n}"),
            Scope::Dicyclic(m) => write!(f, "dicyclic {m}"),
            Scope::Conjecture(ps) => {
                let ps: Vec<String> = ps.iter().map(u64::to_string).collect();
                write!(f, "conjecture {}", ps.join(","))
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub scope: String,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub cases: Vec<TheoremCase>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn table(&self) -> String {
        let width = self.cases.iter().map(|c| c.id.len()).max().unwrap_or(2).max(2);
        let mut out = String::new();
        let _ = writeln!(out, "{:<width$}  {:<6}  actual", "id", "status");
        for c in &self.cases {
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skip => "skip",
            };
            let _ = writeln!(out, "{:<width$}  {:<6}  {}", c.id, status, c.actual);
            if let Some(note) = &c.note {
                let _ = writeln!(out, "{:<width$}  {:<6}  note: {}", "", "", note);
            }
        }
        let _ = writeln!(
            out,
            "{} passed, {} failed, {} skipped ({})",
            self.passed, self.failed, self.skipped, self.scope
        );
        out
    }
}

type Outcome = Result<String, String>;

struct Registry {
    limits: Limits,
    cases: Vec<TheoremCase>,
}

impl Registry {
    fn add(&mut self, id: impl Into<String>, description: &str, expected: &str, note: Option<String>, run: impl FnOnce(&Limits) -> Result<Outcome, Error>) {
        let (status, actual) = match run(&self.limits) {
            Ok(Ok(a)) => (Status::Pass, a),
            Ok(Err(a)) => (Status::Fail, a),
            Err(e @ Error::OrderCapExceeded { .. }) => (Status::Skip, e.to_string()),
            Err(e) => (Status::Fail, format!("error: {e}")),
        };
        self.cases.push(TheoremCase {
            id: id.into(),
            description: description.into(),
            expected: expected.into(),
            actual,
            status,
            note,
        });
    }
}

fn ensure(ok: bool, pass: String, fail: String) -> Outcome {
    if ok {
        Ok(pass)
    } else {
        Err(fail)
    }
}

fn posets<F>(range: impl Iterator<Item = u64>, make: F, limits: &Limits) -> Result<Vec<(u64, FiniteGroup, ClassPoset)>, Error>
where
    F: Fn(u64) -> autcl_core::Result<FiniteGroup>,
{
    range
        .map(|k| {
            let g = make(k)?;
            let p = build_autcl(&g, limits)?;
            Ok((k, g, p))
        })
        .collect()
}

fn iso_to(p: &ClassPoset, kind: CatalogKind) -> Result<bool, Error> {
    Ok(poset_isomorphic(p.poset(), catalog(kind)?.poset()).is_some())
}

/// Checks shared by the dihedral and dicyclic families: lattice,
/// distributive, modular, no pentagon, no diamond.
fn lattice_cases(reg: &mut Registry, prefix: &str, name: &str, bound: u64, make: fn(u64) -> autcl_core::Result<FiniteGroup>) {
    let limits = reg.limits;
    let built = posets(1..=bound, make, &limits);
    let range = format!("1 <= k <= {bound}");
    type Check = fn(&Lattice) -> bool;
    let checks: [(&str, &str, Check); 4] = [
        ("distributive", "distributive", |l| l.is_distributive().is_ok()),
        ("modular", "modular", |l| l.is_modular().is_ok()),
        ("no-n5", "has no pentagon sublattice", |l| l.find_n5().is_none()),
        ("no-m3", "has no diamond sublattice", |l| l.find_m3().is_none()),
    ];
    reg.add(
        format!("{prefix}-is-lattice"),
        &format!("AutCl({name}) is a lattice"),
        &format!("lattice for {range}"),
        None,
        |_| {
            let built = built.as_ref().map_err(Clone::clone)?;
            let bad: Vec<u64> = built.iter().filter(|(_, _, p)| !p.is_lattice()).map(|(k, _, _)| *k).collect();
            Ok(ensure(bad.is_empty(), format!("{} groups checked", built.len()), format!("not a lattice for k in {bad:?}")))
        },
    );
    for (suffix, what, check) in checks {
        reg.add(
            format!("{prefix}-{suffix}"),
            &format!("AutCl({name}) {what}"),
            &format!("{what} for {range}"),
            None,
            |_| {
                let built = built.as_ref().map_err(Clone::clone)?;
                let bad: Vec<u64> = built
                    .iter()
                    .filter(|(_, _, p)| !p.lattice().is_ok_and(check))
                    .map(|(k, _, _)| *k)
                    .collect();
                Ok(ensure(bad.is_empty(), format!("{} groups checked", built.len()), format!("fails for k in {bad:?}")))
            },
        );
    }
    reg.add(
        format!("{prefix}-birkhoff-agreement"),
        &format!("distributivity of AutCl({name}) agrees with the absence of N5 and M3"),
        "agreement on every group",
        None,
        |_| {
            let built = built.as_ref().map_err(Clone::clone)?;
            let bad: Vec<u64> = built
                .iter()
                .filter(|(_, _, p)| {
                    p.lattice()
                        .map(|l| l.is_distributive().is_ok() != (l.find_n5().is_none() && l.find_m3().is_none()))
                        .unwrap_or(true)
                })
                .map(|(k, _, _)| *k)
                .collect();
            Ok(ensure(bad.is_empty(), format!("{} groups checked", built.len()), format!("disagreement for k in {bad:?}")))
        },
    );
}

fn dihedral_cases(reg: &mut Registry, bound: u64) {
    lattice_cases(reg, "dihedral", "D_n", bound, FiniteGroup::dihedral);
    reg.add(
        "dihedral-listing",
        "closed-form subgroup listing of D_n equals the brute-force one",
        &format!("identical sets with tau(n) + sigma(n) members for n <= {bound}"),
        None,
        |limits| {
            for n in 1..=bound {
                let g = FiniteGroup::dihedral(n)?;
                let cf = dihedral_subgroups_closed_form(&g)?;
                let bf = all_subgroups(&g, limits)?;
                if cf.subgroups() != bf.subgroups() || cf.len() as u64 != tau(n) + sigma(n) {
                    return Ok(Err(format!("mismatch at n = {n}: {} vs {}", cf.len(), bf.len())));
                }
            }
            Ok(Ok(format!("{bound} groups checked")))
        },
    );
    let aut_bound = bound.min(AUT_DIHEDRAL_BOUND);
    reg.add(
        "dihedral-aut-count",
        "Aut(D_n) has n phi(n) elements and the formula matches the search",
        &format!("equal sets of size n phi(n) for 3 <= n <= {aut_bound}"),
        None,
        |limits| {
            for n in 3..=aut_bound {
                let g = FiniteGroup::dihedral(n)?;
                let cf = aut_dihedral_closed_form(&g)?;
                let bf = automorphisms_bruteforce(&g, limits)?;
                if cf != bf || cf.len() as u64 != n * totient(n) {
                    return Ok(Err(format!("mismatch at n = {n}: {} vs {}", cf.len(), bf.len())));
                }
            }
            Ok(Ok(format!("{} groups checked", aut_bound.saturating_sub(2))))
        },
    );
    reg.add(
        "dihedral-model",
        "the divisor model of AutCl(D_n) is isomorphic to the computed poset",
        &format!("kind-respecting isomorphism, 2 tau(n) classes, 3 <= n <= {bound}"),
        None,
        |limits| {
            for n in 3..=bound {
                let g = FiniteGroup::dihedral(n)?;
                let p = build_autcl(&g, limits)?;
                let model = autcl_dihedral_model(n)?;
                let colours = p.colours_by(|e| e >= n as usize);
                let iso = poset_isomorphic_coloured(model.poset(), p.poset(), &model.colours(), &colours);
                if iso.is_none() || model.len() as u64 != 2 * tau(n) {
                    return Ok(Err(format!("no isomorphism at n = {n}")));
                }
            }
            Ok(Ok(format!("{} groups checked", bound.saturating_sub(2))))
        },
    );
    reg.add(
        "dihedral-d2-chain3",
        "AutCl(D_2) is a three-element chain",
        "C_3",
        None,
        |limits| {
            let p = build_autcl(&FiniteGroup::dihedral(2)?, limits)?;
            let ok = iso_to(&p, CatalogKind::Chain(3))?;
            Ok(ensure(ok, "C_3".into(), format!("{} classes, not C_3", p.len())))
        },
    );
    reg.add(
        "dihedral-prime-m2",
        "AutCl(D_p) for an odd prime p has the four-element two-middle shape",
        "M2 for p in {3, 5, 7}",
        None,
        |limits| {
            let ps: Vec<u64> = [3, 5, 7].into_iter().filter(|&p| p <= bound).collect();
            for &p in &ps {
                let q = build_autcl(&FiniteGroup::dihedral(p)?, limits)?;
                if !iso_to(&q, CatalogKind::M2)? {
                    return Ok(Err(format!("D_{p} is not M2")));
                }
            }
            Ok(Ok(format!("M2 for p in {ps:?}")))
        },
    );
    reg.add(
        "dihedral-prime-power",
        "AutCl(D_{p^a}) has 2(a+1) classes and is isomorphic to T(2^a 3)",
        "holds for (p, a) in {(2,2), (2,3), (3,2), (3,3), (5,2)}",
        None,
        |limits| {
            let mut done = Vec::new();
            for (p, a) in [(2u64, 2u32), (2, 3), (3, 2), (3, 3), (5, 2)] {
                let n = p.pow(a);
                if n > bound {
                    continue;
                }
                let q = build_autcl(&FiniteGroup::dihedral(n)?, limits)?;
                let ok = q.len() == 2 * (a as usize + 1) && iso_to(&q, CatalogKind::Divisor(2u64.pow(a) * 3))?;
                if !ok {
                    return Ok(Err(format!("fails for D_{n}")));
                }
                done.push(n);
            }
            Ok(Ok(format!("holds for n in {done:?}")))
        },
    );
    reg.add(
        "dihedral-two-primes-boolean",
        "AutCl(D_{pq}) for distinct primes is the Boolean lattice on three atoms",
        "B_3 for (p, q) in {(3, 5), (2, 7)}",
        None,
        |limits| {
            let mut done = Vec::new();
            for n in [15u64, 14] {
                if n > bound {
                    continue;
                }
                let q = build_autcl(&FiniteGroup::dihedral(n)?, limits)?;
                if !iso_to(&q, CatalogKind::Boolean(3))? {
                    return Ok(Err(format!("D_{n} is not B_3")));
                }
                done.push(n);
            }
            Ok(Ok(format!("B_3 for n in {done:?}")))
        },
    );
}

fn dicyclic_cases(reg: &mut Registry, bound: u64) {
    lattice_cases(reg, "dicyclic", "Q_4m", bound, FiniteGroup::dicyclic);
    reg.add(
        "dicyclic-listing",
        "closed-form subgroup listing of Q_4m equals the brute-force one",
        &format!("identical sets with tau(2m) + sigma(m) members for m <= {bound}"),
        None,
        |limits| {
            for m in 1..=bound {
                let g = FiniteGroup::dicyclic(m)?;
                let cf = dicyclic_subgroups_closed_form(&g)?;
                let bf = all_subgroups(&g, limits)?;
                if cf.subgroups() != bf.subgroups() || cf.len() as u64 != tau(2 * m) + sigma(m) {
                    return Ok(Err(format!("mismatch at m = {m}: {} vs {}", cf.len(), bf.len())));
                }
            }
            Ok(Ok(format!("{bound} groups checked")))
        },
    );
    let aut_bound = bound.min(AUT_DICYCLIC_BOUND);
    reg.add(
        "dicyclic-aut-count",
        "Aut(Q_4m) has 2m phi(2m) elements and the formula matches the search",
        &format!("equal sets of size 2m phi(2m) for 3 <= m <= {aut_bound}"),
        None,
        |limits| {
            for m in 3..=aut_bound {
                let g = FiniteGroup::dicyclic(m)?;
                let cf = aut_dicyclic_closed_form(&g)?;
                let bf = automorphisms_bruteforce(&g, limits)?;
                if cf != bf || cf.len() as u64 != 2 * m * totient(2 * m) {
                    return Ok(Err(format!("mismatch at m = {m}: {} vs {}", cf.len(), bf.len())));
                }
            }
            Ok(Ok(format!("{} groups checked", aut_bound.saturating_sub(2))))
        },
    );
    reg.add(
        "dicyclic-model",
        "the divisor model of AutCl(Q_4m) is isomorphic to the computed poset",
        &format!("kind-respecting isomorphism, tau(2m) + tau(m) classes, 3 <= m <= {bound}"),
        Some("even m is checked by computation only".into()),
        |limits| {
            for m in 3..=bound {
                let g = FiniteGroup::dicyclic(m)?;
                let p = build_autcl(&g, limits)?;
                let model = autcl_dicyclic_model(m)?;
                let colours = p.colours_by(|e| e >= 2 * m as usize);
                let iso = poset_isomorphic_coloured(model.poset(), p.poset(), &model.colours(), &colours);
                if iso.is_none() || model.len() as u64 != tau(2 * m) + tau(m) {
                    return Ok(Err(format!("no isomorphism at m = {m}")));
                }
            }
            Ok(Ok(format!("{} groups checked", bound.saturating_sub(2))))
        },
    );
}

fn heisenberg_case(reg: &mut Registry, p: u64) {
    let note = (p != 3).then(|| "new computation; there is no reference result for this p".to_string());
    reg.add(
        format!("heisenberg-shape-p{p}"),
        &format!("AutCl(Heis(Z_{p})) has the shape 0 < {{a, b}} < c < 1"),
        "isomorphic",
        note,
        |limits| {
            let r = check_heisenberg_conjecture(p, limits)?;
            let atoms: Vec<String> = r
                .atoms
                .iter()
                .map(|a| {
                    format!(
                        "{} ({} subgroup{}, {}{})",
                        a.label,
                        a.orbit_size,
                        if a.orbit_size == 1 { "" } else { "s" },
                        if a.central { "central" } else { "non-central" },
                        if a.normal { "" } else { ", non-normal" }
                    )
                })
                .collect();
            let summary = format!("{} classes; atoms {}", r.poset.len(), atoms.join("; "));
            Ok(if r.isomorphic() {
                Ok(format!("isomorphic: {summary}"))
            } else {
                Err(format!("not isomorphic: {summary}"))
            })
        },
    );
}

/// The groups over which the chain classification is checked.
pub fn chain_battery() -> Vec<(String, FiniteGroup)> {
    let mut v = Vec::new();
    let mut push = |name: String, g: autcl_core::Result<FiniteGroup>| v.push((name, g.expect("battery groups construct")));
    for p in [2u64, 3, 5] {
        for k in 1..=4 {
            push(format!("Z:{}", p.pow(k)), FiniteGroup::cyclic(p.pow(k)));
        }
    }
    for p in [2u64, 3] {
        for k in 1..=3 {
            push(format!("EA:{p},{k}"), FiniteGroup::elementary_abelian(p, k));
        }
    }
    push("Q:2".into(), FiniteGroup::dicyclic(2));
    for (name, g) in [
        ("Z:6", FiniteGroup::cyclic(6)),
        ("Z:12", FiniteGroup::cyclic(12)),
        ("D:3", FiniteGroup::dihedral(3)),
        ("D:4", FiniteGroup::dihedral(4)),
        ("Q:4", FiniteGroup::dicyclic(4)),
        ("Q:3", FiniteGroup::dicyclic(3)),
        ("heis:3", FiniteGroup::heisenberg(3)),
    ] {
        push(name.into(), g);
    }
    let z4 = FiniteGroup::cyclic(4).expect("Z_4");
    let z2 = FiniteGroup::cyclic(2).expect("Z_2");
    push("prod(Z:4,Z:2)".into(), FiniteGroup::direct_product(&z4, &z2));
    v
}

fn general_cases(reg: &mut Registry) {
    reg.add(
        "example-cyclic-divisor",
        "AutCl(Z_n) is the divisor lattice of n",
        "T(n) for n in {1, 6, 12, 30}",
        None,
        |limits| {
            for n in [1u64, 6, 12, 30] {
                let p = build_autcl(&FiniteGroup::cyclic(n)?, limits)?;
                if !iso_to(&p, CatalogKind::Divisor(n))? {
                    return Ok(Err(format!("Z_{n} differs from T({n})")));
                }
            }
            Ok(Ok("T(n) for n in [1, 6, 12, 30]".into()))
        },
    );
    reg.add(
        "example-klein-chain",
        "AutCl(Z_2 x Z_2) is a three-element chain",
        "C_3",
        None,
        |limits| {
            let p = build_autcl(&FiniteGroup::elementary_abelian(2, 2)?, limits)?;
            Ok(ensure(iso_to(&p, CatalogKind::Chain(3))?, "C_3".into(), format!("{} classes", p.len())))
        },
    );
    reg.add(
        "example-quaternion-chain",
        "AutCl(Q_8) is a four-element chain",
        "C_4",
        None,
        |limits| {
            let p = build_autcl(&FiniteGroup::dicyclic(2)?, limits)?;
            Ok(ensure(iso_to(&p, CatalogKind::Chain(4))?, "C_4".into(), format!("{} classes", p.len())))
        },
    );
    reg.add(
        "birkhoff-controls",
        "the distributivity test and the N5/M3 search agree on non-distributive controls",
        "M3, N5 and L(K_4) are non-distributive by both routes",
        None,
        |limits| {
            let k4 = FiniteGroup::elementary_abelian(2, 2)?;
            let controls = [
                ("M3", Lattice::from_poset(catalog(CatalogKind::M3)?.poset()).expect("M3 is a lattice")),
                ("N5", Lattice::from_poset(catalog(CatalogKind::N5)?.poset()).expect("N5 is a lattice")),
                ("L(K_4)", all_subgroups(&k4, limits)?.to_lattice(&k4)?),
            ];
            for (name, l) in &controls {
                let direct = l.is_distributive().is_ok();
                let forbidden = l.find_n5().is_none() && l.find_m3().is_none();
                if direct || forbidden {
                    return Ok(Err(format!("{name}: direct {direct}, forbidden-free {forbidden}")));
                }
            }
            Ok(Ok("all three rejected by both".into()))
        },
    );
    reg.add(
        "complement-klein-witness",
        "L(K_4) is complemented while AutCl(K_4) is not",
        "L(K_4) complemented, AutCl(K_4) not",
        None,
        |limits| {
            let k4 = FiniteGroup::elementary_abelian(2, 2)?;
            let l = all_subgroups(&k4, limits)?.to_lattice(&k4)?;
            let p = build_autcl(&k4, limits)?;
            let lc = l.is_complemented().is_ok();
            let pc = p.lattice().map(|x| x.is_complemented().is_ok()).unwrap_or(false);
            Ok(ensure(lc && !pc, "as expected".into(), format!("L(K_4) {lc}, AutCl(K_4) {pc}")))
        },
    );
    reg.add(
        "complement-transfer",
        "whenever AutCl(G) is a complemented lattice, L(G) is complemented",
        "implication holds on the dihedral, dicyclic and chain groups",
        None,
        |limits| {
            let mut groups: Vec<FiniteGroup> = chain_battery().into_iter().map(|(_, g)| g).collect();
            for n in 1..=DEFAULT_DIHEDRAL_BOUND {
                groups.push(FiniteGroup::dihedral(n)?);
            }
            for m in 1..=DEFAULT_DICYCLIC_BOUND {
                groups.push(FiniteGroup::dicyclic(m)?);
            }
            let mut premise = 0;
            let mut checked = 0;
            for g in &groups {
                let p = match build_autcl(g, limits) {
                    Ok(p) => p,
                    Err(Error::OrderCapExceeded { .. }) => continue,
                    Err(e) => return Err(e),
                };
                checked += 1;
                if let Err(w) = p.check_complement_transfer(g)? {
                    return Ok(Err(format!("{}: subgroups {} and {} are not complements", g.family(), w.h, w.k)));
                }
                if p.lattice().is_ok_and(|l| l.is_complemented().is_ok()) {
                    premise += 1;
                    if p.subgroups().to_lattice(g)?.is_complemented().is_err() {
                        return Ok(Err(format!("{}: L(G) is not complemented", g.family())));
                    }
                }
            }
            Ok(Ok(format!("{checked} groups, {premise} with complemented AutCl")))
        },
    );
    reg.add(
        "chain-classification",
        "AutCl(G) is a chain exactly for cyclic p-groups, elementary abelian p-groups and Q_8",
        "prediction equals computation on the chain battery",
        None,
        |limits| {
            let mut skipped = Vec::new();
            let mut checked = 0;
            for (name, g) in chain_battery() {
                let p = match build_autcl(&g, limits) {
                    Ok(p) => p,
                    Err(Error::OrderCapExceeded { .. }) => {
                        skipped.push(name);
                        continue;
                    }
                    Err(e) => return Err(e),
                };
                let (predicted, tag) = predict_chain(&g);
                if predicted != p.is_chain() {
                    return Ok(Err(format!("{name}: predicted {predicted} ({tag}), computed {}", p.is_chain())));
                }
                checked += 1;
            }
            let mut msg = format!("{checked} groups agree");
            if !skipped.is_empty() {
                msg.push_str(&format!("; skipped over the order cap: {}", skipped.join(", ")));
            }
            Ok(Ok(msg))
        },
    );
}

/// Runs every case in `scope` and returns them sorted by id.
pub fn run(scope: &Scope, limits: &Limits) -> Report {
    let mut reg = Registry {
        limits: *limits,
        cases: Vec::new(),
    };
    match scope {
        Scope::Theorems => {
            general_cases(&mut reg);
            dihedral_cases(&mut reg, DEFAULT_DIHEDRAL_BOUND);
            dicyclic_cases(&mut reg, DEFAULT_DICYCLIC_BOUND);
            heisenberg_case(&mut reg, 3);
        }
        Scope::Dihedral(n) => dihedral_cases(&mut reg, *n),
        Scope::Dicyclic(m) => dicyclic_cases(&mut reg, *m),
        Scope::Conjecture(ps) => {
            let mut ps = ps.clone();
            ps.sort_unstable();
            ps.dedup();
            for p in ps {
                heisenberg_case(&mut reg, p);
            }
        }
    }
    let mut cases = reg.cases;
    cases.sort_by(|a, b| a.id.cmp(&b.id));
    debug_assert!(cases.windows(2).all(|w| w[0].id != w[1].id));
    let count = |s: Status| cases.iter().filter(|c| c.status == s).count();
    Report {
        scope: scope.to_string(),
        passed: count(Status::Pass),
        failed: count(Status::Fail),
        skipped: count(Status::Skip),
        cases,
    }
}
