use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use autcl::descriptor;
use autcl::dot::hasse_dot;
use autcl::json::{
    to_pretty, AutomorphismsDoc, ClassPosetDoc, GroupDoc, SubgroupLatticeDoc, SymbolicLatticeDoc,
};
use autcl::verify::{self, Scope};
use autcl_core::aut::{aut_dicyclic_closed_form, aut_dihedral_closed_form, automorphisms_auto, automorphisms_bruteforce};
use autcl_core::group::{verify_group_axioms, DEFAULT_MAX_ORDER};
use autcl_core::iso::poset_isomorphic_coloured;
use autcl_core::lattice::Lattice;
use autcl_core::model::{autcl_dicyclic_model, autcl_dihedral_model, SymbolicLattice};
use autcl_core::subgroup::{all_subgroups, dicyclic_subgroups_closed_form, dihedral_subgroups_closed_form, subgroups_auto};
use autcl_core::{build_autcl_with, ClassPoset, Family, FiniteGroup, Limits, Strategy};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

/// Automorphic classes of subgroups of small finite groups.
///
/// Groups are given as descriptors: Z:n, D:n, Q:m (order 4m), EA:p,k,
/// heis:p, prod(A,B), or @file.json for a group document.
#[derive(Parser, Debug)]
#[command(name = "autcl", version)]
struct Cli {
    /// Largest group order the enumeration algorithms accept.
    #[arg(long, global = true, env = "AUTCL_MAX_ORDER", default_value_t = DEFAULT_MAX_ORDER)]
    max_order: usize,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write the output to a file. For `verify` this is the JSON report and
    /// the table still goes to stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct Mode {
    /// Use the closed-form constructions only.
    #[arg(long, conflicts_with_all = ["brute_force", "both"])]
    closed_form: bool,
    /// Use generic search only.
    #[arg(long, conflicts_with = "both")]
    brute_force: bool,
    /// Run both and compare them.
    #[arg(long)]
    both: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Order, exponent, generators and an axiom check.
    Info { group: String },
    /// The subgroup lattice.
    Subgroups {
        group: String,
        #[command(flatten)]
        mode: Mode,
    },
    /// The automorphism group.
    Aut {
        group: String,
        #[command(flatten)]
        mode: Mode,
        /// Include full permutations in JSON output.
        #[arg(long)]
        permutations: bool,
    },
    /// The poset of automorphic classes of subgroups.
    Autcl {
        group: String,
        #[command(flatten)]
        mode: Mode,
    },
    /// Test a property of AutCl(G), or of L(G) with --subgroup-lattice.
    /// `n5` and `m3` hold when no such sublattice exists.
    Check {
        group: String,
        property: Property,
        #[arg(long)]
        subgroup_lattice: bool,
    },
    /// Run the verification registry: `theorems`, `dihedral N`,
    /// `dicyclic M` or `conjecture P1,P2,...`.
    Verify {
        #[arg(required = true, num_args = 1..=2)]
        scope: Vec<String>,
    },
    /// Export a Hasse diagram as DOT (JSON with --json), or a group document.
    Export { group: String, target: Target },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Property {
    Lattice,
    Chain,
    Distributive,
    Modular,
    Complemented,
    N5,
    M3,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Target {
    Lattice,
    Autcl,
    Group,
}

/// Non-zero exit without an error message, e.g. a failed check.
struct Verdict(bool);

fn load_group(spec: &str) -> Result<FiniteGroup> {
    if let Some(path) = spec.strip_prefix('@') {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
        let doc: GroupDoc = serde_json::from_str(&text).with_context(|| format!("parsing {path}"))?;
        return doc.to_group().map_err(|e| anyhow!("{path}: {e}"));
    }
    let d = descriptor::parse(spec).map_err(|e| anyhow!("invalid group descriptor '{spec}' {e}"))?;
    d.build().map_err(|e| anyhow!("{spec}: {e}"))
}

fn parse_scope(words: &[String]) -> Result<Scope> {
    let arg = |what: &str| -> Result<&String> {
        words.get(1).ok_or_else(|| anyhow!("scope '{}' needs {what}", words[0]))
    };
    let num = |s: &str| -> Result<u64> {
        s.trim().parse::<u64>().ok().filter(|&v| v > 0).ok_or_else(|| anyhow!("'{s}' is not a positive integer"))
    };
    let scope = match words[0].as_str() {
        "theorems" => Scope::Theorems,
        "dihedral" => Scope::Dihedral(num(arg("a bound N")?)?),
        "dicyclic" => Scope::Dicyclic(num(arg("a bound M")?)?),
        "conjecture" => {
            let list = arg("a prime list such as 3,5")?;
            let ps: Vec<u64> = list
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(num)
                .collect::<Result<_>>()?;
            if ps.is_empty() {
                bail!("empty prime list");
            }
            Scope::Conjecture(ps)
        }
        other => bail!("unknown scope '{other}' (expected theorems, dihedral, dicyclic or conjecture)"),
    };
    if matches!(scope, Scope::Theorems) && words.len() > 1 {
        bail!("scope 'theorems' takes no argument");
    }
    Ok(scope)
}

fn class_table(p: &ClassPoset) -> String {
    let mut out = String::new();
    let w = p.labels().iter().map(String::len).max().unwrap_or(0);
    for (i, (c, l)) in p.classes().iter().zip(p.labels()).enumerate() {
        let _ = writeln!(
            out,
            "  {i:>3}  {l:<w$}  order {:<4} {} subgroup{}",
            c.subgroup_order(),
            c.len(),
            if c.len() == 1 { "" } else { "s" }
        );
    }
    out
}

fn edges_text(labels: &[String], edges: &[(usize, usize)]) -> String {
    let parts: Vec<String> = edges.iter().map(|&(a, b)| format!("{} -> {}", labels[a], labels[b])).collect();
    format!("hasse: {}\n", parts.join(", "))
}

fn symbolic_model(g: &FiniteGroup) -> Result<SymbolicLattice> {
    Ok(match g.family() {
        Family::Dihedral(n) => autcl_dihedral_model(*n)?,
        Family::Dicyclic(m) => autcl_dicyclic_model(*m)?,
        f => bail!("no closed form for {f}"),
    })
}

/// Index bound separating the cyclic part from the rest, for families with
/// a model.
fn rotation_size(g: &FiniteGroup) -> usize {
    match g.family() {
        Family::Dihedral(n) => *n as usize,
        Family::Dicyclic(m) => 2 * *m as usize,
        _ => g.order(),
    }
}

#[derive(Serialize)]
struct InfoDoc {
    family: String,
    order: usize,
    exponent: usize,
    abelian: bool,
    center: usize,
    generators: Vec<GeneratorInfo>,
    axioms: AxiomsDoc,
}

#[derive(Serialize)]
struct GeneratorInfo {
    name: String,
    index: usize,
    order: usize,
}

#[derive(Serialize)]
struct AxiomsDoc {
    passed: bool,
    exhaustive: bool,
    triples_checked: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    violation: Option<String>,
}

fn cmd_info(g: &FiniteGroup, json: bool) -> String {
    let r = verify_group_axioms(g);
    let doc = InfoDoc {
        family: g.family().to_string(),
        order: g.order(),
        exponent: g.exponent(),
        abelian: g.is_abelian(),
        center: g.center().len(),
        generators: g
            .generators()
            .iter()
            .map(|(name, i)| GeneratorInfo {
                name: name.clone(),
                index: *i,
                order: g.element_orders()[*i],
            })
            .collect(),
        axioms: AxiomsDoc {
            passed: r.passed(),
            exhaustive: r.exhaustive,
            triples_checked: r.triples_checked,
            violation: r.violation.as_ref().map(ToString::to_string),
        },
    };
    if json {
        return to_pretty(&doc);
    }
    let gens: Vec<String> = doc.generators.iter().map(|x| format!("{} (order {})", x.name, x.order)).collect();
    format!(
        "group:      {}\norder:      {}\nexponent:   {}\nabelian:    {}\ncenter:     {} elements\ngenerators: {}\naxioms:     {} ({} triples, {})\n",
        doc.family,
        doc.order,
        doc.exponent,
        doc.abelian,
        doc.center,
        gens.join(", "),
        if r.passed() { "ok".to_string() } else { format!("FAILED: {}", doc.axioms.violation.unwrap_or_default()) },
        r.triples_checked,
        if r.exhaustive { "exhaustive" } else { "sampled" },
    )
}

fn closed_form_subgroups(g: &FiniteGroup) -> Result<autcl_core::SubgroupLattice> {
    Ok(match g.family() {
        Family::Dihedral(_) => dihedral_subgroups_closed_form(g)?,
        Family::Dicyclic(_) => dicyclic_subgroups_closed_form(g)?,
        f => bail!("no closed-form subgroup listing for {f}"),
    })
}

fn cmd_subgroups(g: &FiniteGroup, mode: Mode, limits: &Limits, json: bool) -> Result<(String, bool)> {
    let l = if mode.closed_form {
        closed_form_subgroups(g)?
    } else if mode.brute_force || mode.both {
        all_subgroups(g, limits)?
    } else {
        subgroups_auto(g, limits)?
    };
    let agree = if mode.both {
        let cf = closed_form_subgroups(g)?;
        Some(cf.subgroups() == l.subgroups())
    } else {
        None
    };
    let doc = SubgroupLatticeDoc::new(g, &l);
    if json {
        #[derive(Serialize)]
        struct Out<'a> {
            #[serde(flatten)]
            lattice: &'a SubgroupLatticeDoc,
            #[serde(skip_serializing_if = "Option::is_none")]
            listings_agree: Option<bool>,
        }
        return Ok((to_pretty(&Out { lattice: &doc, listings_agree: agree }), agree != Some(false)));
    }
    let mut out = format!("L({}): {} subgroups\n", doc.group, doc.count);
    for (i, s) in doc.subgroups.iter().enumerate() {
        let gens = if s.generators.is_empty() { "e".to_string() } else { s.generators.join(", ") };
        let _ = write!(out, "  {i:>3}  order {:<4} <{gens}>", s.order);
        if let Some(t) = &s.listing {
            let _ = write!(out, "  ({t})");
        }
        out.push('\n');
    }
    if let Some(a) = agree {
        let _ = writeln!(out, "closed-form and brute-force listings {}", if a { "agree" } else { "DIFFER" });
    }
    Ok((out, agree != Some(false)))
}

fn closed_form_aut(g: &FiniteGroup) -> Result<autcl_core::AutomorphismGroup> {
    Ok(match g.family() {
        Family::Dihedral(_) => aut_dihedral_closed_form(g)?,
        Family::Dicyclic(_) => aut_dicyclic_closed_form(g)?,
        f => bail!("no automorphism formula for {f}"),
    })
}

fn cmd_aut(g: &FiniteGroup, mode: Mode, permutations: bool, limits: &Limits, json: bool) -> Result<(String, bool)> {
    let a = if mode.closed_form {
        closed_form_aut(g)?
    } else if mode.brute_force || mode.both {
        automorphisms_bruteforce(g, limits)?
    } else {
        automorphisms_auto(g, limits)?
    };
    let agree = if mode.both { Some(closed_form_aut(g)? == a) } else { None };
    let doc = AutomorphismsDoc::new(g, &a, permutations);
    if json {
        #[derive(Serialize)]
        struct Out<'a> {
            #[serde(flatten)]
            aut: &'a AutomorphismsDoc,
            #[serde(skip_serializing_if = "Option::is_none")]
            formula_agrees: Option<bool>,
        }
        return Ok((to_pretty(&Out { aut: &doc, formula_agrees: agree }), agree != Some(false)));
    }
    let mut out = format!("Aut({}): {} automorphisms\n", doc.group, doc.count);
    for images in &doc.generator_images {
        let parts: Vec<String> = doc
            .generator_names
            .iter()
            .zip(images)
            .map(|(n, i)| format!("{n} -> {i}"))
            .collect();
        let _ = writeln!(out, "  {}", parts.join(", "));
    }
    if let Some(x) = agree {
        let _ = writeln!(out, "formula and search {}", if x { "agree" } else { "DIFFER" });
    }
    Ok((out, agree != Some(false)))
}

fn cmd_autcl(g: &FiniteGroup, mode: Mode, limits: &Limits, json: bool) -> Result<(String, bool)> {
    if mode.closed_form {
        let m = symbolic_model(g)?;
        if json {
            return Ok((to_pretty(&SymbolicLatticeDoc::new(&m)), true));
        }
        let mut out = format!("AutCl({}) closed form: {} classes\n", g.family(), m.len());
        for (i, l) in m.labels().iter().enumerate() {
            let _ = writeln!(out, "  {i:>3}  {l}  order {}", m.subgroup_order(i));
        }
        out.push_str(&edges_text(m.labels(), &m.poset().covers()));
        return Ok((out, true));
    }
    let strategy = if mode.brute_force || mode.both { Strategy::BruteForce } else { Strategy::Auto };
    let p = build_autcl_with(g, strategy, limits)?;
    let agree = if mode.both {
        let m = symbolic_model(g)?;
        let rot = rotation_size(g);
        let colours = p.colours_by(|e| e >= rot);
        Some(poset_isomorphic_coloured(m.poset(), p.poset(), &m.colours(), &colours).is_some())
    } else {
        None
    };
    if json {
        #[derive(Serialize)]
        struct Out {
            #[serde(flatten)]
            poset: ClassPosetDoc,
            #[serde(skip_serializing_if = "Option::is_none")]
            models_agree: Option<bool>,
        }
        let doc = Out {
            poset: ClassPosetDoc::new(g, &p),
            models_agree: agree,
        };
        return Ok((to_pretty(&doc), agree != Some(false)));
    }
    let mut out = format!(
        "AutCl({}): {} classes from {} subgroups, |Aut| = {}\n",
        g.family(),
        p.len(),
        p.subgroups().len(),
        p.automorphism_count()
    );
    out.push_str(&class_table(&p));
    out.push_str(&edges_text(p.labels(), p.hasse()));
    match p.lattice() {
        Ok(_) => out.push_str("lattice: yes\n"),
        Err(e) => {
            let _ = writeln!(out, "lattice: no ({} and {} have no {})", p.labels()[e.a], p.labels()[e.b], e.missing.as_str());
        }
    }
    if let Some(a) = agree {
        let _ = writeln!(out, "closed-form model and computed poset {}", if a { "agree" } else { "DISAGREE" });
    }
    Ok((out, agree != Some(false)))
}

#[derive(Serialize)]
struct CheckDoc {
    group: String,
    target: &'static str,
    property: String,
    holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<String>>,
}

fn cmd_check(g: &FiniteGroup, property: Property, on_subgroups: bool, limits: &Limits, json: bool) -> Result<(String, bool)> {
    let (labels, poset, lattice): (Vec<String>, autcl_core::Poset, std::result::Result<Lattice, String>) = if on_subgroups {
        let l = subgroups_auto(g, limits)?;
        let labels = (0..l.len())
            .map(|i| autcl_core::autcl::subgroup_label(g, &l, i).replacen('[', "", 1).replacen(']', "", 1))
            .collect();
        (labels, l.poset(), Ok(l.to_lattice(g)?))
    } else {
        let p = build_autcl_with(g, Strategy::Auto, limits)?;
        let lattice = p
            .lattice()
            .cloned()
            .map_err(|e| format!("{} and {} have no {}", p.labels()[e.a], p.labels()[e.b], e.missing.as_str()));
        (p.labels().to_vec(), p.poset().clone(), lattice)
    };
    let name = |i: usize| labels[i].clone();
    let (holds, witness): (bool, Option<Vec<String>>) = match property {
        Property::Chain => {
            let holds = poset.is_chain();
            let w = (!holds).then(|| {
                let n = poset.len();
                let (a, b) = (0..n)
                    .flat_map(|a| (0..n).map(move |b| (a, b)))
                    .find(|&(a, b)| !poset.comparable(a, b))
                    .expect("non-chain has an incomparable pair");
                vec![name(a), name(b)]
            });
            (holds, w)
        }
        Property::Lattice => match &lattice {
            Ok(_) => (true, None),
            Err(msg) => (false, Some(vec![msg.clone()])),
        },
        _ => {
            let l = lattice.as_ref().map_err(|msg| anyhow!("'{property:?}' needs a lattice, but {msg}"))?;
            match property {
                Property::Distributive => match l.is_distributive() {
                    Ok(()) => (true, None),
                    Err(t) => (false, Some(vec![name(t.x), name(t.y), name(t.z)])),
                },
                Property::Modular => match l.is_modular() {
                    Ok(()) => (true, None),
                    Err(t) => (false, Some(vec![name(t.x), name(t.y), name(t.z)])),
                },
                Property::Complemented => match l.is_complemented() {
                    Ok(()) => (true, None),
                    Err(a) => (false, Some(vec![name(a)])),
                },
                Property::N5 => match l.find_n5() {
                    None => (true, None),
                    Some(w) => (false, Some(w.elements().iter().map(|&i| name(i)).collect())),
                },
                Property::M3 => match l.find_m3() {
                    None => (true, None),
                    Some(w) => (false, Some(w.elements().iter().map(|&i| name(i)).collect())),
                },
                Property::Chain | Property::Lattice => unreachable!(),
            }
        }
    };
    let doc = CheckDoc {
        group: g.family().to_string(),
        target: if on_subgroups { "subgroup-lattice" } else { "autcl" },
        property: format!("{property:?}").to_lowercase(),
        holds,
        witness,
    };
    if json {
        return Ok((to_pretty(&doc), holds));
    }
    let mut out = format!("{} {} of {}: {}\n", doc.target, doc.property, doc.group, holds);
    if let Some(w) = &doc.witness {
        let _ = writeln!(out, "witness: {}", w.join(", "));
    }
    Ok((out, holds))
}

fn cmd_export(g: &FiniteGroup, target: Target, limits: &Limits, json: bool) -> Result<String> {
    Ok(match target {
        Target::Group => to_pretty(&GroupDoc::from_group(g)),
        Target::Lattice => {
            let l = subgroups_auto(g, limits)?;
            if json {
                to_pretty(&SubgroupLatticeDoc::new(g, &l))
            } else {
                let labels: Vec<String> = (0..l.len())
                    .map(|i| {
                        let s = autcl_core::autcl::subgroup_label(g, &l, i);
                        s[1..s.len() - 1].to_string()
                    })
                    .collect();
                hasse_dot(&labels, &l.poset().covers())
            }
        }
        Target::Autcl => {
            let p = build_autcl_with(g, Strategy::Auto, limits)?;
            if json {
                to_pretty(&ClassPosetDoc::new(g, &p))
            } else {
                hasse_dot(p.labels(), p.hasse())
            }
        }
    })
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<Verdict> {
    let limits = Limits::with_max_order(cli.max_order);
    let (text, ok) = match &cli.command {
        Command::Info { group } => (cmd_info(&load_group(group)?, cli.json), true),
        Command::Subgroups { group, mode } => cmd_subgroups(&load_group(group)?, *mode, &limits, cli.json)?,
        Command::Aut { group, mode, permutations } => {
            cmd_aut(&load_group(group)?, *mode, *permutations, &limits, cli.json)?
        }
        Command::Autcl { group, mode } => cmd_autcl(&load_group(group)?, *mode, &limits, cli.json)?,
        Command::Check { group, property, subgroup_lattice } => {
            cmd_check(&load_group(group)?, *property, *subgroup_lattice, &limits, cli.json)?
        }
        Command::Export { group, target } => (cmd_export(&load_group(group)?, *target, &limits, cli.json)?, true),
        Command::Verify { scope } => {
            let scope = parse_scope(scope)?;
            let report = verify::run(&scope, &limits);
            let json = to_pretty(&report);
            if let Some(path) = &cli.out {
                std::fs::write(path, &json).with_context(|| format!("writing {}", path.display()))?;
            }
            print!("{}", if cli.json { json } else { report.table() });
            return Ok(Verdict(report.all_passed()));
        }
    };
    emit(&cli.out, &text)?;
    Ok(Verdict(ok))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Verdict(true)) => ExitCode::SUCCESS,
        Ok(Verdict(false)) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
