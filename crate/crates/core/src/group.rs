//! Finite groups as explicit multiplication tables.
//!
//! Elements are the indices `0..order`. Every named constructor fixes its own
//! enumeration of elements:
//!
//! * cyclic `Z_n`: index `i` is `g^i`;
//! * dihedral `D_n` (order `2n`): `r^i` at `i`, `r^i s` at `n + i`;
//! * dicyclic `Q_4m` (order `4m`): `x^i` at `i`, `x^i y` at `2m + i`;
//! * elementary abelian `(Z_p)^k`: coordinate vectors in base `p`, most
//!   significant coordinate first;
//! * `Heis(Z_p)`: upper unitriangular matrices `[[1,a,c],[0,1,b],[0,0,1]]`
//!   stored as `(a, c, b)` in row-major entry order, index `a p^2 + c p + b`;
//! * direct products: `(g, h)` at `g * |H| + h`.

use core::fmt;

use alloc::boxed::Box;
use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{is_prime, lcm};
use crate::bitset::ElementSet;
use crate::{Error, Result};

/// Hard ceiling for any table we are willing to materialize.
pub const CONSTRUCTION_CAP: usize = 4096;
/// Default cap for the enumeration algorithms.
pub const DEFAULT_MAX_ORDER: usize = 512;
/// Associativity is checked on every triple up to this order, sampled above.
pub const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 256;
const ASSOCIATIVITY_SAMPLES: u64 = 200_000;

/// Size limits for the enumeration algorithms (subgroups, automorphisms,
/// class posets).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_order: DEFAULT_MAX_ORDER,
        }
    }
}

impl Limits {
    pub fn with_max_order(max_order: usize) -> Self {
        Self { max_order }
    }

    pub fn check(&self, order: usize) -> Result<()> {
        if order > self.max_order {
            return Err(Error::OrderCapExceeded {
                order,
                cap: self.max_order,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Family {
    Cyclic(u64),
    Dihedral(u64),
    Dicyclic(u64),
    ElementaryAbelian { p: u64, k: u32 },
    Heisenberg(u64),
    Product(Box<Family>, Box<Family>),
    Adhoc,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cyclic(n) => write!(f, "Z_{n}"),
            Family::Dihedral(n) => write!(f, "D_{n}"),
            Family::Dicyclic(m) => write!(f, "Q_{}", 4 * m),
            Family::ElementaryAbelian { p, k } => write!(f, "(Z_{p})^{k}"),
            Family::Heisenberg(p) => write!(f, "Heis(Z_{p})"),
            Family::Product(a, b) => write!(f, "{a} x {b}"),
            Family::Adhoc => f.write_str("adhoc"),
        }
    }
}

/// Fingerprint of a multiplication table, used to tie subgroups and
/// automorphisms to the group they were computed in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupId(pub u64);

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    TableShape { expected: usize, got: usize },
    EntryOutOfRange { i: usize, j: usize, value: usize },
    NoIdentity,
    Identity { i: usize },
    Inverse { i: usize },
    Associativity { i: usize, j: usize, k: usize },
    GeneratorOutOfRange { index: usize },
    NotGenerated { closure: usize, order: usize },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::TableShape { expected, got } => {
                write!(f, "table has {got} entries, expected {expected}")
            }
            Self::EntryOutOfRange { i, j, value } => {
                write!(f, "table[{i}][{j}] = {value} is out of range")
            }
            Self::NoIdentity => f.write_str("no two-sided identity"),
            Self::Identity { i } => write!(f, "identity fails at element {i}"),
            Self::Inverse { i } => write!(f, "element {i} has no inverse"),
            Self::Associativity { i, j, k } => {
                write!(f, "(g{i} g{j}) g{k} != g{i} (g{j} g{k})")
            }
            Self::GeneratorOutOfRange { index } => {
                write!(f, "generator index {index} out of range")
            }
            Self::NotGenerated { closure, order } => {
                write!(f, "generators span {closure} of {order} elements")
            }
        }
    }
}

/// Outcome of [`verify_group_axioms`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub order: usize,
    pub triples_checked: u64,
    pub exhaustive: bool,
    pub violation: Option<AxiomViolation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// A finite group given by its full multiplication table. Immutable once
/// built.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    orders: Vec<usize>,
    generators: Vec<(String, usize)>,
    names: Vec<String>,
    family: Family,
    id: GroupId,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table && self.identity == other.identity
    }
}

impl Eq for FiniteGroup {}

fn check_construction(order: u64) -> Result<usize> {
    if order == 0 {
        return Err(Error::InvalidOrder(0));
    }
    if order > CONSTRUCTION_CAP as u64 {
        return Err(Error::OrderCapExceeded {
            order: order.min(usize::MAX as u64) as usize,
            cap: CONSTRUCTION_CAP,
        });
    }
    Ok(order as usize)
}

fn power_name(base: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => base.to_string(),
        _ => format!("{base}^{k}"),
    }
}

fn fingerprint(order: usize, table: &[usize]) -> GroupId {
    // FNV-1a
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for v in core::iter::once(order).chain(table.iter().copied()) {
        for b in (v as u64).to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
    }
    GroupId(h)
}

impl FiniteGroup {
    /// Assembles a group from a table known to satisfy the axioms.
    fn assemble(
        order: usize,
        table: Vec<usize>,
        generators: Vec<(String, usize)>,
        names: Vec<String>,
        family: Family,
    ) -> Self {
        let identity = (0..order)
            .find(|&e| (0..order).all(|j| table[e * order + j] == j))
            .expect("constructor tables have an identity");
        let inverse = (0..order)
            .map(|i| {
                (0..order)
                    .find(|&j| table[i * order + j] == identity)
                    .expect("constructor tables have inverses")
            })
            .collect();
        Self::with_parts(order, table, identity, inverse, generators, names, family)
    }

    fn with_parts(
        order: usize,
        table: Vec<usize>,
        identity: usize,
        inverse: Vec<usize>,
        generators: Vec<(String, usize)>,
        names: Vec<String>,
        family: Family,
    ) -> Self {
        let id = fingerprint(order, &table);
        let mut g = Self {
            order,
            table,
            identity,
            inverse,
            orders: Vec::new(),
            generators,
            names,
            family,
            id,
        };
        g.orders = (0..order).map(|i| g.compute_order(i)).collect();
        g
    }

    fn compute_order(&self, g: usize) -> usize {
        let mut k = 1;
        let mut acc = g;
        while acc != self.identity {
            acc = self.mul(acc, g);
            k += 1;
            if k > self.order {
                // Only reachable for a corrupted table.
                return 0;
            }
        }
        k
    }

    /// The cyclic group `Z_n` generated by `g`.
    pub fn cyclic(n: u64) -> Result<Self> {
        let order = check_construction(n)?;
        let mut table = vec![0; order * order];
        for i in 0..order {
            for j in 0..order {
                table[i * order + j] = (i + j) % order;
            }
        }
        let names = (0..order)
            .map(|i| if i == 0 { "e".into() } else { power_name("g", i) })
            .collect();
        Ok(Self::assemble(
            order,
            table,
            vec![("g".into(), 1 % order)],
            names,
            Family::Cyclic(n),
        ))
    }

    /// The dihedral group `D_n = <r, s | r^n, s^2, s r s^-1 = r^-1>` of
    /// order `2n`.
    pub fn dihedral(n: u64) -> Result<Self> {
        let order = check_construction(2 * n)?;
        let n = n as usize;
        let split = |x: usize| (x % n, x >= n);
        let mut table = vec![0; order * order];
        for x in 0..order {
            let (a, xs) = split(x);
            for y in 0..order {
                let (b, ys) = split(y);
                let (rot, refl) = match (xs, ys) {
                    (false, false) => (a + b, false),
                    (false, true) => (a + b, true),
                    (true, false) => (a + n - b, true),
                    (true, true) => (a + n - b, false),
                };
                table[x * order + y] = rot % n + if refl { n } else { 0 };
            }
        }
        let names = (0..order)
            .map(|x| {
                let (a, refl) = split(x);
                match (a, refl) {
                    (0, false) => "e".into(),
                    (_, false) => power_name("r", a),
                    (0, true) => "s".into(),
                    (_, true) => format!("{} s", power_name("r", a)),
                }
            })
            .collect();
        Ok(Self::assemble(
            order,
            table,
            vec![("r".into(), 1 % n), ("s".into(), n)],
            names,
            Family::Dihedral(n as u64),
        ))
    }

    /// The dicyclic group
    /// `Q_4m = <x, y | x^2m = e = y^4, y x y^-1 = x^-1, x^m = y^2>`.
    pub fn dicyclic(m: u64) -> Result<Self> {
        let order = check_construction(4 * m)?;
        let m = m as usize;
        let n = 2 * m;
        let split = |v: usize| (v % n, v >= n);
        let mut table = vec![0; order * order];
        for u in 0..order {
            let (a, uy) = split(u);
            for v in 0..order {
                let (b, vy) = split(v);
                let (xp, y) = match (uy, vy) {
                    (false, false) => (a + b, false),
                    (false, true) => (a + b, true),
                    (true, false) => (a + n - b, true),
                    (true, true) => (a + n - b + m, false),
                };
                table[u * order + v] = xp % n + if y { n } else { 0 };
            }
        }
        let names = (0..order)
            .map(|v| {
                let (a, y) = split(v);
                match (a, y) {
                    (0, false) => "e".into(),
                    (_, false) => power_name("x", a),
                    (0, true) => "y".into(),
                    (_, true) => format!("{} y", power_name("x", a)),
                }
            })
            .collect();
        Ok(Self::assemble(
            order,
            table,
            vec![("x".into(), 1 % n), ("y".into(), n)],
            names,
            Family::Dicyclic(m as u64),
        ))
    }

    /// `(Z_p)^k`.
    pub fn elementary_abelian(p: u64, k: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::InvalidOrder(1));
        }
        let order = check_construction(p.checked_pow(k).unwrap_or(u64::MAX))?;
        let (p, k) = (p as usize, k as usize);
        let digits = |mut v: usize| {
            let mut d = vec![0; k];
            for slot in d.iter_mut().rev() {
                *slot = v % p;
                v /= p;
            }
            d
        };
        let encode = |d: &[usize]| d.iter().fold(0, |acc, &x| acc * p + x);
        let mut table = vec![0; order * order];
        for u in 0..order {
            let du = digits(u);
            for v in 0..order {
                let dv = digits(v);
                let sum: Vec<usize> = du.iter().zip(&dv).map(|(a, b)| (a + b) % p).collect();
                table[u * order + v] = encode(&sum);
            }
        }
        let names = (0..order)
            .map(|v| {
                if v == 0 {
                    "e".into()
                } else {
                    let parts: Vec<String> = digits(v).iter().map(|d| d.to_string()).collect();
                    format!("({})", parts.join(","))
                }
            })
            .collect();
        let generators = (0..k)
            .map(|i| (format!("a{}", i + 1), p.pow((k - 1 - i) as u32)))
            .collect();
        Ok(Self::assemble(
            order,
            table,
            generators,
            names,
            Family::ElementaryAbelian {
                p: p as u64,
                k: k as u32,
            },
        ))
    }

    /// `Heis(Z_p)` for an odd prime `p`, with generators `x`, `y` and their
    /// commutator `z = x y x^-1 y^-1`.
    pub fn heisenberg(p: u64) -> Result<Self> {
        if p == 2 || !is_prime(p) {
            return Err(Error::NotOddPrime {
                what: "Heisenberg group",
                got: p,
            });
        }
        let order = check_construction(p * p * p)?;
        let p = p as usize;
        let decode = |v: usize| (v / (p * p), v / p % p, v % p);
        let encode = |a: usize, c: usize, b: usize| (a % p) * p * p + (c % p) * p + b % p;
        let mut table = vec![0; order * order];
        for u in 0..order {
            let (a1, c1, b1) = decode(u);
            for v in 0..order {
                let (a2, c2, b2) = decode(v);
                table[u * order + v] = encode(a1 + a2, c1 + c2 + a1 * b2, b1 + b2);
            }
        }
        let names = (0..order)
            .map(|v| {
                let (a, c, b) = decode(v);
                if v == 0 {
                    "e".into()
                } else {
                    format!("[{a},{c},{b}]")
                }
            })
            .collect();
        let x = encode(1, 0, 0);
        let y = encode(0, 0, 1);
        let mut g = Self::assemble(order, table, Vec::new(), names, Family::Heisenberg(p as u64));
        let z = g.mul(g.mul(x, y), g.mul(g.inv(x), g.inv(y)));
        g.generators = vec![("x".into(), x), ("y".into(), y), ("z".into(), z)];
        Ok(g)
    }

    /// Direct product with componentwise multiplication.
    pub fn direct_product(a: &Self, b: &Self) -> Result<Self> {
        let order = check_construction((a.order as u64) * (b.order as u64))?;
        let nb = b.order;
        let mut table = vec![0; order * order];
        for u in 0..order {
            let (ua, ub) = (u / nb, u % nb);
            for v in 0..order {
                let (va, vb) = (v / nb, v % nb);
                table[u * order + v] = a.mul(ua, va) * nb + b.mul(ub, vb);
            }
        }
        let names = (0..order)
            .map(|u| {
                let (ua, ub) = (u / nb, u % nb);
                if ua == a.identity && ub == b.identity {
                    "e".into()
                } else {
                    format!("({},{})", a.names[ua], b.names[ub])
                }
            })
            .collect();
        let mut generators: Vec<(String, usize)> = a
            .generators
            .iter()
            .map(|(name, g)| (format!("({name},e)"), g * nb + b.identity))
            .collect();
        generators.extend(
            b.generators
                .iter()
                .map(|(name, h)| (format!("(e,{name})"), a.identity * nb + h)),
        );
        Ok(Self::assemble(
            order,
            table,
            generators,
            names,
            Family::Product(Box::new(a.family.clone()), Box::new(b.family.clone())),
        ))
    }

    /// Builds a group from a raw row-major table, deriving identity and
    /// inverses and rejecting anything that fails [`verify_group_axioms`].
    pub fn from_table(
        order: usize,
        table: Vec<usize>,
        generators: Vec<(String, usize)>,
        family: Family,
    ) -> Result<Self> {
        check_construction(order as u64)?;
        if table.len() != order * order {
            return Err(Error::Axiom(AxiomViolation::TableShape {
                expected: order * order,
                got: table.len(),
            }));
        }
        if let Some(pos) = table.iter().position(|&v| v >= order) {
            return Err(Error::Axiom(AxiomViolation::EntryOutOfRange {
                i: pos / order,
                j: pos % order,
                value: table[pos],
            }));
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|j| table[e * order + j] == j && table[j * order + e] == j))
            .ok_or(Error::Axiom(AxiomViolation::NoIdentity))?;
        let mut inverse = Vec::with_capacity(order);
        for i in 0..order {
            let inv = (0..order)
                .find(|&j| table[i * order + j] == identity)
                .ok_or(Error::Axiom(AxiomViolation::Inverse { i }))?;
            inverse.push(inv);
        }
        let names = (0..order)
            .map(|i| if i == identity { "e".into() } else { format!("g{i}") })
            .collect();
        let g = Self::with_parts(order, table, identity, inverse, generators, names, family);
        match verify_group_axioms(&g).violation {
            None => Ok(g),
            Some(v) => Err(Error::Axiom(v)),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn id(&self) -> GroupId {
        self.id
    }

    pub fn generators(&self) -> &[(String, usize)] {
        &self.generators
    }

    /// Looks up a named generator.
    pub fn generator(&self, name: &str) -> Option<usize> {
        self.generators
            .iter()
            .find(|(n, _)| n == name)
            .map(|&(_, g)| g)
    }

    pub fn element_name(&self, g: usize) -> &str {
        &self.names[g]
    }

    /// Row-major table, `table[i * order + j] = g_i g_j`.
    pub fn table(&self) -> &[usize] {
        &self.table
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn pow(&self, g: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, g))
    }

    pub fn check_element(&self, g: usize) -> Result<()> {
        if g >= self.order {
            return Err(Error::ElementOutOfRange {
                index: g,
                order: self.order,
            });
        }
        Ok(())
    }

    /// Least `k >= 1` with `g^k = e`.
    pub fn element_order(&self, g: usize) -> Result<usize> {
        self.check_element(g)?;
        Ok(self.orders[g])
    }

    pub fn element_orders(&self) -> &[usize] {
        &self.orders
    }

    /// Least `n` with `g^n = e` for every element.
    pub fn exponent(&self) -> usize {
        self.orders
            .iter()
            .fold(1u64, |acc, &o| lcm(acc, o as u64)) as usize
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|i| (i + 1..self.order).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    pub fn center(&self) -> ElementSet {
        ElementSet::from_indices(
            self.order,
            (0..self.order).filter(|&z| (0..self.order).all(|g| self.mul(z, g) == self.mul(g, z))),
        )
    }

    /// Subgroup generated by `seed`, as a member set.
    pub fn span(&self, seed: &[usize]) -> ElementSet {
        let mut set = ElementSet::new(self.order);
        set.insert(self.identity);
        let mut queue = VecDeque::from([self.identity]);
        while let Some(g) = queue.pop_front() {
            for &s in seed {
                let h = self.mul(g, s);
                if set.insert(h) {
                    queue.push_back(h);
                }
            }
        }
        set
    }

    /// A small generating set of the subgroup `within`, chosen greedily: at
    /// each step the element (lowest index on ties) whose addition gives the
    /// largest span.
    pub fn greedy_generators(&self, within: &ElementSet) -> Vec<usize> {
        let target = within.len();
        let mut gens = Vec::new();
        let mut current = self.span(&gens);
        while current.len() < target {
            let mut best: Option<(usize, ElementSet)> = None;
            for h in within.iter().filter(|&h| !current.contains(h)) {
                gens.push(h);
                let s = self.span(&gens);
                gens.pop();
                if best.as_ref().is_none_or(|(_, b)| s.len() > b.len()) {
                    let full = s.len() == target;
                    best = Some((h, s));
                    if full {
                        break;
                    }
                }
            }
            let (h, s) = best.expect("within is a subgroup strictly larger than current");
            gens.push(h);
            current = s;
        }
        gens
    }
}

/// Checks identity, inverses, associativity and that the generators span
/// the group. Associativity is exhaustive up to
/// [`EXHAUSTIVE_ASSOCIATIVITY_LIMIT`] and sampled on a fixed pseudo-random
/// sequence of triples above it.
pub fn verify_group_axioms(g: &FiniteGroup) -> AxiomReport {
    let n = g.order;
    let mut report = AxiomReport {
        order: n,
        triples_checked: 0,
        exhaustive: n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT,
        violation: None,
    };
    let fail = |mut r: AxiomReport, v| {
        r.violation = Some(v);
        r
    };
    if g.table.len() != n * n {
        return fail(
            report,
            AxiomViolation::TableShape {
                expected: n * n,
                got: g.table.len(),
            },
        );
    }
    if let Some(pos) = g.table.iter().position(|&v| v >= n) {
        return fail(
            report,
            AxiomViolation::EntryOutOfRange {
                i: pos / n,
                j: pos % n,
                value: g.table[pos],
            },
        );
    }
    let e = g.identity;
    if let Some(i) = (0..n).find(|&i| g.mul(e, i) != i || g.mul(i, e) != i) {
        return fail(report, AxiomViolation::Identity { i });
    }
    if let Some(i) = (0..n).find(|&i| g.mul(i, g.inverse[i]) != e || g.mul(g.inverse[i], i) != e) {
        return fail(report, AxiomViolation::Inverse { i });
    }
    let assoc = |i: usize, j: usize, k: usize| g.mul(g.mul(i, j), k) == g.mul(i, g.mul(j, k));
    if report.exhaustive {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    report.triples_checked += 1;
                    if !assoc(i, j, k) {
                        return fail(report, AxiomViolation::Associativity { i, j, k });
                    }
                }
            }
        }
    } else {
        let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
        let mut next = || {
            // xorshift64*
            state ^= state >> 12;
            state ^= state << 25;
            state ^= state >> 27;
            (state.wrapping_mul(0x2545_f491_4f6c_dd1d) >> 11) as usize % n
        };
        for _ in 0..ASSOCIATIVITY_SAMPLES {
            let (i, j, k) = (next(), next(), next());
            report.triples_checked += 1;
            if !assoc(i, j, k) {
                return fail(report, AxiomViolation::Associativity { i, j, k });
            }
        }
    }
    if let Some(&(_, index)) = g.generators.iter().find(|(_, x)| *x >= n) {
        return fail(report, AxiomViolation::GeneratorOutOfRange { index });
    }
    let gens: Vec<usize> = g.generators.iter().map(|&(_, x)| x).collect();
    let closure = g.span(&gens).len();
    if closure != n {
        return fail(report, AxiomViolation::NotGenerated { closure, order: n });
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::gcd;
    use proptest::prelude::*;

    fn order_histogram(g: &FiniteGroup) -> alloc::collections::BTreeMap<usize, usize> {
        let mut h = alloc::collections::BTreeMap::new();
        for &o in g.element_orders() {
            *h.entry(o).or_insert(0) += 1;
        }
        h
    }

    #[test]
    fn cyclic_orders() {
        assert!(matches!(FiniteGroup::cyclic(0), Err(Error::InvalidOrder(0))));
        let z1 = FiniteGroup::cyclic(1).unwrap();
        assert_eq!(z1.order(), 1);
        assert_eq!(z1.identity(), 0);
        let z6 = FiniteGroup::cyclic(6).unwrap();
        let g = z6.generator("g").unwrap();
        assert_eq!(z6.element_order(g).unwrap(), 6);
        assert_eq!(z6.element_order(z6.pow(g, 2)).unwrap(), 3);
        assert_eq!(z6.element_order(z6.pow(g, 3)).unwrap(), 2);
        assert_eq!(z6.exponent(), 6);
    }

    #[test]
    fn dihedral_small_cases() {
        let d1 = FiniteGroup::dihedral(1).unwrap();
        assert_eq!(d1.order(), 2);
        assert!(d1.is_abelian());
        let d2 = FiniteGroup::dihedral(2).unwrap();
        assert_eq!(d2.order(), 4);
        assert!((0..4).filter(|&g| g != d2.identity()).all(|g| d2.element_orders()[g] == 2));
        let d5 = FiniteGroup::dihedral(5).unwrap();
        let h = order_histogram(&d5);
        assert_eq!(h[&2], 5);
        assert_eq!(h[&5], 4);
    }

    #[test]
    fn dihedral_relation() {
        for n in 1..12 {
            let d = FiniteGroup::dihedral(n).unwrap();
            let (r, s) = (d.generator("r").unwrap(), d.generator("s").unwrap());
            assert_eq!(d.mul(d.mul(s, r), d.inv(s)), d.inv(r));
            if n >= 2 {
                assert_eq!(d.element_order(r).unwrap(), n as usize);
            }
            assert_eq!(d.element_order(s).unwrap(), 2);
            if n >= 3 {
                let reflections = (0..d.order())
                    .filter(|&g| d.mul(g, g) == d.identity() && g >= n as usize)
                    .count();
                assert_eq!(reflections, n as usize);
            }
        }
        let d6 = FiniteGroup::dihedral(6).unwrap();
        assert_eq!(d6.element_order(d6.generator("r").unwrap()).unwrap(), 6);
        assert_eq!(d6.element_name(8), "r^2 s");
    }

    #[test]
    fn dicyclic_relations() {
        let q4 = FiniteGroup::dicyclic(1).unwrap();
        assert_eq!(q4.order(), 4);
        assert!(q4.element_orders().contains(&4));
        let q8 = FiniteGroup::dicyclic(2).unwrap();
        assert_eq!(q8.element_orders().iter().filter(|&&o| o == 2).count(), 1);
        assert!(!q8.is_abelian());
        let q12 = FiniteGroup::dicyclic(3).unwrap();
        let (x, y) = (q12.generator("x").unwrap(), q12.generator("y").unwrap());
        assert_eq!(q12.element_order(x).unwrap(), 6);
        assert_eq!(q12.pow(x, 3), q12.pow(y, 2));
        assert_eq!(q12.element_order(q12.pow(x, 4)).unwrap(), 3);
        for m in 1..10u64 {
            let q = FiniteGroup::dicyclic(m).unwrap();
            let (x, y) = (q.generator("x").unwrap(), q.generator("y").unwrap());
            assert_eq!(q.pow(x, 2 * m as usize), q.identity());
            assert_eq!(q.element_order(y).unwrap(), 4);
            assert_eq!(q.mul(q.mul(y, x), q.inv(y)), q.inv(x));
            assert_eq!(q.pow(x, m as usize), q.pow(y, 2));
            if m >= 2 {
                assert_eq!(q.element_order(x).unwrap(), 2 * m as usize);
                let involutions: Vec<usize> =
                    (0..q.order()).filter(|&g| q.element_orders()[g] == 2).collect();
                assert_eq!(involutions, [q.pow(x, m as usize)]);
            }
        }
    }

    #[test]
    fn elementary_abelian_and_heisenberg() {
        assert!(matches!(FiniteGroup::elementary_abelian(4, 2), Err(Error::NotPrime(4))));
        let z2 = FiniteGroup::elementary_abelian(2, 1).unwrap();
        assert_eq!(z2.order(), 2);
        let k4 = FiniteGroup::elementary_abelian(2, 2).unwrap();
        assert_eq!(k4.exponent(), 2);
        assert!(k4.is_abelian());
        let e9 = FiniteGroup::elementary_abelian(3, 2).unwrap();
        assert_eq!(e9.order(), 9);
        assert_eq!(e9.exponent(), 3);

        assert!(FiniteGroup::heisenberg(2).is_err());
        assert!(FiniteGroup::heisenberg(9).is_err());
        let h3 = FiniteGroup::heisenberg(3).unwrap();
        assert_eq!(h3.order(), 27);
        assert!(!h3.is_abelian());
        assert_eq!(h3.exponent(), 3);
        let z = h3.generator("z").unwrap();
        let center = h3.center();
        assert_eq!(center.len(), 3);
        assert_eq!(center, h3.span(&[z]));
        let (x, y) = (h3.generator("x").unwrap(), h3.generator("y").unwrap());
        assert_eq!(h3.mul(x, z), h3.mul(z, x));
        assert_eq!(h3.mul(y, z), h3.mul(z, y));
        let h5 = FiniteGroup::heisenberg(5).unwrap();
        assert_eq!(h5.order(), 125);
        assert_eq!(h5.exponent(), 5);
    }

    #[test]
    fn products() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let p = FiniteGroup::direct_product(&z4, &z2).unwrap();
        assert_eq!(p.order(), 8);
        assert!(p.is_abelian());
        assert_eq!(p.exponent(), 4);
        let z1 = FiniteGroup::cyclic(1).unwrap();
        let d3 = FiniteGroup::dihedral(3).unwrap();
        let q = FiniteGroup::direct_product(&z1, &d3).unwrap();
        assert_eq!(q.table(), d3.table());
        let big = FiniteGroup::cyclic(100).unwrap();
        assert!(matches!(
            FiniteGroup::direct_product(&big, &big),
            Err(Error::OrderCapExceeded { .. })
        ));
    }

    #[test]
    fn constructors_satisfy_axioms() {
        let mut groups = vec![
            FiniteGroup::cyclic(1).unwrap(),
            FiniteGroup::cyclic(12).unwrap(),
            FiniteGroup::dihedral(1).unwrap(),
            FiniteGroup::dihedral(2).unwrap(),
            FiniteGroup::dicyclic(1).unwrap(),
            FiniteGroup::dicyclic(5).unwrap(),
            FiniteGroup::elementary_abelian(2, 3).unwrap(),
            FiniteGroup::elementary_abelian(3, 2).unwrap(),
            FiniteGroup::heisenberg(3).unwrap(),
            FiniteGroup::direct_product(
                &FiniteGroup::cyclic(4).unwrap(),
                &FiniteGroup::cyclic(2).unwrap(),
            )
            .unwrap(),
        ];
        groups.push(FiniteGroup::heisenberg(5).unwrap());
        for g in &groups {
            let r = verify_group_axioms(g);
            assert!(r.passed(), "{}: {:?}", g.family(), r.violation);
        }
        let d8 = FiniteGroup::dihedral(8).unwrap();
        let r = verify_group_axioms(&d8);
        assert!(r.passed() && r.exhaustive);
        assert_eq!(r.triples_checked, 16 * 16 * 16);
        let big = verify_group_axioms(&FiniteGroup::dihedral(150).unwrap());
        assert!(big.passed() && !big.exhaustive);
    }

    #[test]
    fn corrupted_cell_is_reported() {
        let mut g = FiniteGroup::dihedral(4).unwrap();
        // r * r := r^3 keeps identity and inverses of r intact.
        let n = g.order;
        g.table[n + 1] = 3;
        let r = verify_group_axioms(&g);
        match r.violation {
            Some(AxiomViolation::Associativity { i, j, k }) => {
                assert_ne!(g.mul(g.mul(i, j), k), g.mul(i, g.mul(j, k)));
            }
            other => panic!("unexpected {other:?}"),
        }
        let bad = FiniteGroup::from_table(n, g.table.clone(), g.generators.clone(), Family::Adhoc);
        assert!(matches!(bad, Err(Error::Axiom(_))));
    }

    #[test]
    fn from_table_roundtrip() {
        let d = FiniteGroup::dicyclic(3).unwrap();
        let g = FiniteGroup::from_table(
            d.order(),
            d.table().to_vec(),
            d.generators().to_vec(),
            Family::Adhoc,
        )
        .unwrap();
        assert_eq!(g, d);
        assert_eq!(g.id(), d.id());
    }

    #[test]
    fn greedy_generators_are_small() {
        let h = FiniteGroup::heisenberg(3).unwrap();
        let all = ElementSet::full(h.order());
        assert_eq!(h.greedy_generators(&all).len(), 2);
        let e = FiniteGroup::elementary_abelian(2, 3).unwrap();
        assert_eq!(e.greedy_generators(&ElementSet::full(8)).len(), 3);
        let z = FiniteGroup::cyclic(12).unwrap();
        assert_eq!(z.greedy_generators(&ElementSet::full(12)), [1]);
    }

    proptest! {
        #[test]
        fn power_order_formula(kind in 0u8..3, param in 1u64..13, k in 0usize..40) {
            let g = match kind {
                0 => FiniteGroup::cyclic(param).unwrap(),
                1 => FiniteGroup::dihedral(param).unwrap(),
                _ => FiniteGroup::dicyclic(param).unwrap(),
            };
            for a in 0..g.order() {
                let oa = g.element_orders()[a];
                let expected = oa / gcd(oa as u64, k as u64) as usize;
                prop_assert_eq!(g.element_orders()[g.pow(a, k)], expected);
            }
        }
    }
}
