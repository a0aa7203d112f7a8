//! Finite groups as Cayley tables.
//!
//! Every group here is a validated multiplication table with the identity at
//! index 0. Products and semidirect products index the pair `(a, b)` as
//! `a * |B| + b`, so tables are reproducible from their recipes.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::labels::{self, Word};

/// Tables up to this order get the exhaustive associativity check.
pub const ASSOCIATIVITY_CHECK_MAX: usize = 256;

#[derive(Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    labels: Option<Vec<String>>,
}

/// Structural invariants used in place of isomorphism testing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fingerprint {
    pub order: usize,
    pub abelian: bool,
    pub center_size: usize,
    pub exponent: usize,
    /// `(element order, count)` pairs in increasing order.
    pub order_histogram: Vec<(usize, usize)>,
}

impl GroupTable {
    /// Validates a table given as rows: `rows[g][h] = g*h`.
    pub fn from_rows(rows: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        let mut mul = Vec::with_capacity(n * n);
        for (g, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidTable(format!(
                    "row {g} has {} entries, expected {n}",
                    row.len()
                )));
            }
            mul.extend(row);
        }
        Self::from_flat(n, mul, labels)
    }

    fn from_flat(n: usize, mul: Vec<usize>, labels: Option<Vec<String>>) -> Result<Self> {
        if let Some(bad) = mul.iter().find(|&&x| x >= n) {
            return Err(Error::InvalidTable(format!("entry {bad} out of range 0..{n}")));
        }
        if let Some(l) = &labels {
            if l.len() != n {
                return Err(Error::InvalidTable(format!("{} labels for {n} elements", l.len())));
            }
        }
        for g in 0..n {
            if mul[g] != g || mul[g * n] != g {
                return Err(Error::InvalidTable(format!("index 0 is not an identity for {g}")));
            }
        }
        let mut seen = vec![usize::MAX; n];
        for g in 0..n {
            for h in 0..n {
                let x = mul[g * n + h];
                if seen[x] == g {
                    return Err(Error::InvalidTable(format!("row {g} repeats {x}")));
                }
                seen[x] = g;
            }
        }
        let mut seen = vec![usize::MAX; n];
        for h in 0..n {
            for g in 0..n {
                let x = mul[g * n + h];
                if seen[x] == h {
                    return Err(Error::InvalidTable(format!("column {h} repeats {x}")));
                }
                seen[x] = h;
            }
        }
        let mut inv = vec![0; n];
        for g in 0..n {
            inv[g] = (0..n)
                .find(|&h| mul[g * n + h] == 0)
                .expect("latin rows contain the identity");
            if mul[inv[g] * n + g] != 0 {
                return Err(Error::InvalidTable(format!("left and right inverse of {g} differ")));
            }
        }
        let table = GroupTable {
            order: n,
            mul,
            inv,
            labels,
        };
        if n <= ASSOCIATIVITY_CHECK_MAX {
            if let Some((a, b, c)) = table.associativity_failure() {
                return Err(Error::InvalidTable(format!("({a}*{b})*{c} != {a}*({b}*{c})")));
            }
        }
        Ok(table)
    }

    fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize, labels: Option<Vec<String>>) -> Result<Self> {
        let mut mul = Vec::with_capacity(n * n);
        for g in 0..n {
            for h in 0..n {
                mul.push(f(g, h));
            }
        }
        Self::from_flat(n, mul, labels)
    }

    fn associativity_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.mul[g * self.order + h]
    }

    #[inline]
    pub fn inv(&self, g: usize) -> usize {
        self.inv[g]
    }

    /// Row `g` of the table: `h -> g*h`.
    #[inline]
    pub fn row(&self, g: usize) -> &[usize] {
        &self.mul[g * self.order..(g + 1) * self.order]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, g: usize) -> String {
        match &self.labels {
            Some(l) => l[g].clone(),
            None => format!("g{g}"),
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order {
            return Err(Error::InvalidTable(format!(
                "{} labels for {} elements",
                labels.len(),
                self.order
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Element whose label is exactly `name`.
    pub fn find_label(&self, name: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == name)
    }

    /// Evaluates a word such as `x^2y` using the single-atom labels as generators.
    pub fn eval_word(&self, word: &str) -> Result<usize> {
        let w = Word::parse(word)?;
        let mut acc = 0;
        for (name, exp) in &w.0 {
            let g = self
                .find_label(name)
                .ok_or_else(|| Error::parse(0, format!("unknown generator `{name}` in `{word}`")))?;
            acc = self.mul(acc, self.pow(g, *exp));
        }
        Ok(acc)
    }

    pub fn pow(&self, g: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(g) } else { g };
        let mut acc = 0;
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    /// Least `k >= 1` with `g^k = 1`.
    pub fn element_order(&self, g: usize) -> usize {
        let mut k = 1;
        let mut x = g;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<usize> {
        self.elements().map(|g| self.element_order(g)).collect()
    }

    #[inline]
    pub fn commute(&self, g: usize, h: usize) -> bool {
        self.mul(g, h) == self.mul(h, g)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|g| (g + 1..self.order).all(|h| self.commute(g, h)))
    }

    /// `{ g : gs = sg for all s in set }`, sorted.
    pub fn centralizer(&self, set: &[usize]) -> Vec<usize> {
        self.elements()
            .filter(|&g| set.iter().all(|&s| self.commute(g, s)))
            .collect()
    }

    pub fn center(&self) -> Vec<usize> {
        let all: Vec<usize> = self.elements().collect();
        self.centralizer(&all)
    }

    /// The subgroup generated by `gens`, sorted.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for &s in gens {
                let y = self.mul(x, s);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        self.elements().filter(|&g| seen[g]).collect()
    }

    pub fn is_subgroup(&self, set: &[usize]) -> bool {
        let mut member = vec![false; self.order];
        for &s in set {
            if s >= self.order {
                return false;
            }
            member[s] = true;
        }
        member[0]
            && set
                .iter()
                .all(|&a| member[self.inv(a)] && set.iter().all(|&b| member[self.mul(a, b)]))
    }

    pub fn is_normal(&self, set: &[usize]) -> bool {
        let mut member = vec![false; self.order];
        for &s in set {
            member[s] = true;
        }
        self.is_subgroup(set)
            && self
                .elements()
                .all(|g| set.iter().all(|&h| member[self.mul(self.mul(g, h), self.inv(g))]))
    }

    pub fn exponent(&self) -> usize {
        self.element_orders().into_iter().fold(1, lcm)
    }

    pub fn order_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for o in self.element_orders() {
            *h.entry(o).or_insert(0) += 1;
        }
        h
    }

    pub fn fingerprint(&self) -> Fingerprint {
        Fingerprint {
            order: self.order,
            abelian: self.is_abelian(),
            center_size: self.center().len(),
            exponent: self.exponent(),
            order_histogram: self.order_histogram().into_iter().collect(),
        }
    }

    /// Writes the Cayley-table text format.
    pub fn to_text(&self) -> String {
        let mut out = format!("group {}\n", self.order);
        for g in self.elements() {
            let row: Vec<String> = self.row(g).iter().map(usize::to_string).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        if let Some(labels) = &self.labels {
            out.push_str("labels\n");
            for l in labels {
                out.push_str(l);
                out.push('\n');
            }
        }
        out
    }

    /// Reads the Cayley-table text format and revalidates every invariant.
    ///
    /// Blank lines and lines starting with `#` are ignored.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (ln, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing `group <n>` header"))?;
        let n: usize = header
            .strip_prefix("group")
            .map(str::trim)
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::parse(ln, format!("expected `group <n>`, found `{header}`")))?;
        let mut rows = Vec::with_capacity(n);
        for _ in 0..n {
            let (ln, line) = lines
                .next()
                .ok_or_else(|| Error::parse(ln, format!("expected {n} table rows")))?;
            let row = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::parse(ln, format!("bad index `{t}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        let labels = match lines.next() {
            None => None,
            Some((_, "labels")) => {
                let l: Vec<String> = lines.by_ref().take(n).map(|(_, l)| l.to_string()).collect();
                if l.len() != n {
                    return Err(Error::parse(
                        ln,
                        format!("labels block has {} entries, expected {n}", l.len()),
                    ));
                }
                Some(l)
            }
            Some((ln, other)) => return Err(Error::parse(ln, format!("unexpected line `{other}`"))),
        };
        if let Some((ln, extra)) = lines.next() {
            return Err(Error::parse(ln, format!("trailing content `{extra}`")));
        }
        GroupTable::from_rows(rows, labels)
    }
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable")
            .field("order", &self.order)
            .field("labels", &self.labels)
            .finish_non_exhaustive()
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// A homomorphism stored as its full image table.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupHom {
    image: Vec<usize>,
    codomain_order: usize,
}

impl GroupHom {
    /// Validates `image` exhaustively against both tables.
    pub fn new(domain: &GroupTable, codomain: &GroupTable, image: Vec<usize>) -> Result<Self> {
        if image.len() != domain.order() {
            return Err(Error::InvalidHom(format!(
                "image table has {} entries for a domain of order {}",
                image.len(),
                domain.order()
            )));
        }
        if let Some(&bad) = image.iter().find(|&&x| x >= codomain.order()) {
            return Err(Error::InvalidHom(format!("image {bad} outside codomain")));
        }
        if image[0] != 0 {
            return Err(Error::InvalidHom("identity not sent to identity".into()));
        }
        for g in domain.elements() {
            for h in domain.elements() {
                if image[domain.mul(g, h)] != codomain.mul(image[g], image[h]) {
                    return Err(Error::InvalidHom(format!("product {g}*{h} not preserved")));
                }
            }
        }
        Ok(GroupHom {
            image,
            codomain_order: codomain.order(),
        })
    }

    /// Skips validation; callers must have checked the product law.
    pub(crate) fn new_unchecked(image: Vec<usize>, codomain_order: usize) -> Self {
        GroupHom { image, codomain_order }
    }

    pub fn identity(g: &GroupTable) -> Self {
        GroupHom {
            image: g.elements().collect(),
            codomain_order: g.order(),
        }
    }

    pub fn trivial(domain: &GroupTable, codomain: &GroupTable) -> Self {
        GroupHom {
            image: vec![0; domain.order()],
            codomain_order: codomain.order(),
        }
    }

    #[inline]
    pub fn apply(&self, g: usize) -> usize {
        self.image[g]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn domain_order(&self) -> usize {
        self.image.len()
    }

    pub fn codomain_order(&self) -> usize {
        self.codomain_order
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &GroupHom) -> Result<GroupHom> {
        if inner.codomain_order != self.domain_order() {
            return Err(Error::DimensionMismatch {
                expected: self.domain_order(),
                got: inner.codomain_order,
            });
        }
        Ok(GroupHom {
            image: inner.image.iter().map(|&g| self.image[g]).collect(),
            codomain_order: self.codomain_order,
        })
    }

    pub fn is_bijective(&self) -> bool {
        if self.domain_order() != self.codomain_order {
            return false;
        }
        let mut seen = vec![false; self.codomain_order];
        self.image.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }
}

/// An action of `actor` on `target` by automorphisms.
#[derive(Clone, Debug)]
pub struct GroupAction {
    actor: GroupTable,
    target: GroupTable,
    auto_of: Vec<GroupHom>,
}

impl GroupAction {
    pub fn new(actor: GroupTable, target: GroupTable, auto_of: Vec<GroupHom>) -> Result<Self> {
        if auto_of.len() != actor.order() {
            return Err(Error::InvalidAction(format!(
                "{} automorphisms for an actor of order {}",
                auto_of.len(),
                actor.order()
            )));
        }
        for (b, f) in auto_of.iter().enumerate() {
            GroupHom::new(&target, &target, f.image.clone())
                .map_err(|e| Error::InvalidAction(format!("image of actor element {b}: {e}")))?;
            if !f.is_bijective() {
                return Err(Error::InvalidAction(format!("actor element {b} acts non-bijectively")));
            }
        }
        if !auto_of[0].is_identity() {
            return Err(Error::InvalidAction("identity does not act trivially".into()));
        }
        for b1 in actor.elements() {
            for b2 in actor.elements() {
                let lhs = &auto_of[actor.mul(b1, b2)];
                let rhs = auto_of[b1].compose(&auto_of[b2])?;
                if *lhs != rhs {
                    return Err(Error::InvalidAction(format!(
                        "action of {b1}*{b2} is not the composite"
                    )));
                }
            }
        }
        Ok(GroupAction { actor, target, auto_of })
    }

    /// The action of a cyclic group whose generator (index 1) acts by `generator_auto`.
    pub fn cyclic(actor: GroupTable, target: GroupTable, generator_auto: &GroupHom) -> Result<Self> {
        let m = actor.order();
        if m > 1 && actor.element_order(1) != m {
            return Err(Error::InvalidAction("actor index 1 does not generate it".into()));
        }
        let mut auto_of = Vec::with_capacity(m);
        let mut cur = GroupHom::identity(&target);
        for k in 0..m {
            debug_assert_eq!(actor.pow(1, k as i64), k % m.max(1));
            auto_of.push(cur.clone());
            cur = generator_auto.compose(&cur)?;
        }
        Self::new(actor, target, auto_of)
    }

    pub fn trivial(actor: GroupTable, target: GroupTable) -> Self {
        let id = GroupHom::identity(&target);
        let auto_of = vec![id; actor.order()];
        GroupAction { actor, target, auto_of }
    }

    pub fn actor(&self) -> &GroupTable {
        &self.actor
    }

    pub fn target(&self) -> &GroupTable {
        &self.target
    }

    pub fn auto_of(&self, b: usize) -> &GroupHom {
        &self.auto_of[b]
    }

    #[inline]
    pub fn act(&self, b: usize, a: usize) -> usize {
        self.auto_of[b].apply(a)
    }

    /// Elements of the target fixed by every actor element.
    pub fn fixed_subgroup(&self) -> Vec<usize> {
        self.target
            .elements()
            .filter(|&t| self.auto_of.iter().all(|f| f.apply(t) == t))
            .collect()
    }

    pub fn is_fixed_point_free(&self) -> bool {
        self.fixed_subgroup() == [0]
    }

    pub fn is_faithful(&self) -> bool {
        self.auto_of.iter().skip(1).all(|f| !f.is_identity())
    }
}

pub fn cyclic(n: usize) -> Result<GroupTable> {
    cyclic_named(n, "x")
}

/// `C_n` with generator at index 1 labelled `name`.
pub fn cyclic_named(n: usize, name: &str) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::InvalidArgument("cyclic group of order 0".into()));
    }
    let labels = (0..n).map(|k| labels::power_label(name, k)).collect();
    GroupTable::from_fn(n, |i, j| (i + j) % n, Some(labels))
}

/// `D_{2n}`: index `i` is `r^i`, index `n + i` is `s r^i`.
pub fn dihedral(two_n: usize) -> Result<GroupTable> {
    if two_n < 2 || !two_n.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "dihedral order {two_n} must be even and at least 2"
        )));
    }
    let n = two_n / 2;
    let labels = (0..two_n)
        .map(|k| {
            let r = labels::power_label("r", k % n);
            if k < n {
                r
            } else {
                labels::concat("s", &r)
            }
        })
        .collect();
    GroupTable::from_fn(
        two_n,
        |g, h| {
            let (gs, gi) = (g / n, g % n);
            let (hs, hi) = (h / n, h % n);
            // r^i s = s r^-i
            let i = if hs == 0 { gi + hi } else { hi + n - gi };
            ((gs ^ hs) * n) + i % n
        },
        Some(labels),
    )
}

/// `Q_{4n} = <x, y | x^{2n}, y^4, x^n = y^2, y x y^-1 = x^-1>`; index `j*2n + i`
/// is `x^i y^j`.
pub fn quaternion(four_n: usize) -> Result<GroupTable> {
    if four_n < 8 || !four_n.is_multiple_of(4) {
        return Err(Error::InvalidArgument(format!(
            "quaternion order {four_n} must be a multiple of 4 and at least 8"
        )));
    }
    let m = four_n / 2;
    let n = m / 2;
    let labels = (0..four_n)
        .map(|k| {
            let x = labels::power_label("x", k % m);
            if k < m {
                x
            } else {
                labels::concat(&x, "y")
            }
        })
        .collect();
    GroupTable::from_fn(
        four_n,
        |g, h| {
            let (gj, gi) = (g / m, g % m);
            let (hj, hi) = (h / m, h % m);
            // y x^k = x^-k y, and y^2 = x^n
            let i = if gj == 0 { gi + hi } else { gi + m - hi };
            let (i, j) = if gj + hj == 2 { (i + n, 0) } else { (i, gj + hj) };
            j * m + i % m
        },
        Some(labels),
    )
}

pub fn direct_product(a: &GroupTable, b: &GroupTable) -> Result<GroupTable> {
    let nb = b.order();
    let labels = product_labels(a, b);
    GroupTable::from_fn(
        a.order() * nb,
        |g, h| a.mul(g / nb, h / nb) * nb + b.mul(g % nb, h % nb),
        labels,
    )
}

fn product_labels(a: &GroupTable, b: &GroupTable) -> Option<Vec<String>> {
    let la = a.labels()?;
    let lb = labels::disjoint_labels(la, b.labels()?)?;
    let mut out = Vec::with_capacity(la.len() * lb.len());
    for x in la {
        for y in &lb {
            out.push(labels::concat(x, y));
        }
    }
    Some(out)
}

/// `C_2^k` on generators `names`; element index bits give the support, with the
/// first name in the highest bit, so multiplication is XOR of indices.
pub fn elementary_abelian(names: &[&str]) -> Result<GroupTable> {
    let mut g = cyclic_named(1, "e")?.with_labels(vec!["1".into()])?;
    for n in names {
        g = direct_product(&g, &cyclic_named(2, n)?)?;
    }
    Ok(g)
}

/// `A ⋊ B` with `(a1, b1)(a2, b2) = (a1 φ_{b1}(a2), b1 b2)` at index `a * |B| + b`.
pub fn semidirect_product(act: &GroupAction) -> Result<GroupTable> {
    let (a, b) = (act.target(), act.actor());
    let nb = b.order();
    let labels = product_labels(a, b);
    GroupTable::from_fn(
        a.order() * nb,
        |g, h| {
            let (a1, b1) = (g / nb, g % nb);
            let (a2, b2) = (h / nb, h % nb);
            a.mul(a1, act.act(b1, a2)) * nb + b.mul(b1, b2)
        },
        labels,
    )
}

/// A semidirect product together with the action that built it.
#[derive(Clone, Debug)]
pub struct Semidirect {
    pub action: GroupAction,
    pub group: GroupTable,
}

impl Semidirect {
    pub fn new(action: GroupAction) -> Result<Self> {
        let group = semidirect_product(&action)?;
        Ok(Semidirect { action, group })
    }

    #[inline]
    pub fn pair(&self, a: usize, b: usize) -> usize {
        a * self.action.actor().order() + b
    }

    pub fn split(&self, g: usize) -> (usize, usize) {
        let nb = self.action.actor().order();
        (g / nb, g % nb)
    }

    /// The normal subgroup `A × 1`, as indices of the product.
    pub fn target_elements(&self) -> Vec<usize> {
        self.action.target().elements().map(|a| self.pair(a, 0)).collect()
    }

    /// The complement `1 × B`.
    pub fn actor_elements(&self) -> Vec<usize> {
        self.action.actor().elements().map(|b| self.pair(0, b)).collect()
    }
}

/// The module actions of cyclic groups on elementary abelian 2-groups used by
/// the constructions. Actor generator images are listed on each variant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ModuleKind {
    /// `C_2 = <x>` on `<a, b>`: a -> ab, b -> b.
    QC2,
    /// `C_3 = <c>` on `<a, b>`: a -> ab, b -> a.
    YC3,
    /// `C_6 = <x>` on `<a, b, c, d>`: a -> abcd, b -> bd, c -> ab, d -> b.
    YQC6,
    /// `C_4 = <x>` on `<a, b>`: a -> ab, b -> b.
    QC4,
    /// `C_4 = <x>` on `<a, b, c>`: a -> ab, b -> bc, c -> c.
    UC4,
    /// `C_4 = <x>` on `<a, b, c, d>`: a -> ab, b -> bc, c -> cd, d -> d.
    SC4,
    /// `C_6 = <x>` acting trivially on `<a>`.
    F2C6,
    /// `C_6 = <x>` on `<a, b>` through its order-3 quotient: a -> ab, b -> a.
    YC6,
}

impl ModuleKind {
    pub const ALL: [ModuleKind; 8] = [
        ModuleKind::QC2,
        ModuleKind::YC3,
        ModuleKind::YQC6,
        ModuleKind::QC4,
        ModuleKind::UC4,
        ModuleKind::SC4,
        ModuleKind::F2C6,
        ModuleKind::YC6,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ModuleKind::QC2 => "Q_C2",
            ModuleKind::YC3 => "Y_C3",
            ModuleKind::YQC6 => "YQ_C6",
            ModuleKind::QC4 => "Q_C4",
            ModuleKind::UC4 => "U_C4",
            ModuleKind::SC4 => "S_C4",
            ModuleKind::F2C6 => "F2_C6",
            ModuleKind::YC6 => "Y_C6",
        }
    }

    pub fn actor_order(self) -> usize {
        match self {
            ModuleKind::QC2 => 2,
            ModuleKind::YC3 => 3,
            ModuleKind::QC4 | ModuleKind::UC4 | ModuleKind::SC4 => 4,
            ModuleKind::YQC6 | ModuleKind::F2C6 | ModuleKind::YC6 => 6,
        }
    }

    fn actor_name(self) -> &'static str {
        match self {
            ModuleKind::YC3 => "c",
            _ => "x",
        }
    }

    fn target_names(self) -> &'static [&'static str] {
        match self {
            ModuleKind::F2C6 => &["a"],
            ModuleKind::QC2 | ModuleKind::YC3 | ModuleKind::QC4 | ModuleKind::YC6 => &["a", "b"],
            ModuleKind::UC4 => &["a", "b", "c"],
            ModuleKind::YQC6 | ModuleKind::SC4 => &["a", "b", "c", "d"],
        }
    }

    /// Generator images as words in the target generators.
    fn images(self) -> &'static [&'static str] {
        match self {
            ModuleKind::QC2 | ModuleKind::QC4 => &["ab", "b"],
            ModuleKind::YC3 | ModuleKind::YC6 => &["ab", "a"],
            ModuleKind::YQC6 => &["abcd", "bd", "ab", "b"],
            ModuleKind::UC4 => &["ab", "bc", "c"],
            ModuleKind::SC4 => &["ab", "bc", "cd", "d"],
            ModuleKind::F2C6 => &["a"],
        }
    }
}

impl fmt::Display for ModuleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ModuleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ModuleKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| {
                let known: Vec<&str> = ModuleKind::ALL.iter().map(|k| k.name()).collect();
                Error::parse(
                    0,
                    format!("unknown module kind `{s}`; expected one of {}", known.join(", ")),
                )
            })
    }
}

/// The action of the cyclic actor on its elementary abelian module.
pub fn module_action(kind: ModuleKind) -> Result<GroupAction> {
    let names = kind.target_names();
    let target = elementary_abelian(names)?;
    let k = names.len();
    // Linear extension of the generator images; generator j sits at bit k-1-j.
    let gen_images = kind
        .images()
        .iter()
        .map(|w| target.eval_word(w))
        .collect::<Result<Vec<_>>>()?;
    let image = (0..target.order())
        .map(|t| {
            (0..k)
                .filter(|j| t >> (k - 1 - j) & 1 == 1)
                .fold(0, |acc, j| acc ^ gen_images[j])
        })
        .collect();
    let gen_auto = GroupHom::new(&target, &target, image)?;
    let actor = cyclic_named(kind.actor_order(), kind.actor_name())?;
    GroupAction::cyclic(actor, target, &gen_auto)
}

/// The action whose semidirect product is the depth-`depth` iterate
/// `A ⋊ (A ⋊ ... (A ⋊ C))`: each new copy of `A` is acted on through the
/// projection onto the top cyclic factor.
pub fn iterated_action(kind: ModuleKind, depth: usize) -> Result<GroupAction> {
    if depth == 0 {
        return Err(Error::InvalidArgument("iteration depth must be at least 1".into()));
    }
    let base = module_action(kind)?;
    let m = base.actor().order();
    let mut act = base.clone();
    for _ in 1..depth {
        let prev = semidirect_product(&act)?;
        // In every stage the cyclic coordinate is the index modulo |C|.
        let auto_of = prev.elements().map(|g| base.auto_of(g % m).clone()).collect();
        act = GroupAction::new(prev, base.target().clone(), auto_of)?;
    }
    Ok(act)
}

pub fn iterated_family(kind: ModuleKind, depth: usize) -> Result<GroupTable> {
    semidirect_product(&iterated_action(kind, depth)?)
}
