//! The group algebra F2[G], its two-sided ideals and quotient rings.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::endos::find_generating_set;
use crate::error::{Error, Result};
use crate::gf2::{Gf2Basis, Gf2Matrix, Gf2Vec};
use crate::groups::{GroupHom, GroupTable};

/// Default cap on the quotient dimension accepted by [`QuotientRing::unit_group`].
pub const DEFAULT_CAP_DIM: usize = 22;

/// An element of F2[G]: bit `g` is the coefficient of group element `g`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElem {
    coeffs: Gf2Vec,
}

impl RingElem {
    pub fn zero(order: usize) -> Self {
        RingElem {
            coeffs: Gf2Vec::zeros(order),
        }
    }

    pub fn one(order: usize) -> Self {
        Self::group_element(order, 0)
    }

    pub fn group_element(order: usize, g: usize) -> Self {
        RingElem {
            coeffs: Gf2Vec::unit(order, g),
        }
    }

    /// Sum of the listed group elements; repeats cancel.
    pub fn from_support(order: usize, support: impl IntoIterator<Item = usize>) -> Result<Self> {
        Ok(RingElem {
            coeffs: Gf2Vec::from_indices(order, support)?,
        })
    }

    pub fn from_coeffs(coeffs: Gf2Vec) -> Self {
        RingElem { coeffs }
    }

    pub fn coeffs(&self) -> &Gf2Vec {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Gf2Vec {
        self.coeffs
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Support in increasing index order.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs.to_indices()
    }

    pub fn weight(&self) -> usize {
        self.coeffs.count_ones()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    pub fn add(&self, other: &RingElem) -> Result<RingElem> {
        Ok(RingElem {
            coeffs: self.coeffs.try_xor(&other.coeffs)?,
        })
    }

    /// Parity of the support size.
    pub fn augmentation(&self) -> bool {
        self.weight() % 2 == 1
    }

    /// Parses `1+x+y+xy` (element labels or words in them), `{0,1,2,5}`
    /// (indices), or `0`. Repeated terms cancel.
    pub fn parse(g: &GroupTable, text: &str) -> Result<RingElem> {
        let s = text.trim();
        if let Some(inner) = s.strip_prefix('{') {
            let inner = inner
                .strip_suffix('}')
                .ok_or_else(|| Error::parse(s.len(), "missing closing `}`"))?;
            let mut idx = Vec::new();
            let mut pos = 1;
            for tok in inner.split(',') {
                let t = tok.trim();
                if !t.is_empty() {
                    let i: usize = t.parse().map_err(|_| Error::parse(pos, format!("bad index `{t}`")))?;
                    if i >= g.order() {
                        return Err(Error::parse(
                            pos,
                            format!("index {i} outside group of order {}", g.order()),
                        ));
                    }
                    idx.push(i);
                }
                pos += tok.len() + 1;
            }
            return RingElem::from_support(g.order(), idx);
        }
        if s == "0" {
            return Ok(RingElem::zero(g.order()));
        }
        let mut out = RingElem::zero(g.order());
        let mut pos = 0;
        for term in s.split('+') {
            let t = term.trim();
            if t.is_empty() {
                return Err(Error::parse(pos, "empty term"));
            }
            let e = match g.find_label(t) {
                Some(e) => e,
                None => g.eval_word(t).map_err(|e| match e {
                    Error::Parse { pos: p, msg } => Error::parse(pos + p, msg),
                    other => other,
                })?,
            };
            out.coeffs.flip(e);
            pos += term.len() + 1;
        }
        Ok(out)
    }

    /// Renders with element labels, e.g. `1+x+y+xy`; `0` for zero.
    pub fn format(&self, g: &GroupTable) -> String {
        if self.is_zero() {
            return "0".into();
        }
        if g.labels().is_none() {
            return self.format_indices();
        }
        let terms: Vec<String> = self.coeffs.ones().map(|e| g.label(e)).collect();
        terms.join("+")
    }

    /// Renders as a support list, e.g. `{0,1,4}`.
    pub fn format_indices(&self) -> String {
        let terms: Vec<String> = self.coeffs.ones().map(|e| e.to_string()).collect();
        format!("{{{}}}", terms.join(","))
    }
}

impl fmt::Debug for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingElem{}", self.format_indices())
    }
}

impl Serialize for RingElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (self.order(), self.support()).serialize(s)
    }
}

impl<'de> Deserialize<'de> for RingElem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let (order, support) = <(usize, Vec<usize>)>::deserialize(d)?;
        RingElem::from_support(order, support).map_err(serde::de::Error::custom)
    }
}

fn check_order(g: &GroupTable, u: &RingElem) -> Result<()> {
    if u.order() != g.order() {
        return Err(Error::DimensionMismatch {
            expected: g.order(),
            got: u.order(),
        });
    }
    Ok(())
}

/// The convolution product `uv`.
pub fn ring_mul(g: &GroupTable, u: &RingElem, v: &RingElem) -> Result<RingElem> {
    check_order(g, u)?;
    check_order(g, v)?;
    let mut out = Gf2Vec::zeros(g.order());
    let vs = v.support();
    for s in u.coeffs.ones() {
        let row = g.row(s);
        for &t in &vs {
            out.flip(row[t]);
        }
    }
    Ok(RingElem { coeffs: out })
}

/// `s * u` for a group element `s`.
pub fn left_translate(g: &GroupTable, s: usize, u: &RingElem) -> RingElem {
    let row = g.row(s);
    let mut out = Gf2Vec::zeros(g.order());
    for t in u.coeffs.ones() {
        out.set(row[t], true);
    }
    RingElem { coeffs: out }
}

/// `u * s` for a group element `s`.
pub fn right_translate(g: &GroupTable, u: &RingElem, s: usize) -> RingElem {
    let mut out = Gf2Vec::zeros(g.order());
    for t in u.coeffs.ones() {
        out.set(g.mul(t, s), true);
    }
    RingElem { coeffs: out }
}

/// The linear extension of a homomorphism to the group algebras.
pub fn apply_hom(f: &GroupHom, u: &RingElem) -> RingElem {
    let mut out = Gf2Vec::zeros(f.codomain_order());
    for t in u.coeffs.ones() {
        out.flip(f.apply(t));
    }
    RingElem { coeffs: out }
}

/// A two-sided ideal of F2[G] held as an F2-subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    generators: Vec<RingElem>,
    basis: Gf2Basis,
}

impl Ideal {
    pub fn zero(order: usize) -> Self {
        Ideal {
            generators: Vec::new(),
            basis: Gf2Basis::new(order),
        }
    }

    /// The two-sided ideal generated by `gens`.
    pub fn generate(g: &GroupTable, gens: Vec<RingElem>) -> Result<Ideal> {
        Ideal::zero(g.order()).extend(g, gens, &[])
    }

    /// The smallest ideal containing `gens` that every map in `endos` sends
    /// into itself.
    pub fn generate_invariant(g: &GroupTable, gens: Vec<RingElem>, endos: &[GroupHom]) -> Result<Ideal> {
        Ideal::zero(g.order()).extend(g, gens, endos)
    }

    /// Adds generators to an ideal already closed under `endos`.
    pub fn extend(&self, g: &GroupTable, gens: Vec<RingElem>, endos: &[GroupHom]) -> Result<Ideal> {
        for u in &gens {
            check_order(g, u)?;
        }
        for f in endos {
            if f.domain_order() != g.order() || f.codomain_order() != g.order() {
                return Err(Error::DimensionMismatch {
                    expected: g.order(),
                    got: f.domain_order(),
                });
            }
        }
        let group_gens = find_generating_set(g).gens().to_vec();
        let mut basis = self.basis.clone();
        let mut work: Vec<RingElem> = Vec::new();
        for u in &gens {
            let r = basis.reduce_unchecked(u.coeffs.clone());
            if basis.insert_reduced(r).is_some() {
                work.push(u.clone());
            }
        }
        while let Some(b) = work.pop() {
            let images = group_gens
                .iter()
                .flat_map(|&s| [left_translate(g, s, &b), right_translate(g, &b, s)])
                .chain(endos.iter().map(|f| apply_hom(f, &b)));
            for w in images {
                let r = basis.reduce_unchecked(w.coeffs.clone());
                if basis.insert_reduced(r).is_some() {
                    work.push(w);
                }
            }
        }
        let mut generators = self.generators.clone();
        generators.extend(gens);
        let ideal = Ideal { generators, basis };
        debug_assert_eq!(ideal.audit(g), None);
        Ok(ideal)
    }

    /// Checks closure under every group element on both sides. Returns a
    /// basis row index and element that escape, if any.
    pub fn audit(&self, g: &GroupTable) -> Option<(usize, usize)> {
        for (i, row) in self.basis.rows().iter().enumerate() {
            let b = RingElem { coeffs: row.clone() };
            for s in g.elements() {
                let l = left_translate(g, s, &b);
                let r = right_translate(g, &b, s);
                if !self.basis.reduce_unchecked(l.coeffs).is_zero() || !self.basis.reduce_unchecked(r.coeffs).is_zero()
                {
                    return Some((i, s));
                }
            }
        }
        None
    }

    pub fn generators(&self) -> &[RingElem] {
        &self.generators
    }

    pub fn basis(&self) -> &Gf2Basis {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.rank()
    }

    pub fn order(&self) -> usize {
        self.basis.ambient_dim()
    }

    pub fn reduce(&self, u: &RingElem) -> Result<RingElem> {
        Ok(RingElem {
            coeffs: self.basis.reduce(&u.coeffs)?,
        })
    }

    pub fn contains(&self, u: &RingElem) -> Result<bool> {
        self.basis.contains(&u.coeffs)
    }

    /// Whether the group elements stay pairwise distinct modulo the ideal.
    /// On failure returns a pair `g < h` with `g ≡ h`.
    pub fn embedding_collision(&self) -> Option<(usize, usize)> {
        let mut seen: HashMap<Gf2Vec, usize> = HashMap::with_capacity(self.order());
        for h in 0..self.order() {
            let r = self.basis.reduce_unchecked(Gf2Vec::unit(self.order(), h));
            if let Some(&g) = seen.get(&r) {
                return Some((g, h));
            }
            seen.insert(r, h);
        }
        None
    }

    pub fn embeds(&self) -> bool {
        self.embedding_collision().is_none()
    }

    /// Contained in the augmentation ideal, so augmentation is defined on the quotient.
    pub fn in_augmentation_ideal(&self) -> bool {
        self.basis.rows().iter().all(|r| r.count_ones() % 2 == 0)
    }
}

/// The quotient F2[G]/I, with coordinates on the non-pivot columns of the ideal basis.
#[derive(Clone, Debug)]
pub struct QuotientRing {
    ideal: Ideal,
    free: Vec<usize>,
    /// Coordinates of each group element's class.
    elem_coords: Vec<Gf2Vec>,
    table: GroupTable,
}

impl QuotientRing {
    pub fn new(g: &GroupTable, ideal: Ideal) -> Result<Self> {
        if ideal.order() != g.order() {
            return Err(Error::DimensionMismatch {
                expected: g.order(),
                got: ideal.order(),
            });
        }
        let free = ideal.basis.free_columns();
        let mut q = QuotientRing {
            ideal,
            free,
            elem_coords: Vec::new(),
            table: g.clone(),
        };
        q.elem_coords = g
            .elements()
            .map(|h| {
                let r = q.ideal.basis.reduce_unchecked(Gf2Vec::unit(g.order(), h));
                q.coords_of_reduced(&r)
            })
            .collect();
        Ok(q)
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn group(&self) -> &GroupTable {
        &self.table
    }

    /// The group elements whose classes form the coordinate basis.
    pub fn free_columns(&self) -> &[usize] {
        &self.free
    }

    fn coords_of_reduced(&self, r: &Gf2Vec) -> Gf2Vec {
        let mut c = Gf2Vec::zeros(self.free.len());
        for (i, &col) in self.free.iter().enumerate() {
            if r.get(col) {
                c.set(i, true);
            }
        }
        c
    }

    /// The canonical representative of the class of `u`.
    pub fn canonical(&self, u: &RingElem) -> Result<RingElem> {
        self.ideal.reduce(u)
    }

    pub fn coords(&self, u: &RingElem) -> Result<Gf2Vec> {
        let r = self.ideal.basis.reduce(&u.coeffs)?;
        Ok(self.coords_of_reduced(&r))
    }

    pub fn from_coords(&self, c: &Gf2Vec) -> Result<RingElem> {
        if c.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: c.len(),
            });
        }
        RingElem::from_support(self.table.order(), c.ones().map(|i| self.free[i]))
    }

    pub fn element_coords(&self, g: usize) -> &Gf2Vec {
        &self.elem_coords[g]
    }

    pub fn element_image(&self, g: usize) -> RingElem {
        self.from_coords(&self.elem_coords[g])
            .expect("coordinates have quotient length")
    }

    /// Canonical representative of `uv`.
    pub fn mul(&self, u: &RingElem, v: &RingElem) -> Result<RingElem> {
        self.canonical(&ring_mul(&self.table, u, v)?)
    }

    fn mul_coords(&self, a: &Gf2Vec, b: &Gf2Vec) -> Gf2Vec {
        let mut out = Gf2Vec::zeros(self.dim());
        let bs: Vec<usize> = b.ones().collect();
        for i in a.ones() {
            let row = self.table.row(self.free[i]);
            for &j in &bs {
                out.xor_assign(&self.elem_coords[row[self.free[j]]]);
            }
        }
        out
    }

    /// Matrix of `x -> u x` in quotient coordinates.
    pub fn left_mul_matrix(&self, u: &RingElem) -> Result<Gf2Matrix> {
        let c = self.coords(u)?;
        let cols: Vec<Gf2Vec> = (0..self.dim())
            .map(|j| self.mul_coords(&c, &Gf2Vec::unit(self.dim(), j)))
            .collect();
        Gf2Matrix::from_columns(self.dim(), &cols)
    }

    /// The inverse of `u` modulo the ideal, if `u` is a unit.
    pub fn inverse(&self, u: &RingElem) -> Result<Option<RingElem>> {
        if self.dim() == 0 {
            // the zero ring: 0 = 1 is its own inverse
            return Ok(Some(RingElem::zero(self.table.order())));
        }
        let l = self.left_mul_matrix(u)?;
        let one = self.elem_coords[0].clone();
        let Some(x) = l.solve(&one)? else {
            return Ok(None);
        };
        let v = self.from_coords(&x)?;
        let vu = self.mul(&v, u)?;
        assert_eq!(
            vu,
            self.canonical(&RingElem::one(self.table.order()))?,
            "one-sided inverse in a finite ring"
        );
        Ok(Some(v))
    }

    pub fn is_unit(&self, u: &RingElem) -> Result<bool> {
        Ok(self.inverse(u)?.is_some())
    }

    /// All units, by Gray-code enumeration of the `2^dim` representatives.
    pub fn unit_group(&self, cap_dim: usize) -> Result<UnitCensus> {
        let d = self.dim();
        if d > cap_dim || d > 40 {
            return Err(Error::CapExceeded {
                what: "quotient dimension",
                size: d,
                cap: cap_dim.min(40),
            });
        }
        if d == 0 {
            return Ok(UnitCensus { dim: 0, words: vec![0] });
        }
        // structure constants: word of b_i b_j
        let word = |v: &Gf2Vec| v.limbs().first().copied().unwrap_or(0);
        let sc: Vec<Vec<u64>> = (0..d)
            .map(|i| {
                let row = self.table.row(self.free[i]);
                (0..d).map(|j| word(&self.elem_coords[row[self.free[j]]])).collect()
            })
            .collect();
        let odd_only = self.ideal.in_augmentation_ideal();
        let total: u64 = 1 << d;
        let chunk_bits = d.min(14);
        let chunk: u64 = 1 << chunk_bits;
        let n_chunks = total / chunk;
        let mut words: Vec<u64> = (0..n_chunks)
            .into_par_iter()
            .flat_map_iter(|c| {
                let start = c * chunk;
                let mut u = start ^ (start >> 1);
                let mut cols = vec![0u64; d];
                for (i, row) in sc.iter().enumerate() {
                    if u >> i & 1 == 1 {
                        for (col, s) in cols.iter_mut().zip(row) {
                            *col ^= s;
                        }
                    }
                }
                let mut found = Vec::new();
                for k in start..start + chunk {
                    if k > start {
                        let bit = k.trailing_zeros() as usize;
                        u ^= 1 << bit;
                        for (col, s) in cols.iter_mut().zip(&sc[bit]) {
                            *col ^= s;
                        }
                    }
                    if odd_only && u.count_ones().is_multiple_of(2) {
                        continue;
                    }
                    if full_rank(&cols) {
                        found.push(u);
                    }
                }
                found
            })
            .collect();
        words.par_sort_unstable();
        Ok(UnitCensus { dim: d, words })
    }
}

fn full_rank(cols: &[u64]) -> bool {
    let mut basis = [0u64; 64];
    for &c in cols {
        let mut v = c;
        loop {
            if v == 0 {
                return false;
            }
            let h = 63 - v.leading_zeros() as usize;
            if basis[h] == 0 {
                basis[h] = v;
                break;
            }
            v ^= basis[h];
        }
    }
    true
}

/// The units of a quotient ring as coordinate words, sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitCensus {
    dim: usize,
    words: Vec<u64>,
}

impl UnitCensus {
    pub fn count(&self) -> usize {
        self.words.len()
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn contains_coords(&self, c: &Gf2Vec) -> bool {
        let w = c.limbs().first().copied().unwrap_or(0);
        self.words.binary_search(&w).is_ok()
    }

    pub fn coords(&self, i: usize) -> Gf2Vec {
        Gf2Vec::from_word(self.dim, self.words[i])
    }

    /// Canonical representatives of all units.
    pub fn elements(&self, q: &QuotientRing) -> Vec<RingElem> {
        (0..self.count())
            .map(|i| q.from_coords(&self.coords(i)).expect("census word fits the quotient"))
            .collect()
    }
}

/// Unit test in F2[G] itself: left multiplication by `u` has full rank.
pub fn is_unit_full_algebra(g: &GroupTable, u: &RingElem) -> Result<bool> {
    check_order(g, u)?;
    let mut basis = Gf2Basis::new(g.order());
    for h in g.elements() {
        let col = right_translate(g, u, h);
        if !basis.insert(col.coeffs)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Unit test through F2[G] -> F2[G/H] = F2[C3] for a normal 2-subgroup `h`
/// of index 3.
pub fn is_unit_via_sylow3_quotient(g: &GroupTable, h: &[usize], u: &RingElem) -> Result<bool> {
    check_order(g, u)?;
    if !g.is_normal(h) {
        return Err(Error::InvalidArgument("subgroup is not normal".into()));
    }
    if h.len() * 3 != g.order() {
        return Err(Error::InvalidArgument(format!(
            "index {} / {} is not 3",
            g.order(),
            h.len()
        )));
    }
    if !h.len().is_power_of_two() {
        return Err(Error::InvalidArgument("subgroup is not a 2-group".into()));
    }
    let mut member = vec![false; g.order()];
    for &x in h {
        member[x] = true;
    }
    let c = g.elements().find(|&x| !member[x]).expect("proper subgroup");
    // coset index of every element: x in c^k H
    let c2 = g.mul(c, c);
    let coset = |x: usize| -> usize {
        if member[x] {
            0
        } else if member[g.mul(g.inv(c), x)] {
            1
        } else {
            debug_assert!(member[g.mul(g.inv(c2), x)]);
            2
        }
    };
    let mut img = [false; 3];
    for x in u.coeffs.ones() {
        img[coset(x)] ^= true;
    }
    // F2[C3] = F2[t]/(t^3 - 1); circulant rank test
    let circ = Gf2Matrix::from_rows(
        3,
        (0..3)
            .map(|r| Gf2Vec::from_indices(3, (0..3).filter(|&k| img[(r + 3 - k) % 3])).expect("indices < 3"))
            .collect(),
    )?;
    Ok(circ.rank() == 3)
}
