#![allow(dead_code)]

use realize_core::groups::{
    cyclic, dihedral, elementary_abelian, module_action, quaternion, GroupAction, GroupHom, GroupTable, ModuleKind,
    Semidirect,
};
use realize_core::RingElem;

/// Groups of order at most 16 built from the catalog constructors.
pub fn small_groups() -> Vec<(String, GroupTable)> {
    let mut out: Vec<(String, GroupTable)> = Vec::new();
    for n in 1..=8 {
        out.push((format!("C{n}"), cyclic(n).unwrap()));
    }
    out.push(("V4".into(), elementary_abelian(&["a", "b"]).unwrap()));
    out.push(("C2^3".into(), elementary_abelian(&["a", "b", "c"]).unwrap()));
    for n in [6, 8, 10, 12] {
        out.push((format!("D{n}"), dihedral(n).unwrap()));
    }
    out.push(("Q8".into(), quaternion(8).unwrap()));
    out.push(("Q12".into(), quaternion(12).unwrap()));
    for kind in [ModuleKind::QC2, ModuleKind::YC3, ModuleKind::QC4, ModuleKind::F2C6] {
        let s = Semidirect::new(module_action(kind).unwrap()).unwrap();
        out.push((kind.name().into(), s.group));
    }
    out.push(("C4sdpC4".into(), c4_sdp_c4()));
    out
}

pub fn c4_sdp_c4() -> GroupTable {
    let c4 = cyclic(4).unwrap();
    let inversion = GroupHom::new(&c4, &c4, vec![0, 3, 2, 1]).unwrap();
    let act = GroupAction::cyclic(cyclic(4).unwrap(), c4, &inversion).unwrap();
    Semidirect::new(act).unwrap().group
}

pub fn mask_of(u: &RingElem) -> u32 {
    u.support().into_iter().fold(0, |m, i| m | 1 << i)
}

pub fn elem_of(n: usize, m: u32) -> RingElem {
    RingElem::from_support(n, (0..n).filter(|i| m >> i & 1 == 1)).unwrap()
}

/// Convolution product straight from the definition.
pub fn naive_mul(g: &GroupTable, u: u32, v: u32) -> u32 {
    let n = g.order();
    let mut out = 0u32;
    for a in 0..n {
        for b in 0..n {
            if u >> a & 1 == 1 && v >> b & 1 == 1 {
                out ^= 1 << g.mul(a, b);
            }
        }
    }
    out
}

/// Row echelon form keyed by the highest set bit.
#[derive(Clone, Default)]
pub struct Echelon {
    rows: Vec<u32>,
}

impl Echelon {
    pub fn reduce(&self, mut v: u32) -> u32 {
        for &r in &self.rows {
            if v ^ r < v {
                v ^= r;
            }
        }
        v
    }

    pub fn insert(&mut self, v: u32) -> bool {
        let v = self.reduce(v);
        if v == 0 {
            return false;
        }
        self.rows.push(v);
        self.rows.sort_unstable_by(|a, b| b.cmp(a));
        true
    }

    pub fn contains(&self, v: u32) -> bool {
        self.reduce(v) == 0
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

pub fn naive_rank(rows: &[u32]) -> usize {
    let mut e = Echelon::default();
    rows.iter().filter(|&&r| e.insert(r)).count()
}

/// The span of `x w y` over all group elements `x`, `y` and generators `w`.
pub fn naive_ideal(g: &GroupTable, gens: &[u32]) -> Echelon {
    let n = g.order();
    let mut e = Echelon::default();
    for &w in gens {
        for x in 0..n {
            let xw = naive_mul(g, 1 << x, w);
            for y in 0..n {
                e.insert(naive_mul(g, xw, 1 << y));
            }
        }
    }
    e
}

fn subgroup(g: &GroupTable, gens: &[usize]) -> Vec<bool> {
    let mut seen = vec![false; g.order()];
    seen[g.identity()] = true;
    let mut stack = vec![g.identity()];
    while let Some(e) = stack.pop() {
        for &s in gens {
            let t = g.mul(e, s);
            if !seen[t] {
                seen[t] = true;
                stack.push(t);
            }
        }
    }
    seen
}

/// Smallest-index greedy generating set.
pub fn naive_gens(g: &GroupTable) -> Vec<usize> {
    let mut gens = Vec::new();
    loop {
        let sub = subgroup(g, &gens);
        match sub.iter().position(|&b| !b) {
            Some(x) => gens.push(x),
            None => return gens,
        }
    }
}

/// Counts endomorphisms by trying every image tuple on a generating set and
/// checking the full multiplication table.
pub fn naive_endo_count(g: &GroupTable) -> usize {
    let n = g.order();
    let gens = naive_gens(g);
    let k = gens.len();
    let total = n.pow(k as u32);
    let mut count = 0;
    for code in 0..total {
        let imgs: Vec<usize> = (0..k).map(|i| code / n.pow(i as u32) % n).collect();
        let mut f = vec![usize::MAX; n];
        f[g.identity()] = g.identity();
        let mut stack = vec![g.identity()];
        let mut ok = true;
        while let Some(e) = stack.pop() {
            for (s, &t) in gens.iter().zip(&imgs) {
                let x = g.mul(e, *s);
                let fx = g.mul(f[e], t);
                if f[x] == usize::MAX {
                    f[x] = fx;
                    stack.push(x);
                } else if f[x] != fx {
                    ok = false;
                }
            }
        }
        if ok && (0..n).all(|a| (0..n).all(|b| f[g.mul(a, b)] == g.mul(f[a], f[b]))) {
            count += 1;
        }
    }
    count
}

pub fn sigma(k: usize) -> u32 {
    (1u32 << k) - 1
}
