//! Generator lists for the ideals of the known constructions.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::groupring::RingElem;
use crate::groups::{direct_product, GroupAction, GroupTable, Semidirect};

/// `1 + s + t + st`, or `None` when it vanishes.
fn square(g: &GroupTable, s: usize, t: usize) -> Option<RingElem> {
    let u = RingElem::from_support(g.order(), [0, s, t, g.mul(s, t)]).expect("indices in range");
    (!u.is_zero()).then_some(u)
}

fn dedup(gens: impl IntoIterator<Item = RingElem>) -> Vec<RingElem> {
    let mut seen = BTreeSet::new();
    gens.into_iter().filter(|u| seen.insert(u.clone())).collect()
}

/// All nonzero `1 + u + v + uv`.
pub fn elementary_abelian_ideal(g: &GroupTable) -> Vec<RingElem> {
    dedup(
        g.elements()
            .flat_map(|u| g.elements().filter_map(move |v| square(g, u, v))),
    )
}

/// `{1 + s + t + st : s in C_G(V), t in G}`; `V` must generate an abelian subgroup.
pub fn centralizer_ideal(g: &GroupTable, v: &[usize]) -> Result<Vec<RingElem>> {
    if let Some(&bad) = v.iter().find(|&&x| x >= g.order()) {
        return Err(Error::InvalidArgument(format!("element {bad} outside the group")));
    }
    let span = g.subgroup_generated(v);
    if span.iter().any(|&a| span.iter().any(|&b| !g.commute(a, b))) {
        return Err(Error::InvalidArgument(
            "the given elements generate a nonabelian subgroup".into(),
        ));
    }
    let c = g.centralizer(v);
    Ok(dedup(
        c.iter()
            .flat_map(|&s| g.elements().filter_map(move |t| square(g, s, t))),
    ))
}

fn require_actor_order(sdp: &Semidirect, n: usize) -> Result<()> {
    let m = sdp.action.actor().order();
    if m != n || sdp.action.actor().element_order(1) != n {
        return Err(Error::InvalidArgument(format!(
            "construction needs a cyclic actor of order {n} generated by index 1, found order {m}"
        )));
    }
    Ok(())
}

fn target_generators(act: &GroupAction) -> Vec<usize> {
    let t = act.target();
    match t.labels() {
        Some(labels) => {
            let mut named: Vec<usize> = t.elements().filter(|&e| e != 0 && labels[e].len() == 1).collect();
            named.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
            if t.subgroup_generated(&named).len() == t.order() {
                return named;
            }
            crate::endos::find_generating_set(t).gens().to_vec()
        }
        None => crate::endos::find_generating_set(t).gens().to_vec(),
    }
}

/// A basis `{u_1, u_1^c, u_2, u_2^c, ...}` of the target, built greedily from
/// its named generators.
pub fn default_c3_basis(act: &GroupAction) -> Vec<usize> {
    let t = act.target();
    let mut basis: Vec<usize> = Vec::new();
    for u in target_generators(act) {
        if t.subgroup_generated(&basis).contains(&u) {
            continue;
        }
        basis.push(u);
        let uc = act.act(1, u);
        if !t.subgroup_generated(&basis).contains(&uc) {
            basis.push(uc);
        }
    }
    basis
}

/// Named target generators moved by the actor generator.
pub fn default_c4_basis(act: &GroupAction) -> Vec<usize> {
    target_generators(act)
        .into_iter()
        .filter(|&a| act.act(1, a) != a)
        .collect()
}

fn check_basis(sdp: &Semidirect, basis: &[usize]) -> Result<()> {
    let n = sdp.action.target().order();
    if basis.is_empty() {
        return Err(Error::InvalidArgument("empty target basis".into()));
    }
    match basis.iter().find(|&&a| a == 0 || a >= n) {
        Some(bad) => Err(Error::InvalidArgument(format!(
            "{bad} is not a nonidentity target element"
        ))),
        None => Ok(()),
    }
}

/// `1 + a_i + c + a_i c` over a target basis, for a cyclic actor of order 3.
pub fn sdp_c3_ideal(sdp: &Semidirect, basis: &[usize]) -> Result<Vec<RingElem>> {
    require_actor_order(sdp, 3)?;
    check_basis(sdp, basis)?;
    let g = &sdp.group;
    let c = sdp.pair(0, 1);
    Ok(dedup(basis.iter().filter_map(|&a| square(g, sdp.pair(a, 0), c))))
}

/// `1 + a_i + x + a_i x` and `1 + x + x^2 + x^3`, for a cyclic actor of order 4.
pub fn c4_ideal(sdp: &Semidirect, basis: &[usize]) -> Result<Vec<RingElem>> {
    require_actor_order(sdp, 4)?;
    check_basis(sdp, basis)?;
    let g = &sdp.group;
    let x = sdp.pair(0, 1);
    let mut gens: Vec<RingElem> = basis.iter().filter_map(|&a| square(g, sdp.pair(a, 0), x)).collect();
    gens.push(RingElem::from_support(g.order(), (0..4).map(|k| sdp.pair(0, k)))?);
    Ok(dedup(gens))
}

/// [`c4_ideal`] together with every `1 + a_i + a_j + a_i a_j`.
pub fn c4_ideal_with_pairs(sdp: &Semidirect, basis: &[usize]) -> Result<Vec<RingElem>> {
    let g = &sdp.group;
    let mut gens = c4_ideal(sdp, basis)?;
    for &a in basis {
        for &b in basis {
            gens.extend(square(g, sdp.pair(a, 0), sdp.pair(b, 0)));
        }
    }
    Ok(dedup(gens))
}

/// `1 + v + w x^{3e} + v^{x^{3e}} w x^{3e}` for `v` in `A ⋊ <x^3>`, `w` in
/// `A ⋊ <x^2>`, `e` in {0, 1}, for a cyclic actor of order 6.
pub fn c6_ideal(sdp: &Semidirect) -> Result<Vec<RingElem>> {
    require_actor_order(sdp, 6)?;
    let g = &sdp.group;
    let na = sdp.action.target().order();
    let v_set: Vec<usize> = (0..na).flat_map(|a| [sdp.pair(a, 0), sdp.pair(a, 3)]).collect();
    let w_set: Vec<usize> = (0..na).flat_map(|a| [0, 2, 4].map(|k| sdp.pair(a, k))).collect();
    let x3 = sdp.pair(0, 3);
    let mut gens = Vec::with_capacity(2 * v_set.len() * w_set.len());
    for e in [false, true] {
        let t = if e { x3 } else { 0 };
        for &v in &v_set {
            // t is an involution or the identity, so conjugation is t v t
            let vt = g.mul(g.mul(t, v), t);
            for &w in &w_set {
                let wt = g.mul(w, t);
                let u = RingElem::from_support(g.order(), [0, v, wt, g.mul(vt, wt)])?;
                if !u.is_zero() {
                    gens.push(u);
                }
            }
        }
    }
    Ok(dedup(gens))
}

/// `1 + u + v + uv` for `u, v` in an abelian `h` with at most one of order 4.
pub fn c2c4_ideal(h: &GroupTable) -> Result<Vec<RingElem>> {
    if !h.is_abelian() {
        return Err(Error::InvalidArgument("group is not abelian".into()));
    }
    let orders = h.element_orders();
    Ok(dedup(h.elements().flat_map(|u| {
        let orders = &orders;
        h.elements()
            .filter(move |&v| !(orders[u] == 4 && orders[v] == 4))
            .filter_map(move |v| square(h, u, v))
    })))
}

/// The ideal of F2[G × H] generated by `J`, `K` and all `1 + g + h + gh`.
pub fn product_ideal(
    g: &GroupTable,
    j: &[RingElem],
    h: &GroupTable,
    k: &[RingElem],
) -> Result<(GroupTable, Vec<RingElem>)> {
    let p = direct_product(g, h)?;
    let nh = h.order();
    let lift =
        |u: &RingElem, f: &dyn Fn(usize) -> usize| RingElem::from_support(p.order(), u.support().into_iter().map(f));
    let mut gens = Vec::new();
    for u in j {
        if u.order() != g.order() {
            return Err(Error::DimensionMismatch {
                expected: g.order(),
                got: u.order(),
            });
        }
        gens.push(lift(u, &|x| x * nh)?);
    }
    for u in k {
        if u.order() != nh {
            return Err(Error::DimensionMismatch {
                expected: nh,
                got: u.order(),
            });
        }
        gens.push(lift(u, &|y| y)?);
    }
    for x in g.elements() {
        for y in h.elements() {
            gens.extend(square(&p, x * nh, y));
        }
    }
    Ok((p, dedup(gens)))
}
