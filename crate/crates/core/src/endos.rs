//! Homomorphisms between Cayley-table groups by generator-image backtracking.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::groups::{GroupHom, GroupTable};

/// Default largest group order accepted by the enumerators.
pub const DEFAULT_ENDO_CAP: usize = 128;

/// A generating set with a spanning tree of the Cayley graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratingSet {
    gens: Vec<usize>,
    /// Every non-identity element in the order it was reached, tagged with
    /// `(parent, generator position)` so that `element = parent * gens[pos]`.
    closure_order: Vec<(usize, usize, usize)>,
}

impl GeneratingSet {
    /// Builds the set from explicit generators; fails if they do not generate.
    pub fn from_gens(g: &GroupTable, gens: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = gens.iter().find(|&&s| s >= g.order()) {
            return Err(Error::InvalidArgument(format!("generator {bad} outside the group")));
        }
        let mut parent = vec![None; g.order()];
        parent[0] = Some((0, usize::MAX));
        let mut closure_order = Vec::with_capacity(g.order());
        let mut head = 0;
        let mut queue = vec![0];
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for (pos, &s) in gens.iter().enumerate() {
                let y = g.mul(x, s);
                if parent[y].is_none() {
                    parent[y] = Some((x, pos));
                    closure_order.push((y, x, pos));
                    queue.push(y);
                }
            }
        }
        if queue.len() != g.order() {
            return Err(Error::InvalidArgument(format!(
                "generators reach {} of {} elements",
                queue.len(),
                g.order()
            )));
        }
        Ok(GeneratingSet { gens, closure_order })
    }

    pub fn gens(&self) -> &[usize] {
        &self.gens
    }

    pub fn closure_order(&self) -> &[(usize, usize, usize)] {
        &self.closure_order
    }

    /// Propagates generator images along the spanning tree. The result is a
    /// homomorphism only if the images satisfy every relation.
    fn propagate(&self, codomain: &GroupTable, images: &[usize], out: &mut [usize]) {
        out[0] = 0;
        for &(y, x, pos) in &self.closure_order {
            out[y] = codomain.mul(out[x], images[pos]);
        }
    }
}

/// Repeatedly adds the element of largest order (smallest index on ties) not
/// yet in the generated subgroup.
pub fn find_generating_set(g: &GroupTable) -> GeneratingSet {
    let orders = g.element_orders();
    let mut by_order: Vec<usize> = g.elements().collect();
    by_order.sort_by_key(|&x| (std::cmp::Reverse(orders[x]), x));
    let mut gens = Vec::new();
    let mut member = vec![false; g.order()];
    member[0] = true;
    for x in by_order {
        if member[x] {
            continue;
        }
        gens.push(x);
        for y in g.subgroup_generated(&gens) {
            member[y] = true;
        }
    }
    GeneratingSet::from_gens(g, gens).expect("greedy set generates")
}

fn images_respect_generators(
    domain: &GroupTable,
    codomain: &GroupTable,
    gs: &GeneratingSet,
    table: &[usize],
    images: &[usize],
) -> bool {
    domain.elements().all(|x| {
        gs.gens
            .iter()
            .zip(images)
            .all(|(&s, &t)| table[domain.mul(x, s)] == codomain.mul(table[x], t))
    })
}

fn respects_all_products(domain: &GroupTable, codomain: &GroupTable, table: &[usize]) -> bool {
    domain.elements().all(|x| {
        domain
            .elements()
            .all(|y| table[domain.mul(x, y)] == codomain.mul(table[x], table[y]))
    })
}

/// The homomorphism with the given generator images, if one exists.
pub fn extend_hom(
    domain: &GroupTable,
    gs: &GeneratingSet,
    codomain: &GroupTable,
    images: &[usize],
) -> Result<Option<GroupHom>> {
    if images.len() != gs.gens.len() {
        return Err(Error::DimensionMismatch {
            expected: gs.gens.len(),
            got: images.len(),
        });
    }
    if let Some(&bad) = images.iter().find(|&&t| t >= codomain.order()) {
        return Err(Error::InvalidArgument(format!("image {bad} outside the codomain")));
    }
    let mut table = vec![0; domain.order()];
    gs.propagate(codomain, images, &mut table);
    if respects_all_products(domain, codomain, &table) {
        Ok(Some(GroupHom::new_unchecked(table, codomain.order())))
    } else {
        Ok(None)
    }
}

fn check_cap(g: &GroupTable, cap: usize) -> Result<()> {
    if g.order() > cap {
        return Err(Error::CapExceeded {
            what: "group order",
            size: g.order(),
            cap,
        });
    }
    Ok(())
}

/// All homomorphisms `domain -> codomain`, lexicographic in generator images.
pub fn enumerate_homs(domain: &GroupTable, codomain: &GroupTable, cap: usize) -> Result<Vec<GroupHom>> {
    check_cap(domain, cap)?;
    check_cap(codomain, cap)?;
    let gs = find_generating_set(domain);
    let cod_orders = codomain.element_orders();
    let candidates: Vec<Vec<usize>> = gs
        .gens
        .iter()
        .map(|&s| {
            let k = domain.element_order(s);
            codomain
                .elements()
                .filter(|&t| k.is_multiple_of(cod_orders[t]))
                .collect()
        })
        .collect();
    if gs.gens.is_empty() {
        return Ok(vec![GroupHom::trivial(domain, codomain)]);
    }
    let homs = candidates[0]
        .par_iter()
        .map(|&first| {
            let mut found = Vec::new();
            let mut images = vec![first; gs.gens.len()];
            let mut table = vec![0; domain.order()];
            search(
                domain,
                codomain,
                &gs,
                &candidates,
                1,
                &mut images,
                &mut table,
                &mut found,
            );
            found
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    Ok(homs)
}

#[allow(clippy::too_many_arguments)]
fn search(
    domain: &GroupTable,
    codomain: &GroupTable,
    gs: &GeneratingSet,
    candidates: &[Vec<usize>],
    depth: usize,
    images: &mut Vec<usize>,
    table: &mut Vec<usize>,
    found: &mut Vec<GroupHom>,
) {
    if depth == images.len() {
        gs.propagate(codomain, images, table);
        if images_respect_generators(domain, codomain, gs, table, images) {
            debug_assert!(respects_all_products(domain, codomain, table));
            found.push(GroupHom::new_unchecked(table.clone(), codomain.order()));
        }
        return;
    }
    for &t in &candidates[depth] {
        images[depth] = t;
        search(domain, codomain, gs, candidates, depth + 1, images, table, found);
    }
}

pub fn enumerate_endos(g: &GroupTable) -> Result<Vec<GroupHom>> {
    enumerate_endos_with_cap(g, DEFAULT_ENDO_CAP)
}

/// Every endomorphism of `g`, verified against all `|G|^2` products.
pub fn enumerate_endos_with_cap(g: &GroupTable, cap: usize) -> Result<Vec<GroupHom>> {
    let endos = enumerate_homs(g, g, cap)?;
    let bad = endos
        .par_iter()
        .position_any(|f| !respects_all_products(g, g, f.image()));
    if let Some(i) = bad {
        return Err(Error::InvalidHom(format!(
            "candidate {i} passed the generator check only"
        )));
    }
    Ok(endos)
}

pub fn enumerate_autos(g: &GroupTable) -> Result<Vec<GroupHom>> {
    Ok(enumerate_endos(g)?.into_iter().filter(GroupHom::is_bijective).collect())
}

/// A small subset of `endos` whose compositions give every member.
pub fn monoid_generators(endos: &[GroupHom]) -> Vec<GroupHom> {
    use std::collections::HashSet;
    let Some(first) = endos.first() else {
        return Vec::new();
    };
    let n = first.domain_order();
    let id: Vec<usize> = (0..n).collect();
    let mut reached: HashSet<Vec<usize>> = HashSet::from([id.clone()]);
    let mut frontier = vec![id];
    let mut gens: Vec<GroupHom> = Vec::new();
    // bijections first: they generate the unit group of the monoid cheaply
    let mut order: Vec<&GroupHom> = endos.iter().filter(|f| f.is_bijective()).collect();
    order.extend(endos.iter().filter(|f| !f.is_bijective()));
    for f in order {
        if reached.contains(f.image()) {
            continue;
        }
        gens.push(f.clone());
        // everything reached so far composed with the new generator
        frontier.extend(reached.iter().cloned());
        while let Some(x) = frontier.pop() {
            for s in &gens {
                let y: Vec<usize> = x.iter().map(|&i| s.apply(i)).collect();
                if reached.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        if reached.len() == endos.len() {
            break;
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{cyclic, direct_product, quaternion};

    #[test]
    fn generating_sets() {
        assert_eq!(find_generating_set(&cyclic(12).unwrap()).gens().len(), 1);
        let c2 = cyclic(2).unwrap();
        let v4 = direct_product(&c2, &c2).unwrap();
        assert_eq!(find_generating_set(&v4).gens().len(), 2);
        let q8 = quaternion(8).unwrap();
        let gs = find_generating_set(&q8);
        let names: Vec<String> = gs.gens().iter().map(|&g| q8.label(g)).collect();
        assert_eq!(names, vec!["x", "y"]);
        assert_eq!(gs.closure_order().len(), 7);
        assert!(GeneratingSet::from_gens(&q8, vec![1]).is_err());
    }

    #[test]
    fn extend_examples() {
        let q8 = quaternion(8).unwrap();
        let gs = find_generating_set(&q8);
        let triv = extend_hom(&q8, &gs, &q8, &[0, 0]).unwrap().unwrap();
        assert_eq!(triv.image(), &[0; 8]);
        let x = q8.eval_word("x").unwrap();
        let xy = q8.eval_word("xy").unwrap();
        let f = extend_hom(&q8, &gs, &q8, &[x, xy]).unwrap().unwrap();
        assert_eq!(f.apply(q8.eval_word("y").unwrap()), xy);
        assert!(extend_hom(&q8, &gs, &q8, &[x]).is_err());

        let c4 = cyclic(4).unwrap();
        let c6 = cyclic(6).unwrap();
        let gs = find_generating_set(&c4);
        assert!(extend_hom(&c4, &gs, &c6, &[2]).unwrap().is_none());
    }

    #[test]
    fn endo_counts() {
        assert_eq!(enumerate_endos(&cyclic(2).unwrap()).unwrap().len(), 2);
        let c2 = cyclic(2).unwrap();
        let v4 = direct_product(&c2, &c2).unwrap();
        assert_eq!(enumerate_endos(&v4).unwrap().len(), 16);
        assert_eq!(enumerate_autos(&v4).unwrap().len(), 6);
        assert_eq!(enumerate_autos(&cyclic(1).unwrap()).unwrap().len(), 1);
        assert_eq!(enumerate_endos(&cyclic(12).unwrap()).unwrap().len(), 12);
    }

    #[test]
    fn cap_is_enforced() {
        let g = cyclic(130).unwrap();
        let err = enumerate_endos(&g).unwrap_err();
        assert!(err.is_resource());
        assert_eq!(enumerate_endos_with_cap(&g, 200).unwrap().len(), 130);
    }

    #[test]
    fn lexicographic_order() {
        let q8 = quaternion(8).unwrap();
        let gs = find_generating_set(&q8);
        let endos = enumerate_endos(&q8).unwrap();
        let keys: Vec<Vec<usize>> = endos
            .iter()
            .map(|f| gs.gens().iter().map(|&s| f.apply(s)).collect())
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn monoid_generators_reach_everything() {
        let q8 = quaternion(8).unwrap();
        let endos = enumerate_endos(&q8).unwrap();
        let gens = monoid_generators(&endos);
        assert!(gens.len() < endos.len());
        let mut reached = std::collections::HashSet::new();
        let mut stack = vec![GroupHom::identity(&q8)];
        while let Some(f) = stack.pop() {
            if reached.insert(f.image().to_vec()) {
                for s in &gens {
                    stack.push(s.compose(&f).unwrap());
                }
            }
        }
        assert_eq!(reached.len(), endos.len());
    }
}
