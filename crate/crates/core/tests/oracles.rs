mod common;

use std::collections::BTreeMap;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use realize_core::endos::{enumerate_autos, enumerate_endos};
use realize_core::engine::check_full;
use realize_core::gf2::{Gf2Matrix, Gf2Vec};
use realize_core::groups::{cyclic, dihedral, elementary_abelian, module_action, quaternion, ModuleKind, Semidirect};
use realize_core::{GroupTable, Ideal, QuotientRing};

use common::*;

fn random_matrix(rng: &mut StdRng, rows: usize, cols: usize) -> (Gf2Matrix, Vec<u32>) {
    let masks: Vec<u32> = (0..rows)
        .map(|_| rng.gen::<u32>() & ((1u64 << cols) - 1) as u32)
        .collect();
    let rows_v = masks.iter().map(|&m| Gf2Vec::from_word(cols, u64::from(m))).collect();
    (Gf2Matrix::from_rows(cols, rows_v).unwrap(), masks)
}

#[test]
fn rank_matches_naive_elimination() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..500 {
        let (r, c) = (rng.gen_range(1..=16), rng.gen_range(1..=16));
        let (m, masks) = random_matrix(&mut rng, r, c);
        assert_eq!(m.rank(), naive_rank(&masks));
    }
}

#[test]
fn sparse_rank_matches_naive_elimination() {
    let mut rng = StdRng::seed_from_u64(8);
    for _ in 0..300 {
        let c = rng.gen_range(2..=16);
        let masks: Vec<u32> = (0..rng.gen_range(1..=16))
            .map(|_| (1u32 << rng.gen_range(0..c)) | (1u32 << rng.gen_range(0..c)))
            .collect();
        let rows = masks.iter().map(|&m| Gf2Vec::from_word(c, u64::from(m))).collect();
        let m = Gf2Matrix::from_rows(c, rows).unwrap();
        assert_eq!(m.rank(), naive_rank(&masks));
    }
}

#[test]
fn solve_agrees_with_enumeration() {
    let mut rng = StdRng::seed_from_u64(9);
    for _ in 0..200 {
        let (r, c) = (rng.gen_range(1..=8), rng.gen_range(1..=8));
        let (m, _) = random_matrix(&mut rng, r, c);
        let b = Gf2Vec::from_word(r, rng.gen::<u64>() & ((1 << r) - 1));
        let solvable = (0..1u64 << c).any(|x| m.mul_vec(&Gf2Vec::from_word(c, x)).unwrap() == b);
        match m.solve(&b).unwrap() {
            Some(x) => assert_eq!(m.mul_vec(&x).unwrap(), b),
            None => assert!(!solvable),
        }
        assert_eq!(m.solve(&b).unwrap().is_some(), solvable);
    }
}

#[test]
fn ideal_closure_matches_all_multipliers() {
    let mut rng = StdRng::seed_from_u64(11);
    for (name, g) in small_groups() {
        let n = g.order();
        for _ in 0..6 {
            let k = rng.gen_range(1..=2);
            let gens: Vec<u32> = (0..k).map(|_| rng.gen::<u32>() & sigma(n)).collect();
            let ideal = Ideal::generate(&g, gens.iter().map(|&m| elem_of(n, m)).collect()).unwrap();
            let naive = naive_ideal(&g, &gens);
            assert_eq!(ideal.rank(), naive.rank(), "{name} {gens:?}");
            for row in ideal.basis().rows() {
                let m = row.to_indices().into_iter().fold(0u32, |a, i| a | 1 << i);
                assert!(naive.contains(m), "{name}");
            }
        }
    }
}

#[test]
fn endo_counts_match_naive_oracle() {
    for (name, g) in small_groups() {
        let endos = enumerate_endos(&g).unwrap();
        assert_eq!(endos.len(), naive_endo_count(&g), "{name}");
    }
}

#[test]
fn endo_counts_known_values() {
    for n in 1..=8 {
        assert_eq!(enumerate_endos(&cyclic(n).unwrap()).unwrap().len(), n);
    }
    assert_eq!(
        enumerate_endos(&elementary_abelian(&["a", "b"]).unwrap())
            .unwrap()
            .len(),
        16
    );
    assert_eq!(
        enumerate_endos(&elementary_abelian(&["a", "b", "c"]).unwrap())
            .unwrap()
            .len(),
        512
    );
    assert_eq!(enumerate_endos(&quaternion(8).unwrap()).unwrap().len(), 28);
    assert_eq!(enumerate_endos(&dihedral(6).unwrap()).unwrap().len(), 10);
    assert_eq!(enumerate_autos(&quaternion(8).unwrap()).unwrap().len(), 24);
    assert_eq!(enumerate_autos(&dihedral(8).unwrap()).unwrap().len(), 8);
    assert_eq!(
        enumerate_autos(&elementary_abelian(&["a", "b", "c"]).unwrap())
            .unwrap()
            .len(),
        168
    );
}

fn naive_is_unit(g: &GroupTable, ideal: &Echelon, q: &QuotientRing, u: u32) -> bool {
    (0..1u64 << q.dim()).any(|c| {
        let v = mask_of(&q.from_coords(&Gf2Vec::from_word(q.dim(), c)).unwrap());
        ideal.contains(naive_mul(g, u, v) ^ 1)
    })
}

fn quotient_with_dim_at_most(g: &GroupTable, rng: &mut StdRng, max_dim: usize) -> (QuotientRing, Echelon) {
    let n = g.order();
    let mut gens = Vec::new();
    loop {
        let ideal = naive_ideal(g, &gens);
        if n - ideal.rank() <= max_dim {
            let i = Ideal::generate(g, gens.iter().map(|&m| elem_of(n, m)).collect()).unwrap();
            return (QuotientRing::new(g, i).unwrap(), ideal);
        }
        gens.push(rng.gen::<u32>() & sigma(n));
    }
}

#[test]
fn unit_census_matches_exhaustive_inverse_search() {
    let mut rng = StdRng::seed_from_u64(13);
    for (name, g) in small_groups() {
        for _ in 0..2 {
            let (q, naive) = quotient_with_dim_at_most(&g, &mut rng, 8);
            let census = q.unit_group(22).unwrap();
            let mut count = 0;
            for c in 0..1u64 << q.dim() {
                let coords = Gf2Vec::from_word(q.dim(), c);
                let u = q.from_coords(&coords).unwrap();
                let unit = naive_is_unit(&g, &naive, &q, mask_of(&u));
                assert_eq!(q.is_unit(&u).unwrap(), unit, "{name}");
                assert_eq!(census.contains_coords(&coords), unit, "{name}");
                count += usize::from(unit);
            }
            assert_eq!(census.count(), count, "{name}");
        }
    }
}

#[test]
fn is_unit_matches_exhaustive_search_up_to_dim_ten() {
    let mut rng = StdRng::seed_from_u64(14);
    for (name, g) in small_groups().into_iter().filter(|(_, g)| g.order() >= 9) {
        let (q, naive) = quotient_with_dim_at_most(&g, &mut rng, 10);
        for _ in 0..24 {
            let u = q
                .canonical(&elem_of(g.order(), rng.gen::<u32>() & sigma(g.order())))
                .unwrap();
            assert_eq!(
                q.is_unit(&u).unwrap(),
                naive_is_unit(&g, &naive, &q, mask_of(&u)),
                "{name}"
            );
        }
    }
}

#[test]
fn inverse_witnesses_multiply_to_one() {
    let g = elementary_abelian(&["a", "b"]).unwrap();
    let c = check_full(&g, vec![elem_of(4, 0b1111)]).unwrap();
    let naive = naive_ideal(&g, &[0b1111]);
    assert_eq!(c.units.len(), 4);
    for w in &c.units {
        assert!(naive.contains(naive_mul(&g, mask_of(&w.unit), mask_of(&w.inverse)) ^ 1));
    }
}

fn histogram(pairs: &[(usize, usize)]) -> Vec<(usize, usize)> {
    pairs.iter().copied().collect::<BTreeMap<_, _>>().into_iter().collect()
}

fn phi(n: usize) -> usize {
    (1..=n).filter(|&k| gcd(k, n) == 1).count()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn fingerprints_match_formulas() {
    let s163 = Semidirect::new(module_action(ModuleKind::QC4).unwrap()).unwrap().group;
    let f = s163.fingerprint();
    assert_eq!(f.order_histogram, histogram(&[(1, 1), (2, 7), (4, 8)]));
    assert_eq!((f.center_size, f.exponent, f.abelian), (4, 4, false));

    let q8 = quaternion(8).unwrap().fingerprint();
    assert_eq!(q8.order_histogram, histogram(&[(1, 1), (2, 1), (4, 6)]));
    assert_eq!(q8.center_size, 2);

    let a4 = Semidirect::new(module_action(ModuleKind::YC3).unwrap()).unwrap().group;
    let f = a4.fingerprint();
    assert_eq!(f.order_histogram, histogram(&[(1, 1), (2, 3), (3, 8)]));
    assert_eq!(f.center_size, 1);

    for n in [3, 5, 7] {
        let f = dihedral(2 * n).unwrap().fingerprint();
        assert_eq!(f.order_histogram, histogram(&[(1, 1), (2, n), (n, n - 1)]));
        assert_eq!(f.center_size, 1);
    }
    for n in [4, 6, 8] {
        let f = dihedral(2 * n).unwrap().fingerprint();
        assert_eq!(f.center_size, 2);
        assert_eq!(f.order_histogram.iter().find(|p| p.0 == 2).unwrap().1, n + 1);
    }
    for n in 1..=12 {
        let f = cyclic(n).unwrap().fingerprint();
        let expected: Vec<(usize, usize)> = (1..=n).filter(|d| n % d == 0).map(|d| (d, phi(d))).collect();
        assert_eq!(f.order_histogram, expected);
        assert_eq!((f.center_size, f.exponent), (n, n));
    }
}
