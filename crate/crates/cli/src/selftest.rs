//! Seeded randomized checks of the algebraic invariants.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use realize_core::engine::check_full;
use realize_core::gf2::Gf2Vec;
use realize_core::groupring::ring_mul;
use realize_core::groups::{cyclic, dihedral, module_action, quaternion};
use realize_core::{GroupTable, Ideal, ModuleKind, QuotientRing, RingElem, Semidirect};

use crate::verify::verify_certificate;
use crate::CliError;

#[derive(Clone, Debug)]
pub struct PropertyResult {
    pub name: &'static str,
    pub trials: usize,
    pub failures: usize,
}

fn groups() -> Result<Vec<GroupTable>, CliError> {
    Ok(vec![
        cyclic(6)?,
        dihedral(8)?,
        quaternion(8)?,
        dihedral(10)?,
        Semidirect::new(module_action(ModuleKind::YC3)?)?.group,
        Semidirect::new(module_action(ModuleKind::QC4)?)?.group,
    ])
}

fn random_elem(rng: &mut StdRng, n: usize) -> RingElem {
    RingElem::from_support(n, (0..n).filter(|_| rng.gen_bool(0.5))).expect("indices in range")
}

pub fn run(seed: u64, cases: usize) -> Result<Vec<PropertyResult>, CliError> {
    let mut rng = StdRng::seed_from_u64(seed);
    let groups = groups()?;
    let mut results = Vec::new();
    let pick = |rng: &mut StdRng| groups[rng.gen_range(0..groups.len())].clone();

    let mut failures = 0;
    for _ in 0..cases {
        let g = pick(&mut rng);
        let n = g.order();
        let [a, b, c] = [(); 3].map(|_| random_elem(&mut rng, n));
        let ab_c = ring_mul(&g, &ring_mul(&g, &a, &b)?, &c)?;
        let a_bc = ring_mul(&g, &a, &ring_mul(&g, &b, &c)?)?;
        let dist = ring_mul(&g, &a, &b.add(&c)?)? == ring_mul(&g, &a, &b)?.add(&ring_mul(&g, &a, &c)?)?;
        failures += usize::from(ab_c != a_bc || !dist);
    }
    results.push(PropertyResult {
        name: "ring multiplication is associative and distributive",
        trials: cases,
        failures,
    });

    let mut failures = 0;
    for _ in 0..cases {
        let g = pick(&mut rng);
        let n = g.order();
        let (a, b) = (random_elem(&mut rng, n), random_elem(&mut rng, n));
        failures += usize::from(ring_mul(&g, &a, &b)?.augmentation() != (a.augmentation() & b.augmentation()));
    }
    results.push(PropertyResult {
        name: "augmentation is multiplicative",
        trials: cases,
        failures,
    });

    let mut failures = 0;
    for _ in 0..cases {
        let g = pick(&mut rng);
        let ideal = Ideal::generate(&g, vec![random_elem(&mut rng, g.order())])?;
        failures += usize::from(ideal.audit(&g).is_some());
    }
    results.push(PropertyResult {
        name: "ideal closure is two-sided",
        trials: cases,
        failures,
    });

    let mut failures = 0;
    let mut trials = 0;
    for _ in 0..cases.div_ceil(10) {
        let g = pick(&mut rng);
        let n = g.order();
        let mut gens = Vec::new();
        let q = loop {
            gens.push(random_elem(&mut rng, n));
            let q = QuotientRing::new(&g, Ideal::generate(&g, gens.clone())?)?;
            if q.dim() <= 10 {
                break q;
            }
        };
        let census = q.unit_group(10)?;
        for c in 0..1u64 << q.dim() {
            let coords = Gf2Vec::from_word(q.dim(), c);
            let u = q.from_coords(&coords)?;
            trials += 1;
            failures += usize::from(q.is_unit(&u)? != census.contains_coords(&coords));
        }
    }
    results.push(PropertyResult {
        name: "unit census agrees with inverse solving",
        trials,
        failures,
    });

    let mut failures = 0;
    let trials = cases.div_ceil(10);
    for _ in 0..trials {
        let g = pick(&mut rng);
        let cert = check_full(&g, vec![random_elem(&mut rng, g.order())])?;
        let ok = cert.verdict_consistent() && verify_certificate(&g, &cert)?.iter().all(|c| c.ok);
        failures += usize::from(!ok);
    }
    results.push(PropertyResult {
        name: "certificates re-verify",
        trials,
        failures,
    });
    Ok(results)
}
