//! One PASS/FAIL line per acceptance criterion.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use realize_core::endos::enumerate_endos;
use realize_core::engine::{
    c4_ideal, c6_ideal, check_full, default_c3_basis, default_c4_basis, elementary_abelian_ideal, refute_full,
    sdp_c3_ideal, self_centralizing_witness, verify_matrix_decomposition, MatrixReport,
};
use realize_core::gf2::Gf2Vec;
use realize_core::groupring::ring_mul;
use realize_core::groups::{cyclic, dihedral, elementary_abelian, module_action, quaternion, ModuleKind};
use realize_core::{Ideal, QuotientRing, RingElem, Semidirect, Verdict};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn timed(limit: Duration, pass: bool, detail: String, start: Instant) -> Outcome {
    let took = start.elapsed();
    outcome(
        pass && took < limit,
        format!("{detail} in {took:.2?} (limit {limit:?})"),
    )
}

fn c1() -> Outcome {
    let t = Instant::now();
    let g = elementary_abelian(&["a", "b"]).unwrap();
    let c = check_full(&g, elementary_abelian_ideal(&g)).unwrap();
    let pass = c.verdict == Verdict::FullyRealizes && c.unit_count == 4 && c.quotient_dim == 3;
    timed(
        Duration::from_secs(1),
        pass,
        format!("V4 {} units={} dim={}", c.verdict, c.unit_count, c.quotient_dim),
        t,
    )
}

fn c2() -> Outcome {
    let t = Instant::now();
    let g = quaternion(8).unwrap();
    let base = RingElem::parse(&g, "1+x+y").unwrap();
    let (x, y, xy) = (
        g.eval_word("x").unwrap(),
        g.eval_word("y").unwrap(),
        g.eval_word("xy").unwrap(),
    );
    let escaping = RingElem::parse(&g, "1+x+xy+x^2y").unwrap();
    let mut pass = true;
    let mut witness = false;
    for u in g.elements() {
        let w = base.add(&RingElem::group_element(8, u)).unwrap();
        let c = check_full(&g, vec![w]).unwrap();
        pass &= c.verdict != Verdict::FullyRealizes;
        if u == xy {
            witness = c.verdict == Verdict::RealizesNotInvariant
                && c.violation
                    .as_ref()
                    .is_some_and(|v| v.endo[x] == x && v.endo[y] == xy && v.image == escaping);
        }
    }
    timed(
        Duration::from_secs(5),
        pass && witness,
        format!("Q8 none fully, xy witness {witness}"),
        t,
    )
}

fn sdp(kind: ModuleKind) -> Semidirect {
    Semidirect::new(module_action(kind).unwrap()).unwrap()
}

fn c3() -> Outcome {
    let t = Instant::now();
    let s = sdp(ModuleKind::YC3);
    let c = check_full(&s.group, sdp_c3_ideal(&s, &default_c3_basis(&s.action)).unwrap()).unwrap();
    let pass = c.verdict == Verdict::FullyRealizes && c.unit_count == 12 && c.quotient_dim <= 6;
    timed(
        Duration::from_secs(5),
        pass,
        format!("A4 {} units={} dim={}", c.verdict, c.unit_count, c.quotient_dim),
        t,
    )
}

fn c4() -> Outcome {
    let t = Instant::now();
    let s = sdp(ModuleKind::QC4);
    let c = check_full(&s.group, c4_ideal(&s, &default_c4_basis(&s.action)).unwrap()).unwrap();
    let pass = c.embeds && c.unit_count == 16 && c.units_are_group && c.invariant;
    timed(
        Duration::from_secs(10),
        pass,
        format!(
            "(16,3) embeds={} units={} group={} invariant={}",
            c.embeds, c.unit_count, c.units_are_group, c.invariant
        ),
        t,
    )
}

fn c5() -> Outcome {
    let t = Instant::now();
    let s = sdp(ModuleKind::YQC6);
    let endos = enumerate_endos(&s.group).unwrap();
    let c = check_full(&s.group, c6_ideal(&s).unwrap()).unwrap();
    let pass = s.group.order() == 96
        && c.verdict == Verdict::FullyRealizes
        && c.unit_count == 96
        && c.quotient_dim <= 20
        && c.endo_count == endos.len();
    timed(
        Duration::from_secs(600),
        pass,
        format!(
            "(96,70) {} units={} dim={} endos={}",
            c.verdict,
            c.unit_count,
            c.quotient_dim,
            endos.len()
        ),
        t,
    )
}

fn c6() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for (name, kind) in [("C2xC6", ModuleKind::F2C6), ("C2xA4", ModuleKind::YC6)] {
        let t = Instant::now();
        let s = sdp(kind);
        let c = check_full(&s.group, c6_ideal(&s).unwrap()).unwrap();
        let took = t.elapsed();
        pass &= c.verdict == Verdict::FullyRealizes && took < Duration::from_secs(30);
        parts.push(format!("{name} {} in {took:.2?}", c.verdict));
    }
    outcome(pass, parts.join(", "))
}

fn c7() -> Outcome {
    let t = Instant::now();
    let g = sdp(ModuleKind::SC4).group;
    let Some(a) = self_centralizing_witness(&g, 8) else {
        return outcome(false, "no witness");
    };
    let centralizer: Vec<usize> = g.elements().filter(|&y| g.mul(a, y) == g.mul(y, a)).collect();
    let mut powers = vec![g.identity()];
    let mut p = a;
    while p != g.identity() {
        powers.push(p);
        p = g.mul(p, a);
    }
    powers.sort_unstable();
    let pass = g.order() == 64 && powers.len() >= 8 && centralizer == powers;
    timed(
        Duration::from_secs(10),
        pass,
        format!(
            "(64,32) witness {} of order {}, |C(a)|={}",
            g.label(a),
            powers.len(),
            centralizer.len()
        ),
        t,
    )
}

fn matrix_reports() -> Vec<MatrixReport> {
    (3..=10).map(|n| verify_matrix_decomposition(n).unwrap()).collect()
}

fn c8() -> Outcome {
    let t = Instant::now();
    let reports = matrix_reports();
    let failing: Vec<String> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| format!("n={} rank(A)={} rank(B)={}", r.n, r.rank_a, r.rank_b))
        .collect();
    let detail = if failing.is_empty() {
        "all n in 3..=10 hold".to_string()
    } else {
        format!("fails: {}", failing.join("; "))
    };
    timed(Duration::from_secs(1), failing.is_empty(), detail, t)
}

/// The even-size block as printed has two equal rows, so `A` loses exactly
/// one rank for every even `n` and nothing else goes wrong.
fn c8_failure_is_the_known_one() -> bool {
    matrix_reports().iter().all(|r| {
        let even_signature = r.sum_is_identity && !r.product_is_identity && r.rank_a == r.n - 1 && r.rank_b == r.n;
        if r.n % 2 == 0 {
            even_signature
        } else {
            r.passed()
        }
    })
}

fn c9() -> Outcome {
    let q8 = quaternion(8).unwrap();
    let seed = RingElem::parse(&q8, "1+x+y").unwrap();
    let q8_proof = refute_full(&q8, &[seed], 1).unwrap().is_some_and(|t| t.is_proof());
    let d8_proof = refute_full(&dihedral(8).unwrap(), &[], 2)
        .unwrap()
        .is_some_and(|t| t.is_proof());
    let sound = [
        elementary_abelian(&["a", "b"]).unwrap(),
        cyclic(3).unwrap(),
        cyclic(4).unwrap(),
        sdp(ModuleKind::YC3).group,
    ]
    .iter()
    .all(|g| (1..=3).all(|d| refute_full(g, &[], d).unwrap().is_none()));
    outcome(
        q8_proof && d8_proof && sound,
        format!("Q8 depth 1 {q8_proof}, D8 {d8_proof}, no refutation of V4/C3/C4/A4 up to depth 3 {sound}"),
    )
}

fn c10() -> Outcome {
    let t = Instant::now();
    let mut rng = StdRng::seed_from_u64(10);
    let groups = small_groups();
    let mut failures = 0usize;

    for _ in 0..50 {
        let (_, g) = &groups[rng.gen_range(0..groups.len())];
        let n = g.order();
        let gens: Vec<u32> = (0..rng.gen_range(1..=2)).map(|_| rng.gen::<u32>() & sigma(n)).collect();
        let ideal = Ideal::generate(g, gens.iter().map(|&m| elem_of(n, m)).collect()).unwrap();
        let naive = naive_ideal(g, &gens);
        failures += usize::from(ideal.audit(g).is_some() || ideal.rank() != naive.rank());
    }

    for (_, g) in &groups {
        let n = g.order();
        let mut gens = Vec::new();
        let mut naive = naive_ideal(g, &gens);
        while n - naive.rank() > 10 {
            gens.push(rng.gen::<u32>() & sigma(n));
            naive = naive_ideal(g, &gens);
        }
        let q = QuotientRing::new(
            g,
            Ideal::generate(g, gens.iter().map(|&m| elem_of(n, m)).collect()).unwrap(),
        )
        .unwrap();
        let reps: Vec<u32> = (0..1u64 << q.dim())
            .map(|c| mask_of(&q.from_coords(&Gf2Vec::from_word(q.dim(), c)).unwrap()))
            .collect();
        for _ in 0..8 {
            let u = reps[rng.gen_range(0..reps.len())];
            let unit = reps.iter().any(|&v| naive.contains(naive_mul(g, u, v) ^ 1));
            failures += usize::from(q.is_unit(&elem_of(n, u)).unwrap() != unit);
        }
        failures += usize::from(enumerate_endos(g).unwrap().len() != naive_endo_count(g));
        for _ in 0..50 {
            let [a, b, c] = [(); 3].map(|_| q.canonical(&elem_of(n, rng.gen::<u32>() & sigma(n))).unwrap());
            let lhs = q.mul(&q.mul(&a, &b).unwrap(), &c).unwrap();
            let rhs = q.mul(&a, &q.mul(&b, &c).unwrap()).unwrap();
            failures += usize::from(lhs != rhs);
        }
    }

    for _ in 0..1000 {
        let (_, g) = &groups[rng.gen_range(0..groups.len())];
        let n = g.order();
        let u = elem_of(n, rng.gen::<u32>() & sigma(n));
        let v = elem_of(n, rng.gen::<u32>() & sigma(n));
        let uv = ring_mul(g, &u, &v).unwrap();
        failures += usize::from(uv.augmentation() != (u.augmentation() & v.augmentation()));
    }

    for k in (1..=9).step_by(2) {
        let d = dihedral(2 * k).unwrap();
        let s = elem_of(2 * k, sigma(k));
        failures += usize::from(ring_mul(&d, &s, &s).unwrap() != s);
        for x in d.elements() {
            let gx = RingElem::group_element(2 * k, x);
            failures += usize::from(ring_mul(&d, &gx, &s).unwrap() != ring_mul(&d, &s, &gx).unwrap());
        }
    }

    outcome(
        failures == 0,
        format!("{failures} property failures in {:.2?}", t.elapsed()),
    )
}

fn main() -> ExitCode {
    let criteria: [(usize, fn() -> Outcome); 10] = [
        (1, c1),
        (2, c2),
        (3, c3),
        (4, c4),
        (5, c5),
        (6, c6),
        (7, c7),
        (8, c8),
        (9, c9),
        (10, c10),
    ];
    let mut unexpected = Vec::new();
    for (i, f) in criteria {
        let o = f();
        println!("{} criterion {i}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        let known = i == 8 && c8_failure_is_the_known_one();
        if !o.pass && !known {
            unexpected.push(i);
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: no failures beyond criterion 8 (singular even-size block)");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected failures {unexpected:?}");
        ExitCode::FAILURE
    }
}
