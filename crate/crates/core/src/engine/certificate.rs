use std::collections::HashSet;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::endos::{enumerate_endos_with_cap, DEFAULT_ENDO_CAP};
use crate::error::Result;
use crate::groupring::{apply_hom, Ideal, QuotientRing, RingElem, DEFAULT_CAP_DIM};
use crate::groups::{Fingerprint, GroupHom, GroupTable};

/// Units are listed with inverse witnesses only up to this count.
pub const UNIT_WITNESS_LIMIT: usize = 1024;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    FullyRealizes,
    RealizesNotInvariant,
    NotRealized,
    NotEmbedded,
}

impl Verdict {
    pub fn from_conditions(
        embeds: bool,
        units_are_group: bool,
        unit_count: usize,
        order: usize,
        invariant: bool,
    ) -> Self {
        if !embeds {
            Verdict::NotEmbedded
        } else if !(units_are_group && unit_count == order) {
            Verdict::NotRealized
        } else if !invariant {
            Verdict::RealizesNotInvariant
        } else {
            Verdict::FullyRealizes
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Verdict::FullyRealizes => "FULLY_REALIZES",
            Verdict::RealizesNotInvariant => "REALIZES_NOT_INVARIANT",
            Verdict::NotRealized => "NOT_REALIZED",
            Verdict::NotEmbedded => "NOT_EMBEDDED",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An endomorphism whose linear extension moves a generator out of the ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvarianceViolation {
    /// Full image table of the endomorphism.
    pub endo: Vec<usize>,
    pub generator: RingElem,
    /// The image of the generator, before reduction.
    pub image: RingElem,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitWitness {
    pub unit: RingElem,
    pub inverse: RingElem,
    /// The group element congruent to the unit, if any.
    pub element: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub group_fingerprint: Fingerprint,
    pub ideal_generators: Vec<RingElem>,
    pub ideal_rank: usize,
    pub quotient_dim: usize,
    pub embeds: bool,
    pub collision: Option<(usize, usize)>,
    pub unit_count: usize,
    pub units_are_group: bool,
    pub interloper: Option<UnitWitness>,
    pub invariant: bool,
    pub violation: Option<InvarianceViolation>,
    pub endo_count: usize,
    /// Every unit with its inverse, when there are at most [`UNIT_WITNESS_LIMIT`].
    pub units: Vec<UnitWitness>,
    pub verdict: Verdict,
}

impl Certificate {
    /// The verdict recomputed from the recorded conditions.
    pub fn verdict_consistent(&self) -> bool {
        self.verdict
            == Verdict::from_conditions(
                self.embeds,
                self.units_are_group,
                self.unit_count,
                self.group_fingerprint.order,
                self.invariant,
            )
    }
}

#[derive(Clone, Copy, Debug)]
pub struct CheckOptions {
    pub cap_dim: usize,
    pub endo_cap: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            cap_dim: DEFAULT_CAP_DIM,
            endo_cap: DEFAULT_ENDO_CAP,
        }
    }
}

/// The first `(endo, generator)` pair, in list order, whose image leaves the ideal.
pub fn check_invariance(ideal: &Ideal, endos: &[GroupHom]) -> Option<InvarianceViolation> {
    endos.iter().find_map(|f| {
        ideal.generators().iter().find_map(|w| {
            let image = apply_hom(f, w);
            let escapes = !ideal.contains(&image).expect("endomorphism preserves the order");
            escapes.then(|| InvarianceViolation {
                endo: f.image().to_vec(),
                generator: w.clone(),
                image,
            })
        })
    })
}

/// Builds the ideal generated by `gens` and checks all three conditions.
pub fn check_full(g: &GroupTable, gens: Vec<RingElem>) -> Result<Certificate> {
    let opts = CheckOptions::default();
    let endos = enumerate_endos_with_cap(g, opts.endo_cap)?;
    check_full_with(g, gens, &endos, opts)
}

/// As [`check_full`], reusing a precomputed endomorphism list.
pub fn check_full_with(
    g: &GroupTable,
    gens: Vec<RingElem>,
    endos: &[GroupHom],
    opts: CheckOptions,
) -> Result<Certificate> {
    let ideal = Ideal::generate(g, gens)?;
    let collision = ideal.embedding_collision();
    let q = QuotientRing::new(g, ideal)?;
    let census = q.unit_group(opts.cap_dim)?;

    let mut image_of: std::collections::HashMap<u64, usize> = std::collections::HashMap::new();
    for x in g.elements() {
        let w = q.element_coords(x).limbs().first().copied().unwrap_or(0);
        image_of.entry(w).or_insert(x);
    }
    let image_words: HashSet<u64> = image_of.keys().copied().collect();
    let first_interloper = census.words().iter().position(|w| !image_words.contains(w));
    let witness = |i: usize| -> Result<UnitWitness> {
        let unit = q.from_coords(&census.coords(i))?;
        let inverse = q.inverse(&unit)?.expect("census members are units");
        Ok(UnitWitness {
            element: image_of.get(&census.words()[i]).copied(),
            unit,
            inverse,
        })
    };
    let interloper = first_interloper.map(witness).transpose()?;
    let units = if census.count() <= UNIT_WITNESS_LIMIT {
        (0..census.count())
            .into_par_iter()
            .map(witness)
            .collect::<Result<Vec<_>>>()?
    } else {
        Vec::new()
    };

    let violation = check_invariance(q.ideal(), endos);
    let embeds = collision.is_none();
    let units_are_group = first_interloper.is_none();
    let invariant = violation.is_none();
    let verdict = Verdict::from_conditions(embeds, units_are_group, census.count(), g.order(), invariant);
    Ok(Certificate {
        group_fingerprint: g.fingerprint(),
        ideal_generators: q.ideal().generators().to_vec(),
        ideal_rank: q.ideal().rank(),
        quotient_dim: q.dim(),
        embeds,
        collision,
        unit_count: census.count(),
        units_are_group,
        interloper,
        invariant,
        violation,
        endo_count: endos.len(),
        units,
        verdict,
    })
}
