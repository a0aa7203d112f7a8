//! Bounded search for a proof that no ideal fully realizes a group.
//!
//! If `I` fully realizes `G`, every unit of F2[G] is congruent to some group
//! element modulo `I`, and `I` is closed under every endomorphism. A node
//! holds an endomorphism-closed ideal `J ⊆ I`, picks a unit `w` of the
//! current quotient not yet congruent to a group element, and branches on
//! `w + g ∈ I` for each `g`. A branch dies when `G` no longer embeds.

use std::collections::HashMap;
use std::collections::HashSet;
use std::sync::Mutex;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::endos::{enumerate_endos_with_cap, monoid_generators, DEFAULT_ENDO_CAP};
use crate::error::{Error, Result};
use crate::gf2::Gf2Basis;
use crate::groupring::{is_unit_full_algebra, Ideal, QuotientRing, RingElem, DEFAULT_CAP_DIM};
use crate::groups::{GroupHom, GroupTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum LeafReason {
    /// The hypotheses alone identify two group elements.
    EmbedFail,
    /// Never produced: a quotient with too many units can still shrink.
    UnitsExceed,
    /// Closing the hypotheses under all endomorphisms identifies two group elements.
    InvarianceFail,
    /// The branch is still open at the depth limit.
    DepthExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BranchOutcome {
    Leaf {
        reason: LeafReason,
        /// Two elements identified modulo the branch ideal.
        collision: Option<(usize, usize)>,
        ideal_rank: usize,
    },
    Child(Box<RefutationTree>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Branch {
    /// The hypothesis is `root_unit + element ∈ I`.
    pub element: usize,
    pub outcome: BranchOutcome,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefutationTree {
    pub root_unit: RingElem,
    pub branches: Vec<Branch>,
}

impl RefutationTree {
    /// True when no leaf is [`LeafReason::DepthExhausted`].
    pub fn is_proof(&self) -> bool {
        self.branches.iter().all(|b| match &b.outcome {
            BranchOutcome::Leaf { reason, .. } => *reason != LeafReason::DepthExhausted,
            BranchOutcome::Child(t) => t.is_proof(),
        })
    }

    pub fn depth(&self) -> usize {
        1 + self
            .branches
            .iter()
            .map(|b| match &b.outcome {
                BranchOutcome::Child(t) => t.depth(),
                BranchOutcome::Leaf { .. } => 0,
            })
            .max()
            .unwrap_or(0)
    }

    pub fn leaf_count(&self) -> usize {
        self.branches
            .iter()
            .map(|b| match &b.outcome {
                BranchOutcome::Child(t) => t.leaf_count(),
                BranchOutcome::Leaf { .. } => 1,
            })
            .sum()
    }

    pub fn count_leaves(&self, reason: LeafReason) -> usize {
        self.branches
            .iter()
            .map(|b| match &b.outcome {
                BranchOutcome::Child(t) => t.count_leaves(reason),
                BranchOutcome::Leaf { reason: r, .. } => usize::from(*r == reason),
            })
            .sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RefuteOutcome {
    /// No ideal fully realizes the group.
    Proof(RefutationTree),
    /// An endomorphism-closed ideal (given by its basis) that fully realizes the group.
    Realized(Vec<RingElem>),
    /// Some branch stayed open.
    Inconclusive(Option<RefutationTree>),
}

#[derive(Clone, Copy, Debug)]
pub struct RefuteOptions {
    pub max_depth: usize,
    pub cap_dim: usize,
    pub endo_cap: usize,
}

impl Default for RefuteOptions {
    fn default() -> Self {
        RefuteOptions {
            max_depth: 2,
            cap_dim: DEFAULT_CAP_DIM,
            endo_cap: DEFAULT_ENDO_CAP,
        }
    }
}

/// Units `1 + g + h` of F2[G] with `0 < g < h`, in support order.
pub fn default_seeds(g: &GroupTable) -> Vec<RingElem> {
    let n = g.order();
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    pairs
        .into_par_iter()
        .filter_map(|(a, b)| {
            let u = RingElem::from_support(n, [0, a, b]).expect("indices in range");
            is_unit_full_algebra(g, &u).expect("matching order").then_some(u)
        })
        .collect()
}

/// A proof tree, or `None` when the search is inconclusive or finds a
/// fully realizing ideal.
pub fn refute_full(g: &GroupTable, seed_units: &[RingElem], max_depth: usize) -> Result<Option<RefutationTree>> {
    let opts = RefuteOptions {
        max_depth,
        ..RefuteOptions::default()
    };
    Ok(match refute_search(g, seed_units, opts)? {
        RefuteOutcome::Proof(t) => Some(t),
        _ => None,
    })
}

struct Ctx<'a> {
    g: &'a GroupTable,
    closure_maps: Vec<GroupHom>,
    seeds: Vec<RingElem>,
    cap_dim: usize,
    memo: Mutex<HashMap<(Gf2Basis, usize), RefuteOutcome>>,
}

pub fn refute_search(g: &GroupTable, seed_units: &[RingElem], opts: RefuteOptions) -> Result<RefuteOutcome> {
    if opts.max_depth == 0 {
        return Err(Error::InvalidArgument("search depth must be at least 1".into()));
    }
    for u in seed_units {
        if !is_unit_full_algebra(g, u)? {
            return Err(Error::InvalidArgument(format!("seed {} is not a unit", u.format(g))));
        }
    }
    let endos = enumerate_endos_with_cap(g, opts.endo_cap)?;
    let mut seeds = seed_units.to_vec();
    seeds.extend(default_seeds(g));
    let ctx = Ctx {
        g,
        closure_maps: monoid_generators(&endos),
        seeds,
        cap_dim: opts.cap_dim,
        memo: Mutex::new(HashMap::new()),
    };
    let root = Ideal::zero(g.order());
    if realizes(&ctx, &root) == Some(true) {
        return Ok(RefuteOutcome::Realized(Vec::new()));
    }
    node(&ctx, &root, &root, opts.max_depth)
}

/// Whether the quotient's units are exactly the image of `G`; `None` above the cap.
fn realizes(ctx: &Ctx, ideal: &Ideal) -> Option<bool> {
    if !ideal.embeds() {
        return Some(false);
    }
    let q = QuotientRing::new(ctx.g, ideal.clone()).ok()?;
    let census = q.unit_group(ctx.cap_dim).ok()?;
    Some(census.count() == ctx.g.order())
}

fn congruent_to_element(q: &QuotientRing, u: &RingElem, images: &HashSet<crate::gf2::Gf2Vec>) -> bool {
    images.contains(&q.coords(u).expect("matching order"))
}

/// A unit of the current quotient that is not yet a group element.
fn choose_seed(ctx: &Ctx, ideal: &Ideal) -> Result<Option<RingElem>> {
    let q = QuotientRing::new(ctx.g, ideal.clone())?;
    let images: HashSet<_> = ctx.g.elements().map(|x| q.element_coords(x).clone()).collect();
    if let Some(s) = ctx.seeds.iter().find(|s| !congruent_to_element(&q, s, &images)) {
        return Ok(Some(s.clone()));
    }
    // Every unit class of F2[G]/J stays a unit modulo any larger ideal.
    let Ok(census) = q.unit_group(ctx.cap_dim) else {
        return Ok(None);
    };
    for i in 0..census.count() {
        let c = census.coords(i);
        if !images.contains(&c) {
            return Ok(Some(q.from_coords(&c)?));
        }
    }
    Ok(None)
}

fn node(ctx: &Ctx, plain: &Ideal, closed: &Ideal, depth_left: usize) -> Result<RefuteOutcome> {
    let key = (closed.basis().clone(), depth_left);
    if let Some(r) = ctx.memo.lock().expect("memo lock").get(&key) {
        return Ok(r.clone());
    }
    let Some(seed) = choose_seed(ctx, closed)? else {
        return Ok(RefuteOutcome::Inconclusive(None));
    };
    let results: Vec<Result<(usize, BranchResult)>> = ctx
        .g
        .elements()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|x| {
            let w = seed.add(&RingElem::group_element(ctx.g.order(), x))?;
            branch(ctx, plain, closed, w, depth_left).map(|r| (x, r))
        })
        .collect();
    let mut branches = Vec::with_capacity(results.len());
    let mut open = false;
    for r in results {
        let (element, r) = r?;
        let outcome = match r {
            BranchResult::Realized(gens) => {
                let out = RefuteOutcome::Realized(gens);
                ctx.memo.lock().expect("memo lock").insert(key, out.clone());
                return Ok(out);
            }
            BranchResult::Outcome(o) => o,
        };
        open |= match &outcome {
            BranchOutcome::Leaf { reason, .. } => *reason == LeafReason::DepthExhausted,
            BranchOutcome::Child(t) => !t.is_proof(),
        };
        branches.push(Branch { element, outcome });
    }
    let tree = RefutationTree {
        root_unit: seed,
        branches,
    };
    let out = if open {
        RefuteOutcome::Inconclusive(Some(tree))
    } else {
        RefuteOutcome::Proof(tree)
    };
    ctx.memo.lock().expect("memo lock").insert(key, out.clone());
    Ok(out)
}

enum BranchResult {
    Realized(Vec<RingElem>),
    Outcome(BranchOutcome),
}

fn branch(ctx: &Ctx, plain: &Ideal, closed: &Ideal, w: RingElem, depth_left: usize) -> Result<BranchResult> {
    let plain = plain.extend(ctx.g, vec![w.clone()], &[])?;
    if let Some(c) = plain.embedding_collision() {
        return Ok(BranchResult::Outcome(BranchOutcome::Leaf {
            reason: LeafReason::EmbedFail,
            collision: Some(c),
            ideal_rank: plain.rank(),
        }));
    }
    let closed = closed.extend(ctx.g, vec![w], &ctx.closure_maps)?;
    if let Some(c) = closed.embedding_collision() {
        return Ok(BranchResult::Outcome(BranchOutcome::Leaf {
            reason: LeafReason::InvarianceFail,
            collision: Some(c),
            ideal_rank: closed.rank(),
        }));
    }
    if realizes(ctx, &closed) == Some(true) {
        let basis = closed
            .basis()
            .rows()
            .iter()
            .map(|r| RingElem::from_coeffs(r.clone()))
            .collect();
        return Ok(BranchResult::Realized(basis));
    }
    if depth_left <= 1 {
        return Ok(BranchResult::Outcome(BranchOutcome::Leaf {
            reason: LeafReason::DepthExhausted,
            collision: None,
            ideal_rank: closed.rank(),
        }));
    }
    Ok(match node(ctx, &plain, &closed, depth_left - 1)? {
        RefuteOutcome::Realized(gens) => BranchResult::Realized(gens),
        RefuteOutcome::Proof(t) | RefuteOutcome::Inconclusive(Some(t)) => {
            BranchResult::Outcome(BranchOutcome::Child(Box::new(t)))
        }
        RefuteOutcome::Inconclusive(None) => BranchResult::Outcome(BranchOutcome::Leaf {
            reason: LeafReason::DepthExhausted,
            collision: None,
            ideal_rank: closed.rank(),
        }),
    })
}
