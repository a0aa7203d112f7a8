//! Realizability checks, the ideal constructions, refutation search and the
//! catalog of reference cases.

mod catalog;
mod certificate;
mod ideals;
mod matrices;
mod refute;

pub use catalog::{run_case, CaseReport, CASE_NAMES};
pub use certificate::{
    check_full, check_full_with, check_invariance, Certificate, CheckOptions, InvarianceViolation, UnitWitness,
    Verdict, UNIT_WITNESS_LIMIT,
};
pub use ideals::{
    c2c4_ideal, c4_ideal, c4_ideal_with_pairs, c6_ideal, centralizer_ideal, default_c3_basis, default_c4_basis,
    elementary_abelian_ideal, product_ideal, sdp_c3_ideal,
};
pub use matrices::{decomposition_matrices, verify_matrix_decomposition, MatrixReport};
pub use refute::{
    default_seeds, refute_full, refute_search, Branch, BranchOutcome, LeafReason, RefutationTree, RefuteOptions,
    RefuteOutcome,
};

use crate::groups::GroupTable;

/// Some `g` with order at least `min_order` whose centralizer is exactly `<g>`.
pub fn self_centralizing_witness(g: &GroupTable, min_order: usize) -> Option<usize> {
    g.elements()
        .find(|&x| g.element_order(x) >= min_order && g.centralizer(&[x]) == g.subgroup_generated(&[x]))
}
