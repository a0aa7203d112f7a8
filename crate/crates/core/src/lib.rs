//! Finite groups, group algebras over GF(2), and certificates for realizing a
//! group as the unit group of a quotient of its group algebra.

pub mod endos;
pub mod engine;
pub mod error;
pub mod gf2;
pub mod groupring;
pub mod groups;
pub mod labels;

pub use engine::{Certificate, RefutationTree, Verdict};
pub use error::{Error, Result};
pub use gf2::{Gf2Basis, Gf2Matrix, Gf2Vec};
pub use groupring::{Ideal, QuotientRing, RingElem, UnitCensus};
pub use groups::{Fingerprint, GroupAction, GroupHom, GroupTable, ModuleKind, Semidirect};
