//! Fixtures shared by the benchmarks.

use realize_core::engine::{c6_ideal, default_c3_basis, sdp_c3_ideal};
use realize_core::groups::{module_action, quaternion};
use realize_core::{GroupTable, ModuleKind, RingElem, Semidirect};

pub struct Fixture {
    pub name: &'static str,
    pub group: GroupTable,
    pub ideal: Vec<RingElem>,
}

pub fn q8() -> Fixture {
    let group = quaternion(8).expect("Q8 builds");
    let ideal = vec![RingElem::parse(&group, "1+x+y+xy").expect("generator parses")];
    Fixture {
        name: "Q8",
        group,
        ideal,
    }
}

pub fn a4() -> Fixture {
    let s = Semidirect::new(module_action(ModuleKind::YC3).expect("action")).expect("A4 builds");
    let ideal = sdp_c3_ideal(&s, &default_c3_basis(&s.action)).expect("ideal");
    Fixture {
        name: "A4",
        group: s.group,
        ideal,
    }
}

pub fn c2_a4() -> Fixture {
    let s = Semidirect::new(module_action(ModuleKind::YC6).expect("action")).expect("C2xA4 builds");
    let ideal = c6_ideal(&s).expect("ideal");
    Fixture {
        name: "C2xA4",
        group: s.group,
        ideal,
    }
}

pub fn sg_96_70() -> Fixture {
    let s = Semidirect::new(module_action(ModuleKind::YQC6).expect("action")).expect("group builds");
    let ideal = c6_ideal(&s).expect("ideal");
    Fixture {
        name: "SG_96_70",
        group: s.group,
        ideal,
    }
}

pub fn all() -> Vec<Fixture> {
    vec![q8(), a4(), c2_a4(), sg_96_70()]
}
