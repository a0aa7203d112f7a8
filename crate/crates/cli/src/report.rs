//! JSON documents and their plain-text renderings.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use realize_core::endos::find_generating_set;
use realize_core::engine::{BranchOutcome, CaseReport, LeafReason, UnitWitness};
use realize_core::{Certificate, Fingerprint, GroupTable, RefutationTree, RingElem};

pub const SCHEMA: u32 = 1;

/// A Cayley table as stored inside documents.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDoc {
    pub rows: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl TableDoc {
    pub fn from_group(g: &GroupTable) -> Self {
        TableDoc {
            rows: g.elements().map(|x| g.row(x).to_vec()).collect(),
            labels: g.labels().map(<[String]>::to_vec),
        }
    }

    pub fn to_group(&self) -> realize_core::Result<GroupTable> {
        GroupTable::from_rows(self.rows.clone(), self.labels.clone())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupDoc {
    pub schema: u32,
    pub kind: String,
    pub recipe: String,
    pub fingerprint: Fingerprint,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CertificateDoc {
    pub schema: u32,
    pub kind: String,
    pub group_recipe: String,
    pub ideal_recipe: String,
    pub group: TableDoc,
    pub certificate: Certificate,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RefutationDoc {
    pub schema: u32,
    pub kind: String,
    pub group_recipe: String,
    pub fingerprint: Fingerprint,
    pub max_depth: usize,
    /// `PROOF`, `INCONCLUSIVE` or `REALIZED`.
    pub outcome: String,
    pub tree: Option<RefutationTree>,
    /// Basis of a fully realizing ideal met during the search.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub realizing_basis: Vec<RingElem>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReproDoc {
    pub schema: u32,
    pub kind: String,
    pub passed: usize,
    pub total: usize,
    pub cases: Vec<CaseReport>,
}

pub fn fingerprint_text(f: &Fingerprint) -> String {
    let hist: Vec<String> = f.order_histogram.iter().map(|(o, c)| format!("{o}:{c}")).collect();
    format!(
        "order {}\nabelian {}\ncenter {}\nexponent {}\nelement orders {}\n",
        f.order,
        yes_no(f.abelian),
        f.center_size,
        f.exponent,
        hist.join(" ")
    )
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// `x->x, y->xy` on the generating set used by the enumerators.
pub fn endo_text(g: &GroupTable, image: &[usize]) -> String {
    find_generating_set(g)
        .gens()
        .iter()
        .map(|&s| format!("{}->{}", g.label(s), g.label(image[s])))
        .collect::<Vec<_>>()
        .join(", ")
}

fn unit_text(g: &GroupTable, w: &UnitWitness) -> String {
    let class = match w.element {
        Some(x) => format!(" = {}", g.label(x)),
        None => String::new(),
    };
    format!("{}{class} (inverse {})", w.unit.format(g), w.inverse.format(g))
}

pub fn certificate_text(g: &GroupTable, c: &Certificate, full: bool) -> String {
    let f = &c.group_fingerprint;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "group: order {}, {}, center {}, exponent {}",
        f.order,
        if f.abelian { "abelian" } else { "nonabelian" },
        f.center_size,
        f.exponent
    );
    let gens: Vec<String> = c.ideal_generators.iter().map(|w| w.format(g)).collect();
    let _ = writeln!(
        out,
        "ideal generators: {}",
        if gens.is_empty() {
            "none".into()
        } else {
            gens.join(", ")
        }
    );
    let _ = writeln!(out, "ideal rank {}, quotient dim {}", c.ideal_rank, c.quotient_dim);
    match c.collision {
        None => out.push_str("embeds: yes\n"),
        Some((a, b)) => {
            let _ = writeln!(out, "embeds: no ({} = {} in the quotient)", g.label(a), g.label(b));
        }
    }
    let _ = writeln!(out, "units: {}", c.unit_count);
    match &c.interloper {
        None => out.push_str("units are the group: yes\n"),
        Some(w) => {
            let _ = writeln!(out, "units are the group: no, e.g. {}", unit_text(g, w));
        }
    }
    let _ = writeln!(out, "endomorphisms: {}", c.endo_count);
    match &c.violation {
        None => out.push_str("invariant: yes\n"),
        Some(v) => {
            let _ = writeln!(
                out,
                "invariant: no, {} sends {} to {}, outside the ideal",
                endo_text(g, &v.endo),
                v.generator.format(g),
                v.image.format(g)
            );
        }
    }
    if full {
        for w in &c.units {
            let _ = writeln!(out, "  unit {}", unit_text(g, w));
        }
    }
    let _ = writeln!(out, "verdict: {}", c.verdict);
    out
}

pub fn tree_text(g: &GroupTable, t: &RefutationTree) -> String {
    let mut out = String::new();
    write_tree(g, t, 0, &mut out);
    out
}

fn write_tree(g: &GroupTable, t: &RefutationTree, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    let _ = writeln!(out, "{pad}unit {} must equal some group element", t.root_unit.format(g));
    for b in &t.branches {
        let _ = write!(out, "{pad}  = {}: ", g.label(b.element));
        match &b.outcome {
            BranchOutcome::Leaf { reason, collision, .. } => {
                let name = match reason {
                    LeafReason::EmbedFail => "EMBED_FAIL",
                    LeafReason::UnitsExceed => "UNITS_EXCEED",
                    LeafReason::InvarianceFail => "INVARIANCE_FAIL",
                    LeafReason::DepthExhausted => "DEPTH_EXHAUSTED",
                };
                match collision {
                    Some((x, y)) => {
                        let _ = writeln!(out, "{name} ({} = {})", g.label(*x), g.label(*y));
                    }
                    None => {
                        let _ = writeln!(out, "{name}");
                    }
                }
            }
            BranchOutcome::Child(child) => {
                out.push('\n');
                write_tree(g, child, indent + 2, out);
            }
        }
    }
}

pub fn case_line(r: &CaseReport) -> String {
    format!(
        "{} {:<18} expected {:<14} observed {:<14} {}",
        if r.passed { "PASS" } else { "FAIL" },
        r.name,
        r.expected,
        r.observed,
        r.detail
    )
}
