//! Re-checks every witness recorded in a certificate document.

use std::collections::HashSet;

use realize_core::engine::{UnitWitness, Verdict};
use realize_core::groupring::{apply_hom, ring_mul};
use realize_core::{Certificate, GroupHom, GroupTable, Ideal, RingElem};

use crate::report::{CertificateDoc, SCHEMA};
use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub ok: bool,
}

pub fn verify_document(text: &str) -> Result<Vec<Check>, CliError> {
    let doc: CertificateDoc = serde_json::from_str(text)?;
    if doc.schema != SCHEMA || doc.kind != "certificate" {
        return Err(CliError::Usage(format!(
            "expected a schema {SCHEMA} certificate, found schema {} kind `{}`",
            doc.schema, doc.kind
        )));
    }
    let g = doc.group.to_group()?;
    verify_certificate(&g, &doc.certificate)
}

pub fn verify_certificate(g: &GroupTable, c: &Certificate) -> Result<Vec<Check>, CliError> {
    let mut checks = Vec::new();
    let mut check = |name: String, ok: bool| checks.push(Check { name, ok });
    let n = g.order();
    if c.ideal_generators.iter().any(|w| w.order() != n) {
        return Err(CliError::Usage(
            "ideal generator length differs from the group order".into(),
        ));
    }
    let ideal = Ideal::generate(g, c.ideal_generators.clone())?;
    let one = RingElem::one(n);
    let congruent = |a: &RingElem, b: &RingElem| -> Result<bool, CliError> { Ok(ideal.contains(&a.add(b)?)?) };

    check(
        "fingerprint matches the table".into(),
        g.fingerprint() == c.group_fingerprint,
    );
    check(
        format!("ideal rank {} and quotient dim {}", c.ideal_rank, c.quotient_dim),
        ideal.rank() == c.ideal_rank && c.quotient_dim + c.ideal_rank == n,
    );

    match c.collision {
        Some((a, b)) => {
            let ok =
                a != b && a < n && b < n && congruent(&RingElem::group_element(n, a), &RingElem::group_element(n, b))?;
            check(
                format!("collision {} = {}", g.label(a.min(n - 1)), g.label(b.min(n - 1))),
                ok && !c.embeds,
            );
        }
        None => check("group elements stay distinct".into(), c.embeds && ideal.embeds()),
    }

    let unit_ok = |w: &UnitWitness| -> Result<bool, CliError> {
        if w.unit.order() != n || w.inverse.order() != n {
            return Ok(false);
        }
        let left = congruent(&ring_mul(g, &w.unit, &w.inverse)?, &one)?;
        let right = congruent(&ring_mul(g, &w.inverse, &w.unit)?, &one)?;
        let class = match w.element {
            Some(x) => x < n && congruent(&w.unit, &RingElem::group_element(n, x))?,
            None => {
                let mut hits = false;
                for x in g.elements() {
                    hits |= congruent(&w.unit, &RingElem::group_element(n, x))?;
                }
                !hits
            }
        };
        Ok(left && right && class)
    };

    if let Some(w) = &c.interloper {
        let ok = unit_ok(w)? && w.element.is_none() && !c.units_are_group;
        check(
            format!("interloper {} is a unit outside the group", w.unit.format(g)),
            ok,
        );
    }
    if !c.units.is_empty() {
        let mut all = true;
        for w in &c.units {
            all &= unit_ok(w)?;
        }
        check(format!("{} inverse witnesses multiply to 1", c.units.len()), all);
        let mut classes = HashSet::new();
        for w in &c.units {
            classes.insert(ideal.reduce(&w.unit)?);
        }
        check(
            format!("{} listed units are distinct and complete", c.unit_count),
            classes.len() == c.units.len() && c.units.len() == c.unit_count,
        );
        let in_group = c.units.iter().all(|w| w.element.is_some());
        check("units are the group as recorded".into(), in_group == c.units_are_group);
    }

    if let Some(v) = &c.violation {
        let ok = match GroupHom::new(g, g, v.endo.clone()) {
            Ok(f) => {
                c.ideal_generators.contains(&v.generator)
                    && apply_hom(&f, &v.generator) == v.image
                    && !ideal.contains(&v.image)?
            }
            Err(_) => false,
        };
        check(
            format!("endomorphism moves {} out of the ideal", v.generator.format(g)),
            ok && !c.invariant,
        );
    } else {
        check("no invariance witness claimed".into(), c.invariant);
    }

    let verdict_ok =
        c.verdict_consistent() && (c.verdict != Verdict::FullyRealizes || (c.units_are_group && c.unit_count == n));
    check(format!("verdict {} follows from the conditions", c.verdict), verdict_ok);
    Ok(checks)
}
