//! Element labels as words in named generators, e.g. `x^2y` or `ab`.
//!
//! An atom is an ASCII letter optionally followed by digits (`a`, `a2`),
//! with an optional integer exponent (`x^3`, `y^-1`). The word `1` is empty.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word(pub Vec<(String, i64)>);

impl Word {
    pub fn parse(s: &str) -> Result<Word> {
        let s = s.trim();
        if s == "1" || s.is_empty() {
            return Ok(Word(Vec::new()));
        }
        let bytes = s.as_bytes();
        let mut atoms = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i];
            if !c.is_ascii_alphabetic() {
                return Err(Error::parse(
                    i,
                    format!("expected a generator letter, found {:?}", c as char),
                ));
            }
            let start = i;
            i += 1;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let name = s[start..i].to_string();
            let mut exp = 1i64;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let es = i;
                if i < bytes.len() && bytes[i] == b'-' {
                    i += 1;
                }
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                exp = s[es..i]
                    .parse()
                    .map_err(|_| Error::parse(es, "expected an integer exponent"))?;
            }
            atoms.push((name, exp));
        }
        Ok(Word(atoms))
    }

    pub fn atoms(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(|(n, _)| n.as_str())
    }

    pub fn render(&self) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        let mut out = String::new();
        for (name, exp) in &self.0 {
            out.push_str(name);
            if *exp != 1 {
                out.push('^');
                out.push_str(&exp.to_string());
            }
        }
        out
    }

    pub fn rename(&self, map: &dyn Fn(&str) -> String) -> Word {
        Word(self.0.iter().map(|(n, e)| (map(n), *e)).collect())
    }
}

/// Renders `g^k` for a named generator.
pub fn power_label(name: &str, k: usize) -> String {
    match k {
        0 => "1".to_string(),
        1 => name.to_string(),
        _ => format!("{name}^{k}"),
    }
}

/// Concatenates two labels, dropping identities.
pub fn concat(a: &str, b: &str) -> String {
    match (a, b) {
        ("1", _) => b.to_string(),
        (_, "1") => a.to_string(),
        _ => format!("{a}{b}"),
    }
}

pub(crate) fn atom_set(labels: &[String]) -> Option<BTreeSet<String>> {
    let mut out = BTreeSet::new();
    for l in labels {
        for a in Word::parse(l).ok()?.atoms() {
            out.insert(a.to_string());
        }
    }
    Some(out)
}

/// Renames atoms of `right` that collide with atoms of `left`, so that the
/// concatenated labels of a product stay unambiguous.
pub(crate) fn disjoint_labels(left: &[String], right: &[String]) -> Option<Vec<String>> {
    let la = atom_set(left)?;
    let ra = atom_set(right)?;
    let clashes: Vec<&String> = ra.intersection(&la).collect();
    if clashes.is_empty() {
        return Some(right.to_vec());
    }
    let mut used: BTreeSet<String> = la.union(&ra).cloned().collect();
    let mut renames = std::collections::BTreeMap::new();
    let mut pool = ('a'..='z').chain('A'..='Z').map(|c| c.to_string());
    for c in clashes {
        let fresh = loop {
            match pool.next() {
                Some(s) if !used.contains(&s) => break s,
                Some(_) => continue,
                None => return None,
            }
        };
        used.insert(fresh.clone());
        renames.insert(c.clone(), fresh);
    }
    right
        .iter()
        .map(|l| {
            let w = Word::parse(l).ok()?;
            Some(
                w.rename(&|n| renames.get(n).cloned().unwrap_or_else(|| n.to_string()))
                    .render(),
            )
        })
        .collect()
}
