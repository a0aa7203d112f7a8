//! The group and ideal recipe languages.
//!
//! Groups: `cyclic:n`, `dihedral:2n`, `quaternion:4n`, `product(expr,expr)`,
//! `sdp:KIND`, `iterate(KIND,depth)`, `file:path`.
//!
//! Ideals: `zero`, `elem`, `sdp-c3`, `sdp-c4`, `c6`, `centralizer:v,...`,
//! `gens:w;w;...`, `file:path`.

use std::path::Path;

use realize_core::engine::{
    c4_ideal, c6_ideal, centralizer_ideal, default_c3_basis, default_c4_basis, elementary_abelian_ideal, sdp_c3_ideal,
};
use realize_core::groups::{cyclic, dihedral, direct_product, iterated_action, module_action, quaternion};
use realize_core::{Error, GroupTable, ModuleKind, RingElem, Semidirect};

use crate::{read_file, CliError};

/// A group together with its semidirect structure when it has one.
#[derive(Clone, Debug)]
pub struct BuiltGroup {
    pub table: GroupTable,
    pub sdp: Option<Semidirect>,
}

pub fn build_group(expr: &str) -> Result<BuiltGroup, CliError> {
    let mut p = Parser { src: expr, pos: 0 };
    let g = p.group()?;
    p.skip_ws();
    if p.pos != expr.len() {
        return Err(p.error("unexpected trailing input").into());
    }
    Ok(g)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn expect(&mut self, c: char) -> Result<(), Error> {
        self.skip_ws();
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    fn ident(&mut self) -> &str {
        self.skip_ws();
        let start = self.pos;
        let len = self
            .rest()
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(self.rest().len());
        self.pos += len;
        &self.src[start..self.pos]
    }

    /// Text up to the next `,` or `)` at this nesting level.
    fn atom(&mut self) -> &str {
        let start = self.pos;
        let len = self.rest().find([',', ')']).unwrap_or(self.rest().len());
        self.pos += len;
        self.src[start..self.pos].trim()
    }

    fn number(&mut self) -> Result<usize, Error> {
        let at = self.pos;
        let text = self.atom();
        text.parse().map_err(|_| Error::Parse {
            pos: at,
            msg: format!("expected a number, found `{text}`"),
        })
    }

    fn kind(&mut self) -> Result<ModuleKind, Error> {
        let at = self.pos;
        self.atom().parse().map_err(|e: Error| match e {
            Error::Parse { msg, .. } => Error::Parse { pos: at, msg },
            other => other,
        })
    }

    fn group(&mut self) -> Result<BuiltGroup, CliError> {
        let at = self.pos;
        let name = self.ident().to_string();
        let plain = |table| BuiltGroup { table, sdp: None };
        match name.as_str() {
            "cyclic" | "dihedral" | "quaternion" => {
                self.expect(':')?;
                let n = self.number()?;
                let table = match name.as_str() {
                    "cyclic" => cyclic(n)?,
                    "dihedral" => dihedral(n)?,
                    _ => quaternion(n)?,
                };
                Ok(plain(table))
            }
            "sdp" => {
                self.expect(':')?;
                let s = Semidirect::new(module_action(self.kind()?)?)?;
                Ok(BuiltGroup {
                    table: s.group.clone(),
                    sdp: Some(s),
                })
            }
            "file" => {
                self.expect(':')?;
                let path = self.atom().to_string();
                let text = read_file(Path::new(&path))?;
                Ok(plain(GroupTable::from_text(&text)?))
            }
            "product" => {
                self.expect('(')?;
                let a = self.group()?;
                self.expect(',')?;
                let b = self.group()?;
                self.expect(')')?;
                Ok(plain(direct_product(&a.table, &b.table)?))
            }
            "iterate" => {
                self.expect('(')?;
                self.skip_ws();
                let kind = self.kind()?;
                self.expect(',')?;
                self.skip_ws();
                let depth = self.number()?;
                self.expect(')')?;
                let s = Semidirect::new(iterated_action(kind, depth)?)?;
                Ok(BuiltGroup {
                    table: s.group.clone(),
                    sdp: Some(s),
                })
            }
            "" => Err(Error::Parse {
                pos: at,
                msg: "expected a group expression".into(),
            }
            .into()),
            other => Err(Error::Parse {
                pos: at,
                msg: format!(
                    "unknown constructor `{other}`; expected cyclic, dihedral, quaternion, product, sdp, iterate or file"
                ),
            }
            .into()),
        }
    }
}

/// Generator list for an ideal recipe.
pub fn build_ideal(g: &BuiltGroup, recipe: &str) -> Result<Vec<RingElem>, CliError> {
    let recipe = recipe.trim();
    let (head, arg) = match recipe.split_once(':') {
        Some((h, a)) => (h.trim(), Some(a)),
        None => (recipe, None),
    };
    let t = &g.table;
    let need_sdp = || {
        g.sdp.as_ref().ok_or_else(|| {
            CliError::Usage(format!(
                "ideal `{head}` needs a group built with `sdp:` or `iterate(...)`"
            ))
        })
    };
    match (head, arg) {
        ("zero", None) => Ok(Vec::new()),
        ("elem", None) => Ok(elementary_abelian_ideal(t)),
        ("sdp-c3", None) => {
            let s = need_sdp()?;
            Ok(sdp_c3_ideal(s, &default_c3_basis(&s.action))?)
        }
        ("sdp-c4", None) => {
            let s = need_sdp()?;
            Ok(c4_ideal(s, &default_c4_basis(&s.action))?)
        }
        ("c6", None) => Ok(c6_ideal(need_sdp()?)?),
        ("centralizer", Some(list)) => {
            let v = list
                .split(',')
                .map(|w| parse_element(t, w.trim()))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(centralizer_ideal(t, &v)?)
        }
        ("gens", Some(list)) => parse_generators(t, list.split(';')),
        ("file", Some(path)) => {
            let text = read_file(Path::new(path.trim()))?;
            parse_generators(t, text.lines().filter(|l| !l.trim_start().starts_with('#')))
        }
        _ => Err(CliError::Usage(format!(
            "unknown ideal recipe `{recipe}`; expected zero, elem, sdp-c3, sdp-c4, c6, centralizer:..., gens:... or file:..."
        ))),
    }
}

fn parse_element(g: &GroupTable, text: &str) -> Result<usize, CliError> {
    if let Ok(i) = text.parse::<usize>() {
        if i < g.order() {
            return Ok(i);
        }
    }
    Ok(g.eval_word(text)?)
}

fn parse_generators<'a>(g: &GroupTable, items: impl Iterator<Item = &'a str>) -> Result<Vec<RingElem>, CliError> {
    items
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| RingElem::parse(g, s).map_err(CliError::from))
        .collect()
}
