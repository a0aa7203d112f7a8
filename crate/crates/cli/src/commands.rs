use std::path::Path;

use serde::Serialize;

use realize_core::endos::enumerate_endos_with_cap;
use realize_core::engine::{
    check_full_with, refute_search, run_case, CaseReport, CheckOptions, RefuteOptions, RefuteOutcome, Verdict,
    CASE_NAMES,
};
use realize_core::groupring::DEFAULT_CAP_DIM;
use realize_core::RingElem;

use crate::recipe::{build_group, build_ideal};
use crate::report::{
    case_line, certificate_text, fingerprint_text, tree_text, CertificateDoc, GroupDoc, RefutationDoc, ReproDoc,
    TableDoc, SCHEMA,
};
use crate::verify::verify_document;
use crate::{exit, read_file, selftest, write_file, CliError};

/// Output switches shared by the subcommands.
#[derive(Clone, Debug, Default)]
pub struct Output {
    pub json: bool,
    pub out: Option<std::path::PathBuf>,
}

impl Output {
    fn emit<T: Serialize>(&self, doc: &T, text: impl FnOnce() -> String) -> Result<(), CliError> {
        let json = serde_json::to_string_pretty(doc)?;
        if let Some(path) = &self.out {
            write_file(path, &json)?;
        }
        if self.json {
            println!("{json}");
        } else {
            print!("{}", text());
        }
        Ok(())
    }
}

pub fn group(expr: &str, info: bool, out: Option<&Path>, json: bool) -> Result<u8, CliError> {
    let g = build_group(expr)?.table;
    if let Some(path) = out {
        write_file(path, &g.to_text())?;
    }
    if json {
        let doc = GroupDoc {
            schema: SCHEMA,
            kind: "group".into(),
            recipe: expr.into(),
            fingerprint: g.fingerprint(),
        };
        println!("{}", serde_json::to_string_pretty(&doc)?);
    } else if info {
        print!("{}", fingerprint_text(&g.fingerprint()));
    } else if out.is_none() {
        print!("{}", g.to_text());
    }
    Ok(exit::OK)
}

pub struct CheckArgs<'a> {
    pub group: &'a str,
    pub ideal: &'a str,
    pub full: bool,
    pub cap_dim: usize,
}

pub fn check(args: CheckArgs, output: &Output) -> Result<u8, CliError> {
    let g = build_group(args.group)?;
    let gens = build_ideal(&g, args.ideal)?;
    let opts = CheckOptions {
        cap_dim: args.cap_dim,
        ..CheckOptions::default()
    };
    let endos = enumerate_endos_with_cap(&g.table, opts.endo_cap)?;
    let cert = check_full_with(&g.table, gens, &endos, opts)?;
    let code = if cert.verdict == Verdict::FullyRealizes {
        exit::OK
    } else {
        exit::NEGATIVE
    };
    let text = || certificate_text(&g.table, &cert, args.full);
    let doc = CertificateDoc {
        schema: SCHEMA,
        kind: "certificate".into(),
        group_recipe: args.group.into(),
        ideal_recipe: args.ideal.into(),
        group: TableDoc::from_group(&g.table),
        certificate: cert.clone(),
    };
    output.emit(&doc, text)?;
    Ok(code)
}

pub struct RefuteArgs<'a> {
    pub group: &'a str,
    pub depth: usize,
    pub units: &'a [String],
    pub cap_dim: usize,
}

pub fn refute(args: RefuteArgs, output: &Output) -> Result<u8, CliError> {
    let g = build_group(args.group)?.table;
    let seeds = args
        .units
        .iter()
        .map(|u| RingElem::parse(&g, u))
        .collect::<Result<Vec<_>, _>>()?;
    let opts = RefuteOptions {
        max_depth: args.depth,
        cap_dim: args.cap_dim,
        ..RefuteOptions::default()
    };
    let outcome = refute_search(&g, &seeds, opts)?;
    let (name, tree, basis) = match outcome {
        RefuteOutcome::Proof(t) => ("PROOF", Some(t), Vec::new()),
        RefuteOutcome::Inconclusive(t) => ("INCONCLUSIVE", t, Vec::new()),
        RefuteOutcome::Realized(b) => ("REALIZED", None, b),
    };
    let text = || {
        let mut s = match (name, &tree) {
            ("PROOF", Some(t)) => format!(
                "proof: no ideal fully realizes this group ({} branches at the root, depth {}, {} leaves)\n",
                t.branches.len(),
                t.depth(),
                t.leaf_count()
            ),
            ("REALIZED", _) => format!(
                "inconclusive: an endomorphism-closed ideal of rank {} fully realizes this group\n",
                basis.len()
            ),
            _ => format!("inconclusive at depth {}\n", args.depth),
        };
        if let Some(t) = &tree {
            s.push_str(&tree_text(&g, t));
        }
        s
    };
    let code = if name == "PROOF" { exit::OK } else { exit::NEGATIVE };
    let doc = RefutationDoc {
        schema: SCHEMA,
        kind: "refutation".into(),
        group_recipe: args.group.into(),
        fingerprint: g.fingerprint(),
        max_depth: args.depth,
        outcome: name.into(),
        tree: tree.clone(),
        realizing_basis: basis.clone(),
    };
    output.emit(&doc, text)?;
    Ok(code)
}

pub fn repro(names: &[String], all: bool, output: &Output) -> Result<u8, CliError> {
    let names: Vec<String> = if all {
        CASE_NAMES.iter().map(|s| s.to_string()).collect()
    } else if names.is_empty() {
        return Err(CliError::Usage(format!(
            "name a case or pass --all; known cases: {}",
            CASE_NAMES.join(", ")
        )));
    } else {
        names.to_vec()
    };
    let cases = names
        .iter()
        .map(|n| run_case(n))
        .collect::<Result<Vec<CaseReport>, _>>()?;
    let passed = cases.iter().filter(|c| c.passed).count();
    let doc = ReproDoc {
        schema: SCHEMA,
        kind: "repro".into(),
        passed,
        total: cases.len(),
        cases,
    };
    let text = || {
        let mut s: String = doc.cases.iter().map(|c| case_line(c) + "\n").collect();
        s.push_str(&format!("{}/{} PASS\n", doc.passed, doc.total));
        s
    };
    output.emit(&doc, text)?;
    Ok(if passed == doc.total { exit::OK } else { exit::NEGATIVE })
}

pub fn verify(path: &Path) -> Result<u8, CliError> {
    let checks = verify_document(&read_file(path)?)?;
    for c in &checks {
        println!("{} {}", if c.ok { "ok  " } else { "FAIL" }, c.name);
    }
    let bad = checks.iter().filter(|c| !c.ok).count();
    if bad == 0 {
        println!("certificate verified ({} checks)", checks.len());
        Ok(exit::OK)
    } else {
        println!("{bad} of {} checks failed", checks.len());
        Ok(exit::NEGATIVE)
    }
}

pub fn selftest(seed: u64, cases: usize) -> Result<u8, CliError> {
    let results = selftest::run(seed, cases)?;
    for r in &results {
        println!(
            "{} {} ({} trials, {} failures)",
            if r.failures == 0 { "PASS" } else { "FAIL" },
            r.name,
            r.trials,
            r.failures
        );
    }
    println!("seed {seed}");
    Ok(if results.iter().all(|r| r.failures == 0) {
        exit::OK
    } else {
        exit::NEGATIVE
    })
}

pub const DEFAULT_CAP: usize = DEFAULT_CAP_DIM;
