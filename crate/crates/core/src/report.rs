//! Corpus runs and their reports: JSON, CSV and Graphviz DOT.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{Group, DEFAULT_ORDER_CAP};
use crate::harness::{corollary_context_suite, verify_group, StatementId, Verdict, Verifier};
use crate::lattice::{SubgroupLattice, DEFAULT_LATTICE_CAP};
use crate::permutability::GroupAnalysis;

/// Bumped whenever a field of [`VerificationReport`] changes meaning.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub statements: Vec<StatementId>,
    pub max_order: usize,
    pub normal_budget: usize,
    pub lattice_cap: usize,
    /// Wall-clock seconds per statement. Off by default since it breaks
    /// byte-identical output.
    pub timings: bool,
}

impl RunConfig {
    pub fn new(statements: Vec<StatementId>, max_order: usize) -> RunConfig {
        RunConfig {
            statements,
            max_order,
            normal_budget: crate::harness::DEFAULT_NORMAL_BUDGET,
            lattice_cap: DEFAULT_LATTICE_CAP,
            timings: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusInfo {
    pub source: String,
    pub groups_total: usize,
    pub groups_checked: usize,
    pub max_order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Caps {
    pub order_cap: usize,
    pub lattice_cap: usize,
    pub normal_budget: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Skipped {
    pub group: String,
    pub order: usize,
    pub reason: String,
    pub cap_exceeded: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct StatementSummary {
    pub statement: String,
    pub instances: usize,
    pub hypothesis_satisfied: usize,
    pub inconsistent: usize,
    pub flagged: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub tool: String,
    pub tool_version: String,
    pub corpus: CorpusInfo,
    pub caps: Caps,
    pub formation: String,
    pub statements: Vec<StatementId>,
    pub restrictions: Vec<String>,
    pub skipped: Vec<Skipped>,
    pub summary: Vec<StatementSummary>,
    pub flags: Vec<Verdict>,
    pub verdicts: Vec<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, f64>>,
}

impl VerificationReport {
    pub fn inconsistent(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| !v.consistent)
    }

    pub fn is_consistent(&self) -> bool {
        self.inconsistent().next().is_none()
    }

    pub fn cap_exceeded(&self) -> bool {
        self.skipped.iter().any(|s| s.cap_exceeded)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One row per verdict.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "statement",
            "group",
            "instance",
            "hypothesis_satisfied",
            "conclusion_holds",
            "consistent",
            "flagged",
            "witnesses",
        ])
        .map_err(csv_err)?;
        for v in &self.verdicts {
            let conclusion = match v.conclusion_holds {
                Some(b) => b.to_string(),
                None => String::new(),
            };
            w.write_record([
                v.statement.as_str(),
                &v.group,
                &v.instance,
                &v.hypothesis_satisfied.to_string(),
                &conclusion,
                &v.consistent.to_string(),
                &v.flagged.to_string(),
                &v.witnesses.join("; "),
            ])
            .map_err(csv_err)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error().to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv of utf-8 fields"))
    }
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(e.to_string())
}

struct GroupRun {
    verdicts: Vec<Verdict>,
    skipped: Option<Skipped>,
    truncated: bool,
    timings: Vec<(StatementId, f64)>,
}

fn run_group(name: &str, g: &Group, cfg: &RunConfig) -> GroupRun {
    let mut run = GroupRun {
        verdicts: Vec::new(),
        skipped: None,
        truncated: false,
        timings: Vec::new(),
    };
    let a = match GroupAnalysis::with_lattice_cap(g.clone(), cfg.lattice_cap) {
        Ok(a) => a,
        Err(e) => {
            run.skipped = Some(Skipped {
                group: name.to_string(),
                order: g.order(),
                reason: e.to_string(),
                cap_exceeded: e.is_cap(),
            });
            return run;
        }
    };
    run.truncated = Verifier::new(name, &a).normal_pairs(cfg.normal_budget).1;
    for &s in &cfg.statements {
        if s == StatementId::Remark1 {
            continue;
        }
        let t = Instant::now();
        match verify_group(s, name, &a, cfg.normal_budget) {
            Ok(v) => run.verdicts.extend(v),
            Err(e) => {
                run.skipped = Some(Skipped {
                    group: name.to_string(),
                    order: g.order(),
                    reason: format!("{s}: {e}"),
                    cap_exceeded: e.is_cap(),
                });
            }
        }
        run.timings.push((s, t.elapsed().as_secs_f64()));
    }
    run
}

/// Runs every configured statement on every corpus group with
/// `|G| <= max_order`. Groups are processed in parallel; the report lists
/// verdicts in corpus order, then statement order.
pub fn verify_corpus(source: &str, corpus: &[(String, Group)], cfg: &RunConfig) -> VerificationReport {
    let selected: Vec<&(String, Group)> = corpus
        .iter()
        .filter(|(_, g)| g.order() <= cfg.max_order)
        .collect();
    let runs: Vec<GroupRun> = selected
        .par_iter()
        .map(|(name, g)| run_group(name, g, cfg))
        .collect();

    let mut verdicts = Vec::new();
    let mut skipped = Vec::new();
    let mut truncated = Vec::new();
    let mut timings: BTreeMap<String, f64> = BTreeMap::new();
    for ((name, _), run) in selected.iter().zip(runs) {
        verdicts.extend(run.verdicts);
        skipped.extend(run.skipped);
        if run.truncated {
            truncated.push(name.clone());
        }
        for (s, t) in run.timings {
            *timings.entry(s.to_string()).or_default() += t;
        }
    }
    if cfg.statements.contains(&StatementId::Remark1) {
        let groups: Vec<(String, Group)> = selected.iter().map(|&e| e.clone()).collect();
        verdicts.extend(corollary_context_suite(&groups));
    }

    let mut restrictions = vec![format!("groups with |G| > {} excluded", cfg.max_order)];
    restrictions.push(format!(
        "E ranges over at most {} normal subgroups per group (smallest first)",
        cfg.normal_budget
    ));
    if !truncated.is_empty() {
        restrictions.push(format!("normal subgroup budget reached for: {}", truncated.join(", ")));
    }

    let summary = cfg
        .statements
        .iter()
        .map(|&s| {
            let mut sum = StatementSummary {
                statement: s.to_string(),
                ..StatementSummary::default()
            };
            for v in verdicts.iter().filter(|v| v.statement == s) {
                sum.instances += 1;
                sum.hypothesis_satisfied += v.hypothesis_satisfied as usize;
                sum.inconsistent += !v.consistent as usize;
                sum.flagged += v.flagged as usize;
            }
            sum
        })
        .collect();
    let flags = verdicts.iter().filter(|v| v.flagged).cloned().collect();

    VerificationReport {
        schema_version: SCHEMA_VERSION,
        tool: env!("CARGO_PKG_NAME").to_string(),
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        corpus: CorpusInfo {
            source: source.to_string(),
            groups_total: corpus.len(),
            groups_checked: selected.len(),
            max_order: cfg.max_order,
        },
        caps: Caps {
            order_cap: DEFAULT_ORDER_CAP,
            lattice_cap: cfg.lattice_cap,
            normal_budget: cfg.normal_budget,
        },
        formation: "U (supersolvable)".to_string(),
        statements: cfg.statements.clone(),
        restrictions,
        skipped,
        summary,
        flags,
        verdicts,
        timings: cfg.timings.then_some(timings),
    }
}

/// Inclusion diagram with one node per conjugacy class, labelled
/// `order×class size`, and an edge from a class to each class it is
/// maximal in.
pub fn lattice_dot(name: &str, lattice: &SubgroupLattice) -> String {
    let classes = lattice.conjugacy_classes();
    let mut class_of = vec![0; lattice.len()];
    for (i, c) in classes.iter().enumerate() {
        for id in c {
            class_of[id.0] = i;
        }
    }
    let mut edges: Vec<(usize, usize)> = lattice
        .covers()
        .into_iter()
        .map(|(a, b)| (class_of[a.0], class_of[b.0]))
        .collect();
    edges.sort_unstable();
    edges.dedup();

    let mut s = format!("digraph \"{}\" {{\n  rankdir=BT;\n", name.replace('"', "'"));
    for (i, c) in classes.iter().enumerate() {
        let order = lattice.get(c[0]).order();
        let normal = if lattice.is_normal(c[0]) { ", shape=box" } else { "" };
        s += &format!("  c{i} [label=\"{order}×{}\"{normal}];\n", c.len());
    }
    for (a, b) in edges {
        s += &format!("  c{a} -> c{b};\n");
    }
    s += "}\n";
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{dihedral, symmetric};

    #[test]
    fn s4_dot_has_eleven_nodes() {
        let g = symmetric(4);
        let l = SubgroupLattice::enumerate(&g).unwrap();
        let dot = lattice_dot("S4", &l);
        assert_eq!(dot.matches("[label=").count(), 11);
    }

    #[test]
    fn csv_rows_match_verdicts() {
        let corpus = vec![("D8".to_string(), dihedral(8)), ("S4".to_string(), symmetric(4))];
        let cfg = RunConfig::new(vec![StatementId::ThmB, StatementId::L2_2], 100);
        let r = verify_corpus("test", &corpus, &cfg);
        let csv = r.to_csv().unwrap();
        assert_eq!(csv.lines().count(), r.verdicts.len() + 1);
        assert!(r.is_consistent());
        assert!(r.timings.is_none());
    }

    #[test]
    fn json_is_deterministic() {
        let corpus = vec![("S3".to_string(), symmetric(3)), ("D8".to_string(), dihedral(8))];
        let cfg = RunConfig::new(StatementId::proved().to_vec(), 100);
        let a = verify_corpus("test", &corpus, &cfg).to_json();
        let b = verify_corpus("test", &corpus, &cfg).to_json();
        assert_eq!(a, b);
    }
}
