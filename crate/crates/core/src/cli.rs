//! Command-line front end. Exit codes: 0 all consistent, 1 inconsistency or
//! failed check, 2 usage or parse error, 3 cap exceeded.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::corpus::{builtin_corpus, load_dir, load_group, parse_group_file};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::harness::{build_example42, StatementId};
use crate::lattice::DEFAULT_LATTICE_CAP;
use crate::permutability::GroupAnalysis;
use crate::perm::parse_cycles;
use crate::report::{lattice_dot, verify_corpus, RunConfig, VerificationReport};
use crate::structure;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INCONSISTENT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "subembed", version, about = "Subgroup embedding properties of small finite groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Structural summary of a group (builtin name or group file).
    Analyze {
        group: String,
        /// Comma-separated subset of: order, fingerprint, abelian, nilpotent,
        /// solvable, supersolvable, sylow_tower, center, derived, chief,
        /// p_length, hypercenter, frattini, subgroups.
        #[arg(long, value_delimiter = ',')]
        props: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_LATTICE_CAP)]
        lattice_cap: usize,
    },
    /// Embedding predicates of one subgroup.
    CheckSubgroup {
        group: String,
        /// Generators in cycle notation, comma-separated: "(1 2),(3 4)".
        #[arg(long)]
        gens: String,
        /// normal, s-permutable, permutable, subnormal, h-sg,
        /// supersolvable-supplement, weakly-s-supplemented,
        /// weakly-s-permutable, c-normal, complemented or all.
        #[arg(long, default_value = "all")]
        predicate: String,
        #[arg(long, default_value_t = DEFAULT_LATTICE_CAP)]
        lattice_cap: usize,
    },
    /// Check statements over a corpus.
    Verify {
        /// Statement id, a family (L2.1, lemmas, corollaries) or all.
        #[arg(long)]
        statement: String,
        /// `builtin` or a directory of group files.
        #[arg(long, default_value = "builtin")]
        corpus: String,
        #[arg(long, default_value_t = 200)]
        max_order: usize,
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, default_value_t = crate::harness::DEFAULT_NORMAL_BUDGET)]
        budget: usize,
        #[arg(long, default_value_t = DEFAULT_LATTICE_CAP)]
        lattice_cap: usize,
        /// Record wall-clock time per statement in the report.
        #[arg(long)]
        timings: bool,
    },
    /// Look for groups meeting the unconditioned clause without being
    /// supersolvable.
    ScanQ13 {
        #[arg(long, default_value = "builtin")]
        corpus: String,
        #[arg(long, default_value_t = 200)]
        max_order: usize,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Rebuild S3 wr C3 and its subgroup O^2 and check their properties.
    ReproduceExample42,
    /// Subgroup lattice summary, optionally as Graphviz.
    Lattice {
        group: String,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_LATTICE_CAP)]
        lattice_cap: usize,
    },
}

fn exit_for(e: &Error) -> i32 {
    match e {
        e if e.is_cap() => EXIT_CAP,
        Error::CheckFailed(_) => EXIT_INCONSISTENT,
        _ => EXIT_USAGE,
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn main_with(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match run(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_for(&e)
        }
    }
}

/// A builtin corpus name or the path of a group file.
pub fn resolve_group(spec: &str) -> Result<(String, Group)> {
    let path = Path::new(spec);
    if path.is_file() {
        let s = parse_group_file(path)?;
        let g = load_group(&s)?;
        return Ok((s.name, g));
    }
    builtin_corpus()
        .into_iter()
        .find(|(n, _)| n.eq_ignore_ascii_case(spec))
        .ok_or_else(|| Error::UnknownGroup(spec.to_string()))
}

fn load_corpus(spec: &str) -> Result<(String, Vec<(String, Group)>)> {
    if spec == "builtin" {
        Ok(("builtin".into(), builtin_corpus()))
    } else {
        Ok((spec.to_string(), load_dir(Path::new(spec))?))
    }
}

fn io(r: std::io::Result<()>) -> Result<()> {
    r.map_err(Error::from)
}

fn run(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Analyze {
            group,
            props,
            lattice_cap,
        } => analyze(&group, &props, lattice_cap, out),
        Command::CheckSubgroup {
            group,
            gens,
            predicate,
            lattice_cap,
        } => check_subgroup(&group, &gens, &predicate, lattice_cap, out),
        Command::Verify {
            statement,
            corpus,
            max_order,
            report,
            format,
            budget,
            lattice_cap,
            timings,
        } => {
            let statements = StatementId::expand(&statement)
                .ok_or_else(|| Error::MalformedParams(format!("unknown statement `{statement}`")))?;
            let (source, groups) = load_corpus(&corpus)?;
            let mut cfg = RunConfig::new(statements, max_order);
            cfg.normal_budget = budget;
            cfg.lattice_cap = lattice_cap;
            cfg.timings = timings;
            let r = verify_corpus(&source, &groups, &cfg);
            finish(&r, report.as_deref(), format, out)
        }
        Command::ScanQ13 {
            corpus,
            max_order,
            report,
        } => {
            let (source, groups) = load_corpus(&corpus)?;
            let r = verify_corpus(&source, &groups, &RunConfig::new(vec![StatementId::Q13], max_order));
            io(writeln!(out, "flags: {}", r.flags.len()))?;
            for f in &r.flags {
                io(writeln!(out, "  {} {}: {}", f.group, f.instance, f.witnesses.join("; ")))?;
            }
            finish(&r, report.as_deref(), Format::Json, out)
        }
        Command::ReproduceExample42 => {
            let (b, g, r) = build_example42()?;
            io(writeln!(out, "|B| = {}", b.order()))?;
            io(writeln!(out, "order {}", g.order()))?;
            io(writeln!(out, "O_3(G): order {}, elementary abelian {}", r.o3_order, r.o3_elementary_abelian))?;
            io(writeln!(out, "G/O_3(G): {}", r.quotient_name.as_deref().unwrap_or("?")))?;
            io(writeln!(out, "Sylow 3-subgroup: order {}", r.sylow3_order))?;
            io(writeln!(
                out,
                "maximal subgroups of P: {}, all complemented {}, all weakly s-supplemented {}",
                r.maximal_in_sylow3, r.all_complemented, r.all_weakly_s_supplemented
            ))?;
            io(writeln!(out, "3-length {}", r.p_length_3.map_or("undefined".into(), |l| l.to_string())))?;
            Ok(EXIT_OK)
        }
        Command::Lattice {
            group,
            dot,
            lattice_cap,
        } => {
            let (name, g) = resolve_group(&group)?;
            let a = GroupAnalysis::with_lattice_cap(g, lattice_cap)?;
            let l = a.lattice();
            let classes = l.conjugacy_classes();
            io(writeln!(out, "{name}: {} subgroups in {} classes", l.len(), classes.len()))?;
            for c in &classes {
                let s = l.get(c[0]);
                let tag = if l.is_normal(c[0]) { " normal" } else { "" };
                io(writeln!(out, "  order {:4} x{:<3} {}{tag}", s.order(), c.len(), s.describe(a.group())))?;
            }
            if let Some(path) = dot {
                std::fs::write(&path, lattice_dot(&name, l))?;
                io(writeln!(out, "wrote {}", path.display()))?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn finish(r: &VerificationReport, path: Option<&Path>, format: Format, out: &mut dyn Write) -> Result<i32> {
    for s in &r.summary {
        io(writeln!(
            out,
            "{:8} instances {:6}  hypothesis {:6}  inconsistent {}",
            s.statement, s.instances, s.hypothesis_satisfied, s.inconsistent
        ))?;
    }
    for line in &r.restrictions {
        io(writeln!(out, "restriction: {line}"))?;
    }
    for s in &r.skipped {
        io(writeln!(out, "skipped {} (order {}): {}", s.group, s.order, s.reason))?;
    }
    if let Some(p) = path {
        let body = match format {
            Format::Json => r.to_json(),
            Format::Csv => r.to_csv()?,
        };
        std::fs::write(p, body)?;
    }
    let bad: Vec<_> = r.inconsistent().collect();
    for v in &bad {
        io(writeln!(
            out,
            "INCONSISTENT {} on {} [{}]: {}",
            v.statement,
            v.group,
            v.instance,
            v.witnesses.join("; ")
        ))?;
    }
    Ok(if !bad.is_empty() {
        EXIT_INCONSISTENT
    } else if r.cap_exceeded() {
        EXIT_CAP
    } else {
        EXIT_OK
    })
}

const ALL_PROPS: &[&str] = &[
    "order",
    "fingerprint",
    "abelian",
    "nilpotent",
    "solvable",
    "supersolvable",
    "sylow_tower",
    "center",
    "derived",
    "chief",
    "p_length",
    "hypercenter",
    "frattini",
    "subgroups",
];

fn analyze(spec: &str, props: &[String], lattice_cap: usize, out: &mut dyn Write) -> Result<i32> {
    let (name, g) = resolve_group(spec)?;
    let props: Vec<&str> = if props.is_empty() {
        ALL_PROPS.to_vec()
    } else {
        props.iter().map(|s| s.trim()).collect()
    };
    if let Some(bad) = props.iter().find(|p| !ALL_PROPS.contains(p)) {
        return Err(Error::MalformedParams(format!("unknown property `{bad}`")));
    }
    io(writeln!(out, "{name}"))?;
    let mut code = EXIT_OK;
    for p in props {
        let value = match p {
            "order" => g.order().to_string(),
            "fingerprint" => {
                let fp = structure::fingerprint(&g);
                let id = structure::recognize(&fp).unwrap_or_else(|| "unrecognized".into());
                format!("{id} {}", serde_json::to_string(&fp).expect("serializes"))
            }
            "abelian" => g.is_abelian().to_string(),
            "nilpotent" => structure::is_nilpotent(&g).to_string(),
            "solvable" => structure::is_solvable(&g).to_string(),
            "supersolvable" => structure::is_supersolvable(&g).to_string(),
            "sylow_tower" => structure::has_sylow_tower(&g).to_string(),
            "center" => structure::center(&g).order().to_string(),
            "derived" => {
                let orders: Vec<String> = structure::derived_series(&g).iter().map(|s| s.order().to_string()).collect();
                orders.join(" > ")
            }
            "chief" => {
                if structure::is_solvable(&g) || g.order() <= 400 {
                    let s = structure::chief_series(&g);
                    let f: Vec<String> = s.factors.iter().map(|f| f.order.to_string()).collect();
                    f.join(", ")
                } else {
                    "skipped".into()
                }
            }
            "p_length" => g
                .primes()
                .iter()
                .map(|&p| {
                    let r = structure::p_length(&g, p);
                    format!("{p}:{}", r.p_length.map_or("-".into(), |l| l.to_string()))
                })
                .collect::<Vec<_>>()
                .join(" "),
            "hypercenter" => format!(
                "Z_inf {}, Z_inf^U {}",
                structure::hypercenter(&g).order(),
                structure::u_hypercenter(&g).order()
            ),
            "frattini" | "subgroups" => match GroupAnalysis::with_lattice_cap(g.clone(), lattice_cap) {
                Ok(a) if p == "frattini" => a.lattice().frattini(&g).order().to_string(),
                Ok(a) => format!(
                    "{} in {} classes, {} normal",
                    a.lattice().len(),
                    a.lattice().conjugacy_classes().len(),
                    a.lattice().normal_subgroups().len()
                ),
                Err(e) if e.is_cap() => {
                    code = EXIT_CAP;
                    format!("not computed: {e}")
                }
                Err(e) => return Err(e),
            },
            _ => unreachable!(),
        };
        io(writeln!(out, "{p}: {value}"))?;
    }
    Ok(code)
}

const PREDICATES: &[&str] = &[
    "normal",
    "s-permutable",
    "permutable",
    "subnormal",
    "h-sg",
    "supersolvable-supplement",
    "weakly-s-supplemented",
    "weakly-s-permutable",
    "c-normal",
    "complemented",
];

fn check_subgroup(spec: &str, gens: &str, predicate: &str, lattice_cap: usize, out: &mut dyn Write) -> Result<i32> {
    let (name, g) = resolve_group(spec)?;
    let perms = crate::corpus::GroupSpecFile::parse(&format!("name: x\ndegree: {}\ngens: {gens}\n", g.degree()))
        .map_err(|e| match e {
            Error::Parse { column, message, .. } => Error::Parse {
                line: 1,
                column: column.saturating_sub(6),
                message,
            },
            e => e,
        })?
        .gens
        .iter()
        .map(|c| parse_cycles(c, g.degree()).expect("validated"))
        .collect::<Vec<_>>();
    let preds: Vec<&str> = if predicate == "all" {
        PREDICATES.to_vec()
    } else if PREDICATES.contains(&predicate) {
        vec![predicate]
    } else {
        return Err(Error::MalformedParams(format!("unknown predicate `{predicate}`")));
    };
    let h = g.subgroup_from_perms(&perms)?;
    let a = GroupAnalysis::with_lattice_cap(g, lattice_cap)?;
    let id = a.id(&h)?;
    let show = |id| {
        let s = a.subgroup(id);
        format!("{} (order {})", s.describe(a.group()), s.order())
    };
    io(writeln!(out, "{name}, H = {}", show(id)))?;
    for p in preds {
        let line = match p {
            "normal" => a.lattice().is_normal(id).to_string(),
            "s-permutable" => a.is_s_permutable(id).to_string(),
            "permutable" => a.is_permutable(id).to_string(),
            "subnormal" => a.is_subnormal(id).to_string(),
            "h-sg" => show(a.h_sg(id)),
            "supersolvable-supplement" => match a.supersolvable_supplement(id) {
                Some(t) => format!("true, T = {}", show(t)),
                None => "false".into(),
            },
            "weakly-s-supplemented" | "weakly-s-permutable" | "c-normal" | "complemented" => {
                let w = match p {
                    "weakly-s-supplemented" => a.weakly_s_supplemented(id).cloned(),
                    "weakly-s-permutable" => a.weakly_s_permutable(id).cloned(),
                    "c-normal" => a.c_normal(id).cloned(),
                    _ => a.complement(id),
                };
                match w {
                    Some(w) => format!(
                        "true, T = {}, H ∩ T = {}",
                        show(w.supplement),
                        show(w.intersection)
                    ),
                    None => "false".into(),
                }
            }
            _ => unreachable!(),
        };
        io(writeln!(out, "{p}: {line}"))?;
    }
    Ok(EXIT_OK)
}
