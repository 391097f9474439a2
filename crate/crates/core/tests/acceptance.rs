mod common;

use std::process::Command;
use std::time::Instant;

use common::*;
use subembed::construct::{alternating, cyclic, dihedral, direct_product, psl2_7, symmetric};
use subembed::harness::{Mode, StatementId, Verifier};
use subembed::report::{verify_corpus, RunConfig};
use subembed::structure::{fingerprint, is_supersolvable, recognize, u_hypercenter, ChiefChoice};
use subembed::{GroupAnalysis, SubgroupLattice};

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn cli(args: &[&str]) -> Result<(i32, String), String> {
    let o = Command::new(env!("CARGO_BIN_EXE_subembed"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    Ok((o.status.code().unwrap_or(-1), String::from_utf8_lossy(&o.stdout).into_owned()))
}

fn verify_json(statement: &str, path: &std::path::Path) -> Result<serde_json::Value, String> {
    let (code, out) = cli(&[
        "verify",
        "--statement",
        statement,
        "--corpus",
        "builtin",
        "--max-order",
        "200",
        "--report",
        path.to_str().unwrap(),
    ])?;
    ensure(code == 0, format!("exit {code}: {out}"))?;
    let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
    serde_json::from_str(&text).map_err(|e| e.to_string())
}

fn summary_line(v: &serde_json::Value) -> Result<String, String> {
    let s = &v["summary"][0];
    ensure(s["inconsistent"] == 0, format!("{} inconsistent", s["inconsistent"]))?;
    ensure(s["instances"].as_u64().unwrap_or(0) > 0, "no instances")?;
    Ok(format!(
        "{} pairs, hypothesis on {}, 0 inconsistent",
        s["instances"], s["hypothesis_satisfied"]
    ))
}

fn c1_reconstruction() -> Check {
    let t = Instant::now();
    let (code, out) = cli(&["reproduce-example42"])?;
    ensure(code == 0, format!("exit {code}"))?;
    for needle in [
        "|B| = 648",
        "order 324",
        "O_3(G): order 27, elementary abelian true",
        "G/O_3(G): A4",
        "Sylow 3-subgroup: order 81",
        "all complemented true",
        "3-length 2",
    ] {
        ensure(out.contains(needle), format!("missing `{needle}`"))?;
    }
    let secs = t.elapsed().as_secs_f64();
    ensure(secs < 300.0, format!("{secs:.1}s"))?;
    Ok(format!("|G| = 324, P of order 81 with complemented maximal subgroups, 3-length 2 ({secs:.1}s)"))
}

fn c2_theorem_b(dir: &std::path::Path) -> Check {
    let t = Instant::now();
    let v = verify_json("thmB", &dir.join("thmB.json"))?;
    let line = summary_line(&v)?;
    let secs = t.elapsed().as_secs_f64();
    ensure(secs < 900.0, format!("{secs:.1}s"))?;
    Ok(format!("{line} ({secs:.1}s)"))
}

fn c3_weakly_s_permutable(dir: &std::path::Path) -> Check {
    summary_line(&verify_json("thm12", &dir.join("thm12.json"))?)
}

fn c4_lemmas() -> Check {
    use StatementId::*;
    let lemmas = vec![L2_1i, L2_1ii, L2_1iii, L2_2, L2_3, L2_4, L2_5, L2_7, L2_8, L2_9, L3_1, C3_2, L3_3, L3_5];
    let corpus = subembed::corpus::builtin_corpus();
    let r = verify_corpus("builtin", &corpus, &RunConfig::new(lemmas, 200));
    ensure(!r.restrictions.is_empty(), "restrictions not reported")?;
    let bad: Vec<String> = r
        .summary
        .iter()
        .filter(|s| s.inconsistent > 0)
        .map(|s| format!("{} ({})", s.statement, s.inconsistent))
        .collect();
    ensure(bad.is_empty(), bad.join(", "))?;
    let vacuous: Vec<&str> = r
        .summary
        .iter()
        .filter(|s| s.hypothesis_satisfied == 0)
        .map(|s| s.statement.as_str())
        .collect();
    ensure(vacuous.is_empty(), format!("never exercised: {}", vacuous.join(", ")))?;
    let n: usize = r.summary.iter().map(|s| s.instances).sum();
    Ok(format!("{} statements, {n} instances, 0 inconsistent", r.summary.len()))
}

fn c5_simple_indices() -> Check {
    let a5 = alternating(5);
    let l = SubgroupLattice::enumerate(&a5).map_err(|e| e.to_string())?;
    let idx = prime_power_indices(&l);
    ensure(idx.keys().eq([5].iter()), format!("A5 indices {:?}", idx.keys()))?;
    ensure(idx[&5].len() == 5, "A5: not five subgroups of index 5")?;
    for &h in &idx[&5] {
        let (sub, _) = a5.subgroup_as_group(l.get(h));
        ensure(recognize(&fingerprint(&sub)).as_deref() == Some("A4"), "index-5 subgroup not A4")?;
    }
    let l6 = SubgroupLattice::enumerate(&alternating(6)).map_err(|e| e.to_string())?;
    ensure(prime_power_indices(&l6).is_empty(), "A6 has a prime-power index")?;
    let lp = SubgroupLattice::enumerate(&psl2_7()).map_err(|e| e.to_string())?;
    let ip = prime_power_indices(&lp);
    ensure(ip.keys().eq([7, 8].iter()), format!("PSL(2,7) indices {:?}", ip.keys()))?;
    Ok(format!(
        "A5: 5 x A4 of index 5; A6: none of {} subgroups; PSL(2,7): {} of index 7, {} of index 8",
        l6.len(),
        ip[&7].len(),
        ip[&8].len()
    ))
}

fn c6_hierarchy() -> Check {
    let mut subgroups = 0;
    let mut bad = Vec::new();
    let corpus = corpus_upto(100);
    for (name, g) in &corpus {
        let a = GroupAnalysis::new(g.clone()).map_err(|e| e.to_string())?;
        subgroups += a.lattice().len();
        bad.extend(hierarchy_violations(name, &a));
    }
    ensure(bad.is_empty(), format!("{} violations, first: {}", bad.len(), bad.first().cloned().unwrap_or_default()))?;
    Ok(format!("{subgroups} subgroups of {} groups, 0 violations", corpus.len()))
}

fn c7_oracles() -> Check {
    let small = corpus_upto(48);
    for (name, g) in &small {
        let l = SubgroupLattice::enumerate(g).map_err(|e| e.to_string())?;
        ensure(lattice_masks(&l) == brute_force_subgroups(g), format!("{name}: lattice differs"))?;
    }
    let mid = corpus_upto(200);
    for (name, g) in &mid {
        let a = chief_factor_multiset(g, ChiefChoice::Seeded(1));
        let b = chief_factor_multiset(g, ChiefChoice::Seeded(2));
        ensure(a == b, format!("{name}: chief factors {a:?} vs {b:?}"))?;
    }
    let upto100 = corpus_upto(100);
    for (name, g) in &upto100 {
        let l = SubgroupLattice::enumerate(g).map_err(|e| e.to_string())?;
        ensure(
            u_hypercenter(g).members() == &u_hypercenter_oracle(&l),
            format!("{name}: U-hypercenter differs"),
        )?;
    }
    Ok(format!(
        "lattices {} groups, chief series {} groups, U-hypercenter {} groups",
        small.len(),
        mid.len(),
        upto100.len()
    ))
}

fn c8_determinism(dir: &std::path::Path) -> Check {
    let a = dir.join("run1.json");
    let b = dir.join("run2.json");
    for p in [&a, &b] {
        let (code, _) = cli(&["verify", "--statement", "all", "--max-order", "200", "--report", p.to_str().unwrap()])?;
        ensure(code == 0, format!("exit {code}"))?;
    }
    let x = std::fs::read(&a).map_err(|e| e.to_string())?;
    let y = std::fs::read(&b).map_err(|e| e.to_string())?;
    ensure(x == y, "reports differ")?;
    Ok(format!("{} identical bytes", x.len()))
}

fn c9_negative_controls() -> Check {
    let s4 = GroupAnalysis::new(symmetric(4)).map_err(|e| e.to_string())?;
    let v = Verifier::new("S4", &s4);
    let r = v.thm_b_hypothesis(s4.lattice().whole(), Mode::Supplemented).map_err(|e| e.to_string())?;
    let two = r.per_prime.iter().find(|p| p.p == 2).ok_or("no 2-part")?;
    ensure(two.admissible_d.iter().all(|d| !d.holds), "S4: some |D| satisfies the clause")?;
    let gens = ["(1 2)", "(3 4)"].map(|c| subembed::perm::parse_cycles(c, 4).unwrap());
    let klein = s4.group().subgroup_from_perms(&gens).map_err(|e| e.to_string())?;
    let id = s4.id(&klein).map_err(|e| e.to_string())?;
    let want = format!("4:{}", s4.subgroup(id).describe(s4.group()));
    let at4 = two.admissible_d.iter().find(|d| d.d_order == 4).ok_or("no |D| = 4")?;
    ensure(at4.failing_h.as_deref() == Some(want.as_str()), format!("S4 witness {:?}", at4.failing_h))?;

    let g = direct_product(&dihedral(8), &cyclic(3)).map_err(|e| e.to_string())?;
    let a = GroupAnalysis::new(g).map_err(|e| e.to_string())?;
    let v = Verifier::new("D8 x C3", &a);
    let r = v.thm_b_hypothesis(a.lattice().whole(), Mode::Supplemented).map_err(|e| e.to_string())?;
    let two = r.per_prime.iter().find(|p| p.p == 2).ok_or("no 2-part")?;
    let d2 = two.admissible_d.iter().find(|d| d.d_order == 2).ok_or("no |D| = 2")?;
    ensure(d2.holds && d2.cond_ii, "D8 x C3: |D| = 2 fails (ii)")?;
    ensure(is_supersolvable(a.group()), "D8 x C3 not supersolvable")?;
    Ok(format!("S4 fails at {want}; D8 x C3 holds at |D| = 2 under (ii), supersolvable"))
}

fn main() {
    let dir = tempfile::tempdir().expect("temp dir");
    let checks: Vec<(&str, Box<dyn Fn() -> Check + '_>)> = vec![
        ("reconstruction of S3 wr C3 example", Box::new(c1_reconstruction)),
        ("thmB suite", Box::new(|| c2_theorem_b(dir.path()))),
        ("thm12 suite", Box::new(|| c3_weakly_s_permutable(dir.path()))),
        ("lemma suite", Box::new(c4_lemmas)),
        ("prime-power indices of simple groups", Box::new(c5_simple_indices)),
        ("embedding hierarchy", Box::new(c6_hierarchy)),
        ("oracle equivalences", Box::new(c7_oracles)),
        ("deterministic reports", Box::new(|| c8_determinism(dir.path()))),
        ("negative controls", Box::new(c9_negative_controls)),
    ];
    let mut failed = 0;
    for (i, (name, f)) in checks.iter().enumerate() {
        match f() {
            Ok(msg) => println!("criterion {} PASS {name}: {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {} FAIL {name}: {msg}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
