//! The supersolvability criterion on a pass case and a fail case.

use subembed::construct::{cyclic, dihedral, direct_product, symmetric};
use subembed::harness::{Mode, Verifier};
use subembed::{Group, GroupAnalysis};

fn run(name: &str, g: Group) -> subembed::Result<()> {
    let a = GroupAnalysis::new(g)?;
    let v = Verifier::new(name, &a);
    let e = a.lattice().whole();
    let report = v.thm_b_hypothesis(e, Mode::Supplemented)?;
    println!("{name}: G/E in U {}", report.quotient_in_formation);
    for pr in &report.per_prime {
        if pr.sylow_cyclic {
            println!("  p = {}: Sylow cyclic of order {}", pr.p, pr.sylow_order);
            continue;
        }
        for d in &pr.admissible_d {
            println!(
                "  p = {} |D| = {}: clause {} (i) {} (ii) {} (iii) {}{}",
                pr.p,
                d.d_order,
                d.holds,
                d.cond_i,
                d.cond_ii,
                d.cond_iii,
                d.failing_h.as_ref().map(|h| format!(", fails at {h}")).unwrap_or_default()
            );
        }
    }
    let verdict = v.check_thm_b(e)?;
    println!(
        "  hypothesis {} conclusion {:?} consistent {}",
        verdict.hypothesis_satisfied, verdict.conclusion_holds, verdict.consistent
    );
    Ok(())
}

fn main() -> subembed::Result<()> {
    run("D8 x C3", direct_product(&dihedral(8), &cyclic(3))?)?;
    run("S4", symmetric(4))
}
