//! Every proved statement on a handful of groups.

use subembed::construct::{alternating, dicyclic, dihedral, symmetric};
use subembed::harness::{verify_group, StatementId, DEFAULT_NORMAL_BUDGET};
use subembed::GroupAnalysis;

fn main() -> subembed::Result<()> {
    let groups = [
        ("S4", symmetric(4)),
        ("D12", dihedral(12)),
        ("C3 ⋊ C4", dicyclic(12)),
        ("A5", alternating(5)),
    ];
    for (name, g) in groups {
        let a = GroupAnalysis::new(g)?;
        print!("{name:<8}");
        for &s in StatementId::proved() {
            let vs = verify_group(s, name, &a, DEFAULT_NORMAL_BUDGET)?;
            let hyp = vs.iter().filter(|v| v.hypothesis_satisfied).count();
            let bad = vs.iter().filter(|v| !v.consistent).count();
            print!(" {s}:{hyp}/{}{}", vs.len(), if bad > 0 { "!" } else { "" });
        }
        println!();
    }
    Ok(())
}
