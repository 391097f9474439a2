//! Looks for groups where the clause without side conditions holds but the
//! group is not supersolvable.

use subembed::corpus::builtin_corpus;
use subembed::harness::scan_question13;
use subembed::GroupAnalysis;

fn main() -> subembed::Result<()> {
    let corpus: Vec<(String, GroupAnalysis)> = builtin_corpus()
        .into_iter()
        .filter(|(_, g)| g.order() <= 100)
        .map(|(n, g)| GroupAnalysis::new(g).map(|a| (n, a)))
        .collect::<subembed::Result<_>>()?;
    let verdicts = scan_question13(&corpus, 100);
    let hyp = verdicts.iter().filter(|v| v.hypothesis_satisfied).count();
    println!("{} pairs, clause holds on {hyp}", verdicts.len());
    for v in verdicts.iter().filter(|v| v.flagged) {
        println!("flagged: {} {} {:?}", v.group, v.instance, v.witnesses);
    }
    Ok(())
}
