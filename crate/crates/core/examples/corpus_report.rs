//! A small corpus run written as JSON and CSV.

use subembed::corpus::builtin_corpus;
use subembed::harness::StatementId;
use subembed::report::{verify_corpus, RunConfig};

fn main() -> subembed::Result<()> {
    let corpus = builtin_corpus();
    let cfg = RunConfig::new(vec![StatementId::ThmB, StatementId::Thm12, StatementId::L2_2], 48);
    let report = verify_corpus("builtin", &corpus, &cfg);
    for s in &report.summary {
        println!(
            "{:<6} instances {:>4} hypothesis {:>4} inconsistent {}",
            s.statement, s.instances, s.hypothesis_satisfied, s.inconsistent
        );
    }
    let json = report.to_json();
    let csv = report.to_csv()?;
    println!("json {} bytes, csv {} rows", json.len(), csv.lines().count() - 1);
    println!("{}", csv.lines().nth(1).unwrap_or(""));
    Ok(())
}
