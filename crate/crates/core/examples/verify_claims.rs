//! Runs the full claim suite and prints one line per claim.
//!
//! cargo run --release --example verify_claims

use excessive_index::lab::{verify_paper_claims, Verdict};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let reports = verify_paper_claims()?;
    for r in &reports {
        let verdict = match r.verdict {
            Verdict::Confirmed => "confirmed",
            Verdict::Refuted => "REFUTED",
            Verdict::SkippedBudget => "skipped",
        };
        println!(
            "{verdict:>9}  {:<42} {:>7} ms  {}",
            r.claim, r.millis, r.instance
        );
    }
    let broken = reports.iter().filter(|r| r.is_broken_proof()).count();
    println!("{} claims, {broken} proven claims refuted", reports.len());
    Ok(())
}
