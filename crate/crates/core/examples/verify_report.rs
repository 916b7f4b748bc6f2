//! Full verification run audited against the shipped deviation ledger.

use sidigraph::ordering::ledger::Ledger;
use sidigraph::report::{verify, NRange, RunConfig};

fn main() -> sidigraph::Result<()> {
    let rc = RunConfig::new(NRange::new(6, 20)?, 1e-9)?;
    let report = verify(&rc, &Ledger::shipped())?;
    let s = &report.summary;
    println!("chains checked            {}", s.chains_checked);
    println!("explained deviations      {}", s.explained_deviations);
    println!("unexplained deviations    {}", s.unexplained_deviations);
    println!("refuted chains            {:?}", s.refuted_chains);
    println!("equivalence failures      {}", s.equivalence_failures);
    println!("extremal mismatches       {}", s.extremal_mismatches);
    println!("analysis failures         {} explained, {} unexplained", s.analysis_failures_explained, s.analysis_failures_unexplained);
    println!("exit code                 {}", s.exit_code());
    Ok(())
}
