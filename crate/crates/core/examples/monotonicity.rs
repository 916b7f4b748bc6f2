//! Dense-sampling checks of the monotone-function registry, with inverted
//! claims as negative controls.

use sidigraph::analysis::{check_monotone, registry};

fn main() -> sidigraph::Result<()> {
    let n = 20;
    for claim in registry(n)? {
        let r = check_monotone(&claim, 1000)?;
        let control = check_monotone(&claim.inverted(), 1000)?;
        println!(
            "{:<28} {:<5} control {:<5} slope [{:+.3e}, {:+.3e}]  {claim}",
            r.claim_id,
            if r.passed() { "ok" } else { "FAIL" },
            if control.passed() { "FAIL" } else { "ok" },
            r.min_slope,
            r.max_slope
        );
    }
    Ok(())
}
