//! Materialize catalogued ordering chains and verify each link.

use sidigraph::ordering::{expected_chain, verify_chain};

fn main() -> sidigraph::Result<()> {
    for (id, n) in [("ee-pn-n2-mod8-2-pos", 18), ("oo-n0", 12), ("ee-nn-n2", 10)] {
        let chain = match expected_chain(id, n) {
            Ok(c) => c,
            Err(e) => {
                println!("{id} at n={n}: {e}");
                continue;
            }
        };
        let report = verify_chain(&chain, 1e-9)?;
        println!("{id} at n={n}: {:?}", report.verdict);
        for note in &chain.notes {
            println!("  note: {note}");
        }
        for l in &report.links {
            println!(
                "  {} {} {}  margin {:+.6e}  {}",
                l.lhs.label(),
                l.claimed.symbol(),
                l.rhs.label(),
                l.margin,
                if l.passed { "" } else { "DEVIATES" }
            );
        }
    }
    Ok(())
}
