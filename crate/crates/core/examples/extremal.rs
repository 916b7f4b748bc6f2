//! Exhaustive extremal search against the predicted maximizers and
//! minimizers.

use sidigraph::ordering::{exhaustive_extremal, Category};

fn main() -> sidigraph::Result<()> {
    for n in [6, 7, 8, 9, 24, 25] {
        for cat in Category::ALL.into_iter().filter(|c| c.defined_for(n)) {
            let r = exhaustive_extremal(n, cat)?;
            println!(
                "n={n:<3} {:<9} max {} ({:.6}) {}  min {} ({:.6}) {}",
                cat.as_str(),
                r.expected_max.label(),
                r.max_energy,
                if r.max_match { "match" } else { "MISMATCH" },
                r.expected_min.label(),
                r.min_energy,
                if r.min_match { "match" } else { "MISMATCH" },
            );
        }
    }
    Ok(())
}
