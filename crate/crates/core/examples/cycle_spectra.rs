//! Spectra and energies of single signed cycles, analytic against closed form.

use sidigraph::closed_form::{branch, energy_cycle};
use sidigraph::spectra::{cycle_spectrum, energy, iota_energy};
use sidigraph::CycleSpec;

fn main() -> sidigraph::Result<()> {
    println!("{:>3} {:>4} {:>16} {:>16} {:>12}  branch", "k", "sign", "closed form", "spectrum", "iota");
    for k in 2..=12 {
        for c in [CycleSpec::positive(k)?, CycleSpec::negative(k)?] {
            let s = cycle_spectrum(c);
            println!(
                "{k:>3} {:>4} {:>16.12} {:>16.12} {:>12.6}  {}",
                c.sign().symbol(),
                energy_cycle(c),
                energy(&s),
                iota_energy(&s),
                branch(c).label()
            );
        }
    }
    Ok(())
}
