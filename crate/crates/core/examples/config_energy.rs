//! Energy of one bicyclic configuration three ways: closed form, per strong
//! component, and from the whole adjacency matrix.

use sidigraph::closed_form::energy_config;
use sidigraph::spectra::{energy, energy_of_sidigraph, whole_matrix_spectrum};
use sidigraph::{build_adjacency, strong_components, BicyclicConfig, Sign};

fn main() -> sidigraph::Result<()> {
    let tol = 1e-12;
    for (n, p, sp, q, sq) in [
        (8, 2, Sign::Positive, 6, Sign::Positive),
        (7, 4, Sign::Negative, 2, Sign::Positive),
        (10, 3, Sign::Positive, 5, Sign::Positive),
        (12, 4, Sign::Negative, 6, Sign::Negative),
    ] {
        let config = BicyclicConfig::from_parts(n, p, sp, q, sq)?;
        let g = build_adjacency(&config);
        let comps = strong_components(&g);
        println!("{}  components {:?}", config.label(), comps.sizes());
        println!("  closed form     {:.12}", energy_config(&config));
        println!("  by components   {:.12}", energy_of_sidigraph(&g, tol)?);
        println!("  whole matrix    {:.12}", energy(&whole_matrix_spectrum(&g, tol)?));
    }
    Ok(())
}
