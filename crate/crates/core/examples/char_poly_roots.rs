//! Exact characteristic polynomial, square-free split and numerical roots.

use sidigraph::spectra::{char_poly, char_poly_by_components, poly_roots};
use sidigraph::{build_adjacency, BicyclicConfig, Sign};

fn main() -> sidigraph::Result<()> {
    let config = BicyclicConfig::from_parts(9, 3, Sign::Positive, 4, Sign::Negative)?;
    let g = build_adjacency(&config);
    let p = char_poly(&g);
    println!("{}: coefficients (constant first) {:?}", config.label(), p.to_f64());
    println!("product over components equal: {}", char_poly_by_components(&g)? == p);
    for (factor, mult) in p.square_free_factors() {
        println!("  factor of degree {} with multiplicity {mult}", factor.degree());
    }
    let roots = poly_roots(&p, 1e-12)?;
    for z in roots.values() {
        println!("  {:+.12} {:+.12}i   |p(z)| = {:.2e}", z.re, z.im, p.eval_f64(*z).norm());
    }
    Ok(())
}
