//! Spectral oracle: analytic cycle spectra, exact characteristic polynomials,
//! root extraction, and the energy functionals.

mod poly;
mod roots;

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

pub use poly::{char_poly, char_poly_by_components, IntPolynomial};
pub use roots::{aberth, poly_roots, validate_tolerance, MAX_ITERATIONS};

use crate::error::Result;
use crate::graph::{strong_components, CycleSpec, Sign, SignedDigraph};
use crate::numeric::compensated_sum;

/// Multiset of eigenvalues, kept sorted by argument then modulus.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    values: Vec<Complex64>,
}

fn sort_key(z: &Complex64) -> (f64, f64) {
    (z.arg(), z.norm())
}

impl Spectrum {
    pub fn new(mut values: Vec<Complex64>) -> Self {
        values.sort_by(|a, b| sort_key(a).partial_cmp(&sort_key(b)).unwrap_or(std::cmp::Ordering::Equal));
        Self { values }
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn union(&self, other: &Spectrum) -> Spectrum {
        let mut v = self.values.clone();
        v.extend_from_slice(&other.values);
        Spectrum::new(v)
    }

    /// True when every value has a conjugate partner within `tol`, matched
    /// one-to-one.
    pub fn is_conjugate_closed(&self, tol: f64) -> bool {
        let mut used = vec![false; self.values.len()];
        for (i, z) in self.values.iter().enumerate() {
            if used[i] {
                continue;
            }
            if z.im.abs() <= tol {
                used[i] = true;
                continue;
            }
            let partner = (0..self.values.len())
                .find(|&j| j != i && !used[j] && (self.values[j] - z.conj()).norm() <= tol);
            match partner {
                Some(j) => {
                    used[i] = true;
                    used[j] = true;
                }
                None => return false,
            }
        }
        true
    }
}

/// Eigenvalues of a signed directed cycle: the k-th roots of its sign.
pub fn cycle_spectrum(c: CycleSpec) -> Spectrum {
    let k = c.order();
    let shift = match c.sign() {
        Sign::Positive => 0.0,
        Sign::Negative => 1.0,
    };
    Spectrum::new(
        (0..k)
            .map(|j| {
                let theta = PI * (2.0 * j as f64 + shift) / k as f64;
                Complex64::new(theta.cos(), theta.sin())
            })
            .collect(),
    )
}

/// `E = sum |Re rho|`, summed in argument order with compensation.
pub fn energy(s: &Spectrum) -> f64 {
    compensated_sum(s.values.iter().map(|z| z.re.abs()))
}

/// `E_c = sum |Im rho|`.
pub fn iota_energy(s: &Spectrum) -> f64 {
    compensated_sum(s.values.iter().map(|z| z.im.abs()))
}

fn component_spectrum(sub: &SignedDigraph, tol: f64) -> Result<Spectrum> {
    if sub.vertex_count() == 1 {
        let loop_value = sub.arc_sign(0, 0).map_or(0.0, |s| s.value() as f64);
        return Ok(Spectrum::new(vec![Complex64::new(loop_value, 0.0)]));
    }
    if let Some(cycle) = sub.as_single_cycle() {
        return Ok(cycle_spectrum(cycle));
    }
    poly_roots(&char_poly(sub), tol)
}

/// Spectrum assembled component by component.
pub fn spectrum_of_sidigraph(g: &SignedDigraph, tol: f64) -> Result<Spectrum> {
    validate_tolerance(tol)?;
    let mut values = Vec::with_capacity(g.vertex_count());
    for component in strong_components(g).components() {
        let sub = g.induced(component)?;
        values.extend_from_slice(component_spectrum(&sub, tol)?.values());
    }
    Ok(Spectrum::new(values))
}

/// Energy as the sum of strong-component energies. Single-cycle components
/// use the analytic spectrum; anything else goes through the exact
/// characteristic polynomial and the root finder.
pub fn energy_of_sidigraph(g: &SignedDigraph, tol: f64) -> Result<f64> {
    validate_tolerance(tol)?;
    let mut parts = Vec::new();
    for component in strong_components(g).components() {
        let sub = g.induced(component)?;
        parts.push(energy(&component_spectrum(&sub, tol)?));
    }
    Ok(compensated_sum(parts))
}

/// Spectrum of the whole adjacency matrix with no decomposition; the
/// reference path for the additivity check.
pub fn whole_matrix_spectrum(g: &SignedDigraph, tol: f64) -> Result<Spectrum> {
    poly_roots(&char_poly(g), tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_adjacency, BicyclicConfig};

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn small_cycle_spectra() {
        let s = cycle_spectrum(CycleSpec::positive(2).unwrap());
        assert!(close(s.values()[0].re, 1.0, 1e-15) && close(s.values()[1].re, -1.0, 1e-15));
        let s = cycle_spectrum(CycleSpec::negative(2).unwrap());
        assert!(s.values().iter().all(|z| close(z.re, 0.0, 1e-15) && close(z.im.abs(), 1.0, 1e-15)));
        assert_eq!(cycle_spectrum(CycleSpec::positive(4).unwrap()).len(), 4);
    }

    #[test]
    fn energy_examples() {
        let i = Spectrum::new(vec![Complex64::i(), -Complex64::i()]);
        let one = Spectrum::new(vec![Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0)]);
        assert_eq!(energy(&i), 0.0);
        assert_eq!(energy(&one), 2.0);
        assert_eq!(iota_energy(&one), 0.0);
        assert_eq!(iota_energy(&i), 2.0);
        let c4 = cycle_spectrum(CycleSpec::positive(4).unwrap());
        assert!(close(iota_energy(&c4), 2.0, 1e-15));
        // direct summation oracle for the 5th roots of unity
        let direct: f64 = (0..5).map(|j| (2.0 * PI * j as f64 / 5.0).cos().abs()).sum();
        let e5 = energy(&cycle_spectrum(CycleSpec::positive(5).unwrap()));
        assert!(close(e5, direct, 1e-14));
        assert!(close(e5, 3.2360679775, 1e-10));
    }

    #[test]
    fn sidigraph_energy_examples() {
        let cfg = BicyclicConfig::from_parts(4, 2, Sign::Negative, 2, Sign::Negative).unwrap();
        assert!(close(energy_of_sidigraph(&build_adjacency(&cfg), 1e-12).unwrap(), 0.0, 1e-15));
        let cfg = BicyclicConfig::from_parts(7, 2, Sign::Positive, 4, Sign::Negative).unwrap();
        let e = energy_of_sidigraph(&build_adjacency(&cfg), 1e-12).unwrap();
        assert!(close(e, 2.0 + 2.0 * 2f64.sqrt(), 1e-12));
        let empty = SignedDigraph::new(5).unwrap();
        assert_eq!(energy_of_sidigraph(&empty, 1e-12).unwrap(), 0.0);
    }

    #[test]
    fn self_loop_component() {
        let g = SignedDigraph::from_arcs(2, [(0, 0, Sign::Negative), (0, 1, Sign::Positive)]).unwrap();
        assert_eq!(energy_of_sidigraph(&g, 1e-12).unwrap(), 1.0);
    }

    #[test]
    fn conjugate_closure() {
        assert!(cycle_spectrum(CycleSpec::negative(7).unwrap()).is_conjugate_closed(1e-12));
        let lopsided = Spectrum::new(vec![Complex64::i(), Complex64::new(0.0, 2.0)]);
        assert!(!lopsided.is_conjugate_closed(1e-9));
    }

    #[test]
    fn whole_matrix_path_agrees() {
        let cfg = BicyclicConfig::from_parts(9, 3, Sign::Negative, 6, Sign::Positive).unwrap();
        let g = build_adjacency(&cfg);
        let a = energy_of_sidigraph(&g, 1e-12).unwrap();
        let b = energy(&whole_matrix_spectrum(&g, 1e-12).unwrap());
        assert!(close(a, b, 1e-9));
    }
}
