//! Aberth simultaneous iteration on square-free factors.

use num_complex::Complex64;

use super::poly::IntPolynomial;
use super::Spectrum;
use crate::error::{Error, Result};

pub const MAX_ITERATIONS: usize = 500;

/// Checks `tol` lies in `(0, 1e-6]`.
pub fn validate_tolerance(tol: f64) -> Result<()> {
    if tol > 0.0 && tol <= 1e-6 {
        Ok(())
    } else {
        Err(Error::Tolerance(tol))
    }
}

/// All complex roots of `p` with multiplicity.
///
/// Zero roots are split off exactly, the remainder is decomposed into
/// square-free factors over the integers, and each factor is solved by Aberth
/// iteration from a deterministic perturbed circle. Multiple roots therefore
/// come out as accurately as simple ones.
pub fn poly_roots(p: &IntPolynomial, tol: f64) -> Result<Spectrum> {
    validate_tolerance(tol)?;
    if p.is_zero() || p.degree() == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let zeros = p.zero_root_multiplicity();
    let mut values = vec![Complex64::new(0.0, 0.0); zeros];
    let rest = p.strip_zero_roots();
    for (factor, multiplicity) in rest.square_free_factors() {
        let roots = aberth(&factor.to_f64(), tol)?;
        for _ in 0..multiplicity {
            values.extend_from_slice(&roots);
        }
    }
    debug_assert_eq!(values.len(), p.degree());
    Ok(Spectrum::new(values))
}

fn horner(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut value = Complex64::new(0.0, 0.0);
    let mut deriv = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        deriv = deriv * z + value;
        value = value * z + c;
    }
    (value, deriv)
}

/// Roots of a square-free polynomial given by ascending `f64` coefficients.
pub fn aberth(coeffs: &[f64], tol: f64) -> Result<Vec<Complex64>> {
    let d = coeffs.len() - 1;
    let lead = coeffs[d];
    if d == 1 {
        return Ok(vec![Complex64::new(-coeffs[0] / lead, 0.0)]);
    }

    let center = Complex64::new(-coeffs[d - 1] / (d as f64 * lead), 0.0);
    let (at_center, _) = horner(coeffs, center);
    let mut radius = (at_center.norm() / lead.abs()).powf(1.0 / d as f64);
    if !radius.is_finite() || radius <= f64::EPSILON {
        radius = 1.0;
    }
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| {
            let theta = std::f64::consts::TAU * k as f64 / d as f64 + 0.4;
            let r = radius * (1.0 + 0.03 * (k % 3) as f64);
            center + Complex64::from_polar(r, theta)
        })
        .collect();

    let roundoff = 16.0 * f64::EPSILON;
    let mut max_update = f64::INFINITY;
    for _ in 0..MAX_ITERATIONS {
        max_update = 0.0;
        let mut settled = true;
        for k in 0..d {
            let (p, dp) = horner(coeffs, z[k]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..d)
                .filter(|&j| j != k)
                .map(|j| (z[k] - z[j]).inv())
                .sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if !w.is_finite() {
                continue;
            }
            z[k] -= w;
            let step = w.norm();
            max_update = max_update.max(step);
            if step >= tol && step > roundoff * z[k].norm().max(1.0) {
                settled = false;
            }
        }
        if settled {
            return Ok(z);
        }
    }
    let max_residual = z
        .iter()
        .map(|&r| horner(coeffs, r).0.norm())
        .fold(0.0, f64::max);
    Err(Error::NoConvergence {
        iterations: MAX_ITERATIONS,
        max_update,
        max_residual,
    })
}
