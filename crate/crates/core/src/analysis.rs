//! Monotone-function registry and the bounding inequalities used by the
//! ordering arguments.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::closed_form::{cot_pi_over, csc_pi_over, energy_config};
use crate::error::{Error, Result};
use crate::graph::{BicyclicConfig, Sign};

/// Slack for every numerical inequality in this module.
pub const SLACK: f64 = 1e-12;

/// Right end used for claims stated on `[2, inf)`.
pub const UNBOUNDED_TRUNCATION: f64 = 1e6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    Increasing,
    Decreasing,
}

impl Direction {
    pub fn reversed(self) -> Self {
        match self {
            Direction::Increasing => Direction::Decreasing,
            Direction::Decreasing => Direction::Increasing,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Direction::Increasing => "increasing",
            Direction::Decreasing => "decreasing",
        }
    }
}

/// The functions whose monotonicity the ordering proofs rely on. `n` is the
/// total order; `w = n - z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MonotoneFunction {
    /// `2(cot(pi/z) + cot(pi/w))`
    CotCot,
    /// `2(csc(pi/z) + cot(pi/w))`
    CscCot,
    /// `2(csc(pi/z) + csc(pi/w))`
    CscCsc,
    /// `z sin(pi/z)`
    SineScaled,
    /// `(pi/z^2) cos(pi/z) csc^2(pi/z)` on `[2, n-2]`
    CotDerivativeKernel,
    /// `(pi/z^2) cos(pi/2z) csc^2(pi/2z)`
    HalfAngleKernel,
    /// `(pi/z^2) cos(pi/z) csc^2(pi/z)` on `[2, inf)`
    FullAngleKernel,
    /// `2(cot(pi/z) + csc(pi/w))`
    CotCsc,
    /// `csc(pi/2z) + csc(pi/2w)`
    HalfCscPair,
    /// `2 csc(pi/z) + csc(pi/2w)`
    CscHalfCsc,
    /// `csc(pi/2z) + 2 csc(pi/w)`
    HalfCscCsc,
    /// `2 cot(pi/z) + csc(pi/2w)`
    CotHalfCsc,
}

fn kernel(x: f64) -> f64 {
    let t = PI / x;
    let s = t.sin();
    PI / (x * x) * t.cos() / (s * s)
}

impl MonotoneFunction {
    pub fn id(self) -> &'static str {
        match self {
            Self::CotCot => "cot-cot-sum",
            Self::CscCot => "csc-cot-sum",
            Self::CscCsc => "csc-csc-sum",
            Self::SineScaled => "sine-scaled",
            Self::CotDerivativeKernel => "cot-derivative-kernel",
            Self::HalfAngleKernel => "half-angle-kernel",
            Self::FullAngleKernel => "full-angle-kernel",
            Self::CotCsc => "cot-csc-sum",
            Self::HalfCscPair => "half-csc-pair",
            Self::CscHalfCsc => "csc-half-csc",
            Self::HalfCscCsc => "half-csc-csc",
            Self::CotHalfCsc => "cot-half-csc",
        }
    }

    pub fn formula(self) -> &'static str {
        match self {
            Self::CotCot => "2(cot(pi/z) + cot(pi/(n-z)))",
            Self::CscCot => "2(csc(pi/z) + cot(pi/(n-z)))",
            Self::CscCsc => "2(csc(pi/z) + csc(pi/(n-z)))",
            Self::SineScaled => "z sin(pi/z)",
            Self::CotDerivativeKernel | Self::FullAngleKernel => "(pi/z^2) cos(pi/z) csc^2(pi/z)",
            Self::HalfAngleKernel => "(pi/z^2) cos(pi/2z) csc^2(pi/2z)",
            Self::CotCsc => "2(cot(pi/z) + csc(pi/(n-z)))",
            Self::HalfCscPair => "csc(pi/2z) + csc(pi/2(n-z))",
            Self::CscHalfCsc => "2csc(pi/z) + csc(pi/2(n-z))",
            Self::HalfCscCsc => "csc(pi/2z) + 2csc(pi/(n-z))",
            Self::CotHalfCsc => "2cot(pi/z) + csc(pi/2(n-z))",
        }
    }

    pub fn depends_on_n(self) -> bool {
        !matches!(self, Self::SineScaled | Self::HalfAngleKernel | Self::FullAngleKernel)
    }

    pub fn evaluate(self, n: f64, z: f64) -> f64 {
        let w = n - z;
        match self {
            Self::CotCot => 2.0 * (cot_pi_over(z) + cot_pi_over(w)),
            Self::CscCot => 2.0 * (csc_pi_over(z) + cot_pi_over(w)),
            Self::CscCsc => 2.0 * (csc_pi_over(z) + csc_pi_over(w)),
            Self::SineScaled => z * (PI / z).sin(),
            Self::CotDerivativeKernel | Self::FullAngleKernel => kernel(z),
            Self::HalfAngleKernel => kernel(2.0 * z) * 4.0,
            Self::CotCsc => 2.0 * (cot_pi_over(z) + csc_pi_over(w)),
            Self::HalfCscPair => csc_pi_over(2.0 * z) + csc_pi_over(2.0 * w),
            Self::CscHalfCsc => 2.0 * csc_pi_over(z) + csc_pi_over(2.0 * w),
            Self::HalfCscCsc => csc_pi_over(2.0 * z) + 2.0 * csc_pi_over(w),
            Self::CotHalfCsc => 2.0 * cot_pi_over(z) + csc_pi_over(2.0 * w),
        }
    }
}

/// One interval-direction statement about a [`MonotoneFunction`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MonotoneClaim {
    pub claim_id: String,
    pub function: MonotoneFunction,
    pub n: usize,
    pub lo: f64,
    pub hi: f64,
    pub direction: Direction,
}

impl MonotoneClaim {
    fn new(function: MonotoneFunction, n: usize, lo: f64, hi: f64, direction: Direction, part: &str) -> Self {
        let claim_id = if part.is_empty() {
            function.id().to_string()
        } else {
            format!("{}/{part}", function.id())
        };
        Self { claim_id, function, n, lo, hi, direction }
    }

    pub fn evaluate(&self, z: f64) -> f64 {
        self.function.evaluate(self.n as f64, z)
    }

    /// The same claim with the direction flipped; a negative control.
    pub fn inverted(&self) -> Self {
        Self {
            claim_id: format!("{}/inverted", self.claim_id),
            direction: self.direction.reversed(),
            ..self.clone()
        }
    }

    pub fn with_interval(&self, lo: f64, hi: f64) -> Self {
        Self { lo, hi, ..self.clone() }
    }
}

impl fmt::Display for MonotoneClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} is {} on [{}, {}] (n = {})",
            self.function.formula(),
            self.direction.as_str(),
            self.lo,
            self.hi,
            self.n
        )
    }
}

/// Smallest `n` for which the registry is stated.
pub const REGISTRY_MIN_N: usize = 5;

/// Every monotonicity statement, instantiated at `n`. Claims independent of
/// `n` are included once per call with their own interval.
pub fn registry(n: usize) -> Result<Vec<MonotoneClaim>> {
    use Direction::*;
    use MonotoneFunction::*;
    if n < REGISTRY_MIN_N {
        return Err(Error::Precondition(format!("monotone claims need n > 4, got {n}")));
    }
    let nf = n as f64;
    let top = nf - 2.0;
    let inf = UNBOUNDED_TRUNCATION;
    Ok(vec![
        MonotoneClaim::new(CotCot, n, 2.0, nf / 2.0, Increasing, "lower"),
        MonotoneClaim::new(CotCot, n, nf / 2.0, top, Decreasing, "upper"),
        MonotoneClaim::new(CscCot, n, 2.0, top, Decreasing, ""),
        MonotoneClaim::new(CscCsc, n, 2.0, nf / 2.0, Decreasing, ""),
        MonotoneClaim::new(SineScaled, n, 2.0, inf, Increasing, ""),
        MonotoneClaim::new(CotDerivativeKernel, n, 2.0, top, Increasing, ""),
        MonotoneClaim::new(HalfAngleKernel, n, 2.0, inf, Increasing, ""),
        MonotoneClaim::new(FullAngleKernel, n, 2.0, inf, Increasing, ""),
        MonotoneClaim::new(CotCsc, n, 2.0, top, Increasing, ""),
        MonotoneClaim::new(HalfCscPair, n, 2.0, nf / 2.0, Decreasing, "lower"),
        MonotoneClaim::new(HalfCscPair, n, nf / 2.0, top, Increasing, "upper"),
        MonotoneClaim::new(CscHalfCsc, n, 2.0, 2.0 * nf / 3.0, Decreasing, "lower"),
        MonotoneClaim::new(CscHalfCsc, n, 2.0 * nf / 3.0, top, Increasing, "upper"),
        MonotoneClaim::new(HalfCscCsc, n, 2.0, nf / 3.0, Decreasing, "lower"),
        MonotoneClaim::new(HalfCscCsc, n, nf / 3.0, top, Increasing, "upper"),
        MonotoneClaim::new(CotHalfCsc, n, 2.0, top, Increasing, ""),
    ])
}

/// Looks up a claim by id at `n`.
pub fn find_claim(claim_id: &str, n: usize) -> Result<MonotoneClaim> {
    registry(n)?
        .into_iter()
        .find(|c| c.claim_id == claim_id)
        .ok_or_else(|| Error::Precondition(format!("no monotone claim `{claim_id}`")))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub z0: f64,
    pub z1: f64,
    pub delta: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MonotoneReport {
    pub claim_id: String,
    pub n: usize,
    pub lo: f64,
    pub hi: f64,
    pub direction: Direction,
    pub samples: usize,
    pub violation_count: usize,
    /// First few violating pairs, in sampling order.
    pub violations: Vec<Violation>,
    pub min_slope: f64,
    pub max_slope: f64,
}

impl MonotoneReport {
    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }
}

const REPORTED_VIOLATIONS: usize = 5;

/// Samples the claim at `samples` equally spaced points (endpoints included)
/// and flags every adjacent pair that moves against the claimed direction by
/// more than [`SLACK`].
pub fn check_monotone(claim: &MonotoneClaim, samples: usize) -> Result<MonotoneReport> {
    if samples < 2 {
        return Err(Error::Precondition(format!("need at least 2 samples, got {samples}")));
    }
    if claim.lo >= claim.hi {
        return Err(Error::Precondition(format!(
            "empty interval [{}, {}] for {}",
            claim.lo, claim.hi, claim.claim_id
        )));
    }
    let h = (claim.hi - claim.lo) / (samples - 1) as f64;
    let z_at = |i: usize| if i == samples - 1 { claim.hi } else { claim.lo + h * i as f64 };
    let mut prev_z = z_at(0);
    let mut prev_f = claim.evaluate(prev_z);
    let mut violation_count = 0;
    let mut violations = Vec::new();
    let mut min_slope = f64::INFINITY;
    let mut max_slope = f64::NEG_INFINITY;
    for i in 1..samples {
        let z = z_at(i);
        let f = claim.evaluate(z);
        let delta = f - prev_f;
        let slope = delta / (z - prev_z);
        min_slope = min_slope.min(slope);
        max_slope = max_slope.max(slope);
        let against = match claim.direction {
            Direction::Increasing => -delta,
            Direction::Decreasing => delta,
        };
        if against > SLACK || !f.is_finite() {
            violation_count += 1;
            if violations.len() < REPORTED_VIOLATIONS {
                violations.push(Violation { z0: prev_z, z1: z, delta });
            }
        }
        prev_z = z;
        prev_f = f;
    }
    Ok(MonotoneReport {
        claim_id: claim.claim_id.clone(),
        n: claim.n,
        lo: claim.lo,
        hi: claim.hi,
        direction: claim.direction,
        samples,
        violation_count,
        violations,
        min_slope,
        max_slope,
    })
}

/// `1/z - 0.429 z <= cot z <= 1/z - z/3` on `(0, pi/2]`, with [`SLACK`]
/// taken relative to `max(1, 1/z)`.
pub fn cot_bounds_hold(z: f64) -> Result<bool> {
    if !(z > 0.0 && z <= FRAC_PI_2) {
        return Err(Error::Domain { value: z, domain: "(0, pi/2]" });
    }
    let cot = if z == FRAC_PI_2 { 0.0 } else { z.cos() / z.sin() };
    let lower = 1.0 / z - 0.429 * z;
    let upper = 1.0 / z - z / 3.0;
    // near 0 all three sides are ~1/z, so the slack scales with them
    let slack = SLACK * (1.0 / z).max(1.0);
    Ok(lower <= cot + slack && cot <= upper + slack)
}

/// `z - z^3/6 <= sin z <= z` on `(0, pi/2)`.
pub fn sin_bounds_hold(z: f64) -> Result<bool> {
    if !(z > 0.0 && z < FRAC_PI_2) {
        return Err(Error::Domain { value: z, domain: "(0, pi/2)" });
    }
    let s = z.sin();
    Ok(z - z * z * z / 6.0 <= s + SLACK && s <= z + SLACK)
}

/// `pi z / (e z^2 - pi^2) <= pi d / (e d^2 - pi^2)` for `z >= d > 0`, `e > 0`,
/// with both denominators positive.
pub fn rational_bound_holds(z: f64, d: f64, e: f64) -> Result<bool> {
    if !(d > 0.0) {
        return Err(Error::Domain { value: d, domain: "d > 0" });
    }
    if !(z >= d) {
        return Err(Error::Domain { value: z, domain: "z >= d" });
    }
    if !(e > 0.0) {
        return Err(Error::Domain { value: e, domain: "e > 0" });
    }
    let den_d = e * d * d - PI * PI;
    let den_z = e * z * z - PI * PI;
    if !(den_d > 0.0) {
        return Err(Error::Domain { value: den_d, domain: "e d^2 - pi^2 > 0" });
    }
    if !(den_z > 0.0) {
        return Err(Error::Domain { value: den_z, domain: "e z^2 - pi^2 > 0" });
    }
    Ok(PI * z / den_z <= PI * d / den_d + SLACK)
}

/// `count` in-domain `(z, d, e)` triples drawn from a seeded generator.
pub fn rational_bound_samples(count: usize, seed: u64) -> Vec<(f64, f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let d = rng.gen_range(0.05..20.0);
        let e = rng.gen_range(0.05..50.0);
        let z = d + rng.gen_range(0.0..50.0);
        if e * d * d > PI * PI {
            out.push((z, d, e));
        }
    }
    out
}

/// `count` log-spaced points in `(0, hi)`, ending at `hi` if `include_hi`.
pub fn log_spaced(lo: f64, hi: f64, count: usize, include_hi: bool) -> Vec<f64> {
    let (a, b) = (lo.ln(), hi.ln());
    let denom = if include_hi { count - 1 } else { count } as f64;
    (0..count)
        .map(|i| if include_hi && i == count - 1 { hi } else { (a + (b - a) * i as f64 / denom).exp().min(hi) })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundCheck {
    pub claim_id: &'static str,
    pub config: String,
    pub energy: f64,
    pub bound: f64,
    /// Positive when the inequality holds.
    pub slack: f64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProofBoundsReport {
    pub n: usize,
    pub checks: Vec<BoundCheck>,
}

impl ProofBoundsReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

/// The three estimates behind the `n = 0 (mod 4)` maximality argument:
/// a lower bound on `E[2, n-2]` and upper bounds on `E[-4, n-4]` and
/// `E[-4, -(n-4)]`.
pub fn proof_bounds_hold(n: usize) -> Result<ProofBoundsReport> {
    if n % 4 != 0 || n <= 5 {
        return Err(Error::Precondition(format!("proof bounds need n = 0 (mod 4) and n > 5, got {n}")));
    }
    let nf = n as f64;
    let base = 2.0 * nf / PI;
    let lower_check = |id, cfg: BicyclicConfig, bound: f64| {
        let energy = energy_config(&cfg);
        BoundCheck { claim_id: id, config: cfg.label(), energy, bound, slack: energy - bound, holds: energy >= bound }
    };
    let upper_check = |id, cfg: BicyclicConfig, bound: f64| {
        let energy = energy_config(&cfg);
        BoundCheck { claim_id: id, config: cfg.label(), energy, bound, slack: bound - energy, holds: energy <= bound }
    };
    use Sign::*;
    Ok(ProofBoundsReport {
        n,
        checks: vec![
            lower_check(
                "max-lower-bound",
                BicyclicConfig::from_parts(n, 2, Positive, n - 2, Positive)?,
                base + 0.7267,
            ),
            upper_check(
                "neg4-pos-upper-bound",
                BicyclicConfig::from_parts(n, 4, Negative, n - 4, Positive)?,
                base + 0.2819 - 2.0 * PI / (3.0 * (nf - 4.0)),
            ),
            upper_check(
                "neg4-neg-upper-bound",
                BicyclicConfig::from_parts(n, 4, Negative, n - 4, Negative)?,
                base + 0.5737,
            ),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_tally() {
        let r = registry(12).unwrap();
        assert_eq!(r.len(), 16);
        let mut ids: Vec<_> = r.iter().map(|c| c.claim_id.as_str()).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), 16);
        assert!(registry(4).is_err());
    }

    #[test]
    fn cot_csc_example_value() {
        let c = find_claim("cot-csc-sum", 10).unwrap();
        let direct = 2.0 * (1.0 / (PI / 5.0).tan() + 1.0 / (PI / 5.0).sin());
        assert!((c.evaluate(5.0) - direct).abs() < 1e-14);
        assert!((c.evaluate(5.0) - 6.155).abs() < 1e-3);
    }

    #[test]
    fn sine_scaled_truncation() {
        let c = find_claim("sine-scaled", 12).unwrap();
        assert_eq!((c.lo, c.hi), (2.0, 1e6));
        assert!((c.evaluate(c.hi) - PI).abs() < 1e-10);
    }

    #[test]
    fn sine_scaled_passes_and_control_fails() {
        let c = find_claim("sine-scaled", 12).unwrap().with_interval(2.0, 100.0);
        let r = check_monotone(&c, 10_000).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(r.min_slope > 0.0);
        let bad = check_monotone(&c.inverted(), 10_000).unwrap();
        assert!(bad.violation_count >= 9_000, "{}", bad.violation_count);
    }

    #[test]
    fn csc_cot_at_twelve() {
        let c = find_claim("csc-cot-sum", 12).unwrap();
        assert!(check_monotone(&c, 10_000).unwrap().passed());
    }

    #[test]
    fn monotone_preconditions() {
        let c = find_claim("csc-cot-sum", 12).unwrap();
        assert!(check_monotone(&c, 1).is_err());
        assert!(check_monotone(&c.with_interval(3.0, 3.0), 10).is_err());
    }

    #[test]
    fn cot_bound_examples() {
        assert!(cot_bounds_hold(FRAC_PI_2).unwrap());
        assert!((1.0 / FRAC_PI_2 - 0.429 * FRAC_PI_2 + 0.0374).abs() < 1e-3);
        assert!(cot_bounds_hold(0.1).unwrap());
        assert!(cot_bounds_hold(2.0).is_err());
        assert!(cot_bounds_hold(0.0).is_err());
    }

    #[test]
    fn sin_bound_examples() {
        assert!(sin_bounds_hold(1.0).unwrap());
        assert!(sin_bounds_hold(0.01).unwrap());
        assert!(sin_bounds_hold(3.0).is_err());
        assert!(sin_bounds_hold(FRAC_PI_2).is_err());
    }

    #[test]
    fn rational_bound_examples() {
        assert!(rational_bound_holds(5.0, 4.0, 6.0).unwrap());
        assert!(rational_bound_holds(4.0, 4.0, 6.0).unwrap());
        assert!(matches!(rational_bound_holds(2.0, 1.0, 1.0), Err(Error::Domain { .. })));
        assert!(rational_bound_holds(1.0, 2.0, 6.0).is_err());
    }

    #[test]
    fn rational_samples_are_seeded_and_in_domain() {
        let a = rational_bound_samples(100, 7);
        assert_eq!(a, rational_bound_samples(100, 7));
        assert!(a.iter().all(|&(z, d, e)| rational_bound_holds(z, d, e).is_ok()));
    }

    #[test]
    fn proof_bounds_examples() {
        assert!(proof_bounds_hold(8).unwrap().all_hold());
        let r = proof_bounds_hold(100).unwrap();
        assert!(r.checks[0].holds && r.checks[2].holds);
        assert!(r.checks.iter().all(|c| c.slack.is_finite()));
        assert!(proof_bounds_hold(6).is_err());
        assert!(proof_bounds_hold(4).is_err());
    }

    /// The printed constant 0.2819 sits below 2 sqrt(2) - 8/pi = 0.281948...,
    /// so the second estimate stops holding once the cot bound is tighter
    /// than the rounding loss.
    #[test]
    fn rounded_constant_breaks_second_estimate_for_large_n() {
        let failing: Vec<usize> = (8..=200)
            .step_by(4)
            .filter(|&n| !proof_bounds_hold(n).unwrap().checks[1].holds)
            .collect();
        assert_eq!(failing.first(), Some(&36));
        assert_eq!(failing, (36..=200).step_by(4).collect::<Vec<_>>());
        let worst = proof_bounds_hold(200).unwrap().checks[1].slack;
        assert!(worst < 0.0 && worst > -6.0e-5, "{worst}");
    }
}
