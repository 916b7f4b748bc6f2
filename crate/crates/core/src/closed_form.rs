//! Trigonometric closed forms for cycle and configuration energies.

use std::f64::consts::PI;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{BicyclicConfig, CycleSpec, Sign};
use crate::numeric::compensated_sum;

/// `k mod 4`, the case split of the cycle energy formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ResidueClass {
    Zero,
    One,
    Two,
    Three,
}

impl ResidueClass {
    pub fn of(k: usize) -> Self {
        match k % 4 {
            0 => Self::Zero,
            1 => Self::One,
            2 => Self::Two,
            _ => Self::Three,
        }
    }

    pub fn value(self) -> usize {
        self as usize
    }
}

/// Which trigonometric expression a cycle's energy uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Branch {
    /// `2 cot(pi/k)`
    TwoCot,
    /// `2 csc(pi/k)`
    TwoCsc,
    /// `csc(pi/2k)`, odd k
    HalfAngleCsc,
}

impl Branch {
    pub fn label(self) -> &'static str {
        match self {
            Branch::TwoCot => "2cot(pi/k)",
            Branch::TwoCsc => "2csc(pi/k)",
            Branch::HalfAngleCsc => "csc(pi/2k)",
        }
    }

    pub fn evaluate(self, k: usize) -> f64 {
        match self {
            Branch::TwoCot => 2.0 * cot_pi_over(k as f64),
            Branch::TwoCsc => 2.0 * csc_pi_over(k as f64),
            Branch::HalfAngleCsc => csc_pi_over(2.0 * k as f64),
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// `cot(pi/x)`. The two angles where cot is an exact small integer are
/// returned exactly so that genuine ties compare equal.
pub fn cot_pi_over(x: f64) -> f64 {
    if x == 2.0 {
        0.0
    } else if x == 4.0 {
        1.0
    } else {
        let t = PI / x;
        t.cos() / t.sin()
    }
}

/// `csc(pi/x)`
pub fn csc_pi_over(x: f64) -> f64 {
    1.0 / (PI / x).sin()
}

fn check_order(k: usize) -> Result<()> {
    if k < 2 {
        Err(Error::CycleOrder(k))
    } else {
        Ok(())
    }
}

pub fn branch(cycle: CycleSpec) -> Branch {
    let k = cycle.order();
    match (ResidueClass::of(k), cycle.sign()) {
        (ResidueClass::One | ResidueClass::Three, _) => Branch::HalfAngleCsc,
        (ResidueClass::Zero, Sign::Positive) | (ResidueClass::Two, Sign::Negative) => Branch::TwoCot,
        (ResidueClass::Two, Sign::Positive) | (ResidueClass::Zero, Sign::Negative) => Branch::TwoCsc,
    }
}

pub fn energy_pos_cycle(k: usize) -> Result<f64> {
    check_order(k)?;
    Ok(energy_cycle(CycleSpec::positive(k)?))
}

pub fn energy_neg_cycle(k: usize) -> Result<f64> {
    check_order(k)?;
    Ok(energy_cycle(CycleSpec::negative(k)?))
}

pub fn energy_cycle(cycle: CycleSpec) -> f64 {
    branch(cycle).evaluate(cycle.order())
}

/// Sum of the two cycle energies; isolated vertices contribute nothing.
pub fn energy_config(config: &BicyclicConfig) -> f64 {
    compensated_sum(config.cycles().map(energy_cycle))
}

/// True iff the positive and negative closed forms coincide exactly at `k`,
/// which is the case precisely for odd `k`.
pub fn parity_equalities_hold(k: usize) -> Result<bool> {
    Ok(energy_pos_cycle(k)? == energy_neg_cycle(k)?)
}
