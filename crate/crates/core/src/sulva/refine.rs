//! Measuring the unit square's diagonal by adding and removing pieces of cord.
//!
//! Starting from one unit, each correction is a piece of the previous
//! correction, `1/(previous_denominator · n)`. The piece is added while the
//! running length is short of the diagonal and removed once it is past it.
//! For the multiplier `n`, the smallest piece that does not cross the diagonal
//! competes with the next larger piece (which does cross); whichever lands
//! nearer the diagonal is taken. Crossing is decided by comparing
//! `cumulative²` with 2, and "nearer" by comparing `(low + high)²` with 8,
//! so no square root is ever approximated.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::arith::{Length, Rational, Unit};

use super::GeometryError;

/// Denominators roughly square at every step (twelve steps already carry
/// hundreds of digits), so the trace is capped.
pub const MAX_REFINEMENT_STEPS: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum StepSign {
    #[serde(rename = "+")]
    Add,
    #[serde(rename = "-")]
    Subtract,
}

impl StepSign {
    pub fn symbol(self) -> char {
        match self {
            StepSign::Add => '+',
            StepSign::Subtract => '-',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RefinementStep {
    pub sign: StepSign,
    /// Subdivision of the previous piece chosen at this step.
    pub multiplier: BigInt,
    /// Unsigned length of the piece, in units of the square's side.
    pub term: Rational,
    pub cumulative: Rational,
    /// Sign of `cumulative² - 2` after this step: -1 short, +1 past.
    pub residual_sign: i8,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RefinementTrace {
    pub steps: Vec<RefinementStep>,
}

impl RefinementTrace {
    pub fn value(&self) -> Rational {
        self.steps.last().map(|s| s.cumulative.clone()).unwrap_or_else(Rational::one)
    }

    /// `value² - 2`, exactly.
    pub fn residual(&self) -> Rational {
        self.value().square() - Rational::from(2)
    }

    pub fn multipliers(&self) -> Vec<BigInt> {
        self.steps.iter().map(|s| s.multiplier.clone()).collect()
    }

    /// Signed pieces, e.g. `[+1/3, +1/12, -1/408]`.
    pub fn signed_terms(&self) -> Vec<Rational> {
        self.steps
            .iter()
            .map(|s| match s.sign {
                StepSign::Add => s.term.clone(),
                StepSign::Subtract => -s.term.clone(),
            })
            .collect()
    }
}

impl fmt::Display for RefinementTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1")?;
        for s in &self.steps {
            write!(f, " {} {}", s.sign.symbol(), s.term)?;
        }
        write!(f, " = {}", self.value())
    }
}

fn below_root2(x: &Rational) -> bool {
    x.square() < Rational::from(2)
}

/// Of two values straddling √2, is `high` the nearer one.
fn high_is_nearer(low: &Rational, high: &Rational) -> bool {
    (low + high).square() < Rational::from(8)
}

/// Least `n ≥ 2` whose piece keeps `cumulative` on its current side of √2.
///
/// The search starts from `n ≈ 2c / (D·|c² − 2|)`, where the piece `1/(D·n)`
/// roughly equals the remaining gap, and gallops outward from there.
fn least_non_crossing(cumulative: &Rational, denom: &BigInt, sign: StepSign) -> BigInt {
    let below = below_root2(cumulative);
    let keeps_side = |n: &BigInt| -> bool {
        let piece = Rational::from_integer(denom * n).recip().expect("positive denominator");
        let next = match sign {
            StepSign::Add => cumulative + &piece,
            StepSign::Subtract => cumulative - &piece,
        };
        below_root2(&next) == below
    };
    let two = BigInt::from(2);
    if keeps_side(&two) {
        return two;
    }
    let gap = (cumulative.square() - Rational::from(2)).abs();
    let estimate = (Rational::from(2) * cumulative / (Rational::from_integer(denom.clone()) * gap)).floor();
    let start = estimate.max(BigInt::from(3));

    // bracket: `lo` crosses, `hi` keeps the side
    let (mut lo, mut hi);
    let mut step = BigInt::one();
    if keeps_side(&start) {
        hi = start.clone();
        loop {
            let next = &start - &step;
            if next <= two {
                lo = two.clone();
                break;
            }
            if !keeps_side(&next) {
                lo = next;
                break;
            }
            hi = next;
            step *= 2;
        }
    } else {
        lo = start.clone();
        loop {
            let next = &start + &step;
            if keeps_side(&next) {
                hi = next;
                break;
            }
            lo = next;
            step *= 2;
        }
    }
    while &hi - &lo > BigInt::one() {
        let mid: BigInt = (&lo + &hi) / 2;
        if keeps_side(&mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// Run the cord refinement for `max_steps` corrections after the initial unit.
pub fn sulba_diagonal_refinement(max_steps: usize) -> Result<RefinementTrace, GeometryError> {
    if max_steps < 1 {
        return Err(GeometryError::InvalidSteps("at least one step is required"));
    }
    if max_steps > MAX_REFINEMENT_STEPS {
        return Err(GeometryError::InvalidSteps("too many steps"));
    }
    let mut cumulative = Rational::one();
    let mut denom = BigInt::one();
    let mut steps = Vec::with_capacity(max_steps);

    for _ in 0..max_steps {
        let sign = if below_root2(&cumulative) { StepSign::Add } else { StepSign::Subtract };
        let apply = |n: &BigInt| -> Rational {
            let piece = Rational::from_integer(&denom * n).recip().expect("positive denominator");
            match sign {
                StepSign::Add => &cumulative + &piece,
                StepSign::Subtract => &cumulative - &piece,
            }
        };
        let keep = least_non_crossing(&cumulative, &denom, sign);
        let mut n = keep.clone();
        if keep > BigInt::from(2) {
            let cross = &keep - 1;
            let (kept, crossed) = (apply(&keep), apply(&cross));
            let (low, high) = match sign {
                StepSign::Add => (&kept, &crossed),
                StepSign::Subtract => (&crossed, &kept),
            };
            let crossed_is_high = sign == StepSign::Add;
            if high_is_nearer(low, high) == crossed_is_high {
                n = cross;
            }
        }
        cumulative = apply(&n);
        denom *= &n;
        let residual = cumulative.square() - Rational::from(2);
        steps.push(RefinementStep {
            sign,
            multiplier: n,
            term: Rational::from_integer(denom.clone()).recip().expect("positive denominator"),
            cumulative: cumulative.clone(),
            residual_sign: match residual.cmp(&Rational::zero()) {
                Ordering::Less => -1,
                Ordering::Equal => 0,
                Ordering::Greater => 1,
            },
        });
    }
    Ok(RefinementTrace { steps })
}

/// A correction piece laid out against a physical side length.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScaledCorrection {
    pub sign: StepSign,
    pub term: Rational,
    pub length: Length,
    /// The same piece in inches, when the unit converts.
    pub inches: Option<Length>,
}

impl ScaledCorrection {
    /// Whether the piece is longer than one aṅgula (3/4 inch).
    pub fn exceeds_angula(&self) -> Option<bool> {
        let inches = self.inches.as_ref()?.magnitude.as_rational()?.clone();
        Some(inches > Rational::new(3, 4))
    }
}

/// Multiply each correction by the side length `unit`.
pub fn scale_trace_to_unit(trace: &RefinementTrace, unit: &Length) -> Vec<ScaledCorrection> {
    trace
        .steps
        .iter()
        .map(|s| {
            let length = unit.scale(&s.term);
            let inches = length.convert(Unit::Inch).ok();
            ScaledCorrection { sign: s.sign, term: s.term.clone(), length, inches }
        })
        .collect()
}
