//! One-unknown equations of degree at most two.

mod classic;
mod quadratic;

pub use classic::{factors_from_diff_product, interest_ab_2_25, product_via_squares, InterestSolution};
pub use quadratic::{solve_quadratic_madhyamaharana, Roots, Snapshot, SolveTrace, StepLabel, TraceStep};

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{ArithError, QuadraticSurd, Rational};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BijaError {
    #[error("identity equation (indeterminate)")]
    Indeterminate,
    #[error("inconsistent")]
    Inconsistent,
    #[error("not quadratic (use solve_linear)")]
    NotQuadratic,
    #[error("no real root")]
    NoRealRoot,
    #[error("no real factor pair")]
    NoRealFactorPair,
    #[error("{0} must be positive")]
    NonPositive(&'static str),
    #[error("{0} must not be negative")]
    Negative(&'static str),
    #[error("trace step {step} does not follow: {reason}")]
    InvalidTrace { step: usize, reason: String },
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// One side of an equation: `yāva·x² + yā·x + rū`.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Paksha {
    pub yava: Rational,
    pub ya: Rational,
    pub ru: Rational,
}

impl Paksha {
    pub fn new(yava: impl Into<Rational>, ya: impl Into<Rational>, ru: impl Into<Rational>) -> Self {
        Paksha { yava: yava.into(), ya: ya.into(), ru: ru.into() }
    }

    pub fn zero() -> Self {
        Paksha::default()
    }

    pub fn is_zero(&self) -> bool {
        self.yava.is_zero() && self.ya.is_zero() && self.ru.is_zero()
    }

    pub fn coefficients(&self) -> [&Rational; 3] {
        [&self.yava, &self.ya, &self.ru]
    }

    pub fn sub(&self, other: &Paksha) -> Paksha {
        Paksha { yava: &self.yava - &other.yava, ya: &self.ya - &other.ya, ru: &self.ru - &other.ru }
    }

    pub fn scale(&self, k: &Rational) -> Paksha {
        Paksha { yava: &self.yava * k, ya: &self.ya * k, ru: &self.ru * k }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        &self.yava * &x.square() + &self.ya * x + &self.ru
    }

    pub fn eval_surd(&self, x: &QuadraticSurd) -> Result<QuadraticSurd, ArithError> {
        let x2 = x.mul(x)?;
        x2.scale(&self.yava).add(&x.scale(&self.ya))?.add(&QuadraticSurd::from(self.ru.clone()))
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, first: bool, c: &Rational, var: &str) -> fmt::Result {
    let sign = if c.is_negative() { "−" } else { "+" };
    match (first, c.is_negative()) {
        (true, false) => {}
        (true, true) => write!(f, "−")?,
        (false, _) => write!(f, " {sign} ")?,
    }
    let m = c.abs();
    if var.is_empty() {
        write!(f, "{m}")
    } else if m == Rational::one() {
        write!(f, "{var}")
    } else if m.is_integer() {
        write!(f, "{m}{var}")
    } else {
        write!(f, "({m}){var}")
    }
}

/// Writes `c2·x² + c1·x + c0`, skipping zero terms.
pub(crate) fn write_poly(f: &mut fmt::Formatter<'_>, terms: [(&Rational, &str); 3]) -> fmt::Result {
    let mut first = true;
    for (c, var) in terms {
        if c.is_zero() {
            continue;
        }
        write_term(f, first, c, var)?;
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for Paksha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, [(&self.yava, "x²"), (&self.ya, "x"), (&self.ru, "")])
    }
}

/// Two pakṣas taken to be equal.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Equation {
    pub left: Paksha,
    pub right: Paksha,
}

impl Equation {
    pub fn new(left: Paksha, right: Paksha) -> Self {
        Equation { left, right }
    }

    /// From `[yava₁, ya₁, ru₁, yava₂, ya₂, ru₂]`.
    pub fn from_coefficients(c: [Rational; 6]) -> Self {
        let [a1, b1, c1, a2, b2, c2] = c;
        Equation::new(Paksha { yava: a1, ya: b1, ru: c1 }, Paksha { yava: a2, ya: b2, ru: c2 })
    }

    pub fn is_normalized(&self) -> bool {
        self.right.is_zero()
            && self
                .left
                .coefficients()
                .into_iter()
                .find(|c| !c.is_zero())
                .is_some_and(|c| c.is_positive())
    }

    pub fn degree(&self) -> Option<u8> {
        let d = self.left.sub(&self.right);
        if !d.yava.is_zero() {
            Some(2)
        } else if !d.ya.is_zero() {
            Some(1)
        } else if !d.ru.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    /// Whether `x` makes both sides equal.
    pub fn holds_at(&self, x: &QuadraticSurd) -> Result<bool, ArithError> {
        Ok(self.left.eval_surd(x)? == self.right.eval_surd(x)?)
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.left, self.right)
    }
}

/// Samī-karaṇa: move everything to the left and make the leading term positive.
pub fn normalize(e: &Equation) -> Result<Equation, BijaError> {
    let mut d = e.left.sub(&e.right);
    let lead = d.coefficients().into_iter().position(|c| !c.is_zero());
    match lead {
        None => return Err(BijaError::Indeterminate),
        Some(2) => return Err(BijaError::Inconsistent),
        Some(_) => {}
    }
    let negative = d.coefficients().into_iter().find(|c| !c.is_zero()).is_some_and(Rational::is_negative);
    if negative {
        d = d.scale(&Rational::from(-1));
    }
    Ok(Equation::new(d, Paksha::zero()))
}

/// `a1·x + b1 = a2·x + b2`.
pub fn solve_linear(a1: &Rational, b1: &Rational, a2: &Rational, b2: &Rational) -> Result<Rational, BijaError> {
    let da = a1 - a2;
    if da.is_zero() {
        return Err(if b1 == b2 { BijaError::Indeterminate } else { BijaError::Inconsistent });
    }
    Ok((b2 - b1) / da)
}

/// Solves any equation of degree one or two. Linear equations give one root.
pub fn solve(e: &Equation) -> Result<(Roots, Option<SolveTrace>), BijaError> {
    let n = normalize(e)?;
    if n.left.yava.is_zero() {
        let x = solve_linear(&n.left.ya, &n.left.ru, &Rational::zero(), &Rational::zero())?;
        return Ok((Roots::new(vec![x.into()]), None));
    }
    let (roots, trace) = solve_quadratic_madhyamaharana(e)?;
    Ok((roots, Some(trace)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn normalizing() {
        let e = Equation::new(Paksha::new(0, 10, -8), Paksha::new(1, 0, 1));
        assert_eq!(e.to_string(), "10x − 8 = x² + 1");
        let n = normalize(&e).unwrap();
        assert_eq!(n.left, Paksha::new(1, -10, 9));
        assert!(n.is_normalized());
        assert_eq!(n.to_string(), "x² − 10x + 9 = 0");
        let same = Equation::new(Paksha::new(0, 1, 0), Paksha::new(0, 1, 0));
        assert_eq!(normalize(&same), Err(BijaError::Indeterminate));
        let bad = Equation::new(Paksha::new(0, 0, 1), Paksha::new(0, 0, 2));
        assert_eq!(normalize(&bad), Err(BijaError::Inconsistent));
        assert_eq!(normalize(&bad).unwrap_err().to_string(), "inconsistent");
    }

    #[test]
    fn linear() {
        assert_eq!(solve_linear(&r(5), &r(2), &r(3), &r(8)).unwrap(), r(3));
        assert_eq!(solve_linear(&r(1), &r(0), &r(0), &r(7)).unwrap(), r(7));
        assert_eq!(solve_linear(&r(4), &r(1), &r(4), &r(1)), Err(BijaError::Indeterminate));
        assert_eq!(solve_linear(&r(4), &r(1), &r(4), &r(2)), Err(BijaError::Inconsistent));
    }

    #[test]
    fn dispatch() {
        let e = Equation::new(Paksha::new(0, 1, 0), Paksha::new(0, 0, 0));
        let (roots, trace) = solve(&e).unwrap();
        assert_eq!(roots.values, vec![QuadraticSurd::from(r(0))]);
        assert!(trace.is_none());
        let q = Equation::new(Paksha::new(1, 1, 0), Paksha::new(0, 0, 2));
        assert!(solve(&q).unwrap().1.is_some());
    }

    #[test]
    fn display_fractions() {
        let p = Paksha::new(Rational::new(1, 25), -1, Rational::new(-7, 2));
        assert_eq!(p.to_string(), "(1/25)x² − x − 7/2");
        assert_eq!(Paksha::zero().to_string(), "0");
        assert_eq!(Paksha::new(-1, 0, 0).to_string(), "−x²");
    }
}
