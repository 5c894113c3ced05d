//! Three verse problems: interest on interest, factors from their
//! difference and product, and a product from squares.

use serde::Serialize;

use crate::arith::{ExactScalar, QuadraticSurd, Rational};
use crate::sulva::{decompose_square, PartLabel};

use super::quadratic::{solve_quadratic_madhyamaharana, Roots, SolveTrace};
use super::{BijaError, Equation, Paksha};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InterestSolution {
    /// Interest on the principal for one month.
    pub x: QuadraticSurd,
    pub by_formula: QuadraticSurd,
    pub by_steps: QuadraticSurd,
    pub roots: Roots,
    pub trace: SolveTrace,
}

/// Principal `P` lent for a month earns `x`; `x` is then lent for `T`
/// months, and the two interests together come to `A`. Find `x`.
///
/// The equation `(T/P)·x² + x = A` is solved twice: by the closed rule
/// `x = (√(A·T·P + (P/2)²) − P/2) / T`, and by completing the square.
pub fn interest_ab_2_25(p: &Rational, t: &Rational, a: &Rational) -> Result<InterestSolution, BijaError> {
    if !p.is_positive() {
        return Err(BijaError::NonPositive("principal"));
    }
    if !t.is_positive() {
        return Err(BijaError::NonPositive("time"));
    }
    if a.is_negative() {
        return Err(BijaError::Negative("combined interest"));
    }
    let half_p = p / &Rational::from(2);
    let inv_t = t.recip()?;
    let radicand = a * t * p + half_p.square();
    let by_formula = QuadraticSurd::new(-(&half_p * &inv_t), ExactScalar::sqrt(&radicand)?.scale(&inv_t));

    let e = Equation::new(Paksha { yava: t / p, ya: Rational::one(), ru: Rational::zero() }, Paksha::new(0, 0, a.clone()));
    let (roots, trace) = solve_quadratic_madhyamaharana(&e)?;
    let roots = roots.nonnegative();
    let by_steps = roots
        .admissible_values()
        .into_iter()
        .next()
        .cloned()
        .ok_or(BijaError::NoRealRoot)?;
    if by_formula != by_steps {
        return Err(BijaError::InvalidTrace {
            step: trace.steps.len() - 1,
            reason: format!("closed rule gives {by_formula}, steps give {by_steps}"),
        });
    }
    Ok(InterestSolution { x: by_steps.clone(), by_formula, by_steps, roots, trace })
}

/// Two numbers whose difference is `a` and product `b`: solve
/// `x² − a·x = b` and take `y = x − a`.
pub fn factors_from_diff_product(a: &Rational, b: &Rational) -> Result<(QuadraticSurd, QuadraticSurd), BijaError> {
    if (a.square() + Rational::from(4) * b).is_negative() {
        return Err(BijaError::NoRealFactorPair);
    }
    let e = Equation::new(Paksha { yava: Rational::one(), ya: -a.clone(), ru: Rational::zero() }, Paksha::new(0, 0, b.clone()));
    let (roots, _) = solve_quadratic_madhyamaharana(&e)?;
    // the `+` branch is the larger root
    let x = roots.values[0].clone();
    let y = x.sub(&QuadraticSurd::from(a.clone()))?;
    debug_assert_eq!(x.mul(&y)?, QuadraticSurd::from(b.clone()));
    Ok((x, y))
}

/// `XY = ((X + Y)² − (X² + Y²)) / 2`.
pub fn product_via_squares(x: &Rational, y: &Rational) -> Rational {
    let sum = x + y;
    let product = (sum.square() - (x.square() + y.square())) / Rational::from(2);
    if x.is_positive() && y.is_positive() {
        // the two rectangles left over when both squares are cut from the big one
        let parts = decompose_square(x, y).expect("positive sides");
        let rectangles: Rational = parts.iter().filter(|p| p.label == PartLabel::Rectangle).map(|p| p.area.clone()).sum();
        debug_assert_eq!(&rectangles / &Rational::from(2), product);
    }
    product
}
