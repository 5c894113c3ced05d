//! Exact arithmetic: fractions, surds and length units.

mod rational;
mod scalar;
mod units;

pub use rational::{reduce, Rational};
pub use scalar::{compare, ExactScalar, QuadraticSurd};
pub use units::{convert, Length, Unit};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("undefined fraction")]
    UndefinedFraction,
    #[error("incommensurable unit")]
    IncommensurableUnit,
    /// The result needs more than one surd term.
    #[error("inexact: result leaves the rational-or-single-surd form")]
    Inexact,
    #[error("square root of a negative quantity")]
    NegativeRadicand,
    #[error("cannot parse {0:?}")]
    Parse(String),
}
