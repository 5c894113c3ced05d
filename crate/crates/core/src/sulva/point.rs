use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{ArithError, ExactScalar, Rational};

/// Tolerance carried by approximate points unless stated otherwise.
pub const DEFAULT_TOL: f64 = 1e-9;

/// A peg position with exact coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point {
    pub x: ExactScalar,
    pub y: ExactScalar,
}

impl Point {
    pub fn new(x: impl Into<ExactScalar>, y: impl Into<ExactScalar>) -> Self {
        Point { x: x.into(), y: y.into() }
    }

    pub fn ints(x: i64, y: i64) -> Self {
        Point::new(x, y)
    }

    pub fn rational(x: Rational, y: Rational) -> Self {
        Point::new(x, y)
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }

    pub fn approximate(&self, tol: f64) -> ApproxPoint {
        let (x, y) = self.to_f64();
        ApproxPoint { x, y, tol }
    }

    /// `self - other`, if it stays exact.
    pub fn minus(&self, other: &Point) -> Result<(ExactScalar, ExactScalar), ArithError> {
        Ok((self.x.sub(&other.x)?, self.y.sub(&other.y)?))
    }

    /// Squared distance, exact whenever the coordinate differences are.
    pub fn dist2(&self, other: &Point) -> Result<Rational, ArithError> {
        let (dx, dy) = self.minus(other)?;
        Ok(dx.square() + dy.square())
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Floating-point stand-in used once exact arithmetic cannot continue.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ApproxPoint {
    pub x: f64,
    pub y: f64,
    pub tol: f64,
}

impl ApproxPoint {
    pub fn new(x: f64, y: f64) -> Self {
        ApproxPoint { x, y, tol: DEFAULT_TOL }
    }

    pub fn dist2(&self, other: &ApproxPoint) -> f64 {
        (self.x - other.x).powi(2) + (self.y - other.y).powi(2)
    }
}

/// A constructed position: exact when the arithmetic allowed it.
#[derive(Clone, Debug, PartialEq)]
pub enum Located {
    Exact(Point),
    Approx(ApproxPoint),
}

impl Located {
    pub fn is_exact(&self) -> bool {
        matches!(self, Located::Exact(_))
    }

    pub fn exact(&self) -> Option<&Point> {
        match self {
            Located::Exact(p) => Some(p),
            Located::Approx(_) => None,
        }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        match self {
            Located::Exact(p) => p.to_f64(),
            Located::Approx(a) => (a.x, a.y),
        }
    }

    pub fn tol(&self) -> f64 {
        match self {
            Located::Exact(_) => DEFAULT_TOL,
            Located::Approx(a) => a.tol,
        }
    }

    pub fn as_approx(&self) -> ApproxPoint {
        match self {
            Located::Exact(p) => p.approximate(DEFAULT_TOL),
            Located::Approx(a) => *a,
        }
    }
}

impl From<Point> for Located {
    fn from(p: Point) -> Self {
        Located::Exact(p)
    }
}

impl From<ApproxPoint> for Located {
    fn from(p: ApproxPoint) -> Self {
        Located::Approx(p)
    }
}

impl fmt::Display for Located {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Located::Exact(p) => write!(f, "{p}"),
            Located::Approx(a) => write!(f, "(~{}, ~{})", a.x, a.y),
        }
    }
}

/// A squared distance, exact or with the tolerance it was measured under.
#[derive(Clone, Debug, PartialEq)]
pub(crate) enum Measure {
    Exact(Rational),
    Approx { value: f64, tol: f64 },
}

impl Measure {
    /// Equality against an exactly known value.
    pub(crate) fn matches(&self, target: &Rational) -> bool {
        match self {
            Measure::Exact(v) => v == target,
            Measure::Approx { value, tol } => (value - target.to_f64()).abs() <= *tol,
        }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.matches(&Rational::zero())
    }
}

pub(crate) fn dist2(a: &Located, b: &Located) -> Measure {
    if let (Located::Exact(p), Located::Exact(q)) = (a, b) {
        if let Ok(d) = p.dist2(q) {
            return Measure::Exact(d);
        }
    }
    let (pa, pb) = (a.as_approx(), b.as_approx());
    Measure::Approx { value: pa.dist2(&pb), tol: a.tol().max(b.tol()) }
}
