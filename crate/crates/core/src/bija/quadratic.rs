//! Madhyamāharaṇa: completing the square on `a·x² + b·x = c`.
//!
//! 1. multiply both sides by `4a`;
//! 2. add `b²` to both sides;
//! 3. (only for fractional coefficients) multiply by `m²` to clear denominators;
//! 4. read the left side as `(2a·x + b)²`;
//! 5. take the square root of both sides, with both signs;
//! 6. isolate `x`.
//!
//! [`SolveTrace::verify`] replays a trace rule by rule from its first
//! snapshot, independently of the formulas used by the solver.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::arith::{ExactScalar, QuadraticSurd, Rational};

use super::{normalize, write_poly, BijaError, Equation, Paksha};

/// Roots of an equation, with a per-root flag for whether the problem at
/// hand accepts it. Rejected roots stay in the list.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Roots {
    pub values: Vec<QuadraticSurd>,
    pub admissible: Vec<bool>,
}

impl Roots {
    pub fn new(values: Vec<QuadraticSurd>) -> Self {
        let admissible = vec![true; values.len()];
        Roots { values, admissible }
    }

    /// Flags roots according to `accept`.
    pub fn mark(mut self, accept: impl Fn(&QuadraticSurd) -> bool) -> Self {
        self.admissible = self.values.iter().map(accept).collect();
        self
    }

    /// Only non-negative roots are admissible.
    pub fn nonnegative(self) -> Self {
        self.mark(|v| v.signum() >= 0)
    }

    pub fn admissible_values(&self) -> Vec<&QuadraticSurd> {
        self.values.iter().zip(&self.admissible).filter(|(_, ok)| **ok).map(|(v, _)| v).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StepLabel {
    Input,
    #[serde(rename = "multiply-by-4a")]
    MultiplyBy4a,
    AddBSquared,
    ClearDenominators,
    CompleteSquare,
    ExtractRoot,
    Isolate,
}

impl StepLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            StepLabel::Input => "input",
            StepLabel::MultiplyBy4a => "multiply-by-4a",
            StepLabel::AddBSquared => "add-b-squared",
            StepLabel::ClearDenominators => "clear-denominators",
            StepLabel::CompleteSquare => "complete-square",
            StepLabel::ExtractRoot => "extract-root",
            StepLabel::Isolate => "isolate",
        }
    }
}

impl fmt::Display for StepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The equation as it stands after a step.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "lowercase")]
pub enum Snapshot {
    Equation { left: Paksha, right: Paksha },
    /// `(p·x + q)² = rhs`
    Square { p: Rational, q: Rational, rhs: Rational },
    /// `p·x + q = ±root`
    Root { p: Rational, q: Rational, root: ExactScalar },
    /// `x = values[0]` or `x = values[1]`
    Roots { values: Vec<QuadraticSurd> },
}

struct Linear<'a>(&'a Rational, &'a Rational);

impl fmt::Display for Linear<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, [(&Rational::zero(), ""), (self.0, "x"), (self.1, "")])
    }
}

impl fmt::Display for Snapshot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Snapshot::Equation { left, right } => write!(f, "{left} = {right}"),
            Snapshot::Square { p, q, rhs } => write!(f, "({})² = {rhs}", Linear(p, q)),
            Snapshot::Root { p, q, root } => write!(f, "{} = ±{root}", Linear(p, q)),
            Snapshot::Roots { values } => {
                let parts: Vec<String> = values.iter().map(|v| format!("x = {}", v.to_string().replace('-', "−"))).collect();
                f.write_str(&parts.join(" or "))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceStep {
    pub label: StepLabel,
    /// The multiplier or addend the step used, when it has one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factor: Option<Rational>,
    pub snapshot: Snapshot,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SolveTrace {
    pub steps: Vec<TraceStep>,
}

impl fmt::Display for SolveTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{:<18} {}", s.label.as_str(), s.snapshot)?;
        }
        Ok(())
    }
}

impl SolveTrace {
    pub fn first(&self) -> Option<&Snapshot> {
        self.steps.first().map(|s| &s.snapshot)
    }

    pub fn last(&self) -> Option<&Snapshot> {
        self.steps.last().map(|s| &s.snapshot)
    }

    pub fn labels(&self) -> Vec<StepLabel> {
        self.steps.iter().map(|s| s.label).collect()
    }

    /// Re-derive every snapshot from the first, following the labels.
    pub fn replay(&self) -> Result<Vec<Snapshot>, BijaError> {
        let first = self.steps.first().ok_or_else(|| invalid(0, "empty trace"))?;
        if first.label != StepLabel::Input {
            return Err(invalid(0, "the first step must be the input"));
        }
        let mut out = vec![first.snapshot.clone()];
        for (i, step) in self.steps.iter().enumerate().skip(1) {
            let prev = out.last().expect("non-empty");
            let (next, factor) = apply_rule(i, step.label, prev)?;
            if factor != step.factor {
                return Err(invalid(i, "recorded factor differs from the rule"));
            }
            out.push(next);
        }
        Ok(out)
    }

    /// Replays the trace and compares each recorded snapshot.
    pub fn verify(&self) -> Result<(), BijaError> {
        let replayed = self.replay()?;
        for (i, (want, got)) in self.steps.iter().zip(&replayed).enumerate() {
            if &want.snapshot != got {
                return Err(invalid(i, &format!("expected {got}, recorded {}", want.snapshot)));
            }
        }
        match self.last() {
            Some(Snapshot::Roots { .. }) => Ok(()),
            _ => Err(invalid(self.steps.len().saturating_sub(1), "trace does not end in roots")),
        }
    }
}

fn invalid(step: usize, reason: &str) -> BijaError {
    BijaError::InvalidTrace { step, reason: reason.to_string() }
}

fn lcm_of_denominators(values: [&Rational; 2]) -> Rational {
    Rational::from_integer(values.iter().fold(num_bigint::BigInt::from(1), |acc, v| acc.lcm(v.denom())))
}

/// Split `A·x² + B·x + C` (with `A` a positive square) into `p = √A`, `q = B/2p`.
fn square_parts(i: usize, left: &Paksha) -> Result<(Rational, Rational), BijaError> {
    let p = left
        .yava
        .sqrt_exact()
        .filter(Rational::is_positive)
        .ok_or_else(|| invalid(i, "x² coefficient is not a positive square"))?;
    let q = &left.ya / &(Rational::from(2) * &p);
    Ok((p, q))
}

/// The snapshot produced by applying `label` to `prev`, and its factor.
fn apply_rule(i: usize, label: StepLabel, prev: &Snapshot) -> Result<(Snapshot, Option<Rational>), BijaError> {
    let constant_only = |p: &Paksha| p.yava.is_zero() && p.ya.is_zero();
    match (label, prev) {
        (StepLabel::MultiplyBy4a, Snapshot::Equation { left, right }) => {
            let n = normalize(&Equation::new(left.clone(), right.clone()))?;
            let (a, b, c) = (&n.left.yava, &n.left.ya, -n.left.ru.clone());
            if a.is_zero() {
                return Err(BijaError::NotQuadratic);
            }
            let k = Rational::from(4) * a;
            let left = Paksha { yava: &k * a, ya: &k * b, ru: Rational::zero() };
            let right = Paksha { ru: &k * &c, ..Paksha::zero() };
            Ok((Snapshot::Equation { left, right }, Some(k)))
        }
        (StepLabel::AddBSquared, Snapshot::Equation { left, right }) => {
            if !left.ru.is_zero() || !constant_only(right) || left.yava.is_zero() {
                return Err(invalid(i, "expected 4a²x² + 4abx = 4ac"));
            }
            // 4a²·x² + 4ab·x: b² = (4ab)² / (4·4a²)
            let b2 = left.ya.square() / (Rational::from(4) * &left.yava);
            let left = Paksha { ru: b2.clone(), ..left.clone() };
            let right = Paksha { ru: &right.ru + &b2, ..Paksha::zero() };
            Ok((Snapshot::Equation { left, right }, Some(b2)))
        }
        (StepLabel::ClearDenominators, Snapshot::Equation { left, right }) => {
            if !constant_only(right) {
                return Err(invalid(i, "unknowns left on the right side"));
            }
            let (p, q) = square_parts(i, left)?;
            let m = lcm_of_denominators([&p, &q]);
            if m == Rational::one() {
                return Err(invalid(i, "no denominators to clear"));
            }
            let m2 = m.square();
            Ok((Snapshot::Equation { left: left.scale(&m2), right: right.scale(&m2) }, Some(m2)))
        }
        (StepLabel::CompleteSquare, Snapshot::Equation { left, right }) => {
            if !constant_only(right) {
                return Err(invalid(i, "unknowns left on the right side"));
            }
            let (p, q) = square_parts(i, left)?;
            if q.square() != left.ru {
                return Err(invalid(i, "left side is not a perfect square"));
            }
            Ok((Snapshot::Square { p, q, rhs: right.ru.clone() }, None))
        }
        (StepLabel::ExtractRoot, Snapshot::Square { p, q, rhs }) => {
            if rhs.is_negative() {
                return Err(BijaError::NoRealRoot);
            }
            let root = ExactScalar::sqrt(rhs)?;
            Ok((Snapshot::Root { p: p.clone(), q: q.clone(), root }, None))
        }
        (StepLabel::Isolate, Snapshot::Root { p, q, root }) => {
            let inv = p.recip()?;
            let base = -(q * &inv);
            let values = vec![
                QuadraticSurd::new(base.clone(), root.scale(&inv)),
                QuadraticSurd::new(base, (-root.clone()).scale(&inv)),
            ];
            Ok((Snapshot::Roots { values }, None))
        }
        (label, _) => Err(invalid(i, &format!("{label} cannot follow the previous step"))),
    }
}

/// Complete the square, recording each step.
pub fn solve_quadratic_madhyamaharana(e: &Equation) -> Result<(Roots, SolveTrace), BijaError> {
    let n = normalize(e)?;
    let (a, b) = (n.left.yava.clone(), n.left.ya.clone());
    if a.is_zero() {
        return Err(BijaError::NotQuadratic);
    }
    let c = -n.left.ru.clone();
    let four_a = Rational::from(4) * &a;
    let b2 = b.square();
    let rhs = &four_a * &c + &b2;
    if rhs.is_negative() {
        return Err(BijaError::NoRealRoot);
    }

    let eq = |left: Paksha, ru: Rational| Snapshot::Equation { left, right: Paksha { ru, ..Paksha::zero() } };
    let mut steps = vec![TraceStep {
        label: StepLabel::Input,
        factor: None,
        snapshot: Snapshot::Equation { left: e.left.clone(), right: e.right.clone() },
    }];
    let sq_a = &four_a * &a;
    let ab4 = &four_a * &b;
    steps.push(TraceStep {
        label: StepLabel::MultiplyBy4a,
        factor: Some(four_a.clone()),
        snapshot: eq(Paksha { yava: sq_a.clone(), ya: ab4.clone(), ru: Rational::zero() }, &four_a * &c),
    });
    steps.push(TraceStep {
        label: StepLabel::AddBSquared,
        factor: Some(b2.clone()),
        snapshot: eq(Paksha { yava: sq_a.clone(), ya: ab4.clone(), ru: b2.clone() }, rhs.clone()),
    });

    let two_a = Rational::from(2) * &a;
    let m = lcm_of_denominators([&two_a, &b]);
    let (p, q, rhs) = if m == Rational::one() {
        (two_a, b, rhs)
    } else {
        let m2 = m.square();
        steps.push(TraceStep {
            label: StepLabel::ClearDenominators,
            factor: Some(m2.clone()),
            snapshot: eq(Paksha { yava: &sq_a * &m2, ya: &ab4 * &m2, ru: &b2 * &m2 }, &rhs * &m2),
        });
        (&two_a * &m, &b * &m, &rhs * &m2)
    };

    let root = ExactScalar::sqrt(&rhs)?;
    let x_rational = -(&q / &p);
    let x_irrational = root.scale(&p.recip()?);
    let values = vec![
        QuadraticSurd::new(x_rational.clone(), x_irrational.clone()),
        QuadraticSurd::new(x_rational, -x_irrational),
    ];
    steps.push(TraceStep {
        label: StepLabel::CompleteSquare,
        factor: None,
        snapshot: Snapshot::Square { p: p.clone(), q: q.clone(), rhs },
    });
    steps.push(TraceStep { label: StepLabel::ExtractRoot, factor: None, snapshot: Snapshot::Root { p, q, root } });
    steps.push(TraceStep {
        label: StepLabel::Isolate,
        factor: None,
        snapshot: Snapshot::Roots { values: values.clone() },
    });

    for v in &values {
        if !n.left.eval_surd(v)?.is_zero() {
            return Err(invalid(steps.len() - 1, &format!("root {v} does not satisfy the equation")));
        }
    }
    Ok((Roots::new(values), SolveTrace { steps }))
}
