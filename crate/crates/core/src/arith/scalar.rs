//! Quantities known through their rational squares.
//!
//! [`ExactScalar`] is either a plain fraction or a single surd term `c·√r`.
//! [`QuadraticSurd`] adds a rational part, `a + c·√r`, which is what the
//! quadratic solver produces for irrational roots.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Neg;

use num_bigint::BigInt;
use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize, Serializer};

use super::{ArithError, Rational};

/// Square factors are pulled out of radicands by trial division up to this bound.
/// Larger square factors are still handled correctly, just not displayed in
/// simplest form.
const SQUARE_FACTOR_SEARCH: u64 = 1000;

#[derive(Clone)]
pub enum ExactScalar {
    Rational(Rational),
    /// `coeff · √radicand`, with `radicand` a positive integer that is not a square.
    Surd { coeff: Rational, radicand: Rational },
}

impl ExactScalar {
    pub fn zero() -> Self {
        ExactScalar::Rational(Rational::zero())
    }

    pub fn rational(r: impl Into<Rational>) -> Self {
        ExactScalar::Rational(r.into())
    }

    /// `coeff · √radicand`, normalized. A rational-square radicand collapses to
    /// a rational value.
    pub fn surd(coeff: Rational, radicand: Rational) -> Result<Self, ArithError> {
        if radicand.is_negative() {
            return Err(ArithError::NegativeRadicand);
        }
        if coeff.is_zero() || radicand.is_zero() {
            return Ok(ExactScalar::zero());
        }
        // √(p/q) = √(pq)/q
        let q = radicand.denom().clone();
        let mut coeff = coeff / Rational::from_integer(q.clone());
        let mut rad: BigInt = radicand.numer() * q;
        let mut k: u64 = 2;
        while k <= SQUARE_FACTOR_SEARCH {
            let sq = BigInt::from(k * k);
            if sq > rad {
                break;
            }
            while (&rad % &sq) == BigInt::from(0) {
                rad /= &sq;
                coeff = coeff * Rational::from_integer(k);
            }
            k += 1;
        }
        let rad = Rational::from_integer(rad);
        match rad.sqrt_exact() {
            Some(root) => Ok(ExactScalar::Rational(coeff * root)),
            None => Ok(ExactScalar::Surd { coeff, radicand: rad }),
        }
    }

    /// The non-negative square root of a rational.
    pub fn sqrt(value: &Rational) -> Result<Self, ArithError> {
        ExactScalar::surd(Rational::one(), value.clone())
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, ExactScalar::Rational(_))
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            ExactScalar::Rational(r) => Some(r),
            ExactScalar::Surd { .. } => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.signum() == 0
    }

    pub fn signum(&self) -> i8 {
        match self {
            ExactScalar::Rational(r) => r.signum(),
            ExactScalar::Surd { coeff, .. } => coeff.signum(),
        }
    }

    /// The square, always rational. Sign is lost.
    pub fn square(&self) -> Rational {
        match self {
            ExactScalar::Rational(r) => r.square(),
            ExactScalar::Surd { coeff, radicand } => coeff.square() * radicand,
        }
    }

    /// `value²` carrying the sign of `value`; monotone in the value.
    fn signed_square(&self) -> Rational {
        let sq = self.square();
        if self.signum() < 0 { -sq } else { sq }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 { -self.clone() } else { self.clone() }
    }

    pub fn mul(&self, rhs: &ExactScalar) -> ExactScalar {
        use ExactScalar::*;
        match (self, rhs) {
            (Rational(a), Rational(b)) => Rational(a * b),
            (Rational(a), Surd { coeff, radicand }) | (Surd { coeff, radicand }, Rational(a)) => {
                if a.is_zero() {
                    ExactScalar::zero()
                } else {
                    Surd { coeff: a * coeff, radicand: radicand.clone() }
                }
            }
            (Surd { coeff: c1, radicand: r1 }, Surd { coeff: c2, radicand: r2 }) => {
                ExactScalar::surd(c1 * c2, r1 * r2).expect("product of positive radicands")
            }
        }
    }

    pub fn scale(&self, k: &Rational) -> ExactScalar {
        self.mul(&ExactScalar::Rational(k.clone()))
    }

    pub fn recip(&self) -> Result<ExactScalar, ArithError> {
        match self {
            ExactScalar::Rational(r) => Ok(ExactScalar::Rational(r.recip()?)),
            // 1/(c√r) = √r / (c·r)
            ExactScalar::Surd { coeff, radicand } => Ok(ExactScalar::Surd {
                coeff: (coeff * radicand).recip()?,
                radicand: radicand.clone(),
            }),
        }
    }

    pub fn div(&self, rhs: &ExactScalar) -> Result<ExactScalar, ArithError> {
        Ok(self.mul(&rhs.recip()?))
    }

    /// Sum, when it stays inside the rational-or-single-surd form.
    ///
    /// Surds combine only when their radicands differ by a rational square
    /// factor; a non-zero rational plus a surd is [`ArithError::Inexact`].
    pub fn add(&self, rhs: &ExactScalar) -> Result<ExactScalar, ArithError> {
        use ExactScalar::*;
        if self.is_zero() {
            return Ok(rhs.clone());
        }
        if rhs.is_zero() {
            return Ok(self.clone());
        }
        match (self, rhs) {
            (Rational(a), Rational(b)) => Ok(Rational(a + b)),
            (Surd { coeff: c1, radicand: r1 }, Surd { coeff: c2, radicand: r2 }) => {
                let ratio = r2 / r1;
                match ratio.sqrt_exact() {
                    Some(k) => ExactScalar::surd(c1 + c2 * k, r1.clone()),
                    None => Err(ArithError::Inexact),
                }
            }
            _ => Err(ArithError::Inexact),
        }
    }

    pub fn sub(&self, rhs: &ExactScalar) -> Result<ExactScalar, ArithError> {
        self.add(&-rhs.clone())
    }

    /// Exact total order; decided by signs and rational squares.
    pub fn compare(&self, other: &ExactScalar) -> Ordering {
        self.signed_square().cmp(&other.signed_square())
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            ExactScalar::Rational(r) => r.to_f64(),
            ExactScalar::Surd { coeff, radicand } => coeff.to_f64() * radicand.to_f64().sqrt(),
        }
    }

    /// `(coeff, radicand)` view; rationals report radicand 1.
    pub fn parts(&self) -> (Rational, Rational) {
        match self {
            ExactScalar::Rational(r) => (r.clone(), Rational::one()),
            ExactScalar::Surd { coeff, radicand } => (coeff.clone(), radicand.clone()),
        }
    }
}

/// Exact compare of two scalars.
pub fn compare(a: &ExactScalar, b: &ExactScalar) -> Ordering {
    a.compare(b)
}

impl PartialEq for ExactScalar {
    fn eq(&self, other: &Self) -> bool {
        self.compare(other) == Ordering::Equal
    }
}

impl Eq for ExactScalar {}

impl PartialOrd for ExactScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        match self {
            ExactScalar::Rational(r) => ExactScalar::Rational(-r),
            ExactScalar::Surd { coeff, radicand } => ExactScalar::Surd { coeff: -coeff, radicand },
        }
    }
}

impl From<Rational> for ExactScalar {
    fn from(r: Rational) -> Self {
        ExactScalar::Rational(r)
    }
}

impl From<i64> for ExactScalar {
    fn from(n: i64) -> Self {
        ExactScalar::Rational(Rational::from(n))
    }
}

fn write_coeff_surd(f: &mut fmt::Formatter<'_>, coeff: &Rational, radicand: &Rational) -> fmt::Result {
    if *coeff == 1 {
        write!(f, "√{radicand}")
    } else if *coeff == -1 {
        write!(f, "-√{radicand}")
    } else if coeff.is_integer() {
        write!(f, "{coeff}√{radicand}")
    } else {
        write!(f, "({coeff})√{radicand}")
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactScalar::Rational(r) => write!(f, "{r}"),
            ExactScalar::Surd { coeff, radicand } => write_coeff_surd(f, coeff, radicand),
        }
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactScalar({self})")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum ScalarRepr {
    Surd { coeff: Rational, radicand: Rational },
    Rational(Rational),
}

impl Serialize for ExactScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let repr = match self {
            ExactScalar::Rational(r) => ScalarRepr::Rational(r.clone()),
            ExactScalar::Surd { coeff, radicand } => ScalarRepr::Surd {
                coeff: coeff.clone(),
                radicand: radicand.clone(),
            },
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ExactScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        match ScalarRepr::deserialize(deserializer)? {
            ScalarRepr::Rational(r) => Ok(ExactScalar::Rational(r)),
            ScalarRepr::Surd { coeff, radicand } => {
                ExactScalar::surd(coeff, radicand).map_err(de::Error::custom)
            }
        }
    }
}

/// `rational + coeff·√radicand`.
#[derive(Clone)]
pub struct QuadraticSurd {
    rational: Rational,
    /// Zero, or a surd term.
    irrational: ExactScalar,
}

impl QuadraticSurd {
    pub fn new(rational: Rational, irrational: ExactScalar) -> Self {
        match irrational {
            ExactScalar::Rational(r) => QuadraticSurd {
                rational: rational + r,
                irrational: ExactScalar::zero(),
            },
            surd => QuadraticSurd { rational, irrational: surd },
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        QuadraticSurd { rational: r, irrational: ExactScalar::zero() }
    }

    pub fn rational_part(&self) -> &Rational {
        &self.rational
    }

    /// The surd term; zero when the value is rational.
    pub fn irrational_part(&self) -> &ExactScalar {
        &self.irrational
    }

    pub fn is_rational(&self) -> bool {
        self.irrational.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.rational)
    }

    /// The value as a single rational-or-surd term, when it has that shape.
    pub fn to_exact_scalar(&self) -> Option<ExactScalar> {
        if self.is_rational() {
            Some(ExactScalar::Rational(self.rational.clone()))
        } else if self.rational.is_zero() {
            Some(self.irrational.clone())
        } else {
            None
        }
    }

    pub fn signum(&self) -> i8 {
        let a = self.rational.signum();
        let b = self.irrational.signum();
        if a == 0 || a == b {
            return b;
        }
        if b == 0 {
            return a;
        }
        // opposite signs: the larger magnitude wins
        match self.rational.square().cmp(&self.irrational.square()) {
            Ordering::Greater => a,
            Ordering::Less => b,
            Ordering::Equal => 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.signum() == 0
    }

    pub fn add(&self, rhs: &QuadraticSurd) -> Result<QuadraticSurd, ArithError> {
        let irr = self.irrational.add(&rhs.irrational)?;
        Ok(QuadraticSurd::new(&self.rational + &rhs.rational, irr))
    }

    pub fn sub(&self, rhs: &QuadraticSurd) -> Result<QuadraticSurd, ArithError> {
        self.add(&-rhs.clone())
    }

    pub fn mul(&self, rhs: &QuadraticSurd) -> Result<QuadraticSurd, ArithError> {
        // (a + s)(b + t) = ab + st + (at + bs)
        let ab = &self.rational * &rhs.rational;
        let st = self.irrational.mul(&rhs.irrational);
        let at = rhs.irrational.scale(&self.rational);
        let bs = self.irrational.scale(&rhs.rational);
        let cross = at.add(&bs)?;
        let rational_st = st.as_rational().cloned().ok_or(ArithError::Inexact)?;
        Ok(QuadraticSurd::new(ab + rational_st, cross))
    }

    pub fn scale(&self, k: &Rational) -> QuadraticSurd {
        QuadraticSurd::new(&self.rational * k, self.irrational.scale(k))
    }

    pub fn compare(&self, other: &QuadraticSurd) -> Result<Ordering, ArithError> {
        let diff = self.sub(other)?;
        Ok(diff.signum().cmp(&0))
    }

    pub fn to_f64(&self) -> f64 {
        self.rational.to_f64() + self.irrational.to_f64()
    }

    /// Decimal approximation cut after `places` digits; exact for rationals.
    pub fn to_decimal(&self, places: usize) -> String {
        match self.as_rational() {
            Some(r) => r.to_decimal_truncated(places),
            None => format!("{:.*}", places, self.to_f64()),
        }
    }
}

impl PartialEq for QuadraticSurd {
    fn eq(&self, other: &Self) -> bool {
        self.rational == other.rational && self.irrational == other.irrational
    }
}

impl Neg for QuadraticSurd {
    type Output = QuadraticSurd;
    fn neg(self) -> QuadraticSurd {
        QuadraticSurd { rational: -self.rational, irrational: -self.irrational }
    }
}

impl From<Rational> for QuadraticSurd {
    fn from(r: Rational) -> Self {
        QuadraticSurd::from_rational(r)
    }
}

impl From<ExactScalar> for QuadraticSurd {
    fn from(s: ExactScalar) -> Self {
        QuadraticSurd::new(Rational::zero(), s)
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.rational);
        }
        if self.rational.is_zero() {
            return write!(f, "{}", self.irrational);
        }
        let (coeff, radicand) = self.irrational.parts();
        write!(f, "{} {} ", self.rational, if coeff.is_negative() { "-" } else { "+" })?;
        write_coeff_surd(f, &coeff.abs(), &radicand)
    }
}

impl fmt::Debug for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadraticSurd({self})")
    }
}

impl Serialize for QuadraticSurd {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("QuadraticSurd", 3)?;
        st.serialize_field("rational", &self.rational)?;
        st.serialize_field("irrational", &self.irrational)?;
        st.serialize_field("approx", &self.to_f64())?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for QuadraticSurd {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            rational: Rational,
            irrational: ExactScalar,
            #[serde(default)]
            #[allow(dead_code)]
            approx: Option<f64>,
        }
        let r = Repr::deserialize(deserializer)?;
        Ok(QuadraticSurd::new(r.rational, r.irrational))
    }
}
