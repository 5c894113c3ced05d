//! Historical and imperial length units with exact conversion factors.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{ArithError, ExactScalar, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Unit {
    Tila,
    Angula,
    Purusa,
    Inch,
    Foot,
    /// Named but without a known factor; never converts.
    Hasta,
    /// Named but without a known factor; never converts.
    Aratni,
    /// A bare side length of "one unit".
    Abstract,
}

impl Unit {
    pub const ALL: [Unit; 8] = [
        Unit::Tila,
        Unit::Angula,
        Unit::Purusa,
        Unit::Inch,
        Unit::Foot,
        Unit::Hasta,
        Unit::Aratni,
        Unit::Abstract,
    ];

    /// Length of one of this unit measured in aṅgulas.
    ///
    /// 1 puruṣa = 108 aṅgula, 1 aṅgula = 34 tila = 3/4 inch, 1 foot = 12 inch.
    pub fn in_angulas(self) -> Option<Rational> {
        match self {
            Unit::Tila => Some(Rational::new(1, 34)),
            Unit::Angula => Some(Rational::one()),
            Unit::Purusa => Some(Rational::from(108)),
            Unit::Inch => Some(Rational::new(4, 3)),
            Unit::Foot => Some(Rational::from(16)),
            Unit::Hasta | Unit::Aratni | Unit::Abstract => None,
        }
    }

    pub fn is_convertible(self) -> bool {
        self.in_angulas().is_some()
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Unit::Tila => "tila",
            Unit::Angula => "aṅgula",
            Unit::Purusa => "puruṣa",
            Unit::Inch => "in",
            Unit::Foot => "ft",
            Unit::Hasta => "hasta",
            Unit::Aratni => "aratni",
            Unit::Abstract => "unit",
        }
    }

    /// Exact factor `f` with `1 self = f target`.
    pub fn factor_to(self, target: Unit) -> Result<Rational, ArithError> {
        match (self.in_angulas(), target.in_angulas()) {
            (Some(a), Some(b)) => Ok(a / b),
            _ => Err(ArithError::IncommensurableUnit),
        }
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Unit {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unit = match s.trim() {
            "tila" | "tilas" => Unit::Tila,
            "aṅgula" | "aṅgulas" | "angula" | "angulas" => Unit::Angula,
            "puruṣa" | "puruṣas" | "purusa" | "purusas" => Unit::Purusa,
            "in" | "inch" | "inches" => Unit::Inch,
            "ft" | "foot" | "feet" => Unit::Foot,
            "hasta" => Unit::Hasta,
            "aratni" => Unit::Aratni,
            "unit" | "units" | "abstract" => Unit::Abstract,
            other => return Err(ArithError::Parse(format!("unknown unit {other:?}"))),
        };
        Ok(unit)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Length {
    pub magnitude: ExactScalar,
    pub unit: Unit,
}

impl Length {
    pub fn new(magnitude: impl Into<ExactScalar>, unit: Unit) -> Self {
        Length { magnitude: magnitude.into(), unit }
    }

    pub fn abstract_units(magnitude: impl Into<ExactScalar>) -> Self {
        Length::new(magnitude, Unit::Abstract)
    }

    /// Exact conversion through the rational unit table.
    pub fn convert(&self, target: Unit) -> Result<Length, ArithError> {
        let k = self.unit.factor_to(target)?;
        Ok(Length { magnitude: self.magnitude.scale(&k), unit: target })
    }

    pub fn scale(&self, k: &Rational) -> Length {
        Length { magnitude: self.magnitude.scale(k), unit: self.unit }
    }
}

/// Free-function form of [`Length::convert`].
pub fn convert(x: &Length, target: Unit) -> Result<Length, ArithError> {
    x.convert(target)
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.magnitude, self.unit)
    }
}

/// `"35 ft"`, `"7 1/2 puruṣa"`, `"0.75 in"`; a bare number is an abstract length.
impl FromStr for Length {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (number, unit) = match s.rfind(char::is_whitespace) {
            Some(i) => {
                let (head, tail) = s.split_at(i);
                match tail.trim().parse::<Unit>() {
                    Ok(u) => (head.trim(), u),
                    Err(_) => (s, Unit::Abstract),
                }
            }
            None => {
                // "35ft"
                let split = s
                    .char_indices()
                    .find(|(_, c)| c.is_alphabetic())
                    .map(|(i, _)| i)
                    .unwrap_or(s.len());
                let (head, tail) = s.split_at(split);
                if tail.is_empty() {
                    (head, Unit::Abstract)
                } else {
                    (head.trim(), tail.parse::<Unit>()?)
                }
            }
        };
        let magnitude: Rational = number.parse()?;
        Ok(Length::new(magnitude, unit))
    }
}
