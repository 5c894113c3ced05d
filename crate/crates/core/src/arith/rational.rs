//! Canonical arbitrary-precision fractions.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use super::ArithError;

/// An exact fraction in lowest terms with a positive denominator.
///
/// Integer parts grow as needed; no operation wraps.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

/// Canonical fraction `p/q`. The sign ends up on the numerator.
pub fn reduce(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Rational, ArithError> {
    let q = q.into();
    if q.is_zero() {
        return Err(ArithError::UndefinedFraction);
    }
    Ok(Rational(BigRational::new(p.into(), q)))
}

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    /// `p/q` for small literals. Panics on a zero denominator.
    pub fn new(p: i64, q: i64) -> Self {
        reduce(p, q).expect("zero denominator")
    }

    /// The unit fraction `1/n`.
    pub fn unit_fraction(n: impl Into<BigInt>) -> Result<Self, ArithError> {
        reduce(1, n)
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i8 {
        match self.numer().sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn square(&self) -> Self {
        Rational(&self.0 * &self.0)
    }

    pub fn recip(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::UndefinedFraction);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Self, ArithError> {
        if rhs.is_zero() {
            return Err(ArithError::UndefinedFraction);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn pow(&self, exp: u32) -> Self {
        Rational(num_traits::pow(self.0.clone(), exp as usize))
    }

    /// The exact rational square root, if this value is the square of a rational.
    pub fn sqrt_exact(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = exact_isqrt(self.numer())?;
        let d = exact_isqrt(self.denom())?;
        Some(Rational(BigRational::new(n, d)))
    }

    pub fn is_perfect_square(&self) -> bool {
        self.sqrt_exact().is_some()
    }

    /// Largest integer not above this value.
    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Decimal expansion cut (not rounded) after `places` digits.
    pub fn to_decimal_truncated(&self, places: usize) -> String {
        let scale = num_traits::pow(BigInt::from(10), places);
        let scaled = (self.numer().abs() * &scale) / self.denom();
        let (int_part, frac_part) = scaled.div_rem(&scale);
        let sign = if self.is_negative() && !scaled.is_zero() { "-" } else { "" };
        if places == 0 {
            return format!("{sign}{int_part}");
        }
        format!("{sign}{int_part}.{:0>width$}", frac_part.to_string(), width = places)
    }

    /// Lowest common multiple of the denominators.
    pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
        values
            .into_iter()
            .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
    }

    pub fn min<'a>(&'a self, other: &'a Rational) -> &'a Rational {
        if self <= other { self } else { other }
    }
}

fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($tr::$method(&self.0, &rhs.0))
            }
        }
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($tr::$method(self.0, rhs.0))
            }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($tr::$method(self.0, &rhs.0))
            }
        }
        impl $tr<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($tr::$method(&self.0, rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

// Division panics on zero like the integer types; use `checked_div` on untrusted input.
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::one(), |a, b| a * b)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

/// Accepts `p`, `p/q`, a decimal such as `2.5`, or a mixed number `7 1/2`.
impl FromStr for Rational {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || ArithError::Parse(s.to_string());
        if s.is_empty() {
            return Err(bad());
        }
        if let Some((whole, frac)) = s.split_once(char::is_whitespace) {
            let whole: Rational = whole.parse()?;
            let frac: Rational = frac.trim().parse()?;
            if !whole.is_integer() || frac.is_negative() || frac.is_integer() {
                return Err(bad());
            }
            return Ok(if whole.is_negative() { whole - frac } else { whole + frac });
        }
        if let Some((p, q)) = s.split_once('/') {
            let p = parse_int(p).ok_or_else(bad)?;
            let q = parse_int(q).ok_or_else(bad)?;
            return reduce(p, q);
        }
        if let Some((int, frac)) = s.split_once('.') {
            let negative = int.starts_with('-');
            let digits = int.trim_start_matches(['-', '+']);
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            if !digits.bytes().all(|b| b.is_ascii_digit()) || int.len() - digits.len() > 1 {
                return Err(bad());
            }
            let whole: BigInt = if digits.is_empty() {
                BigInt::zero()
            } else {
                digits.parse().map_err(|_| bad())?
            };
            let scale = num_traits::pow(BigInt::from(10), frac.len());
            let frac: BigInt = frac.parse().map_err(|_| bad())?;
            let magnitude = reduce(whole * &scale + frac, scale)?;
            return Ok(if negative { -magnitude } else { magnitude });
        }
        parse_int(s).map(Rational::from_integer).ok_or_else(bad)
    }
}

fn parse_int(s: &str) -> Option<BigInt> {
    let s = s.trim();
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Rational", 2)?;
        st.serialize_field("num", &JsonInt(self.numer()))?;
        st.serialize_field("den", &JsonInt(self.denom()))?;
        st.end()
    }
}

/// Integers that fit in i64 are written as JSON numbers, larger ones as decimal strings.
struct JsonInt<'a>(&'a BigInt);

impl Serialize for JsonInt<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => serializer.serialize_i64(v),
            None => serializer.serialize_str(&self.0.to_string()),
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum IntRepr {
    Small(i64),
    Big(String),
}

impl IntRepr {
    fn into_bigint<E: de::Error>(self) -> Result<BigInt, E> {
        match self {
            IntRepr::Small(v) => Ok(BigInt::from(v)),
            IntRepr::Big(s) => parse_int(&s).ok_or_else(|| E::custom(format!("invalid integer {s:?}"))),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RationalRepr {
    num: IntRepr,
    den: IntRepr,
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = RationalRepr::deserialize(deserializer)?;
        let num = repr.num.into_bigint()?;
        let den = repr.den.into_bigint()?;
        reduce(num, den).map_err(de::Error::custom)
    }
}

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        self.is_integer() && *self.numer() == BigInt::from(*other)
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.cmp(&Rational::from(*other)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce(2, 4).unwrap(), Rational::new(1, 2));
        assert_eq!(reduce(4, 8).unwrap(), Rational::new(1, 2));
        let r = reduce(-6, -4).unwrap();
        assert_eq!(r.numer(), &BigInt::from(3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(reduce(3, -6).unwrap().numer(), &BigInt::from(-1));
    }

    #[test]
    fn zero_denominator_is_undefined() {
        assert_eq!(reduce(1, 0), Err(ArithError::UndefinedFraction));
        assert_eq!(
            reduce(1, 0).unwrap_err().to_string(),
            "undefined fraction"
        );
        assert!(Rational::zero().recip().is_err());
    }

    #[test]
    fn residual_of_historical_diagonal() {
        let d = Rational::new(577, 408);
        assert_eq!(d.square() - Rational::from(2), Rational::new(1, 166_464));
    }

    #[test]
    fn truncated_decimals() {
        assert_eq!(Rational::new(577, 408).to_decimal_truncated(6), "1.414215");
        assert_eq!(Rational::new(-1, 3).to_decimal_truncated(3), "-0.333");
        assert_eq!(Rational::new(-1, 3000).to_decimal_truncated(2), "0.00");
        assert_eq!(Rational::from(7).to_decimal_truncated(0), "7");
        assert_eq!(Rational::new(1, 20).to_decimal_truncated(4), "0.0500");
    }

    #[test]
    fn parse_forms() {
        assert_eq!("3/6".parse::<Rational>().unwrap(), Rational::new(1, 2));
        assert_eq!("-2.25".parse::<Rational>().unwrap(), Rational::new(-9, 4));
        assert_eq!(".5".parse::<Rational>().unwrap(), Rational::new(1, 2));
        assert_eq!("7 1/2".parse::<Rational>().unwrap(), Rational::new(15, 2));
        assert_eq!("-7 1/2".parse::<Rational>().unwrap(), Rational::new(-15, 2));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("abc".parse::<Rational>().is_err());
        assert!("1.".parse::<Rational>().is_err());
        assert!("--1".parse::<Rational>().is_err());
        assert!("".parse::<Rational>().is_err());
    }

    #[test]
    fn sqrt_exact_only_for_squares() {
        assert_eq!(Rational::new(9, 4).sqrt_exact(), Some(Rational::new(3, 2)));
        assert_eq!(Rational::from(2).sqrt_exact(), None);
        assert_eq!(Rational::from(-4).sqrt_exact(), None);
        assert_eq!(Rational::zero().sqrt_exact(), Some(Rational::zero()));
    }

    #[test]
    fn json_shape() {
        let r = Rational::new(-3, 2);
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v, serde_json::json!({"num": -3, "den": 2}));
        let big = Rational::from_integer(BigInt::from(10).pow(30));
        let s = serde_json::to_string(&big).unwrap();
        assert_eq!(serde_json::from_str::<Rational>(&s).unwrap(), big);
        assert!(serde_json::from_str::<Rational>(r#"{"num":1,"den":0}"#).is_err());
        assert_eq!(
            serde_json::from_str::<Rational>(r#"{"num":2,"den":-4}"#).unwrap(),
            Rational::new(-1, 2)
        );
    }

    #[test]
    fn no_overflow_at_scale() {
        let mut acc = Rational::one();
        for _ in 0..10 {
            acc = &acc * &Rational::new(i64::MAX, 3);
        }
        assert!(acc.numer().bits() > 600);
    }
}
